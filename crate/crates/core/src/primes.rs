//! Minimal primes of a squarefree monomial ideal and the invariants read
//! off them: height, big height and the `nu` profile.
//!
//! The minimal primes of a squarefree monomial ideal are generated by
//! variable sets, namely the inclusion-minimal transversals (vertex covers)
//! of the hypergraph whose edges are the generator supports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Ideal, VarSet};

/// Largest `n` accepted by the exhaustive oracle.
pub const BRUTE_FORCE_MAX_VARS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeDecomposition {
    primes: Vec<VarSet>,
    h: usize,
    tau: usize,
    pure: bool,
}

impl PrimeDecomposition {
    fn from_transversals(n: usize, mut masks: Vec<u64>) -> Self {
        masks.sort_unstable();
        masks.dedup();
        let minimal: Vec<u64> = masks
            .iter()
            .copied()
            .filter(|&t| !masks.iter().any(|&u| u != t && u & !t == 0))
            .collect();
        let mut primes: Vec<VarSet> = minimal.into_iter().map(|b| VarSet::from_bits(n, b)).collect();
        primes.sort();
        let h = primes.iter().map(VarSet::len).min().unwrap_or(0);
        let tau = primes.iter().map(VarSet::len).max().unwrap_or(0);
        PrimeDecomposition { primes, h, tau, pure: h == tau }
    }

    /// Variable sets of the minimal primes, sorted by size then lexicographically.
    pub fn primes(&self) -> &[VarSet] {
        &self.primes
    }

    pub fn r(&self) -> usize {
        self.primes.len()
    }

    /// Height `h(I)`: the smallest prime.
    pub fn h(&self) -> usize {
        self.h
    }

    /// Big height `tau(I)`: the largest prime.
    pub fn tau(&self) -> usize {
        self.tau
    }

    /// All minimal primes have the same height.
    pub fn pure(&self) -> bool {
        self.pure
    }
}

/// Inclusion-minimal transversals of the generator supports.
///
/// Branches on the variables of the first generator not yet hit; a
/// variable already tried at a node is excluded from its later siblings,
/// so every transversal is reached at most once.
pub fn minimal_primes(ideal: &Ideal) -> PrimeDecomposition {
    let edges: Vec<u64> = ideal.supports().iter().map(VarSet::bits).collect();
    let mut found = Vec::new();
    branch(&edges, 0, 0, &mut found);
    PrimeDecomposition::from_transversals(ideal.n(), found)
}

fn branch(edges: &[u64], chosen: u64, excluded: u64, found: &mut Vec<u64>) {
    let Some(&edge) = edges.iter().find(|&&e| e & chosen == 0) else {
        found.push(chosen);
        return;
    };
    // A chosen set containing a known transversal cannot be minimal.
    if found.iter().any(|&t| t & !chosen == 0) {
        return;
    }
    let mut excluded = excluded;
    let mut candidates = edge & !excluded;
    while candidates != 0 {
        let v = candidates & candidates.wrapping_neg();
        candidates &= candidates - 1;
        branch(edges, chosen | v, excluded, found);
        excluded |= v;
    }
}

/// Exhaustive oracle: scans all `2^n` variable sets.
pub fn brute_force_primes(ideal: &Ideal) -> Result<PrimeDecomposition> {
    let n = ideal.n();
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(Error::TooLarge {
            what: "brute-force prime enumeration",
            size: n,
            limit: BRUTE_FORCE_MAX_VARS,
        });
    }
    let edges: Vec<u64> = ideal.supports().iter().map(VarSet::bits).collect();
    let hits_all = |t: u64| edges.iter().all(|&e| e & t != 0);
    let minimal = (0u64..1 << n)
        .filter(|&t| hits_all(t))
        .filter(|&t| (0..n).all(|i| t & (1 << i) == 0 || !hits_all(t & !(1 << i))))
        .collect();
    Ok(PrimeDecomposition::from_transversals(n, minimal))
}

/// Generator counts per variable, `nu_j` per prime with its witness
/// variable, and `nu(I) = min_j nu_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuProfile {
    /// `multiplicities[i - 1] = |M_i|`, the number of generators divisible by `x_i`.
    pub multiplicities: Vec<usize>,
    pub nu_j: Vec<usize>,
    /// 1-based variable index `i_j` attaining `nu_j` (smallest on ties).
    pub witnesses: Vec<usize>,
    pub nu: usize,
}

pub fn nu_profile(ideal: &Ideal, decomposition: &PrimeDecomposition) -> NuProfile {
    let n = ideal.n();
    let multiplicities: Vec<usize> = (1..=n)
        .map(|i| ideal.supports().iter().filter(|s| s.contains(i)).count())
        .collect();
    let mut nu_j = Vec::with_capacity(decomposition.r());
    let mut witnesses = Vec::with_capacity(decomposition.r());
    for prime in decomposition.primes() {
        let mut best = (0, 0);
        for i in prime.indices() {
            if multiplicities[i - 1] > best.0 {
                best = (multiplicities[i - 1], i);
            }
        }
        nu_j.push(best.0);
        witnesses.push(best.1);
    }
    let nu = nu_j.iter().copied().min().unwrap_or(0);
    NuProfile { multiplicities, nu_j, witnesses, nu }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example1, example2};

    fn sets(n: usize, lists: &[&[usize]]) -> Vec<VarSet> {
        let mut v: Vec<VarSet> = lists.iter().map(|l| VarSet::from_indices(n, l).unwrap()).collect();
        v.sort();
        v
    }

    #[test]
    fn example1_primes() {
        let d = minimal_primes(&example1());
        let expected = sets(
            9,
            &[
                &[1, 2, 4, 6],
                &[2, 3, 4, 6],
                &[1, 2, 5, 6],
                &[2, 3, 5, 6],
                &[1, 4, 6, 7],
                &[1, 2, 4, 8, 9],
                &[2, 3, 4, 8, 9],
                &[1, 4, 7, 8, 9],
            ],
        );
        assert_eq!(d.primes(), expected.as_slice());
        assert_eq!((d.h(), d.tau(), d.pure()), (4, 5, false));
    }

    #[test]
    fn example2_primes() {
        let d = minimal_primes(&example2());
        let expected = sets(
            9,
            &[
                &[1, 4, 6],
                &[2, 3, 4, 6],
                &[1, 2, 5, 6],
                &[2, 3, 5, 6],
                &[1, 4, 7, 8, 9],
                &[2, 3, 4, 7, 8, 9],
            ],
        );
        assert_eq!(d.primes(), expected.as_slice());
        let sizes: Vec<usize> = d.primes().iter().map(VarSet::len).collect();
        assert_eq!(sizes, [3, 4, 4, 4, 5, 6]);
        assert_eq!((d.h(), d.tau()), (3, 6));
    }

    #[test]
    fn single_edge() {
        let i = Ideal::from_supports(2, &[&[1, 2]]).unwrap();
        let d = minimal_primes(&i);
        assert_eq!(d.primes(), sets(2, &[&[1], &[2]]).as_slice());
        assert_eq!((d.h(), d.tau()), (1, 1));
        assert_eq!(brute_force_primes(&i).unwrap(), d);
    }

    #[test]
    fn oracle_agrees_on_examples() {
        for i in [example1(), example2()] {
            assert_eq!(brute_force_primes(&i).unwrap(), minimal_primes(&i));
        }
    }

    #[test]
    fn oracle_guard() {
        let i = Ideal::from_supports(21, &[&[1, 21]]).unwrap();
        assert!(matches!(brute_force_primes(&i), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn example1_nu_profile() {
        let i = example1();
        let p = nu_profile(&i, &minimal_primes(&i));
        assert_eq!(p.multiplicities, [2, 3, 1, 3, 1, 3, 1, 1, 1]);
        assert_eq!(p.nu_j, [3; 8]);
        assert_eq!(p.nu, 3);
        let d = minimal_primes(&i);
        for (prime, &w) in d.primes().iter().zip(&p.witnesses) {
            assert!(prime.contains(w));
        }
    }

    #[test]
    fn example2_and_disjoint_nu() {
        let i = example2();
        assert_eq!(nu_profile(&i, &minimal_primes(&i)).nu, 3);
        let ci = Ideal::from_supports(4, &[&[1, 2], &[3, 4]]).unwrap();
        let p = nu_profile(&ci, &minimal_primes(&ci));
        assert_eq!(p.multiplicities, [1, 1, 1, 1]);
        assert_eq!(p.nu, 1);
    }

    #[test]
    fn witness_ties_take_smallest_index() {
        let i = Ideal::from_supports(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap();
        let d = minimal_primes(&i);
        let p = nu_profile(&i, &d);
        // Every variable lies in two generators; primes are the 2-subsets.
        assert_eq!(p.witnesses, [1, 1, 2]);
    }
}
