//! Ideal generators: seeded random samples and exhaustive enumeration of
//! small squarefree monomial ideals up to variable permutation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Ideal, VarSet};

/// A random squarefree ideal in `n` variables with at most `max_gens`
/// minimal generators. Each candidate generator includes every variable
/// independently with a per-ideal density.
pub fn random_ideal<R: Rng>(rng: &mut R, n: usize, max_gens: usize) -> Ideal {
    assert!(n >= 1 && max_gens >= 1);
    let target = rng.gen_range(1..=max_gens);
    let density: f64 = rng.gen_range(0.15..0.6);
    let mut supports = Vec::with_capacity(target);
    for _ in 0..target {
        let mut s = VarSet::empty(n);
        for i in 1..=n {
            if rng.gen_bool(density) {
                s = s.with(i);
            }
        }
        if s.is_empty() {
            s = s.with(rng.gen_range(1..=n));
        }
        supports.push(s.monomial());
    }
    Ideal::minimal_generators(supports).expect("non-empty squarefree generators")
}

/// `count` ideals with `n` drawn uniformly from `n_range`, reproducible from `seed`.
pub fn seeded_ideals(
    seed: u64,
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    max_gens: usize,
) -> Vec<Ideal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            random_ideal(&mut rng, n, max_gens)
        })
        .collect()
}

/// Every squarefree monomial ideal in `n` variables (`n <= 6`), one per
/// orbit under permutations of the variables.
pub fn all_ideals_up_to_symmetry(n: usize) -> Vec<Ideal> {
    assert!((1..=6).contains(&n), "exhaustive enumeration supports 1 <= n <= 6");
    let subsets: Vec<u64> = (1u64..1 << n).collect();
    let perms = permutations(n);
    let mut found = Vec::new();
    let mut chosen = Vec::new();
    antichains(&subsets, 0, &mut chosen, &mut |antichain| {
        if is_canonical(antichain, &perms) {
            let gens = antichain.iter().map(|&b| VarSet::from_bits(n, b).monomial()).collect();
            found.push(Ideal::minimal_generators(gens).expect("antichain of non-empty sets"));
        }
    });
    found.sort_by(|a, b| (a.mu(), a.gens()).cmp(&(b.mu(), b.gens())));
    found
}

fn antichains(subsets: &[u64], from: usize, chosen: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    if !chosen.is_empty() {
        visit(chosen);
    }
    for k in from..subsets.len() {
        let s = subsets[k];
        let comparable = chosen.iter().any(|&c| c & s == c || c & s == s);
        if !comparable {
            chosen.push(s);
            antichains(subsets, k + 1, chosen, visit);
            chosen.pop();
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut current, &mut out);
    out
}

fn heap_permutations(k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, current, out);
        if k.is_multiple_of(2) {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

fn apply(perm: &[usize], mask: u64) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .fold(0, |acc, (_, &j)| acc | 1 << j)
}

/// The antichain (sorted ascending) is the smallest image in its orbit.
fn is_canonical(antichain: &[u64], perms: &[Vec<usize>]) -> bool {
    let mut own = antichain.to_vec();
    own.sort_unstable();
    perms.iter().all(|p| {
        let mut image: Vec<u64> = antichain.iter().map(|&m| apply(p, m)).collect();
        image.sort_unstable();
        image >= own
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orbit_counts() {
        // Inequivalent monotone Boolean functions (OEIS A003182) minus the
        // two constants.
        let counts: Vec<usize> = (1..=5).map(|n| all_ideals_up_to_symmetry(n).len()).collect();
        assert_eq!(counts, [1, 3, 8, 28, 208]);
    }

    #[test]
    fn seeded_is_reproducible() {
        let a = seeded_ideals(7, 20, 3..=6, 5);
        let b = seeded_ideals(7, 20, 3..=6, 5);
        assert_eq!(a, b);
        assert!(a.iter().all(|i| i.mu() <= 5 && (3..=6).contains(&i.n())));
    }
}
