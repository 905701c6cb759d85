//! Stanley-Reisner complexes, reduced homology over `Q` and `pd(R/I)` by
//! Hochster's formula:
//!
//! `beta_{i,sigma}(R/I) = dim H~_{|sigma|-i-1}(Delta|_sigma; Q)`,
//!
//! so `pd(R/I)` is the largest `i` for which some restriction `Delta|_sigma`
//! has non-zero reduced homology in degree `|sigma| - i - 1`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::integer_rank;
use crate::monomial::{Ideal, VarSet};

/// Vertex-count guard for homology and `pd` computations.
pub const MAX_HOMOLOGY_VARS: usize = 20;

fn guard(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_HOMOLOGY_VARS {
        return Err(Error::TooLarge { what, size: n, limit: MAX_HOMOLOGY_VARS });
    }
    Ok(())
}

/// A simplicial complex on the ground set `{1..n}`, given by its facets.
/// A complex without facets is the void complex; `{emptyset}` has the
/// single facet `emptyset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Keeps the inclusion-maximal sets among `faces`.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Self {
        let faces: BTreeSet<VarSet> = faces.into_iter().collect();
        let facets = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(g)))
            .copied()
            .collect();
        SimplicialComplex { n, facets }
    }

    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, facets: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in canonical order (size, then lexicographic).
    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: &VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// `Delta|_sigma`: the faces contained in `sigma`.
    pub fn induced(&self, sigma: &VarSet) -> SimplicialComplex {
        Self::from_faces(self.n, self.facets.iter().map(|f| f.intersection(sigma)))
    }

    /// Dimension, `-1` for `{emptyset}` and `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    /// Faces grouped by cardinality `0..=max_size`, each group sorted by mask.
    fn faces_by_size(&self, max_size: usize) -> Vec<Vec<u64>> {
        let mut groups: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); max_size + 1];
        for facet in &self.facets {
            let full = facet.bits();
            // Every submask of the facet, including the empty one.
            let mut sub = full;
            loop {
                let size = sub.count_ones() as usize;
                if size <= max_size {
                    groups[size].insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & full;
            }
        }
        groups.into_iter().map(|g| g.into_iter().collect()).collect()
    }
}

/// Faces are the variable sets containing no generator support.
///
/// Found by scanning all `2^n` sets, independently of the prime
/// decomposition; the facets are the complements of the minimal primes.
pub fn stanley_reisner(ideal: &Ideal) -> Result<SimplicialComplex> {
    let n = ideal.n();
    guard(n, "Stanley-Reisner complex")?;
    let is_face = |mask: u64| !ideal.contains_support(&VarSet::from_bits(n, mask));
    let mut facets: Vec<VarSet> = (0u64..1 << n)
        .filter(|&mask| is_face(mask))
        .filter(|&mask| (0..n).all(|i| mask & (1 << i) != 0 || !is_face(mask | 1 << i)))
        .map(|mask| VarSet::from_bits(n, mask))
        .collect();
    facets.sort();
    Ok(SimplicialComplex { n, facets })
}

/// Reduced homology ranks over `Q`; entry `k` is degree `k - 1`, running
/// from `-1` to `dim`. The void complex yields `[0]`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex) -> Result<Vec<usize>> {
    guard(complex.n(), "reduced homology")?;
    match complex.dim() {
        None => Ok(vec![0]),
        Some(dim) => Ok(homology_up_to(complex, dim)),
    }
}

/// Ranks in degrees `-1..=max_degree` of a non-void complex.
fn homology_up_to(complex: &SimplicialComplex, max_degree: isize) -> Vec<usize> {
    let top = (max_degree + 1).max(0) as usize;
    // Faces of size up to top + 2 give the boundary maps out of degree max_degree + 1.
    let faces = complex.faces_by_size(top + 2);
    // boundary_ranks[s]: rank of the map from faces of size s to size s - 1.
    let mut boundary_ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        boundary_ranks[s] = boundary_rank(&faces[s], &faces[s - 1]);
    }
    (0..=top)
        .map(|s| faces[s].len() - boundary_ranks[s] - boundary_ranks.get(s + 1).copied().unwrap_or(0))
        .collect()
}

fn boundary_rank(upper: &[u64], lower: &[u64]) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let rows = upper
        .iter()
        .map(|&face| {
            let mut row = Vec::with_capacity(face.count_ones() as usize);
            let mut rest = face;
            let mut position = 0;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let sign = if position % 2 == 0 { 1 } else { -1 };
                row.push((index[&(face & !v)], sign));
                position += 1;
            }
            row
        })
        .collect();
    integer_rank(rows, lower.len())
}

/// `pd(R/I)` over a field of characteristic zero with the restriction
/// attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdResult {
    pub pd: usize,
    /// 1-based indices of the witness set `sigma`.
    pub sigma: Vec<usize>,
    /// Degree `|sigma| - pd - 1` of the non-vanishing reduced homology.
    pub homology_degree: isize,
    pub characteristic: u32,
}

/// Hochster's formula over all `sigma` that can contribute.
///
/// A `sigma` that is a face, or that contains a vertex lying in no
/// generator support inside `sigma`, gives a cone and is skipped. Sets are
/// scanned in increasing mask order and the witness is the first one
/// attaining the maximum.
pub fn projective_dimension(ideal: &Ideal) -> Result<PdResult> {
    let n = ideal.n();
    guard(n, "projective dimension")?;
    let complex = stanley_reisner(ideal)?;
    let mut best: Option<PdResult> = None;
    for mask in 1u64..1 << n {
        let sigma = VarSet::from_bits(n, mask);
        let size = sigma.len();
        let floor = best.as_ref().map_or(0, |b| b.pd);
        if size <= floor {
            continue;
        }
        let covered = ideal
            .supports()
            .iter()
            .filter(|s| s.is_subset(&sigma))
            .fold(VarSet::empty(n), |acc, s| acc.union(s));
        if covered != sigma {
            continue;
        }
        // Only degrees d with |sigma| - 1 - d > floor can improve the maximum.
        let max_degree = size as isize - 2 - floor as isize;
        let restricted = complex.induced(&sigma);
        let Some(dim) = restricted.dim() else { continue };
        let ranks = homology_up_to(&restricted, max_degree.min(dim));
        if let Some(k) = ranks.iter().position(|&r| r > 0) {
            let degree = k as isize - 1;
            let pd = (size as isize - 1 - degree) as usize;
            if pd > floor {
                best = Some(PdResult {
                    pd,
                    sigma: sigma.to_vec(),
                    homology_degree: degree,
                    characteristic: 0,
                });
            }
        }
    }
    Ok(best.expect("a proper non-zero ideal has a non-zero Betti number"))
}
