//! Schmitt-Vogel partitions: verification, three constructions and the
//! polynomial certificates they yield.
//!
//! A partition `P_0, ..., P_r` of monomials certifies
//! `Rad(q_0, ..., q_r) = Rad(I)` with `q_i = sum_{p in P_i} p^e(p)` when
//!
//! * `P_0` is a single monomial,
//! * the monomials of all parts generate `I`,
//! * for `i >= 1` and distinct `p, p'` in `P_i`, some monomial of an
//!   earlier part divides `p * p'`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{minimal_elements, Ideal, Monomial, Polynomial, VarSet};
use crate::primes::{minimal_primes, nu_profile};

/// Default generator-count guard for [`search_min_partition`].
pub const SEARCH_MAX_GENS: usize = 10;

/// Default node budget for [`search_min_partition`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// Largest `mu` for which the unpruned Prop-1 layers are materialized.
pub const PROP1_MAX_GENS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Prop1,
    LcmIteration,
    Search,
    Manual,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Prop1 => "prop1",
            Method::LcmIteration => "lcm_iteration",
            Method::Search => "search",
            Method::Manual => "manual",
        })
    }
}

/// Ordered parts `P_0, ..., P_r` together with the ideal they should generate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SvPartition {
    parts: Vec<Vec<Monomial>>,
    exponents: BTreeMap<Monomial, u32>,
    target: Ideal,
    origin: Method,
}

impl SvPartition {
    /// Parts must be non-empty, pairwise disjoint and live over `target.n()`
    /// variables. Each part is stored in canonical order.
    pub fn new(parts: Vec<Vec<Monomial>>, target: Ideal) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut stored = Vec::with_capacity(parts.len());
        for (i, part) in parts.into_iter().enumerate() {
            let part: BTreeSet<Monomial> = part.into_iter().collect();
            if part.is_empty() {
                return Err(Error::Structural(format!("part P_{i} is empty")));
            }
            for p in &part {
                if p.n() != target.n() {
                    return Err(Error::Dimension { left: target.n(), right: p.n() });
                }
                if !seen.insert(p.clone()) {
                    return Err(Error::Structural(format!("{p} appears in more than one part")));
                }
            }
            stored.push(part.into_iter().collect());
        }
        if stored.is_empty() {
            return Err(Error::Structural("no parts".into()));
        }
        Ok(SvPartition { parts: stored, exponents: BTreeMap::new(), target, origin: Method::Manual })
    }

    /// Builds a partition from layers that may repeat monomials: a repeated
    /// monomial is kept only in its first layer, and emptied layers vanish.
    /// Condition (iii) survives since a dropped copy still sits in an earlier part.
    fn from_layers(layers: Vec<Vec<Monomial>>, target: Ideal, origin: Method) -> Result<Self> {
        let mut seen = HashSet::new();
        let parts = layers
            .into_iter()
            .map(|layer| layer.into_iter().filter(|p| seen.insert(p.clone())).collect::<Vec<_>>())
            .filter(|layer| !layer.is_empty())
            .collect();
        Ok(Self::new(parts, target)?.with_origin(origin))
    }

    /// Sets `e(p)` for individual monomials; unset monomials use 1.
    pub fn with_exponents(mut self, exponents: BTreeMap<Monomial, u32>) -> Result<Self> {
        if let Some((p, _)) = exponents.iter().find(|(_, &e)| e == 0) {
            return Err(Error::Structural(format!("exponent of {p} must be at least 1")));
        }
        self.exponents = exponents;
        Ok(self)
    }

    /// Uses `e(p) = e` for every monomial.
    pub fn with_uniform_exponent(self, e: u32) -> Result<Self> {
        let map = self.parts.iter().flatten().map(|p| (p.clone(), e)).collect();
        self.with_exponents(map)
    }

    pub fn with_origin(mut self, origin: Method) -> Self {
        self.origin = origin;
        self
    }

    pub fn parts(&self) -> &[Vec<Monomial>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn target(&self) -> &Ideal {
        &self.target
    }

    pub fn origin(&self) -> Method {
        self.origin
    }

    pub fn exponents(&self) -> &BTreeMap<Monomial, u32> {
        &self.exponents
    }

    pub fn exponent(&self, p: &Monomial) -> u32 {
        self.exponents.get(p).copied().unwrap_or(1)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.parts.iter().flatten()
    }
}

/// The first failed condition found by [`verify_partition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `P_0` must hold exactly one monomial.
    P0NotSingleton { size: usize },
    /// The parts do not generate the target ideal. `uncovered` lists target
    /// generators no part element divides; `outside` lists part elements not
    /// in the target.
    IdealMismatch { uncovered: Vec<Monomial>, outside: Vec<Monomial> },
    /// No element of `P_0, ..., P_{part-1}` divides `p * q`.
    ProductNotCovered { part: usize, p: Monomial, q: Monomial },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::P0NotSingleton { size } => {
                write!(f, "P_0 is not a singleton (it has {size} elements)")
            }
            Violation::IdealMismatch { uncovered, outside } => {
                write!(f, "the parts do not generate the target ideal")?;
                if !uncovered.is_empty() {
                    write!(f, "; uncovered generators: {}", join(uncovered))?;
                }
                if !outside.is_empty() {
                    write!(f, "; elements outside the ideal: {}", join(outside))?;
                }
                Ok(())
            }
            Violation::ProductNotCovered { part, p, q } => write!(
                f,
                "in P_{part}, no element of P_0..P_{} divides ({p})*({q})",
                part - 1
            ),
        }
    }
}

fn join(ms: &[Monomial]) -> String {
    ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn divides_product(d: &Monomial, p: &Monomial, q: &Monomial) -> bool {
    d.exponents()
        .iter()
        .zip(p.exponents().iter().zip(q.exponents()))
        .all(|(&a, (&b, &c))| u64::from(a) <= u64::from(b) + u64::from(c))
}

/// Checks the three Schmitt-Vogel conditions, reporting the first failure.
pub fn verify_partition(partition: &SvPartition) -> std::result::Result<(), Violation> {
    let parts = partition.parts();
    if parts[0].len() != 1 {
        return Err(Violation::P0NotSingleton { size: parts[0].len() });
    }

    let all: Vec<Monomial> = partition.monomials().cloned().collect();
    let target = partition.target();
    let uncovered: Vec<Monomial> = target
        .gens()
        .iter()
        .filter(|g| !all.iter().any(|p| p.divides_unchecked(g)))
        .cloned()
        .collect();
    let outside: Vec<Monomial> = all
        .iter()
        .filter(|p| !target.gens().iter().any(|g| g.divides_unchecked(p)))
        .cloned()
        .collect();
    if !uncovered.is_empty() || !outside.is_empty() {
        return Err(Violation::IdealMismatch { uncovered, outside });
    }

    // Earlier elements, kept sorted by degree so small divisors are tried first.
    let mut earlier: Vec<&Monomial> = parts[0].iter().collect();
    for (i, part) in parts.iter().enumerate().skip(1) {
        for (a, p) in part.iter().enumerate() {
            for q in &part[a + 1..] {
                if !earlier.iter().any(|d| divides_product(d, p, q)) {
                    return Err(Violation::ProductNotCovered { part: i, p: p.clone(), q: q.clone() });
                }
            }
        }
        earlier.extend(part.iter());
        earlier.sort();
    }
    Ok(())
}

/// Polynomials `q_0, ..., q_r` generating the target ideal up to radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub q: Vec<Polynomial>,
    pub method: Method,
}

impl Certificate {
    pub fn count(&self) -> usize {
        self.q.len()
    }
}

/// `q_i = sum_{p in P_i} p^e(p)`, after checking the partition.
pub fn emit_certificate(partition: &SvPartition) -> Result<Certificate> {
    verify_partition(partition).map_err(|v| Error::InvalidPartition(v.to_string()))?;
    let q = partition
        .parts()
        .iter()
        .map(|part| {
            let terms = part
                .iter()
                .map(|p| p.pow(partition.exponent(p)))
                .collect::<Result<Vec<_>>>()?;
            Polynomial::from_terms(terms)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Certificate { q, method: partition.origin() })
}

/// Visits every `k`-subset of `0..m` in lexicographic order.
fn for_each_subset(m: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
            return;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Inserts `m` into an antichain of divisibility-minimal monomials.
fn insert_minimal(kept: &mut Vec<Monomial>, m: Monomial) {
    if kept.iter().any(|k| k.divides_unchecked(&m)) {
        return;
    }
    kept.retain(|k| !m.divides_unchecked(k));
    kept.push(m);
}

/// Products of all `k`-subsets of the generators; with `prune` only the
/// divisibility-minimal products are retained while streaming.
fn products_of_k(gens: &[Monomial], k: usize, prune: bool) -> Result<Vec<Monomial>> {
    let n = gens[0].n();
    let mut out: Vec<Monomial> = Vec::new();
    let mut seen = HashSet::new();
    let mut failure = None;
    for_each_subset(gens.len(), k, |idx| {
        if failure.is_some() {
            return;
        }
        let product = idx
            .iter()
            .try_fold(Monomial::unit(n), |acc, &i| acc.mul(&gens[i]));
        match product {
            Ok(p) if prune => insert_minimal(&mut out, p),
            Ok(p) => {
                if seen.insert(p.clone()) {
                    out.push(p);
                }
            }
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    out.sort();
    Ok(out)
}

/// The construction behind `ara I <= mu - nu + 1`.
///
/// `P_0 = {p_0}` with `p_0` the product of the distinct witness variables
/// `x_{i_j}`, and `P_i = L_{mu-nu+1-i}` for `i = 1..=mu-nu`, where `L_k`
/// collects the products of `k` distinct generators. With `prune`, each
/// `P_i` keeps only its divisibility-minimal elements.
pub fn construct_prop1(ideal: &Ideal, prune: bool) -> Result<(SvPartition, Certificate)> {
    let mu = ideal.mu();
    let decomposition = minimal_primes(ideal);
    let profile = nu_profile(ideal, &decomposition);
    let nu = profile.nu;
    if !prune && mu > PROP1_MAX_GENS {
        return Err(Error::TooLarge { what: "unpruned Prop-1 layers", size: mu, limit: PROP1_MAX_GENS });
    }

    let witnesses = VarSet::from_indices(ideal.n(), &profile.witnesses)?;
    let mut layers = vec![vec![witnesses.monomial()]];
    for k in (1..=mu - nu).rev() {
        layers.push(products_of_k(ideal.gens(), k, prune)?);
    }
    let partition = SvPartition::from_layers(layers, ideal.clone(), Method::Prop1)?;
    let certificate = emit_certificate(&partition)?;
    Ok((partition, certificate))
}

/// The sequence `Gamma_1 = M, Gamma_2, ..., Gamma_N` and the chosen `p_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcmTrace {
    pub gammas: Vec<Vec<Monomial>>,
    pub p0: Monomial,
}

impl LcmTrace {
    /// The stop index `N`.
    pub fn steps(&self) -> usize {
        self.gammas.len()
    }
}

/// Default step cap for [`construct_lcm_iteration`]: `mu + n`.
pub fn default_lcm_steps(ideal: &Ideal) -> usize {
    ideal.mu() + ideal.n()
}

/// Iterated lcm construction.
///
/// `Gamma_{i}` holds the minimal lcms of distinct pairs from `Gamma_{i-1}`;
/// the iteration stops at the first `N` with `gcd(Gamma_N)` in `I`, and
/// returns `P_0 = {gcd(Gamma_N)}`, `P_i = Gamma_{N-i}`.
pub fn construct_lcm_iteration(
    ideal: &Ideal,
    max_steps: usize,
) -> Result<(SvPartition, Certificate, LcmTrace)> {
    if max_steps == 0 {
        return Err(Error::Budget(0));
    }
    let mut gammas = vec![ideal.gens().to_vec()];
    let p0 = loop {
        let last = gammas.last().expect("non-empty");
        let gcd = last[1..]
            .iter()
            .try_fold(last[0].clone(), |acc, m| acc.gcd(m))?;
        if ideal.contains_monomial(&gcd)? {
            break gcd;
        }
        if gammas.len() >= max_steps {
            return Err(Error::Budget(max_steps));
        }
        let mut lcms = Vec::with_capacity(last.len() * last.len() / 2);
        for (a, f) in last.iter().enumerate() {
            for g in &last[a + 1..] {
                lcms.push(f.lcm(g)?);
            }
        }
        gammas.push(minimal_elements(lcms));
    };

    let mut layers = vec![vec![p0.clone()]];
    layers.extend(gammas[..gammas.len() - 1].iter().rev().cloned());
    let partition = SvPartition::from_layers(layers, ideal.clone(), Method::LcmIteration)?;
    let certificate = emit_certificate(&partition)?;
    Ok((partition, certificate, LcmTrace { gammas, p0 }))
}

/// Result of [`search_min_partition`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub partition: SvPartition,
    pub certificate: Certificate,
    /// `false` when the budget ran out; the partition is then only an upper bound.
    pub optimal: bool,
    pub nodes: u64,
}

struct PartitionSearch {
    m: usize,
    /// `covers[a][b]`: generators other than `a, b` dividing `gens[a] * gens[b]`.
    covers: Vec<Vec<u64>>,
    /// Pairs that could ever share a part.
    ever_compatible: Vec<u64>,
    budget: u64,
    nodes: u64,
    exhausted: bool,
}

impl PartitionSearch {
    fn new(ideal: &Ideal, budget: u64) -> Self {
        let supports = ideal.supports();
        let m = supports.len();
        let mut covers = vec![vec![0u64; m]; m];
        let mut ever_compatible = vec![0u64; m];
        for a in 0..m {
            for b in 0..m {
                if a == b {
                    continue;
                }
                let joint = supports[a].union(&supports[b]);
                covers[a][b] = (0..m)
                    .filter(|&c| c != a && c != b && supports[c].is_subset(&joint))
                    .fold(0, |acc, c| acc | 1 << c);
                if covers[a][b] != 0 {
                    ever_compatible[a] |= 1 << b;
                }
            }
        }
        PartitionSearch { m, covers, ever_compatible, budget, nodes: 0, exhausted: false }
    }

    /// Greedy independent set among `rem` in the "could ever share a part"
    /// graph; each of its members needs its own part.
    fn parts_needed(&self, rem: u64) -> usize {
        let mut picked = 0u64;
        let mut count = 0;
        for a in bits(rem) {
            if self.ever_compatible[a] & picked == 0 {
                picked |= 1 << a;
                count += 1;
            }
        }
        count
    }

    fn is_clique(&self, set: u64, earlier: u64) -> bool {
        let members: Vec<usize> = bits(set).collect();
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..].iter().all(|&b| self.covers[a][b] & earlier != 0)
        })
    }

    /// Fills `left` more parts covering exactly `rem`; parts are pushed onto `out`.
    fn fill(&mut self, rem: u64, earlier: u64, left: usize, out: &mut Vec<u64>) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return false;
        }
        if rem == 0 {
            return left == 0;
        }
        if left == 0 || (rem.count_ones() as usize) < left || self.parts_needed(rem) > left {
            return false;
        }
        if left == 1 {
            if self.is_clique(rem, earlier) {
                out.push(rem);
                return true;
            }
            return false;
        }
        // Submasks of `rem` in increasing numeric order.
        let mut sub = 0u64;
        loop {
            sub = sub.wrapping_sub(rem) & rem;
            if sub == 0 || self.exhausted {
                return false;
            }
            if sub != rem && self.is_clique(sub, earlier) {
                out.push(sub);
                if self.fill(rem & !sub, earlier | sub, left - 1, out) {
                    return true;
                }
                out.pop();
            }
        }
    }

    /// First partition into exactly `k` parts in enumeration order.
    fn with_parts(&mut self, k: usize) -> Option<Vec<u64>> {
        let all = low_mask(self.m);
        for first in 0..self.m {
            let mut out = vec![1u64 << first];
            if self.fill(all & !(1 << first), 1 << first, k - 1, &mut out) {
                return Some(out);
            }
            if self.exhausted {
                return None;
            }
        }
        None
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask & (1 << i) != 0)
}

fn low_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1 << m) - 1
    }
}

/// Minimum-size Schmitt-Vogel partition of the minimal generators.
///
/// Ordered set partitions are enumerated by increasing part count, so the
/// first success is optimal. If the node budget runs out, the smallest of
/// the Prop-1, lcm-iteration and all-singleton partitions is returned with
/// `optimal = false`.
pub fn search_min_partition(ideal: &Ideal, budget: u64) -> Result<SearchOutcome> {
    let m = ideal.mu();
    if m > SEARCH_MAX_GENS {
        return Err(Error::TooLarge { what: "partition search", size: m, limit: SEARCH_MAX_GENS });
    }
    let mut search = PartitionSearch::new(ideal, budget);
    for k in 1..=m {
        if let Some(masks) = search.with_parts(k) {
            let parts = masks
                .iter()
                .map(|&mask| bits(mask).map(|i| ideal.gens()[i].clone()).collect())
                .collect();
            let partition = SvPartition::new(parts, ideal.clone())?.with_origin(Method::Search);
            let certificate = emit_certificate(&partition)?;
            return Ok(SearchOutcome { partition, certificate, optimal: true, nodes: search.nodes });
        }
        if search.exhausted {
            break;
        }
    }

    // Singletons always satisfy condition (iii) vacuously.
    let singletons = ideal.gens().iter().map(|g| vec![g.clone()]).collect();
    let mut best = SvPartition::new(singletons, ideal.clone())?.with_origin(Method::Search);
    let prop1 = construct_prop1(ideal, true).map(|(p, _)| p);
    let lcm = construct_lcm_iteration(ideal, default_lcm_steps(ideal)).map(|(p, _, _)| p);
    for candidate in [prop1, lcm].into_iter().flatten() {
        if candidate.len() < best.len() {
            best = candidate;
        }
    }
    let certificate = emit_certificate(&best)?;
    Ok(SearchOutcome { partition: best, certificate, optimal: false, nodes: search.nodes })
}
