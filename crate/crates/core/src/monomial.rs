//! Monomials, variable sets, coefficient-one polynomials and squarefree
//! monomial ideals in `K[x1, ..., xn]`.
//!
//! Variables are 1-based throughout. Every object carries its ambient
//! variable count `n` and cross-object operations reject mismatches.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient variable count (a [`VarSet`] is a `u64` mask).
pub const MAX_VARS: usize = 64;

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::Dimension { left, right })
    }
}

/// A set of variable indices in `1..=n`, stored as a bit mask
/// (bit `i - 1` stands for `x_i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarSet {
    bits: u64,
    n: usize,
}

impl VarSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        VarSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        s.bits = low_bits(n);
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &i in indices {
            if i == 0 || i > n {
                return Err(Error::VariableOutOfRange { index: i, n });
            }
            s.bits |= 1 << (i - 1);
        }
        Ok(s)
    }

    /// Builds a set from a raw mask; bits above `n` are discarded.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        let mut s = Self::empty(n);
        s.bits = bits & low_bits(n);
        s
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, index: usize) -> bool {
        index >= 1 && index <= self.n && self.bits & (1 << (index - 1)) != 0
    }

    pub fn is_subset(&self, other: &VarSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &VarSet) -> bool {
        self.bits & other.bits != 0
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &VarSet) -> VarSet {
        VarSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn complement(&self) -> VarSet {
        VarSet { bits: !self.bits & low_bits(self.n), n: self.n }
    }

    pub fn with(&self, index: usize) -> VarSet {
        debug_assert!(index >= 1 && index <= self.n);
        VarSet { bits: self.bits | (1 << (index - 1)), n: self.n }
    }

    pub fn without(&self, index: usize) -> VarSet {
        VarSet { bits: self.bits & !(1 << (index - 1)), n: self.n }
    }

    /// Indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.n).filter(move |i| bits & (1 << (i - 1)) != 0)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.indices().collect()
    }

    /// The squarefree monomial with this support.
    pub fn monomial(&self) -> Monomial {
        let exps = (1..=self.n).map(|i| u32::from(self.contains(i))).collect();
        Monomial { exps }
    }
}

/// Size first, then lexicographic on the increasing index lists.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, ")")
    }
}

fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A monomial `x1^a1 * ... * xn^an` given by its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables are supported");
        Monomial { exps }
    }

    pub fn unit(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// The squarefree monomial `prod_{i in indices} x_i`.
    pub fn from_support(n: usize, indices: &[usize]) -> Result<Self> {
        Ok(VarSet::from_indices(n, indices)?.monomial())
    }

    pub fn var(n: usize, index: usize) -> Result<Self> {
        Self::from_support(n, &[index])
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index - 1]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VarSet {
        let bits = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1 << i));
        VarSet::from_bits(self.n(), bits)
    }

    /// `self | other`: every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        check_dims(self.n(), other.n())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.n(), other.n())?;
        Ok(self.zip_with(other, u32::max))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.n(), other.n())?;
        Ok(self.zip_with(other, u32::min))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.n(), other.n())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|a| a.checked_mul(e).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect();
        Monomial { exps }
    }

    /// Parses `x1*x3`, `x1*x1*x2`, `x1^2*x2` or `1` over `n` variables.
    ///
    /// Parse errors report line 1 and a 1-based column within `text`.
    pub fn parse(text: &str, n: usize) -> Result<Monomial> {
        let err = |column: usize, message: String| Error::Parse { line: 1, column, message };
        if n > MAX_VARS {
            return Err(Error::TooLarge { what: "variable count", size: n, limit: MAX_VARS });
        }
        let mut exps = vec![0u32; n];
        let trimmed = text.trim();
        let lead = text.len() - text.trim_start().len();
        if trimmed == "1" {
            return Ok(Monomial { exps });
        }
        if trimmed.is_empty() {
            return Err(err(lead + 1, "expected a monomial".into()));
        }
        let mut offset = lead;
        for factor in trimmed.split('*') {
            let inner_lead = factor.len() - factor.trim_start().len();
            let col = offset + inner_lead + 1;
            let factor_text = factor.trim();
            let (base, power) = match factor_text.split_once('^') {
                Some((b, p)) => {
                    let p: u32 = p
                        .trim()
                        .parse()
                        .map_err(|_| err(col, format!("bad exponent in `{factor_text}`")))?;
                    (b.trim(), p)
                }
                None => (factor_text, 1),
            };
            let index: usize = base
                .strip_prefix('x')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| err(col, format!("expected `x<index>`, found `{factor_text}`")))?;
            if index == 0 || index > n {
                return Err(Error::VariableOutOfRange { index, n });
            }
            exps[index - 1] = exps[index - 1].checked_add(power).ok_or(Error::Overflow)?;
            offset += factor.len() + 1;
        }
        Ok(Monomial { exps })
    }
}

/// Total degree first, then lexicographic with `x1` largest, so that
/// `x1*x3` sorts before `x2*x4`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Divisibility-minimal elements of `monomials`, deduplicated and sorted.
pub fn minimal_elements(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    // Sorted by degree, so a divisor always precedes its multiples.
    monomials.sort();
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(monomials.len());
    for m in monomials {
        if !kept.iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// Whether the monomial ideals generated by `a` and `b` coincide.
pub fn same_monomial_ideal(a: &[Monomial], b: &[Monomial]) -> bool {
    let covered = |xs: &[Monomial], ys: &[Monomial]| {
        xs.iter().all(|x| ys.iter().any(|y| y.divides_unchecked(x)))
    };
    covered(a, b) && covered(b, a)
}

/// A polynomial whose terms all carry coefficient one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    terms: Vec<Monomial>,
}

impl Polynomial {
    /// Sorts the terms canonically; repeated terms are rejected since they
    /// would need a coefficient other than one.
    pub fn from_terms(mut terms: Vec<Monomial>) -> Result<Self> {
        terms.sort();
        if let Some(w) = terms.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Structural(format!("repeated term {}", w[0])));
        }
        if let Some(t) = terms.iter().find(|t| t.n() != terms[0].n()) {
            return Err(Error::Dimension { left: terms[0].n(), right: t.n() });
        }
        Ok(Polynomial { terms })
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// A squarefree monomial ideal, stored by its unique minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ideal {
    n: usize,
    gens: Vec<Monomial>,
    supports: Vec<VarSet>,
}

impl Ideal {
    /// Reduces `monomials` to the divisibility-minimal, deduplicated and
    /// canonically sorted generating set.
    pub fn minimal_generators(monomials: Vec<Monomial>) -> Result<Ideal> {
        let n = monomials.first().ok_or(Error::EmptyIdeal)?.n();
        for m in &monomials {
            check_dims(n, m.n())?;
            if m.is_unit() {
                return Err(Error::UnitGenerator);
            }
            if !m.is_squarefree() {
                return Err(Error::NotSquarefree(m.to_string()));
            }
        }
        let gens = minimal_elements(monomials);
        let supports = gens.iter().map(Monomial::support).collect();
        Ok(Ideal { n, gens, supports })
    }

    /// Convenience constructor from 1-based support lists.
    pub fn from_supports(n: usize, supports: &[&[usize]]) -> Result<Ideal> {
        let gens = supports
            .iter()
            .map(|s| Monomial::from_support(n, s))
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        Self::minimal_generators(gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `mu(I)`, the number of minimal generators.
    pub fn mu(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn supports(&self) -> &[VarSet] {
        &self.supports
    }

    pub fn contains_monomial(&self, m: &Monomial) -> Result<bool> {
        check_dims(self.n, m.n())?;
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// Membership of the squarefree monomial with support `s`.
    pub fn contains_support(&self, s: &VarSet) -> bool {
        self.supports.iter().any(|g| g.is_subset(s))
    }

    pub fn ideal_equal(&self, other: &Ideal) -> Result<bool> {
        check_dims(self.n, other.n)?;
        Ok(self.gens == other.gens)
    }

    /// `lcm` of all generators: the product of every variable that occurs.
    pub fn lcm_all(&self) -> Monomial {
        self.supports
            .iter()
            .fold(VarSet::empty(self.n), |acc, s| acc.union(s))
            .monomial()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
