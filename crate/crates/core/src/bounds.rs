//! Upper and lower bounds on the arithmetical rank.
//!
//! Each formula is evaluated exactly as a rational number and floored once
//! when reported, since `ara` is an integer.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::monomial::Ideal;
use crate::primes::{NuProfile, PrimeDecomposition};
use crate::sv::Method;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Proven,
    Conjectural,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Formula,
    Certificate,
}

/// One upper bound: the exact value before flooring and its integer part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub value: i64,
    #[serde(with = "rational_string")]
    pub exact: Rational,
    pub applicable: bool,
    pub status: BoundStatus,
    pub provenance: Provenance,
}

impl BoundEntry {
    fn formula(exact: Rational, applicable: bool, status: BoundStatus) -> Self {
        let value = exact.floor().to_integer().to_i64().expect("bound fits in i64");
        BoundEntry { value, exact, applicable, status, provenance: Provenance::Formula }
    }

    fn proven(exact: Rational) -> Self {
        Self::formula(exact, true, BoundStatus::Proven)
    }

    fn certificate(count: usize) -> Self {
        let exact = Rational::from_integer(BigInt::from(count));
        BoundEntry {
            value: count as i64,
            exact,
            applicable: true,
            status: BoundStatus::Proven,
            provenance: Provenance::Certificate,
        }
    }

    /// Whether the bound may be used to certify `ara`.
    pub fn usable(&self) -> bool {
        self.applicable && self.status == BoundStatus::Proven
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub mu: usize,
    pub nu: usize,
    pub tau: usize,
    pub h: usize,
    pub pure: bool,
    /// `ara I <= mu(I)`.
    pub trivial_upper: BoundEntry,
    /// `ara I <= mu - nu + 1`.
    pub prop1_upper: BoundEntry,
    /// `ara I <= mu - mu/tau + 1`.
    pub cor1_upper: BoundEntry,
    /// `ara I <= n - (n-1)/tau`, applicable when `mu <= n - 1`.
    pub cor2_upper: BoundEntry,
    /// `ara I <= n - [(n-1)/tau]`, proven only for `tau` in `{2, 3}`.
    pub lyubeznik_upper: BoundEntry,
    /// `ara I <= (1 - 1/tau) C(n, [n/2]) + 1`.
    pub jaballah1_upper: BoundEntry,
    /// `ara I <= (1 - 1/tau) C(n, h-1) + 1`, applicable when `h >= (n+1)/2`.
    pub jaballah2_upper: BoundEntry,
    /// Sizes of verified certificates, keyed by construction.
    pub certificate_uppers: BTreeMap<Method, BoundEntry>,
    /// `h(I) <= ara I`.
    pub lower_height: usize,
    /// `pd(R/I) <= ara I`, when computed.
    pub lower_pd: Option<usize>,
    pub best_upper: usize,
    pub best_lower: usize,
    pub exact: Option<usize>,
}

impl BoundsReport {
    /// Formula bounds by name, in report order.
    pub fn formula_bounds(&self) -> [(&'static str, &BoundEntry); 7] {
        [
            ("trivial", &self.trivial_upper),
            ("prop1", &self.prop1_upper),
            ("cor1", &self.cor1_upper),
            ("cor2", &self.cor2_upper),
            ("lyubeznik", &self.lyubeznik_upper),
            ("jaballah1", &self.jaballah1_upper),
            ("jaballah2", &self.jaballah2_upper),
        ]
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// Assembles every bound. `certificates` lists the sizes of verified
/// Schmitt-Vogel certificates; `pd` is `pd(R/I)` when known.
pub fn bounds_report(
    ideal: &Ideal,
    decomposition: &PrimeDecomposition,
    profile: &NuProfile,
    pd: Option<usize>,
    certificates: &[(Method, usize)],
) -> BoundsReport {
    let n = ideal.n();
    let mu = ideal.mu();
    let nu = profile.nu;
    let tau = decomposition.tau();
    let h = decomposition.h();
    let one = Rational::one();
    let tau_r = int(tau);
    let shrink = &one - &one / &tau_r;

    let trivial_upper = BoundEntry::proven(int(mu));
    let prop1_upper = BoundEntry::proven(int(mu) - int(nu) + &one);
    let cor1_upper = BoundEntry::proven(int(mu) - int(mu) / &tau_r + &one);
    let cor2_upper = BoundEntry::formula(
        int(n) - int(n.saturating_sub(1)) / &tau_r,
        mu < n,
        BoundStatus::Proven,
    );
    let lyubeznik_status = if tau == 2 || tau == 3 {
        BoundStatus::Proven
    } else {
        BoundStatus::Conjectural
    };
    let lyubeznik_upper = BoundEntry::formula(
        int(n) - (int(n.saturating_sub(1)) / &tau_r).floor(),
        true,
        lyubeznik_status,
    );
    let jaballah1_upper =
        BoundEntry::proven(&shrink * Rational::from_integer(binomial(n, n / 2)) + &one);
    let jaballah2_upper = BoundEntry::formula(
        &shrink * Rational::from_integer(binomial(n, h.saturating_sub(1))) + &one,
        2 * h > n,
        BoundStatus::Proven,
    );

    let mut certificate_uppers: BTreeMap<Method, BoundEntry> = BTreeMap::new();
    for &(method, count) in certificates {
        let entry = certificate_uppers.entry(method).or_insert_with(|| BoundEntry::certificate(count));
        if (count as i64) < entry.value {
            *entry = BoundEntry::certificate(count);
        }
    }

    let formulas = [
        &trivial_upper,
        &prop1_upper,
        &cor1_upper,
        &cor2_upper,
        &lyubeznik_upper,
        &jaballah1_upper,
        &jaballah2_upper,
    ];
    let best_upper = formulas
        .into_iter()
        .chain(certificate_uppers.values())
        .filter(|b| b.usable())
        .map(|b| b.value.max(0) as usize)
        .min()
        .expect("the trivial bound is always usable");
    let best_lower = pd.map_or(h, |p| p.max(h));
    let exact = (best_lower == best_upper).then_some(best_upper);

    BoundsReport {
        n,
        mu,
        nu,
        tau,
        h,
        pure: decomposition.pure(),
        trivial_upper,
        prop1_upper,
        cor1_upper,
        cor2_upper,
        lyubeznik_upper,
        jaballah1_upper,
        jaballah2_upper,
        certificate_uppers,
        lower_height: h,
        lower_pd: pd,
        best_upper,
        best_lower,
        exact,
    }
}

/// `mu(I) = h(I)`. Complete intersections are pure-dimensional.
pub fn is_complete_intersection(ideal: &Ideal, decomposition: &PrimeDecomposition) -> bool {
    let ci = ideal.mu() == decomposition.h();
    debug_assert!(!ci || decomposition.pure(), "complete intersection that is not pure");
    ci
}

/// Serializes a rational as `"p/q"` (or `"p"` when integral).
pub mod rational_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    use crate::Rational;

    pub fn serialize<S: Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(|_| D::Error::custom(format!("bad rational `{text}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example1, example2};
    use crate::primes::{minimal_primes, nu_profile};

    fn report(ideal: &Ideal, pd: Option<usize>, certs: &[(Method, usize)]) -> BoundsReport {
        let d = minimal_primes(ideal);
        let p = nu_profile(ideal, &d);
        bounds_report(ideal, &d, &p, pd, certs)
    }

    fn ratio(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn example1_bounds() {
        let r = report(&example1(), Some(5), &[(Method::Search, 5)]);
        assert_eq!(r.trivial_upper.value, 8);
        assert_eq!(r.lyubeznik_upper.value, 8);
        assert_eq!(r.lyubeznik_upper.status, BoundStatus::Conjectural);
        assert_eq!(r.cor1_upper.exact, ratio(37, 5));
        assert_eq!(r.cor1_upper.value, 7);
        assert_eq!(r.prop1_upper.value, 6);
        assert!(r.cor2_upper.applicable);
        // 9 - 8/5 = 7.4
        assert_eq!(r.cor2_upper.exact, ratio(37, 5));
        // (4/5) * C(9, 4) + 1 = 101.8
        assert_eq!(r.jaballah1_upper.exact, ratio(509, 5));
        assert_eq!(r.jaballah1_upper.value, 101);
        assert!(!r.jaballah2_upper.applicable);
        assert_eq!((r.best_upper, r.best_lower, r.exact), (5, 5, Some(5)));
    }

    #[test]
    fn example2_bounds() {
        let r = report(&example2(), Some(6), &[]);
        assert_eq!(r.cor1_upper.exact, ratio(23, 3));
        assert_eq!(r.cor1_upper.value, 7);
        assert_eq!(r.prop1_upper.value, 6);
        assert_eq!(r.lyubeznik_upper.value, 8);
        assert_eq!(r.exact, Some(6));
    }

    #[test]
    fn complete_intersection_is_sharp() {
        let ci = Ideal::from_supports(4, &[&[1, 2], &[3, 4]]).unwrap();
        let r = report(&ci, None, &[]);
        assert_eq!((r.mu, r.nu, r.tau, r.h), (2, 1, 2, 2));
        assert_eq!(r.prop1_upper.value, 2);
        assert_eq!(r.cor1_upper.value, 2);
        assert_eq!(r.lower_height, 2);
        assert_eq!(r.exact, Some(2));
        assert_eq!(r.lyubeznik_upper.status, BoundStatus::Proven);
    }

    #[test]
    fn complete_intersection_detection() {
        let check = |n: usize, gens: &[&[usize]]| {
            let i = Ideal::from_supports(n, gens).unwrap();
            is_complete_intersection(&i, &minimal_primes(&i))
        };
        assert!(check(4, &[&[1, 2], &[3, 4]]));
        assert!(!check(9, &[&[1, 2], &[1, 3], &[2, 4], &[4, 5], &[4, 6], &[2, 7], &[6, 8], &[6, 9]]));
        assert!(check(2, &[&[1], &[2]]));
    }

    #[test]
    fn conjectural_bound_never_certifies() {
        // tau = 5 and mu >= n: Lyubeznik would be the only bound below mu.
        let r = report(&example1(), None, &[]);
        assert!(!r.lyubeznik_upper.usable());
        assert_eq!(r.best_upper, 6);
        assert_eq!(r.exact, None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(64, 32).to_string(), "1832624140942590534");
    }

    #[test]
    fn report_json_round_trip() {
        let r = report(&example1(), Some(5), &[(Method::Prop1, 6), (Method::Search, 5)]);
        let text = serde_json::to_string(&r).unwrap();
        let back: BoundsReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
    }
}
