mod common;

use common::{check_ideal, oracle_corpus, property_corpus};
use num_bigint::BigInt;
use num_rational::BigRational;
use sqfree_ara::bounds::bounds_report;
use sqfree_ara::fixtures::{example1, example2};
use sqfree_ara::hochster::stanley_reisner;
use sqfree_ara::primes::{brute_force_primes, minimal_primes, nu_profile};
use sqfree_ara::random::seeded_ideals;
use sqfree_ara::VarSet;

#[test]
fn property_suite_on_random_ideals() {
    let ideals = property_corpus();
    assert_eq!(ideals.len(), 500);
    let failures: Vec<String> = ideals
        .iter()
        .filter_map(|i| check_ideal(i).err().map(|e| format!("{i}: {e}")))
        .collect();
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn property_suite_on_examples() {
    check_ideal(&example1()).unwrap();
    check_ideal(&example2()).unwrap();
}

#[test]
fn transversal_search_matches_brute_force() {
    for ideal in &oracle_corpus() {
        let fast = minimal_primes(ideal);
        let slow = brute_force_primes(ideal).unwrap();
        assert_eq!(fast, slow, "{ideal}");
    }
}

#[test]
fn radical_is_intersection_of_primes() {
    for ideal in seeded_ideals(5, 200, 1..=7, 8) {
        let d = minimal_primes(&ideal);
        let n = ideal.n();
        for bits in 0..1u64 << n {
            let s = VarSet::from_bits(n, bits);
            let in_all = d.primes().iter().all(|p| p.intersects(&s));
            assert_eq!(ideal.contains_support(&s), in_all, "{ideal} at {s}");
        }
    }
}

#[test]
fn stanley_reisner_facets_are_prime_complements() {
    for ideal in seeded_ideals(9, 100, 1..=8, 8) {
        let mut from_primes: Vec<VarSet> = minimal_primes(&ideal).primes().iter().map(|p| p.complement()).collect();
        let mut facets = stanley_reisner(&ideal).unwrap().facets().to_vec();
        from_primes.sort();
        facets.sort();
        assert_eq!(facets, from_primes, "{ideal}");
    }
}

#[test]
fn cor1_is_exact_rational() {
    let d = minimal_primes(&example1());
    let p = nu_profile(&example1(), &d);
    let r = bounds_report(&example1(), &d, &p, None, &[]);
    assert_eq!(r.cor1_upper.exact, BigRational::new(BigInt::from(37), BigInt::from(5)));
}
