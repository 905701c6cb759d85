//! Checks shared by the property suite and the acceptance runner.

use sqfree_ara::bounds::bounds_report;
use sqfree_ara::hochster::projective_dimension;
use sqfree_ara::monomial::same_monomial_ideal;
use sqfree_ara::primes::{minimal_primes, nu_profile};
use sqfree_ara::random::seeded_ideals;
use sqfree_ara::sv::{
    construct_lcm_iteration, construct_prop1, default_lcm_steps, search_min_partition,
    verify_partition, Certificate, LcmTrace, Method, SvPartition,
};
use sqfree_ara::Ideal;

pub fn property_corpus() -> Vec<Ideal> {
    seeded_ideals(20_240_601, 500, 1..=8, 8)
}

pub fn oracle_corpus() -> Vec<Ideal> {
    let mut ideals = seeded_ideals(77, 250, 1..=7, 8);
    ideals.push(sqfree_ara::fixtures::example1());
    ideals.push(sqfree_ara::fixtures::example2());
    ideals
}

const BUDGET: u64 = 5_000_000;

fn check_certificate(ideal: &Ideal, partition: &SvPartition, certificate: &Certificate) -> Result<(), String> {
    verify_partition(partition).map_err(|v| format!("{}: {v}", certificate.method))?;
    if certificate.count() != partition.len() {
        return Err("certificate length differs from partition length".into());
    }
    for q in &certificate.q {
        for t in q.terms() {
            if !ideal.contains_monomial(t).unwrap() {
                return Err(format!("term {t} of {q} is outside {ideal}"));
            }
        }
    }
    let union: Vec<_> = partition.monomials().cloned().collect();
    if !same_monomial_ideal(&union, ideal.gens()) {
        return Err(format!("parts of {} do not generate {ideal}", certificate.method));
    }
    Ok(())
}

/// Products within each part are covered by the part directly before it.
fn check_adjacent_layers(partition: &SvPartition) -> Result<(), String> {
    for (i, part) in partition.parts().iter().enumerate().skip(1) {
        let before = &partition.parts()[i - 1];
        for (a, p) in part.iter().enumerate() {
            for q in &part[a + 1..] {
                let pq = p.mul(q).unwrap();
                if !before.iter().any(|d| d.divides(&pq).unwrap()) {
                    return Err(format!("prop1: ({p})*({q}) in P_{i} not covered by P_{}", i - 1));
                }
            }
        }
    }
    Ok(())
}

fn check_trace(ideal: &Ideal, trace: &LcmTrace) -> Result<(), String> {
    let top = ideal.lcm_all();
    if trace.gammas.first().map(Vec::as_slice) != Some(ideal.gens()) {
        return Err("lcm trace does not start at the generators".into());
    }
    for g in trace.gammas.iter().flatten() {
        if !g.is_squarefree() || !g.divides(&top).unwrap() {
            return Err(format!("lcm trace element {g} is not a squarefree divisor of {top}"));
        }
    }
    let last = trace.gammas.last().unwrap();
    if !ideal.contains_monomial(&trace.p0).unwrap() || !last.iter().all(|g| trace.p0.divides(g).unwrap()) {
        return Err(format!("lcm p0 = {} fails its stop condition", trace.p0));
    }
    Ok(())
}

pub fn check_ideal(ideal: &Ideal) -> Result<(), String> {
    let d = minimal_primes(ideal);
    let profile = nu_profile(ideal, &d);
    let (mu, nu, tau, h) = (ideal.mu(), profile.nu, d.tau(), d.h());
    if nu > mu || mu > nu * tau {
        return Err(format!("nu = {nu}, mu = {mu}, tau = {tau}"));
    }

    let mut sizes = Vec::new();
    let mut prop1_sizes = Vec::new();
    for prune in [true, false] {
        let (p, c) = construct_prop1(ideal, prune).map_err(|e| e.to_string())?;
        check_certificate(ideal, &p, &c)?;
        check_adjacent_layers(&p)?;
        if c.count() != mu - nu + 1 {
            return Err(format!("prop1 gave {} polynomials, expected {}", c.count(), mu - nu + 1));
        }
        prop1_sizes.push(c.count());
    }
    if prop1_sizes[0] != prop1_sizes[1] {
        return Err("pruning changed the prop1 count".into());
    }
    sizes.push((Method::Prop1, prop1_sizes[0]));

    let (p, c, trace) = construct_lcm_iteration(ideal, default_lcm_steps(ideal)).map_err(|e| e.to_string())?;
    check_certificate(ideal, &p, &c)?;
    check_trace(ideal, &trace)?;
    if trace.steps() > mu + ideal.n() {
        return Err(format!("lcm iteration took {} steps", trace.steps()));
    }
    sizes.push((Method::LcmIteration, c.count()));

    let outcome = search_min_partition(ideal, BUDGET).map_err(|e| e.to_string())?;
    check_certificate(ideal, &outcome.partition, &outcome.certificate)?;
    if outcome.optimal && outcome.certificate.count() > sizes.iter().map(|s| s.1).min().unwrap() {
        return Err("optimal search is worse than a construction".into());
    }
    if outcome.certificate.count() > mu {
        return Err(format!("search used {} parts for {mu} generators", outcome.certificate.count()));
    }
    sizes.push((Method::Search, outcome.certificate.count()));

    let pd = projective_dimension(ideal).map_err(|e| e.to_string())?.pd;
    if pd < tau || pd < h {
        return Err(format!("pd = {pd} below tau = {tau} or h = {h}"));
    }
    if let Some((m, s)) = sizes.iter().find(|(_, s)| *s < pd || *s < h) {
        return Err(format!("{m} certificate of size {s} beats the lower bound pd = {pd}"));
    }

    let r = bounds_report(ideal, &d, &profile, Some(pd), &sizes);
    if !(r.prop1_upper.exact <= r.cor1_upper.exact && r.cor1_upper.exact <= r.trivial_upper.exact) {
        return Err(format!(
            "prop1 {} cor1 {} trivial {}",
            r.prop1_upper.exact, r.cor1_upper.exact, r.trivial_upper.exact
        ));
    }
    if mu < ideal.n() && r.cor2_upper.exact > r.lyubeznik_upper.exact {
        return Err(format!("cor2 {} above lyubeznik {}", r.cor2_upper.exact, r.lyubeznik_upper.exact));
    }
    if r.best_lower > r.best_upper {
        return Err("empty ara interval".into());
    }
    Ok(())
}
