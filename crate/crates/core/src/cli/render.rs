//! Plain-text renderings.

use std::fmt::Write as _;

use crate::analysis::{Analysis, Construction};
use crate::bounds::{BoundEntry, BoundStatus, BoundsReport};
use crate::hochster::PdResult;
use crate::monomial::Ideal;
use crate::sv::{verify_partition, Certificate, SvPartition};

fn set(indices: &[usize]) -> String {
    let vars: Vec<String> = indices.iter().map(|i| format!("x{i}")).collect();
    format!("{{{}}}", vars.join(", "))
}

fn status(entry: &BoundEntry) -> &'static str {
    match (entry.applicable, entry.status) {
        (false, _) => "not applicable",
        (true, BoundStatus::Proven) => "proven",
        (true, BoundStatus::Conjectural) => "conjectural",
    }
}

pub fn analysis(a: &Analysis, name: Option<&str>) -> String {
    let mut out = String::new();
    let w = &mut out;
    match name {
        Some(name) => writeln!(w, "ideal {name}: {}", a.ideal),
        None => writeln!(w, "ideal: {}", a.ideal),
    }
    .unwrap();
    writeln!(w, "n = {}, mu = {}", a.ideal.n(), a.ideal.mu()).unwrap();
    let mult: Vec<String> = a
        .profile
        .multiplicities
        .iter()
        .enumerate()
        .map(|(i, m)| format!("x{}:{m}", i + 1))
        .collect();
    writeln!(w, "|M_i|: {}", mult.join(" ")).unwrap();

    let d = &a.decomposition;
    writeln!(
        w,
        "minimal primes: r = {}, h = {}, tau = {}, unmixed = {}",
        d.r(),
        d.h(),
        d.tau(),
        if d.pure() { "yes" } else { "no" }
    )
    .unwrap();
    for (j, p) in d.primes().iter().enumerate() {
        writeln!(
            w,
            "  P{:<3} {:<28} nu = {}  witness x{}",
            j + 1,
            p.to_string(),
            a.profile.nu_j[j],
            a.profile.witnesses[j]
        )
        .unwrap();
    }
    writeln!(w, "nu = {}", a.profile.nu).unwrap();
    writeln!(w).unwrap();
    out.push_str(&bounds(&a.report));

    if let Some(pd) = &a.pd {
        writeln!(out, "pd(R/I) = {} (sigma = {}, homology degree {})", pd.pd, set(&pd.sigma), pd.homology_degree)
            .unwrap();
    }
    writeln!(out).unwrap();
    for c in &a.constructions {
        out.push_str(&construction(c));
    }
    if !a.notes.is_empty() {
        writeln!(out, "notes:").unwrap();
        for note in &a.notes {
            writeln!(out, "  {note}").unwrap();
        }
    }
    out
}

pub fn bounds(r: &BoundsReport) -> String {
    let mut out = String::new();
    writeln!(out, "upper bounds:").unwrap();
    for (label, entry) in r.formula_bounds() {
        writeln!(out, "  {label:<14} {:>5}  {:<10} {}", entry.value, entry.exact.to_string(), status(entry)).unwrap();
    }
    for (method, entry) in &r.certificate_uppers {
        writeln!(out, "  {:<14} {:>5}  {:<10} certificate", method.to_string(), entry.value, "").unwrap();
    }
    let pd = r.lower_pd.map_or("not computed".to_string(), |p| p.to_string());
    writeln!(out, "lower bounds: height {}, pd {pd}", r.lower_height).unwrap();
    match r.exact {
        Some(e) => writeln!(out, "ara = {e}"),
        None => writeln!(out, "ara in [{}, {}]", r.best_lower, r.best_upper),
    }
    .unwrap();
    out
}

pub fn certificate(c: &Certificate) -> String {
    let mut out = String::new();
    for (i, q) in c.q.iter().enumerate() {
        writeln!(out, "    q{i} = {q}").unwrap();
    }
    out
}

pub fn construction(c: &Construction) -> String {
    let verdict = match verify_partition(&c.partition) {
        Ok(()) => "verified".to_string(),
        Err(v) => format!("FAILED: {v}"),
    };
    let optimal = if c.optimal { "" } else { ", budget exhausted" };
    let mut out = format!(
        "certificate {} ({} polynomials, {verdict}{optimal}):\n",
        c.method(),
        c.certificate.count()
    );
    out.push_str(&certificate(&c.certificate));
    out
}

pub fn partition_summary(p: &SvPartition) -> String {
    let mut out = String::new();
    for (i, part) in p.parts().iter().enumerate() {
        let ms: Vec<String> = part.iter().map(ToString::to_string).collect();
        writeln!(out, "    P{i} = [{}]", ms.join(", ")).unwrap();
    }
    out
}

pub fn pd(ideal: &Ideal, r: &PdResult) -> String {
    format!(
        "ideal: {ideal}\npd(R/I) = {}\nsigma = {}\nhomology degree = {}\ncharacteristic = {}\n",
        r.pd,
        set(&r.sigma),
        r.homology_degree,
        r.characteristic
    )
}
