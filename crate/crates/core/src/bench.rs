//! Bound comparisons over a corpus of small ideals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze, AnalyzeOptions};
use crate::monomial::Ideal;
use crate::random::{all_ideals_up_to_symmetry, seeded_ideals};
use crate::sv::Method;

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub seed: u64,
    /// Random samples for each `n` in `7..=9`.
    pub samples: usize,
    /// Include every ideal with `n <= exhaustive_max_n` up to symmetry.
    pub exhaustive_max_n: usize,
    pub max_gens: usize,
    pub search_budget: u64,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions { seed: 1, samples: 10, exhaustive_max_n: 5, max_gens: 8, search_budget: 2_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub label: String,
    pub ideal: String,
    pub n: usize,
    pub mu: usize,
    pub h: usize,
    pub tau: usize,
    pub nu: usize,
    pub trivial: i64,
    pub cor1: i64,
    pub prop1: i64,
    pub lyubeznik: i64,
    pub cert_prop1: Option<usize>,
    pub cert_lcm: Option<usize>,
    pub cert_search: Option<usize>,
    pub search_optimal: bool,
    pub pd: Option<usize>,
    pub best_lower: usize,
    pub best_upper: usize,
    pub exact: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub ideals: usize,
    pub exact_certified: usize,
    pub prop1_below_cor1: usize,
    pub prop1_below_lyubeznik: usize,
    pub lcm_below_prop1: usize,
    pub prop1_below_lcm: usize,
    pub search_below_both: usize,
    /// Certified `ara` above the Lyubeznik value: would refute the conjecture.
    pub lyubeznik_exceeded: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema: u32,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
    pub summary: BenchSummary,
}

pub fn corpus(options: &BenchOptions) -> Vec<(String, Ideal)> {
    let mut out = Vec::new();
    for n in 1..=options.exhaustive_max_n {
        for (k, ideal) in all_ideals_up_to_symmetry(n).into_iter().enumerate() {
            out.push((format!("n{n}#{k}"), ideal));
        }
    }
    for n in 7..=9 {
        let seed = options.seed.wrapping_mul(31).wrapping_add(n as u64);
        for (k, ideal) in seeded_ideals(seed, options.samples, n..=n, options.max_gens).into_iter().enumerate() {
            out.push((format!("rand{n}#{k}"), ideal));
        }
    }
    out
}

pub fn run_bench(options: &BenchOptions) -> BenchReport {
    let analyze_options = AnalyzeOptions { search_budget: options.search_budget, ..AnalyzeOptions::default() };
    let mut rows = Vec::new();
    let mut summary = BenchSummary::default();
    for (label, ideal) in corpus(options) {
        let a = analyze(&ideal, &analyze_options);
        let r = &a.report;
        let cert = |m: Method| a.construction(m).map(|c| c.certificate.count());
        let row = BenchRow {
            label,
            ideal: ideal.to_string(),
            n: r.n,
            mu: r.mu,
            h: r.h,
            tau: r.tau,
            nu: r.nu,
            trivial: r.trivial_upper.value,
            cor1: r.cor1_upper.value,
            prop1: r.prop1_upper.value,
            lyubeznik: r.lyubeznik_upper.value,
            cert_prop1: cert(Method::Prop1),
            cert_lcm: cert(Method::LcmIteration),
            cert_search: cert(Method::Search),
            search_optimal: a.construction(Method::Search).is_some_and(|c| c.optimal),
            pd: r.lower_pd,
            best_lower: r.best_lower,
            best_upper: r.best_upper,
            exact: r.exact,
        };
        tally(&mut summary, &row);
        rows.push(row);
    }
    BenchReport { schema: 1, seed: options.seed, rows, summary }
}

fn tally(s: &mut BenchSummary, row: &BenchRow) {
    s.ideals += 1;
    s.exact_certified += usize::from(row.exact.is_some());
    s.prop1_below_cor1 += usize::from(row.prop1 < row.cor1);
    s.prop1_below_lyubeznik += usize::from(row.prop1 < row.lyubeznik);
    if let (Some(p), Some(l)) = (row.cert_prop1, row.cert_lcm) {
        s.lcm_below_prop1 += usize::from(l < p);
        s.prop1_below_lcm += usize::from(p < l);
        if let Some(q) = row.cert_search {
            s.search_below_both += usize::from(q < p.min(l));
        }
    }
    if let Some(e) = row.exact {
        s.lyubeznik_exceeded += usize::from(e as i64 > row.lyubeznik);
    }
}

pub fn render_text(report: &BenchReport) -> String {
    let mut out = String::new();
    let dash = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    writeln!(
        out,
        "{:<10} {:>2} {:>3} {:>2} {:>3} {:>2} {:>4} {:>4} {:>5} {:>4} {:>5} {:>4} {:>6} {:>3} {:>7}",
        "label", "n", "mu", "h", "tau", "nu", "triv", "cor1", "prop1", "lyub", "c:p1", "c:lcm", "c:srch", "pd", "ara"
    )
    .unwrap();
    for r in &report.rows {
        let ara = match r.exact {
            Some(e) => e.to_string(),
            None => format!("[{},{}]", r.best_lower, r.best_upper),
        };
        let search = match (r.cert_search, r.search_optimal) {
            (Some(v), false) => format!("<={v}"),
            (v, _) => dash(v),
        };
        writeln!(
            out,
            "{:<10} {:>2} {:>3} {:>2} {:>3} {:>2} {:>4} {:>4} {:>5} {:>4} {:>5} {:>4} {:>6} {:>3} {:>7}",
            r.label,
            r.n,
            r.mu,
            r.h,
            r.tau,
            r.nu,
            r.trivial,
            r.cor1,
            r.prop1,
            r.lyubeznik,
            dash(r.cert_prop1),
            dash(r.cert_lcm),
            search,
            dash(r.pd),
            ara
        )
        .unwrap();
    }
    let s = &report.summary;
    writeln!(out).unwrap();
    writeln!(out, "ideals:                    {}", s.ideals).unwrap();
    writeln!(out, "exact ara certified:       {}", s.exact_certified).unwrap();
    writeln!(out, "prop1 < cor1:              {}", s.prop1_below_cor1).unwrap();
    writeln!(out, "prop1 < lyubeznik:         {}", s.prop1_below_lyubeznik).unwrap();
    writeln!(out, "lcm cert < prop1 cert:     {}", s.lcm_below_prop1).unwrap();
    writeln!(out, "prop1 cert < lcm cert:     {}", s.prop1_below_lcm).unwrap();
    writeln!(out, "search < both:             {}", s.search_below_both).unwrap();
    writeln!(out, "certified ara > lyubeznik: {}", s.lyubeznik_exceeded).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bench_is_deterministic() {
        let options = BenchOptions { samples: 2, exhaustive_max_n: 3, ..BenchOptions::default() };
        let a = run_bench(&options);
        let b = run_bench(&options);
        assert_eq!(a, b);
        assert_eq!(a.summary.ideals, 1 + 3 + 8 + 6);
        assert_eq!(a.summary.lyubeznik_exceeded, 0);
        assert!(render_text(&a).contains("exact ara certified"));
    }
}
