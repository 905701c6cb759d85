//! One-stop analysis: invariants, all constructions, `pd` and the bounds report.

use crate::bounds::{bounds_report, BoundsReport};
use crate::error::Error;
use crate::hochster::{projective_dimension, PdResult};
use crate::monomial::Ideal;
use crate::primes::{minimal_primes, nu_profile, NuProfile, PrimeDecomposition};
use crate::sv::{
    construct_lcm_iteration, construct_prop1, default_lcm_steps, search_min_partition,
    Certificate, LcmTrace, Method, SearchOutcome, SvPartition, DEFAULT_SEARCH_BUDGET,
    SEARCH_MAX_GENS,
};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub pd: bool,
    pub search: bool,
    pub search_budget: u64,
    pub prune: bool,
    /// Step cap for the lcm iteration; `mu + n` when unset.
    pub lcm_steps: Option<usize>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            pd: true,
            search: true,
            search_budget: DEFAULT_SEARCH_BUDGET,
            prune: true,
            lcm_steps: None,
        }
    }
}

/// A construction that produced a verified certificate.
#[derive(Clone, Debug)]
pub struct Construction {
    pub partition: SvPartition,
    pub certificate: Certificate,
    /// `false` only for a search that ran out of budget.
    pub optimal: bool,
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub ideal: Ideal,
    pub decomposition: PrimeDecomposition,
    pub profile: NuProfile,
    pub constructions: Vec<Construction>,
    pub lcm_trace: Option<LcmTrace>,
    pub pd: Option<PdResult>,
    pub report: BoundsReport,
    /// Steps that were skipped or failed, e.g. a size guard or budget.
    pub notes: Vec<String>,
    /// Whether any step hit a guard or a budget.
    pub limited: bool,
}

pub fn analyze(ideal: &Ideal, options: &AnalyzeOptions) -> Analysis {
    let decomposition = minimal_primes(ideal);
    let profile = nu_profile(ideal, &decomposition);
    let mut notes = Notes::default();

    let mut constructions = Vec::new();
    match construct_prop1(ideal, options.prune) {
        Ok((partition, certificate)) => {
            constructions.push(Construction { partition, certificate, optimal: true })
        }
        Err(e) => notes.failed("prop1", e),
    }

    let steps = options.lcm_steps.unwrap_or_else(|| default_lcm_steps(ideal));
    let mut lcm_trace = None;
    match construct_lcm_iteration(ideal, steps) {
        Ok((partition, certificate, trace)) => {
            constructions.push(Construction { partition, certificate, optimal: true });
            lcm_trace = Some(trace);
        }
        Err(e) => notes.failed("lcm_iteration", e),
    }

    if options.search {
        if ideal.mu() > SEARCH_MAX_GENS {
            notes.lines.push(format!(
                "search: skipped, mu = {} exceeds {SEARCH_MAX_GENS}",
                ideal.mu()
            ));
        } else {
            match search_min_partition(ideal, options.search_budget) {
                Ok(SearchOutcome { partition, certificate, optimal, .. }) => {
                    if !optimal {
                        notes.lines.push("search: budget exhausted, result is an upper bound only".into());
                        notes.limited = true;
                    }
                    constructions.push(Construction { partition, certificate, optimal });
                }
                Err(e) => notes.failed("search", e),
            }
        }
    }

    let pd = if options.pd {
        match projective_dimension(ideal) {
            Ok(r) => Some(r),
            Err(e) => {
                notes.failed("pd", e);
                None
            }
        }
    } else {
        None
    };

    let sizes: Vec<(Method, usize)> = constructions
        .iter()
        .map(|c| (c.method(), c.certificate.count()))
        .collect();
    let report = bounds_report(ideal, &decomposition, &profile, pd.as_ref().map(|p| p.pd), &sizes);
    Analysis {
        ideal: ideal.clone(),
        decomposition,
        profile,
        constructions,
        lcm_trace,
        pd,
        report,
        notes: notes.lines,
        limited: notes.limited,
    }
}

#[derive(Default)]
struct Notes {
    lines: Vec<String>,
    limited: bool,
}

impl Notes {
    fn failed(&mut self, what: &str, e: Error) {
        self.limited |= matches!(e, Error::Budget(_) | Error::TooLarge { .. });
        self.lines.push(format!("{what}: {e}"));
    }
}

impl Construction {
    /// The search may fall back to another construction's partition; its
    /// certificate still counts as the search result.
    pub fn method(&self) -> Method {
        if self.optimal {
            self.certificate.method
        } else {
            Method::Search
        }
    }
}

impl Analysis {
    pub fn construction(&self, method: Method) -> Option<&Construction> {
        self.constructions.iter().find(|c| c.method() == method)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example1;

    #[test]
    fn example1_concludes_exact_rank() {
        let a = analyze(&example1(), &AnalyzeOptions::default());
        assert_eq!(a.report.exact, Some(5));
        assert_eq!(a.construction(Method::Search).unwrap().certificate.count(), 5);
        assert_eq!(a.construction(Method::Prop1).unwrap().certificate.count(), 6);
        assert_eq!(a.construction(Method::LcmIteration).unwrap().certificate.count(), 6);
        assert!(a.notes.is_empty());
    }

    #[test]
    fn skipping_pd_and_search_leaves_interval_open() {
        let options = AnalyzeOptions { pd: false, search: false, ..AnalyzeOptions::default() };
        let a = analyze(&example1(), &options);
        assert_eq!((a.report.best_lower, a.report.best_upper), (4, 6));
        assert_eq!(a.report.exact, None);
    }
}
