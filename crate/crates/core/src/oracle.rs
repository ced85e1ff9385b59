//! Exhaustive certification of the winner algorithms on small instances.
//!
//! Every candidate committee is scored with [`committee_score`], which
//! evaluates the objective from its definition, and the optimum is compared
//! against what the polynomial-time path returns.

use std::fmt;

use itertools::Itertools;

use crate::committee::Committee;
use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::rules::{committee_score, CandidateScorer, Decomposition, RuleId};
use crate::score::ExactScore;
use crate::winners::{winners_any_size_with, winners_fixed_k_with, TiePolicy, WinnersResult};

/// Largest roster the oracle will enumerate (2^20 subsets).
pub const MAX_ORACLE_CANDIDATES: usize = 20;

/// Committee size requested from the oracle or the winner algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SizeSpec {
    Fixed(usize),
    Any,
}

impl fmt::Display for SizeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeSpec::Fixed(k) => write!(f, "{k}"),
            SizeSpec::Any => f.write_str("any"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub rule: RuleId,
    pub size: SizeSpec,
    pub optimal_score: ExactScore,
    /// Lexicographically ordered; all share `optimal_score`.
    pub optimal_committees: Vec<Committee>,
    pub subsets_evaluated: u64,
}

fn guard(profile: &Profile) -> Result<()> {
    let m = profile.num_candidates();
    if m > MAX_ORACLE_CANDIDATES {
        return Err(Error::EnumerationTooLarge {
            candidates: m,
            limit: MAX_ORACLE_CANDIDATES,
        });
    }
    Ok(())
}

/// Running maximum with all attaining committees.
struct Best {
    score: Option<ExactScore>,
    committees: Vec<Committee>,
    evaluated: u64,
}

impl Best {
    fn new() -> Self {
        Best {
            score: None,
            committees: Vec::new(),
            evaluated: 0,
        }
    }

    fn offer(&mut self, committee: Committee, score: ExactScore) {
        self.evaluated += 1;
        match &self.score {
            Some(top) if score < *top => {}
            Some(top) if score == *top => self.committees.push(committee),
            _ => {
                self.score = Some(score);
                self.committees = vec![committee];
            }
        }
    }

    fn scan_size(&mut self, profile: &Profile, rule: RuleId, k: usize) -> Result<()> {
        for members in (0..profile.num_candidates()).combinations(k) {
            let committee = Committee::from_sorted_unchecked(members);
            let score = committee_score(profile, rule, &committee)?;
            self.offer(committee, score);
        }
        Ok(())
    }

    fn into_report(mut self, rule: RuleId, size: SizeSpec) -> OracleReport {
        self.committees.sort();
        OracleReport {
            rule,
            size,
            optimal_score: self.score.expect("at least one subset was evaluated"),
            optimal_committees: self.committees,
            subsets_evaluated: self.evaluated,
        }
    }
}

/// Scores all `C(m, k)` committees of size `k`, in lexicographic order.
pub fn oracle_fixed_k(profile: &Profile, rule: RuleId, k: usize) -> Result<OracleReport> {
    guard(profile)?;
    profile.check_size(k)?;
    let mut best = Best::new();
    best.scan_size(profile, rule, k)?;
    Ok(best.into_report(rule, SizeSpec::Fixed(k)))
}

/// Scores all `2^m - 1` non-empty committees.
pub fn oracle_any_size(profile: &Profile, rule: RuleId) -> Result<OracleReport> {
    guard(profile)?;
    let mut best = Best::new();
    for k in 1..=profile.num_candidates() {
        best.scan_size(profile, rule, k)?;
    }
    Ok(best.into_report(rule, SizeSpec::Any))
}

pub fn oracle(profile: &Profile, rule: RuleId, size: SizeSpec) -> Result<OracleReport> {
    match size {
        SizeSpec::Fixed(k) => oracle_fixed_k(profile, rule, k),
        SizeSpec::Any => oracle_any_size(profile, rule),
    }
}

/// Outcome of comparing the fast path with the exhaustive optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub report: OracleReport,
    /// The fast path's result under [`TiePolicy::Lexicographic`].
    pub winner: WinnersResult,
    /// Human-readable descriptions; empty when both paths agree.
    pub discrepancies: Vec<String>,
}

impl CheckOutcome {
    pub fn agrees(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Certifies the winner algorithms for one rule and size.
pub fn equivalence_check(profile: &Profile, rule: RuleId, size: SizeSpec) -> Result<CheckOutcome> {
    equivalence_check_with(&Decomposition, profile, rule, size)
}

/// As [`equivalence_check`], with the fast path driven by `scorer`.
///
/// Agreement requires the fast path's score to equal the exhaustive optimum
/// exactly, its lexicographic committee to be one of the optimal committees,
/// and its full enumeration to match the optimal committees of the same size.
pub fn equivalence_check_with(
    scorer: &dyn CandidateScorer,
    profile: &Profile,
    rule: RuleId,
    size: SizeSpec,
) -> Result<CheckOutcome> {
    let report = oracle(profile, rule, size)?;
    let run = |tie| match size {
        SizeSpec::Fixed(k) => winners_fixed_k_with(scorer, profile, rule, k, tie),
        SizeSpec::Any => winners_any_size_with(scorer, profile, rule, tie),
    };
    let names = |committees: &[Committee]| {
        committees
            .iter()
            .map(|c| c.display(profile).to_string())
            .join(" ")
    };

    let mut discrepancies = Vec::new();

    let winner = run(TiePolicy::Lexicographic)?;
    let chosen = winner.committee();
    if winner.score() != &report.optimal_score {
        discrepancies.push(format!(
            "{rule} k={size}: committee {} scored {} by the fast path, exhaustive optimum is {} (attained by {})",
            chosen.display(profile),
            winner.score(),
            report.optimal_score,
            names(&report.optimal_committees),
        ));
    }
    if report.optimal_committees.binary_search(chosen).is_err() {
        discrepancies.push(format!(
            "{rule} k={size}: committee {} is not optimal; its definitional score is {}, exhaustive optimum is {}",
            chosen.display(profile),
            committee_score(profile, rule, chosen)?,
            report.optimal_score,
        ));
    }

    let cap = report.optimal_committees.len().max(1);
    let all = run(TiePolicy::enumerate_up_to(cap).expect("cap is positive"))?;
    let expected: Vec<Committee> = report
        .optimal_committees
        .iter()
        .filter(|c| c.len() == all.size())
        .cloned()
        .collect();
    if all.truncated() || all.committees() != expected.as_slice() {
        discrepancies.push(format!(
            "{rule} k={size}: fast path enumerates {}{} at size {}, exhaustive search finds {}",
            names(all.committees()),
            if all.truncated() { " (and more)" } else { "" },
            all.size(),
            if expected.is_empty() {
                "none".to_string()
            } else {
                names(&expected)
            },
        ));
    }

    Ok(CheckOutcome {
        report,
        winner,
        discrepancies,
    })
}
