//! Polynomial-time winner selection.
//!
//! A best committee of size `k` is any `k` candidates with the highest
//! candidate scores for that `k` (see [`crate::rules`]). The unconstrained
//! problem runs the fixed-size algorithm for every `k` in `1..=m` and keeps
//! the best.

use std::num::NonZeroUsize;

use itertools::Itertools;

use crate::committee::Committee;
use crate::error::Result;
use crate::profile::Profile;
use crate::rules::{score_table_with, CandidateScorer, Decomposition, RuleId};
use crate::score::ExactScore;

/// How co-optimal committees are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TiePolicy {
    /// One committee; equal candidate scores favour the lower roster index.
    #[default]
    Lexicographic,
    /// Every optimal committee in lexicographic order, at most `cap` of them.
    EnumerateAll { cap: NonZeroUsize },
}

impl TiePolicy {
    pub const DEFAULT_CAP: NonZeroUsize = match NonZeroUsize::new(1000) {
        Some(cap) => cap,
        None => unreachable!(),
    };

    pub fn enumerate_all() -> Self {
        TiePolicy::EnumerateAll {
            cap: Self::DEFAULT_CAP,
        }
    }

    /// `None` when `cap` is zero.
    pub fn enumerate_up_to(cap: usize) -> Option<Self> {
        NonZeroUsize::new(cap).map(|cap| TiePolicy::EnumerateAll { cap })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinnersResult {
    rule: RuleId,
    committees: Vec<Committee>,
    size: usize,
    score: ExactScore,
    truncated: bool,
}

impl WinnersResult {
    pub fn rule(&self) -> RuleId {
        self.rule
    }

    /// Non-empty; a single committee under [`TiePolicy::Lexicographic`].
    pub fn committees(&self) -> &[Committee] {
        &self.committees
    }

    /// The first (lexicographically smallest) committee.
    pub fn committee(&self) -> &Committee {
        &self.committees[0]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn score(&self) -> &ExactScore {
        &self.score
    }

    /// True when enumeration stopped at its cap.
    pub fn truncated(&self) -> bool {
        self.truncated
    }
}

pub fn winners_fixed_k(
    profile: &Profile,
    rule: RuleId,
    k: usize,
    tie: TiePolicy,
) -> Result<WinnersResult> {
    winners_fixed_k_with(&Decomposition, profile, rule, k, tie)
}

pub fn winners_fixed_k_with(
    scorer: &dyn CandidateScorer,
    profile: &Profile,
    rule: RuleId,
    k: usize,
    tie: TiePolicy,
) -> Result<WinnersResult> {
    let table = score_table_with(scorer, profile, rule, k)?;
    let score: ExactScore = table[..k].iter().map(|(_, s)| s).sum();

    let (committees, truncated) = match tie {
        TiePolicy::Lexicographic => {
            let members = table[..k]
                .iter()
                .map(|&(c, _)| c)
                .sorted_unstable()
                .collect();
            (vec![Committee::from_sorted_unchecked(members)], false)
        }
        TiePolicy::EnumerateAll { cap } => enumerate_optimal(&table, k, cap.get()),
    };

    Ok(WinnersResult {
        rule,
        committees,
        size: k,
        score,
        truncated,
    })
}

/// All top-`k` selections of a table in selection order: candidates strictly
/// above the `k`-th score are mandatory and the remaining seats go to every
/// combination of candidates tied at that score.
fn enumerate_optimal(
    table: &[(usize, ExactScore)],
    k: usize,
    cap: usize,
) -> (Vec<Committee>, bool) {
    let threshold = &table[k - 1].1;
    let mandatory: Vec<usize> = table
        .iter()
        .take_while(|(_, s)| s > threshold)
        .map(|&(c, _)| c)
        .collect();
    // Selection order puts equal scores in ascending index order.
    let tied: Vec<usize> = table[mandatory.len()..]
        .iter()
        .take_while(|(_, s)| s == threshold)
        .map(|&(c, _)| c)
        .collect();
    let open_seats = k - mandatory.len();

    // Merging a fixed mandatory set into tied combinations taken in
    // lexicographic order yields committees in lexicographic order.
    let mut committees: Vec<Committee> = tied
        .into_iter()
        .combinations(open_seats)
        .take(cap.saturating_add(1))
        .map(|chosen| {
            let members = mandatory
                .iter()
                .copied()
                .chain(chosen)
                .sorted_unstable()
                .collect();
            Committee::from_sorted_unchecked(members)
        })
        .collect();
    let truncated = committees.len() > cap;
    committees.truncate(cap);
    debug_assert!(committees.windows(2).all(|w| w[0] < w[1]));
    (committees, truncated)
}

/// The best committee over all sizes.
///
/// When several sizes reach the maximum, CSAV and MSAV return the smallest
/// such size. AV and SAV never lose score by adding a candidate, so they
/// return the full roster.
pub fn winners_any_size(profile: &Profile, rule: RuleId, tie: TiePolicy) -> Result<WinnersResult> {
    winners_any_size_with(&Decomposition, profile, rule, tie)
}

pub fn winners_any_size_with(
    scorer: &dyn CandidateScorer,
    profile: &Profile,
    rule: RuleId,
    tie: TiePolicy,
) -> Result<WinnersResult> {
    let m = profile.num_candidates();
    let mut best: Option<(usize, ExactScore)> = None;
    for k in 1..=m {
        let table = score_table_with(scorer, profile, rule, k)?;
        let score: ExactScore = table[..k].iter().map(|(_, s)| s).sum();
        let better = match &best {
            None => true,
            Some((_, top)) if rule.is_monotone() => score >= *top,
            Some((_, top)) => score > *top,
        };
        if better {
            best = Some((k, score));
        }
    }
    let (k, _) = best.expect("a profile has at least one candidate");
    debug_assert!(
        !rule.is_monotone() || k == m,
        "{rule} objective peaked below the full roster"
    );
    winners_fixed_k_with(scorer, profile, rule, k, tie)
}
