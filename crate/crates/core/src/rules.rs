//! The four objectives and their per-candidate decompositions.
//!
//! For a committee `W` with `|W| = k`, each rule's objective splits into a
//! sum over members of a score that depends only on the candidate and `k`:
//!
//! | rule | committee objective            | candidate score w.r.t. `k`         |
//! |------|--------------------------------|------------------------------------|
//! | AV   | `Σ_i |W∩A_i|`                  | `#{i : c ∈ A_i}`                   |
//! | SAV  | `Σ_i |W∩A_i| / |A_i|`          | `Σ_{i : c∈A_i} 1/|A_i|`            |
//! | CSAV | `Σ_i |W∩A_i| / |W|`            | `#{i : c ∈ A_i} / k`               |
//! | MSAV | `Σ_i |W∩A_i| / min(|A_i|,|W|)` | `Σ_{i : c∈A_i} 1/min(|A_i|, k)`    |
//!
//! so the best size-`k` committee is any `k` candidates with the highest
//! candidate scores. [`committee_score`] evaluates the left column directly
//! and never goes through the decomposition.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::committee::Committee;
use crate::error::Result;
use crate::profile::Profile;
use crate::score::ExactScore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    /// Approval Voting.
    Av,
    /// Satisfaction Approval Voting.
    Sav,
    /// Constrained Satisfaction Approval Voting.
    Csav,
    /// Modified Satisfaction Approval Voting.
    Msav,
}

impl RuleId {
    pub const ALL: [RuleId; 4] = [RuleId::Av, RuleId::Sav, RuleId::Csav, RuleId::Msav];

    /// Lower-case identifier used on the command line and in machine output.
    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::Av => "av",
            RuleId::Sav => "sav",
            RuleId::Csav => "csav",
            RuleId::Msav => "msav",
        }
    }

    /// Whether adding a candidate can never lower the committee objective.
    pub fn is_monotone(self) -> bool {
        matches!(self, RuleId::Av | RuleId::Sav)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_str().to_ascii_uppercase())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown rule {0:?} (expected one of av, sav, csav, msav)")]
pub struct UnknownRule(pub String);

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "av" => Ok(RuleId::Av),
            "sav" => Ok(RuleId::Sav),
            "csav" => Ok(RuleId::Csav),
            "msav" => Ok(RuleId::Msav),
            _ => Err(UnknownRule(s.to_string())),
        }
    }
}

/// Number of ballots approving `candidate`.
pub fn approvals_count(profile: &Profile, candidate: usize) -> Result<u64> {
    Ok(profile.support(candidate)?.approvals)
}

/// Source of per-candidate scores for the winner algorithms.
///
/// [`Decomposition`] is the real implementation; the trait exists so the
/// certification tooling can be pointed at a deliberately faulty scorer.
pub trait CandidateScorer: Sync {
    fn candidate_score(
        &self,
        profile: &Profile,
        rule: RuleId,
        k: usize,
        candidate: usize,
    ) -> Result<ExactScore>;
}

/// Per-candidate scores computed from the approval histogram of each
/// candidate, in time proportional to the number of distinct ballot lengths.
#[derive(Debug, Clone, Copy, Default)]
pub struct Decomposition;

impl CandidateScorer for Decomposition {
    fn candidate_score(
        &self,
        profile: &Profile,
        rule: RuleId,
        k: usize,
        candidate: usize,
    ) -> Result<ExactScore> {
        profile.check_size(k)?;
        let support = profile.support(candidate)?;
        let score = match rule {
            RuleId::Av => ExactScore::from_integer(support.approvals),
            RuleId::Csav => ExactScore::ratio(support.approvals, k as u64),
            RuleId::Sav => {
                sum_by_denominator(support.by_ballot_len.iter().map(|&(len, n)| (len, n)))
            }
            RuleId::Msav => sum_by_denominator(
                support
                    .by_ballot_len
                    .iter()
                    .map(|&(len, n)| (len.min(k), n)),
            ),
        };
        Ok(score)
    }
}

/// `Σ count / denominator`, merging equal denominators first.
fn sum_by_denominator(terms: impl Iterator<Item = (usize, u64)>) -> ExactScore {
    let mut grouped: BTreeMap<usize, u64> = BTreeMap::new();
    for (den, count) in terms {
        *grouped.entry(den).or_default() += count;
    }
    grouped
        .into_iter()
        .map(|(den, count)| ExactScore::ratio(BigInt::from(count), BigInt::from(den)))
        .sum()
}

/// Score of a single candidate with respect to committee size `k`.
pub fn candidate_score(
    profile: &Profile,
    rule: RuleId,
    k: usize,
    candidate: usize,
) -> Result<ExactScore> {
    Decomposition.candidate_score(profile, rule, k, candidate)
}

/// The rule's objective evaluated agent by agent from its definition.
pub fn committee_score(
    profile: &Profile,
    rule: RuleId,
    committee: &Committee,
) -> Result<ExactScore> {
    let size = committee.len();
    profile.check_size(size)?;
    let mut member = vec![false; profile.num_candidates()];
    for &c in committee.members() {
        *member.get_mut(c).ok_or(crate::Error::Index {
            index: c,
            candidates: profile.num_candidates(),
        })? = true;
    }

    // Agents sharing a denominator are summed as integers first.
    let mut numerators: BTreeMap<usize, u64> = BTreeMap::new();
    for ballot in profile.ballots() {
        let overlap = ballot.approved().iter().filter(|&&c| member[c]).count() as u64;
        if overlap == 0 {
            continue;
        }
        let den = match rule {
            RuleId::Av => 1,
            RuleId::Sav => ballot.len(),
            RuleId::Csav => size,
            RuleId::Msav => ballot.len().min(size),
        };
        *numerators.entry(den).or_default() += overlap;
    }
    Ok(numerators
        .into_iter()
        .map(|(den, num)| ExactScore::ratio(BigInt::from(num), BigInt::from(den)))
        .sum())
}

/// Selection order: descending score, then ascending roster index.
pub(crate) fn selection_order(a: &(usize, ExactScore), b: &(usize, ExactScore)) -> Ordering {
    b.1.cmp(&a.1).then(a.0.cmp(&b.0))
}

/// Every candidate's score for size `k`, in selection order.
pub fn score_table(profile: &Profile, rule: RuleId, k: usize) -> Result<Vec<(usize, ExactScore)>> {
    score_table_with(&Decomposition, profile, rule, k)
}

pub fn score_table_with(
    scorer: &dyn CandidateScorer,
    profile: &Profile,
    rule: RuleId,
    k: usize,
) -> Result<Vec<(usize, ExactScore)>> {
    profile.check_size(k)?;
    let mut table = (0..profile.num_candidates())
        .map(|c| Ok((c, scorer.candidate_score(profile, rule, k, c)?)))
        .collect::<Result<Vec<_>>>()?;
    table.sort_by(selection_order);
    Ok(table)
}
