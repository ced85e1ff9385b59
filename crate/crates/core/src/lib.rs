//! Exact winner computation for approval-based multi-winner voting.
//!
//! Four rules are supported over approval ballots `A_1..A_n` on a roster of
//! `m` candidates:
//!
//! * **AV** maximizes `Σ_i |W∩A_i|`,
//! * **SAV** maximizes `Σ_i |W∩A_i| / |A_i|`,
//! * **CSAV** maximizes `Σ_i |W∩A_i| / |W|`,
//! * **MSAV** maximizes `Σ_i |W∩A_i| / min(|A_i|, |W|)`.
//!
//! Once the committee size is fixed, each objective is a sum of independent
//! per-candidate scores, so winners are found by sorting candidates
//! ([`winners_fixed_k`]). The unconstrained variant tries every size
//! ([`winners_any_size`]). All scores are exact rationals ([`ExactScore`]),
//! and the [`oracle`] module certifies results by exhaustive enumeration.

pub mod committee;
pub mod error;
pub mod gen;
pub mod io;
pub mod oracle;
pub mod profile;
pub mod rules;
pub mod score;
pub mod winners;

pub use committee::Committee;
pub use error::{Error, Result};
pub use gen::{random_profile, CultureSpec};
pub use io::{parse_profile, serialize_profile, serialize_result, OutputFormat, ParseError};
pub use oracle::{
    equivalence_check, equivalence_check_with, oracle_any_size, oracle_fixed_k, CheckOutcome,
    OracleReport, SizeSpec,
};
pub use profile::{Ballot, Candidate, Profile};
pub use rules::{
    approvals_count, candidate_score, committee_score, score_table, score_table_with,
    CandidateScorer, Decomposition, RuleId,
};
pub use score::ExactScore;
pub use winners::{
    winners_any_size, winners_any_size_with, winners_fixed_k, winners_fixed_k_with, TiePolicy,
    WinnersResult,
};
