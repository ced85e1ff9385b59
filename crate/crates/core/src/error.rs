use thiserror::Error;

/// Errors raised by profile construction and the rule operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("candidate index {index} is out of range for {candidates} candidate(s)")]
    Index { index: usize, candidates: usize },

    #[error("committee size k={k} is out of range 1..={candidates} (m={candidates})")]
    Size { k: usize, candidates: usize },

    #[error("a profile needs at least one candidate")]
    NoCandidates,

    #[error("a profile needs at least one ballot")]
    NoBallots,

    #[error("invalid candidate name {name:?}: {reason}")]
    CandidateName { name: String, reason: &'static str },

    #[error("duplicate candidate name {0:?}")]
    DuplicateCandidate(String),

    #[error("ballot {ballot} approves no candidate")]
    EmptyBallot { ballot: usize },

    #[error("ballot approves candidate {index} more than once")]
    DuplicateApproval { index: usize },

    #[error("committee lists candidate {index} more than once")]
    DuplicateMember { index: usize },

    #[error("exhaustive enumeration over {candidates} candidates exceeds the limit of {limit}")]
    EnumerationTooLarge { candidates: usize, limit: usize },

    #[error("invalid generator parameter: {0}")]
    Culture(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
