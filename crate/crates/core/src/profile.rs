//! Election instances: a candidate roster plus approval ballots.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Candidate {
    index: usize,
    name: String,
}

impl Candidate {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Checks that `name` can appear in the ballot file format and in the
/// comma-separated committee lists of machine output.
pub fn validate_candidate_name(name: &str) -> Result<()> {
    let reason = if name.is_empty() {
        "name is empty"
    } else if name.chars().any(char::is_whitespace) {
        "name contains whitespace"
    } else if name.starts_with('#') {
        "name begins with '#'"
    } else if name.contains(',') {
        "name contains ','"
    } else if name.contains(':') {
        "name contains ':'"
    } else {
        return Ok(());
    };
    Err(Error::CandidateName {
        name: name.to_string(),
        reason,
    })
}

/// The set of candidates one agent approves, stored as ascending roster
/// indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ballot {
    approved: Vec<usize>,
}

impl Ballot {
    /// Rejects empty ballots and repeated indices. Index validity against a
    /// roster is checked by [`Profile::new`].
    pub fn new(approved: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut approved: Vec<usize> = approved.into_iter().collect();
        if approved.is_empty() {
            return Err(Error::EmptyBallot { ballot: 0 });
        }
        approved.sort_unstable();
        if let Some(w) = approved.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateApproval { index: w[0] });
        }
        Ok(Ballot { approved })
    }

    pub fn approved(&self) -> &[usize] {
        &self.approved
    }

    pub fn len(&self) -> usize {
        self.approved.len()
    }

    /// Always false for a constructed ballot.
    pub fn is_empty(&self) -> bool {
        self.approved.is_empty()
    }

    pub fn contains(&self, candidate: usize) -> bool {
        self.approved.binary_search(&candidate).is_ok()
    }
}

/// Per-candidate approval totals, bucketed by the length of the approving
/// ballot. Every per-candidate score is a function of this histogram alone.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Support {
    pub(crate) approvals: u64,
    /// `(ballot length, number of approving ballots of that length)`,
    /// ascending by length.
    pub(crate) by_ballot_len: Vec<(usize, u64)>,
}

/// An immutable election instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    candidates: Vec<Candidate>,
    ballots: Vec<Ballot>,
    support: Vec<Support>,
}

impl Profile {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        ballots: impl IntoIterator<Item = Ballot>,
    ) -> Result<Self> {
        let mut candidates = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (index, name) in names.into_iter().enumerate() {
            let name: String = name.into();
            validate_candidate_name(&name)?;
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateCandidate(name));
            }
            candidates.push(Candidate { index, name });
        }
        if candidates.is_empty() {
            return Err(Error::NoCandidates);
        }
        let m = candidates.len();

        let ballots: Vec<Ballot> = ballots.into_iter().collect();
        if ballots.is_empty() {
            return Err(Error::NoBallots);
        }
        let mut histograms = vec![BTreeMap::<usize, u64>::new(); m];
        for (i, ballot) in ballots.iter().enumerate() {
            if ballot.is_empty() {
                return Err(Error::EmptyBallot { ballot: i });
            }
            for &c in ballot.approved() {
                if c >= m {
                    return Err(Error::Index {
                        index: c,
                        candidates: m,
                    });
                }
                *histograms[c].entry(ballot.len()).or_default() += 1;
            }
        }
        let support = histograms
            .into_iter()
            .map(|h| Support {
                approvals: h.values().sum(),
                by_ballot_len: h.into_iter().collect(),
            })
            .collect();

        Ok(Profile {
            candidates,
            ballots,
            support,
        })
    }

    /// Convenience constructor from index lists.
    pub fn from_index_lists<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        ballots: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let ballots = ballots
            .into_iter()
            .enumerate()
            .map(|(i, b)| {
                Ballot::new(b).map_err(|e| match e {
                    Error::EmptyBallot { .. } => Error::EmptyBallot { ballot: i },
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new(names, ballots)
    }

    /// m
    pub fn num_candidates(&self) -> usize {
        self.candidates.len()
    }

    /// n
    pub fn num_ballots(&self) -> usize {
        self.ballots.len()
    }

    pub fn candidates(&self) -> &[Candidate] {
        &self.candidates
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn candidate(&self, index: usize) -> Result<&Candidate> {
        self.candidates.get(index).ok_or(Error::Index {
            index,
            candidates: self.candidates.len(),
        })
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.candidates.iter().position(|c| c.name == name)
    }

    pub(crate) fn support(&self, index: usize) -> Result<&Support> {
        self.support.get(index).ok_or(Error::Index {
            index,
            candidates: self.candidates.len(),
        })
    }

    pub(crate) fn check_size(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.num_candidates() {
            return Err(Error::Size {
                k,
                candidates: self.num_candidates(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_support_histograms() {
        let p =
            Profile::from_index_lists(["a", "b", "c"], [vec![0], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(p.num_candidates(), 3);
        assert_eq!(p.num_ballots(), 3);
        let a = p.support(0).unwrap();
        assert_eq!(a.approvals, 2);
        assert_eq!(a.by_ballot_len, vec![(1, 1), (2, 1)]);
        assert_eq!(p.support(2).unwrap().by_ballot_len, vec![(2, 1)]);
        assert_eq!(p.candidate(1).unwrap().name(), "b");
        assert_eq!(p.index_of("c"), Some(2));
    }

    #[test]
    fn rejects_invalid_instances() {
        assert_eq!(
            Profile::from_index_lists(Vec::<String>::new(), [vec![0]]),
            Err(Error::NoCandidates)
        );
        assert_eq!(
            Profile::from_index_lists(["a"], Vec::<Vec<usize>>::new()),
            Err(Error::NoBallots)
        );
        assert_eq!(
            Profile::from_index_lists(["a", "b"], [vec![0], vec![]]),
            Err(Error::EmptyBallot { ballot: 1 })
        );
        assert_eq!(
            Profile::from_index_lists(["a", "b"], [vec![1, 1]]),
            Err(Error::DuplicateApproval { index: 1 })
        );
        assert_eq!(
            Profile::from_index_lists(["a", "b"], [vec![2]]),
            Err(Error::Index {
                index: 2,
                candidates: 2
            })
        );
        assert_eq!(
            Profile::from_index_lists(["a", "a"], [vec![0]]),
            Err(Error::DuplicateCandidate("a".into()))
        );
    }

    #[test]
    fn candidate_names_are_format_safe() {
        for bad in ["", "a b", "#x", "a,b", "x:"] {
            assert!(validate_candidate_name(bad).is_err(), "{bad:?}");
        }
        assert!(validate_candidate_name("Alice-2").is_ok());
    }

    #[test]
    fn full_approval_ballot_is_allowed() {
        let p = Profile::from_index_lists(["a", "b"], [vec![1, 0]]).unwrap();
        assert_eq!(p.ballots()[0].approved(), &[0, 1]);
    }

    #[test]
    fn profiles_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Profile>();
    }
}
