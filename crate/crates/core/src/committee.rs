use std::fmt;

use crate::error::{Error, Result};
use crate::profile::Profile;

/// A non-empty set of candidates, held as strictly ascending roster indices.
///
/// The derived ordering is lexicographic on the sorted index list, which is
/// the enumeration order used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Committee {
    members: Vec<usize>,
}

impl Committee {
    /// Validates against a roster of `num_candidates`.
    pub fn new(members: impl IntoIterator<Item = usize>, num_candidates: usize) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember { index: w[0] });
        }
        if members.is_empty() || members.len() > num_candidates {
            return Err(Error::Size {
                k: members.len(),
                candidates: num_candidates,
            });
        }
        if let Some(&bad) = members.iter().find(|&&c| c >= num_candidates) {
            return Err(Error::Index {
                index: bad,
                candidates: num_candidates,
            });
        }
        Ok(Committee { members })
    }

    /// Resolves candidate names against `profile`.
    pub fn from_names<'a>(
        profile: &Profile,
        names: impl IntoIterator<Item = &'a str>,
    ) -> std::result::Result<Self, CommitteeNameError> {
        let mut members = Vec::new();
        for name in names {
            let index = profile
                .index_of(name)
                .ok_or_else(|| CommitteeNameError::Unknown(name.to_string()))?;
            members.push(index);
        }
        Committee::new(members, profile.num_candidates()).map_err(CommitteeNameError::Invalid)
    }

    /// Every candidate of a roster of size `num_candidates`.
    pub fn full(num_candidates: usize) -> Self {
        assert!(num_candidates >= 1);
        Committee {
            members: (0..num_candidates).collect(),
        }
    }

    /// Skips validation; callers guarantee a sorted, duplicate-free, non-empty list.
    pub(crate) fn from_sorted_unchecked(members: Vec<usize>) -> Self {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Committee { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    /// Always false for a constructed committee.
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, candidate: usize) -> bool {
        self.members.binary_search(&candidate).is_ok()
    }

    /// Member names in roster order.
    pub fn names<'p>(&self, profile: &'p Profile) -> Vec<&'p str> {
        self.members
            .iter()
            .map(|&c| profile.candidates()[c].name())
            .collect()
    }

    /// `{a,b,c}` using candidate names.
    pub fn display<'a>(&'a self, profile: &'a Profile) -> impl fmt::Display + 'a {
        DisplayCommittee {
            committee: self,
            profile,
        }
    }
}

struct DisplayCommittee<'a> {
    committee: &'a Committee,
    profile: &'a Profile,
}

impl fmt::Display for DisplayCommittee<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.committee.names(self.profile).join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CommitteeNameError {
    #[error("unknown candidate {0:?}")]
    Unknown(String),
    #[error(transparent)]
    Invalid(Error),
}
