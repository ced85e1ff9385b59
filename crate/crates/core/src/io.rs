//! Text formats: the ballot document and winner reports.
//!
//! Ballot document grammar (UTF-8, line oriented):
//!
//! ```text
//! # comment lines and blank lines are ignored
//! candidates: a b c     <- first significant line: the roster, in index order
//! a                     <- every further significant line is one ballot
//! a b
//! b c
//! ```

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::Error;
use crate::profile::{validate_candidate_name, Ballot, Profile};
use crate::winners::WinnersResult;

const ROSTER_KEYWORD: &str = "candidates:";

/// Significant digits of the advisory decimal score.
pub const DECIMAL_DIGITS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based.
    pub line: usize,
    pub message: String,
    pub token: Option<String>,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
            token: None,
        }
    }

    fn with_token(mut self, token: &str) -> Self {
        self.token = Some(token.to_string());
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)?;
        if let Some(token) = &self.token {
            write!(f, " ({token:?})")?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

pub fn parse_profile(text: &str) -> Result<Profile, ParseError> {
    let mut significant = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));
    let last_line = text.lines().count().max(1);

    let (roster_line, roster) = significant.next().ok_or_else(|| {
        ParseError::new(
            last_line,
            format!("missing `{ROSTER_KEYWORD}` roster declaration"),
        )
    })?;
    let mut tokens = roster.split_whitespace();
    let keyword = tokens.next().unwrap_or_default();
    if keyword != ROSTER_KEYWORD {
        return Err(ParseError::new(
            roster_line,
            format!("expected `{ROSTER_KEYWORD}` roster declaration"),
        )
        .with_token(keyword));
    }
    let mut names: Vec<&str> = Vec::new();
    let mut seen = HashSet::new();
    for token in tokens {
        if let Err(Error::CandidateName { reason, .. }) = validate_candidate_name(token) {
            return Err(
                ParseError::new(roster_line, format!("invalid candidate name: {reason}"))
                    .with_token(token),
            );
        }
        if !seen.insert(token) {
            return Err(
                ParseError::new(roster_line, "duplicate candidate in roster").with_token(token),
            );
        }
        names.push(token);
    }
    if names.is_empty() {
        return Err(ParseError::new(
            roster_line,
            "roster declares no candidates",
        ));
    }
    let index: std::collections::HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, &name)| (name, i))
        .collect();

    let mut ballots = Vec::new();
    for (line_no, line) in significant {
        let mut approved = Vec::new();
        let mut on_ballot = HashSet::new();
        for token in line.split_whitespace() {
            if token == ROSTER_KEYWORD {
                return Err(
                    ParseError::new(line_no, "duplicate roster declaration").with_token(token)
                );
            }
            let &c = index
                .get(token)
                .ok_or_else(|| ParseError::new(line_no, "unknown candidate").with_token(token))?;
            if !on_ballot.insert(c) {
                return Err(
                    ParseError::new(line_no, "candidate listed twice on one ballot")
                        .with_token(token),
                );
            }
            approved.push(c);
        }
        let ballot = Ballot::new(approved).map_err(|e| ParseError::new(line_no, e.to_string()))?;
        ballots.push(ballot);
    }
    if ballots.is_empty() {
        return Err(ParseError::new(last_line, "no ballots"));
    }
    Profile::new(names, ballots).map_err(|e| ParseError::new(last_line, e.to_string()))
}

/// Canonical document: the roster line, then one line per ballot with
/// members in roster order, each line newline-terminated.
pub fn serialize_profile(profile: &Profile) -> String {
    let mut out = String::from(ROSTER_KEYWORD);
    for candidate in profile.candidates() {
        out.push(' ');
        out.push_str(candidate.name());
    }
    out.push('\n');
    for ballot in profile.ballots() {
        let names: Vec<&str> = ballot
            .approved()
            .iter()
            .map(|&c| profile.candidates()[c].name())
            .collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Machine,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "machine" => Ok(OutputFormat::Machine),
            other => Err(format!(
                "unknown output format {other:?} (expected text or machine)"
            )),
        }
    }
}

/// Renders a winner report. Candidate names are resolved against `profile`,
/// which must be the profile the result was computed from.
pub fn serialize_result(result: &WinnersResult, profile: &Profile, format: OutputFormat) -> String {
    let score = result.score();
    let approx = score.to_decimal(DECIMAL_DIGITS);
    let mut out = String::new();
    match format {
        OutputFormat::Machine => {
            let _ = writeln!(out, "rule={}", result.rule().as_str());
            let _ = writeln!(out, "k={}", result.size());
            let _ = writeln!(out, "score_num={}", score.numer());
            let _ = writeln!(out, "score_den={}", score.denom());
            let _ = writeln!(out, "score_approx={approx}");
            let _ = writeln!(out, "truncated={}", result.truncated());
            let _ = writeln!(out, "committees={}", result.committees().len());
            for committee in result.committees() {
                let _ = writeln!(out, "committee={}", committee.names(profile).join(","));
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(out, "rule: {}", result.rule());
            let _ = writeln!(out, "committee size: {}", result.size());
            let _ = writeln!(out, "score: {score} (approximately {approx})");
            let label = if result.committees().len() == 1 {
                "committee"
            } else {
                "committees"
            };
            let _ = writeln!(out, "{label}:");
            for committee in result.committees() {
                let _ = writeln!(out, "  {}", committee.names(profile).join(" "));
            }
            if result.truncated() {
                let _ = writeln!(
                    out,
                    "(listing truncated after {} committees)",
                    result.committees().len()
                );
            }
        }
    }
    out
}
