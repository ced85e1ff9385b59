//! `satvote` command-line front end.
//!
//! Exit status: 0 on success, 1 on usage or input errors (one diagnostic line
//! on stderr), 2 when `check` finds the fast path disagreeing with the
//! exhaustive oracle.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use satvote_core::{
    committee_score, equivalence_check_with, io as fmt_io, random_profile, score_table_with,
    winners_any_size_with, winners_fixed_k_with, CandidateScorer, Committee, CultureSpec,
    Decomposition, OutputFormat, Profile, RuleId, SizeSpec, TiePolicy,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DISCREPANCY: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "satvote",
    version,
    about = "Winner committees for approval-based multi-winner rules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute winning committee(s).
    Winners(WinnersArgs),
    /// Show per-candidate scores for a size, or the score of one committee.
    Score(ScoreArgs),
    /// Certify the fast algorithm against exhaustive enumeration.
    Check(CheckArgs),
    /// Generate a random impartial-culture ballot document.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SizeArgs {
    /// Committee size.
    #[arg(long)]
    k: Option<usize>,
    /// Optimize over every committee size.
    #[arg(long)]
    any_size: bool,
}

impl SizeArgs {
    fn spec(&self) -> SizeSpec {
        match self.k {
            Some(k) => SizeSpec::Fixed(k),
            None => SizeSpec::Any,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Ties {
    Lex,
    All,
}

#[derive(Debug, Args)]
struct WinnersArgs {
    #[arg(long)]
    rule: RuleId,
    #[command(flatten)]
    size: SizeArgs,
    #[arg(long, value_enum, default_value = "lex")]
    ties: Ties,
    /// Maximum number of committees listed with `--ties all`.
    #[arg(long, default_value_t = TiePolicy::DEFAULT_CAP.get())]
    max_enumerate: usize,
    #[arg(long, default_value = "text")]
    format: OutputFormat,
    /// Ballot document; standard input when omitted.
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ScoreArgs {
    #[arg(long)]
    rule: RuleId,
    #[command(flatten)]
    target: ScoreTarget,
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ScoreTarget {
    /// Committee size for the per-candidate table.
    #[arg(long)]
    k: Option<usize>,
    /// Comma-separated candidate names.
    #[arg(long, value_delimiter = ',')]
    committee: Option<Vec<String>>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long)]
    rule: RuleId,
    #[command(flatten)]
    size: SizeArgs,
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// Number of candidates.
    #[arg(long)]
    m: usize,
    /// Number of voters.
    #[arg(long)]
    n: usize,
    /// Approval probability in (0, 1].
    #[arg(long)]
    p: f64,
    #[arg(long)]
    seed: u64,
}

/// Runs the tool with the real scorer.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_scorer(&Decomposition, args, stdin, stdout, stderr)
}

/// Runs the tool with the fast path driven by `scorer`.
pub fn run_with_scorer<I, T>(
    scorer: &dyn CandidateScorer,
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let _ = writeln!(stderr, "{}", one_line(&e.to_string()));
            return EXIT_USAGE;
        }
    };
    let (status, output) = match execute(scorer, cli, stdin) {
        Ok(done) => done,
        Err(message) => {
            let _ = writeln!(stderr, "error: {message}");
            return EXIT_USAGE;
        }
    };
    if let Err(e) = stdout
        .write_all(output.as_bytes())
        .and_then(|()| stdout.flush())
    {
        let _ = writeln!(stderr, "error: writing output: {e}");
        return EXIT_USAGE;
    }
    status
}

/// Collapses clap's multi-line diagnostics.
fn one_line(message: &str) -> String {
    message
        .lines()
        .map(str::trim)
        .filter(|l| {
            !l.is_empty() && !l.starts_with("Usage:") && !l.starts_with("For more information")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn read_profile(input: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<Profile, String> {
    let (label, text) = match input {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            (path.display().to_string(), text)
        }
        None => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("<stdin>: {e}"))?;
            ("<stdin>".to_string(), text)
        }
    };
    fmt_io::parse_profile(&text).map_err(|e| format!("{label}: {e}"))
}

fn execute(
    scorer: &dyn CandidateScorer,
    cli: Cli,
    stdin: &mut dyn Read,
) -> Result<(u8, String), String> {
    match cli.command {
        Command::Winners(args) => {
            let tie = match args.ties {
                Ties::Lex => TiePolicy::Lexicographic,
                Ties::All => TiePolicy::enumerate_up_to(args.max_enumerate)
                    .ok_or("--max-enumerate must be at least 1")?,
            };
            let profile = read_profile(args.input.as_ref(), stdin)?;
            let result = match args.size.spec() {
                SizeSpec::Fixed(k) => winners_fixed_k_with(scorer, &profile, args.rule, k, tie),
                SizeSpec::Any => winners_any_size_with(scorer, &profile, args.rule, tie),
            }
            .map_err(|e| e.to_string())?;
            Ok((
                EXIT_OK,
                fmt_io::serialize_result(&result, &profile, args.format),
            ))
        }
        Command::Score(args) => {
            let profile = read_profile(args.input.as_ref(), stdin)?;
            let out = match (args.target.k, args.target.committee) {
                (Some(k), _) => render_table(scorer, &profile, args.rule, k)?,
                (None, Some(names)) => {
                    let committee =
                        Committee::from_names(&profile, names.iter().map(String::as_str))
                            .map_err(|e| e.to_string())?;
                    let score = committee_score(&profile, args.rule, &committee)
                        .map_err(|e| e.to_string())?;
                    format!(
                        "rule: {}\ncommittee: {}\nscore: {score} (approximately {})\n",
                        args.rule,
                        committee.names(&profile).join(" "),
                        score.to_decimal(fmt_io::DECIMAL_DIGITS),
                    )
                }
                (None, None) => unreachable!("clap requires --k or --committee"),
            };
            Ok((EXIT_OK, out))
        }
        Command::Check(args) => {
            let profile = read_profile(args.input.as_ref(), stdin)?;
            let outcome = equivalence_check_with(scorer, &profile, args.rule, args.size.spec())
                .map_err(|e| e.to_string())?;
            let report = &outcome.report;
            let mut out = String::new();
            let verdict = if outcome.agrees() {
                "agree"
            } else {
                "DISCREPANCY"
            };
            let _ = writeln!(out, "{verdict}: {} k={}", args.rule, report.size);
            let _ = writeln!(
                out,
                "oracle optimum: {} over {} subsets",
                report.optimal_score, report.subsets_evaluated
            );
            let committees: Vec<String> = report
                .optimal_committees
                .iter()
                .map(|c| c.display(&profile).to_string())
                .collect();
            let _ = writeln!(out, "oracle committees: {}", committees.join(" "));
            let _ = writeln!(
                out,
                "fast path: {} score {}",
                outcome.winner.committee().display(&profile),
                outcome.winner.score()
            );
            for d in &outcome.discrepancies {
                let _ = writeln!(out, "- {d}");
            }
            let status = if outcome.agrees() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            };
            Ok((status, out))
        }
        Command::Gen(args) => {
            let spec =
                CultureSpec::new(args.m, args.n, args.p, args.seed).map_err(|e| e.to_string())?;
            let profile = random_profile(&spec).map_err(|e| e.to_string())?;
            Ok((EXIT_OK, fmt_io::serialize_profile(&profile)))
        }
    }
}

fn render_table(
    scorer: &dyn CandidateScorer,
    profile: &Profile,
    rule: RuleId,
    k: usize,
) -> Result<String, String> {
    let table = score_table_with(scorer, profile, rule, k).map_err(|e| e.to_string())?;
    let mut out = String::new();
    let _ = writeln!(out, "rule: {rule}");
    let _ = writeln!(out, "committee size: {k}");
    let width = profile
        .candidates()
        .iter()
        .map(|c| c.name().len())
        .max()
        .unwrap_or(0);
    for (rank, (c, score)) in table.iter().enumerate() {
        let marker = if rank < k { '*' } else { ' ' };
        let _ = writeln!(
            out,
            "{marker} {:<width$}  {score}  (approximately {})",
            profile.candidates()[*c].name(),
            score.to_decimal(fmt_io::DECIMAL_DIGITS),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collapses_clap_errors() {
        let msg = "error: unexpected argument '--x' found\n\nUsage: satvote winners [OPTIONS]\n\nFor more information, try '--help'.\n";
        assert_eq!(one_line(msg), "error: unexpected argument '--x' found");
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
