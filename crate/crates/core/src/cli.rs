//! The `majority-realize` command line.
//!
//! Exit codes: 0 success, 1 semantic failure (a profile does not reproduce its
//! tournament), 2 usage, parse or I/O error, 3 refusal because of a size cap or
//! search budget.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bench::{run_bench, write_csv, BenchConfig, Method};
use crate::construct::{corollary_bound, mcgarvey_baseline, synthesize};
use crate::error::Error;
use crate::format::{emit_tour, emit_votes, parse_tour, parse_votes, TourFile};
use crate::oracle::{min_voters_exact, OracleConfig, DEFAULT_BUDGET, DEFAULT_ORACLE_CAP};
use crate::profile::{majority_pattern, margins, Profile};
use crate::tournament::Tournament;
use crate::transitive::floor_log2;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "majority-realize",
    version,
    about = "Realize tournaments as majority relations of ranked voters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a pseudorandom tournament in .tour format.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build a voter profile for a tournament and self-check it.
    Synthesize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Fiol)]
        method: Method,
        /// Destination .votes file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Destination for the key: value report; stderr when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check that a profile's majority relation equals a tournament.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        votes: PathBuf,
    },
    /// Exact minimum number of voters for a tiny tournament.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Sweep random tournaments and compare voter counts with the bound.
    Bench {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to one or more methods; both by default.
        #[arg(long, value_enum)]
        method: Vec<Method>,
        /// Destination CSV; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    msg: String,
}

impl Failure {
    fn usage(msg: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: msg.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => EXIT_REFUSED,
            Error::VerificationFailed { .. } => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

type CliResult = std::result::Result<i32, Failure>;

/// Runs the command line with explicit output streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Gen { n, seed, output } => cmd_gen(n, seed, output.as_deref(), out),
        Command::Synthesize {
            input,
            method,
            output,
            report,
        } => cmd_synthesize(
            &input,
            method,
            output.as_deref(),
            report.as_deref(),
            out,
            err,
        ),
        Command::Verify { input, votes } => cmd_verify(&input, &votes, out),
        Command::Oracle { input, cap, budget } => cmd_oracle(&input, cap, budget, out),
        Command::Bench {
            n_min,
            n_max,
            trials,
            seed,
            method,
            csv,
        } => {
            let methods = if method.is_empty() {
                vec![Method::Fiol, Method::Mcgarvey]
            } else {
                method
            };
            let config = BenchConfig {
                n_min,
                n_max,
                trials,
                seed,
                methods,
            };
            cmd_bench(&config, csv.as_deref(), out, err)
        }
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_to(
    path: Option<&Path>,
    text: &str,
    fallback: &mut dyn Write,
) -> std::result::Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        None => fallback
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(e.to_string())),
    }
}

fn load_tour(path: &Path) -> std::result::Result<TourFile, Failure> {
    parse_tour(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn cmd_gen(n: usize, seed: u64, output: Option<&Path>, out: &mut dyn Write) -> CliResult {
    if n == 0 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let t = Tournament::random(n, seed)?;
    write_to(output, &emit_tour(&t, None), out)?;
    Ok(EXIT_OK)
}

fn cmd_synthesize(
    input: &Path,
    method: Method,
    output: Option<&Path>,
    report_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let file = load_tour(input)?;
    let t = &file.tournament;
    let labels = file.label_table();
    let n = t.n();

    let mut report = String::new();
    writeln!(report, "n: {n}").unwrap();
    writeln!(report, "k: {}", floor_log2(n)).unwrap();
    writeln!(report, "method: {method}").unwrap();
    let profile: Profile = match method {
        Method::Fiol => {
            let (p, rep) = synthesize(t);
            writeln!(report, "voters: {}", rep.final_size).unwrap();
            writeln!(report, "bound: {}", rep.bound).unwrap();
            let chain: Vec<&str> = rep
                .base_chain
                .vertices()
                .iter()
                .map(|&v| labels.name(v))
                .collect();
            writeln!(report, "base_chain: {}", chain.join(" ")).unwrap();
            writeln!(report, "base_trimmed: {}", rep.base_trimmed).unwrap();
            let steps: Vec<String> = rep
                .steps
                .iter()
                .map(|&(a, b)| format!("{}>{}", labels.name(a), labels.name(b)))
                .collect();
            writeln!(report, "steps: {}", steps.join(" ")).unwrap();
            p
        }
        Method::Mcgarvey => {
            let p = mcgarvey_baseline(t)?;
            writeln!(report, "voters: {}", p.len()).unwrap();
            writeln!(report, "bound: {}", corollary_bound(n)).unwrap();
            p
        }
    };

    let verified = majority_pattern(&profile).is_ok_and(|m| &m == t);
    writeln!(report, "verified: {verified}").unwrap();
    if !verified {
        let _ = err.write_all(report.as_bytes());
        return Err(Failure {
            code: EXIT_MISMATCH,
            msg: "constructed profile does not reproduce the tournament".into(),
        });
    }
    write_to(output, &emit_votes(&profile, &labels), out)?;
    write_to(report_path, &report, err)?;
    Ok(EXIT_OK)
}

fn cmd_verify(tour_path: &Path, votes_path: &Path, out: &mut dyn Write) -> CliResult {
    let file = load_tour(tour_path)?;
    let labels = file.label_table();
    let profile = parse_votes(&read(votes_path)?, &labels)
        .map_err(|e| Failure::usage(format!("{}: {e}", votes_path.display())))?;
    let t = &file.tournament;
    let m = margins(&profile);
    let mut lines = String::new();
    let mut bad = 0;
    for (i, j, _) in m.pairs() {
        let (w, l) = if t.beats(i, j) { (i, j) } else { (j, i) };
        let margin = m.get(w, l);
        let (wn, ln) = (labels.name(w), labels.name(l));
        if margin == 0 {
            bad += 1;
            writeln!(lines, "tie {wn} {ln}: expected {wn}>{ln}, margin 0").unwrap();
        } else if margin < 0 {
            bad += 1;
            writeln!(
                lines,
                "wrong {wn} {ln}: expected {wn}>{ln}, margin {margin}"
            )
            .unwrap();
        }
    }
    let pairs = t.n() * (t.n() - 1) / 2;
    if profile.is_empty() && pairs == 0 {
        writeln!(lines, "empty profile generates no pattern").unwrap();
        bad += 1;
    }
    if bad == 0 {
        writeln!(lines, "ok: {} voters, {pairs} pairs match", profile.len()).unwrap();
    } else {
        writeln!(lines, "mismatch: {bad} of {pairs} pairs").unwrap();
    }
    out.write_all(lines.as_bytes())
        .map_err(|e| Failure::usage(e.to_string()))?;
    Ok(if bad == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_oracle(input: &Path, cap: usize, budget: u64, out: &mut dyn Write) -> CliResult {
    let file = load_tour(input)?;
    let labels = file.label_table();
    let t = &file.tournament;
    let res = min_voters_exact(t, &OracleConfig { n_cap: cap, budget })?;
    let (fiol, _) = synthesize(t);
    let mut text = format!(
        "min: {}, fiol: {}, gap: {}\n",
        res.min_voters,
        fiol.len(),
        fiol.len() - res.min_voters
    );
    let sizes: Vec<String> = res.sizes_searched.iter().map(ToString::to_string).collect();
    writeln!(text, "sizes_searched: {}", sizes.join(" ")).unwrap();
    text.push_str("witness:\n");
    text.push_str(&emit_votes(&res.witness, &labels));
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::usage(e.to_string()))?;
    Ok(EXIT_OK)
}

fn cmd_bench(
    config: &BenchConfig,
    csv_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CliResult {
    let outcome = run_bench(config)?;
    let mut buf = Vec::new();
    write_csv(&outcome.records, &mut buf).map_err(|e| Failure::usage(e.to_string()))?;
    let csv_text = String::from_utf8(buf).expect("csv output is utf-8");
    let mut summary = String::new();
    for s in &outcome.summaries {
        writeln!(summary, "{s}").unwrap();
    }
    match csv_path {
        Some(p) => {
            write_to(Some(p), &csv_text, out)?;
            write_to(None, &summary, out)?;
        }
        None => {
            write_to(None, &csv_text, out)?;
            write_to(None, &summary, err)?;
        }
    }
    Ok(EXIT_OK)
}
