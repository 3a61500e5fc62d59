//! Sweeps over random tournaments comparing achieved voter counts with the
//! `n - k` / `n - k + 1` bound.

use std::fmt;
use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::construct::{corollary_bound, mcgarvey_baseline, synthesize_observed, ExtensionStep};
use crate::error::{Error, Result};
use crate::profile::majority_pattern;
use crate::tournament::Tournament;
use crate::transitive::{floor_log2, greedy_transitive_chain};

pub const BENCH_MAX_N: usize = 512;
/// McGarvey profiles have `n(n - 1)` voters; rows for larger `n` are skipped.
pub const MCGARVEY_BENCH_MAX_N: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fiol,
    Mcgarvey,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Fiol => "fiol",
            Method::Mcgarvey => "mcgarvey",
        })
    }
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub k: usize,
    pub seed: u64,
    pub method: Method,
    pub voters: usize,
    pub bound: usize,
    pub chain_len: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub methods: Vec<Method>,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if !(2 <= self.n_min && self.n_min <= self.n_max && self.n_max <= BENCH_MAX_N) {
            return Err(Error::InvalidArgument(format!(
                "need 2 <= n-min <= n-max <= {BENCH_MAX_N}, got {}..{}",
                self.n_min, self.n_max
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(Error::InvalidArgument("no methods selected".into()));
        }
        Ok(())
    }
}

/// Worst case per `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NSummary {
    pub n: usize,
    pub bound: usize,
    pub max_fiol_voters: Option<usize>,
    pub min_chain_len: usize,
}

impl fmt::Display for NSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} bound={} ", self.n, self.bound)?;
        match self.max_fiol_voters {
            Some(v) => write!(f, "max_fiol={v}")?,
            None => write!(f, "max_fiol=-")?,
        }
        write!(f, " min_chain={}", self.min_chain_len)
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    pub summaries: Vec<NSummary>,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed: `master XOR splitmix64((n << 32) | trial)`.
pub fn trial_seed(master: u64, n: usize, trial: usize) -> u64 {
    master ^ splitmix64(((n as u64) << 32) | trial as u64)
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchOutcome> {
    run_bench_observed(config, |_, _, _| {})
}

/// [`run_bench`], forwarding every extension step of every inductive
/// synthesis as `(n, seed, step)`.
pub fn run_bench_observed(
    config: &BenchConfig,
    mut observe: impl FnMut(usize, u64, &ExtensionStep<'_>),
) -> Result<BenchOutcome> {
    config.validate()?;
    let mut methods = config.methods.clone();
    methods.sort();
    methods.dedup();

    let mut out = BenchOutcome::default();
    for n in config.n_min..=config.n_max {
        let k = floor_log2(n);
        let bound = corollary_bound(n);
        let mut summary = NSummary {
            n,
            bound,
            max_fiol_voters: None,
            min_chain_len: usize::MAX,
        };
        for trial in 0..config.trials {
            let seed = trial_seed(config.seed, n, trial);
            let t = Tournament::random(n, seed)?;
            for &method in &methods {
                let (voters, chain_len, verified) = match method {
                    Method::Fiol => {
                        let (p, rep) = synthesize_observed(&t, |step| observe(n, seed, step));
                        let ok = majority_pattern(&p).is_ok_and(|m| m == t);
                        summary.max_fiol_voters =
                            Some(summary.max_fiol_voters.unwrap_or(0).max(p.len()));
                        (p.len(), rep.greedy_chain_len(), ok)
                    }
                    Method::Mcgarvey => {
                        if n > MCGARVEY_BENCH_MAX_N {
                            continue;
                        }
                        let p = mcgarvey_baseline(&t)?;
                        let ok = majority_pattern(&p).is_ok_and(|m| m == t);
                        (p.len(), greedy_transitive_chain(&t).len(), ok)
                    }
                };
                if !verified {
                    return Err(Error::VerificationFailed {
                        n,
                        seed,
                        method: method.to_string(),
                    });
                }
                summary.min_chain_len = summary.min_chain_len.min(chain_len);
                out.records.push(BenchRecord {
                    n,
                    k,
                    seed,
                    method,
                    voters,
                    bound,
                    chain_len,
                    verified,
                });
            }
        }
        out.summaries.push(summary);
    }
    Ok(out)
}

/// Writes the records with the fixed header
/// `n,k,seed,method,voters,bound,chain_len,verified`.
pub fn write_csv<W: Write>(records: &[BenchRecord], w: W) -> std::io::Result<()> {
    let mut wtr = csv::Writer::from_writer(w);
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()
}
