//! Realizing tournaments as pairwise majorities of linear-order voters.
//!
//! A tournament on `n` candidates is a *strong* preference pattern: every
//! pair is decided, with no ties. Any such pattern is the majority relation of
//! some finite list of voters, each holding a strict ranking. This crate builds
//! such voter lists explicitly:
//!
//! * [`construct::synthesize`] seeds with a single voter listing a transitive
//!   subtournament and then absorbs the remaining candidates two at a time,
//!   spending two voters per pair. With `k = floor(log2 n)` it never needs more
//!   than `n - k` voters when `n - k` is odd, `n - k + 1` otherwise.
//! * [`construct::mcgarvey_baseline`] spends two voters per arc, `n(n - 1)` in
//!   total.
//! * [`oracle`] finds exact minimum voter counts for very small `n` by
//!   exhaustive search.
//!
//! Every profile can be checked independently with [`profile::majority_pattern`].
//!
//! ```
//! use majority_realize::{majority_pattern, synthesize, Tournament};
//!
//! let t = Tournament::random(12, 3).unwrap();
//! let (profile, report) = synthesize(&t);
//! assert_eq!(majority_pattern(&profile).unwrap(), t);
//! assert!(report.final_size <= report.bound);
//! ```

pub mod bench;
pub mod cli;
pub mod construct;
pub mod error;
pub mod format;
pub mod oracle;
pub mod profile;
pub mod restrict;
pub mod tournament;
pub mod transitive;

pub use construct::{
    corollary_bound, extend_pair, mcgarvey_baseline, segment_partition, synthesize,
    synthesize_observed, ConstructionReport, ExtensionStep, SegmentPartition,
};
pub use error::{Error, Result};
pub use oracle::{max_v_exact, min_voters_exact, OracleConfig, OracleResult};
pub use profile::{majority_pattern, margins, MarginMatrix, Profile, Ranking};
pub use restrict::{Relabeling, Restrict, Restricted};
pub use tournament::{Tournament, Transitivity, VertexSet};
pub use transitive::{
    floor_log2, greedy_transitive_chain, max_transitive_exhaustive, TransitiveChain,
};
