//! A small benchmark sweep written as CSV to stdout.
//!
//!     cargo run --release --example bound_sweep > sweep.csv

use majority_realize::bench::{run_bench, write_csv, BenchConfig, Method};

fn main() {
    let config = BenchConfig {
        n_min: 2,
        n_max: 48,
        trials: 5,
        seed: 2024,
        methods: vec![Method::Fiol],
    };
    let outcome = run_bench(&config).unwrap();
    for s in &outcome.summaries {
        eprintln!("{s}");
    }
    write_csv(&outcome.records, std::io::stdout().lock()).unwrap();
}
