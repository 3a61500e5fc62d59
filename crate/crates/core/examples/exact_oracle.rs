//! Exact minimum profile sizes for small tournaments.
//!
//!     cargo run --release --example exact_oracle

use majority_realize::{max_v_exact, min_voters_exact, synthesize, OracleConfig, Tournament};

fn main() {
    let config = OracleConfig::default();

    for n in 1..=4 {
        let (v, hardest) = max_v_exact(n, &config).unwrap();
        println!(
            "n = {n}: hardest tournament needs {v} voters, scores {:?}",
            hardest.score_sequence()
        );
    }

    println!();
    for seed in 0..5 {
        let t = Tournament::random(4, seed).unwrap();
        let exact = min_voters_exact(&t, &config).unwrap();
        let (p, _) = synthesize(&t);
        println!(
            "seed {seed}: exact {} (searched {:?}), inductive {}",
            exact.min_voters,
            exact.sizes_searched,
            p.len()
        );
    }

    let tight = OracleConfig {
        budget: 10,
        ..config
    };
    let t = Tournament::cyclic_triangle();
    println!(
        "\nwith budget 10: {}",
        min_voters_exact(&t, &tight).unwrap_err()
    );
}
