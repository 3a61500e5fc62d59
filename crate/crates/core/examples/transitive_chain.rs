//! Greedy versus exhaustive transitive subtournaments.
//!
//!     cargo run --release --example transitive_chain

use majority_realize::transitive::DEFAULT_EXHAUSTIVE_CAP;
use majority_realize::{
    floor_log2, greedy_transitive_chain, max_transitive_exhaustive, Tournament,
};

fn main() {
    println!(
        "{:>4} {:>6} {:>7} {:>11}",
        "n", "seed", "greedy", "exhaustive"
    );
    for n in [4, 8, 12, 16] {
        for seed in 0..3 {
            let t = Tournament::random(n, seed).unwrap();
            let greedy = greedy_transitive_chain(&t);
            let best = max_transitive_exhaustive(&t, DEFAULT_EXHAUSTIVE_CAP).unwrap();
            assert!(greedy.len() > floor_log2(n));
            assert!(greedy.len() <= best.len());
            println!("{n:>4} {seed:>6} {:>7} {:>11}", greedy.len(), best.len());
        }
    }

    // past the exhaustive cap only the greedy chain is available
    let big = Tournament::random(1000, 1).unwrap();
    let chain = greedy_transitive_chain(&big);
    println!("\nn = 1000: greedy chain {:?}", chain.vertices());
    println!("floor(log2 1000) + 1 = {}", floor_log2(1000) + 1);
}
