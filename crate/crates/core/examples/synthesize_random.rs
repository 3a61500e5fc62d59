//! Realize a random tournament and check the result.
//!
//!     cargo run --release --example synthesize_random -- 200 7

use majority_realize::{corollary_bound, majority_pattern, synthesize, Tournament};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(64, |s| s.parse().expect("n"));
    let seed: u64 = args.next().map_or(0, |s| s.parse().expect("seed"));

    let t = Tournament::random(n, seed).unwrap();
    let (p, report) = synthesize(&t);
    assert_eq!(majority_pattern(&p).unwrap(), t);

    println!("n = {n}, seed = {seed}");
    println!(
        "greedy chain:  {} vertices (trimmed: {})",
        report.greedy_chain_len(),
        report.base_trimmed
    );
    println!("pairs absorbed: {}", report.steps.len());
    println!("voters:        {}", p.len());
    println!("bound:         {}", corollary_bound(n));
    println!("majority relation reproduced: yes");
}
