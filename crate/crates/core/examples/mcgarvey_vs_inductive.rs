//! Voter counts of the one-pair-at-a-time baseline against the inductive
//! construction.
//!
//!     cargo run --release --example mcgarvey_vs_inductive

use majority_realize::{
    corollary_bound, majority_pattern, mcgarvey_baseline, synthesize, Tournament,
};

fn main() {
    println!(
        "{:>4} {:>9} {:>10} {:>6}",
        "n", "mcgarvey", "inductive", "bound"
    );
    for n in [2, 4, 8, 16, 32] {
        let t = Tournament::random(n, 11).unwrap();
        let base = mcgarvey_baseline(&t).unwrap();
        let (fiol, _) = synthesize(&t);
        assert_eq!(majority_pattern(&base).unwrap(), t);
        assert_eq!(majority_pattern(&fiol).unwrap(), t);
        println!(
            "{n:>4} {:>9} {:>10} {:>6}",
            base.len(),
            fiol.len(),
            corollary_bound(n)
        );
    }
}
