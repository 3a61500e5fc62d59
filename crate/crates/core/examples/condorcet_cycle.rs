//! The smallest tournament no single voter can produce, and the three voters
//! that do.
//!
//!     cargo run --example condorcet_cycle

use majority_realize::{majority_pattern, margins, synthesize, Profile, Tournament};

fn main() {
    let cycle = Tournament::cyclic_triangle();

    // rock-paper-scissors by hand
    let by_hand = Profile::from_orders(3, [[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap();
    assert_eq!(majority_pattern(&by_hand).unwrap(), cycle);

    let m = margins(&by_hand);
    for (i, j, margin) in m.pairs() {
        println!("margin({i}, {j}) = {margin:+}");
    }

    let (p, report) = synthesize(&cycle);
    println!("\nsynthesized {} voters (bound {}):", p.len(), report.bound);
    for v in p.voters() {
        println!("  {:?}", v.order());
    }
    println!(
        "seed chain {:?}, absorbed {:?}",
        report.base_chain.vertices(),
        report.steps
    );

    // two voters can never work: some pair always ties or a single order wins
    let two = Profile::from_orders(3, [[0, 1, 2], [1, 2, 0]]).unwrap();
    println!("\ntwo voters: {:?}", majority_pattern(&two).unwrap_err());
}
