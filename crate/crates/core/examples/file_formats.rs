//! Reading and writing `.tour` and `.votes` text.
//!
//!     cargo run --example file_formats

use majority_realize::format::{emit_tour, emit_votes, parse_tour, parse_votes};
use majority_realize::{majority_pattern, synthesize};

const INPUT: &str = "\
# four restaurants, pairwise preferences of a committee
# labels: thai pizza sushi tacos
4
0101
0010
1001
0100
";

fn main() {
    let file = parse_tour(INPUT).unwrap();
    let labels = file.label_table();
    let (p, _) = synthesize(&file.tournament);

    let votes = emit_votes(&p, &labels);
    print!("{votes}");

    let back = parse_votes(&votes, &labels).unwrap();
    assert_eq!(majority_pattern(&back).unwrap(), file.tournament);

    println!();
    print!("{}", emit_tour(&file.tournament, Some(&labels)));
}
