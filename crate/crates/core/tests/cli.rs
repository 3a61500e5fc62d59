use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const TRIANGLE: &str = "3\n010\n001\n100\n";
const NAMED_TRIANGLE: &str = "# labels: a b c\n3\n010\n001\n100\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_majority-realize"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn transitive_tour(n: usize) -> String {
    let mut text = format!("{n}\n");
    for i in 0..n {
        text.extend((0..n).map(|j| if j > i { '1' } else { '0' }));
        text.push('\n');
    }
    text
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.tour");
    let b = dir.path().join("b.tour");
    for p in [&a, &b] {
        assert_eq!(
            code(&run(&["gen", "--n", "3", "--seed", "1", "--output", s(p)])),
            0
        );
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "3");
    let row = |i: usize| lines[i + 1].as_bytes();
    for i in 0..3 {
        assert_eq!(row(i)[i], b'0');
        for j in 0..3 {
            if i != j {
                assert_ne!(row(i)[j], row(j)[i]);
            }
        }
    }
}

#[test]
fn gen_rejects_zero_vertices() {
    assert_eq!(code(&run(&["gen", "--n", "0"])), 2);
    assert_eq!(code(&run(&["gen"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn synthesize_triangle() {
    let dir = TempDir::new().unwrap();
    let tour = write(&dir, "t.tour", TRIANGLE);
    let votes = dir.path().join("t.votes");
    let report = dir.path().join("t.report");
    let o = run(&[
        "synthesize",
        "--input",
        s(&tour),
        "--method",
        "fiol",
        "--output",
        s(&votes),
        "--report",
        s(&report),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(fs::read_to_string(&votes).unwrap().lines().count(), 3);
    let rep = fs::read_to_string(&report).unwrap();
    assert!(rep.contains("voters: 3\n"), "{rep}");
    assert!(rep.contains("bound: 3\n"), "{rep}");
    assert!(rep.contains("k: 1\n"));
    assert!(rep.contains("steps: 1>2\n"));
    assert!(rep.contains("verified: true\n"));

    assert_eq!(
        code(&run(&["verify", "--input", s(&tour), "--votes", s(&votes)])),
        0
    );
}

#[test]
fn synthesize_transitive_and_mcgarvey() {
    let dir = TempDir::new().unwrap();
    let tour = write(&dir, "five.tour", &transitive_tour(5));
    let o = run(&["synthesize", "--input", s(&tour)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0 1 2 3 4\n");

    let tri = write(&dir, "t.tour", TRIANGLE);
    let o = run(&["synthesize", "--input", s(&tri), "--method", "mcgarvey"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 6);
    let votes = write(&dir, "m.votes", &stdout(&o));
    assert_eq!(
        code(&run(&["verify", "--input", s(&tri), "--votes", s(&votes)])),
        0
    );
}

#[test]
fn synthesize_uses_candidate_names() {
    let dir = TempDir::new().unwrap();
    let tour = write(&dir, "named.tour", NAMED_TRIANGLE);
    let o = run(&["synthesize", "--input", s(&tour)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "c a b\nb c a\na b c\n");
}

#[test]
fn synthesize_parse_error() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.tour", "3\n011\n001\n100\n");
    assert_eq!(code(&run(&["synthesize", "--input", s(&bad)])), 2);
    let missing = dir.path().join("nope.tour");
    assert_eq!(code(&run(&["synthesize", "--input", s(&missing)])), 2);
}

#[test]
fn verify_reports_wrong_and_tied_pairs() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "t.tour", NAMED_TRIANGLE);

    let one = write(&dir, "one.votes", "a b c\n");
    let o = run(&["verify", "--input", s(&tri), "--votes", s(&one)]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(
        text.contains("wrong c a: expected c>a, margin -1"),
        "{text}"
    );
    assert!(!text.contains("wrong a b"));

    let two = write(&dir, "two.votes", "a b c\nb c a\n");
    let o = run(&["verify", "--input", s(&tri), "--votes", s(&two)]);
    assert_eq!(code(&o), 1);
    assert!(
        stdout(&o).contains("tie c a: expected c>a, margin 0"),
        "{}",
        stdout(&o)
    );

    let foreign = write(&dir, "x.votes", "a b z\n");
    assert_eq!(
        code(&run(&[
            "verify",
            "--input",
            s(&tri),
            "--votes",
            s(&foreign)
        ])),
        2
    );
}

#[test]
fn oracle_output_and_refusal() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "t.tour", TRIANGLE);
    let o = run(&["oracle", "--input", s(&tri)]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).starts_with("min: 3, fiol: 3, gap: 0\n"),
        "{}",
        stdout(&o)
    );

    let four = write(&dir, "four.tour", &transitive_tour(4));
    let o = run(&["oracle", "--input", s(&four)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("min: 1, fiol: 1"));

    let five = write(&dir, "five.tour", &transitive_tour(5));
    assert_eq!(
        code(&run(&["oracle", "--input", s(&five), "--cap", "4"])),
        3
    );
    assert_eq!(
        code(&run(&["oracle", "--input", s(&tri), "--budget", "1"])),
        3
    );
}

#[test]
fn bench_rows_respect_bounds() {
    let dir = TempDir::new().unwrap();
    let csv_path = dir.path().join("bench.csv");
    let o = run(&[
        "bench",
        "--n-min",
        "2",
        "--n-max",
        "16",
        "--trials",
        "10",
        "--seed",
        "5",
        "--csv",
        s(&csv_path),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 15);

    let mut rdr = csv::Reader::from_path(&csv_path).unwrap();
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(
        headers.iter().collect::<Vec<_>>(),
        [
            "n",
            "k",
            "seed",
            "method",
            "voters",
            "bound",
            "chain_len",
            "verified"
        ]
    );
    let mut fiol_rows = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let num = |i: usize| rec[i].parse::<usize>().unwrap();
        let (n, k, voters, bound, chain) = (num(0), num(1), num(4), num(5), num(6));
        assert_eq!(&rec[7], "true");
        assert!(chain > k);
        match &rec[3] {
            "fiol" => {
                fiol_rows += 1;
                assert!(voters <= bound && voters % 2 == 1);
            }
            "mcgarvey" => assert_eq!(voters, n * (n - 1)),
            other => panic!("method {other}"),
        }
    }
    assert_eq!(fiol_rows, 150);
}

#[test]
fn bench_usage_errors() {
    assert_eq!(code(&run(&["bench", "--trials", "0"])), 2);
    assert_eq!(code(&run(&["bench", "--n-min", "1"])), 2);
    assert_eq!(code(&run(&["bench", "--n-max", "600"])), 2);
}
