//! Text formats.
//!
//! `.tour`, a tournament:
//!
//! ```text
//! # comment lines start with '#'
//! # labels: alice bob carol      (optional candidate names)
//! 3
//! 010
//! 001
//! 100
//! ```
//!
//! The first non-comment line is `n`; the next `n` lines hold `n` characters
//! each, `'1'` at row `i`, column `j` meaning `i -> j`. Blank lines are ignored.
//!
//! `.votes`, a profile: one voter per line, candidate labels separated by
//! spaces, most preferred first. Labels are names from the tournament's label
//! table when it has one, otherwise the integers `0..n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::profile::{Profile, Ranking};
use crate::tournament::Tournament;

const LABELS_DIRECTIVE: &str = "# labels:";

/// Maps candidate names to dense vertex numbers and back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl LabelTable {
    /// `0`, `1`, ..., `n - 1`.
    pub fn numeric(n: usize) -> Self {
        Self::named((0..n).map(|v| v.to_string()).collect()).expect("integers are distinct")
    }

    pub fn named(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (v, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("bad candidate name {name:?}"),
                });
            }
            if index.insert(name.clone(), v).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("candidate name {name:?} repeated"),
                });
            }
        }
        Ok(LabelTable { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// A parsed `.tour` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TourFile {
    pub tournament: Tournament,
    /// Present only when the file carried a `# labels:` line.
    pub labels: Option<LabelTable>,
}

impl TourFile {
    pub fn label_table(&self) -> LabelTable {
        self.labels
            .clone()
            .unwrap_or_else(|| LabelTable::numeric(self.tournament.n()))
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_tour(text: &str) -> Result<TourFile> {
    let mut names: Option<(usize, Vec<String>)> = None;
    let mut body = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix(LABELS_DIRECTIVE) {
            if names.is_some() {
                return Err(parse_err(lineno, "second labels line"));
            }
            names = Some((lineno, rest.split_whitespace().map(String::from).collect()));
        } else if !line.is_empty() && !line.starts_with('#') {
            body.push((lineno, line));
        }
    }
    let mut body = body.into_iter();
    let (lineno, header) = body
        .next()
        .ok_or_else(|| parse_err(0, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| parse_err(lineno, format!("expected vertex count, found {header:?}")))?;
    if n == 0 {
        return Err(parse_err(lineno, "vertex count must be at least 1"));
    }
    let mut matrix = Vec::with_capacity(n);
    for i in 0..n {
        let (lineno, row) = body
            .next()
            .ok_or_else(|| parse_err(0, format!("expected {n} rows, found {i}")))?;
        if row.len() != n {
            return Err(parse_err(
                lineno,
                format!("row has {} characters, expected {n}", row.len()),
            ));
        }
        let bits = row
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(parse_err(lineno, format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        matrix.push(bits);
    }
    if let Some((lineno, _)) = body.next() {
        return Err(parse_err(lineno, "trailing content after the matrix"));
    }
    let tournament = Tournament::from_matrix(&matrix)?;
    let labels = match names {
        None => None,
        Some((lineno, names)) => {
            if names.len() != n {
                return Err(parse_err(
                    lineno,
                    format!("{} labels for {n} vertices", names.len()),
                ));
            }
            Some(LabelTable::named(names).map_err(|e| match e {
                Error::Parse { msg, .. } => parse_err(lineno, msg),
                other => other,
            })?)
        }
    };
    Ok(TourFile { tournament, labels })
}

pub fn emit_tour(t: &Tournament, labels: Option<&LabelTable>) -> String {
    let n = t.n();
    let mut out = String::with_capacity((n + 1) * (n + 2));
    if let Some(table) = labels {
        out.push_str(LABELS_DIRECTIVE);
        for v in 0..n {
            out.push(' ');
            out.push_str(table.name(v));
        }
        out.push('\n');
    }
    writeln!(out, "{n}").unwrap();
    for i in 0..n {
        out.extend((0..n).map(|j| if t.beats(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

/// Parses a `.votes` file against the candidate labels of its tournament.
pub fn parse_votes(text: &str, labels: &LabelTable) -> Result<Profile> {
    let n = labels.len();
    let mut profile = Profile::empty(n);
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let order = line
            .split_whitespace()
            .map(|tok| {
                labels
                    .lookup(tok)
                    .ok_or_else(|| parse_err(lineno, format!("unknown candidate {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if order.len() != n {
            return Err(parse_err(
                lineno,
                format!("voter ranks {} candidates, expected {n}", order.len()),
            ));
        }
        let ranking = Ranking::new(order).map_err(|e| parse_err(lineno, e.to_string()))?;
        profile.push(ranking)?;
    }
    Ok(profile)
}

pub fn emit_votes(p: &Profile, labels: &LabelTable) -> String {
    let mut out = String::new();
    for voter in p.voters() {
        for (i, &v) in voter.order().iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(labels.name(v));
        }
        out.push('\n');
    }
    out
}
