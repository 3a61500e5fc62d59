//! Voters, profiles, and the pairwise majority tally.

use std::fmt;

use crate::error::{Error, Result};
use crate::tournament::Tournament;

/// One voter's strict preference: a permutation of `0..n`, most preferred first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ranking {
    order: Vec<usize>,
}

impl Ranking {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        if n == 0 {
            return Err(Error::InvalidRanking("empty ranking".into()));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n {
                return Err(Error::InvalidRanking(format!("label {v} outside 0..{n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidRanking(format!("label {v} repeated")));
            }
        }
        Ok(Ranking { order })
    }

    /// The identity ranking `0, 1, ..., n-1`.
    pub fn identity(n: usize) -> Self {
        Ranking {
            order: (0..n).collect(),
        }
    }

    pub(crate) fn new_unchecked(order: Vec<usize>) -> Self {
        debug_assert!(Ranking::new(order.clone()).is_ok());
        Ranking { order }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn into_order(self) -> Vec<usize> {
        self.order
    }

    /// `positions()[v]` is the rank of vertex `v` (0 = top).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (p, &v) in self.order.iter().enumerate() {
            pos[v] = p;
        }
        pos
    }

    /// `true` iff this voter ranks `i` above `j`.
    pub fn prefers(&self, i: usize, j: usize) -> bool {
        let pos = self.positions();
        pos[i] < pos[j]
    }

    pub fn reversed(&self) -> Self {
        Ranking {
            order: self.order.iter().rev().copied().collect(),
        }
    }
}

impl fmt::Debug for Ranking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.order)
    }
}

/// An ordered multiset of rankings over a common vertex set `0..n`.
///
/// Duplicates are kept; nothing is deduplicated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    n: usize,
    voters: Vec<Ranking>,
}

impl Profile {
    pub fn empty(n: usize) -> Self {
        Profile {
            n,
            voters: Vec::new(),
        }
    }

    pub fn new(n: usize, voters: Vec<Ranking>) -> Result<Self> {
        if let Some((idx, bad)) = voters.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::MalformedProfile(format!(
                "voter {idx} ranks {} candidates, expected {n}",
                bad.len()
            )));
        }
        Ok(Profile { n, voters })
    }

    /// Builds a profile from raw orders, validating each one.
    pub fn from_orders<I, V>(n: usize, orders: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vec<usize>>,
    {
        let voters = orders
            .into_iter()
            .enumerate()
            .map(|(idx, o)| {
                Ranking::new(o.into())
                    .map_err(|e| Error::MalformedProfile(format!("voter {idx}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, voters)
    }

    pub(crate) fn new_unchecked(n: usize, voters: Vec<Ranking>) -> Self {
        debug_assert!(voters.iter().all(|r| r.len() == n));
        Profile { n, voters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of voters.
    pub fn len(&self) -> usize {
        self.voters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.voters.is_empty()
    }

    pub fn voters(&self) -> &[Ranking] {
        &self.voters
    }

    pub fn push(&mut self, r: Ranking) -> Result<()> {
        if r.len() != self.n {
            return Err(Error::MalformedProfile(format!(
                "ranking over {} candidates pushed onto a profile over {}",
                r.len(),
                self.n
            )));
        }
        self.voters.push(r);
        Ok(())
    }
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.voters).finish()
    }
}

/// Signed pairwise tallies: `get(i, j)` is the number of voters ranking `i`
/// above `j` minus the number ranking `j` above `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct MarginMatrix {
    n: usize,
    voters: usize,
    margin: Vec<i32>,
}

impl MarginMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of voters tallied.
    pub fn voters(&self) -> usize {
        self.voters
    }

    pub fn get(&self, i: usize, j: usize) -> i32 {
        self.margin[i * self.n + j]
    }

    /// Off-diagonal pairs `(i, j)`, `i < j`, with their margin.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
        (0..self.n).flat_map(move |i| (i + 1..self.n).map(move |j| (i, j, self.get(i, j))))
    }

    /// The first pair `(i, j)`, `i < j`, with a zero margin.
    pub fn first_tie(&self) -> Option<(usize, usize)> {
        self.pairs()
            .find(|&(_, _, m)| m == 0)
            .map(|(i, j, _)| (i, j))
    }
}

impl fmt::Debug for MarginMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "MarginMatrix(n = {}, r = {})", self.n, self.voters)?;
        for i in 0..self.n {
            writeln!(f, "  {:?}", &self.margin[i * self.n..(i + 1) * self.n])?;
        }
        Ok(())
    }
}

/// Tallies every pair over all voters.
pub fn margins(p: &Profile) -> MarginMatrix {
    let r = p.voters.len();
    // narrow counters let the inner loop vectorize twice as wide
    let ahead: Vec<u32> = if r <= u16::MAX as usize {
        count_ahead::<u16>(p).into_iter().map(u32::from).collect()
    } else {
        count_ahead::<u32>(p)
    };
    let n = p.n;
    let r = r as i64;
    let mut margin = vec![0i32; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let m = (2 * i64::from(ahead[i * n + j]) - r) as i32;
            margin[i * n + j] = m;
            margin[j * n + i] = -m;
        }
    }
    MarginMatrix {
        n,
        voters: p.voters.len(),
        margin,
    }
}

/// `ahead[i * n + j]`, `i < j`: voters placing `i` above `j`.
fn count_ahead<C: Counter>(p: &Profile) -> Vec<C> {
    let n = p.n;
    assert!(n <= 1 << 16, "rank positions are stored as u16");
    let mut ahead = vec![C::default(); n * n];
    let mut pos = vec![0u16; n];
    for voter in &p.voters {
        for (rank, &v) in voter.order.iter().enumerate() {
            pos[v] = rank as u16;
        }
        for i in 0..n {
            let pi = pos[i];
            let row = &mut ahead[i * n + i + 1..(i + 1) * n];
            for (count, &pj) in row.iter_mut().zip(&pos[i + 1..]) {
                *count = count.bump(pj > pi);
            }
        }
    }
    ahead
}

trait Counter: Copy + Default {
    fn bump(self, hit: bool) -> Self;
}

// wrapping keeps the loop branch-free under overflow checks; callers pick a
// width that cannot overflow
impl Counter for u16 {
    fn bump(self, hit: bool) -> Self {
        self.wrapping_add(u16::from(hit))
    }
}

impl Counter for u32 {
    fn bump(self, hit: bool) -> Self {
        self.wrapping_add(u32::from(hit))
    }
}

/// The strong pattern generated by `p`; any tied pair is an error.
pub fn majority_pattern(p: &Profile) -> Result<Tournament> {
    if p.is_empty() && p.n < 2 {
        return Err(Error::EmptyProfile);
    }
    let m = margins(p);
    if let Some((a, b)) = m.first_tie() {
        return Err(Error::Tie { a, b });
    }
    Tournament::from_fn(p.n, |i, j| m.get(i, j) > 0)
}
