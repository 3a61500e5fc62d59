//! Strong preference patterns: complete, asymmetric relations on `0..n`.
//!
//! Rows are stored as packed bitsets so that out-neighbourhoods restricted to
//! a working set can be counted with a handful of `popcount`s.

use std::fmt;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A fixed-size vertex set backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let tz = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    fn intersect_with(&mut self, other: &[u64]) {
        for (w, o) in self.words.iter_mut().zip(other) {
            *w &= o;
        }
    }

    fn count_and(&self, other: &[u64]) -> usize {
        self.words
            .iter()
            .zip(other)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Result of [`Tournament::transitivity`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transitivity {
    /// The relation is a linear order; vertices listed from winner to loser.
    Transitive(Vec<usize>),
    /// A 3-cycle `x -> y -> z -> x`.
    Cyclic(usize, usize, usize),
}

impl Transitivity {
    pub fn is_transitive(&self) -> bool {
        matches!(self, Transitivity::Transitive(_))
    }
}

/// A tournament on vertices `0..n`: for every pair exactly one of `i -> j`,
/// `j -> i` holds, and no vertex beats itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tournament {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl Tournament {
    /// Builds a tournament from an orientation rule queried once per pair
    /// `i < j`; `beats(i, j) == true` means `i -> j`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let stride = words_for(n);
        let mut t = Tournament {
            n,
            stride,
            rows: vec![0; n * stride],
        };
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    t.set(i, j);
                } else {
                    t.set(j, i);
                }
            }
        }
        Ok(t)
    }

    /// Validates a full boolean matrix.
    #[allow(clippy::needless_range_loop)]
    pub fn from_matrix(m: &[Vec<bool>]) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::NoVertices);
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTournament(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if row[i] {
                return Err(Error::InvalidTournament(format!("vertex {i} beats itself")));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if m[i][j] == m[j][i] {
                    let what = if m[i][j] { "both arcs" } else { "no arc" };
                    return Err(Error::InvalidTournament(format!(
                        "pair ({i}, {j}) has {what}"
                    )));
                }
            }
        }
        Self::from_fn(n, |i, j| m[i][j])
    }

    /// The transitive tournament whose linear order is `order` (winner first).
    pub fn from_linear_order(order: &[usize]) -> Result<Self> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidTournament(format!(
                    "{order:?} is not a permutation of 0..{n}"
                )));
            }
            pos[v] = p;
        }
        Self::from_fn(n, |i, j| pos[i] < pos[j])
    }

    /// The `pair_index`-th tournament in the enumeration of all `2^C(n,2)`
    /// labelled tournaments. Bit `p` of `mask` orients the `p`-th pair
    /// `(i, j)`, `i < j`, in row-major order; a set bit means `i -> j`.
    pub fn from_pair_mask(n: usize, mask: u64) -> Result<Self> {
        let mut p = 0;
        Self::from_fn(n, |_, _| {
            let bit = mask >> p & 1 == 1;
            p += 1;
            bit
        })
    }

    /// Every labelled tournament on `n` vertices, in pair-mask order.
    /// Only sensible for tiny `n`.
    pub fn enumerate_all(n: usize) -> impl Iterator<Item = Tournament> {
        assert!(
            (1..=8).contains(&n),
            "enumeration is limited to 1..=8 vertices"
        );
        let pairs = n * (n - 1) / 2;
        (0..1u64 << pairs).map(move |m| Self::from_pair_mask(n, m).expect("n >= 1"))
    }

    /// A pseudorandom tournament. Each pair `(i, j)`, `i < j`, visited in
    /// row-major order, consumes one `u32` from a ChaCha8 stream seeded with
    /// `seed_from_u64(seed)`; `i -> j` iff the top bit of that word is set.
    pub fn random(n: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::from_fn(n, |_, _| rng.next_u32() >> 31 == 1)
    }

    fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.stride + j / WORD] |= 1 << (j % WORD);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `true` iff `i -> j`.
    pub fn beats(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.stride..(i + 1) * self.stride]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Out-degree of `v` counting only targets inside `within`.
    pub fn out_degree_within(&self, v: usize, within: &VertexSet) -> usize {
        within.count_and(self.row(v))
    }

    /// Vertices of `within` that `v` beats.
    pub fn out_neighbors_within(&self, v: usize, within: &VertexSet) -> VertexSet {
        let mut s = within.clone();
        s.intersect_with(self.row(v));
        s
    }

    pub fn score_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.out_degree(v)).collect()
    }

    /// Row-major boolean matrix view.
    pub fn to_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.beats(i, j)).collect())
            .collect()
    }

    /// Decides transitivity. A transitive tournament is returned with its
    /// linear order (descending out-degree); otherwise the lexicographically
    /// first 3-cycle `(x, y, z)` with `x -> y -> z -> x`.
    pub fn transitivity(&self) -> Transitivity {
        let n = self.n;
        let mut by_score: Vec<usize> = (0..n).collect();
        by_score.sort_by_key(|&v| std::cmp::Reverse(self.out_degree(v)));
        let distinct = by_score
            .iter()
            .enumerate()
            .all(|(rank, &v)| self.out_degree(v) == n - 1 - rank);
        if distinct {
            return Transitivity::Transitive(by_score);
        }
        for x in 0..n {
            for y in (0..n).filter(|&y| self.beats(x, y)) {
                if let Some(z) = (0..n).find(|&z| self.beats(y, z) && self.beats(z, x)) {
                    return Transitivity::Cyclic(x, y, z);
                }
            }
        }
        unreachable!("repeated scores imply a 3-cycle")
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity().is_transitive()
    }

    /// The cyclic triangle `0 -> 1 -> 2 -> 0`.
    pub fn cyclic_triangle() -> Self {
        Self::from_fn(3, |i, j| !(i == 0 && j == 2)).expect("n = 3")
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Tournament({})", self.n)?;
        for i in 0..self.n {
            let row: String = (0..self.n)
                .map(|j| if self.beats(i, j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {row}")?;
        }
        Ok(())
    }
}
