//! Transitive subtournaments.
//!
//! Every tournament on `n` vertices contains a transitive subtournament on at
//! least `floor(log2 n) + 1` vertices, and the greedy descent below finds one:
//! take a vertex of maximum out-degree, then recurse into the vertices it
//! beats. Since the chosen vertex beats at least half of the others, the
//! working set shrinks by at most half per pick.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::tournament::{Tournament, VertexSet};

/// Default vertex cap for [`max_transitive_exhaustive`].
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 16;

/// Caps above this are refused outright; the search visits `2^n` subsets.
pub const MAX_EXHAUSTIVE_CAP: usize = 24;

/// `floor(log2 n)` for `n >= 1`.
pub fn floor_log2(n: usize) -> usize {
    assert!(n >= 1, "log2 of zero");
    (usize::BITS - 1 - n.leading_zeros()) as usize
}

/// A sequence of vertices in which every earlier vertex beats every later one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransitiveChain {
    vertices: Vec<usize>,
}

impl TransitiveChain {
    /// Checks the chain against its host tournament.
    pub fn new(host: &Tournament, vertices: Vec<usize>) -> Result<Self> {
        if let Some(&label) = vertices.iter().find(|&&v| v >= host.n()) {
            return Err(Error::LabelOutOfRange { label, n: host.n() });
        }
        for (i, &u) in vertices.iter().enumerate() {
            for &w in &vertices[i + 1..] {
                if u == w {
                    return Err(Error::InvalidTournament(format!(
                        "vertex {u} repeated in chain"
                    )));
                }
                if !host.beats(u, w) {
                    return Err(Error::InvalidTournament(format!(
                        "chain lists {u} before {w} but {w} -> {u}"
                    )));
                }
            }
        }
        Ok(TransitiveChain { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_valid_in(&self, host: &Tournament) -> bool {
        Self::new(host, self.vertices.clone()).is_ok()
    }

    /// Drops the last (weakest) vertex. A prefix of a chain is a chain.
    pub fn truncated(&self, len: usize) -> Self {
        TransitiveChain {
            vertices: self.vertices[..len.min(self.vertices.len())].to_vec(),
        }
    }
}

/// The greedy chain together with the working-set size before each pick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub chain: TransitiveChain,
    /// `working_sizes[i]` is the working-set size when the `i`-th vertex was
    /// picked; a trailing 0 marks termination.
    pub working_sizes: Vec<usize>,
}

/// Greedy descent into out-neighbourhoods; ties on out-degree go to the
/// lowest label.
pub fn greedy_transitive_chain(t: &Tournament) -> TransitiveChain {
    greedy_transitive_trace(t).chain
}

pub fn greedy_transitive_trace(t: &Tournament) -> GreedyTrace {
    let mut working = VertexSet::full(t.n());
    let mut chain = Vec::new();
    let mut working_sizes = Vec::new();
    loop {
        let m = working.len();
        working_sizes.push(m);
        if m == 0 {
            break;
        }
        let mut pick = None;
        for v in working.iter() {
            let d = t.out_degree_within(v, &working);
            if pick.is_none_or(|(_, best)| d > best) {
                pick = Some((v, d));
            }
        }
        let (pick, _) = pick.expect("working set is nonempty");
        chain.push(pick);
        working = t.out_neighbors_within(pick, &working);
        debug_assert!(working.len() >= m / 2);
    }
    GreedyTrace {
        chain: TransitiveChain { vertices: chain },
        working_sizes,
    }
}

/// A longest transitive chain, found by scanning vertex subsets from largest
/// to smallest. Among longest chains the lexicographically least is returned.
pub fn max_transitive_exhaustive(t: &Tournament, n_cap: usize) -> Result<TransitiveChain> {
    let cap = n_cap.min(MAX_EXHAUSTIVE_CAP);
    if t.n() > cap {
        return Err(Error::CapExceeded { n: t.n(), cap });
    }
    let n = t.n();
    for size in (1..=n).rev() {
        let best = (0..n)
            .combinations(size)
            .filter_map(|subset| chain_order(t, &subset))
            .min();
        if let Some(vertices) = best {
            return Ok(TransitiveChain { vertices });
        }
    }
    unreachable!("any single vertex is a chain")
}

/// Orders `subset` as a chain when it induces a transitive subtournament.
fn chain_order(t: &Tournament, subset: &[usize]) -> Option<Vec<usize>> {
    let within = VertexSet::from_iter(t.n(), subset.iter().copied());
    let s = subset.len();
    let mut slot = vec![usize::MAX; s];
    for &v in subset {
        let d = t.out_degree_within(v, &within);
        let idx = s - 1 - d;
        if slot[idx] != usize::MAX {
            return None;
        }
        slot[idx] = v;
    }
    Some(slot)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log2_floor() {
        let got: Vec<_> = [1, 2, 3, 4, 7, 8, 64, 511, 512].map(floor_log2).to_vec();
        assert_eq!(got, vec![0, 1, 1, 2, 2, 3, 6, 8, 9]);
    }

    #[test]
    fn greedy_on_transitive() {
        let t = Tournament::from_linear_order(&[3, 1, 0, 2]).unwrap();
        assert_eq!(greedy_transitive_chain(&t).vertices(), &[3, 1, 0, 2]);
    }

    #[test]
    fn greedy_on_cyclic_triangle() {
        // all out-degrees are 1: picks 0, then its only out-neighbour 1
        let c = greedy_transitive_chain(&Tournament::cyclic_triangle());
        assert_eq!(c.vertices(), &[0, 1]);
    }

    #[test]
    fn greedy_floor_at_64() {
        let t = Tournament::random(64, 7).unwrap();
        let trace = greedy_transitive_trace(&t);
        assert!(trace.chain.len() >= 7);
        assert!(trace.chain.is_valid_in(&t));
        for w in trace.working_sizes.windows(2) {
            assert!(w[1] >= (w[0] - 1).div_ceil(2), "{:?}", trace.working_sizes);
        }
    }

    #[test]
    fn exhaustive_small_cases() {
        let t = Tournament::from_linear_order(&[4, 2, 0, 1, 3]).unwrap();
        assert_eq!(
            max_transitive_exhaustive(&t, DEFAULT_EXHAUSTIVE_CAP)
                .unwrap()
                .vertices(),
            &[4, 2, 0, 1, 3]
        );
        let c = max_transitive_exhaustive(&Tournament::cyclic_triangle(), 16).unwrap();
        // arcs 0->1, 1->2, 2->0; lexicographically least is [0, 1]
        assert_eq!(c.vertices(), &[0, 1]);
    }

    #[test]
    fn exhaustive_refuses_above_cap() {
        let t = Tournament::random(6, 1).unwrap();
        assert_eq!(
            max_transitive_exhaustive(&t, 5),
            Err(Error::CapExceeded { n: 6, cap: 5 })
        );
        let big = Tournament::random(30, 1).unwrap();
        assert_eq!(
            max_transitive_exhaustive(&big, 100),
            Err(Error::CapExceeded {
                n: 30,
                cap: MAX_EXHAUSTIVE_CAP
            })
        );
    }

    #[test]
    fn chain_validation() {
        let t = Tournament::cyclic_triangle();
        assert!(TransitiveChain::new(&t, vec![0, 1]).is_ok());
        assert!(TransitiveChain::new(&t, vec![1, 0]).is_err());
        assert!(TransitiveChain::new(&t, vec![0, 0]).is_err());
        assert!(TransitiveChain::new(&t, vec![5]).is_err());
    }
}
