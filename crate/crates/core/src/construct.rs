//! Building voter profiles that realize a given tournament.
//!
//! The inductive construction adds candidates two at a time. Given an odd
//! profile of `r` voters realizing the pattern on the old vertices, a new pair
//! `a -> b` is absorbed with `r + 2` voters:
//!
//! * `(r + 1) / 2` old voters become `b, ..., a` and the other `(r - 1) / 2`
//!   become `a, ..., b`, so `b` leads `a` by one among them;
//! * two tail voters `gamma a delta b sigma mu` and
//!   `rev(mu) a rev(sigma) rev(delta) rev(gamma) b` settle the pair and every
//!   arc between the pair and the old vertices, while agreeing with each
//!   other's reverse on the old vertices so that old pairs keep their margin.
//!
//! Segments classify each old vertex `x` by `x -> b` and `a -> x`:
//!
//! | segment | `x -> b` | `a -> x` |
//! |---------|----------|----------|
//! | gamma   | yes      | no       |
//! | delta   | yes      | yes      |
//! | sigma   | no       | yes      |
//! | mu      | no       | no       |
//!
//! Seeding this with a single voter listing a transitive subtournament gives a
//! profile of size `n - s + 1` for a seed chain of `s` vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::profile::{margins, Profile, Ranking};
use crate::restrict::{Relabeling, Restrict};
use crate::tournament::{Tournament, VertexSet};
use crate::transitive::{floor_log2, greedy_transitive_trace, TransitiveChain};

/// Old vertices classified against a new pair `a -> b`; each segment is in
/// ascending label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentPartition {
    pub a: usize,
    pub b: usize,
    pub gamma: Vec<usize>,
    pub delta: Vec<usize>,
    pub sigma: Vec<usize>,
    pub mu: Vec<usize>,
}

impl SegmentPartition {
    fn classify(t: &Tournament, old: impl Iterator<Item = usize>, a: usize, b: usize) -> Self {
        let mut p = SegmentPartition {
            a,
            b,
            gamma: Vec::new(),
            delta: Vec::new(),
            sigma: Vec::new(),
            mu: Vec::new(),
        };
        for x in old {
            let seg = match (t.beats(x, b), t.beats(a, x)) {
                (true, false) => &mut p.gamma,
                (true, true) => &mut p.delta,
                (false, true) => &mut p.sigma,
                (false, false) => &mut p.mu,
            };
            seg.push(x);
        }
        p
    }

    /// Number of old vertices covered.
    pub fn len(&self) -> usize {
        self.gamma.len() + self.delta.len() + self.sigma.len() + self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `gamma a delta b sigma mu`
    pub fn forward_tail(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len() + 2);
        v.extend(&self.gamma);
        v.push(self.a);
        v.extend(&self.delta);
        v.push(self.b);
        v.extend(&self.sigma);
        v.extend(&self.mu);
        v
    }

    /// `rev(mu) a rev(sigma) rev(delta) rev(gamma) b`
    pub fn backward_tail(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len() + 2);
        v.extend(self.mu.iter().rev());
        v.push(self.a);
        v.extend(self.sigma.iter().rev());
        v.extend(self.delta.iter().rev());
        v.extend(self.gamma.iter().rev());
        v.push(self.b);
        v
    }
}

fn check_pair(t: &Tournament, a: usize, b: usize) -> Result<()> {
    for v in [a, b] {
        if v >= t.n() {
            return Err(Error::LabelOutOfRange { label: v, n: t.n() });
        }
    }
    if a == b {
        return Err(Error::DegeneratePair(a));
    }
    if !t.beats(a, b) {
        return Err(Error::Orientation { a, b });
    }
    Ok(())
}

/// Classifies every vertex of `t_ext` other than `a` and `b`.
pub fn segment_partition(t_ext: &Tournament, a: usize, b: usize) -> Result<SegmentPartition> {
    check_pair(t_ext, a, b)?;
    Ok(SegmentPartition::classify(
        t_ext,
        (0..t_ext.n()).filter(|&x| x != a && x != b),
        a,
        b,
    ))
}

/// Wraps the old voters around `a`, `b` and appends both tails, in place.
fn absorb_pair(voters: &mut Vec<VecDeque<usize>>, part: &SegmentPartition) {
    let r = voters.len();
    debug_assert!(r % 2 == 1);
    let (a, b) = (part.a, part.b);
    for (i, v) in voters.iter_mut().enumerate() {
        if i < r.div_ceil(2) {
            v.push_front(b);
            v.push_back(a);
        } else {
            v.push_front(a);
            v.push_back(b);
        }
    }
    voters.push(part.forward_tail().into());
    voters.push(part.backward_tail().into());
}

/// Extends a profile over the old vertices of `t_ext` to one over all of them.
///
/// `p_old` is numbered densely over `t_ext`'s vertices minus `{a, b}` in
/// ascending order, which is how [`Restrict`] numbers them. The result is
/// numbered like `t_ext` and has exactly two more voters.
pub fn extend_pair(t_ext: &Tournament, a: usize, b: usize, p_old: &Profile) -> Result<Profile> {
    check_pair(t_ext, a, b)?;
    let n_ext = t_ext.n();
    let old: Vec<usize> = (0..n_ext).filter(|&x| x != a && x != b).collect();
    if p_old.n() != old.len() {
        return Err(Error::MalformedProfile(format!(
            "old profile ranks {} candidates, expected {}",
            p_old.n(),
            old.len()
        )));
    }
    let r = p_old.len();
    if r.is_multiple_of(2) {
        return Err(Error::EvenProfile(r));
    }
    let relabeling = Relabeling::new(n_ext, &old)?;
    let t_old = t_ext.restrict_with(&relabeling);
    let m = margins(p_old);
    for (i, j, margin) in m.pairs() {
        if (margin > 0) != t_old.beats(i, j) || margin == 0 {
            return Err(Error::Precondition {
                a: relabeling.to_old(i),
                b: relabeling.to_old(j),
                margin,
            });
        }
    }

    let mut voters: Vec<VecDeque<usize>> = p_old
        .voters()
        .iter()
        .map(|v| v.order().iter().map(|&x| relabeling.to_old(x)).collect())
        .collect();
    let part = SegmentPartition::classify(t_ext, old.into_iter(), a, b);
    absorb_pair(&mut voters, &part);
    Ok(into_profile(n_ext, voters))
}

fn into_profile(n: usize, voters: Vec<VecDeque<usize>>) -> Profile {
    Profile::new_unchecked(
        n,
        voters
            .into_iter()
            .map(|v| Ranking::new_unchecked(v.into()))
            .collect(),
    )
}

/// Upper bound on the voters needed for any `n`-vertex tournament:
/// `n - k` when `n - k` is odd and `n - k + 1` otherwise, `k = floor(log2 n)`.
pub fn corollary_bound(n: usize) -> usize {
    let k = floor_log2(n);
    if (n - k) % 2 == 1 {
        n - k
    } else {
        n - k + 1
    }
}

/// Trace of one [`synthesize`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub n: usize,
    pub k: usize,
    /// The seed chain actually used (after any parity trim).
    pub base_chain: TransitiveChain,
    /// Whether the greedy chain lost its last vertex to fix parity.
    pub base_trimmed: bool,
    /// Absorbed pairs `(a, b)` with `a -> b`, in order.
    pub steps: Vec<(usize, usize)>,
    pub final_size: usize,
    pub bound: usize,
}

impl ConstructionReport {
    /// Length of the greedy chain before trimming.
    pub fn greedy_chain_len(&self) -> usize {
        self.base_chain.len() + usize::from(self.base_trimmed)
    }
}

/// The state right after one pair has been absorbed during [`synthesize`].
///
/// Voters are labelled like the input tournament. The first `old_size` voters
/// are the wrapped old ones; the last two are the tails.
#[derive(Debug)]
pub struct ExtensionStep<'s> {
    pub partition: &'s SegmentPartition,
    pub old_size: usize,
    pub voters: &'s [VecDeque<usize>],
}

impl ExtensionStep<'_> {
    pub fn a(&self) -> usize {
        self.partition.a
    }

    pub fn b(&self) -> usize {
        self.partition.b
    }
}

/// Realizes `t` with the inductive construction.
pub fn synthesize(t: &Tournament) -> (Profile, ConstructionReport) {
    synthesize_observed(t, |_| {})
}

/// [`synthesize`], calling `observe` after every absorbed pair.
pub fn synthesize_observed(
    t: &Tournament,
    mut observe: impl FnMut(&ExtensionStep<'_>),
) -> (Profile, ConstructionReport) {
    let n = t.n();
    let greedy = greedy_transitive_trace(t).chain;
    let base_trimmed = (n - greedy.len()) % 2 == 1;
    let base_chain = if base_trimmed {
        greedy.truncated(greedy.len() - 1)
    } else {
        greedy
    };

    let mut processed = VertexSet::from_iter(n, base_chain.vertices().iter().copied());
    let remaining: Vec<usize> = (0..n).filter(|&v| !processed.contains(v)).collect();
    let mut voters = vec![VecDeque::from(base_chain.vertices().to_vec())];
    let mut steps = Vec::with_capacity(remaining.len() / 2);

    for pair in remaining.chunks_exact(2) {
        let (u, v) = (pair[0], pair[1]);
        let (a, b) = if t.beats(u, v) { (u, v) } else { (v, u) };
        let part = SegmentPartition::classify(t, processed.iter(), a, b);
        let old_size = voters.len();
        absorb_pair(&mut voters, &part);
        processed.insert(a);
        processed.insert(b);
        steps.push((a, b));
        observe(&ExtensionStep {
            partition: &part,
            old_size,
            voters: &voters,
        });
    }
    debug_assert_eq!(processed.len(), n);

    let final_size = voters.len();
    let report = ConstructionReport {
        n,
        k: floor_log2(n),
        base_chain,
        base_trimmed,
        steps,
        final_size,
        bound: corollary_bound(n),
    };
    (into_profile(n, voters), report)
}

/// The two-voters-per-arc baseline: for each arc `x -> y`, the voters
/// `x y rest...` and `rev(rest) x y` cancel on every pair except `(x, y)`.
pub fn mcgarvey_baseline(t: &Tournament) -> Result<Profile> {
    let n = t.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut voters = Vec::with_capacity(n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = if t.beats(i, j) { (i, j) } else { (j, i) };
            let rest = (0..n).filter(|&z| z != x && z != y);
            let mut first = vec![x, y];
            first.extend(rest.clone());
            let mut second: Vec<usize> = rest.rev().collect();
            second.extend([x, y]);
            voters.push(Ranking::new_unchecked(first));
            voters.push(Ranking::new_unchecked(second));
        }
    }
    Ok(Profile::new_unchecked(n, voters))
}
