//! Deleting candidates: induced subtournaments and ranking subsequences.
//!
//! Kept vertices are renumbered densely in ascending order of their old label.
//! The [`Relabeling`] returned alongside the result maps between both numberings.

use crate::error::{Error, Result};
use crate::profile::{Profile, Ranking};
use crate::tournament::Tournament;

/// Dense renumbering of a kept vertex subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    kept: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl Relabeling {
    /// `keep` may be unsorted and contain duplicates; it must be nonempty and
    /// inside `0..n`.
    pub fn new(n: usize, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptyKeep);
        }
        if let Some(&label) = keep.iter().find(|&&v| v >= n) {
            return Err(Error::LabelOutOfRange { label, n });
        }
        let mut kept = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut new_of_old = vec![None; n];
        for (new, &old) in kept.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        Ok(Relabeling { kept, new_of_old })
    }

    /// Size of the restricted vertex set.
    pub fn len(&self) -> usize {
        self.kept.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kept.is_empty()
    }

    /// Size of the original vertex set.
    pub fn original_n(&self) -> usize {
        self.new_of_old.len()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.kept[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    /// Old labels of the kept vertices, ascending.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }
}

/// A restricted value with the renumbering that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Restricted<T> {
    pub value: T,
    pub relabeling: Relabeling,
}

pub trait Restrict: Sized {
    fn vertex_count(&self) -> usize;

    fn restrict_with(&self, relabeling: &Relabeling) -> Self;

    fn restrict(&self, keep: &[usize]) -> Result<Restricted<Self>> {
        let relabeling = Relabeling::new(self.vertex_count(), keep)?;
        Ok(Restricted {
            value: self.restrict_with(&relabeling),
            relabeling,
        })
    }
}

impl Restrict for Ranking {
    fn vertex_count(&self) -> usize {
        self.len()
    }

    fn restrict_with(&self, rl: &Relabeling) -> Self {
        assert_eq!(
            rl.original_n(),
            self.len(),
            "relabeling built for another vertex set"
        );
        Ranking::new_unchecked(self.order().iter().filter_map(|&v| rl.to_new(v)).collect())
    }
}

impl Restrict for Tournament {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn restrict_with(&self, rl: &Relabeling) -> Self {
        assert_eq!(
            rl.original_n(),
            self.n(),
            "relabeling built for another vertex set"
        );
        Tournament::from_fn(rl.len(), |i, j| self.beats(rl.to_old(i), rl.to_old(j)))
            .expect("relabeling is nonempty")
    }
}

impl Restrict for Profile {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn restrict_with(&self, rl: &Relabeling) -> Self {
        assert_eq!(
            rl.original_n(),
            self.n(),
            "relabeling built for another vertex set"
        );
        Profile::new_unchecked(
            rl.len(),
            self.voters().iter().map(|r| r.restrict_with(rl)).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::majority_pattern;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;

    #[test]
    fn ranking_subsequence() {
        let r = Ranking::new(vec![B, A, C]).unwrap();
        let got = r.restrict(&[A, C]).unwrap();
        // a -> 0, c -> 1
        assert_eq!(got.value.order(), &[0, 1]);
        assert_eq!(got.relabeling.to_old(1), C);
        assert_eq!(got.relabeling.to_new(B), None);
    }

    #[test]
    fn triangle_to_arc() {
        let t = Tournament::cyclic_triangle()
            .restrict(&[A, B])
            .unwrap()
            .value;
        assert_eq!(t.n(), 2);
        assert!(t.beats(0, 1));
    }

    #[test]
    fn restriction_commutes_with_majority() {
        let p = Profile::from_orders(3, [[A, B, C], [B, C, A], [C, A, B]]).unwrap();
        let keep = [A, B];
        let left = majority_pattern(&p.restrict(&keep).unwrap().value).unwrap();
        let right = majority_pattern(&p).unwrap().restrict(&keep).unwrap().value;
        assert_eq!(left, right);
        assert!(left.beats(0, 1));
    }

    #[test]
    fn bad_keep_sets() {
        let t = Tournament::cyclic_triangle();
        assert_eq!(t.restrict(&[]).unwrap_err(), Error::EmptyKeep);
        assert_eq!(
            t.restrict(&[0, 3]).unwrap_err(),
            Error::LabelOutOfRange { label: 3, n: 3 }
        );
    }

    #[test]
    fn relabeling_is_invertible() {
        let rl = Relabeling::new(10, &[7, 2, 9, 2]).unwrap();
        assert_eq!(rl.kept(), &[2, 7, 9]);
        for new in 0..rl.len() {
            assert_eq!(rl.to_new(rl.to_old(new)), Some(new));
        }
    }
}
