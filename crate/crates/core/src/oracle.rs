//! Exact minimum voter counts for tiny tournaments.
//!
//! Iterative deepening over odd profile sizes. Even sizes are never minimal:
//! with an even number of voters every decided pair wins by at least two, so
//! dropping any voter leaves the pattern intact. Within one size, voter lists
//! are enumerated as non-decreasing sequences of permutation indices (one
//! representative per multiset), and a branch is cut as soon as some pair
//! cannot reach its required sign with the voters still to be placed.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::profile::{Profile, Ranking};
use crate::tournament::Tournament;

/// Default cap on the number of candidates.
pub const DEFAULT_ORACLE_CAP: usize = 4;
/// Caps above this are refused.
pub const HARD_ORACLE_CAP: usize = 5;
/// [`max_v_exact`] enumerates every tournament and stops here.
pub const MAX_V_CAP: usize = 4;
/// Default budget, counted in per-pair margin updates.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub n_cap: usize,
    pub budget: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            n_cap: DEFAULT_ORACLE_CAP,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl OracleConfig {
    fn effective_cap(&self) -> usize {
        self.n_cap.min(HARD_ORACLE_CAP)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub min_voters: usize,
    /// The canonically least optimal profile (voters in non-decreasing
    /// lexicographic order).
    pub witness: Profile,
    /// Every size tried, ascending; the last one succeeded.
    pub sizes_searched: Vec<usize>,
    /// Margin updates spent.
    pub work: u64,
}

struct Search {
    perms: Vec<Vec<usize>>,
    // signs[p][q]: +1 if perm p places the lower vertex of pair q first
    signs: Vec<Vec<i32>>,
    target: Vec<i32>,
    budget: u64,
    spent: u64,
}

impl Search {
    fn new(t: &Tournament, budget: u64) -> Self {
        let n = t.n();
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let signs = perms
            .iter()
            .map(|perm| {
                let mut pos = vec![0; n];
                for (p, &v) in perm.iter().enumerate() {
                    pos[v] = p;
                }
                pairs
                    .iter()
                    .map(|&(i, j)| if pos[i] < pos[j] { 1 } else { -1 })
                    .collect()
            })
            .collect();
        let target = pairs
            .iter()
            .map(|&(i, j)| if t.beats(i, j) { 1 } else { -1 })
            .collect();
        Search {
            perms,
            signs,
            target,
            budget,
            spent: 0,
        }
    }

    /// Returns Ok(true) when `chosen` was completed to a generating profile.
    fn dfs(&mut self, r: usize, chosen: &mut Vec<usize>, margin: &mut [i32]) -> Result<bool> {
        let placed = chosen.len();
        if placed == r {
            return Ok(margin.iter().zip(&self.target).all(|(m, s)| m * s > 0));
        }
        let start = chosen.last().copied().unwrap_or(0);
        let left_after = (r - placed - 1) as i32;
        for p in start..self.perms.len() {
            self.spent += margin.len() as u64;
            if self.spent > self.budget {
                return Err(Error::BudgetExceeded {
                    last_completed: None,
                });
            }
            let feasible = margin
                .iter()
                .zip(&self.signs[p])
                .zip(&self.target)
                .all(|((m, d), s)| (m + d) * s + left_after >= 1);
            if !feasible {
                continue;
            }
            for (m, d) in margin.iter_mut().zip(&self.signs[p]) {
                *m += d;
            }
            chosen.push(p);
            let found = self.dfs(r, chosen, margin)?;
            if found {
                return Ok(true);
            }
            chosen.pop();
            for (m, d) in margin.iter_mut().zip(&self.signs[p]) {
                *m -= d;
            }
        }
        Ok(false)
    }
}

/// The smallest number of voters whose majority relation is `t`.
pub fn min_voters_exact(t: &Tournament, config: &OracleConfig) -> Result<OracleResult> {
    let cap = config.effective_cap();
    if t.n() > cap {
        return Err(Error::CapExceeded { n: t.n(), cap });
    }
    let n = t.n();
    let mut search = Search::new(t, config.budget);
    let mut sizes_searched = Vec::new();
    // two voters per arc always suffice, so this terminates by n(n - 1) + 1
    for r in (1..).step_by(2) {
        let mut chosen = Vec::with_capacity(r);
        let mut margin = vec![0; search.target.len()];
        let found = search
            .dfs(r, &mut chosen, &mut margin)
            .map_err(|_| Error::BudgetExceeded {
                last_completed: sizes_searched.last().copied(),
            })?;
        sizes_searched.push(r);
        if found {
            let voters = chosen
                .iter()
                .map(|&p| Ranking::new_unchecked(search.perms[p].clone()))
                .collect();
            return Ok(OracleResult {
                min_voters: r,
                witness: Profile::new(n, voters)?,
                sizes_searched,
                work: search.spent,
            });
        }
    }
    unreachable!()
}

/// The largest minimum voter count over all labelled tournaments on `n`
/// vertices, with the first tournament (in pair-mask order) attaining it.
pub fn max_v_exact(n: usize, config: &OracleConfig) -> Result<(usize, Tournament)> {
    if n == 0 {
        return Err(Error::NoVertices);
    }
    if n > MAX_V_CAP {
        return Err(Error::CapExceeded { n, cap: MAX_V_CAP });
    }
    let mut best: Option<(usize, Tournament)> = None;
    for t in Tournament::enumerate_all(n) {
        let v = min_voters_exact(&t, config)?.min_voters;
        if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
            best = Some((v, t));
        }
    }
    Ok(best.expect("at least one tournament"))
}
