//! Right and left minimal period arrays in `O(k·n)`.
//!
//! The main suffix tree is built in Weiner order while each node `v` is
//! annotated, at creation, with `π(v) = mp_s^k(τ(v))`:
//!
//! * a node `y` created by splitting `x → z` inherits `π(z)` when
//!   `δ(y) >= k·π(z)`, and is infinite otherwise;
//! * the new leaf inherits a finite `π` from its parent;
//! * otherwise the leaf's period lies in `(δ(y)/k, δ(y)/(k-1)]` and is read
//!   from a small auxiliary suffix tree over a window `w[i..j]` that is
//!   extended while it stays short relative to its creation depth `d` and
//!   rebuilt when it grows too long or the parent depth drops below `d/2`.
//!
//! `rmp[i]` is then `π(leaf_i)`; `lmp` is `rmp` of the reversed word, read
//! backwards.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::mp::mp_unchecked;
use crate::period::{Period, PeriodArray};
use crate::suffix_tree::{NodeId, SplitInfo, SuffixTree};
use crate::word::{reverse, Word};

/// `mp_s^k(w[i..n])` for every position `i`.
pub fn compute_rmp(word: &Word, s: usize, k: usize) -> Result<PeriodArray> {
    RmpEngine::new(word, s, k).run().map(|o| o.periods)
}

/// `mp_s^k(reverse(w[1..i]))` for every position `i`.
pub fn compute_lmp(word: &Word, s: usize, k: usize) -> Result<PeriodArray> {
    let mut v = compute_rmp(&reverse(word), s, k)?.into_vec();
    v.reverse();
    Ok(v.into())
}

/// `π(y)` for a node `y` split off above `z`.
pub fn split_period(depth_y: usize, pi_z: Period, k: usize) -> Period {
    match pi_z {
        Period::Finite(m) if depth_y >= k * m => pi_z,
        _ => Period::Infinite,
    }
}

/// Annotates the node created by `split` from its child's period.
pub fn annotate_split(tree: &mut SuffixTree, split: SplitInfo, k: usize) {
    let pi_z = tree.pi(split.z).expect("π(z) is set before z can be split");
    let pi = split_period(tree.depth(split.y), pi_z, k);
    tree.set_pi(split.y, pi);
}

/// Step counters for one run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RmpStats {
    /// Weiner construction work in the main tree.
    pub main_work: u64,
    /// Construction work across every auxiliary tree.
    pub aux_work: u64,
    /// Work inside minimal-period queries on auxiliary trees.
    pub mp_work: u64,
    pub aux_builds: u64,
    pub mp_calls: u64,
}

impl RmpStats {
    pub fn total(&self) -> u64 {
        self.main_work + self.aux_work + self.mp_work
    }
}

/// One minimal-period query on an auxiliary tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MpCall {
    /// 1-based position `i` (the window start).
    pub position: usize,
    /// 1-based window end `j`.
    pub window_end: usize,
    /// Integer threshold `max{s, ⌊δ(y)/k⌋}`.
    pub threshold: usize,
    pub leaves_under_h: usize,
    pub result: Period,
}

#[derive(Debug, Clone)]
pub struct RmpOutcome {
    pub periods: PeriodArray,
    pub stats: RmpStats,
    /// The annotated main tree, when requested.
    pub tree: Option<SuffixTree>,
    /// Every auxiliary query, when requested.
    pub mp_calls: Vec<MpCall>,
    /// Broken loop invariants, when collecting.
    pub violations: Vec<String>,
}

/// Configurable runner; [`compute_rmp`] is the plain entry point.
#[derive(Debug, Clone)]
pub struct RmpEngine<'w> {
    word: &'w Word,
    s: usize,
    k: usize,
    keep_tree: bool,
    record_calls: bool,
    collect_violations: bool,
}

struct Aux {
    tree: SuffixTree,
    depth: usize,
    end: usize,
    clamped: bool,
}

impl<'w> RmpEngine<'w> {
    pub fn new(word: &'w Word, s: usize, k: usize) -> Self {
        RmpEngine {
            word,
            s,
            k,
            keep_tree: false,
            record_calls: false,
            collect_violations: false,
        }
    }

    /// Return the annotated main tree.
    pub fn keep_tree(mut self, yes: bool) -> Self {
        self.keep_tree = yes;
        self
    }

    /// Log every auxiliary minimal-period query.
    pub fn record_calls(mut self, yes: bool) -> Self {
        self.record_calls = yes;
        self
    }

    /// Check the loop invariants every iteration and report violations
    /// instead of asserting. Without this, the checks run as debug
    /// assertions.
    pub fn collect_violations(mut self, yes: bool) -> Self {
        self.collect_violations = yes;
        self
    }

    pub fn run(&self) -> Result<RmpOutcome> {
        let (s, k) = (self.s, self.k);
        if k < 2 {
            return Err(Error::InvalidExponent { k, min: 2 });
        }
        let n = self.word.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        let checking = self.collect_violations || cfg!(debug_assertions);
        let mut violations = Vec::new();
        let mut check = |ok: bool, what: &dyn Fn() -> String| {
            if ok {
                return;
            }
            if self.collect_violations {
                violations.push(what());
            } else {
                debug_assert!(ok, "{}", what());
            }
        };

        let text: Arc<[u16]> = Arc::from(self.word.text());
        let sigma = self.word.sigma();
        let mut main = SuffixTree::new(text.clone(), sigma, n, n)?;
        main.set_pi(main.root(), Period::Infinite);
        main.set_pi(main.first_leaf(), Period::Infinite);

        let mut rmp = vec![Period::Infinite; n];
        let mut stats = RmpStats::default();
        let mut calls = Vec::new();
        let mut aux: Option<Aux> = None;
        // Destroyed auxiliary trees are recycled to keep their allocations.
        let mut spare: Option<SuffixTree> = None;
        let mut prev_parent_depth = 0usize;
        let hard_floor = (k - 1) * (s + 1);

        for i in (1..n).rev() {
            let ext = main.extend_step();
            let y = ext.parent;
            if let Some(split) = ext.split {
                annotate_split(&mut main, split, k);
                if checking {
                    let x = main.parent(split.y).expect("split node has a parent");
                    check(period_bound_holds(&main, split.y, x, k), &|| {
                        format!("i={i}: bound on π(y) under its parent")
                    });
                    check(period_bound_holds(&main, split.z, split.y, k), &|| {
                        format!("i={i}: bound on π(z) under the split node")
                    });
                }
            }
            let dy = main.depth(y);

            if let Some(a) = &aux {
                if (a.end - i + 1) * (k - 1) > 2 * k * a.depth || 2 * dy < a.depth {
                    if self.collect_violations {
                        audit(&a.tree, &mut check);
                    }
                    spare = aux.take().map(|a| a.tree);
                }
            }
            if checking {
                check(dy <= prev_parent_depth + 1, &|| {
                    format!("i={i}: parent depth {dy} jumped from {prev_parent_depth}")
                });
                if let Some(a) = &aux {
                    let d = a.depth;
                    check((a.end - i + 1) * (k - 1) <= 2 * k * d, &|| {
                        format!("i={i}: window [{i}..{}] too long for d={d}", a.end)
                    });
                    check(d <= 2 * dy && (a.clamped || dy <= 2 * d), &|| {
                        format!("i={i}: δ(y)={dy} outside [d/2, 2d] for d={d}")
                    });
                }
            }
            prev_parent_depth = dy;

            let pi_y = main.pi(y).expect("every node is annotated at creation");
            let pi_leaf = if pi_y.is_finite() || dy < hard_floor {
                // A finite parent period carries over; below the floor no
                // period > s fits in δ(y)/(k-1).
                if let Some(a) = &mut aux {
                    a.tree.extend_step();
                }
                pi_y
            } else {
                match &mut aux {
                    Some(a) => {
                        a.tree.extend_step();
                    }
                    None => {
                        let d = dy;
                        let span = ((k + 1) * d).div_ceil(k - 1);
                        let want = i + span - 1;
                        let end = want.min(n);
                        let mut tree = match spare.take() {
                            Some(mut t) => {
                                t.reset(end - 1);
                                t
                            }
                            None => SuffixTree::new(text.clone(), sigma, end, end)?,
                        };
                        for _ in i..end {
                            tree.extend_step();
                        }
                        stats.aux_builds += 1;
                        aux = Some(Aux {
                            tree,
                            depth: d,
                            end,
                            clamped: end < want,
                        });
                    }
                }
                let a = aux.as_ref().expect("auxiliary tree is live");
                let threshold = s.max(dy / k);
                let (p, trace) = mp_unchecked(&a.tree, threshold, k);
                stats.mp_calls += 1;
                stats.mp_work += trace.work() as u64;
                if self.record_calls {
                    calls.push(MpCall {
                        position: i,
                        window_end: a.end,
                        threshold,
                        leaves_under_h: trace.leaves_under_h,
                        result: p,
                    });
                }
                p
            };
            main.set_pi(ext.leaf, pi_leaf);
            if checking {
                check(period_bound_holds(&main, ext.leaf, y, k), &|| {
                    format!("i={i}: bound on π(leaf_i)")
                });
            }
            rmp[i - 1] = pi_leaf;
        }

        if self.collect_violations {
            audit(&main, &mut check);
            if let Some(a) = &aux {
                audit(&a.tree, &mut check);
            }
        }
        stats.main_work = main.work();
        // At most one auxiliary tree object ever exists; it is recycled.
        stats.aux_work = aux.as_ref().map_or(0, |a| a.tree.work())
            + spare.as_ref().map_or(0, |t| t.work());
        Ok(RmpOutcome {
            periods: rmp.into(),
            stats,
            tree: self.keep_tree.then_some(main),
            mp_calls: calls,
            violations,
        })
    }
}

fn audit(tree: &SuffixTree, check: &mut impl FnMut(bool, &dyn Fn() -> String)) {
    let (i, j) = tree.window();
    if let Err(e) = tree.validate_structure() {
        check(false, &|| format!("tree of w[{i}..{j}]: {e}"));
    }
    if let Err((p, q)) = tree.check_leaf_edges_monotone() {
        check(false, &|| format!("tree of w[{i}..{j}]: edge to leaf_{p} longer than to leaf_{q}"));
    }
}

/// If `π(parent)` is infinite then `π(node)` is infinite or
/// `δ(parent)/k < π(node) <= δ(parent)/(k-1)`.
fn period_bound_holds(tree: &SuffixTree, node: NodeId, parent: NodeId, k: usize) -> bool {
    if tree.pi(parent) != Some(Period::Infinite) {
        return true;
    }
    match tree.pi(node) {
        Some(Period::Finite(m)) => {
            let dp = tree.depth(parent);
            dp < k * m && (k - 1) * m <= dp
        }
        _ => true,
    }
}
