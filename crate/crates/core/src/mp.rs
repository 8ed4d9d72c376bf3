//! Minimal period `mp_s^k` of a window read off its suffix tree.
//!
//! `w = x^k y` with `|x| = m` iff the suffixes starting at 1 and `m + 1`
//! share a prefix of length `(k-1)m`. Leaves whose common prefix with
//! `leaf_1` reaches `(k-1)(s+1)` all hang below the highest ancestor `h` of
//! `leaf_1` with `δ(h) >= (k-1)(s+1)`, so only the subtree of `h` is
//! searched.

use crate::error::{Error, Result};
use crate::lca::build_index;
use crate::period::Period;
use crate::suffix_tree::SuffixTree;

/// What one call looked at; used for cost accounting and bound checks.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MpTrace {
    /// Parent steps taken from `leaf_1` to `h`.
    pub climb: usize,
    /// Leaves in the subtree of `h` (0 when the length guard fired).
    pub leaves_under_h: usize,
    /// Nodes indexed for LCA.
    pub indexed_nodes: usize,
}

impl MpTrace {
    pub fn work(&self) -> usize {
        1 + self.climb + 2 * self.indexed_nodes
    }
}

/// Smallest `m > s` such that the window's prefix of length `k·m` is a k-th
/// power, or infinity. Positions are taken relative to the window start.
pub fn compute_mp(tree: &SuffixTree, s: usize, k: usize) -> Result<Period> {
    compute_mp_traced(tree, s, k).map(|(p, _)| p)
}

pub fn compute_mp_traced(tree: &SuffixTree, s: usize, k: usize) -> Result<(Period, MpTrace)> {
    if k < 2 {
        return Err(Error::InvalidExponent { k, min: 2 });
    }
    Ok(mp_unchecked(tree, s, k))
}

pub(crate) fn mp_unchecked(tree: &SuffixTree, s: usize, k: usize) -> (Period, MpTrace) {
    let n = tree.window_len();
    let mut trace = MpTrace::default();
    if k * (s + 1) > n {
        return (Period::Infinite, trace);
    }
    let anchor = (k - 1) * (s + 1);
    let leaf_1 = tree.first_leaf();
    let mut h = leaf_1;
    // δ(root) = 0 < anchor, so the climb stops below the root.
    while let Some(p) = tree.parent(h) {
        if tree.depth(p) < anchor {
            break;
        }
        h = p;
        trace.climb += 1;
    }

    let index = build_index(tree, h).expect("h is in the tree");
    trace.indexed_nodes = index.node_count();
    let (window_start, _) = tree.window();
    let mut best: Option<usize> = None;
    for &node in index.tour() {
        let Some(pos) = tree.leaf_position(node) else {
            continue;
        };
        if node == leaf_1 {
            continue;
        }
        trace.leaves_under_h += 1;
        let m = pos - window_start;
        // Leaves below h can still carry a period <= s; those do not count.
        if m <= s || best.is_some_and(|b| b <= m) {
            continue;
        }
        let common = index.lca(leaf_1, node).expect("both leaves are indexed");
        if tree.depth(common) >= (k - 1) * m {
            best = Some(m);
        }
    }
    // leaf_1 itself lies under h
    trace.leaves_under_h += 1;
    (best.into(), trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::mp_oracle;
    use crate::word::Word;
    use std::sync::Arc;

    fn tree_of(s: &str) -> SuffixTree {
        let w = Word::new(s);
        SuffixTree::build(Arc::from(w.text()), w.sigma(), 1, w.len()).unwrap()
    }

    #[test]
    fn golden_values() {
        let t = tree_of("0100101001");
        assert_eq!(compute_mp(&t, 0, 2).unwrap(), Period::Finite(3));
        assert_eq!(compute_mp(&t, 4, 2).unwrap(), Period::Finite(5));
        assert_eq!(compute_mp(&t, 5, 2).unwrap(), Period::Infinite);
    }

    #[test]
    fn length_guard() {
        let t = tree_of("abab");
        // k(s+1) = 6 > 4
        let (p, trace) = compute_mp_traced(&t, 2, 2).unwrap();
        assert_eq!(p, Period::Infinite);
        assert_eq!(trace.leaves_under_h, 0);
    }

    #[test]
    fn runs_of_one_letter() {
        let t = tree_of("aaaaaa");
        assert_eq!(compute_mp(&t, 0, 3).unwrap(), Period::Finite(1));
        assert_eq!(compute_mp(&t, 1, 3).unwrap(), Period::Finite(2));
        assert_eq!(compute_mp(&t, 2, 3).unwrap(), Period::Infinite);
        assert_eq!(compute_mp(&t, 2, 2).unwrap(), Period::Finite(3));
    }

    #[test]
    fn rejects_small_exponent() {
        let t = tree_of("aa");
        assert_eq!(
            compute_mp(&t, 0, 1),
            Err(Error::InvalidExponent { k: 1, min: 2 })
        );
    }

    #[test]
    fn windowed_tree_uses_relative_positions() {
        let w = Word::new("xyzabcabcq");
        let text: Arc<[u16]> = Arc::from(w.text());
        let t = SuffixTree::build(text, w.sigma(), 4, 9).unwrap();
        assert_eq!(compute_mp(&t, 0, 2).unwrap(), Period::Finite(3));
        assert_eq!(compute_mp(&t, 3, 2).unwrap(), Period::Infinite);
    }

    #[test]
    fn matches_oracle_exhaustively() {
        for n in 1..=12usize {
            for mask in 0u32..(1 << n) {
                let s: String = (0..n)
                    .map(|b| if mask >> b & 1 == 1 { '1' } else { '0' })
                    .collect();
                let w = Word::new(&s);
                let t = tree_of(&s);
                for k in 2..=4 {
                                        for lo in 0..=2 {
                        let (got, trace) = compute_mp_traced(&t, lo, k).unwrap();
                        assert_eq!(got, mp_oracle(&w, lo, k), "{s} s={lo} k={k}");
                        if let Period::Finite(m) = got {
                            assert!(m > lo);
                            assert_eq!(w.factor(1, k * m), w.factor(1, m).repeat(k));
                        }
                        // h spans exactly the occurrences of w[1..(k-1)(s+1)]
                        let anchor = (k - 1) * (lo + 1);
                        if k * (lo + 1) <= n {
                            let u = &s.as_bytes()[..anchor];
                            let occ = s.as_bytes().windows(anchor).filter(|x| x == &u).count();
                            assert_eq!(trace.leaves_under_h, occ, "{s} s={lo} k={k}");
                        }
                    }
                }
            }
        }
    }
}
