//! Lowest common ancestors over a subtree: Euler tour plus a sparse table
//! of range minima over the string depths along the tour.
//!
//! String depth strictly increases from parent to child, so the node of
//! minimum depth between two first occurrences in the tour is their LCA.
//! Preprocessing is `O(m log m)` for an `m`-node subtree; a query is two
//! table lookups.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::suffix_tree::{NodeId, SuffixTree};

#[derive(Debug, Clone)]
pub struct LcaIndex {
    root: NodeId,
    tour: Vec<NodeId>,
    first: HashMap<NodeId, u32>,
    /// `table[k][i]` = tour index of the shallowest node in `tour[i .. i + 2^k)`.
    table: Vec<Vec<u32>>,
    depths: Vec<u32>,
}

/// Indexes the subtree rooted at `subtree_root`.
pub fn build_index(tree: &SuffixTree, subtree_root: NodeId) -> Result<LcaIndex> {
    if !tree.contains(subtree_root) {
        return Err(Error::NodeNotInTree(subtree_root.raw()));
    }
    let mut tour = Vec::new();
    let mut depths = Vec::new();
    let mut first = HashMap::new();

    // Iterative DFS; a frame re-emits its node after each child returns.
    let mut stack: Vec<(NodeId, crate::suffix_tree::Children<'_>)> =
        vec![(subtree_root, tree.children(subtree_root))];
    first.insert(subtree_root, 0);
    tour.push(subtree_root);
    depths.push(tree.depth(subtree_root) as u32);
    while let Some((_, children)) = stack.last_mut() {
        match children.next() {
            Some(child) => {
                first.insert(child, tour.len() as u32);
                tour.push(child);
                depths.push(tree.depth(child) as u32);
                stack.push((child, tree.children(child)));
            }
            None => {
                stack.pop();
                if let Some((parent, _)) = stack.last() {
                    tour.push(*parent);
                    depths.push(tree.depth(*parent) as u32);
                }
            }
        }
    }

    let m = tour.len();
    let mut table = vec![(0..m as u32).collect::<Vec<u32>>()];
    let mut span = 1;
    while span * 2 <= m {
        let prev = table.last().unwrap();
        let row = (0..=m - span * 2)
            .map(|i| {
                let (a, b) = (prev[i], prev[i + span]);
                if depths[b as usize] < depths[a as usize] {
                    b
                } else {
                    a
                }
            })
            .collect();
        table.push(row);
        span *= 2;
    }

    Ok(LcaIndex {
        root: subtree_root,
        tour,
        first,
        table,
        depths,
    })
}

/// Deepest common ancestor of `u` and `v`.
pub fn lca(index: &LcaIndex, u: NodeId, v: NodeId) -> Result<NodeId> {
    let fu = *index.first.get(&u).ok_or(Error::NodeNotInIndex(u.raw()))?;
    let fv = *index.first.get(&v).ok_or(Error::NodeNotInIndex(v.raw()))?;
    let (lo, hi) = if fu <= fv { (fu, fv) } else { (fv, fu) };
    let (lo, hi) = (lo as usize, hi as usize + 1);
    let level = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
    let row = &index.table[level];
    let (a, b) = (row[lo], row[hi - (1 << level)]);
    let best = if index.depths[b as usize] < index.depths[a as usize] {
        b
    } else {
        a
    };
    Ok(index.tour[best as usize])
}

impl LcaIndex {
    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn tour(&self) -> &[NodeId] {
        &self.tour
    }

    pub fn node_count(&self) -> usize {
        self.first.len()
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.first.contains_key(&node)
    }

    pub fn lca(&self, u: NodeId, v: NodeId) -> Result<NodeId> {
        lca(self, u, v)
    }
}
