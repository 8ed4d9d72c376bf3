//! Suffix trees built in Weiner order.
//!
//! Suffixes are inserted from the shortest to the longest: a tree over the
//! window `w[i..j]` is extended to `w[i-1..j]` by hanging one new leaf and
//! splitting at most one edge. The insertion point is located with Weiner's
//! indicator vectors (`I_v(c) = 1` iff `c·τ(v)` is a prefix of some suffix
//! already in the tree) and inter-node links (`L_v(c)` is the node whose path
//! label is `c·τ(v)`, when one exists).
//!
//! Every node stores its string depth `δ(v)`, fixed at creation, and a
//! write-once minimal-period slot used by the right minimal period engine.
//! Edge labels are never stored: a node keeps one text position `rep` where
//! its path label occurs, so the label into `v` is `text[rep+δ(p(v)) .. rep+δ(v))`.
//! The terminal `$` is a virtual letter just past the window end.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::period::Period;

const NONE: u32 = u32::MAX;

/// Dense link rows are used up to this text alphabet size; larger alphabets
/// use a hash map keyed by (node, letter).
const DENSE_LINK_SIGMA: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn raw(self) -> u32 {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone)]
struct Node {
    parent: u32,
    first_child: u32,
    next_sibling: u32,
    depth: u32,
    rep: u32,
    leaf: bool,
    pi: Option<Period>,
}

#[derive(Debug, Clone)]
enum Links {
    Dense { stride: usize, slots: Vec<u32> },
    Sparse(HashMap<(u32, u16), u32>),
}

impl Links {
    fn new(sigma: usize) -> Self {
        if sigma <= DENSE_LINK_SIGMA {
            Links::Dense {
                stride: sigma.max(1),
                slots: Vec::new(),
            }
        } else {
            Links::Sparse(HashMap::new())
        }
    }

    fn push_node(&mut self) {
        if let Links::Dense { stride, slots } = self {
            slots.extend(std::iter::repeat_n(NONE, *stride));
        }
    }

    fn get(&self, node: u32, c: u16) -> Option<u32> {
        let v = match self {
            Links::Dense { stride, slots } => slots[node as usize * stride + c as usize],
            Links::Sparse(map) => *map.get(&(node, c))?,
        };
        (v != NONE).then_some(v)
    }

    fn set(&mut self, node: u32, c: u16, target: u32) {
        match self {
            Links::Dense { stride, slots } => slots[node as usize * *stride + c as usize] = target,
            Links::Sparse(map) => {
                map.insert((node, c), target);
            }
        }
    }

    fn clear(&mut self) {
        match self {
            Links::Dense { slots, .. } => slots.clear(),
            Links::Sparse(map) => map.clear(),
        }
    }
}

/// Reported by [`SuffixTree::extend`] when the edge `x → z` was split into
/// `x → y → z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SplitInfo {
    pub y: NodeId,
    pub z: NodeId,
}

/// Result of one Weiner extension step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Extension {
    pub leaf: NodeId,
    /// Parent of the new leaf.
    pub parent: NodeId,
    pub split: Option<SplitInfo>,
}

/// Path label of a node: letters, plus whether it ends with the terminal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLabel {
    pub letters: Vec<u16>,
    pub terminated: bool,
}

/// Suffix tree of the window `text[start..=end]` (stored 0-based; the public
/// API speaks 1-based positions).
#[derive(Clone)]
pub struct SuffixTree {
    text: Arc<[u16]>,
    sigma: usize,
    start: usize,
    end: usize,
    nodes: Vec<Node>,
    /// `leaves[end - p]` is the leaf of suffix `p`.
    leaves: Vec<u32>,
    words_per_node: usize,
    indicator: Vec<u64>,
    links: Links,
    work: u64,
}

impl SuffixTree {
    /// Tree of the single-letter window `text[j..j]`, ready to be extended
    /// leftwards. `sigma` bounds the letter codes of `text`; code `sigma` is
    /// reserved for the terminal.
    pub fn new(text: Arc<[u16]>, sigma: usize, i: usize, j: usize) -> Result<Self> {
        let len = text.len();
        if i != j || j == 0 || j > len {
            return Err(Error::WindowOutOfRange {
                start: i,
                end: j,
                len,
            });
        }
        debug_assert!(text.iter().all(|&c| (c as usize) < sigma));
        let mut tree = SuffixTree {
            text,
            sigma,
            start: 0,
            end: 0,
            nodes: Vec::new(),
            leaves: Vec::new(),
            words_per_node: sigma.div_ceil(64).max(1),
            indicator: Vec::new(),
            links: Links::new(sigma),
            work: 0,
        };
        tree.reset(j - 1);
        Ok(tree)
    }

    /// Builds the full tree of `text[i..=j]` (1-based, inclusive).
    pub fn build(text: Arc<[u16]>, sigma: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || i > j {
            return Err(Error::WindowOutOfRange {
                start: i,
                end: j,
                len: text.len(),
            });
        }
        let mut tree = Self::new(text, sigma, j, j)?;
        for p in (i..j).rev() {
            tree.extend(p)?;
        }
        Ok(tree)
    }

    /// Convenience: the suffix tree of a whole code sequence.
    pub fn from_codes(codes: &[u16], sigma: usize) -> Result<Self> {
        let n = codes.len();
        Self::build(Arc::from(codes), sigma, 1, n.max(1))
    }

    /// Drops every node and restarts as the tree of `text[end..end]`
    /// (0-based), keeping allocations.
    pub(crate) fn reset(&mut self, end: usize) {
        self.start = end;
        self.end = end;
        self.nodes.clear();
        self.leaves.clear();
        self.indicator.clear();
        self.links.clear();
        let root = self.push_node(Node {
            parent: NONE,
            first_child: NONE,
            next_sibling: NONE,
            depth: 0,
            rep: end as u32,
            leaf: false,
            pi: None,
        });
        let leaf = self.push_node(Node {
            parent: root,
            first_child: NONE,
            next_sibling: NONE,
            depth: 2,
            rep: end as u32,
            leaf: true,
            pi: None,
        });
        self.nodes[root as usize].first_child = leaf;
        self.leaves.push(leaf);
        let c = self.text[end];
        self.set_indicator(root, c);
        self.work += 2;
    }

    fn push_node(&mut self, node: Node) -> u32 {
        let id = self.nodes.len() as u32;
        self.nodes.push(node);
        self.indicator
            .extend(std::iter::repeat_n(0, self.words_per_node));
        self.links.push_node();
        id
    }

    #[inline]
    fn char_at(&self, idx: usize) -> u16 {
        if idx > self.end {
            self.sigma as u16
        } else {
            self.text[idx]
        }
    }

    #[inline]
    fn indicator(&self, node: u32, c: u16) -> bool {
        let w = node as usize * self.words_per_node + c as usize / 64;
        self.indicator[w] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn set_indicator(&mut self, node: u32, c: u16) {
        let w = node as usize * self.words_per_node + c as usize / 64;
        self.indicator[w] |= 1 << (c % 64);
    }

    fn first_letter(&self, child: u32) -> u16 {
        let n = &self.nodes[child as usize];
        let pd = self.nodes[n.parent as usize].depth;
        self.char_at((n.rep + pd) as usize)
    }

    fn find_child(&self, node: u32, c: u16) -> Option<u32> {
        let mut ch = self.nodes[node as usize].first_child;
        while ch != NONE {
            if self.first_letter(ch) == c {
                return Some(ch);
            }
            ch = self.nodes[ch as usize].next_sibling;
        }
        None
    }

    /// Inserts `child` (parent already set) keeping siblings ordered by
    /// first letter.
    fn attach_child(&mut self, parent: u32, child: u32) {
        let c = self.first_letter(child);
        let mut prev = NONE;
        let mut cur = self.nodes[parent as usize].first_child;
        while cur != NONE && self.first_letter(cur) < c {
            prev = cur;
            cur = self.nodes[cur as usize].next_sibling;
        }
        self.nodes[child as usize].next_sibling = cur;
        if prev == NONE {
            self.nodes[parent as usize].first_child = child;
        } else {
            self.nodes[prev as usize].next_sibling = child;
        }
    }

    /// Puts `new` in `old`'s place among `parent`'s children.
    fn replace_child(&mut self, parent: u32, old: u32, new: u32) {
        let next = self.nodes[old as usize].next_sibling;
        self.nodes[new as usize].next_sibling = next;
        self.nodes[old as usize].next_sibling = NONE;
        if self.nodes[parent as usize].first_child == old {
            self.nodes[parent as usize].first_child = new;
            return;
        }
        let mut cur = self.nodes[parent as usize].first_child;
        while self.nodes[cur as usize].next_sibling != old {
            cur = self.nodes[cur as usize].next_sibling;
        }
        self.nodes[cur as usize].next_sibling = new;
    }

    /// Extends the tree of `w[new_start+1..j]` to the tree of
    /// `w[new_start..j]` (1-based).
    pub fn extend(&mut self, new_start: usize) -> Result<Extension> {
        if new_start == 0 || new_start != self.start {
            return Err(Error::NotPreviousWindow {
                current: self.start + 1,
                requested: new_start,
            });
        }
        Ok(self.extend_step())
    }

    pub(crate) fn extend_step(&mut self) -> Extension {
        let i = self.start - 1;
        let x = self.text[i];
        let prev_leaf = *self.leaves.last().expect("tree has a leaf");

        // Walk up from leaf_{i+1} to the deepest ancestor v with I_v(x) = 1,
        // marking I(x) on the way: x·τ(u) is now a prefix of suffix i.
        let mut u = prev_leaf;
        let v = loop {
            self.work += 1;
            if self.indicator(u, x) {
                break Some(u);
            }
            self.set_indicator(u, x);
            let parent = self.nodes[u as usize].parent;
            if parent == NONE {
                break None;
            }
            u = parent;
        };

        let mut split = None;
        let y = match v {
            None => 0,
            Some(v) => {
                // Closest ancestor-or-self of v carrying a link on x.
                let target = self.nodes[v as usize].depth + 1;
                let mut a = v;
                let mut cur = loop {
                    if let Some(t) = self.links.get(a, x) {
                        break t;
                    }
                    let parent = self.nodes[a as usize].parent;
                    if parent == NONE {
                        break 0;
                    }
                    a = parent;
                    self.work += 1;
                };
                // Walk down along x·τ(v) = text[i .. i+target) with skip/count.
                let y = loop {
                    self.work += 1;
                    let d = self.nodes[cur as usize].depth;
                    if d == target {
                        break cur;
                    }
                    let c = self.char_at(i + d as usize);
                    let child = self
                        .find_child(cur, c)
                        .expect("x·τ(v) occurs in the window");
                    if self.nodes[child as usize].depth <= target {
                        cur = child;
                        continue;
                    }
                    let y = self.split_edge(cur, child, target);
                    split = Some(SplitInfo {
                        y: NodeId(y),
                        z: NodeId(child),
                    });
                    break y;
                };
                self.links.set(v, x, y);
                y
            }
        };

        let leaf_depth = (self.end - i + 2) as u32;
        let leaf = self.push_node(Node {
            parent: y,
            first_child: NONE,
            next_sibling: NONE,
            depth: leaf_depth,
            rep: i as u32,
            leaf: true,
            pi: None,
        });
        self.attach_child(y, leaf);
        self.leaves.push(leaf);
        self.start = i;
        self.work += 1;
        Extension {
            leaf: NodeId(leaf),
            parent: NodeId(y),
            split,
        }
    }

    fn split_edge(&mut self, parent: u32, child: u32, depth: u32) -> u32 {
        let rep = self.nodes[child as usize].rep;
        let y = self.push_node(Node {
            parent,
            first_child: child,
            next_sibling: NONE,
            depth,
            rep,
            leaf: false,
            pi: None,
        });
        self.replace_child(parent, child, y);
        self.nodes[child as usize].parent = y;
        // y inherits z's left extensions: every occurrence of τ(y) so far
        // continued into τ(z).
        let w = self.words_per_node;
        let (ys, zs) = (y as usize * w, child as usize * w);
        self.indicator.copy_within(zs..zs + w, ys);
        y
    }

    pub fn root(&self) -> NodeId {
        NodeId(0)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    /// The window `[i, j]`, 1-based inclusive.
    pub fn window(&self) -> (usize, usize) {
        (self.start + 1, self.end + 1)
    }

    pub fn window_len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn text(&self) -> &Arc<[u16]> {
        &self.text
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Code used for the terminal `$`.
    pub fn terminal(&self) -> u16 {
        self.sigma as u16
    }

    pub fn contains(&self, node: NodeId) -> bool {
        node.index() < self.nodes.len()
    }

    pub fn parent(&self, node: NodeId) -> Option<NodeId> {
        let p = self.nodes[node.index()].parent;
        (p != NONE).then_some(NodeId(p))
    }

    pub fn children(&self, node: NodeId) -> Children<'_> {
        Children {
            tree: self,
            next: self.nodes[node.index()].first_child,
        }
    }

    /// String depth `δ(v)`; for a leaf this counts the terminal.
    pub fn depth(&self, node: NodeId) -> usize {
        self.nodes[node.index()].depth as usize
    }

    pub fn is_leaf(&self, node: NodeId) -> bool {
        self.nodes[node.index()].leaf
    }

    /// Leaf of the suffix starting at 1-based position `p`.
    pub fn leaf(&self, p: usize) -> Option<NodeId> {
        if p <= self.start || p > self.end + 1 {
            return None;
        }
        Some(NodeId(self.leaves[self.end + 1 - p]))
    }

    /// Leaf of the current window start.
    pub fn first_leaf(&self) -> NodeId {
        NodeId(*self.leaves.last().expect("tree has a leaf"))
    }

    /// 1-based start position of a leaf's suffix.
    pub fn leaf_position(&self, node: NodeId) -> Option<usize> {
        let n = &self.nodes[node.index()];
        n.leaf.then_some(n.rep as usize + 1)
    }

    pub fn edge_len(&self, node: NodeId) -> usize {
        match self.parent(node) {
            Some(p) => self.depth(node) - self.depth(p),
            None => 0,
        }
    }

    pub fn pi(&self, node: NodeId) -> Option<Period> {
        self.nodes[node.index()].pi
    }

    /// Sets the period annotation of `node`. Each slot is written once.
    pub fn set_pi(&mut self, node: NodeId, pi: Period) {
        let slot = &mut self.nodes[node.index()].pi;
        assert!(slot.is_none(), "π({node}) written twice");
        *slot = Some(pi);
    }

    /// Construction work so far: node visits plus node creations.
    pub fn work(&self) -> u64 {
        self.work
    }

    /// `τ(v)`: the concatenated edge labels from the root.
    pub fn path_label(&self, node: NodeId) -> PathLabel {
        let n = &self.nodes[node.index()];
        let from = n.rep as usize;
        let letters_len = if n.leaf {
            n.depth as usize - 1
        } else {
            n.depth as usize
        };
        PathLabel {
            letters: self.text[from..from + letters_len].to_vec(),
            terminated: n.leaf,
        }
    }

    /// Leaves below `node`, in depth-first order.
    pub fn leaves_under(&self, node: NodeId) -> Vec<NodeId> {
        let mut out = Vec::new();
        let mut stack = vec![node.0];
        while let Some(u) = stack.pop() {
            let n = &self.nodes[u as usize];
            if n.leaf {
                out.push(NodeId(u));
                continue;
            }
            let mut c = n.first_child;
            while c != NONE {
                stack.push(c);
                c = self.nodes[c as usize].next_sibling;
            }
        }
        out
    }

    /// Checks the suffix-tree properties and the depth recurrence.
    pub fn validate_structure(&self) -> Result<(), StructureViolation> {
        use StructureViolation::*;
        let mut leaves = 0usize;
        for (id, n) in self.nodes.iter().enumerate() {
            let id = id as u32;
            let node = NodeId(id);
            if id != 0 {
                let p = n.parent;
                if p == NONE || p as usize >= self.nodes.len() {
                    return Err(DanglingParent(node));
                }
                if !self.children(NodeId(p)).any(|c| c == node) {
                    return Err(DanglingParent(node));
                }
                if n.depth <= self.nodes[p as usize].depth {
                    return Err(EmptyEdge(node));
                }
                let limit = if n.leaf { self.end + 2 } else { self.end + 1 };
                if (n.rep as usize) < self.start || n.rep as usize + n.depth as usize > limit {
                    return Err(LabelOutOfWindow(node));
                }
                // τ(v) must extend τ(p(v)).
                let pr = self.nodes[p as usize].rep as usize;
                let pd = self.nodes[p as usize].depth as usize;
                let r = n.rep as usize;
                if (0..pd).any(|t| self.char_at(r + t) != self.char_at(pr + t)) {
                    return Err(LabelMismatch(node));
                }
            }
            if n.leaf {
                leaves += 1;
                if n.first_child != NONE {
                    return Err(LeafWithChildren(node));
                }
                if n.depth as usize != self.end - n.rep as usize + 2 {
                    return Err(LeafLabel(node));
                }
                continue;
            }
            let kids: Vec<u16> = self
                .children(node)
                .map(|c| self.first_letter(c.0))
                .collect();
            if id != 0 && kids.len() < 2 {
                return Err(UnaryNode(node));
            }
            if kids.windows(2).any(|w| w[0] >= w[1]) {
                return Err(DuplicateFirstLetter(node));
            }
        }
        if leaves != self.window_len() {
            return Err(LeafCount {
                expected: self.window_len(),
                found: leaves,
            });
        }
        for p in self.start..=self.end {
            let leaf = self.leaves[self.end - p];
            if !self.nodes[leaf as usize].leaf || self.nodes[leaf as usize].rep as usize != p {
                return Err(LeafLabel(NodeId(leaf)));
            }
        }
        Ok(())
    }

    /// For leaves of positions `p > q`, the edge into `leaf_p` is no longer
    /// than the edge into `leaf_q`. Reports the first offending pair.
    pub fn check_leaf_edges_monotone(&self) -> Result<(), (usize, usize)> {
        let (start, end) = self.window();
        for q in start..end {
            let longer = self.edge_len(self.leaf(q + 1).unwrap());
            if longer > self.edge_len(self.leaf(q).unwrap()) {
                return Err((q + 1, q));
            }
        }
        Ok(())
    }

    /// DOT digraph; node labels carry δ and π, edge labels the substrings.
    /// `letter` renders a code; the terminal renders as `$`.
    pub fn to_dot(&self, letter: impl Fn(u16) -> String) -> String {
        let mut out = String::from("digraph suffix_tree {\n  node [shape=box];\n");
        let mut stack = vec![0u32];
        while let Some(u) = stack.pop() {
            let n = &self.nodes[u as usize];
            let pi = match n.pi {
                Some(p) => p.to_string(),
                None => "-".into(),
            };
            let name = match (u, n.leaf) {
                (0, _) => "root".to_string(),
                (_, true) => format!("leaf_{}", n.rep + 1),
                _ => format!("n{u}"),
            };
            let _ = writeln!(
                out,
                "  n{u} [label=\"{name}\\nδ={} π={pi}\"];",
                n.depth
            );
            let mut kids = Vec::new();
            let mut c = n.first_child;
            while c != NONE {
                kids.push(c);
                c = self.nodes[c as usize].next_sibling;
            }
            for &c in &kids {
                let cn = &self.nodes[c as usize];
                let from = (cn.rep + n.depth) as usize;
                let to = (cn.rep + cn.depth) as usize;
                let label: String = (from..to)
                    .map(|t| match self.char_at(t) {
                        c if c as usize == self.sigma => "$".to_string(),
                        c => letter(c),
                    })
                    .collect();
                let _ = writeln!(out, "  n{u} -> n{c} [label=\"{label}\"];");
            }
            stack.extend(kids.iter().rev());
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for SuffixTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SuffixTree")
            .field("window", &self.window())
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

pub struct Children<'a> {
    tree: &'a SuffixTree,
    next: u32,
}

impl Iterator for Children<'_> {
    type Item = NodeId;

    fn next(&mut self) -> Option<NodeId> {
        if self.next == NONE {
            return None;
        }
        let c = self.next;
        self.next = self.tree.nodes[c as usize].next_sibling;
        Some(NodeId(c))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureViolation {
    UnaryNode(NodeId),
    DuplicateFirstLetter(NodeId),
    LeafCount { expected: usize, found: usize },
    LeafLabel(NodeId),
    LeafWithChildren(NodeId),
    EmptyEdge(NodeId),
    LabelOutOfWindow(NodeId),
    LabelMismatch(NodeId),
    DanglingParent(NodeId),
}

impl fmt::Display for StructureViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StructureViolation::*;
        match self {
            UnaryNode(n) => write!(f, "internal node {n} has fewer than two children"),
            DuplicateFirstLetter(n) => write!(f, "children of {n} share a first letter"),
            LeafCount { expected, found } => {
                write!(f, "expected {expected} leaves, found {found}")
            }
            LeafLabel(n) => write!(f, "leaf {n} does not spell its suffix"),
            LeafWithChildren(n) => write!(f, "leaf {n} has children"),
            EmptyEdge(n) => write!(f, "edge into {n} is empty"),
            LabelOutOfWindow(n) => write!(f, "label of {n} leaves the window"),
            LabelMismatch(n) => write!(f, "path label of {n} does not extend its parent's"),
            DanglingParent(n) => write!(f, "parent link of {n} is inconsistent"),
        }
    }
}
