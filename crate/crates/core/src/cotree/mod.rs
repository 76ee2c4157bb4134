//! Cotrees and pseudocotrees.
//!
//! Trees are stored as arenas in preorder: node 0 is the root and every
//! subtree occupies a contiguous index range, so iterating indices backwards
//! visits children before parents. No algorithm here recurses on the tree,
//! which keeps path-like trees with 10^5 levels safe.

mod build;
mod format;

pub use build::{build_cotree, find_p4, P4Witness};
pub use format::{cotree_from_json, cotree_from_text, cotree_to_json, cotree_to_text, ParsedTree};

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Label of an internal node: `Union` (0) takes the disjoint union of its
/// children, `Join` (1) their join.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    Union,
    Join,
}

impl Label {
    pub fn bit(self) -> u8 {
        match self {
            Label::Union => 0,
            Label::Join => 1,
        }
    }

    pub fn from_bit(bit: u8) -> Option<Label> {
        match bit {
            0 => Some(Label::Union),
            1 => Some(Label::Join),
            _ => None,
        }
    }

    pub fn flipped(self) -> Label {
        match self {
            Label::Union => Label::Join,
            Label::Join => Label::Union,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf(Vertex),
    Internal(Label),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    pub children: Vec<usize>,
    /// Number of leaves below (and including) this node.
    pub leaves: usize,
    /// Offset of this subtree's first leaf in [`Tree::leaf_order`].
    pub first_leaf: usize,
}

impl Node {
    pub fn label(&self) -> Option<Label> {
        match self.kind {
            NodeKind::Internal(label) => Some(label),
            NodeKind::Leaf(_) => None,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, NodeKind::Leaf(_))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CotreeError {
    #[error("the empty graph has no cotree")]
    EmptyGraph,
    #[error("not a cograph: induced P4 {0}")]
    NotCograph(P4Witness),
    #[error("invalid tree: {0}")]
    Invalid(String),
    #[error("the graph is a cograph, so it has no induced P4")]
    IsCograph,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Rooted ordered tree with leaves carrying vertices and internal nodes
/// carrying a [`Label`]. Shared storage for [`Cotree`] and [`Pseudocotree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    nodes: Vec<Node>,
    leaf_order: Vec<Vertex>,
}

impl Tree {
    pub const ROOT: usize = 0;

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Number of leaves, i.e. vertices of the represented graph.
    pub fn leaf_count(&self) -> usize {
        self.leaf_order.len()
    }

    /// Leaf vertices in left-to-right order.
    pub fn leaf_order(&self) -> &[Vertex] {
        &self.leaf_order
    }

    /// Vertices below node `i`.
    pub fn leaves_of(&self, i: usize) -> &[Vertex] {
        let node = &self.nodes[i];
        &self.leaf_order[node.first_leaf..node.first_leaf + node.leaves]
    }

    /// Node indices with every child before its parent.
    pub fn bottom_up(&self) -> impl Iterator<Item = usize> {
        (0..self.nodes.len()).rev()
    }

    /// Swaps every internal label; the result represents the complement graph.
    pub fn complemented(&self) -> Tree {
        let mut t = self.clone();
        for node in &mut t.nodes {
            if let NodeKind::Internal(label) = node.kind {
                node.kind = NodeKind::Internal(label.flipped());
            }
        }
        t
    }

    /// The represented graph: `u ~ v` iff the lowest common ancestor of their
    /// leaves is a join node.
    pub fn evaluate(&self) -> Graph {
        let n = self.leaf_count();
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for node in &self.nodes {
            if node.label() != Some(Label::Join) {
                continue;
            }
            for (i, &a) in node.children.iter().enumerate() {
                for &b in &node.children[i + 1..] {
                    for &u in self.leaves_of(a) {
                        for &v in self.leaves_of(b) {
                            adj[u].push(v);
                            adj[v].push(u);
                        }
                    }
                }
            }
        }
        Graph::from_raw_adjacency(adj)
    }

    /// True when the leaves carry exactly the vertices `0..leaf_count`.
    fn leaves_are_bijective(&self) -> bool {
        let mut seen = vec![false; self.leaf_count()];
        self.leaf_order.iter().all(|&v| v < seen.len() && !std::mem::replace(&mut seen[v], true))
    }
}

/// Incremental construction of a [`Tree`]; nodes may be added in any order
/// as long as parents precede children. Children keep insertion order.
#[derive(Debug, Default)]
pub struct TreeBuilder {
    kinds: Vec<NodeKind>,
    children: Vec<Vec<usize>>,
    has_parent: Vec<bool>,
}

impl TreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn push(&mut self, kind: NodeKind, parent: Option<usize>) -> usize {
        let id = self.kinds.len();
        self.kinds.push(kind);
        self.children.push(Vec::new());
        self.has_parent.push(parent.is_some());
        if let Some(p) = parent {
            self.children[p].push(id);
        }
        id
    }

    pub fn internal(&mut self, label: Label, parent: Option<usize>) -> usize {
        self.push(NodeKind::Internal(label), parent)
    }

    pub fn leaf(&mut self, vertex: Vertex, parent: Option<usize>) -> usize {
        self.push(NodeKind::Leaf(vertex), parent)
    }

    /// Lays the nodes out in preorder starting from the first parentless node.
    pub fn finish(self) -> Result<Tree, CotreeError> {
        let roots = self.has_parent.iter().filter(|&&p| !p).count();
        if roots != 1 {
            return Err(CotreeError::Invalid(format!("expected one root, found {roots}")));
        }
        let root = self.has_parent.iter().position(|&p| !p).unwrap();
        let mut nodes: Vec<Node> = Vec::with_capacity(self.kinds.len());
        let mut leaf_order = Vec::new();
        // (old id, new parent)
        let mut stack = vec![(root, usize::MAX)];
        while let Some((old, parent)) = stack.pop() {
            let id = nodes.len();
            let kind = self.kinds[old];
            let first_leaf = leaf_order.len();
            match kind {
                NodeKind::Leaf(v) => {
                    if !self.children[old].is_empty() {
                        return Err(CotreeError::Invalid("leaf with children".into()));
                    }
                    leaf_order.push(v);
                }
                NodeKind::Internal(_) if self.children[old].is_empty() => {
                    return Err(CotreeError::Invalid("internal node without children".into()));
                }
                NodeKind::Internal(_) => {}
            }
            nodes.push(Node { kind, children: Vec::new(), leaves: 0, first_leaf });
            if parent != usize::MAX {
                nodes[parent].children.push(id);
            }
            for &c in self.children[old].iter().rev() {
                stack.push((c, id));
            }
        }
        if nodes.len() != self.kinds.len() {
            return Err(CotreeError::Invalid("nodes unreachable from the root".into()));
        }
        for i in (0..nodes.len()).rev() {
            nodes[i].leaves = match nodes[i].kind {
                NodeKind::Leaf(_) => 1,
                NodeKind::Internal(_) => nodes[i].children.iter().map(|&c| nodes[c].leaves).sum(),
            };
        }
        Ok(Tree { nodes, leaf_order })
    }
}

/// Canonical cotree: labels alternate along every root path, every internal
/// node has at least two children, and children are ordered by (leaf count,
/// smallest vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree(Tree);

impl Cotree {
    /// Checks the structural cotree invariants (alternation, branching,
    /// leaf bijection). Child order is not checked.
    pub fn new(tree: Tree) -> Result<Cotree, CotreeError> {
        if !tree.leaves_are_bijective() {
            return Err(CotreeError::Invalid("leaves must be exactly the vertices 0..n".into()));
        }
        for node in &tree.nodes {
            let Some(label) = node.label() else { continue };
            if node.children.len() < 2 {
                return Err(CotreeError::Invalid("internal node with fewer than two children".into()));
            }
            if node.children.iter().any(|&c| tree.nodes[c].label() == Some(label)) {
                return Err(CotreeError::Invalid("child repeats its parent's label".into()));
            }
        }
        Ok(Cotree(tree))
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub fn into_tree(self) -> Tree {
        self.0
    }

    /// Cotree of the complement graph.
    pub fn complemented(&self) -> Cotree {
        Cotree(self.0.complemented())
    }

    /// Left-deep binary expansion: a `t`-ary node becomes `t - 1` binary nodes
    /// with the same label, `X(X(X(c1, c2), c3), …, ct)`.
    pub fn binarize(&self) -> Pseudocotree {
        let t = &self.0;
        let mut b = TreeBuilder::new();
        let mut stack = vec![(Tree::ROOT, None)];
        while let Some((i, parent)) = stack.pop() {
            let node = &t.nodes[i];
            let label = match node.kind {
                NodeKind::Leaf(v) => {
                    b.leaf(v, parent);
                    continue;
                }
                NodeKind::Internal(label) => label,
            };
            let k = node.children.len();
            // chain[j] receives children[j + 1]; chain[0] also receives children[0].
            let mut chain = vec![0; k - 1];
            chain[k - 2] = b.internal(label, parent);
            for j in (0..k - 2).rev() {
                chain[j] = b.internal(label, Some(chain[j + 1]));
            }
            let mut targets = vec![(node.children[0], Some(chain[0]))];
            targets.extend((1..k).map(|j| (node.children[j], Some(chain[j - 1]))));
            stack.extend(targets.into_iter().rev());
        }
        Pseudocotree(b.finish().expect("binarizing a valid cotree"))
    }
}

impl Deref for Cotree {
    type Target = Tree;

    fn deref(&self) -> &Tree {
        &self.0
    }
}

impl AsRef<Tree> for Cotree {
    fn as_ref(&self) -> &Tree {
        &self.0
    }
}

/// Binary cotree variant: every internal node has exactly two children and
/// labels may repeat along a path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudocotree(Tree);

impl Pseudocotree {
    pub fn new(tree: Tree) -> Result<Pseudocotree, CotreeError> {
        if !tree.leaves_are_bijective() {
            return Err(CotreeError::Invalid("leaves must be exactly the vertices 0..n".into()));
        }
        if tree.nodes.iter().any(|n| !n.is_leaf() && n.children.len() != 2) {
            return Err(CotreeError::Invalid("pseudocotree nodes need exactly two children".into()));
        }
        Ok(Pseudocotree(tree))
    }

    pub fn tree(&self) -> &Tree {
        &self.0
    }

    pub fn complemented(&self) -> Pseudocotree {
        Pseudocotree(self.0.complemented())
    }
}

impl Deref for Pseudocotree {
    type Target = Tree;

    fn deref(&self) -> &Tree {
        &self.0
    }
}

impl AsRef<Tree> for Pseudocotree {
    fn as_ref(&self) -> &Tree {
        &self.0
    }
}

impl AsRef<Tree> for Tree {
    fn as_ref(&self) -> &Tree {
        self
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cotree_to_text(self, &|v| v.to_string()))
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for Pseudocotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
