//! Bottom-up computation of `κ̂` and `λ̂` over (pseudo)cotrees, and explicit
//! (k,l)-colourings.
//!
//! On a union node `κ̂` is the `*`-merge of the children's sequences and on a
//! join node their entrywise sum; `λ̂` uses the same two operators the other
//! way round.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cotree::{Cotree, Label, NodeKind, Tree};
use crate::ferrers;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::sequence::PartitionSequence;

/// Which of the two sequences to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Invariant {
    /// `κ̂`: `*` on union nodes, `+` on join nodes.
    Kappa,
    /// `λ̂`: `+` on union nodes, `*` on join nodes.
    Lambda,
}

impl Invariant {
    fn merges_at(self, label: Label) -> bool {
        matches!((self, label), (Invariant::Kappa, Label::Union) | (Invariant::Lambda, Label::Join))
    }
}

/// `κ̂(G)` using the run-length small-to-large implementation.
pub fn kappa_hat<T: AsRef<Tree>>(t: &T) -> PartitionSequence {
    sequence_fast(t.as_ref(), Invariant::Kappa)
}

/// `λ̂(G)` by swapping the operators of [`kappa_hat`].
pub fn lambda_hat<T: AsRef<Tree>>(t: &T) -> PartitionSequence {
    sequence_fast(t.as_ref(), Invariant::Lambda)
}

/// Plain-array implementation: every node folds its children pairwise into
/// freshly allocated vectors, O(n) per operation and O(n²) overall.
pub fn sequence_naive(t: &Tree, which: Invariant) -> PartitionSequence {
    let mut slots: Vec<Option<PartitionSequence>> = vec![None; t.node_count()];
    for i in t.bottom_up() {
        let node = t.node(i);
        let value = match node.kind {
            NodeKind::Leaf(_) => PartitionSequence::constant(1, 1),
            NodeKind::Internal(label) => {
                let merge = which.merges_at(label);
                let mut acc = PartitionSequence::empty();
                for &c in &node.children {
                    let child = slots[c].take().expect("children are processed first");
                    acc = if merge { acc.star_merge(&child) } else { acc.entrywise_add(&child) };
                }
                acc
            }
        };
        slots[i] = Some(value);
    }
    slots[Tree::ROOT].take().unwrap()
}

/// `κ̂` of every node's subgraph, indexed by node. Needed by the box cograph
/// extraction; costs O(Σ subtree sizes) memory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaAnnotations(Vec<PartitionSequence>);

impl KappaAnnotations {
    pub fn compute(t: &Tree) -> Self {
        let mut out: Vec<PartitionSequence> = vec![PartitionSequence::empty(); t.node_count()];
        for i in t.bottom_up() {
            let node = t.node(i);
            out[i] = match node.kind {
                NodeKind::Leaf(_) => PartitionSequence::constant(1, 1),
                NodeKind::Internal(label) => {
                    let merge = Invariant::Kappa.merges_at(label);
                    node.children.iter().fold(PartitionSequence::empty(), |acc, &c| {
                        if merge {
                            acc.star_merge(&out[c])
                        } else {
                            acc.entrywise_add(&out[c])
                        }
                    })
                }
            };
        }
        KappaAnnotations(out)
    }

    pub fn at(&self, node: usize) -> &PartitionSequence {
        &self.0[node]
    }

    pub fn root(&self) -> &PartitionSequence {
        &self.0[Tree::ROOT]
    }
}

/// Sequence stored as `value -> multiplicity`, so merging a short sequence
/// into a long one costs time proportional to the short one (times a log).
#[derive(Debug, Default)]
struct Runs {
    counts: BTreeMap<usize, usize>,
    len: usize,
}

impl Runs {
    fn constant(value: usize, times: usize) -> Runs {
        Runs { counts: BTreeMap::from([(value, times)]), len: times }
    }

    fn push(&mut self, value: usize, times: usize) {
        *self.counts.entry(value).or_insert(0) += times;
        self.len += times;
    }

    /// `*`: multiset union.
    fn merge(&mut self, other: Runs) {
        for (v, m) in other.counts {
            self.push(v, m);
        }
    }

    /// Entrywise sum. Only the top `other.len` entries of `self` change, and
    /// they stay above the untouched ones.
    fn add(&mut self, other: Runs) {
        let mut want = other.len;
        let mut top: Vec<(usize, usize)> = Vec::new();
        while want > 0 {
            let Some(mut entry) = self.counts.last_entry() else { break };
            let value = *entry.key();
            let take = (*entry.get()).min(want);
            top.push((value, take));
            want -= take;
            if take == *entry.get() {
                entry.remove();
            } else {
                *entry.get_mut() -= take;
            }
        }
        self.len -= other.len - want;
        let mut mine = top.into_iter().peekable();
        for (v, mut m) in other.counts.into_iter().rev() {
            while m > 0 {
                match mine.peek_mut() {
                    Some((w, k)) => {
                        let step = m.min(*k);
                        self.push(v + *w, step);
                        m -= step;
                        *k -= step;
                        if *k == 0 {
                            mine.next();
                        }
                    }
                    None => {
                        self.push(v, m);
                        m = 0;
                    }
                }
            }
        }
    }

    fn into_sequence(self) -> PartitionSequence {
        let mut out = Vec::with_capacity(self.len);
        for (&v, &m) in self.counts.iter().rev() {
            out.extend(std::iter::repeat_n(v, m));
        }
        PartitionSequence::from_vec_unchecked(out)
    }
}

/// Small-to-large implementation. At a node the largest child's runs are
/// reused and every other child is merged in, so each merge costs
/// O(min(|A₁|, |A₂|) · log n); over a pseudocotree this totals O(n log² n).
pub fn sequence_fast(t: &Tree, which: Invariant) -> PartitionSequence {
    if t.node_count() == 1 {
        return PartitionSequence::constant(1, 1);
    }
    // Leaves get no slot: a node's leaf children together contribute
    // `(1,…,1)` when merged and `(m)` when added.
    let mut slots: Vec<Option<Runs>> = (0..t.node_count()).map(|_| None).collect();
    for i in t.bottom_up() {
        let node = t.node(i);
        let NodeKind::Internal(label) = node.kind else { continue };
        let merge = which.merges_at(label);
        let leaves = node.children.iter().filter(|&&c| t.node(c).is_leaf()).count();
        let biggest = node.children.iter().filter(|&&c| !t.node(c).is_leaf()).max_by_key(|&&c| t.node(c).leaves);
        let mut acc = match biggest {
            Some(&b) => slots[b].take().unwrap(),
            None => Runs::default(),
        };
        for &c in &node.children {
            if Some(&c) == biggest || t.node(c).is_leaf() {
                continue;
            }
            let child = slots[c].take().unwrap();
            if merge {
                acc.merge(child);
            } else {
                acc.add(child);
            }
        }
        if leaves > 0 {
            if merge {
                acc.push(1, leaves);
            } else {
                acc.add(Runs::constant(leaves, 1));
            }
        }
        slots[i] = Some(acc);
    }
    slots[Tree::ROOT].take().unwrap().into_sequence()
}

/// Partition of the vertices into independent sets and cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KLColouring {
    pub independent_sets: Vec<VertexSet>,
    pub cliques: Vec<VertexSet>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColouringDefect {
    #[error("{found} independent sets exceed the allowed {allowed}")]
    TooManyIndependentSets { found: usize, allowed: usize },
    #[error("{found} cliques exceed the allowed {allowed}")]
    TooManyCliques { found: usize, allowed: usize },
    #[error("independent set #{0} contains an edge")]
    NotIndependent(usize),
    #[error("clique #{0} misses an edge")]
    NotClique(usize),
    #[error("vertex {0} is not a vertex of the graph")]
    OutOfRange(Vertex),
    #[error("vertex {0} appears in more than one part")]
    Repeated(Vertex),
    #[error("vertex {0} is not covered")]
    Uncovered(Vertex),
}

impl KLColouring {
    /// Checks that this is a (k,l)-colouring of `g`.
    pub fn verify(&self, g: &Graph, k: usize, l: usize) -> Result<(), ColouringDefect> {
        if self.independent_sets.len() > k {
            return Err(ColouringDefect::TooManyIndependentSets { found: self.independent_sets.len(), allowed: k });
        }
        if self.cliques.len() > l {
            return Err(ColouringDefect::TooManyCliques { found: self.cliques.len(), allowed: l });
        }
        let mut seen = vec![false; g.n()];
        for part in self.independent_sets.iter().chain(&self.cliques) {
            for &v in part.iter() {
                if v >= g.n() {
                    return Err(ColouringDefect::OutOfRange(v));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(ColouringDefect::Repeated(v));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(ColouringDefect::Uncovered(v));
        }
        if let Some(i) = self.independent_sets.iter().position(|s| !g.is_independent_set(s)) {
            return Err(ColouringDefect::NotIndependent(i));
        }
        if let Some(i) = self.cliques.iter().position(|s| !g.is_clique(s)) {
            return Err(ColouringDefect::NotClique(i));
        }
        Ok(())
    }

    /// Same partition with vertex ids replaced by `g`'s labels.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let named = |parts: &[VertexSet]| -> Vec<Vec<String>> {
            parts.iter().map(|p| p.iter().map(|&v| g.label(v)).collect()).collect()
        };
        serde_json::json!({
            "independent_sets": named(&self.independent_sets),
            "cliques": named(&self.cliques),
        })
    }
}

impl fmt::Display for KLColouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (tag, parts) in [("S", &self.independent_sets), ("C", &self.cliques)] {
            for (i, p) in parts.iter().enumerate() {
                writeln!(f, "{tag}{}: {:?}", i + 1, p.as_slice())?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("the graph is not ({k},{l})-colourable: κ_{l} = {kappa} > {k}")]
pub struct NotColourable {
    pub k: usize,
    pub l: usize,
    pub kappa: usize,
}

/// A (k,l)-colouring of the cograph, read off its Ferrers diagram
/// representation.
pub fn extract_colouring(t: &Cotree, k: usize, l: usize) -> Result<KLColouring, NotColourable> {
    ferrers::build_ferrers(t).read_colouring(k, l)
}
