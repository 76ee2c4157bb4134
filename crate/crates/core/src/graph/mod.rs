//! Simple undirected graphs with dense vertex identifiers.

mod parse;

pub use parse::{encode_graph6, parse_edge_list, parse_graph6, ParseError};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex identifier: always in `0..n`.
pub type Vertex = usize;

/// Graphs up to this many vertices also keep a bit matrix for O(1) edge queries.
const MATRIX_LIMIT: usize = 8192;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate vertex {0} in vertex set")]
    DuplicateVertex(Vertex),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
}

#[derive(Clone)]
struct BitMatrix {
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64);
        BitMatrix { words_per_row, bits: vec![0; words_per_row * n] }
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words_per_row + v / 64] |= 1 << (v % 64);
    }

    fn get(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Neighbour lists are sorted. Optional labels carry the user's names for the
/// vertices (for example the original ids after taking an induced subgraph).
#[derive(Clone)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    matrix: Option<BitMatrix>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_raw_adjacency(adj))
    }

    /// Takes neighbour lists that are already symmetric and loop-free, possibly
    /// unsorted and with repeats.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Graph {
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let n = adj.len();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let matrix = (n <= MATRIX_LIMIT).then(|| {
            let mut m = BitMatrix::new(n);
            for (u, list) in adj.iter().enumerate() {
                for &v in list {
                    m.set(u, v);
                }
            }
            m
        });
        Graph { adj, matrix, edge_count, labels: None }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_raw_adjacency(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_raw_adjacency((0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect())
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are valid")
    }

    /// Attaches display names, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount { expected: self.n(), got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match &self.matrix {
            Some(m) => m.get(u, v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label when present, otherwise the id itself.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        for u in 0..n {
            let mut list = Vec::with_capacity(n - 1 - self.degree(u));
            let mut nbrs = self.adj[u].iter().peekable();
            for v in 0..n {
                if nbrs.peek() == Some(&&v) {
                    nbrs.next();
                } else if v != u {
                    list.push(v);
                }
            }
            adj.push(list);
        }
        let mut g = Graph::from_raw_adjacency(adj);
        g.labels = self.labels.clone();
        g
    }

    /// `self + other`; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        self.combine(other, false)
    }

    /// `self ∨ other`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        self.combine(other, true)
    }

    fn combine(&self, other: &Graph, cross: bool) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adj: Vec<Vec<Vertex>> = Vec::with_capacity(a + b);
        for list in &self.adj {
            let mut l = list.clone();
            if cross {
                l.extend(a..a + b);
            }
            adj.push(l);
        }
        for list in &other.adj {
            let mut l: Vec<Vertex> = if cross { (0..a).collect() } else { Vec::new() };
            l.extend(list.iter().map(|&v| v + a));
            adj.push(l);
        }
        let mut g = Graph::from_raw_adjacency(adj);
        if self.labels.is_some() || other.labels.is_some() {
            g.labels =
                Some(self.vertices().map(|v| self.label(v)).chain(other.vertices().map(|v| other.label(v))).collect());
        }
        g
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in the order of `s`. Labels
    /// of the result are the labels of the original vertices.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        s.check(self)?;
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in s.iter().enumerate() {
            index[v] = i;
        }
        let adj = s
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
            .collect();
        let mut g = Graph::from_raw_adjacency(adj);
        g.labels = Some(s.iter().map(|&v| self.label(v)).collect());
        Ok(g)
    }

    pub fn is_independent_set(&self, s: &[Vertex]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter().enumerate().all(|(i, &u)| s[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    /// Connected components of the subgraph induced by `members`, each sorted.
    pub fn components_within(&self, members: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut mark = vec![false; self.n()];
        for &v in members {
            mark[v] = true;
        }
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for &start in members {
            if !mark[start] {
                continue;
            }
            mark[start] = false;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if mark[w] {
                        mark[w] = false;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Connected components of the complement of the subgraph induced by
    /// `members`, found without building the complement.
    pub fn co_components_within(&self, members: &[Vertex]) -> Vec<Vec<Vertex>> {
        // Unvisited vertices live in a doubly linked list so each one is
        // removed once; scanning the list at u costs deg(u) + removals.
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in members.iter().enumerate() {
            pos[v] = i;
        }
        let k = members.len();
        let mut next: Vec<usize> = (1..=k).collect();
        let mut prev: Vec<usize> = (0..k).map(|i| i.wrapping_sub(1)).collect();
        let mut head = if k > 0 { 0 } else { usize::MAX };
        let end = k;
        let unlink = |i: usize, next: &mut Vec<usize>, prev: &mut Vec<usize>, head: &mut usize| {
            let (p, nx) = (prev[i], next[i]);
            if p == usize::MAX {
                *head = if nx == end { usize::MAX } else { nx };
            } else {
                next[p] = nx;
            }
            if nx != end {
                prev[nx] = p;
            }
        };
        let mut stamp = vec![0usize; k];
        let mut round = 0usize;
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        while head != usize::MAX {
            let start = head;
            unlink(start, &mut next, &mut prev, &mut head);
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(i) = queue.pop_front() {
                let u = members[i];
                comp.push(u);
                round += 1;
                for &w in &self.adj[u] {
                    if pos[w] != usize::MAX {
                        stamp[pos[w]] = round;
                    }
                }
                let mut cur = head;
                while cur != usize::MAX && cur != end {
                    let nx = next[cur];
                    if stamp[cur] != round {
                        unlink(cur, &mut next, &mut prev, &mut head);
                        queue.push_back(cur);
                    }
                    cur = nx;
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<Vertex> = self.vertices().collect();
        self.components_within(&all).len() <= 1
    }
}

impl PartialEq for Graph {
    /// Same vertex count and same edge set; labels are display-only.
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n()).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// A duplicate-free set of vertices of some graph, kept in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub(crate) fn from_vec_unchecked(members: Vec<Vertex>) -> VertexSet {
        VertexSet(members)
    }

    pub fn new(members: Vec<Vertex>) -> Result<VertexSet, GraphError> {
        let mut seen = std::collections::HashSet::with_capacity(members.len());
        for &v in &members {
            if !seen.insert(v) {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        Ok(VertexSet(members))
    }

    pub fn all(g: &Graph) -> VertexSet {
        VertexSet(g.vertices().collect())
    }

    /// Checks that every member is a vertex of `g`.
    pub fn check(&self, g: &Graph) -> Result<(), GraphError> {
        match self.0.iter().find(|&&v| v >= g.n()) {
            Some(&vertex) => Err(GraphError::VertexOutOfRange { vertex, n: g.n() }),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }
}

impl std::ops::Deref for VertexSet {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    /// Exhaustive isomorphism test for tiny graphs.
    fn isomorphic(g: &Graph, h: &Graph) -> bool {
        fn permute(k: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, g: &Graph, h: &Graph) -> bool {
            let n = g.n();
            if k == n {
                return g.edges().all(|(u, v)| h.has_edge(perm[u], perm[v]));
            }
            for t in 0..n {
                if !used[t] && g.degree(k) == h.degree(t) {
                    used[t] = true;
                    perm.push(t);
                    if permute(k + 1, perm, used, g, h) {
                        return true;
                    }
                    perm.pop();
                    used[t] = false;
                }
            }
            false
        }
        g.n() == h.n() && g.edge_count() == h.edge_count() && permute(0, &mut Vec::new(), &mut vec![false; g.n()], g, h)
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
        assert_ne!(p4.complement(), p4);
        assert!(isomorphic(&p4.complement(), &p4));
    }

    #[test]
    fn union_and_join_examples() {
        let k1 = Graph::complete(1);
        assert_eq!(k1.disjoint_union(&k1), Graph::empty(2));
        let k3 = Graph::complete(3);
        let two_k3 = k3.disjoint_union(&k3);
        assert_eq!((two_k3.n(), two_k3.edge_count()), (6, 6));
        assert_eq!(k1.join(&k1), Graph::complete(2));
        assert_eq!(Graph::complete(2).join(&Graph::complete(2)), Graph::complete(4));
        // 2K1 ∨ 2K1 on {0,1} and {2,3}: the four cross edges form C4 0-2-1-3-0.
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(isomorphic(&c4, &Graph::cycle(4)));
    }

    #[test]
    fn induced_subgraph_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph(&set(&[0, 1])).unwrap(), Graph::complete(2));
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(&set(&[0, 1, 2, 3])).unwrap(), p4);
        assert_eq!(c5.induced_subgraph(&VertexSet::all(&c5)).unwrap(), c5);
        let sub = c5.induced_subgraph(&set(&[4, 2])).unwrap();
        assert_eq!(sub.labels().unwrap(), ["4", "2"]);
        assert_eq!(c5.induced_subgraph(&set(&[7])), Err(GraphError::VertexOutOfRange { vertex: 7, n: 5 }));
    }

    #[test]
    fn independent_and_clique_checks() {
        let k3 = Graph::complete(3);
        assert!(k3.is_clique(&[0, 1, 2]));
        assert!(!k3.is_independent_set(&[0, 1]));
        assert!(k3.is_independent_set(&[]) && k3.is_clique(&[]));
        assert!(k3.is_independent_set(&[2]) && k3.is_clique(&[2]));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]).unwrap_err(), GraphError::SelfLoop(0));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
        let g = Graph::from_edges(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(VertexSet::new(vec![1, 1]), Err(GraphError::DuplicateVertex(1)));
    }

    #[test]
    fn co_components() {
        // complement of C4 is 2K2
        let c4 = Graph::cycle(4);
        let mut comps = c4.co_components_within(&[0, 1, 2, 3]);
        comps.sort();
        assert_eq!(comps, vec![vec![0, 2], vec![1, 3]]);
        let p4 = Graph::path(4);
        assert_eq!(p4.co_components_within(&[0, 1, 2, 3]).len(), 1);
        assert_eq!(p4.co_components_within(&[1, 2]).len(), 2);
        assert_eq!(p4.components_within(&[0, 1, 3]), vec![vec![0, 1], vec![3]]);
    }

    #[test]
    fn sparse_graphs_skip_the_matrix() {
        let n = MATRIX_LIMIT + 10;
        let g = Graph::path(n);
        assert!(g.matrix.is_none());
        assert!(g.has_edge(n - 2, n - 1) && !g.has_edge(0, n - 1));
    }
}
