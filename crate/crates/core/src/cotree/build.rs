//! Cograph recognition by recursive decomposition into components and
//! co-components.

use std::fmt;

use super::{Cotree, CotreeError, Label, TreeBuilder};
use crate::graph::{Graph, Vertex};

/// Four vertices inducing the path `a - b - c - d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct P4Witness(pub [Vertex; 4]);

impl P4Witness {
    /// Checks all six adjacencies: `ab`, `bc`, `cd` present and `ac`, `ad`,
    /// `bd` absent.
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c, d] = self.0;
        if self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        g.has_edge(a, b)
            && g.has_edge(b, c)
            && g.has_edge(c, d)
            && !g.has_edge(a, c)
            && !g.has_edge(a, d)
            && !g.has_edge(b, d)
    }

    pub fn vertices(&self) -> [Vertex; 4] {
        self.0
    }
}

impl fmt::Display for P4Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "{a}-{b}-{c}-{d}")
    }
}

/// What is already known about a vertex subset waiting to be decomposed.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Known {
    Nothing,
    Connected,
    CoConnected,
}

/// Builds the canonical cotree of `g`, or returns an induced P4.
///
/// Runs in O(n·(n + m)): every level of the recursion does one component
/// search and one co-component search over its vertex subset.
pub fn build_cotree(g: &Graph) -> Result<Cotree, CotreeError> {
    if g.n() == 0 {
        return Err(CotreeError::EmptyGraph);
    }
    let mut b = TreeBuilder::new();
    let mut stack: Vec<(Vec<Vertex>, Option<usize>, Known)> = vec![(g.vertices().collect(), None, Known::Nothing)];
    while let Some((members, parent, known)) = stack.pop() {
        if members.len() == 1 {
            b.leaf(members[0], parent);
            continue;
        }
        let comps = if known == Known::Connected { Vec::new() } else { g.components_within(&members) };
        let (label, mut parts) = if comps.len() > 1 {
            (Label::Union, comps)
        } else {
            let co = if known == Known::CoConnected { Vec::new() } else { g.co_components_within(&members) };
            if co.len() <= 1 {
                return Err(CotreeError::NotCograph(p4_in_prime(g, &members)));
            }
            (Label::Join, co)
        };
        parts.sort_by_key(|p| (p.len(), p[0]));
        let id = b.internal(label, parent);
        let child_known = match label {
            Label::Union => Known::Connected,
            Label::Join => Known::CoConnected,
        };
        for part in parts.into_iter().rev() {
            stack.push((part, Some(id), child_known));
        }
    }
    Ok(Cotree::new(b.finish()?).expect("decomposition yields a valid cotree"))
}

/// Returns an induced P4 of `g`, or [`CotreeError::IsCograph`].
pub fn find_p4(g: &Graph) -> Result<P4Witness, CotreeError> {
    match build_cotree(g) {
        Ok(_) | Err(CotreeError::EmptyGraph) => Err(CotreeError::IsCograph),
        Err(CotreeError::NotCograph(w)) => Ok(w),
        Err(e) => Err(e),
    }
}

/// Finds an induced P4 inside `members`, whose induced subgraph is connected
/// and co-connected with at least two vertices (so a P4 must exist).
///
/// Every induced P4 `a-b-c-d` has a middle edge `bc`; for each edge we look
/// for `a ∈ N(b) \ N[c]` and `d ∈ N(c) \ N[b]` with `a ≁ d`.
fn p4_in_prime(g: &Graph, members: &[Vertex]) -> P4Witness {
    let n = g.n();
    let mut inside = vec![false; n];
    for &v in members {
        inside[v] = true;
    }
    let mut mark_b = vec![0usize; n];
    let mut mark_c = vec![0usize; n];
    let mut mark_d = vec![0usize; n];
    let mut round = 0usize;
    for &b in members {
        for &c in g.neighbors(b) {
            if !inside[c] || c < b {
                continue;
            }
            round += 1;
            for &w in g.neighbors(b) {
                mark_b[w] = round;
            }
            for &w in g.neighbors(c) {
                mark_c[w] = round;
            }
            let a_side: Vec<Vertex> =
                g.neighbors(b).iter().copied().filter(|&w| inside[w] && w != c && mark_c[w] != round).collect();
            let d_side: Vec<Vertex> =
                g.neighbors(c).iter().copied().filter(|&w| inside[w] && w != b && mark_b[w] != round).collect();
            if a_side.is_empty() || d_side.is_empty() {
                continue;
            }
            for &d in &d_side {
                mark_d[d] = round;
            }
            for &a in &a_side {
                let hits = g.neighbors(a).iter().filter(|&&w| mark_d[w] == round).count();
                if hits < d_side.len() {
                    let d = *d_side.iter().find(|&&d| !g.has_edge(a, d)).unwrap();
                    let w = P4Witness([a, b, c, d]);
                    debug_assert!(w.verify(g));
                    return w;
                }
            }
        }
    }
    unreachable!("a connected and co-connected graph on two or more vertices contains an induced P4")
}
