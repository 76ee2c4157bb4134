//! Box cograph certificates: induced subgraphs with `κ̂ = [k]^l`, the minimal
//! obstructions to (k−1,l−1)-colourability of a cograph.
//!
//! [`find_box_cograph`] distributes the constant sequence `[k]^l` from the
//! root downwards. A union node splits the multiplicity among its children, a
//! join node splits the value, and the leaves that end up with `[1]^1` form
//! the certificate.

use serde::Serialize;
use thiserror::Error;

use crate::cotree::{build_cotree, Cotree, CotreeError, Label, NodeKind, P4Witness, Tree};
use crate::graph::{Graph, GraphError, Vertex, VertexSet};
use crate::kappa::{extract_colouring, kappa_hat, KLColouring, KappaAnnotations};
use crate::sequence::PartitionSequence;

/// Vertex set inducing a box cograph of dimension `k × l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxCertificate {
    pub k: usize,
    pub l: usize,
    pub vertices: VertexSet,
}

impl BoxCertificate {
    /// `{"k":…, "l":…, "vertices":[labels]}`.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "k": self.k,
            "l": self.l,
            "vertices": self.vertices.iter().map(|&v| g.label(v)).collect::<Vec<_>>(),
        })
    }
}

/// The sequence `[r]^s` given to each node, `None` where the node was pruned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxAssignment {
    values: Vec<Option<(usize, usize)>>,
}

impl BoxAssignment {
    /// `(r, s)` for node `i`.
    pub fn at(&self, i: usize) -> Option<(usize, usize)> {
        self.values[i]
    }

    /// Leaves assigned `[1]^1`, in increasing vertex order.
    pub fn selected_leaves(&self, t: &Tree) -> Vec<Vertex> {
        let mut vertices: Vec<Vertex> = t
            .nodes()
            .iter()
            .zip(&self.values)
            .filter_map(|(node, value)| match (node.kind, value) {
                (NodeKind::Leaf(v), Some(_)) => Some(v),
                _ => None,
            })
            .collect();
        vertices.sort_unstable();
        vertices
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoxError {
    #[error("box dimensions must be positive, got {k}x{l}")]
    ZeroDimension { k: usize, l: usize },
    #[error("κ_{} = {kappa} < {k}: the graph is ({},{})-colourable and has no {k}x{l} box cograph", l - 1, k - 1, l - 1)]
    Colourable { k: usize, l: usize, kappa: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoxDefect {
    #[error("certificate vertices are invalid: {0}")]
    Vertices(#[from] GraphError),
    #[error("a {k}x{l} certificate needs {expected} vertices, found {found}")]
    WrongSize { k: usize, l: usize, expected: usize, found: usize },
    #[error("the induced subgraph is not a cograph: {0}")]
    NotCograph(P4Witness),
    #[error("the induced subgraph has κ̂ = ({found}) instead of [{k}]^{l}")]
    WrongKappa { k: usize, l: usize, found: PartitionSequence },
}

/// Top-down assignment of `[k]^l`. Each child takes as much as it can, in
/// child order.
pub fn box_assignment(t: &Tree, kappa: &KappaAnnotations, k: usize, l: usize) -> Result<BoxAssignment, BoxError> {
    if k == 0 || l == 0 {
        return Err(BoxError::ZeroDimension { k, l });
    }
    let root_kappa = kappa.root().kappa_at(l - 1);
    if root_kappa < k {
        return Err(BoxError::Colourable { k, l, kappa: root_kappa });
    }
    let mut values = vec![None; t.node_count()];
    values[Tree::ROOT] = Some((k, l));
    // Preorder, so parents are assigned before their children.
    for i in 0..t.node_count() {
        let Some((r, s)) = values[i] else { continue };
        let node = t.node(i);
        let mut remaining = match node.kind {
            NodeKind::Leaf(_) => {
                debug_assert_eq!((r, s), (1, 1));
                continue;
            }
            NodeKind::Internal(Label::Union) => s,
            NodeKind::Internal(Label::Join) => r,
        };
        for &c in &node.children {
            if remaining == 0 {
                break;
            }
            let child = kappa.at(c);
            let (share, value) = match node.kind {
                NodeKind::Internal(Label::Union) => {
                    let share = remaining.min(child.entries().partition_point(|&x| x >= r));
                    (share, (r, share))
                }
                _ => {
                    let share = remaining.min(child.kappa_at(s - 1));
                    (share, (share, s))
                }
            };
            if share > 0 {
                values[c] = Some(value);
                remaining -= share;
            }
        }
        debug_assert_eq!(remaining, 0, "the root condition guarantees a full split");
    }
    Ok(BoxAssignment { values })
}

/// Induced box cograph of dimension `k × l`; needs `κ_{l−1}(G) ≥ k`.
pub fn find_box_cograph(t: &Tree, kappa: &KappaAnnotations, k: usize, l: usize) -> Result<BoxCertificate, BoxError> {
    let assignment = box_assignment(t, kappa, k, l)?;
    let vertices = assignment.selected_leaves(t);
    Ok(BoxCertificate { k, l, vertices: VertexSet::from_vec_unchecked(vertices) })
}

/// Checks that the certificate's vertices induce a cograph with
/// `κ̂ = [k]^l`.
pub fn verify_box_cograph(g: &Graph, cert: &BoxCertificate) -> Result<(), BoxDefect> {
    cert.vertices.check(g)?;
    let expected = cert.k * cert.l;
    if cert.vertices.len() != expected || expected == 0 {
        return Err(BoxDefect::WrongSize { k: cert.k, l: cert.l, expected, found: cert.vertices.len() });
    }
    let h = g.induced_subgraph(&cert.vertices)?;
    let t = match build_cotree(&h) {
        Ok(t) => t,
        Err(CotreeError::NotCograph(w)) => {
            return Err(BoxDefect::NotCograph(P4Witness(w.0.map(|v| cert.vertices[v]))));
        }
        Err(e) => unreachable!("non-empty graphs yield a cotree or a P4: {e}"),
    };
    let found = kappa_hat(&t);
    if found != PartitionSequence::constant(cert.k, cert.l) {
        return Err(BoxDefect::WrongKappa { k: cert.k, l: cert.l, found });
    }
    Ok(())
}

/// Exactly one of a (k,l)-colouring and a `(k+1) × (l+1)` box cograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certification {
    Colourable(KLColouring),
    Obstructed(BoxCertificate),
}

pub fn certify_non_colourable(t: &Cotree, k: usize, l: usize) -> Certification {
    match extract_colouring(t, k, l) {
        Ok(c) => Certification::Colourable(c),
        Err(_) => {
            let kappa = KappaAnnotations::compute(t);
            let cert = find_box_cograph(t, &kappa, k + 1, l + 1).expect("κ_l > k, so the box exists");
            Certification::Obstructed(cert)
        }
    }
}
