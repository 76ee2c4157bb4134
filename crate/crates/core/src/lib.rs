//! (k,l)-colourings of cographs.
//!
//! A (k,l)-colouring partitions the vertices into at most `k` independent sets
//! and at most `l` cliques. For cographs the whole family of answers is
//! captured by the sequence `κ̂(G) = (κ_0, κ_1, …)`, where `κ_l` is the least
//! `k` that works with `l` cliques. This crate computes that sequence from the
//! cotree, produces explicit colourings and box cograph obstructions, and
//! builds Ferrers diagram representations. A brute-force [`oracle`] checks all
//! of it on small general graphs.

pub mod certificate;
pub mod cotree;
pub mod ferrers;
pub mod generate;
pub mod graph;
pub mod kappa;
pub mod oracle;
pub mod sequence;

pub use certificate::{
    certify_non_colourable, find_box_cograph, verify_box_cograph, BoxAssignment, BoxCertificate, Certification,
};
pub use cotree::{build_cotree, find_p4, Cotree, CotreeError, Label, P4Witness, Pseudocotree, Tree};
pub use ferrers::{build_ferrers, build_ferrers_naive, validate_ferrers, FerrersRepresentation};
pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use kappa::{extract_colouring, kappa_hat, lambda_hat, KLColouring, KappaAnnotations};
pub use sequence::PartitionSequence;
