//! Ferrers diagram representations: the vertices of a cograph placed on a
//! Ferrers shape so that every row is an independent set and every column a
//! clique. Column heights read left to right give `κ̂`, row lengths top to
//! bottom give `λ̂`.

mod fast;
mod render;

pub use fast::build_ferrers_fast;

use serde::Serialize;
use thiserror::Error;

use crate::certificate::BoxCertificate;
use crate::cotree::{Label, NodeKind, Tree};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::kappa::{KLColouring, NotColourable};
use crate::sequence::PartitionSequence;

/// Grid of vertices stored row by row, top row first.
///
/// Construction does not validate; [`validate_ferrers`] checks the shape and
/// the row/column properties against a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FerrersRepresentation {
    rows: Vec<Vec<Vertex>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FerrersDefect {
    #[error("row {0} is empty")]
    EmptyRow(usize),
    #[error("row {0} is longer than the row above it")]
    NotFerrersShape(usize),
    #[error("vertex {0} is not a vertex of the graph")]
    OutOfRange(Vertex),
    #[error("vertex {0} appears twice")]
    Repeated(Vertex),
    #[error("vertex {0} is missing")]
    Missing(Vertex),
    #[error("row {0} is not an independent set")]
    RowNotIndependent(usize),
    #[error("column {0} is not a clique")]
    ColumnNotClique(usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("the graph is ({k},{l})-colourable, so it contains no ({}x{}) box cograph", k + 1, l + 1)]
pub struct NoObstruction {
    pub k: usize,
    pub l: usize,
}

impl FerrersRepresentation {
    pub fn from_rows(rows: Vec<Vec<Vertex>>) -> Self {
        FerrersRepresentation { rows }
    }

    pub fn rows(&self) -> &[Vec<Vertex>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn column_count(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<Vertex> {
        self.rows.iter().map_while(|row| row.get(c).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Vertex>> {
        (0..self.column_count()).map(|c| self.column(c)).collect()
    }

    pub fn cell_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row lengths, i.e. `λ̂` of the represented cograph.
    pub fn row_lengths(&self) -> PartitionSequence {
        PartitionSequence::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    /// Column heights, i.e. `κ̂` of the represented cograph.
    pub fn column_heights(&self) -> PartitionSequence {
        self.row_lengths().conjugate()
    }

    /// Number of columns taller than `k`, which is `λ_k`.
    fn columns_taller_than(&self, k: usize) -> usize {
        self.rows.get(k).map_or(0, Vec::len)
    }

    /// The tallest columns become the cliques; what is left fits in the top
    /// `k` rows, each an independent set.
    pub fn read_colouring(&self, k: usize, l: usize) -> Result<KLColouring, NotColourable> {
        let tall = self.columns_taller_than(k);
        if tall > l {
            return Err(NotColourable { k, l, kappa: self.column(l).len() });
        }
        let cliques = (0..tall).map(|c| VertexSet::from_vec_unchecked(self.column(c))).collect();
        let independent_sets = self.rows[..k.min(self.rows.len())]
            .iter()
            .filter(|row| row.len() > tall)
            .map(|row| VertexSet::from_vec_unchecked(row[tall..].to_vec()))
            .collect();
        Ok(KLColouring { independent_sets, cliques })
    }

    /// The top-left `(k+1) × (l+1)` block, listed column by column. It exists
    /// exactly when the graph is not (k,l)-colourable.
    pub fn read_obstruction(&self, k: usize, l: usize) -> Result<BoxCertificate, NoObstruction> {
        if self.columns_taller_than(k) <= l {
            return Err(NoObstruction { k, l });
        }
        let vertices = (0..=l).flat_map(|c| (0..=k).map(move |r| (r, c))).map(|(r, c)| self.rows[r][c]).collect();
        Ok(BoxCertificate { k: k + 1, l: l + 1, vertices: VertexSet::from_vec_unchecked(vertices) })
    }

    pub fn render_ascii(&self, g: Option<&Graph>) -> String {
        render::ascii(self, g)
    }

    pub fn render_svg(&self, g: Option<&Graph>) -> String {
        render::svg(self, g)
    }

    /// Array of rows, each an array of vertex labels.
    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::Value::from(
            self.rows.iter().map(|row| row.iter().map(|&v| g.label(v)).collect::<Vec<_>>()).collect::<Vec<_>>(),
        )
    }
}

/// Checks that `f` is a Ferrers diagram representation of `g`.
pub fn validate_ferrers(g: &Graph, f: &FerrersRepresentation) -> Result<(), FerrersDefect> {
    for (r, row) in f.rows.iter().enumerate() {
        if row.is_empty() {
            return Err(FerrersDefect::EmptyRow(r));
        }
        if r > 0 && row.len() > f.rows[r - 1].len() {
            return Err(FerrersDefect::NotFerrersShape(r));
        }
    }
    let mut seen = vec![false; g.n()];
    for &v in f.rows.iter().flatten() {
        if v >= g.n() {
            return Err(FerrersDefect::OutOfRange(v));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(FerrersDefect::Repeated(v));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(FerrersDefect::Missing(v));
    }
    if let Some(r) = f.rows.iter().position(|row| !g.is_independent_set(row)) {
        return Err(FerrersDefect::RowNotIndependent(r));
    }
    if let Some(c) = (0..f.column_count()).find(|&c| !g.is_clique(&f.column(c))) {
        return Err(FerrersDefect::ColumnNotClique(c));
    }
    Ok(())
}

/// Ferrers diagram representation of the cograph, built with the linked
/// small-to-large method.
pub fn build_ferrers<T: AsRef<Tree>>(t: &T) -> FerrersRepresentation {
    build_ferrers_fast(t.as_ref())
}

/// Reference builder: at each node the children's diagrams are rebuilt into a
/// fresh one. Union nodes stable-sort all columns by height, join nodes all
/// rows by length.
pub fn build_ferrers_naive(t: &Tree) -> FerrersRepresentation {
    let mut slots: Vec<Option<Vec<Vec<Vertex>>>> = vec![None; t.node_count()];
    for i in t.bottom_up() {
        let node = t.node(i);
        let rows = match node.kind {
            NodeKind::Leaf(v) => vec![vec![v]],
            NodeKind::Internal(Label::Join) => {
                let mut rows: Vec<Vec<Vertex>> = Vec::new();
                for &c in &node.children {
                    rows.extend(slots[c].take().unwrap());
                }
                rows.sort_by_key(|r| std::cmp::Reverse(r.len()));
                rows
            }
            NodeKind::Internal(Label::Union) => {
                let mut cols: Vec<Vec<Vertex>> = Vec::new();
                for &c in &node.children {
                    cols.extend(transpose(&slots[c].take().unwrap()));
                }
                cols.sort_by_key(|col| std::cmp::Reverse(col.len()));
                transpose(&cols)
            }
        };
        slots[i] = Some(rows);
    }
    FerrersRepresentation { rows: slots[Tree::ROOT].take().unwrap() }
}

/// Rows of a Ferrers-shaped grid to its columns (and back).
fn transpose(lines: &[Vec<Vertex>]) -> Vec<Vec<Vertex>> {
    let width = lines.first().map_or(0, Vec::len);
    (0..width).map(|c| lines.iter().map_while(|line| line.get(c).copied()).collect()).collect()
}
