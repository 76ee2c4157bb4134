//! Brute-force ground truth for small general graphs.
//!
//! Vertex subsets are bitmasks. Chromatic numbers, `κ_l`, `λ_k` and box
//! cograph membership are computed by memoised recursion over subsets of the
//! input graph, with no use of cotrees.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::kappa::KLColouring;
use crate::sequence::PartitionSequence;

type Mask = u32;

/// Largest graph the bitmask representation can hold.
pub const MAX_ORACLE_VERTICES: usize = Mask::BITS as usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_cliques_enumerated: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 12, max_cliques_enumerated: 50_000_000 }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle budget allows {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("enumerated more than {limit} cliques")]
    CliqueBudget { limit: u64 },
    #[error("invalid budget: max_vertices must be between 1 and {MAX_ORACLE_VERTICES}")]
    InvalidBudget,
    #[error("exhaustive partition search is limited to {max} vertices, graph has {n}")]
    SearchTooLarge { n: usize, max: usize },
}

/// Which cliques the `κ_l` recursion removes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CliqueFamily {
    /// Maximal cliques of the current subgraph.
    Maximal,
    /// Every non-empty clique.
    All,
}

/// One side of the oracle: a graph or its complement.
struct Side {
    adj: Vec<Mask>,
    chi: HashMap<Mask, usize>,
    kappa: HashMap<(Mask, usize, bool), usize>,
}

pub struct Oracle {
    n: usize,
    full: Mask,
    sides: [Side; 2],
    box_memo: HashMap<(Mask, usize), bool>,
    budget: OracleBudget,
    cliques_seen: u64,
}

const GRAPH: usize = 0;
const COMPLEMENT: usize = 1;

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

fn mask_of(vs: &[Vertex]) -> Mask {
    vs.iter().fold(0, |m, &v| m | (1 << v))
}

impl Oracle {
    pub fn new(g: &Graph, budget: OracleBudget) -> Result<Self, OracleError> {
        if budget.max_vertices == 0 || budget.max_vertices > MAX_ORACLE_VERTICES {
            return Err(OracleError::InvalidBudget);
        }
        if g.n() > budget.max_vertices {
            return Err(OracleError::TooManyVertices { n: g.n(), max: budget.max_vertices });
        }
        let n = g.n();
        let full = if n == 0 { 0 } else { Mask::MAX >> (MAX_ORACLE_VERTICES - n) };
        let adj: Vec<Mask> = g.vertices().map(|v| mask_of(g.neighbors(v))).collect();
        let co_adj: Vec<Mask> = adj.iter().enumerate().map(|(v, &a)| full & !a & !(1 << v)).collect();
        let side = |adj| Side { adj, chi: HashMap::new(), kappa: HashMap::new() };
        Ok(Oracle { n, full, sides: [side(adj), side(co_adj)], box_memo: HashMap::new(), budget, cliques_seen: 0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn count_clique(&mut self) -> Result<(), OracleError> {
        self.cliques_seen += 1;
        if self.cliques_seen > self.budget.max_cliques_enumerated {
            return Err(OracleError::CliqueBudget { limit: self.budget.max_cliques_enumerated });
        }
        Ok(())
    }

    /// Maximal cliques of `side` restricted to `within`, by Bron–Kerbosch
    /// with pivoting.
    fn maximal_cliques(&mut self, side: usize, within: Mask) -> Result<Vec<Mask>, OracleError> {
        let mut out = Vec::new();
        let mut stack = vec![(0 as Mask, within, 0 as Mask)];
        while let Some((r, mut p, mut x)) = stack.pop() {
            if p == 0 {
                if x == 0 {
                    self.count_clique()?;
                    out.push(r);
                }
                continue;
            }
            let adj = &self.sides[side].adj;
            let pivot = bits(p | x).max_by_key(|&u| (p & adj[u]).count_ones()).unwrap();
            for v in bits(p & !adj[pivot]) {
                stack.push((r | (1 << v), p & adj[v], x & adj[v]));
                p &= !(1 << v);
                x |= 1 << v;
            }
        }
        Ok(out)
    }

    /// Every non-empty clique of `side` inside `within`.
    fn all_cliques(&mut self, side: usize, within: Mask) -> Result<Vec<Mask>, OracleError> {
        let mut out = Vec::new();
        let mut stack = vec![(0 as Mask, within)];
        while let Some((r, p)) = stack.pop() {
            if r != 0 {
                self.count_clique()?;
                out.push(r);
            }
            let mut rest = p;
            for v in bits(p) {
                rest &= !(1 << v);
                stack.push((r | (1 << v), rest & self.sides[side].adj[v]));
            }
        }
        Ok(out)
    }

    /// Chromatic number of `side` on `s`: the colour class of the lowest
    /// vertex can be taken to be a maximal independent set.
    fn chi(&mut self, side: usize, s: Mask) -> Result<usize, OracleError> {
        if s == 0 {
            return Ok(0);
        }
        if let Some(&c) = self.sides[side].chi.get(&s) {
            return Ok(c);
        }
        let v = s.trailing_zeros() as usize;
        let others = s & !(1 << v) & !self.sides[side].adj[v];
        let classes = if others == 0 { vec![0] } else { self.maximal_cliques(1 - side, others)? };
        let mut best = usize::MAX;
        for class in classes {
            best = best.min(1 + self.chi(side, s & !class & !(1 << v))?);
        }
        self.sides[side].chi.insert(s, best);
        Ok(best)
    }

    fn kappa_on(&mut self, side: usize, s: Mask, l: usize, family: CliqueFamily) -> Result<usize, OracleError> {
        if s == 0 {
            return Ok(0);
        }
        if l == 0 {
            return self.chi(side, s);
        }
        let key = (s, l, family == CliqueFamily::All);
        if let Some(&k) = self.sides[side].kappa.get(&key) {
            return Ok(k);
        }
        let mut best = self.kappa_on(side, s, l - 1, family)?;
        let cliques = match family {
            CliqueFamily::Maximal => self.maximal_cliques(side, s)?,
            CliqueFamily::All => self.all_cliques(side, s)?,
        };
        for c in cliques {
            if best == 0 {
                break;
            }
            best = best.min(self.kappa_on(side, s & !c, l - 1, family)?);
        }
        self.sides[side].kappa.insert(key, best);
        Ok(best)
    }

    pub fn chromatic_number(&mut self) -> Result<usize, OracleError> {
        self.chi(GRAPH, self.full)
    }

    /// Clique cover number `θ`.
    pub fn clique_cover_number(&mut self) -> Result<usize, OracleError> {
        self.chi(COMPLEMENT, self.full)
    }

    /// Least `k` such that the graph is (k,l)-colourable.
    pub fn kappa(&mut self, l: usize) -> Result<usize, OracleError> {
        self.kappa_with(l, CliqueFamily::Maximal)
    }

    pub fn kappa_with(&mut self, l: usize, family: CliqueFamily) -> Result<usize, OracleError> {
        self.kappa_on(GRAPH, self.full, l, family)
    }

    /// Least `l` such that the graph is (k,l)-colourable, by removing
    /// independent sets.
    pub fn lambda(&mut self, k: usize) -> Result<usize, OracleError> {
        self.kappa_on(COMPLEMENT, self.full, k, CliqueFamily::Maximal)
    }

    fn sequence(&mut self, side: usize) -> Result<PartitionSequence, OracleError> {
        let mut out = Vec::new();
        loop {
            let v = self.kappa_on(side, self.full, out.len(), CliqueFamily::Maximal)?;
            if v == 0 {
                break;
            }
            out.push(v);
        }
        Ok(PartitionSequence::new(out).expect("κ_l is non-increasing in l"))
    }

    pub fn kappa_hat(&mut self) -> Result<PartitionSequence, OracleError> {
        self.sequence(GRAPH)
    }

    pub fn lambda_hat(&mut self) -> Result<PartitionSequence, OracleError> {
        self.sequence(COMPLEMENT)
    }

    pub fn is_kl_colourable(&mut self, k: usize, l: usize) -> Result<bool, OracleError> {
        Ok(self.kappa(l)? <= k)
    }

    fn components(&self, side: usize, s: Mask) -> Vec<Mask> {
        let adj = &self.sides[side].adj;
        let mut rest = s;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let reach = bits(frontier).fold(0, |m, v| m | adj[v]) & s & !comp;
                comp |= reach;
                frontier = reach;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Membership of `side` restricted to `s` in the class generated from
    /// `K1` by complements and unions of two members with equal chromatic
    /// number.
    fn in_box_class(&mut self, side: usize, s: Mask) -> Result<bool, OracleError> {
        if s.count_ones() == 1 {
            return Ok(true);
        }
        if let Some(&b) = self.box_memo.get(&(s, side)) {
            return Ok(b);
        }
        let comps = self.components(side, s);
        let result = if comps.len() == 1 {
            let co = self.components(1 - side, s);
            co.len() > 1 && self.in_box_class(1 - side, s)?
        } else {
            let mut found = false;
            // Component 0 always lies in the first group.
            let splits: Mask = 1 << (comps.len() - 1);
            for pick in 1..splits {
                let b = bits(pick).fold(0, |m, i| m | comps[i + 1]);
                let a = s & !b;
                if self.chi(side, a)? == self.chi(side, b)?
                    && self.in_box_class(side, a)?
                    && self.in_box_class(side, b)?
                {
                    found = true;
                    break;
                }
            }
            found
        };
        self.box_memo.insert((s, side), result);
        Ok(result)
    }

    /// Whether the graph is a box cograph, whatever its dimension.
    pub fn is_box_cograph(&mut self) -> Result<bool, OracleError> {
        if self.n == 0 {
            return Ok(false);
        }
        self.in_box_class(GRAPH, self.full)
    }

    /// Whether the graph is a box cograph with `χ = k` and `θ = l`.
    pub fn is_box_cograph_of(&mut self, k: usize, l: usize) -> Result<bool, OracleError> {
        Ok(self.is_box_cograph()? && self.chromatic_number()? == k && self.clique_cover_number()? == l)
    }
}

pub fn chromatic_number_exact(g: &Graph) -> Result<usize, OracleError> {
    Oracle::new(g, OracleBudget::default())?.chromatic_number()
}

pub fn kappa_oracle(g: &Graph, l: usize) -> Result<usize, OracleError> {
    Oracle::new(g, OracleBudget::default())?.kappa(l)
}

pub fn kappa_hat_oracle(g: &Graph) -> Result<PartitionSequence, OracleError> {
    Oracle::new(g, OracleBudget::default())?.kappa_hat()
}

pub fn lambda_hat_oracle(g: &Graph) -> Result<PartitionSequence, OracleError> {
    Oracle::new(g, OracleBudget::default())?.lambda_hat()
}

pub fn is_box_cograph_oracle(g: &Graph, k: usize, l: usize) -> Result<bool, OracleError> {
    Oracle::new(g, OracleBudget::default())?.is_box_cograph_of(k, l)
}

pub fn is_kl_colourable_oracle(g: &Graph, k: usize, l: usize) -> Result<bool, OracleError> {
    Oracle::new(g, OracleBudget::default())?.is_kl_colourable(k, l)
}

/// Largest graph [`search_kl_colouring`] accepts.
pub const MAX_SEARCH_VERTICES: usize = 8;

/// Exhaustive backtracking over all assignments of vertices to at most `k`
/// independent sets and `l` cliques.
pub fn search_kl_colouring(g: &Graph, k: usize, l: usize) -> Result<Option<KLColouring>, OracleError> {
    if g.n() > MAX_SEARCH_VERTICES {
        return Err(OracleError::SearchTooLarge { n: g.n(), max: MAX_SEARCH_VERTICES });
    }
    let mut parts: Vec<Vec<Vertex>> = vec![Vec::new(); k + l];
    if !assign(g, k, 0, &mut parts) {
        return Ok(None);
    }
    let (ind, cl) = parts.split_at(k);
    let keep = |p: &[Vec<Vertex>]| -> Vec<VertexSet> {
        p.iter().filter(|s| !s.is_empty()).map(|s| VertexSet::from_vec_unchecked(s.clone())).collect()
    };
    Ok(Some(KLColouring { independent_sets: keep(ind), cliques: keep(cl) }))
}

/// Parts `0..k` are independent sets, the rest cliques. Only the first empty
/// part of each kind is tried, which skips relabelled duplicates.
fn assign(g: &Graph, k: usize, v: Vertex, parts: &mut [Vec<Vertex>]) -> bool {
    if v == g.n() {
        return true;
    }
    let mut tried_empty = [false; 2];
    for p in 0..parts.len() {
        let kind = usize::from(p >= k);
        if parts[p].is_empty() {
            if std::mem::replace(&mut tried_empty[kind], true) {
                continue;
            }
        } else {
            let fits = if kind == 0 {
                parts[p].iter().all(|&u| !g.has_edge(u, v))
            } else {
                parts[p].iter().all(|&u| g.has_edge(u, v))
            };
            if !fits {
                continue;
            }
        }
        parts[p].push(v);
        if assign(g, k, v + 1, parts) {
            return true;
        }
        parts[p].pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::disjoint_cliques;

    fn seq(v: &[usize]) -> PartitionSequence {
        PartitionSequence::new(v.to_vec()).unwrap()
    }

    fn seven_vertex_example() -> Graph {
        let edges = [(1, 2), (1, 3), (2, 3), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7)];
        Graph::from_edges(7, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number_exact(&Graph::complete(4)), Ok(4));
        assert_eq!(chromatic_number_exact(&Graph::cycle(5)), Ok(3));
        assert_eq!(chromatic_number_exact(&Graph::path(4)), Ok(2));
        assert_eq!(chromatic_number_exact(&Graph::empty(0)), Ok(0));
        assert_eq!(chromatic_number_exact(&Graph::empty(3)), Ok(1));
    }

    #[test]
    fn small_sequences() {
        assert_eq!(kappa_oracle(&Graph::path(4), 1), Ok(1));
        assert_eq!(kappa_hat_oracle(&Graph::path(4)), Ok(seq(&[2, 1])));
        assert_eq!(kappa_hat_oracle(&Graph::cycle(5)), Ok(seq(&[3, 2, 1])));
        assert_eq!(kappa_hat_oracle(&Graph::empty(1)), Ok(seq(&[1])));
        assert_eq!(kappa_hat_oracle(&disjoint_cliques(2, 2).evaluate()), Ok(seq(&[2, 2])));
        assert_eq!(lambda_hat_oracle(&disjoint_cliques(2, 2).evaluate()), Ok(seq(&[2, 2])));
    }

    #[test]
    fn seven_vertex_example_sequences() {
        let g = seven_vertex_example();
        assert_eq!(kappa_hat_oracle(&g), Ok(seq(&[3, 3, 1])));
        assert_eq!(lambda_hat_oracle(&g), Ok(seq(&[3, 2, 2])));
    }

    #[test]
    fn maximal_and_all_cliques_agree() {
        for g in [seven_vertex_example(), Graph::cycle(5), Graph::path(6), disjoint_cliques(3, 2).evaluate()] {
            let mut o = Oracle::new(&g, OracleBudget::default()).unwrap();
            for l in 0..4 {
                assert_eq!(o.kappa_with(l, CliqueFamily::Maximal), o.kappa_with(l, CliqueFamily::All));
            }
        }
    }

    #[test]
    fn box_membership() {
        for (k, l) in [(1, 1), (2, 3), (3, 2), (1, 4), (4, 1)] {
            let g = disjoint_cliques(k, l).evaluate();
            assert_eq!(is_box_cograph_oracle(&g, k, l), Ok(true), "{l}K{k}");
            assert_eq!(is_box_cograph_oracle(&g, k, l + 1), Ok(false));
        }
        assert_eq!(Oracle::new(&Graph::path(4), OracleBudget::default()).unwrap().is_box_cograph(), Ok(false));
        let k2_k1 = Graph::complete(2).disjoint_union(&Graph::empty(1));
        assert_eq!(Oracle::new(&k2_k1, OracleBudget::default()).unwrap().is_box_cograph(), Ok(false));
        // Complement of 2K2 is C4.
        assert_eq!(is_box_cograph_oracle(&Graph::cycle(4), 2, 2), Ok(true));
    }

    #[test]
    fn colourability_and_search() {
        // P3 is a split graph.
        assert_eq!(is_kl_colourable_oracle(&Graph::path(3), 1, 1), Ok(true));
        let two_k3 = disjoint_cliques(3, 2).evaluate();
        assert_eq!(is_kl_colourable_oracle(&two_k3, 1, 1), Ok(false));
        assert_eq!(search_kl_colouring(&two_k3, 1, 1), Ok(None));
        let c = search_kl_colouring(&two_k3, 0, 2).unwrap().unwrap();
        assert_eq!(c.verify(&two_k3, 0, 2), Ok(()));
        let g = seven_vertex_example();
        let chi = chromatic_number_exact(&g).unwrap();
        assert_eq!(is_kl_colourable_oracle(&g, chi, 0), Ok(true));
        assert!(search_kl_colouring(&Graph::empty(9), 1, 0).is_err());
    }

    #[test]
    fn budgets_are_enforced() {
        assert_eq!(kappa_hat_oracle(&Graph::empty(13)).unwrap_err(), OracleError::TooManyVertices { n: 13, max: 12 });
        let tiny = OracleBudget { max_vertices: 12, max_cliques_enumerated: 3 };
        let mut o = Oracle::new(&Graph::cycle(7), tiny).unwrap();
        assert_eq!(o.kappa(2), Err(OracleError::CliqueBudget { limit: 3 }));
        let bad = OracleBudget { max_vertices: 0, ..tiny };
        assert!(matches!(Oracle::new(&Graph::empty(1), bad), Err(OracleError::InvalidBudget)));
    }
}
