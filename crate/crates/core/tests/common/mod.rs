#![allow(dead_code)]

use klcolour::generate::random_cotree;
use klcolour::{Cotree, Graph};
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_cograph<R: Rng>(rng: &mut R, max_n: usize) -> (Cotree, Graph) {
    let n = rng.gen_range(1..=max_n);
    let max_children = rng.gen_range(2..=5);
    let t = random_cotree(rng, n, max_children);
    let g = t.evaluate();
    (t, g)
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// One representative per isomorphism class of graphs on `n` vertices, found
/// by taking the least edge mask over all relabellings.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    let pairs = pairs(n);
    let index = |u: usize, v: usize| pairs.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let perms = permutations(n);
    let images: Vec<Vec<usize>> =
        perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let canonical = images
            .iter()
            .map(|img| img.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).fold(0u32, |m, (_, &j)| m | 1 << j))
            .min()
            .unwrap();
        if seen.insert(canonical) {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| canonical >> i & 1 == 1).map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

/// Seven-vertex non-cograph with `κ̂ = (3,3,1)` and `λ̂ = (3,2,2)`.
pub fn seven_vertex_example() -> Graph {
    let edges = [(1, 2), (1, 3), (2, 3), (3, 6), (3, 7), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7)];
    Graph::from_edges(7, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}
