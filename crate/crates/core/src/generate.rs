//! Seeded cotree generators for tests and benchmarks.

use rand::seq::{index, SliceRandom};
use rand::Rng;

use crate::cotree::{Cotree, Label, TreeBuilder};

/// Random cotree on `leaves` vertices, grown top-down.
///
/// Each internal node with `m` leaves gets between 2 and
/// `min(m, max_children)` children, sized by a uniformly random composition of
/// `m`. Labels alternate; the root label and the vertex numbering are random.
pub fn random_cotree<R: Rng + ?Sized>(rng: &mut R, leaves: usize, max_children: usize) -> Cotree {
    assert!(leaves >= 1, "a cotree needs at least one leaf");
    assert!(max_children >= 2, "internal nodes need two or more children");
    let mut ids: Vec<usize> = (0..leaves).collect();
    ids.shuffle(rng);
    let mut next_id = ids.into_iter();
    let mut b = TreeBuilder::new();
    let root_label = if rng.gen_bool(0.5) { Label::Union } else { Label::Join };
    let mut stack = vec![(leaves, None, root_label)];
    while let Some((m, parent, label)) = stack.pop() {
        if m == 1 {
            b.leaf(next_id.next().unwrap(), parent);
            continue;
        }
        let id = b.internal(label, parent);
        let t = rng.gen_range(2..=m.min(max_children));
        let mut cuts = index::sample(rng, m - 1, t - 1).into_vec();
        cuts.sort_unstable();
        let mut prev = 0;
        let mut sizes = Vec::with_capacity(t);
        for c in cuts {
            sizes.push(c + 1 - prev);
            prev = c + 1;
        }
        sizes.push(m - prev);
        for size in sizes.into_iter().rev() {
            stack.push((size, Some(id), label.flipped()));
        }
    }
    Cotree::new(b.finish().expect("generated tree is well formed")).expect("generated tree is a cotree")
}

/// Nested stars: every internal node has one leaf child and one internal
/// child, labels alternating, `leaves` leaves in total. Depth grows linearly,
/// which is the worst case for algorithms that copy a child's data at every
/// node.
pub fn nested_stars(leaves: usize, root: Label) -> Cotree {
    assert!(leaves >= 1, "a cotree needs at least one leaf");
    let mut b = TreeBuilder::new();
    let mut parent = None;
    let mut label = root;
    let mut v = 0;
    while leaves - v >= 2 {
        let id = b.internal(label, parent);
        b.leaf(v, Some(id));
        v += 1;
        parent = Some(id);
        label = label.flipped();
    }
    b.leaf(v, parent);
    Cotree::new(b.finish().unwrap()).expect("nested stars form a cotree")
}

/// Cotree of `copies` disjoint cliques of size `size` (`l·K_k`).
pub fn disjoint_cliques(size: usize, copies: usize) -> Cotree {
    assert!(size >= 1 && copies >= 1);
    let mut b = TreeBuilder::new();
    let mut v = 0;
    let root = (copies > 1).then(|| b.internal(Label::Union, None));
    for _ in 0..copies {
        let clique = (size > 1).then(|| b.internal(Label::Join, root));
        for _ in 0..size {
            b.leaf(v, clique.or(root));
            v += 1;
        }
    }
    Cotree::new(b.finish().unwrap()).expect("disjoint cliques form a cotree")
}
