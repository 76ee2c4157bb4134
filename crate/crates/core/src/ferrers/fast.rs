//! Linked-cell Ferrers builder.
//!
//! Every cell (one per vertex) is linked to the next cell along its row and
//! along its column, and knows which row and column it lies on. A diagram
//! keeps its rows and its columns as ordered lists of line objects. Merging
//! two diagrams inserts the lines of the smaller one into the larger, each at
//! the position a stable sort by length would give it, and splices its cells
//! into the crossing lines. The lines of length at least `h` are exactly
//! those meeting crossing line `h − 1`, so the insertion point is the line
//! through that crossing line's last cell.

use super::FerrersRepresentation;
use crate::cotree::{Label, NodeKind, Tree};
use crate::graph::Vertex;

const ROW: usize = 0;
const COL: usize = 1;
const NIL: u32 = u32::MAX;

/// Cells are numbered by leaf position in preorder, so every subtree owns a
/// contiguous range. Line `i` of either axis starts out as the one-cell line
/// through cell `i`.
#[derive(Debug, Clone, Copy)]
struct Line {
    head: u32,
    tail: u32,
    len: u32,
    next: u32,
}

#[derive(Debug, Clone, Copy)]
struct Diagram {
    first: [u32; 2],
    count: [u32; 2],
    size: u32,
}

struct Arena {
    /// `next[a][cell]` is the following cell on the cell's line of axis `a`.
    next: [Vec<u32>; 2],
    /// `line[a][cell]` is the cell's line of axis `a`.
    line: [Vec<u32>; 2],
    lines: [Vec<Line>; 2],
    crossing: Vec<u32>,
    incoming: Vec<u32>,
}

impl Arena {
    fn new(n: usize) -> Self {
        let ids: Vec<u32> = (0..n as u32).collect();
        let single: Vec<Line> = ids.iter().map(|&c| Line { head: c, tail: c, len: 1, next: NIL }).collect();
        Arena {
            next: [vec![NIL; n], vec![NIL; n]],
            line: [ids.clone(), ids],
            lines: [single.clone(), single],
            crossing: Vec::new(),
            incoming: Vec::new(),
        }
    }

    fn leaf(cell: u32) -> Diagram {
        Diagram { first: [cell, cell], count: [1, 1], size: 1 }
    }

    /// Moves every line of axis `x` from `b` into `a`. Lines of `b` go after
    /// the lines of `a` with the same length, or before them when
    /// `source_first` is set.
    fn insert(&mut self, a: &mut Diagram, b: Diagram, x: usize, source_first: bool) {
        let y = 1 - x;
        let m = a.count[y] as usize;
        let p = b.count[y] as usize;

        let mut crossing = std::mem::take(&mut self.crossing);
        crossing.clear();
        let mut line = a.first[y];
        while crossing.len() < m.min(p + 1) {
            crossing.push(line);
            line = self.lines[y][line as usize].next;
        }
        let mut incoming = std::mem::take(&mut self.incoming);
        incoming.clear();
        let mut line = b.first[x];
        for _ in 0..b.count[x] {
            incoming.push(line);
            line = self.lines[x][line as usize].next;
        }
        if source_first {
            incoming.reverse();
        }

        // Lines longer than every line of `a` form the front, in order.
        let mut front = NIL;
        for &c in &incoming {
            let h = self.lines[x][c as usize].len as usize;
            let reach = if source_first { h + 1 } else { h };
            let anchor = if reach <= m {
                let tail = self.lines[y][crossing[reach - 1] as usize].tail;
                self.line[x][tail as usize]
            } else if source_first {
                NIL
            } else {
                front
            };
            self.link_line_after(a, x, c, anchor);
            self.splice_cells(c, anchor, x, &crossing[..h.min(m)]);
            if reach > m && !source_first {
                front = c;
            }
        }

        // Crossing lines of `b` beyond the depth of `a` carry over whole.
        if p > m {
            let mut line = b.first[y];
            for _ in 0..m {
                line = self.lines[y][line as usize].next;
            }
            self.lines[y][crossing[m - 1] as usize].next = line;
            a.count[y] = p as u32;
        }
        a.size += b.size;
        self.crossing = crossing;
        self.incoming = incoming;
    }

    fn link_line_after(&mut self, a: &mut Diagram, x: usize, c: u32, anchor: u32) {
        let lines = &mut self.lines[x];
        if anchor == NIL {
            lines[c as usize].next = a.first[x];
            a.first[x] = c;
        } else {
            lines[c as usize].next = lines[anchor as usize].next;
            lines[anchor as usize].next = c;
        }
        a.count[x] += 1;
    }

    /// Puts the `k`-th cell of line `c` right after the `k`-th cell of
    /// `anchor` on crossing line `crossing[k]`.
    fn splice_cells(&mut self, c: u32, anchor: u32, x: usize, crossing: &[u32]) {
        let y = 1 - x;
        let mut cell = self.lines[x][c as usize].head;
        let mut left = if anchor == NIL { NIL } else { self.lines[x][anchor as usize].head };
        for &yl in crossing {
            let cross = &mut self.lines[y][yl as usize];
            if left == NIL {
                self.next[y][cell as usize] = cross.head;
                cross.head = cell;
            } else {
                let right = self.next[y][left as usize];
                self.next[y][cell as usize] = right;
                self.next[y][left as usize] = cell;
                if right == NIL {
                    cross.tail = cell;
                }
                left = self.next[x][left as usize];
            }
            cross.len += 1;
            self.line[y][cell as usize] = yl;
            cell = self.next[x][cell as usize];
        }
    }

    fn rows(&self, d: &Diagram, vertex: &[Vertex]) -> Vec<Vec<Vertex>> {
        let mut rows = Vec::with_capacity(d.count[ROW] as usize);
        let mut line = d.first[ROW];
        for _ in 0..d.count[ROW] {
            let l = self.lines[ROW][line as usize];
            let mut row = Vec::with_capacity(l.len as usize);
            let mut cell = l.head;
            for _ in 0..l.len {
                row.push(vertex[cell as usize]);
                cell = self.next[ROW][cell as usize];
            }
            rows.push(row);
            line = l.next;
        }
        rows
    }
}

pub fn build_ferrers_fast(t: &Tree) -> FerrersRepresentation {
    assert!(t.leaf_count() < NIL as usize, "too many vertices for 32-bit cell ids");
    let mut arena = Arena::new(t.leaf_count());
    let mut slots: Vec<Diagram> = vec![Arena::leaf(0); t.node_count()];
    for i in t.bottom_up() {
        let node = t.node(i);
        slots[i] = match node.kind {
            NodeKind::Leaf(_) => Arena::leaf(node.first_leaf as u32),
            NodeKind::Internal(label) => {
                let x = if label == Label::Union { COL } else { ROW };
                let mut acc = slots[node.children[0]];
                for &c in &node.children[1..] {
                    let mut d = slots[c];
                    if acc.size >= d.size {
                        arena.insert(&mut acc, d, x, false);
                    } else {
                        arena.insert(&mut d, acc, x, true);
                        acc = d;
                    }
                }
                acc
            }
        };
    }
    FerrersRepresentation::from_rows(arena.rows(&slots[Tree::ROOT], t.leaf_order()))
}
