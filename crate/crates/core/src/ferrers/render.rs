use std::fmt::Write;

use super::FerrersRepresentation;
use crate::graph::{Graph, Vertex};

const CELL: usize = 48;
const RADIUS: usize = 18;

fn name(g: Option<&Graph>, v: Vertex) -> String {
    g.map_or_else(|| v.to_string(), |g| g.label(v))
}

pub(super) fn ascii(f: &FerrersRepresentation, g: Option<&Graph>) -> String {
    let names: Vec<Vec<String>> = f.rows().iter().map(|row| row.iter().map(|&v| name(g, v)).collect()).collect();
    let width = names.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in &names {
        let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

pub(super) fn svg(f: &FerrersRepresentation, g: Option<&Graph>) -> String {
    let width = f.column_count().max(1) * CELL;
    let height = f.row_count().max(1) * CELL;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for (r, row) in f.rows().iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            let (cx, cy) = (c * CELL + CELL / 2, r * CELL + CELL / 2);
            writeln!(out, r#"  <circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="white" stroke="black"/>"#).unwrap();
            writeln!(
                out,
                r#"  <text x="{cx}" y="{cy}" text-anchor="middle" dominant-baseline="central" font-size="14">{}</text>"#,
                escape(&name(g, v))
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}
