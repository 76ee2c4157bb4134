use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use klcolour::cotree::{cotree_from_json, cotree_from_text};
use klcolour::graph::{parse_edge_list, parse_graph6};
use klcolour::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `u v` per line, optional vertex count on the first line
    Edges,
    /// graph6
    G6,
    /// cotree text such as `1(0(a,b),c)`
    Cotree,
    /// cotree JSON `{"label":1,"children":[...]}`
    CotreeJson,
}

/// `-` reads standard input, an existing path reads that file, anything else
/// is taken as the input text itself.
pub fn read_source(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).context("reading standard input")?;
        return Ok(text);
    }
    let path = Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    Ok(arg.to_string())
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let g = match format {
        Format::Edges => parse_edge_list(text)?,
        Format::G6 => {
            let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
            parse_graph6(line)?
        }
        Format::Cotree => cotree_from_text(text)?.graph(),
        Format::CotreeJson => {
            let value: serde_json::Value = serde_json::from_str(text).context("cotree JSON")?;
            cotree_from_json(&value)?.graph()
        }
    };
    Ok(g)
}

pub fn load_graph(arg: &str, format: Format) -> Result<Graph> {
    parse_graph(&read_source(arg)?, format)
}
