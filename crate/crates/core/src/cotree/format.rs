//! Text and JSON forms of (pseudo)cotrees.
//!
//! Text: `1(0(a,b),c)` where `0`/`1` before a parenthesis is a node label and
//! anything else is a leaf name. JSON: `{"label":1,"children":[…]}` for
//! internal nodes and `{"vertex":"a"}` for leaves.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::{CotreeError, Label, NodeKind, Tree, TreeBuilder};
use crate::graph::{Graph, Vertex};

/// A tree read from text or JSON together with its leaf names.
#[derive(Debug, Clone)]
pub struct ParsedTree {
    pub tree: Tree,
    /// `names[v]` is the leaf name of vertex `v`.
    pub names: Vec<String>,
}

impl ParsedTree {
    /// The represented graph, labelled with the leaf names.
    pub fn graph(&self) -> Graph {
        self.tree.evaluate().with_labels(self.names.clone()).expect("one name per leaf")
    }
}

pub fn cotree_to_text(tree: &Tree, name: &dyn Fn(Vertex) -> String) -> String {
    enum Step {
        Node(usize),
        Lit(&'static str),
    }
    let mut out = String::new();
    let mut stack = vec![Step::Node(Tree::ROOT)];
    while let Some(step) = stack.pop() {
        match step {
            Step::Lit(s) => out.push_str(s),
            Step::Node(i) => {
                let node = tree.node(i);
                match node.kind {
                    NodeKind::Leaf(v) => out.push_str(&name(v)),
                    NodeKind::Internal(label) => {
                        out.push(if label == Label::Join { '1' } else { '0' });
                        out.push('(');
                        stack.push(Step::Lit(")"));
                        for (k, &c) in node.children.iter().enumerate().rev() {
                            stack.push(Step::Node(c));
                            if k > 0 {
                                stack.push(Step::Lit(","));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn cotree_from_text(text: &str) -> Result<ParsedTree, CotreeError> {
    let err = |m: &str| CotreeError::Parse(m.to_string());
    let mut tokens: Vec<Token> = Vec::new();
    let mut word = String::new();
    for ch in text.chars() {
        match ch {
            '(' | ')' | ',' => {
                flush(&mut word, &mut tokens);
                tokens.push(match ch {
                    '(' => Token::Open,
                    ')' => Token::Close,
                    _ => Token::Comma,
                });
            }
            c if c.is_whitespace() => flush(&mut word, &mut tokens),
            c => word.push(c),
        }
    }
    flush(&mut word, &mut tokens);

    let mut b = TreeBuilder::new();
    let mut names: Vec<String> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    // Whether the next token must start a node (as opposed to `,` or `)`).
    let mut expect_node = true;
    let mut finished = false;
    let mut i = 0;
    while i < tokens.len() {
        if finished {
            return Err(err("trailing input after the root"));
        }
        match &tokens[i] {
            Token::Word(w) if expect_node => {
                let parent = open.last().copied();
                if matches!(tokens.get(i + 1), Some(Token::Open)) {
                    let label = match w.as_str() {
                        "0" => Label::Union,
                        "1" => Label::Join,
                        _ => return Err(err(&format!("node label must be 0 or 1, found `{w}`"))),
                    };
                    open.push(b.internal(label, parent));
                    i += 1;
                } else {
                    b.leaf(names.len(), parent);
                    names.push(w.clone());
                    expect_node = false;
                    finished = open.is_empty();
                }
            }
            Token::Comma if !expect_node && !open.is_empty() => expect_node = true,
            Token::Close if !expect_node => {
                open.pop().ok_or_else(|| err("unbalanced `)`"))?;
                finished = open.is_empty();
            }
            t => return Err(err(&format!("unexpected {t:?}"))),
        }
        i += 1;
    }
    if !finished {
        return Err(err("unexpected end of input"));
    }
    finish_parsed(b, names)
}

#[derive(Debug)]
enum Token {
    Open,
    Close,
    Comma,
    Word(String),
}

fn flush(word: &mut String, tokens: &mut Vec<Token>) {
    if !word.is_empty() {
        tokens.push(Token::Word(std::mem::take(word)));
    }
}

/// Leaves were numbered in order of appearance; when the names are exactly
/// `0..n` they become the vertex ids instead.
fn finish_parsed(b: TreeBuilder, names: Vec<String>) -> Result<ParsedTree, CotreeError> {
    let mut seen = HashMap::new();
    for (i, name) in names.iter().enumerate() {
        if seen.insert(name.as_str(), i).is_some() {
            return Err(CotreeError::Parse(format!("leaf `{name}` appears twice")));
        }
    }
    let n = names.len();
    let numeric: Option<Vec<usize>> = names.iter().map(|s| s.parse::<usize>().ok().filter(|&v| v < n)).collect();
    let mut tree = b.finish()?;
    match numeric {
        Some(ids) => {
            for node in &mut tree.nodes {
                if let NodeKind::Leaf(v) = &mut node.kind {
                    *v = ids[*v];
                }
            }
            for v in &mut tree.leaf_order {
                *v = ids[*v];
            }
            Ok(ParsedTree { tree, names: (0..n).map(|v| v.to_string()).collect() })
        }
        None => Ok(ParsedTree { tree, names }),
    }
}

pub fn cotree_to_json(tree: &Tree, name: &dyn Fn(Vertex) -> String) -> Value {
    fn go(tree: &Tree, i: usize, name: &dyn Fn(Vertex) -> String) -> Value {
        let node = tree.node(i);
        match node.kind {
            NodeKind::Leaf(v) => json!({ "vertex": name(v) }),
            NodeKind::Internal(label) => json!({
                "label": label.bit(),
                "children": node.children.iter().map(|&c| go(tree, c, name)).collect::<Vec<_>>(),
            }),
        }
    }
    go(tree, Tree::ROOT, name)
}

pub fn cotree_from_json(value: &Value) -> Result<ParsedTree, CotreeError> {
    fn go(v: &Value, parent: Option<usize>, b: &mut TreeBuilder, names: &mut Vec<String>) -> Result<(), CotreeError> {
        let err = |m: &str| CotreeError::Parse(m.to_string());
        if let Some(vertex) = v.get("vertex") {
            let name = match vertex {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(err("`vertex` must be a string or number")),
            };
            b.leaf(names.len(), parent);
            names.push(name);
            return Ok(());
        }
        let label = v
            .get("label")
            .and_then(Value::as_u64)
            .and_then(|l| u8::try_from(l).ok())
            .and_then(Label::from_bit)
            .ok_or_else(|| err("internal node needs `label` 0 or 1"))?;
        let children = v.get("children").and_then(Value::as_array).ok_or_else(|| err("missing `children` array"))?;
        let id = b.internal(label, parent);
        for c in children {
            go(c, Some(id), b, names)?;
        }
        Ok(())
    }
    let mut b = TreeBuilder::new();
    let mut names = Vec::new();
    go(value, None, &mut b, &mut names)?;
    finish_parsed(b, names)
}
