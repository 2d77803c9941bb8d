//! Textual graph specifications: `path:5`, `friendship:3`,
//! `corona(path:3,complete:2)`, `file:graph.txt`, and the other named
//! families, with nesting inside the binary operators.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses a graph specification. Binary forms take two comma-separated
/// specs in parentheses and may nest arbitrarily.
pub fn parse_spec(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("cartesian(") {
        let (a, b) = split_args("cartesian", rest, spec)?;
        return Graph::cartesian_product(&parse_spec(a)?, &parse_spec(b)?);
    }
    if let Some(rest) = spec.strip_prefix("corona(") {
        let (a, b) = split_args("corona", rest, spec)?;
        return Graph::corona(&parse_spec(a)?, &parse_spec(b)?);
    }
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("malformed graph spec {spec:?}")))?;
    match name {
        "path" => Graph::path(parse_n(arg, spec)?),
        "cycle" => Graph::cycle(parse_n(arg, spec)?),
        "complete" => Graph::complete(parse_n(arg, spec)?),
        "star" => Graph::star(parse_n(arg, spec)?),
        "friendship" => Graph::friendship(parse_n(arg, spec)?),
        "book" => Graph::book(parse_n(arg, spec)?),
        "biclique" => {
            let (p, q) = arg
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("biclique needs two sizes in {spec:?}")))?;
            Graph::complete_bipartite(parse_n(p, spec)?, parse_n(q, spec)?)
        }
        "file" => {
            let text = std::fs::read_to_string(arg)?;
            Graph::from_edge_list(&text)
        }
        _ => Err(Error::Parse(format!("unknown family {name:?} in {spec:?}"))),
    }
}

fn parse_n(arg: &str, spec: &str) -> Result<usize> {
    arg.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad size {arg:?} in {spec:?}")))
}

/// Splits `"a,b)"`-style tail of a binary spec at its top-level comma.
fn split_args<'a>(op: &str, rest: &'a str, spec: &str) -> Result<(&'a str, &'a str)> {
    let inner = rest
        .strip_suffix(')')
        .ok_or_else(|| Error::Parse(format!("{op} spec missing ')' in {spec:?}")))?;
    let mut depth = 0usize;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::Parse(format!("unbalanced parens in {spec:?}")))?
            }
            ',' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(Error::Parse(format!("{op} needs two comma-separated specs in {spec:?}")))
}
