//! Graph text format and DOT.
//!
//! The text format has one declaration per line:
//!
//! ```text
//! vertex u
//! vertex v
//! edge x u v      # edge x with source u and range v
//! ```
//!
//! [`parse_graph`] also accepts the DOT subset that [`to_dot`] emits (and
//! plain unlabeled digraphs, whose edges get generated names).

use super::{DirectedGraph, GraphError};
use crate::text::{content_lines, sanitize_token, ParseError};

pub fn parse_graph(input: &str) -> Result<DirectedGraph, ParseError> {
    let first = content_lines(input).next().map(|(_, l)| l);
    match first {
        Some(l) if l.starts_with("digraph") || l.starts_with("strict") => parse_dot(input),
        _ => parse_text(input),
    }
}

fn parse_text(input: &str) -> Result<DirectedGraph, ParseError> {
    let mut g = DirectedGraph::new();
    let graph_err = |line: usize| move |e: GraphError| ParseError::new(line, e.to_string());
    for (line, content) in content_lines(input) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", name] => {
                g.add_vertex(*name).map_err(graph_err(line))?;
            }
            ["edge", name, src, rng] => {
                let lookup = |v: &str| g.find_vertex(v).ok_or_else(|| ParseError::new(line, format!("unknown vertex `{v}`")));
                let (s, r) = (lookup(src)?, lookup(rng)?);
                g.add_edge(*name, s, r).map_err(graph_err(line))?;
            }
            _ => {
                return Err(ParseError::new(
                    line,
                    format!("expected `vertex <name>` or `edge <name> <src> <rng>`, found `{content}`"),
                ))
            }
        }
    }
    Ok(g)
}

pub fn write_graph(g: &DirectedGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str(&format!("vertex {}\n", sanitize_token(g.vertex_name(v))));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {} {} {}\n",
            sanitize_token(g.edge_name(e)),
            sanitize_token(g.vertex_name(g.src(e))),
            sanitize_token(g.vertex_name(g.rng(e)))
        ));
    }
    out
}

/// Quoted DOT identifier.
pub fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(g: &DirectedGraph, graph_name: &str) -> String {
    let mut out = format!("digraph {} {{\n", dot_id(graph_name));
    for v in g.vertices() {
        out.push_str(&format!("  {};\n", dot_id(g.vertex_name(v))));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -> {} [label={}];\n",
            dot_id(g.vertex_name(g.src(e))),
            dot_id(g.vertex_name(g.rng(e))),
            dot_id(g.edge_name(e))
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Id(String),
    Arrow,
    Open,
    Close,
    LBracket,
    RBracket,
    Eq,
    Sep,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut chars = input.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\n' => line += 1,
            c if c.is_whitespace() => {}
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            '/' if chars.peek() == Some(&'/') => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
            }
            '/' if chars.peek() == Some(&'*') => {
                chars.next();
                let mut prev = ' ';
                loop {
                    match chars.next() {
                        Some('/') if prev == '*' => break,
                        Some(c) => {
                            if c == '\n' {
                                line += 1;
                            }
                            prev = c;
                        }
                        None => return Err(ParseError::new(line, "unterminated comment")),
                    }
                }
            }
            '{' => out.push((line, Tok::Open)),
            '}' => out.push((line, Tok::Close)),
            '[' => out.push((line, Tok::LBracket)),
            ']' => out.push((line, Tok::RBracket)),
            '=' => out.push((line, Tok::Eq)),
            ';' | ',' => out.push((line, Tok::Sep)),
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                out.push((line, Tok::Arrow));
            }
            '-' if chars.peek() == Some(&'-') => {
                return Err(ParseError::new(line, "undirected edges are not supported"));
            }
            '"' => {
                let start = line;
                let mut s = String::new();
                loop {
                    match chars.next() {
                        Some('"') => break,
                        Some('\\') => match chars.next() {
                            Some(c) => s.push(c),
                            None => return Err(ParseError::new(start, "unterminated string")),
                        },
                        Some(c) => {
                            if c == '\n' {
                                line += 1;
                            }
                            s.push(c);
                        }
                        None => return Err(ParseError::new(start, "unterminated string")),
                    }
                }
                out.push((start, Tok::Id(s)));
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' || c == '-' => {
                let mut s = c.to_string();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push((line, Tok::Id(s)));
            }
            c => return Err(ParseError::new(line, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

fn parse_dot(input: &str) -> Result<DirectedGraph, ParseError> {
    let toks = tokenize(input)?;
    let mut i = 0;
    let line_at = |i: usize| toks.get(i).map_or_else(|| toks.last().map_or(1, |t| t.0), |t| t.0);
    let is_id = |i: usize, s: &str| matches!(toks.get(i), Some((_, Tok::Id(x))) if x == s);

    if is_id(i, "strict") {
        i += 1;
    }
    if !is_id(i, "digraph") {
        return Err(ParseError::new(line_at(i), "expected `digraph`"));
    }
    i += 1;
    if matches!(toks.get(i), Some((_, Tok::Id(_)))) {
        i += 1;
    }
    if toks.get(i).map(|t| &t.1) != Some(&Tok::Open) {
        return Err(ParseError::new(line_at(i), "expected `{`"));
    }
    i += 1;

    let mut g = DirectedGraph::new();
    let mut unlabeled = Vec::new();
    loop {
        let Some((line, tok)) = toks.get(i).cloned() else {
            return Err(ParseError::new(line_at(i), "missing `}`"));
        };
        match tok {
            Tok::Close => {
                i += 1;
                break;
            }
            Tok::Sep => i += 1,
            Tok::Id(first) => {
                i += 1;
                if toks.get(i).map(|t| &t.1) == Some(&Tok::Eq) {
                    // graph attribute `a = b`
                    i += 2;
                    continue;
                }
                let mut chain = vec![first];
                while toks.get(i).map(|t| &t.1) == Some(&Tok::Arrow) {
                    match toks.get(i + 1) {
                        Some((_, Tok::Id(next))) => chain.push(next.clone()),
                        _ => return Err(ParseError::new(line, "expected a node after `->`")),
                    }
                    i += 2;
                }
                let attrs = parse_attrs(&toks, &mut i)?;
                if chain.len() == 1 && ["graph", "node", "edge"].contains(&chain[0].as_str()) {
                    continue;
                }
                let mut ids = Vec::with_capacity(chain.len());
                for name in &chain {
                    let v = match g.find_vertex(name) {
                        Some(v) => v,
                        None => g.add_vertex(name.clone()).map_err(|e| ParseError::new(line, e.to_string()))?,
                    };
                    ids.push(v);
                }
                let label = attrs.into_iter().find(|(k, _)| k == "label").map(|(_, v)| v);
                for w in ids.windows(2) {
                    match (&label, chain.len()) {
                        (Some(name), 2) => {
                            g.add_edge(name.clone(), w[0], w[1]).map_err(|e| ParseError::new(line, e.to_string()))?;
                        }
                        _ => unlabeled.push((line, w[0], w[1])),
                    }
                }
            }
            _ => return Err(ParseError::new(line, "unexpected token")),
        }
    }
    if i != toks.len() {
        return Err(ParseError::new(line_at(i), "trailing input after `}`"));
    }
    let mut k = 0;
    for (line, s, r) in unlabeled {
        while g.find_edge(&format!("e{k}")).is_some() {
            k += 1;
        }
        g.add_edge(format!("e{k}"), s, r).map_err(|e| ParseError::new(line, e.to_string()))?;
    }
    Ok(g)
}

fn parse_attrs(toks: &[(usize, Tok)], i: &mut usize) -> Result<Vec<(String, String)>, ParseError> {
    let mut attrs = Vec::new();
    while toks.get(*i).map(|t| &t.1) == Some(&Tok::LBracket) {
        let line = toks[*i].0;
        *i += 1;
        loop {
            match toks.get(*i).map(|t| &t.1) {
                Some(Tok::RBracket) => {
                    *i += 1;
                    break;
                }
                Some(Tok::Sep) => *i += 1,
                Some(Tok::Id(key)) => match (toks.get(*i + 1).map(|t| &t.1), toks.get(*i + 2).map(|t| &t.1)) {
                    (Some(Tok::Eq), Some(Tok::Id(value))) => {
                        attrs.push((key.clone(), value.clone()));
                        *i += 3;
                    }
                    _ => return Err(ParseError::new(line, format!("malformed attribute `{key}`"))),
                },
                _ => return Err(ParseError::new(line, "unterminated attribute list")),
            }
        }
    }
    Ok(attrs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn text_round_trip() {
        for (_, g) in fixtures::graph_fixtures() {
            assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        }
    }

    #[test]
    fn dot_round_trip() {
        for (name, g) in fixtures::graph_fixtures() {
            assert_eq!(parse_graph(&to_dot(&g, name)).unwrap(), g);
        }
    }

    #[test]
    fn dot_with_odd_names() {
        let g = DirectedGraph::from_names(&["a \"b\"", "(x,y)"], &[("{1>2}", "a \"b\"", "(x,y)")]).unwrap();
        assert_eq!(parse_graph(&to_dot(&g, "G")).unwrap(), g);
    }

    #[test]
    fn unlabeled_dot_edges_get_names() {
        let g = parse_graph("digraph { rankdir=BT; a -> b -> c; node [shape=box]; }").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edge_name(crate::graph::EdgeId(0)), "e0");
    }

    #[test]
    fn text_errors_carry_lines() {
        let err = parse_graph("vertex u\nedge x u w\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_graph("vertex u\nvertex u\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(parse_graph("bogus\n").unwrap_err().line, 1);
    }
}
