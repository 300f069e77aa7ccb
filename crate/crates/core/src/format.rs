//! The line-oriented graph text format.
//!
//! ```text
//! # comment
//! a -> b      directed edge
//! a <-> c     bi-directed edge
//! d           isolated vertex
//! ```
//!
//! Whitespace around tokens is ignored and blank lines are skipped.
//! Duplicate edges, self-loops and directed cycles are rejected.

use crate::error::{Error, Result};
use crate::graph::{is_valid_name, Admg, AdmgBuilder};

fn at_line(line: usize, e: Error) -> Error {
    Error::AtLine {
        line,
        source: Box::new(e),
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the graph text format.
pub fn parse_graph(text: &str) -> Result<Admg> {
    let mut b = AdmgBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let (op, pos) = match (content.find("<->"), content.find("->")) {
            (Some(p), _) => ("<->", p),
            (None, Some(p)) => ("->", p),
            (None, None) => {
                let name = content.trim();
                let col = content.find(name).unwrap_or(0) + 1;
                if name.contains("<-") {
                    return Err(syntax(line, col, "`<-` is not supported; write `b -> a`"));
                }
                if !is_valid_name(name) {
                    return Err(syntax(line, col, format!("invalid vertex name `{name}`")));
                }
                b.vertex(name).map_err(|e| at_line(line, e))?;
                continue;
            }
        };
        let left = &content[..pos];
        let right = &content[pos + op.len()..];
        let lname = left.trim();
        let rname = right.trim();
        let lcol = left
            .find(|c: char| !c.is_whitespace())
            .map_or(pos + 1, |c| c + 1);
        let rcol = pos
            + op.len()
            + right
                .find(|c: char| !c.is_whitespace())
                .map_or(1, |c| c + 1);
        if lname.is_empty() {
            return Err(syntax(
                line,
                pos + 1,
                format!("missing vertex before `{op}`"),
            ));
        }
        if rname.is_empty() {
            return Err(syntax(
                line,
                pos + op.len() + 1,
                format!("missing vertex after `{op}`"),
            ));
        }
        if !is_valid_name(lname) {
            return Err(syntax(line, lcol, format!("invalid vertex name `{lname}`")));
        }
        if !is_valid_name(rname) {
            return Err(syntax(line, rcol, format!("invalid vertex name `{rname}`")));
        }
        let res = if op == "->" {
            b.directed(lname, rname)
        } else {
            b.bidirected(lname, rname)
        };
        res.map_err(|e| at_line(line, e))?;
    }
    b.build()
}

/// Renders a graph in the text format: directed edges, then bi-directed
/// edges, then isolated vertices, each block in name order.
pub fn emit_graph(g: &Admg) -> String {
    let mut out = String::new();
    for &(t, h) in g.directed_edges() {
        out.push_str(&format!("{} -> {}\n", g.name(t), g.name(h)));
    }
    for &(a, b) in g.bidirected_edges() {
        out.push_str(&format!("{} <-> {}\n", g.name(a), g.name(b)));
    }
    for v in 0..g.n() {
        if g.parents_of(v).is_empty() && g.children_of(v).is_empty() && g.spouses_of(v).is_empty() {
            out.push_str(g.name(v));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_figure1() {
        let g = parse_graph("a -> c\nc <-> d\nd -> b\nb <-> a\n").unwrap();
        let id = |n| g.id(n).unwrap();
        assert!(g.has_directed(id("a"), id("c")));
        assert!(g.has_bidirected(id("c"), id("d")));
        assert!(g.has_directed(id("d"), id("b")));
        assert!(g.has_bidirected(id("a"), id("b")));
        assert_eq!(g.directed_edges().len(), 2);
        assert_eq!(g.bidirected_edges().len(), 2);
    }

    #[test]
    fn empty_and_comment_only_inputs() {
        assert_eq!(parse_graph("").unwrap().n(), 0);
        assert_eq!(parse_graph("# nothing\n\n   \n").unwrap().n(), 0);
    }

    #[test]
    fn whitespace_and_isolated_vertices() {
        let g = parse_graph("  x->y  # trailing\n\tz\n y <->x").unwrap();
        assert_eq!(g.names(), ["x", "y", "z"]);
        assert_eq!(g.bidirected_edges().len(), 1);
    }

    #[test]
    fn error_kinds_are_distinct() {
        match parse_graph("x -> x") {
            Err(Error::AtLine { line: 1, source }) => {
                assert!(matches!(*source, Error::SelfLoop(_)))
            }
            other => panic!("{other:?}"),
        }
        match parse_graph("a -> b\n\na -> b") {
            Err(Error::AtLine { line: 3, source }) => {
                assert!(matches!(*source, Error::DuplicateEdge(_)))
            }
            other => panic!("{other:?}"),
        }
        match parse_graph("a <-> b\nb <-> a") {
            Err(Error::AtLine { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_graph("a -> b\nb -> c\nc -> a"),
            Err(Error::DirectedCycle { .. })
        ));
        assert!(matches!(
            parse_graph("a -> "),
            Err(Error::Syntax {
                line: 1,
                column: 5,
                ..
            })
        ));
        assert!(matches!(
            parse_graph("ok\n  a b -> c"),
            Err(Error::Syntax {
                line: 2,
                column: 3,
                ..
            })
        ));
        assert!(matches!(parse_graph("a <- b"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_graph("a -> b -> c"),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn emitted_text_parses_back() {
        let g = parse_graph("e -> d\nd -> a\na <-> b\nlonely\n").unwrap();
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }
}
