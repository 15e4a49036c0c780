//! Text formats.
//!
//! Rotation systems, one graph per file:
//!
//! ```text
//! # comment
//! v 0: 0 2 1 3      vertex id, then its darts in counterclockwise order
//! e 0: 0 1 +        edge id, its two darts, sign
//! ```
//!
//! Diagrams, one per file:
//!
//! ```text
//! x 0: a b c d      crossing id, arc labels at ports 0..3 (under at 0 and 2)
//! o 1               free loops (optional, default 0)
//! ```
//!
//! Ids may be any non-negative integers and are relabeled densely in
//! ascending order. Writers emit the canonical form: dense ids, edge `i` with
//! darts `2i 2i+1`, arc labels numbered by first appearance.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::cmap::{Sign, SignedCyclicGraph};
use crate::diagram::VirtualDiagram;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}: duplicate {kind} id {id}")]
    Duplicate { line: usize, kind: &'static str, id: u64 },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn lines(input: &str) -> Vec<Line<'_>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(col),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..col],
                            column: s + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn number(line: usize, tok: &Token<'_>, what: &str) -> Result<u64, ParseError> {
    tok.text
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("expected {what}, found `{}`", tok.text)))
}

/// Splits `<kw> <id>: rest...`, accepting `id:` or `id :`.
fn header<'a, 'b>(line: &'b Line<'a>) -> Result<(u64, &'b [Token<'a>]), ParseError> {
    let kw = &line.tokens[0];
    let Some(id_tok) = line.tokens.get(1) else {
        return Err(syntax(line.number, kw.column + kw.text.len(), "missing id"));
    };
    if let Some(stripped) = id_tok.text.strip_suffix(':') {
        let id = number(
            line.number,
            &Token {
                text: stripped,
                column: id_tok.column,
            },
            "an id",
        )?;
        return Ok((id, &line.tokens[2..]));
    }
    let id = number(line.number, id_tok, "an id")?;
    match line.tokens.get(2) {
        Some(t) if t.text == ":" => Ok((id, &line.tokens[3..])),
        Some(t) => Err(syntax(line.number, t.column, "expected `:`")),
        None => Err(syntax(line.number, id_tok.column + id_tok.text.len(), "expected `:`")),
    }
}

pub fn parse_graph(input: &str) -> Result<SignedCyclicGraph, ParseError> {
    let mut vertices: BTreeMap<u64, (usize, Vec<u64>)> = BTreeMap::new();
    let mut edges: BTreeMap<u64, (usize, u64, u64, Sign)> = BTreeMap::new();
    for line in lines(input) {
        let kw = &line.tokens[0];
        match kw.text {
            "v" => {
                let (id, rest) = header(&line)?;
                let darts = rest
                    .iter()
                    .map(|t| number(line.number, t, "a dart id"))
                    .collect::<Result<Vec<_>, _>>()?;
                if vertices.insert(id, (line.number, darts)).is_some() {
                    return Err(ParseError::Duplicate {
                        line: line.number,
                        kind: "vertex",
                        id,
                    });
                }
            }
            "e" => {
                let (id, rest) = header(&line)?;
                let end = line.tokens.last().map(|t| t.column + t.text.len()).unwrap_or(1);
                if rest.len() != 3 {
                    let col = rest.get(3).map(|t| t.column).unwrap_or(end);
                    return Err(syntax(line.number, col, "an edge needs two darts and a sign"));
                }
                let d1 = number(line.number, &rest[0], "a dart id")?;
                let d2 = number(line.number, &rest[1], "a dart id")?;
                let sign = match rest[2].text {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    other => return Err(syntax(line.number, rest[2].column, format!("expected `+` or `-`, found `{other}`"))),
                };
                if d1 == d2 {
                    return Err(ParseError::Invariant(format!(
                        "line {}: edge {id} pairs dart {d1} with itself",
                        line.number
                    )));
                }
                if edges.insert(id, (line.number, d1, d2, sign)).is_some() {
                    return Err(ParseError::Duplicate {
                        line: line.number,
                        kind: "edge",
                        id,
                    });
                }
            }
            other => return Err(syntax(line.number, kw.column, format!("unknown record `{other}`"))),
        }
    }
    if vertices.is_empty() {
        return Err(ParseError::Invariant("a graph needs at least one vertex".into()));
    }
    let mut dart_index: HashMap<u64, usize> = HashMap::new();
    let mut signs = Vec::with_capacity(edges.len());
    for (i, (id, (line, d1, d2, sign))) in edges.iter().enumerate() {
        for (k, d) in [*d1, *d2].into_iter().enumerate() {
            if dart_index.insert(d, 2 * i + k).is_some() {
                return Err(ParseError::Invariant(format!(
                    "line {line}: dart {d} of edge {id} already belongs to another edge"
                )));
            }
        }
        signs.push(*sign);
    }
    let mut placed = vec![false; 2 * edges.len()];
    let mut rotations = Vec::with_capacity(vertices.len());
    for (id, (line, darts)) in &vertices {
        let mut rot = Vec::with_capacity(darts.len());
        for d in darts {
            let Some(&idx) = dart_index.get(d) else {
                return Err(ParseError::Invariant(format!(
                    "line {line}: dart {d} of vertex {id} belongs to no edge"
                )));
            };
            if std::mem::replace(&mut placed[idx], true) {
                return Err(ParseError::Invariant(format!(
                    "line {line}: dart {d} appears in more than one vertex rotation"
                )));
            }
            rot.push(idx);
        }
        rotations.push(rot);
    }
    if let Some(missing) = placed.iter().position(|p| !p) {
        let original = dart_index.iter().find(|(_, v)| **v == missing).map(|(k, _)| *k).unwrap_or(0);
        return Err(ParseError::Invariant(format!("dart {original} appears in no vertex rotation")));
    }
    SignedCyclicGraph::new(rotations, signs).map_err(|e| ParseError::Invariant(e.to_string()))
}

pub fn write_graph(g: &SignedCyclicGraph) -> String {
    let mut out = String::new();
    for (v, rot) in g.rotations().iter().enumerate() {
        let _ = write!(out, "v {v}:");
        for d in rot {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    for (e, s) in g.signs().iter().enumerate() {
        let _ = writeln!(out, "e {e}: {} {} {}", 2 * e, 2 * e + 1, s.symbol());
    }
    out
}

pub fn parse_diagram(input: &str) -> Result<VirtualDiagram, ParseError> {
    let mut crossings: BTreeMap<u64, (usize, Vec<(String, usize)>)> = BTreeMap::new();
    let mut free_loops: Option<usize> = None;
    for line in lines(input) {
        let kw = &line.tokens[0];
        match kw.text {
            "x" => {
                let (id, rest) = header(&line)?;
                if rest.len() != 4 {
                    let end = line.tokens.last().map(|t| t.column + t.text.len()).unwrap_or(1);
                    let col = rest.get(4).map(|t| t.column).unwrap_or(end);
                    return Err(syntax(line.number, col, "a crossing needs exactly four arc labels"));
                }
                let labels = rest.iter().map(|t| (t.text.to_string(), t.column)).collect();
                if crossings.insert(id, (line.number, labels)).is_some() {
                    return Err(ParseError::Duplicate {
                        line: line.number,
                        kind: "crossing",
                        id,
                    });
                }
            }
            "o" => {
                if free_loops.is_some() {
                    return Err(syntax(line.number, kw.column, "free-loop count given twice"));
                }
                match line.tokens.get(1..) {
                    Some([t]) => free_loops = Some(number(line.number, t, "a loop count")? as usize),
                    _ => return Err(syntax(line.number, kw.column, "expected `o <count>`")),
                }
            }
            other => return Err(syntax(line.number, kw.column, format!("unknown record `{other}`"))),
        }
    }
    let mut ends: HashMap<String, Vec<(usize, usize, usize)>> = HashMap::new();
    for (c, (_, (line, labels))) in crossings.iter().enumerate() {
        for (k, (label, col)) in labels.iter().enumerate() {
            ends.entry(label.clone()).or_default().push((4 * c + k, *line, *col));
        }
    }
    let mut mates = vec![0; 4 * crossings.len()];
    let mut labels: Vec<_> = ends.into_iter().collect();
    labels.sort_by_key(|(_, v)| (v[0].1, v[0].2));
    for (label, uses) in labels {
        if uses.len() != 2 {
            let (_, line, col) = uses[if uses.len() > 2 { 2 } else { 0 }];
            return Err(ParseError::Invariant(format!(
                "line {line}, column {col}: arc label `{label}` appears {} time(s), expected 2",
                uses.len()
            )));
        }
        mates[uses[0].0] = uses[1].0;
        mates[uses[1].0] = uses[0].0;
    }
    VirtualDiagram::new(mates, free_loops.unwrap_or(0)).map_err(|e| ParseError::Invariant(e.to_string()))
}

pub fn write_diagram(d: &VirtualDiagram) -> String {
    let mut label = vec![usize::MAX; d.port_count()];
    let mut next = 0;
    for p in 0..d.port_count() {
        if label[p] == usize::MAX {
            label[p] = next;
            label[d.mate(p)] = next;
            next += 1;
        }
    }
    let mut out = String::new();
    for c in 0..d.crossing_count() {
        let l = &label[4 * c..4 * c + 4];
        let _ = writeln!(out, "x {c}: {} {} {} {}", l[0], l[1], l[2], l[3]);
    }
    if d.free_loops() > 0 {
        let _ = writeln!(out, "o {}", d.free_loops());
    }
    out
}

fn read(path: &Path) -> Result<String, ParseError> {
    let bytes = std::fs::read(path).map_err(|e| ParseError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if !bytes.is_ascii() {
        return Err(ParseError::Io {
            path: path.display().to_string(),
            message: "file is not ASCII".into(),
        });
    }
    Ok(String::from_utf8(bytes).expect("ASCII is UTF-8"))
}

pub fn parse_graph_file(path: impl AsRef<Path>) -> Result<SignedCyclicGraph, ParseError> {
    parse_graph(&read(path.as_ref())?)
}

pub fn parse_diagram_file(path: impl AsRef<Path>) -> Result<VirtualDiagram, ParseError> {
    parse_diagram(&read(path.as_ref())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmap::random_cyclic_graph;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn parses_positive_loop() {
        let g = parse_graph("# loop\nv 7: 10 11\ne 3: 10 11 +\n").unwrap();
        assert_eq!(g.dart_count(), 2);
        assert_eq!(g, fixtures::positive_loop());
        assert_eq!(write_graph(&g), "v 0: 0 1\ne 0: 0 1 +\n");
    }

    #[test]
    fn graph_errors() {
        assert!(matches!(parse_graph("v 0: 0 0\ne 0: 0 0 +\n"), Err(ParseError::Invariant(_))));
        assert_eq!(
            parse_graph("v 0: 0 1\ne 0: 0 1 *\n"),
            Err(ParseError::Syntax {
                line: 2,
                column: 10,
                message: "expected `+` or `-`, found `*`".into()
            })
        );
        assert_eq!(
            parse_graph("v 0: 0 1\nv 0:\ne 0: 0 1 +\n"),
            Err(ParseError::Duplicate { line: 2, kind: "vertex", id: 0 })
        );
        assert!(matches!(parse_graph("v 0: 0\ne 0: 0 1 +\n"), Err(ParseError::Invariant(_))));
        assert!(matches!(parse_graph("v 0: 0 1 2\ne 0: 0 1 +\n"), Err(ParseError::Invariant(_))));
        assert!(matches!(parse_graph("v x: 0 1\n"), Err(ParseError::Syntax { line: 1, column: 3, .. })));
        assert!(matches!(parse_graph("q 0: 1\n"), Err(ParseError::Syntax { line: 1, column: 1, .. })));
        assert!(matches!(parse_graph(""), Err(ParseError::Invariant(_))));
    }

    #[test]
    fn accepts_spaced_colon() {
        let g = parse_graph("v 0 : 0 1\ne 0 : 0 1 -\n").unwrap();
        assert_eq!(g.sign(0), Sign::Negative);
    }

    #[test]
    fn parses_trefoil() {
        let text = write_diagram(&fixtures::trefoil());
        let d = parse_diagram(&text).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d, fixtures::trefoil());
    }

    #[test]
    fn diagram_errors() {
        assert!(matches!(parse_diagram("x 0: a a b c\n"), Err(ParseError::Invariant(_))));
        assert!(matches!(parse_diagram("x 0: a b a\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_diagram(""), Err(ParseError::Invariant(_))));
        assert!(matches!(parse_diagram("o 1\no 2\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert_eq!(
            parse_diagram("x 0: a a b b\nx 0: c c d d\n"),
            Err(ParseError::Duplicate { line: 2, kind: "crossing", id: 0 })
        );
        assert_eq!(parse_diagram("o 1\n").unwrap(), VirtualDiagram::unknot());
    }

    #[test]
    fn fixtures_round_trip() {
        for d in fixtures::all_diagrams() {
            let text = write_diagram(&d);
            let back = parse_diagram(&text).unwrap();
            assert_eq!(back, d);
            assert_eq!(write_diagram(&back), text);
        }
        for g in fixtures::all_graphs() {
            let text = write_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
        }
    }

    proptest! {
        #[test]
        fn random_graphs_round_trip(v in 1usize..5, e in 0usize..9, seed in any::<u64>()) {
            let g = random_cyclic_graph(v, e, 0.5, seed);
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(write_graph(&back), text);
            prop_assert_eq!(back, g);
        }
    }
}
