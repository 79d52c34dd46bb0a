//! Text formats: the `.wng` graph file, wild-set arguments, and DOT export.
//!
//! ```text
//! c comment
//! p wild <n> <m> <colors>
//! colors <label> ...
//! e <u> <v> <label>
//! ```
//!
//! Vertices and edge ids are 1-based in text and 0-based in memory.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Edge, EdgeColoredGraph, EdgeId, GraphError, WildSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("bad wild-set token `{token}`: {msg}")]
    WildSet { token: String, msg: String },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub fn parse_graph(text: &str) -> Result<EdgeColoredGraph, FormatError> {
    let mut header: Option<(usize, usize, usize, usize)> = None;
    let mut palette: Option<Vec<String>> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let mut toks = raw.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        let rest: Vec<&str> = toks.collect();
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second header"));
                }
                let ["wild", n, m, l] = rest.as_slice() else {
                    return Err(syntax(line, "expected `p wild <n> <m> <colors>`"));
                };
                let num = |t: &str| t.parse::<usize>().map_err(|_| syntax(line, format!("bad number `{t}`")));
                header = Some((num(n)?, num(m)?, num(l)?, line));
            }
            "colors" => {
                let Some((_, _, l, _)) = header else { return Err(syntax(line, "colors before header")) };
                if palette.is_some() {
                    return Err(syntax(line, "second colors line"));
                }
                if rest.len() != l {
                    return Err(syntax(line, format!("header declares {l} colors, line lists {}", rest.len())));
                }
                palette = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            "e" => {
                let (Some((n, _, _, _)), Some(pal)) = (header, palette.as_ref()) else {
                    return Err(syntax(line, "edge before header and colors line"));
                };
                let [u, v, label] = rest.as_slice() else {
                    return Err(syntax(line, "expected `e <u> <v> <color>`"));
                };
                let vertex = |t: &str| match t.parse::<usize>() {
                    Ok(x) if (1..=n).contains(&x) => Ok(x - 1),
                    _ => Err(syntax(line, format!("vertex `{t}` not in 1..={n}"))),
                };
                let (u, v) = (vertex(u)?, vertex(v)?);
                if u == v {
                    return Err(syntax(line, format!("self-loop at vertex {}", u + 1)));
                }
                let color = pal
                    .iter()
                    .position(|p| p == label)
                    .ok_or_else(|| syntax(line, format!("unknown color `{label}`")))?;
                edges.push(Edge::new(u, v, color));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m, _, hline)) = header else { return Err(syntax(last.max(1), "missing `p wild` header")) };
    let Some(palette) = palette else { return Err(syntax(last.max(1), "missing colors line")) };
    if edges.len() != m {
        return Err(syntax(hline, format!("header declares {m} edges, found {}", edges.len())));
    }
    Ok(EdgeColoredGraph::build(n, palette, edges)?)
}

pub fn serialize_graph(g: &EdgeColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p wild {} {} {}", g.n(), g.m(), g.colors()).unwrap();
    writeln!(out, "colors {}", g.palette().join(" ")).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, g.palette()[e.color]).unwrap();
    }
    out
}

/// Parses `3,7,12` (1-based edge ids) or `1-2-red,3-4-blue` (endpoint and
/// color triples, resolved to the first matching edge). Returns the set and
/// any warnings about ambiguous triples.
pub fn parse_wild_set(g: &EdgeColoredGraph, text: &str) -> Result<(WildSet, Vec<String>), FormatError> {
    let bad = |token: &str, msg: String| FormatError::WildSet { token: token.to_string(), msg };
    let mut ids: Vec<EdgeId> = Vec::new();
    let mut warnings = Vec::new();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        if let Ok(id) = token.parse::<usize>() {
            if id == 0 || id > g.m() {
                return Err(bad(token, format!("edge id not in 1..={}", g.m())));
            }
            ids.push(id - 1);
            continue;
        }
        let parts: Vec<&str> = token.splitn(3, '-').collect();
        let [u, v, label] = parts.as_slice() else {
            return Err(bad(token, "expected an edge id or `u-v-color`".into()));
        };
        let vertex = |t: &str| match t.parse::<usize>() {
            Ok(x) if (1..=g.n()).contains(&x) => Ok(x - 1),
            _ => Err(bad(token, format!("vertex `{t}` not in 1..={}", g.n()))),
        };
        let (u, v) = (vertex(u)?, vertex(v)?);
        let color = g.color_index(label).ok_or_else(|| bad(token, format!("unknown color `{label}`")))?;
        let key = (u.min(v), u.max(v));
        let matches: Vec<EdgeId> =
            (0..g.m()).filter(|&e| g.edges()[e].key() == key && g.edges()[e].color == color).collect();
        match matches.as_slice() {
            [] => return Err(bad(token, "no such edge".into())),
            [e] => ids.push(*e),
            [e, ..] => {
                warnings.push(format!("`{token}` matches {} parallel edges; using edge {}", matches.len(), e + 1));
                ids.push(*e);
            }
        }
    }
    Ok((WildSet::new(g, ids)?, warnings))
}

/// 1-based, comma-separated edge ids.
pub fn format_wild_set(w: &WildSet) -> String {
    w.iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(",")
}

const DOT_COLORS: [&str; 10] =
    ["orange", "purple", "forestgreen", "red", "blue", "gold", "brown", "cyan", "magenta", "gray40"];

/// Graphviz color for palette index `c`: the label itself when it is a plain
/// color name Graphviz knows, otherwise a fixed cycle.
fn dot_color(g: &EdgeColoredGraph, c: usize) -> String {
    const NAMED: [&str; 16] = [
        "red", "green", "blue", "orange", "purple", "yellow", "black", "brown", "cyan", "magenta", "gray",
        "pink", "gold", "teal", "violet", "navy",
    ];
    let label = g.palette()[c].to_ascii_lowercase();
    if NAMED.contains(&label.as_str()) {
        label
    } else {
        DOT_COLORS[c % DOT_COLORS.len()].to_string()
    }
}

pub fn export_dot(g: &EdgeColoredGraph, wild: Option<&WildSet>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        writeln!(out, "  {};", v + 1).unwrap();
    }
    for (id, e) in g.edges().iter().enumerate() {
        let style = if wild.is_some_and(|w| w.contains(id)) { ", style=dashed" } else { "" };
        writeln!(
            out,
            "  {} -- {} [color={}, label=\"{}\"{}];",
            e.u + 1,
            e.v + 1,
            dot_color(g, e.color),
            g.palette()[e.color],
            style
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_fixtures() {
        for g in [fixtures::fig1(), fixtures::fig2(), fixtures::fig5(), fixtures::prism(), fixtures::wheel(), fixtures::fig4()] {
            let text = serialize_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
            assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
        }
    }

    #[test]
    fn fig5_file() {
        let text = format!("c Example graph\n\n{}", serialize_graph(&fixtures::fig5()));
        assert_eq!(parse_graph(&text).unwrap().kappas(), vec![2, 2, 2]);
    }

    #[test]
    fn unused_color_parses() {
        let g = parse_graph("p wild 3 2 3\ncolors a b c\ne 1 2 a\ne 2 3 b\n").unwrap();
        assert!(!g.is_surjective());
    }

    #[test]
    fn errors_carry_lines() {
        let line = |t: &str| match parse_graph(t).unwrap_err() {
            FormatError::Syntax { line, .. } => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("p wild 2 1 1\ncolors a\ne 1 3 a\n"), 3);
        assert_eq!(line("p wild 2 1 1\ncolors a\ne 1 1 a\n"), 3);
        assert_eq!(line("p wild 2 1 1\ncolors a\ne 1 2 b\n"), 3);
        assert_eq!(line("p wild 2 2 1\ncolors a\ne 1 2 a\n"), 1);
        assert_eq!(line("p wild 2 1 2\ncolors a\n"), 2);
        assert_eq!(line("e 1 2 a\n"), 1);
        assert_eq!(line("p wild x 1 1\n"), 1);
        assert_eq!(line("p wild 2 1 1\ncolors a\nq\n"), 3);
        assert_eq!(
            parse_graph("p wild 3 1 1\ncolors a\ne 1 2 a\n"),
            Err(FormatError::Graph(GraphError::Disconnected { components: 2 }))
        );
    }

    #[test]
    fn wild_set_syntax() {
        let g = parse_graph("p wild 3 3 2\ncolors a b\ne 1 2 a\ne 1 2 a\ne 2 3 b\n").unwrap();
        let (w, warn) = parse_wild_set(&g, "3, 1").unwrap();
        assert_eq!(w.ids(), vec![0, 2]);
        assert!(warn.is_empty());
        let (w, warn) = parse_wild_set(&g, "2-1-a,2-3-b").unwrap();
        assert_eq!(w.ids(), vec![0, 2]);
        assert_eq!(warn.len(), 1);
        assert_eq!(format_wild_set(&w), "1,3");
        assert!(parse_wild_set(&g, "4").is_err());
        assert!(parse_wild_set(&g, "1-3-a").is_err());
        assert!(parse_wild_set(&g, "1-2-z").is_err());
        assert!(parse_wild_set(&g, "x").is_err());
        assert!(parse_wild_set(&g, "").unwrap().0.is_empty());
    }

    #[test]
    fn dot_styles() {
        let g = fixtures::fig3_two_colors();
        let w = crate::exact::wild_exact(&g).witness;
        assert_eq!(w.len(), 4);
        let dot = export_dot(&g, Some(&w));
        assert_eq!(dot.matches("style=dashed").count(), 4);
        assert_eq!(export_dot(&g, Some(&WildSet::empty())).matches("style=dashed").count(), 0);

        let dot = export_dot(&fixtures::fig1(), None);
        assert_eq!(dot.matches(" -- ").count(), 10);
        let mut colors: Vec<&str> = dot
            .lines()
            .filter_map(|l| l.split("color=").nth(1))
            .map(|s| s.split(',').next().unwrap())
            .collect();
        colors.sort();
        colors.dedup();
        assert_eq!(colors.len(), 3);
    }
}
