//! Plain-text formats.
//!
//! Complexes: one facet per line as space-separated labels. Graphs: one edge `u v` per line.
//! An optional first line `n=<k>` fixes the vertex count (otherwise the largest label is
//! used); `#` starts a comment that runs to the end of the line.

use std::fmt::Write;

use crate::{Error, Face, Graph, Result, SimplicialComplex, Vertex};

struct Parsed {
    n: Option<usize>,
    rows: Vec<(usize, Vec<Vertex>)>,
}

fn parse_rows(text: &str) -> Result<Parsed> {
    let mut n = None;
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() || !rows.is_empty() {
                return Err(Error::Format { line: line_no, msg: "header must come first and only once".into() });
            }
            let k = rest
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Format { line: line_no, msg: format!("bad vertex count: {e}") })?;
            n = Some(k);
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>()
                    .map_err(|e| Error::Format { line: line_no, msg: format!("bad label {tok:?}: {e}") })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push((line_no, row));
    }
    Ok(Parsed { n, rows })
}

fn resolve_n(parsed: &Parsed) -> usize {
    parsed
        .n
        .unwrap_or_else(|| parsed.rows.iter().flat_map(|(_, r)| r.iter().copied()).max().unwrap_or(0))
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let parsed = parse_rows(text)?;
    let n = resolve_n(&parsed);
    let mut faces = Vec::with_capacity(parsed.rows.len());
    for (line, row) in &parsed.rows {
        let face = Face::from_vertices(row.iter().copied(), n).map_err(|e| Error::Format { line: *line, msg: e.to_string() })?;
        faces.push(face);
    }
    SimplicialComplex::from_facets(faces, n)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let parsed = parse_rows(text)?;
    let n = resolve_n(&parsed);
    let mut g = Graph::empty(n)?;
    for (line, row) in &parsed.rows {
        let [u, v] = row[..] else {
            return Err(Error::Format { line: *line, msg: format!("expected an edge `u v`, got {} labels", row.len()) });
        };
        g.add_edge(u, v).map_err(|e| Error::Format { line: *line, msg: e.to_string() })?;
    }
    Ok(g)
}

/// Header plus one facet per line in canonical order. The void complex, which the format
/// cannot express, is written as a header and a comment.
pub fn write_complex(k: &SimplicialComplex) -> String {
    let mut out = format!("n={}\n", k.n());
    if k.is_void() {
        out.push_str("# void complex (no faces)\n");
    }
    for f in k.facets().iter().filter(|f| !f.is_empty()) {
        let labels: Vec<String> = f.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", labels.join(" ")).unwrap();
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_text_round_trip() {
        let text = "# a small complex\nn=4\n1 2 3\n1 4 # edge\n2 4\n";
        let k = parse_complex(text).unwrap();
        assert_eq!(k.facets(), &[Face::digits("14"), Face::digits("24"), Face::digits("123")]);
        assert_eq!(parse_complex(&write_complex(&k)).unwrap(), k);
    }

    #[test]
    fn header_fixes_isolated_vertices() {
        let k = parse_complex("n=5\n1 2\n").unwrap();
        assert_eq!(k.n(), 5);
        let k = parse_complex("1 2\n").unwrap();
        assert_eq!(k.n(), 2);
        let g = parse_graph("n=4\n1 2\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }

    #[test]
    fn format_errors() {
        assert!(matches!(parse_complex("n=3\n1 4\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(parse_complex("1 x\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_complex("1 2\nn=3\n"), Err(Error::Format { line: 2, .. })));
        assert!(matches!(parse_graph("1 2 3\n"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(parse_graph("n=3\n2 2\n"), Err(Error::Format { line: 2, .. })));
        assert_eq!(parse_complex("# nothing\n"), Err(Error::NoVertices));
    }
}
