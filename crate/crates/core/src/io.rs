//! Graph file formats: Pajek `.net` (read/write), TGF (read) and
//! GraphViz `.gv` (write).
//!
//! The `.net` grammar handled here is the adjacency-list flavor:
//!
//! ```text
//! *Vertices 4
//! 1 "a"
//! 2 "b"
//! 3 "c"
//! 4 "d"
//! *edgeslist
//! 1 2
//! 2 3 4
//! 3 4
//! ```
//!
//! `*edgeslist` marks an undirected graph, `*arcslist` a directed one.
//! Markers are matched case-insensitively, LF and CRLF are both accepted,
//! and writers always emit LF.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphKind, VertexId};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses a Pajek `.net` document.
pub fn read_net(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.is_empty());

    let (lno, header) = lines.next().ok_or(parse_err(0, "empty document"))?;
    let lower = header.to_ascii_lowercase();
    let count_str = lower
        .strip_prefix("*vertices")
        .ok_or_else(|| parse_err(lno, "expected '*Vertices <N>' header"))?;
    let n: usize = count_str
        .trim()
        .parse()
        .map_err(|_| parse_err(lno, "malformed vertex count"))?;

    // N vertex lines: <id> "<label>". Labels have no escape mechanism and
    // may contain anything but a double quote; a missing label defaults to
    // the decimal id.
    let mut by_file_id: BTreeMap<u64, VertexId> = BTreeMap::new();
    let mut g = Graph::new(GraphKind::Undirected);
    let mut marker: Option<(usize, String)> = None;
    for _ in 0..n {
        let (lno, line) = lines.next().ok_or(parse_err(0, "unexpected end of vertex list"))?;
        if line.starts_with('*') {
            marker = Some((lno, line.to_string()));
            break;
        }
        let (id_part, rest) = match line.find(char::is_whitespace) {
            Some(pos) => (&line[..pos], line[pos..].trim()),
            None => (line, ""),
        };
        let file_id: u64 = id_part
            .parse()
            .map_err(|_| parse_err(lno, format!("non-integer vertex id '{id_part}'")))?;
        let label = if rest.is_empty() {
            id_part.to_string()
        } else {
            let inner = rest
                .strip_prefix('"')
                .and_then(|r| r.strip_suffix('"'))
                .ok_or_else(|| parse_err(lno, "vertex label must be double-quoted"))?;
            if inner.contains('"') {
                return Err(parse_err(lno, "vertex label may not contain '\"'"));
            }
            inner.to_string()
        };
        if by_file_id.contains_key(&file_id) {
            return Err(parse_err(lno, format!("duplicate vertex id {file_id}")));
        }
        by_file_id.insert(file_id, g.add_vertex_labeled(&label));
    }
    if by_file_id.len() != n {
        return Err(parse_err(
            marker.map(|(l, _)| l).unwrap_or(0),
            format!("header declares {n} vertices, found {}", by_file_id.len()),
        ));
    }

    let (lno, marker) = match marker {
        Some((l, m)) => (l, m),
        None => {
            let (l, m) = lines.next().ok_or(parse_err(0, "missing *edgeslist/*arcslist marker"))?;
            (l, m.to_string())
        }
    };
    let directed = match marker.to_ascii_lowercase().as_str() {
        "*edgeslist" => false,
        "*arcslist" => true,
        other => return Err(parse_err(lno, format!("expected *edgeslist or *arcslist, found '{other}'"))),
    };
    if directed {
        // Rebuild as directed, same ids and labels.
        let mut d = Graph::new(GraphKind::Directed);
        for v in g.vertices() {
            d.insert_vertex(v, g.label(v)?.to_string());
        }
        g = d;
    }

    for (lno, line) in lines {
        let mut nums = line.split_whitespace().map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| parse_err(lno, format!("non-integer id '{tok}' in adjacency line")))
        });
        let src = nums.next().unwrap()?;
        let src = *by_file_id
            .get(&src)
            .ok_or_else(|| parse_err(lno, format!("adjacency references undeclared vertex {src}")))?;
        for dst in nums {
            let dst = dst?;
            let dst = *by_file_id
                .get(&dst)
                .ok_or_else(|| parse_err(lno, format!("adjacency references undeclared vertex {dst}")))?;
            g.add_edge(src, dst)?;
        }
    }
    Ok(g)
}

/// Writes a Pajek `.net` document. Vertices are numbered 1..n in iteration
/// order; adjacency lines are canonical (ascending source, ascending
/// targets, undirected edges listed once from their smaller endpoint), so
/// writing the same graph twice is byte-identical.
pub fn write_net(g: &Graph) -> String {
    let ids: Vec<VertexId> = g.vertices().collect();
    let number = |v: VertexId| ids.binary_search(&v).unwrap() + 1;

    let mut out = format!("*Vertices {}\n", ids.len());
    for &v in &ids {
        out.push_str(&format!("{} \"{}\"\n", number(v), g.label(v).unwrap()));
    }
    out.push_str(if g.is_directed() { "*arcslist\n" } else { "*edgeslist\n" });

    let mut succ: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (u, v) in g.edges() {
        succ.entry(number(u)).or_default().push(number(v));
    }
    for (src, mut dsts) in succ {
        dsts.sort_unstable();
        let list: Vec<String> = dsts.iter().map(|d| d.to_string()).collect();
        out.push_str(&format!("{} {}\n", src, list.join(" ")));
    }
    out
}

/// Parses a Trivial Graph Format document into a directed graph.
pub fn read_tgf(text: &str) -> Result<Graph> {
    let mut g = Graph::new(GraphKind::Directed);
    let mut by_file_id: BTreeMap<String, VertexId> = BTreeMap::new();
    let mut in_edges = false;
    let mut saw_separator = false;
    for (lno, raw) in text.lines().enumerate() {
        let lno = lno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line == "#" || line.starts_with("# ") || line == "#\r" {
            in_edges = true;
            saw_separator = true;
            continue;
        }
        let mut toks = line.split_whitespace();
        if !in_edges {
            let id = toks.next().unwrap().to_string();
            let label = {
                let rest = line[id.len()..].trim();
                if rest.is_empty() { id.clone() } else { rest.to_string() }
            };
            if by_file_id.contains_key(&id) {
                return Err(parse_err(lno, format!("duplicate vertex id {id}")));
            }
            by_file_id.insert(id, g.add_vertex_labeled(&label));
        } else {
            let src = toks.next().unwrap();
            let dst = toks
                .next()
                .ok_or_else(|| parse_err(lno, "edge line needs source and target"))?;
            let lookup = |id: &str| {
                by_file_id
                    .get(id)
                    .copied()
                    .ok_or_else(|| parse_err(lno, format!("edge references undeclared vertex {id}")))
            };
            g.add_edge(lookup(src)?, lookup(dst)?)?;
        }
    }
    if !saw_separator {
        return Err(parse_err(0, "missing '#' separator"));
    }
    Ok(g)
}

/// Writes a GraphViz document: `graph G { .. }` with `--` statements for
/// undirected graphs, `digraph G { .. }` with `->` for directed ones.
/// Isolated vertices get bare node statements.
pub fn write_gv(g: &Graph) -> String {
    let (keyword, arrow) = if g.is_directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = format!("{keyword} G {{\n");
    for (u, v) in g.edges() {
        out.push_str(&format!(
            "  \"{}\" {} \"{}\";\n",
            g.label(u).unwrap(),
            arrow,
            g.label(v).unwrap()
        ));
    }
    for v in g.vertices() {
        if g.degree(v).unwrap() == 0 {
            out.push_str(&format!("  \"{}\";\n", g.label(v).unwrap()));
        }
    }
    out.push_str("}\n");
    out
}

/// The adjacency list of Listing-style documents keyed by label, handy for
/// structure comparisons that must ignore vertex ids.
pub fn labeled_edges(g: &Graph) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (g.label(u).unwrap().to_string(), g.label(v).unwrap().to_string());
            if g.is_directed() || a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    pub const LISTING: &str = "*Vertices 4\n1 \"a\"\n2 \"b\"\n3 \"c\"\n4 \"d\"\n*edgeslist\n1 2 \n2 3 4\n3 4\n";

    #[test]
    fn read_listing() {
        let g = read_net(LISTING).unwrap();
        assert!(!g.is_directed());
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        let expect = [("a", "b"), ("b", "c"), ("b", "d"), ("c", "d")];
        assert_eq!(
            labeled_edges(&g),
            expect.map(|(a, b)| (a.to_string(), b.to_string())).to_vec()
        );
    }

    #[test]
    fn single_vertex_no_adjacency() {
        let g = read_net("*Vertices 1\n1 \"x\"\n*edgeslist\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert_eq!(g.label(VertexId(0)).unwrap(), "x");
    }

    #[test]
    fn arcslist_is_directed() {
        let text = LISTING.replace("*edgeslist", "*arcslist");
        let g = read_net(&text).unwrap();
        assert!(g.is_directed());
        assert_eq!(g.edge_count(), 4);
        // arc directions follow adjacency lines: 1->2, 2->3, 2->4, 3->4
        assert!(g.has_edge(VertexId(0), VertexId(1)));
        assert!(!g.has_edge(VertexId(1), VertexId(0)));
        assert!(g.has_edge(VertexId(1), VertexId(3)));
    }

    #[test]
    fn net_round_trip() {
        let g = read_net(LISTING).unwrap();
        let text = write_net(&g);
        let h = read_net(&text).unwrap();
        assert_eq!(labeled_edges(&g), labeled_edges(&h));
        // normalization is idempotent
        assert_eq!(write_net(&h), text);
    }

    #[test]
    fn write_degenerate_and_directed() {
        let g = Graph::new(GraphKind::Undirected);
        assert_eq!(write_net(&g), "*Vertices 0\n*edgeslist\n");

        let mut d = Graph::new(GraphKind::Directed);
        let a = d.add_vertex_labeled("a");
        let b = d.add_vertex_labeled("b");
        d.add_edge(a, b).unwrap();
        let text = write_net(&d);
        assert!(text.contains("*arcslist\n1 2\n"));
        let back = read_net(&text).unwrap();
        assert!(back.is_directed());
        assert!(back.has_edge(VertexId(0), VertexId(1)));
    }

    #[test]
    fn read_net_errors() {
        assert!(matches!(read_net("vertices 4\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_net("*Vertices x\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            read_net("*Vertices 1\n1 unquoted\n*edgeslist\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            read_net("*Vertices 1\n1 \"a\"\n1 5\n"),
            Err(Error::Parse { .. })
        ));
        // adjacency referencing an undeclared id
        assert!(matches!(
            read_net("*Vertices 1\n1 \"a\"\n*edgeslist\n1 7\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn duplicate_adjacency_deduplicated() {
        let g = read_net("*Vertices 2\n1 \"a\"\n2 \"b\"\n*edgeslist\n1 2\n2 1\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn tgf_examples() {
        let g = read_tgf("1 a\n2 b\n#\n1 2\n").unwrap();
        assert!(g.is_directed());
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_edge(VertexId(0), VertexId(1)));
        assert!(!g.has_edge(VertexId(1), VertexId(0)));

        let g = read_tgf("1\n#\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.label(VertexId(0)).unwrap(), "1");

        assert!(matches!(read_tgf("1 a\n2 b\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn gv_output() {
        let mut g = Graph::new(GraphKind::Undirected);
        let a = g.add_vertex_labeled("a");
        let b = g.add_vertex_labeled("b");
        g.add_vertex_labeled("x");
        g.add_edge(a, b).unwrap();
        let text = write_gv(&g);
        assert!(text.starts_with("graph G {\n"));
        assert!(text.contains("  \"a\" -- \"b\";\n"));
        assert!(text.contains("  \"x\";\n"));

        let mut d = Graph::new(GraphKind::Directed);
        let a = d.add_vertex_labeled("a");
        let b = d.add_vertex_labeled("b");
        d.add_edge(a, b).unwrap();
        assert!(write_gv(&d).contains("  \"a\" -> \"b\";\n"));
    }
}
