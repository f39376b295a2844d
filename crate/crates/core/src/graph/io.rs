//! Edge-list text format.
//!
//! One arc per line as two whitespace-separated labels, `tail head`. Blank
//! lines and lines starting with `#` are skipped. Vertex ids are assigned in
//! order of first appearance.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::Digraph;
use crate::error::Error;

pub fn parse_edge_list(text: &str) -> Result<Digraph, Error> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut arcs = Vec::new();
    let mut seen = std::collections::HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected `tail head`, found {} token(s)", tokens.len()),
            });
        }
        if tokens[0] == tokens[1] {
            return Err(Error::Parse {
                line: line_no,
                message: format!("loop at {}", tokens[0]),
            });
        }
        let mut id_of = |label: &str| -> usize {
            *ids.entry(label.to_string()).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let u = id_of(tokens[0]);
        let v = id_of(tokens[1]);
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line: line_no,
                message: format!("duplicate arc {} {}", tokens[0], tokens[1]),
            });
        }
        arcs.push((u, v));
    }

    Digraph::from_arcs(labels.len(), arcs)?.with_labels(labels)
}

/// Canonical serialization: arcs sorted by `(tail id, head id)`, labels
/// resolved, one arc per line, LF endings.
pub fn to_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{} {}", g.label(u), g.label(v));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tricycle() {
        let g = parse_edge_list("1 2\n2 3\n3 1").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.arc_vec(), vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.labels(), &["1", "2", "3"]);
    }

    #[test]
    fn antiparallel_pair_is_allowed() {
        let g = parse_edge_list("a b\nb a").unwrap();
        assert_eq!(g.arc_count(), 2);
        assert!(g.has_arc(0, 1) && g.has_arc(1, 0));
    }

    #[test]
    fn loop_is_rejected_with_line() {
        let err = parse_edge_list("1 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn comments_blank_lines_and_errors() {
        let g = parse_edge_list("# header\n\n  x y \n# c\ny x\n").unwrap();
        assert_eq!(g.arc_count(), 2);
        assert!(matches!(
            parse_edge_list("a b\nb c\na b\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b\nc\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("a b c\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn serializer_sorts_by_id() {
        let g = parse_edge_list("c a\na b\nb c\n").unwrap();
        // ids: c=0, a=1, b=2
        assert_eq!(to_edge_list(&g), "c a\na b\nb c\n");
        let g = parse_edge_list("b c\nc a\na b\n").unwrap();
        assert_eq!(to_edge_list(&g), "b c\nc a\na b\n");
    }
}
