//! Plain-text edge-list format.
//!
//! ```text
//! c optional comment
//! p <n> <m>
//! e <u> <v>
//! ```
//!
//! One `p` header, then exactly `m` edge lines with endpoints in `0..n`.
//! Blank lines and `c` comment lines may appear anywhere. All parse errors
//! carry the 1-based line number.

use super::Graph;
use crate::error::Error;

pub(super) fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    let mut seen_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if graph.is_some() {
                    return Err(Error::parse(lineno, "duplicate 'p' header"));
                }
                let n = parse_number(tokens.next(), lineno, "vertex count")?;
                let m = parse_number(tokens.next(), lineno, "edge count")?;
                if tokens.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after 'p' header"));
                }
                if n > crate::MAX_VERTICES {
                    return Err(Error::parse(
                        lineno,
                        format!(
                            "vertex count {n} exceeds the maximum of {}",
                            crate::MAX_VERTICES
                        ),
                    ));
                }
                graph = Some(Graph::new(n));
                declared_edges = m;
            }
            Some("e") => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(lineno, "edge line before 'p' header"))?;
                let u = parse_number(tokens.next(), lineno, "edge endpoint")?;
                let v = parse_number(tokens.next(), lineno, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(Error::parse(lineno, "trailing tokens after edge line"));
                }
                let n = g.vertex_count();
                if u >= n || v >= n {
                    return Err(Error::parse(
                        lineno,
                        format!("edge ({u}, {v}) out of range for {n} vertices"),
                    ));
                }
                if u == v {
                    return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
                }
                if g.has_edge(u, v) {
                    return Err(Error::parse(lineno, format!("duplicate edge ({u}, {v})")));
                }
                g.add_edge(u, v);
                seen_edges += 1;
            }
            Some(other) => {
                return Err(Error::parse(
                    lineno,
                    format!("unrecognized line type '{other}' (expected 'c', 'p', or 'e')"),
                ));
            }
            None => unreachable!("blank lines are skipped above"),
        }
    }

    let graph = graph.ok_or_else(|| Error::parse(0, "missing 'p' header"))?;
    if seen_edges != declared_edges {
        return Err(Error::parse(
            0,
            format!("header declares {declared_edges} edges but {seen_edges} were listed"),
        ));
    }
    Ok(graph)
}

fn parse_number(
    token: Option<&str>,
    lineno: usize,
    what: &str,
) -> Result<usize, Error> {
    let token = token.ok_or_else(|| Error::parse(lineno, format!("missing {what}")))?;
    token
        .parse::<usize>()
        .map_err(|_| Error::parse(lineno, format!("invalid {what} '{token}'")))
}

pub(super) fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::Graph;
    use crate::error::Error;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "c a path on four vertices\n\np 4 3\ne 0 1\nc middle comment\ne 1 2\ne 2 3\n";
        let g = Graph::from_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn roundtrips() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2), (2, 3)]);
        let text = g.to_edge_list();
        assert_eq!(text, "p 5 3\ne 0 4\ne 1 2\ne 2 3\n");
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    fn expect_parse_error(text: &str, expected_line: usize, needle: &str) {
        match Graph::from_edge_list(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, expected_line, "wrong line for {message:?}");
                assert!(
                    message.contains(needle),
                    "message {message:?} missing {needle:?}"
                );
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn error_line_numbers() {
        expect_parse_error("e 0 1\n", 1, "before 'p' header");
        expect_parse_error("p 3 1\np 3 1\n", 2, "duplicate 'p'");
        expect_parse_error("p 3 1\ne 0 5\n", 2, "out of range");
        expect_parse_error("p 3 1\ne 1 1\n", 2, "self-loop");
        expect_parse_error("p 3 2\ne 0 1\ne 0 1\n", 3, "duplicate edge");
        expect_parse_error("p 3 x\n", 1, "invalid edge count");
        expect_parse_error("p 3\n", 1, "missing edge count");
        expect_parse_error("q 3 1\n", 1, "unrecognized line type");
        expect_parse_error("p 63 0\n", 1, "exceeds the maximum");
        expect_parse_error("p 3 2\ne 0 1\n", 0, "declares 2 edges but 1");
        expect_parse_error("", 0, "missing 'p' header");
    }

    #[test]
    fn empty_graph_parses() {
        let g = Graph::from_edge_list("p 0 0\n").unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }
}
