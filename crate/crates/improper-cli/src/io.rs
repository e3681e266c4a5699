//! Input loading with format auto-detection, plus graph output formats.
//!
//! Three input formats are told apart without flags:
//! - a leading `{` means an interval-representation JSON object
//!   (`{"n": ..., "intervals": [[l, r], ...]}`),
//! - a line whose first token is `p` followed by counts means the plain
//!   edge-list format (`p <n> <m>` header, `e <u> <v>` edges, `c` comments),
//! - anything else is read as a graph6 string on the first non-blank line.

use std::fs;
use std::io::Read as _;

use improper::engine::IntervalRepresentation;
use improper::{Error, Graph};

/// A parsed input: either a graph or a concrete representation.
pub enum LoadedInput {
    Graph(Graph),
    Representation(IntervalRepresentation),
}

impl LoadedInput {
    /// The graph either way: a representation stands for its overlap graph.
    pub fn into_graph(self) -> Result<Graph, Error> {
        match self {
            LoadedInput::Graph(g) => Ok(g),
            LoadedInput::Representation(rep) => rep.to_graph(),
        }
    }
}

/// Reads a file, or stdin when `path` is `-`.
pub fn read_text(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

/// Applies the detection rules above.
pub fn detect(text: &str) -> Result<LoadedInput, Error> {
    if text.trim_start().starts_with('{') {
        let rep: IntervalRepresentation =
            serde_json::from_str(text.trim()).map_err(|err| Error::Parse {
                line: err.line(),
                message: format!("representation JSON: {err}"),
            })?;
        if rep.intervals.len() != rep.n {
            return Err(Error::InvalidRepresentation(format!(
                "representation declares {} vertices but lists {} intervals",
                rep.n,
                rep.intervals.len()
            )));
        }
        return Ok(LoadedInput::Representation(rep));
    }
    let looks_like_edge_list = text.lines().any(|line| {
        let mut tokens = line.split_whitespace();
        tokens.next() == Some("p") && tokens.next().is_some_and(|t| t.parse::<usize>().is_ok())
    });
    if looks_like_edge_list {
        return Ok(LoadedInput::Graph(Graph::from_edge_list(text)?));
    }
    let first = text
        .lines()
        .map(str::trim)
        .find(|line| !line.is_empty())
        .ok_or_else(|| Error::Parse {
            line: 1,
            message: "empty input: expected graph6, an edge list, or representation JSON".into(),
        })?;
    Ok(LoadedInput::Graph(Graph::from_graph6(first)?))
}

/// Loads and detects in one step.
pub fn load(path: &str) -> Result<LoadedInput, Error> {
    detect(&read_text(path)?)
}

/// Serializes a graph in one of the text formats.
pub fn format_graph(g: &Graph, format: &str) -> Result<String, Error> {
    match format {
        "g6" => Ok(format!("{}\n", g.to_graph6())),
        "edgelist" => Ok(g.to_edge_list()),
        "dot" => Ok(g.to_dot()),
        other => Err(Error::InvalidParameters(format!(
            "graph format must be g6, edgelist, or dot, got {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_all_three_formats() {
        let g6 = detect("Cs\n").unwrap().into_graph().unwrap();
        assert_eq!(g6.vertex_count(), 4);

        let from_edges = detect("c a comment\np 3 2\ne 0 1\ne 1 2\n")
            .unwrap()
            .into_graph()
            .unwrap();
        assert_eq!(from_edges.edge_count(), 2);

        let rep = r#"{"n": 2, "intervals": [[0, 2], [1, 3]]}"#;
        match detect(rep).unwrap() {
            LoadedInput::Representation(rep) => {
                assert_eq!(rep.to_graph().unwrap().edge_count(), 1)
            }
            LoadedInput::Graph(_) => panic!("expected a representation"),
        }
    }

    #[test]
    fn empty_and_malformed_inputs_carry_line_numbers() {
        assert!(matches!(detect("\n\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            detect(r#"{"n": 2, "intervals": [[0, 2]]}"#),
            Err(Error::InvalidRepresentation(_))
        ));
    }
}
