//! Plain edge-list text: the vertex count, then whitespace-separated
//! `u v` pairs. `#` starts a comment that runs to the end of the line.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list is empty (expected a vertex count)")]
    Empty,
    #[error("line {line}: malformed token {token:?}")]
    BadToken { line: usize, token: String },
    #[error("edge list ends with an unpaired endpoint")]
    UnpairedEndpoint,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut numbers = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for token in content.split_whitespace() {
            let value = token.parse::<usize>().map_err(|_| EdgeListError::BadToken {
                line: index + 1,
                token: token.to_string(),
            })?;
            numbers.push(value);
        }
    }
    let (&n, rest) = numbers.split_first().ok_or(EdgeListError::Empty)?;
    if rest.len() % 2 != 0 {
        return Err(EdgeListError::UnpairedEndpoint);
    }
    let edges = rest.chunks_exact(2).map(|pair| (pair[0], pair[1]));
    Ok(Graph::new(n, edges)?)
}

/// Renders `g` in the format read by [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Splits a multi-graph edge-list stream into per-graph chunks. Graphs are
/// separated by one or more blank lines; chunks holding only comments are
/// dropped.
pub fn split_edge_list_stream(text: &str) -> Vec<String> {
    let mut chunks = Vec::new();
    let mut current = String::new();
    let mut has_content = false;
    for line in text.lines() {
        if line.trim().is_empty() {
            if has_content {
                chunks.push(std::mem::take(&mut current));
            }
            current.clear();
            has_content = false;
            continue;
        }
        if !line.split('#').next().unwrap_or("").trim().is_empty() {
            has_content = true;
        }
        current.push_str(line);
        current.push('\n');
    }
    if has_content {
        chunks.push(current);
    }
    chunks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("3\n0 1\n1 2").unwrap(), Graph::path(3));
        assert_eq!(parse_edge_list("2\n# empty").unwrap(), Graph::empty(2));
        assert_eq!(
            parse_edge_list("2\n0 2"),
            Err(EdgeListError::Graph(GraphError::VertexOutOfRange { vertex: 2, n: 2 }))
        );
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(parse_edge_list("# nothing\n"), Err(EdgeListError::Empty));
        assert_eq!(parse_edge_list("3\n0 1\n2"), Err(EdgeListError::UnpairedEndpoint));
        assert!(matches!(parse_edge_list("3\n0 x"), Err(EdgeListError::BadToken { line: 2, .. })));
        assert!(matches!(parse_edge_list("2\n1 1"), Err(EdgeListError::Graph(GraphError::Loop(1)))));
    }

    #[test]
    fn format_round_trips() {
        let g = crate::named::bull();
        assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn splits_streams_on_blank_lines() {
        let chunks = split_edge_list_stream("3\n0 1\n\n\n# comment only\n\n2 # two\n0 1\n");
        assert_eq!(chunks, vec!["3\n0 1\n".to_string(), "2 # two\n0 1\n".to_string()]);
    }
}
