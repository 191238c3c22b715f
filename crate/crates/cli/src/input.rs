use std::io::Read;
use std::path::Path;

use anyhow::Context;
use clap::ValueEnum;
use qblock_core::io::{decode_graph6, parse_edge_list, split_edge_list_stream};
use qblock_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// One input graph, or the reason it could not be read.
pub struct Item {
    pub id: String,
    pub graph: Result<Graph, String>,
}

pub fn read_source(path: Option<&Path>) -> anyhow::Result<(String, String)> {
    match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?;
            Ok((p.display().to_string(), text))
        }
        None => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("cannot read standard input")?;
            Ok(("stdin".to_string(), text))
        }
    }
}

/// Splits `text` into graphs: one per non-blank line for graph6, one per
/// blank-line separated chunk for edge lists.
pub fn parse_items(source: &str, text: &str, format: Format) -> Vec<Item> {
    let chunks: Vec<String> = match format {
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(str::to_string)
            .collect(),
        Format::Edgelist => split_edge_list_stream(text),
    };
    chunks
        .iter()
        .enumerate()
        .map(|(i, chunk)| Item {
            id: format!("{source}#{}", i + 1),
            graph: match format {
                Format::Graph6 => decode_graph6(chunk).map_err(|e| e.to_string()),
                Format::Edgelist => parse_edge_list(chunk).map_err(|e| e.to_string()),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_lines() {
        let items = parse_items("t", "Dhc\n\n@\nbad!\n", Format::Graph6);
        assert_eq!(items.len(), 3);
        assert_eq!(items[1].id, "t#2");
        assert_eq!(items[1].graph.as_ref().unwrap().n(), 1);
        assert!(items[2].graph.is_err());
    }

    #[test]
    fn edge_list_chunks() {
        let items = parse_items("t", "3\n0 1\n1 2\n\n2 0 1\n", Format::Edgelist);
        assert_eq!(items.len(), 2);
        assert_eq!(items[0].graph.as_ref().unwrap().m(), 2);
    }
}
