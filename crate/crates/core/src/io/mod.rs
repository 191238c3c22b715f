//! Graph input and output: graph6 and whitespace edge lists.

pub mod edgelist;
pub mod graph6;

pub use edgelist::{format_edge_list, parse_edge_list, split_edge_list_stream, EdgeListError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
