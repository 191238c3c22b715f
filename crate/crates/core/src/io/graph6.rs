//! graph6 codec.
//!
//! A line is a size header followed by the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first), each byte offset by 63 and the
//! last one zero-padded. Sizes up to 62 take one header byte; sizes up to
//! 258047 take byte 126 followed by three 6-bit groups. The eight-byte
//! header for larger graphs is not supported.

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count with a four-byte header.
pub const MAX_VERTICES: usize = 258_047;

const SHORT_MAX: usize = 62;
const BIAS: u8 = 63;
const LONG_MARK: u8 = 126;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte} at position {position} is outside the printable range 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("bad size header: {0}")]
    BadHeader(&'static str),
    #[error("body has {got} bytes, expected {expected}")]
    BodyLength { expected: usize, got: usize },
    #[error("nonzero padding bits in the last body byte")]
    NonzeroPadding,
    #[error("graph on {0} vertices is too large for graph6 (max {MAX_VERTICES})")]
    TooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn decode_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|&(_, &b)| !(BIAS..=LONG_MARK).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { position, byte });
    }

    let (n, body) = if bytes[0] != LONG_MARK {
        (usize::from(bytes[0] - BIAS), &bytes[1..])
    } else {
        if bytes.get(1) == Some(&LONG_MARK) {
            return Err(Graph6Error::BadHeader("eight-byte header is not supported"));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader("truncated four-byte header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS));
        if n <= SHORT_MAX {
            return Err(Graph6Error::BadHeader("four-byte header used for n <= 62"));
        }
        (n, &bytes[4..])
    };

    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BodyLength { expected, got: body.len() });
    }

    let total_bits = n * n.saturating_sub(1) / 2;
    if let Some(&last) = body.last() {
        let used = total_bits - 6 * (expected - 1);
        let padding_mask = (1u8 << (6 - used)) - 1;
        if (last - BIAS) & padding_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for y in 1..n {
        for x in 0..y {
            let byte = body[bit / 6] - BIAS;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((x, y));
            }
            bit += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("decoded edges are in range and loop-free"))
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_MARK);
        out.extend([12, 6, 0].map(|shift| ((n >> shift) & 0x3f) as u8 + BIAS));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for y in 1..n {
        for x in 0..y {
            acc = (acc << 1) | u8::from(g.has_edge(x, y));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
