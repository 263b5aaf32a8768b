//! graph6 text codec.
//!
//! Standard header-free format: a size prefix followed by the upper-triangle
//! adjacency bits in column order (columns by increasing index, rows above the
//! diagonal), packed into 6-bit groups offset by 63. Orders up to 62 use the
//! single-byte prefix; 63 and 64 use the 4-byte extended prefix.

use crate::graph::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits must be zero")]
    NonzeroPadding,
    #[error("order {n} unsupported (must be 1..={MAX_VERTICES})")]
    UnsupportedOrder { n: usize },
}

/// Packs upper-triangle bits in graph6 column order into printable bytes
/// (6 bits per byte, offset 63). No size prefix.
pub(crate) fn pack_upper_triangle<F: Fn(usize, usize) -> bool>(n: usize, has: F) -> Vec<u8> {
    let nbits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(nbits.div_ceil(6));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | has(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    bytes.extend(pack_upper_triangle(n, |i, j| g.has_edge(i, j)));
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }
    let (n, data) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - 63;
            if byte >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Graph::build(n, &edges).map_err(|_| Graph6Error::UnsupportedOrder { n })
}
