//! The graph6 wire format.
//!
//! graph6 encodes an undirected graph as printable ASCII: the order, then
//! the upper triangle of the adjacency matrix in column order (the bit for
//! pair (i, j), i < j, ordered by j then i), packed six bits per byte with
//! each byte offset by 63 and the final byte zero-padded. Orders up to 62
//! use a single byte N+63; orders 63..=258047 use `~` followed by three
//! bytes holding N in big-endian 6-bit groups. The eight-byte form for
//! larger orders is not supported here since graphs are capped at
//! [`MAX_ORDER`] anyway.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {byte:#04x} at position {position} outside graph6 range [63,126]")]
    InvalidByte { position: usize, byte: u8 },
    #[error("input truncated at position {position}: {expected}")]
    Truncated {
        position: usize,
        expected: &'static str,
    },
    #[error("order {order} requires the unsupported 8-byte graph6 header")]
    UnsupportedOrder { order: u64 },
    #[error("graph6 input encodes the empty graph (order 0)")]
    OrderZero,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("trailing data starting at position {position}")]
    TrailingData { position: usize },
    #[error("nonzero padding bits in final byte at position {position}")]
    NonzeroPadding { position: usize },
}

/// Encodes a graph as a graph6 line (without a trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        // n <= 64 here, well inside the 4-byte form's 258047 limit.
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses one graph6 line. The input must be exactly one encoded graph,
/// with no surrounding whitespace.
pub fn from_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let bytes = line.as_bytes();
    for (position, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { position, byte });
        }
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Truncated {
            position: 0,
            expected: "order byte",
        });
    }

    let (order, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Graph6Error::UnsupportedOrder { order: u64::MAX });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated {
                position: bytes.len(),
                expected: "3-byte order after '~'",
            });
        }
        let order = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (order, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    if order == 0 {
        return Err(Graph6Error::OrderZero);
    }
    if order > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }

    let n_bits = order * (order - 1) / 2;
    let n_bytes = n_bits.div_ceil(6);
    if bytes.len() < pos + n_bytes {
        return Err(Graph6Error::Truncated {
            position: bytes.len(),
            expected: "adjacency bytes",
        });
    }
    if bytes.len() > pos + n_bytes {
        return Err(Graph6Error::TrailingData {
            position: pos + n_bytes,
        });
    }

    let mut g = match Graph::new(order) {
        Ok(g) => g,
        Err(GraphError::OrderZero) => return Err(Graph6Error::OrderZero),
        Err(_) => unreachable!("order already range-checked"),
    };
    let mut acc = 0u8;
    let mut avail = 0;
    for j in 1..order {
        for i in 0..j {
            if avail == 0 {
                acc = bytes[pos] - 63;
                avail = 6;
                pos += 1;
            }
            if acc >> (avail - 1) & 1 == 1 {
                g.add_edge(i, j).expect("indices in range");
            }
            avail -= 1;
        }
    }
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding { position: pos - 1 });
    }
    Ok(g)
}
