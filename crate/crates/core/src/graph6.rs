//! graph6 encoding and decoding.
//!
//! A record is a size header followed by the upper adjacency triangle read in
//! column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed big-endian into
//! six-bit groups, each stored as `group + 63`. Sizes up to 62 take one byte;
//! 63..=258047 take `~` followed by three bytes. Padding bits must be zero so
//! that decoding and re-encoding reproduces the input byte for byte.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated record: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} unexpected trailing bytes")]
    TrailingData { extra: usize },
    #[error("nonzero padding bits in final byte")]
    NonzeroPadding,
    #[error("size {0} encoded in the long form; graph6 requires the shortest form")]
    NonMinimalSize(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[inline]
fn digit(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
        Some(&byte) => Err(Graph6Error::InvalidByte { offset, byte }),
        None => Err(Graph6Error::Truncated { expected: offset + 1, found: bytes.len() }),
    }
}

/// Decodes the size header, returning `(n, header_len)`.
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = match bytes.first() {
        None => return Err(Graph6Error::Empty),
        Some(_) => digit(bytes, 0)?,
    };
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let second = digit(bytes, 1)?;
    if second == 63 {
        // 8-byte form: `~~` then six digits.
        let mut n = 0usize;
        for i in 2..8 {
            n = n << 6 | digit(bytes, i)? as usize;
        }
        if n <= MEDIUM_MAX {
            return Err(Graph6Error::NonMinimalSize(n));
        }
        return Err(GraphError::TooManyVertices(n).into());
    }
    let mut n = second as usize;
    for i in 2..4 {
        n = n << 6 | digit(bytes, i)? as usize;
    }
    if n <= SMALL_MAX {
        return Err(Graph6Error::NonMinimalSize(n));
    }
    Ok((n, 4))
}

/// Parses one graph6 record. Surrounding whitespace is not accepted; strip
/// line terminators before calling.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (n, header) = parse_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let expected = header + nbytes;
    if bytes.len() < expected {
        // Report a bad byte before a short record if one is present.
        for offset in header..bytes.len() {
            digit(bytes, offset)?;
        }
        return Err(Graph6Error::Truncated { expected, found: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { extra: bytes.len() - expected });
    }

    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for offset in header..expected {
        let d = digit(bytes, offset)?;
        for shift in (0..6).rev() {
            let bit = d >> shift & 1 == 1;
            if k < nbits {
                if bit {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if bit {
                return Err(Graph6Error::NonzeroPadding);
            }
        }
    }
    Ok(Graph::from_rows(rows))
}

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= SMALL_MAX {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(4 + nbits.div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
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
    out
}

/// [`encode_graph6`] as a `String`; graph6 output is always ASCII.
pub fn encode_graph6_string(g: &Graph) -> String {
    String::from_utf8(encode_graph6(g)).expect("graph6 output is ASCII")
}

impl Graph {
    pub fn from_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
        parse_graph6(bytes)
    }

    pub fn to_graph6(&self) -> String {
        encode_graph6_string(self)
    }
}
