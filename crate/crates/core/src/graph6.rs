//! graph6 encoding.
//!
//! The vertex count is written as one byte `n + 63` when `n <= 62`, or as
//! `~` followed by three 6-bit big-endian groups when `63 <= n <= 258047`.
//! The upper triangle of the adjacency matrix follows, column by column
//! (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed six bits per byte with the
//! high bit first and each byte offset by 63. The final group is padded with
//! zero bits. sparse6 and digraph6 are not supported.

use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const LONG_MAX: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    Header(&'static str),
    #[error("invalid graph6 byte {byte:#04x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated graph6 body: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 body: {extra} extra bytes")]
    Trailing { extra: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn sextet(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (BIAS..=BIAS + 63).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Reads the vertex count, returning it with the header length.
fn parse_header(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    match bytes.first() {
        None => Err(Graph6Error::Header("empty input")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(Graph6Error::Header("8-byte long form is not supported"));
            }
            if bytes.len() < 4 {
                return Err(Graph6Error::Header("truncated long-form vertex count"));
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                n = n << 6 | sextet(i + 1, b)? as usize;
            }
            if n <= SHORT_MAX {
                return Err(Graph6Error::Header(
                    "long form used for a short-form vertex count",
                ));
            }
            Ok((n, 4))
        }
        Some(&b) => {
            let n =
                sextet(0, b).map_err(|_| Graph6Error::Header("vertex count byte out of range"))?;
            Ok((n as usize, 1))
        }
    }
}

/// Decodes one graph6 string. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (n, header) = parse_header(bytes)?;
    let mut builder = GraphBuilder::new(n)?;

    let pair_bits = n * (n - 1) / 2;
    let expected = pair_bits.div_ceil(6);
    let body = &bytes[header..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::Trailing {
            extra: body.len() - expected,
        });
    }

    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &b) in body.iter().enumerate() {
        let s = sextet(header + k, b)?;
        for shift in (0..6).rev() {
            if bit == pair_bits {
                break;
            }
            if s >> shift & 1 == 1 {
                builder.insert(i, j);
            }
            bit += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(builder.build())
}

/// Encodes `g` in canonical graph6 form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    // MAX_VERTICES is well below LONG_MAX, so the 4-byte header always suffices.
    debug_assert!(n <= LONG_MAX);
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}
