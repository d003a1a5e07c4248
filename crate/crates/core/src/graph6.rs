//! graph6 encoding (nauty formats): a size header followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! byte with each byte offset by 63.

use thiserror::Error;

use crate::graph::Graph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("malformed size header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("truncated body: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after the encoded graph")]
    TrailingGarbage { extra: usize },
    #[error("nonzero padding bits in the last body byte")]
    NonZeroPadding,
}

fn checked(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (BIAS..=MAX_BYTE).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::InvalidByte { offset, byte })
    }
}

/// Returns (n, header length).
fn parse_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != MAX_BYTE {
        return Ok((checked(0, first)? as usize, 1));
    }
    // 126 followed by 3 bytes (18 bits), or 126 126 followed by 6 bytes.
    let (start, len) = if bytes.get(1) == Some(&MAX_BYTE) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + len {
        return Err(Graph6Error::MalformedHeader);
    }
    let mut n = 0usize;
    for (i, &b) in bytes[start..start + len].iter().enumerate() {
        n = (n << 6) | checked(start + i, b)? as usize;
    }
    let canonical = if len == 3 { n > 62 } else { n > 258_047 };
    if !canonical {
        return Err(Graph6Error::MalformedHeader);
    }
    Ok((n, start + len))
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A trailing newline and an optional `>>graph6<<`
/// prefix are accepted.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (n, header) = parse_size(bytes)?;
    let body = &bytes[header..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage {
            extra: body.len() - expected,
        });
    }
    let mut g = Graph::empty(n);
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for (i, &b) in body.iter().enumerate() {
        let chunk = checked(header + i, b)?;
        for shift in (0..6).rev() {
            let bit = chunk >> shift & 1 == 1;
            if k >= total_bits {
                if bit {
                    return Err(Graph6Error::NonZeroPadding);
                }
            } else if bit {
                let (u, v) = pair_at(k);
                g.link(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Pair for bit index `k` in the order (0,1),(0,2),(1,2),(0,3),...
fn pair_at(k: usize) -> (usize, usize) {
    // largest v with v(v-1)/2 <= k
    let mut v = (((8 * k + 1) as f64).sqrt() as usize).div_ceil(2);
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    (k - v * (v - 1) / 2, v)
}

/// Minimal-length graph6 encoding of `g` in its own vertex order (no
/// newline, no `>>graph6<<` prefix).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(MAX_BYTE);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.push(MAX_BYTE);
        out.push(MAX_BYTE);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
