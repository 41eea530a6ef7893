//! graph6 encoding and decoding (the nauty interchange format).
//!
//! Layout: a size header N(n), then the upper triangle of the adjacency
//! matrix read column by column — bits x(0,1), x(0,2), x(1,2), x(0,3), ... —
//! packed big-endian into 6-bit groups, each offset by 63 into printable
//! ASCII. Short headers cover n <= 62; `~`-prefixed long headers cover
//! larger n and are emitted only when needed.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126; // '~'

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Parses a single graph6 line. The optional `>>graph6<<` prefix and
/// trailing line terminators are accepted; anything else beyond the encoded
/// bytes is an error naming the byte offset.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0usize;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }

    let (n, mut pos) = parse_size(bytes, base)?;
    if n == 0 {
        return Err(err(base, "graph6 line encodes n=0; vertex count must be positive"));
    }
    if n > 100_000 {
        return Err(err(base, format!("vertex count {n} exceeds supported size")));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(err(
            base + bytes.len(),
            format!(
                "truncated: need {nbytes} adjacency bytes for n={n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > nbytes {
        return Err(err(base + pos + nbytes, "trailing garbage after adjacency data"));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    let mut current = 0u8;
    let mut bits_left = 0u8;
    for w in 1..n as u32 {
        for v in 0..w {
            if bits_left == 0 {
                let b = bytes[pos];
                if !(OFFSET..=LONG_MARK).contains(&b) {
                    return Err(err(base + pos, format!("byte 0x{b:02x} out of graph6 range")));
                }
                current = b - OFFSET;
                bits_left = 6;
                pos += 1;
            }
            bits_left -= 1;
            if (current >> bits_left) & 1 == 1 {
                edges.push((v, w));
            }
            bit_index += 1;
        }
    }
    debug_assert_eq!(bit_index, nbits);

    Graph::new(n, edges).map_err(|e| err(base, e.to_string()))
}

fn parse_size(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let b0 = bytes[0];
    if b0 != LONG_MARK {
        if !(OFFSET..LONG_MARK).contains(&b0) {
            return Err(err(base, format!("header byte 0x{b0:02x} out of range")));
        }
        return Ok(((b0 - OFFSET) as usize, 1));
    }
    // Long form: '~' + 3 bytes (18-bit n) or '~~' + 6 bytes (36-bit n).
    let (skip, count) = if bytes.get(1) == Some(&LONG_MARK) {
        (2usize, 6usize)
    } else {
        (1usize, 3usize)
    };
    if bytes.len() < skip + count {
        return Err(err(base + bytes.len(), "truncated long-form size header"));
    }
    let mut n: u64 = 0;
    for i in 0..count {
        let b = bytes[skip + i];
        if !(OFFSET..=LONG_MARK).contains(&b) {
            return Err(err(base + skip + i, format!("size byte 0x{b:02x} out of range")));
        }
        n = (n << 6) | (b - OFFSET) as u64;
    }
    Ok((n as usize, skip + count))
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(LONG_MARK);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(LONG_MARK);
        out.push(LONG_MARK);
        for shift in [30u32, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut current = 0u8;
    let mut nbits = 0u8;
    for w in 1..n as u32 {
        for v in 0..w {
            current = (current << 1) | u8::from(g.has_edge(v, w));
            nbits += 1;
            if nbits == 6 {
                out.push(current + OFFSET);
                current = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((current << (6 - nbits)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}
