//! graph6 encoding of undirected simple graphs.
//!
//! The order is written as one byte `n + 63` for `n <= 62`, as `126`
//! followed by three 6-bit groups for `n <= 258047`, and otherwise as
//! `126 126` followed by six groups. The upper triangle follows column by
//! column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per byte.

use blowup_core::Graph;
use thiserror::Error;

/// Largest order the format can express.
pub const GRAPH6_MAX_ORDER: u64 = (1 << 36) - 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("non-printable character {byte:#04x} at offset {offset}")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("malformed byte {byte:#04x} at offset {offset}")]
    Malformed { offset: usize, byte: u8 },
    #[error("expected {expected} bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

fn push_groups(out: &mut Vec<u8>, value: u64, groups: u32) {
    for g in (0..groups).rev() {
        out.push((value >> (6 * g) & 0x3f) as u8 + 63);
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    match n as u64 {
        0..=62 => out.push(n as u8 + 63),
        63..=258_047 => {
            out.push(126);
            push_groups(&mut out, n as u64, 3);
        }
        m => {
            assert!(m <= GRAPH6_MAX_ORDER, "graph6 cannot express {m} vertices");
            out.extend([126, 126]);
            push_groups(&mut out, m, 6);
        }
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

fn group(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    let byte = bytes[offset];
    if !(63..=126).contains(&byte) {
        return Err(Graph6Error::Malformed { offset, byte });
    }
    Ok(u64::from(byte - 63))
}

fn read_groups(bytes: &[u8], start: usize, count: usize) -> Result<u64, Graph6Error> {
    if bytes.len() < start + count {
        return Err(Graph6Error::LengthMismatch { expected: start + count, found: bytes.len() });
    }
    (start..start + count).try_fold(0, |acc, i| Ok(acc << 6 | group(bytes, i)?))
}

/// Decodes one graph6 string. A `>>graph6<<` header and surrounding
/// whitespace are not accepted; strip them first.
pub fn decode_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(offset) = bytes.iter().position(|b| !(0x21..=0x7e).contains(b)) {
        return Err(Graph6Error::NonPrintable { offset, byte: bytes[offset] });
    }
    let (n, header) = if bytes[0] != 126 {
        (group(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        (read_groups(bytes, 1, 3)?, 4)
    } else {
        (read_groups(bytes, 2, 6)?, 8)
    };
    let bits = u128::from(n) * u128::from(n.saturating_sub(1)) / 2;
    let expected = u128::from(header as u64) + bits.div_ceil(6);
    if expected != bytes.len() as u128 {
        let expected = usize::try_from(expected).unwrap_or(usize::MAX);
        return Err(Graph6Error::LengthMismatch { expected, found: bytes.len() });
    }
    let n = n as usize;
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = header + k / 6;
            if group(bytes, offset)? >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let offset = bytes.len() - 1;
        let pad = 6 - k % 6;
        if group(bytes, offset)? & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Malformed { offset, byte: bytes[offset] });
        }
    }
    Ok(Graph::new(n, &edges).expect("pairs are distinct and in range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(encode_graph6(&Graph::complete(3)), "Bw");
        assert_eq!(encode_graph6(&Graph::path(3)), "Bg");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(decode_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(decode_graph6("?").unwrap(), Graph::empty(0));
    }

    #[test]
    fn extended_orders_round_trip() {
        for n in [62, 63, 64, 100] {
            let g = Graph::cycle(n);
            let s = encode_graph6(&g);
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(decode_graph6(&s).unwrap(), g);
        }
        let mut long = vec![126u8, 126];
        long.extend([63, 63, 66, 63, 63, 63]);
        assert_eq!(read_groups(&long, 2, 6).unwrap(), 3 << 18);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(decode_graph6("B w"), Err(Graph6Error::NonPrintable { offset: 1, .. })));
        assert!(matches!(decode_graph6("B"), Err(Graph6Error::LengthMismatch { expected: 2, found: 1 })));
        assert!(matches!(decode_graph6("Bww"), Err(Graph6Error::LengthMismatch { .. })));
        assert!(matches!(decode_graph6("B!"), Err(Graph6Error::Malformed { offset: 1, .. })));
        // padding bits must be zero: K3 uses 3 of 6 bits
        assert!(matches!(decode_graph6("Bx"), Err(Graph6Error::Malformed { offset: 1, .. })));
        assert!(matches!(decode_graph6("~?"), Err(Graph6Error::LengthMismatch { .. })));
    }
}
