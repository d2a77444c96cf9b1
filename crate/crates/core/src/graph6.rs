//! graph6 codec: compact printable-ASCII encoding of undirected graphs.
//!
//! Layout: N(n) followed by the upper triangle of the adjacency matrix in
//! column-major order (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed into
//! 6-bit groups, each group + 63. N(n) is one byte (n+63) for n <= 62, then
//! `~` + 3 bytes (18-bit big-endian) up to 258047, then `~~` + 6 bytes.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(line: &str) -> Result<Graph> {
    let s = line.strip_prefix(HEADER).unwrap_or(line).trim_end();
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b:#04x} at offset {pos} out of range")));
        }
    }
    let (n, mut idx) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated 3-byte order field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::Graph6("truncated 6-byte order field".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8)
    };
    let bits_needed = n * (n.saturating_sub(1)) / 2;
    let groups = bits_needed.div_ceil(6);
    if bytes.len() - idx != groups {
        return Err(Error::Graph6(format!(
            "expected {} payload bytes for n={}, got {}",
            groups,
            n,
            bytes.len() - idx
        )));
    }
    let mut g = Graph::empty(n);
    let mut acc = 0u32;
    let mut nbits = 0u32;
    'outer: for j in 1..n {
        for i in 0..j {
            if nbits == 0 {
                if idx >= bytes.len() {
                    break 'outer;
                }
                acc = (bytes[idx] - 63) as u32;
                nbits = 6;
                idx += 1;
            }
            if acc >> (nbits - 1) & 1 == 1 {
                g.set_edge(i, j);
            }
            nbits -= 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn known_strings() {
        assert_eq!(encode(&families::complete(2).unwrap()), "A_");
        assert_eq!(encode(&families::cycle(5).unwrap()), "Dhc");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
    }

    #[test]
    fn round_trip_small() {
        for n in 0..=7 {
            if n == 0 {
                let g = Graph::empty(0);
                assert_eq!(decode(&encode(&g)).unwrap().vertex_count(), 0);
                continue;
            }
            for g in crate::enumerate::connected_graphs(n).unwrap() {
                let h = decode(&encode(&g)).unwrap();
                assert_eq!(h.vertex_count(), g.vertex_count());
                assert_eq!(h.edges(), g.edges());
            }
        }
    }

    #[test]
    fn header_accepted() {
        let g = decode(">>graph6<<Dhc").unwrap();
        assert_eq!(g.edges(), families::cycle(5).unwrap().edges());
    }

    #[test]
    fn large_order_field() {
        // n = 100 exercises the 3-byte form
        let g = families::path(100).unwrap();
        let s = encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        let h = decode(&s).unwrap();
        assert_eq!(h.vertex_count(), 100);
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn malformed_inputs() {
        assert!(decode("").is_err());
        assert!(decode("D").is_err()); // truncated payload
        assert!(decode("Dhcc").is_err()); // extra payload
        assert!(decode("D\x1fc").is_err()); // byte below 63
        assert!(decode("~A").is_err()); // truncated order field
    }
}
