//! graph6 codec (short form, `n <= 62`).
//!
//! One printable-ASCII line per graph: first byte encodes `n + 63`, the
//! remaining bytes pack the upper triangle of the adjacency matrix in
//! column order, six bits per byte (most significant first), each byte
//! offset by 63. Padding bits must be zero.

use super::Graph;
use crate::error::Error;

pub(super) fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    debug_assert!(n <= crate::MAX_VERTICES);
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut used = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub(super) fn from_graph6(text: &str) -> Result<Graph, Error> {
    let bytes = text.trim().as_bytes();
    let (&first, rest) = bytes
        .split_first()
        .ok_or_else(|| Error::parse(1, "empty graph6 string"))?;
    if first == b'~' {
        return Err(Error::parse(
            1,
            format!(
                "graph6 long form is not supported (maximum {} vertices)",
                crate::MAX_VERTICES
            ),
        ));
    }
    if !(63..=125).contains(&first) {
        return Err(Error::parse(
            1,
            format!("invalid graph6 size byte 0x{first:02x}"),
        ));
    }
    let n = (first - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::parse(
            1,
            format!(
                "graph6 body for {n} vertices needs {expected} bytes, found {}",
                rest.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit = 0usize;
    for &byte in rest {
        if !(63..=126).contains(&byte) {
            return Err(Error::parse(
                1,
                format!("invalid graph6 data byte 0x{byte:02x}"),
            ));
        }
        let chunk = byte - 63;
        for k in (0..6).rev() {
            let value = chunk >> k & 1 == 1;
            if bit >= bit_count {
                if value {
                    return Err(Error::parse(1, "nonzero padding bits in graph6 string"));
                }
                continue;
            }
            if value {
                let (i, j) = pair_for_bit(bit);
                g.add_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

/// Inverse of column-order upper-triangle indexing: bit `b` is the pair
/// `(i, j)` with `b = j(j-1)/2 + i`.
fn pair_for_bit(b: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= b {
        j += 1;
    }
    (b - j * (j - 1) / 2, j)
}

#[cfg(test)]
mod tests {
    use super::super::Graph;
    use crate::error::Error;

    #[test]
    fn frozen_vectors() {
        assert_eq!(Graph::new(0).to_graph6(), "?");
        assert_eq!(Graph::new(1).to_graph6(), "@");
        assert_eq!(Graph::from_edges(2, &[(0, 1)]).to_graph6(), "A_");
        assert_eq!(Graph::new(2).to_graph6(), "A?");
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(k3.to_graph6(), "Bw");
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert_eq!(p3.to_graph6(), "Bg");
    }

    #[test]
    fn decode_matches_encode() {
        for text in ["?", "@", "A_", "A?", "Bw", "Bg"] {
            let g = Graph::from_graph6(text).unwrap();
            assert_eq!(g.to_graph6(), text);
        }
    }

    #[test]
    fn roundtrip_various_sizes() {
        for n in 0..10 {
            // A fixed quasi-random edge pattern exercises chunk boundaries.
            let mut g = Graph::new(n);
            for j in 1..n {
                for i in 0..j {
                    if (i * 7 + j * 3 + i * j) % 5 < 2 {
                        g.add_edge(i, j);
                    }
                }
            }
            let text = g.to_graph6();
            assert_eq!(Graph::from_graph6(&text).unwrap(), g, "n = {n}");
        }
        // Largest supported size.
        let big = Graph::from_edges(62, &[(0, 61), (30, 31)]);
        assert_eq!(Graph::from_graph6(&big.to_graph6()).unwrap(), big);
    }

    #[test]
    fn tolerates_surrounding_whitespace() {
        assert_eq!(
            Graph::from_graph6("Bw\n").unwrap(),
            Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)])
        );
    }

    fn expect_invalid(text: &str, needle: &str) {
        match Graph::from_graph6(text) {
            Err(Error::Parse { message, .. }) => assert!(
                message.contains(needle),
                "message {message:?} missing {needle:?}"
            ),
            other => panic!("expected parse error for {text:?}, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        expect_invalid("", "empty");
        expect_invalid("~??", "long form");
        expect_invalid("B", "needs 1 bytes, found 0");
        expect_invalid("Bww", "needs 1 bytes, found 2");
        expect_invalid("B\u{1}", "invalid graph6 data byte");
        // n = 3 uses 3 bits; a set bit in the padding is corruption.
        expect_invalid("B~", "padding");
    }
}
