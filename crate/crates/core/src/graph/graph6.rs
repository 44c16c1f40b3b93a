//! graph6 reader and writer for simple graphs.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

fn parse_error(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Parse {
        offset,
        reason: reason.into(),
    }
}

fn sixbits(bytes: &[u8], offset: usize) -> Result<u8, GraphError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(parse_error(
            offset,
            format!("byte 0x{b:02x} outside 63..=126"),
        )),
        None => Err(parse_error(offset, "unexpected end of input")),
    }
}

/// Decodes the vertex count; returns `(n, bytes consumed)`.
fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize), GraphError> {
    let first = *bytes
        .first()
        .ok_or_else(|| parse_error(base, "empty graph6 string"))?;
    if first != 126 {
        return Ok((sixbits(bytes, 0).map_err(|e| shift(e, base))? as usize, 1));
    }
    if bytes.get(1) == Some(&126) {
        // 8-byte form: n > 258047.
        let mut n = 0usize;
        for i in 2..8 {
            n = (n << 6) | sixbits(bytes, i).map_err(|e| shift(e, base))? as usize;
        }
        if n > MAX_ORDER {
            return Err(parse_error(base, format!("order {n} exceeds {MAX_ORDER}")));
        }
        return Ok((n, 8));
    }
    let mut n = 0usize;
    for i in 1..4 {
        n = (n << 6) | sixbits(bytes, i).map_err(|e| shift(e, base))? as usize;
    }
    Ok((n, 4))
}

fn shift(err: GraphError, base: usize) -> GraphError {
    match err {
        GraphError::Parse { offset, reason } => GraphError::Parse {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Parses one graph6 line into a connected simple graph. A leading
/// `>>graph6<<` header and trailing line terminators are ignored; byte
/// offsets in errors count from the start of `line`.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, trimmed),
    };
    let bytes = body.as_bytes();
    let (n, used) = decode_order(bytes, base)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let nbits = n * (n - 1) / 2;
    let expected = used + nbits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_error(
            base + bytes.len().min(expected),
            format!(
                "expected {expected} bytes for {n} vertices, found {}",
                bytes.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = used + bit / 6;
            let group = sixbits(bytes, offset).map_err(|e| shift(e, base))?;
            if group & (1 << (5 - bit % 6)) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    // Padding bits must be zero.
    for pad in bit..(bytes.len() - used) * 6 {
        let offset = used + pad / 6;
        let group = sixbits(bytes, offset).map_err(|e| shift(e, base))?;
        if group & (1 << (5 - pad % 6)) != 0 {
            return Err(parse_error(base + offset, "nonzero padding bit"));
        }
    }
    for offset in used..bytes.len() {
        sixbits(bytes, offset).map_err(|e| shift(e, base))?;
    }
    // Lexicographic edge order fixes the dart numbering.
    edges.sort_unstable();
    Graph::from_edges(n, &edges)
}

/// Encodes a simple graph as graph6 (no header, no newline).
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    if !g.is_simple() {
        return Err(GraphError::NotSimple);
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(GraphError::Parse {
            offset: 0,
            reason: format!("order {n} exceeds {MAX_ORDER}"),
        });
    }
    let mut adjacency = vec![false; n * n];
    for (u, v) in g.edges() {
        adjacency[u * n + v] = true;
        adjacency[v * n + u] = true;
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | adjacency[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn k4_from_all_bits_set() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 6));
        assert!(g.is_cubic());
        assert_eq!(write_graph6(&g).unwrap(), "C~");
    }

    #[test]
    fn header_and_newline_tolerated() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn empty_graph_on_four_vertices_is_disconnected() {
        assert_eq!(
            parse_graph6("C?"),
            Err(GraphError::Disconnected { components: 4 })
        );
    }

    #[test]
    fn bad_length_reports_offset() {
        // "C" announces 4 vertices (1 data byte) but none follows.
        match parse_graph6("C") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph6("C~~"), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn bad_character_reports_offset() {
        match parse_graph6(">>graph6<<C!") {
            Err(GraphError::Parse { offset, .. }) => assert_eq!(offset, 11),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn nonzero_padding_rejected() {
        // 3 vertices use 3 of the 6 bits; 'B' + 63 + 0b000_001 sets padding.
        let line = format!("B{}", (63 + 0b111_001) as u8 as char);
        assert!(matches!(parse_graph6(&line), Err(GraphError::Parse { .. })));
    }

    #[test]
    fn triangle_is_bw() {
        let g = parse_graph6("Bw").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 3));
        assert_eq!(write_graph6(&g).unwrap(), "Bw");
    }

    #[test]
    fn long_order_form_round_trips() {
        let n = 70;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        let h = parse_graph6(&s).unwrap();
        assert_eq!(h.vertex_count(), n);
        assert_eq!(write_graph6(&h).unwrap(), s);
    }

    #[test]
    fn multigraph_cannot_be_written() {
        let g = Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert_eq!(write_graph6(&g), Err(GraphError::NotSimple));
    }
}
