//! Bit-exact graph6 encoding and a small DOT writer.
//!
//! One record per graph: the first byte is `63 + n` (n <= 62), followed by
//! the upper triangle of the adjacency matrix read column by column, bit
//! order x(0,1), x(0,2), x(1,2), x(0,3), ..., packed big-endian into 6-bit
//! groups, zero padded, each group emitted as `group + 63`.

use crate::graph::Graph;
use thiserror::Error;

/// Largest order a single-byte graph6 record can carry.
pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("order {0} cannot be encoded in a one-byte graph6 record (maximum 62)")]
    OrderTooLarge(usize),
    #[error("malformed graph6 record: {0}")]
    MalformedRecord(String),
}

pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut used = 0;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if g.has_edge(row, col) {
                group |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(group + 63);
                group = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((group << (6 - used)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}

pub fn parse_graph6(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedRecord("empty record".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::MalformedRecord(format!(
            "byte {b} outside the printable range 63..=126"
        )));
    }
    if bytes[0] == 126 {
        // multi-byte order prefix, only used for n > 62
        return Err(Graph6Error::OrderTooLarge(63));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * (n.saturating_sub(1)) / 2;
    let expect = 1 + nbits.div_ceil(6);
    if bytes.len() != expect {
        return Err(Graph6Error::MalformedRecord(format!(
            "record of order {n} must be {expect} bytes, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::empty(n).unwrap();
    let mut idx = 0;
    for col in 1..n {
        for row in 0..col {
            let byte = bytes[1 + idx / 6] - 63;
            let bit = byte >> (5 - idx % 6) & 1;
            if bit == 1 {
                g.add_edge(row, col);
            }
            idx += 1;
        }
    }
    // padding bits must be zero for the round trip to be exact
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::MalformedRecord(
                "nonzero padding bits".into(),
            ));
        }
    }
    Ok(g)
}

/// Splits a graph6 stream into `(record_number, line)` pairs, skipping an
/// optional `>>graph6<<` header and blank lines. Record numbers are 1-based.
pub fn stream_records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .map(|l| l.trim_end_matches('\r'))
        .filter(|l| !l.is_empty())
        .filter(|l| !l.starts_with(">>graph6<<"))
        .enumerate()
        .map(|(i, l)| (i + 1, l))
}

/// Undirected DOT output: one `--` line per edge, smaller endpoint first,
/// ascending; isolated vertices get a bare node line so nothing is lost.
pub fn write_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
