//! Interchange formats: a line-oriented edge list and graph6.

use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list format:
///
/// ```text
/// # comment
/// n 4
/// 0 1
/// 1 2   # trailing comments are fine
/// ```
///
/// The `n <count>` header must precede every edge line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if graph.is_some() {
                return Err(Error::parse(line_no, "duplicate header"));
            }
            if fields.len() != 2 {
                return Err(Error::parse(
                    line_no,
                    "malformed header, expected `n <count>`",
                ));
            }
            let n: usize = fields[1]
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad vertex count {:?}", fields[1])))?;
            graph = Some(Graph::empty(n));
            continue;
        }
        let g = graph
            .as_mut()
            .ok_or_else(|| Error::parse(line_no, "edge before `n <count>` header"))?;
        if fields.len() != 2 {
            return Err(Error::parse(
                line_no,
                format!("malformed line {line:?}, expected `u v`"),
            ));
        }
        let id = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("bad vertex id {s:?}")))
        };
        let (u, v) = (id(fields[0])?, id(fields[1])?);
        let n = g.vertex_count();
        if u >= n || v >= n {
            return Err(Error::parse(
                line_no,
                format!("vertex id out of range (n = {n})"),
            ));
        }
        if u == v {
            return Err(Error::parse(line_no, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line_no, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).expect("checked above");
    }
    graph.ok_or_else(|| Error::parse(1, "missing `n <count>` header"))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const BIAS: u8 = 63;
const MAX_SYMBOL: u8 = 126;

/// Decodes one graph6 string. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes
        .iter()
        .position(|&b| !(BIAS..=MAX_SYMBOL).contains(&b))
    {
        return Err(Error::Graph6(format!(
            "symbol {:?} at offset {pos} outside 63..126",
            bytes[pos] as char
        )));
    }
    let (n, rest) = decode_order(bytes)?;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if rest.len() != expected {
        return Err(Error::Graph6(format!(
            "bad length: {n} vertices need {expected} adjacency symbols, got {}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let symbol = rest[k / 6] - BIAS;
            if symbol & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j)
                    .expect("upper triangle has no loops or repeats");
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = rest[k / 6] - BIAS;
        if last & ((1 << (6 - k % 6)) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, &[u8])> {
    let take = |k: usize, from: usize| -> Result<usize> {
        if bytes.len() < from + k {
            return Err(Error::Graph6("bad length: truncated vertex count".into()));
        }
        Ok(bytes[from..from + k]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS)))
    };
    if bytes[0] != MAX_SYMBOL {
        return Ok((usize::from(bytes[0] - BIAS), &bytes[1..]));
    }
    if bytes.len() > 1 && bytes[1] == MAX_SYMBOL {
        Ok((take(6, 2)?, &bytes[8.min(bytes.len())..]))
    } else {
        Ok((take(3, 1)?, &bytes[4.min(bytes.len())..]))
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(MAX_SYMBOL);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        out.extend([MAX_SYMBOL, MAX_SYMBOL]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 symbols are ASCII")
}
