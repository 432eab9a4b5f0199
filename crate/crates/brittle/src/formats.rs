//! graph6, sparse6 and a small JSON form.
//!
//! graph6 stores the upper triangle column by column (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`) in big-endian 6-bit groups offset by 63. sparse6 follows the
//! reference encoder byte for byte, including its padding rule.

use std::path::Path;

use brittle_core::{Graph, MAX_VERTICES};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("{format} parse error at byte {offset}: {msg}")]
    Parse {
        format: &'static str,
        offset: usize,
        msg: String,
    },
    #[error("json graph: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] brittle_core::Error),
    #[error("{0}")]
    Io(String),
}

fn err<T>(format: &'static str, offset: usize, msg: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Parse {
        format,
        offset,
        msg: msg.into(),
    })
}

const HEADER_G6: &[u8] = b">>graph6<<";
const HEADER_S6: &[u8] = b">>sparse6<<";

fn emit_n(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Reads N(n) starting at `at`; returns (n, next offset).
fn parse_n(format: &'static str, data: &[u8], at: usize) -> Result<(usize, usize), FormatError> {
    let byte = |i: usize| -> Result<usize, FormatError> {
        match data.get(i) {
            None => err(format, i, "unexpected end of input"),
            Some(&b) if !(63..=126).contains(&b) => err(format, i, format!("byte {b:#04x} out of range")),
            Some(&b) => Ok(b as usize - 63),
        }
    };
    let first = byte(at)?;
    if first < 63 {
        return Ok((first, at + 1));
    }
    if data.get(at + 1) == Some(&126) {
        return err(format, at, "orders above 258047 are not supported");
    }
    let mut n = 0;
    for i in 1..=3 {
        n = n << 6 | byte(at + i)?;
    }
    Ok((n, at + 4))
}

fn check_order(format: &'static str, n: usize, offset: usize) -> Result<(), FormatError> {
    if n > MAX_VERTICES {
        return err(format, offset, format!("{n} vertices exceed the cap of {MAX_VERTICES}"));
    }
    Ok(())
}

fn strip<'a>(s: &'a str, header: &[u8]) -> (&'a [u8], usize) {
    let b = s.as_bytes();
    let b = b.strip_suffix(b"\n").unwrap_or(b);
    let b = b.strip_suffix(b"\r").unwrap_or(b);
    match b.strip_prefix(header) {
        Some(rest) => (rest, header.len()),
        None => (b, 0),
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    emit_n(n, &mut out);
    let mut acc = 0u8;
    let mut used = 0;
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
    String::from_utf8(out).expect("graph6 is ascii")
}

/// Parses one graph6 line. A leading `>>graph6<<` header and a trailing
/// newline are accepted. Errors carry the byte offset into `s`.
pub fn parse_graph6(s: &str) -> Result<Graph, FormatError> {
    const F: &str = "graph6";
    let (data, base) = strip(s, HEADER_G6);
    let (n, start) = parse_n(F, data, 0).map_err(|e| shift(e, base))?;
    check_order(F, n, base)?;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &data[start..];
    if body.len() != need {
        return err(F, base + start + body.len().min(need), format!("expected {need} data bytes for {n} vertices, found {}", body.len()));
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0;
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return err(F, base + start + i, format!("byte {b:#04x} out of range"));
        }
        let v = b - 63;
        for bit in (0..6).rev() {
            let set = v >> bit & 1 == 1;
            if pos < bits {
                if set {
                    let (i, j) = column_pair(pos);
                    g.add_edge(i, j)?;
                }
            } else if set {
                return err(F, base + start + i, "nonzero padding bits");
            }
            pos += 1;
        }
    }
    Ok(g)
}

/// Position `p` in the column-wise upper triangle as the pair (i, j), i < j.
fn column_pair(p: usize) -> (usize, usize) {
    let mut j = 1;
    while j * (j + 1) / 2 <= p {
        j += 1;
    }
    (p - j * (j - 1) / 2, j)
}

fn shift(e: FormatError, by: usize) -> FormatError {
    match e {
        FormatError::Parse { format, offset, msg } => FormatError::Parse {
            format,
            offset: offset + by,
            msg,
        },
        other => other,
    }
}

fn sparse6_width(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn emit_sparse6(g: &Graph) -> String {
    let n = g.n();
    let k = sparse6_width(n);
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|e| (e.1, e.0)).collect();
    edges.sort_unstable();
    let mut bits: Vec<bool> = Vec::new();
    let enc = |bits: &mut Vec<bool>, x: usize| {
        for i in (0..k).rev() {
            bits.push(x >> i & 1 == 1);
        }
    };
    let mut cur = 0;
    for (v, u) in edges {
        if v == cur {
            bits.push(false);
            enc(&mut bits, u);
        } else if v == cur + 1 {
            cur += 1;
            bits.push(true);
            enc(&mut bits, u);
        } else {
            cur = v;
            bits.push(true);
            enc(&mut bits, v);
            bits.push(false);
            enc(&mut bits, u);
        }
    }
    let pad = |len: usize| (6 - len % 6) % 6;
    if k < 6 && n == 1 << k && pad(bits.len()) >= k && cur + 1 < n {
        bits.push(false);
    }
    let fill = pad(bits.len());
    bits.extend(std::iter::repeat_n(true, fill));
    let mut out = vec![b':'];
    emit_n(n, &mut out);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | b as u8);
        out.push(v + 63);
    }
    String::from_utf8(out).expect("sparse6 is ascii")
}

/// Parses one sparse6 line (leading `:` required, header optional).
/// Loops and repeated edges are rejected since graphs here are simple.
pub fn parse_sparse6(s: &str) -> Result<Graph, FormatError> {
    const F: &str = "sparse6";
    let (data, base) = strip(s, HEADER_S6);
    if data.first() != Some(&b':') {
        return err(F, base, "sparse6 data must start with ':'");
    }
    let (n, start) = parse_n(F, data, 1).map_err(|e| shift(e, base))?;
    check_order(F, n, base + 1)?;
    let k = sparse6_width(n);
    let body = &data[start..];
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return err(F, base + start + i, format!("byte {:#04x} out of range", body[i]));
    }
    let mut g = Graph::empty(n)?;
    // bit reader over the body, tracking the byte each record started in
    let total = body.len() * 6;
    let bit = |p: usize| (body[p / 6] - 63) >> (5 - p % 6) & 1;
    let mut p = 0;
    let mut v = 0usize;
    while p + 1 + k <= total {
        let at = base + start + p / 6;
        let b = bit(p);
        let mut x = 0usize;
        for q in p + 1..p + 1 + k {
            x = x << 1 | bit(q) as usize;
        }
        p += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            if x == v {
                return err(F, at, format!("loop at vertex {v}"));
            }
            if g.has_edge(x, v) {
                return err(F, at, format!("repeated edge {x}-{v}"));
            }
            g.add_edge(x, v)?;
        }
    }
    Ok(g)
}

/// `{ "n": 4, "edges": [[0, 1], ...], "labels": [...] }`
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonGraph {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl JsonGraph {
    pub fn from_graph(g: &Graph) -> Self {
        JsonGraph {
            n: g.n(),
            edges: g.edges().into_iter().map(|e| [e.0, e.1]).collect(),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(self.n, &pairs)?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.clone())?,
            None => g,
        })
    }
}

pub fn emit_json(g: &Graph) -> String {
    serde_json::to_string(&JsonGraph::from_graph(g)).expect("graph serialises")
}

pub fn parse_json(s: &str) -> Result<Graph, FormatError> {
    let j: JsonGraph = serde_json::from_str(s).map_err(|e| FormatError::Json(e.to_string()))?;
    j.to_graph()
}

/// Parses text in any of the three forms, chosen by its first byte.
pub fn parse_any(s: &str) -> Result<Graph, FormatError> {
    let t = s.trim_start();
    if t.starts_with('{') {
        parse_json(t)
    } else if t.starts_with(':') || t.as_bytes().starts_with(HEADER_S6) {
        parse_sparse6(t.trim_end())
    } else {
        parse_graph6(t.trim_end())
    }
}

/// A graph given on the command line: a readable file holding one graph,
/// otherwise the argument itself.
pub fn resolve_graph(arg: &str) -> Result<Graph, FormatError> {
    let path = Path::new(arg);
    if !arg.is_empty() && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io(format!("{arg}: {e}")))?;
        return parse_any(&text);
    }
    parse_any(arg)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Sparse6,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "sparse6" | "s6" => Ok(GraphFormat::Sparse6),
            "json" => Ok(GraphFormat::Json),
            other => Err(format!("unknown graph format {other}")),
        }
    }
}

pub fn emit(g: &Graph, f: GraphFormat) -> String {
    match f {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::Sparse6 => emit_sparse6(g),
        GraphFormat::Json => emit_json(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use brittle_core::family::{complete, path};

    #[test]
    fn fixed_strings() {
        assert_eq!(emit_graph6(&complete(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(emit_graph6(&path(4)), "Ch");
        assert_eq!(emit_graph6(&complete(4)), "C~");
        assert_eq!(emit_sparse6(&path(4)), ":Cdv");
        assert_eq!(parse_graph6(">>graph6<<Ch\n").unwrap(), path(4));
    }

    #[test]
    fn column_pairs() {
        let want = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4)];
        for (p, &e) in want.iter().enumerate() {
            assert_eq!(column_pair(p), e);
        }
    }

    #[test]
    fn long_header_orders() {
        let g = path(63);
        let s = emit_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 0, 63 + 63]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        assert_eq!(parse_sparse6(&emit_sparse6(&g)).unwrap(), g);
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("garbage\x01") {
            Err(FormatError::Parse { offset, .. }) => assert!(offset <= 8),
            other => panic!("{other:?}"),
        }
        // C with a bad byte in the data
        match parse_graph6("C\x01") {
            Err(FormatError::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        assert!(parse_graph6("B@").is_err(), "padding bit set");
        assert!(parse_graph6("").is_err());
        assert!(parse_sparse6(":").is_err());
    }
}
