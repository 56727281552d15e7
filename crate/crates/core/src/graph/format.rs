//! Text encodings of graphs: graph6 (short form) and a plain edge list.

use alloc::string::String;
use alloc::vec::Vec;

use super::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Decodes one line of graph6 with `n <= 62`. Format vertex `0` becomes
/// label `1`.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, data) = bytes.split_first().ok_or(GraphError::Graph6("empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(GraphError::Graph6("malformed header byte"));
    }
    if head == 126 {
        return Err(GraphError::Graph6("only the short form (n <= 62) is supported"));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(GraphError::NoVertices);
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() < nbytes {
        return Err(GraphError::Graph6("adjacency data too short"));
    }
    if data.len() > nbytes {
        return Err(GraphError::Graph6("trailing garbage after adjacency data"));
    }
    if data.iter().any(|b| !(63..=126).contains(b)) {
        return Err(GraphError::Graph6("data byte outside 63..=126"));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i + 1, j + 1)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes `g` as short-form graph6 (requires `n <= 62`).
pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > 62 {
        return Err(GraphError::Graph6("only the short form (n <= 62) is supported"));
    }
    let mut out = Vec::with_capacity(1 + (n * n) / 12 + 1);
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i + 1, j + 1) as u8;
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
    Ok(out.into_iter().map(char::from).collect())
}

/// Parses the edge-list format: a first line `n <count>`, then one
/// `i j` pair per line. Blank lines and `#` comments are ignored and
/// duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        msg: "missing `n <count>` header",
    })?;
    let mut head = header.split_whitespace();
    let n = match (head.next(), head.next(), head.next()) {
        (Some("n"), Some(count), None) => count.parse::<usize>().map_err(|_| GraphError::Parse {
            line: line_no,
            msg: "vertex count is not a nonnegative integer",
        })?,
        _ => {
            return Err(GraphError::Parse {
                line: line_no,
                msg: "expected `n <count>`",
            })
        }
    };
    let mut g = Graph::new(n)?;
    for (line, l) in lines {
        let mut parts = l.split_whitespace().map(str::parse::<usize>);
        match (parts.next(), parts.next(), parts.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => g.add_edge(a, b)?,
            _ => {
                return Err(GraphError::Parse {
                    line,
                    msg: "expected two vertex labels",
                })
            }
        }
    }
    Ok(g)
}
