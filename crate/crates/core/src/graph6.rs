//! graph6 and plain edge-list text formats.

use crate::bits::bit;
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.rows()[i] & bit(j) != 0);
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string; an optional `>>graph6<<` header and a trailing
/// line break are accepted. Offsets in errors are relative to `text`.
pub fn decode(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    let byte = |i: usize| -> Result<u8> {
        match body.get(i) {
            None => Err(Error::format(base + i, "unexpected end of graph6 data")),
            Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
            Some(&b) => Err(Error::format(base + i, format!("byte 0x{b:02x} outside graph6 range"))),
        }
    };
    let (n, mut pos) = if body.first() == Some(&126) {
        if body.get(1) == Some(&126) {
            return Err(Error::format(base + 1, "orders beyond 258047 are not supported"));
        }
        let n = ((byte(1)? as usize) << 12) | ((byte(2)? as usize) << 6) | byte(3)? as usize;
        (n, 4)
    } else {
        (byte(0)? as usize, 1)
    };
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() < pos + nbytes {
        return Err(Error::format(base + body.len(), "truncated graph6 bit stream"));
    }
    if body.len() > pos + nbytes {
        return Err(Error::format(base + pos + nbytes, "trailing bytes after graph6 data"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    let mut chunk = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                chunk = byte(pos)?;
                pos += 1;
            }
            if chunk & (1 << (5 - k % 6)) != 0 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let pad = 6 - k % 6;
        if chunk & ((1 << pad) - 1) != 0 {
            return Err(Error::format(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Reads one graph6 string per line. A blank line ends the input; offsets in
/// errors are absolute within `text`.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.trim_end_matches(['\n', '\r']);
        if content.is_empty() {
            break;
        }
        let g = decode(content).map_err(|e| match e {
            Error::Format { offset: o, message } => Error::Format {
                offset: offset + o,
                message,
            },
            other => other,
        })?;
        out.push(g);
        offset += line.len();
    }
    Ok(out)
}

/// `n m` on the first line followed by `m` lines `u v` (0-based).
pub fn encode_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut s = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses one or more concatenated edge-list records.
pub fn decode_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut tokens = Tokens::new(text);
    let mut out = Vec::new();
    while tokens.peek_nonempty() {
        let (n, off) = tokens.number("vertex count")?;
        let (m, _) = tokens.number("edge count")?;
        if n > MAX_ORDER {
            return Err(Error::format(off, format!("order {n} exceeds {MAX_ORDER}")));
        }
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (u, ou) = tokens.number("edge endpoint")?;
            let (v, ov) = tokens.number("edge endpoint")?;
            if u >= n {
                return Err(Error::format(ou, format!("vertex {u} out of range")));
            }
            if v >= n {
                return Err(Error::format(ov, format!("vertex {v} out of range")));
            }
            if u == v {
                return Err(Error::format(ou, format!("self-loop at {u}")));
            }
            edges.push((u, v));
        }
        out.push(Graph::from_edge_list(n, &edges)?);
    }
    Ok(out)
}

struct Tokens<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek_nonempty(&mut self) -> bool {
        self.skip_ws();
        self.pos < self.text.len()
    }

    fn number(&mut self, what: &str) -> Result<(usize, usize)> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest.find(|c: char| c.is_whitespace()).unwrap_or(rest.len());
        if len == 0 {
            return Err(Error::format(start, format!("expected {what}, found end of input")));
        }
        let tok = &rest[..len];
        self.pos += len;
        tok.parse()
            .map(|v| (v, start))
            .map_err(|_| Error::format(start, format!("expected {what}, found {tok:?}")))
    }
}
