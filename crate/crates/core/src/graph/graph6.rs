//! graph6 codec. Sizes below 63 use the one-byte header; 63 and 64 use the
//! `~` + three-byte form.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(chunk + BIAS);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn graph6_decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let value = |i: usize| -> Result<u8> {
        match bytes.get(i) {
            Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
            Some(_) => Err(malformed(i, "byte outside 63..=126")),
            None => Err(malformed(i, "unexpected end of input")),
        }
    };
    let (n, header) = match bytes.first() {
        None => return Err(malformed(0, "empty input")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(malformed(
                    1,
                    "graphs with more than 258047 vertices unsupported",
                ));
            }
            let n = (0..3).try_fold(0usize, |acc, i| {
                Ok::<_, Error>(acc << 6 | value(1 + i)? as usize)
            })?;
            (n, 4)
        }
        Some(_) => (value(0)? as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(malformed(
            0,
            format!("{n} vertices exceeds cap {MAX_VERTICES}"),
        ));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let body_len = pairs.div_ceil(6);
    if bytes.len() != header + body_len {
        let offset = bytes.len().min(header + body_len);
        return Err(malformed(
            offset,
            format!(
                "expected {} bytes, found {}",
                header + body_len,
                bytes.len()
            ),
        ));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(header + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = header + body_len - 1;
        let pad_bits = 6 - k % 6;
        if value(last)? & ((1 << pad_bits) - 1) != 0 {
            return Err(malformed(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}
