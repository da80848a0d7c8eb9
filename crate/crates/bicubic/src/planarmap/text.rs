//! Line-based text format.
//!
//! ```text
//! bicubicmap 1
//! darts 6
//! root 1
//! vertex 1 3 5
//! vertex 2 6 4
//! ```
//!
//! Darts are numbered from 1 and `2i-1`, `2i` form an edge. Each `vertex`
//! line lists its darts counterclockwise. `#` starts a comment.

use std::fmt::Write as _;

use thiserror::Error;

use super::RootedMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Parses and fully validates a map (bicubic, connected, planar).
pub fn parse_map(src: &str) -> Result<RootedMap, ParseError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut expect = |key: &str, last: usize| -> Result<(usize, String), ParseError> {
        let (no, line) = lines.next().ok_or_else(|| err(last, format!("missing `{key}` line")))?;
        let mut it = line.split_whitespace();
        if it.next() != Some(key) {
            return Err(err(no, format!("expected `{key}`")));
        }
        let rest: Vec<&str> = it.collect();
        if rest.len() != 1 {
            return Err(err(no, format!("`{key}` takes one value")));
        }
        Ok((no, rest[0].to_string()))
    };

    let (no, version) = expect("bicubicmap", 0)?;
    if version != "1" {
        return Err(err(no, format!("unsupported version {version}")));
    }
    let (no, darts) = expect("darts", no)?;
    let n: usize = darts.parse().map_err(|_| err(no, format!("bad dart count {darts:?}")))?;
    if n == 0 || n % 2 == 1 {
        return Err(err(no, format!("dart count must be positive and even, got {n}")));
    }
    let (no, root) = expect("root", no)?;
    let root: usize = root.parse().map_err(|_| err(no, format!("bad root {root:?}")))?;
    if root == 0 || root > n {
        return Err(err(no, format!("root {root} out of range 1..{n}")));
    }

    let mut sigma = vec![usize::MAX; n];
    let mut last = no;
    for (no, line) in lines {
        last = no;
        let mut it = line.split_whitespace();
        if it.next() != Some("vertex") {
            return Err(err(no, "expected `vertex`"));
        }
        let mut ds = Vec::new();
        for tok in it {
            let d: usize = tok.parse().map_err(|_| err(no, format!("bad dart {tok:?}")))?;
            if d == 0 || d > n {
                return Err(err(no, format!("dart {d} out of range 1..{n}")));
            }
            if sigma[d - 1] != usize::MAX || ds.contains(&(d - 1)) {
                return Err(err(no, format!("dart {d} appears twice")));
            }
            ds.push(d - 1);
        }
        if ds.len() != 3 {
            return Err(err(no, format!("vertex has degree {}, expected 3", ds.len())));
        }
        for k in 0..3 {
            sigma[ds[k]] = ds[(k + 1) % 3];
        }
    }
    if let Some(d) = sigma.iter().position(|&s| s == usize::MAX) {
        return Err(err(last, format!("dart {} is not on any vertex", d + 1)));
    }
    let map = RootedMap::new(sigma, root - 1).map_err(|e| err(last, e.to_string()))?;
    let report = map.validate();
    if !report.is_valid() {
        return Err(err(last, format!("invalid map: {} check failed", report.failures().join(", "))));
    }
    Ok(map)
}

/// Serializes a map; vertices ordered by their smallest dart.
pub fn write_map(map: &RootedMap) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "bicubicmap 1");
    let _ = writeln!(out, "darts {}", map.num_darts());
    let _ = writeln!(out, "root {}", map.root() + 1);
    for cycle in map.vertices().cycles {
        out.push_str("vertex");
        for d in cycle {
            let _ = write!(out, " {}", d + 1);
        }
        out.push('\n');
    }
    out
}
