//! The `poset v1` text format.
//!
//! ```text
//! poset v1
//! elements: 4
//! labels: a b c d
//! covers:
//! 0 1
//! 2 3
//! ```
//!
//! The labels line is optional. Each cover line `i j` means `i < j`;
//! the transitive closure is applied on load. Blank lines and lines
//! starting with `#` are ignored.

use super::Poset;
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, "poset v1")) => {}
        Some((no, other)) => return Err(parse_err(no, format!("expected `poset v1`, found `{other}`"))),
        None => return Err(parse_err(0, "empty input")),
    }
    let (no, line) = lines.next().ok_or_else(|| parse_err(0, "missing `elements:` line"))?;
    let n: usize = line
        .strip_prefix("elements:")
        .ok_or_else(|| parse_err(no, "expected `elements: <n>`"))?
        .trim()
        .parse()
        .map_err(|_| parse_err(no, "element count is not a number"))?;

    let (mut no, mut line) = lines.next().ok_or_else(|| parse_err(0, "missing `covers:` line"))?;
    let mut labels: Option<Vec<String>> = None;
    if let Some(rest) = line.strip_prefix("labels:") {
        let ls: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if ls.len() != n {
            return Err(parse_err(no, format!("expected {n} labels, found {}", ls.len())));
        }
        labels = Some(ls);
        (no, line) = lines.next().ok_or_else(|| parse_err(0, "missing `covers:` line"))?;
    }
    if line != "covers:" {
        return Err(parse_err(no, format!("expected `covers:`, found `{line}`")));
    }

    let resolve = |tok: &str, no: usize| -> Result<usize> {
        if let Some(ls) = &labels {
            if let Some(i) = ls.iter().position(|l| l == tok) {
                return Ok(i);
            }
        }
        match tok.parse::<usize>() {
            Ok(i) if i < n => Ok(i),
            Ok(i) => Err(parse_err(no, format!("index {i} out of range for {n} elements"))),
            Err(_) => Err(parse_err(no, format!("unknown element `{tok}`"))),
        }
    };
    let mut pairs = Vec::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(no, "expected a pair `i j`"));
        }
        pairs.push((resolve(toks[0], no)?, resolve(toks[1], no)?));
    }
    let p = Poset::from_relation(n, &pairs)?;
    match labels {
        Some(ls) => p.with_labels(ls),
        None => Ok(p),
    }
}

/// Serializes with the Hasse covers only.
pub fn write_poset(p: &Poset) -> String {
    let mut out = format!("poset v1\nelements: {}\n", p.len());
    if let Some(ls) = p.labels() {
        out.push_str("labels: ");
        out.push_str(&ls.join(" "));
        out.push('\n');
    }
    out.push_str("covers:\n");
    for (i, j) in p.covers() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}
