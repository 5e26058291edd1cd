//! Plain-text design format.
//!
//! ```text
//! 7 3 0          # v k [index-base], base defaults to 0
//! # name: fano
//! 0 1 3
//! 1 2 4
//! ...
//! ```

use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use super::{Block, Design};
use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexBase {
    Zero,
    One,
}

pub fn parse_design(text: &str) -> Result<Design> {
    let mut header: Option<(usize, usize, IndexBase)> = None;
    let mut name = String::new();
    let mut blocks: Vec<Block> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let (content, comment) = match raw.find('#') {
            Some(i) => (&raw[..i], Some(&raw[i + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            if let Some(n) = c.trim().strip_prefix("name:") {
                name = n.trim().to_string();
            }
        }
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let nums: Vec<usize> = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::parse(lineno, format!("not a point label: {tok:?}")))
            })
            .collect::<Result<_>>()?;
        match header {
            None => {
                let base = match nums.as_slice() {
                    [_, _] | [_, _, 0] => IndexBase::Zero,
                    [_, _, 1] => IndexBase::One,
                    _ => {
                        return Err(Error::parse(
                            lineno,
                            "header must be `v k [index-base]` with base 0 or 1",
                        ))
                    }
                };
                header = Some((nums[0], nums[1], base));
            }
            Some((v, _, base)) => {
                let mut block = PointSet::new();
                for &p in &nums {
                    let p = match base {
                        IndexBase::Zero => p,
                        IndexBase::One => p
                            .checked_sub(1)
                            .ok_or_else(|| Error::parse(lineno, "point 0 in a 1-indexed file"))?,
                    };
                    if p >= v {
                        return Err(Error::parse(lineno, format!("point out of range for v = {v}")));
                    }
                    if block.contains(p) {
                        return Err(Error::parse(lineno, "repeated point in block"));
                    }
                    block.insert(p);
                }
                blocks.push(block);
            }
        }
    }
    let (v, k, _) = header.ok_or_else(|| Error::parse(1, "missing `v k` header"))?;
    Design::new(v, k, blocks, name)
}

pub fn read_design(path: impl AsRef<Path>) -> Result<Design> {
    let text = std::fs::read_to_string(path.as_ref())?;
    let mut d = parse_design(&text)?;
    if d.name().is_empty() {
        let stem = path.as_ref().file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        d = d.with_name(stem);
    }
    Ok(d)
}

fn canonical_body(design: &Design) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", design.v(), design.k()).unwrap();
    for b in design.sorted_blocks() {
        writeln!(out, "{b}").unwrap();
    }
    out
}

/// Canonical form: 0-indexed header, name comment, blocks sorted lexicographically.
pub fn write_design(design: &Design) -> String {
    let body = canonical_body(design);
    let (header, rest) = body.split_once('\n').expect("header line");
    let mut out = format!("{header} 0\n");
    if !design.name().is_empty() {
        writeln!(out, "# name: {}", design.name()).unwrap();
    }
    out.push_str(rest);
    out
}

/// SHA-256 of the canonical block list; independent of labels' order and the name.
pub fn design_hash(design: &Design) -> String {
    hex::encode(Sha256::digest(canonical_body(design).as_bytes()))
}
