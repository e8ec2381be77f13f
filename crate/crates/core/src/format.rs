//! Plain-text sequence files.
//!
//! ```text
//! # mode=periodic order=6
//! 001010111
//! ```
//!
//! Lines starting with `#` are comments; `mode=` and `order=` fields in
//! any comment are picked up, unknown fields are ignored. Exactly one
//! non-comment line holds the bits.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::seq::{Mode, Sequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceFile {
    pub sequence: Sequence,
    pub order: Option<usize>,
}

/// Parses a sequence file. `mode` overrides the header; without either
/// the sequence is read as periodic.
pub fn parse_sequence(text: &str, mode: Option<Mode>) -> Result<SequenceFile> {
    let mut header_mode = None;
    let mut order = None;
    let mut body: Option<&str> = None;
    for line in text.lines().map(str::trim) {
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            for field in comment.split_whitespace() {
                match field.split_once('=') {
                    Some(("mode", v)) => header_mode = v.parse().ok(),
                    Some(("order", v)) => order = v.parse().ok(),
                    _ => {}
                }
            }
            continue;
        }
        if body.replace(line).is_some() {
            return Err(Error::Parse("more than one line of bits".into()));
        }
    }
    let body = body.ok_or(Error::Empty)?;
    let body = body.trim_start_matches('[').trim_end_matches(']');
    let bits = body
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::InvalidBit(other)),
        })
        .collect::<Result<Vec<u8>>>()?;
    let mode = mode.or(header_mode).unwrap_or(Mode::Periodic);
    Ok(SequenceFile {
        sequence: Sequence::from_bits(bits, mode)?,
        order,
    })
}

pub fn read_sequence(path: &Path, mode: Option<Mode>) -> Result<SequenceFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    parse_sequence(&text, mode)
}

/// Header comment plus the bits on one line.
pub fn format_sequence(seq: &Sequence, order: Option<usize>) -> String {
    match order {
        Some(n) => format!("# mode={} order={n}\n{seq}\n", seq.mode()),
        None => format!("# mode={}\n{seq}\n", seq.mode()),
    }
}
