//! Position and direction lookup for orientable sequences.
//!
//! A reader that sees `n` consecutive bits of an orientable sequence,
//! read in either direction, can recover where it is and which way it is
//! travelling. The index here is a plain table over every window and its
//! reversal.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Mode, SeqView, Tuple, MAX_ORDER};
use crate::verify::verify_orientable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Forward,
    Reverse,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Forward => "forward",
            Orientation::Reverse => "reverse",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(Orientation::Forward),
            "reverse" => Ok(Orientation::Reverse),
            other => Err(Error::Parse(format!("unknown orientation {other:?}"))),
        }
    }
}

/// Where a window sits in the source: `position` is the start of the
/// forward window whose bits (or reversed bits) were read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Location {
    pub position: usize,
    pub orientation: Orientation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocatorIndex {
    order: usize,
    mode: Mode,
    source_len: usize,
    entries: BTreeMap<u64, Location>,
}

impl LocatorIndex {
    /// Indexes every window of `seq` in both directions. Refuses sources
    /// that are not orientable at order `n`.
    pub fn build<'a>(seq: impl Into<SeqView<'a>>, n: usize) -> Result<Self> {
        let view = seq.into();
        if let Err(counterexample) = verify_orientable(view, n)? {
            return Err(Error::Violation {
                property: "orientable",
                order: n,
                counterexample,
            });
        }
        let mut entries = BTreeMap::new();
        for (position, w) in view.windows(n).enumerate() {
            let t = Tuple::from_raw(w, n);
            entries.insert(
                w,
                Location {
                    position,
                    orientation: Orientation::Forward,
                },
            );
            entries.insert(
                t.reverse().value(),
                Location {
                    position,
                    orientation: Orientation::Reverse,
                },
            );
        }
        Ok(Self {
            order: n,
            mode: view.mode,
            source_len: view.bits.len(),
            entries,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn locate(&self, t: &Tuple) -> Result<Option<Location>> {
        if t.order() != self.order {
            return Err(Error::OrderMismatch {
                expected: self.order,
                got: t.order(),
            });
        }
        Ok(self.entries.get(&t.value()).copied())
    }

    /// Entries in ascending tuple order.
    pub fn iter(&self) -> impl Iterator<Item = (Tuple, Location)> + '_ {
        self.entries
            .iter()
            .map(|(&v, &loc)| (Tuple::from_raw(v, self.order), loc))
    }

    /// Stable text form: a header comment, then one
    /// `<tuple> <position> <orientation>` line per entry in tuple order.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# locator mode={} order={} length={}\n",
            self.mode, self.order, self.source_len
        );
        for (t, loc) in self.iter() {
            writeln!(out, "{t} {} {}", loc.position, loc.orientation).expect("write to string");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(Mode, usize, usize)> = None;
        let mut entries = BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if let Some(comment) = line.strip_prefix('#') {
                if header.is_none() && comment.trim_start().starts_with("locator") {
                    header = Some(parse_header(comment)?);
                }
                continue;
            }
            let (_, order, _) =
                header.ok_or_else(|| Error::Parse("missing locator header".into()))?;
            let mut fields = line.split_whitespace();
            let (Some(t), Some(pos), Some(dir), None) =
                (fields.next(), fields.next(), fields.next(), fields.next())
            else {
                return Err(Error::Parse(format!("bad index line {line:?}")));
            };
            let t: Tuple = t.parse()?;
            if t.order() != order {
                return Err(Error::OrderMismatch {
                    expected: order,
                    got: t.order(),
                });
            }
            let position = pos
                .parse()
                .map_err(|_| Error::Parse(format!("bad position {pos:?}")))?;
            let loc = Location {
                position,
                orientation: dir.parse()?,
            };
            if entries.insert(t.value(), loc).is_some() {
                return Err(Error::Parse(format!("duplicate tuple {t}")));
            }
        }
        let (mode, order, source_len) =
            header.ok_or_else(|| Error::Parse("missing locator header".into()))?;
        Ok(Self {
            order,
            mode,
            source_len,
            entries,
        })
    }
}

fn parse_header(comment: &str) -> Result<(Mode, usize, usize)> {
    let mut mode = None;
    let mut order = None;
    let mut len = None;
    for field in comment.split_whitespace().skip(1) {
        match field.split_once('=') {
            Some(("mode", v)) => mode = Some(v.parse()?),
            Some(("order", v)) => order = v.parse().ok(),
            Some(("length", v)) => len = v.parse().ok(),
            _ => {}
        }
    }
    match (mode, order, len) {
        (Some(m), Some(o), Some(l)) if (1..=MAX_ORDER).contains(&o) => Ok((m, o, l)),
        _ => Err(Error::Parse(format!("bad locator header {comment:?}"))),
    }
}
