//! Exact checks of the window properties: n-window, orientable,
//! disjoint, o-disjoint and primitive, for cycles and finite words.
//!
//! Each check returns `Ok(Ok(()))` when the property holds and
//! `Ok(Err(counterexample))` when it fails; the outer `Err` is reserved
//! for malformed requests (bad order, word shorter than the window,
//! mixed modes). Counterexamples are the lexicographically least
//! offending position pair.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seq::{Mode, SeqView, Tuple, MAX_ORDER};

/// Orders up to this use a dense bitmap for the first pass.
const DENSE_ORDER: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ViolationKind {
    /// Window `i` equals window `j`.
    Forward,
    /// Window `i` equals the reversal of window `j`.
    Reversed,
    /// Window `i` is its own reversal.
    Symmetric,
}

/// Two offending positions and the tuple they share. For two-sequence
/// checks `i` indexes the first sequence and `j` the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Counterexample {
    pub i: usize,
    pub j: usize,
    pub kind: ViolationKind,
    pub tuple: String,
}

impl Counterexample {
    fn new(i: usize, j: usize, kind: ViolationKind, value: u64, n: usize) -> Self {
        Self {
            i,
            j,
            kind,
            tuple: Tuple::from_raw(value, n).to_string(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::Forward => "repeated",
            ViolationKind::Reversed => "reversed",
            ViolationKind::Symmetric => "symmetric",
        };
        write!(f, "{kind} tuple {} at ({}, {})", self.tuple, self.i, self.j)
    }
}

pub type Verdict = std::result::Result<(), Counterexample>;

fn reverse(value: u64, n: usize) -> u64 {
    value.reverse_bits() >> (64 - n)
}

fn check_request(view: &SeqView<'_>, n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::UnsupportedOrder(n));
    }
    if view.bits.is_empty() {
        return Err(Error::Empty);
    }
    if view.mode == Mode::Aperiodic && view.bits.len() < n {
        return Err(Error::TooShort {
            needed: n,
            len: view.bits.len(),
        });
    }
    Ok(())
}

enum Seen {
    Dense(Vec<u64>),
    Sparse(HashSet<u64>),
}

impl Seen {
    fn new(n: usize, expected: usize) -> Self {
        // A bitmap beats hashing whenever it is not much larger than the
        // table a hash set would need.
        let dense_bytes = 1u64 << n.min(40) >> 3;
        if n <= DENSE_ORDER || (n <= 34 && dense_bytes <= 16 * expected as u64) {
            Seen::Dense(vec![0; (1usize << n).div_ceil(64)])
        } else {
            Seen::Sparse(HashSet::with_capacity(expected))
        }
    }

    /// Returns false when `v` was already present.
    fn insert(&mut self, v: u64) -> bool {
        match self {
            Seen::Dense(words) => {
                let (w, b) = ((v / 64) as usize, v % 64);
                let fresh = words[w] >> b & 1 == 0;
                words[w] |= 1 << b;
                fresh
            }
            Seen::Sparse(set) => set.insert(v),
        }
    }
}

/// Every window occurs at most once (cyclically for cycles).
pub fn verify_nwindow<'a>(seq: impl Into<SeqView<'a>>, n: usize) -> Result<Verdict> {
    let view = seq.into();
    check_request(&view, n)?;
    let mut seen = Seen::new(n, view.window_count(n));
    if view.windows(n).all(|w| seen.insert(w)) {
        return Ok(Ok(()));
    }

    let mut first: HashMap<u64, usize> = HashMap::new();
    let mut best: Option<(usize, usize, u64)> = None;
    for (j, w) in view.windows(n).enumerate() {
        match first.get(&w) {
            Some(&i) => {
                if best.is_none_or(|(bi, _, _)| i < bi) {
                    best = Some((i, j, w));
                }
            }
            None => {
                first.insert(w, j);
            }
        }
    }
    let (i, j, w) = best.expect("first pass found a repeat");
    Ok(Err(Counterexample::new(i, j, ViolationKind::Forward, w, n)))
}

/// No window repeats and no window equals the reversal of any window,
/// itself included.
pub fn verify_orientable<'a>(seq: impl Into<SeqView<'a>>, n: usize) -> Result<Verdict> {
    let view = seq.into();
    check_request(&view, n)?;
    let mut seen = Seen::new(n, 2 * view.window_count(n));
    let clean = view.windows(n).all(|w| {
        let r = reverse(w, n);
        r != w && seen.insert(w) && seen.insert(r)
    });
    if clean {
        return Ok(Ok(()));
    }

    let values: Vec<u64> = view.windows(n).collect();
    let mut positions: HashMap<u64, Vec<usize>> = HashMap::new();
    for (i, &w) in values.iter().enumerate() {
        positions.entry(w).or_default().push(i);
    }
    let next_after = |value: u64, i: usize| -> Option<usize> {
        let list = positions.get(&value)?;
        let k = list.partition_point(|&p| p <= i);
        list.get(k).copied()
    };
    for (i, &w) in values.iter().enumerate() {
        let r = reverse(w, n);
        if r == w {
            return Ok(Err(Counterexample::new(
                i,
                i,
                ViolationKind::Symmetric,
                w,
                n,
            )));
        }
        let forward = next_after(w, i).map(|j| (j, ViolationKind::Forward));
        let reversed = next_after(r, i).map(|j| (j, ViolationKind::Reversed));
        let hit = match (forward, reversed) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        if let Some((j, kind)) = hit {
            return Ok(Err(Counterexample::new(i, j, kind, w, n)));
        }
    }
    unreachable!("first pass found a collision")
}

fn pair_check<'a>(
    s: SeqView<'a>,
    t: SeqView<'a>,
    n: usize,
    with_reversal: bool,
) -> Result<Verdict> {
    check_request(&s, n)?;
    check_request(&t, n)?;
    if s.mode != t.mode {
        return Err(Error::Contract(format!(
            "cannot compare a {} sequence with a {} one",
            s.mode, t.mode
        )));
    }
    let mut forward: HashMap<u64, usize> = HashMap::new();
    let mut reversed: HashMap<u64, usize> = HashMap::new();
    for (j, w) in t.windows(n).enumerate() {
        forward.entry(w).or_insert(j);
        if with_reversal {
            reversed.entry(reverse(w, n)).or_insert(j);
        }
    }
    for (i, w) in s.windows(n).enumerate() {
        let f = forward.get(&w).map(|&j| (j, ViolationKind::Forward));
        let r = reversed.get(&w).map(|&j| (j, ViolationKind::Reversed));
        let hit = match (f, r) {
            (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
            (a, b) => a.or(b),
        };
        if let Some((j, kind)) = hit {
            return Ok(Err(Counterexample::new(i, j, kind, w, n)));
        }
    }
    Ok(Ok(()))
}

/// The two sequences share no `n`-tuple.
pub fn verify_disjoint<'a>(
    s: impl Into<SeqView<'a>>,
    t: impl Into<SeqView<'a>>,
    n: usize,
) -> Result<Verdict> {
    pair_check(s.into(), t.into(), n, false)
}

/// The two sequences share no `n`-tuple in either reading direction.
pub fn verify_o_disjoint<'a>(
    s: impl Into<SeqView<'a>>,
    t: impl Into<SeqView<'a>>,
    n: usize,
) -> Result<Verdict> {
    pair_check(s.into(), t.into(), n, true)
}

/// The sequence is disjoint from its bitwise complement.
pub fn verify_primitive<'a>(seq: impl Into<SeqView<'a>>, n: usize) -> Result<Verdict> {
    let view = seq.into();
    let complement: Vec<u8> = view.bits.iter().map(|b| b ^ 1).collect();
    let other = SeqView {
        bits: &complement,
        mode: view.mode,
    };
    pair_check(view, other, n, false)
}
