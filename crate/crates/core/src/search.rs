//! Exhaustive depth-first search for the longest orientable cycle or word
//! of a given order.
//!
//! Sequences are walks in the de Bruijn graph on `(n-1)`-bit vertices;
//! each step claims an `n`-tuple together with its reversal, and
//! symmetric tuples are never claimable. Branches that cannot beat the
//! best result so far are cut, using the number of still-claimable tuple
//! pairs and the known upper bounds.
//!
//! The walk is iterative so it can stop after a node budget and resume
//! from a [`Checkpoint`] with identical results.

use serde::{Deserialize, Serialize};

use crate::aperiodic::burns_bound;
use crate::error::{Error, Result};
use crate::periodic::dai_bound;
use crate::seq::{minimal_period, Mode};

/// Largest order the dense claim table supports.
pub const MAX_SEARCH_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    /// Stop after expanding this many nodes; `None` runs to completion.
    pub budget: Option<u64>,
    /// Cut branches that cannot beat the best result.
    pub prune: bool,
    /// Fix the starting window and quotient by reversal and complement.
    pub reduce_symmetry: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            budget: None,
            prune: true,
            reduce_symmetry: true,
        }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }
}

/// Search state at the moment a budget ran out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub order: usize,
    pub mode: Mode,
    pub prune: bool,
    pub reduce_symmetry: bool,
    pub start_index: usize,
    pub path: String,
    pub stack: Vec<u8>,
    pub best: usize,
    pub best_bits: Option<String>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub order: usize,
    pub mode: Mode,
    /// Period (periodic) or length (aperiodic) of the best sequence found.
    pub best: usize,
    /// Canonical form of the best sequence: least rotation (cycles) over
    /// the sequence, its reversal and their complements.
    pub witness: Option<String>,
    /// True when the search space was fully explored, so `best` is optimal.
    pub exhaustive: bool,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checkpoint: Option<Checkpoint>,
}

/// Maximum period of an orientable cycle of order `n >= 5`.
pub fn max_orientable_period(n: usize, config: &SearchConfig) -> Result<SearchResult> {
    if n < 5 {
        return Err(Error::Domain {
            what: "max_orientable_period",
            order: n,
            min: 5,
        });
    }
    Search::new(n, Mode::Periodic, config.prune, config.reduce_symmetry)?.run(config.budget)
}

/// Maximum length of an aperiodic orientable word of order `n >= 2`.
pub fn max_aos_length(n: usize, config: &SearchConfig) -> Result<SearchResult> {
    if n < 2 {
        return Err(Error::Domain {
            what: "max_aos_length",
            order: n,
            min: 2,
        });
    }
    Search::new(n, Mode::Aperiodic, config.prune, config.reduce_symmetry)?.run(config.budget)
}

/// Continues an interrupted search with a fresh node budget (counted from
/// the checkpoint's node total).
pub fn resume(checkpoint: &Checkpoint, budget: Option<u64>) -> Result<SearchResult> {
    let mut search = Search::new(
        checkpoint.order,
        checkpoint.mode,
        checkpoint.prune,
        checkpoint.reduce_symmetry,
    )?;
    search.restore(checkpoint)?;
    search.run(budget)
}

fn bits_of(value: u64, n: usize) -> impl Iterator<Item = u8> {
    (0..n).rev().map(move |k| ((value >> k) & 1) as u8)
}

fn to_string(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 1 { '1' } else { '0' })
        .collect()
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::InvalidBit(other)),
        })
        .collect()
}

/// Least string over the symmetry class of a sequence.
pub fn canonical_form(bits: &[u8], mode: Mode) -> String {
    let variants = {
        let rev: Vec<u8> = bits.iter().rev().copied().collect();
        let comp: Vec<u8> = bits.iter().map(|b| b ^ 1).collect();
        let comp_rev: Vec<u8> = rev.iter().map(|b| b ^ 1).collect();
        [bits.to_vec(), rev, comp, comp_rev]
    };
    let mut best: Option<Vec<u8>> = None;
    for v in variants {
        let candidates: Vec<Vec<u8>> = match mode {
            Mode::Aperiodic => vec![v],
            Mode::Periodic => (0..v.len())
                .map(|k| {
                    let mut r = v.clone();
                    r.rotate_left(k);
                    r
                })
                .collect(),
        };
        for c in candidates {
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    to_string(&best.unwrap_or_default())
}

struct Search {
    n: usize,
    mode: Mode,
    mask: u64,
    prune: bool,
    reduce: bool,
    cap: usize,
    starts: Vec<u64>,
    start_index: usize,
    claimed: Vec<bool>,
    free: usize,
    path: Vec<u8>,
    windows: Vec<u64>,
    stack: Vec<u8>,
    best: usize,
    best_bits: Option<Vec<u8>>,
    nodes: u64,
}

impl Search {
    fn new(n: usize, mode: Mode, prune: bool, reduce: bool) -> Result<Self> {
        if n > MAX_SEARCH_ORDER {
            return Err(Error::Domain {
                what: "search (order too large)",
                order: n,
                min: 2,
            });
        }
        let cap = match mode {
            Mode::Periodic => dai_bound(n)? as usize,
            Mode::Aperiodic => burns_bound(n)? as usize,
        };
        let mut s = Self {
            n,
            mode,
            mask: (1u64 << n) - 1,
            prune,
            reduce,
            cap,
            starts: Vec::new(),
            start_index: 0,
            claimed: vec![false; 1 << n],
            free: 0,
            path: Vec::new(),
            windows: Vec::new(),
            stack: Vec::new(),
            best: 0,
            best_bits: None,
            nodes: 0,
        };
        s.starts = (0..1u64 << n).filter(|&w| s.is_start(w)).collect();
        Ok(s)
    }

    fn rev(&self, w: u64) -> u64 {
        w.reverse_bits() >> (64 - self.n)
    }

    fn key(&self, w: u64) -> u64 {
        w.min(self.rev(w))
    }

    fn comp(&self, w: u64) -> u64 {
        !w & self.mask
    }

    fn is_start(&self, w: u64) -> bool {
        let r = self.rev(w);
        if r == w {
            return false;
        }
        if !self.reduce {
            return true;
        }
        match self.mode {
            Mode::Periodic => w < r && w <= self.key(self.comp(w)),
            Mode::Aperiodic => w >> (self.n - 1) == 0,
        }
    }

    /// Whether window `w` may appear in a sequence started at `w0`,
    /// ignoring what is already claimed.
    fn allowed(&self, w: u64, w0: u64) -> bool {
        if self.rev(w) == w {
            return false;
        }
        if !self.reduce || self.mode == Mode::Aperiodic {
            return true;
        }
        self.key(w) > w0 && self.key(self.comp(w)) >= w0
    }

    fn begin(&mut self, w0: u64) {
        self.claimed.iter_mut().for_each(|c| *c = false);
        self.free = (0..=self.mask)
            .filter(|&w| w < self.rev(w) && w != self.key(w0) && self.allowed(w, w0))
            .count();
        self.claim(w0);
        self.path = bits_of(w0, self.n).collect();
        self.windows = vec![w0];
    }

    fn claim(&mut self, w: u64) {
        let r = self.rev(w);
        self.claimed[w as usize] = true;
        self.claimed[r as usize] = true;
    }

    fn release(&mut self, w: u64) {
        let r = self.rev(w);
        self.claimed[w as usize] = false;
        self.claimed[r as usize] = false;
    }

    /// Records the current node if it beats the best so far.
    fn consider(&mut self) {
        let value = match self.mode {
            Mode::Aperiodic => self.path.len(),
            Mode::Periodic => {
                let k = self.n - 1;
                let t = self.path.len();
                if self.path[t - k..] != self.path[..k] {
                    return;
                }
                self.windows.len()
            }
        };
        if value > self.best {
            let bits = match self.mode {
                Mode::Aperiodic => self.path.clone(),
                Mode::Periodic => self.path[..value].to_vec(),
            };
            debug_assert!(self.mode == Mode::Aperiodic || minimal_period(&bits) == bits.len());
            self.best = value;
            self.best_bits = Some(bits);
        }
    }

    /// Best value any extension of the current node could reach.
    fn potential(&self) -> usize {
        let base = match self.mode {
            Mode::Aperiodic => self.path.len(),
            Mode::Periodic => self.windows.len(),
        };
        (base + self.free).min(self.cap)
    }

    fn pop_window(&mut self) {
        let w = self.windows.pop().expect("non-empty walk");
        self.release(w);
        self.path.pop();
        if !self.windows.is_empty() {
            self.free += 1;
        }
    }

    fn run(mut self, budget: Option<u64>) -> Result<SearchResult> {
        loop {
            if self.prune && self.best >= self.cap {
                return Ok(self.finish(true));
            }
            if self.stack.is_empty() {
                if self.start_index >= self.starts.len() {
                    return Ok(self.finish(true));
                }
                if budget.is_some_and(|b| self.nodes >= b) {
                    return Ok(self.finish(false));
                }
                let w0 = self.starts[self.start_index];
                self.begin(w0);
                self.nodes += 1;
                self.consider();
                if self.prune && self.potential() <= self.best {
                    self.pop_window();
                    self.start_index += 1;
                } else {
                    self.stack.push(0);
                }
                continue;
            }
            let top = *self.stack.last().expect("non-empty");
            if top >= 2 {
                self.stack.pop();
                self.pop_window();
                if self.windows.is_empty() {
                    self.start_index += 1;
                }
                continue;
            }
            if budget.is_some_and(|b| self.nodes >= b) {
                return Ok(self.finish(false));
            }
            *self.stack.last_mut().expect("non-empty") += 1;
            let w = ((self.windows.last().expect("non-empty") << 1) | top as u64) & self.mask;
            let w0 = self.windows[0];
            if self.claimed[w as usize] || !self.allowed(w, w0) {
                continue;
            }
            self.claim(w);
            self.free -= 1;
            self.path.push(top);
            self.windows.push(w);
            self.nodes += 1;
            self.consider();
            if self.prune && self.potential() <= self.best {
                self.pop_window();
            } else {
                self.stack.push(0);
            }
        }
    }

    fn restore(&mut self, cp: &Checkpoint) -> Result<()> {
        let bad = |what: &str| Err(Error::Parse(format!("inconsistent checkpoint: {what}")));
        self.best = cp.best;
        self.best_bits = cp.best_bits.as_deref().map(parse_bits).transpose()?;
        self.nodes = cp.nodes;
        self.start_index = cp.start_index;
        if cp.stack.is_empty() {
            if !cp.path.is_empty() {
                return bad("path without stack");
            }
            return Ok(());
        }
        let path = parse_bits(&cp.path)?;
        if path.len() < self.n || path.len() - self.n + 1 != cp.stack.len() {
            return bad("path and stack lengths disagree");
        }
        let Some(&w0) = self.starts.get(cp.start_index) else {
            return bad("start index out of range");
        };
        if path[..self.n]
            .iter()
            .fold(0u64, |a, &b| (a << 1) | b as u64)
            != w0
        {
            return bad("path does not begin at the start window");
        }
        self.begin(w0);
        for &b in &path[self.n..] {
            let w = ((self.windows.last().expect("non-empty") << 1) | b as u64) & self.mask;
            if self.claimed[w as usize] || !self.allowed(w, w0) {
                return bad("path repeats a window");
            }
            self.claim(w);
            self.free -= 1;
            self.path.push(b);
            self.windows.push(w);
        }
        self.stack = cp.stack.clone();
        Ok(())
    }

    fn finish(self, exhaustive: bool) -> SearchResult {
        let witness = self
            .best_bits
            .as_ref()
            .map(|b| canonical_form(b, self.mode));
        let checkpoint = (!exhaustive).then(|| Checkpoint {
            order: self.n,
            mode: self.mode,
            prune: self.prune,
            reduce_symmetry: self.reduce,
            start_index: self.start_index,
            path: if self.stack.is_empty() {
                String::new()
            } else {
                to_string(&self.path)
            },
            stack: self.stack.clone(),
            best: self.best,
            best_bits: self.best_bits.as_deref().map(to_string),
            nodes: self.nodes,
        });
        SearchResult {
            order: self.n,
            mode: self.mode,
            best: self.best,
            witness,
            exhaustive,
            nodes: self.nodes,
            checkpoint,
        }
    }
}
