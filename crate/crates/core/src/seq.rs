//! Binary tuples, generating cycles and finite words.
//!
//! Bits are written most-significant-first: the tuple `(0,1,1)` is the
//! string `"011"` and its packed value is `0b011`. Generating cycles follow
//! the bracket notation `[s0 s1 ... s(m-1)]` with indices taken modulo the
//! period everywhere.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest tuple order the packed representation supports.
pub const MAX_ORDER: usize = 64;

fn mask(order: usize) -> u64 {
    if order >= 64 {
        u64::MAX
    } else {
        (1u64 << order) - 1
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_ORDER {
        Err(Error::UnsupportedOrder(order))
    } else {
        Ok(())
    }
}

fn parse_bits(s: &str) -> Result<Vec<u8>> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(Error::InvalidBit(other)),
        })
        .collect()
}

fn check_bits(bits: &[u8]) -> Result<()> {
    if bits.is_empty() {
        return Err(Error::Empty);
    }
    match bits.iter().find(|&&b| b > 1) {
        Some(&b) => Err(Error::InvalidBit(char::from(b'0'.wrapping_add(b)))),
        None => Ok(()),
    }
}

fn write_bits(f: &mut fmt::Formatter<'_>, bits: &[u8]) -> fmt::Result {
    let s: String = bits
        .iter()
        .map(|&b| if b == 1 { '1' } else { '0' })
        .collect();
    f.write_str(&s)
}

/// A fixed-length binary word of order 1..=64, packed into a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple {
    value: u64,
    order: u8,
}

impl Tuple {
    pub fn new(bits: &[u8]) -> Result<Self> {
        check_order(bits.len())?;
        check_bits(bits)?;
        let value = bits.iter().fold(0u64, |acc, &b| (acc << 1) | b as u64);
        Ok(Self {
            value,
            order: bits.len() as u8,
        })
    }

    /// Packs `value` as a tuple; bits above `order` are discarded.
    pub fn from_value(value: u64, order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Self {
            value: value & mask(order),
            order: order as u8,
        })
    }

    pub(crate) fn from_raw(value: u64, order: usize) -> Self {
        debug_assert!((1..=MAX_ORDER).contains(&order));
        Self {
            value: value & mask(order),
            order: order as u8,
        }
    }

    pub fn zeros(order: usize) -> Result<Self> {
        Self::from_value(0, order)
    }

    pub fn ones(order: usize) -> Result<Self> {
        Self::from_value(u64::MAX, order)
    }

    /// The alternating tuple of the given order starting with `first`.
    pub fn alternating(order: usize, first: u8) -> Result<Self> {
        let bits: Vec<u8> = (0..order).map(|k| (first ^ (k as u8)) & 1).collect();
        Self::new(&bits)
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Bit `k`, counted from the left.
    pub fn bit(&self, k: usize) -> u8 {
        assert!(k < self.order(), "bit index {k} out of range");
        ((self.value >> (self.order() - 1 - k)) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.order()).map(|k| self.bit(k)).collect()
    }

    pub fn reverse(&self) -> Self {
        Self {
            value: self.value.reverse_bits() >> (64 - self.order()),
            order: self.order,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            value: !self.value & mask(self.order()),
            order: self.order,
        }
    }

    /// Flips the first bit.
    pub fn conjugate(&self) -> Self {
        Self {
            value: self.value ^ (1u64 << (self.order() - 1)),
            order: self.order,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.reverse()
    }

    pub fn weight(&self) -> usize {
        self.value.count_ones() as usize
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.bits())
    }
}

impl FromStr for Tuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = parse_bits(s)?;
        if bits.is_empty() {
            return Err(Error::Empty);
        }
        Self::new(&bits)
    }
}

/// Whether a sequence is read cyclically or as a finite word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Periodic,
    Aperiodic,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Periodic => "periodic",
            Mode::Aperiodic => "aperiodic",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "periodic" => Ok(Mode::Periodic),
            "aperiodic" => Ok(Mode::Aperiodic),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// Smallest `d` dividing `bits.len()` such that the cycle is invariant
/// under rotation by `d`.
pub(crate) fn minimal_period(bits: &[u8]) -> usize {
    let m = bits.len();
    let has_period = |q: usize| bits[..m - q] == bits[q..];
    let mut period = m;
    let mut rest = m;
    let mut p = 2;
    while rest > 1 {
        if p * p > rest {
            p = rest;
        }
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            while period.is_multiple_of(p) && has_period(period / p) {
                period /= p;
            }
        }
        p += 1;
    }
    period
}

/// One period of a periodic binary sequence. The stored length is always
/// the minimal period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratingCycle {
    bits: Vec<u8>,
}

impl GeneratingCycle {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        check_bits(&bits)?;
        let period = minimal_period(&bits);
        if period != bits.len() {
            return Err(Error::NonMinimalPeriod {
                len: bits.len(),
                period,
            });
        }
        Ok(Self { bits })
    }

    /// Builds a cycle from any repetition of a period, keeping only the
    /// minimal period.
    pub fn reduced(mut bits: Vec<u8>) -> Result<Self> {
        check_bits(&bits)?;
        let period = minimal_period(&bits);
        bits.truncate(period);
        Ok(Self { bits })
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    pub fn bit(&self, i: usize) -> u8 {
        self.bits[i % self.bits.len()]
    }

    /// The `n`-tuple at position `i`, wrapping around the period as often
    /// as needed.
    pub fn window(&self, i: usize, n: usize) -> Result<Tuple> {
        check_order(n)?;
        let m = self.period();
        let value = (0..n).fold(0u64, |acc, k| (acc << 1) | self.bits[(i + k) % m] as u64);
        Ok(Tuple::from_raw(value, n))
    }

    /// Number of positions `0..m` at which `t` starts.
    pub fn cyclic_occurrences(&self, t: &Tuple) -> usize {
        self.view()
            .windows(t.order())
            .filter(|&w| w == t.value())
            .count()
    }

    /// Start positions of the cyclic occurrences of `t`.
    pub fn occurrences(&self, t: &Tuple) -> Vec<usize> {
        self.view()
            .windows(t.order())
            .enumerate()
            .filter(|&(_, w)| w == t.value())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn reverse(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| b ^ 1).collect(),
        }
    }

    /// The same sequence with position `k` moved to index 0.
    pub fn rotate(&self, k: usize) -> Self {
        let mut bits = self.bits.clone();
        bits.rotate_left(k % self.period());
        Self { bits }
    }

    /// The first `len` bits of the infinite periodic sequence.
    pub fn unroll(&self, len: usize) -> Vec<u8> {
        self.bits.iter().copied().cycle().take(len).collect()
    }

    pub fn view(&self) -> SeqView<'_> {
        SeqView {
            bits: &self.bits,
            mode: Mode::Periodic,
        }
    }
}

impl fmt::Display for GeneratingCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.bits)
    }
}

impl FromStr for GeneratingCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        Self::new(parse_bits(s)?)
    }
}

/// A finite (aperiodic) binary word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteSeq {
    bits: Vec<u8>,
}

impl FiniteSeq {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        check_bits(&bits)?;
        Ok(Self { bits })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always false; empty words are rejected on construction.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    pub fn window(&self, i: usize, n: usize) -> Result<Tuple> {
        check_order(n)?;
        if i + n > self.len() {
            return Err(Error::OutOfRange {
                index: i,
                order: n,
                len: self.len(),
            });
        }
        Tuple::new(&self.bits[i..i + n])
    }

    pub fn reverse(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.reverse();
        Self { bits }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| b ^ 1).collect(),
        }
    }

    pub fn view(&self) -> SeqView<'_> {
        SeqView {
            bits: &self.bits,
            mode: Mode::Aperiodic,
        }
    }
}

impl fmt::Display for FiniteSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, &self.bits)
    }
}

impl FromStr for FiniteSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_bits(s)?)
    }
}

/// Either kind of sequence, owned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sequence {
    Periodic(GeneratingCycle),
    Aperiodic(FiniteSeq),
}

impl Sequence {
    /// Interprets raw bits in the given mode.
    pub fn from_bits(bits: Vec<u8>, mode: Mode) -> Result<Self> {
        Ok(match mode {
            Mode::Periodic => Sequence::Periodic(GeneratingCycle::new(bits)?),
            Mode::Aperiodic => Sequence::Aperiodic(FiniteSeq::new(bits)?),
        })
    }

    pub fn mode(&self) -> Mode {
        match self {
            Sequence::Periodic(_) => Mode::Periodic,
            Sequence::Aperiodic(_) => Mode::Aperiodic,
        }
    }

    pub fn bits(&self) -> &[u8] {
        match self {
            Sequence::Periodic(c) => c.bits(),
            Sequence::Aperiodic(s) => s.bits(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits().len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits().is_empty()
    }

    pub fn view(&self) -> SeqView<'_> {
        SeqView {
            bits: self.bits(),
            mode: self.mode(),
        }
    }

    pub fn window(&self, i: usize, n: usize) -> Result<Tuple> {
        match self {
            Sequence::Periodic(c) => c.window(i, n),
            Sequence::Aperiodic(s) => s.window(i, n),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, self.bits())
    }
}

impl From<GeneratingCycle> for Sequence {
    fn from(c: GeneratingCycle) -> Self {
        Sequence::Periodic(c)
    }
}

impl From<FiniteSeq> for Sequence {
    fn from(s: FiniteSeq) -> Self {
        Sequence::Aperiodic(s)
    }
}

/// Borrowed bits plus the reading mode; the common input of the verifiers
/// and the locator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeqView<'a> {
    pub bits: &'a [u8],
    pub mode: Mode,
}

impl<'a> SeqView<'a> {
    /// Number of `n`-windows: `m` for a cycle, `len - n + 1` for a word
    /// (zero when the word is shorter than `n`).
    pub fn window_count(&self, n: usize) -> usize {
        match self.mode {
            Mode::Periodic => self.bits.len(),
            Mode::Aperiodic => (self.bits.len() + 1).saturating_sub(n),
        }
    }

    /// Packed `n`-windows in position order. `n` must be in 1..=64.
    pub fn windows(&self, n: usize) -> Windows<'a> {
        assert!((1..=MAX_ORDER).contains(&n), "unsupported order {n}");
        let count = self.window_count(n);
        let m = self.bits.len();
        let mut value = 0u64;
        let mut next = 0usize;
        if count > 0 {
            for _ in 0..n - 1 {
                value = (value << 1) | self.bits[next] as u64;
                next += 1;
                if next == m {
                    next = 0;
                }
            }
        }
        Windows {
            bits: self.bits,
            mask: mask(n),
            value,
            next,
            remaining: count,
        }
    }
}

impl<'a> From<&'a GeneratingCycle> for SeqView<'a> {
    fn from(c: &'a GeneratingCycle) -> Self {
        c.view()
    }
}

impl<'a> From<&'a FiniteSeq> for SeqView<'a> {
    fn from(s: &'a FiniteSeq) -> Self {
        s.view()
    }
}

impl<'a> From<&'a Sequence> for SeqView<'a> {
    fn from(s: &'a Sequence) -> Self {
        s.view()
    }
}

/// Rolling iterator over packed windows.
#[derive(Debug, Clone)]
pub struct Windows<'a> {
    bits: &'a [u8],
    mask: u64,
    value: u64,
    next: usize,
    remaining: usize,
}

impl Iterator for Windows<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        self.value = ((self.value << 1) | self.bits[self.next] as u64) & self.mask;
        self.next += 1;
        if self.next == self.bits.len() {
            self.next = 0;
        }
        Some(self.value)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining, Some(self.remaining))
    }
}

impl ExactSizeIterator for Windows<'_> {}
