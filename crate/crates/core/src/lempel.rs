//! The Lempel homomorphism `D` (adjacent-bit XOR) and its inverse, on
//! tuples, generating cycles and finite words.
//!
//! Inverse images are phase-aligned: output index 0 corresponds to input
//! index 0, and the canonical member starts with a 0 bit.

use crate::error::{Error, Result};
use crate::seq::{FiniteSeq, GeneratingCycle, Tuple};

/// `D⁻¹` of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InverseImage<S> {
    /// Two complementary sequences of the preimage's period or length
    /// plus one (aperiodic). `first` starts with 0.
    ComplementaryPair { first: S, second: S },
    /// A single cycle of twice the preimage's period; both phases of it
    /// map back onto the preimage.
    DoubledSingle(S),
}

impl<S> InverseImage<S> {
    /// The canonical member (starting with bit 0).
    pub fn first(&self) -> &S {
        match self {
            InverseImage::ComplementaryPair { first, .. } => first,
            InverseImage::DoubledSingle(s) => s,
        }
    }

    pub fn second(&self) -> Option<&S> {
        match self {
            InverseImage::ComplementaryPair { second, .. } => Some(second),
            InverseImage::DoubledSingle(_) => None,
        }
    }

    pub fn members(&self) -> Vec<&S> {
        match self {
            InverseImage::ComplementaryPair { first, second } => vec![first, second],
            InverseImage::DoubledSingle(s) => vec![s],
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(self, InverseImage::ComplementaryPair { .. })
    }

    pub fn into_first(self) -> S {
        match self {
            InverseImage::ComplementaryPair { first, .. } => first,
            InverseImage::DoubledSingle(s) => s,
        }
    }
}

impl InverseImage<GeneratingCycle> {
    /// Every phase-aligned solution `t` of `D(t) = s`: the pair itself,
    /// or for a doubled single both of its shifts (`t0 = 0` and `t0 = 1`).
    pub fn aligned_solutions(&self) -> Vec<GeneratingCycle> {
        match self {
            InverseImage::ComplementaryPair { first, second } => {
                vec![first.clone(), second.clone()]
            }
            InverseImage::DoubledSingle(s) => vec![s.clone(), s.complement()],
        }
    }
}

/// `D` on a single tuple: `(u0^u1, ..., u(n-2)^u(n-1))`.
pub fn d_tuple(u: &Tuple) -> Result<Tuple> {
    if u.order() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            len: u.order(),
        });
    }
    let v = u.value();
    Tuple::from_value(v ^ (v >> 1), u.order() - 1)
}

fn xor_adjacent(bits: &[u8], cyclic: bool) -> Vec<u8> {
    let mut out: Vec<u8> = bits.windows(2).map(|w| w[0] ^ w[1]).collect();
    if cyclic {
        out.push(bits[bits.len() - 1] ^ bits[0]);
    }
    out
}

/// Running XOR starting from 0: `t0 = 0`, `t(i+1) = t(i) ^ s(i)`.
fn integrate(s: &[u8], len: usize) -> Vec<u8> {
    let mut out = Vec::with_capacity(len);
    let mut t = 0u8;
    for &b in s.iter().cycle().take(len) {
        out.push(t);
        t ^= b;
    }
    out
}

/// `D` on a cycle; the image is reduced to its minimal period.
pub fn d_forward_periodic(c: &GeneratingCycle) -> GeneratingCycle {
    d_forward_periodic_raw(c).0
}

/// `D` on a cycle, also returning the unreduced image length (always the
/// input period).
pub fn d_forward_periodic_raw(c: &GeneratingCycle) -> (GeneratingCycle, usize) {
    let raw = xor_adjacent(c.bits(), true);
    let len = raw.len();
    let image = GeneratingCycle::reduced(raw).expect("xor of a non-empty cycle");
    (image, len)
}

/// `D⁻¹` on a cycle. Even weight gives a complementary pair of period `m`;
/// odd weight a single cycle of period `2m` and weight `m`.
pub fn d_inverse_periodic(c: &GeneratingCycle) -> InverseImage<GeneratingCycle> {
    let m = c.period();
    if c.weight().is_multiple_of(2) {
        let first = GeneratingCycle::reduced(integrate(c.bits(), m)).expect("non-empty");
        debug_assert_eq!(first.period(), m);
        let second = first.complement();
        InverseImage::ComplementaryPair { first, second }
    } else {
        let t = GeneratingCycle::reduced(integrate(c.bits(), 2 * m)).expect("non-empty");
        debug_assert_eq!(t.period(), 2 * m);
        InverseImage::DoubledSingle(t)
    }
}

/// `D` on a finite word of length at least 2.
pub fn d_forward_aperiodic(s: &FiniteSeq) -> Result<FiniteSeq> {
    if s.len() < 2 {
        return Err(Error::TooShort {
            needed: 2,
            len: s.len(),
        });
    }
    FiniteSeq::new(xor_adjacent(s.bits(), false))
}

/// `D⁻¹` on a finite word: always a complementary pair of length `len + 1`.
pub fn d_inverse_aperiodic(s: &FiniteSeq) -> InverseImage<FiniteSeq> {
    let mut bits = Vec::with_capacity(s.len() + 1);
    let mut t = 0u8;
    bits.push(t);
    for &b in s.bits() {
        t ^= b;
        bits.push(t);
    }
    let first = FiniteSeq::new(bits).expect("non-empty");
    let second = first.complement();
    InverseImage::ComplementaryPair { first, second }
}
