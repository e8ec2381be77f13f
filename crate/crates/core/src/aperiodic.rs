//! Aperiodic orientable words: ideal words, the merge step that lifts an
//! ideal word of order `n` to order `n + 1`, the family grown from `01`,
//! and length formulas and bounds.

use crate::error::{Error, Result};
use crate::lempel::d_inverse_aperiodic;
use crate::periodic::{ConstructionTrace, TraceStep};
use crate::seq::{FiniteSeq, GeneratingCycle};
use crate::verify::verify_orientable;

/// Longest known aperiodic orientable words for orders 4..=16, from the
/// published computer searches. Literature values; orders 4..=7 are
/// claimed optimal, the rest are only lower bounds.
pub const LITERATURE_AOS_LENGTHS: [(usize, u64); 13] = [
    (4, 8),
    (5, 14),
    (6, 26),
    (7, 48),
    (8, 108),
    (9, 210),
    (10, 440),
    (11, 872),
    (12, 1860),
    (13, 3710),
    (14, 7400),
    (15, 15467),
    (16, 31766),
];

/// Starts with `0^(n-1)` and ends with `1^(n-1)`.
pub fn is_ideal(s: &FiniteSeq, n: usize) -> bool {
    if n < 2 || s.len() < 2 * (n - 1) {
        return false;
    }
    let bits = s.bits();
    bits[..n - 1].iter().all(|&b| b == 0) && bits[bits.len() - (n - 1)..].iter().all(|&b| b == 1)
}

/// Lifts an ideal orientable word of order `n` to one of order `n + 1`.
pub fn merge_step(s: &FiniteSeq, n: usize) -> Result<FiniteSeq> {
    if !is_ideal(s, n) {
        return Err(Error::Contract(format!("input is not ideal at order {n}")));
    }
    if let Err(ce) = verify_orientable(s, n)? {
        return Err(Error::Contract(format!(
            "input is not orientable at order {n}: {ce}"
        )));
    }
    Ok(merge_unchecked(s, n))
}

fn merge_unchecked(s: &FiniteSeq, n: usize) -> FiniteSeq {
    // T starts with 0^n and ends with n alternating bits; U is the
    // reversed complement of T, which starts with the complemented
    // alternating tail.
    let t = d_inverse_aperiodic(s).into_first();
    let u = t.complement().reverse();
    let overlap = if n.is_multiple_of(2) { n } else { n - 1 };
    let mut bits = t.into_bits();
    bits.extend_from_slice(&u.bits()[overlap..]);
    FiniteSeq::new(bits).expect("non-empty")
}

/// Iterates [`merge_step`] from `01` at order 2.
pub fn build_aos(n_target: usize) -> Result<(FiniteSeq, ConstructionTrace)> {
    let base: FiniteSeq = "01".parse()?;
    build_aos_from(&base, 2, n_target)
}

/// Iterates [`merge_step`] from an arbitrary ideal starter of order `n0`.
pub fn build_aos_from(
    starter: &FiniteSeq,
    n0: usize,
    n_target: usize,
) -> Result<(FiniteSeq, ConstructionTrace)> {
    if n0 < 2 || n_target < n0 {
        return Err(Error::Domain {
            what: "build_aos",
            order: n_target,
            min: n0.max(2),
        });
    }
    if !is_ideal(starter, n0) {
        return Err(Error::StarterRejected {
            property: format!("not ideal at order {n0}"),
        });
    }
    if let Err(ce) = verify_orientable(starter, n0)? {
        return Err(Error::StarterRejected {
            property: format!("not orientable at order {n0}: {ce}"),
        });
    }
    let mut trace = ConstructionTrace {
        steps: vec![TraceStep::plain(n0, starter.len(), starter.weight())],
    };
    let mut current = starter.clone();
    for n in n0..n_target {
        current = merge_unchecked(&current, n);
        trace
            .steps
            .push(TraceStep::plain(n + 1, current.len(), current.weight()));
    }
    Ok((current, trace))
}

/// Length after `m` merge steps from an ideal word of length `ell_n` and
/// order `n`.
pub fn predicted_length(ell_n: u64, n: usize, m: u32) -> u128 {
    let pow = |e: u32| 1u128 << e;
    let x = match (n.is_multiple_of(2), m.is_multiple_of(2)) {
        (true, true) => pow(m) - 1,
        (true, false) => pow(m) - 2,
        (false, true) => pow(m + 1) - 2,
        (false, false) => pow(m + 1) - 1,
    };
    pow(m) * (ell_n as u128 + 1 - n as u128) + x / 3 + m as u128 + n as u128 - 1
}

/// Upper bound on the length of an aperiodic orientable word of order `n`:
/// `2^(n-1) - 2^floor((n-1)/2) + n - 1`.
pub fn burns_bound(n: usize) -> Result<u128> {
    if !(2..=120).contains(&n) {
        return Err(Error::Domain {
            what: "burns_bound",
            order: n,
            min: 2,
        });
    }
    Ok((1u128 << (n - 1)) - (1u128 << ((n - 1) / 2)) + n as u128 - 1)
}

/// The first `m + n - 1` bits of an orientable cycle of period `m`, which
/// form an aperiodic orientable word of order `n`.
pub fn aos_from_periodic(c: &GeneratingCycle, n: usize) -> Result<FiniteSeq> {
    if n == 0 {
        return Err(Error::UnsupportedOrder(0));
    }
    FiniteSeq::new(c.unroll(c.period() + n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> FiniteSeq {
        s.parse().unwrap()
    }

    #[test]
    fn ideal_words() {
        assert!(is_ideal(&word("01"), 2));
        assert!(is_ideal(&word("00010111"), 4));
        assert!(is_ideal(&word("0011"), 3));
        assert!(!is_ideal(&word("0110"), 3));
        assert!(!is_ideal(&word("011"), 3));
        assert!(!is_ideal(&word("01"), 1));
    }

    #[test]
    fn merges() {
        assert_eq!(merge_step(&word("01"), 2).unwrap(), word("0011"));
        assert_eq!(merge_step(&word("0011"), 3).unwrap(), word("00010111"));
        assert_eq!(
            merge_step(&word("00010111"), 4).unwrap(),
            word("00001101001111")
        );
        assert!(matches!(
            merge_step(&word("0110"), 3),
            Err(Error::Contract(_))
        ));
        // Ideal shape but a repeated window.
        assert!(matches!(
            merge_step(&word("00101011"), 3),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn family_lengths() {
        let (s7, _) = build_aos(7).unwrap();
        assert_eq!(s7.len(), 48);
        let (s10, trace) = build_aos(10).unwrap();
        assert_eq!(s10.len(), 350);
        assert_eq!(trace.periods(), vec![2, 4, 8, 14, 26, 48, 92, 178, 350]);
        assert_eq!(build_aos(2).unwrap().0, word("01"));
        assert!(build_aos(1).is_err());
    }

    #[test]
    fn length_formula_and_bound() {
        assert_eq!(predicted_length(2, 2, 2), 8);
        assert_eq!(predicted_length(2, 2, 3), 14);
        assert_eq!(predicted_length(2, 2, 6), 92);
        assert_eq!(burns_bound(5).unwrap(), 16);
        assert_eq!(burns_bound(4).unwrap(), 9);
        assert!(burns_bound(1).is_err());
    }

    #[test]
    fn unrolled_cycle() {
        let c: GeneratingCycle = "001101".parse().unwrap();
        let w = aos_from_periodic(&c, 5).unwrap();
        assert_eq!(w, word("0011010011"));
        assert_eq!(verify_orientable(&w, 5).unwrap(), Ok(()));
    }
}
