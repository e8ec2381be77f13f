//! Joining two disjoint window sequences at a conjugate tuple pair, and
//! the Lempel recursion for de Bruijn cycles built on it.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lempel::{d_inverse_periodic, InverseImage};
use crate::seq::{GeneratingCycle, Tuple};
use crate::verify::{verify_disjoint, verify_nwindow};

/// Smallest `(i, j)` with `window(s, i, n) == conjugate(window(t, j, n))`.
pub fn find_conjugate_positions(
    s: &GeneratingCycle,
    t: &GeneratingCycle,
    n: usize,
) -> Option<(usize, usize)> {
    let flip = 1u64 << (n - 1);
    let mut in_t: HashMap<u64, usize> = HashMap::new();
    for (j, w) in t.view().windows(n).enumerate() {
        in_t.entry(w ^ flip).or_insert(j);
    }
    s.view()
        .windows(n)
        .enumerate()
        .find_map(|(i, w)| in_t.get(&w).map(|&j| (i, j)))
}

/// Splices `t` into `s` where `s` holds `u` at `i` and `t` holds the
/// conjugate of `u` at `j`:
///
/// `[s0 .. s(i+n-1), t(j+n) .. t(m-1), t0 .. t(j+n-1), s(i+n) .. s(l-1)]`
///
/// Indices are cyclic in each source; the result starts at `s0`.
pub fn join_at(
    s: &GeneratingCycle,
    t: &GeneratingCycle,
    i: usize,
    j: usize,
    n: usize,
) -> Result<GeneratingCycle> {
    let u = s.window(i, n)?;
    let v = t.window(j, n)?;
    if u != v.conjugate() {
        return Err(Error::Contract(format!(
            "window {u} at {i} is not the conjugate of window {v} at {j}"
        )));
    }
    for (name, c) in [("first", s), ("second", t)] {
        if let Err(ce) = verify_nwindow(c, n)? {
            return Err(Error::Contract(format!(
                "{name} cycle is not {n}-window: {ce}"
            )));
        }
    }
    if let Err(ce) = verify_disjoint(s, t, n)? {
        return Err(Error::Contract(format!("cycles are not disjoint: {ce}")));
    }
    Ok(splice(s, t, i, j, n))
}

fn splice(
    s: &GeneratingCycle,
    t: &GeneratingCycle,
    i: usize,
    j: usize,
    n: usize,
) -> GeneratingCycle {
    let (l, m) = (s.period(), t.period());
    let i = i % l;
    let j = j % m;
    // Build with s rotated so the joining window starts at index 0, then
    // rotate back so s0 leads.
    let mut bits = Vec::with_capacity(l + m);
    bits.extend((0..n).map(|k| s.bit(i + k)));
    bits.extend((0..m).map(|k| t.bit(j + n + k)));
    bits.extend((n..l).map(|k| s.bit(i + k)));
    let lead = if i == 0 {
        0
    } else if l - i >= n {
        m + l - i
    } else {
        l - i
    };
    bits.rotate_left(lead);
    GeneratingCycle::new(bits).expect("joined disjoint window cycles are primitive")
}

/// de Bruijn cycle of order `n` and period `2^n`, grown from `[01]` by
/// inverting `D` and joining the two halves at each step.
pub fn debruijn_lempel(n: usize) -> Result<GeneratingCycle> {
    if n == 0 || n > 40 {
        return Err(Error::Domain {
            what: "debruijn_lempel",
            order: n,
            min: 1,
        });
    }
    let mut current: GeneratingCycle = "01".parse()?;
    for order in 1..n {
        current = match d_inverse_periodic(&current) {
            InverseImage::DoubledSingle(t) => t,
            InverseImage::ComplementaryPair { first, second } => {
                let next = order + 1;
                debug_assert!(
                    first.cyclic_occurrences(&Tuple::alternating(next, 1)?)
                        + second.cyclic_occurrences(&Tuple::alternating(next, 1)?)
                        == 1
                );
                let (i, j) = find_conjugate_positions(&first, &second, next)
                    .expect("halves of a de Bruijn preimage hold a conjugate pair");
                splice(&first, &second, i, j, next)
            }
        };
    }
    Ok(current)
}
