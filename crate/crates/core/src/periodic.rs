//! Periodic orientable sequences: the odd-weight extension, one recursion
//! step `S -> E(D⁻¹(S))`, the iterated family with its closed-form
//! periods, and the upper bound on the period of any orientable cycle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lempel::{d_inverse_periodic, InverseImage};
use crate::seq::{GeneratingCycle, Tuple};
use crate::verify::verify_orientable;

/// Good order-6 orientable cycle of period 9 and odd weight.
pub const DEFAULT_STARTER: &str = "001010111";
pub const DEFAULT_STARTER_ORDER: usize = 6;

/// Intermediate cycles up to this order are checked for orientability by
/// default; above it the dense window bitmap stops being cheap.
pub const DEFAULT_VERIFY_ORDER: usize = 26;

pub fn default_starter() -> GeneratingCycle {
    DEFAULT_STARTER.parse().expect("valid starter")
}

/// One entry of a construction trace. For aperiodic builds `period`
/// holds the word length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub order: usize,
    pub period: usize,
    pub weight: usize,
    pub inserted_bit: bool,
    pub insert_position: Option<usize>,
}

impl TraceStep {
    pub(crate) fn plain(order: usize, period: usize, weight: usize) -> Self {
        Self {
            order,
            period,
            weight,
            inserted_bit: false,
            insert_position: None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn periods(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.period).collect()
    }
}

/// Upper bound on the period of an orientable cycle of order `n >= 5`
/// (floor of the rational expression for `n mod 4`).
pub fn dai_bound(n: usize) -> Result<u128> {
    if !(5..=120).contains(&n) {
        return Err(Error::Domain {
            what: "dai_bound",
            order: n,
            min: 5,
        });
    }
    // Eighteen times the bound, so every term is an integer.
    let lead = 18i128 << (n - 1);
    let n_i = n as i128;
    let scaled = match n % 4 {
        0 => lead - (82i128 << (n / 2 - 1)) + 6 * n_i + 32,
        1 => lead - (62i128 << ((n - 1) / 2)) + 6 * n_i + 38,
        2 => lead - (82i128 << (n / 2 - 1)) + 3 * n_i + 40,
        _ => lead - (62i128 << ((n - 1) / 2)) + 3 * n_i + 43,
    };
    Ok((scaled / 18) as u128)
}

fn run_tuple(bit: u8, len: usize, n: usize, what: &'static str) -> Result<Tuple> {
    if n < 5 {
        return Err(Error::Domain {
            what,
            order: n,
            min: 5,
        });
    }
    if bit == 0 {
        Tuple::zeros(len)
    } else {
        Tuple::ones(len)
    }
}

/// Exactly one cyclic occurrence of `0^(n-4)`.
pub fn is_good(c: &GeneratingCycle, n: usize) -> Result<bool> {
    let zeros = run_tuple(0, n.saturating_sub(4), n, "is_good")?;
    Ok(c.cyclic_occurrences(&zeros) == 1)
}

fn unique_run_start(c: &GeneratingCycle, n: usize) -> Result<usize> {
    let ones = run_tuple(1, n.saturating_sub(4), n, "extend_odd")?;
    let hits = c.occurrences(&ones);
    match hits[..] {
        [r] => Ok(r),
        _ => Err(Error::RunCount {
            tuple: ones.to_string(),
            found: hits.len(),
        }),
    }
}

/// Result of the odd-weight extension: the cycle and, when a bit was
/// added, the index of the inserted 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub cycle: GeneratingCycle,
    pub inserted_at: Option<usize>,
}

/// `E`: leaves an odd-weight cycle alone; otherwise lengthens the unique
/// run `1^(n-4)` to `1^(n-3)` by inserting a 1 in front of it.
pub fn extend_odd(c: &GeneratingCycle, n: usize) -> Result<GeneratingCycle> {
    Ok(extend_odd_owned(c.clone(), n)?.cycle)
}

pub(crate) fn extend_odd_owned(c: GeneratingCycle, n: usize) -> Result<Extension> {
    let r = unique_run_start(&c, n)?;
    if c.weight() % 2 == 1 {
        return Ok(Extension {
            cycle: c,
            inserted_at: None,
        });
    }
    let mut bits = c.into_bits();
    bits.insert(r, 1);
    let cycle = GeneratingCycle::new(bits)?;
    Ok(Extension {
        cycle,
        inserted_at: Some(r),
    })
}

/// The four windows of an extended cycle that contain the whole run
/// `1^(n-3)` starting at `r`: they start at `r-3`, `r-2`, `r-1` and `r`.
pub fn insertion_windows(c: &GeneratingCycle, r: usize, n: usize) -> Result<[Tuple; 4]> {
    let m = c.period();
    let at = |back: usize| c.window((r + m * 4 - back) % m, n);
    Ok([at(3)?, at(2)?, at(1)?, at(0)?])
}

/// Checks the window bookkeeping of one insertion: every replacement
/// window holds `1^(n-3)`, they are pairwise distinct, and no two of them
/// are reversals of each other.
pub fn check_insertion(c: &GeneratingCycle, r: usize, n: usize) -> Result<()> {
    let v = insertion_windows(c, r, n)?;
    let run = Tuple::ones(n - 3)?;
    let holds_run =
        |t: &Tuple| (0..=3).any(|k| Tuple::from_raw(t.value() >> (3 - k), n - 3) == run);
    let problem = if !v.iter().all(holds_run) {
        Some("a replacement window lacks the lengthened run")
    } else if (0..4).any(|a| (a + 1..4).any(|b| v[a] == v[b])) {
        Some("replacement windows coincide")
    } else if v[0] == v[3].reverse() || v[1] == v[2].reverse() {
        Some("replacement windows are reversals of each other")
    } else {
        None
    };
    match problem {
        Some(p) => Err(Error::Contract(format!("insertion at {r}: {p}"))),
        None => Ok(()),
    }
}

/// One recursion step from a good odd-weight orientable cycle of order
/// `n`: returns `E(D⁻¹(c))` at order `n + 1` and its trace entry.
pub fn next_orientable(c: &GeneratingCycle, n: usize) -> Result<(GeneratingCycle, TraceStep)> {
    if c.weight().is_multiple_of(2) {
        return Err(Error::Contract(format!(
            "order-{n} input has even weight {}",
            c.weight()
        )));
    }
    if !is_good(c, n)? {
        return Err(Error::Contract(format!("order-{n} input is not good")));
    }
    step(c, n)
}

fn step(c: &GeneratingCycle, n: usize) -> Result<(GeneratingCycle, TraceStep)> {
    let doubled = match d_inverse_periodic(c) {
        InverseImage::DoubledSingle(t) => t,
        InverseImage::ComplementaryPair { .. } => {
            unreachable!("odd weight inverts to a single cycle")
        }
    };
    let next = n + 1;
    let zeros_before = doubled.cyclic_occurrences(&Tuple::zeros(next - 4)?);
    let ext = extend_odd_owned(doubled, next)?;
    if let Some(r) = ext.inserted_at {
        check_insertion(&ext.cycle, r, next)?;
        let zeros_after = ext.cycle.cyclic_occurrences(&Tuple::zeros(next - 4)?);
        if zeros_after != zeros_before {
            return Err(Error::Contract(format!(
                "insertion changed the count of 0^{} from {zeros_before} to {zeros_after}",
                next - 4
            )));
        }
    }
    let cycle = ext.cycle;
    let trace = TraceStep {
        order: next,
        period: cycle.period(),
        weight: cycle.weight(),
        inserted_bit: ext.inserted_at.is_some(),
        insert_position: ext.inserted_at,
    };
    Ok((cycle, trace))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildOptions {
    /// Check orientability of every cycle whose order is at most this.
    pub verify_through_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self {
            verify_through_order: DEFAULT_VERIFY_ORDER,
        }
    }
}

/// Iterates [`next_orientable`] from `starter` (order `n0`) to `n_target`.
pub fn build_orientable(
    starter: &GeneratingCycle,
    n0: usize,
    n_target: usize,
) -> Result<(GeneratingCycle, ConstructionTrace)> {
    build_orientable_with(starter, n0, n_target, &BuildOptions::default())
}

pub fn build_orientable_with(
    starter: &GeneratingCycle,
    n0: usize,
    n_target: usize,
    options: &BuildOptions,
) -> Result<(GeneratingCycle, ConstructionTrace)> {
    if n_target < n0 {
        return Err(Error::Contract(format!(
            "target order {n_target} is below the starter order {n0}"
        )));
    }
    let reject = |property: String| Err(Error::StarterRejected { property });
    if !is_good(starter, n0)? {
        return reject(format!(
            "not good: 0^{} does not occur exactly once",
            n0 - 4
        ));
    }
    if starter.weight().is_multiple_of(2) {
        return reject(format!("even weight {}", starter.weight()));
    }
    if let Err(ce) = verify_orientable(starter, n0)? {
        return reject(format!("not orientable at order {n0}: {ce}"));
    }

    let mut trace = ConstructionTrace {
        steps: vec![TraceStep::plain(n0, starter.period(), starter.weight())],
    };
    let mut current = starter.clone();
    for n in n0..n_target {
        let (next, entry) = step(&current, n)?;
        if n < options.verify_through_order {
            if let Err(counterexample) = verify_orientable(&next, n + 1)? {
                return Err(Error::Violation {
                    property: "orientable",
                    order: n + 1,
                    counterexample,
                });
            }
        }
        trace.steps.push(entry);
        current = next;
    }
    Ok((current, trace))
}

/// Closed-form period after `2j + offset` steps from a starter of period
/// `m_start`; the parity of `m_start` selects the case.
pub fn predicted_period(m_start: u64, j: u32, offset: u32) -> Result<u128> {
    if offset > 1 {
        return Err(Error::Contract(format!(
            "offset must be 0 or 1, got {offset}"
        )));
    }
    let m = m_start as u128;
    let pow = |e: u32| 1u128 << e;
    let odd = m_start % 2 == 1;
    Ok(match (odd, offset) {
        (true, 0) => pow(2 * j) * m + (pow(2 * j) - 1) / 3,
        (true, _) => pow(2 * j + 1) * m + (pow(2 * j + 1) - 2) / 3,
        (false, 0) => pow(2 * j) * m + (pow(2 * j + 1) - 2) / 3,
        (false, _) => pow(2 * j + 1) * m + (pow(2 * j + 2) - 1) / 3,
    })
}

/// [`predicted_period`] indexed by the number of recursion steps.
pub fn predicted_period_after(m_start: u64, steps: u32) -> u128 {
    predicted_period(m_start, steps / 2, steps % 2).expect("offset is 0 or 1")
}
