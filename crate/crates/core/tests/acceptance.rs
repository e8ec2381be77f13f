//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! `cargo test --test acceptance` runs everything. The order-7 searches
//! are reported but never fail the run.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use orientable::aperiodic::{
    build_aos, burns_bound, is_ideal, predicted_length, LITERATURE_AOS_LENGTHS,
};
use orientable::join::debruijn_lempel;
use orientable::lempel::{
    d_forward_aperiodic, d_forward_periodic, d_inverse_aperiodic, d_inverse_periodic,
};
use orientable::periodic::{
    build_orientable, dai_bound, default_starter, is_good, predicted_period_after,
    DEFAULT_STARTER_ORDER,
};
use orientable::search::{max_aos_length, max_orientable_period, SearchConfig, SearchResult};
use orientable::verify::{verify_nwindow, verify_orientable};
use orientable::{FiniteSeq, GeneratingCycle, InverseImage, LocatorIndex, Orientation, SeqView};

type Check = Result<String, String>;
type Search = Box<dyn Fn() -> orientable::Result<SearchResult>>;
type Criterion = (&'static str, Box<dyn Fn() -> Check>, Duration);

trait Ctx<T> {
    fn ctx(self) -> Result<T, String>;
}

impl<T, E: std::fmt::Display> Ctx<T> for Result<T, E> {
    fn ctx(self) -> Result<T, String> {
        self.map_err(|e| e.to_string())
    }
}

fn cyc(s: &str) -> GeneratingCycle {
    s.parse().unwrap()
}

fn word(s: &str) -> FiniteSeq {
    s.parse().unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn same_cycle(a: &GeneratingCycle, b: &GeneratingCycle) -> bool {
    a.period() == b.period() && (0..a.period()).any(|k| &a.rotate(k) == b)
}

fn worked_examples() -> Check {
    match d_inverse_periodic(&cyc("101")) {
        InverseImage::ComplementaryPair { first, second } => {
            ensure!(
                first == cyc("011") && second == cyc("100"),
                "D^-1[101] = {first}, {second}"
            );
        }
        other => return Err(format!("D^-1[101] should split, got {other:?}")),
    }

    let single = d_inverse_periodic(&cyc("100"));
    ensure!(!single.is_pair(), "D^-1[100] should be one cycle");
    let solutions = single.aligned_solutions();
    ensure!(
        solutions.contains(&cyc("100011")),
        "[100011] is not among the phase-aligned solutions {solutions:?}"
    );
    ensure!(
        same_cycle(single.first(), &cyc("100011")),
        "D^-1[100] = {}",
        single.first()
    );

    let s = d_inverse_periodic(&cyc("001101"));
    ensure!(!s.is_pair(), "D^-1[001101] should be one cycle");
    ensure!(
        *s.first() == cyc("000100111011"),
        "D^-1[001101] = {}",
        s.first()
    );
    match d_inverse_periodic(s.first()) {
        InverseImage::ComplementaryPair { first, second } => {
            ensure!(
                first == cyc("000011101001") && second == cyc("111100010110"),
                "second inverse = {first}, {second}"
            );
        }
        other => return Err(format!("D^-1[000100111011] should split, got {other:?}")),
    }
    Ok("D^-1 of [101], [100], [001101] and [000100111011] bit-exact".into())
}

fn periodic_family() -> Check {
    let starter = default_starter();
    let (_, trace) = build_orientable(&starter, DEFAULT_STARTER_ORDER, 10).ctx()?;
    ensure!(
        trace.periods() == [9, 18, 37, 74, 149],
        "periods {:?}",
        trace.periods()
    );

    let (s7, _) = build_orientable(&starter, 6, 7).ctx()?;
    ensure!(s7 == cyc("000110010111001101"), "S7 = {s7}");
    let (s8, _) = build_orientable(&starter, 6, 8).ctx()?;
    ensure!(
        s8 == cyc("0000100011010001001111101110010111011"),
        "S8 = {s8}"
    );

    // The build verifies orientability through order 26 on its own; the
    // loop below re-checks the smaller members independently of it.
    let mut current = starter.clone();
    for n in 6..=16 {
        ensure!(
            verify_orientable(&current, n).ctx()?.is_ok(),
            "order {n} not orientable"
        );
        ensure!(is_good(&current, n).ctx()?, "order {n} not good");
        ensure!(current.weight() % 2 == 1, "order {n} has even weight");
        if n < 16 {
            current = build_orientable(&current, n, n + 1).ctx()?.0;
        }
    }

    let (_, trace) = build_orientable(&starter, 6, 30).ctx()?;
    for (k, step) in trace.steps.iter().enumerate() {
        let predicted = predicted_period_after(9, k as u32);
        ensure!(
            step.period as u128 == predicted,
            "order {}: built {} predicted {predicted}",
            step.order,
            step.period
        );
    }
    let last = trace.steps.last().unwrap();
    Ok(format!(
        "periods 9..149 exact, S7/S8 bit-exact, closed form holds to order {} (period {})",
        last.order, last.period
    ))
}

fn aperiodic_family() -> Check {
    let expected_words = ["01", "0011", "00010111", "00001101001111"];
    let expected_lengths = [2usize, 4, 8, 14, 26, 48, 92, 178, 350];
    let (_, trace) = build_aos(10).ctx()?;
    ensure!(
        trace.periods() == expected_lengths,
        "lengths {:?}",
        trace.periods()
    );
    for (k, &len) in expected_lengths.iter().enumerate() {
        let n = k + 2;
        let predicted = predicted_length(2, 2, k as u32);
        ensure!(
            predicted == len as u128,
            "order {n}: closed form {predicted}"
        );
        let (s, _) = build_aos(n).ctx()?;
        if let Some(w) = expected_words.get(k) {
            ensure!(s == word(w), "S{n} = {s}");
        }
        ensure!(is_ideal(&s, n), "S{n} not ideal");
        ensure!(
            verify_orientable(&s, n).ctx()?.is_ok(),
            "S{n} not orientable"
        );
    }
    Ok("S2..S5 bit-exact, lengths 2..350 match build and closed form, all ideal".into())
}

fn bounds() -> Check {
    let dai: Vec<u128> = (5..=9).map(dai_bound).collect::<Result<_, _>>().ctx()?;
    ensure!(dai == [6, 17, 40, 96, 206], "dai bounds {dai:?}");
    for n in 2..=16 {
        let b = burns_bound(n).ctx()?;
        let (s, _) = build_aos(n).ctx()?;
        ensure!(
            b >= s.len() as u128,
            "order {n}: bound {b} < built {}",
            s.len()
        );
    }
    for &(n, len) in LITERATURE_AOS_LENGTHS.iter() {
        let b = burns_bound(n).ctx()?;
        ensure!(b >= len as u128, "order {n}: bound {b} < published {len}");
    }
    Ok("dai 6,17,40,96,206; burns bound dominates built and published lengths".into())
}

fn search() -> Check {
    let config = SearchConfig::default();
    let minute = Duration::from_secs(60);
    let cases: Vec<(&str, usize, Search)> = vec![
        (
            "OS(5)",
            6,
            Box::new(|| max_orientable_period(5, &SearchConfig::default())),
        ),
        (
            "AOS(4)",
            8,
            Box::new(|| max_aos_length(4, &SearchConfig::default())),
        ),
        (
            "AOS(5)",
            14,
            Box::new(|| max_aos_length(5, &SearchConfig::default())),
        ),
        (
            "OS(6)",
            16,
            Box::new(move || max_orientable_period(6, &config)),
        ),
    ];
    let mut report = Vec::new();
    for (label, want, f) in cases {
        let start = Instant::now();
        let r = f().ctx()?;
        let dt = start.elapsed();
        ensure!(r.exhaustive, "{label}: search not exhaustive");
        ensure!(r.best == want, "{label}: found {} expected {want}", r.best);
        ensure!(dt < minute, "{label} took {dt:?}");
        report.push(format!("{label}={} ({:.2} s)", r.best, dt.as_secs_f64()));
    }
    Ok(report.join(", "))
}

fn stretch() -> Check {
    let config = SearchConfig::default();
    let t = Instant::now();
    let aos = max_aos_length(7, &config).ctx()?;
    ensure!(aos.exhaustive && aos.best == 48, "AOS(7) = {}", aos.best);
    let os = max_orientable_period(7, &config).ctx()?;
    ensure!(os.exhaustive && os.best == 36, "OS(7) = {}", os.best);
    Ok(format!(
        "AOS(7)=48 OS(7)=36 in {:.1} s",
        t.elapsed().as_secs_f64()
    ))
}

fn de_bruijn() -> Check {
    for n in 1..=12 {
        let c = debruijn_lempel(n).ctx()?;
        ensure!(c.period() == 1 << n, "order {n}: period {}", c.period());
        ensure!(
            verify_nwindow(&c, n).ctx()?.is_ok(),
            "order {n} repeats a window"
        );
        // Independent count: every n-tuple seen exactly once.
        let bits = c.unroll(c.period() + n - 1);
        let distinct: HashSet<&[u8]> = bits.windows(n).collect();
        ensure!(
            distinct.len() == 1 << n,
            "order {n}: {} distinct windows",
            distinct.len()
        );
    }
    Ok("orders 1..12 have period 2^n and every window once".into())
}

fn window_set(view: SeqView<'_>, n: usize) -> Vec<u64> {
    view.windows(n).collect()
}

fn rev(v: u64, n: usize) -> u64 {
    v.reverse_bits() >> (64 - n)
}

fn properties() -> Check {
    // Homomorphism round trips.
    for bits in ["101", "100", "001101", "001010111", "0001011", "1"] {
        let c = cyc(bits);
        for m in d_inverse_periodic(&c).members() {
            ensure!(d_forward_periodic(m) == c, "D(D^-1[{bits}]) != [{bits}]");
        }
        let parity_split = d_inverse_periodic(&c).is_pair();
        ensure!(
            parity_split == c.weight().is_multiple_of(2),
            "parity case split fails on [{bits}]"
        );
    }
    for bits in ["01", "0011", "0110100", "1"] {
        let w = word(bits);
        for m in d_inverse_aperiodic(&w).members() {
            ensure!(
                d_forward_aperiodic(m).ctx()? == w,
                "aperiodic round trip on {bits}"
            );
        }
    }

    // Orientable implies n-window, locator round trip, tuple count.
    let starter = default_starter();
    let mut periodic = vec![(starter.clone(), 6)];
    for n in 7..=12 {
        periodic.push((build_orientable(&starter, 6, n).ctx()?.0, n));
    }
    for (c, n) in &periodic {
        ensure!(
            verify_nwindow(c, *n).ctx()?.is_ok(),
            "order {n} not n-window"
        );
        locator_round_trip(c.view(), *n)?;
    }
    for n in 2..=14 {
        let (s, _) = build_aos(n).ctx()?;
        locator_round_trip(s.view(), n)?;
        let mut all: HashSet<u64> = HashSet::new();
        for w in window_set(s.view(), n) {
            all.insert(w);
            all.insert(rev(w, n));
        }
        ensure!(
            all.len() == 2 * s.len() - 2 * n + 2,
            "order {n}: {} tuples",
            all.len()
        );
    }

    let mut worst = f64::INFINITY;
    for n in 8..=24 {
        let (s, _) = build_aos(n).ctx()?;
        let ratio = s.len() as f64 / burns_bound(n).ctx()? as f64;
        ensure!(ratio >= 0.66, "order {n}: ratio {ratio:.4}");
        worst = worst.min(ratio);
    }
    Ok(format!(
        "round trips, parity split, n-window, locator, 2l-2n+2; min ratio {worst:.4} over n=8..24"
    ))
}

fn locator_round_trip(view: SeqView<'_>, n: usize) -> Result<(), String> {
    let idx = LocatorIndex::build(view, n).ctx()?;
    for (position, w) in view.windows(n).enumerate() {
        let t = orientable::Tuple::from_value(w, n).ctx()?;
        let fwd = idx.locate(&t).ctx()?;
        ensure!(
            fwd.map(|l| (l.position, l.orientation)) == Some((position, Orientation::Forward)),
            "forward lookup at {position}"
        );
        let back = idx.locate(&t.reverse()).ctx()?;
        ensure!(
            back.map(|l| (l.position, l.orientation)) == Some((position, Orientation::Reverse)),
            "reverse lookup at {position}"
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        // Keeps `cargo test -- --list` quiet for a harness-less target.
        return ExitCode::SUCCESS;
    }

    let criteria: Vec<Criterion> = vec![
        (
            "1 worked examples",
            Box::new(worked_examples),
            Duration::from_secs(1),
        ),
        (
            "2 periodic family",
            Box::new(periodic_family),
            Duration::from_secs(10),
        ),
        (
            "3 aperiodic family",
            Box::new(aperiodic_family),
            Duration::from_secs(10),
        ),
        ("4 bounds", Box::new(bounds), Duration::from_secs(1)),
        ("5 search", Box::new(search), Duration::from_secs(240)),
        ("6 de Bruijn", Box::new(de_bruijn), Duration::from_secs(5)),
        (
            "7 property suites",
            Box::new(properties),
            Duration::from_secs(60),
        ),
    ];

    let mut failed = 0;
    for (name, check, limit) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let dt = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if dt <= *limit => "PASS",
            _ => "FAIL",
        };
        let detail = match outcome {
            Ok(d) if dt <= *limit => d,
            Ok(d) => format!("{d}; too slow"),
            Err(e) => e,
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "{verdict} {name:<20} {:>8.3} s (limit {} s)  {detail}",
            dt.as_secs_f64(),
            limit.as_secs()
        );
    }
    let start = Instant::now();
    let dt = |s: Instant| s.elapsed().as_secs_f64();
    match stretch() {
        Ok(d) => println!(
            "PASS 5b order-7 search    {:>8.3} s (not gating)  {d}",
            dt(start)
        ),
        Err(e) => println!(
            "MISS 5b order-7 search    {:>8.3} s (not gating)  {e}",
            dt(start)
        ),
    }

    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
