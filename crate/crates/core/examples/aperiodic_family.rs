//! Ideal aperiodic orientable words grown from 01 by merging the D
//! preimage with its reversed complement.
//!
//!     cargo run --example aperiodic_family -- 16

use orientable::aperiodic::{build_aos, burns_bound, predicted_length};

fn main() -> orientable::Result<()> {
    let target: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let (_, trace) = build_aos(target)?;
    println!("order  length  closed-form  bound   ratio");
    for (k, step) in trace.steps.iter().enumerate() {
        let bound = burns_bound(step.order)?;
        println!(
            "{:>5}  {:>6}  {:>11}  {:>6}  {:.3}",
            step.order,
            step.period,
            predicted_length(2, 2, k as u32),
            bound,
            step.period as f64 / bound as f64
        );
    }
    for n in 2..=5 {
        println!("S{n} = {}", build_aos(n)?.0);
    }
    Ok(())
}
