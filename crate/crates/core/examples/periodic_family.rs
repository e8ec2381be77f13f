//! The periodic orientable family grown from [001010111].
//!
//! Each step inverts D and, when the weight comes out even, lengthens
//! the unique longest run of ones by one bit.
//!
//!     cargo run --release --example periodic_family -- 18

use orientable::periodic::{build_orientable, dai_bound, default_starter, predicted_period_after};

fn main() -> orientable::Result<()> {
    let target: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(12);
    let starter = default_starter();
    let (last, trace) = build_orientable(&starter, 6, target)?;

    println!("order  period  closed-form  bound       extra-1");
    for (k, step) in trace.steps.iter().enumerate() {
        let bound = dai_bound(step.order)?;
        println!(
            "{:>5}  {:>6}  {:>11}  {:>10}  {}",
            step.order,
            step.period,
            predicted_period_after(starter.period() as u64, k as u32),
            bound,
            step.insert_position
                .map_or("-".to_string(), |r| format!("at {r}")),
        );
    }
    if last.period() <= 80 {
        println!("\nS{target} = {last}");
    }
    Ok(())
}
