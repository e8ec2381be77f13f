//! Exhaustive search for the longest orientable sequences of small order,
//! with an interrupted run picked up again from its checkpoint.
//!
//!     cargo run --release --example search_optimal

use orientable::aperiodic::burns_bound;
use orientable::periodic::dai_bound;
use orientable::search::{max_aos_length, max_orientable_period, resume, SearchConfig};

fn main() -> orientable::Result<()> {
    let cfg = SearchConfig::default();
    for n in 5..=7 {
        let r = max_orientable_period(n, &cfg)?;
        println!(
            "OS({n}):  period {:>3} (bound {:>3})  {} nodes  {}",
            r.best,
            dai_bound(n)?,
            r.nodes,
            r.witness.unwrap_or_default()
        );
    }
    for n in 3..=7 {
        let r = max_aos_length(n, &cfg)?;
        println!(
            "AOS({n}): length {:>3} (bound {:>3})  {} nodes  {}",
            r.best,
            burns_bound(n)?,
            r.nodes,
            r.witness.unwrap_or_default()
        );
    }

    let partial = max_orientable_period(6, &SearchConfig::with_budget(200))?;
    let cp = partial.checkpoint.expect("budget runs out first");
    let json = serde_json::to_string(&cp).expect("serializable");
    println!(
        "\nstopped after {} nodes with best {}; checkpoint is {} bytes",
        cp.nodes,
        cp.best,
        json.len()
    );
    let done = resume(&serde_json::from_str(&json).expect("round trip"), None)?;
    println!(
        "resumed: period {} exhaustive={}",
        done.best, done.exhaustive
    );
    Ok(())
}
