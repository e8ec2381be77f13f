//! Reference tables regenerated from the constructions.

use std::fmt::Write as _;

use serde::Serialize;

use crate::aperiodic::{build_aos, burns_bound, predicted_length, LITERATURE_AOS_LENGTHS};
use crate::error::Result;
use crate::periodic::{
    build_orientable, dai_bound, default_starter, predicted_period_after, DEFAULT_STARTER_ORDER,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundRow {
    pub order: usize,
    pub max_period: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub order: usize,
    /// Period (periodic family) or length (aperiodic family) as built.
    pub size: usize,
    /// The same value from the closed form.
    pub predicted: u128,
    pub inserted_bit: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiteratureRow {
    pub order: usize,
    pub length: u64,
    pub bound: u128,
}

/// Upper bounds on the period of orientable cycles, orders 5..=9.
pub fn period_bounds() -> Result<Vec<BoundRow>> {
    (5..=9)
        .map(|n| {
            Ok(BoundRow {
                order: n,
                max_period: dai_bound(n)?,
            })
        })
        .collect()
}

/// The periodic family from the default starter, up to `max_order`.
pub fn periodic_family(max_order: usize) -> Result<Vec<FamilyRow>> {
    let starter = default_starter();
    let (_, trace) = build_orientable(&starter, DEFAULT_STARTER_ORDER, max_order)?;
    Ok(trace
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| FamilyRow {
            order: s.order,
            size: s.period,
            predicted: predicted_period_after(starter.period() as u64, k as u32),
            inserted_bit: s.inserted_bit,
        })
        .collect())
}

/// Published search results for aperiodic words next to the upper bound.
pub fn literature_aos() -> Result<Vec<LiteratureRow>> {
    LITERATURE_AOS_LENGTHS
        .iter()
        .map(|&(order, length)| {
            Ok(LiteratureRow {
                order,
                length,
                bound: burns_bound(order)?,
            })
        })
        .collect()
}

/// The aperiodic family grown from `01`, up to `max_order`.
pub fn aperiodic_family(max_order: usize) -> Result<Vec<FamilyRow>> {
    let (_, trace) = build_aos(max_order)?;
    Ok(trace
        .steps
        .iter()
        .enumerate()
        .map(|(k, s)| FamilyRow {
            order: s.order,
            size: s.period,
            predicted: predicted_length(2, 2, k as u32),
            inserted_bit: false,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AllTables {
    pub period_bounds: Vec<BoundRow>,
    pub periodic_family: Vec<FamilyRow>,
    pub literature_aos: Vec<LiteratureRow>,
    pub aperiodic_family: Vec<FamilyRow>,
}

pub fn all() -> Result<AllTables> {
    Ok(AllTables {
        period_bounds: period_bounds()?,
        periodic_family: periodic_family(10)?,
        literature_aos: literature_aos()?,
        aperiodic_family: aperiodic_family(10)?,
    })
}

/// Markdown rendering of [`all`].
pub fn render_markdown() -> Result<String> {
    let t = all()?;
    let mut out = String::new();
    let w = &mut out;
    // Writing into a String cannot fail.
    let _ = writeln!(w, "## Upper bound on the period of an orientable cycle\n");
    let _ = writeln!(w, "| order | max period |\n|---|---|");
    for r in &t.period_bounds {
        let _ = writeln!(w, "| {} | {} |", r.order, r.max_period);
    }
    let _ = writeln!(w, "\n## Periodic family from [001010111]\n");
    let _ = writeln!(
        w,
        "| order | period | closed form | extra 1 inserted |\n|---|---|---|---|"
    );
    for r in &t.periodic_family {
        let _ = writeln!(
            w,
            "| {} | {} | {} | {} |",
            r.order,
            r.size,
            r.predicted,
            if r.inserted_bit { "yes" } else { "no" }
        );
    }
    let _ = writeln!(
        w,
        "\n## Aperiodic words: published search results (literature values)\n"
    );
    let _ = writeln!(w, "| order | length | upper bound |\n|---|---|---|");
    for r in &t.literature_aos {
        let _ = writeln!(w, "| {} | {} | {} |", r.order, r.length, r.bound);
    }
    let _ = writeln!(w, "\n## Aperiodic family from 01\n");
    let _ = writeln!(w, "| order | length | closed form |\n|---|---|---|");
    for r in &t.aperiodic_family {
        let _ = writeln!(w, "| {} | {} | {} |", r.order, r.size, r.predicted);
    }
    Ok(out)
}
