//! Joining two disjoint window cycles at a pair of conjugate windows.

use orientable::join::{find_conjugate_positions, join_at};
use orientable::lempel::d_inverse_periodic;
use orientable::verify::verify_nwindow;
use orientable::{GeneratingCycle, InverseImage};

fn main() -> orientable::Result<()> {
    let s: GeneratingCycle = "011".parse()?;
    let t: GeneratingCycle = "100".parse()?;
    let (i, j) = find_conjugate_positions(&s, &t, 3).expect("conjugate pair exists");
    println!(
        "{s} and {t}: conjugate windows at {i} and {j} -> {}",
        join_at(&s, &t, i, j, 3)?
    );

    // The halves of an even-weight preimage are always joinable this way.
    let db4: GeneratingCycle = "0000100110101111".parse()?;
    if let InverseImage::ComplementaryPair { first, second } = d_inverse_periodic(&db4) {
        let (i, j) = find_conjugate_positions(&first, &second, 5).expect("pair exists");
        let joined = join_at(&first, &second, i, j, 5)?;
        println!(
            "{first} + {second}\n  = {joined} (5-window: {})",
            verify_nwindow(&joined, 5)?.is_ok()
        );
    }
    Ok(())
}
