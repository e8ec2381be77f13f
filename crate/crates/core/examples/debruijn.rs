//! de Bruijn cycles from the Lempel recursion.
//!
//!     cargo run --example debruijn -- 6

use orientable::join::debruijn_lempel;
use orientable::verify::verify_nwindow;

fn main() -> orientable::Result<()> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    for n in 1..=max {
        let c = debruijn_lempel(n)?;
        let ok = verify_nwindow(&c, n)?.is_ok();
        // Print short ones in full.
        if n <= 6 {
            println!("n={n:<2} period {:<5} {c}", c.period());
        } else {
            println!("n={n:<2} period {:<5} window-unique: {ok}", c.period());
        }
        assert!(ok);
    }
    Ok(())
}
