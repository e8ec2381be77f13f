//! Inverting the adjacent-XOR map D on a few small cycles.
//!
//! Even-weight cycles split into a complementary pair of the same
//! period; odd-weight cycles lift to one cycle of twice the period.
//!
//!     cargo run --example lempel_inverse -- 001101

use orientable::lempel::{d_forward_periodic, d_inverse_periodic};
use orientable::{GeneratingCycle, InverseImage};

fn main() -> orientable::Result<()> {
    let inputs: Vec<String> = match std::env::args().skip(1).collect::<Vec<_>>() {
        v if v.is_empty() => ["101", "100", "001101", "000100111011"]
            .map(String::from)
            .to_vec(),
        v => v,
    };
    for s in inputs {
        let c: GeneratingCycle = s.parse()?;
        match d_inverse_periodic(&c) {
            InverseImage::ComplementaryPair { first, second } => {
                println!(
                    "D^-1[{c}] = {{[{first}], [{second}]}}  (weight {} even)",
                    c.weight()
                );
            }
            single @ InverseImage::DoubledSingle(_) => {
                let t = single.first();
                println!(
                    "D^-1[{c}] = {{[{t}]}}  (weight {} odd, period {} -> {})",
                    c.weight(),
                    c.period(),
                    t.period()
                );
                let shifts: Vec<String> = single
                    .aligned_solutions()
                    .iter()
                    .map(|s| format!("[{s}]"))
                    .collect();
                println!("    both phases: {}", shifts.join(" "));
            }
        }
        for t in d_inverse_periodic(&c).members() {
            assert_eq!(d_forward_periodic(t), c);
        }
    }
    Ok(())
}
