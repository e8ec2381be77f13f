//! Checking window properties and reading counterexamples.
//!
//!     cargo run --example verify_sequence -- 0011010 4 aperiodic

use orientable::verify::{verify_nwindow, verify_orientable};
use orientable::{Mode, Sequence};

fn report(bits: &str, n: usize, mode: Mode) -> orientable::Result<()> {
    let seq = Sequence::from_bits(bits.chars().map(|c| (c == '1') as u8).collect(), mode)?;
    let window = verify_nwindow(&seq, n)?;
    let orient = verify_orientable(&seq, n)?;
    println!("{seq} ({mode}, n={n})");
    match window {
        Ok(()) => println!("  n-window:   yes"),
        Err(ce) => println!("  n-window:   no, {ce}"),
    }
    match orient {
        Ok(()) => println!("  orientable: yes"),
        Err(ce) => println!("  orientable: no, {ce}"),
    }
    Ok(())
}

fn main() -> orientable::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [bits, n, rest @ ..] = &args[..] {
        let n = n
            .parse()
            .map_err(|_| orientable::Error::Parse(format!("bad order {n}")))?;
        let mode = rest.first().map_or(Ok(Mode::Periodic), |m| m.parse())?;
        return report(bits, n, mode);
    }
    report("001101", 5, Mode::Periodic)?;
    report("00110", 2, Mode::Periodic)?;
    report("00110", 3, Mode::Aperiodic)?;
    report("00010111", 4, Mode::Aperiodic)
}
