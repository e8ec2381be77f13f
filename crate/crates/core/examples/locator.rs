//! Recovering position and direction from a few bits read off an
//! orientable cycle.

use orientable::periodic::{build_orientable, default_starter};
use orientable::{LocatorIndex, Tuple};

fn main() -> orientable::Result<()> {
    let n = 9;
    let (track, _) = build_orientable(&default_starter(), 6, n)?;
    let idx = LocatorIndex::build(&track, n)?;
    println!(
        "track of period {}, {} indexed windows",
        track.period(),
        idx.len()
    );

    for start in [0, 17, 50] {
        let seen = track.window(start, n)?;
        let backwards = seen.reverse();
        for read in [seen, backwards] {
            let loc = idx.locate(&read)?.expect("every window is indexed");
            println!(
                "read {read} -> position {:>2} {}",
                loc.position, loc.orientation
            );
        }
    }

    let foreign: Tuple = "111111111".parse()?;
    println!("read {foreign} -> {:?}", idx.locate(&foreign)?);
    Ok(())
}
