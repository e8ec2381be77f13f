//! Orientable binary sequences.
//!
//! An orientable sequence of order `n` is a binary sequence in which every
//! `n`-bit window occurs at most once, in either reading direction. A
//! reader that sees any `n` consecutive bits therefore learns both its
//! position and its direction of travel.
//!
//! This crate builds such sequences recursively with the Lempel
//! homomorphism `D` (adjacent-bit XOR):
//!
//! * [`periodic`] lifts a good orientable cycle of order `n` to order
//!   `n + 1` by inverting `D` and, when needed, inserting a single 1 to keep
//!   the weight odd;
//! * [`aperiodic`] lifts an ideal orientable word by inverting `D` and
//!   overlapping the result with its reversed complement;
//! * [`join`] uses the same machinery for de Bruijn cycles.
//!
//! [`verify`] holds exact checkers for every window property, [`search`]
//! finds optimal sequences at small orders, and [`locator`] turns an
//! orientable sequence into a position/direction lookup table.
//!
//! ```
//! use orientable::periodic::{build_orientable, default_starter};
//! use orientable::verify::verify_orientable;
//!
//! let (cycle, trace) = build_orientable(&default_starter(), 6, 10).unwrap();
//! assert_eq!(cycle.period(), 149);
//! assert_eq!(trace.periods(), vec![9, 18, 37, 74, 149]);
//! assert!(verify_orientable(&cycle, 10).unwrap().is_ok());
//! ```

pub mod aperiodic;
pub mod cli;
pub mod error;
pub mod format;
pub mod join;
pub mod lempel;
pub mod locator;
pub mod periodic;
pub mod search;
pub mod seq;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use lempel::InverseImage;
pub use locator::{Location, LocatorIndex, Orientation};
pub use periodic::{ConstructionTrace, TraceStep};
pub use seq::{FiniteSeq, GeneratingCycle, Mode, SeqView, Sequence, Tuple};
pub use verify::{Counterexample, Verdict, ViolationKind};
