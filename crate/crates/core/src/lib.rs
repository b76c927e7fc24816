//! Exact horizontal chord sets of piecewise linear functions on `[0, 1]`.
//!
//! A function `f` with `f(0) = f(1) = 0` has a horizontal chord of length
//! `l` when `f(s) = f(s + l)` for some `s`. [`chordset::chord_set`] computes
//! the set of all such lengths as a finite union of closed intervals, with
//! rational arithmetic throughout.
//!
//! ```
//! use horizontal_chords::chordset::chord_set;
//! use horizontal_chords::plfunc::PLFunction;
//! use horizontal_chords::rational::q;
//!
//! let f = PLFunction::from_fractions(&[((0, 1), (0, 1)), ((1, 4), (1, 1)), ((3, 4), (-1, 1)), ((1, 1), (0, 1))]);
//! let s = chord_set(&f);
//! assert!(s.contains(&q(1, 2)) && !s.contains(&q(3, 4)));
//! ```

pub mod chordset;
pub mod constructions;
pub mod error;
pub mod family;
pub mod hopf;
pub mod interval;
pub mod plfunc;
pub mod rational;
pub mod report;
pub mod svg;
