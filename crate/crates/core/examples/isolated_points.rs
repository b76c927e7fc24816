//! A function whose chord set has isolated points beyond 1/2.
//! Each point is checked against the scan oracle on both sides.

use horizontal_chords::chordset::{chord_exists, chord_set};
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = PLFunction::from_fractions(&[
        ((0, 1), (0, 1)),
        ((1, 16), (1, 1)),
        ((1, 8), (0, 1)),
        ((5, 16), (1, 1)),
        ((1, 2), (0, 1)),
        ((5, 8), (-1, 1)),
        ((3, 4), (0, 1)),
        ((7, 8), (-1, 1)),
        ((1, 1), (0, 1)),
    ]);
    let s = chord_set(&f);
    println!("S(f) = {s:?}");

    let eps = q(1, 1000);
    for p in s.isolated_points() {
        let at = chord_exists(&f, &p)?.is_some();
        let left = chord_exists(&f, &(&p - &eps))?.is_some();
        let right = p < 1 && chord_exists(&f, &(&p + &eps))?.is_some();
        println!("  {p}: chord {at}, at -{eps} {left}, at +{eps} {right}");
    }
    Ok(())
}
