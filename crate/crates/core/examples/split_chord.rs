//! Splitting a chord of length a + b into a chord of length a or b, and the
//! periodic coincidence behind it.

use horizontal_chords::chordset::chord_exists;
use horizontal_chords::hopf::{periodic_coincidence, split_chord, PeriodicPL};
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = PLFunction::from_fractions(&[((0, 1), (0, 1)), ((1, 5), (2, 1)), ((3, 5), (-1, 1)), ((1, 1), (0, 1))]);
    for (a, b) in [(q(1, 4), q(1, 4)), (q(1, 3), q(1, 6)), (q(1, 10), q(3, 5))] {
        let total = &a + &b;
        if chord_exists(&f, &total)?.is_none() {
            println!("a = {a}, b = {b}: no chord of length {total}");
            continue;
        }
        let w = split_chord(&f, &a, &b)?;
        println!("a = {a}, b = {b}: chord of length {} at s = {} (verified {})", w.ell, w.s, w.verify(&f));
    }

    let g = PeriodicPL::from_restriction(&f, &q(0, 1), &q(1, 1))?;
    let a = q(2, 7);
    let x = periodic_coincidence(&g, &a);
    println!("periodic extension, period {}: g({}) = g({}) = {}", g.period(), &x - &a, x, g.evaluate(&x));
    Ok(())
}
