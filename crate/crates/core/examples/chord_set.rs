//! Chord set of a single function given on the command line as a JSON file,
//! or of a built-in mountain/valley when no path is passed.

use horizontal_chords::chordset::{chord_exists, chord_set_with_stats};
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::q;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = match std::env::args().nth(1) {
        Some(path) => PLFunction::from_json(&std::fs::read_to_string(path)?)?,
        None => PLFunction::from_fractions(&[((0, 1), (0, 1)), ((1, 4), (1, 1)), ((3, 4), (-1, 1)), ((1, 1), (0, 1))]),
    };
    let (s, stats) = chord_set_with_stats(&f);
    println!("breakpoints: {}", f.points().len());
    println!("S(f) = {s:?}");
    println!("measure = {}, full = {}", s.measure(), s.complement_in_unit().is_empty());
    println!("arrangement: {stats:?}");

    for ell in [q(1, 3), q(1, 2), q(2, 3)] {
        match chord_exists(&f, &ell)? {
            Some(w) => println!("  l = {ell}: chord at s = {}", w.s),
            None => println!("  l = {ell}: no chord"),
        }
    }
    Ok(())
}
