//! Writes an SVG of a function with its chord set drawn underneath.
//!
//! `cargo run --example plot -- fixtures/isolated.json isolated.svg`

use horizontal_chords::chordset::chord_set;
use horizontal_chords::constructions::sn_realization;
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::svg;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let f = match args.next() {
        Some(path) => PLFunction::from_json(&std::fs::read_to_string(path)?)?,
        None => sn_realization(3)?,
    };
    let out = args.next().unwrap_or_else(|| "chords.svg".into());
    std::fs::write(&out, svg::render(&f, &chord_set(&f)))?;
    println!("wrote {out}");
    Ok(())
}
