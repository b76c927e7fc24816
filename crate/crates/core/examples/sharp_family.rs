//! The sets S_n that attain the half-measure bound, and zigzag functions
//! realizing them.

use horizontal_chords::chordset::chord_set;
use horizontal_chords::constructions::{sn_intervals, sn_measure_identity, sn_realization, verify_chordset_equals};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let top: u32 = std::env::args().nth(1).map(|a| a.parse()).transpose()?.unwrap_or(6);
    for n in 1..=top {
        let target = sn_intervals(n)?;
        let f = sn_realization(n)?;
        let identity = sn_measure_identity(n)?;
        let status = match verify_chordset_equals(&f, &target) {
            None => "realized".to_string(),
            Some(d) => format!("mismatch {d:?}"),
        };
        println!(
            "n = {n:2}: measure {} (identity holds: {}), {} breakpoints, {status}",
            chord_set(&f).measure(),
            identity.holds(),
            f.points().len()
        );
    }
    println!("S_3 = {:?}", sn_intervals(3)?);
    Ok(())
}
