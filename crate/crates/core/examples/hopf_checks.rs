//! Additivity of the complement and the half-measure bound on a few functions.

use horizontal_chords::chordset::chord_set;
use horizontal_chords::hopf::{check_additive_complement, check_half_measure, half_measure_ratio};
use horizontal_chords::plfunc::PLFunction;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let functions = [
        ("tent", PLFunction::from_fractions(&[((0, 1), (0, 1)), ((1, 2), (1, 1)), ((1, 1), (0, 1))])),
        (
            "mountain/valley",
            PLFunction::from_fractions(&[((0, 1), (0, 1)), ((1, 4), (1, 1)), ((3, 4), (-1, 1)), ((1, 1), (0, 1))]),
        ),
        (
            "zigzag",
            PLFunction::from_fractions(&[
                ((0, 1), (0, 1)),
                ((1, 6), (-1, 6)),
                ((5, 12), (1, 12)),
                ((7, 12), (-1, 12)),
                ((5, 6), (1, 6)),
                ((1, 1), (0, 1)),
            ]),
        ),
    ];
    for (name, f) in &functions {
        let s = chord_set(f);
        let hm = check_half_measure(&s);
        println!("{name}: S = {s:?}");
        match check_additive_complement(&s)? {
            None => println!("  complement additive"),
            Some(v) => println!("  additivity fails: {v:?}"),
        }
        println!("  min λ(S ∩ [0,d])/d = {} at d = {}", hm.min_ratio, hm.argmin_d);
        for gap in s.complement_in_unit() {
            let d = gap.lo.midpoint(&gap.hi);
            println!("  gap {gap:?}: ratio at {d} is {}", half_measure_ratio(&s, &d));
        }
    }
    Ok(())
}
