//! Closed-form verdict for a two-mountain function, compared with the exact
//! chord set of its realization.

use horizontal_chords::chordset::chord_set;
use horizontal_chords::family::{classify_closed_form, realize, TwoMountainParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        TwoMountainParams::from_fractions([(1, 5), (1, 5), (3, 5)], [(1, 10), (1, 10), (3, 10)], [(1, 10), (-1, 2), (1, 1)]),
        TwoMountainParams::from_fractions([(1, 3), (1, 3), (1, 3)], [(1, 6), (1, 6), (1, 6)], [(1, 2), (-1, 1), (1, 1)]),
    ];
    for p in &cases {
        let v = classify_closed_form(p);
        let f = realize(p)?;
        let exact = chord_set(&f).complement_in_unit();
        println!(
            "widths ({}, {}, {}), heights ({}, {}, {})",
            p.w_l, p.w_v, p.w_r, p.h_l, p.h_v, p.h_r
        );
        println!("  full: {} ({:?})", v.full, v.case);
        println!("  predicted complement {:?}", v.predicted_complement());
        println!("  exact complement     {exact:?}");
        let m = &v.intermediates;
        println!("  s_* = {}, s^* = {}, T = {:?}, T1 = {:?}, T2 = {:?}", m.s_star, m.s_star_upper, m.t, m.t1, m.t2);
    }
    Ok(())
}
