#![allow(dead_code)]

use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::Rational;
use proptest::prelude::*;
use rand::Rng;

/// Denominator of the abscissa grid for random functions.
pub const X_GRID: i64 = 48;

/// Interior abscissae as distinct grid indices, and values `p / q` with
/// small `p`, `q`. A value of zero is made likely so plateaus and touching
/// zeros show up often.
fn assemble(mut xs: Vec<i64>, ys: Vec<(i64, i64)>) -> PLFunction {
    xs.sort();
    xs.dedup();
    let mut pts = vec![(Rational::zero(), Rational::zero())];
    for (x, (p, q)) in xs.iter().zip(ys) {
        pts.push((Rational::new(*x, X_GRID), Rational::new(p, q)));
    }
    pts.push((Rational::one(), Rational::zero()));
    PLFunction::new(pts).expect("grid points are increasing")
}

/// A random function with at most `max_points` breakpoints in total.
pub fn random_function(rng: &mut impl Rng, max_points: usize) -> PLFunction {
    let interior = rng.random_range(1..=max_points - 2);
    let xs: Vec<i64> = (0..interior).map(|_| rng.random_range(1..X_GRID)).collect();
    let ys: Vec<(i64, i64)> = (0..interior)
        .map(|_| {
            if rng.random_bool(0.15) {
                (0, 1)
            } else {
                (rng.random_range(-6..=6), rng.random_range(1..=3))
            }
        })
        .collect();
    assemble(xs, ys)
}

pub fn arb_function(max_points: usize) -> impl Strategy<Value = PLFunction> {
    let value = prop_oneof![1 => Just((0i64, 1i64)), 6 => (-6i64..=6, 1i64..=3)];
    prop::collection::vec((1..X_GRID, value), 1..=max_points - 2)
        .prop_map(|v| {
            let (xs, ys) = v.into_iter().unzip();
            assemble(xs, ys)
        })
}

pub fn arb_unit_rational(denom: i64) -> impl Strategy<Value = Rational> {
    (0..=denom).prop_map(move |k| Rational::new(k, denom))
}

pub fn negate(f: &PLFunction) -> PLFunction {
    PLFunction::new(f.points().iter().map(|p| (p.x.clone(), -p.y.clone()))).unwrap()
}

pub fn fixtures_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}
