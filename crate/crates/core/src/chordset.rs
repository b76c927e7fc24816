//! Exact horizontal chord sets.
//!
//! Two independent routes are provided:
//!
//! * [`chord_set`] projects the zero set of `g(s, ℓ) = f(s + ℓ) - f(s)` onto
//!   the ℓ-axis. Working in coordinates `(s, u)` with `u = s + ℓ`, the lines
//!   `s = t_i` and `u = t_j` through the breakpoints cut the triangle
//!   `0 <= s <= u <= 1` into rectangles (and triangles on the diagonal). On
//!   each cell `g` is affine, so its zero set there is empty, a segment, or
//!   the whole cell, and its ℓ-projection is the hull of `u - s` over the
//!   zero points found on the cell boundary.
//! * [`chord_exists`] decides a single length by scanning the
//!   one-variable function `s ↦ f(s + ℓ) - f(s)` for a sign change.
//!
//! Isolated chord lengths come out of the first route naturally: cells whose
//! zero set is a single point, or a segment of constant ℓ.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{ClosedInterval, IntervalSet};
use crate::plfunc::PLFunction;
use crate::rational::Rational;

/// A chord `f(s) = f(s + ell)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordWitness {
    pub s: Rational,
    pub ell: Rational,
}

impl ChordWitness {
    /// Checks the witness exactly against `f`.
    pub fn verify(&self, f: &PLFunction) -> bool {
        let end = &self.s + &self.ell;
        if self.s.is_negative() || self.ell.is_negative() || end > 1 {
            return false;
        }
        f.value_at(&self.s) == f.value_at(&end)
    }
}

/// Decides whether `ell ∈ S(f)`, returning the leftmost witness.
pub fn chord_exists(f: &PLFunction, ell: &Rational) -> Result<Option<ChordWitness>> {
    if ell.is_negative() || *ell > 1 {
        return Err(Error::OutOfRange {
            what: "ell",
            value: ell.clone(),
            range: "[0, 1]",
        });
    }
    let end = Rational::one() - ell;
    let mut candidates: Vec<Rational> = Vec::with_capacity(2 * f.points().len() + 2);
    candidates.push(Rational::zero());
    candidates.push(end.clone());
    for t in f.breakpoints() {
        if *t <= end {
            candidates.push(t.clone());
        }
        let shifted = t - ell;
        if !shifted.is_negative() && shifted <= end {
            candidates.push(shifted);
        }
    }
    candidates.sort();
    candidates.dedup();

    let diff = |s: &Rational| f.value_at(&(s + ell)) - f.value_at(s);
    let mut prev: Option<(Rational, Rational)> = None;
    for s in candidates {
        let g = diff(&s);
        if let Some((ps, pg)) = &prev {
            if pg.signum() * g.signum() < 0 {
                let root = ps + pg * (&s - ps) / (pg - &g);
                return Ok(Some(ChordWitness {
                    s: root,
                    ell: ell.clone(),
                }));
            }
        }
        if g.is_zero() {
            return Ok(Some(ChordWitness { s, ell: ell.clone() }));
        }
        prev = Some((s, g));
    }
    Ok(None)
}

/// Cell and piece counts from one run of the arrangement projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ArrangementStats {
    pub cells: usize,
    /// Cells whose zero set is nonempty.
    pub zero_pieces: usize,
    /// Cells on which `g` vanishes identically.
    pub flat_cells: usize,
}

/// The horizontal chord set `S(f)` as a canonical interval set.
pub fn chord_set(f: &PLFunction) -> IntervalSet {
    chord_set_with_stats(f).0
}

pub fn chord_set_with_stats(f: &PLFunction) -> (IntervalSet, ArrangementStats) {
    let n = f.num_segments();
    let pieces: Vec<(Option<ClosedInterval>, bool)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| project_cell(f, i, j))
        .collect();

    let mut stats = ArrangementStats {
        cells: pieces.len(),
        ..Default::default()
    };
    let mut intervals = Vec::with_capacity(pieces.len() + 2);
    for (piece, flat) in pieces {
        if flat {
            stats.flat_cells += 1;
        }
        if let Some(iv) = piece {
            stats.zero_pieces += 1;
            intervals.push(iv);
        }
    }
    intervals.push(ClosedInterval::point(Rational::zero()));
    intervals.push(ClosedInterval::point(Rational::one()));
    (IntervalSet::from_intervals(intervals), stats)
}

/// Zero set of `g` over cell `(i, j)`, projected to ℓ. Also reports whether
/// `g` vanishes on the whole cell.
fn project_cell(f: &PLFunction, i: usize, j: usize) -> (Option<ClosedInterval>, bool) {
    let pts = f.points();
    let (s0, s1) = (&pts[i].x, &pts[i + 1].x);
    let (u0, u1) = (&pts[j].x, &pts[j + 1].x);
    let (ms, mu) = (f.slope(i), f.slope(j));
    let g = |s: &Rational, u: &Rational| {
        (&pts[j].y + &mu * (u - u0)) - (&pts[i].y + &ms * (s - s0))
    };

    // Counter-clockwise vertex loop in (s, u).
    let vertices: Vec<(Rational, Rational)> = if i == j {
        vec![
            (s0.clone(), u0.clone()),
            (s1.clone(), u1.clone()),
            (s0.clone(), u1.clone()),
        ]
    } else {
        vec![
            (s0.clone(), u0.clone()),
            (s1.clone(), u0.clone()),
            (s1.clone(), u1.clone()),
            (s0.clone(), u1.clone()),
        ]
    };
    let values: Vec<Rational> = vertices.iter().map(|(s, u)| g(s, u)).collect();
    let flat = values.iter().all(Rational::is_zero);

    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    let mut take = |ell: Rational| {
        if lo.as_ref().is_none_or(|l| ell < *l) {
            lo = Some(ell.clone());
        }
        if hi.as_ref().is_none_or(|h| ell > *h) {
            hi = Some(ell);
        }
    };
    let k = vertices.len();
    for a in 0..k {
        let b = (a + 1) % k;
        let (ga, gb) = (&values[a], &values[b]);
        if ga.is_zero() {
            take(&vertices[a].1 - &vertices[a].0);
        }
        if ga.signum() * gb.signum() < 0 {
            let t = ga / &(ga - gb);
            let (sa, ua) = &vertices[a];
            let (sb, ub) = &vertices[b];
            let s = sa + &t * (sb - sa);
            let u = ua + &t * (ub - ua);
            take(u - s);
        }
    }
    let piece = match (lo, hi) {
        (Some(lo), Some(hi)) => Some(ClosedInterval::new(lo, hi)),
        _ => None,
    };
    (piece, flat)
}

/// Whether `S(f) = [0, 1]`.
pub fn is_full(f: &PLFunction) -> bool {
    chord_set(f) == IntervalSet::unit()
}

/// The grid lengths `k / resolution` that [`chord_exists`] accepts.
pub fn grid_oracle_scan(f: &PLFunction, resolution: u32) -> Vec<Rational> {
    let n = i64::from(resolution.max(1));
    (0..=n)
        .map(|k| Rational::new(k, n))
        .filter(|ell| matches!(chord_exists(f, ell), Ok(Some(_))))
        .collect()
}

/// Grid lengths on which [`chord_set`] and [`chord_exists`] disagree.
pub fn oracle_mismatches(f: &PLFunction, set: &IntervalSet, resolution: u32) -> Vec<Rational> {
    let n = i64::from(resolution.max(1));
    (0..=n)
        .map(|k| Rational::new(k, n))
        .filter(|ell| {
            let by_scan = matches!(chord_exists(f, ell), Ok(Some(_)));
            by_scan != set.contains(ell)
        })
        .collect()
}
