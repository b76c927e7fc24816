//! Hopf's characterization of chord sets and the machinery of its proof.
//!
//! A chord set `S` is closed and its complement in `ℝ⁺` is open and closed
//! under addition. [`check_additive_complement`] tests additivity exactly on
//! interval endpoints; [`check_half_measure`] checks the consequence
//! `λ(S ∩ [0, d]) >= d / 2`. The constructive side is [`PeriodicPL`],
//! [`periodic_coincidence`] and [`split_chord`]: a chord of length `a + b`
//! yields a chord of length `a` or one of length `b`.
//!
//! ## Half-measure candidates
//!
//! `m(d) = λ(S ∩ [0, d])` is continuous and piecewise linear: slope 1 inside
//! an interval of `S`, slope 0 on a gap. On a gap `m(d) / d` decreases, so
//! its minimum over the gap is at the right end (the next left endpoint, or
//! 1). Inside an interval `[lo, hi]`, `m(d) / d = (c + d) / d` is monotone, so
//! the minimum is at `lo` or `hi`. Hence only interval endpoints and `d = 1`
//! need checking.

use serde::{Deserialize, Serialize};

use crate::chordset::{chord_exists, ChordWitness};
use crate::error::{Error, Result};
use crate::interval::{IntervalSet, OpenInterval};
use crate::plfunc::{PLFunction, Point};
use crate::rational::Rational;

/// Witness that a set's complement is not additive: `a` and `b` are outside
/// the set but `sum = a + b` (at most 1) is inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdditivityViolation {
    pub a: Rational,
    pub b: Rational,
    pub sum: Rational,
}

/// Finds the first pair of complement components whose sumset meets `S`.
///
/// The sumset of `(a_i, b_i)` and `(a_j, b_j)` is `(a_i + a_j, b_i + b_j)`.
/// Lengths above 1 lie in the complement automatically; lengths up to and
/// including 1 must avoid `S`.
pub fn check_additive_complement(set: &IntervalSet) -> Result<Option<AdditivityViolation>> {
    if !set.contains(&Rational::zero()) {
        return Err(Error::NotAChordSet("0 is missing"));
    }
    if !set.contains(&Rational::one()) {
        return Err(Error::NotAChordSet("1 is missing"));
    }
    let gaps = set.complement_in_unit();
    for (i, gi) in gaps.iter().enumerate() {
        for gj in &gaps[i..] {
            let sum = OpenInterval::new(&gi.lo + &gj.lo, &gi.hi + &gj.hi);
            if sum.lo >= 1 {
                continue;
            }
            if gaps.iter().any(|g| g.lo <= sum.lo && sum.hi <= g.hi) {
                continue;
            }
            let hit = first_point_inside(set, &sum)
                .expect("sumset not inside a gap must meet the set");
            // a ranges over gi ∩ (hit - gj), a nonempty open interval
            let a_lo = std::cmp::max(&gi.lo, &(&hit - &gj.hi)).clone();
            let a_hi = std::cmp::min(&gi.hi, &(&hit - &gj.lo)).clone();
            let a = a_lo.midpoint(&a_hi);
            let b = &hit - &a;
            return Ok(Some(AdditivityViolation { a, b, sum: hit }));
        }
    }
    Ok(None)
}

/// A point of `set ∩ window` (window open), the midpoint of the first piece.
fn first_point_inside(set: &IntervalSet, window: &OpenInterval) -> Option<Rational> {
    set.intervals().iter().find_map(|iv| {
        if iv.is_point() {
            return window.contains(&iv.lo).then(|| iv.lo.clone());
        }
        if iv.lo < window.hi && iv.hi > window.lo {
            let lo = std::cmp::max(&iv.lo, &window.lo);
            let hi = std::cmp::min(&iv.hi, &window.hi);
            return Some(lo.midpoint(hi));
        }
        None
    })
}

/// Result of minimizing `λ(S ∩ [0, d]) / d` over `d ∈ (0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfMeasure {
    pub min_ratio: Rational,
    /// Smallest minimizing `d`.
    pub argmin_d: Rational,
}

pub fn check_half_measure(set: &IntervalSet) -> HalfMeasure {
    let mut candidates: Vec<Rational> = set
        .endpoints()
        .into_iter()
        .filter(|d| d.is_positive() && *d <= 1)
        .collect();
    candidates.push(Rational::one());
    candidates.sort();
    candidates.dedup();
    let mut best: Option<HalfMeasure> = None;
    for d in candidates {
        let ratio = half_measure_ratio(set, &d);
        if best.as_ref().is_none_or(|b| ratio < b.min_ratio) {
            best = Some(HalfMeasure {
                min_ratio: ratio,
                argmin_d: d,
            });
        }
    }
    best.expect("d = 1 is always a candidate")
}

/// `λ(S ∩ [0, d]) / d` for `d > 0`.
pub fn half_measure_ratio(set: &IntervalSet, d: &Rational) -> Rational {
    set.measure_below(d) / d
}

/// `T_d = { ℓ : d - ℓ ∈ S ∩ [0, d] }`, the reflection of `S_d` about `d / 2`.
pub fn reflected_truncation(set: &IntervalSet, d: &Rational) -> IntervalSet {
    let truncated = set.restrict(&Rational::zero(), d);
    IntervalSet::from_intervals(
        truncated
            .intervals()
            .iter()
            .map(|iv| crate::interval::ClosedInterval::new(d - &iv.hi, d - &iv.lo)),
    )
}

/// A piecewise-linear function on `[x1, x2]` with equal end values, extended
/// periodically with period `x2 - x1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicPL {
    base: Vec<Point>,
}

impl PeriodicPL {
    /// `points` must have strictly increasing x and equal first and last y.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::TooFewPoints(points.len()));
        }
        for (index, w) in points.windows(2).enumerate() {
            if w[0].x >= w[1].x {
                return Err(Error::NotIncreasing { index: index + 1 });
            }
        }
        let (first, last) = (&points[0], &points[points.len() - 1]);
        if first.y != last.y {
            return Err(Error::InvalidParams(format!(
                "periodic base has unequal end values {} and {}",
                first.y, last.y
            )));
        }
        Ok(PeriodicPL { base: points })
    }

    /// `f` restricted to `[x1, x2]`, where `f(x1) = f(x2)` and `x1 < x2`.
    pub fn from_restriction(f: &PLFunction, x1: &Rational, x2: &Rational) -> Result<Self> {
        let mut pts = vec![Point::new(x1.clone(), f.evaluate(x1)?)];
        pts.extend(
            f.points()
                .iter()
                .filter(|p| p.x > *x1 && p.x < *x2)
                .cloned(),
        );
        pts.push(Point::new(x2.clone(), f.evaluate(x2)?));
        PeriodicPL::new(pts)
    }

    pub fn start(&self) -> &Rational {
        &self.base[0].x
    }

    pub fn end(&self) -> &Rational {
        &self.base[self.base.len() - 1].x
    }

    pub fn period(&self) -> Rational {
        self.end() - self.start()
    }

    /// Reduces `x` into `[x1, x2)`.
    pub fn reduce(&self, x: &Rational) -> Rational {
        let t = self.period();
        let k = ((x - self.start()) / &t).floor();
        x - k * t
    }

    pub fn evaluate(&self, x: &Rational) -> Rational {
        let x = self.reduce(x);
        let i = self
            .base
            .partition_point(|p| p.x <= x)
            .saturating_sub(1)
            .min(self.base.len() - 2);
        let (p, r) = (&self.base[i], &self.base[i + 1]);
        if p.x == x {
            return p.y.clone();
        }
        &p.y + (&r.y - &p.y) * (&x - &p.x) / (&r.x - &p.x)
    }
}

/// Leftmost `x0 ∈ [x1, x2]` with `F(x0 - a) = F(x0)`.
///
/// `G(x) = F(x - a) - F(x)` is piecewise linear with breakpoints at the base
/// breakpoints and their translates by `a` (reduced mod the period), and has
/// zero mean over a period, so it vanishes somewhere in every period.
pub fn periodic_coincidence(func: &PeriodicPL, a: &Rational) -> Rational {
    let (x1, x2) = (func.start().clone(), func.end().clone());
    let mut candidates: Vec<Rational> = vec![x1.clone(), x2.clone()];
    for p in &func.base {
        candidates.push(p.x.clone());
        candidates.push(func.reduce(&(&p.x + a)));
    }
    candidates.retain(|c| x1 <= *c && *c <= x2);
    candidates.sort();
    candidates.dedup();

    let diff = |x: &Rational| func.evaluate(&(x - a)) - func.evaluate(x);
    let mut prev: Option<(Rational, Rational)> = None;
    for x in candidates {
        let g = diff(&x);
        if let Some((px, pg)) = &prev {
            if pg.signum() * g.signum() < 0 {
                return px + pg * (&x - px) / (pg - &g);
            }
        }
        if g.is_zero() {
            return x;
        }
        prev = Some((x, g));
    }
    unreachable!("G has zero mean over a period and must vanish somewhere")
}

/// Turns a chord of length `a + b` into a chord of length `a` or `b`.
///
/// Builds the periodic extension `F` of `f|[x1, x1 + a + b]`, finds `x0` with
/// `F(x0 - a) = F(x0)`, and reads off the chord: if `x0 - a` stays in the
/// base window it is a chord of length `a` starting at `x0 - a`, otherwise
/// `x0 - a + (a + b) = x0 + b` is, giving a chord of length `b` from `x0`.
pub fn split_chord(f: &PLFunction, a: &Rational, b: &Rational) -> Result<ChordWitness> {
    if a.is_negative() || b.is_negative() {
        return Err(Error::InvalidParams("split lengths must be nonnegative".into()));
    }
    let total = a + b;
    if total > 1 {
        return Err(Error::NotAChord(total));
    }
    let outer = chord_exists(f, &total)?.ok_or_else(|| Error::NotAChord(total.clone()))?;
    let x1 = outer.s.clone();
    if total.is_zero() {
        return Ok(ChordWitness {
            s: x1,
            ell: Rational::zero(),
        });
    }
    let x2 = &x1 + &total;
    let periodic = PeriodicPL::from_restriction(f, &x1, &x2)?;
    let mut x0 = periodic_coincidence(&periodic, a);
    if &x0 - a < x1 && x0 == x1 {
        // x1 and x2 are the same point mod the period; prefer the a-branch
        x0 = x2.clone();
    }
    let witness = if &x0 - a >= x1 {
        ChordWitness {
            s: &x0 - a,
            ell: a.clone(),
        }
    } else {
        ChordWitness {
            s: x0,
            ell: b.clone(),
        }
    };
    debug_assert!(witness.verify(f));
    Ok(witness)
}

/// Membership in the signed chord set `{ ℓ : f(s - ℓ) = f(s), s, s - ℓ ∈ [0, 1] }`,
/// checked directly from the definition for `ℓ ∈ [-1, 1]`.
pub fn signed_chord_exists(f: &PLFunction, ell: &Rational) -> Result<bool> {
    if ell.abs() > 1 {
        return Err(Error::OutOfRange {
            what: "ell",
            value: ell.clone(),
            range: "[-1, 1]",
        });
    }
    // s ranges over [max(0, ℓ), min(1, 1 + ℓ)]
    let lo = std::cmp::max(Rational::zero(), ell.clone());
    let hi = std::cmp::min(Rational::one(), Rational::one() + ell);
    let mut candidates = vec![lo.clone(), hi.clone()];
    for t in f.breakpoints() {
        candidates.push(t.clone());
        candidates.push(t + ell);
    }
    candidates.retain(|c| lo <= *c && *c <= hi);
    candidates.sort();
    candidates.dedup();
    let values: Vec<Rational> = candidates
        .iter()
        .map(|s| f.value_at(&(s - ell)) - f.value_at(s))
        .collect();
    let has_nonneg = values.iter().any(|v| !v.is_negative());
    let has_nonpos = values.iter().any(|v| !v.is_positive());
    Ok(has_nonneg && has_nonpos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordset::chord_set;
    use crate::rational::q;

    fn s2() -> IntervalSet {
        IntervalSet::from_fractions(&[((0, 1), (1, 3)), ((1, 2), (2, 3)), ((1, 1), (1, 1))])
    }

    fn isolated() -> IntervalSet {
        IntervalSet::from_fractions(&[
            ((0, 1), (1, 2)),
            ((5, 8), (5, 8)),
            ((3, 4), (3, 4)),
            ((7, 8), (7, 8)),
            ((1, 1), (1, 1)),
        ])
    }

    fn tent() -> PLFunction {
        PLFunction::tent(q(1, 2), q(1, 1)).unwrap()
    }

    fn mountain_valley() -> PLFunction {
        PLFunction::from_fractions(&[
            ((0, 1), (0, 1)),
            ((1, 4), (1, 1)),
            ((1, 2), (0, 1)),
            ((3, 4), (-1, 1)),
            ((1, 1), (0, 1)),
        ])
    }

    #[test]
    fn sharp_set_is_additive() {
        assert_eq!(check_additive_complement(&s2()).unwrap(), None);
        assert_eq!(check_additive_complement(&isolated()).unwrap(), None);
        assert_eq!(check_additive_complement(&IntervalSet::unit()).unwrap(), None);
    }

    #[test]
    fn middle_gap_violates_additivity() {
        let s = IntervalSet::from_fractions(&[((0, 1), (1, 3)), ((2, 3), (1, 1))]);
        let v = check_additive_complement(&s).unwrap().unwrap();
        assert_eq!(v.sum, q(5, 6));
        assert_eq!(&v.a + &v.b, v.sum);
        let gap = OpenInterval::new(q(1, 3), q(2, 3));
        assert!(gap.contains(&v.a) && gap.contains(&v.b));
    }

    #[test]
    fn sum_reaching_one_is_a_violation() {
        // (0.4, 0.6) + (0.4, 0.6) = (0.8, 1.2) contains 1
        let s = IntervalSet::from_fractions(&[((0, 1), (2, 5)), ((3, 5), (1, 1))]);
        let v = check_additive_complement(&s).unwrap().unwrap();
        assert!(s.contains(&v.sum));
    }

    #[test]
    fn additivity_requires_chord_set_shape() {
        let no_one = IntervalSet::from_fractions(&[((0, 1), (1, 2))]);
        assert!(check_additive_complement(&no_one).is_err());
        let no_zero = IntervalSet::from_fractions(&[((1, 2), (1, 1))]);
        assert!(check_additive_complement(&no_zero).is_err());
    }

    #[test]
    fn half_measure_examples() {
        let unit = check_half_measure(&IntervalSet::unit());
        assert_eq!((unit.min_ratio, unit.argmin_d), (q(1, 1), q(1, 1)));
        let sharp = check_half_measure(&s2());
        assert_eq!((sharp.min_ratio, sharp.argmin_d), (q(1, 2), q(1, 1)));
        let half = IntervalSet::from_fractions(&[((0, 1), (1, 2)), ((1, 1), (1, 1))]);
        let r = check_half_measure(&half);
        assert_eq!((r.min_ratio, r.argmin_d), (q(1, 2), q(1, 1)));
        // brute-force the ratio on a grid: never below the reported minimum
        for k in 1..=240 {
            assert!(half_measure_ratio(&half, &q(k, 240)) >= q(1, 2));
            assert!(half_measure_ratio(&s2(), &q(k, 240)) >= q(1, 2));
        }
    }

    #[test]
    fn reflected_truncation_covers_with_original() {
        let s = s2();
        let d = q(1, 1);
        let cover = s.restrict(&q(0, 1), &d).union(&reflected_truncation(&s, &d));
        assert_eq!(cover, IntervalSet::unit());
        assert_eq!(reflected_truncation(&s, &d).measure(), s.measure());
    }

    #[test]
    fn tent_coincidence_at_quarter() {
        let f = PeriodicPL::from_restriction(&tent(), &q(0, 1), &q(1, 1)).unwrap();
        let x0 = periodic_coincidence(&f, &q(1, 2));
        assert_eq!(x0, q(1, 4));
        assert_eq!(f.evaluate(&(&x0 - q(1, 2))), f.evaluate(&x0));
    }

    #[test]
    fn constant_periodic_returns_start() {
        let f = PeriodicPL::new(vec![
            Point::new(q(1, 5), q(2, 1)),
            Point::new(q(3, 5), q(2, 1)),
        ])
        .unwrap();
        assert_eq!(periodic_coincidence(&f, &q(1, 7)), q(1, 5));
    }

    #[test]
    fn mountain_valley_coincidence() {
        let f = PeriodicPL::from_restriction(&mountain_valley(), &q(0, 1), &q(1, 1)).unwrap();
        let a = q(1, 4);
        let x0 = periodic_coincidence(&f, &a);
        assert!(x0 >= q(0, 1) && x0 <= q(1, 1));
        assert_eq!(f.evaluate(&(&x0 - &a)), f.evaluate(&x0));
        for k in -3..=3 {
            let shifted = &x0 + q(k, 1);
            assert_eq!(f.evaluate(&(&shifted - &a)), f.evaluate(&shifted));
        }
    }

    #[test]
    fn periodic_evaluation_wraps() {
        let f = PeriodicPL::from_restriction(&tent(), &q(0, 1), &q(1, 1)).unwrap();
        assert_eq!(f.evaluate(&q(-1, 4)), q(1, 2));
        assert_eq!(f.evaluate(&q(5, 2)), q(1, 1));
        assert!(PeriodicPL::new(vec![Point::new(q(0, 1), q(0, 1)), Point::new(q(1, 1), q(1, 1))]).is_err());
    }

    #[test]
    fn split_chord_tent() {
        let w = split_chord(&tent(), &q(1, 4), &q(3, 4)).unwrap();
        assert!(w.ell == q(1, 4) || w.ell == q(3, 4));
        assert!(w.verify(&tent()));
    }

    #[test]
    fn split_chord_forced_branch() {
        let f = mountain_valley();
        let w = split_chord(&f, &q(3, 4), &q(1, 4)).unwrap();
        assert_eq!(w.ell, q(1, 4));
        assert!(w.verify(&f));
    }

    #[test]
    fn split_chord_degenerate_b() {
        let f = mountain_valley();
        let w = split_chord(&f, &q(1, 3), &q(0, 1)).unwrap();
        assert_eq!(w.ell, q(1, 3));
        assert!(w.verify(&f));
        assert!(matches!(split_chord(&f, &q(3, 4), &q(0, 1)), Err(Error::NotAChord(_))));
        assert!(split_chord(&f, &q(1, 2), &q(3, 4)).is_err());
    }

    #[test]
    fn signed_chord_set_is_symmetric_closure() {
        let f = mountain_valley();
        let s = chord_set(&f);
        for k in -40..=40 {
            let ell = q(k, 40);
            assert_eq!(
                signed_chord_exists(&f, &ell).unwrap(),
                s.contains(&ell.abs()),
                "ell = {ell}"
            );
        }
    }
}
