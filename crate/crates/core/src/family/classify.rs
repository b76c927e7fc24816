//! Closed-form full-chord classifier.
//!
//! With the narrower, shorter mountain on the left, every length in
//! `S_init = [0, w_max]`, `S_mid = [w_v, w_l + w_v]` and
//! `S_fin = [w_v + w_r, 1]` is a chord. The remaining candidates form
//! `T = (max(w_r, w_l + w_v), w_v + w_r)`: shifts that put the left base
//! strictly inside the right base. Such a shift is a chord iff the shifted
//! left peak clears the right mountain, i.e. the peak lands left of `s_*` or
//! right of `s^*`, the two points where the right mountain has height `h_l`.
//! That recovers `T1 = [max(w_r, w_l + w_v), s_* - a_l]` and
//! `T2 = [s^* - a_l, w_v + w_r]`, and the function is full iff one of them
//! covers `T`.

use serde::{Deserialize, Serialize};

use super::TwoMountainParams;
use crate::interval::{ClosedInterval, OpenInterval};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Case {
    /// Left mountain strictly narrower and strictly shorter.
    LeftSmaller,
    /// Right mountain strictly narrower and strictly shorter.
    RightSmaller,
    Neither,
}

/// Frame in which [`Intermediates`] are expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    Direct,
    /// Computed for `s ↦ f(1 - s)`; chord-length sets are unaffected, while
    /// `s_star` and `s_star_upper` are positions in the reflected frame.
    Reflected,
}

/// Conditions (i)-(iv) for one side being the small mountain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conditions {
    /// (i) strictly narrower.
    #[serde(rename = "i")]
    pub narrower: bool,
    /// (ii) strictly shorter.
    #[serde(rename = "ii")]
    pub shorter: bool,
    /// (iii) `T1` stops short of the right end of `T`.
    #[serde(rename = "iii")]
    pub t1_short: bool,
    /// (iv) `T2` starts after the left end of `T`.
    #[serde(rename = "iv")]
    pub t2_short: bool,
}

impl Conditions {
    pub fn all(&self) -> bool {
        self.narrower && self.shorter && self.t1_short && self.t2_short
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intermediates {
    pub orientation: Orientation,
    /// Ascent point of the large mountain at height of the small one.
    pub s_star: Rational,
    /// Descent point of the large mountain at height of the small one.
    pub s_star_upper: Rational,
    pub s_init: Option<ClosedInterval>,
    pub s_mid: Option<ClosedInterval>,
    pub s_fin: Option<ClosedInterval>,
    #[serde(rename = "T")]
    pub t: Option<OpenInterval>,
    #[serde(rename = "T1")]
    pub t1: Option<ClosedInterval>,
    #[serde(rename = "T2")]
    pub t2: Option<ClosedInterval>,
}

impl Intermediates {
    /// `T \ (T1 ∪ T2)`: the lengths that are not chords when the function is
    /// not full.
    pub fn uncovered(&self) -> Option<OpenInterval> {
        let t = self.t.as_ref()?;
        let mut lo = t.lo.clone();
        let mut hi = t.hi.clone();
        if let Some(t1) = &self.t1 {
            lo = lo.max(t1.hi.clone());
        }
        if let Some(t2) = &self.t2 {
            hi = hi.min(t2.lo.clone());
        }
        let gap = OpenInterval::new(lo, hi);
        (!gap.is_empty()).then_some(gap)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullChordVerdict {
    pub full: bool,
    pub case: Case,
    /// Conditions with the left mountain as the small one.
    pub case1: Conditions,
    /// The mirrored conditions, right mountain small.
    pub case2: Conditions,
    pub intermediates: Intermediates,
}

impl FullChordVerdict {
    /// Predicted `(0, 1) \ S(f)`.
    pub fn predicted_complement(&self) -> Vec<OpenInterval> {
        if self.full {
            return Vec::new();
        }
        self.intermediates.uncovered().into_iter().collect()
    }
}

fn closed(lo: Rational, hi: Rational) -> Option<ClosedInterval> {
    (lo <= hi).then(|| ClosedInterval::new(lo, hi))
}

/// Sets for the left mountain playing the small role.
fn left_sets(p: &TwoMountainParams, orientation: Orientation) -> Intermediates {
    let one = Rational::one();
    let w_max = p.w_l.clone().max(p.w_v.clone()).max(p.w_r.clone());
    let t_lo = p.w_r.clone().max(&p.w_l + &p.w_v);
    let t_hi = &p.w_v + &p.w_r;
    let s_star = &p.h_l * &p.a_r + &one - &p.w_r;
    let s_star_upper = &one - &p.h_l * &p.d_r;
    let t = OpenInterval::new(t_lo.clone(), t_hi.clone());
    Intermediates {
        orientation,
        s_init: closed(Rational::zero(), w_max),
        s_mid: closed(p.w_v.clone(), &p.w_l + &p.w_v),
        s_fin: closed(&p.w_v + &p.w_r, one),
        t1: closed(t_lo, &s_star - &p.a_l),
        t2: closed(&s_star_upper - &p.a_l, t_hi),
        t: (!t.is_empty()).then_some(t),
        s_star,
        s_star_upper,
    }
}

fn left_conditions(p: &TwoMountainParams) -> Conditions {
    let one = Rational::one();
    let t_lo = p.w_r.clone().max(&p.w_l + &p.w_v);
    Conditions {
        narrower: p.w_l < p.w_r,
        shorter: p.h_l < one,
        t1_short: &p.h_l * &p.a_r + &one - &p.w_r - &p.a_l < &p.w_v + &p.w_r,
        t2_short: &one - &p.h_l * &p.d_r - &p.a_l > t_lo,
    }
}

/// Intermediate sets, in the reflected frame when the right mountain is the
/// small one.
pub fn intermediate_sets(p: &TwoMountainParams) -> Intermediates {
    let right = left_conditions(&p.mirror());
    if right.narrower && right.shorter {
        left_sets(&p.mirror(), Orientation::Reflected)
    } else {
        left_sets(p, Orientation::Direct)
    }
}

/// Not full iff conditions (i)-(iv) hold for one side. Equality in (iii) or
/// (iv) means the covering interval reaches the end of `T`, which is full.
pub fn classify_closed_form(p: &TwoMountainParams) -> FullChordVerdict {
    let case1 = left_conditions(p);
    let case2 = left_conditions(&p.mirror());
    let case = if case1.narrower && case1.shorter {
        Case::LeftSmaller
    } else if case2.narrower && case2.shorter {
        Case::RightSmaller
    } else {
        Case::Neither
    };
    FullChordVerdict {
        full: !(case1.all() || case2.all()),
        case,
        case1,
        case2,
        intermediates: intermediate_sets(p),
    }
}

/// Allocation-light variant of [`classify_closed_form`] returning only the
/// verdict; used by the Monte Carlo loop.
pub(crate) fn is_full_closed_form(p: &TwoMountainParams) -> bool {
    !(left_conditions(p).all() || left_conditions(&p.mirror()).all())
}
