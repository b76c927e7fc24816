//! Two mountains separated by a valley.
//!
//! The family is parametrized by the widths `(w_l, w_v, w_r)` summing to 1,
//! the ascent/descent split of each piece, and the heights with
//! `max(h_l, h_r) = 1`. [`classify_closed_form`] decides the full chord
//! property by arithmetic on the tuple alone; [`realize`] builds the function
//! so the exact engine can confirm it.

mod classify;
mod sampling;

pub use classify::{
    classify_closed_form, intermediate_sets, Case, Conditions, FullChordVerdict, Intermediates,
    Orientation,
};
pub use sampling::{
    cross_validate, monte_carlo, sample_params, ComplementMismatch, CrossValidationReport,
    Disagreement, MonteCarloResult, SamplingConvention,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plfunc::{PLFunction, RationalField};
use crate::rational::Rational;

/// Shape of one triangular piece: total width and the width of its first
/// (rising for a mountain, falling for the valley) side.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoMountainParams {
    pub w_l: Rational,
    pub w_v: Rational,
    pub w_r: Rational,
    pub a_l: Rational,
    pub d_l: Rational,
    pub a_v: Rational,
    pub d_v: Rational,
    pub a_r: Rational,
    pub d_r: Rational,
    pub h_l: Rational,
    pub h_v: Rational,
    pub h_r: Rational,
}

impl TwoMountainParams {
    /// Builds and validates a tuple from widths, first-side widths and
    /// heights, each ordered (left mountain, valley, right mountain).
    pub fn new(widths: [Rational; 3], ascents: [Rational; 3], heights: [Rational; 3]) -> Result<Self> {
        let [w_l, w_v, w_r] = widths;
        let [a_l, a_v, a_r] = ascents;
        let [h_l, h_v, h_r] = heights;
        let p = TwoMountainParams {
            d_l: &w_l - &a_l,
            d_v: &w_v - &a_v,
            d_r: &w_r - &a_r,
            w_l,
            w_v,
            w_r,
            a_l,
            a_v,
            a_r,
            h_l,
            h_v,
            h_r,
        };
        p.validate()?;
        Ok(p)
    }

    /// Integer-fraction shorthand; panics on invalid input.
    pub fn from_fractions(widths: [(i64, i64); 3], ascents: [(i64, i64); 3], heights: [(i64, i64); 3]) -> Self {
        let r = |v: [(i64, i64); 3]| v.map(|(n, d)| Rational::new(n, d));
        TwoMountainParams::new(r(widths), r(ascents), r(heights)).expect("invalid parameters")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        for (name, v) in [
            ("w_l", &self.w_l),
            ("w_v", &self.w_v),
            ("w_r", &self.w_r),
            ("a_l", &self.a_l),
            ("d_l", &self.d_l),
            ("a_v", &self.a_v),
            ("d_v", &self.d_v),
            ("a_r", &self.a_r),
            ("d_r", &self.d_r),
            ("h_l", &self.h_l),
            ("h_r", &self.h_r),
        ] {
            if !v.is_positive() {
                return bad(format!("{name} = {v} must be positive"));
            }
        }
        let total = &self.w_l + &self.w_v + &self.w_r;
        if total != 1 {
            return bad(format!("widths sum to {total}, not 1"));
        }
        if &self.a_l + &self.d_l != self.w_l
            || &self.a_v + &self.d_v != self.w_v
            || &self.a_r + &self.d_r != self.w_r
        {
            return bad("ascent + descent must equal width".into());
        }
        let top = std::cmp::max(&self.h_l, &self.h_r);
        if *top != 1 {
            return bad(format!("max(h_l, h_r) = {top}, must be 1"));
        }
        if !self.h_v.is_negative() {
            return bad(format!("h_v = {} must be negative", self.h_v));
        }
        Ok(())
    }

    /// Parameters of `s ↦ f(1 - s)`: left and right swap, and every piece's
    /// sides swap.
    pub fn mirror(&self) -> TwoMountainParams {
        TwoMountainParams {
            w_l: self.w_r.clone(),
            w_v: self.w_v.clone(),
            w_r: self.w_l.clone(),
            a_l: self.d_r.clone(),
            d_l: self.a_r.clone(),
            a_v: self.d_v.clone(),
            d_v: self.a_v.clone(),
            a_r: self.d_l.clone(),
            d_r: self.a_l.clone(),
            h_l: self.h_r.clone(),
            h_v: self.h_v.clone(),
            h_r: self.h_l.clone(),
        }
    }

    /// Same widths and mountains, different valley shape.
    pub fn with_valley(&self, a_v: Rational, h_v: Rational) -> Result<TwoMountainParams> {
        let mut p = self.clone();
        p.d_v = &p.w_v - &a_v;
        p.a_v = a_v;
        p.h_v = h_v;
        p.validate()?;
        Ok(p)
    }

    pub fn to_file(&self) -> ParamsFile {
        let f = |v: [&Rational; 3]| v.map(|r| RationalField(r.clone()));
        ParamsFile {
            w: f([&self.w_l, &self.w_v, &self.w_r]),
            a: f([&self.a_l, &self.a_v, &self.a_r]),
            d: Some(f([&self.d_l, &self.d_v, &self.d_r])),
            h: f([&self.h_l, &self.h_v, &self.h_r]),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn from_json(document: &str) -> Result<Self> {
        let file: ParamsFile = serde_json::from_str(document)?;
        TwoMountainParams::try_from(file)
    }
}

/// `{"w": [...], "a": [...], "d": [...], "h": [...]}`, each ordered
/// (left mountain, valley, right mountain). `d` is redundant and optional on
/// input; when present it must agree with `w - a`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsFile {
    pub w: [RationalField; 3],
    pub a: [RationalField; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<[RationalField; 3]>,
    pub h: [RationalField; 3],
}

impl TryFrom<ParamsFile> for TwoMountainParams {
    type Error = Error;

    fn try_from(file: ParamsFile) -> Result<Self> {
        let take = |v: [RationalField; 3]| v.map(|r| r.0);
        let p = TwoMountainParams::new(take(file.w), take(file.a), take(file.h))?;
        if let Some(d) = file.d {
            let d = take(d);
            if d != [p.d_l.clone(), p.d_v.clone(), p.d_r.clone()] {
                return Err(Error::InvalidParams("d must equal w - a".into()));
            }
        }
        Ok(p)
    }
}

impl Serialize for TwoMountainParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for TwoMountainParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = ParamsFile::deserialize(d)?;
        TwoMountainParams::try_from(file).map_err(serde::de::Error::custom)
    }
}

/// Breakpoints `(0,0), (a_l,h_l), (w_l,0), (w_l+a_v,h_v), (w_l+w_v,0),
/// (w_l+w_v+a_r,h_r), (1,0)`.
pub fn realize(p: &TwoMountainParams) -> Result<PLFunction> {
    p.validate()?;
    let zero = Rational::zero();
    let valley_start = p.w_l.clone();
    let right_start = &p.w_l + &p.w_v;
    PLFunction::new([
        (zero.clone(), zero.clone()),
        (p.a_l.clone(), p.h_l.clone()),
        (valley_start.clone(), zero.clone()),
        (&valley_start + &p.a_v, p.h_v.clone()),
        (right_start.clone(), zero.clone()),
        (&right_start + &p.a_r, p.h_r.clone()),
        (Rational::one(), zero),
    ])
}
