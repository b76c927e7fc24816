//! Canonical finite unions of closed rational intervals.
//!
//! An [`IntervalSet`] keeps its members sorted, pairwise disjoint and
//! non-touching; a degenerate interval `[p, p]` is an isolated point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plfunc::RationalField;
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct ClosedInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl ClosedInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        ClosedInterval { lo, hi }
    }

    pub fn point(p: Rational) -> Self {
        ClosedInterval {
            lo: p.clone(),
            hi: p,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

impl From<[Rational; 2]> for ClosedInterval {
    fn from([lo, hi]: [Rational; 2]) -> Self {
        ClosedInterval { lo, hi }
    }
}

impl From<ClosedInterval> for [Rational; 2] {
    fn from(i: ClosedInterval) -> Self {
        [i.lo, i.hi]
    }
}

impl fmt::Debug for ClosedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            write!(f, "{{{}}}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Open interval `(lo, hi)`, always with `lo < hi` when produced by this
/// crate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "[Rational; 2]", into = "[Rational; 2]")]
pub struct OpenInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl OpenInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        OpenInterval { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo >= self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo < *x && *x < self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }
}

impl From<[Rational; 2]> for OpenInterval {
    fn from([lo, hi]: [Rational; 2]) -> Self {
        OpenInterval { lo, hi }
    }
}

impl From<OpenInterval> for [Rational; 2] {
    fn from(i: OpenInterval) -> Self {
        [i.lo, i.hi]
    }
}

impl fmt::Debug for OpenInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<ClosedInterval>,
}

impl fmt::Debug for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "∅");
        }
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{iv:?}")?;
        }
        Ok(())
    }
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet::default()
    }

    /// `[0, 1]`.
    pub fn unit() -> Self {
        IntervalSet {
            intervals: vec![ClosedInterval::new(Rational::zero(), Rational::one())],
        }
    }

    /// Canonicalizes an arbitrary collection of closed intervals, dropping
    /// any with `hi < lo`.
    pub fn from_intervals<I>(intervals: I) -> Self
    where
        I: IntoIterator<Item = ClosedInterval>,
    {
        let mut v: Vec<ClosedInterval> = intervals.into_iter().filter(|i| i.lo <= i.hi).collect();
        v.sort_by(|a, b| a.lo.cmp(&b.lo).then_with(|| b.hi.cmp(&a.hi)));
        let mut out: Vec<ClosedInterval> = Vec::with_capacity(v.len());
        for iv in v {
            match out.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        IntervalSet { intervals: out }
    }

    /// Builds from `(lo, hi)` pairs given as integer fractions.
    pub fn from_fractions(pairs: &[((i64, i64), (i64, i64))]) -> Self {
        IntervalSet::from_intervals(pairs.iter().map(|&((a, b), (c, d))| {
            ClosedInterval::new(Rational::new(a, b), Rational::new(c, d))
        }))
    }

    pub fn intervals(&self) -> &[ClosedInterval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        IntervalSet::from_intervals(self.intervals.iter().chain(other.intervals.iter()).cloned())
    }

    pub fn with_point(&self, p: Rational) -> IntervalSet {
        self.union(&IntervalSet {
            intervals: vec![ClosedInterval::point(p)],
        })
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let i = self.intervals.partition_point(|iv| iv.hi < *x);
        self.intervals.get(i).is_some_and(|iv| iv.lo <= *x)
    }

    /// Whether `[lo, hi]` is a subset.
    pub fn contains_interval(&self, lo: &Rational, hi: &Rational) -> bool {
        if hi < lo {
            return true;
        }
        let i = self.intervals.partition_point(|iv| iv.hi < *lo);
        self.intervals.get(i).is_some_and(|iv| iv.lo <= *lo && *hi <= iv.hi)
    }

    /// Intersection with the closed interval `[lo, hi]`.
    pub fn restrict(&self, lo: &Rational, hi: &Rational) -> IntervalSet {
        IntervalSet::from_intervals(self.intervals.iter().filter_map(|iv| {
            let a = std::cmp::max(&iv.lo, lo).clone();
            let b = std::cmp::min(&iv.hi, hi).clone();
            (a <= b).then(|| ClosedInterval::new(a, b))
        }))
    }

    /// Isolated points of the set.
    pub fn isolated_points(&self) -> Vec<Rational> {
        self.intervals
            .iter()
            .filter(|iv| iv.is_point())
            .map(|iv| iv.lo.clone())
            .collect()
    }

    /// Every interval endpoint, ascending, without repeats.
    pub fn endpoints(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(self.intervals.len() * 2);
        for iv in &self.intervals {
            out.push(iv.lo.clone());
            if !iv.is_point() {
                out.push(iv.hi.clone());
            }
        }
        out
    }

    /// Lebesgue measure.
    pub fn measure(&self) -> Rational {
        self.intervals.iter().map(ClosedInterval::length).sum()
    }

    /// Measure of the set within `[0, d]`, for `0 < d <= 1`.
    pub fn truncated_measure(&self, d: &Rational) -> Result<Rational> {
        if !d.is_positive() || *d > 1 {
            return Err(Error::OutOfRange {
                what: "d",
                value: d.clone(),
                range: "(0, 1]",
            });
        }
        Ok(self.measure_below(d))
    }

    /// `λ(S ∩ (-∞, d])` without range checks.
    pub(crate) fn measure_below(&self, d: &Rational) -> Rational {
        self.intervals
            .iter()
            .take_while(|iv| iv.lo < *d)
            .map(|iv| std::cmp::min(&iv.hi, d) - &iv.lo)
            .sum()
    }

    /// Maximal open intervals of `(0, 1) \ S`, ascending.
    pub fn complement_in_unit(&self) -> Vec<OpenInterval> {
        let mut out = Vec::new();
        let mut cursor = Rational::zero();
        for iv in &self.intervals {
            if iv.hi <= Rational::zero() {
                continue;
            }
            if iv.lo > cursor {
                let hi = std::cmp::min(&iv.lo, &Rational::one()).clone();
                if cursor < hi {
                    out.push(OpenInterval::new(cursor.clone(), hi));
                }
            }
            if iv.hi > cursor {
                cursor = iv.hi.clone();
            }
            if cursor >= 1 {
                break;
            }
        }
        if cursor < 1 {
            out.push(OpenInterval::new(cursor, Rational::one()));
        }
        out
    }

    pub fn to_file(&self) -> IntervalFile {
        IntervalFile {
            intervals: self
                .intervals
                .iter()
                .map(|iv| [RationalField(iv.lo.clone()), RationalField(iv.hi.clone())])
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    /// Parses `{"intervals": [[lo, hi], ...]}`; the result is canonicalized.
    pub fn from_json(document: &str) -> Result<Self> {
        let file: IntervalFile = serde_json::from_str(document)?;
        IntervalSet::try_from(file)
    }
}

impl TryFrom<IntervalFile> for IntervalSet {
    type Error = Error;

    fn try_from(file: IntervalFile) -> Result<Self> {
        let mut v = Vec::with_capacity(file.intervals.len());
        for [lo, hi] in file.intervals {
            if hi.0 < lo.0 {
                return Err(Error::InvalidParams(format!(
                    "interval [{}, {}] has hi < lo",
                    lo.0, hi.0
                )));
            }
            v.push(ClosedInterval::new(lo.0, hi.0));
        }
        Ok(IntervalSet::from_intervals(v))
    }
}

impl Serialize for IntervalSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntervalSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let file = IntervalFile::deserialize(d)?;
        IntervalSet::try_from(file).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntervalFile {
    pub intervals: Vec<[RationalField; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn s2() -> IntervalSet {
        IntervalSet::from_fractions(&[((0, 1), (1, 3)), ((1, 2), (2, 3)), ((1, 1), (1, 1))])
    }

    fn half_and_one() -> IntervalSet {
        IntervalSet::from_fractions(&[((0, 1), (1, 2)), ((1, 1), (1, 1))])
    }

    #[test]
    fn canonicalization_merges_touching_and_absorbs_points() {
        let s = IntervalSet::from_fractions(&[
            ((1, 2), (3, 4)),
            ((0, 1), (1, 4)),
            ((1, 4), (1, 3)),
            ((5, 8), (5, 8)),
            ((7, 8), (7, 8)),
            ((7, 8), (7, 8)),
            ((1, 1), (1, 2)),
        ]);
        assert_eq!(
            s,
            IntervalSet::from_fractions(&[((0, 1), (1, 3)), ((1, 2), (3, 4)), ((7, 8), (7, 8))])
        );
    }

    #[test]
    fn measures() {
        assert_eq!(IntervalSet::unit().measure(), q(1, 1));
        assert_eq!(
            IntervalSet::from_fractions(&[((0, 1), (1, 3)), ((1, 2), (2, 3))]).measure(),
            q(1, 2)
        );
        assert_eq!(half_and_one().measure(), q(1, 2));
    }

    #[test]
    fn truncated_measures() {
        assert_eq!(IntervalSet::unit().truncated_measure(&q(1, 2)).unwrap(), q(1, 2));
        assert_eq!(s2().truncated_measure(&q(1, 2)).unwrap(), q(1, 3));
        assert_eq!(half_and_one().truncated_measure(&q(3, 4)).unwrap(), q(1, 2));
        assert!(s2().truncated_measure(&q(0, 1)).is_err());
        assert!(s2().truncated_measure(&q(3, 2)).is_err());
    }

    #[test]
    fn complements() {
        assert!(IntervalSet::unit().complement_in_unit().is_empty());
        assert_eq!(
            s2().complement_in_unit(),
            vec![OpenInterval::new(q(1, 3), q(1, 2)), OpenInterval::new(q(2, 3), q(1, 1))]
        );
        assert_eq!(half_and_one().complement_in_unit(), vec![OpenInterval::new(q(1, 2), q(1, 1))]);
        let isolated_zero = IntervalSet::from_fractions(&[((0, 1), (0, 1)), ((1, 2), (1, 1))]);
        assert_eq!(isolated_zero.complement_in_unit(), vec![OpenInterval::new(q(0, 1), q(1, 2))]);
    }

    #[test]
    fn membership_queries() {
        let s = s2();
        assert!(s.contains(&q(0, 1)));
        assert!(s.contains(&q(1, 3)));
        assert!(!s.contains(&q(2, 5)));
        assert!(s.contains(&q(1, 1)));
        assert!(!s.contains(&q(9, 10)));
        assert!(s.contains_interval(&q(1, 2), &q(2, 3)));
        assert!(!s.contains_interval(&q(1, 3), &q(1, 2)));
        assert_eq!(s.restrict(&q(2, 3), &q(1, 1)), IntervalSet::from_fractions(&[((2, 3), (2, 3)), ((1, 1), (1, 1))]));
        assert_eq!(s.isolated_points(), vec![q(1, 1)]);
    }

    #[test]
    fn json_format() {
        let s = s2();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"intervals":[["0","1/3"],["1/2","2/3"],["1","1"]]}"#);
        assert_eq!(IntervalSet::from_json(&json).unwrap(), s);
        assert!(IntervalSet::from_json(r#"{"intervals":[["1","0"]]}"#).is_err());
    }

    fn arb_set() -> impl Strategy<Value = IntervalSet> {
        prop::collection::vec((0i64..=24, 0i64..=6), 0..8).prop_map(|v| {
            IntervalSet::from_intervals(
                v.into_iter()
                    .map(|(a, len)| ClosedInterval::new(q(a, 24), q((a + len).min(24), 24))),
            )
        })
    }

    proptest! {
        #[test]
        fn canonical_form_invariants(s in arb_set()) {
            for w in s.intervals().windows(2) {
                prop_assert!(w[0].hi < w[1].lo);
            }
            prop_assert_eq!(IntervalSet::from_intervals(s.intervals().to_vec()), s.clone());
        }

        #[test]
        fn complement_partitions_unit(s in arb_set(), k in 0i64..=48) {
            let x = q(k, 48);
            let in_complement = s.complement_in_unit().iter().any(|o| o.contains(&x));
            let interior = x.is_positive() && x < 1;
            prop_assert_eq!(in_complement, interior && !s.contains(&x));
            let gap: Rational = s.complement_in_unit().iter().map(OpenInterval::length).sum();
            prop_assert_eq!(gap + s.restrict(&q(0, 1), &q(1, 1)).measure(), q(1, 1));
        }
    }
}
