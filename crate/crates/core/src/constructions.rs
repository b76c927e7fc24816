//! Named example families: the sharp sets `S_n`, mountain/valley functions,
//! and exact checks of candidate realizations.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chordset::chord_set;
use crate::error::{Error, Result};
use crate::interval::{ClosedInterval, IntervalSet, OpenInterval};
use crate::plfunc::PLFunction;
use crate::rational::Rational;

/// Index `n >= 1` of the sharp family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SharpFamilyIndex(u32);

impl SharpFamilyIndex {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("sharp family index must be at least 1".into()));
        }
        Ok(SharpFamilyIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// `[(k-1)/n, k/(n+1)]` for `k = 1..=n`, together with the point `{1}`.
///
/// The point 1 belongs to every chord set, so it is adjoined here; only the
/// complement is prescribed by the family itself.
pub fn sn_intervals(n: u32) -> Result<IntervalSet> {
    let n = i64::from(SharpFamilyIndex::new(n)?.get());
    let pieces = (1..=n).map(|k| ClosedInterval::new(Rational::new(k - 1, n), Rational::new(k, n + 1)));
    Ok(IntervalSet::from_intervals(pieces).with_point(Rational::one()))
}

/// `(k/(n+1), k/n)` for `k = 1..=n`.
pub fn sn_complement(n: u32) -> Result<Vec<OpenInterval>> {
    let n = i64::from(SharpFamilyIndex::new(n)?.get());
    Ok((1..=n)
        .map(|k| OpenInterval::new(Rational::new(k, n + 1), Rational::new(k, n)))
        .collect())
}

/// The measure of `S_n` computed by summing its intervals and by the
/// telescoping closed form `n/2 - (n-1)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasureIdentity {
    pub interval_sum: Rational,
    pub closed_form: Rational,
}

impl MeasureIdentity {
    pub fn holds(&self) -> bool {
        self.interval_sum == self.closed_form && self.closed_form == Rational::new(1, 2)
    }
}

pub fn sn_measure_identity(n: u32) -> Result<MeasureIdentity> {
    let interval_sum = sn_intervals(n)?.measure();
    let n = i64::from(n);
    // Σ k/(n+1) = n/2 and Σ (k-1)/n = (n-1)/2
    let first = Rational::new(1, n + 1) * Rational::new(n * (n + 1), 2);
    let second = Rational::new(1, n) * Rational::new((n - 1) * n, 2);
    Ok(MeasureIdentity {
        interval_sum,
        closed_form: first - second,
    })
}

/// A function whose chord set is exactly `S_n`.
///
/// Slopes alternate between -1 and +1: `n + 1` falls of length
/// `1/(2(n+1))` separated by `n` rises of length `1/(2n)`. For `n = 1` this
/// is a valley, a mountain and a valley.
pub fn sn_realization(n: u32) -> Result<PLFunction> {
    let n = i64::from(SharpFamilyIndex::new(n)?.get());
    let fall = Rational::new(1, 2 * (n + 1));
    let rise = Rational::new(1, 2 * n);
    let mut points = Vec::with_capacity(2 * n as usize + 2);
    let (mut x, mut y) = (Rational::zero(), Rational::zero());
    points.push((x.clone(), y.clone()));
    for _ in 0..n {
        x += &fall;
        y -= &fall;
        points.push((x.clone(), y.clone()));
        x += &rise;
        y += &rise;
        points.push((x.clone(), y.clone()));
    }
    points.push((Rational::one(), Rational::zero()));
    PLFunction::new(points)
}

/// Triangular mountain of width `w1` at the left end, zero on
/// `[w1, 1 - w2]`, triangular valley of width `w2` at the right end.
pub fn make_mountain_valley(
    w1: &Rational,
    w2: &Rational,
    height: &Rational,
    depth: &Rational,
) -> Result<PLFunction> {
    if !w1.is_positive() || !w2.is_positive() || w1 + w2 > Rational::one() {
        return Err(Error::InvalidParams(format!(
            "widths must be positive with w1 + w2 <= 1, got {w1} and {w2}"
        )));
    }
    if !height.is_positive() || !depth.is_negative() {
        return Err(Error::InvalidParams(format!(
            "need height > 0 and depth < 0, got {height} and {depth}"
        )));
    }
    let zero = Rational::zero();
    let one = Rational::one();
    let half = Rational::new(1, 2);
    PLFunction::new([
        (zero.clone(), zero.clone()),
        (w1 * &half, height.clone()),
        (w1.clone(), zero.clone()),
        (&one - w2, zero.clone()),
        (&one - w2 * &half, depth.clone()),
        (one, zero),
    ])
}

/// First point where a computed chord set and a target disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub at: Rational,
    /// Whether `at` belongs to the computed set (and not to the target).
    pub in_computed: bool,
}

/// Compares `chord_set(f)` with `target` exactly.
///
/// The sets agree iff they agree at every endpoint of either set and at
/// every midpoint between consecutive endpoints, so one of those probes is
/// returned on mismatch.
pub fn verify_chordset_equals(f: &PLFunction, target: &IntervalSet) -> Option<Discrepancy> {
    compare_sets(&chord_set(f), target)
}

pub fn compare_sets(computed: &IntervalSet, target: &IntervalSet) -> Option<Discrepancy> {
    if computed == target {
        return None;
    }
    let mut marks: Vec<Rational> = computed.endpoints();
    marks.extend(target.endpoints());
    marks.sort();
    marks.dedup();
    let mut probes = Vec::with_capacity(marks.len() * 2);
    for (i, m) in marks.iter().enumerate() {
        if i > 0 {
            probes.push(marks[i - 1].midpoint(m));
        }
        probes.push(m.clone());
    }
    probes.into_iter().find_map(|p| {
        let in_computed = computed.contains(&p);
        (in_computed != target.contains(&p)).then_some(Discrepancy { at: p, in_computed })
    })
}

/// One fixture and the chord set it is expected to have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    /// Function file, relative to the manifest.
    pub function: String,
    pub chord_set: IntervalSet,
}

/// `{"fixtures": [{"name": ..., "function": ..., "chord_set": {...}}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub fixtures: Vec<ManifestEntry>,
}

/// Outcome of checking one manifest entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureCheck {
    pub name: String,
    pub discrepancy: Option<Discrepancy>,
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }

    /// Loads each function relative to `dir` and compares its chord set.
    pub fn check(&self, dir: &Path) -> Result<Vec<FixtureCheck>> {
        self.fixtures
            .iter()
            .map(|e| {
                let f = PLFunction::from_json(&std::fs::read_to_string(dir.join(&e.function))?)?;
                Ok(FixtureCheck {
                    name: e.name.clone(),
                    discrepancy: verify_chordset_equals(&f, &e.chord_set),
                })
            })
            .collect()
    }
}
