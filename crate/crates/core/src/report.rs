//! Everything known about one function's chord set, bundled for output.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chordset::{chord_set_with_stats, oracle_mismatches, ArrangementStats};
use crate::hopf::{check_additive_complement, check_half_measure, AdditivityViolation};
use crate::interval::{IntervalSet, OpenInterval};
use crate::plfunc::{PLFunction, Range};
use crate::rational::Rational;

/// Complement additivity and the half-measure minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfSummary {
    pub additive: bool,
    pub violation: Option<AdditivityViolation>,
    pub min_ratio: Rational,
    pub argmin_d: Rational,
}

/// Result of comparing the exact set with the grid oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub resolution: u32,
    /// Grid lengths where the exact set and `chord_exists` disagree.
    pub mismatches: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChordReport {
    pub chord_set: IntervalSet,
    pub complement: Vec<OpenInterval>,
    pub measure: Rational,
    pub full: bool,
    /// `d ↦ λ(S ∩ [0, d])` at every positive interval endpoint.
    pub truncated_measures: BTreeMap<Rational, Rational>,
    pub hopf: HopfSummary,
    pub ranges: Vec<Range>,
    pub arrangement: ArrangementStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

impl ChordReport {
    pub fn compute(f: &PLFunction) -> ChordReport {
        let (set, arrangement) = chord_set_with_stats(f);
        let violation = check_additive_complement(&set).expect("chord sets contain 0 and 1");
        let half = check_half_measure(&set);
        let truncated_measures = set
            .endpoints()
            .into_iter()
            .filter(Rational::is_positive)
            .map(|d| {
                let m = set.truncated_measure(&d).expect("0 < d <= 1");
                (d, m)
            })
            .collect();
        ChordReport {
            complement: set.complement_in_unit(),
            measure: set.measure(),
            full: set == IntervalSet::unit(),
            truncated_measures,
            hopf: HopfSummary {
                additive: violation.is_none(),
                violation,
                min_ratio: half.min_ratio,
                argmin_d: half.argmin_d,
            },
            ranges: f.decompose().ranges,
            arrangement,
            oracle: None,
            chord_set: set,
        }
    }

    /// Also compares the set against `chord_exists` at `k / resolution`.
    pub fn compute_with_oracle(f: &PLFunction, resolution: u32) -> ChordReport {
        let mut report = ChordReport::compute(f);
        report.oracle = Some(OracleCheck {
            resolution,
            mismatches: oracle_mismatches(f, &report.chord_set, resolution),
        });
        report
    }

    /// False if the oracle disagreed or the complement was not additive.
    pub fn is_consistent(&self) -> bool {
        self.hopf.additive && self.oracle.as_ref().is_none_or(|o| o.mismatches.is_empty())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn tent_report() {
        let r = ChordReport::compute(&PLFunction::tent(q(1, 2), q(1, 1)).unwrap());
        assert!(r.full);
        assert_eq!(r.measure, q(1, 1));
        assert!(r.complement.is_empty());
        assert_eq!(r.truncated_measures.get(&q(1, 1)), Some(&q(1, 1)));
        assert!(r.hopf.additive);
        assert_eq!(r.hopf.min_ratio, q(1, 1));
    }

    #[test]
    fn mountain_valley_report_json() {
        let f = PLFunction::from_fractions(&[
            ((0, 1), (0, 1)),
            ((1, 4), (1, 1)),
            ((1, 2), (0, 1)),
            ((3, 4), (-1, 1)),
            ((1, 1), (0, 1)),
        ]);
        let r = ChordReport::compute_with_oracle(&f, 64);
        assert!(!r.full && r.is_consistent());
        assert_eq!(r.hopf.min_ratio, q(1, 2));
        assert_eq!(r.hopf.argmin_d, q(1, 1));
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["chord_set"]["intervals"], serde_json::json!([["0", "1/2"], ["1", "1"]]));
        assert_eq!(v["complement"], serde_json::json!([["1/2", "1"]]));
        assert_eq!(v["measure"], "1/2");
        assert_eq!(v["truncated_measures"]["1/2"], "1/2");
        assert_eq!(v["hopf"]["additive"], true);
        assert_eq!(v["hopf"]["min_ratio"], "1/2");
        let back: ChordReport = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }
}
