mod common;

use common::fixtures_dir;
use horizontal_chords::chordset::{chord_exists, chord_set};
use horizontal_chords::constructions::Manifest;
use horizontal_chords::plfunc::PLFunction;
use horizontal_chords::rational::Rational;
use horizontal_chords::report::ChordReport;

fn load(name: &str) -> PLFunction {
    PLFunction::from_json(&std::fs::read_to_string(fixtures_dir().join(name)).unwrap()).unwrap()
}

#[test]
fn manifest_matches() {
    let dir = fixtures_dir();
    let manifest = Manifest::load(&dir.join("manifest.json")).unwrap();
    assert!(manifest.fixtures.len() >= 10);
    for check in manifest.check(&dir).unwrap() {
        assert_eq!(check.discrepancy, None, "{}", check.name);
    }
}

#[test]
fn fixtures_agree_with_grid_oracle() {
    let manifest = Manifest::load(&fixtures_dir().join("manifest.json")).unwrap();
    for entry in &manifest.fixtures {
        let report = ChordReport::compute_with_oracle(&load(&entry.function), 240);
        assert!(report.is_consistent(), "{}", entry.name);
        assert!(report.hopf.min_ratio >= Rational::new(1, 2));
    }
}

#[test]
fn isolated_points_are_detected_by_the_oracle() {
    let f = load("isolated.json");
    let s = chord_set(&f);
    let eps = Rational::new(1, 1000);
    let late: Vec<Rational> = s
        .isolated_points()
        .into_iter()
        .filter(|p| *p > Rational::new(1, 2) && *p < 1)
        .collect();
    assert_eq!(late, vec![Rational::new(5, 8), Rational::new(3, 4), Rational::new(7, 8)]);
    for p in late {
        assert!(chord_exists(&f, &p).unwrap().is_some());
        assert!(chord_exists(&f, &(&p - &eps)).unwrap().is_none());
        assert!(chord_exists(&f, &(&p + &eps)).unwrap().is_none());
    }
}

#[test]
fn sharp_fixtures_have_half_measure() {
    for (name, mountains) in [("sn1.json", 1), ("sn2.json", 2), ("sn5.json", 5), ("sn22.json", 22)] {
        let f = load(name);
        let s = chord_set(&f);
        assert_eq!(s.measure(), Rational::new(1, 2), "{name}");
        let ranges = f.decompose().ranges;
        let count = ranges
            .iter()
            .filter(|r| r.kind == horizontal_chords::plfunc::RangeKind::MountainRange)
            .count();
        assert_eq!(count, mountains, "{name}");
    }
}
