//! Fraction of random two-mountain functions that have every chord length,
//! plus a cross-check of the closed form against the exact engine.
//!
//! `cargo run --release --example monte_carlo -- 100000 7`

use horizontal_chords::family::{cross_validate, monte_carlo, SamplingConvention};

fn main() {
    let mut args = std::env::args().skip(1);
    let samples: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(100_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    for convention in [SamplingConvention::Default, SamplingConvention::UniformBreakpoints] {
        let r = monte_carlo(samples, seed, convention);
        println!(
            "{:>20}: {:.4} ± {:.4} ({} of {})",
            convention.name(),
            r.fraction,
            r.halfwidth,
            r.full_count,
            r.samples
        );
    }

    let cv = cross_validate(2_000, seed, SamplingConvention::Default);
    println!(
        "cross-validation on {} samples: {} not full, {} disagreements, {} complement mismatches",
        cv.samples,
        cv.not_full,
        cv.disagreements.len(),
        cv.complement_mismatches.len()
    );
}
