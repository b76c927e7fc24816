//! Seeded sampling of the family, Monte Carlo estimation of the full
//! fraction, and cross-validation against the exact engine.
//!
//! Samples are generated in fixed-size blocks; block `k` draws from a ChaCha8
//! stream selected by `(seed, k)`, so results do not depend on how rayon
//! schedules the blocks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::{classify_closed_form, is_full_closed_form};
use super::{realize, TwoMountainParams};
use crate::chordset::chord_set;
use crate::interval::OpenInterval;
use crate::rational::Rational;

const BLOCK: u64 = 4096;

/// Denominator used to rationalize every sampled float.
pub const RATIONALIZE_DENOM: i64 = 1_000_000;

/// How parameter tuples are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SamplingConvention {
    /// Widths uniform on the open 2-simplex; each piece's ascent fraction
    /// uniform on (0, 1); raw heights uniform on (0, 1] rescaled so the
    /// larger is 1; valley depth fixed at -1.
    #[default]
    Default,
    /// The five interior breakpoint abscissae are sorted uniforms on (0, 1);
    /// heights and valley depth as in `Default`.
    UniformBreakpoints,
}

impl SamplingConvention {
    pub fn name(self) -> &'static str {
        match self {
            SamplingConvention::Default => "default",
            SamplingConvention::UniformBreakpoints => "uniform-breakpoints",
        }
    }
}

impl std::str::FromStr for SamplingConvention {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default" => Ok(SamplingConvention::Default),
            "uniform-breakpoints" => Ok(SamplingConvention::UniformBreakpoints),
            other => Err(format!("unknown sampling convention {other:?}")),
        }
    }
}

fn rationalize(x: f64) -> Rational {
    Rational::approximate(x, RATIONALIZE_DENOM).expect("sampled values are finite")
}

/// Uniform on (0, 1], rationalized and strictly positive.
fn positive_unit(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rationalize(1.0 - rng.random::<f64>());
        if r.is_positive() {
            return r;
        }
    }
}

/// Strictly inside (0, 1) after rationalization.
fn open_unit(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rationalize(rng.random::<f64>());
        if r.is_positive() && r < 1 {
            return r;
        }
    }
}

fn heights(rng: &mut impl Rng) -> (Rational, Rational) {
    let (u_l, u_r) = (positive_unit(rng), positive_unit(rng));
    let top = u_l.clone().max(u_r.clone());
    (&u_l / &top, &u_r / &top)
}

/// Draws one valid parameter tuple.
pub fn sample_params(rng: &mut impl Rng, convention: SamplingConvention) -> TwoMountainParams {
    loop {
        if let Some(p) = try_sample(rng, convention) {
            return p;
        }
    }
}

fn try_sample(rng: &mut impl Rng, convention: SamplingConvention) -> Option<TwoMountainParams> {
    let one = Rational::one();
    let neg_one = -Rational::one();
    match convention {
        SamplingConvention::Default => {
            let (c1, c2) = {
                let (x, y) = (open_unit(rng), open_unit(rng));
                if x < y { (x, y) } else { (y, x) }
            };
            if c1 == c2 {
                return None;
            }
            let widths = [c1.clone(), &c2 - &c1, &one - &c2];
            let fractions = [open_unit(rng), open_unit(rng), open_unit(rng)];
            let ascents = [
                &widths[0] * &fractions[0],
                &widths[1] * &fractions[1],
                &widths[2] * &fractions[2],
            ];
            let (h_l, h_r) = heights(rng);
            TwoMountainParams::new(widths, ascents, [h_l, neg_one, h_r]).ok()
        }
        SamplingConvention::UniformBreakpoints => {
            let mut xs: Vec<Rational> = (0..5).map(|_| open_unit(rng)).collect();
            xs.sort();
            if xs.windows(2).any(|w| w[0] == w[1]) {
                return None;
            }
            // peaks at xs[0], xs[2], xs[4]; zeros at xs[1], xs[3]
            let widths = [xs[1].clone(), &xs[3] - &xs[1], &one - &xs[3]];
            let ascents = [xs[0].clone(), &xs[2] - &xs[1], &xs[4] - &xs[3]];
            let (h_l, h_r) = heights(rng);
            TwoMountainParams::new(widths, ascents, [h_l, neg_one, h_r]).ok()
        }
    }
}

/// Runs `body` on each sample of every block, in parallel, folding block
/// results in block order.
fn for_blocks<T, F>(samples: u64, seed: u64, convention: SamplingConvention, body: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64, TwoMountainParams) -> Option<T> + Sync,
{
    let blocks = samples.div_ceil(BLOCK);
    (0..blocks)
        .into_par_iter()
        .flat_map_iter(|b| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(b);
            let start = b * BLOCK;
            let end = (start + BLOCK).min(samples);
            let body = &body;
            (start..end)
                .filter_map(move |i| body(i, sample_params(&mut rng, convention)))
                .collect::<Vec<_>>()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloResult {
    /// Fraction of sampled tuples with the full chord property.
    pub fraction: f64,
    /// 95% normal-approximation half-width of `fraction`.
    pub halfwidth: f64,
    pub samples: u64,
    pub full_count: u64,
    pub seed: u64,
    pub convention: SamplingConvention,
}

/// Estimates the fraction of the family with the full chord property using
/// the closed-form classifier.
pub fn monte_carlo(samples: u64, seed: u64, convention: SamplingConvention) -> MonteCarloResult {
    let samples = samples.max(1);
    let full_count = for_blocks(samples, seed, convention, |_, p| is_full_closed_form(&p).then_some(()))
        .len() as u64;
    let fraction = full_count as f64 / samples as f64;
    let halfwidth = 1.96 * (fraction * (1.0 - fraction) / samples as f64).sqrt();
    MonteCarloResult {
        fraction,
        halfwidth,
        samples,
        full_count,
        seed,
        convention,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub index: u64,
    pub params: TwoMountainParams,
    pub closed_form_full: bool,
    pub exact_full: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementMismatch {
    pub index: u64,
    pub params: TwoMountainParams,
    pub predicted: Vec<OpenInterval>,
    pub computed: Vec<OpenInterval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidationReport {
    pub samples: u64,
    pub seed: u64,
    pub convention: SamplingConvention,
    pub not_full: u64,
    pub disagreements: Vec<Disagreement>,
    /// Cases where the exact complement differs from `T \ (T1 ∪ T2)`.
    pub complement_mismatches: Vec<ComplementMismatch>,
}

impl CrossValidationReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty() && self.complement_mismatches.is_empty()
    }
}

enum Outcome {
    Agree { full: bool },
    Disagree(Disagreement),
    Mismatch(ComplementMismatch),
}

/// Compares the closed-form verdict with the exact engine on sampled tuples.
pub fn cross_validate(samples: u64, seed: u64, convention: SamplingConvention) -> CrossValidationReport {
    let samples = samples.max(1);
    let outcomes = for_blocks(samples, seed, convention, |index, params| {
        Some(compare_one(index, params))
    });
    let mut report = CrossValidationReport {
        samples,
        seed,
        convention,
        not_full: 0,
        disagreements: Vec::new(),
        complement_mismatches: Vec::new(),
    };
    for o in outcomes {
        match o {
            Outcome::Agree { full } => {
                if !full {
                    report.not_full += 1;
                }
            }
            Outcome::Disagree(d) => report.disagreements.push(d),
            Outcome::Mismatch(m) => {
                report.not_full += 1;
                report.complement_mismatches.push(m);
            }
        }
    }
    report
}

fn compare_one(index: u64, params: TwoMountainParams) -> Outcome {
    let verdict = classify_closed_form(&params);
    let f = realize(&params).expect("sampled params are valid");
    let computed = chord_set(&f).complement_in_unit();
    let exact_full = computed.is_empty();
    if verdict.full != exact_full {
        return Outcome::Disagree(Disagreement {
            index,
            params,
            closed_form_full: verdict.full,
            exact_full,
        });
    }
    let predicted = verdict.predicted_complement();
    if predicted != computed {
        return Outcome::Mismatch(ComplementMismatch {
            index,
            params,
            predicted,
            computed,
        });
    }
    Outcome::Agree { full: exact_full }
}
