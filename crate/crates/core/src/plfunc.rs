//! Piecewise-linear functions on `[0, 1]` vanishing at both endpoints.
//!
//! A [`PLFunction`] is stored as its canonical breakpoint list: x strictly
//! increasing from 0 to 1, `f(0) = f(1) = 0`, and no interior breakpoint
//! collinear with its neighbours.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PLFunction {
    points: Vec<Point>,
}

impl fmt::Debug for PLFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.points).finish()
    }
}

impl PLFunction {
    /// Validates and canonicalizes a breakpoint list.
    ///
    /// Repeated identical points are dropped and interior points collinear
    /// with their neighbours are merged away.
    pub fn new<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut pts: Vec<Point> = Vec::new();
        for (index, (x, y)) in points.into_iter().enumerate() {
            if let Some(last) = pts.last() {
                if last.x == x && last.y == y {
                    continue;
                }
                if last.x >= x {
                    return Err(Error::NotIncreasing { index });
                }
            }
            pts.push(Point { x, y });
        }
        if pts.len() < 2 {
            return Err(Error::TooFewPoints(pts.len()));
        }
        let (first, last) = (&pts[0], &pts[pts.len() - 1]);
        if !first.x.is_zero() || last.x != 1 {
            return Err(Error::DomainNotUnit {
                first: first.x.clone(),
                last: last.x.clone(),
            });
        }
        for p in [first, last] {
            if !p.y.is_zero() {
                return Err(Error::NonzeroEndpoint {
                    x: p.x.clone(),
                    y: p.y.clone(),
                });
            }
        }
        Ok(PLFunction {
            points: remove_collinear(pts),
        })
    }

    /// Convenience constructor from integer fraction pairs
    /// `((xn, xd), (yn, yd))`. Panics on invalid input; meant for tests and
    /// examples.
    pub fn from_fractions(points: &[((i64, i64), (i64, i64))]) -> Self {
        PLFunction::new(
            points
                .iter()
                .map(|&((xn, xd), (yn, yd))| (Rational::new(xn, xd), Rational::new(yn, yd))),
        )
        .expect("invalid breakpoint list")
    }

    /// The constant zero function.
    pub fn zero() -> Self {
        PLFunction {
            points: vec![
                Point::new(Rational::zero(), Rational::zero()),
                Point::new(Rational::one(), Rational::zero()),
            ],
        }
    }

    /// Single tent: zero at 0 and 1, peak `height` at `peak`.
    pub fn tent(peak: Rational, height: Rational) -> Result<Self> {
        PLFunction::new([
            (Rational::zero(), Rational::zero()),
            (peak, height),
            (Rational::one(), Rational::zero()),
        ])
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Breakpoint abscissae.
    pub fn breakpoints(&self) -> impl Iterator<Item = &Rational> + '_ {
        self.points.iter().map(|p| &p.x)
    }

    pub fn num_segments(&self) -> usize {
        self.points.len() - 1
    }

    /// Slope of segment `i`, between breakpoints `i` and `i + 1`.
    pub fn slope(&self, i: usize) -> Rational {
        let (p, r) = (&self.points[i], &self.points[i + 1]);
        (&r.y - &p.y) / (&r.x - &p.x)
    }

    pub fn is_identically_zero(&self) -> bool {
        self.points.iter().all(|p| p.y.is_zero())
    }

    /// Exact value at `x`, which must lie in `[0, 1]`.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if x.is_negative() || *x > 1 {
            return Err(Error::OutOfRange {
                what: "x",
                value: x.clone(),
                range: "[0, 1]",
            });
        }
        Ok(self.value_at(x))
    }

    /// Index of the segment `[x_i, x_{i+1}]` holding `x`; breakpoints
    /// resolve to the segment on their right except at `x = 1`.
    pub(crate) fn segment_index(&self, x: &Rational) -> usize {
        let after = self.points.partition_point(|p| p.x <= *x);
        after.saturating_sub(1).min(self.points.len() - 2)
    }

    /// Evaluation without the domain check, extending the end segments
    /// linearly. Callers guarantee `x` in `[0, 1]`.
    pub(crate) fn value_at(&self, x: &Rational) -> Rational {
        let i = self.segment_index(x);
        let p = &self.points[i];
        if p.x == *x {
            return p.y.clone();
        }
        &p.y + self.slope(i) * (x - &p.x)
    }

    /// `s ↦ f(1 - s)`.
    pub fn reverse(&self) -> PLFunction {
        let one = Rational::one();
        PLFunction {
            points: self
                .points
                .iter()
                .rev()
                .map(|p| Point::new(&one - &p.x, p.y.clone()))
                .collect(),
        }
    }

    /// Parses the JSON function format `{"points": [[x, y], ...]}`.
    pub fn from_json(document: &str) -> Result<Self> {
        let file: FunctionFile = serde_json::from_str(document)?;
        PLFunction::new(file.points.into_iter().map(|[x, y]| (x.0, y.0)))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("serializable")
    }

    pub fn to_file(&self) -> FunctionFile {
        FunctionFile {
            points: self
                .points
                .iter()
                .map(|p| [RationalField(p.x.clone()), RationalField(p.y.clone())])
                .collect(),
        }
    }

    /// Maximal mountain and valley ranges, left to right.
    pub fn decompose(&self) -> RangeDecomposition {
        decompose(self)
    }
}

/// Parses a function document; see [`PLFunction::from_json`].
pub fn parse_plfunction(document: &str) -> Result<PLFunction> {
    PLFunction::from_json(document)
}

fn remove_collinear(pts: Vec<Point>) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(pts.len());
    for p in pts {
        while out.len() >= 2 {
            let (a, b) = (&out[out.len() - 2], &out[out.len() - 1]);
            // (b - a) x (p - a) == 0
            let cross = (&b.x - &a.x) * (&p.y - &a.y) - (&b.y - &a.y) * (&p.x - &a.x);
            if cross.is_zero() {
                out.pop();
            } else {
                break;
            }
        }
        out.push(p);
    }
    out
}

/// On-disk function document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctionFile {
    pub points: Vec<[RationalField; 2]>,
}

/// A rational written either as a `"p/q"` string or a bare JSON integer.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalField(pub Rational);

impl Serialize for RationalField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalField {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(d)? {
            Repr::Text(s) => s.parse().map(RationalField).map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(RationalField(Rational::from_integer(n))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeKind {
    MountainRange,
    ValleyRange,
}

/// One maximal mountain or valley range `f|[s1, s2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Range {
    pub kind: RangeKind,
    pub s1: Rational,
    pub s2: Rational,
    /// Maximum for a mountain range, minimum for a valley range.
    pub height: Rational,
    pub width: Rational,
    /// Leftmost extremum.
    pub peak_x: Rational,
    pub ascent_width: Rational,
    pub descent_width: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeDecomposition {
    pub ranges: Vec<Range>,
    /// Set only for `f ≡ 0`, which decomposes into one height-0 range.
    pub degenerate: bool,
}

impl RangeDecomposition {
    pub fn max_width(&self) -> Rational {
        self.ranges
            .iter()
            .map(|r| r.width.clone())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn decompose(f: &PLFunction) -> RangeDecomposition {
    let zero = Rational::zero();
    if f.is_identically_zero() {
        return RangeDecomposition {
            ranges: vec![Range {
                kind: RangeKind::MountainRange,
                s1: zero.clone(),
                s2: Rational::one(),
                height: zero.clone(),
                width: Rational::one(),
                peak_x: zero.clone(),
                ascent_width: zero,
                descent_width: Rational::one(),
            }],
            degenerate: true,
        };
    }

    // Refine so that no segment changes strict sign in its interior.
    let mut refined: Vec<Point> = Vec::with_capacity(f.points.len() * 2);
    for w in f.points.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        refined.push(a.clone());
        if a.y.signum() * b.y.signum() < 0 {
            let x = &a.x - &a.y * (&b.x - &a.x) / (&b.y - &a.y);
            refined.push(Point::new(x, zero.clone()));
        }
    }
    refined.push(f.points[f.points.len() - 1].clone());

    // Group segments: a nonzero segment of the opposite sign starts a new
    // range; zero segments stay with whatever range is open.
    let mut groups: Vec<(i8, usize, usize)> = Vec::new(); // (sign, first point, last point)
    for (i, w) in refined.windows(2).enumerate() {
        let sign = if w[0].y.is_positive() || w[1].y.is_positive() {
            1
        } else if w[0].y.is_negative() || w[1].y.is_negative() {
            -1
        } else {
            0
        };
        match groups.last_mut() {
            None => groups.push((sign, i, i + 1)),
            Some(g) if g.0 == 0 || sign == 0 || g.0 == sign => {
                if g.0 == 0 {
                    g.0 = sign;
                }
                g.2 = i + 1;
            }
            Some(_) => groups.push((sign, i, i + 1)),
        }
    }

    let ranges = groups
        .into_iter()
        .map(|(sign, lo, hi)| {
            let pts = &refined[lo..=hi];
            let mut best = &pts[0];
            for p in &pts[1..] {
                let better = if sign > 0 { p.y > best.y } else { p.y < best.y };
                if better {
                    best = p;
                }
            }
            let s1 = pts[0].x.clone();
            let s2 = pts[pts.len() - 1].x.clone();
            Range {
                kind: if sign > 0 {
                    RangeKind::MountainRange
                } else {
                    RangeKind::ValleyRange
                },
                width: &s2 - &s1,
                ascent_width: &best.x - &s1,
                descent_width: &s2 - &best.x,
                height: best.y.clone(),
                peak_x: best.x.clone(),
                s1,
                s2,
            }
        })
        .collect();
    RangeDecomposition {
        ranges,
        degenerate: false,
    }
}
