//! Critical points, monotone segments and zeros of `f` on `[0, pi]`.
//!
//! Interior critical points satisfy `a + 16 cos(theta) cos(2 theta) = 0`, i.e.
//! `h(x) = 2x^3 - x = -a/16` with `x = cos(theta)`. `h` is monotone on the three
//! pieces cut at `x = -1/sqrt(6)` and `x = 1/sqrt(6)` (local max and min
//! `+-sqrt(6)/9`) and maps `[-1, 1]` onto `[-1, 1]`, so there are at most three
//! critical points and at most four monotone segments of `f`.

use std::f64::consts::PI;

use crate::bisect::bisect;
use crate::error::{Error, Result};
use crate::trig::TrigParams;

/// Thresholds used to decide that a computed value is zero.
///
/// All are scaled by `1 + |a| + |b|`, the natural magnitude of `f`, and by
/// `scale` (the CLI's `--tol-scale`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub scale: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { scale: 1.0 }
    }
}

impl Tolerances {
    pub const SIGN: f64 = 1e-11;
    pub const TANGENT: f64 = 1e-9;
    pub const THETA: f64 = 1e-12;
    pub const CONVEX: f64 = 1e-11;

    pub fn scaled(scale: f64) -> Self {
        Self { scale }
    }

    /// `|f| <= sign` at `theta = 0` or `pi` counts as a zero.
    pub fn sign(&self, tp: &TrigParams) -> f64 {
        Self::SIGN * self.scale * magnitude(tp)
    }

    /// `|f| <= tangent` at a critical point counts as a tangential zero.
    pub fn tangent(&self, tp: &TrigParams) -> f64 {
        Self::TANGENT * self.scale * magnitude(tp)
    }

    /// Bisection stop width in `theta`.
    pub fn theta(&self) -> f64 {
        Self::THETA * self.scale
    }

    /// Threshold for `P(t*)` on the convex (`m >= 0`) path, relative to the
    /// sum of the absolute values of the terms of `P(t*)`.
    pub fn convex(&self, term_magnitude: f64) -> f64 {
        Self::CONVEX * self.scale * (1.0 + term_magnitude)
    }
}

fn magnitude(tp: &TrigParams) -> f64 {
    1.0 + tp.a().abs() + tp.b().abs()
}

/// `h(x) = x (2x^2 - 1)`.
pub fn critical_cubic(x: f64) -> f64 {
    x * (2.0 * x * x - 1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CriticalSet {
    /// Solutions of `h(x) = -a/16` strictly inside `(-1, 1)`, ascending.
    pub xs: Vec<f64>,
    /// `arccos` of `xs`, ascending.
    pub thetas: Vec<f64>,
}

/// All solutions of `2x^3 - x = -a/16` in the open interval `(-1, 1)`.
pub fn solve_critical_cubic(a: f64) -> CriticalSet {
    let target = -a / 16.0;
    let s = 1.0 / 6f64.sqrt();
    let g = |x: f64| critical_cubic(x) - target;

    let mut xs: Vec<f64> = Vec::with_capacity(3);
    for (lo, hi) in [(-1.0, -s), (-s, s), (s, 1.0)] {
        let (g_lo, g_hi) = (g(lo), g(hi));
        if g_lo * g_hi > 0.0 || g_lo.is_nan() || g_hi.is_nan() {
            continue;
        }
        if let Ok(x) = bisect(g, lo, hi, 0.0) {
            // a target equal to h(+-1/sqrt(6)) is found by both adjacent pieces
            if x > -1.0 && x < 1.0 && !xs.contains(&x) {
                xs.push(x);
            }
        }
    }
    xs.sort_by(f64::total_cmp);
    let thetas = xs.iter().rev().map(|x| x.acos()).collect();
    CriticalSet { xs, thetas }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneSegment {
    pub lo: f64,
    pub hi: f64,
    pub f_lo: f64,
    pub f_hi: f64,
    /// Sign of `f'` inside the segment: `1`, `-1`, or `0` for a collapsed segment.
    pub direction: i8,
}

/// Splits `[0, pi]` at the critical angles.
pub fn decompose(tp: &TrigParams, crit: &CriticalSet) -> Result<Vec<MonotoneSegment>> {
    let mut cuts = Vec::with_capacity(crit.thetas.len() + 2);
    cuts.push(0.0);
    cuts.extend(crit.thetas.iter().copied().filter(|t| *t > 0.0 && *t < PI));
    cuts.push(PI);

    let mut segs = Vec::with_capacity(cuts.len() - 1);
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if !(lo < hi) {
            continue;
        }
        let (f_lo, f_hi) = (tp.f(lo), tp.f(hi));
        let slope = tp.f_prime(lo + 0.5 * (hi - lo));
        let direction = if slope != 0.0 {
            slope.signum() as i8
        } else if f_hi != f_lo {
            (f_hi - f_lo).signum() as i8
        } else {
            if hi - lo > 1e-9 {
                return Err(Error::ConstantSegment { lo, hi });
            }
            0
        };
        segs.push(MonotoneSegment { lo, hi, f_lo, f_hi, direction });
    }
    Ok(segs)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InteriorZeroReport {
    pub count: usize,
    /// Zeros of `f` in `[0, pi]`, ascending.
    pub zeros: Vec<f64>,
    /// Per zero: found at an interior critical point (suspected even multiplicity).
    pub tangency_flags: Vec<bool>,
}

impl InteriorZeroReport {
    /// Count with each tangential zero taken twice.
    pub fn multiplicity_count(&self) -> usize {
        self.count + self.tangency_flags.iter().filter(|t| **t).count()
    }
}

/// Locates the zeros of `f` on `[0, pi]` from its monotone segments.
pub fn count_interior_zeros(
    tp: &TrigParams,
    segs: &[MonotoneSegment],
    tol: &Tolerances,
) -> Result<InteriorZeroReport> {
    let sign_tol = tol.sign(tp);
    let tangent_tol = tol.tangent(tp);

    // segment endpoints: (theta, f, is_zero, is_tangent)
    let mut points: Vec<(f64, f64, bool, bool)> = Vec::with_capacity(segs.len() + 1);
    for (i, seg) in segs.iter().enumerate() {
        if i == 0 {
            points.push((seg.lo, seg.f_lo, false, false));
        }
        points.push((seg.hi, seg.f_hi, false, false));
    }
    let last = points.len() - 1;
    for (i, pt) in points.iter_mut().enumerate() {
        let boundary = i == 0 || i == last;
        let threshold = if boundary { sign_tol } else { tangent_tol };
        if pt.1.abs() <= threshold {
            pt.2 = true;
            pt.3 = !boundary;
        }
    }

    let mut found: Vec<(f64, bool)> = points
        .iter()
        .filter(|pt| pt.2)
        .map(|pt| (pt.0, pt.3))
        .collect();

    for (i, seg) in segs.iter().enumerate() {
        let (left, right) = (points[i], points[i + 1]);
        if seg.direction == 0 || left.2 || right.2 {
            continue;
        }
        if (left.1 < 0.0) != (right.1 < 0.0) {
            let theta = bisect(|th| tp.f(th), seg.lo, seg.hi, 0.0)?;
            found.push((theta, false));
        }
    }

    found.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut zeros: Vec<f64> = Vec::with_capacity(found.len());
    let mut tangency_flags: Vec<bool> = Vec::with_capacity(found.len());
    for (theta, tangent) in found {
        match zeros.last() {
            Some(prev) if theta - prev <= tol.theta() => {
                let flag = tangency_flags.last_mut().expect("flags track zeros");
                *flag |= tangent;
            }
            _ => {
                zeros.push(theta);
                tangency_flags.push(tangent);
            }
        }
    }

    Ok(InteriorZeroReport {
        count: zeros.len(),
        zeros,
        tangency_flags,
    })
}
