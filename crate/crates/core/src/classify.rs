//! Real/complex classification of a depressed quartic.
//!
//! For `m < 0` the real roots split into interior roots (zeros of `f` on
//! `[0, pi]`, i.e. roots in `[-u, u]`) and exterior roots. `P` is strictly
//! convex outside `[-u, u]` and tends to `+inf`, so `f(0) < 0` gives exactly
//! one root in `(u, inf)` (likewise `f(pi) < 0` on the left).
//!
//! The boundary signs alone are not the whole story: with `f(0) >= 0` but
//! `P'(u) < 0` the convex tail dips before climbing and may cross twice,
//! e.g. `t^4 - 0.2825 t^2 + 4.056 t + 2.9345` has both real roots below
//! `-u`. This needs `|a| > 16` and can happen even with `b > |a| + 1` once
//! `|a|` exceeds about 35.33, so each non-negative side is checked by the
//! sign of `P` at the tail's minimum. `P'(u) - P'(-u) = 4u^3 > 0`, so at
//! most one side can dip. A root at `t = +-u` belongs to the interior count
//! only.
//!
//! For `m >= 0` the quartic is globally convex: `P'` is strictly increasing
//! and the sign of `P` at its single critical point decides everything.

use std::f64::consts::PI;
use std::fmt;

use crate::bisect::bisect;
use crate::error::{Error, Result};
use crate::poly::DepressedQuartic;
use crate::segments::{count_interior_zeros, decompose, solve_critical_cubic, Tolerances};
use crate::trig::{boundary_values, reduce, TrigParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    AllComplex,
    /// `f < 0` on `[0, pi]`: one exterior root on each side.
    TwoRealA,
    /// Two interior zeros, no exterior roots.
    TwoRealB,
    /// One interior zero and one exterior root.
    TwoRealC,
    FourReal,
    /// `m >= 0`, decided by convexity.
    MNonNegConvex,
    Degenerate,
}

impl CaseLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::AllComplex => "AllComplex",
            Self::TwoRealA => "TwoReal_a",
            Self::TwoRealB => "TwoReal_b",
            Self::TwoRealC => "TwoReal_c",
            Self::FourReal => "FourReal",
            Self::MNonNegConvex => "MNonNegConvex",
            Self::Degenerate => "Degenerate",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Self::AllComplex,
            Self::TwoRealA,
            Self::TwoRealB,
            Self::TwoRealC,
            Self::FourReal,
            Self::MNonNegConvex,
            Self::Degenerate,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flag {
    /// `b > |a| + 1` and no real roots. Only set when the outcome is
    /// `AllComplex`: the condition does not exclude an exterior pair.
    SufficientAllComplex,
    /// `b < -(|a| + 1)`, which alone gives one root on each side of `[-u, u]`.
    SufficientTwoExterior,
    /// An interior zero sits at a critical point of `f`.
    Tangency,
    /// A root at `t = u` or `t = -u`.
    BoundaryRoot,
    /// Counts came out odd without any near-zero decisive quantity.
    ParityMismatch,
    /// Two exterior roots on the same side of `[-u, u]`.
    ExteriorPair,
}

impl Flag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::SufficientAllComplex => "sufficient_all_complex",
            Self::SufficientTwoExterior => "sufficient_two_exterior",
            Self::Tangency => "tangency",
            Self::BoundaryRoot => "boundary_root",
            Self::ParityMismatch => "parity_mismatch",
            Self::ExteriorPair => "exterior_pair",
        }
    }
}

/// A decisive quantity that came out within its tolerance of zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub quantity: String,
    pub value: f64,
    pub threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootOrigin {
    Interior,
    Exterior,
    ConvexPath,
}

impl RootOrigin {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Interior => "interior",
            Self::Exterior => "exterior",
            Self::ConvexPath => "convex_path",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    /// Root of the depressed quartic.
    pub value: f64,
    pub multiplicity: u8,
    pub origin: RootOrigin,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    /// Distinct zeros of `f` on `[0, pi]`; `None` on the `m >= 0` path.
    pub n_int: Option<usize>,
    /// Interior count with tangential zeros counted twice.
    pub n_int_multiplicity: Option<usize>,
    pub n_ext: Option<usize>,
    pub n_real_distinct: usize,
    pub n_real_multiplicity: usize,
    pub case: CaseLabel,
    pub flags: Vec<Flag>,
    pub diagnostics: Vec<Diagnostic>,
    /// Sorted ascending.
    pub roots: Vec<RealRoot>,
    pub shift: f64,
    pub trig: Option<TrigParams>,
}

impl Classification {
    /// Real roots in the coordinates of the original (undepressed) quartic.
    pub fn shifted_roots(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value - self.shift).collect()
    }

    pub fn root_values(&self) -> Vec<f64> {
        self.roots.iter().map(|r| r.value).collect()
    }

    pub fn is_degenerate(&self) -> bool {
        self.case == CaseLabel::Degenerate
    }

    pub fn has_flag(&self, flag: Flag) -> bool {
        self.flags.contains(&flag)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn sort_roots(roots: &mut [RealRoot]) {
    roots.sort_by(|x, y| x.value.total_cmp(&y.value));
}

fn sufficient_flags(tp: &TrigParams) -> Vec<Flag> {
    let bound = tp.a().abs() + 1.0;
    let mut flags = Vec::new();
    if tp.b() > bound {
        flags.push(Flag::SufficientAllComplex);
    }
    if tp.b() < -bound {
        flags.push(Flag::SufficientTwoExterior);
    }
    flags
}

fn label_from_counts(n_int: usize, n_ext: usize) -> Option<CaseLabel> {
    match (n_int, n_ext) {
        (0, 0) => Some(CaseLabel::AllComplex),
        (0, 2) => Some(CaseLabel::TwoRealA),
        (2, 0) => Some(CaseLabel::TwoRealB),
        (1, 1) => Some(CaseLabel::TwoRealC),
        (n, e) if n + e == 4 => Some(CaseLabel::FourReal),
        _ => None,
    }
}

/// Classifies the real roots of `P` and recovers them.
pub fn classify(poly: &DepressedQuartic, tol: &Tolerances) -> Result<Classification> {
    if poly.m() >= 0.0 {
        return classify_m_nonneg(poly, tol);
    }
    let tp = reduce(poly)?;
    let sign_tol = tol.sign(&tp);
    let tangent_tol = tol.tangent(&tp);
    let (f0, fpi) = boundary_values(&tp);

    let crit = solve_critical_cubic(tp.a());
    let segs = decompose(&tp, &crit)?;
    let zeros = count_interior_zeros(&tp, &segs, tol)?;

    let mut diagnostics = Vec::new();
    for (name, value) in [("f(0)", f0), ("f(pi)", fpi)] {
        if value.abs() <= sign_tol {
            diagnostics.push(Diagnostic {
                quantity: name.to_string(),
                value,
                threshold: sign_tol,
            });
        }
    }
    for theta in &crit.thetas {
        let value = tp.f(*theta);
        if value.abs() <= tangent_tol {
            diagnostics.push(Diagnostic {
                quantity: format!("f(theta_c = {theta:.17})"),
                value,
                threshold: tangent_tol,
            });
        }
    }

    let mut roots: Vec<RealRoot> = zeros
        .zeros
        .iter()
        .zip(&zeros.tangency_flags)
        .map(|(theta, tangent)| RealRoot {
            value: tp.root_at(*theta),
            multiplicity: if *tangent { 2 } else { 1 },
            origin: RootOrigin::Interior,
        })
        .collect();

    let mut flags = sufficient_flags(&tp);
    let mut n_ext = 0;
    let mut n_ext_mult = 0;
    for (side, boundary) in [(Side::Right, f0), (Side::Left, fpi)] {
        if boundary < -sign_tol {
            roots.push(RealRoot {
                value: find_exterior_root(poly, side)?,
                multiplicity: 1,
                origin: RootOrigin::Exterior,
            });
            n_ext += 1;
            n_ext_mult += 1;
            continue;
        }
        // a root at the boundary itself is already an interior zero
        let skip_inner = boundary.abs() <= sign_tol;
        match exterior_dip(poly, side, tol, skip_inner)? {
            Dip::None => {}
            Dip::Tangent(t_star, diag) => {
                roots.push(RealRoot { value: t_star, multiplicity: 2, origin: RootOrigin::Exterior });
                diagnostics.push(diag);
                flags.push(Flag::Tangency);
                n_ext += 1;
                n_ext_mult += 2;
            }
            Dip::Crossing(found) => {
                if found.len() == 2 {
                    flags.push(Flag::ExteriorPair);
                }
                n_ext += found.len();
                n_ext_mult += found.len();
                roots.extend(
                    found
                        .into_iter()
                        .map(|value| RealRoot { value, multiplicity: 1, origin: RootOrigin::Exterior }),
                );
            }
        }
    }
    sort_roots(&mut roots);

    let n_int = zeros.count;
    let n_int_mult = zeros.multiplicity_count();

    if zeros.tangency_flags.iter().any(|t| *t) {
        flags.push(Flag::Tangency);
    }
    if zeros.zeros.iter().any(|th| *th == 0.0 || *th == PI) {
        flags.push(Flag::BoundaryRoot);
    }

    let case = if !diagnostics.is_empty() {
        CaseLabel::Degenerate
    } else {
        match label_from_counts(n_int, n_ext) {
            Some(label) => label,
            None => {
                flags.push(Flag::ParityMismatch);
                CaseLabel::Degenerate
            }
        }
    };
    if case != CaseLabel::AllComplex {
        flags.retain(|f| *f != Flag::SufficientAllComplex);
    }

    Ok(Classification {
        n_int: Some(n_int),
        n_int_multiplicity: Some(n_int_mult),
        n_ext: Some(n_ext),
        n_real_distinct: n_int + n_ext,
        n_real_multiplicity: n_int_mult + n_ext_mult,
        case,
        flags,
        diagnostics,
        roots,
        shift: poly.shift(),
        trig: Some(tp),
    })
}

enum Dip {
    None,
    /// The tail touches zero at its minimum.
    Tangent(f64, Diagnostic),
    Crossing(Vec<f64>),
}

/// Where `P(+-u) >= 0`, looks for the tail dipping below zero further out.
fn exterior_dip(poly: &DepressedQuartic, side: Side, tol: &Tolerances, skip_inner: bool) -> Result<Dip> {
    let (m, p, q) = (poly.m(), poly.p(), poly.q());
    let u = (-m).sqrt();
    // Cauchy bound of P'/4; it is at least 1 + |m|/2 >= u
    let d_bound = 1.0 + (m / 2.0).abs().max((p / 4.0).abs());
    let t_star = match side {
        Side::Right if poly.eval_derivative(u) < 0.0 => {
            bisect(|t| poly.eval_derivative(t), u, d_bound, 0.0)?
        }
        Side::Left if poly.eval_derivative(-u) > 0.0 => {
            bisect(|t| poly.eval_derivative(t), -d_bound, -u, 0.0)?
        }
        _ => return Ok(Dip::None),
    };
    let value = poly.eval(t_star);
    let t2 = t_star * t_star;
    let threshold = tol.convex(t2 * t2 + m.abs() * t2 + p.abs() * t_star.abs() + q.abs());
    if value.abs() <= threshold {
        let diag = Diagnostic {
            quantity: format!("P(t* = {t_star:.17})"),
            value,
            threshold,
        };
        return Ok(Dip::Tangent(t_star, diag));
    }
    if value > 0.0 {
        return Ok(Dip::None);
    }
    let bound = poly.cauchy_root_bound();
    let (boundary, far) = match side {
        Side::Right => (u, bound),
        Side::Left => (-u, -bound),
    };
    let mut found = vec![bisect(|t| poly.eval(t), t_star.min(far), t_star.max(far), 0.0)?];
    if !skip_inner {
        found.push(bisect(|t| poly.eval(t), t_star.min(boundary), t_star.max(boundary), 0.0)?);
    }
    Ok(Dip::Crossing(found))
}

/// The unique root beyond `u` (right) or below `-u` (left); requires
/// `P(u) < 0` (resp. `P(-u) < 0`).
pub fn find_exterior_root(poly: &DepressedQuartic, side: Side) -> Result<f64> {
    if !(poly.m() < 0.0) {
        return Err(Error::WrongPath("exterior roots need m < 0"));
    }
    let u = (-poly.m()).sqrt();
    let bound = poly.cauchy_root_bound();
    let (lo, hi) = match side {
        Side::Right => (u, bound),
        Side::Left => (-bound, -u),
    };
    let (inner, outer) = match side {
        Side::Right => (lo, hi),
        Side::Left => (hi, lo),
    };
    let (p_inner, p_outer) = (poly.eval(inner), poly.eval(outer));
    if !(p_inner < 0.0 && p_outer > 0.0) {
        return Err(Error::InvalidBracket { lo, hi, f_lo: poly.eval(lo), f_hi: poly.eval(hi) });
    }
    bisect(|t| poly.eval(t), lo, hi, 0.0)
}

/// Convex path for `m >= 0`.
pub fn classify_m_nonneg(poly: &DepressedQuartic, tol: &Tolerances) -> Result<Classification> {
    let (m, p, q) = (poly.m(), poly.p(), poly.q());
    if m < 0.0 {
        return Err(Error::WrongPath("convex path needs m >= 0"));
    }
    // P'/4 = t^3 + (m/2) t + p/4 is strictly increasing
    let d_bound = 1.0 + (m / 2.0).abs().max((p / 4.0).abs());
    let t_star = bisect(|t| poly.eval_derivative(t), -d_bound, d_bound, 0.0)?;
    let value = poly.eval(t_star);
    let t2 = t_star * t_star;
    let threshold = tol.convex(t2 * t2 + m.abs() * t2 + p.abs() * t_star.abs() + q.abs());

    let mut out = Classification {
        n_int: None,
        n_int_multiplicity: None,
        n_ext: None,
        n_real_distinct: 0,
        n_real_multiplicity: 0,
        case: CaseLabel::MNonNegConvex,
        flags: Vec::new(),
        diagnostics: Vec::new(),
        roots: Vec::new(),
        shift: poly.shift(),
        trig: None,
    };

    if value < -threshold {
        let bound = poly.cauchy_root_bound();
        let lo = bisect(|t| poly.eval(t), -bound, t_star, 0.0)?;
        let hi = bisect(|t| poly.eval(t), t_star, bound, 0.0)?;
        out.roots = [lo, hi]
            .into_iter()
            .map(|value| RealRoot { value, multiplicity: 1, origin: RootOrigin::ConvexPath })
            .collect();
        out.n_real_distinct = 2;
        out.n_real_multiplicity = 2;
    } else if value.abs() <= threshold {
        // P = P' = 0 at t*; a fourth-order contact only for t^4 itself
        let multiplicity = if m == 0.0 && p == 0.0 { 4 } else { 2 };
        out.roots = vec![RealRoot {
            value: t_star,
            multiplicity,
            origin: RootOrigin::ConvexPath,
        }];
        out.n_real_distinct = 1;
        out.n_real_multiplicity = multiplicity as usize;
        out.case = CaseLabel::Degenerate;
        out.diagnostics.push(Diagnostic {
            quantity: format!("P(t* = {t_star:.17})"),
            value,
            threshold,
        });
    }
    Ok(out)
}

/// Closed-form classification of `t^4 + m t^2 + q`.
///
/// With `p = 0`, `a = 0` and `f(theta) = cos(4 theta) + b`; its zeros solve
/// `cos(4 theta) = -b`, which has solutions iff `|b| <= 1`, i.e.
/// `0 <= q <= m^2 / 4`. Kept independent of [`classify`] as a cross-check.
pub fn classify_biquadratic(poly: &DepressedQuartic, tol: &Tolerances) -> Result<Classification> {
    if poly.p() != 0.0 {
        return Err(Error::WrongPath("biquadratic path needs p = 0"));
    }
    let (m, q) = (poly.m(), poly.q());
    if m >= 0.0 {
        return biquadratic_convex(poly, tol);
    }
    let tp = reduce(poly)?;
    let (u, b) = (tp.u(), tp.b());
    let tangent_tol = tol.tangent(&tp);

    let interior = |thetas: &[(f64, u8)]| -> Vec<RealRoot> {
        thetas
            .iter()
            .map(|(theta, multiplicity)| RealRoot {
                value: u * theta.cos(),
                multiplicity: *multiplicity,
                origin: RootOrigin::Interior,
            })
            .collect()
    };

    let mut flags = sufficient_flags(&tp);
    let mut diagnostics = Vec::new();
    let (mut roots, n_ext, case) = if (b - 1.0).abs() <= tangent_tol {
        // zeros merge pairwise at pi/4 and 3pi/4
        diagnostics.push(Diagnostic {
            quantity: "b - 1".to_string(),
            value: b - 1.0,
            threshold: tangent_tol,
        });
        flags.push(Flag::Tangency);
        (interior(&[(PI / 4.0, 2), (3.0 * PI / 4.0, 2)]), 0, CaseLabel::Degenerate)
    } else if b > 1.0 {
        (Vec::new(), 0, CaseLabel::AllComplex)
    } else if (b + 1.0).abs() <= tangent_tol {
        // q = 0: t = +-u and a double root at t = 0
        diagnostics.push(Diagnostic {
            quantity: "b + 1".to_string(),
            value: b + 1.0,
            threshold: tangent_tol,
        });
        flags.push(Flag::Tangency);
        flags.push(Flag::BoundaryRoot);
        (interior(&[(0.0, 1), (PI / 2.0, 2), (PI, 1)]), 0, CaseLabel::Degenerate)
    } else if b > -1.0 {
        let phi = (-b).acos();
        let thetas = [phi, 2.0 * PI - phi, 2.0 * PI + phi, 4.0 * PI - phi].map(|x| (x / 4.0, 1));
        (interior(&thetas), 0, CaseLabel::FourReal)
    } else {
        // q < 0: t^2 = (-m + sqrt(m^2 - 4q)) / 2 > u^2, one root beyond each of +-u
        let s = (-m + (m * m - 4.0 * q).sqrt()) / 2.0;
        let t = s.sqrt();
        let roots = [-t, t]
            .into_iter()
            .map(|value| RealRoot { value, multiplicity: 1, origin: RootOrigin::Exterior })
            .collect();
        (roots, 2, CaseLabel::TwoRealA)
    };
    sort_roots(&mut roots);

    let interior_roots: Vec<&RealRoot> =
        roots.iter().filter(|r| r.origin == RootOrigin::Interior).collect();
    let n_int = interior_roots.len();
    let n_int_mult: usize = interior_roots.iter().map(|r| r.multiplicity as usize).sum();
    Ok(Classification {
        n_int: Some(n_int),
        n_int_multiplicity: Some(n_int_mult),
        n_ext: Some(n_ext),
        n_real_distinct: n_int + n_ext,
        n_real_multiplicity: n_int_mult + n_ext,
        case,
        flags,
        diagnostics,
        roots,
        shift: poly.shift(),
        trig: Some(tp),
    })
}

/// `p = 0`, `m >= 0`: `s^2 + m s + q = 0` in `s = t^2` has at most one
/// nonnegative root `s = (-m + sqrt(m^2 - 4q)) / 2`, and only when `q <= 0`.
fn biquadratic_convex(poly: &DepressedQuartic, tol: &Tolerances) -> Result<Classification> {
    let (m, q) = (poly.m(), poly.q());
    let threshold = tol.convex(q.abs());
    let mut out = Classification {
        n_int: None,
        n_int_multiplicity: None,
        n_ext: None,
        n_real_distinct: 0,
        n_real_multiplicity: 0,
        case: CaseLabel::MNonNegConvex,
        flags: Vec::new(),
        diagnostics: Vec::new(),
        roots: Vec::new(),
        shift: poly.shift(),
        trig: None,
    };
    if q.abs() <= threshold {
        let multiplicity = if m == 0.0 { 4 } else { 2 };
        out.roots = vec![RealRoot { value: 0.0, multiplicity, origin: RootOrigin::ConvexPath }];
        out.n_real_distinct = 1;
        out.n_real_multiplicity = multiplicity as usize;
        out.case = CaseLabel::Degenerate;
        out.diagnostics.push(Diagnostic { quantity: "q".to_string(), value: q, threshold });
    } else if q < 0.0 {
        let t = ((-m + (m * m - 4.0 * q).sqrt()) / 2.0).sqrt();
        out.roots = [-t, t]
            .into_iter()
            .map(|value| RealRoot { value, multiplicity: 1, origin: RootOrigin::ConvexPath })
            .collect();
        out.n_real_distinct = 2;
        out.n_real_multiplicity = 2;
    }
    Ok(out)
}
