//! The substitution `t = u cos(theta)` with `u = sqrt(-m)`.
//!
//! Dividing `P(u cos(theta))` by `u^4 / 8` and subtracting the identity
//! `8c^4 - 8c^2 + 1 = cos(4 theta)` leaves
//!
//! ```text
//! f(theta) = a cos(theta) + cos(4 theta) + b,   a = 8p / u^3,   b = 8q / m^2 - 1
//! ```
//!
//! so that `f(theta) = 8 P(u cos(theta)) / u^4` on `[0, pi]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::poly::DepressedQuartic;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigParams {
    u: f64,
    a: f64,
    b: f64,
    source: DepressedQuartic,
}

impl TrigParams {
    pub fn u(&self) -> f64 {
        self.u
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn source(&self) -> &DepressedQuartic {
        &self.source
    }

    /// `f` without the domain check; callers guarantee `theta` in `[0, pi]`.
    pub(crate) fn f(&self, theta: f64) -> f64 {
        self.a * theta.cos() + (4.0 * theta).cos() + self.b
    }

    pub(crate) fn f_prime(&self, theta: f64) -> f64 {
        -self.a * theta.sin() - 4.0 * (4.0 * theta).sin()
    }

    /// Maps a zero of `f` back to a root of the depressed quartic.
    pub fn root_at(&self, theta: f64) -> f64 {
        self.u * theta.cos()
    }
}

/// Computes `(u, a, b)`; only defined for `m < 0`.
pub fn reduce(poly: &DepressedQuartic) -> Result<TrigParams> {
    let m = poly.m();
    if !(m < 0.0) {
        return Err(Error::NotReducible { m });
    }
    let u = (-m).sqrt();
    let a = 8.0 * poly.p() / (u * u * u);
    let b = 8.0 * poly.q() / (m * m) - 1.0;
    for (what, value) in [("a", a), ("b", b)] {
        if !value.is_finite() {
            return Err(Error::NonFinite { what, value });
        }
    }
    Ok(TrigParams { u, a, b, source: *poly })
}

fn check_domain(theta: f64) -> Result<()> {
    if (0.0..=PI).contains(&theta) {
        Ok(())
    } else {
        Err(Error::OutOfDomain { theta })
    }
}

/// `a cos(theta) + cos(4 theta) + b`.
pub fn eval_f(tp: &TrigParams, theta: f64) -> Result<f64> {
    check_domain(theta)?;
    Ok(tp.f(theta))
}

/// `-a sin(theta) - 4 sin(4 theta)`.
pub fn eval_f_prime(tp: &TrigParams, theta: f64) -> Result<f64> {
    check_domain(theta)?;
    Ok(tp.f_prime(theta))
}

/// `(f(0), f(pi)) = (a + 1 + b, -a + 1 + b)`.
pub fn boundary_values(tp: &TrigParams) -> (f64, f64) {
    (tp.a + 1.0 + tp.b, -tp.a + 1.0 + tp.b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, SQRT_2};

    fn tp(m: f64, p: f64, q: f64) -> TrigParams {
        reduce(&DepressedQuartic::new(m, p, q).unwrap()).unwrap()
    }

    #[test]
    fn reduce_worked_examples() {
        let t = tp(-25.0, -60.0, -36.0);
        assert_eq!(t.u(), 5.0);
        assert_eq!(t.a(), -3.84);
        assert_abs_diff_eq!(t.b(), -1.4608, epsilon = 1e-15);

        let t = tp(-2.0, 0.0, 3.0);
        assert_abs_diff_eq!(t.u(), SQRT_2, epsilon = 1e-15);
        assert_eq!(t.a(), 0.0);
        assert_eq!(t.b(), 5.0);

        let t = tp(-4.0, 1.0, 1.0);
        assert_eq!((t.u(), t.a(), t.b()), (2.0, 1.0, -0.5));
    }

    #[test]
    fn reduce_needs_negative_m() {
        for m in [0.0, 1.0] {
            let p = DepressedQuartic::new(m, 1.0, 1.0).unwrap();
            assert_eq!(reduce(&p), Err(Error::NotReducible { m }));
        }
        // tiny negative m is legal, parameters are just large
        let t = tp(-1e-6, 1.0, 1.0);
        assert!(t.a() > 1e9 && t.b() > 1e12);
    }

    #[test]
    fn f_values() {
        assert_abs_diff_eq!(eval_f(&tp(-25.0, -60.0, -36.0), 0.0).unwrap(), -4.3008, epsilon = 1e-12);
        assert_abs_diff_eq!(eval_f(&tp(-2.0, 0.0, 3.0), FRAC_PI_2).unwrap(), 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(eval_f(&tp(-4.0, 1.0, 1.0), PI).unwrap(), -0.5, epsilon = 1e-14);
    }

    #[test]
    fn f_prime_values() {
        let t = tp(-4.0, 1.0, 1.0);
        assert_eq!(eval_f_prime(&t, 0.0).unwrap(), 0.0);
        assert_abs_diff_eq!(eval_f_prime(&t, PI).unwrap(), 0.0, epsilon = 1e-14);
        assert_abs_diff_eq!(eval_f_prime(&t, FRAC_PI_2).unwrap(), -1.0, epsilon = 1e-14);
    }

    #[test]
    fn domain_errors() {
        let t = tp(-4.0, 1.0, 1.0);
        assert!(matches!(eval_f(&t, -1e-9), Err(Error::OutOfDomain { .. })));
        assert!(matches!(eval_f(&t, PI + 1e-9), Err(Error::OutOfDomain { .. })));
        assert!(matches!(eval_f_prime(&t, f64::NAN), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn boundary() {
        let (f0, fpi) = boundary_values(&tp(-25.0, -60.0, -36.0));
        assert_abs_diff_eq!(f0, -4.3008, epsilon = 1e-12);
        assert_abs_diff_eq!(fpi, 3.3792, epsilon = 1e-12);
        // a = 0, b = 0 needs q = m^2 / 8
        assert_eq!(boundary_values(&tp(-8.0, 0.0, 8.0)), (1.0, 1.0));
        assert_eq!(boundary_values(&tp(-4.0, 1.0, 1.0)), (1.5, -0.5));
    }

    fn params() -> impl Strategy<Value = TrigParams> {
        (-10.0f64..-0.01, -10.0f64..10.0, -10.0f64..10.0).prop_map(|(m, p, q)| tp(m, p, q))
    }

    proptest! {
        #[test]
        fn scaled_evaluation_identity(t in params()) {
            let u4 = t.u().powi(4);
            for k in 0..=200 {
                let theta = PI * k as f64 / 200.0;
                let f = t.f(theta);
                let via_poly = 8.0 * t.source().eval(t.u() * theta.cos()) / u4;
                prop_assert!((f - via_poly).abs() <= 1e-10 * (1.0 + f.abs()));
            }
        }

        #[test]
        fn boundary_matches_eval(t in params()) {
            let (f0, fpi) = boundary_values(&t);
            prop_assert!((f0 - eval_f(&t, 0.0).unwrap()).abs() <= 1e-14);
            prop_assert!((fpi - eval_f(&t, PI).unwrap()).abs() <= 1e-14);
        }

        #[test]
        fn f_stays_within_bound_of_b(t in params(), theta in 0.0..=PI) {
            prop_assert!((t.f(theta) - t.b()).abs() <= t.a().abs() + 1.0 + 1e-12);
        }

        // (a, b) drawn directly: rounding in the difference quotient grows with |b| / h
        #[test]
        fn derivative_matches_central_difference(a in -20.0f64..20.0, b in -20.0f64..20.0) {
            let t = tp(-1.0, a / 8.0, (b + 1.0) / 8.0);
            let h = 1e-6;
            for k in 1..=100 {
                let theta = PI * k as f64 / 101.0;
                let fd = (t.f(theta + h) - t.f(theta - h)) / (2.0 * h);
                prop_assert!((fd - t.f_prime(theta)).abs() <= 1e-6);
            }
        }
    }
}
