//! Monic quartics in general and depressed form.
//!
//! A general quartic `z^4 + a3 z^3 + a2 z^2 + a1 z + a0` is shifted to the
//! depressed form `t^4 + m t^2 + p t + q` with `z = t - a3/4`. The shift is
//! kept on the depressed value so roots can be mapped back.

use crate::error::{Error, Result};

fn finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { what, value })
    }
}

/// Monic quartic `z^4 + a3 z^3 + a2 z^2 + a1 z + a0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralQuartic {
    a3: f64,
    a2: f64,
    a1: f64,
    a0: f64,
}

impl GeneralQuartic {
    pub fn new(a3: f64, a2: f64, a1: f64, a0: f64) -> Result<Self> {
        Ok(Self {
            a3: finite("a3", a3)?,
            a2: finite("a2", a2)?,
            a1: finite("a1", a1)?,
            a0: finite("a0", a0)?,
        })
    }

    /// Divides `a4 z^4 + ... + a0` through by `a4`.
    pub fn from_leading(a4: f64, a3: f64, a2: f64, a1: f64, a0: f64) -> Result<Self> {
        let a4 = finite("a4", a4)?;
        if a4 == 0.0 {
            return Err(Error::ZeroLeadingCoefficient);
        }
        Self::new(a3 / a4, a2 / a4, a1 / a4, a0 / a4)
    }

    pub fn coeffs(&self) -> [f64; 4] {
        [self.a3, self.a2, self.a1, self.a0]
    }

    pub fn eval(&self, z: f64) -> f64 {
        (((z + self.a3) * z + self.a2) * z + self.a1) * z + self.a0
    }
}

/// Depressed quartic `P(t) = t^4 + m t^2 + p t + q`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DepressedQuartic {
    m: f64,
    p: f64,
    q: f64,
    shift: f64,
}

impl DepressedQuartic {
    /// A quartic given directly in depressed form (shift 0).
    pub fn new(m: f64, p: f64, q: f64) -> Result<Self> {
        Ok(Self {
            m: finite("m", m)?,
            p: finite("p", p)?,
            q: finite("q", q)?,
            shift: 0.0,
        })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    /// `a3/4` of the general quartic this came from; original roots are `z = t - shift`.
    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn to_original(&self, t: f64) -> f64 {
        t - self.shift
    }

    /// Horner evaluation of `P(t)`.
    pub fn eval(&self, t: f64) -> f64 {
        ((t * t + self.m) * t + self.p) * t + self.q
    }

    /// `P'(t) = 4t^3 + 2mt + p`.
    pub fn eval_derivative(&self, t: f64) -> f64 {
        (4.0 * t * t + 2.0 * self.m) * t + self.p
    }

    /// Coefficients from the leading term down: `[1, 0, m, p, q]`.
    pub fn coeffs_desc(&self) -> [f64; 5] {
        [1.0, 0.0, self.m, self.p, self.q]
    }

    /// `1 + max(|m|, |p|, |q|)`; every real root lies in `[-B, B]`.
    pub fn cauchy_root_bound(&self) -> f64 {
        1.0 + self.m.abs().max(self.p.abs()).max(self.q.abs())
    }
}

/// Removes the cubic term with the closed-form coefficient map.
pub fn depress(g: &GeneralQuartic) -> Result<DepressedQuartic> {
    let [a3, a2, a1, a0] = g.coeffs();
    let s = a3 * a3;
    let m = a2 - 3.0 * s / 8.0;
    let p = a1 - a2 * a3 / 2.0 + s * a3 / 8.0;
    let q = a0 - a1 * a3 / 4.0 + a2 * s / 16.0 - 3.0 * s * s / 256.0;
    let mut out = DepressedQuartic::new(m, p, q)?;
    out.shift = a3 / 4.0;
    Ok(out)
}

pub fn eval_quartic(poly: &DepressedQuartic, t: f64) -> f64 {
    poly.eval(t)
}

pub fn cauchy_root_bound(poly: &DepressedQuartic) -> f64 {
    poly.cauchy_root_bound()
}
