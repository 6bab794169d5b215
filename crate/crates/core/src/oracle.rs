//! Independent verification: exact Sturm-sequence counting, an all-roots
//! simultaneous iteration and a discriminant evaluated from the roots.
//!
//! None of this goes through the trigonometric reduction.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bisect::bisect;
use crate::error::{Error, Result};
use crate::poly::DepressedQuartic;

const MAX_ITER: usize = 500;

// Dense polynomials, coefficients from the leading term down.

fn eval_complex(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
}

fn derivative(c: &[f64]) -> Vec<f64> {
    let n = c.len() - 1;
    c[..n].iter().enumerate().map(|(i, k)| k * (n - i) as f64).collect()
}

/// Long division; returns `(quotient, remainder)`.
fn divide(num: &[f64], den: &[f64]) -> (Vec<f64>, Vec<f64>) {
    if num.len() < den.len() {
        return (vec![0.0], num.to_vec());
    }
    let mut rem = num.to_vec();
    let shift = num.len() - den.len();
    let mut quot = vec![0.0; shift + 1];
    for i in 0..=shift {
        let c = rem[i] / den[0];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
        rem[i] = 0.0;
    }
    let rem = rem[shift + 1..].to_vec();
    (quot, if rem.is_empty() { vec![0.0] } else { rem })
}

// Exact counterparts for the Sturm chain. Every finite f64 is a dyadic
// rational, so the chain is computed without any rounding at all.

fn exact(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite coefficient")
}

fn exact_derivative(c: &[BigRational]) -> Vec<BigRational> {
    let n = c.len() - 1;
    c[..n]
        .iter()
        .enumerate()
        .map(|(i, k)| k * BigRational::from_integer(((n - i) as i64).into()))
        .collect()
}

/// Exact long division; the remainder has no leading zeros (empty when zero).
fn exact_divide(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = num.to_vec();
    let mut quot = Vec::new();
    while rem.len() >= den.len() {
        let c = &rem[0] / &den[0];
        for (j, d) in den.iter().enumerate().skip(1) {
            rem[j] = &rem[j] - &c * d;
        }
        rem.remove(0);
        quot.push(c);
    }
    while rem.first().is_some_and(|k| k.is_zero()) {
        rem.remove(0);
    }
    (quot, rem)
}

/// Scales to a leading coefficient of `+-1`; positive scaling keeps every sign.
fn unit_leading(c: Vec<BigRational>) -> Vec<BigRational> {
    let s = c[0].abs();
    c.into_iter().map(|k| k / &s).collect()
}

fn exact_sign(c: &[BigRational], x: &BigRational) -> i8 {
    let v = c.iter().fold(BigRational::zero(), |acc, k| acc * x + k);
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SturmChain {
    /// `P`, `P'`, then negated remainders, each scaled to a unit leading
    /// coefficient; exact rationals throughout.
    pub polys: Vec<Vec<BigRational>>,
    /// The chain ended in a nonconstant gcd: `P` has a multiple root.
    pub multiple_roots: bool,
}

impl SturmChain {
    fn build(p0: Vec<BigRational>) -> Self {
        let p0 = unit_leading(p0);
        let p1 = unit_leading(exact_derivative(&p0));
        let mut polys = vec![p0, p1];
        loop {
            let k = polys.len();
            let (_, rem) = exact_divide(&polys[k - 2], &polys[k - 1]);
            if rem.is_empty() {
                break;
            }
            let next = unit_leading(rem.into_iter().map(|x| -x).collect());
            let constant = next.len() == 1;
            polys.push(next);
            if constant {
                break;
            }
        }
        let multiple_roots = polys.last().is_some_and(|g| g.len() > 1);
        Self { polys, multiple_roots }
    }

    /// Chain for `P`; when `P` has a multiple root the chain is rebuilt from
    /// the square-free part `P / gcd(P, P')`.
    pub fn new(poly: &DepressedQuartic) -> Self {
        let chain = Self::build(poly.coeffs_desc().iter().map(|&k| exact(k)).collect());
        if !chain.multiple_roots {
            return chain;
        }
        let gcd = chain.polys.last().expect("chain is nonempty");
        let (square_free, _) = exact_divide(&chain.polys[0], gcd);
        let mut reduced = Self::build(square_free);
        reduced.multiple_roots = true;
        reduced
    }

    fn variations_at(&self, x: f64) -> usize {
        let point = x.is_finite().then(|| exact(x));
        let signs = self.polys.iter().map(|c| match &point {
            Some(x) => exact_sign(c, x),
            None => {
                let lead = if c[0].is_positive() { 1 } else { -1 };
                let odd = (c.len() - 1) % 2 == 1;
                if x < 0.0 && odd {
                    -lead
                } else {
                    lead
                }
            }
        });
        let mut count = 0;
        let mut prev = 0i8;
        for s in signs.filter(|s| *s != 0) {
            if prev != 0 && prev != s {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`; either end may be infinite.
    pub fn count(&self, lo: f64, hi: f64) -> Result<usize> {
        if !(lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(self.variations_at(lo).saturating_sub(self.variations_at(hi)))
    }
}

/// Number of distinct real roots of `P` in `(lo, hi]`.
pub fn sturm_count(poly: &DepressedQuartic, lo: f64, hi: f64) -> Result<usize> {
    SturmChain::new(poly).count(lo, hi)
}

fn residual_bound(poly: &DepressedQuartic) -> f64 {
    1e-10 * (1.0 + poly.cauchy_root_bound().powi(4))
}

fn max_residual(c: &[f64], roots: &[Complex64]) -> f64 {
    roots.iter().map(|z| eval_complex(c, *z).norm()).fold(0.0, f64::max)
}

/// Averages each non-real root with its nearest conjugate partner.
fn pair_conjugates(roots: &mut [Complex64; 4], radius: f64) {
    let mut used = [false; 4];
    for i in 0..4 {
        if used[i] || roots[i].im.abs() <= radius {
            continue;
        }
        let partner = (0..4)
            .filter(|&j| j != i && !used[j])
            .min_by(|&x, &y| {
                let dx = (roots[x] - roots[i].conj()).norm();
                let dy = (roots[y] - roots[i].conj()).norm();
                dx.total_cmp(&dy)
            });
        if let Some(j) = partner {
            if (roots[j] - roots[i].conj()).norm() <= radius {
                let re = 0.5 * (roots[i].re + roots[j].re);
                let im = 0.5 * (roots[i].im.abs() + roots[j].im.abs());
                roots[i] = Complex64::new(re, im.copysign(roots[i].im));
                roots[j] = roots[i].conj();
                used[i] = true;
                used[j] = true;
            }
        }
    }
}

fn sort_roots(roots: &mut [Complex64; 4]) {
    roots.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
}

fn durand_kerner(c: &[f64], radius: f64) -> [Complex64; 4] {
    let w = Complex64::new(0.4, 0.9);
    let mut z = [Complex64::new(radius, 0.0); 4];
    for k in 1..4 {
        z[k] = z[k - 1] * w;
    }
    for _ in 0..MAX_ITER {
        let mut largest = 0.0f64;
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(f64::EPSILON, f64::EPSILON);
            }
            let step = eval_complex(c, z[i]) / denom;
            z[i] -= step;
            largest = largest.max(step.norm());
        }
        let scale = z.iter().fold(1.0f64, |m, v| m.max(v.norm()));
        if largest <= 1e-15 * scale {
            break;
        }
    }
    // a couple of Newton steps, kept only when they lower the residual
    let dc = derivative(c);
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let d = eval_complex(&dc, *zi);
            if d.norm() == 0.0 {
                break;
            }
            let next = *zi - eval_complex(c, *zi) / d;
            if eval_complex(c, next).norm() < eval_complex(c, *zi).norm() {
                *zi = next;
            } else {
                break;
            }
        }
    }
    z
}

fn quadratic_roots(b: f64, c: f64) -> [Complex64; 2] {
    // t^2 + b t + c
    let disc = b * b - 4.0 * c;
    if disc >= 0.0 {
        let s = disc.sqrt();
        let big = -0.5 * (b + s.copysign(b));
        if big == 0.0 {
            return [Complex64::new(0.0, 0.0); 2];
        }
        [Complex64::new(big, 0.0), Complex64::new(c / big, 0.0)]
    } else {
        let im = 0.5 * (-disc).sqrt();
        [Complex64::new(-0.5 * b, im), Complex64::new(-0.5 * b, -im)]
    }
}

/// Real roots by bisection on the monotone pieces of `P`, then deflation to a
/// quadratic. Used when the simultaneous iteration fails.
pub(crate) fn fallback_roots(poly: &DepressedQuartic, guess: &[Complex64; 4]) -> Result<[Complex64; 4]> {
    let c = poly.coeffs_desc();
    let bound = poly.cauchy_root_bound();
    let m = poly.m();

    // critical points of P: roots of the cubic P', monotone between the roots of P''
    let d_bound = 1.0 + (m / 2.0).abs().max((poly.p() / 4.0).abs());
    let mut cuts = vec![-d_bound];
    if m < 0.0 {
        let s = (-m / 6.0).sqrt();
        cuts.extend([-s, s]);
    }
    cuts.push(d_bound);
    let mut crit: Vec<f64> = Vec::new();
    for w in cuts.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if poly.eval_derivative(lo) * poly.eval_derivative(hi) <= 0.0 {
            let x = bisect(|t| poly.eval_derivative(t), lo, hi, 0.0)?;
            if !crit.contains(&x) {
                crit.push(x);
            }
        }
    }
    let mut pieces = vec![-bound];
    pieces.extend(crit);
    pieces.push(bound);
    let mut real: Vec<f64> = Vec::new();
    for w in pieces.windows(2) {
        let (lo, hi) = (w[0], w[1]);
        if lo < hi && poly.eval(lo) * poly.eval(hi) <= 0.0 {
            let x = bisect(|t| poly.eval(t), lo, hi, 0.0)?;
            if !real.contains(&x) {
                real.push(x);
            }
        }
    }

    let out = match real.len() {
        4 => [real[0], real[1], real[2], real[3]].map(|x| Complex64::new(x, 0.0)),
        2 => {
            // divide by (t - r1)(t - r2)
            let (r1, r2) = (real[0], real[1]);
            let (q, _) = divide(&c, &[1.0, -(r1 + r2), r1 * r2]);
            let [z1, z2] = quadratic_roots(q[1] / q[0], q[2] / q[0]);
            [Complex64::new(r1, 0.0), Complex64::new(r2, 0.0), z1, z2]
        }
        0 => {
            // complex Newton from the best guess, then split off its quadratic factor
            let dc = derivative(&c);
            let mut z = guess
                .iter()
                .copied()
                .filter(|z| z.im != 0.0)
                .min_by(|x, y| eval_complex(&c, *x).norm().total_cmp(&eval_complex(&c, *y).norm()))
                .unwrap_or(Complex64::new(0.0, 1.0));
            for _ in 0..100 {
                let d = eval_complex(&dc, z);
                if d.norm() == 0.0 {
                    break;
                }
                z -= eval_complex(&c, z) / d;
            }
            let factor = [1.0, -2.0 * z.re, z.norm_sqr()];
            let (q, _) = divide(&c, &factor);
            let [z3, z4] = quadratic_roots(q[1] / q[0], q[2] / q[0]);
            [z, z.conj(), z3, z4]
        }
        n => {
            return Err(Error::OracleFailure(format!(
                "fallback found {n} real roots; multiple roots not separable"
            )))
        }
    };
    Ok(out)
}

/// All four complex roots of `P`.
pub fn solve_all_roots(poly: &DepressedQuartic) -> Result<[Complex64; 4]> {
    let c = poly.coeffs_desc();
    let (m, p, q) = (poly.m(), poly.p(), poly.q());
    // Fujiwara-style modulus estimate for the starting circle
    let radius = (m.abs().sqrt()).max(p.abs().cbrt()).max((q.abs() / 2.0).powf(0.25)).max(0.5);
    let bound = residual_bound(poly);

    let mut roots = durand_kerner(&c, radius);
    if !(max_residual(&c, &roots) <= bound) {
        roots = fallback_roots(poly, &roots)?;
        if !(max_residual(&c, &roots) <= bound) {
            return Err(Error::OracleFailure(format!(
                "residual {} above {bound}",
                max_residual(&c, &roots)
            )));
        }
    }
    pair_conjugates(&mut roots, 1e-6 * (1.0 + poly.cauchy_root_bound()));
    sort_roots(&mut roots);
    Ok(roots)
}

/// `prod_{i<j} (r_i - r_j)^2`, real part plus the imaginary residue that
/// round-off leaves behind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discriminant {
    pub value: f64,
    pub imag: f64,
}

impl Discriminant {
    /// Imaginary residue within `1e-6` of the real part.
    pub fn is_consistent(&self) -> bool {
        self.imag.abs() <= 1e-6 * self.value.abs() || self.imag == 0.0
    }
}

pub fn discriminant_from_roots(roots: &[Complex64; 4]) -> Discriminant {
    let mut prod = Complex64::new(1.0, 0.0);
    for i in 0..4 {
        for j in i + 1..4 {
            let d = roots[i] - roots[j];
            prod *= d * d;
        }
    }
    Discriminant { value: prod.re, imag: prod.im }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    /// Sturm count over the whole real line.
    pub n_real_distinct: usize,
    pub multiple_roots: bool,
    pub all_roots: [Complex64; 4],
    pub discriminant: Discriminant,
    /// Smallest pairwise distance between the four roots.
    pub degeneracy_margin: f64,
    /// Radius used to call a root real and to merge equal real roots.
    pub cluster_radius: f64,
}

impl OracleReport {
    /// Roots whose imaginary part is within the cluster radius.
    pub fn real_entries(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self
            .all_roots
            .iter()
            .filter(|z| z.im.abs() <= self.cluster_radius)
            .map(|z| z.re)
            .collect();
        v.sort_by(f64::total_cmp);
        v
    }

    /// Real entries counted with multiplicity (`4 - 2 * conjugate pairs`).
    pub fn n_real_multiplicity(&self) -> usize {
        self.real_entries().len()
    }

    /// Real entries merged within the cluster radius.
    pub fn n_real_clustered(&self) -> usize {
        let v = self.real_entries();
        let mut count = 0;
        let mut last: Option<f64> = None;
        for x in v {
            if last.is_none_or(|l| x - l > self.cluster_radius) {
                count += 1;
            }
            last = Some(x);
        }
        count
    }
}

pub fn oracle_report(poly: &DepressedQuartic) -> Result<OracleReport> {
    let chain = SturmChain::new(poly);
    let n_real_distinct = chain.count(f64::NEG_INFINITY, f64::INFINITY)?;
    let all_roots = solve_all_roots(poly)?;
    let mut margin = f64::INFINITY;
    for i in 0..4 {
        for j in i + 1..4 {
            margin = margin.min((all_roots[i] - all_roots[j]).norm());
        }
    }
    Ok(OracleReport {
        n_real_distinct,
        multiple_roots: chain.multiple_roots,
        all_roots,
        discriminant: discriminant_from_roots(&all_roots),
        degeneracy_margin: margin,
        cluster_radius: 1e-6 * (1.0 + poly.cauchy_root_bound()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dq(m: f64, p: f64, q: f64) -> DepressedQuartic {
        DepressedQuartic::new(m, p, q).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// Every expected root is matched by a distinct computed root.
    fn assert_root_set(got: &[Complex64; 4], want: &[Complex64], eps: f64) {
        let mut used = [false; 4];
        for w in want {
            let idx = (0..4)
                .filter(|i| !used[*i])
                .min_by(|x, y| (got[*x] - w).norm().total_cmp(&(got[*y] - w).norm()))
                .unwrap();
            assert!((got[idx] - w).norm() <= eps, "{got:?} missing {w}");
            used[idx] = true;
        }
    }

    #[test]
    fn sturm_examples() {
        let ex1 = dq(-25.0, -60.0, -36.0);
        assert_eq!(sturm_count(&ex1, f64::NEG_INFINITY, f64::INFINITY).unwrap(), 4);
        assert_eq!(sturm_count(&ex1, 5.0, f64::INFINITY).unwrap(), 1);
        assert_eq!(sturm_count(&ex1, -2.5, 0.0).unwrap(), 2);
        assert_eq!(sturm_count(&dq(-2.0, 0.0, 3.0), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 0);
        assert_eq!(sturm_count(&dq(-4.0, 1.0, 1.0), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 4);
        assert_eq!(sturm_count(&dq(-1.0, 0.125, -0.0625), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 2);
        assert!(sturm_count(&ex1, 1.0, 1.0).is_err());
    }

    #[test]
    fn sturm_chain_shape() {
        let chain = SturmChain::new(&dq(-25.0, -60.0, -36.0));
        assert!(!chain.multiple_roots);
        assert_eq!(chain.polys[0].len(), 5);
        assert_eq!(chain.polys[1].len(), 4);
        for w in chain.polys.windows(2) {
            assert!(w[1].len() < w[0].len());
        }
    }

    #[test]
    fn sturm_multiple_roots() {
        // t^2 (t^2 + 2)
        let chain = SturmChain::new(&dq(2.0, 0.0, 0.0));
        assert!(chain.multiple_roots);
        assert_eq!(chain.count(f64::NEG_INFINITY, f64::INFINITY).unwrap(), 1);
        // (t^2 - 1)^2
        assert_eq!(sturm_count(&dq(-2.0, 0.0, 1.0), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 2);
        // t^2 (t^2 - 2)
        assert_eq!(sturm_count(&dq(-2.0, 0.0, 0.0), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 3);
        // t^4
        assert_eq!(sturm_count(&dq(0.0, 0.0, 0.0), f64::NEG_INFINITY, f64::INFINITY).unwrap(), 1);
    }

    #[test]
    fn all_roots_examples() {
        let r = solve_all_roots(&dq(-4.0, 1.0, 1.0)).unwrap();
        let want = [-2.061498850684643, -0.3963385310144532, 0.6938224565045125, 1.764014925194582];
        assert_root_set(&r, &want.map(|x| c(x, 0.0)), 1e-12);

        let r = solve_all_roots(&dq(-1.0, 0.125, -0.0625)).unwrap();
        let (re, im) = (0.05647742356283328, 0.2377144108486057);
        assert_root_set(
            &r,
            &[c(-1.0812353180825622, 0.0), c(0.968280470956896, 0.0), c(re, im), c(re, -im)],
            1e-12,
        );

        let r = solve_all_roots(&dq(0.0, 0.0, -1.0)).unwrap();
        assert_root_set(&r, &[c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)], 1e-12);

        let r = solve_all_roots(&dq(-2.0, 0.0, 3.0)).unwrap();
        let s1 = c(1.0, 2f64.sqrt()).sqrt();
        let s2 = c(1.0, -(2f64.sqrt())).sqrt();
        assert_root_set(&r, &[s1, -s1, s2, -s2], 1e-12);
    }

    #[test]
    fn fallback_matches_iteration() {
        for (m, p, q) in [(-25.0, -60.0, -36.0), (-4.0, 1.0, 1.0), (-2.0, 0.0, 3.0), (1.0, 0.5, 2.0)] {
            let poly = dq(m, p, q);
            let iter = solve_all_roots(&poly).unwrap();
            let fb = fallback_roots(&poly, &iter).unwrap();
            assert_root_set(&fb, &iter, 1e-8);
        }
    }

    #[test]
    fn discriminant_of_unit_roots() {
        // direct six-pair product for {1, -1, i, -i}: 4 * (-2i)(2i) * (2i)(-2i) * (-4)
        let roots = [c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)];
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let oracle: Complex64 = pairs.iter().map(|&(i, j)| (roots[i] - roots[j]).powi(2)).product();
        assert_eq!(oracle, c(-256.0, 0.0));
        let d = discriminant_from_roots(&roots);
        assert_eq!(d.value, -256.0);
        assert!(d.is_consistent());
    }

    #[test]
    fn discriminant_special_cases() {
        assert_eq!(discriminant_from_roots(&[c(0.0, 0.0); 4]).value, 0.0);
        // (1)(2)(-7)(1)(-8)(-9) squared pairwise
        let d = discriminant_from_roots(&[-1.0, -2.0, -3.0, 6.0].map(|x| c(x, 0.0)));
        assert_eq!(d.value, 1_016_064.0);
    }

    #[test]
    fn discriminant_sign_law_on_examples() {
        let d4 = oracle_report(&dq(-25.0, -60.0, -36.0)).unwrap().discriminant.value;
        let d0 = oracle_report(&dq(-2.0, 0.0, 3.0)).unwrap().discriminant.value;
        let d2 = oracle_report(&dq(-1.0, 0.125, -0.0625)).unwrap().discriminant.value;
        assert!(d4 > 0.0 && d0 > 0.0 && d2 < 0.0, "{d4} {d0} {d2}");
    }

    #[test]
    fn report_counts() {
        let r = oracle_report(&dq(-4.0, 1.0, 1.0)).unwrap();
        assert_eq!((r.n_real_distinct, r.n_real_clustered(), r.n_real_multiplicity()), (4, 4, 4));
        let r = oracle_report(&dq(-1.0, 0.125, -0.0625)).unwrap();
        assert_eq!((r.n_real_distinct, r.n_real_clustered(), r.n_real_multiplicity()), (2, 2, 2));
        let r = oracle_report(&dq(-2.0, 0.0, 1.0)).unwrap();
        assert!(r.multiple_roots);
        assert_eq!((r.n_real_distinct, r.n_real_clustered(), r.n_real_multiplicity()), (2, 2, 4));
    }

    proptest! {
        #[test]
        fn roots_are_consistent(m in -10.0f64..10.0, p in -10.0f64..10.0, q in -10.0f64..10.0) {
            let poly = dq(m, p, q);
            let r = oracle_report(&poly).unwrap();
            let sum: Complex64 = r.all_roots.iter().sum();
            let max = r.all_roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
            prop_assert!(sum.norm() <= 1e-8 * (1.0 + max));
            for z in &r.all_roots {
                if z.im.abs() > r.cluster_radius {
                    let partner = r.all_roots.iter().map(|w| (w - z.conj()).norm()).fold(f64::INFINITY, f64::min);
                    prop_assert!(partner <= 1e-8 * (1.0 + z.norm()));
                }
            }
            if r.degeneracy_margin > 1e-4 {
                prop_assert_eq!(r.n_real_distinct, r.n_real_clustered());
                let n = r.n_real_distinct;
                let d = r.discriminant.value;
                match n {
                    4 | 0 => prop_assert!(d > 0.0),
                    2 => prop_assert!(d < 0.0),
                    _ => prop_assert!(false, "odd count {}", n),
                }
            }
        }
    }
}
