//! High-precision evaluation of `ϖ`, the lemniscatic sine `φ` and its
//! derivative on the real line and the complex plane.
//!
//! `ϖ` comes from two independent routes: tanh-sinh quadrature of
//! `2∫₀¹ dt/√(1-t⁴)` and `π / agm(1, √2)`. On `[0, ϖ/4]`, `φ` inverts the
//! power series of the incomplete integral by safeguarded Newton steps; the
//! rest of the real line follows from reflection about `ϖ/2`, oddness and
//! `2ϖ`-periodicity. Complex values use the rectangular formula
//! `φ(x+iy) = (φ(x)φ′(y) + iφ(y)φ′(x)) / (1 - φ(x)²φ(y)²)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::cmfield::MultMap;
use crate::gaussint::GaussInt;
use crate::real::{Complex, Real};
use crate::zipoly::ZiPoly;

/// Extra binary digits carried beyond the requested decimal precision.
pub const GUARD_BITS: u32 = 64;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumError {
    #[error("quadrature and AGM values of varpi disagree by {0:e}")]
    PrecisionFailure(f64),
    #[error("argument is at or too close to a pole")]
    PoleError,
}

/// Integrate over `[0, 1]` by tanh-sinh quadrature. The integrand receives
/// `t` and `1 - t`, both accurate to `bits` fractional bits relative to
/// their own size down to about `2^-bits`.
pub fn tanh_sinh_unit<F>(f: F, bits: u32) -> Real
where
    F: Fn(&Real, &Real) -> Real,
{
    let w = 2 * bits + 32;
    let pi = Real::pi(w);
    let half_pi = pi.ldexp(-1);
    let negligible = Real::one(w).ldexp(-(bits as i32) - 16);
    let term = |s: &Real| -> Real {
        let es = s.exp();
        let ems = es.recip();
        let sinh = (&es - &ems).ldexp(-1);
        let cosh = (&es + &ems).ldexp(-1);
        let u = &half_pi * &sinh;
        let eu = u.abs().exp();
        let emu = eu.recip();
        let (big, small) = (eu, emu);
        let sum = &big + &small;
        // t = e^u / S and 1 - t = e^-u / S, swapped for negative u
        let (t, tc) = if u.is_negative() {
            (&small / &sum, &big / &sum)
        } else {
            (&big / &sum, &small / &sum)
        };
        if t.is_zero() || tc.is_zero() {
            // past the last representable node
            return Real::zero(w);
        }
        let weight = &(&pi * &cosh) / &sum.square();
        &weight * &f(&t, &tc)
    };
    let sum_side = |h: &Real, start: i64, step: i64| -> Real {
        let mut acc = Real::zero(w);
        for sign in [1i64, -1] {
            let mut k = start;
            loop {
                let s = h.mul_int(sign * k);
                let v = term(&s);
                let small = v.abs() < negligible;
                acc = &acc + &v;
                if small && k > 2 {
                    break;
                }
                k += step;
            }
        }
        acc
    };
    let mut h = Real::one(w).ldexp(-1);
    // level 0: all nodes k*h
    let mut total = &term(&Real::zero(w)) + &sum_side(&h, 1, 1);
    let mut estimate = &total * &h;
    let tol = Real::one(w).ldexp(-(bits as i32) - 8);
    for _ in 0..16 {
        h = h.ldexp(-1);
        total = &total + &sum_side(&h, 1, 2);
        let next = &total * &h;
        let diff = (&next - &estimate).abs();
        estimate = next;
        if diff < tol {
            break;
        }
    }
    estimate.with_bits(bits)
}

/// `ϖ = 2∫₀¹ dt/√((1-t)(1+t)(1+t²))` by quadrature.
pub fn varpi_quadrature(bits: u32) -> Real {
    let half = tanh_sinh_unit(
        |t, tc| {
            let one = Real::one(t.bits());
            (&(tc * &(&one + t)) * &(&one + &t.square())).sqrt().recip()
        },
        bits,
    );
    half.ldexp(1)
}

/// `ϖ = π / agm(1, √2)`.
pub fn varpi_agm(bits: u32) -> Real {
    let w = bits + 16;
    let g = Real::agm(&Real::one(w), &Real::from_i64(2, w).sqrt());
    (&Real::pi(w) / &g).with_bits(bits)
}

/// Binary precision used for `digits` decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    (digits as f64 * core::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}

/// Evaluator for `ϖ`, `φ` and `φ′` at a fixed working precision.
#[derive(Debug, Clone)]
pub struct PhiEvaluator {
    digits: u32,
    bits: u32,
    tolerance: f64,
    varpi: Real,
    varpi_quadrature: Real,
    /// `c_k / (4k+1)` with `c_k = binom(2k, k) / 4^k`
    series: Vec<Real>,
}

impl PhiEvaluator {
    /// Default working precision in decimal digits.
    pub const DEFAULT_DIGITS: u32 = 40;

    /// Build at `digits` decimal digits. Fails if the two routes to `ϖ`
    /// disagree beyond `10^-(digits-5)`.
    pub fn new(digits: u32) -> Result<Self, NumError> {
        let bits = bits_for_digits(digits);
        let quad = varpi_quadrature(bits);
        let mut ev = PhiEvaluator::at_bits(digits, bits);
        let diff = (&quad - &ev.varpi).abs().to_f64();
        if diff > libm::pow(10.0, -(digits as f64 - 5.0)) {
            return Err(NumError::PrecisionFailure(diff));
        }
        ev.varpi_quadrature = quad;
        Ok(ev)
    }

    /// Evaluator at an explicit binary precision, with `ϖ` from the AGM only.
    fn at_bits(digits: u32, bits: u32) -> Self {
        let varpi = varpi_agm(bits);
        let ib = bits + 16;
        // r <= 0.7 inside the Newton bracket, so r^4 < 2^-2
        let terms = (ib / 2 + 4) as usize;
        let mut series = Vec::with_capacity(terms);
        let mut c = Real::one(ib);
        for k in 0..terms as i64 {
            if k > 0 {
                c = c.mul_int(2 * k - 1).div_int(2 * k);
            }
            series.push(c.div_int(4 * k + 1));
        }
        PhiEvaluator {
            digits,
            bits,
            tolerance: libm::pow(10.0, -(digits as f64 - 10.0)),
            varpi_quadrature: varpi.clone(),
            varpi,
            series,
        }
    }

    /// Same evaluator with `extra` more bits of working precision.
    pub fn raised(&self, extra: u32) -> PhiEvaluator {
        let mut ev = PhiEvaluator::at_bits(self.digits, self.bits + extra);
        ev.tolerance = self.tolerance;
        ev
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `10^-(digits-10)`.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn varpi(&self) -> &Real {
        &self.varpi
    }

    /// `(quadrature, AGM)` values of `ϖ`.
    pub fn varpi_methods(&self) -> (&Real, &Real) {
        (&self.varpi_quadrature, &self.varpi)
    }

    pub fn real(&self, v: f64) -> Real {
        Real::from_f64(v, self.bits)
    }

    pub fn complex(&self, re: f64, im: f64) -> Complex {
        Complex::from_f64(re, im, self.bits)
    }

    /// Incomplete integral `∫₀^r dt/√(1-t⁴)` from its series, at the
    /// internal precision.
    fn arc(&self, r: &Real) -> Real {
        let u = r.square().square();
        let mut acc = Real::zero(r.bits());
        for c in self.series.iter().rev() {
            acc = &(&acc * &u) + c;
        }
        &acc * r
    }

    /// `φ` on `[0, ϖ/4]` by Newton iteration on the series, kept inside the
    /// bracket `[0, 0.7]` by bisection.
    fn phi_small(&self, s: &Real) -> Real {
        let ib = self.bits + 16;
        let s = s.with_bits(ib);
        let one = Real::one(ib);
        let mut lo = Real::zero(ib);
        let mut hi = Real::from_ratio(7, 10, ib);
        let mut r = Real::from_f64(phi_small_f64(s.to_f64()), ib);
        let stop = Real::one(ib).ldexp(-(ib as i32) + 8);
        for _ in 0..4 * ib {
            let f = &self.arc(&r) - &s;
            if f.is_negative() {
                lo = r.clone();
            } else {
                hi = r.clone();
            }
            let slope = (&one - &r.square().square()).sqrt();
            let next = &r - &(&f * &slope);
            let step = (&next - &r).abs();
            if step < stop {
                r = next;
                break;
            }
            r = if next < lo || next > hi {
                (&lo + &hi).ldexp(-1)
            } else {
                next
            };
        }
        r.with_bits(self.bits)
    }

    /// `(φ(s), φ′(s))` for real `s`.
    pub fn phi_pair_real(&self, s: &Real) -> (Real, Real) {
        let s = s.with_bits(self.bits);
        let two_varpi = self.varpi.ldexp(1);
        let k = libm::round((&s / &two_varpi).to_f64()) as i64;
        let mut t = &s - &two_varpi.mul_int(k);
        let mut sign = 1i64;
        if t.is_negative() {
            t = -t;
            sign = -1;
        }
        let mut dsign = 1i64;
        if t > self.varpi.ldexp(-1) {
            t = &self.varpi - &t;
            dsign = -1;
        }
        let (v, d) = if t <= self.varpi.ldexp(-2) {
            let r = self.phi_small(&t);
            let one = Real::one(self.bits);
            let d = (&one - &r.square().square()).sqrt();
            (r, d)
        } else {
            // φ(ϖ/2 - t) = φ′(t)/(1+φ(t)²), φ′(ϖ/2 - t) = 2φ(t)/(1+φ(t)²)
            let u = &self.varpi.ldexp(-1) - &t;
            let a = self.phi_small(&u);
            let one = Real::one(self.bits);
            let b = (&one - &a.square().square()).sqrt();
            let den = &one + &a.square();
            (&b / &den, &a.ldexp(1) / &den)
        };
        (v.mul_int(sign), d.mul_int(dsign))
    }

    pub fn phi_real(&self, s: &Real) -> Real {
        self.phi_pair_real(s).0
    }

    pub fn phiprime_real(&self, s: &Real) -> Real {
        self.phi_pair_real(s).1
    }

    /// `(φ(z), φ′(z))` for complex `z`.
    pub fn phi_pair_complex(&self, z: &Complex) -> Result<(Complex, Complex), NumError> {
        let z = z.with_bits(self.bits);
        let (a, ap) = self.phi_pair_real(&z.re);
        let (b, bp) = self.phi_pair_real(&z.im);
        let one = Real::one(self.bits);
        let a2 = a.square();
        let b2 = b.square();
        let d = &one - &(&a2 * &b2);
        let guard = libm::pow(10.0, -(self.digits as f64) / 2.0);
        if d.abs().to_f64() < guard {
            return Err(NumError::PoleError);
        }
        let n = Complex::new(&a * &bp, &b * &ap);
        let value = Complex::new(&n.re / &d, &n.im / &d);
        // ∂/∂x of numerator and denominator, with φ″ = -2φ³
        let nx = Complex::new(&ap * &bp, (&(&a2 * &a) * &b).mul_int(-2));
        let dx = (&(&a * &ap) * &b2).mul_int(-2);
        let d2 = d.square();
        let top = &nx.scale(&d) - &n.scale(&dx);
        let deriv = Complex::new(&top.re / &d2, &top.im / &d2);
        Ok((value, deriv))
    }

    pub fn phi_complex(&self, z: &Complex) -> Result<Complex, NumError> {
        Ok(self.phi_pair_complex(z)?.0)
    }

    pub fn phiprime_complex(&self, z: &Complex) -> Result<Complex, NumError> {
        Ok(self.phi_pair_complex(z)?.1)
    }

    /// `δ_β = (1+i)ϖ/β`.
    pub fn delta(&self, beta: &GaussInt) -> Complex {
        let w = Complex::new(self.varpi.clone(), self.varpi.clone());
        &w / &Complex::from_gauss(beta, self.bits)
    }

    /// `max |Λ_β(φ(αδ_β))|` over `α ∈ (O/βO)^×`. Roots are first located at
    /// the working precision, then recomputed with enough extra bits to
    /// absorb the size of the Horner sum.
    pub fn verify_lemnatomic_roots(&self, beta: &GaussInt, lam: &ZiPoly) -> Result<f64, NumError> {
        let alphas = beta.unit_residues();
        let mut scale = 1.0f64;
        for alpha in &alphas {
            let z = self.delta(beta).mul_gauss(alpha);
            let r = self.phi_complex(&z)?.abs_f64().max(1.0);
            let s: f64 = lam
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| gauss_abs(c) * libm::pow(r, k as f64))
                .sum();
            scale = scale.max(s);
        }
        let extra = libm::log2(scale).max(0.0) as u32 + 16;
        let hi = self.raised(extra);
        let mut worst = 0.0f64;
        for alpha in &alphas {
            let z = hi.delta(beta).mul_gauss(alpha);
            let root = hi.phi_complex(&z)?;
            let (v, _) = lam.eval_complex(&root);
            worst = worst.max(v.abs_f64());
        }
        Ok(worst)
    }

    /// Maximum residual of each function identity over the samples.
    ///
    /// `reals` and `complexes` are sample points; consecutive pairs of each
    /// feed the addition law. `betas` are odd nonunits for the identity
    /// `φ(2ϖ/β) = (1-i)φ(δ_β)φ′(δ_β)/(1-φ(δ_β)⁴)`, which is the addition law
    /// applied to `δ_β + (-i)δ_β`. Samples landing within
    /// the pole guard are skipped and counted.
    pub fn verify_identities(&self, reals: &[f64], complexes: &[(f64, f64)], betas: &[GaussInt]) -> IdentityReport {
        let mut rep = IdentityReport::default();
        let points: Vec<Complex> = reals
            .iter()
            .map(|&r| self.complex(r, 0.0))
            .chain(complexes.iter().map(|&(re, im)| self.complex(re, im)))
            .collect();
        let one = Complex::one(self.bits);
        let half_varpi = Complex::from_real(self.varpi.ldexp(-1));
        let mut add = Residual::new("addition law");
        let mut dup = Residual::new("duplication law");
        let mut de = Residual::new("differential equation");
        let mut shift = Residual::new("half-period shift");
        let mut beta_id = Residual::new("phi(2 varpi/beta)");
        let mut skipped = 0usize;
        for (k, z) in points.iter().enumerate() {
            let Ok((p, dp)) = self.phi_pair_complex(z) else {
                skipped += 1;
                continue;
            };
            let p2 = p.square();
            let p4 = p2.square();
            // φ′² = 1 - φ⁴
            de.record((&dp.square() - &(&one - &p4)).abs_f64());
            // φ(2z) = 2φφ′/(1+φ⁴)
            let z2 = z + z;
            if let Ok(lhs) = self.phi_complex(&z2) {
                let rhs = &(&p * &dp).scale(&Real::from_i64(2, self.bits)) / &(&one + &p4);
                dup.record((&lhs - &rhs).abs_f64());
            } else {
                skipped += 1;
            }
            // φ′(z - ϖ/2) = 2φ/(1+φ²)
            if let Ok(lhs) = self.phiprime_complex(&(z - &half_varpi)) {
                let rhs = &p.scale(&Real::from_i64(2, self.bits)) / &(&one + &p2);
                shift.record((&lhs - &rhs).abs_f64());
            } else {
                skipped += 1;
            }
            // addition with the next sample of the same kind
            let next = if k + 1 < reals.len() || (k >= reals.len() && k + 1 < points.len()) {
                Some(&points[k + 1])
            } else {
                None
            };
            if let Some(w) = next {
                let sum = z + w;
                match (self.phi_pair_complex(w), self.phi_complex(&sum)) {
                    (Ok((q, dq)), Ok(lhs)) => {
                        let num = &(&p * &dq) + &(&q * &dp);
                        let den = &one + &(&p2 * &q.square());
                        add.record((&lhs - &(&num / &den)).abs_f64());
                    }
                    _ => skipped += 1,
                }
            }
        }
        let one_minus_i = Complex::from_gauss(&GaussInt::new(1, -1), self.bits);
        for beta in betas {
            let delta = self.delta(beta);
            let arg = &Complex::from_real(self.varpi.ldexp(1)) / &Complex::from_gauss(beta, self.bits);
            match (self.phi_pair_complex(&delta), self.phi_complex(&arg)) {
                (Ok((p, dp)), Ok(lhs)) => {
                    let rhs = &(&(&one_minus_i * &p) * &dp) / &(&one - &p.square().square());
                    beta_id.record((&lhs - &rhs).abs_f64());
                }
                _ => skipped += 1,
            }
        }
        rep.residuals = alloc::vec![add, dup, de, shift, beta_id];
        rep.skipped = skipped;
        rep
    }

    /// `max |φ(βz) - M_β(φ(z))|` over sample points `z`. Samples where
    /// `φ(βz)` is within the pole guard or exceeds 10 in modulus, or where
    /// `Q(φ(z)⁴)` nearly vanishes, are skipped.
    pub fn verify_multmap_numeric(&self, m: &MultMap, samples: &[(f64, f64)]) -> Result<MultmapResidual, NumError> {
        let mut worst = 0.0f64;
        let mut used = 0usize;
        for &(re, im) in samples {
            let z = self.complex(re, im);
            let Ok(lhs) = self.phi_complex(&z.mul_gauss(&m.beta)) else {
                continue;
            };
            if lhs.abs_f64() > 10.0 {
                continue;
            }
            let x = self.phi_complex(&z)?;
            let x4 = x.square().square();
            let (pv, _) = m.p.eval_complex(&x4);
            let (qv, _) = m.q.eval_complex(&x4);
            if qv.abs_f64() < 1e-6 {
                continue;
            }
            let unit = Complex::from_gauss(&GaussInt::unit(m.epsilon as i64), self.bits);
            let rhs = &(&(&unit * &x) * &pv) / &qv;
            worst = worst.max((&lhs - &rhs).abs_f64());
            used += 1;
        }
        Ok(MultmapResidual { max: worst, samples: used })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultmapResidual {
    pub max: f64,
    pub samples: usize,
}

/// Maximum residual and sample count for one identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub name: String,
    pub max: f64,
    pub count: usize,
}

impl Residual {
    fn new(name: &str) -> Self {
        Residual {
            name: String::from(name),
            max: 0.0,
            count: 0,
        }
    }

    fn record(&mut self, v: f64) {
        self.max = self.max.max(v);
        self.count += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct IdentityReport {
    pub residuals: Vec<Residual>,
    pub skipped: usize,
}

impl IdentityReport {
    pub fn get(&self, name: &str) -> Option<&Residual> {
        self.residuals.iter().find(|r| r.name == name)
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        for r in &self.residuals {
            s += &format!("{}: max {:.3e} over {}\n", r.name, r.max, r.count);
        }
        s
    }
}

fn gauss_abs(c: &GaussInt) -> f64 {
    libm::hypot(c.re.to_f64().unwrap_or(f64::MAX), c.im.to_f64().unwrap_or(f64::MAX))
}

/// Double-precision `φ` on `[0, ϖ/4]`, the starting guess for Newton.
fn phi_small_f64(s: f64) -> f64 {
    let arc = |r: f64| {
        let u = r * r * r * r;
        let (mut c, mut acc, mut pw) = (1.0, 0.0, 1.0);
        for k in 0..40 {
            if k > 0 {
                c *= (2 * k - 1) as f64 / (2 * k) as f64;
                pw *= u;
            }
            acc += c * pw / (4 * k + 1) as f64;
        }
        acc * r
    };
    let mut r = s;
    for _ in 0..30 {
        let next = r - (arc(r) - s) * libm::sqrt(1.0 - r * r * r * r);
        if libm::fabs(next - r) < 1e-17 {
            return next;
        }
        r = next.clamp(0.0, 0.7);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    /// ϖ to 70 digits from π/agm(1, √2), computed independently.
    const VARPI_70: &str = "2.6220575542921198104648395898911194136827549514316231628168217038007";

    #[test]
    fn varpi_two_routes() {
        let bits = bits_for_digits(60);
        let q = varpi_quadrature(bits);
        let a = varpi_agm(bits);
        assert_eq!(&a.to_decimal(58), &VARPI_70[..60]);
        assert!((&q - &a).abs().to_f64() < 1e-55);
    }

    #[test]
    fn evaluator_tolerance() {
        let ev = PhiEvaluator::new(40).unwrap();
        assert!(ev.tolerance() > 9e-31 && ev.tolerance() < 1.1e-30);
        let (q, a) = ev.varpi_methods();
        assert!((q - a).abs().to_f64() < 1e-30);
    }

    #[test]
    fn special_values() {
        let ev = PhiEvaluator::new(40).unwrap();
        let tol = ev.tolerance();
        let zero = ev.real(0.0);
        let (v, d) = ev.phi_pair_real(&zero);
        assert!(v.abs().to_f64() < tol);
        assert!((d.to_f64() - 1.0).abs() < tol);
        let half = ev.varpi().ldexp(-1);
        let (v, d) = ev.phi_pair_real(&half);
        assert!((&v - &Real::one(ev.bits())).abs().to_f64() < tol);
        assert!(d.abs().to_f64() < tol);
        let quarter = ev.varpi().ldexp(-2);
        let expect = (libm::sqrt(2.0) - 1.0).sqrt();
        assert!((ev.phi_real(&quarter).to_f64() - expect).abs() < 1e-15);
    }

    #[test]
    fn inversion_matches_quadrature_of_the_arc() {
        // s = ∫₀^r dt/√(1-t⁴) = r ∫₀¹ du/√(1-r⁴u⁴), by quadrature
        let ev = PhiEvaluator::new(30).unwrap();
        for &r0 in &[0.1f64, 0.45, 0.8, 0.97] {
            let r = Real::from_f64(r0, ev.bits());
            let r4 = r.square().square();
            let integral = tanh_sinh_unit(
                |u, _| {
                    let one = Real::one(u.bits());
                    let r4w = r4.with_bits(u.bits());
                    (&one - &(&r4w * &u.square().square())).sqrt().recip()
                },
                ev.bits(),
            );
            let s = &integral * &r;
            assert!((&ev.phi_real(&s) - &r).abs().to_f64() < 1e-25, "r = {r0}");
        }
    }

    #[test]
    fn root_of_lambda_five() {
        let ev = PhiEvaluator::new(40).unwrap();
        let s = ev.varpi().ldexp(1).div_int(5);
        let x = ev.phi_real(&s);
        let lam5: ZiPoly = "x^16+52x^12-26x^8-12x^4+1".parse().unwrap();
        let v = crate::zipoly::eval_real(&lam5, &x);
        assert!(v.abs().to_f64() < 1e-25);
        assert!(x.to_f64() > 0.0);
    }

    #[test]
    fn complex_rotation_and_pole() {
        let ev = PhiEvaluator::new(40).unwrap();
        let s = ev.real(0.8);
        let (v, d) = ev.phi_pair_real(&s);
        let (zv, zd) = ev.phi_pair_complex(&Complex::new(Real::zero(ev.bits()), s.clone())).unwrap();
        assert!(zv.re.abs().to_f64() < 1e-35 && (&zv.im - &v).abs().to_f64() < 1e-35);
        assert!((&zd.re - &d).abs().to_f64() < 1e-35 && zd.im.abs().to_f64() < 1e-35);
        let hv = ev.varpi().ldexp(-1);
        let pole = Complex::new(hv.clone(), hv);
        assert_eq!(ev.phi_complex(&pole), Err(NumError::PoleError));
    }

    #[test]
    fn periodicity_and_oddness() {
        let ev = PhiEvaluator::new(40).unwrap();
        let two_varpi = ev.varpi().ldexp(1);
        for k in 0..20 {
            let s = ev.real(-7.0 + 0.73 * k as f64);
            let a = ev.phi_real(&s);
            assert!((&ev.phi_real(&(&s + &two_varpi)) - &a).abs().to_f64() < 1e-30);
            assert!((&ev.phi_real(&(&s + ev.varpi())) + &a).abs().to_f64() < 1e-30);
            assert!((&ev.phi_real(&-&s) + &a).abs().to_f64() < 1e-30);
        }
    }

    /// Values of `sd(√2 s | 1/2)/√2` from Jacobi elliptic functions.
    #[test]
    fn frozen_values_from_jacobi_functions() {
        let ev = PhiEvaluator::new(45).unwrap();
        let cases = [
            (12, 10, "0.98774803492440427933579893653366563798"),
            (3, 10, "0.29975716391265679612456161399288674099"),
            (-41, 10, "0.97252153818332669679934076807149892517"),
        ];
        for (n, d, want) in cases {
            let got = ev.phi_real(&Real::from_ratio(n, d, ev.bits()));
            assert_eq!(&got.to_decimal(38)[..38], &want[..38], "{n}/{d}");
        }
        let z = Complex::new(Real::from_ratio(7, 10, ev.bits()), Real::from_ratio(4, 10, ev.bits()));
        let w = ev.phi_complex(&z).unwrap();
        assert_eq!(&w.re.to_decimal(38)[..38], "0.729025384273653093738044020793348109");
        assert_eq!(&w.im.to_decimal(38)[..38], "0.381099326503592662404584766127227178");
    }

    #[test]
    fn derivative_by_finite_differences() {
        let ev = PhiEvaluator::new(40).unwrap();
        let h = Real::one(ev.bits()).ldexp(-40);
        let hc = Complex::from_real(h.clone());
        for &(re, im) in &[(0.3, 0.2), (-1.1, 0.7), (2.0, -0.45)] {
            let z = ev.complex(re, im);
            let d = ev.phiprime_complex(&z).unwrap();
            let fwd = ev.phi_complex(&(&z + &hc)).unwrap();
            let bwd = ev.phi_complex(&(&z - &hc)).unwrap();
            let diff = &fwd - &bwd;
            let fd = Complex::new(&diff.re / &h.ldexp(1), &diff.im / &h.ldexp(1));
            assert!((&fd - &d).abs_f64() < 1e-20, "z = {re}+{im}i");
        }
    }

    #[test]
    fn lemnatomic_roots_vanish() {
        let ev = PhiEvaluator::new(40).unwrap();
        for beta in [GaussInt::new(3, 0), GaussInt::new(-1, 2), GaussInt::new(5, 0), GaussInt::new(3, 2)] {
            let lam = crate::lemnatomic::lemnatomic(&beta).unwrap().poly;
            let r = ev.verify_lemnatomic_roots(&beta, &lam).unwrap();
            assert!(r < ev.tolerance(), "beta = {beta}: {r:e}");
        }
        // a wrong polynomial is caught
        let beta = GaussInt::new(5, 0);
        let bad: ZiPoly = "x^16+52x^12-26x^8-12x^4+2".parse().unwrap();
        assert!(ev.verify_lemnatomic_roots(&beta, &bad).unwrap() > 0.1);
    }

    #[test]
    fn identities_hold() {
        let ev = PhiEvaluator::new(40).unwrap();
        let reals: Vec<f64> = (0..12).map(|k| -5.0 + 0.91 * k as f64).collect();
        let complexes: Vec<(f64, f64)> = (0..12).map(|k| (0.37 * k as f64 - 2.0, 0.23 * k as f64 - 1.2)).collect();
        let betas = [GaussInt::new(3, 0), GaussInt::new(1, 2), GaussInt::new(-3, 2), GaussInt::new(7, 0)];
        let rep = ev.verify_identities(&reals, &complexes, &betas);
        for r in &rep.residuals {
            assert!(r.count > 0 && r.max < 1e-25, "{}", rep.summary());
        }
        assert_eq!(rep.get("phi(2 varpi/beta)").unwrap().count, 4);
    }

    #[test]
    fn multmap_matches_phi() {
        let ev = PhiEvaluator::new(40).unwrap();
        let samples: Vec<(f64, f64)> = (0..10).map(|k| (0.11 + 0.07 * k as f64, 0.05 * k as f64 - 0.2)).collect();
        for beta in [GaussInt::new(3, 0), GaussInt::new(1, 2), GaussInt::new(2, -1)] {
            let m = crate::cmfield::mult_map(&beta).unwrap();
            let r = ev.verify_multmap_numeric(&m, &samples).unwrap();
            assert!(r.samples > 5 && r.max < 1e-25, "beta = {beta}: {r:?}");
        }
    }
}
