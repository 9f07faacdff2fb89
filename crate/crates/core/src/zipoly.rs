//! Dense univariate polynomials over `Z[i]`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::fq::FqPoly;
use crate::gaussint::GaussInt;
use crate::modgcd;
use crate::real::{Complex, Real};

/// Default crossover from schoolbook to Karatsuba multiplication, in
/// coefficients.
pub const KARATSUBA_THRESHOLD: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("polynomial reduces to zero modulo the prime")]
    ZeroReduction,
    #[error("polynomial is not squarefree over the residue field")]
    NotSquarefree,
    #[error("{0} is not a normalized odd prime")]
    BadModulus(String),
    #[error("cannot parse polynomial from {0:?}")]
    Parse(String),
}

/// Polynomial with Gaussian integer coefficients in ascending degree; the
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ZiPoly {
    coeffs: Vec<GaussInt>,
}

impl ZiPoly {
    pub fn new(mut coeffs: Vec<GaussInt>) -> Self {
        while coeffs.last().is_some_and(GaussInt::is_zero) {
            coeffs.pop();
        }
        ZiPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ZiPoly::new(coeffs.iter().map(|&c| GaussInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZiPoly::default()
    }

    pub fn one() -> Self {
        ZiPoly::constant(GaussInt::one())
    }

    pub fn x() -> Self {
        ZiPoly::monomial(GaussInt::one(), 1)
    }

    pub fn constant(c: GaussInt) -> Self {
        ZiPoly::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: GaussInt, k: usize) -> Self {
        let mut v = vec![GaussInt::zero(); k + 1];
        v[k] = c;
        ZiPoly::new(v)
    }

    pub fn coeffs(&self) -> &[GaussInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussInt> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> GaussInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&GaussInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(GaussInt::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Largest `k` with `x^k` dividing `self` (0 for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Largest `e` such that every exponent carrying a nonzero coefficient
    /// is a multiple of `e` (0 when only the constant term is nonzero).
    pub fn exponent_stride(&self) -> usize {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (k, _)| g.gcd(&k))
    }

    pub fn scale(&self, c: &GaussInt) -> ZiPoly {
        if c.is_zero() {
            return ZiPoly::zero();
        }
        ZiPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide every coefficient by `c`; `None` unless all divisions are exact.
    pub fn div_scalar(&self, c: &GaussInt) -> Option<ZiPoly> {
        let coeffs = self.coeffs.iter().map(|a| a.exact_div(c)).collect::<Option<Vec<_>>>()?;
        Some(ZiPoly::new(coeffs))
    }

    pub fn mul_unit(&self, k: i64) -> ZiPoly {
        ZiPoly {
            coeffs: self.coeffs.iter().map(|a| a.mul_unit(k)).collect(),
        }
    }

    /// `x^k * self`
    pub fn shift(&self, k: usize) -> ZiPoly {
        if self.is_zero() {
            return ZiPoly::zero();
        }
        let mut v = vec![GaussInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        ZiPoly { coeffs: v }
    }

    /// `self / x^k`, assuming the low `k` coefficients vanish.
    pub fn unshift(&self, k: usize) -> ZiPoly {
        ZiPoly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `p(x^e)`.
    pub fn inflate(&self, e: usize) -> ZiPoly {
        assert!(e >= 1);
        if e == 1 || self.is_zero() {
            return self.clone();
        }
        let mut v = vec![GaussInt::zero(); (self.coeffs.len() - 1) * e + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * e] = c.clone();
        }
        ZiPoly { coeffs: v }
    }

    /// Inverse of [`ZiPoly::inflate`]; `None` if some exponent is not a
    /// multiple of `e`.
    pub fn deflate(&self, e: usize) -> Option<ZiPoly> {
        assert!(e >= 1);
        if self
            .coeffs
            .iter()
            .enumerate()
            .any(|(k, c)| k % e != 0 && !c.is_zero())
        {
            return None;
        }
        Some(ZiPoly::new(self.coeffs.iter().step_by(e).cloned().collect()))
    }

    /// `p(x⁴)`.
    pub fn compose_x4(&self) -> ZiPoly {
        self.inflate(4)
    }

    /// Coefficient list reversed within length `d+1`, i.e. `x^d p(1/x)`.
    pub fn reverse(&self, d: usize) -> ZiPoly {
        assert!(self.degree().is_none_or(|n| n <= d), "reverse length below degree");
        let mut v = self.coeffs.clone();
        v.resize(d + 1, GaussInt::zero());
        v.reverse();
        ZiPoly::new(v)
    }

    pub fn conjugate(&self) -> ZiPoly {
        ZiPoly {
            coeffs: self.coeffs.iter().map(GaussInt::conj).collect(),
        }
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussInt::is_real)
    }

    pub fn derivative(&self) -> ZiPoly {
        ZiPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussInt::from(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, z: &GaussInt) -> GaussInt {
        self.coeffs
            .iter()
            .rev()
            .fold(GaussInt::zero(), |acc, c| &(&acc * z) + c)
    }

    /// Horner evaluation at a fixed-point complex number. Returns the value
    /// and an upper bound on its accumulated rounding error.
    pub fn eval_complex(&self, z: &Complex) -> (Complex, f64) {
        let bits = z.re.bits();
        let mut acc = Complex::zero(bits);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + &Complex::from_gauss(c, bits);
        }
        let n = self.coeffs.len() as f64;
        let r = z.abs_f64().max(1.0);
        let cmax = self.coeffs.iter().map(gauss_abs_f64).fold(0.0, f64::max);
        let ulp = libm::ldexp(1.0, -(bits as i32));
        let bound = 4.0 * n * (cmax + 1.0) * libm::pow(r, n) * ulp;
        (acc, bound)
    }

    /// Schoolbook below [`KARATSUBA_THRESHOLD`] coefficients, Karatsuba above.
    pub fn mul_with(&self, other: &ZiPoly, threshold: usize) -> ZiPoly {
        if self.is_zero() || other.is_zero() {
            return ZiPoly::zero();
        }
        // exploit sparsity of the form x^v q(x^e)
        let (va, vb) = (self.x_valuation(), other.x_valuation());
        let a = self.unshift(va);
        let b = other.unshift(vb);
        let e = a.exponent_stride().gcd(&b.exponent_stride());
        if e > 1 {
            let prod = a.deflate(e).unwrap().mul_with(&b.deflate(e).unwrap(), threshold);
            return prod.inflate(e).shift(va + vb);
        }
        let v = karatsuba(&a.coeffs, &b.coeffs, threshold.max(2));
        ZiPoly::new(v).shift(va + vb)
    }

    pub fn square(&self) -> ZiPoly {
        self * self
    }

    pub fn pow(&self, e: u32) -> ZiPoly {
        let mut acc = ZiPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient `q` with `d * q = self`, by long division with exact
    /// leading-coefficient quotients.
    pub fn exact_div(&self, d: &ZiPoly) -> Result<ZiPoly, PolyError> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(ZiPoly::zero());
        }
        let (vs, vd) = (self.x_valuation(), d.x_valuation());
        if vs < vd {
            return Err(PolyError::NotDivisible);
        }
        let num = self.unshift(vd);
        let den = d.unshift(vd);
        let e = num.exponent_stride().gcd(&den.exponent_stride());
        if e > 1 {
            let q = num.deflate(e).unwrap().exact_div_dense(&den.deflate(e).unwrap())?;
            return Ok(q.inflate(e));
        }
        num.exact_div_dense(&den)
    }

    fn exact_div_dense(&self, d: &ZiPoly) -> Result<ZiPoly, PolyError> {
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return if self.is_zero() { Ok(ZiPoly::zero()) } else { Err(PolyError::NotDivisible) };
        }
        let lc = &d.coeffs[dd];
        let unit_lc = lc.unit_exponent();
        let mut r = self.coeffs.clone();
        let mut q = vec![GaussInt::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let t = match unit_lc {
                Some(u) => r[k].mul_unit(-(u as i64)),
                None => r[k].exact_div(lc).ok_or(PolyError::NotDivisible)?,
            };
            for (j, c) in d.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    r[k - dd + j] -= &(&t * c);
                }
            }
            q[k - dd] = t;
        }
        if r[..dd].iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(ZiPoly::new(q))
    }

    /// Gaussian gcd of the coefficients in canonical form (zero for the
    /// zero polynomial).
    pub fn content(&self) -> GaussInt {
        let mut g = GaussInt::zero();
        for c in &self.coeffs {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c).expect("nonzero argument");
            }
        }
        g
    }

    /// `self / content(self)`.
    pub fn primitive_part(&self) -> ZiPoly {
        if self.is_zero() {
            return ZiPoly::zero();
        }
        let c = self.content();
        self.div_scalar(&c).expect("content divides every coefficient")
    }

    /// Multiply by the unit making the leading coefficient its canonical
    /// associate.
    pub fn canonical_unit_form(&self) -> ZiPoly {
        match self.leading_coeff() {
            Some(lc) => {
                let (u, _) = lc.canonical_associate();
                let k = u.unit_exponent().unwrap() as i64;
                self.mul_unit(k)
            }
            None => ZiPoly::zero(),
        }
    }

    /// Primitive gcd over `Q(i)[x]` with canonical leading coefficient; the
    /// gcd with zero is the canonical primitive part of the other argument.
    pub fn gcd(&self, other: &ZiPoly) -> ZiPoly {
        modgcd::gcd_cofactors(self, other).0
    }

    /// `(g, self/g, other/g)` with `g` as in [`ZiPoly::gcd`] and both
    /// cofactors in `Z[i][x]`.
    pub fn gcd_cofactors(&self, other: &ZiPoly) -> (ZiPoly, ZiPoly, ZiPoly) {
        modgcd::gcd_cofactors(self, other)
    }

    /// True iff the gcd with the derivative is constant.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).is_constant()
    }

    /// Every non-leading coefficient divisible by `π` and the constant term
    /// not divisible by `π²`.
    pub fn is_eisenstein_at(&self, pi: &GaussInt) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let pi2 = pi * pi;
        self.coeffs[..d].iter().all(|c| pi.divides(c)) && !pi2.divides(&self.coeffs[0])
    }

    /// Reduction into `(O/πO)[x]`.
    pub fn reduce_mod(&self, pi: &GaussInt) -> Result<FqPoly, PolyError> {
        FqPoly::from_gauss(pi, &self.coeffs)
    }

    /// True iff the reduction mod `π` is squarefree.
    pub fn is_separable_mod(&self, pi: &GaussInt) -> Result<bool, PolyError> {
        let r = self.reduce_mod(pi)?;
        if r.is_zero() {
            return Err(PolyError::ZeroReduction);
        }
        Ok(r.is_squarefree())
    }

    /// Largest coefficient bit length, for diagnostics.
    pub fn max_coeff_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.re.bits().max(c.im.bits()))
            .max()
            .unwrap_or(0)
    }
}

fn gauss_abs_f64(c: &GaussInt) -> f64 {
    let re = c.re.to_f64().unwrap_or(f64::INFINITY);
    let im = c.im.to_f64().unwrap_or(f64::INFINITY);
    libm::hypot(re, im)
}

fn schoolbook(a: &[GaussInt], b: &[GaussInt]) -> Vec<GaussInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut re = vec![BigInt::zero(); a.len() + b.len() - 1];
    let mut im = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = i + j;
            if !x.im.is_zero() || !y.im.is_zero() {
                re[k] += &x.re * &y.re - &x.im * &y.im;
                im[k] += &x.re * &y.im + &x.im * &y.re;
            } else {
                re[k] += &x.re * &y.re;
            }
        }
    }
    re.into_iter().zip(im).map(|(r, i)| GaussInt { re: r, im: i }).collect()
}

fn add_slices(a: &[GaussInt], b: &[GaussInt]) -> Vec<GaussInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn karatsuba(a: &[GaussInt], b: &[GaussInt], threshold: usize) -> Vec<GaussInt> {
    if a.len() < threshold || b.len() < threshold {
        return schoolbook(a, b);
    }
    let m = a.len().min(b.len()) / 2;
    let (a0, a1) = a.split_at(m);
    let (b0, b1) = b.split_at(m);
    let z0 = karatsuba(a0, b0, threshold);
    let z2 = karatsuba(a1, b1, threshold);
    let mut z1 = karatsuba(&add_slices(a0, a1), &add_slices(b0, b1), threshold);
    for (k, c) in z0.iter().enumerate() {
        z1[k] -= c;
    }
    for (k, c) in z2.iter().enumerate() {
        z1[k] -= c;
    }
    let mut out = vec![GaussInt::zero(); a.len() + b.len() - 1];
    for (k, c) in z0.into_iter().enumerate() {
        out[k] += &c;
    }
    for (k, c) in z1.into_iter().enumerate() {
        if k + m < out.len() {
            out[k + m] += &c;
        } else {
            debug_assert!(c.is_zero());
        }
    }
    for (k, c) in z2.into_iter().enumerate() {
        out[k + 2 * m] += &c;
    }
    out
}

impl<'a> Add<&'a ZiPoly> for &'a ZiPoly {
    type Output = ZiPoly;
    fn add(self, rhs: &ZiPoly) -> ZiPoly {
        ZiPoly::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl<'a> Sub<&'a ZiPoly> for &'a ZiPoly {
    type Output = ZiPoly;
    fn sub(self, rhs: &ZiPoly) -> ZiPoly {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), GaussInt::zero());
        }
        for (o, c) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= c;
        }
        ZiPoly::new(out)
    }
}

impl<'a> Mul<&'a ZiPoly> for &'a ZiPoly {
    type Output = ZiPoly;
    fn mul(self, rhs: &ZiPoly) -> ZiPoly {
        self.mul_with(rhs, KARATSUBA_THRESHOLD)
    }
}

impl Add for ZiPoly {
    type Output = ZiPoly;
    fn add(self, rhs: ZiPoly) -> ZiPoly {
        &self + &rhs
    }
}

impl Sub for ZiPoly {
    type Output = ZiPoly;
    fn sub(self, rhs: ZiPoly) -> ZiPoly {
        &self - &rhs
    }
}

impl Mul for ZiPoly {
    type Output = ZiPoly;
    fn mul(self, rhs: ZiPoly) -> ZiPoly {
        &self * &rhs
    }
}

impl Neg for &ZiPoly {
    type Output = ZiPoly;
    fn neg(self) -> ZiPoly {
        ZiPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for ZiPoly {
    type Output = ZiPoly;
    fn neg(self) -> ZiPoly {
        -&self
    }
}

impl fmt::Display for ZiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = if c.is_real() {
                (c.re.is_negative(), c.re.abs().to_string())
            } else {
                (false, alloc::format!("({c})"))
            };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mon = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => alloc::format!("x^{k}"),
            };
            if k > 0 && body == "1" {
                f.write_str(&mon)?;
            } else {
                write!(f, "{body}{mon}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for ZiPoly {
    type Err = PolyError;

    /// Parses the [`fmt::Display`] form: terms like `50x^21`, `-x`, `(-1+2i)`
    /// or `(2-i)x^3`, joined by `+` and `-`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        // split into signed terms at top-level signs
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut cur = String::new();
        let mut neg = false;
        for (k, ch) in t.chars().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if depth == 0 && (ch == '+' || ch == '-') && !cur.ends_with('^') {
                if k > 0 {
                    if cur.is_empty() {
                        return Err(err());
                    }
                    terms.push((neg, core::mem::take(&mut cur)));
                }
                neg = ch == '-';
                continue;
            }
            cur.push(ch);
        }
        if cur.is_empty() || depth != 0 {
            return Err(err());
        }
        terms.push((neg, cur));
        let mut acc = ZiPoly::zero();
        for (neg, term) in terms {
            let (coef_str, exp) = match term.find('x') {
                Some(pos) => {
                    let rest = &term[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|d| d.parse::<usize>().ok())
                            .ok_or_else(err)?
                    };
                    (&term[..pos], e)
                }
                None => (term.as_str(), 0),
            };
            let coef = if coef_str.is_empty() {
                GaussInt::one()
            } else if let Some(inner) = coef_str.strip_prefix('(').and_then(|c| c.strip_suffix(')')) {
                inner.parse::<GaussInt>().map_err(|_| err())?
            } else if coef_str.trim_end_matches('i').bytes().all(|b| b.is_ascii_digit())
                && coef_str.matches('i').count() <= 1
            {
                coef_str.parse::<GaussInt>().map_err(|_| err())?
            } else {
                return Err(err());
            };
            let coef = if neg { -coef } else { coef };
            acc = &acc + &ZiPoly::monomial(coef, exp);
        }
        Ok(acc)
    }
}

/// Evaluate at a real fixed-point number, returning a real result; the
/// polynomial must have real coefficients.
pub fn eval_real(p: &ZiPoly, x: &Real) -> Real {
    let bits = x.bits();
    p.coeffs()
        .iter()
        .rev()
        .fold(Real::zero(bits), |acc, c| &(&acc * x) + &Real::from_bigint(&c.re, bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ZiPoly {
        s.parse().unwrap()
    }

    fn g(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re, im)
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in [
            "x^25 + 50x^21 - 125x^17 + 300x^13 - 105x^9 - 62x^5 + 5x",
            "x^4 + (-1+2i)",
            "(2-i)x^3 - x + 7",
            "-x",
            "0",
            "(3i)x^2 + (-i)",
        ] {
            if s == "0" {
                assert_eq!(ZiPoly::zero().to_string(), "0");
                continue;
            }
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("x^4 - 1 + 2i").to_string(), "x^4 + (-1+2i)");
        assert!("x^".parse::<ZiPoly>().is_err());
        assert!("3y".parse::<ZiPoly>().is_err());
        assert!("(1+i".parse::<ZiPoly>().is_err());
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&p("x+1") * &p("x-1"), p("x^2-1"));
        assert_eq!(&p("x^4+(-1+2i)") * &p("x^4+(-1-2i)"), p("x^8-2x^4+5"));
        assert_eq!(&p("x^3+2") * &ZiPoly::zero(), ZiPoly::zero());
    }

    #[test]
    fn exact_division_examples() {
        let div = p("x^25+50x^21-125x^17+300x^13-105x^9-62x^5+5x");
        let d = &(&ZiPoly::x() * &p("x^4+(-1+2i)")) * &p("x^4+(-1-2i)");
        assert_eq!(div.exact_div(&d).unwrap(), p("x^16+52x^12-26x^8-12x^4+1"));
        assert_eq!(div.exact_div(&ZiPoly::one()).unwrap(), div);
        assert_eq!(p("x^2+1").exact_div(&p("x+2")), Err(PolyError::NotDivisible));
        assert_eq!(p("2x+2").exact_div(&p("(1+i)")).unwrap(), p("(1-i)x+(1-i)"));
        assert_eq!(p("x+1").exact_div(&p("2")), Err(PolyError::NotDivisible));
    }

    #[test]
    fn reverse_conjugate_compose() {
        assert_eq!(p("x+(-1+2i)").reverse(1), p("(-1+2i)x+1"));
        assert_eq!(ZiPoly::one().reverse(0), ZiPoly::one());
        assert_eq!(p("x^2+2x+3").reverse(2), p("3x^2+2x+1"));
        assert_eq!(p("x^2").reverse(3), p("x"));
        assert_eq!(p("x^4+(-1+2i)").conjugate(), p("x^4+(-1-2i)"));
        assert_eq!(p("x^2-5").conjugate(), p("x^2-5"));
        assert_eq!(ZiPoly::zero().conjugate(), ZiPoly::zero());
        assert_eq!(p("x+(-1+2i)").compose_x4(), p("x^4+(-1+2i)"));
        assert_eq!(ZiPoly::one().compose_x4(), ZiPoly::one());
        assert_eq!(p("x^2").compose_x4(), p("x^8"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p("x^16+52x^12-26x^8-12x^4+1").eval(&g(0, 0)), g(1, 0));
        assert_eq!(p("x^4+(-1+2i)").eval(&g(0, 0)), g(-1, 2));
        assert_eq!(ZiPoly::x().eval(&g(7, 0)), g(7, 0));
        assert_eq!(p("x^2+1").eval(&g(0, 1)), g(0, 0));
    }

    #[test]
    fn eval_complex_matches_exact() {
        let q = p("(2-i)x^3 - x + 7");
        let z = g(3, -2);
        let exact = q.eval(&z);
        let (v, bound) = q.eval_complex(&Complex::from_gauss(&z, 128));
        assert!(bound < 1e-20);
        assert!((v.re.to_f64() - exact.re.to_f64().unwrap()).abs() < 1e-9);
        assert!((v.im.to_f64() - exact.im.to_f64().unwrap()).abs() < 1e-9);
    }

    #[test]
    fn eisenstein_examples() {
        assert!(p("x+(-1+2i)").is_eisenstein_at(&g(-1, 2)));
        assert!(!p("x^2+1").is_eisenstein_at(&g(3, 0)));
        // 5 is divisible by -1+2i but not by its square
        assert!(p("x+5").is_eisenstein_at(&g(-1, 2)));
        assert!(!p("x+25").is_eisenstein_at(&g(-1, 2)));
        assert!(!p("x^2+3x+(-1+2i)").is_eisenstein_at(&g(-1, 2)));
    }

    #[test]
    fn reduction_examples() {
        let r = p("x^2-1").reduce_mod(&g(-3, 0)).unwrap();
        assert_eq!(r.coeffs(), &[(2, 0), (0, 0), (1, 0)]);
        let r = p("5x+1").reduce_mod(&g(-1, 2)).unwrap();
        assert_eq!(r.degree(), Some(0));
        assert_eq!(r.coeffs(), &[(1, 0)]);
        let r = ZiPoly::x().reduce_mod(&g(-1, 2)).unwrap();
        assert_eq!(r.coeffs(), &[(0, 0), (1, 0)]);
        // i maps to a square root of -1
        let r = p("x+(i)").reduce_mod(&g(-1, 2)).unwrap();
        let ri = r.coeffs()[0].0;
        assert_eq!(ri * ri % 5, 4);
        assert_eq!(p("5x").is_separable_mod(&g(-1, 2)), Err(PolyError::ZeroReduction));
    }

    #[test]
    fn separability_examples() {
        assert_eq!(p("x^2-1").is_separable_mod(&g(-3, 0)), Ok(true));
        assert_eq!(p("x^2").is_separable_mod(&g(-3, 0)), Ok(false));
        assert_eq!(p("x^2").is_separable_mod(&g(-1, 2)), Ok(false));
        let lam5 = p("x^16+52x^12-26x^8-12x^4+1");
        assert_eq!(lam5.is_separable_mod(&g(3, 2)), Ok(true));
        assert_eq!(lam5.is_separable_mod(&g(3, -2)), Ok(true));
    }

    #[test]
    fn content_and_primitive_part() {
        let q = p("(2+2i)x + 4");
        assert_eq!(q.content(), g(1, 1).pow(3));
        assert_eq!(&q.primitive_part().scale(&q.content()), &q);
        assert_eq!(p("3x+6").content(), g(-3, 0));
        assert_eq!(ZiPoly::zero().content(), GaussInt::zero());
    }

    #[test]
    fn gcd_examples() {
        let a = p("x^2-1");
        let b = p("x^2+2x+1");
        assert_eq!(a.gcd(&b), p("x+1"));
        let (gg, ca, cb) = a.gcd_cofactors(&b);
        assert_eq!(&gg * &ca, a);
        assert_eq!(&gg * &cb, b);
        assert_eq!(p("x^4+(-1+2i)").gcd(&p("x^4+(-1-2i)")), ZiPoly::one());
        assert_eq!(p("6x^3").gcd(&p("4x^5+4x^2")), p("x^2"));
        assert_eq!(ZiPoly::zero().gcd(&p("3x+3")), p("x+1"));
        assert!(p("x^25+50x^21-125x^17+300x^13-105x^9-62x^5+5x").is_squarefree());
        assert!(!p("x^3-x^2").is_squarefree());
    }

    #[test]
    fn sparse_and_dense_products_agree() {
        let a = p("x^8 + 3x^4 + (1+i)");
        let b = p("x^5 + (2-i)x");
        let dense = ZiPoly::new(schoolbook(a.coeffs(), b.coeffs()));
        assert_eq!(&a * &b, dense);
    }
}
