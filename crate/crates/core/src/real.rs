//! Binary fixed-point reals and complex numbers on top of big integers.
//!
//! A [`Real`] is `mant / 2^bits`. Operands of a binary operation must share
//! the same `bits`; products and quotients round to nearest.

use alloc::string::String;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::gaussint::GaussInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Real {
    mant: BigInt,
    bits: u32,
}

impl Real {
    pub fn from_mant(mant: BigInt, bits: u32) -> Self {
        Real { mant, bits }
    }

    pub fn zero(bits: u32) -> Self {
        Real::from_mant(BigInt::zero(), bits)
    }

    pub fn one(bits: u32) -> Self {
        Real::from_mant(BigInt::one() << bits, bits)
    }

    pub fn from_i64(v: i64, bits: u32) -> Self {
        Real::from_mant(BigInt::from(v) << bits, bits)
    }

    pub fn from_bigint(v: &BigInt, bits: u32) -> Self {
        Real::from_mant(v << bits, bits)
    }

    /// Exact conversion of a finite double, rounded to `bits`.
    pub fn from_f64(v: f64, bits: u32) -> Self {
        assert!(v.is_finite());
        if v == 0.0 {
            return Real::zero(bits);
        }
        let (m, e) = libm::frexp(v);
        // v = m * 2^e with 0.5 <= |m| < 1; take 53 bits of m
        let mi = libm::ldexp(m, 53) as i64;
        let shift = e - 53 + bits as i32;
        let mant = if shift >= 0 {
            BigInt::from(mi) << shift as u32
        } else {
            round_shr(&BigInt::from(mi), (-shift) as u32)
        };
        Real::from_mant(mant, bits)
    }

    /// `n / d` rounded.
    pub fn from_ratio(n: i64, d: i64, bits: u32) -> Self {
        &Real::from_i64(n, bits) / &Real::from_i64(d, bits)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Real {
        Real::from_mant(self.mant.abs(), self.bits)
    }

    pub fn to_f64(&self) -> f64 {
        // keep 64 significant bits before scaling so tiny values survive
        let len = self.mant.bits() as i64;
        let drop = (len - 64).max(0) as u32;
        let top = (&self.mant >> drop).to_f64().unwrap_or(0.0);
        libm::ldexp(top, drop as i32 - self.bits as i32)
    }

    /// Same value at a different precision.
    pub fn with_bits(&self, bits: u32) -> Real {
        let mant = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mant.clone(),
            Ordering::Greater => &self.mant << (bits - self.bits),
            Ordering::Less => round_shr(&self.mant, self.bits - bits),
        };
        Real::from_mant(mant, bits)
    }

    /// `self * 2^k` for signed `k`.
    pub fn ldexp(&self, k: i32) -> Real {
        let mant = if k >= 0 {
            &self.mant << k as u32
        } else {
            round_shr(&self.mant, (-k) as u32)
        };
        Real::from_mant(mant, self.bits)
    }

    pub fn mul_int(&self, k: i64) -> Real {
        Real::from_mant(&self.mant * k, self.bits)
    }

    pub fn div_int(&self, k: i64) -> Real {
        Real::from_mant(round_div(&self.mant, &BigInt::from(k)), self.bits)
    }

    pub fn square(&self) -> Real {
        self * self
    }

    pub fn recip(&self) -> Real {
        &Real::one(self.bits) / self
    }

    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "square root of a negative number");
        let scaled: BigInt = &self.mant << self.bits;
        Real::from_mant(scaled.sqrt(), self.bits)
    }

    /// `e^self`, by halving, a Taylor series and repeated squaring.
    pub fn exp(&self) -> Real {
        let bits = self.bits;
        let mag = self.to_f64().abs();
        let k = if mag < 1.0 { 8 } else { libm::log2(mag) as u32 + 9 };
        let w = bits + 2 * k + 32;
        let y = self.with_bits(w).ldexp(-(k as i32));
        let mut sum = Real::one(w);
        let mut term = Real::one(w);
        let mut n = 1i64;
        loop {
            term = (&term * &y).div_int(n);
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
            n += 1;
        }
        for _ in 0..k {
            sum = sum.square();
        }
        sum.with_bits(bits)
    }

    /// `π` by Machin's formula.
    pub fn pi(bits: u32) -> Real {
        let w = bits + 32;
        let a = atan_inv(5, w).mul_int(16);
        let b = atan_inv(239, w).mul_int(4);
        (&a - &b).with_bits(bits)
    }

    /// Arithmetic-geometric mean of two positive reals.
    pub fn agm(a: &Real, b: &Real) -> Real {
        let (mut a, mut b) = (a.clone(), b.clone());
        let eps = BigInt::from(4);
        loop {
            let diff = (&a.mant - &b.mant).abs();
            if diff <= eps {
                return a;
            }
            let next_a = (&a + &b).ldexp(-1);
            b = (&a * &b).sqrt();
            a = next_a;
        }
    }

    /// Decimal expansion with `digits` places after the point (truncated).
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = (&self.mant.abs() * num_traits::pow(BigInt::from(10), digits)) >> self.bits;
        let s = scaled.to_str_radix(10);
        let s = if s.len() <= digits {
            let mut pad = String::from("0");
            pad.extend(core::iter::repeat_n('0', digits - s.len()));
            pad + &s
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if self.is_negative() { "-" } else { "" };
        alloc::format!("{sign}{int}.{frac}")
    }
}

fn round_shr(v: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return v.clone();
    }
    (v + (BigInt::one() << (k - 1))) >> k
}

fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
    let (n, d) = if d.is_negative() { (-n, -d) } else { (n.clone(), d.clone()) };
    (&n + &n + &d).div_floor(&(&d + &d))
}

/// `atan(1/k)` at `bits` fractional bits.
fn atan_inv(k: i64, bits: u32) -> Real {
    let k2 = BigInt::from(k * k);
    let mut power = (BigInt::one() << bits) / k;
    let mut sum = BigInt::zero();
    let mut n = 0i64;
    while !power.is_zero() {
        let term = &power / (2 * n + 1);
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &k2;
        n += 1;
    }
    Real::from_mant(sum, bits)
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.bits, other.bits);
        self.mant.cmp(&other.mant)
    }
}

impl<'a> Add<&'a Real> for &'a Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        Real::from_mant(&self.mant + &rhs.mant, self.bits)
    }
}

impl<'a> Sub<&'a Real> for &'a Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        Real::from_mant(&self.mant - &rhs.mant, self.bits)
    }
}

impl<'a> Mul<&'a Real> for &'a Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        Real::from_mant(round_shr(&(&self.mant * &rhs.mant), self.bits), self.bits)
    }
}

impl<'a> core::ops::Div<&'a Real> for &'a Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.bits, rhs.bits);
        assert!(!rhs.is_zero(), "fixed-point division by zero");
        Real::from_mant(round_div(&(&self.mant << self.bits), &rhs.mant), self.bits)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::from_mant(-&self.mant, self.bits)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        debug_assert_eq!(re.bits(), im.bits());
        Complex { re, im }
    }

    pub fn zero(bits: u32) -> Self {
        Complex::new(Real::zero(bits), Real::zero(bits))
    }

    pub fn one(bits: u32) -> Self {
        Complex::new(Real::one(bits), Real::zero(bits))
    }

    pub fn from_real(re: Real) -> Self {
        let bits = re.bits();
        Complex::new(re, Real::zero(bits))
    }

    pub fn from_gauss(g: &GaussInt, bits: u32) -> Self {
        Complex::new(Real::from_bigint(&g.re, bits), Real::from_bigint(&g.im, bits))
    }

    pub fn from_f64(re: f64, im: f64, bits: u32) -> Self {
        Complex::new(Real::from_f64(re, bits), Real::from_f64(im, bits))
    }

    pub fn bits(&self) -> u32 {
        self.re.bits()
    }

    pub fn with_bits(&self, bits: u32) -> Complex {
        Complex::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re.clone(), -&self.im)
    }

    /// `i * self`
    pub fn mul_i(&self) -> Complex {
        Complex::new(-&self.im, self.re.clone())
    }

    pub fn scale(&self, r: &Real) -> Complex {
        Complex::new(&self.re * r, &self.im * r)
    }

    pub fn mul_gauss(&self, g: &GaussInt) -> Complex {
        self * &Complex::from_gauss(g, self.bits())
    }

    pub fn norm_sqr(&self) -> Real {
        &self.re.square() + &self.im.square()
    }

    pub fn abs(&self) -> Real {
        self.norm_sqr().sqrt()
    }

    pub fn abs_f64(&self) -> f64 {
        libm::hypot(self.re.to_f64(), self.im.to_f64())
    }

    pub fn square(&self) -> Complex {
        self * self
    }

    pub fn recip(&self) -> Complex {
        let n = self.norm_sqr();
        Complex::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<'a> Add<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        Complex::new(re, im)
    }
}

impl<'a> core::ops::Div<&'a Complex> for &'a Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        let n = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Complex::new(&num.re / &n, &num.im / &n)
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI_50: &str = "3.14159265358979323846264338327950288419716939937510";
    const E_40: &str = "2.7182818284590452353602874713526624977572";

    #[test]
    fn pi_and_e_digits() {
        assert_eq!(Real::pi(200).to_decimal(50), PI_50);
        assert_eq!(Real::one(200).exp().to_decimal(40), E_40);
    }

    #[test]
    fn exp_of_large_and_negative_arguments() {
        let bits = 160;
        let x = Real::from_i64(30, bits);
        let prod = &x.exp() * &(-&x).exp();
        assert!((prod.to_f64() - 1.0).abs() < 1e-30);
        assert!(((-&x).exp().to_f64() - libm::exp(-30.0)).abs() < 1e-25);
    }

    #[test]
    fn sqrt_and_agm() {
        let two = Real::from_i64(2, 200);
        let r = two.sqrt();
        assert!((&r.square() - &two).abs().to_f64() < 1e-55);
        // agm(1, sqrt 2) = 1.19814023473559220744...
        let g = Real::agm(&Real::one(200), &r);
        assert_eq!(&g.to_decimal(20), "1.19814023473559220743");
    }

    #[test]
    fn conversions() {
        assert_eq!(Real::from_f64(0.375, 64).to_f64(), 0.375);
        assert_eq!(Real::from_f64(-1.5e-10, 128).to_f64(), -1.5e-10);
        let tiny = Real::one(400).ldexp(-380);
        assert_eq!(tiny.to_f64(), libm::ldexp(1.0, -380));
        assert_eq!(Real::from_ratio(-7, 2, 32).to_decimal(3), "-3.500");
        assert_eq!(Real::from_ratio(1, 3, 64).to_decimal(5), "0.33333");
    }

    #[test]
    fn complex_division_inverts_multiplication() {
        let a = Complex::from_f64(1.25, -3.5, 128);
        let b = Complex::from_f64(-0.75, 2.0, 128);
        let q = &(&a * &b) / &b;
        assert!((&q - &a).abs_f64() < 1e-35);
        let one = &b * &b.recip();
        assert!((&one - &Complex::one(128)).abs_f64() < 1e-35);
    }
}
