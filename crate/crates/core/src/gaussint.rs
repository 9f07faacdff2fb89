//! Exact arithmetic, classification and unique factorization in the Gaussian
//! integers `Z[i]`.
//!
//! An element is *odd* when it is coprime to `1+i` (equivalently `re + im` is
//! odd), and an odd element is *normalized* when it is congruent to 1 modulo
//! `2(1+i)`. Every odd element has exactly one normalized associate, which is
//! what makes normalized primes a canonical choice of prime generators.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    #[error("argument is not odd (divisible by 1+i)")]
    NotOdd,
    #[error("gcd of two zeros is undefined")]
    BothZero,
    #[error("zero has no factorization")]
    Zero,
    #[error("arguments are not coprime")]
    NotCoprime,
    #[error("norm {0} is beyond the trial-division range")]
    TooLarge(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse Gaussian integer from {0:?}")]
pub struct ParseGaussError(pub String);

/// A Gaussian integer `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussInt({self})")
    }
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::default()
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    /// `i^k` for any integer `k`.
    pub fn unit(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussInt::new(1, 0),
            1 => GaussInt::new(0, 1),
            2 => GaussInt::new(-1, 0),
            _ => GaussInt::new(0, -1),
        }
    }

    pub fn one_plus_i() -> Self {
        GaussInt::new(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplication by `i^k`, done by coordinate shuffling.
    pub fn mul_unit(&self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self.clone(),
            1 => GaussInt::new(-&self.im, self.re.clone()),
            2 => GaussInt::new(-&self.re, -&self.im),
            _ => GaussInt::new(self.im.clone(), -&self.re),
        }
    }

    /// The exponent `k` with `self = i^k`, if `self` is a unit.
    pub fn unit_exponent(&self) -> Option<u8> {
        (0..4u8).find(|&k| *self == GaussInt::unit(k as i64))
    }

    pub fn is_odd(&self) -> bool {
        (&self.re + &self.im).is_odd()
    }

    /// Euclidean division with the quotient rounded to the nearest Gaussian
    /// integer coordinatewise (ties toward negative infinity). The remainder
    /// satisfies `norm(r) <= norm(d)/2`.
    pub fn div_rem(&self, d: &GaussInt) -> (GaussInt, GaussInt) {
        assert!(!d.is_zero(), "division by zero Gaussian integer");
        let n = d.norm();
        let num = self * &d.conj();
        let two_n = &n + &n;
        let round = |c: &BigInt| -> BigInt { (c + c + &n - 1u32).div_floor(&two_n) };
        let q = GaussInt::new(round(&num.re), round(&num.im));
        let r = self - &(&q * d);
        (q, r)
    }

    /// Canonical remainder modulo `d` (translation invariant, so equal classes
    /// give equal remainders).
    pub fn rem(&self, d: &GaussInt) -> GaussInt {
        self.div_rem(d).1
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &GaussInt) -> Option<GaussInt> {
        if d.is_zero() {
            return if self.is_zero() { Some(GaussInt::zero()) } else { None };
        }
        if d.im.is_zero() {
            let (qr, rr) = self.re.div_rem(&d.re);
            let (qi, ri) = self.im.div_rem(&d.re);
            return (rr.is_zero() && ri.is_zero()).then(|| GaussInt::new(qr, qi));
        }
        let n = d.norm();
        let num = self * &d.conj();
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussInt::new(qr, qi))
    }

    pub fn divides(&self, other: &GaussInt) -> bool {
        other.exact_div(self).is_some()
    }

    /// The `ε` in `{0,1,2,3}` with `self ≡ i^ε (mod 2(1+i))`.
    pub fn unit_class(&self) -> Result<u8, GaussError> {
        if !self.is_odd() {
            return Err(GaussError::NotOdd);
        }
        // z is divisible by 2(1+i) iff re+im and im-re are both 0 mod 4
        let four = BigInt::from(4);
        for eps in 0..4u8 {
            let d = self - &GaussInt::unit(eps as i64);
            if (&d.re + &d.im).mod_floor(&four).is_zero() && (&d.im - &d.re).mod_floor(&four).is_zero() {
                return Ok(eps);
            }
        }
        unreachable!("odd Gaussian integers are congruent to a unit mod 2(1+i)")
    }

    /// Returns `(u, u*self)` with `u` a unit and `u*self ≡ 1 (mod 2(1+i))`.
    pub fn normalize(&self) -> Result<(GaussInt, GaussInt), GaussError> {
        let eps = self.unit_class()? as i64;
        Ok((GaussInt::unit(-eps), self.mul_unit(-eps)))
    }

    pub fn is_normalized(&self) -> bool {
        self.unit_class() == Ok(0)
    }

    /// Canonical associate: the normalized one for odd elements, otherwise
    /// the one with `re > 0, im >= 0`.
    pub fn canonical_associate(&self) -> (GaussInt, GaussInt) {
        if self.is_zero() {
            return (GaussInt::one(), GaussInt::zero());
        }
        if let Ok(pair) = self.normalize() {
            return pair;
        }
        for k in 0..4 {
            let v = self.mul_unit(k);
            if v.re.is_positive() && !v.im.is_negative() {
                return (GaussInt::unit(k), v);
            }
        }
        unreachable!()
    }

    /// Greatest common divisor. Odd results are normalized; even results are
    /// `(1+i)^k` times a normalized element.
    pub fn gcd(&self, other: &GaussInt) -> Result<GaussInt, GaussError> {
        if self.is_zero() && other.is_zero() {
            return Err(GaussError::BothZero);
        }
        Ok(canonical_gcd_form(raw_gcd(self.clone(), other.clone())))
    }

    pub fn pow(&self, mut e: u64) -> GaussInt {
        let mut base = self.clone();
        let mut acc = GaussInt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^e mod m`, reduced with canonical remainders.
    pub fn pow_mod(&self, e: &BigUint, m: &GaussInt) -> GaussInt {
        let mut acc = GaussInt::one().rem(m);
        let base = self.rem(m);
        for bit in (0..e.bits()).rev() {
            acc = (&acc * &acc).rem(m);
            if e.bit(bit) {
                acc = (&acc * &base).rem(m);
            }
        }
        acc
    }

    /// True iff the norm is a rational prime, or `self` is associate to a
    /// rational prime `p ≡ 3 (mod 4)`.
    pub fn is_prime(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if let Some(n) = self.norm().to_u64() {
            if arith::is_prime_u64(n) {
                return true;
            }
        }
        let p = if self.re.is_zero() {
            self.im.abs()
        } else if self.im.is_zero() {
            self.re.abs()
        } else {
            return false;
        };
        match p.to_u64() {
            Some(p) => p % 4 == 3 && arith::is_prime_u64(p),
            None => false,
        }
    }

    /// Complete factorization into a unit and normalized primes (plus `1+i`
    /// for even input), ordered by norm, then real part, then imaginary part
    /// descending so that conjugate pairs list the positive-imaginary prime
    /// first.
    pub fn factor(&self) -> Result<GaussFactorization, GaussError> {
        if self.is_zero() {
            return Err(GaussError::Zero);
        }
        let mut exps: BTreeMap<GaussInt, u32> = BTreeMap::new();
        let content = Integer::gcd(&self.re, &self.im);
        let primitive = self.exact_div(&GaussInt::new(content.clone(), 0)).unwrap();
        for (p, e) in factor_big(&content.into_parts().1)? {
            for (pi, k) in rational_prime_factors(p) {
                *exps.entry(pi).or_default() += k * e;
            }
        }
        let nprim = primitive.norm();
        for (p, e) in factor_big(nprim.magnitude())? {
            if p == 2 {
                *exps.entry(GaussInt::one_plus_i()).or_default() += e;
                continue;
            }
            // only split primes divide the norm of a primitive element, and
            // exactly one of the two conjugates divides it
            let pi = split_prime_factor(p);
            let chosen = if pi.divides(&primitive) { pi } else { pi.conj().normalize().unwrap().1 };
            *exps.entry(chosen).or_default() += e;
        }
        let mut factors: Vec<(GaussInt, u32)> = exps.into_iter().collect();
        factors.sort_by(|a, b| prime_order(&a.0, &b.0));
        let product = factors
            .iter()
            .fold(GaussInt::one(), |acc, (p, e)| &acc * &p.pow(*e as u64));
        let unit = self.exact_div(&product).expect("factor product must divide input");
        debug_assert!(unit.is_unit());
        Ok(GaussFactorization { unit, factors })
    }

    /// All normalized divisors, one per associate class, sorted by
    /// (norm, re, -im).
    pub fn normalized_divisors(&self) -> Result<Vec<GaussInt>, GaussError> {
        if !self.is_odd() {
            return Err(GaussError::NotOdd);
        }
        let fac = self.factor()?;
        let mut divs = alloc::vec![GaussInt::one()];
        for (p, e) in &fac.factors {
            let len = divs.len();
            let mut pk = GaussInt::one();
            for _ in 0..*e {
                pk = &pk * p;
                for i in 0..len {
                    let d = &divs[i] * &pk;
                    divs.push(d);
                }
            }
        }
        divs.sort_by(prime_order);
        Ok(divs)
    }

    /// `|(O/βO)^×|`, the product of `N(π)^(k-1) (N(π)-1)` over `π^k ∥ β`.
    pub fn unit_group_order(&self) -> Result<BigUint, GaussError> {
        if !self.is_odd() {
            return Err(GaussError::NotOdd);
        }
        let fac = self.factor()?;
        let mut order = BigUint::one();
        for (p, e) in &fac.factors {
            let n = p.norm().into_parts().1;
            order *= num_traits::pow(n.clone(), (*e - 1) as usize) * (n - 1u32);
        }
        Ok(order)
    }

    /// Order of `self` in `(O/mO)^×`.
    pub fn multiplicative_order(&self, m: &GaussInt) -> Result<BigUint, GaussError> {
        if !m.is_odd() {
            return Err(GaussError::NotOdd);
        }
        if !self.gcd(m)?.is_unit() {
            return Err(GaussError::NotCoprime);
        }
        let h = m.unit_group_order()?;
        let mut t = h.clone();
        let is_one = |e: &BigUint| (&self.pow_mod(e, m) - &GaussInt::one()).rem(m).is_zero();
        for (q, _) in factor_big(&h)? {
            let q = BigUint::from(q);
            while (&t % &q).is_zero() && is_one(&(&t / &q)) {
                t /= &q;
            }
        }
        Ok(t)
    }

    /// Representatives of `O/βO`: `a + bi` with `0 <= a < N/g`, `0 <= b < g`,
    /// where `g` is the rational content of `β`.
    pub fn residues(&self) -> Vec<GaussInt> {
        assert!(!self.is_zero());
        let g = Integer::gcd(&self.re, &self.im).to_u64().expect("content fits u64");
        let n = self.norm().to_u64().expect("norm fits u64");
        let mut out = Vec::with_capacity(n as usize);
        for b in 0..g {
            for a in 0..n / g {
                out.push(GaussInt::new(a, b));
            }
        }
        out
    }

    /// Representatives of `(O/βO)^×` drawn from [`GaussInt::residues`].
    pub fn unit_residues(&self) -> Vec<GaussInt> {
        self.residues()
            .into_iter()
            .filter(|a| raw_gcd(a.clone(), self.clone()).is_unit())
            .collect()
    }
}

/// Ordering used for factor and divisor lists: norm, then real part, then
/// imaginary part descending.
pub fn prime_order(a: &GaussInt, b: &GaussInt) -> Ordering {
    (a.norm(), &a.re, Reverse(&a.im)).cmp(&(b.norm(), &b.re, Reverse(&b.im)))
}

fn raw_gcd(mut a: GaussInt, mut b: GaussInt) -> GaussInt {
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a
}

fn canonical_gcd_form(g: GaussInt) -> GaussInt {
    let mut g = g;
    let mut k = 0u64;
    let opi = GaussInt::one_plus_i();
    while !g.is_zero() && !g.is_odd() {
        g = g.exact_div(&opi).unwrap();
        k += 1;
    }
    let odd = g.normalize().map(|p| p.1).unwrap_or(g);
    &opi.pow(k) * &odd
}

fn factor_big(n: &BigUint) -> Result<Vec<(u64, u32)>, GaussError> {
    match n.to_u64() {
        Some(v) => Ok(arith::factor_u64(v)),
        None => Err(GaussError::TooLarge(n.to_string())),
    }
}

/// Normalized prime above a rational prime `p ≡ 1 (mod 4)`.
fn split_prime_factor(p: u64) -> GaussInt {
    let r = arith::sqrt_neg_one(p);
    let g = raw_gcd(GaussInt::new(p, 0), GaussInt::new(r, 1));
    g.normalize().expect("split primes are odd").1
}

/// Factorization of a rational prime in `Z[i]`, as normalized primes (or
/// `1+i`) with exponents; the unit is left implicit.
fn rational_prime_factors(p: u64) -> Vec<(GaussInt, u32)> {
    if p == 2 {
        alloc::vec![(GaussInt::one_plus_i(), 2)]
    } else if p % 4 == 3 {
        alloc::vec![(GaussInt::new(-(p as i64), 0), 1)]
    } else {
        let pi = split_prime_factor(p);
        let pibar = pi.conj().normalize().unwrap().1;
        alloc::vec![(pi, 1), (pibar, 1)]
    }
}

/// Normalized primes of norm at most `bound`, sorted by [`prime_order`].
pub fn normalized_primes_up_to(bound: u64) -> Vec<GaussInt> {
    let mut out: Vec<GaussInt> = Vec::new();
    let mut p = 3u64;
    while p <= bound {
        if arith::is_prime_u64(p) {
            if p % 4 == 3 {
                if p * p <= bound {
                    out.push(GaussInt::new(-(p as i64), 0));
                }
            } else {
                let pi = split_prime_factor(p);
                out.push(pi.conj().normalize().unwrap().1);
                out.push(pi);
            }
        }
        p += 2;
    }
    out.sort_by(prime_order);
    out
}

/// Normalized odd Gaussian integers of norm at most `bound` (one per
/// associate class, including 1), sorted by [`prime_order`].
pub fn normalized_odd_up_to(bound: u64) -> Vec<GaussInt> {
    let r = (bound as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for re in -r..=r {
        for im in -r..=r {
            let z = GaussInt::new(re, im);
            if z.norm() <= BigInt::from(bound) && z.is_normalized() {
                out.push(z);
            }
        }
    }
    out.sort_by(prime_order);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussFactorization {
    pub unit: GaussInt,
    pub factors: Vec<(GaussInt, u32)>,
}

impl GaussFactorization {
    pub fn product(&self) -> GaussInt {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(*e as u64))
    }

    /// The single prime when the factored element is a unit times a prime
    /// power.
    pub fn prime_power_base(&self) -> Option<&GaussInt> {
        match self.factors.as_slice() {
            [(p, _)] => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (&self.re, &self.im);
        if im.is_zero() {
            return write!(f, "{re}");
        }
        let im_abs = im.abs();
        let im_str = if im_abs.is_one() { String::new() } else { im_abs.to_string() };
        if re.is_zero() {
            let sign = if im.is_negative() { "-" } else { "" };
            write!(f, "{sign}{im_str}i")
        } else {
            let sign = if im.is_negative() { '-' } else { '+' };
            write!(f, "{re}{sign}{im_str}i")
        }
    }
}

impl FromStr for GaussInt {
    type Err = ParseGaussError;

    /// Grammar: `sign? digits? ('+'|'-') digits? 'i' | sign? digits? 'i' | sign? digits`,
    /// whitespace ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseGaussError(s.to_string());
        // whitespace may separate tokens but not split a digit run
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.windows(2).any(|w| {
            w[0].ends_with(|c: char| c.is_ascii_digit()) && w[1].starts_with(|c: char| c.is_ascii_digit())
        }) {
            return Err(err());
        }
        let t: String = toks.concat();
        if t.is_empty() {
            return Err(err());
        }
        let parse_int = |body: &str| -> Result<BigInt, ParseGaussError> {
            if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            body.parse::<BigInt>().map_err(|_| err())
        };
        let signed = |sign: Option<char>, v: BigInt| if sign == Some('-') { -v } else { v };
        let Some(body) = t.strip_suffix('i') else {
            let (sign, digits) = split_sign(&t);
            return Ok(GaussInt::new(signed(sign, parse_int(digits)?), 0));
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(k, _)| k)
            .last();
        let (re_part, im_part) = match split {
            Some(k) => (Some(&body[..k]), &body[k..]),
            None => (None, body),
        };
        let re = match re_part {
            Some(r) => {
                let (sign, digits) = split_sign(r);
                signed(sign, parse_int(digits)?)
            }
            None => BigInt::zero(),
        };
        let (sign, digits) = split_sign(im_part);
        let im = if digits.is_empty() { BigInt::one() } else { parse_int(digits)? };
        if re_part.is_some() && sign.is_none() {
            return Err(err());
        }
        Ok(GaussInt::new(re, signed(sign, im)))
    }
}

fn split_sign(s: &str) -> (Option<char>, &str) {
    match s.chars().next() {
        Some(c @ ('+' | '-')) => (Some(c), &s[1..]),
        _ => (None, s),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $trait<&'b GaussInt> for &'a GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'b GaussInt) -> GaussInt {
                let f: fn(&GaussInt, &GaussInt) -> GaussInt = $body;
                f(self, rhs)
            }
        }
        impl $trait<GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: GaussInt) -> GaussInt {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $trait<&'b GaussInt> for GaussInt {
            type Output = GaussInt;
            fn $method(self, rhs: &'b GaussInt) -> GaussInt {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| GaussInt::new(&a.re + &b.re, &a.im + &b.im));
forward_binop!(Sub, sub, |a, b| GaussInt::new(&a.re - &b.re, &a.im - &b.im));
forward_binop!(Mul, mul, |a, b| {
    if b.im.is_zero() {
        return GaussInt::new(&a.re * &b.re, &a.im * &b.re);
    }
    if a.im.is_zero() {
        return GaussInt::new(&a.re * &b.re, &a.re * &b.im);
    }
    GaussInt::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
});

impl AddAssign<&GaussInt> for GaussInt {
    fn add_assign(&mut self, rhs: &GaussInt) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussInt> for GaussInt {
    fn sub_assign(&mut self, rhs: &GaussInt) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussInt> for GaussInt {
    fn mul_assign(&mut self, rhs: &GaussInt) {
        *self = &*self * rhs;
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-&self.re, -&self.im)
    }
}

impl From<i64> for GaussInt {
    fn from(v: i64) -> Self {
        GaussInt::new(v, 0)
    }
}

impl From<BigInt> for GaussInt {
    fn from(v: BigInt) -> Self {
        GaussInt::new(v, 0)
    }
}
