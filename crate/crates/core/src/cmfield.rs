//! Complex multiplication on the lemniscatic sine, computed symbolically.
//!
//! A point `(X, Y)` holds `φ(βz)` and `φ′(βz)` as elements of the function
//! field `Q(i)(x)[y]/(y² - 1 + x⁴)` where `x = φ(z)` and `y = φ′(z)`.
//! Points are combined with the addition law of `φ`; the derivative of the
//! sum is obtained by carrying dual numbers through the same formula, using
//! `d/dz φ = φ′` and `d/dz φ′ = -2φ³`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::ToPrimitive;

use crate::gaussint::GaussInt;
use crate::zipoly::ZiPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CmError {
    #[error("argument is not odd (divisible by 1+i)")]
    NotOdd,
    #[error("addition-law denominator vanishes identically")]
    DegeneratePair,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// A reduced quotient of polynomials over `Z[i]`.
///
/// Numerator and denominator are coprime over `Q(i)`, have no common scalar
/// factor, and the denominator's leading coefficient is its canonical
/// associate, so equal functions have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: ZiPoly,
    den: ZiPoly,
}

impl RatFunc {
    /// Reduce `num/den`; panics if `den` is zero.
    pub fn new(num: ZiPoly, den: ZiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (_, n, d) = num.gcd_cofactors(&den);
        RatFunc::from_coprime(n, d)
    }

    /// Scalar normalization of an already coprime pair.
    fn from_coprime(num: ZiPoly, den: ZiPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let c = num.content().gcd(&den.content()).expect("nonzero contents");
        let (num, den) = if c.is_one() {
            (num, den)
        } else {
            (num.div_scalar(&c).unwrap(), den.div_scalar(&c).unwrap())
        };
        let (u, _) = den.leading_coeff().unwrap().canonical_associate();
        let k = u.unit_exponent().unwrap() as i64;
        if k == 0 {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: num.mul_unit(k),
                den: den.mul_unit(k),
            }
        }
    }

    pub fn from_poly(p: ZiPoly) -> Self {
        RatFunc::from_coprime(p, ZiPoly::one())
    }

    pub fn zero() -> Self {
        RatFunc {
            num: ZiPoly::zero(),
            den: ZiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(ZiPoly::one())
    }

    pub fn x() -> Self {
        RatFunc::from_poly(ZiPoly::x())
    }

    pub fn num(&self) -> &ZiPoly {
        &self.num
    }

    pub fn den(&self) -> &ZiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul_unit(&self, k: i64) -> RatFunc {
        RatFunc {
            num: self.num.mul_unit(k),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &GaussInt) -> RatFunc {
        RatFunc::from_coprime(self.num.scale(c), self.den.clone())
    }

    pub fn recip(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn square(&self) -> RatFunc {
        RatFunc {
            num: self.num.square(),
            den: self.den.square(),
        }
    }

    pub fn checked_div(&self, other: &RatFunc) -> Option<RatFunc> {
        Some(self * &other.recip()?)
    }

    /// `self(a/b)` written over a common denominator, i.e. the pair
    /// `(b^deg * num(a/b), b^deg * den(a/b))` reduced.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        let d = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let n = homogenize(&self.num, &inner.num, &inner.den, d);
        let m = homogenize(&self.den, &inner.num, &inner.den, d);
        RatFunc::new(n, m)
    }
}

/// `b^d p(a/b)` for `d >= deg p`.
fn homogenize(p: &ZiPoly, a: &ZiPoly, b: &ZiPoly, d: usize) -> ZiPoly {
    let mut bpow = Vec::with_capacity(d + 1);
    bpow.push(ZiPoly::one());
    for k in 1..=d {
        bpow.push(&bpow[k - 1] * b);
    }
    let mut acc = ZiPoly::zero();
    for j in (0..=d).rev() {
        acc = &(&acc * a) + &bpow[d - j].scale(&p.coeff(j));
    }
    acc
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        let (_, bg, dg) = self.den.gcd_cofactors(&rhs.den);
        let num = &(&self.num * &dg) + &(&rhs.num * &bg);
        RatFunc::new(num, &self.den * &dg)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let (_, a, d) = self.num.gcd_cofactors(&rhs.den);
        let (_, c, b) = rhs.num.gcd_cofactors(&self.den);
        RatFunc::from_coprime(&a * &c, &b * &d)
    }
}

/// `a + b y` with `y² = 1 - x⁴`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElem {
    pub a: RatFunc,
    pub b: RatFunc,
}

fn one_minus_x4() -> RatFunc {
    RatFunc::from_poly(ZiPoly::from_ints(&[1, 0, 0, 0, -1]))
}

impl FieldElem {
    pub fn new(a: RatFunc, b: RatFunc) -> Self {
        FieldElem { a, b }
    }

    pub fn from_ratfunc(a: RatFunc) -> Self {
        FieldElem::new(a, RatFunc::zero())
    }

    pub fn zero() -> Self {
        FieldElem::from_ratfunc(RatFunc::zero())
    }

    pub fn one() -> Self {
        FieldElem::from_ratfunc(RatFunc::one())
    }

    pub fn x() -> Self {
        FieldElem::from_ratfunc(RatFunc::x())
    }

    pub fn y() -> Self {
        FieldElem::new(RatFunc::zero(), RatFunc::one())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// True when the `y` part vanishes.
    pub fn is_y_free(&self) -> bool {
        self.b.is_zero()
    }

    pub fn mul_unit(&self, k: i64) -> FieldElem {
        FieldElem::new(self.a.mul_unit(k), self.b.mul_unit(k))
    }

    pub fn scale(&self, c: &GaussInt) -> FieldElem {
        FieldElem::new(self.a.scale(c), self.b.scale(c))
    }

    pub fn square(&self) -> FieldElem {
        self * self
    }

    /// Multiplicative inverse via the conjugate `a - b y`.
    pub fn recip(&self) -> Option<FieldElem> {
        if self.b.is_zero() {
            return Some(FieldElem::from_ratfunc(self.a.recip()?));
        }
        let norm = &self.a.square() - &(&self.b.square() * &one_minus_x4());
        let inv = norm.recip()?;
        Some(FieldElem::new(&self.a * &inv, -&(&self.b * &inv)))
    }

    pub fn checked_div(&self, other: &FieldElem) -> Option<FieldElem> {
        Some(self * &other.recip()?)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(-&self.a, -&self.b)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let a = if bd.is_zero() { ac } else { &ac + &(&bd * &one_minus_x4()) };
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        FieldElem::new(a, b)
    }
}

/// Value and first derivative, for differentiating the addition law.
#[derive(Debug, Clone)]
struct Dual {
    v: FieldElem,
    d: FieldElem,
}

impl Dual {
    fn constant(v: FieldElem) -> Self {
        Dual { v, d: FieldElem::zero() }
    }

    fn add(&self, o: &Dual) -> Dual {
        Dual {
            v: &self.v + &o.v,
            d: &self.d + &o.d,
        }
    }

    fn mul(&self, o: &Dual) -> Dual {
        Dual {
            v: &self.v * &o.v,
            d: &(&self.v * &o.d) + &(&self.d * &o.v),
        }
    }
}

/// `(φ(βz), φ′(βz))` as a function of `x = φ(z)`, `y = φ′(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CMPoint {
    pub x: FieldElem,
    pub y: FieldElem,
}

impl CMPoint {
    /// True iff `Y² + X⁴ = 1` holds identically.
    pub fn on_curve(&self) -> bool {
        let x2 = self.x.square();
        (&self.y.square() + &x2.square()) == FieldElem::one()
    }
}

/// `(x, y)`, the point for `β = 1`.
pub fn point_base() -> CMPoint {
    CMPoint {
        x: FieldElem::x(),
        y: FieldElem::y(),
    }
}

/// `(0, 1) = (φ(0), φ′(0))`.
pub fn point_zero() -> CMPoint {
    CMPoint {
        x: FieldElem::zero(),
        y: FieldElem::one(),
    }
}

/// `(X, Y) ↦ (iX, Y)`.
pub fn point_i_mult(p: &CMPoint) -> CMPoint {
    CMPoint {
        x: p.x.mul_unit(1),
        y: p.y.clone(),
    }
}

/// `(X, Y) ↦ (-X, Y)`.
pub fn point_neg(p: &CMPoint) -> CMPoint {
    CMPoint {
        x: -&p.x,
        y: p.y.clone(),
    }
}

/// Numerator and denominator of the addition law with `X1, Y1` carried as
/// dual numbers.
fn addition_law(p: &CMPoint, q: &CMPoint) -> (Dual, Dual) {
    let x1 = Dual {
        v: p.x.clone(),
        d: p.y.clone(),
    };
    let x1_cubed = &p.x.square() * &p.x;
    let y1 = Dual {
        v: p.y.clone(),
        d: x1_cubed.scale(&GaussInt::from(-2)),
    };
    let x2 = Dual::constant(q.x.clone());
    let y2 = Dual::constant(q.y.clone());
    let n = x1.mul(&y2).add(&x2.mul(&y1));
    let x1sq = x1.mul(&x1);
    let x2sq = x2.mul(&x2);
    let d = Dual::constant(FieldElem::one()).add(&x1sq.mul(&x2sq));
    (n, d)
}

/// Sum of two points under the addition law of `φ`.
pub fn point_add(p: &CMPoint, q: &CMPoint) -> Result<CMPoint, CmError> {
    let (n, d) = addition_law(p, q);
    if d.v.is_zero() {
        return Err(CmError::DegeneratePair);
    }
    let x3 = n.v.checked_div(&d.v).ok_or(CmError::DegeneratePair)?;
    let y3 = (&n.d - &(&x3 * &d.d))
        .checked_div(&d.v)
        .ok_or(CmError::DegeneratePair)?;
    Ok(CMPoint { x: x3, y: y3 })
}

/// X-coordinate of a sum only.
fn sum_x(p: &CMPoint, q: &CMPoint) -> Result<FieldElem, CmError> {
    let n = &(&p.x * &q.y) + &(&q.x * &p.y);
    let d = &FieldElem::one() + &(&p.x.square() * &q.x.square());
    n.checked_div(&d).ok_or(CmError::DegeneratePair)
}

/// `n`-fold sum by double-and-add.
pub fn point_int_mult(n: u64, p: &CMPoint) -> Result<CMPoint, CmError> {
    let mut acc = point_zero();
    for bit in (0..64 - n.leading_zeros()).rev() {
        acc = point_add(&acc, &acc)?;
        if (n >> bit) & 1 == 1 {
            acc = point_add(&acc, p)?;
        }
    }
    Ok(acc)
}

/// `M_β(x) = i^ε x P(x⁴) / Q(x⁴)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultMap {
    pub beta: GaussInt,
    pub epsilon: u8,
    pub p: ZiPoly,
    pub q: ZiPoly,
}

impl MultMap {
    /// `(N(β) - 1) / 4`.
    pub fn degree(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    pub fn numerator(&self) -> ZiPoly {
        self.p.compose_x4().shift(1).mul_unit(self.epsilon as i64)
    }

    pub fn denominator(&self) -> ZiPoly {
        self.q.compose_x4()
    }

    pub fn as_ratfunc(&self) -> RatFunc {
        RatFunc::new(self.numerator(), self.denominator())
    }

    /// `x P(x⁴)`.
    pub fn division_poly(&self) -> ZiPoly {
        self.p.compose_x4().shift(1)
    }

    /// `M_self ∘ M_inner` as a reduced rational function.
    pub fn compose(&self, inner: &MultMap) -> RatFunc {
        self.as_ratfunc().compose(&inner.as_ratfunc())
    }
}

/// Memo table for the multiples `k·(x, y)` and for computed maps.
#[derive(Debug, Default)]
pub struct CmCache {
    multiples: BTreeMap<u64, CMPoint>,
    maps: BTreeMap<GaussInt, MultMap>,
}

fn inconsistent(beta: &GaussInt, what: &str) -> CmError {
    CmError::InternalInconsistency(format!("beta = {beta}: {what}"))
}

impl CmCache {
    pub fn new() -> Self {
        CmCache::default()
    }

    /// `k·(x, y)` for `k >= 0`, memoized; even `k` doubles `k/2`, odd `k`
    /// adds the base point to `(k-1)·(x, y)`.
    pub fn multiple(&mut self, k: u64) -> Result<CMPoint, CmError> {
        if let Some(p) = self.multiples.get(&k) {
            return Ok(p.clone());
        }
        let p = match k {
            0 => point_zero(),
            1 => point_base(),
            _ if k.is_multiple_of(2) => {
                let h = self.multiple(k / 2)?;
                point_add(&h, &h)?
            }
            _ => {
                let prev = self.multiple(k - 1)?;
                point_add(&prev, &point_base())?
            }
        };
        if !p.on_curve() {
            return Err(CmError::InternalInconsistency(format!(
                "{k}-fold point violates Y^2 = 1 - X^4"
            )));
        }
        self.multiples.insert(k, p.clone());
        Ok(p)
    }

    fn signed_multiple(&mut self, k: i64) -> Result<CMPoint, CmError> {
        let p = self.multiple(k.unsigned_abs())?;
        Ok(if k < 0 { point_neg(&p) } else { p })
    }

    /// The X-coordinate of `β·(x, y)` for `β = m + ni`, as
    /// `m·(x, y) ⊕ i·(n·(x, y))`.
    pub fn beta_x(&mut self, beta: &GaussInt) -> Result<FieldElem, CmError> {
        let m = beta.re.to_i64().ok_or_else(|| inconsistent(beta, "real part too large"))?;
        let n = beta.im.to_i64().ok_or_else(|| inconsistent(beta, "imaginary part too large"))?;
        let a = self.signed_multiple(m)?;
        if n == 0 {
            return Ok(a.x);
        }
        let b = point_i_mult(&self.signed_multiple(n)?);
        if m == 0 {
            return Ok(b.x);
        }
        sum_x(&a, &b)
    }

    /// The multiplication map of an odd `β`, with every structural claim
    /// about it checked before returning.
    pub fn mult_map(&mut self, beta: &GaussInt) -> Result<MultMap, CmError> {
        if !beta.is_odd() {
            return Err(CmError::NotOdd);
        }
        if let Some(m) = self.maps.get(beta) {
            return Ok(m.clone());
        }
        let x = self.beta_x(beta)?;
        if !x.is_y_free() {
            return Err(inconsistent(beta, "X has a nonzero y-part"));
        }
        let mm = extract(beta, &x.a)?;
        verify_mult_map(&mm)?;
        self.maps.insert(beta.clone(), mm.clone());
        Ok(mm)
    }

    pub fn division_poly(&mut self, beta: &GaussInt) -> Result<ZiPoly, CmError> {
        Ok(self.mult_map(beta)?.division_poly())
    }
}

/// Read `(ε, P, Q)` off the reduced form `i^ε x P(x⁴) / Q(x⁴)`.
fn extract(beta: &GaussInt, r: &RatFunc) -> Result<MultMap, CmError> {
    let num = r.num();
    let den = r.den();
    if num.x_valuation() != 1 {
        return Err(inconsistent(beta, "numerator is not x times a polynomial in x^4"));
    }
    let pe = num
        .unshift(1)
        .deflate(4)
        .ok_or_else(|| inconsistent(beta, "numerator is not x times a polynomial in x^4"))?;
    let q = den
        .deflate(4)
        .ok_or_else(|| inconsistent(beta, "denominator is not a polynomial in x^4"))?;
    let eps = pe
        .leading_coeff()
        .and_then(GaussInt::unit_exponent)
        .ok_or_else(|| inconsistent(beta, "leading coefficient of x P(x^4) is not a unit"))?;
    let p = pe.mul_unit(-(eps as i64));
    Ok(MultMap {
        beta: beta.clone(),
        epsilon: eps,
        p,
        q,
    })
}

/// Check monicity, degrees, the reversal symmetry, coprimality, the constant
/// term and unit class, squarefreeness of `x P(x⁴)`, and the Eisenstein shape
/// at prime `β`.
pub fn verify_mult_map(m: &MultMap) -> Result<(), CmError> {
    let beta = &m.beta;
    let bad = |what: &str| Err(inconsistent(beta, what));
    let norm = beta.norm().to_u64().ok_or_else(|| inconsistent(beta, "norm too large"))?;
    let d = ((norm - 1) / 4) as usize;
    if !m.p.is_monic() {
        return bad("P is not monic");
    }
    if m.p.degree() != Some(d) || m.q.degree() != Some(d) {
        return bad("deg P or deg Q differs from (N(beta)-1)/4");
    }
    if m.q != m.p.reverse(d) {
        return bad("Q is not the reversal of P");
    }
    if !m.p.gcd(&m.q).is_one() {
        return bad("P and Q are not coprime");
    }
    let expected_eps = beta.unit_class().map_err(|_| inconsistent(beta, "not odd"))?;
    if m.epsilon != expected_eps {
        return bad("epsilon differs from the unit class of beta");
    }
    let normalized = beta.mul_unit(-(m.epsilon as i64));
    if m.p.coeff(0) != normalized {
        return bad("P(0) differs from the normalized associate of beta");
    }
    if !m.division_poly().is_squarefree() {
        return bad("x P(x^4) has a repeated root");
    }
    if beta.is_prime() && !m.p.is_eisenstein_at(&normalized) {
        return bad("P is not Eisenstein at the prime beta");
    }
    Ok(())
}

/// One-shot [`CmCache::mult_map`].
pub fn mult_map(beta: &GaussInt) -> Result<MultMap, CmError> {
    CmCache::new().mult_map(beta)
}

/// One-shot [`CmCache::division_poly`].
pub fn division_poly(beta: &GaussInt) -> Result<ZiPoly, CmError> {
    CmCache::new().division_poly(beta)
}
