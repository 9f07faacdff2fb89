//! Polynomials over the residue fields `O/πO` and distinct-degree
//! factorization.
//!
//! A split prime `π` of norm `p` gives `F_p`, with `i` sent to a square root
//! of `-1`. An inert prime `-p` (with `p ≡ 3 mod 4`) gives `F_p[t]/(t²+1)`.
//! Field elements are pairs `(a, b)` meaning `a + b t`; in the split case `b`
//! is always zero.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{add_mod, inv_mod_prime, mul_mod, sub_mod};
use crate::gaussint::GaussInt;
use crate::zipoly::PolyError;

pub type Elem = (u64, u64);

/// Residue of a big integer modulo a word-size modulus, in `[0, p)`.
pub fn big_mod(v: &BigInt, p: u64) -> u64 {
    let mut acc: u128 = 0;
    for d in v.magnitude().iter_u64_digits().rev() {
        acc = ((acc << 64) | d as u128) % p as u128;
    }
    let r = acc as u64;
    if v.is_negative() && r != 0 {
        p - r
    } else {
        r
    }
}

/// `F_p` or `F_{p²}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub p: u64,
    pub ext: bool,
}

impl Field {
    pub fn prime(p: u64) -> Self {
        Field { p, ext: false }
    }

    /// Number of elements.
    pub fn size(&self) -> u128 {
        if self.ext {
            self.p as u128 * self.p as u128
        } else {
            self.p as u128
        }
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        (add_mod(a.0, b.0, self.p), add_mod(a.1, b.1, self.p))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        (sub_mod(a.0, b.0, self.p), sub_mod(a.1, b.1, self.p))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.sub((0, 0), a)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p;
        if !self.ext {
            return (mul_mod(a.0, b.0, p), 0);
        }
        let re = sub_mod(mul_mod(a.0, b.0, p), mul_mod(a.1, b.1, p), p);
        let im = add_mod(mul_mod(a.0, b.1, p), mul_mod(a.1, b.0, p), p);
        (re, im)
    }

    pub fn inv(&self, a: Elem) -> Elem {
        let p = self.p;
        if !self.ext {
            return (inv_mod_prime(a.0, p), 0);
        }
        let n = add_mod(mul_mod(a.0, a.0, p), mul_mod(a.1, a.1, p), p);
        let ni = inv_mod_prime(n, p);
        (mul_mod(a.0, ni, p), mul_mod(sub_mod(0, a.1, p), ni, p))
    }

    #[inline]
    pub fn is_zero(a: Elem) -> bool {
        a == (0, 0)
    }
}

pub(crate) fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| Field::is_zero(*c)) {
        v.pop();
    }
}

/// Remainder of `a` modulo a nonzero `b`.
pub(crate) fn rem(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    divrem(f, a, b).1
}

pub(crate) fn divrem(f: &Field, a: &[Elem], b: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv_lc = f.inv(b[db]);
    let mut q = vec![(0, 0); r.len() - db];
    for k in (db..r.len()).rev() {
        let c = r[k];
        if Field::is_zero(c) {
            continue;
        }
        let t = f.mul(c, inv_lc);
        q[k - db] = t;
        for j in 0..=db {
            r[k - db + j] = f.sub(r[k - db + j], f.mul(t, b[j]));
        }
    }
    r.truncate(db);
    trim(&mut r);
    (q, r)
}

pub(crate) fn make_monic(f: &Field, a: &mut [Elem]) {
    if let Some(&lc) = a.last() {
        let inv = f.inv(lc);
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
}

/// Monic gcd; the gcd of two zeros is zero.
pub(crate) fn gcd(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    make_monic(f, &mut x);
    x
}

pub(crate) fn mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![(0, 0); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if Field::is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn derivative(f: &Field, a: &[Elem]) -> Vec<Elem> {
    let mut out: Vec<Elem> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| f.mul(c, ((k as u64) % f.p, 0)))
        .collect();
    trim(&mut out);
    out
}

/// `base^e mod m` for a nonzero modulus.
fn powmod(f: &Field, base: &[Elem], mut e: u128, m: &[Elem]) -> Vec<Elem> {
    let mut acc = rem(f, &[(1, 0)], m);
    let mut b = rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(f, &mul(f, &acc, &b), m);
        }
        e >>= 1;
        if e > 0 {
            b = rem(f, &mul(f, &b, &b), m);
        }
    }
    acc
}

/// A polynomial over `O/πO`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqPoly {
    modulus: GaussInt,
    field: Field,
    /// image of `i` in `F_p` for split primes
    root: u64,
    coeffs: Vec<Elem>,
}

impl FqPoly {
    /// Zero polynomial over `O/πO`; `π` must be a normalized odd prime.
    pub fn zero_over(pi: &GaussInt) -> Result<Self, PolyError> {
        let bad = || PolyError::BadModulus(alloc::format!("{pi}"));
        if !pi.is_prime() || !pi.is_normalized() {
            return Err(bad());
        }
        let norm = pi.norm().to_u64().ok_or_else(bad)?;
        if pi.im.sign() == num_bigint::Sign::NoSign {
            let p = pi.re.magnitude().to_u64().ok_or_else(bad)?;
            return Ok(FqPoly {
                modulus: pi.clone(),
                field: Field { p, ext: true },
                root: 0,
                coeffs: Vec::new(),
            });
        }
        // π = m + n i with n invertible mod p, so i ≡ -m/n
        let m = big_mod(&pi.re, norm);
        let n = big_mod(&pi.im, norm);
        let root = mul_mod(sub_mod(0, m, norm), inv_mod_prime(n, norm), norm);
        Ok(FqPoly {
            modulus: pi.clone(),
            field: Field::prime(norm),
            root,
            coeffs: Vec::new(),
        })
    }

    /// Polynomial over the prime field `F_p` itself, for a rational prime `p`
    /// (not necessarily a residue field of `Z[i]`).
    pub fn over_prime_field(p: u64, coeffs: &[u64]) -> Result<Self, PolyError> {
        if !crate::arith::is_prime_u64(p) {
            return Err(PolyError::BadModulus(alloc::format!("{p}")));
        }
        let z = FqPoly {
            modulus: GaussInt::new(p, 0),
            field: Field::prime(p),
            root: 0,
            coeffs: Vec::new(),
        };
        Ok(z.with_coeffs(coeffs.iter().map(|&c| (c % p, 0)).collect()))
    }

    pub fn reduce_elem(&self, c: &GaussInt) -> Elem {
        let p = self.field.p;
        if self.field.ext {
            (big_mod(&c.re, p), big_mod(&c.im, p))
        } else {
            let a = big_mod(&c.re, p);
            let b = big_mod(&c.im, p);
            (add_mod(a, mul_mod(b, self.root, p), p), 0)
        }
    }

    pub(crate) fn with_coeffs(&self, mut coeffs: Vec<Elem>) -> FqPoly {
        trim(&mut coeffs);
        FqPoly {
            modulus: self.modulus.clone(),
            field: self.field,
            root: self.root,
            coeffs,
        }
    }

    pub fn from_gauss(pi: &GaussInt, coeffs: &[GaussInt]) -> Result<Self, PolyError> {
        let z = FqPoly::zero_over(pi)?;
        let c = coeffs.iter().map(|c| z.reduce_elem(c)).collect();
        Ok(z.with_coeffs(c))
    }

    pub fn modulus(&self) -> &GaussInt {
        &self.modulus
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> FqPoly {
        self.with_coeffs(derivative(&self.field, &self.coeffs))
    }

    pub fn gcd(&self, other: &FqPoly) -> FqPoly {
        self.with_coeffs(gcd(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn mul(&self, other: &FqPoly) -> FqPoly {
        self.with_coeffs(mul(&self.field, &self.coeffs, &other.coeffs))
    }

    pub fn monic(&self) -> FqPoly {
        let mut c = self.coeffs.clone();
        make_monic(&self.field, &mut c);
        self.with_coeffs(c)
    }

    /// True iff `gcd(f, f') = 1`; zero is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Distinct-degree factorization: pairs `(d, product of the irreducible
    /// factors of degree d)`, ascending in `d`, buckets monic.
    pub fn distinct_degree_factorization(&self) -> Result<Vec<(usize, FqPoly)>, PolyError> {
        if !self.is_squarefree() {
            return Err(PolyError::NotSquarefree);
        }
        let f = &self.field;
        let q = f.size();
        let mut rest = self.monic().coeffs;
        let x: Vec<Elem> = vec![(0, 0), (1, 0)];
        let mut h = x.clone();
        let mut out = Vec::new();
        let mut d = 0usize;
        while rest.len() > 1 {
            d += 1;
            if 2 * d > rest.len() - 1 {
                out.push((rest.len() - 1, self.with_coeffs(rest)));
                break;
            }
            h = powmod(f, &h, q, &rest);
            let mut hx = h.clone();
            hx.resize(hx.len().max(2), (0, 0));
            hx[1] = f.sub(hx[1], (1, 0));
            let g = gcd(f, &rest, &hx);
            if g.len() > 1 {
                rest = divrem(f, &rest, &g).0;
                h = rem(f, &h, &rest);
                out.push((d, self.with_coeffs(g)));
            }
        }
        Ok(out)
    }

    /// Degrees of the irreducible factors, ascending.
    pub fn factor_degrees(&self) -> Result<Vec<usize>, PolyError> {
        let mut degs = Vec::new();
        for (d, g) in self.distinct_degree_factorization()? {
            let n = g.degree().unwrap_or(0) / d;
            degs.extend(core::iter::repeat_n(d, n));
        }
        Ok(degs)
    }
}
