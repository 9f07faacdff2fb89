//! Polynomial gcd over `Q(i)` by reduction modulo split primes.
//!
//! Each 62-bit prime `p ≡ 1 (mod 4)` carries two ring maps `Z[i] -> F_p`
//! (sending `i` to `r` and to `-r`). The two monic modular gcds, scaled by the
//! image of the gcd of leading coefficients, determine the real and imaginary
//! parts of each coefficient mod `p`. Chinese remaindering continues until the
//! symmetric lift stabilizes and the candidate divides both inputs exactly.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{add_mod, inv_mod_prime, mul_mod, split_prime, sub_mod};
use crate::fq::{self, big_mod, Elem, Field};
use crate::gaussint::GaussInt;
use crate::zipoly::ZiPoly;

pub(crate) fn gcd_cofactors(f: &ZiPoly, g: &ZiPoly) -> (ZiPoly, ZiPoly, ZiPoly) {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return (ZiPoly::zero(), ZiPoly::zero(), ZiPoly::zero()),
        (true, false) => {
            let h = g.primitive_part().canonical_unit_form();
            let cg = g.exact_div(&h).expect("primitive part divides");
            return (h, ZiPoly::zero(), cg);
        }
        (false, true) => {
            let h = f.primitive_part().canonical_unit_form();
            let cf = f.exact_div(&h).expect("primitive part divides");
            return (h, cf, ZiPoly::zero());
        }
        _ => {}
    }
    let (vf, vg) = (f.x_valuation(), g.x_valuation());
    let v = vf.min(vg);
    let ff = f.unshift(vf);
    let gg = g.unshift(vg);
    let e = ff.exponent_stride().gcd(&gg.exponent_stride()).max(1);
    let ff = ff.deflate(e).unwrap();
    let gg = gg.deflate(e).unwrap();
    let (cf, cg) = (ff.content(), gg.content());
    let fp = ff.div_scalar(&cf).unwrap();
    let gp = gg.div_scalar(&cg).unwrap();
    let (h, a, b) = primitive_gcd(&fp, &gp);
    let h = h.inflate(e).shift(v);
    let a = a.inflate(e).scale(&cf).shift(vf - v);
    let b = b.inflate(e).scale(&cg).shift(vg - v);
    (h, a, b)
}

fn image(p: &ZiPoly, modulus: u64, r: u64) -> Vec<Elem> {
    let mut v: Vec<Elem> = p
        .coeffs()
        .iter()
        .map(|c| (gauss_image(c, modulus, r), 0))
        .collect();
    fq::trim(&mut v);
    v
}

fn gauss_image(c: &GaussInt, p: u64, r: u64) -> u64 {
    add_mod(big_mod(&c.re, p), mul_mod(big_mod(&c.im, p), r, p), p)
}

/// Gcd of primitive polynomials with nonzero constant terms, returned in
/// canonical unit form together with the exact cofactors.
fn primitive_gcd(a: &ZiPoly, b: &ZiPoly) -> (ZiPoly, ZiPoly, ZiPoly) {
    let trivial = || (ZiPoly::one(), a.clone(), b.clone());
    if a.is_constant() || b.is_constant() {
        return trivial();
    }
    if a == b {
        let h = a.canonical_unit_form();
        let u = a.exact_div(&h).unwrap();
        return (h, u.clone(), u);
    }
    let gamma = a
        .leading_coeff()
        .unwrap()
        .gcd(b.leading_coeff().unwrap())
        .expect("nonzero leading coefficients");
    let max_deg = a.degree().unwrap().min(b.degree().unwrap());

    let mut cur_deg = max_deg + 1;
    let mut modulus = BigInt::one();
    let mut acc_re: Vec<BigInt> = Vec::new();
    let mut acc_im: Vec<BigInt> = Vec::new();
    let mut prev: Option<Vec<GaussInt>> = None;

    for k in 0.. {
        let (p, r) = split_prime(k);
        let field = Field::prime(p);
        let roots = [r, p - r];
        let mut images: [Vec<Elem>; 2] = [Vec::new(), Vec::new()];
        let mut lucky = true;
        for (slot, &root) in roots.iter().enumerate() {
            let ia = image(a, p, root);
            let ib = image(b, p, root);
            let gi = gauss_image(&gamma, p, root);
            if ia.len() != a.coeffs().len() || ib.len() != b.coeffs().len() || gi == 0 {
                lucky = false;
                break;
            }
            let mut h = fq::gcd(&field, &ia, &ib);
            for c in h.iter_mut() {
                c.0 = mul_mod(c.0, gi, p);
            }
            images[slot] = h;
        }
        if !lucky || images[0].len() != images[1].len() {
            continue;
        }
        let d = images[0].len() - 1;
        if d == 0 {
            return trivial();
        }
        if d > cur_deg {
            continue;
        }
        if d < cur_deg {
            cur_deg = d;
            modulus = BigInt::one();
            acc_re = vec![BigInt::zero(); d + 1];
            acc_im = vec![BigInt::zero(); d + 1];
            prev = None;
        }
        let inv2 = inv_mod_prime(2, p);
        let inv2r = inv_mod_prime(mul_mod(2, r, p), p);
        let m_mod_p = big_mod(&modulus, p);
        let m_inv = inv_mod_prime(m_mod_p, p);
        for j in 0..=d {
            let (v1, v2) = (images[0][j].0, images[1][j].0);
            let re = mul_mod(add_mod(v1, v2, p), inv2, p);
            let im = mul_mod(sub_mod(v1, v2, p), inv2r, p);
            crt_step(&mut acc_re[j], &modulus, m_inv, re, p);
            crt_step(&mut acc_im[j], &modulus, m_inv, im, p);
        }
        modulus *= p;
        let half = &modulus >> 1u32;
        let lift = |x: &BigInt| if x > &half { x - &modulus } else { x.clone() };
        let lifted: Vec<GaussInt> = acc_re
            .iter()
            .zip(&acc_im)
            .map(|(re, im)| GaussInt::new(lift(re), lift(im)))
            .collect();
        if prev.as_ref() == Some(&lifted) {
            let cand = ZiPoly::new(lifted.clone()).primitive_part().canonical_unit_form();
            if let (Ok(ca), Ok(cb)) = (a.exact_div(&cand), b.exact_div(&cand)) {
                return (cand, ca, cb);
            }
        }
        prev = Some(lifted);
    }
    unreachable!("prime supply is unbounded")
}

/// One Garner step: update `x` (a residue mod `m`) to the residue mod `m*p`
/// that is congruent to `v` mod `p`.
fn crt_step(x: &mut BigInt, m: &BigInt, m_inv: u64, v: u64, p: u64) {
    let xp = big_mod(x, p);
    let t = mul_mod(sub_mod(v, xp, p), m_inv, p);
    if t != 0 {
        *x += m * t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ZiPoly {
        s.parse().unwrap()
    }

    #[test]
    fn gaussian_gcd_recovers_common_factor() {
        let h = p("(2+3i)x^3 + (1-i)x + (-5+i)");
        let a = &h * &p("x^4 + (7-2i)x + 3");
        let b = &h * &p("(3+i)x^2 - x + (1+i)");
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, h.canonical_unit_form());
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
    }

    #[test]
    fn large_coefficients_need_several_primes() {
        let big = "123456789012345678901234567890123456789";
        let h = p(&alloc::format!("x^2 + ({big}+7i)x + 1"));
        let a = &h.pow(3) * &p("x + (2-9i)");
        let b = &h.pow(2) * &p("(5i)x^3 + 11");
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, h.pow(2).canonical_unit_form());
        assert_eq!(&g * &ca, a);
        assert_eq!(&g * &cb, b);
    }

    #[test]
    fn coprime_and_degenerate_inputs() {
        assert_eq!(gcd_cofactors(&p("x+1"), &p("x+2")).0, ZiPoly::one());
        let (g, ca, cb) = gcd_cofactors(&p("3"), &p("x+2"));
        assert_eq!((g, ca, cb), (ZiPoly::one(), p("3"), p("x+2")));
        let (g, _, cb) = gcd_cofactors(&ZiPoly::zero(), &p("(2+2i)x"));
        assert_eq!(g, p("x"));
        assert_eq!(cb, p("(2+2i)"));
    }

    #[test]
    fn sparse_inputs_keep_structure() {
        let a = &p("x^8 + 3x^4 + 1") * &p("x^4 - 2");
        let b = p("x^3").pow(1) * p("x^8 + 3x^4 + 1");
        let (g, ca, cb) = gcd_cofactors(&a, &b);
        assert_eq!(g, p("x^8 + 3x^4 + 1"));
        assert_eq!(ca, p("x^4 - 2"));
        assert_eq!(cb, p("x^3"));
    }
}
