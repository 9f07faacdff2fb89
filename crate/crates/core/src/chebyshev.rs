//! Chebyshev polynomials, their monic rescaling `C_n(x) = 2 T_n(x/2)` and the
//! factors `D_k` with `C_n = ∏_{k | n} D_k` for odd `n`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{divisors_u64, factor_u64};
use crate::zipoly::ZiPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ChebError {
    #[error("{0} is not an odd positive integer")]
    NotOdd(u64),
    #[error("D_{0} is not an exact quotient")]
    NotDivisible(u64),
}

/// A polynomial over `Z[i]` whose coefficients are all rational integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(ZiPoly);

impl IntPoly {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly(ZiPoly::from_ints(coeffs))
    }

    /// `None` if some coefficient has a nonzero imaginary part.
    pub fn from_zipoly(p: ZiPoly) -> Option<Self> {
        p.is_real().then_some(IntPoly(p))
    }

    pub fn as_zipoly(&self) -> &ZiPoly {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.coeff(k).re
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.0
            .coeffs()
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.re.to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn recurrence(first: ZiPoly, second: ZiPoly, two_x: ZiPoly, n: u64) -> ZiPoly {
    if n == 0 {
        return first;
    }
    let (mut prev, mut cur) = (first, second);
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_0 = 1`, `T_1 = x`, `T_{n+1} = 2x T_n - T_{n-1}`.
pub fn chebyshev_t(n: u64) -> IntPoly {
    IntPoly(recurrence(ZiPoly::one(), ZiPoly::x(), ZiPoly::from_ints(&[0, 2]), n))
}

/// `C_n(x) = 2 T_n(x/2)`, via `C_{n+1} = x C_n - C_{n-1}` from `C_0 = 2`.
pub fn monic_c(n: u64) -> IntPoly {
    IntPoly(recurrence(ZiPoly::from_ints(&[2]), ZiPoly::x(), ZiPoly::x(), n))
}

/// `D_k` for every divisor `k` of odd `n`, with `D_1 = x` and each `D_k`
/// the quotient of `C_k` by the lower factors.
pub fn factor_d(n: u64) -> Result<BTreeMap<u64, IntPoly>, ChebError> {
    if n.is_multiple_of(2) {
        return Err(ChebError::NotOdd(n));
    }
    let mut out: BTreeMap<u64, IntPoly> = BTreeMap::new();
    for k in divisors_u64(n) {
        let d = if k == 1 {
            ZiPoly::x()
        } else {
            let mut prod = ZiPoly::one();
            for j in divisors_u64(k) {
                if j < k {
                    prod = &prod * out[&j].as_zipoly();
                }
            }
            monic_c(k).0.exact_div(&prod).map_err(|_| ChebError::NotDivisible(k))?
        };
        out.insert(k, IntPoly(d));
    }
    Ok(out)
}

/// Constant term of `D_n` against `(-1)^((p-1)/2) p` when `n = p^k`, else 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DConstantReport {
    pub n: u64,
    pub expected: i64,
    pub observed: BigInt,
}

impl DConstantReport {
    pub fn passed(&self) -> bool {
        self.observed == BigInt::from(self.expected)
    }

    /// The magnitude part of the law alone.
    pub fn magnitude_passed(&self) -> bool {
        self.observed.abs() == BigInt::from(self.expected.abs())
    }
}

pub fn expected_d_constant(n: u64) -> i64 {
    match factor_u64(n).as_slice() {
        [(p, _)] => {
            let p = *p as i64;
            if (p - 1) / 2 % 2 == 0 {
                p
            } else {
                -p
            }
        }
        _ => 1,
    }
}

pub fn verify_d_constant(n: u64) -> Result<DConstantReport, ChebError> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(ChebError::NotOdd(n));
    }
    let d = factor_d(n)?.remove(&n).expect("n divides n");
    Ok(DConstantReport {
        n,
        expected: expected_d_constant(n),
        observed: d.coeff(0),
    })
}

/// `max |sin(nθ) - (-1)^((n-1)/2) T_n(sin θ)|` over the samples.
pub fn sin_identity_check(n: u64, thetas: &[f64]) -> Result<f64, ChebError> {
    if n.is_multiple_of(2) {
        return Err(ChebError::NotOdd(n));
    }
    let t = chebyshev_t(n);
    let sign = if ((n - 1) / 2).is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(thetas
        .iter()
        .map(|&th| libm::fabs(libm::sin(n as f64 * th) - sign * t.eval_f64(libm::sin(th))))
        .fold(0.0, f64::max))
}

/// The values `2 sin(2πa/n)`, `a = 0..n`, which are the roots of `C_n`.
pub fn roots_of_c(n: u64) -> Vec<f64> {
    (0..n)
        .map(|a| 2.0 * libm::sin(2.0 * core::f64::consts::PI * a as f64 / n as f64))
        .collect()
}
