//! Ruler-and-compass constructibility of the `n`-division points of the
//! lemniscate, and its equivalence with `|(O/nO)^×|` being a power of two.

use alloc::vec::Vec;

use crate::arith::{factor_u64, is_power_of_two, is_prime_u64};
use crate::gaussint::GaussInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("{0} is not an odd positive integer")]
    NotOddInteger(u64),
}

/// Why an odd part fails to be a product of distinct Fermat primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// The prime divides `n` more than once.
    Repeated,
    /// The prime is not of the form `2^(2^m) + 1`.
    NotFermat,
}

/// `n = 2^k * p_1 ... p_m` with distinct Fermat primes, or the first prime
/// that breaks this shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FermatDecomposition {
    Decomposable { k: u32, primes: Vec<u64> },
    NotDecomposable { prime: u64, reason: Obstruction },
}

pub fn is_fermat_prime(p: u64) -> bool {
    // p - 1 = 2^e with e itself a power of two
    p >= 3 && is_power_of_two(p - 1) && is_power_of_two((p - 1).trailing_zeros() as u64) && is_prime_u64(p)
}

pub fn fermat_decomposition(n: u64) -> FermatDecomposition {
    assert!(n >= 1, "fermat_decomposition needs n >= 1");
    let k = n.trailing_zeros();
    let mut primes = Vec::new();
    for (p, e) in factor_u64(n >> k) {
        if !is_fermat_prime(p) {
            return FermatDecomposition::NotDecomposable {
                prime: p,
                reason: Obstruction::NotFermat,
            };
        }
        if e > 1 {
            return FermatDecomposition::NotDecomposable {
                prime: p,
                reason: Obstruction::Repeated,
            };
        }
        primes.push(p);
    }
    FermatDecomposition::Decomposable { k, primes }
}

pub fn is_constructible(n: u64) -> bool {
    matches!(fermat_decomposition(n), FermatDecomposition::Decomposable { .. })
}

/// `|(O/nO)^×|` for odd `n` from the product over rational primes:
/// `n² ∏ (1 - 1/p)(1 - χ(p)/p)` with `χ(p) = (-1/p)`.
pub fn integer_unit_group_order(n: u64) -> Result<u128, ConstructError> {
    if n.is_multiple_of(2) {
        return Err(ConstructError::NotOddInteger(n));
    }
    let mut order: u128 = n as u128 * n as u128;
    for (p, _) in factor_u64(n) {
        let p = p as u128;
        let chi_plus = if p % 4 == 1 { p - 1 } else { p + 1 };
        order = order / (p * p) * (p - 1) * chi_plus;
    }
    Ok(order)
}

/// True iff `|(O/nO)^×|` is a power of two.
pub fn power_of_two_test(n: u64) -> Result<bool, ConstructError> {
    if n.is_multiple_of(2) {
        return Err(ConstructError::NotOddInteger(n));
    }
    let order = GaussInt::new(n, 0).unit_group_order().expect("odd and nonzero");
    Ok(order.count_ones() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            fermat_decomposition(5),
            FermatDecomposition::Decomposable { k: 0, primes: vec![5] }
        );
        assert_eq!(
            fermat_decomposition(7),
            FermatDecomposition::NotDecomposable {
                prime: 7,
                reason: Obstruction::NotFermat
            }
        );
        assert_eq!(
            fermat_decomposition(60),
            FermatDecomposition::Decomposable { k: 2, primes: vec![3, 5] }
        );
        assert_eq!(
            fermat_decomposition(9),
            FermatDecomposition::NotDecomposable {
                prime: 3,
                reason: Obstruction::Repeated
            }
        );
    }

    #[test]
    fn constructibility_examples() {
        assert!(is_constructible(15));
        assert!(!is_constructible(9));
        assert!(is_constructible(1));
        assert!(is_constructible(65537 * 4));
        assert!(!is_fermat_prime(2_u64.pow(32) + 1));
    }

    #[test]
    fn power_of_two_examples() {
        assert_eq!(power_of_two_test(5), Ok(true));
        assert_eq!(power_of_two_test(7), Ok(false));
        assert_eq!(power_of_two_test(3), Ok(true));
        assert_eq!(power_of_two_test(4), Err(ConstructError::NotOddInteger(4)));
        assert_eq!(integer_unit_group_order(7), Ok(48));
        assert_eq!(integer_unit_group_order(3), Ok(8));
        assert_eq!(integer_unit_group_order(5), Ok(16));
        assert_eq!(integer_unit_group_order(15), Ok(128));
    }
}
