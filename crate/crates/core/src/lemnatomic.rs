//! Lemnatomic polynomials `Λ_β` and checks of their degree, constant term,
//! divisor decomposition and Frobenius factorization patterns.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::cmfield::{CmCache, CmError};
use crate::gaussint::{normalized_primes_up_to, GaussError, GaussInt};
use crate::zipoly::{PolyError, ZiPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LemnError {
    #[error("argument is not odd (divisible by 1+i)")]
    NotOdd,
    #[error("argument is a unit")]
    Unit,
    #[error("{0} is not a normalized odd prime")]
    NotNormalizedPrime(String),
    #[error("the prime divides beta")]
    NotCoprime,
    #[error("the polynomial is not separable modulo the prime")]
    NotSeparable,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error(transparent)]
    Gauss(#[from] GaussError),
}

impl From<CmError> for LemnError {
    fn from(e: CmError) -> Self {
        match e {
            CmError::NotOdd => LemnError::NotOdd,
            other => LemnError::InternalInconsistency(other.to_string()),
        }
    }
}

/// `Λ_β` for a normalized `β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemnatomicRecord {
    pub beta: GaussInt,
    pub poly: ZiPoly,
    pub degree: usize,
    pub constant_term: GaussInt,
}

/// Outcome of a single verification: what was expected and what was seen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub passed: bool,
    pub expected: String,
    pub observed: String,
}

impl Check {
    fn compare<T: PartialEq + core::fmt::Display>(expected: T, observed: T) -> Check {
        Check {
            passed: expected == observed,
            expected: expected.to_string(),
            observed: observed.to_string(),
        }
    }
}

/// Expected Frobenius degree against the observed factor degrees of `Λ_β`
/// modulo `π`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusPattern {
    pub prime: GaussInt,
    pub expected: u64,
    pub observed: Vec<usize>,
}

impl FrobeniusPattern {
    pub fn matches(&self) -> bool {
        self.observed.iter().all(|&d| d as u64 == self.expected)
    }

    /// A single irreducible factor of full degree.
    pub fn is_irreducible(&self) -> bool {
        self.observed.len() == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EvidenceStatus {
    /// Some prime leaves `Λ_β` irreducible, so it is irreducible outright.
    Proved,
    /// Every tested pattern matches the predicted orders.
    Consistent,
    /// One or two primes mismatched. Such a prime may divide the index of
    /// `Z[i][φ(δ_β)]` in the ring of integers, which this code cannot rule out.
    Warn,
    /// Mismatches at three or more primes.
    Refuted,
}

impl EvidenceStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvidenceStatus::Proved => "PROVED",
            EvidenceStatus::Consistent => "CONSISTENT",
            EvidenceStatus::Warn => "WARN",
            EvidenceStatus::Refuted => "REFUTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub status: EvidenceStatus,
    pub patterns: Vec<FrobeniusPattern>,
}

/// Memoized `Λ_β`, keyed by the normalized associate, with its own cache of
/// multiplication maps.
#[derive(Debug, Default)]
pub struct LemnatomicTable {
    cm: CmCache,
    polys: BTreeMap<GaussInt, ZiPoly>,
}

fn normalized(beta: &GaussInt) -> Result<GaussInt, LemnError> {
    Ok(beta.normalize().map_err(|_| LemnError::NotOdd)?.1)
}

fn nonunit_normalized(beta: &GaussInt) -> Result<GaussInt, LemnError> {
    let b = normalized(beta)?;
    if b.is_one() {
        return Err(LemnError::Unit);
    }
    Ok(b)
}

impl LemnatomicTable {
    pub fn new() -> Self {
        LemnatomicTable::default()
    }

    pub fn cm_cache(&mut self) -> &mut CmCache {
        &mut self.cm
    }

    /// `Λ_β` as the division polynomial of `β` divided by `Λ_γ` for every
    /// proper normalized divisor `γ`.
    pub fn poly(&mut self, beta: &GaussInt) -> Result<ZiPoly, LemnError> {
        let b = normalized(beta)?;
        if let Some(p) = self.polys.get(&b) {
            return Ok(p.clone());
        }
        let lam = if b.is_one() {
            ZiPoly::x()
        } else {
            let mut prod = ZiPoly::one();
            for gamma in b.normalized_divisors()? {
                if gamma != b {
                    prod = &prod * &self.poly(&gamma)?;
                }
            }
            let div = self.cm.division_poly(&b)?;
            div.exact_div(&prod).map_err(|_| {
                LemnError::InternalInconsistency(format!(
                    "division polynomial of {b} is not divisible by the lower lemnatomic factors"
                ))
            })?
        };
        self.polys.insert(b, lam.clone());
        Ok(lam)
    }

    pub fn lemnatomic(&mut self, beta: &GaussInt) -> Result<LemnatomicRecord, LemnError> {
        let b = normalized(beta)?;
        let poly = self.poly(&b)?;
        Ok(LemnatomicRecord {
            degree: poly.degree().unwrap_or(0),
            constant_term: poly.coeff(0),
            beta: b,
            poly,
        })
    }

    /// `Λ_β(0)` is the normalized prime when `β` is a unit times a prime
    /// power, and 1 otherwise.
    pub fn verify_constant_term(&mut self, beta: &GaussInt) -> Result<Check, LemnError> {
        let b = nonunit_normalized(beta)?;
        let fac = b.factor()?;
        let expected = match fac.prime_power_base() {
            Some(pi) => pi.clone(),
            None => GaussInt::one(),
        };
        let observed = self.poly(&b)?.coeff(0);
        Ok(Check::compare(expected, observed))
    }

    /// `deg Λ_β = |(O/βO)^×|`.
    pub fn verify_degree(&mut self, beta: &GaussInt) -> Result<Check, LemnError> {
        let b = normalized(beta)?;
        let expected = b.unit_group_order()?;
        let observed = BigUint::from(self.poly(&b)?.degree().unwrap_or(0));
        Ok(Check::compare(expected, observed))
    }

    /// `∏_{γ | β} Λ_γ` equals the division polynomial of `β`.
    pub fn verify_decomposition(&mut self, beta: &GaussInt) -> Result<Check, LemnError> {
        let b = normalized(beta)?;
        let mut prod = ZiPoly::one();
        for gamma in b.normalized_divisors()? {
            prod = &prod * &self.poly(&gamma)?;
        }
        let div = self.cm.division_poly(&b)?;
        Ok(Check {
            passed: prod == div,
            expected: format!("degree {} division polynomial", div.degree().unwrap_or(0)),
            observed: format!("degree {} product", prod.degree().unwrap_or(0)),
        })
    }

    /// Factor degrees of `Λ_β` mod `π` against the order of `π` mod `β`.
    pub fn frobenius_pattern(&mut self, beta: &GaussInt, pi: &GaussInt) -> Result<FrobeniusPattern, LemnError> {
        let b = nonunit_normalized(beta)?;
        if !pi.is_prime() || !pi.is_normalized() {
            return Err(LemnError::NotNormalizedPrime(pi.to_string()));
        }
        if pi.divides(&b) {
            return Err(LemnError::NotCoprime);
        }
        let lam = self.poly(&b)?;
        let reduced = lam.reduce_mod(pi).map_err(poly_err)?;
        let observed = match reduced.factor_degrees() {
            Ok(d) => d,
            Err(PolyError::NotSquarefree) => return Err(LemnError::NotSeparable),
            Err(e) => return Err(poly_err(e)),
        };
        let expected = pi
            .multiplicative_order(&b)?
            .to_u64()
            .ok_or_else(|| LemnError::InternalInconsistency("order overflow".into()))?;
        Ok(FrobeniusPattern {
            prime: pi.clone(),
            expected,
            observed,
        })
    }

    /// The first `count` normalized primes, by norm, that are coprime to `β`
    /// and leave `Λ_β` separable.
    pub fn admissible_primes(&mut self, beta: &GaussInt, count: usize) -> Result<Vec<GaussInt>, LemnError> {
        let b = nonunit_normalized(beta)?;
        let lam = self.poly(&b)?;
        let mut out = Vec::new();
        let mut seen = 0usize;
        let mut bound = 64u64;
        while out.len() < count {
            let primes = normalized_primes_up_to(bound);
            for pi in &primes[seen..] {
                if out.len() == count {
                    break;
                }
                if pi.divides(&b) {
                    continue;
                }
                if lam.is_separable_mod(pi).map_err(poly_err)? {
                    out.push(pi.clone());
                }
            }
            seen = primes.len();
            bound *= 4;
        }
        Ok(out)
    }

    /// Frobenius patterns at the first `trials` admissible primes.
    pub fn irreducibility_evidence(&mut self, beta: &GaussInt, trials: usize) -> Result<Evidence, LemnError> {
        let primes = self.admissible_primes(beta, trials)?;
        let mut patterns = Vec::with_capacity(primes.len());
        for pi in &primes {
            patterns.push(self.frobenius_pattern(beta, pi)?);
        }
        let mismatches = patterns.iter().filter(|p| !p.matches()).count();
        let status = match mismatches {
            0 if patterns.iter().any(FrobeniusPattern::is_irreducible) => EvidenceStatus::Proved,
            0 => EvidenceStatus::Consistent,
            1 | 2 => EvidenceStatus::Warn,
            _ => EvidenceStatus::Refuted,
        };
        Ok(Evidence { status, patterns })
    }
}

fn poly_err(e: PolyError) -> LemnError {
    LemnError::InternalInconsistency(e.to_string())
}

/// One-shot [`LemnatomicTable::lemnatomic`].
pub fn lemnatomic(beta: &GaussInt) -> Result<LemnatomicRecord, LemnError> {
    LemnatomicTable::new().lemnatomic(beta)
}
