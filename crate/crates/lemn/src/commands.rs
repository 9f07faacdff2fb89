//! The single-shot subcommands. Each returns a serializable record with a
//! plain-text rendering.

use std::fmt;

use lemn_core::chebyshev::{factor_d, IntPoly};
use lemn_core::cmfield::CmCache;
use lemn_core::construct::{fermat_decomposition, FermatDecomposition, Obstruction};
use lemn_core::lemnatomic::LemnatomicTable;
use lemn_core::{GaussInt, ZiPoly};
use serde::Serialize;

use crate::error::CliError;

/// Parse a Gaussian integer argument such as `5`, `-1+2i` or `3 - 2i`.
pub fn parse_gauss(s: &str) -> Result<GaussInt, CliError> {
    Ok(s.parse::<GaussInt>()?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimePower {
    pub prime: String,
    pub exponent: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorOutput {
    pub input: String,
    pub unit: String,
    pub factors: Vec<PrimePower>,
}

impl fmt::Display for FactorOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "unit: {}", self.unit)?;
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|p| match p.exponent {
                1 => format!("({})", p.prime),
                e => format!("({})^{e}", p.prime),
            })
            .collect();
        write!(f, "factors: {}", parts.join(" "))
    }
}

pub fn gauss_factor(beta: &GaussInt) -> Result<FactorOutput, CliError> {
    let fac = beta.factor()?;
    Ok(FactorOutput {
        input: beta.to_string(),
        unit: fac.unit.to_string(),
        factors: fac
            .factors
            .iter()
            .map(|(p, e)| PrimePower {
                prime: p.to_string(),
                exponent: *e,
            })
            .collect(),
    })
}

/// A polynomial with its coefficients listed from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyOutput {
    pub input: String,
    pub normalized: String,
    pub degree: usize,
    pub constant_term: String,
    pub poly: String,
    pub coeffs: Vec<String>,
}

impl PolyOutput {
    fn new(input: String, normalized: String, p: &ZiPoly) -> Self {
        PolyOutput {
            input,
            normalized,
            degree: p.degree().unwrap_or(0),
            constant_term: p.coeff(0).to_string(),
            poly: p.to_string(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }
}

impl fmt::Display for PolyOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

pub fn divpoly(beta: &GaussInt) -> Result<PolyOutput, CliError> {
    let p = CmCache::new().division_poly(beta)?;
    let (_, b) = beta.normalize()?;
    Ok(PolyOutput::new(beta.to_string(), b.to_string(), &p))
}

pub fn lemnatomic(beta: &GaussInt) -> Result<PolyOutput, CliError> {
    let rec = LemnatomicTable::new().lemnatomic(beta)?;
    Ok(PolyOutput::new(beta.to_string(), rec.beta.to_string(), &rec.poly))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibleOutput {
    pub n: u64,
    pub constructible: bool,
    pub witness: String,
    /// Exponent of 2 and the distinct Fermat primes, when constructible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub power_of_two: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fermat_primes: Option<Vec<u64>>,
    /// The first prime breaking the shape, when not constructible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<u64>,
}

impl fmt::Display for ConstructibleOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.constructible, self.witness)
    }
}

pub fn constructible(n: u64) -> Result<ConstructibleOutput, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be a positive integer".into()));
    }
    let out = match fermat_decomposition(n) {
        FermatDecomposition::Decomposable { k, primes } => {
            let mut parts: Vec<String> = Vec::new();
            if k > 0 {
                parts.push(format!("2^{k}"));
            }
            parts.extend(primes.iter().map(u64::to_string));
            if parts.is_empty() {
                parts.push("1".into());
            }
            ConstructibleOutput {
                n,
                constructible: true,
                witness: format!("{n} = {}", parts.join(" * ")),
                power_of_two: Some(k),
                fermat_primes: Some(primes),
                obstruction: None,
            }
        }
        FermatDecomposition::NotDecomposable { prime, reason } => {
            let witness = match reason {
                Obstruction::NotFermat => format!("{prime} is not a Fermat prime"),
                Obstruction::Repeated => format!("{prime}^2 divides {n}"),
            };
            ConstructibleOutput {
                n,
                constructible: false,
                witness,
                power_of_two: None,
                fermat_primes: None,
                obstruction: Some(prime),
            }
        }
    };
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChebFactor {
    pub k: u64,
    pub poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChebOutput {
    pub n: u64,
    pub degree: usize,
    pub constant_term: String,
    pub poly: String,
    pub coeffs: Vec<String>,
    /// `D_k` for every divisor `k` of `n`; their product is `C_n`.
    pub factors: Vec<ChebFactor>,
}

impl fmt::Display for ChebOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

pub fn cheb_d(n: u64) -> Result<ChebOutput, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be a positive odd integer".into()));
    }
    let table = factor_d(n)?;
    let d: &IntPoly = &table[&n];
    let degree = d.degree().unwrap_or(0);
    Ok(ChebOutput {
        n,
        degree,
        constant_term: d.coeff(0).to_string(),
        poly: d.to_string(),
        coeffs: (0..=degree).map(|k| d.coeff(k).to_string()).collect(),
        factors: table
            .iter()
            .map(|(k, p)| ChebFactor {
                k: *k,
                poly: p.to_string(),
            })
            .collect(),
    })
}
