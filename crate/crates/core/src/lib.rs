//! Exact arithmetic for the lemniscatic analog of cyclotomy: Gaussian
//! integers, polynomials over `Z[i]`, the complex-multiplication maps of the
//! lemniscatic sine, lemnatomic polynomials and their numerical validation.

#![no_std]

extern crate alloc;

pub mod arith;
pub mod chebyshev;
pub mod cmfield;
pub mod construct;
pub mod fq;
pub mod gaussint;
pub mod lemnatomic;
mod modgcd;
pub mod numlem;
pub mod real;
pub mod zipoly;

pub use gaussint::{GaussError, GaussFactorization, GaussInt};
pub use zipoly::{PolyError, ZiPoly};
