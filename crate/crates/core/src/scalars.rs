//! Complex scalars, quantum integers and the parameter set of one algebra.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = Complex64;

pub const DEFAULT_TOLERANCE: f64 = 1e-8;

pub fn c(re: f64) -> Scalar {
    Scalar::new(re, 0.0)
}

pub const I: Scalar = Scalar { re: 0.0, im: 1.0 };

/// The Hecke parameter.
///
/// `Root { e, j }` is `exp(2πi j / e)` with `gcd(j, e) = 1`, so `e` is the
/// multiplicative order of the parameter and also its quantum characteristic.
/// `One` stands for the parameter 1 over the complex numbers, whose quantum
/// characteristic is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Xi {
    One,
    Root { e: u32, j: u32 },
}

impl Xi {
    pub fn value(&self) -> Scalar {
        match *self {
            Xi::One => c(1.0),
            Xi::Root { e, j } => Scalar::from_polar(1.0, 2.0 * PI * j as f64 / e as f64),
        }
    }

    /// The fixed square root `exp(πi j / e)`; `1` when the parameter is `1`.
    pub fn sqrt(&self) -> Scalar {
        match *self {
            Xi::One => c(1.0),
            Xi::Root { e, j } => Scalar::from_polar(1.0, PI * j as f64 / e as f64),
        }
    }

    /// Quantum characteristic, `None` meaning infinity.
    pub fn e(&self) -> Option<u32> {
        match *self {
            Xi::One => None,
            Xi::Root { e, .. } => Some(e),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Xi::One)
    }
}

impl fmt::Display for Xi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Xi::One => write!(f, "1"),
            Xi::Root { e, j } => write!(f, "exp(2πi·{j}/{e})"),
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The data `(n, ℓ, e, ξ, κ)` fixing one cyclotomic Hecke algebra, plus the
/// numerical tolerance used by every check on it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    pub n: usize,
    pub level: usize,
    pub xi: Xi,
    pub kappa: Vec<i64>,
    pub tol: f64,
}

impl AlgebraParams {
    pub fn new(n: usize, xi: Xi, kappa: Vec<i64>) -> Result<Self> {
        Self::with_tolerance(n, xi, kappa, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(n: usize, xi: Xi, kappa: Vec<i64>, tol: f64) -> Result<Self> {
        if kappa.is_empty() {
            return Err(Error::InvalidParams("the multicharge must have at least one entry".into()));
        }
        if let Xi::Root { e, j } = xi {
            if e <= 2 {
                return Err(Error::InvalidParams(format!("quantum characteristic must exceed 2, got e = {e}")));
            }
            if j == 0 || j >= e || gcd(j, e) != 1 {
                return Err(Error::InvalidParams(format!(
                    "exp(2πi·{j}/{e}) is not a primitive {e}-th root of unity"
                )));
            }
        }
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::InvalidParams(format!("tolerance must be positive, got {tol}")));
        }
        Ok(AlgebraParams { n, level: kappa.len(), xi, kappa, tol })
    }

    pub fn e(&self) -> Option<u32> {
        self.xi.e()
    }

    pub fn xi_value(&self) -> Scalar {
        self.xi.value()
    }

    pub fn q(&self, k: i64) -> Scalar {
        quantum_int(k, self.xi.value())
    }

    /// `κ' = (−κ_ℓ, …, −κ_1)`.
    pub fn conjugate_kappa(&self) -> Vec<i64> {
        self.kappa.iter().rev().map(|k| -k).collect()
    }

    pub fn has_symmetric_kappa(&self) -> bool {
        self.kappa == self.conjugate_kappa()
    }

    /// Reduce an integer to its residue; the identity when `e` is infinite.
    pub fn residue(&self, content: i64) -> i64 {
        match self.e() {
            Some(e) => content.rem_euclid(e as i64),
            None => content,
        }
    }

    /// `ℓⁿ·n!`, the dimension of the algebra.
    pub fn algebra_dim(&self) -> u128 {
        (self.level as u128).pow(self.n as u32) * factorial(self.n)
    }

    pub fn approx_eq(&self, a: Scalar, b: Scalar) -> bool {
        approx_eq(a, b, self.tol)
    }

    pub fn approx_zero(&self, a: Scalar) -> bool {
        a.norm() <= self.tol
    }
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The quantum integer `[k]_ξ`: `1 + ξ + … + ξ^{k−1}` for `k ≥ 0` and
/// `−(ξ^{−1} + … + ξ^{k})` for `k < 0`.
pub fn quantum_int(k: i64, xi: Scalar) -> Scalar {
    if k >= 0 {
        (0..k).map(|i| xi.powi(i as i32)).sum()
    } else {
        -(k..0).map(|i| xi.powi(i as i32)).sum::<Scalar>()
    }
}

/// A fixed square root of `[h]_ξ`.
///
/// Positive `h` takes the principal root. Negative `h = −m` is tied to the
/// positive one by `√[−m] = √−1 · (√ξ)^{−m} · √[m]`, which squares to
/// `−ξ^{−m}[m] = [−m]`.
pub fn sqrt_conventional(h: i64, xi: Xi, tol: f64) -> Result<Scalar> {
    let q = quantum_int(h, xi.value());
    if h == 0 || q.norm() <= tol {
        return Err(Error::Domain(format!("[{h}] vanishes for ξ = {xi}; no square root is fixed")));
    }
    if h > 0 {
        return Ok(q.sqrt());
    }
    let m = -h;
    let root = quantum_int(m, xi.value()).sqrt();
    Ok(I * xi.sqrt().powi(-(m as i32)) * root)
}

/// Mixed absolute/relative comparison: `|a − b| ≤ tol · max(1, |a|, |b|)`.
pub fn approx_eq(a: Scalar, b: Scalar, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}
