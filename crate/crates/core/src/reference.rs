//! The two-dimensional Specht module of shape (2,1) at ξ = 1, compared with
//! a reference pair of matrices for it that disagrees in sign.

use serde::Serialize;

use crate::error::Result;
use crate::linalg::{max_abs, Matrix};
use crate::scalars::{c, AlgebraParams, Xi, I};
use crate::seminormal::{specht_block, CoefficientSystem};
use crate::tableaux::Multipartition;

/// The reference matrices of `T_1` and `T_2` on `(f_{12/3}, f_{13/2})`,
/// columns holding images of basis vectors.
pub fn reference_pair() -> (Matrix, Matrix) {
    let h = 3f64.sqrt() / 2.0;
    let t1 = Matrix::from_row_slice(2, 2, &[c(1.0), c(0.0), c(0.0), c(-1.0)]);
    let t2 = Matrix::from_row_slice(2, 2, &[c(0.5), I * h, -I * h, c(-0.5)]);
    (t1, t2)
}

/// The matrices produced by the action formulas with the alternating
/// coefficients.
pub fn derived_pair() -> Result<(Matrix, Matrix)> {
    let p = AlgebraParams::new(3, Xi::One, vec![0])?;
    let cs = CoefficientSystem::alternating(&p)?;
    let b = specht_block(&Multipartition::new(vec![vec![2, 1]])?, &cs)?;
    Ok((b.t[0].clone(), b.t[1].clone()))
}

#[derive(Clone, Debug, Serialize)]
pub struct PairChecks {
    /// `max|T_1² − 1|` and `max|T_2² − 1|`.
    pub square_t1: f64,
    pub square_t2: f64,
    /// `max|T_1 T_2 T_1 − T_2 T_1 T_2|`.
    pub braid: f64,
}

fn checks(t1: &Matrix, t2: &Matrix) -> PairChecks {
    let id = Matrix::identity(2, 2);
    PairChecks {
        square_t1: max_abs(&(t1 * t1 - &id)),
        square_t2: max_abs(&(t2 * t2 - &id)),
        braid: max_abs(&(t1 * t2 * t1 - t2 * t1 * t2)),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub derived_t1: [[[f64; 2]; 2]; 2],
    pub derived_t2: [[[f64; 2]; 2]; 2],
    pub reference_t1: [[[f64; 2]; 2]; 2],
    pub reference_t2: [[[f64; 2]; 2]; 2],
    /// `max|derived T_1 − reference T_1|`.
    pub t1_difference: f64,
    /// `max|derived T_2 − reference T_2|` and `max|derived T_2 + reference T_2|`.
    pub t2_difference: f64,
    pub t2_sign_flip_difference: f64,
    pub derived: PairChecks,
    pub reference: PairChecks,
    pub statement: String,
}

/// Tolerance for the exact identities of this example.
pub const EXAMPLE_TOLERANCE: f64 = 1e-12;

impl ExampleReport {
    /// `T_1` agrees, `T_2` agrees up to sign, the derived pair satisfies
    /// every relation and the reference pair fails the braid relation.
    pub fn passes(&self) -> bool {
        self.t1_difference < EXAMPLE_TOLERANCE
            && self.t2_sign_flip_difference < EXAMPLE_TOLERANCE
            && self.derived.square_t1 < EXAMPLE_TOLERANCE
            && self.derived.square_t2 < EXAMPLE_TOLERANCE
            && self.derived.braid < EXAMPLE_TOLERANCE
            && self.reference.braid > 1e-3
    }
}

fn grid(m: &Matrix) -> [[[f64; 2]; 2]; 2] {
    let z = |i: usize, j: usize| {
        let v = m[(i, j)];
        [v.re + 0.0, v.im + 0.0]
    };
    [[z(0, 0), z(0, 1)], [z(1, 0), z(1, 1)]]
}

pub fn example_report() -> Result<ExampleReport> {
    let (d1, d2) = derived_pair()?;
    let (p1, p2) = reference_pair();
    let derived = checks(&d1, &d2);
    let reference = checks(&p1, &p2);
    let t2_difference = max_abs(&(&d2 - &p2));
    let t2_sign_flip_difference = max_abs(&(&d2 + &p2));
    let statement = format!(
        "T1 matches the reference matrix (difference {:.1e}). Derived T2 equals minus the reference T2 \
         (difference {:.1e}); both square to the identity. The derived pair satisfies the braid relation \
         (residual {:.1e}); the reference pair does not (residual {:.3}).",
        max_abs(&(&d1 - &p1)),
        t2_sign_flip_difference,
        derived.braid,
        reference.braid
    );
    Ok(ExampleReport {
        derived_t1: grid(&d1),
        derived_t2: grid(&d2),
        reference_t1: grid(&p1),
        reference_t2: grid(&p2),
        t1_difference: max_abs(&(&d1 - &p1)),
        t2_difference,
        t2_sign_flip_difference,
        derived,
        reference,
        statement,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_behaves_as_documented() {
        let r = example_report().unwrap();
        assert!(r.passes(), "{r:?}");
        assert!(r.reference.square_t2 < 1e-12);
        assert!(r.t2_difference > 1.0);
    }
}
