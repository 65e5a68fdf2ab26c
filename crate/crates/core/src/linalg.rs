//! Numerical rank, null spaces and commutants of complex matrices.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::scalars::Scalar;

pub type Matrix = DMatrix<Scalar>;

/// Outcome of a rank decision: singular values above `tol · σ_max` count.
#[derive(Clone, Debug, Serialize)]
pub struct RankInfo {
    pub rank: usize,
    pub sigma_max: f64,
    pub cutoff: f64,
    /// Smallest retained and largest discarded singular values.
    pub smallest_kept: Option<f64>,
    pub largest_dropped: Option<f64>,
    /// Some singular value lies within two decades of the cutoff.
    pub ill_conditioned: bool,
}

fn singular_values_padded(m: &Matrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.clone().singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
    sv
}

pub fn numerical_rank(m: &Matrix, tol: f64) -> RankInfo {
    let sv = singular_values_padded(m);
    let sigma_max = sv.first().copied().unwrap_or(0.0);
    let cutoff = tol * sigma_max;
    if sigma_max == 0.0 {
        return RankInfo { rank: 0, sigma_max, cutoff, smallest_kept: None, largest_dropped: None, ill_conditioned: false };
    }
    let rank = sv.iter().filter(|&&s| s > cutoff).count();
    let ill_conditioned = sv.iter().any(|&s| s > cutoff * 1e-2 && s < cutoff * 1e2);
    RankInfo {
        rank,
        sigma_max,
        cutoff,
        smallest_kept: sv.get(rank.wrapping_sub(1)).copied().filter(|_| rank > 0),
        largest_dropped: sv.get(rank).copied(),
        ill_conditioned,
    }
}

/// Rank of a family of vectors, each a column of the stacked matrix.
pub fn rank_of_vectors(vectors: &[Vec<Scalar>], tol: f64) -> RankInfo {
    let rows = vectors.first().map_or(0, Vec::len);
    let m = Matrix::from_fn(rows, vectors.len(), |i, j| vectors[j][i]);
    numerical_rank(&m, tol)
}

/// Orthonormal basis (as columns) of the null space of `m`, using the
/// relative cutoff `tol · max(σ_max, scale)`.
pub fn null_space(m: &Matrix, tol: f64, scale: f64) -> Matrix {
    let cols = m.ncols();
    if cols == 0 {
        return Matrix::zeros(0, 0);
    }
    // pad so the SVD sees every right singular direction
    let padded = if m.nrows() < cols {
        let mut p = Matrix::zeros(cols, cols);
        p.view_mut((0, 0), (m.nrows(), cols)).copy_from(m);
        p
    } else {
        m.clone()
    };
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested V^T");
    let sigma_max = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cutoff = tol * sigma_max.max(scale);
    let keep: Vec<usize> = (0..svd.singular_values.len()).filter(|&i| svd.singular_values[i] <= cutoff).collect();
    Matrix::from_fn(cols, keep.len(), |r, c| v_t[(keep[c], r)].conj())
}

/// Dimension of the fixed space `{v : Φ v = v}` of a square matrix.
pub fn fixed_subspace_dim(phi: &Matrix, tol: f64) -> usize {
    let k = phi.nrows();
    let shifted = phi - Matrix::identity(k, k);
    if shifted.iter().all(|z| z.norm() == 0.0) {
        return k;
    }
    let scale = phi.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let sv = singular_values_padded(&shifted);
    k - sv.iter().filter(|&&s| s > tol * scale).count()
}

/// Dimension of `{X : X M = M X for every M}`.
///
/// The solution space is cut down one matrix at a time; it always contains
/// the scalars, so the loop stops once it reaches dimension one.
pub fn commutant_dim(mats: &[Matrix], tol: f64) -> usize {
    let d = match mats.first() {
        Some(m) => m.nrows(),
        None => return 0,
    };
    if d == 0 {
        return 0;
    }
    let dd = d * d;
    // columns are vec(X) for a basis of the current solution space
    let mut basis = Matrix::identity(dd, dd);
    for m in mats {
        if basis.ncols() <= 1 {
            break;
        }
        let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            continue;
        }
        let k = basis.ncols();
        // image of each basis element under X ↦ X M − M X
        let mut img = Matrix::zeros(dd, k);
        for c in 0..k {
            let x = Matrix::from_column_slice(d, d, basis.column(c).as_slice());
            let comm = &x * m - m * &x;
            img.column_mut(c).copy_from_slice(comm.as_slice());
        }
        let null = null_space(&img, tol, scale);
        basis = &basis * null;
    }
    basis.ncols()
}

pub fn max_abs(m: &Matrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max|a − b| / max(1, max|a|, max|b|)`.
pub fn relative_residual(a: &Matrix, b: &Matrix) -> f64 {
    let diff = max_abs(&(a - b));
    diff / 1f64.max(max_abs(a)).max(max_abs(b))
}
