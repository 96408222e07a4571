//! Hermitian eigendecomposition and nearest-PSD projection.

use ndarray::Array1;
use ndarray_linalg::{Eigh, UPLO};

use super::matrix::{dagger, frobenius_norm, CMat, C64};
use crate::error::{Error, Result};

/// Relative tolerance for accepting a matrix as Hermitian.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns eigenvalues in descending order and the matching eigenvectors as
/// columns of a unitary matrix, so that `m == V diag(w) V†`.
pub fn hermitian_eig(m: &CMat) -> Result<(Array1<f64>, CMat)> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::ShapeMismatch {
            expected: "square matrix".into(),
            got: format!("{rows}x{cols}"),
        });
    }
    let residual = frobenius_norm(&(m - &dagger(m))) / f64::max(1.0, frobenius_norm(m));
    if residual > HERMITIAN_TOL {
        return Err(Error::NotHermitian { residual });
    }
    let (vals, vecs) = m
        .eigh(UPLO::Lower)
        .map_err(|e| Error::InvalidModel(format!("eigendecomposition failed: {e}")))?;
    // The LAPACK binding hands a row-major buffer to a column-major routine,
    // which for Hermitian input diagonalizes the conjugate; pick whichever
    // orientation actually satisfies m V = V diag(w).
    let diag = CMat::from_diag(&vals.mapv(|v| C64::new(v, 0.0)));
    let vecs = {
        let conj = vecs.mapv(|z| z.conj());
        let res_plain = frobenius_norm(&(&m.dot(&vecs) - &vecs.dot(&diag)));
        let res_conj = frobenius_norm(&(&m.dot(&conj) - &conj.dot(&diag)));
        if res_conj < res_plain {
            conj
        } else {
            vecs
        }
    };
    // LAPACK returns ascending order; flip to descending.
    let n = vals.len();
    let vals_desc = Array1::from_shape_fn(n, |i| vals[n - 1 - i]);
    let vecs_desc = CMat::from_shape_fn((n, n), |(i, j)| vecs[(i, n - 1 - j)]);
    Ok((vals_desc, vecs_desc))
}

/// Nearest (Frobenius) positive semidefinite matrix to the Hermitian part
/// `(m + m†)/2`, computed by clipping negative eigenvalues to zero.
/// Idempotent; the output is Hermitian PSD.
pub fn psd_project(m: &CMat) -> CMat {
    let herm = (m + &dagger(m)).mapv(|z| z * 0.5);
    let (vals, vecs) = hermitian_eig(&herm).expect("Hermitian part is Hermitian by construction");
    let clipped = vals.mapv(|v| v.max(0.0));
    let scaled = &vecs * &clipped.mapv(|v| C64::new(v, 0.0));
    let out = scaled.dot(&dagger(&vecs));
    // Kill asymmetric rounding so repeated projections are stable.
    (&out + &dagger(&out)).mapv(|z| z * 0.5)
}
