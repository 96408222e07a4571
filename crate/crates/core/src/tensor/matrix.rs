//! Complex matrix and vector helpers shared across the crate.

use ndarray::{Array1, Array2};

pub use num_complex::Complex64 as C64;

/// Complex square or rectangular matrix.
pub type CMat = Array2<C64>;
/// Complex vector.
pub type CVec = Array1<C64>;

pub fn identity(dim: usize) -> CMat {
    Array2::from_shape_fn((dim, dim), |(i, j)| {
        if i == j {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Conjugate transpose.
pub fn dagger(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

pub fn frobenius_norm(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn max_abs(it: impl IntoIterator<Item = C64>) -> f64 {
    it.into_iter().fold(0.0f64, |acc, z| acc.max(z.norm()))
}

/// Column-first (column-stacking) vectorization: `vec(M)[i + rows*j] = M[i, j]`.
pub fn vec_col(m: &CMat) -> CVec {
    let (rows, cols) = m.dim();
    Array1::from_shape_fn(rows * cols, |k| m[(k % rows, k / rows)])
}

/// Inverse of [`vec_col`].
pub fn unvec_col(v: &CVec, rows: usize, cols: usize) -> CMat {
    assert_eq!(v.len(), rows * cols, "unvec length mismatch");
    Array2::from_shape_fn((rows, cols), |(i, j)| v[i + rows * j])
}

/// Kronecker product, laid out so that `vec(X Y Z) = (Zᵀ ⊗ X) vec(Y)`
/// holds with column-first vectorization.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::zeros((ar * br, ac * bc));
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}
