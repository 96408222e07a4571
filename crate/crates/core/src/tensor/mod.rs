//! Dense real/complex multidimensional-array kernels used by every other
//! module: generic pairwise contraction, Kronecker products, Hermitian
//! eigendecomposition, nearest-PSD projection and power iteration.
//!
//! All tensors are stored row-major. Vectorization of matrices uses the
//! column-first convention, so that `vec(X Y Z) = (Zᵀ ⊗ X) vec(Y)`.

mod eig;
mod matrix;
mod power;

pub use eig::{hermitian_eig, psd_project, HERMITIAN_TOL};
pub use matrix::{
    dagger, frobenius_norm, identity, kron, max_abs, unvec_col, vec_col, CMat, CVec, C64,
};
pub use power::{
    leading_eigenpair, second_eigenvalue_estimate, DEFAULT_POWER_MAX_ITER, DEFAULT_POWER_TOL,
};

use crate::error::{Error, Result};
use ndarray::{ArrayD, IxDyn};

/// Scalar field of a [`DenseTensor`]. A `Real` tensor keeps every imaginary
/// part exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarKind {
    Real,
    Complex,
}

/// Dense tensor of arbitrary order with complex entries, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseTensor {
    data: ArrayD<C64>,
    kind: ScalarKind,
}

impl DenseTensor {
    pub fn from_complex(data: ArrayD<C64>) -> Self {
        Self {
            data,
            kind: ScalarKind::Complex,
        }
    }

    pub fn from_real(data: ArrayD<f64>) -> Self {
        Self {
            data: data.mapv(|x| C64::new(x, 0.0)),
            kind: ScalarKind::Real,
        }
    }

    pub fn shape(&self) -> &[usize] {
        self.data.shape()
    }

    pub fn order(&self) -> usize {
        self.data.ndim()
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn data(&self) -> &ArrayD<C64> {
        &self.data
    }

    /// Entry at a multi-index.
    pub fn get(&self, idx: &[usize]) -> C64 {
        self.data[IxDyn(idx)]
    }

    /// Contract `self` with `other` over the given `(axis of self, axis of other)`
    /// pairs. The result carries the unpaired axes of `self` followed by the
    /// unpaired axes of `other`. Contracting all axes yields an order-0 tensor.
    pub fn contract(&self, other: &DenseTensor, pairs: &[(usize, usize)]) -> Result<DenseTensor> {
        let a_shape = self.shape().to_vec();
        let b_shape = other.shape().to_vec();

        let mut a_paired = vec![false; a_shape.len()];
        let mut b_paired = vec![false; b_shape.len()];
        for &(ai, bi) in pairs {
            if ai >= a_shape.len() {
                return Err(Error::AxisOutOfRange {
                    axis: ai,
                    order: a_shape.len(),
                });
            }
            if bi >= b_shape.len() {
                return Err(Error::AxisOutOfRange {
                    axis: bi,
                    order: b_shape.len(),
                });
            }
            if a_paired[ai] {
                return Err(Error::DuplicateAxis { axis: ai });
            }
            if b_paired[bi] {
                return Err(Error::DuplicateAxis { axis: bi });
            }
            if a_shape[ai] != b_shape[bi] {
                return Err(Error::ContractionMismatch {
                    a_axis: ai,
                    b_axis: bi,
                    a_extent: a_shape[ai],
                    b_extent: b_shape[bi],
                });
            }
            a_paired[ai] = true;
            b_paired[bi] = true;
        }

        let a_free: Vec<usize> = (0..a_shape.len()).filter(|&i| !a_paired[i]).collect();
        let b_free: Vec<usize> = (0..b_shape.len()).filter(|&i| !b_paired[i]).collect();

        // Permute so paired axes are trailing in `a` and leading in `b`,
        // then contract as a matrix product.
        let mut a_perm = a_free.clone();
        a_perm.extend(pairs.iter().map(|&(ai, _)| ai));
        let mut b_perm: Vec<usize> = pairs.iter().map(|&(_, bi)| bi).collect();
        b_perm.extend(b_free.iter().copied());

        let a_t = self
            .data
            .view()
            .permuted_axes(IxDyn(&a_perm))
            .as_standard_layout()
            .into_owned();
        let b_t = other
            .data
            .view()
            .permuted_axes(IxDyn(&b_perm))
            .as_standard_layout()
            .into_owned();

        let m: usize = a_free.iter().map(|&i| a_shape[i]).product();
        let k: usize = pairs.iter().map(|&(ai, _)| a_shape[ai]).product();
        let n: usize = b_free.iter().map(|&i| b_shape[i]).product();

        let a_mat = a_t
            .into_shape_with_order((m, k))
            .expect("contiguous reshape");
        let b_mat = b_t
            .into_shape_with_order((k, n))
            .expect("contiguous reshape");
        let out = a_mat.dot(&b_mat);

        let mut out_shape: Vec<usize> = a_free.iter().map(|&i| a_shape[i]).collect();
        out_shape.extend(b_free.iter().map(|&i| b_shape[i]));
        let data = out
            .into_shape_with_order(IxDyn(&out_shape))
            .expect("contiguous reshape");

        let kind = match (self.kind, other.kind) {
            (ScalarKind::Real, ScalarKind::Real) => ScalarKind::Real,
            _ => ScalarKind::Complex,
        };
        Ok(DenseTensor { data, kind })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{arr1, arr2, ArrayD};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn identity_times_vector() {
        let a = DenseTensor::from_real(arr2(&[[1.0, 0.0], [0.0, 1.0]]).into_dyn());
        let b = DenseTensor::from_real(arr1(&[3.0, 4.0]).into_dyn());
        let r = a.contract(&b, &[(1, 0)]).unwrap();
        assert_eq!(r.shape(), &[2]);
        assert_eq!(r.get(&[0]), c(3.0));
        assert_eq!(r.get(&[1]), c(4.0));
        assert_eq!(r.kind(), ScalarKind::Real);
    }

    #[test]
    fn dot_product_scalar() {
        let a = DenseTensor::from_real(arr1(&[1.0, 2.0]).into_dyn());
        let b = DenseTensor::from_real(arr1(&[3.0, 4.0]).into_dyn());
        let r = a.contract(&b, &[(0, 0)]).unwrap();
        assert_eq!(r.order(), 0);
        assert_eq!(r.get(&[]), c(11.0));
    }

    /// Direct triple-loop oracle for a two-axis contraction of random tensors.
    #[test]
    fn random_contraction_matches_loop_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut rnd = |shape: &[usize]| -> ArrayD<C64> {
            ArrayD::from_shape_fn(IxDyn(shape), |_| {
                C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            })
        };
        let a = DenseTensor::from_complex(rnd(&[3, 4, 5]));
        let b = DenseTensor::from_complex(rnd(&[5, 4]));
        // contract axis 2 of a with axis 0 of b, and axis 1 of a with axis 1 of b
        let r = a.contract(&b, &[(2, 0), (1, 1)]).unwrap();
        assert_eq!(r.shape(), &[3]);
        for i in 0..3 {
            let mut want = C64::new(0.0, 0.0);
            for j in 0..4 {
                for k in 0..5 {
                    want += a.get(&[i, j, k]) * b.get(&[k, j]);
                }
            }
            let got = r.get(&[i]);
            assert!((got - want).norm() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn mismatched_extents_rejected() {
        let a = DenseTensor::from_real(ArrayD::zeros(IxDyn(&[2, 3])));
        let b = DenseTensor::from_real(ArrayD::zeros(IxDyn(&[4])));
        let e = a.contract(&b, &[(1, 0)]).unwrap_err();
        match e {
            Error::ContractionMismatch {
                a_axis, a_extent, ..
            } => {
                assert_eq!(a_axis, 1);
                assert_eq!(a_extent, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn duplicate_axis_rejected() {
        let a = DenseTensor::from_real(ArrayD::zeros(IxDyn(&[2, 2])));
        let b = DenseTensor::from_real(ArrayD::zeros(IxDyn(&[2, 2])));
        assert!(a.contract(&b, &[(0, 0), (0, 1)]).is_err());
    }
}
