//! Power iteration for leading eigenpairs of (generally non-normal) matrices.

use ndarray::Array1;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{dagger, CMat, CVec, C64};
use crate::error::{Error, Result};

pub const DEFAULT_POWER_TOL: f64 = 1e-10;
pub const DEFAULT_POWER_MAX_ITER: usize = 10_000;

fn seed_vector(dim: usize) -> CVec {
    // Fixed seed keeps the whole pipeline deterministic.
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ea5_eed0);
    let mut v = Array1::from_shape_fn(dim, |_| {
        C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
    });
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.mapv_inplace(|z| z / norm);
    v
}

fn norm2(v: &CVec) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Leading eigenpair of a square matrix by power iteration with Rayleigh
/// quotient estimates. Convergence requires a spectral gap `|λ1| > |λ2|`;
/// failure to converge within `max_iter` reports a degenerate spectrum.
pub fn leading_eigenpair(m: &CMat, tol: f64, max_iter: usize) -> Result<(C64, CVec)> {
    let (rows, cols) = m.dim();
    if rows != cols {
        return Err(Error::ShapeMismatch {
            expected: "square matrix".into(),
            got: format!("{rows}x{cols}"),
        });
    }
    if rows == 1 {
        return Ok((m[(0, 0)], Array1::from(vec![C64::new(1.0, 0.0)])));
    }
    let mut v = seed_vector(rows);
    let mut lambda = C64::new(0.0, 0.0);
    for _ in 0..max_iter {
        let w = m.dot(&v);
        let wnorm = norm2(&w);
        if wnorm == 0.0 {
            // v is in the kernel; the leading eigenvalue along this start is 0.
            return Ok((C64::new(0.0, 0.0), v));
        }
        lambda = v.iter().zip(w.iter()).map(|(a, b)| a.conj() * b).sum();
        let v_next = w.mapv(|z| z / wnorm);
        let residual: f64 = {
            let r = &m.dot(&v_next) - &v_next.mapv(|z| z * lambda);
            norm2(&r)
        };
        v = v_next;
        if residual <= tol * f64::max(1.0, lambda.norm()) {
            return Ok((lambda, v));
        }
    }
    Err(Error::DegenerateSpectrum { max_iter })
}

/// Magnitude estimate of the second eigenvalue via Wielandt deflation:
/// the leading left eigenvector is removed and power iteration is rerun.
pub fn second_eigenvalue_estimate(m: &CMat, tol: f64, max_iter: usize) -> Result<C64> {
    let (lambda1, v1) = leading_eigenpair(m, tol, max_iter)?;
    let (_, u1) = leading_eigenpair(&dagger(m), tol, max_iter)?;
    let overlap: C64 = u1.iter().zip(v1.iter()).map(|(a, b)| a.conj() * b).sum();
    if overlap.norm() < 1e-14 {
        return Err(Error::DegenerateSpectrum { max_iter });
    }
    let n = v1.len();
    let mut deflated = m.clone();
    for i in 0..n {
        for j in 0..n {
            deflated[(i, j)] -= lambda1 * v1[i] * u1[j].conj() / overlap;
        }
    }
    let (lambda2, _) = leading_eigenpair(&deflated, tol, max_iter)?;
    Ok(lambda2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::matrix::{identity, kron, unvec_col, vec_col};
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    #[test]
    fn diagonal_leading_pair() {
        let m = array![[c(2.0), c(0.0)], [c(0.0), c(1.0)]];
        let (l, v) = leading_eigenpair(&m, 1e-12, 10_000).unwrap();
        assert!((l - c(2.0)).norm() < 1e-10);
        assert!(v[0].norm() > 0.999 && v[1].norm() < 1e-5);
    }

    #[test]
    fn tie_is_reported_degenerate() {
        let m = array![[c(0.0), c(1.0)], [c(1.0), c(0.0)]];
        assert!(matches!(
            leading_eigenpair(&m, 1e-12, 2000),
            Err(Error::DegenerateSpectrum { .. })
        ));
    }

    #[test]
    fn second_eigenvalue_of_diagonal() {
        let m = array![[c(2.0), c(0.0)], [c(0.0), c(1.0)]];
        let l2 = second_eigenvalue_estimate(&m, 1e-12, 10_000).unwrap();
        assert!((l2 - c(1.0)).norm() < 1e-8, "lambda2 = {l2}");
    }

    /// For a channel built from a completeness-satisfying operator set, the
    /// adjoint transfer operator fixes vec(I): λ1 = 1 with fixed point ∝ vec(I).
    #[test]
    fn cptp_transfer_fixed_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let d = 2usize;
        let m = 3usize;
        // Stack a random (d*m) x d isometry via Gram-Schmidt; blocks are Kraus ops.
        let mut cols: Vec<CVec> = Vec::new();
        for _ in 0..d {
            let mut v = Array1::from_shape_fn(d * m, |_| {
                C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
            });
            for c_prev in &cols {
                let proj: C64 = c_prev.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
                v = &v - &c_prev.mapv(|z| z * proj);
            }
            let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            cols.push(v.mapv(|z| z / n));
        }
        let mut tau = CMat::zeros((d * d, d * d));
        for w in 0..m {
            let mut k = CMat::zeros((d, d));
            for i in 0..d {
                for j in 0..d {
                    k[(i, j)] = cols[j][w * d + i];
                }
            }
            let kbar = k.mapv(|z| z.conj());
            tau = &tau + &kron(&kbar, &k);
        }
        let adj = dagger(&tau);
        let (l, v) = leading_eigenpair(&adj, 1e-12, 20_000).unwrap();
        assert!((l - c(1.0)).norm() < 1e-8, "lambda1 = {l}");
        let fixed = unvec_col(&v, d, d);
        // Fixed point is proportional to the identity.
        let scale = fixed[(0, 0)];
        let diff = &fixed - &identity(d).mapv(|z| z * scale);
        let err = diff.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert!(err < 1e-7, "fixed point deviates from identity by {err}");
        let _ = vec_col(&fixed);
    }
}
