//! Cyclic Jacobi eigensolver for small Hermitian matrices.
//!
//! A Hermitian `H = X + iY` is embedded as the real symmetric matrix
//!
//! ```text
//! [ X  -Y ]
//! [ Y   X ]
//! ```
//!
//! whose spectrum is the spectrum of `H` with every eigenvalue doubled. The
//! real matrix is diagonalized with plane rotations until the off-diagonal
//! Frobenius norm falls below [`tol::EIG_OFFDIAG`] times the full norm, then
//! the sorted diagonal is folded back pairwise.

use crate::error::{Error, Result};
use crate::tol;

use super::ComplexMatrix;

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// `tol` bounds the accepted Hermiticity deviation of the input.
pub fn hermitian_eigenvalues(h: &ComplexMatrix, tol: f64) -> Result<Vec<f64>> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigenvalues need a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let deviation = h.hermiticity_deviation();
    if deviation.is_nan() || deviation > tol || !h.is_finite() {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.rows();
    let m = 2 * n;
    let mut a = vec![0.0f64; m * m];
    for i in 0..n {
        for j in 0..n {
            // symmetrize so rounding noise in the input cannot break the embedding
            let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
            a[i * m + j] = z.re;
            a[(i + n) * m + (j + n)] = z.re;
            a[(i + n) * m + j] = z.im;
            a[i * m + (j + n)] = -z.im;
        }
    }

    jacobi_sweeps(&mut a, m)?;

    let mut diag: Vec<f64> = (0..m).map(|i| a[i * m + i]).collect();
    diag.sort_by(f64::total_cmp);
    Ok(diag.chunks_exact(2).map(|p| 0.5 * (p[0] + p[1])).collect())
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[p * n + q] * a[p * n + q];
            }
        }
    }
    s.sqrt()
}

fn jacobi_sweeps(a: &mut [f64], n: usize) -> Result<()> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = tol::EIG_OFFDIAG * norm;

    for _ in 0..tol::EIG_MAX_SWEEPS {
        if off_diagonal_norm(a, n) <= target {
            return Ok(());
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    if off_diagonal_norm(a, n) <= target {
        Ok(())
    } else {
        Err(Error::NoConvergence {
            sweeps: tol::EIG_MAX_SWEEPS,
        })
    }
}
