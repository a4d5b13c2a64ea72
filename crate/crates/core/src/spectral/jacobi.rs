//! Cyclic Jacobi rotations for dense real symmetric matrices.

use super::DenseMatrix;
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;
/// Off-diagonal magnitude, relative to `‖A‖∞`, at which iteration stops.
pub const REL_OFF_TOL: f64 = 1e-12;

/// Eigenvalues (unsorted, in diagonal order) and, when requested, the
/// eigenvectors as the columns of the accumulated rotation.
pub(crate) fn diagonalize(a: &DenseMatrix, vectors: bool) -> Result<(Vec<f64>, Option<DenseMatrix>)> {
    let n = a.n();
    let mut w = a.clone();
    let mut v = vectors.then(|| DenseMatrix::identity(n));
    let norm = a.norm_inf();
    let threshold = REL_OFF_TOL * norm;

    let mut off = w.max_off_diagonal();
    let mut sweeps = 0;
    while off > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = w[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (w[(q, q)] - w[(p, p)]) / (2.0 * apq);
                let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + theta.hypot(1.0)) };
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;
                rotate(&mut w, p, q, c, s);
                w[(p, q)] = 0.0;
                w[(q, p)] = 0.0;
                if let Some(v) = v.as_mut() {
                    for k in 0..n {
                        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                        v[(k, p)] = c * vkp - s * vkq;
                        v[(k, q)] = s * vkp + c * vkq;
                    }
                }
            }
        }
        sweeps += 1;
        off = w.max_off_diagonal();
    }
    Ok(((0..n).map(|i| w[(i, i)]).collect(), v))
}

/// `A ← Jᵀ A J` for the plane rotation in `(p, q)`.
fn rotate(a: &mut DenseMatrix, p: usize, q: usize, c: f64, s: f64) {
    let n = a.n();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
}
