//! Cyclic Jacobi eigensolver for Hermitian matrices and a one-sided Jacobi SVD.
//!
//! Both are sized for the small dense matrices of this crate (at most 256×256)
//! and are fully deterministic.

use num_complex::Complex64;

use super::{ComplexMatrix, DEFAULT_TOL};
use crate::error::{Error, Result};

/// Off-diagonal Frobenius norm at which the sweep loop stops, relative to `max(1, ‖A‖_F)`.
pub const JACOBI_THRESHOLD: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigenvalues in descending order with matching orthonormal eigenvector columns.
#[derive(Clone, Debug)]
pub struct Eigensystem {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl Eigensystem {
    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_values(|x| x)
    }

    /// `V·diag(f(λ))·V†`.
    pub fn map_values(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.values.len();
        let mapped: Vec<f64> = self.values.iter().map(|&x| f(x)).collect();
        let v = &self.vectors;
        ComplexMatrix::from_fn(n, n, |i, j| {
            (0..n).map(|k| v[(i, k)] * v[(j, k)].conj() * mapped[k]).sum()
        })
    }

    pub fn min(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a Hermitian matrix, `m = V·diag(λ)·V†`.
///
/// The input must be Hermitian within [`DEFAULT_TOL`]; it is symmetrized before iterating.
pub fn hermitian_eigensystem(m: &ComplexMatrix) -> Result<Eigensystem> {
    let n = m.ensure_square()?;
    let deviation = m.hermiticity_deviation();
    if deviation > DEFAULT_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let mut a = ComplexMatrix::from_fn(n, n, |i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    let mut v = ComplexMatrix::identity(n);
    let threshold = JACOBI_THRESHOLD * a.frobenius_norm().max(1.0);

    let mut converged = n <= 1;
    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::NotConverged {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(Eigensystem { values, vectors })
}

/// One complex Jacobi rotation annihilating `a[p,q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let b = apq.norm();
    if b == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Skip rotations that cannot change the diagonal in floating point.
    if b < f64::EPSILON * 1e-3 * (app.abs() + aqq.abs()) {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    // Phase that makes the pivot real, followed by a real symmetric Schur rotation.
    let phase = apq / b;
    let tau = (aqq - app) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = diag(1, e^{-iφ})·[[c, s], [-s, c]]
    let j_pp = Complex64::new(c, 0.0);
    let j_pq = Complex64::new(s, 0.0);
    let j_qp = -phase.conj() * s;
    let j_qq = phase.conj() * c;

    let n = a.rows();
    // A ← A·J
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * j_pp + akq * j_qp;
        a[(k, q)] = akp * j_pq + akq * j_qq;
    }
    // A ← J†·A
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = j_pp.conj() * apk + j_qp.conj() * aqk;
        a[(q, k)] = j_pq.conj() * apk + j_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
    // V ← V·J
    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * j_pp + vkq * j_qp;
        v[(k, q)] = vkp * j_pq + vkq * j_qq;
    }
}

/// Singular values of an arbitrary complex matrix, descending.
///
/// One-sided (Hestenes) Jacobi: columns are rotated pairwise until mutually
/// orthogonal, then the singular values are the column norms.
pub fn singular_values(m: &ComplexMatrix) -> Result<Vec<f64>> {
    let rows = m.rows();
    let cols = m.cols();
    let mut columns: Vec<Vec<Complex64>> = (0..cols).map(|j| m.column(j)).collect();
    let scale = m.frobenius_norm().max(f64::MIN_POSITIVE);

    let mut converged = cols <= 1;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..cols {
            for j in (i + 1)..cols {
                let alpha: f64 = columns[i].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = columns[j].iter().map(|z| z.norm_sqr()).sum();
                let gamma: Complex64 = columns[i].iter().zip(&columns[j]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g <= JACOBI_THRESHOLD * (alpha * beta).sqrt() || g <= f64::EPSILON * scale * scale * 1e-3 {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = if zeta >= 0.0 {
                    1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
                } else {
                    -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let (left, right) = columns.split_at_mut(j);
                for (x, y) in left[i].iter_mut().zip(right[0].iter_mut()) {
                    let (a, b) = (*x, *y * phase.conj());
                    *x = a * c - b * s;
                    *y = a * s + b * c;
                }
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NotConverged {
            sweeps: JACOBI_MAX_SWEEPS,
        });
    }
    let mut values: Vec<f64> = columns
        .iter()
        .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt())
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    values.truncate(rows.min(cols));
    Ok(values)
}

/// Principal square root of a positive semidefinite matrix; negative round-off eigenvalues are clamped to zero.
pub fn psd_sqrt(m: &ComplexMatrix) -> Result<ComplexMatrix> {
    Ok(hermitian_eigensystem(m)?.map_values(|x| x.max(0.0).sqrt()))
}

/// Trace norm `‖m‖₁ = Σ|λᵢ|` of a Hermitian matrix.
pub fn trace_norm(m: &ComplexMatrix) -> Result<f64> {
    Ok(hermitian_eigensystem(m)?.values.iter().map(|x| x.abs()).sum())
}
