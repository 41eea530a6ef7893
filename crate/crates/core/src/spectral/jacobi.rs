//! Cyclic Jacobi eigensolvers for dense real symmetric and complex
//! Hermitian matrices.
//!
//! Each rotation annihilates one off-diagonal entry with a plane rotation
//! (a phased rotation in the Hermitian case); the off-diagonal mass decays
//! to zero over sweeps. Accumulating the rotations yields the orthonormal
//! eigenvector matrix.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (descending) and eigenvectors (matching columns) of a real
/// symmetric matrix.
pub fn eigh_real(a: &DMatrix<f64>) -> Result<(Vec<f64>, DMatrix<f64>)> {
    let n = a.nrows();
    let mut a = a.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    if n <= 1 {
        return Ok(sorted_real(a, v));
    }

    let frob = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = 1e-14 * frob.max(1.0);

    for sweep in 0..MAX_SWEEPS {
        let off: f64 = off_norm_real(&a);
        if off <= stop {
            return Ok(sorted_real(a, v));
        }
        // Early sweeps skip tiny entries so big ones are annihilated first.
        let threshold = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.abs();
                if mag <= threshold || mag == 0.0 {
                    continue;
                }
                let app = a[(p, p)];
                let aqq = a[(q, q)];
                // Entry negligible relative to both diagonals: flush to zero.
                if sweep > 3 && app.abs() + 100.0 * mag == app.abs() && aqq.abs() + 100.0 * mag == aqq.abs() {
                    a[(p, q)] = 0.0;
                    a[(q, p)] = 0.0;
                    continue;
                }
                let tau = (aqq - app) / (2.0 * mag);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sign = apq.signum();

                a[(p, p)] = c * c * app - 2.0 * s * c * mag + s * s * aqq;
                a[(q, q)] = s * s * app + 2.0 * s * c * mag + c * c * aqq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[(j, p)];
                    let ajq = a[(j, q)];
                    a[(j, p)] = ajp * c - ajq * s * sign;
                    a[(j, q)] = ajp * s * sign + ajq * c;
                    a[(p, j)] = a[(j, p)];
                    a[(q, j)] = a[(j, q)];
                }
                for j in 0..n {
                    let vjp = v[(j, p)];
                    let vjq = v[(j, q)];
                    v[(j, p)] = vjp * c - vjq * s * sign;
                    v[(j, q)] = vjp * s * sign + vjq * c;
                }
            }
        }
    }
    let off = off_norm_real(&a);
    if off <= stop * 10.0 {
        return Ok(sorted_real(a, v));
    }
    Err(Error::Eigensolver(format!(
        "Jacobi sweeps exhausted, off-diagonal norm {off:.3e}"
    )))
}

/// Eigenvalues (descending, real) and eigenvectors of a complex Hermitian
/// matrix.
pub fn eigh_hermitian(a: &DMatrix<Complex64>) -> Result<(Vec<f64>, DMatrix<Complex64>)> {
    let n = a.nrows();
    let mut a = a.clone();
    let mut v = DMatrix::<Complex64>::identity(n, n);
    if n <= 1 {
        return Ok(sorted_hermitian(a, v));
    }

    let frob = a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    let stop = 1e-14 * frob.max(1.0);

    for sweep in 0..MAX_SWEEPS {
        let off = off_norm_hermitian(&a);
        if off <= stop {
            return Ok(sorted_hermitian(a, v));
        }
        let threshold = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= threshold || mag == 0.0 {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                if sweep > 3 && app.abs() + 100.0 * mag == app.abs() && aqq.abs() + 100.0 * mag == aqq.abs() {
                    a[(p, q)] = Complex64::ZERO;
                    a[(q, p)] = Complex64::ZERO;
                    continue;
                }
                let tau = (aqq - app) / (2.0 * mag);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let phase = apq / mag; // e^{i theta}

                a[(p, p)] = Complex64::new(c * c * app - 2.0 * s * c * mag + s * s * aqq, 0.0);
                a[(q, q)] = Complex64::new(s * s * app + 2.0 * s * c * mag + c * c * aqq, 0.0);
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                let sp = s * phase;
                let spc = s * phase.conj();
                for j in 0..n {
                    if j == p || j == q {
                        continue;
                    }
                    let ajp = a[(j, p)];
                    let ajq = a[(j, q)];
                    a[(j, p)] = ajp * c - ajq * spc;
                    a[(j, q)] = ajp * sp + ajq * c;
                    a[(p, j)] = a[(j, p)].conj();
                    a[(q, j)] = a[(j, q)].conj();
                }
                for j in 0..n {
                    let vjp = v[(j, p)];
                    let vjq = v[(j, q)];
                    v[(j, p)] = vjp * c - vjq * spc;
                    v[(j, q)] = vjp * sp + vjq * c;
                }
            }
        }
    }
    let off = off_norm_hermitian(&a);
    if off <= stop * 10.0 {
        return Ok(sorted_hermitian(a, v));
    }
    Err(Error::Eigensolver(format!(
        "Jacobi sweeps exhausted, off-diagonal norm {off:.3e}"
    )))
}

fn off_norm_real(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[(p, q)] * a[(p, q)];
        }
    }
    (2.0 * s).sqrt()
}

fn off_norm_hermitian(a: &DMatrix<Complex64>) -> f64 {
    let n = a.nrows();
    let mut s = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            s += a[(p, q)].norm_sqr();
        }
    }
    (2.0 * s).sqrt()
}

fn sort_order(diag: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..diag.len()).collect();
    // Stable sort keeps the original column order among equal eigenvalues,
    // so results are deterministic.
    idx.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));
    idx
}

fn sorted_real(a: DMatrix<f64>, v: DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let diag: Vec<f64> = (0..a.nrows()).map(|i| a[(i, i)]).collect();
    let order = sort_order(&diag);
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = DMatrix::<f64>::zeros(v.nrows(), v.ncols());
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &v.column(src));
    }
    (eigenvalues, vectors)
}

fn sorted_hermitian(a: DMatrix<Complex64>, v: DMatrix<Complex64>) -> (Vec<f64>, DMatrix<Complex64>) {
    let diag: Vec<f64> = (0..a.nrows()).map(|i| a[(i, i)].re).collect();
    let order = sort_order(&diag);
    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = DMatrix::<Complex64>::zeros(v.nrows(), v.ncols());
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &v.column(src));
    }
    (eigenvalues, vectors)
}
