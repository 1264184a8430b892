//! Dense symmetric eigensolver (cyclic Jacobi) and spectral queries.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::Laplacian;

const SYMMETRY_TOL: f64 = 1e-12;
const OFFDIAG_TARGET: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub enum EigenError {
    /// Input matrix is not symmetric within 1e-12.
    NotSymmetric { i: usize, j: usize },
    /// Storage length does not match the declared dimension.
    DimensionMismatch { expected: usize, got: usize },
    /// Jacobi sweeps did not reach the off-diagonal target.
    NoConvergence { sweeps: usize },
    /// λ₂ is numerically zero: the graph is disconnected.
    Disconnected { lambda2: f64 },
    /// An empty basis was supplied for a restricted eigenproblem.
    EmptyBasis,
}

impl fmt::Display for EigenError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EigenError::NotSymmetric { i, j } => {
                write!(f, "matrix not symmetric at ({i}, {j})")
            }
            EigenError::DimensionMismatch { expected, got } => {
                write!(f, "expected {expected} entries, got {got}")
            }
            EigenError::NoConvergence { sweeps } => {
                write!(f, "Jacobi iteration did not converge in {sweeps} sweeps")
            }
            EigenError::Disconnected { lambda2 } => {
                write!(f, "lambda_2 = {lambda2:e} is numerically zero (graph disconnected)")
            }
            EigenError::EmptyBasis => write!(f, "basis must contain at least one vector"),
        }
    }
}

impl core::error::Error for EigenError {}

/// Full eigendecomposition of a symmetric matrix.
///
/// Eigenvalues are nondecreasing; `eigenvectors[k]` is the unit eigenvector
/// paired with `eigenvalues[k]`, sign-normalized so the entry of largest
/// magnitude (lowest index on ties) is positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<f64>>,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.eigenvectors[k]
    }

    pub fn eigenvectors(&self) -> &[Vec<f64>] {
        &self.eigenvectors
    }
}

/// Eigenspace for one (possibly repeated) eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    eigenvalue: f64,
    basis: Vec<Vec<f64>>,
}

impl Eigenspace {
    pub fn eigenvalue(&self) -> f64 {
        self.eigenvalue
    }

    pub fn basis(&self) -> &[Vec<f64>] {
        &self.basis
    }

    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }
}

/// Eigendecomposition of a dense symmetric matrix given row-major.
///
/// Cyclic Jacobi with threshold sweeps; deterministic for identical input.
pub fn symmetric_eigen(n: usize, entries: &[f64]) -> Result<Spectrum, EigenError> {
    if entries.len() != n * n {
        return Err(EigenError::DimensionMismatch { expected: n * n, got: entries.len() });
    }
    for i in 0..n {
        for j in i + 1..n {
            if (entries[i * n + j] - entries[j * n + i]).abs() > SYMMETRY_TOL {
                return Err(EigenError::NotSymmetric { i, j });
            }
        }
    }
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), eigenvectors: Vec::new() });
    }
    if n == 1 {
        return Ok(Spectrum {
            eigenvalues: vec![entries[0]],
            eigenvectors: vec![vec![1.0]],
        });
    }

    let mut a = entries.to_vec();
    // v holds eigenvectors as columns, row-major.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let frob = libm::sqrt(a.iter().map(|x| x * x).sum());
    let target = OFFDIAG_TARGET * frob.max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    s += 2.0 * a[i * n + j] * a[i * n + j];
                }
            }
            libm::sqrt(s)
        };
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Skip rotations already at rounding level.
                if apq.abs() <= f64::EPSILON * (app.abs() + aqq.abs()) * 0.5 {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + libm::sqrt(theta * theta + 1.0))
                } else {
                    -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                let tau = s / (1.0 + c);

                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = aip - s * (aiq + tau * aip);
                        a[i * n + q] = aiq + s * (aip - tau * aiq);
                        a[p * n + i] = a[i * n + p];
                        a[q * n + i] = a[i * n + q];
                    }
                }
                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = vip - s * (viq + tau * vip);
                    v[i * n + q] = viq + s * (vip - tau * viq);
                }
            }
        }
    }
    if !converged {
        // A final check: the last sweep may have reached the target.
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        if libm::sqrt(s) > target {
            return Err(EigenError::NoConvergence { sweeps: MAX_SWEEPS });
        }
    }

    // Sort ascending; stable in the original column index for determinism.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[i * n + i]
            .partial_cmp(&a[j * n + j])
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });

    let mut eigenvalues = Vec::with_capacity(n);
    let mut eigenvectors = Vec::with_capacity(n);
    for &col in &order {
        eigenvalues.push(a[col * n + col]);
        let mut vec_k: Vec<f64> = (0..n).map(|i| v[i * n + col]).collect();
        normalize_sign(&mut vec_k);
        eigenvectors.push(vec_k);
    }
    Ok(Spectrum { eigenvalues, eigenvectors })
}

/// Flip the vector so its entry of largest magnitude is positive; ties
/// break toward the lowest index.
fn normalize_sign(v: &mut [f64]) {
    let mut best = 0;
    for (i, x) in v.iter().enumerate() {
        if x.abs() > v[best].abs() {
            best = i;
        }
    }
    if v[best] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Full spectrum of a Laplacian.
pub fn eigendecompose(l: &Laplacian) -> Result<Spectrum, EigenError> {
    symmetric_eigen(l.n(), l.entries())
}

/// Second-smallest Laplacian eigenvalue.
pub fn algebraic_connectivity(l: &Laplacian) -> Result<f64, EigenError> {
    let s = eigendecompose(l)?;
    Ok(s.eigenvalues()[1])
}

fn grouping_tol(spectrum: &Spectrum) -> f64 {
    let lambda_max = *spectrum.eigenvalues().last().unwrap_or(&0.0);
    1e-8 * lambda_max.max(1.0)
}

/// The eigenspace of λ₂; requires a connected graph (λ₂ > 0).
pub fn fiedler_space(l: &Laplacian) -> Result<Eigenspace, EigenError> {
    let s = eigendecompose(l)?;
    let tol = grouping_tol(&s);
    let lambda2 = s.eigenvalues()[1];
    if lambda2 <= tol {
        return Err(EigenError::Disconnected { lambda2 });
    }
    let basis = s
        .eigenvalues()
        .iter()
        .zip(s.eigenvectors())
        .skip(1)
        .filter(|(&lam, _)| (lam - lambda2).abs() <= tol)
        .map(|(_, v)| v.clone())
        .collect();
    Ok(Eigenspace { eigenvalue: lambda2, basis })
}

/// Minimum Rayleigh quotient of `l` over the span of an orthonormal basis,
/// via eigendecomposition of the projected matrix `BᵀLB`.
pub fn restricted_min_eigenvalue(
    l: &Laplacian,
    basis: &[Vec<f64>],
) -> Result<f64, EigenError> {
    let d = basis.len();
    if d == 0 {
        return Err(EigenError::EmptyBasis);
    }
    let images: Vec<Vec<f64>> = basis
        .iter()
        .map(|b| l.apply(b).map_err(|_| EigenError::DimensionMismatch {
            expected: l.n(),
            got: b.len(),
        }))
        .collect::<Result<_, _>>()?;
    let mut proj = vec![0.0; d * d];
    for i in 0..d {
        for j in i..d {
            let x: f64 = basis[i].iter().zip(&images[j]).map(|(a, b)| a * b).sum();
            proj[i * d + j] = x;
            proj[j * d + i] = x;
        }
    }
    let s = symmetric_eigen(d, &proj)?;
    Ok(s.eigenvalues()[0])
}
