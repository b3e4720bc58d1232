//! Tridiagonal matrices: Thomas-algorithm solve and the two-sided
//! continuant recurrence for the explicit inverse.

use serde::{Deserialize, Serialize};

use super::{DenseMatrix, PIVOT_TOLERANCE};
use crate::error::{Error, Result};

/// Square tridiagonal matrix stored by its three bands.
///
/// `sub[i]` is entry `(i + 1, i)`, `sup[i]` is entry `(i, i + 1)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagonalMatrix {
    sub: Vec<f64>,
    diag: Vec<f64>,
    sup: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(sub: Vec<f64>, diag: Vec<f64>, sup: Vec<f64>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::Dimension("tridiagonal matrix must be at least 1x1".into()));
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::Dimension(format!(
                "bands of lengths ({}, {}, {}) do not form a tridiagonal matrix",
                sub.len(),
                n,
                sup.len()
            )));
        }
        if sub.iter().chain(&diag).chain(&sup).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("tridiagonal entry".into()));
        }
        Ok(TridiagonalMatrix { sub, diag, sup })
    }

    pub fn identity(n: usize) -> Self {
        TridiagonalMatrix {
            sub: vec![0.0; n.saturating_sub(1)],
            diag: vec![1.0; n],
            sup: vec![0.0; n.saturating_sub(1)],
        }
    }

    /// Extracts the three bands of a square matrix. Fails if any entry off
    /// the bands is nonzero.
    pub fn from_dense(a: &DenseMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension("from_dense needs a square matrix".into()));
        }
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                if i.abs_diff(j) > 1 && a[(i, j)] != 0.0 {
                    return Err(Error::Dimension(format!(
                        "entry ({i}, {j}) lies outside the tridiagonal band"
                    )));
                }
            }
        }
        Self::new(
            (0..n.saturating_sub(1)).map(|i| a[(i + 1, i)]).collect(),
            a.diagonal(),
            (0..n.saturating_sub(1)).map(|i| a[(i, i + 1)]).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn sub(&self) -> &[f64] {
        &self.sub
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn sup(&self) -> &[f64] {
        &self.sup
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        if i == j {
            self.diag[i]
        } else if j == i + 1 {
            self.sup[i]
        } else if i == j + 1 {
            self.sub[j]
        } else {
            0.0
        }
    }

    pub fn to_dense(&self) -> DenseMatrix {
        let n = self.dim();
        DenseMatrix::from_fn(n, n, |i, j| self.get(i, j))
    }

    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(x.len(), n);
        (0..n)
            .map(|i| {
                let mut v = self.diag[i] * x[i];
                if i > 0 {
                    v += self.sub[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    v += self.sup[i] * x[i + 1];
                }
                v
            })
            .collect()
    }

    /// Largest absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim()).map(|i| self.row_scale(i)).fold(0.0, f64::max)
    }

    fn row_scale(&self, i: usize) -> f64 {
        let n = self.dim();
        let mut s = self.diag[i].abs();
        if i > 0 {
            s += self.sub[i - 1].abs();
        }
        if i + 1 < n {
            s += self.sup[i].abs();
        }
        s
    }
}

/// Solves `T x = rhs` by forward elimination and back substitution.
///
/// No pivoting is performed; a pivot whose magnitude is below
/// `1e-14` times its row scale is reported as singular.
pub fn tridiag_solve(t: &TridiagonalMatrix, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = t.dim();
    if rhs.len() != n {
        return Err(Error::Dimension(format!(
            "rhs has length {}, matrix is {n}x{n}",
            rhs.len()
        )));
    }
    let mut c_prime = vec![0.0; n];
    let mut d_prime = vec![0.0; n];
    for i in 0..n {
        let lower = if i > 0 { t.sub[i - 1] } else { 0.0 };
        let prev_c = if i > 0 { c_prime[i - 1] } else { 0.0 };
        let prev_d = if i > 0 { d_prime[i - 1] } else { 0.0 };
        let pivot = t.diag[i] - lower * prev_c;
        let scale = t.row_scale(i);
        if scale == 0.0 || pivot.abs() < PIVOT_TOLERANCE * scale {
            return Err(Error::Singular(format!("tridiagonal pivot {pivot:e} at row {i}")));
        }
        c_prime[i] = if i + 1 < n { t.sup[i] / pivot } else { 0.0 };
        d_prime[i] = (rhs[i] - lower * prev_d) / pivot;
    }
    let mut x = d_prime;
    for i in (0..n.saturating_sub(1)).rev() {
        x[i] -= c_prime[i] * x[i + 1];
    }
    Ok(x)
}

/// Explicit inverse of a tridiagonal matrix through the leading and
/// trailing principal minors.
///
/// With `theta_0 = 1`, `theta_i = a_i theta_{i-1} - b_{i-1} c_{i-1} theta_{i-2}`
/// and `phi_{n+1} = 1`, `phi_i = a_i phi_{i+1} - b_i c_i phi_{i+2}` (diagonal
/// `a`, super-diagonal `b`, sub-diagonal `c`):
///
/// ```text
/// (T^-1)_ij = (-1)^{i+j} b_i..b_{j-1} theta_{i-1} phi_{j+1} / theta_n   i <= j
/// (T^-1)_ij = (-1)^{i+j} c_j..c_{i-1} theta_{j-1} phi_{i+1} / theta_n   i >  j
/// ```
///
/// Returns [`Error::Breakdown`] when `theta_n` (the determinant) vanishes
/// relative to the product of row scales; callers then use a dense inverse.
pub fn tridiag_inverse(t: &TridiagonalMatrix) -> Result<DenseMatrix> {
    let n = t.dim();
    let (a, b, c) = (&t.diag, &t.sup, &t.sub);

    // theta[k] is the k-th leading principal minor, theta[0] = 1.
    let mut theta = vec![0.0; n + 1];
    theta[0] = 1.0;
    theta[1] = a[0];
    for k in 2..=n {
        theta[k] = a[k - 1] * theta[k - 1] - b[k - 2] * c[k - 2] * theta[k - 2];
    }
    // phi[k] is the trailing minor from row k (1-based), phi[n + 1] = 1.
    let mut phi = vec![0.0; n + 2];
    phi[n + 1] = 1.0;
    phi[n] = a[n - 1];
    for k in (1..n).rev() {
        phi[k] = a[k - 1] * phi[k + 1] - b[k - 1] * c[k - 1] * phi[k + 2];
    }

    let det = theta[n];
    let scale: f64 = (0..n).map(|i| t.row_scale(i)).product();
    if !det.is_finite() || det.abs() <= PIVOT_TOLERANCE * scale || theta.iter().any(|v| !v.is_finite()) {
        return Err(Error::Breakdown(format!(
            "tridiagonal determinant {det:e} (row-scale product {scale:e})"
        )));
    }

    let mut inv = DenseMatrix::zeros(n, n);
    for i in 1..=n {
        // Upper triangle including the diagonal.
        let mut band = 1.0;
        for j in i..=n {
            if j > i {
                band *= -b[j - 2];
            }
            inv[(i - 1, j - 1)] = band * theta[i - 1] * phi[j + 1] / det;
        }
        // Strict lower triangle.
        let mut band = 1.0;
        for j in (1..i).rev() {
            band *= -c[j - 1];
            inv[(i - 1, j - 1)] = band * theta[j - 1] * phi[i + 1] / det;
        }
    }
    if !inv.is_finite() {
        return Err(Error::Breakdown("non-finite inverse entry".into()));
    }
    Ok(inv)
}
