use serde::{Deserialize, Serialize};

use super::DenseMatrix;

/// One Gershgorin disc: `|z - center| <= radius`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GershgorinDisc {
    pub center: f64,
    pub radius: f64,
}

/// Column discs of a matrix (the row discs of its transpose) and the
/// resulting bounds on the real parts of its eigenvalues.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GershgorinReport {
    pub discs: Vec<GershgorinDisc>,
    /// `max_j (A_jj + sum_{i != j} |A_ij|)`.
    pub upper_bound: f64,
    /// `min_j (A_jj - sum_{i != j} |A_ij|)`.
    pub lower_bound: f64,
}

impl GershgorinReport {
    /// Every eigenvalue has negative real part.
    pub fn certifies_stability(&self) -> bool {
        self.upper_bound < 0.0
    }
}

pub fn gershgorin(a: &DenseMatrix) -> GershgorinReport {
    assert!(a.is_square(), "gershgorin needs a square matrix");
    let n = a.dim();
    let discs: Vec<GershgorinDisc> = (0..n)
        .map(|j| GershgorinDisc {
            center: a[(j, j)],
            radius: (0..n).filter(|&i| i != j).map(|i| a[(i, j)].abs()).sum(),
        })
        .collect();
    let upper_bound = discs
        .iter()
        .map(|d| d.center + d.radius)
        .fold(f64::NEG_INFINITY, f64::max);
    let lower_bound = discs.iter().map(|d| d.center - d.radius).fold(f64::INFINITY, f64::min);
    GershgorinReport {
        discs,
        upper_bound,
        lower_bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_bound() {
        let r = gershgorin(&DenseMatrix::from_diagonal(&[-1.0, -2.0]));
        assert_eq!(r.upper_bound, -1.0);
        assert_eq!(r.lower_bound, -2.0);
        assert!(r.discs.iter().all(|d| d.radius == 0.0));
    }

    #[test]
    fn uses_columns() {
        // Row sums would give max(-1 + 5, ...) = 4; column discs give 0 and 4.
        let a = DenseMatrix::from_rows(&[[-1.0, 5.0], [1.0, -1.0]]).unwrap();
        let r = gershgorin(&a);
        assert_eq!(r.discs[0].radius, 1.0);
        assert_eq!(r.discs[1].radius, 5.0);
        assert_eq!(r.upper_bound, 4.0);
    }
}
