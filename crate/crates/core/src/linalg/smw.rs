use super::DenseMatrix;
use crate::error::{Error, Result};

/// Inverse of a low-rank update `(M + U V^t)^{-1}` from a known `M^{-1}`:
///
/// `M^{-1} - M^{-1} U (I_l + V^t M^{-1} U)^{-1} V^t M^{-1}`.
///
/// `U` and `V` are `n x l`. Fails with [`Error::Singular`] when the inner
/// `l x l` capacitance matrix is singular.
pub fn smw_inverse(m_inv: &DenseMatrix, u: &DenseMatrix, v: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m_inv.rows();
    if !m_inv.is_square() || u.rows() != n || v.rows() != n || u.cols() != v.cols() {
        return Err(Error::Dimension(format!(
            "smw: M^-1 is {}x{}, U is {}x{}, V is {}x{}",
            m_inv.rows(),
            m_inv.cols(),
            u.rows(),
            u.cols(),
            v.rows(),
            v.cols()
        )));
    }
    let l = u.cols();
    let m_inv_u = m_inv.matmul(u);
    let vt = v.transpose();
    let capacitance = DenseMatrix::identity(l).add(&vt.matmul(&m_inv_u));
    let cap_lu = capacitance
        .lu()
        .map_err(|e| Error::Singular(format!("SMW capacitance matrix: {e}")))?;
    let vt_m_inv = vt.matmul(m_inv);
    let correction = m_inv_u.matmul(&cap_lu.solve_matrix(&vt_m_inv));
    Ok(m_inv.sub(&correction))
}
