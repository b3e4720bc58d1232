//! Matrix exponential by scaling and squaring with a diagonal Padé
//! approximant, plus the closed form for 2x2 matrices.

use super::DenseMatrix;
use crate::error::{Error, Result};

/// Degree of the diagonal Padé approximant.
const PADE_DEGREE: usize = 6;

/// Norm bound for the scaled matrix before the approximant is applied.
const SCALED_NORM_BOUND: f64 = 0.5;

/// Computes `e^{A t}`.
///
/// The matrix `A t` is scaled by `2^-s` until its infinity norm is at most
/// 0.5, the `[6/6]` Padé approximant is evaluated, and the result is squared
/// `s` times. For `||A t|| <= 0.5` the truncation error of the approximant is
/// below `3.4e-16`.
pub fn expm(a: &DenseMatrix, t: f64) -> Result<DenseMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "expm needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if !t.is_finite() || !a.is_finite() {
        return Err(Error::NonFinite("expm input".into()));
    }
    let n = a.dim();
    let at = a.scale(t);
    let norm = at.norm_inf();
    if norm == 0.0 {
        return Ok(DenseMatrix::identity(n));
    }

    let squarings = if norm > SCALED_NORM_BOUND {
        (norm / SCALED_NORM_BOUND).log2().ceil() as i32
    } else {
        0
    };
    let x = at.scale(0.5_f64.powi(squarings));

    let mut numer = DenseMatrix::identity(n);
    let mut denom = DenseMatrix::identity(n);
    let mut power = DenseMatrix::identity(n);
    let mut c = 1.0;
    let q = PADE_DEGREE as f64;
    for k in 1..=PADE_DEGREE {
        let kf = k as f64;
        c *= (q - kf + 1.0) / ((2.0 * q - kf + 1.0) * kf);
        power = power.matmul(&x);
        let term = power.scale(c);
        numer = numer.add(&term);
        denom = if k % 2 == 0 { denom.add(&term) } else { denom.sub(&term) };
    }

    let mut result = denom.lu()?.solve_matrix(&numer);
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    if !result.is_finite() {
        return Err(Error::NonFinite(format!("expm overflow (||At|| = {norm:e})")));
    }
    Ok(result)
}

/// Closed-form `e^{A t}` for a 2x2 matrix using its eigenvalues.
///
/// With distinct real eigenvalues `eta1 > eta2`:
/// `e^{At} = e^{eta1 t} I + (e^{eta1 t} - e^{eta2 t}) / (eta1 - eta2) (A - eta1 I)`.
/// Near-repeated eigenvalues (`|eta1 - eta2| < 1e-9 max(1, |eta1|)`) use the
/// limit `e^{eta t} (I + t (A - eta I))`, and a complex pair uses the
/// equivalent real rotation form.
pub fn expm_2x2_closed(a: &DenseMatrix, t: f64) -> Result<DenseMatrix> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Dimension(format!(
            "expected a 2x2 matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let trace = a[(0, 0)] + a[(1, 1)];
    // (a11 - a22)^2 + 4 a12 a21 avoids cancellation in trace^2 - 4 det.
    let diff = a[(0, 0)] - a[(1, 1)];
    let disc = diff * diff + 4.0 * a[(0, 1)] * a[(1, 0)];
    let ident = DenseMatrix::identity(2);

    if disc < 0.0 {
        let alpha = 0.5 * trace;
        let beta = 0.5 * (-disc).sqrt();
        let shifted = a.sub(&ident.scale(alpha));
        let e = (alpha * t).exp();
        let s = if beta * t == 0.0 { t } else { (beta * t).sin() / beta };
        return Ok(ident.scale(e * (beta * t).cos()).add(&shifted.scale(e * s)));
    }

    let root = disc.sqrt();
    let eta1 = 0.5 * (trace + root);
    let eta2 = 0.5 * (trace - root);
    if (eta1 - eta2).abs() < 1e-9 * eta1.abs().max(1.0) {
        let eta = 0.5 * trace;
        let shifted = a.sub(&ident.scale(eta));
        let e = (eta * t).exp();
        return Ok(ident.add(&shifted.scale(t)).scale(e));
    }
    let gap = eta1 - eta2;
    // (e^{eta1 t} - e^{eta2 t}) / (eta1 - eta2), evaluated without cancellation.
    let divided = (eta2 * t).exp() * (gap * t).exp_m1() / gap;
    let shifted = a.sub(&ident.scale(eta1));
    let out = ident.scale((eta1 * t).exp()).add(&shifted.scale(divided));
    if !out.is_finite() {
        return Err(Error::NonFinite("2x2 exponential overflow".into()));
    }
    Ok(out)
}
