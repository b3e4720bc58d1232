//! Independent reference computations: fixed-step RK4 integration and
//! central finite-difference Jacobians.

use crate::echelon::{check_times, TrajectorySeries};
use crate::error::{Error, Result};
use crate::linalg::DenseMatrix;

pub const DEFAULT_RK4_STEP: f64 = 1e-2;
pub const DEFAULT_FD_STEP: f64 = 1e-6;

fn rk4_step(rhs: &impl Fn(&[f64]) -> Vec<f64>, x: &[f64], h: f64) -> Vec<f64> {
    let axpy = |a: &[f64], s: f64, k: &[f64]| -> Vec<f64> { a.iter().zip(k).map(|(a, k)| a + s * k).collect() };
    let k1 = rhs(x);
    let k2 = rhs(&axpy(x, h / 2.0, &k1));
    let k3 = rhs(&axpy(x, h / 2.0, &k2));
    let k4 = rhs(&axpy(x, h, &k3));
    (0..x.len())
        .map(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

fn check_step(step: f64) -> Result<()> {
    if step > 0.0 && step.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidSpec {
            field: "step".into(),
            reason: format!("must be finite and > 0, got {step}"),
        })
    }
}

/// Advances `x` from `t0` to `t1` in steps of `step`, shortening the last one.
fn advance(rhs: &impl Fn(&[f64]) -> Vec<f64>, x: &mut Vec<f64>, t0: f64, t1: f64, step: f64) -> Result<()> {
    let mut t = t0;
    while t < t1 {
        let h = step.min(t1 - t);
        *x = rk4_step(rhs, x, h);
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("rk4 state at t = {}", t + h)));
        }
        // Snap to the target once the remainder is rounding noise.
        t = if t1 - (t + h) <= 1e-12 * t1.abs().max(1.0) {
            t1
        } else {
            t + h
        };
    }
    Ok(())
}

/// Integrates `x' = rhs(x)` from 0 to `t_end` and records every step.
pub fn rk4_integrate(rhs: impl Fn(&[f64]) -> Vec<f64>, x0: &[f64], t_end: f64, step: f64) -> Result<TrajectorySeries> {
    check_step(step)?;
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(Error::InvalidSpec {
            field: "t_end".into(),
            reason: format!("must be finite and >= 0, got {t_end}"),
        });
    }
    let n_steps = (t_end / step).ceil() as usize;
    let mut series = TrajectorySeries::with_capacity(n_steps + 1);
    let mut x = x0.to_vec();
    series.push(0.0, x.clone());
    for k in 0..n_steps {
        let t0 = k as f64 * step;
        let t1 = ((k + 1) as f64 * step).min(t_end);
        if t1 <= t0 {
            break;
        }
        advance(&rhs, &mut x, t0, t1, step)?;
        series.push(t1, x.clone());
    }
    Ok(series)
}

/// Integrates `x' = rhs(x)` and reports the state at the requested times only.
pub fn rk4_at_times(
    rhs: impl Fn(&[f64]) -> Vec<f64>,
    x0: &[f64],
    times: &[f64],
    step: f64,
) -> Result<TrajectorySeries> {
    check_step(step)?;
    check_times(times)?;
    let mut series = TrajectorySeries::with_capacity(times.len());
    let mut x = x0.to_vec();
    let mut t = 0.0;
    for &target in times {
        advance(&rhs, &mut x, t, target, step)?;
        t = target;
        series.push(target, x.clone());
    }
    Ok(series)
}

/// Central-difference Jacobian of `f` at `x`, with per-coordinate step
/// `h * max(1, |x_j|)`.
pub fn finite_difference_jacobian(f: impl Fn(&[f64]) -> Vec<f64>, x: &[f64], h: f64) -> DenseMatrix {
    let n = x.len();
    let m = f(x).len();
    let mut jac = DenseMatrix::zeros(m, n);
    let mut probe = x.to_vec();
    for j in 0..n {
        let hj = h * x[j].abs().max(1.0);
        probe[j] = x[j] + hj;
        let fp = f(&probe);
        probe[j] = x[j] - hj;
        let fm = f(&probe);
        probe[j] = x[j];
        for i in 0..m {
            jac[(i, j)] = (fp[i] - fm[i]) / (2.0 * hj);
        }
    }
    jac
}
