//! Single-warehouse surrogate for an echelon: summed capacity, supply and
//! demand with the mean deterioration rate,
//!
//! ```text
//! y_a' = -(mu_a / L_a + theta_bar) y_a + (mu_a - lambda_a)
//! ```

use serde::{Deserialize, Serialize};

use crate::echelon::{check_times, TrajectorySeries};
use crate::error::{Error, Result};
use crate::netspec::EchelonSpec;

/// Relative tolerance for the equalities in [`exactness_conditions`].
pub const EXACTNESS_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AggregateParams {
    /// `L_a = sum L_i`.
    pub total_level: f64,
    /// `mu_a = sum mu_i`.
    pub total_supply: f64,
    /// `lambda_a = sum lambda_i`.
    pub total_demand: f64,
    /// `theta_bar = (1/n) sum theta_i`.
    pub mean_deterioration: f64,
}

impl AggregateParams {
    /// `mu_a / L_a + theta_bar`.
    pub fn decay_rate(&self) -> f64 {
        self.total_supply / self.total_level + self.mean_deterioration
    }

    fn checked_rate(&self) -> Result<f64> {
        let r = self.decay_rate();
        if r > 0.0 && r.is_finite() {
            Ok(r)
        } else {
            Err(Error::NotApplicable(format!(
                "aggregated decay rate mu_a/L_a + theta_bar = {r} must be positive"
            )))
        }
    }
}

pub fn aggregate_params(spec: &EchelonSpec) -> AggregateParams {
    let w = spec.warehouses();
    AggregateParams {
        total_level: w.iter().map(|w| w.max_level).sum(),
        total_supply: w.iter().map(|w| w.max_supply).sum(),
        total_demand: w.iter().map(|w| w.demand).sum(),
        mean_deterioration: w.iter().map(|w| w.deterioration).sum::<f64>() / w.len() as f64,
    }
}

/// `y_a* = (mu_a - lambda_a) / (mu_a / L_a + theta_bar)`.
pub fn aggregated_equilibrium(p: &AggregateParams) -> Result<f64> {
    Ok((p.total_supply - p.total_demand) / p.checked_rate()?)
}

/// Closed-form aggregated level
/// `y_a(t) = e^{-rt} y0 - e^{-rt} (mu_a - lambda_a) / r + (mu_a - lambda_a) / r`
/// with `r = mu_a / L_a + theta_bar`.
pub fn aggregated_trajectory(p: &AggregateParams, y0: f64, times: &[f64]) -> Result<TrajectorySeries> {
    if !(y0 >= 0.0) || !y0.is_finite() {
        return Err(Error::InvalidSpec {
            field: "y0".into(),
            reason: format!("aggregated initial level must be finite and >= 0, got {y0}"),
        });
    }
    check_times(times)?;
    let r = p.checked_rate()?;
    let net = p.total_supply - p.total_demand;
    let mut series = TrajectorySeries::with_capacity(times.len());
    for &t in times {
        if t == 0.0 {
            series.push(t, vec![y0]);
            continue;
        }
        let e = (-r * t).exp();
        series.push(t, vec![e * y0 - e / r * net + net / r]);
    }
    Ok(series)
}

fn all_close(values: impl Iterator<Item = f64>) -> bool {
    let v: Vec<f64> = values.collect();
    let first = v[0];
    v.iter()
        .all(|&x| (x - first).abs() <= EXACTNESS_RTOL * first.abs().max(x.abs()))
}

/// True iff all `mu_i / L_i` are equal and all `theta_i` are equal (to a
/// relative tolerance of `1e-12`). Then the aggregate reproduces the sum of
/// the warehouse levels exactly, both at equilibrium and along trajectories
/// started from matching totals.
pub fn exactness_conditions(spec: &EchelonSpec) -> bool {
    let w = spec.warehouses();
    all_close(w.iter().map(|w| w.max_supply / w.max_level)) && all_close(w.iter().map(|w| w.deterioration))
}

/// Upper bound on `|y_a* - sum y_i*|` for echelons with equal `L_i`:
///
/// `sqrt(n) (mu_a - lambda_a) / min_i(mu_i / L_i + theta_i) + (mu_a - lambda_a) / (mu_a / L_a + theta_bar)`.
///
/// The bound is guaranteed when every `mu_i >= lambda_i`. If some warehouse
/// has `mu_i < lambda_i` the actual gap can exceed it.
pub fn aggregation_error_bound(spec: &EchelonSpec) -> Result<f64> {
    if !spec.has_uniform_capacity() {
        return Err(Error::NotApplicable(
            "aggregation error bound requires equal L_i across warehouses".into(),
        ));
    }
    let p = aggregate_params(spec);
    let net = p.total_supply - p.total_demand;
    if net < 0.0 {
        return Err(Error::NotApplicable(format!(
            "aggregation error bound requires mu_a >= lambda_a (mu_a - lambda_a = {net})"
        )));
    }
    let min_decay = spec
        .warehouses()
        .iter()
        .map(|w| w.decay_rate())
        .fold(f64::INFINITY, f64::min);
    if !(min_decay > 0.0) {
        return Err(Error::NotApplicable(
            "min_i(mu_i/L_i + theta_i) must be positive".into(),
        ));
    }
    let n = spec.len() as f64;
    Ok(n.sqrt() * net / min_decay + net / p.checked_rate()?)
}
