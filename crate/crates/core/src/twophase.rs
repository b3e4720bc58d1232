//! Two-phase approximation of a full network: collapse each echelon into one
//! warehouse and solve the chain, then freeze the inter-echelon flows at the
//! chain solution and solve each echelon's linear model separately.

use serde::{Deserialize, Serialize};

use crate::chain::{newton_solve, NewtonOptions, NewtonSolution};
use crate::echelon::{build_system, equilibrium, EquilibriumReport, MethodChoice};
use crate::error::{Error, Result};
use crate::netspec::{ChainEchelon, ChainSpec, FullNetworkSpec};

/// Collapses every echelon to capacity `sum L_i` and deterioration
/// `mean theta_i`, keeping the declared echelon supply rate.
pub fn phase1_aggregate(net: &FullNetworkSpec) -> ChainSpec {
    let echelons = net
        .echelons()
        .iter()
        .map(|e| {
            let w = e.echelon.warehouses();
            ChainEchelon {
                capacity: w.iter().map(|w| w.max_level).sum(),
                max_supply: e.supply,
                deterioration: w.iter().map(|w| w.deterioration).sum::<f64>() / w.len() as f64,
            }
        })
        .collect();
    ChainSpec::new(echelons, net.terminal_demand()).expect("aggregated echelons inherit valid parameters")
}

/// Per-warehouse rates of one echelon with the neighbouring echelons held at
/// the chain equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrozenRates {
    pub supply: f64,
    pub demand: f64,
}

/// Rates for echelon `e` (1-based) given the chain solution `x`:
///
/// ```text
/// mu_i     = mu_1 / n                                      e = 1
///          = (mu_e / n) x_{e-1} / C_{e-1}                  e > 1
/// lambda_i = lambda / n                                    e = m
///          = (mu_{e+1} / n) (x_e / C_e) (1 - x_{e+1} / C_{e+1})   e < m
/// ```
pub fn frozen_rates(chain: &ChainSpec, x: &[f64], e: usize, n: usize) -> FrozenRates {
    let m = chain.len();
    let k = e - 1;
    let nf = n as f64;
    let supply = if k == 0 {
        chain.supply(0) / nf
    } else {
        chain.supply(k) / nf * x[k - 1] / chain.capacity(k - 1)
    };
    let demand = if k + 1 == m {
        chain.terminal_demand() / nf
    } else {
        chain.supply(k + 1) / nf * (x[k] / chain.capacity(k)) * (1.0 - x[k + 1] / chain.capacity(k + 1))
    };
    FrozenRates { supply, demand }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Disaggregation {
    /// 1-based echelon index.
    pub echelon: usize,
    pub rates: FrozenRates,
    pub report: EquilibriumReport,
    /// `sum_i y_i* - x_e*`.
    pub gap: f64,
}

fn check_echelon(net: &FullNetworkSpec, e: usize) -> Result<()> {
    if e == 0 || e > net.len() {
        return Err(Error::InvalidSpec {
            field: "echelon".into(),
            reason: format!("must be in 1..={}, got {e}", net.len()),
        });
    }
    Ok(())
}

/// Solves the warehouse-level equilibrium of echelon `e` (1-based) with the
/// flows frozen at `chain_eq`.
pub fn phase2_disaggregate(net: &FullNetworkSpec, chain_eq: &[f64], e: usize) -> Result<Disaggregation> {
    check_echelon(net, e)?;
    if chain_eq.len() != net.len() {
        return Err(Error::Dimension(format!(
            "chain solution has length {}, network has {} echelons",
            chain_eq.len(),
            net.len()
        )));
    }
    let chain = phase1_aggregate(net);
    let spec = &net.echelons()[e - 1].echelon;
    let rates = frozen_rates(&chain, chain_eq, e, spec.len());
    let frozen = spec.with_rates(rates.supply, rates.demand)?;
    let report = equilibrium(&build_system(&frozen), MethodChoice::Auto)?;
    Ok(Disaggregation {
        echelon: e,
        rates,
        gap: report.total() - chain_eq[e - 1],
        report,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TwoPhaseResult {
    pub chain: ChainSpec,
    pub chain_solution: NewtonSolution,
    pub echelons: Vec<Disaggregation>,
    /// `m + max n`, the largest system handled at once across both phases
    /// counted together.
    pub states_handled: usize,
    /// Total number of warehouses in the network.
    pub full_states: usize,
}

/// Runs both phases for every echelon.
pub fn two_phase(net: &FullNetworkSpec, opts: &NewtonOptions) -> Result<TwoPhaseResult> {
    let chain = phase1_aggregate(net);
    let chain_solution = newton_solve(&chain, opts)?;
    let echelons = (1..=net.len())
        .map(|e| phase2_disaggregate(net, &chain_solution.equilibrium, e))
        .collect::<Result<Vec<_>>>()?;
    let max_n = net.echelons().iter().map(|e| e.echelon.len()).max().unwrap_or(0);
    Ok(TwoPhaseResult {
        states_handled: net.len() + max_n,
        full_states: net.warehouse_count(),
        chain,
        chain_solution,
        echelons,
    })
}
