//! Serial multi-echelon chain with level-dependent flows between echelons.
//!
//! Echelon `i` receives `mu_i (x_{i-1}/C_{i-1}) (1 - x_i/C_i)` from above
//! (`mu_1 (1 - x_1/C_1)` at the top), passes on what echelon `i + 1`
//! receives, loses `theta_i x_i` to deterioration, and the last echelon
//! serves the external demand `lambda`.

use serde::{Deserialize, Serialize};

use crate::echelon::TrajectorySeries;
use crate::error::{Error, Result};
use crate::linalg::{gershgorin, norm2, tridiag_solve, TridiagonalMatrix};
use crate::netspec::ChainSpec;
use crate::oracle::{rk4_at_times, DEFAULT_RK4_STEP};

fn check_len(spec: &ChainSpec, x: &[f64]) {
    assert_eq!(x.len(), spec.len(), "state length must equal the number of echelons");
}

/// Flow into echelon `i` (0-based).
fn inflow(spec: &ChainSpec, x: &[f64], i: usize) -> f64 {
    let ci = spec.capacity(i);
    if i == 0 {
        spec.supply(0) * (1.0 - x[0] / ci)
    } else {
        spec.supply(i) * (x[i - 1] / spec.capacity(i - 1)) * (1.0 - x[i] / ci)
    }
}

/// `dx/dt` of the chain. Evaluates to zero at an equilibrium.
pub fn chain_rhs(spec: &ChainSpec, x: &[f64]) -> Vec<f64> {
    check_len(spec, x);
    let m = spec.len();
    (0..m)
        .map(|i| {
            let out = if i + 1 < m {
                inflow(spec, x, i + 1)
            } else {
                spec.terminal_demand()
            };
            inflow(spec, x, i) - out - spec.deterioration(i) * x[i]
        })
        .collect()
}

/// Analytic Jacobian of [`chain_rhs`] at `x`.
pub fn chain_jacobian(spec: &ChainSpec, x: &[f64]) -> TridiagonalMatrix {
    check_len(spec, x);
    let m = spec.len();
    let c = |i: usize| spec.capacity(i);
    let mu = |i: usize| spec.supply(i);
    let mut sub = vec![0.0; m - 1];
    let mut diag = vec![0.0; m];
    let mut sup = vec![0.0; m - 1];
    for i in 0..m {
        let mut d = -spec.deterioration(i);
        if i == 0 {
            d -= mu(0) / c(0);
        } else {
            d -= mu(i) * x[i - 1] / (c(i - 1) * c(i));
            sub[i - 1] = mu(i) / c(i - 1) * (1.0 - x[i] / c(i));
        }
        if i + 1 < m {
            d -= mu(i + 1) / c(i) * (1.0 - x[i + 1] / c(i + 1));
            sup[i] = mu(i + 1) * x[i] / (c(i) * c(i + 1));
        }
        diag[i] = d;
    }
    TridiagonalMatrix::new(sub, diag, sup).expect("chain Jacobian bands have consistent lengths")
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NewtonOptions {
    /// Stop once `||F(x)||_2 <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Halve the step until the residual norm decreases.
    pub damping: bool,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        NewtonOptions {
            tol: 1e-10,
            max_iter: 100,
            damping: false,
        }
    }
}

/// Iterates and residual norms of a Newton run. `iterates[0]` is the
/// starting point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewtonTrace {
    pub iterates: Vec<Vec<f64>>,
    pub residual_norms: Vec<f64>,
    pub converged: bool,
    /// Number of Newton updates performed.
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NewtonSolution {
    pub equilibrium: Vec<f64>,
    pub trace: NewtonTrace,
    /// `0 <= x_i <= C_i` for every echelon.
    pub within_capacity: bool,
    /// Upper Gershgorin bound on the eigenvalues of the Jacobian at the solution.
    pub gershgorin_bound: f64,
}

impl NewtonSolution {
    pub fn total(&self) -> f64 {
        self.equilibrium.iter().sum()
    }
}

const MAX_HALVINGS: usize = 30;

fn newton_step(spec: &ChainSpec, x: &[f64], f: &[f64]) -> Result<Vec<f64>> {
    let jac = chain_jacobian(spec, x);
    match tridiag_solve(&jac, f) {
        Ok(s) => Ok(s),
        // Thomas elimination does not pivot; retry with pivoted LU.
        Err(Error::Singular(_)) => jac.to_dense().solve(f),
        Err(e) => Err(e),
    }
}

/// Newton's method for `chain_rhs(spec, x) = 0` from the zero vector.
pub fn newton_solve(spec: &ChainSpec, opts: &NewtonOptions) -> Result<NewtonSolution> {
    newton_solve_from(spec, &vec![0.0; spec.len()], opts)
}

/// Newton's method for `chain_rhs(spec, x) = 0` from `x0`.
///
/// Iterates are not projected onto `[0, C]`. A failure to reach `tol`
/// within `max_iter` updates yields [`Error::NotConverged`] carrying the trace.
pub fn newton_solve_from(spec: &ChainSpec, x0: &[f64], opts: &NewtonOptions) -> Result<NewtonSolution> {
    if x0.len() != spec.len() {
        return Err(Error::Dimension(format!(
            "initial guess has length {}, chain has {} echelons",
            x0.len(),
            spec.len()
        )));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidSpec {
            field: "tol".into(),
            reason: format!("must be > 0, got {}", opts.tol),
        });
    }
    let mut x = x0.to_vec();
    let mut f = chain_rhs(spec, &x);
    let mut norm = norm2(&f);
    let mut trace = NewtonTrace {
        iterates: vec![x.clone()],
        residual_norms: vec![norm],
        converged: false,
        iterations: 0,
    };
    while norm > opts.tol {
        if trace.iterations >= opts.max_iter {
            return Err(Error::NotConverged { trace: Box::new(trace) });
        }
        let step = newton_step(spec, &x, &f).map_err(|e| match e {
            Error::Singular(msg) => Error::Singular(format!("Jacobian at iteration {}: {msg}", trace.iterations)),
            other => other,
        })?;
        let mut scale = 1.0;
        let mut next: Vec<f64>;
        let mut next_f: Vec<f64>;
        let mut halvings = 0;
        loop {
            next = x.iter().zip(&step).map(|(x, s)| x - scale * s).collect();
            next_f = chain_rhs(spec, &next);
            if !opts.damping || norm2(&next_f) < norm || halvings == MAX_HALVINGS {
                break;
            }
            scale /= 2.0;
            halvings += 1;
        }
        if next.iter().chain(&next_f).any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("newton iterate {}", trace.iterations + 1)));
        }
        x = next;
        f = next_f;
        norm = norm2(&f);
        trace.iterations += 1;
        trace.iterates.push(x.clone());
        trace.residual_norms.push(norm);
    }
    trace.converged = true;
    let within_capacity = x.iter().enumerate().all(|(i, &v)| v >= 0.0 && v <= spec.capacity(i));
    let gershgorin_bound = gershgorin(&chain_jacobian(spec, &x).to_dense()).upper_bound;
    Ok(NewtonSolution {
        equilibrium: x,
        trace,
        within_capacity,
        gershgorin_bound,
    })
}

/// One inequality `lhs < rhs` of the state-independent stability condition.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionFlag {
    /// 1-based echelon index.
    pub echelon: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KantorovichCertificate {
    /// Lipschitz constant `M` of the Jacobian.
    pub lipschitz: f64,
    /// `|F(0)|`.
    pub residual_norm: f64,
    /// Bound on `|DF(0)^-1|`; absent when the stability condition fails.
    pub jacobian_inverse_bound: Option<f64>,
    /// Left-hand side of the `<= 1/16` inequality.
    pub composite: Option<f64>,
    pub applicable: bool,
    pub satisfied: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityCertificate {
    pub condition: Vec<ConditionFlag>,
    /// All condition inequalities hold.
    pub satisfied: bool,
    pub note: String,
    pub kantorovich: Option<KantorovichCertificate>,
}

pub const SUFFICIENT_NOTE: &str = "sufficient condition only: a violated inequality does not imply instability";

/// Evaluates the three kinds of inequality of the chain stability condition:
///
/// ```text
/// mu_2/C_1 < mu_1/C_1 + theta_1
/// mu_i/C_{i-1} + mu_{i+1}/C_{i+1} < theta_i    (1 < i < m)
/// mu_m/C_{m-1} < theta_m
/// ```
pub fn stability_condition(spec: &ChainSpec) -> StabilityCertificate {
    let m = spec.len();
    let c = |i: usize| spec.capacity(i);
    let mu = |i: usize| spec.supply(i);
    let condition: Vec<ConditionFlag> = (0..m)
        .map(|i| {
            let (lhs, rhs) = if i == 0 {
                (mu(1) / c(0), mu(0) / c(0) + spec.deterioration(0))
            } else if i + 1 < m {
                (mu(i) / c(i - 1) + mu(i + 1) / c(i + 1), spec.deterioration(i))
            } else {
                (mu(i) / c(i - 1), spec.deterioration(i))
            };
            ConditionFlag {
                echelon: i + 1,
                lhs,
                rhs,
                holds: lhs < rhs,
            }
        })
        .collect();
    StabilityCertificate {
        satisfied: condition.iter().all(|f| f.holds),
        condition,
        note: SUFFICIENT_NOTE.into(),
        kantorovich: None,
    }
}

/// Stability condition plus the Kantorovich test for Newton from `x = 0`:
///
/// ```text
/// M^2 = 4 sum_{i>=2} (mu_i / (C_{i-1} C_i))^2,   |F(0)|^2 = mu_1^2 + lambda^2
/// |DF(0)^-1| <= sqrt(m) / min_i d_i
/// m^2 (mu_1^2 + lambda^2) sum_{i>=2} (mu_i / (C_{i-1} C_i))^2 / (min_i d_i)^4 <= 1/16
/// ```
///
/// with `d_1 = mu_1/C_1 + theta_1 + mu_2/C_1`,
/// `d_i = theta_i + mu_{i+1}/C_i - mu_i/C_{i-1}` and `d_m = theta_m - mu_m/C_{m-1}`.
/// The test is only applicable when the stability condition holds.
pub fn kantorovich_certificate(spec: &ChainSpec) -> StabilityCertificate {
    let mut cert = stability_condition(spec);
    let m = spec.len();
    let c = |i: usize| spec.capacity(i);
    let mu = |i: usize| spec.supply(i);
    let sum_sq: f64 = (1..m).map(|i| (mu(i) / (c(i - 1) * c(i))).powi(2)).sum();
    let lipschitz = 2.0 * sum_sq.sqrt();
    let residual_sq = mu(0).powi(2) + spec.terminal_demand().powi(2);
    let mut k = KantorovichCertificate {
        lipschitz,
        residual_norm: residual_sq.sqrt(),
        jacobian_inverse_bound: None,
        composite: None,
        applicable: cert.satisfied,
        satisfied: false,
    };
    if cert.satisfied {
        let min_margin = (0..m)
            .map(|i| {
                if i == 0 {
                    mu(0) / c(0) + spec.deterioration(0) + mu(1) / c(0)
                } else if i + 1 < m {
                    spec.deterioration(i) + mu(i + 1) / c(i) - mu(i) / c(i - 1)
                } else {
                    spec.deterioration(i) - mu(i) / c(i - 1)
                }
            })
            .fold(f64::INFINITY, f64::min);
        if min_margin > 0.0 {
            let mf = m as f64;
            let composite = mf * mf * residual_sq * sum_sq / min_margin.powi(4);
            k.jacobian_inverse_bound = Some(mf.sqrt() / min_margin);
            k.composite = Some(composite);
            k.satisfied = composite <= 1.0 / 16.0;
        } else {
            k.applicable = false;
        }
    }
    cert.kantorovich = Some(k);
    cert
}

/// Integrates the chain dynamics with RK4 at the default step and samples
/// the requested times.
pub fn simulate_chain(spec: &ChainSpec, x0: &[f64], times: &[f64]) -> Result<TrajectorySeries> {
    if x0.len() != spec.len() {
        return Err(Error::Dimension(format!(
            "initial state has length {}, chain has {} echelons",
            x0.len(),
            spec.len()
        )));
    }
    rk4_at_times(|x| chain_rhs(spec, x), x0, times, DEFAULT_RK4_STEP)
}
