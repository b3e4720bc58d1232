//! Continuous-time inventory models for networks of warehouses holding
//! deteriorating items, with level-dependent lateral transshipment inside an
//! echelon and level-dependent flows between echelons.
//!
//! - [`echelon`]: the linear one-echelon model, its trajectories and equilibria.
//! - [`aggregate`]: the single-warehouse surrogate of an echelon.
//! - [`chain`]: the nonlinear serial chain of aggregated echelons.
//! - [`twophase`]: chain solution followed by per-echelon disaggregation.
//! - [`oracle`]: RK4 and finite differences for cross-checking.

pub mod aggregate;
pub mod chain;
pub mod echelon;
pub mod error;
pub mod linalg;
pub mod netspec;
pub mod oracle;
pub mod twophase;

pub use aggregate::{aggregate_params, aggregated_equilibrium, aggregated_trajectory, AggregateParams};
pub use chain::{
    chain_jacobian, chain_rhs, kantorovich_certificate, newton_solve, newton_solve_from, simulate_chain,
    stability_condition, NewtonOptions, NewtonSolution, NewtonTrace, StabilityCertificate,
};
pub use echelon::{
    build_system, equilibrium, solve_trajectory, EquilibriumReport, LinearSystem, MethodChoice, SolveMethod,
    TrajectorySeries,
};
pub use error::{Error, Result};
pub use linalg::{DenseMatrix, TridiagonalMatrix};
pub use netspec::{
    parse_config, ChainEchelon, ChainSpec, Config, ConfigDoc, EchelonSpec, FullNetworkSpec, Model, NetworkEchelon,
    WarehouseParams,
};
pub use twophase::{phase1_aggregate, phase2_disaggregate, two_phase, TwoPhaseResult};
