//! The one-echelon model `y' = A y + b`: system construction, closed-form
//! trajectories, equilibria and the structured fast paths for two-warehouse,
//! star and linear (path) transshipment networks.
//!
//! For warehouse `i` with maximum level `L_i`, supply `mu_i`, deterioration
//! `theta_i` and demand `lambda_i`, and maximum transshipment rate `gamma_ij`
//! from `i` to `j`:
//!
//! ```text
//! A_ii = -(mu_i / L_i + theta_i + sum_j gamma_ij / L_i)
//! A_ij = gamma_ji / L_j                (i != j, inflow from j)
//! b_i  = mu_i - lambda_i
//! ```
//!
//! Every column of `A` sums to `-(mu_j / L_j + theta_j)`, so the Gershgorin
//! discs of `A^t` lie in the open left half-plane.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{expm, expm_2x2_closed, gershgorin, smw_inverse, tridiag_inverse, DenseMatrix, TridiagonalMatrix};
use crate::netspec::EchelonSpec;

/// Sparsity pattern of the transshipment network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Structure {
    General,
    /// Exactly two warehouses.
    TwoWarehouse,
    /// Hub and spokes: only links to or from warehouse 1.
    Star,
    /// Path: only links between neighbours `i` and `i + 1`.
    LinearChain,
}

/// How an equilibrium was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    Dense,
    TwoWarehouseClosedForm,
    ShermanMorrisonWoodbury,
    Tridiagonal,
}

impl SolveMethod {
    pub fn name(&self) -> &'static str {
        match self {
            SolveMethod::Dense => "dense",
            SolveMethod::TwoWarehouseClosedForm => "two-warehouse",
            SolveMethod::ShermanMorrisonWoodbury => "sherman-morrison-woodbury",
            SolveMethod::Tridiagonal => "tridiagonal",
        }
    }
}

/// Solver selection: follow the detected structure, or always use dense LU.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    #[default]
    Auto,
    Dense,
}

/// The pair `(A, b)` of the linear one-echelon model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearSystem {
    a: DenseMatrix,
    b: Vec<f64>,
    /// `mu_i / L_i + theta_i` per warehouse.
    decay: Vec<f64>,
    structure: Structure,
    symmetric: bool,
}

impl LinearSystem {
    pub fn a(&self) -> &DenseMatrix {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn structure(&self) -> Structure {
        self.structure
    }

    /// True when every `L_i` is equal and `gamma` is symmetric, so `A = A^t`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn dim(&self) -> usize {
        self.b.len()
    }

    /// `A y + b`.
    pub fn rhs(&self, y: &[f64]) -> Vec<f64> {
        self.a.matvec(y).iter().zip(&self.b).map(|(ay, b)| ay + b).collect()
    }
}

/// Equilibrium levels with the stability and positivity diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumReport {
    pub levels: Vec<f64>,
    pub stable: bool,
    /// Upper bound on the real parts of the eigenvalues of `A`.
    pub gershgorin_bound: f64,
    /// Every warehouse has `mu_i > lambda_i`.
    pub positivity_guaranteed: bool,
    pub method: SolveMethod,
    /// Set when a structured path broke down and the dense path was used.
    pub fallback: Option<String>,
}

impl EquilibriumReport {
    pub fn total(&self) -> f64 {
        self.levels.iter().sum()
    }
}

/// Time-stamped state vectors, `t` strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectorySeries {
    times: Vec<f64>,
    states: Vec<Vec<f64>>,
}

impl TrajectorySeries {
    pub(crate) fn with_capacity(n: usize) -> Self {
        TrajectorySeries {
            times: Vec::with_capacity(n),
            states: Vec::with_capacity(n),
        }
    }

    pub(crate) fn push(&mut self, t: f64, state: Vec<f64>) {
        debug_assert!(self.times.last().is_none_or(|&last| t > last));
        self.times.push(t);
        self.states.push(state);
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[Vec<f64>] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, &[f64])> {
        self.times.iter().copied().zip(self.states.iter().map(Vec::as_slice))
    }

    pub fn last(&self) -> Option<(f64, &[f64])> {
        self.iter().last()
    }
}

pub(crate) fn check_times(times: &[f64]) -> Result<()> {
    let mut prev = f64::NEG_INFINITY;
    for (k, &t) in times.iter().enumerate() {
        if !t.is_finite() || t < 0.0 || t <= prev {
            return Err(Error::InvalidSpec {
                field: format!("times[{k}]"),
                reason: format!("sample times must be finite, >= 0 and strictly increasing (got {t})"),
            });
        }
        prev = t;
    }
    Ok(())
}

fn detect_structure(spec: &EchelonSpec) -> Structure {
    let n = spec.len();
    if n == 2 {
        return Structure::TwoWarehouse;
    }
    if n < 3 {
        return Structure::General;
    }
    let links = || {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| spec.gamma(i, j) != 0.0)
    };
    if links().all(|(i, j)| i.abs_diff(j) == 1) {
        Structure::LinearChain
    } else if links().all(|(i, j)| i == 0 || j == 0) {
        Structure::Star
    } else {
        Structure::General
    }
}

/// Builds `(A, b)` for an echelon and tags its transshipment structure.
pub fn build_system(spec: &EchelonSpec) -> LinearSystem {
    let n = spec.len();
    let w = spec.warehouses();
    let decay: Vec<f64> = w.iter().map(|w| w.decay_rate()).collect();
    let mut a = DenseMatrix::zeros(n, n);
    for i in 0..n {
        let outflow: f64 = (0..n).map(|j| spec.gamma(i, j)).sum::<f64>() / w[i].max_level;
        a[(i, i)] = -(decay[i] + outflow);
        for j in (0..n).filter(|&j| j != i) {
            a[(i, j)] = spec.gamma(j, i) / w[j].max_level;
        }
    }
    let b = w.iter().map(|w| w.max_supply - w.demand).collect();
    LinearSystem {
        a,
        b,
        decay,
        structure: detect_structure(spec),
        symmetric: spec.has_uniform_capacity() && spec.is_gamma_symmetric(),
    }
}

/// Evaluates `y(t) = e^{At} y(0) + A^{-1} (e^{At} - I) b` at each sample time.
///
/// The exponential is recomputed for every requested time. The second term is
/// obtained from one LU factorization of `A`. At `t = 0` the initial state is
/// returned unchanged.
pub fn solve_trajectory(sys: &LinearSystem, y0: &[f64], times: &[f64]) -> Result<TrajectorySeries> {
    let n = sys.dim();
    if y0.len() != n {
        return Err(Error::Dimension(format!("y0 has {} entries, expected {n}", y0.len())));
    }
    check_times(times)?;
    let lu = sys.a.lu()?;
    let mut series = TrajectorySeries::with_capacity(times.len());
    for &t in times {
        if t == 0.0 {
            series.push(t, y0.to_vec());
            continue;
        }
        let e = if sys.structure == Structure::TwoWarehouse {
            expm_2x2_closed(&sys.a, t)?
        } else {
            expm(&sys.a, t)?
        };
        let homogeneous = e.matvec(y0);
        let eb = e.matvec(&sys.b);
        let shifted: Vec<f64> = eb.iter().zip(&sys.b).map(|(x, b)| x - b).collect();
        let particular = lu.solve(&shifted);
        let y: Vec<f64> = homogeneous.iter().zip(&particular).map(|(h, p)| h + p).collect();
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite(format!("trajectory at t = {t}")));
        }
        series.push(t, y);
    }
    Ok(series)
}

fn report(sys: &LinearSystem, levels: Vec<f64>, method: SolveMethod, fallback: Option<String>) -> EquilibriumReport {
    let g = gershgorin(&sys.a);
    EquilibriumReport {
        levels,
        stable: g.certifies_stability(),
        gershgorin_bound: g.upper_bound,
        positivity_guaranteed: sys.b.iter().all(|&b| b > 0.0),
        method,
        fallback,
    }
}

fn dense_levels(sys: &LinearSystem) -> Result<Vec<f64>> {
    let y = sys.a.solve(&sys.b)?;
    Ok(y.into_iter().map(|v| -v).collect())
}

/// `y* = -A^{-1} b`, using the structured path matching the system's tag
/// unless `choice` forces the dense path.
pub fn equilibrium(sys: &LinearSystem, choice: MethodChoice) -> Result<EquilibriumReport> {
    if choice == MethodChoice::Dense {
        return Ok(report(sys, dense_levels(sys)?, SolveMethod::Dense, None));
    }
    let structured = match sys.structure {
        Structure::General => return Ok(report(sys, dense_levels(sys)?, SolveMethod::Dense, None)),
        Structure::TwoWarehouse => two_warehouse_levels(sys).map(|y| (y, SolveMethod::TwoWarehouseClosedForm)),
        Structure::Star => star_levels(sys).map(|y| (y, SolveMethod::ShermanMorrisonWoodbury)),
        Structure::LinearChain => linear_chain_levels(sys).map(|y| (y, SolveMethod::Tridiagonal)),
    };
    match structured {
        Ok((levels, method)) => Ok(report(sys, levels, method, None)),
        Err(e @ (Error::Breakdown(_) | Error::Singular(_))) => {
            let note = format!("{:?} path failed ({e}); used dense LU", sys.structure);
            Ok(report(sys, dense_levels(sys)?, SolveMethod::Dense, Some(note)))
        }
        Err(e) => Err(e),
    }
}

fn two_warehouse_levels(sys: &LinearSystem) -> Result<Vec<f64>> {
    let a = &sys.a;
    let (p1, p2) = (sys.decay[0], sys.decay[1]);
    // det(A) = p1 p2 + p1 gamma_21 / L_2 + p2 gamma_12 / L_1, all terms >= 0.
    let det = p1 * p2 + p1 * a[(0, 1)] + p2 * a[(1, 0)];
    if !(det > 0.0) {
        return Err(Error::Singular(format!("two-warehouse determinant {det:e}")));
    }
    let (b1, b2) = (sys.b[0], sys.b[1]);
    Ok(vec![
        (-a[(1, 1)] * b1 + a[(0, 1)] * b2) / det,
        (a[(1, 0)] * b1 - a[(0, 0)] * b2) / det,
    ])
}

/// Rank-2 factors `U`, `V` with `A = D + U V^t` for a star network.
fn star_factors(a: &DenseMatrix) -> (DenseMatrix, DenseMatrix) {
    let n = a.dim();
    let mut u = DenseMatrix::zeros(n, 2);
    let mut v = DenseMatrix::zeros(n, 2);
    // Column 0: spoke-from-hub entries A_i1 selected by e_1.
    for i in 1..n {
        u[(i, 0)] = a[(i, 0)];
    }
    v[(0, 0)] = 1.0;
    // Column 1: hub row entries A_1j.
    u[(0, 1)] = 1.0;
    for j in 1..n {
        v[(j, 1)] = a[(0, j)];
    }
    (u, v)
}

fn star_levels(sys: &LinearSystem) -> Result<Vec<f64>> {
    let d = sys.a.diagonal();
    if d.contains(&0.0) {
        return Err(Error::Singular("zero diagonal in star decomposition".into()));
    }
    let d_inv = DenseMatrix::from_diagonal(&d.iter().map(|x| 1.0 / x).collect::<Vec<_>>());
    let (u, v) = star_factors(&sys.a);
    let inv = smw_inverse(&d_inv, &u, &v)?;
    Ok(inv.matvec(&sys.b).into_iter().map(|x| -x).collect())
}

fn linear_chain_levels(sys: &LinearSystem) -> Result<Vec<f64>> {
    let t = TridiagonalMatrix::from_dense(&sys.a)?;
    let inv = tridiag_inverse(&t)?;
    Ok(inv.matvec(&sys.b).into_iter().map(|x| -x).collect())
}

fn structured(
    spec: &EchelonSpec,
    ok: bool,
    what: &str,
    levels: fn(&LinearSystem) -> Result<Vec<f64>>,
    method: SolveMethod,
) -> Result<EquilibriumReport> {
    if !ok {
        return Err(Error::NotApplicable(format!("transshipment network is not a {what}")));
    }
    let sys = build_system(spec);
    let out = match levels(&sys) {
        Ok(y) => report(&sys, y, method, None),
        Err(e @ (Error::Breakdown(_) | Error::Singular(_))) => {
            let note = format!("{what} path failed ({e}); used dense LU");
            report(&sys, dense_levels(&sys)?, SolveMethod::Dense, Some(note))
        }
        Err(e) => return Err(e),
    };
    Ok(out)
}

/// Closed-form equilibrium of a two-warehouse echelon via the adjugate of `A`.
pub fn equilibrium_two_warehouse(spec: &EchelonSpec) -> Result<EquilibriumReport> {
    structured(
        spec,
        spec.len() == 2,
        "two-warehouse echelon",
        two_warehouse_levels,
        SolveMethod::TwoWarehouseClosedForm,
    )
}

/// Equilibrium of a star network from the Sherman-Morrison-Woodbury inverse
/// of `A = D + E`, `E` of rank two.
pub fn equilibrium_star(spec: &EchelonSpec) -> Result<EquilibriumReport> {
    let n = spec.len();
    let is_star = (0..n).all(|i| (0..n).all(|j| i == 0 || j == 0 || spec.gamma(i, j) == 0.0));
    structured(
        spec,
        is_star,
        "star network",
        star_levels,
        SolveMethod::ShermanMorrisonWoodbury,
    )
}

/// Equilibrium of a linear (path) network through the tridiagonal inverse.
pub fn equilibrium_linear_chain(spec: &EchelonSpec) -> Result<EquilibriumReport> {
    let n = spec.len();
    let is_path = (0..n).all(|i| (0..n).all(|j| i.abs_diff(j) <= 1 || spec.gamma(i, j) == 0.0));
    structured(
        spec,
        is_path,
        "linear network",
        linear_chain_levels,
        SolveMethod::Tridiagonal,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netspec::WarehouseParams;

    fn three_warehouse() -> EchelonSpec {
        let w = vec![
            WarehouseParams::new(100.0, 3.0, 0.1, 1.0),
            WarehouseParams::new(200.0, 4.0, 0.2, 2.0),
            WarehouseParams::new(200.0, 5.0, 0.3, 3.0),
        ];
        let g = DenseMatrix::from_rows(&[[0.0, 0.5, 0.2], [0.5, 0.0, 1.0], [0.2, 1.0, 0.0]]).unwrap();
        EchelonSpec::new(w, g).unwrap()
    }

    fn uniform_grid(n: usize, mu: f64, lambda: f64, gamma: f64) -> EchelonSpec {
        let w = (1..=n)
            .map(|i| WarehouseParams::new(200.0, mu, i as f64 * 0.05, lambda))
            .collect();
        EchelonSpec::with_uniform_gamma(w, gamma).unwrap()
    }

    fn path(n: usize, gamma: f64) -> EchelonSpec {
        let w = (1..=n)
            .map(|i| WarehouseParams::new(200.0, 16.0, i as f64 * 0.05, 4.0))
            .collect();
        let g = DenseMatrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { gamma } else { 0.0 });
        EchelonSpec::new(w, g).unwrap()
    }

    fn star(n: usize) -> EchelonSpec {
        let w = (1..=n)
            .map(|i| WarehouseParams::new(200.0, 16.0, i as f64 * 0.05, 4.0))
            .collect();
        let g = DenseMatrix::from_fn(n, n, |i, j| if i != j && (i == 0 || j == 0) { 1.0 } else { 0.0 });
        EchelonSpec::new(w, g).unwrap()
    }

    fn max_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    #[test]
    fn three_warehouse_entries() {
        let sys = build_system(&three_warehouse());
        assert!((sys.a()[(0, 0)] + 0.137).abs() < 1e-15);
        assert_eq!(sys.b(), &[2.0, 2.0, 2.0]);
        assert_eq!(sys.structure(), Structure::General);
        assert!(!sys.is_symmetric());
    }

    #[test]
    fn single_warehouse_system() {
        let spec = EchelonSpec::decoupled(vec![WarehouseParams::new(50.0, 5.0, 0.1, 1.0)]).unwrap();
        let sys = build_system(&spec);
        assert_eq!(sys.a()[(0, 0)], -(5.0 / 50.0 + 0.1));
        assert_eq!(sys.b(), &[4.0]);
    }

    #[test]
    fn two_warehouse_uniform_matrix() {
        let sys = build_system(&uniform_grid(2, 16.0, 4.0, 1.0));
        let want = DenseMatrix::from_rows(&[[-0.135, 0.005], [0.005, -0.185]]).unwrap();
        assert!(sys.a().max_abs_diff(&want) < 1e-15);
        assert_eq!(sys.b(), &[12.0, 12.0]);
        assert_eq!(sys.structure(), Structure::TwoWarehouse);
        assert!(sys.is_symmetric());
    }

    #[test]
    fn column_sums_equal_negative_decay() {
        let spec = three_warehouse();
        let sys = build_system(&spec);
        for j in 0..3 {
            let col: f64 = (0..3).map(|i| sys.a()[(i, j)]).sum();
            assert!((col + spec.warehouses()[j].decay_rate()).abs() < 1e-15);
        }
    }

    #[test]
    fn three_warehouse_equilibrium() {
        let r = equilibrium(&build_system(&three_warehouse()), MethodChoice::Auto).unwrap();
        for (y, want) in r.levels.iter().zip([14.813, 9.255, 6.272]) {
            assert!((y - want).abs() <= 5e-4, "{y} vs {want}");
        }
        assert!(r.stable);
        assert!(r.positivity_guaranteed);
        assert!(r.gershgorin_bound <= -0.13);
        assert_eq!(r.method, SolveMethod::Dense);
    }

    #[test]
    fn equilibrium_residual_is_small() {
        let sys = build_system(&three_warehouse());
        let r = equilibrium(&sys, MethodChoice::Auto).unwrap();
        assert!(sys.rhs(&r.levels).iter().all(|v| v.abs() < 1e-10));
    }

    #[test]
    fn uniform_grid_cells() {
        let r = equilibrium(&build_system(&uniform_grid(2, 16.0, 4.0, 1.0)), MethodChoice::Auto).unwrap();
        assert_eq!(r.method, SolveMethod::TwoWarehouseClosedForm);
        assert!((r.levels[0] - 91.4).abs() <= 0.05 && (r.levels[1] - 67.3).abs() <= 0.05);
        assert!((r.total() - 158.7).abs() <= 0.05);

        let r = equilibrium(&build_system(&uniform_grid(2, 20.0, 12.0, 5.0)), MethodChoice::Auto).unwrap();
        assert!((r.levels[0] - 51.6).abs() <= 0.05 && (r.levels[1] - 41.3).abs() <= 0.05);

        let r = equilibrium_two_warehouse(&uniform_grid(2, 20.0, 12.0, 1.0)).unwrap();
        assert!((r.levels[0] - 52.9).abs() <= 0.05 && (r.levels[1] - 40.3).abs() <= 0.05);
    }

    #[test]
    fn two_warehouse_decoupled_and_symmetric() {
        let spec = EchelonSpec::decoupled(vec![
            WarehouseParams::new(100.0, 10.0, 0.1, 2.0),
            WarehouseParams::new(50.0, 4.0, 0.3, 1.0),
        ])
        .unwrap();
        let r = equilibrium_two_warehouse(&spec).unwrap();
        assert!((r.levels[0] - 8.0 / 0.2).abs() < 1e-12);
        assert!((r.levels[1] - 3.0 / (0.08 + 0.3)).abs() < 1e-12);

        let w = WarehouseParams::new(100.0, 10.0, 0.1, 2.0);
        let r = equilibrium_two_warehouse(&EchelonSpec::with_uniform_gamma(vec![w, w], 3.0).unwrap()).unwrap();
        assert!((r.levels[0] - r.levels[1]).abs() < 1e-12);
    }

    #[test]
    fn structured_paths_reject_wrong_topology() {
        assert!(matches!(
            equilibrium_two_warehouse(&three_warehouse()),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            equilibrium_star(&uniform_grid(4, 16.0, 4.0, 1.0)),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            equilibrium_linear_chain(&star(4)),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn star_matches_dense() {
        let spec = star(5);
        let sys = build_system(&spec);
        assert_eq!(sys.structure(), Structure::Star);
        let s = equilibrium_star(&spec).unwrap();
        assert_eq!(s.method, SolveMethod::ShermanMorrisonWoodbury);
        let d = equilibrium(&sys, MethodChoice::Dense).unwrap();
        assert!(max_diff(&s.levels, &d.levels) < 1e-9);
    }

    #[test]
    fn star_factorization_reconstructs_matrix() {
        let sys = build_system(&star(6));
        let (u, v) = star_factors(sys.a());
        let rebuilt = DenseMatrix::from_diagonal(&sys.a().diagonal()).add(&u.matmul(&v.transpose()));
        assert!(rebuilt.max_abs_diff(sys.a()) < 1e-18);
    }

    #[test]
    fn two_node_star_matches_closed_form() {
        let spec = uniform_grid(2, 16.0, 4.0, 1.0);
        let s = equilibrium_star(&spec).unwrap();
        let c = equilibrium_two_warehouse(&spec).unwrap();
        assert!(max_diff(&s.levels, &c.levels) < 1e-10);
        let p = equilibrium_linear_chain(&spec).unwrap();
        assert!(max_diff(&p.levels, &c.levels) < 1e-10);
    }

    #[test]
    fn linear_chain_matches_dense() {
        let spec = path(8, 1.0);
        let sys = build_system(&spec);
        assert_eq!(sys.structure(), Structure::LinearChain);
        let r = equilibrium(&sys, MethodChoice::Auto).unwrap();
        assert_eq!(r.method, SolveMethod::Tridiagonal);
        let d = equilibrium(&sys, MethodChoice::Dense).unwrap();
        assert!(max_diff(&r.levels, &d.levels) < 1e-10);
    }

    #[test]
    fn zero_gamma_paths_decouple() {
        for spec in [path(5, 0.0)] {
            let r = equilibrium_linear_chain(&spec).unwrap();
            let s = equilibrium_star(&spec).unwrap();
            for (i, w) in spec.warehouses().iter().enumerate() {
                let want = (w.max_supply - w.demand) / w.decay_rate();
                assert!((r.levels[i] - want).abs() < 1e-12);
                assert!((s.levels[i] - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn trajectory_first_sample() {
        let sys = build_system(&three_warehouse());
        let series = solve_trajectory(&sys, &[50.0, 100.0, 150.0], &[0.0, 10.0]).unwrap();
        assert_eq!(series.states()[0], vec![50.0, 100.0, 150.0]);
        for (y, want) in series.states()[1].iter().zip([24.312, 19.360, 11.908]) {
            assert!((y - want).abs() <= 5e-4);
        }
    }

    #[test]
    fn trajectory_fixed_point() {
        let sys = build_system(&three_warehouse());
        let eq = equilibrium(&sys, MethodChoice::Auto).unwrap();
        let series = solve_trajectory(&sys, &eq.levels, &[1.0, 10.0, 100.0]).unwrap();
        for (_, y) in series.iter() {
            assert!(max_diff(y, &eq.levels) < 1e-10);
        }
    }

    #[test]
    fn homogeneous_trajectory_decays() {
        let w = (1..=3)
            .map(|i| WarehouseParams::new(100.0, 5.0, 0.1 * i as f64, 5.0))
            .collect();
        let spec = EchelonSpec::with_uniform_gamma(w, 0.5).unwrap();
        let sys = build_system(&spec);
        assert!(sys.b().iter().all(|&b| b == 0.0));
        let series = solve_trajectory(&sys, &[10.0, 20.0, 30.0], &[5.0, 200.0]).unwrap();
        let e = expm(sys.a(), 5.0).unwrap().matvec(&[10.0, 20.0, 30.0]);
        assert!(max_diff(&series.states()[0], &e) < 1e-12);
        assert!(series.states()[1].iter().all(|v| v.abs() < 1e-6));
    }

    #[test]
    fn bad_sample_times() {
        let sys = build_system(&three_warehouse());
        let y0 = [1.0, 1.0, 1.0];
        assert!(solve_trajectory(&sys, &y0, &[1.0, 1.0]).is_err());
        assert!(solve_trajectory(&sys, &y0, &[-1.0]).is_err());
        assert!(solve_trajectory(&sys, &[1.0], &[1.0]).is_err());
    }
}
