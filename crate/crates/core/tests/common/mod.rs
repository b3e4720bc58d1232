#![allow(dead_code)]

pub mod fixtures;

use invnet_core::linalg::DenseMatrix;
use invnet_core::{ChainSpec, EchelonSpec, FullNetworkSpec, NetworkEchelon, WarehouseParams};
use rand::Rng;

pub const THREE_WAREHOUSE_Y0: [f64; 3] = [50.0, 100.0, 150.0];
pub const THREE_WAREHOUSE_EQUILIBRIUM: [f64; 3] = [14.813, 9.255, 6.272];
pub const THREE_WAREHOUSE_AGGREGATE: f64 = 26.786;

pub fn three_warehouse() -> EchelonSpec {
    let w = vec![
        WarehouseParams::new(100.0, 3.0, 0.1, 1.0),
        WarehouseParams::new(200.0, 4.0, 0.2, 2.0),
        WarehouseParams::new(200.0, 5.0, 0.3, 3.0),
    ];
    let g = DenseMatrix::from_rows(&[[0.0, 0.5, 0.2], [0.5, 0.0, 1.0], [0.2, 1.0, 0.0]]).unwrap();
    EchelonSpec::new(w, g).unwrap()
}

/// `n` warehouses with `L = 200`, `theta_i = 0.05 i` and uniform transshipment.
pub fn grid_echelon(n: usize, mu: f64, lambda: f64, gamma: f64) -> EchelonSpec {
    let w = (1..=n)
        .map(|i| WarehouseParams::new(200.0, mu, i as f64 * 0.05, lambda))
        .collect();
    EchelonSpec::with_uniform_gamma(w, gamma).unwrap()
}

/// Network of identical echelons, `n` warehouses each with level `level`
/// and `theta_i = theta_step * i`, terminal demand 5.
pub fn network(supply: &[f64], n: usize, level: f64, theta_step: f64, gamma: f64) -> FullNetworkSpec {
    let echelons = supply
        .iter()
        .map(|&s| {
            let w = (1..=n)
                .map(|i| WarehouseParams::new(level, 0.0, i as f64 * theta_step, 0.0))
                .collect();
            NetworkEchelon {
                supply: s,
                echelon: EchelonSpec::with_uniform_gamma(w, gamma).unwrap(),
            }
        })
        .collect();
    FullNetworkSpec::new(echelons, 5.0).unwrap()
}

pub fn grid_supplies(m: usize) -> Vec<f64> {
    (0..m).map(|i| 30.0 + 20.0 * (m - 1 - i) as f64).collect()
}

pub fn four_echelon_chain() -> ChainSpec {
    ChainSpec::from_slices(&[100.0; 4], &[50.0, 45.0, 40.0, 30.0], &[0.15; 4], 5.0).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Topology {
    Dense,
    Star,
    Path,
}

fn random_gamma(rng: &mut impl Rng, n: usize, topology: Topology, max_gamma: f64) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |i, j| {
        let linked = i != j
            && match topology {
                Topology::Dense => true,
                Topology::Star => i == 0 || j == 0,
                Topology::Path => i.abs_diff(j) == 1,
            };
        if linked && rng.gen_bool(0.85) {
            rng.gen_range(0.0..max_gamma)
        } else {
            0.0
        }
    })
}

pub struct EchelonRanges {
    pub level: (f64, f64),
    pub supply: (f64, f64),
    pub deterioration: (f64, f64),
    pub demand: (f64, f64),
    pub max_gamma: f64,
}

impl Default for EchelonRanges {
    fn default() -> Self {
        EchelonRanges {
            level: (10.0, 500.0),
            supply: (0.5, 50.0),
            deterioration: (0.001, 0.5),
            demand: (0.0, 50.0),
            max_gamma: 5.0,
        }
    }
}

pub fn random_echelon(rng: &mut impl Rng, n: usize, topology: Topology, r: &EchelonRanges) -> EchelonSpec {
    let w = (0..n)
        .map(|_| {
            WarehouseParams::new(
                rng.gen_range(r.level.0..r.level.1),
                rng.gen_range(r.supply.0..r.supply.1),
                rng.gen_range(r.deterioration.0..r.deterioration.1),
                rng.gen_range(r.demand.0..=r.demand.1),
            )
        })
        .collect();
    EchelonSpec::new(w, random_gamma(rng, n, topology, r.max_gamma)).unwrap()
}

/// Random chain with capacities in `[50, 200]` and states drawn separately.
pub fn random_chain(rng: &mut impl Rng, m: usize) -> ChainSpec {
    let c: Vec<f64> = (0..m).map(|_| rng.gen_range(50.0..200.0)).collect();
    let mu: Vec<f64> = (0..m).map(|_| rng.gen_range(1.0..100.0)).collect();
    let th: Vec<f64> = (0..m).map(|_| rng.gen_range(0.01..1.0)).collect();
    ChainSpec::from_slices(&c, &mu, &th, rng.gen_range(0.0..20.0)).unwrap()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
