//! Deterministic model instances for the solver benchmarks.

use invnet_core::{ChainSpec, DenseMatrix, EchelonSpec, FullNetworkSpec, NetworkEchelon, WarehouseParams};

fn warehouses(n: usize) -> Vec<WarehouseParams> {
    (0..n)
        .map(|i| {
            WarehouseParams::new(
                100.0 + 10.0 * (i % 7) as f64,
                12.0 + (i % 5) as f64,
                0.05 + 0.01 * (i % 3) as f64,
                4.0,
            )
        })
        .collect()
}

/// Every pair of warehouses linked with rate 0.5.
pub fn dense_echelon(n: usize) -> EchelonSpec {
    EchelonSpec::with_uniform_gamma(warehouses(n), 0.5).unwrap()
}

/// Warehouse 0 linked to all others, no other links.
pub fn star_echelon(n: usize) -> EchelonSpec {
    let g = DenseMatrix::from_fn(n, n, |i, j| if i != j && (i == 0 || j == 0) { 0.5 } else { 0.0 });
    EchelonSpec::new(warehouses(n), g).unwrap()
}

/// Warehouses linked to their neighbours along a line.
pub fn path_echelon(n: usize) -> EchelonSpec {
    let g = DenseMatrix::from_fn(n, n, |i, j| if i.abs_diff(j) == 1 { 0.5 } else { 0.0 });
    EchelonSpec::new(warehouses(n), g).unwrap()
}

pub fn chain(m: usize) -> ChainSpec {
    let supply: Vec<f64> = (0..m).map(|i| 30.0 + 20.0 * (m - 1 - i) as f64).collect();
    ChainSpec::from_slices(&vec![100.0; m], &supply, &vec![0.15; m], 5.0).unwrap()
}

/// `m` echelons of `n` warehouses each.
pub fn network(m: usize, n: usize) -> FullNetworkSpec {
    let echelons = (0..m)
        .map(|e| {
            let w = (1..=n)
                .map(|i| WarehouseParams::new(100.0 / n as f64, 0.0, 0.04 * i as f64, 0.0))
                .collect();
            NetworkEchelon {
                supply: 30.0 + 20.0 * (m - 1 - e) as f64,
                echelon: EchelonSpec::with_uniform_gamma(w, 1.0).unwrap(),
            }
        })
        .collect();
    FullNetworkSpec::new(echelons, 5.0).unwrap()
}
