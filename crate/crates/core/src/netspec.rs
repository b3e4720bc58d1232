//! Parameter types for warehouses, echelons and chains, and the JSON
//! configuration format they are read from.
//!
//! A configuration document describes exactly one model, selected by its
//! `model` field:
//!
//! ```json
//! { "model": "echelon",
//!   "warehouses": [ {"L": 100, "mu": 3, "theta": 0.1, "lambda": 1}, ... ],
//!   "gamma": [[0, 0.5], [0.5, 0]],
//!   "initial": [50, 100] }
//!
//! { "model": "chain",
//!   "echelons": [ {"C": 100, "mu": 50, "theta": 0.15}, ... ],
//!   "lambda_c": 5 }
//!
//! { "model": "full-network",
//!   "echelons": [ {"mu_c": 50, "warehouses": [...], "gamma": 1}, ... ],
//!   "lambda_c": 5 }
//! ```
//!
//! `gamma` may be a full matrix or a scalar that fills every off-diagonal
//! entry; it defaults to no transshipment. `warehouses` may also be a
//! generator object `{"count": n, "L" | "C": .., "mu": .., "lambda": ..,
//! "theta" | "theta_step": ..}` producing `n` warehouses with
//! `theta_i = i * theta_step` and `L = C / n` when `C` is given. A
//! full-network `echelons` entry may likewise be one object with a `mu_c`
//! list, replicated once per listed supply rate.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{invalid, Error, Result};
use crate::linalg::DenseMatrix;

/// Parameters of one warehouse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WarehouseParams {
    /// Maximum inventory level `L_i`.
    pub max_level: f64,
    /// Maximum supply rate `mu_i` (units/time).
    pub max_supply: f64,
    /// Fraction of stock deteriorating per unit time, `theta_i`.
    pub deterioration: f64,
    /// Demand rate `lambda_i` (units/time).
    pub demand: f64,
}

impl WarehouseParams {
    pub fn new(max_level: f64, max_supply: f64, deterioration: f64, demand: f64) -> Self {
        WarehouseParams {
            max_level,
            max_supply,
            deterioration,
            demand,
        }
    }

    /// `mu_i / L_i + theta_i`, the self-decay rate without transshipment.
    pub fn decay_rate(&self) -> f64 {
        self.max_supply / self.max_level + self.deterioration
    }

    fn validate(&self, prefix: &str) -> Result<()> {
        check_finite(self.max_level, &format!("{prefix}.L"))?;
        if self.max_level <= 0.0 {
            return Err(invalid(
                format!("{prefix}.L"),
                format!("must be > 0, got {}", self.max_level),
            ));
        }
        non_negative(self.max_supply, &format!("{prefix}.mu"))?;
        non_negative(self.deterioration, &format!("{prefix}.theta"))?;
        non_negative(self.demand, &format!("{prefix}.lambda"))
    }
}

fn check_finite(v: f64, field: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(invalid(field, format!("must be finite, got {v}")))
    }
}

fn non_negative(v: f64, field: &str) -> Result<()> {
    check_finite(v, field)?;
    if v < 0.0 {
        return Err(invalid(field, format!("must be >= 0, got {v}")));
    }
    Ok(())
}

/// Warehouses of one echelon and the maximum lateral transshipment rates
/// `gamma_ij` between them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EchelonSpec {
    warehouses: Vec<WarehouseParams>,
    transshipment: DenseMatrix,
}

impl EchelonSpec {
    pub fn new(warehouses: Vec<WarehouseParams>, transshipment: DenseMatrix) -> Result<Self> {
        Self::validated(warehouses, transshipment, "")
    }

    /// Echelon whose off-diagonal transshipment rates all equal `gamma`.
    pub fn with_uniform_gamma(warehouses: Vec<WarehouseParams>, gamma: f64) -> Result<Self> {
        let n = warehouses.len();
        let g = DenseMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { gamma });
        Self::new(warehouses, g)
    }

    /// Echelon without transshipment.
    pub fn decoupled(warehouses: Vec<WarehouseParams>) -> Result<Self> {
        let n = warehouses.len();
        Self::new(warehouses, DenseMatrix::zeros(n, n))
    }

    fn validated(warehouses: Vec<WarehouseParams>, transshipment: DenseMatrix, prefix: &str) -> Result<Self> {
        let n = warehouses.len();
        if n == 0 {
            return Err(invalid(
                format!("{prefix}warehouses"),
                "at least one warehouse is required",
            ));
        }
        for (i, w) in warehouses.iter().enumerate() {
            w.validate(&format!("{prefix}warehouses[{i}]"))?;
        }
        if transshipment.rows() != n || transshipment.cols() != n {
            return Err(Error::Dimension(format!(
                "{prefix}gamma is {}x{}, expected {n}x{n}",
                transshipment.rows(),
                transshipment.cols()
            )));
        }
        for i in 0..n {
            for j in 0..n {
                let field = format!("{prefix}gamma[{i}][{j}]");
                let g = transshipment[(i, j)];
                non_negative(g, &field)?;
                if i == j && g != 0.0 {
                    return Err(invalid(field, format!("diagonal must be 0, got {g}")));
                }
            }
        }
        Ok(EchelonSpec {
            warehouses,
            transshipment,
        })
    }

    pub fn len(&self) -> usize {
        self.warehouses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.warehouses.is_empty()
    }

    pub fn warehouses(&self) -> &[WarehouseParams] {
        &self.warehouses
    }

    pub fn transshipment(&self) -> &DenseMatrix {
        &self.transshipment
    }

    /// `gamma_ij`, the maximum rate from warehouse `i` to warehouse `j`.
    pub fn gamma(&self, i: usize, j: usize) -> f64 {
        self.transshipment[(i, j)]
    }

    pub fn is_gamma_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.gamma(i, j) == self.gamma(j, i)))
    }

    pub fn has_uniform_capacity(&self) -> bool {
        let l0 = self.warehouses[0].max_level;
        self.warehouses.iter().all(|w| w.max_level == l0)
    }

    /// Copy with every warehouse's supply and demand replaced.
    pub fn with_rates(&self, max_supply: f64, demand: f64) -> Result<Self> {
        let warehouses = self
            .warehouses
            .iter()
            .map(|w| WarehouseParams {
                max_supply,
                demand,
                ..*w
            })
            .collect();
        Self::new(warehouses, self.transshipment.clone())
    }
}

/// `mu_i > lambda_i` for each warehouse; when all hold and the initial
/// levels are positive, levels stay positive for all time.
pub fn validate_positivity_condition(spec: &EchelonSpec) -> Vec<bool> {
    spec.warehouses.iter().map(|w| w.max_supply > w.demand).collect()
}

/// One aggregated echelon of a supply chain.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainEchelon {
    /// Maximum inventory level `C_i`.
    pub capacity: f64,
    /// Maximum supply rate into the echelon, `mu^c_i`.
    pub max_supply: f64,
    /// Average deterioration fraction `theta^c_i`.
    pub deterioration: f64,
}

/// Serial chain of `m >= 2` aggregated echelons with external demand at the
/// lowest one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainSpec {
    echelons: Vec<ChainEchelon>,
    terminal_demand: f64,
}

impl ChainSpec {
    pub fn new(echelons: Vec<ChainEchelon>, terminal_demand: f64) -> Result<Self> {
        if echelons.len() < 2 {
            return Err(invalid(
                "echelons",
                format!("a chain needs at least 2 echelons, got {}", echelons.len()),
            ));
        }
        for (i, e) in echelons.iter().enumerate() {
            check_finite(e.capacity, &format!("echelons[{i}].C"))?;
            if e.capacity <= 0.0 {
                return Err(invalid(
                    format!("echelons[{i}].C"),
                    format!("must be > 0, got {}", e.capacity),
                ));
            }
            non_negative(e.max_supply, &format!("echelons[{i}].mu"))?;
            non_negative(e.deterioration, &format!("echelons[{i}].theta"))?;
        }
        non_negative(terminal_demand, "lambda_c")?;
        Ok(ChainSpec {
            echelons,
            terminal_demand,
        })
    }

    /// Builds a chain from parallel slices of capacities, supplies and
    /// deterioration rates.
    pub fn from_slices(capacity: &[f64], supply: &[f64], deterioration: &[f64], terminal_demand: f64) -> Result<Self> {
        if capacity.len() != supply.len() || capacity.len() != deterioration.len() {
            return Err(Error::Dimension("chain parameter slices differ in length".into()));
        }
        let echelons = capacity
            .iter()
            .zip(supply)
            .zip(deterioration)
            .map(|((&capacity, &max_supply), &deterioration)| ChainEchelon {
                capacity,
                max_supply,
                deterioration,
            })
            .collect();
        Self::new(echelons, terminal_demand)
    }

    /// Number of echelons `m`.
    pub fn len(&self) -> usize {
        self.echelons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.echelons.is_empty()
    }

    pub fn echelons(&self) -> &[ChainEchelon] {
        &self.echelons
    }

    pub fn capacity(&self, i: usize) -> f64 {
        self.echelons[i].capacity
    }

    pub fn supply(&self, i: usize) -> f64 {
        self.echelons[i].max_supply
    }

    pub fn deterioration(&self, i: usize) -> f64 {
        self.echelons[i].deterioration
    }

    pub fn terminal_demand(&self) -> f64 {
        self.terminal_demand
    }
}

/// An echelon of a full network: its warehouses plus the echelon-level
/// supply rate `mu^c` used when the echelon is aggregated.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkEchelon {
    pub supply: f64,
    pub echelon: EchelonSpec,
}

/// Multi-echelon network at warehouse resolution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullNetworkSpec {
    echelons: Vec<NetworkEchelon>,
    terminal_demand: f64,
}

impl FullNetworkSpec {
    pub fn new(echelons: Vec<NetworkEchelon>, terminal_demand: f64) -> Result<Self> {
        if echelons.len() < 2 {
            return Err(invalid(
                "echelons",
                format!("a network needs at least 2 echelons, got {}", echelons.len()),
            ));
        }
        for (i, e) in echelons.iter().enumerate() {
            non_negative(e.supply, &format!("echelons[{i}].mu_c"))?;
        }
        non_negative(terminal_demand, "lambda_c")?;
        Ok(FullNetworkSpec {
            echelons,
            terminal_demand,
        })
    }

    pub fn len(&self) -> usize {
        self.echelons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.echelons.is_empty()
    }

    pub fn echelons(&self) -> &[NetworkEchelon] {
        &self.echelons
    }

    pub fn terminal_demand(&self) -> f64 {
        self.terminal_demand
    }

    /// Total number of warehouses across all echelons.
    pub fn warehouse_count(&self) -> usize {
        self.echelons.iter().map(|e| e.echelon.len()).sum()
    }
}

/// The model described by a configuration document.
#[derive(Debug, Clone, PartialEq)]
pub enum Model {
    Echelon(EchelonSpec),
    Chain(ChainSpec),
    FullNetwork(FullNetworkSpec),
}

impl Model {
    pub fn kind(&self) -> &'static str {
        match self {
            Model::Echelon(_) => "echelon",
            Model::Chain(_) => "chain",
            Model::FullNetwork(_) => "full-network",
        }
    }
}

/// A parsed configuration: the model plus optional initial levels.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub model: Model,
    pub initial: Option<Vec<f64>>,
}

impl Config {
    /// Serializes to the explicit document form (warehouse lists, full gamma
    /// matrices). The output parses back to an identical config.
    pub fn to_json(&self) -> String {
        let doc = ConfigDoc::from_config(self);
        serde_json::to_string_pretty(&doc).expect("config documents always serialize")
    }
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<Config> {
    ConfigDoc::parse(text)?.into_config()
}

// ---------------------------------------------------------------------------
// Raw document types

/// Raw configuration document, before validation.
///
/// Sweeps edit this form with [`ConfigDoc::set_param`] and then validate the
/// result with [`ConfigDoc::into_config`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum ConfigDoc {
    Echelon(EchelonDoc),
    Chain(ChainDoc),
    FullNetwork(FullNetworkDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EchelonDoc {
    pub warehouses: WarehousesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WarehousesDoc {
    List(Vec<WarehouseDoc>),
    Uniform(UniformWarehousesDoc),
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WarehouseDoc {
    pub L: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

/// Generator for `count` warehouses with shared parameters.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniformWarehousesDoc {
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub L: Option<f64>,
    /// Echelon capacity; each warehouse gets `C / count`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub C: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    /// Warehouse `i` (1-based) gets `theta = i * theta_step`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta_step: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaDoc {
    Scalar(f64),
    Matrix(Vec<Vec<f64>>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainDoc {
    pub echelons: Vec<ChainEchelonDoc>,
    pub lambda_c: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<f64>>,
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainEchelonDoc {
    pub C: f64,
    pub mu: f64,
    pub theta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FullNetworkDoc {
    pub echelons: NetworkEchelonsDoc,
    pub lambda_c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NetworkEchelonsDoc {
    List(Vec<NetworkEchelonDoc>),
    Uniform(UniformEchelonsDoc),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkEchelonDoc {
    pub mu_c: f64,
    pub warehouses: WarehousesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaDoc>,
}

/// One echelon layout repeated for every entry of `mu_c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniformEchelonsDoc {
    pub mu_c: Vec<f64>,
    pub warehouses: WarehousesDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaDoc>,
}

/// Parameters a sweep may vary, by model kind.
pub const ECHELON_PARAMS: &[&str] = &["n", "L", "C", "mu", "lambda", "theta", "theta_step", "gamma"];
pub const CHAIN_PARAMS: &[&str] = &["C", "mu", "theta", "lambda_c"];
pub const FULL_NETWORK_PARAMS: &[&str] = &["n", "L", "C", "theta", "theta_step", "gamma", "lambda_c"];

impl ConfigDoc {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Schema("document must be a JSON object".into()))?;
        let model = obj
            .get("model")
            .ok_or_else(|| Error::Schema("missing field `model`".into()))?
            .as_str()
            .ok_or_else(|| Error::Schema("`model` must be a string".into()))?
            .to_owned();
        let context = |e: serde_json::Error| Error::Schema(format!("{model}: {e}"));
        match model.as_str() {
            "echelon" | "chain" | "full-network" => serde_json::from_value(value).map_err(context),
            other => Err(Error::Schema(format!(
                "unknown model `{other}` (expected echelon, chain or full-network)"
            ))),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ConfigDoc::Echelon(_) => "echelon",
            ConfigDoc::Chain(_) => "chain",
            ConfigDoc::FullNetwork(_) => "full-network",
        }
    }

    pub fn into_config(self) -> Result<Config> {
        match self {
            ConfigDoc::Echelon(doc) => {
                let spec = build_echelon(&doc.warehouses, doc.gamma.as_ref(), "", true)?;
                check_initial(doc.initial.as_deref(), spec.len())?;
                Ok(Config {
                    model: Model::Echelon(spec),
                    initial: doc.initial,
                })
            }
            ConfigDoc::Chain(doc) => {
                let echelons = doc
                    .echelons
                    .iter()
                    .map(|e| ChainEchelon {
                        capacity: e.C,
                        max_supply: e.mu,
                        deterioration: e.theta,
                    })
                    .collect();
                let spec = ChainSpec::new(echelons, doc.lambda_c)?;
                check_initial(doc.initial.as_deref(), spec.len())?;
                Ok(Config {
                    model: Model::Chain(spec),
                    initial: doc.initial,
                })
            }
            ConfigDoc::FullNetwork(doc) => {
                let parts: Vec<(f64, &WarehousesDoc, Option<&GammaDoc>)> = match &doc.echelons {
                    NetworkEchelonsDoc::List(list) => {
                        list.iter().map(|e| (e.mu_c, &e.warehouses, e.gamma.as_ref())).collect()
                    }
                    NetworkEchelonsDoc::Uniform(u) => {
                        u.mu_c.iter().map(|&mu| (mu, &u.warehouses, u.gamma.as_ref())).collect()
                    }
                };
                let echelons = parts
                    .into_iter()
                    .enumerate()
                    .map(|(i, (supply, w, g))| {
                        let echelon = build_echelon(w, g, &format!("echelons[{i}]."), false)?;
                        Ok(NetworkEchelon { supply, echelon })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Config {
                    model: Model::FullNetwork(FullNetworkSpec::new(echelons, doc.lambda_c)?),
                    initial: None,
                })
            }
        }
    }

    fn from_config(config: &Config) -> Self {
        let warehouses_doc = |spec: &EchelonSpec| {
            WarehousesDoc::List(
                spec.warehouses()
                    .iter()
                    .map(|w| WarehouseDoc {
                        L: w.max_level,
                        mu: Some(w.max_supply),
                        theta: Some(w.deterioration),
                        lambda: Some(w.demand),
                    })
                    .collect(),
            )
        };
        let gamma_doc = |spec: &EchelonSpec| Some(GammaDoc::Matrix(spec.transshipment().to_rows()));
        match &config.model {
            Model::Echelon(spec) => ConfigDoc::Echelon(EchelonDoc {
                warehouses: warehouses_doc(spec),
                gamma: gamma_doc(spec),
                initial: config.initial.clone(),
            }),
            Model::Chain(spec) => ConfigDoc::Chain(ChainDoc {
                echelons: spec
                    .echelons()
                    .iter()
                    .map(|e| ChainEchelonDoc {
                        C: e.capacity,
                        mu: e.max_supply,
                        theta: e.deterioration,
                    })
                    .collect(),
                lambda_c: spec.terminal_demand(),
                initial: config.initial.clone(),
            }),
            Model::FullNetwork(net) => ConfigDoc::FullNetwork(FullNetworkDoc {
                echelons: NetworkEchelonsDoc::List(
                    net.echelons()
                        .iter()
                        .map(|e| NetworkEchelonDoc {
                            mu_c: e.supply,
                            warehouses: warehouses_doc(&e.echelon),
                            gamma: gamma_doc(&e.echelon),
                        })
                        .collect(),
                ),
                lambda_c: net.terminal_demand(),
            }),
        }
    }

    /// Parameter names [`set_param`](Self::set_param) accepts for this model.
    pub fn params(&self) -> &'static [&'static str] {
        match self {
            ConfigDoc::Echelon(_) => ECHELON_PARAMS,
            ConfigDoc::Chain(_) => CHAIN_PARAMS,
            ConfigDoc::FullNetwork(_) => FULL_NETWORK_PARAMS,
        }
    }

    /// Overrides one parameter everywhere it occurs in the document.
    ///
    /// Warehouse-level names (`L`, `mu`, `lambda`, `theta`) set that field on
    /// every warehouse; `gamma` replaces the matrix by the scalar form; `n`,
    /// `C` and `theta_step` require the warehouse generator form. For chains,
    /// `C`, `mu` and `theta` apply to every echelon.
    pub fn set_param(&mut self, name: &str, value: f64) -> Result<()> {
        if !self.params().contains(&name) {
            return Err(Error::Schema(format!(
                "unknown parameter `{name}` for model {} (expected one of: {})",
                self.kind(),
                self.params().join(", ")
            )));
        }
        match self {
            ConfigDoc::Echelon(doc) => match name {
                "gamma" => {
                    doc.gamma = Some(GammaDoc::Scalar(value));
                    Ok(())
                }
                _ => set_warehouse_param(&mut doc.warehouses, name, value),
            },
            ConfigDoc::Chain(doc) => {
                if name == "lambda_c" {
                    doc.lambda_c = value;
                    return Ok(());
                }
                for e in &mut doc.echelons {
                    match name {
                        "C" => e.C = value,
                        "mu" => e.mu = value,
                        _ => e.theta = value,
                    }
                }
                Ok(())
            }
            ConfigDoc::FullNetwork(doc) => {
                if name == "lambda_c" {
                    doc.lambda_c = value;
                    return Ok(());
                }
                match &mut doc.echelons {
                    NetworkEchelonsDoc::List(list) => {
                        for e in list {
                            if name == "gamma" {
                                e.gamma = Some(GammaDoc::Scalar(value));
                            } else {
                                set_warehouse_param(&mut e.warehouses, name, value)?;
                            }
                        }
                        Ok(())
                    }
                    NetworkEchelonsDoc::Uniform(u) => {
                        if name == "gamma" {
                            u.gamma = Some(GammaDoc::Scalar(value));
                            Ok(())
                        } else {
                            set_warehouse_param(&mut u.warehouses, name, value)
                        }
                    }
                }
            }
        }
    }
}

fn set_warehouse_param(doc: &mut WarehousesDoc, name: &str, value: f64) -> Result<()> {
    match doc {
        WarehousesDoc::List(list) => {
            for w in list.iter_mut() {
                match name {
                    "L" => w.L = value,
                    "mu" => w.mu = Some(value),
                    "lambda" => w.lambda = Some(value),
                    "theta" => w.theta = Some(value),
                    _ => {
                        return Err(Error::Schema(format!(
                            "parameter `{name}` needs the warehouse generator form {{\"count\": ..}}"
                        )))
                    }
                }
            }
            Ok(())
        }
        WarehousesDoc::Uniform(u) => {
            match name {
                "n" => {
                    if value < 1.0 || value.fract() != 0.0 {
                        return Err(invalid("n", format!("must be a positive integer, got {value}")));
                    }
                    u.count = value as usize;
                }
                "L" => {
                    u.L = Some(value);
                    u.C = None;
                }
                "C" => {
                    u.C = Some(value);
                    u.L = None;
                }
                "mu" => u.mu = Some(value),
                "lambda" => u.lambda = Some(value),
                "theta" => {
                    u.theta = Some(value);
                    u.theta_step = None;
                }
                _ => {
                    u.theta_step = Some(value);
                    u.theta = None;
                }
            }
            Ok(())
        }
    }
}

fn check_initial(initial: Option<&[f64]>, n: usize) -> Result<()> {
    if let Some(v) = initial {
        if v.len() != n {
            return Err(Error::Dimension(format!(
                "initial has {} entries, expected {n}",
                v.len()
            )));
        }
        for (i, &x) in v.iter().enumerate() {
            check_finite(x, &format!("initial[{i}]"))?;
        }
    }
    Ok(())
}

/// `rates_required` distinguishes a standalone echelon (every warehouse must
/// state `mu` and `lambda`) from a network echelon, where those rates are
/// derived from the chain and default to zero.
fn build_echelon(
    warehouses: &WarehousesDoc,
    gamma: Option<&GammaDoc>,
    prefix: &str,
    rates_required: bool,
) -> Result<EchelonSpec> {
    let required = |v: Option<f64>, field: String| -> Result<f64> {
        match v {
            Some(x) => Ok(x),
            None if rates_required => Err(Error::Schema(format!("missing field `{field}`"))),
            None => Ok(0.0),
        }
    };
    let list: Vec<WarehouseParams> = match warehouses {
        WarehousesDoc::List(list) => list
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let f = |name: &str| format!("{prefix}warehouses[{i}].{name}");
                Ok(WarehouseParams {
                    max_level: w.L,
                    max_supply: required(w.mu, f("mu"))?,
                    deterioration: w
                        .theta
                        .ok_or_else(|| Error::Schema(format!("missing field `{}`", f("theta"))))?,
                    demand: required(w.lambda, f("lambda"))?,
                })
            })
            .collect::<Result<_>>()?,
        WarehousesDoc::Uniform(u) => {
            let f = |name: &str| format!("{prefix}warehouses.{name}");
            if u.count == 0 {
                return Err(invalid(f("count"), "must be >= 1"));
            }
            let max_level = match (u.L, u.C) {
                (Some(l), None) => l,
                (None, Some(c)) => c / u.count as f64,
                _ => return Err(Error::Schema(format!("{} needs exactly one of `L` or `C`", f("")))),
            };
            let theta_of = |i: usize| -> Result<f64> {
                match (u.theta, u.theta_step) {
                    (Some(t), None) => Ok(t),
                    (None, Some(step)) => Ok((i + 1) as f64 * step),
                    _ => Err(Error::Schema(format!(
                        "{} needs exactly one of `theta` or `theta_step`",
                        f("")
                    ))),
                }
            };
            let mu = required(u.mu, f("mu"))?;
            let lambda = required(u.lambda, f("lambda"))?;
            (0..u.count)
                .map(|i| Ok(WarehouseParams::new(max_level, mu, theta_of(i)?, lambda)))
                .collect::<Result<_>>()?
        }
    };
    let n = list.len();
    let matrix = match gamma {
        None => DenseMatrix::zeros(n, n),
        Some(GammaDoc::Scalar(g)) => DenseMatrix::from_fn(n, n, |i, j| if i == j { 0.0 } else { *g }),
        Some(GammaDoc::Matrix(rows)) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!(
                    "{prefix}gamma must be {n}x{n} to match the warehouse count"
                )));
            }
            DenseMatrix::from_rows(rows)?
        }
    };
    EchelonSpec::validated(list, matrix, prefix)
}
