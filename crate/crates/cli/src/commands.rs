use std::fs;
use std::path::Path;

use invnet_core::chain::{kantorovich_certificate, StabilityCertificate};
use invnet_core::linalg::gershgorin;
use invnet_core::netspec::validate_positivity_condition;
use invnet_core::oracle::{rk4_at_times, DEFAULT_RK4_STEP};
use invnet_core::{
    aggregate_params, aggregated_equilibrium, build_system, chain_rhs, equilibrium, newton_solve, parse_config,
    phase1_aggregate, phase2_disaggregate, simulate_chain, solve_trajectory, two_phase, Config, EchelonSpec,
    MethodChoice, Model, NewtonOptions, TrajectorySeries,
};

use crate::args::{EquilibriumArgs, Format, SimulateArgs, StabilityArgs, TwoPhaseArgs};
use crate::error::{CliError, CliResult};
use crate::output::{csv, fixed, full, render_wide, table, Column, Record};

pub fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn load(path: &Path) -> CliResult<Config> {
    Ok(parse_config(&read(path)?)?)
}

/// Equilibrium quantities of a model plus free-form notes for the table view.
pub struct Solved {
    pub record: Record,
    pub notes: Vec<String>,
}

pub fn solve(config: &Config, method: MethodChoice, aggregate: bool) -> CliResult<Solved> {
    if aggregate && !matches!(config.model, Model::Echelon(_)) {
        return Err(CliError::Usage(format!(
            "--aggregate applies to echelon models only, config is {}",
            config.model.kind()
        )));
    }
    let opts = NewtonOptions::default();
    match &config.model {
        Model::Echelon(spec) => {
            let report = equilibrium(&build_system(spec), method)?;
            let mut record: Record = report
                .levels
                .iter()
                .enumerate()
                .map(|(i, &v)| (Column::Level(i + 1), v))
                .collect();
            record.insert(Column::Total, report.total());
            if aggregate {
                let ya = aggregated_equilibrium(&aggregate_params(spec))?;
                record.insert(Column::Aggregate, ya);
                record.insert(Column::AggregateGap, ya - report.total());
            }
            let mut notes = vec![
                format!("method: {}", report.method.name()),
                format!(
                    "stable: {} (gershgorin bound {})",
                    report.stable,
                    fixed(report.gershgorin_bound, 6)
                ),
            ];
            if let Some(f) = report.fallback {
                notes.push(format!("fallback: {f}"));
            }
            Ok(Solved { record, notes })
        }
        Model::Chain(spec) => {
            let sol = newton_solve(spec, &opts)?;
            let mut record: Record = sol
                .equilibrium
                .iter()
                .enumerate()
                .map(|(e, &v)| (Column::Echelon(e + 1), v))
                .collect();
            record.insert(Column::Total, sol.total());
            record.insert(Column::Iterations, sol.trace.iterations as f64);
            record.insert(
                Column::Residual,
                sol.trace.residual_norms.last().copied().unwrap_or(0.0),
            );
            let notes = vec![format!("within capacity: {}", sol.within_capacity)];
            Ok(Solved { record, notes })
        }
        Model::FullNetwork(net) => {
            let r = two_phase(net, &opts)?;
            let sol = &r.chain_solution;
            let mut record: Record = sol
                .equilibrium
                .iter()
                .enumerate()
                .map(|(e, &v)| (Column::Echelon(e + 1), v))
                .collect();
            for d in &r.echelons {
                for (i, &v) in d.report.levels.iter().enumerate() {
                    record.insert(Column::Warehouse(d.echelon, i + 1), v);
                }
            }
            record.insert(Column::Total, sol.total());
            record.insert(Column::Iterations, sol.trace.iterations as f64);
            record.insert(
                Column::Residual,
                sol.trace.residual_norms.last().copied().unwrap_or(0.0),
            );
            let notes = vec![states_note(r.states_handled, r.full_states)];
            Ok(Solved { record, notes })
        }
    }
}

fn states_note(handled: usize, full: usize) -> String {
    format!("largest system solved: {handled} states (full network: {full} warehouses)")
}

pub fn equilibrium_cmd(args: &EquilibriumArgs) -> CliResult<String> {
    let config = load(&args.config)?;
    let solved = solve(&config, args.method.into(), args.aggregate)?;
    Ok(match args.format {
        Format::Csv => render_wide(&[], &[vec![]], &[solved.record], true, args.digits),
        Format::Table => {
            let rows: Vec<Vec<String>> = solved
                .record
                .iter()
                .map(|(c, v)| vec![c.label(), c.rounded(*v, args.digits)])
                .collect();
            let mut out = table(&["quantity".into(), "value".into()], &rows);
            for n in &solved.notes {
                out.push_str(n);
                out.push('\n');
            }
            out
        }
    })
}

/// `k * t_max / samples` for `k = 0..=samples`, ending exactly at `t_max`.
pub fn sample_times(t_max: f64, samples: usize) -> Vec<f64> {
    (0..=samples)
        .map(|k| {
            if k == samples {
                t_max
            } else {
                k as f64 * t_max / samples as f64
            }
        })
        .collect()
}

fn initial_state(config: &Config, n: usize) -> Vec<f64> {
    config.initial.clone().unwrap_or_else(|| vec![0.0; n])
}

pub fn simulate_cmd(args: &SimulateArgs) -> CliResult<String> {
    if !(args.t_max > 0.0 && args.t_max.is_finite()) {
        return Err(CliError::Usage(format!(
            "--t-max must be finite and > 0, got {}",
            args.t_max
        )));
    }
    if args.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let config = load(&args.config)?;
    let times = sample_times(args.t_max, args.samples);
    let (symbol, series, reference): (&str, TrajectorySeries, Option<TrajectorySeries>) = match &config.model {
        Model::Echelon(spec) => {
            let sys = build_system(spec);
            let y0 = initial_state(&config, spec.len());
            let series = solve_trajectory(&sys, &y0, &times)?;
            let reference = match args.oracle {
                true => Some(rk4_at_times(|y| sys.rhs(y), &y0, &times, DEFAULT_RK4_STEP)?),
                false => None,
            };
            ("y", series, reference)
        }
        Model::Chain(spec) => {
            let x0 = initial_state(&config, spec.len());
            let series = simulate_chain(spec, &x0, &times)?;
            // The chain path is already RK4; the reference halves the step.
            let reference = match args.oracle {
                true => Some(rk4_at_times(
                    |x| chain_rhs(spec, x),
                    &x0,
                    &times,
                    DEFAULT_RK4_STEP / 2.0,
                )?),
                false => None,
            };
            ("x", series, reference)
        }
        Model::FullNetwork(_) => {
            return Err(CliError::Usage(
                "simulate supports echelon and chain configs, not full-network".into(),
            ))
        }
    };
    let n = series.states()[0].len();
    let mut header = vec!["t".to_owned()];
    header.extend((1..=n).map(|i| format!("{symbol}{i}")));
    if reference.is_some() {
        header.extend((1..=n).map(|i| format!("rk4_{symbol}{i}")));
    }
    let as_csv = args.format == Format::Csv;
    let fmt = |v: f64| if as_csv { full(v) } else { fixed(v, args.digits) };
    let rows: Vec<Vec<String>> = series
        .iter()
        .enumerate()
        .map(|(k, (t, y))| {
            let mut row = vec![fmt(t)];
            row.extend(y.iter().map(|&v| fmt(v)));
            if let Some(r) = &reference {
                row.extend(r.states()[k].iter().map(|&v| fmt(v)));
            }
            row
        })
        .collect();
    Ok(if as_csv {
        csv(&header, &rows)
    } else {
        table(&header, &rows)
    })
}

fn echelon_stability(spec: &EchelonSpec) -> String {
    let g = gershgorin(build_system(spec).a());
    let rows: Vec<Vec<String>> = g
        .discs
        .iter()
        .enumerate()
        .map(|(i, d)| vec![(i + 1).to_string(), fixed(d.center, 6), fixed(d.radius, 6)])
        .collect();
    let mut out = table(&["warehouse".into(), "center".into(), "radius".into()], &rows);
    out.push_str(&format!("gershgorin bound: {}\n", fixed(g.upper_bound, 6)));
    out.push_str(&format!("stable: {}\n", g.certifies_stability()));
    let positive = validate_positivity_condition(spec).iter().all(|&p| p);
    out.push_str(&format!("positive levels guaranteed (mu_i > lambda_i): {positive}\n"));
    out
}

fn chain_stability(cert: &StabilityCertificate) -> String {
    let rows: Vec<Vec<String>> = cert
        .condition
        .iter()
        .map(|f| {
            vec![
                f.echelon.to_string(),
                fixed(f.lhs, 6),
                fixed(f.rhs, 6),
                f.holds.to_string(),
            ]
        })
        .collect();
    let mut out = table(&["echelon".into(), "lhs".into(), "rhs".into(), "holds".into()], &rows);
    out.push_str(&format!("condition satisfied: {}\n", cert.satisfied));
    out.push_str(&format!("note: {}\n", cert.note));
    if let Some(k) = &cert.kantorovich {
        let opt = |v: Option<f64>| v.map_or_else(|| "n/a".to_owned(), |v| format!("{v:.4e}"));
        out.push_str(&format!("kantorovich lipschitz M: {:.4e}\n", k.lipschitz));
        out.push_str(&format!("kantorovich |F(0)|: {:.4e}\n", k.residual_norm));
        out.push_str(&format!(
            "kantorovich |DF(0)^-1| bound: {}\n",
            opt(k.jacobian_inverse_bound)
        ));
        out.push_str(&format!("kantorovich composite (<= 0.0625): {}\n", opt(k.composite)));
        out.push_str(&format!("kantorovich applicable: {}\n", k.applicable));
        out.push_str(&format!("kantorovich satisfied: {}\n", k.satisfied));
    }
    out
}

pub fn stability_cmd(args: &StabilityArgs) -> CliResult<String> {
    let config = load(&args.config)?;
    Ok(match &config.model {
        Model::Echelon(spec) => echelon_stability(spec),
        Model::Chain(spec) => chain_stability(&kantorovich_certificate(spec)),
        Model::FullNetwork(net) => {
            let mut out = String::from("aggregated chain\n");
            out.push_str(&chain_stability(&kantorovich_certificate(&phase1_aggregate(net))));
            let r = two_phase(net, &NewtonOptions::default())?;
            let rows: Vec<Vec<String>> = r
                .echelons
                .iter()
                .map(|d| {
                    vec![
                        d.echelon.to_string(),
                        fixed(d.report.gershgorin_bound, 6),
                        d.report.stable.to_string(),
                    ]
                })
                .collect();
            out.push_str("\ndisaggregated echelons\n");
            out.push_str(&table(
                &["echelon".into(), "gershgorin bound".into(), "stable".into()],
                &rows,
            ));
            out
        }
    })
}

pub fn two_phase_cmd(args: &TwoPhaseArgs) -> CliResult<String> {
    let config = load(&args.config)?;
    let Model::FullNetwork(net) = &config.model else {
        return Err(CliError::Usage(format!(
            "two-phase needs a full-network config, got {}",
            config.model.kind()
        )));
    };
    let m = net.len();
    let selected: Vec<usize> = match args.echelon {
        None => (1..=m).collect(),
        Some(e) if e <= m => vec![e],
        Some(e) => return Err(CliError::Usage(format!("--echelon {e} is out of range 1..={m}"))),
    };
    let chain = phase1_aggregate(net);
    let sol = newton_solve(&chain, &NewtonOptions::default())?;
    let parts = selected
        .iter()
        .map(|&e| phase2_disaggregate(net, &sol.equilibrium, e))
        .collect::<Result<Vec<_>, _>>()?;

    if args.format == Format::Csv {
        let mut rows: Vec<Vec<String>> = sol
            .equilibrium
            .iter()
            .enumerate()
            .map(|(e, &x)| vec![(e + 1).to_string(), String::new(), full(x)])
            .collect();
        for d in &parts {
            for (i, &y) in d.report.levels.iter().enumerate() {
                rows.push(vec![d.echelon.to_string(), (i + 1).to_string(), full(y)]);
            }
        }
        return Ok(csv(&["echelon".into(), "warehouse".into(), "level".into()], &rows));
    }

    let digits = args.digits;
    let residual = sol.trace.residual_norms.last().copied().unwrap_or(0.0);
    let mut out = format!(
        "phase 1: aggregated chain, {} newton iterations, |F| = {residual:.1e}\n",
        sol.trace.iterations
    );
    let rows: Vec<Vec<String>> = sol
        .equilibrium
        .iter()
        .enumerate()
        .map(|(e, &x)| vec![(e + 1).to_string(), fixed(x, digits)])
        .collect();
    out.push_str(&table(&["echelon".into(), "x*".into()], &rows));
    for d in &parts {
        out.push_str(&format!(
            "\nphase 2: echelon {} (mu_i = {}, lambda_i = {})\n",
            d.echelon,
            fixed(d.rates.supply, 4),
            fixed(d.rates.demand, 4)
        ));
        let rows: Vec<Vec<String>> = d
            .report
            .levels
            .iter()
            .enumerate()
            .map(|(i, &y)| vec![(i + 1).to_string(), fixed(y, digits)])
            .collect();
        out.push_str(&table(&["warehouse".into(), "y*".into()], &rows));
        out.push_str(&format!(
            "sum {} vs x{} = {} (gap {})\n",
            fixed(d.report.total(), digits),
            d.echelon,
            fixed(sol.equilibrium[d.echelon - 1], digits),
            fixed(d.gap, digits)
        ));
    }
    let max_n = net.echelons().iter().map(|e| e.echelon.len()).max().unwrap_or(0);
    out.push('\n');
    out.push_str(&states_note(m + max_n, net.warehouse_count()));
    out.push('\n');
    Ok(out)
}
