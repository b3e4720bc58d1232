//! Parameter sweeps over the cartesian product of `--vary` lists.

use std::fs;

use invnet_core::ConfigDoc;
use rayon::prelude::*;

use crate::args::{Format, SweepArgs};
use crate::commands::{read, solve};
use crate::error::{CliError, CliResult};
use crate::output::{full, render_wide, Record};

#[derive(Debug, Clone, PartialEq)]
pub struct Vary {
    pub name: String,
    pub values: Vec<f64>,
}

pub fn parse_vary(s: &str) -> CliResult<Vary> {
    let (name, list) = s
        .split_once('=')
        .ok_or_else(|| CliError::Usage(format!("--vary expects name=v1,v2,..., got `{s}`")))?;
    let name = name.trim();
    if name.is_empty() {
        return Err(CliError::Usage(format!("--vary `{s}` has an empty parameter name")));
    }
    let values = list
        .split(',')
        .map(|v| {
            let v = v.trim();
            v.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::Usage(format!("--vary {name}: `{v}` is not a finite number")))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    Ok(Vary {
        name: name.to_owned(),
        values,
    })
}

/// All value combinations, the first parameter varying slowest.
pub fn combinations(varies: &[Vary]) -> Vec<Vec<f64>> {
    varies.iter().fold(vec![Vec::new()], |acc, v| {
        acc.iter()
            .flat_map(|prefix| {
                v.values.iter().map(move |&x| {
                    let mut c = prefix.clone();
                    c.push(x);
                    c
                })
            })
            .collect()
    })
}

pub fn sweep_cmd(args: &SweepArgs) -> CliResult<String> {
    let varies = args.vary.iter().map(|s| parse_vary(s)).collect::<CliResult<Vec<_>>>()?;
    for (k, v) in varies.iter().enumerate() {
        if varies[..k].iter().any(|w| w.name == v.name) {
            return Err(CliError::Usage(format!("parameter `{}` is varied twice", v.name)));
        }
    }
    let doc = ConfigDoc::parse(&read(&args.config)?)?;
    for v in &varies {
        doc.clone().set_param(&v.name, v.values[0])?;
    }
    let combos = combinations(&varies);
    let method = args.method.into();
    let records = combos
        .par_iter()
        .map(|values| -> CliResult<Record> {
            let mut d = doc.clone();
            for (v, &x) in varies.iter().zip(values) {
                d.set_param(&v.name, x)?;
            }
            Ok(solve(&d.into_config()?, method, args.aggregate)?.record)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect::<CliResult<Vec<_>>>()?;
    let prefix: Vec<String> = varies.iter().map(|v| v.name.clone()).collect();
    let prefix_rows: Vec<Vec<String>> = combos.iter().map(|c| c.iter().map(|&x| full(x)).collect()).collect();
    let out = render_wide(&prefix, &prefix_rows, &records, args.format == Format::Csv, args.digits);
    match &args.output {
        Some(path) => {
            fs::write(path, out).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(String::new())
        }
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_list() {
        let v = parse_vary("gamma=0.1, 0.5,1").unwrap();
        assert_eq!(v.name, "gamma");
        assert_eq!(v.values, vec![0.1, 0.5, 1.0]);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_vary("gamma").is_err());
        assert!(parse_vary("=1,2").is_err());
        assert!(parse_vary("n=2,x").is_err());
        assert!(parse_vary("n=").is_err());
        assert!(parse_vary("n=inf").is_err());
    }

    #[test]
    fn first_parameter_slowest() {
        let a = Vary {
            name: "a".into(),
            values: vec![1.0, 2.0],
        };
        let b = Vary {
            name: "b".into(),
            values: vec![10.0, 20.0, 30.0],
        };
        let c = combinations(&[a, b]);
        assert_eq!(c.len(), 6);
        assert_eq!(c[0], vec![1.0, 10.0]);
        assert_eq!(c[2], vec![1.0, 30.0]);
        assert_eq!(c[3], vec![2.0, 10.0]);
    }

    #[test]
    fn no_parameters_single_combination() {
        assert_eq!(combinations(&[]), vec![Vec::<f64>::new()]);
    }
}
