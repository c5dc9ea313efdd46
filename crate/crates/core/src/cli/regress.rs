use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::commands::{betti_of, hilbert_of, parse_scalar, realize_point};
use super::{CliError, RunConfig};
use crate::algebra::{Field, Rationals};
use crate::arrangement::{parse_arrangement, LoadedArrangement};
use crate::fixtures;
use crate::matroid::{build_tn, qt_arrangement, triple_points, RealizationMatrix};
use crate::ziegler::{compare_arrangements, cone_hilbert_polynomial};

type CaseFn = Box<dyn Fn(&RunConfig) -> Result<Value, CliError> + Send + Sync>;

fn json<T: Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Io(e.to_string()))
}

fn fixture(name: &str) -> &'static str {
    fixtures::ARRANGEMENTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .expect("known fixture")
}

fn load(name: &str) -> Result<LoadedArrangement, CliError> {
    Ok(parse_arrangement(name, fixture(name))?)
}

macro_rules! with_loaded {
    ($loaded:expr, $a:ident => $body:expr) => {
        match $loaded {
            LoadedArrangement::Rational($a) => $body,
            LoadedArrangement::Quadratic($a) => $body,
        }
    };
}

/// The shipped examples, each rendered as structured output.
pub fn regress_cases() -> Vec<(String, CaseFn)> {
    let mut cases: Vec<(String, CaseFn)> = Vec::new();
    for (name, _) in fixtures::ARRANGEMENTS {
        let name = *name;
        cases.push((
            format!("betti-{}", name.trim_end_matches(".arr")),
            Box::new(move |c| {
                with_loaded!(load(name)?, a => json(&betti_of(c, name, &a, &c.backend(a.field().descriptor())?)?))
            }),
        ));
        // Double cones have a two-dimensional singular locus, outside the
        // supported Hilbert polynomial range.
        if name.starts_with('D') {
            continue;
        }
        cases.push((
            format!("hilbert-{}", name.trim_end_matches(".arr")),
            Box::new(move |c| {
                with_loaded!(load(name)?, a => json(&hilbert_of(c, name, &a, &c.backend(a.field().descriptor())?, 15)?))
            }),
        ));
    }
    for (x, y) in [("B.arr", "Bprime.arr"), ("E.arr", "Eprime.arr"), ("Q3.arr", "Qsqrt5.arr")] {
        cases.push((
            format!("ziegler-{}-{}", x.trim_end_matches(".arr"), y.trim_end_matches(".arr")),
            Box::new(move |c| {
                let (la, lb) = (load(x)?, load(y)?);
                let backend = with_loaded!(&la, a => c.backend(a.field().descriptor())?);
                let r = with_loaded!(&la, a => with_loaded!(&lb, b => compare_arrangements(a, b, &backend)))?;
                json(&r)
            }),
        ));
    }
    for name in ["B.arr", "Bprime.arr"] {
        cases.push((
            format!("cone-{}", name.trim_end_matches(".arr")),
            Box::new(move |c| {
                with_loaded!(load(name)?, a => json(&cone_hilbert_polynomial(&a, &c.backend(a.field().descriptor())?)?))
            }),
        ));
    }
    cases.push((
        "tn-10".into(),
        Box::new(|_| {
            let m = build_tn(10)?;
            json(&(m.bases.len(), m.nonbases()))
        }),
    ));
    cases.push((
        "qt-3".into(),
        Box::new(|_| {
            let a = qt_arrangement(&Rationals, &Rationals.from_int(3))?;
            let points: Vec<Vec<String>> = triple_points(&a)?
                .iter()
                .map(|p| p.iter().map(|c| c.to_string()).collect())
                .collect();
            json(&(a.form_strings(), points))
        }),
    ));
    for point in ["2,3,5,7,11", "2,1,5,7,11", "7,2,3,-5,-1"] {
        cases.push((
            format!("realize-{point}"),
            Box::new(move |c| {
                let m = RealizationMatrix::parse(fixtures::REALIZATION)?;
                let q = point
                    .split(',')
                    .map(|s| parse_scalar(&Rationals, s))
                    .collect::<Result<Vec<_>, _>>()?;
                json(&realize_point(c, &m, &q)?)
            }),
        ));
    }
    cases
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegressOutcome {
    Pass,
    Blessed,
    Missing,
    Differs { line: usize },
    Error(String),
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn first_difference(a: &str, b: &str) -> usize {
    a.lines().zip(b.lines()).position(|(x, y)| x != y).unwrap_or(a.lines().count().min(b.lines().count())) + 1
}

/// Runs every case concurrently and compares with `<dir>/<case>.json`.
pub fn run_regress(config: &RunConfig, golden: Option<PathBuf>, bless: bool) -> Result<String, CliError> {
    let dir = golden.unwrap_or_else(golden_dir);
    if bless {
        std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    let cases = regress_cases();
    let outcomes: Vec<(String, RegressOutcome)> = cases
        .par_iter()
        .map(|(name, run)| {
            let path = dir.join(format!("{name}.json"));
            let outcome = match run(config).map(|v| serde_json::to_string_pretty(&v).expect("values serialize") + "\n") {
                Err(e) => RegressOutcome::Error(e.to_string()),
                Ok(text) if bless => match std::fs::write(&path, &text) {
                    Ok(()) => RegressOutcome::Blessed,
                    Err(e) => RegressOutcome::Error(format!("{}: {e}", path.display())),
                },
                Ok(text) => match std::fs::read_to_string(&path) {
                    Err(_) => RegressOutcome::Missing,
                    Ok(want) if want == text => RegressOutcome::Pass,
                    Ok(want) => RegressOutcome::Differs {
                        line: first_difference(&want, &text),
                    },
                },
            };
            (name.clone(), outcome)
        })
        .collect();
    let mut failed = 0;
    let lines: Vec<String> = outcomes
        .iter()
        .map(|(name, o)| match o {
            RegressOutcome::Pass => format!("PASS {name}"),
            RegressOutcome::Blessed => format!("BLESS {name}"),
            RegressOutcome::Missing => {
                failed += 1;
                format!("FAIL {name}: no golden file")
            }
            RegressOutcome::Differs { line } => {
                failed += 1;
                format!("FAIL {name}: differs from golden at line {line}")
            }
            RegressOutcome::Error(e) => {
                failed += 1;
                format!("FAIL {name}: {e}")
            }
        })
        .collect();
    let report = lines.join("\n");
    if failed > 0 {
        Err(CliError::Regression(format!("{failed} of {} cases\n{report}", outcomes.len())))
    } else {
        Ok(report)
    }
}
