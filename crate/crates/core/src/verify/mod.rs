//! Named, exactly recomputed checks of identities, tables and conjectures.

mod checks;
mod common;
mod golden;
mod options;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

pub use checks::{lift_exceptions, permutation_counts, table_values};
pub use golden::{golden_sigma, golden_table, GoldenCell};
pub use options::Options;
pub use report::{CheckKind, CheckReport, DegreeRecord, Detail, DetailKind, Status};

pub(crate) use report::Recorder;

pub(crate) struct Ctx<'a> {
    pub n: usize,
    pub opts: &'a Options,
}

type CheckFn = fn(&Ctx, &mut Recorder) -> Result<()>;

pub(crate) struct CheckDef {
    name: &'static str,
    anchor: &'static str,
    kind: CheckKind,
    /// First degree reported.
    min_degree: usize,
    default_n: usize,
    ceiling: usize,
    options: &'static [&'static str],
    run: CheckFn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub name: &'static str,
    pub anchor: &'static str,
    pub kind: CheckKind,
    pub default_degree: usize,
    pub ceiling: usize,
    pub options: &'static [&'static str],
}

pub fn list_checks() -> Vec<CheckInfo> {
    checks::REGISTRY
        .iter()
        .map(|d| CheckInfo {
            name: d.name,
            anchor: d.anchor,
            kind: d.kind,
            default_degree: d.default_n,
            ceiling: effective_ceiling(d),
            options: d.options,
        })
        .collect()
}

fn find(name: &str) -> Result<&'static CheckDef> {
    checks::REGISTRY
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.into()))
}

fn effective_ceiling(d: &CheckDef) -> usize {
    if d.kind == CheckKind::Table {
        return d.ceiling;
    }
    std::env::var("SF_MAX_DEGREE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(d.ceiling)
}

/// Runs one check up to degree `n` (the check's default when `None`).
/// Tables always run at their fixed degree.
pub fn run_check(name: &str, n: Option<usize>, opts: &Options) -> Result<CheckReport> {
    let def = find(name)?;
    for key in opts.keys() {
        if !def.options.contains(&key) {
            return Err(Error::BadOption(format!("`{name}` does not take option `{key}`")));
        }
    }
    let n = if def.kind == CheckKind::Table {
        def.default_n
    } else {
        n.unwrap_or(def.default_n)
    };
    let ceiling = effective_ceiling(def);
    if n > ceiling {
        return Err(Error::DegreeCeiling {
            check: name.into(),
            requested: n,
            ceiling,
        });
    }
    if n < def.min_degree {
        return Err(Error::Domain(format!(
            "`{name}` needs degree at least {}",
            def.min_degree
        )));
    }
    let started = Instant::now();
    let mut rec = Recorder::new(def.min_degree, n);
    (def.run)(&Ctx { n, opts }, &mut rec)?;
    Ok(rec.finish(def.name, def.kind, started))
}

/// Runs the named checks (all of them when `names` is empty) on a pool of `jobs` threads,
/// returning reports in registry order.
pub fn run_many(names: &[String], n: Option<usize>, opts: &Options, jobs: usize) -> Result<Vec<Result<CheckReport>>> {
    let selected: Vec<&'static str> = if names.is_empty() {
        checks::REGISTRY.iter().map(|d| d.name).collect()
    } else {
        names.iter().map(|s| find(s).map(|d| d.name)).collect::<Result<_>>()?
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        selected
            .par_iter()
            .map(|name| {
                let def = find(name)?;
                let degree = n.map(|m| m.min(effective_ceiling(def)));
                let own = if names.is_empty() { Options::default() } else { opts.clone() };
                run_check(name, degree, &own)
            })
            .collect()
    }))
}
