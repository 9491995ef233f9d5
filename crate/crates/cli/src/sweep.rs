//! Batch classification over family ranges, run in parallel and reported by key.

use std::fmt::Write as _;

use mw_core::symbolic::waldschmidt;
use mw_core::weights::{classify, ghw, paving_profile};
use mw_core::{Matroid, Rational};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::args::SweepRange;
use crate::commands::Report;
use crate::error::CliError;
use crate::input::parse_family;

/// Every built-in fixture, as family descriptors.
pub const CORPUS: &[&str] = &[
    "all-ones:3,2",
    "all-ones:3,3",
    "all-ones:4,2",
    "all-ones:5,2",
    "complete-intersection:1,1,2@3",
    "complete-intersection:1,2,3",
    "constant-weight",
    "dual-hamming:3",
    "fano",
    "reed-muller:2,3",
    "reed-muller:3,2",
    "uniform:2,4",
    "uniform:2,5",
    "uniform:2,6",
    "uniform:3,5",
    "uniform:3,6",
    "uniform:3,7",
    "uniform:4,7",
    "vamos",
    "vandermonde:2,4@4",
    "vandermonde:2,5@5",
];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Instance {
    family: String,
    params: Vec<usize>,
    dual: bool,
}

impl Instance {
    fn descriptor(&self) -> String {
        if self.params.is_empty() {
            return self.family.clone();
        }
        let p: Vec<String> = self.params.iter().map(usize::to_string).collect();
        format!("{}:{}", self.family, p.join(","))
    }

    /// A trailing `*` marks rows computed on M rather than M*.
    fn key(&self) -> String {
        format!("{}{}", self.descriptor(), if self.dual { "*" } else { "" })
    }

    fn matroid(&self, guard: usize) -> Result<Matroid, CliError> {
        let m = parse_family(&self.descriptor())?.matroid()?.with_guard(guard);
        Ok(if self.dual { m } else { m.dual() })
    }
}

/// Splits `name:a,b@q` so that corpus rows sort by family, then parameters.
fn instance(descriptor: &str, dual: bool) -> Instance {
    let (name, args) = descriptor.split_once(':').unwrap_or((descriptor, ""));
    if args.contains('@') {
        return Instance { family: descriptor.to_string(), params: Vec::new(), dual };
    }
    let params = args.split(',').filter(|a| !a.is_empty()).map(|a| a.parse().expect("corpus parameters")).collect();
    Instance { family: name.to_string(), params, dual }
}

#[derive(Serialize)]
struct Row {
    key: String,
    n: usize,
    rank: usize,
    d: Vec<u64>,
    subadditive: bool,
    extended_subadditive: bool,
    paving: bool,
    sparse_paving: bool,
    waldschmidt: Rational,
    dual_waldschmidt: Option<Rational>,
    reciprocal_sum: Option<Rational>,
    reciprocal_identity: Option<bool>,
}

fn row(inst: &Instance, guard: usize) -> Result<Row, CliError> {
    let m = inst.matroid(guard)?;
    let d = ghw(&m)?;
    let rep = classify(d.values())?;
    let profile = paving_profile(&m)?;
    let w = waldschmidt(&m)?;
    // `M*` has no circuits when `M` has rank 0.
    let dual_w = if m.rank_total() > 0 { Some(waldschmidt(&m.dual())?) } else { None };
    let sum = dual_w.map(|v| w.recip() + v.recip());
    Ok(Row {
        key: inst.key(),
        n: m.n(),
        rank: m.rank_total(),
        d: d.values().to_vec(),
        subadditive: rep.is_subadditive,
        extended_subadditive: rep.is_extended_subadditive,
        paving: profile.is_paving,
        sparse_paving: profile.is_sparse_paving,
        waldschmidt: w,
        dual_waldschmidt: dual_w,
        reciprocal_sum: sum,
        reciprocal_identity: sum.map(|s| s == Rational::from_integer(1)),
    })
}

fn instances(range: &SweepRange, guard: usize) -> Result<Vec<Instance>, CliError> {
    Ok(match range {
        SweepRange::Uniform { max_n } => {
            (4..=*max_n).flat_map(|n| (2..=n - 2).map(move |k| instance(&format!("uniform:{k},{n}"), false))).collect()
        }
        SweepRange::AllOnes { k_min, k_max, l } => {
            if k_min > k_max {
                return Err(CliError::Usage(format!("--k-min {k_min} exceeds --k-max {k_max}")));
            }
            (*k_min..=*k_max).map(|k| instance(&format!("all-ones:{k},{l}"), false)).collect()
        }
        SweepRange::Corpus => CORPUS.iter().flat_map(|d| [instance(d, false), instance(d, true)]).collect(),
        SweepRange::SparsePaving => {
            let all: Vec<Instance> = CORPUS.iter().flat_map(|d| [instance(d, false), instance(d, true)]).collect();
            let keep: Vec<bool> = all
                .par_iter()
                .map(|i| -> Result<bool, CliError> {
                    let m = i.matroid(guard)?;
                    let (k, n) = (m.rank_total(), m.n());
                    Ok(k >= 2 && k + 2 <= n && m.is_sparse_paving()?)
                })
                .collect::<Result<_, _>>()?;
            all.into_iter().zip(keep).filter_map(|(i, k)| k.then_some(i)).collect()
        }
    })
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), T::to_string)
}

pub fn run(range: &SweepRange, guard: usize) -> Result<Report, CliError> {
    let mut list = instances(range, guard)?;
    list.sort();
    let rows: Vec<Row> = list.par_iter().map(|i| row(i, guard)).collect::<Result<_, _>>()?;
    let mut text = format!(
        "{:<34} {:>3} {:>4}  {:<22} {:<5} {:<5} {:<6} {:<7} {:>8} {:>8} {:>8}\n",
        "instance", "n", "rank", "d", "sub", "ext", "paving", "sparse", "w", "w*", "1/w+1/w*"
    );
    for r in &rows {
        let d: Vec<String> = r.d.iter().map(u64::to_string).collect();
        let _ = writeln!(
            text,
            "{:<34} {:>3} {:>4}  {:<22} {:<5} {:<5} {:<6} {:<7} {:>8} {:>8} {:>8}",
            r.key,
            r.n,
            r.rank,
            d.join(","),
            r.subadditive,
            r.extended_subadditive,
            r.paving,
            r.sparse_paving,
            r.waldschmidt.to_string(),
            opt(&r.dual_waldschmidt),
            opt(&r.reciprocal_sum)
        );
    }
    let holds = rows.iter().filter(|r| r.reciprocal_identity == Some(true)).count();
    let _ = writeln!(text, "reciprocal identity holds on {holds} of {} instances", rows.len());
    Ok(Report { json: json!({ "instances": rows.len(), "rows": rows }), text })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_sort_by_family_then_numeric_parameters() {
        let mut list = [instance("uniform:2,10", false), instance("uniform:2,9", true), instance("uniform:2,9", false)];
        list.sort();
        let keys: Vec<String> = list.iter().map(Instance::key).collect();
        assert_eq!(keys, ["uniform:2,9", "uniform:2,9*", "uniform:2,10"]);
        assert_eq!(instance("vandermonde:2,5@5", false).descriptor(), "vandermonde:2,5@5");
    }

    #[test]
    fn corpus_descriptors_parse() {
        for d in CORPUS {
            parse_family(d).unwrap_or_else(|e| panic!("{d}: {e}"));
        }
    }
}
