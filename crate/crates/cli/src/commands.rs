//! One function per subcommand. Each returns the JSON value and the text rendering.

use std::fmt::Write as _;

use mw_core::codes::{ghw_wei_all, min_distance};
use mw_core::configurations::{resurgence_bounds, specialized_invariants, DegreeAssignment};
use mw_core::symbolic::{alpha_fast_witness, alpha_oracle, rees_generators, waldschmidt};
use mw_core::weights::{classify, ghw, Witness};
use mw_core::{io, DSequence, SubadditivityReport};
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{CodeOp, Command, Source};
use crate::error::CliError;
use crate::input::{self, Fixture};
use crate::sweep;

pub struct Report {
    pub json: Value,
    pub text: String,
}

impl Report {
    fn new(json: impl Serialize, text: String) -> Self {
        Report { json: serde_json::to_value(json).expect("reports are plain data"), text }
    }
}

pub fn run(command: &Command, guard: usize) -> Result<Report, CliError> {
    match command {
        Command::Ghw(source) => ghw_report(source, guard),
        Command::Classify { source, seq } => classify_report(source, seq.as_deref(), guard),
        Command::Alpha { source, s, oracle } => alpha_report(source, *s, *oracle, guard),
        Command::Waldschmidt(source) => {
            let w = waldschmidt(&input::matroid(source, guard)?)?;
            Ok(Report::new(json!({ "waldschmidt": w }), format!("{w}\n")))
        }
        Command::Rees(source) => rees_report(source, guard),
        Command::Config { source, delta, points } => config_report(source, delta, *points, guard),
        Command::Code { op, source } => code_report(*op, source, guard),
        Command::Family { descriptor, emit_matrix, emit_bases, emit_blocks } => {
            family_report(descriptor, *emit_matrix, *emit_bases, *emit_blocks, guard)
        }
        Command::Sweep { range } => sweep::run(range, guard),
    }
}

fn seq_text(d: &[u64]) -> String {
    let parts: Vec<String> = d.iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn witness_text(d: &[u64], w: &Witness) -> String {
    match *w {
        Witness::Subadditive { i, j } => {
            format!("d_{} = {} > d_{i} + d_{j} = {}", i + j, d[i + j - 1], d[i - 1] + d[j - 1])
        }
        Witness::Extended { r, t } => {
            let top = d.len();
            format!(
                "d_{r} + d_{top} = {} > d_{t} + d_{} = {}",
                d[r - 1] + d[top - 1],
                top + r - t,
                d[t - 1] + d[top + r - t - 1]
            )
        }
    }
}

fn classification_text(d: &[u64], rep: &SubadditivityReport) -> String {
    let mut out = format!(
        "d = {}\nsubadditive: {}\nextended subadditive: {}\n",
        seq_text(d),
        yes(rep.is_subadditive),
        yes(rep.is_extended_subadditive)
    );
    for w in &rep.witnesses {
        let _ = writeln!(out, "  {}", witness_text(d, w));
    }
    out
}

fn ghw_report(source: &Source, guard: usize) -> Result<Report, CliError> {
    let m = input::matroid(source, guard)?;
    let d = ghw(&m)?;
    let rep = classify(d.values())?;
    let json = json!({
        "d": d.values(),
        "subadditive": rep.is_subadditive,
        "extended_subadditive": rep.is_extended_subadditive,
        "witnesses": rep.witnesses,
        "n": m.n(),
        "rank": m.rank_total(),
    });
    Ok(Report { json, text: classification_text(d.values(), &rep) })
}

fn classify_report(source: &Source, seq: Option<&[u64]>, guard: usize) -> Result<Report, CliError> {
    let d = match seq {
        Some(d) => {
            let given = &source.input;
            if given.family.is_some()
                || given.matrix.is_some()
                || given.bases.is_some()
                || given.blocks.is_some()
                || given.stdin
                || source.dual
            {
                return Err(CliError::Usage("--seq replaces the input; drop the other input options".into()));
            }
            d.to_vec()
        }
        None => ghw(&input::matroid(source, guard)?)?.values().to_vec(),
    };
    let rep = classify(&d)?;
    let json = json!({
        "d": d,
        "subadditive": rep.is_subadditive,
        "extended_subadditive": rep.is_extended_subadditive,
        "subadditive_terms": rep.subadditive_term,
        "strictly_subadditive_terms": rep.strictly_subadditive_term,
        "witnesses": rep.witnesses,
    });
    let mut text = classification_text(&d, &rep);
    let marks: Vec<String> = (1..=d.len())
        .map(|r| {
            let mark = if rep.is_strictly_subadditive_term(r) {
                "strict"
            } else if rep.is_subadditive_term(r) {
                "yes"
            } else {
                "no"
            };
            format!("d_{r}: {mark}")
        })
        .collect();
    let _ = writeln!(text, "subadditive terms: {}", marks.join(", "));
    Ok(Report { json, text })
}

fn alpha_report(source: &Source, s: u64, oracle: bool, guard: usize) -> Result<Report, CliError> {
    let m = input::matroid(source, guard)?;
    let d = DSequence::from(&ghw(&m)?);
    let (alpha, counts) = alpha_fast_witness(&d, s);
    let mut json = json!({ "s": s, "alpha": alpha, "d": d.values(), "decomposition": counts });
    let mut text = format!("{alpha}\n");
    if oracle {
        let brute = alpha_oracle(&m, s)?;
        if brute != alpha {
            return Err(CliError::Mismatch(format!(
                "brute-force search gives {brute} but the weight formula gives {alpha} for s = {s}"
            )));
        }
        json["oracle"] = json!(brute);
        let _ = writeln!(text, "oracle: {brute}");
    }
    Ok(Report { json, text })
}

fn rees_report(source: &Source, guard: usize) -> Result<Report, CliError> {
    let gens = rees_generators(&input::matroid(source, guard)?)?;
    let mut text = String::new();
    for g in &gens {
        let _ = writeln!(text, "T^{} x^{}", g.order, g.support);
    }
    Ok(Report::new(json!({ "count": gens.len(), "generators": gens }), text))
}

fn parse_delta(arg: &str, n: usize) -> Result<DegreeAssignment, CliError> {
    if let Some(c) = arg.strip_prefix("const:") {
        let c = c
            .trim()
            .parse()
            .map_err(|_| CliError::Invalid(format!("--delta const:c needs a positive integer, got `{c}`")))?;
        return Ok(DegreeAssignment::constant(n, c)?);
    }
    let path = std::path::Path::new(arg);
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        let mut offset = 0;
        let mut rest = body;
        loop {
            let trimmed = rest.trim_start();
            if trimmed.is_empty() {
                break;
            }
            offset += rest.len() - trimmed.len();
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            let v = token.parse().map_err(|_| mw_core::Error::Parse {
                line: i + 1,
                column: offset + 1,
                message: format!("expected a positive degree, got `{token}`"),
            })?;
            values.push(v);
            offset += end;
            rest = &trimmed[end..];
        }
    }
    Ok(DegreeAssignment::new(values)?)
}

fn config_report(source: &Source, delta: &str, points: bool, guard: usize) -> Result<Report, CliError> {
    let m = input::matroid(source, guard)?;
    let delta = parse_delta(delta, m.n())?;
    let inv = specialized_invariants(&m, &delta)?;
    let rep = resurgence_bounds(&m, &delta, points)?;
    let json = json!({
        "alpha": inv.alpha,
        "waldschmidt": inv.waldschmidt,
        "regularity": inv.regularity,
        "points": points,
        "lower": rep.lower,
        "upper": rep.upper,
        "exact": rep.exact,
        "bounds": rep.bounds,
    });
    let mut text = format!(
        "alpha: {}\nwaldschmidt: {}\nregularity: {}\nasymptotic resurgence in [{}, {}]\n",
        inv.alpha, inv.waldschmidt, inv.regularity, rep.lower, rep.upper
    );
    if let Some(e) = rep.exact {
        let _ = writeln!(text, "exact: {e}");
    }
    for b in &rep.bounds {
        let target = serde_json::to_value(b.target).expect("plain enum");
        let kind = serde_json::to_value(b.kind).expect("plain enum");
        let _ = writeln!(
            text,
            "  {:<28} {:<12} {:<8} {}",
            b.name,
            kind.as_str().unwrap_or_default(),
            target.as_str().unwrap_or_default(),
            b.value
        );
    }
    Ok(Report { json, text })
}

fn code_report(op: CodeOp, source: &Source, guard: usize) -> Result<Report, CliError> {
    let c = input::code(source, guard)?;
    Ok(match op {
        CodeOp::Ghw => {
            let d = ghw_wei_all(&c)?;
            let json = json!({ "d": d.values(), "n": c.n(), "k": c.k(), "source": d.source() });
            Report { json, text: format!("d = {}\n", seq_text(d.values())) }
        }
        CodeOp::Dual => {
            let text = io::write_matrix(c.parity_check());
            let json = json!({ "n": c.n(), "k": c.n() - c.k(), "matrix": text });
            Report { json, text }
        }
        CodeOp::Mindist => {
            let d = min_distance(&c)?;
            Report { json: json!({ "min_distance": d, "n": c.n(), "k": c.k() }), text: format!("{d}\n") }
        }
    })
}

fn family_report(descriptor: &str, matrix: bool, bases: bool, blocks: bool, guard: usize) -> Result<Report, CliError> {
    let fixture = input::parse_family(descriptor)?;
    let (format, text) = match (&fixture, matrix, bases, blocks) {
        (Fixture::Code(c), _, false, false) => ("matrix", io::write_matrix(c.generator())),
        (Fixture::Steiner(s), false, false, _) => ("blocks", io::write_steiner(s)),
        (_, false, _, false) => ("bases", io::write_bases(&fixture.matroid()?.with_guard(guard))?),
        (_, true, _, _) => return Err(CliError::Usage(format!("`{descriptor}` is not given by a matrix"))),
        _ => return Err(CliError::Usage(format!("`{descriptor}` is not a Steiner system"))),
    };
    Ok(Report { json: json!({ "format": format, "content": text }), text })
}
