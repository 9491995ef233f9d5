//! Input sources: family descriptors, files and standard input.

use std::io::Read;
use std::path::Path;

use mw_core::codes::{dual_code, LinearCode};
use mw_core::families::{
    all_ones_code, complete_intersection_code, constant_weight_fixture, dual_hamming_code, fano, field_of_order,
    reed_muller_code, steiner_matroid, uniform, vamos, vandermonde_code, SteinerSystem,
};
use mw_core::{io, Matroid, DEFAULT_GUARD};

use crate::args::{Input, Source};
use crate::error::CliError;

/// Descriptors accepted by `--family` and `family`.
pub const FAMILIES: &[&str] = &[
    "vamos",
    "uniform:K,N",
    "fano",
    "reed-muller:Q,M",
    "dual-hamming:M",
    "complete-intersection:N1,N2,...[@Q]",
    "all-ones:K,L[@Q]",
    "vandermonde:K,N@Q",
    "constant-weight",
];

pub enum Fixture {
    Code(LinearCode),
    Matroid(Matroid),
    Steiner(SteinerSystem),
}

impl Fixture {
    /// `M(C)` for a code, `M(S)` for a Steiner system.
    pub fn matroid(&self) -> Result<Matroid, CliError> {
        Ok(match self {
            Fixture::Code(c) => c.matroid()?,
            Fixture::Matroid(m) => m.clone(),
            Fixture::Steiner(s) => steiner_matroid(s),
        })
    }

    pub fn code(self) -> Result<LinearCode, CliError> {
        match self {
            Fixture::Code(c) => Ok(c),
            _ => Err(CliError::Usage("this input has no generator matrix; use --matrix or a code family".into())),
        }
    }
}

fn bad(descriptor: &str, why: &str) -> CliError {
    CliError::Invalid(format!("bad family `{descriptor}`: {why}; known families: {}", FAMILIES.join(", ")))
}

fn numbers(descriptor: &str, args: &str) -> Result<Vec<usize>, CliError> {
    if args.is_empty() {
        return Ok(Vec::new());
    }
    args.split(',').map(|x| x.trim().parse().map_err(|_| bad(descriptor, &format!("`{x}` is not a number")))).collect()
}

pub fn parse_family(descriptor: &str) -> Result<Fixture, CliError> {
    let (head, q) = match descriptor.split_once('@') {
        Some((h, q)) => (h, Some(q.parse::<u64>().map_err(|_| bad(descriptor, "field order after @"))?)),
        None => (descriptor, None),
    };
    let (name, args) = head.split_once(':').unwrap_or((head, ""));
    let nums = numbers(descriptor, args)?;
    let field = |default: u64| field_of_order(q.unwrap_or(default));
    let arity = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(bad(descriptor, &format!("expected {k} parameters")))
        }
    };
    let no_field = || if q.is_some() { Err(bad(descriptor, "takes no @Q")) } else { Ok(()) };
    Ok(match name {
        "vamos" => {
            arity(0)?;
            no_field()?;
            Fixture::Matroid(vamos())
        }
        "uniform" => {
            arity(2)?;
            no_field()?;
            Fixture::Matroid(uniform(nums[0], nums[1])?)
        }
        "fano" => {
            arity(0)?;
            no_field()?;
            Fixture::Steiner(fano())
        }
        "reed-muller" => {
            arity(2)?;
            no_field()?;
            Fixture::Code(reed_muller_code(&field_of_order(nums[0] as u64)?, nums[1])?)
        }
        "dual-hamming" => {
            arity(1)?;
            no_field()?;
            Fixture::Code(dual_hamming_code(nums[0])?)
        }
        "complete-intersection" => Fixture::Code(complete_intersection_code(&field(2)?, &nums)?),
        "all-ones" => {
            arity(2)?;
            Fixture::Code(all_ones_code(&field(2)?, nums[0], nums[1])?)
        }
        "vandermonde" => {
            arity(2)?;
            let q = q.ok_or_else(|| bad(descriptor, "needs @Q"))?;
            Fixture::Code(vandermonde_code(&field_of_order(q)?, nums[0], nums[1])?)
        }
        "constant-weight" => {
            arity(0)?;
            no_field()?;
            Fixture::Code(constant_weight_fixture())
        }
        _ => return Err(bad(descriptor, "unknown name")),
    })
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Picks the format from the first token: `q` for a matrix, `n` followed by
/// `t` for a Steiner system, plain `n` for bases.
fn parse_any(text: &str) -> Result<Fixture, CliError> {
    let first: Vec<&str> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .find(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().collect())
        .unwrap_or_default();
    match first.as_slice() {
        ["q", ..] => Ok(Fixture::Code(LinearCode::new(io::parse_matrix(text)?)?)),
        ["n", _, "t", ..] => Ok(Fixture::Steiner(io::parse_steiner(text)?)),
        ["n", ..] => Ok(Fixture::Matroid(io::parse_bases_matroid(text)?)),
        _ => Err(mw_core::Error::Parse {
            line: 1,
            column: 1,
            message: "expected a matrix (`q ...`), bases (`n ...`) or blocks (`n ... t ... k ...`) header".into(),
        }
        .into()),
    }
}

pub fn load(input: &Input) -> Result<Fixture, CliError> {
    if let Some(d) = &input.family {
        parse_family(d)
    } else if let Some(p) = &input.matrix {
        Ok(Fixture::Code(LinearCode::new(io::parse_matrix(&read_file(p)?)?)?))
    } else if let Some(p) = &input.bases {
        Ok(Fixture::Matroid(io::parse_bases_matroid(&read_file(p)?)?))
    } else if let Some(p) = &input.blocks {
        Ok(Fixture::Steiner(io::parse_steiner(&read_file(p)?)?))
    } else if input.stdin {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        parse_any(&text)
    } else {
        Err(CliError::Usage("no input: give one of --family, --matrix, --bases, --blocks or --stdin".into()))
    }
}

/// `--unsafe-n` wins over `MW_GUARD_N`, which wins over the default.
pub fn guard(unsafe_n: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = unsafe_n {
        return Ok(n);
    }
    match std::env::var("MW_GUARD_N") {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("MW_GUARD_N must be an integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

/// The matroid the invariants are computed on: the dual of the input matroid,
/// so that a code's weights come out as `d_r(C) = d_r(M(C)*)`.
pub fn matroid(source: &Source, guard: usize) -> Result<Matroid, CliError> {
    let m = load(&source.input)?.matroid()?.with_guard(guard);
    Ok(if source.dual { m } else { m.dual() })
}

pub fn code(source: &Source, guard: usize) -> Result<LinearCode, CliError> {
    let c = load(&source.input)?.code()?.with_guard(guard);
    Ok(if source.dual { dual_code(&c)? } else { c })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        assert!(matches!(parse_family("vamos"), Ok(Fixture::Matroid(_))));
        assert!(matches!(parse_family("fano"), Ok(Fixture::Steiner(_))));
        let c = parse_family("all-ones:3,2@3").unwrap().code().unwrap();
        assert_eq!((c.k(), c.n(), c.field().order()), (3, 5, 3));
        let c = parse_family("complete-intersection:1,2,3").unwrap().code().unwrap();
        assert_eq!((c.field().order(), c.k(), c.n()), (2, 3, 9));
        for bad in ["vamos:1", "uniform:2", "fano@2", "vandermonde:2,5", "all-ones:3,x", "reed-muller:2,3@2", "blah"] {
            assert!(matches!(parse_family(bad), Err(CliError::Invalid(_))), "{bad}");
        }
        assert!(matches!(parse_family("uniform:5,3"), Err(CliError::Core(_))));
    }

    #[test]
    fn format_detection() {
        assert!(matches!(parse_any("# c\nq 2 1\ndims 1 2\n1 1\n"), Ok(Fixture::Code(_))));
        assert!(matches!(parse_any("n 3\n1 2\n1 3\n"), Ok(Fixture::Matroid(_))));
        assert!(matches!(parse_any(&io::write_steiner(&fano())), Ok(Fixture::Steiner(_))));
        assert!(matches!(parse_any(""), Err(CliError::Core(mw_core::Error::Parse { .. }))));
    }

    #[test]
    fn code_inputs_are_dualized() {
        let source =
            Source { input: Input { family: Some("reed-muller:2,3".into()), ..Input::default() }, dual: false };
        let m = matroid(&source, DEFAULT_GUARD).unwrap();
        assert_eq!((m.n(), m.rank_total()), (8, 4));
        let c = parse_family("dual-hamming:3").unwrap();
        assert_eq!(c.matroid().unwrap().rank_total(), 3);
        let source = Source { input: Input { family: Some("dual-hamming:3".into()), ..Input::default() }, dual: false };
        assert_eq!(matroid(&source, DEFAULT_GUARD).unwrap().rank_total(), 4);
    }
}
