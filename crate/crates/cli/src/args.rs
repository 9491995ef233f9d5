use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "mw",
    version,
    about = "Generalized Hamming weights and symbolic powers of matroid ideals",
    long_about = "Generalized Hamming weights and symbolic powers of matroid ideals.\n\n\
        An input names a matroid M: the column matroid of a generator matrix, a bases list, \
        the matroid of a Steiner system, or a family. The matroid commands work on M*, whose \
        weights are the code weights d_r(C) and whose Stanley-Reisner ideal is the one studied. \
        Pass --dual to work on M instead."
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Raise the enumeration guard on the ground set size (default 24, or MW_GUARD_N).
    #[arg(long, global = true, value_name = "N")]
    pub unsafe_n: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
#[group(multiple = false)]
pub struct Input {
    /// Named fixture, e.g. `vamos`, `uniform:2,5`, `reed-muller:2,3`.
    #[arg(long, value_name = "DESCRIPTOR")]
    pub family: Option<String>,

    /// Generator matrix file (`q p e`, `dims k n`, rows).
    #[arg(long, value_name = "FILE")]
    pub matrix: Option<PathBuf>,

    /// Bases file (`n N`, one basis per line).
    #[arg(long, value_name = "FILE")]
    pub bases: Option<PathBuf>,

    /// Steiner system file (`n N t T k K`, one block per line).
    #[arg(long, value_name = "FILE")]
    pub blocks: Option<PathBuf>,

    /// Read a matrix, bases or blocks file from standard input.
    #[arg(long)]
    pub stdin: bool,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    #[command(flatten)]
    pub input: Input,

    /// Compute on the input matroid M itself instead of M* (for `code`: use the dual code).
    #[arg(long)]
    pub dual: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generalized Hamming weights of M* (the code's weights for a code input).
    Ghw(Source),
    /// Subadditivity profile of a weight sequence.
    Classify {
        #[command(flatten)]
        source: Source,
        /// Comma-separated sequence; replaces the input matroid.
        #[arg(long, value_delimiter = ',', value_name = "D1,D2,...")]
        seq: Option<Vec<u64>>,
    },
    /// Initial degree of the s-th symbolic power.
    Alpha {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        s: u64,
        /// Also run the brute-force search and check it agrees.
        #[arg(long)]
        oracle: bool,
    },
    /// Waldschmidt constant, as an exact fraction.
    Waldschmidt(Source),
    /// Generators of the symbolic Rees algebra.
    Rees(Source),
    /// Invariants and resurgence bounds of a matroid configuration.
    Config {
        #[command(flatten)]
        source: Source,
        /// Degrees of the forms: a file of n positive integers, or `const:c`.
        #[arg(long, value_name = "FILE|const:c")]
        delta: String,
        /// The configuration is a set of points (N = n - k).
        #[arg(long)]
        points: bool,
    },
    /// Linear code operations.
    Code {
        #[arg(value_enum)]
        op: CodeOp,
        #[command(flatten)]
        source: Source,
    },
    /// Write a named fixture in one of the input formats.
    Family {
        descriptor: String,
        #[arg(long, conflicts_with_all = ["emit_bases", "emit_blocks"])]
        emit_matrix: bool,
        #[arg(long, conflicts_with = "emit_blocks")]
        emit_bases: bool,
        #[arg(long)]
        emit_blocks: bool,
    },
    /// Classification and reciprocal Waldschmidt check over a family range.
    Sweep {
        #[command(subcommand)]
        range: SweepRange,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum CodeOp {
    /// Weights of the code by column-subset enumeration.
    Ghw,
    /// Parity-check matrix, as a generator matrix of the dual code.
    Dual,
    /// Minimum distance.
    Mindist,
}

#[derive(Subcommand, Debug, Clone)]
pub enum SweepRange {
    /// U_{k,n} for 2 <= k <= n - 2 and n <= max-n.
    Uniform {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Codes [I_k | J] over GF(2), listed by their code-side weights.
    AllOnes {
        #[arg(long, default_value_t = 3)]
        k_min: usize,
        #[arg(long, default_value_t = 5)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
    /// Sparse paving members of the built-in corpus.
    SparsePaving,
    /// Every built-in fixture and its dual.
    Corpus,
}
