use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact Clifford algebra calculator: products, classification, gradings and
/// signature change.
#[derive(Debug, Parser)]
#[command(name = "cliffgrade", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate expressions, multiplying them left to right.
    Eval(EvalArgs),
    /// Classify Cl(p,q), its even part, or the even subalgebra of a grading.
    Classify(ClassifyArgs),
    /// Inspect a grading given by an odd set or an involution matrix.
    Grading(GradingArgs),
    /// Evaluate under the signature-changing product of a grading.
    Sigchange(SigchangeArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
}

/// `p,q` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pair(pub usize, pub usize);

impl std::str::FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected 'p,q', got '{s}'"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("'{t}' is not a non-negative integer"))
        };
        Ok(Pair(parse(a)?, parse(b)?))
    }
}

#[derive(Debug, Clone, Args)]
pub struct GradingSource {
    /// Odd basis vectors, e.g. `e2,e3,e4`.
    #[arg(long, conflicts_with = "involution")]
    pub odd: Option<String>,
    /// JSON file holding an n x n matrix of rationals ("num/den" strings or integers).
    #[arg(long)]
    pub involution: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Geometric,
    Vee,
    Veeprime,
    Tilt,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub sig: Pair,
    #[arg(long, value_enum, default_value = "geometric")]
    pub product: ProductKind,
    #[command(flatten)]
    pub grading: GradingSource,
    #[arg(long)]
    pub json: bool,
    #[arg(required = true)]
    pub exprs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub sig: Pair,
    /// Signature `p0,q0` of the even vectors of a grading.
    #[arg(long, conflicts_with_all = ["odd", "involution"])]
    pub even: Option<Pair>,
    #[command(flatten)]
    pub grading: GradingSource,
    /// Re-derive the answer from the structural fingerprint.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct GradingArgs {
    #[arg(long)]
    pub sig: Pair,
    #[command(flatten)]
    pub grading: GradingSource,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SigchangeArgs {
    #[arg(long)]
    pub sig: Pair,
    #[command(flatten)]
    pub grading: GradingSource,
    #[arg(long)]
    pub expr: String,
    #[arg(long, value_enum, default_value = "vee")]
    pub product: ProductKind,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Even subalgebra of every grading against the tensor formula and the oracle.
    Table4,
    /// The deformed product realises Cl(r,s) for every grading.
    Sigchange,
    /// Laws of the geometric, exterior and contraction products.
    Core,
    /// Associativity, closure and the wedge identity for the primed product.
    Veeprime,
    /// Generator folding against the direct formula for vector products.
    Routes,
    /// Tilt against the usual grading, and flipped generator squares.
    Tilt,
    /// Even dimension and closure for every grading.
    Dichotomy,
    All,
}

/// Largest `--max-n` accepted by `verify`.
pub const MAX_N_CAP: usize = 8;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long, default_value_t = 4)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}
