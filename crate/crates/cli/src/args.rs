use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Nilpotent orbits, Kazhdan–Lusztig data and W-algebra characters.
#[derive(Parser, Debug)]
#[command(name = "orbit-goldie", version)]
pub struct Cli {
    /// Emit one JSON object per result line.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read one request per line from FILE.
    #[arg(long, value_name = "FILE")]
    pub batch: Option<PathBuf>,
    /// Print the graded dimension series of a character to this depth.
    #[arg(long, global = true, value_name = "D")]
    pub truncate: Option<i64>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// A single request, as read from a batch line.
#[derive(Parser, Debug)]
#[command(name = "orbit-goldie", no_binary_name = true)]
pub struct Request {
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_name = "D")]
    pub truncate: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Partition combinatorics.
    #[command(subcommand)]
    Partition(PartitionCmd),
    /// Nilpotent orbit invariants.
    #[command(subcommand)]
    Orbit(OrbitCmd),
    /// Weyl group elements.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Kazhdan–Lusztig polynomials and decompositions.
    #[command(subcommand)]
    Kl(KlCmd),
    /// Left, right and two-sided cells.
    #[command(subcommand)]
    Cells(CellsCmd),
    /// Formal characters.
    #[command(subcommand)]
    Char(CharCmd),
    /// Scale factors, multiplicities and dimension reports.
    #[command(subcommand)]
    Goldie(GoldieCmd),
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Subcommand, Debug)]
pub enum PartitionCmd {
    Transpose { partition: String },
    /// Largest partition of the family below the input.
    Collapse { family: String, partition: String },
    /// Dominance relation between two partitions of the same size.
    Dominance { p: String, q: String },
    /// Whether `TYPE:PARTITION` is special.
    Special { label: String },
}

#[derive(Subcommand, Debug)]
pub enum OrbitCmd {
    Dim {
        label: String,
    },
    /// Induce from a Levi, zero on the gl blocks.
    Induce {
        #[arg(value_name = "TYPE")]
        ty: String,
        /// Blocks and residual rank, e.g. `2,1|1`.
        levi: String,
        /// Orbit on the residual factor (default zero).
        seed: Option<String>,
    },
    Dual {
        label: String,
    },
    /// Whether the label has the weakly rigid partition pattern.
    Rigid {
        label: String,
    },
    ComponentGroup {
        label: String,
        #[arg(long, default_value = "adjoint")]
        form: String,
    },
    /// Half the dominant neutral element of the dual orbit.
    Abv {
        label: String,
    },
    Even {
        label: String,
    },
    /// Full record: dimension, special, even, dual, component groups.
    Info {
        label: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum WeylCmd {
    Length {
        #[arg(value_name = "TYPE")]
        ty: String,
        w: String,
    },
    /// Whether `x ≤ w` in the Bruhat order.
    Bruhat {
        #[arg(value_name = "TYPE")]
        ty: String,
        x: String,
        w: String,
    },
    /// Minimal length representatives of `W/W_J`; J as 1-based indices.
    Cosets {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(default_value = "")]
        j: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum KlCmd {
    Poly {
        #[arg(value_name = "TYPE")]
        ty: String,
        x: String,
        w: String,
    },
    Mu {
        #[arg(value_name = "TYPE")]
        ty: String,
        x: String,
        w: String,
    },
    /// `L_w` as a combination of Vermas.
    Inverse {
        #[arg(value_name = "TYPE")]
        ty: String,
        w: String,
    },
    /// `L_w` as a combination of parabolic Vermas; J as 1-based indices.
    Parabolic {
        #[arg(value_name = "TYPE")]
        ty: String,
        w: String,
        j: String,
    },
    /// Every nonzero `P_{x,w}`.
    Table {
        #[arg(value_name = "TYPE")]
        ty: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Kind {
    Left,
    Right,
    TwoSided,
}

#[derive(Subcommand, Debug)]
pub enum CellsCmd {
    Compute {
        #[arg(value_name = "TYPE")]
        ty: String,
        #[arg(long, value_enum, default_value = "left")]
        kind: Kind,
    },
    /// Insertion and recording tableaux of a permutation in one-line form.
    Rsk { permutation: String },
}

/// Block data shared by the character commands.
#[derive(Args, Debug)]
pub struct BlockArgs {
    #[arg(value_name = "TYPE")]
    pub ty: String,
    /// Levi blocks and residual rank, e.g. `2,1|1`.
    #[arg(long)]
    pub levi: String,
    /// Nilpotent in the Levi, e.g. `2;1|1,1` (default zero).
    #[arg(long)]
    pub orbit: Option<String>,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    #[arg(long, default_value_t = 1)]
    pub h0: u64,
    #[arg(long, default_value_t = 1)]
    pub abar0: u64,
    #[arg(long = "dimV0", default_value_t = 1)]
    pub dim_v0: u64,
}

#[derive(Subcommand, Debug)]
pub enum CharCmd {
    /// `dim · e^{mu0} / ∏ (1 − e^{den_i})`. Weights are letter expressions
    /// (`a − 2b`) or coordinate vectors.
    Verma {
        #[arg(long, allow_hyphen_values = true)]
        mu0: String,
        #[arg(long, default_value_t = 1)]
        dim: i64,
        /// Comma separated list.
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        den: String,
        /// Defaults to all ones.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Take the denominator from the centralizer grading of this type.
        #[arg(long = "type", requires = "levi")]
        ty: Option<String>,
        #[arg(long)]
        levi: Option<String>,
        #[arg(long)]
        orbit: Option<String>,
    },
    /// Character of the image of a parabolic Verma.
    ParabolicImage {
        #[command(flatten)]
        block: BlockArgs,
        /// Highest weight; alternatively give `--w` and `--rho0`.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long)]
        w: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        rho0: Option<String>,
    },
    /// Character of the simple labelled by `w` in the block of `rho0`.
    Simple {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        rho0: Option<String>,
        #[command(flatten)]
        factors: FactorArgs,
    },
    /// Finite dimension of the simple labelled by `w`.
    Dim {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        rho0: Option<String>,
        #[command(flatten)]
        factors: FactorArgs,
    },
}

#[derive(Args, Debug)]
pub struct TripleArgs {
    #[arg(long, default_value_t = 1)]
    pub dx: u64,
    #[arg(long, default_value_t = 1)]
    pub dy: u64,
    /// Defaults to the least common multiple of `Ax` and `Ay`.
    #[arg(long = "Abar")]
    pub abar: Option<u64>,
    /// Defaults to `Ay`.
    #[arg(long = "Ax")]
    pub ax: Option<u64>,
    #[arg(long = "Ay", default_value_t = 1)]
    pub ay: u64,
    #[arg(long = "Axy", default_value_t = 1)]
    pub axy: u64,
    #[arg(long = "dimV", default_value_t = 1)]
    pub dim_v: u64,
}

#[derive(Subcommand, Debug)]
pub enum GoldieCmd {
    Scale {
        #[command(flatten)]
        triple: TripleArgs,
    },
    Mult {
        #[command(flatten)]
        triple: TripleArgs,
    },
    Premet {
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        prx: String,
        #[arg(long)]
        pry: String,
    },
    Report {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        w: String,
        #[arg(long, allow_hyphen_values = true)]
        rho0: Option<String>,
        #[command(flatten)]
        factors: FactorArgs,
        #[command(flatten)]
        triple: TripleArgs,
        #[arg(long)]
        premet: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Sweep {
    Collapse,
    Length,
    Bruhat,
    Kl,
    Parabolic,
    Cells,
    ComponentGroup,
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    Collapse {
        family: String,
        partition: String,
    },
    Length {
        #[arg(value_name = "TYPE")]
        ty: String,
        w: String,
    },
    Bruhat {
        #[arg(value_name = "TYPE")]
        ty: String,
        x: String,
        w: String,
    },
    Kl {
        #[arg(value_name = "TYPE")]
        ty: String,
        x: String,
        w: String,
    },
    Parabolic {
        #[arg(value_name = "TYPE")]
        ty: String,
        w: String,
        j: String,
    },
    Rsk {
        permutation: String,
    },
    /// PBW monomial counts by weight to the given depth.
    Pbw {
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        gens: String,
        #[arg(long, default_value_t = 10)]
        depth: i64,
    },
    ComponentGroup {
        label: String,
        #[arg(long, default_value = "adjoint")]
        form: String,
    },
    /// Exhaustive comparison against the primary implementation. The scope
    /// is a type for group sweeps and a size for collapse and components.
    Compare {
        #[arg(value_enum)]
        what: Sweep,
        scope: String,
    },
}
