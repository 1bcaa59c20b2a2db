use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

/// Enumerations, word-equation solvers, order predicates, and class-doubling
/// surveys for words over {L, M, R}.
#[derive(Parser, Debug)]
#[command(name = "lmr", version, about)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the report to a file instead of stdout
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Enumeration length bound (config key max_n, default 14)
    #[arg(long, global = true, value_name = "N")]
    pub max_n: Option<usize>,

    /// Brute-force length bound (config key oracle_bound, default 12)
    #[arg(long, global = true, value_name = "N")]
    pub oracle_bound: Option<usize>,

    /// Worker threads for the enumeration scans (config key workers)
    #[arg(long, global = true, value_name = "K")]
    pub workers: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List necklace classes or lexical words of one length
    Enumerate {
        /// Word length
        #[arg(long)]
        n: usize,
        /// Which set to list
        #[arg(long, value_enum)]
        set: SetKind,
        /// Order variant for --set lexical
        #[arg(long, value_enum, default_value_t = OrderArg::Cbar)]
        order: OrderArg,
    },
    /// Solve a word equation symbolically, with optional expansion and
    /// oracle cross-check
    Solve {
        #[command(subcommand)]
        equation: SolveEquation,
    },
    /// Evaluate predicates on one word (exponent shorthand accepted: R2M = RRM)
    Check {
        /// The word, uppercase L/M/R with optional digit exponents
        word: String,
        /// Is the word primitive?
        #[arg(long)]
        primitive: bool,
        /// Is the word the greatest member of its class?
        #[arg(long)]
        greatest: bool,
        /// Is the word lexical in the given order variant?
        #[arg(long, value_enum, value_name = "ORDER")]
        lexical: Option<OrderArg>,
        /// Does the word decompose as alternating blocks plus a tail?
        #[arg(long)]
        broken_alternating: bool,
    },
    /// Class-doubling map: image table, collision reports, or survey
    Psi {
        /// Class word length (at least 2)
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        mode: PsiMode,
    },
}

#[derive(Subcommand, Debug)]
pub enum SolveEquation {
    /// ZW = W̄Z̄ at |ZW| = m, |W| = r
    Zw {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        /// Materialize the full solution set
        #[arg(long)]
        expand: bool,
        /// Compare the closed form against the exhaustive scan
        #[arg(long)]
        check_oracle: bool,
    },
    /// XY = ȲX at |X| = l, |Y| = m
    XyYx {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: usize,
        /// Materialize the full solution set
        #[arg(long)]
        expand: bool,
        /// Compare the closed form against the exhaustive scan
        #[arg(long)]
        check_oracle: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SetKind {
    /// Complement-closed primitive necklace classes M(n)
    M,
    /// Primitive self-complementary necklaces U(n)
    U,
    /// Lexical words L_n(D)
    Lexical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Cbar,
    C,
}

impl OrderArg {
    pub fn variant(self) -> lmr_core::OrderVariant {
        match self {
            OrderArg::Cbar => lmr_core::OrderVariant::CBar,
            OrderArg::C => lmr_core::OrderVariant::C,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            OrderArg::Cbar => "cbar",
            OrderArg::C => "c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PsiMode {
    /// One row per class: representative and doubled image
    Table,
    /// All pairs of distinct classes with conjugate doubled words
    Collisions,
    /// Aggregate statistics against U(2n)
    Survey,
}
