//! `infhecke` — command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

mod report;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use infhecke::groups::{Group, GroupParams, DEFAULT_MAX_ORDER};

/// Environment variable naming a directory where constructed groups are cached.
pub const CACHE_ENV: &str = "INFHECKE_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(
    name = "infhecke",
    version,
    about = "Infinitesimal Hecke algebras of the reflection groups G(de,e,r)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Refuse groups larger than this.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER, global = true)]
    max_order: u64,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Args, Debug, Clone, Copy)]
struct GroupArgs {
    d: u32,
    e: u32,
    r: usize,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Multipartition orbits, their component counts and dimensions.
    Irreps(GroupArgs),
    /// Classification records and the predicted dimension of 𝓗′.
    Classify(GroupArgs),
    /// Bracket-closure dimensions of ρ(𝓗) and ρ(𝓗′).
    LieDim {
        #[command(flatten)]
        group: GroupArgs,
        /// Only the irreducible with this label.
        #[arg(long)]
        rep: Option<String>,
        /// Reduce modulo this prime.
        #[arg(long)]
        mod_p: Option<u64>,
        /// Also run the exact closure when --mod-p is given.
        #[arg(long)]
        exact: bool,
    },
    /// Check every predicted dimension; exit 1 on any mismatch.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        /// Add the joint-closure and group-algebra oracles.
        #[arg(long)]
        oracle: bool,
    },
    /// Restriction multiplicities to G(de,e,r−1).
    Branch(GroupArgs),
    /// Invariant form of a Hecke-algebra model and its signatures on |q| = 1.
    Unitary {
        /// A model shipped with the binary.
        #[arg(
            long,
            value_enum,
            conflicts_with = "model",
            required_unless_present = "model"
        )]
        builtin: Option<Builtin>,
        /// JSON model file over ℚ(q).
        #[arg(long)]
        model: Option<PathBuf>,
        /// Number of sample points on x ∈ (0, π/2].
        #[arg(long)]
        scan: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Builtin {
    D4,
}

/// Failure classes, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

pub fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

impl GroupArgs {
    fn params(self) -> Result<GroupParams, Failure> {
        GroupParams::new(self.d, self.e, self.r).map_err(usage)
    }
}

pub fn build_group(params: GroupParams, max_order: u64) -> Result<Group, Failure> {
    match std::env::var_os(CACHE_ENV) {
        Some(dir) if !dir.is_empty() => {
            Group::construct_cached(params, max_order, &PathBuf::from(dir))
        }
        _ => Group::construct_capped(params, max_order),
    }
    .map_err(usage)
}

fn configure_pool(jobs: Option<usize>) -> Result<(), Failure> {
    let Some(n) = jobs else { return Ok(()) };
    if n == 0 {
        return Err(usage("--jobs must be positive"));
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(usage)?;
    Ok(())
}

fn emit<T: serde::Serialize>(
    format: Format,
    value: &T,
    render: impl Fn(&T) -> String,
) -> Result<(), Failure> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value).map_err(usage)?),
        Format::Table => print!("{}", render(value)),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    configure_pool(cli.jobs)?;
    let (fmt, cap) = (cli.format, cli.max_order);
    match cli.verb {
        Verb::Irreps(g) => {
            let w = build_group(g.params()?, cap)?;
            emit(fmt, &report::irreps(&w)?, table::irreps)
        }
        Verb::Classify(g) => {
            let params = g.params()?;
            params.validate_for_classification().map_err(usage)?;
            let w = build_group(params, cap)?;
            let rep = infhecke::classify::classify(&w).map_err(usage)?;
            emit(fmt, &rep, table::classify)
        }
        Verb::LieDim {
            group,
            rep,
            mod_p,
            exact,
        } => {
            let w = build_group(group.params()?, cap)?;
            emit(
                fmt,
                &report::lie_dim(&w, rep.as_deref(), mod_p, exact)?,
                table::lie_dim,
            )
        }
        Verb::Verify { group, oracle } => {
            let params = group.params()?;
            params.validate_for_classification().map_err(usage)?;
            let w = build_group(params, cap)?;
            let opts = infhecke::lie::verify::VerifyOptions {
                oracle,
                ..Default::default()
            };
            let rep = infhecke::lie::verify::verify(&w, &opts).map_err(usage)?;
            emit(fmt, &rep, table::verify)?;
            if rep.pass {
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "{}: some verdicts failed",
                    rep.group
                )))
            }
        }
        Verb::Branch(g) => {
            let params = g.params()?;
            emit(fmt, &report::branch(params, cap)?, table::branch)
        }
        Verb::Unitary {
            builtin,
            model,
            scan,
        } => {
            let m = match (builtin, model) {
                (Some(Builtin::D4), _) => infhecke::hecke::builtin_d4(),
                (None, Some(path)) => infhecke::hecke::load_model(&path).map_err(|e| match e {
                    infhecke::hecke::HeckeError::File(_)
                    | infhecke::hecke::HeckeError::Invalid(_) => usage(e),
                    other => Failure::Verification(other.to_string()),
                })?,
                (None, None) => return Err(usage("one of --builtin or --model is required")),
            };
            emit(fmt, &report::unitary(&m, scan)?, table::unitary)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) => eprintln!("error: {m}"),
                Failure::Verification(m) => eprintln!("verification failed: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
