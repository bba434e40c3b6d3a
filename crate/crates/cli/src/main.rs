use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ado_core::embed::DEFAULT_MAX_SCALAR;
use ado_core::json;
use ado_core::nilrep::{birkhoff_bounds, burde_bound, monomial_count, nilpotent_faithful_rep, within_burde_bound};
use ado_core::pbw::TruncatedUEA;
use ado_core::{ado_representation, catalog, embed_splittable, verify_certificate, verify_representation, AdoOptions, Error, LieLattice};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ado", version, about = "Faithful integral representations of Lie lattices")]
struct Cli {
    /// Indent JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check antisymmetry, the Jacobi identity and integrality.
    Validate { file: PathBuf },
    /// Center, radicals and the lower central and derived series.
    Radicals { file: PathBuf },
    /// Faithful representation of a nilpotent lattice on its truncated enveloping algebra.
    Nilrep { file: PathBuf },
    /// Embed the lattice into a splittable extension and verify the certificate.
    Embed {
        file: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_SCALAR)]
        max_scalar_search: u64,
    },
    /// Build and verify a faithful representation.
    Ado {
        file: PathBuf,
        /// Skip the nilpotent and semisimple shortcuts.
        #[arg(long)]
        strict_theorem_path: bool,
        /// Include the embedding certificate when one was built.
        #[arg(long)]
        emit_certificate: bool,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_MAX_SCALAR)]
        max_scalar_search: u64,
    },
    /// Check a representation against a lattice.
    Verify { lattice: PathBuf, representation: PathBuf },
    /// List the built-in lattices, or print one as JSON.
    Catalog { name: Option<String> },
}

enum Failure {
    /// Mathematical failure, with the output that witnesses it.
    Rejected(Value),
    Math(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Format(m) => Failure::Input(m),
            other => Failure::Math(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

fn load_lattice(path: &Path) -> Result<LieLattice, Failure> {
    Ok(json::lattice_from_str(&read_input(path)?)?)
}

fn load_valid(path: &Path) -> Result<LieLattice, Failure> {
    let l = load_lattice(path)?;
    let report = l.validate();
    if !report.is_valid() {
        return Err(Failure::Rejected(json!({ "validation": json::validation_to_value(&report) })));
    }
    Ok(l)
}

fn run(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Validate { file } => {
            let l = load_lattice(&file)?;
            let report = l.validate();
            let out = json::validation_to_value(&report);
            if report.is_valid() {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Radicals { file } => Ok(json::radicals_to_value(&load_valid(&file)?)?),
        Command::Nilrep { file } => {
            let l = load_valid(&file)?;
            let rep = nilpotent_faithful_rep(&l)?;
            let t = TruncatedUEA::at_class(&l)?;
            let r = l.rank();
            let count = monomial_count(&l)?;
            let (b1, b2) = birkhoff_bounds(r, t.cutoff());
            Ok(json!({
                "representation": json::rep_to_value(&rep),
                "monomials": (0..t.dim()).map(|i| t.monomial_label(i)).collect::<Vec<_>>(),
                "monomial_count": count,
                "bound": json::q_to_string(&burde_bound(r)),
                "within_bound": within_burde_bound(count, r),
                "birkhoff": [b1.to_string(), b2.to_string()],
            }))
        }
        Command::Embed { file, max_scalar_search } => {
            let l = load_valid(&file)?;
            let cert = embed_splittable(&l, max_scalar_search)?;
            let report = verify_certificate(&cert);
            let out = json!({
                "certificate": json::certificate_to_value(&cert),
                "verification": json::certificate_report_to_value(&report),
            });
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Ado { file, strict_theorem_path, emit_certificate, max_scalar_search } => {
            let l = load_valid(&file)?;
            let opts = AdoOptions { strict: strict_theorem_path, max_scalar: max_scalar_search };
            let (rep, report, cert) = ado_representation(&l, opts)?;
            let mut out = json!({
                "representation": json::rep_to_value(&rep),
                "report": json::ado_report_to_value(&report),
            });
            if emit_certificate {
                out["certificate"] = cert.as_ref().map(json::certificate_to_value).unwrap_or(Value::Null);
            }
            Ok(out)
        }
        Command::Verify { lattice, representation } => {
            let l = load_valid(&lattice)?;
            let rep = json::rep_from_str(&read_input(&representation)?)?;
            if rep.lattice_rank() != l.rank() {
                return Err(Failure::Input(format!(
                    "representation has {} matrices for a lattice of rank {}",
                    rep.lattice_rank(),
                    l.rank()
                )));
            }
            let report = verify_representation(&l, &rep);
            let out = json::representation_report_to_value(&report);
            if report.all_passed() {
                Ok(out)
            } else {
                Err(Failure::Rejected(out))
            }
        }
        Command::Catalog { name: None } => Ok(json!(catalog::NAMES)),
        Command::Catalog { name: Some(n) } => match catalog::lookup(&n) {
            Some(l) => Ok(json::lattice_to_value(&l)),
            None => Err(Failure::Input(format!("unknown catalog entry {n:?}"))),
        },
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("ADO_LOG", "warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(v) => {
            println!("{}", json::to_string(&v, cli.pretty));
            ExitCode::SUCCESS
        }
        Err(Failure::Rejected(v)) => {
            println!("{}", json::to_string(&v, cli.pretty));
            ExitCode::from(1)
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
