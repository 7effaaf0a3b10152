mod commands;
mod explain;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rbx_core::{Document, Error, Field, Result};

use commands::Kind;
use report::Outcome;

/// Checks, searches and constructions for Rota-Baxter type operators on
/// finite-dimensional algebras given by structure constants.
///
/// Exit status is 0 when the checked identity holds, 1 when it fails, and 2
/// on malformed input, exceeded capacity or an unsupported characteristic.
#[derive(Parser)]
#[command(name = "rbx", version)]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Instance file in the rbx JSON format.
    file: PathBuf,
}

#[derive(Args)]
struct Operator {
    /// Instance file in the rbx JSON format.
    file: PathBuf,

    /// Name of the operator under "maps".
    #[arg(long, visible_alias = "pi", default_value = "pi")]
    map: String,
}

#[derive(Args)]
struct Twisted {
    /// Instance file in the rbx JSON format.
    file: PathBuf,

    /// Name of the operator under "maps".
    #[arg(long, visible_alias = "pi", default_value = "pi")]
    map: String,

    /// Name of the 2-cocycle under "cochains"; omit for φ = 0.
    #[arg(long, visible_alias = "phi")]
    cocycle: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the structure constants are associative.
    CheckAssoc(Input),
    /// Check the bimodule axioms for the declared actions.
    CheckBimodule(Input),
    /// Check the generalized Rota-Baxter identity for π: M → A.
    CheckGrb(Operator),
    /// Check the twisted Rota-Baxter identity for π and a 2-cocycle.
    CheckTrb {
        #[command(flatten)]
        op: Operator,
        /// Name of the 2-cocycle under "cochains".
        #[arg(long, visible_alias = "phi", default_value = "phi")]
        cocycle: String,
    },
    /// Check the Reynolds identity for an endomorphism of A.
    CheckReynolds(Operator),
    /// Check the associative Nijenhuis identity for an endomorphism of A.
    CheckNijenhuis(Operator),
    /// Check the dendriform axioms of the "dendriform" section.
    CheckDendriform(Input),
    /// Check the NS-algebra axioms of the "ns" section.
    CheckNs(Input),
    /// Compare the exponential flow with its three-term truncation.
    CheckAddexp(Twisted),
    /// Evaluate the structure equation of π (and φ) on A ⊕ M.
    Residual(Twisted),
    /// Gerstenhaber bracket of two multilinear maps on A ⊕ M.
    Bracket {
        #[command(flatten)]
        input: Input,
        /// First map, under "cochains" with inputs and output "B".
        #[arg(long)]
        f: String,
        /// Second map.
        #[arg(long)]
        g: String,
        /// Compute the derived bracket [[mu, f], g] instead.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Print the terms of exp(X_π)(μ̂ + φ̂).
    Flow {
        #[command(flatten)]
        op: Twisted,
        /// Write the flow terms as an instance file.
        #[arg(long, value_name = "PATH")]
        emit_products: Option<PathBuf>,
    },
    /// Build the dendriform algebra of a generalized Rota-Baxter operator.
    DeriveDendriform {
        #[command(flatten)]
        op: Operator,
        /// Write the result here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the NS-algebra of a twisted Rota-Baxter or Nijenhuis operator.
    DeriveNs {
        #[command(flatten)]
        op: Twisted,
        /// Treat the map as a Nijenhuis operator on A.
        #[arg(long)]
        nijenhuis: bool,
        /// Write the result here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate every operator of the given kind over a prime field.
    Search {
        #[command(flatten)]
        input: Input,
        /// Field to search over, e.g. F2; defaults to the file's field.
        #[arg(long)]
        field: Option<Field>,
        #[arg(long, value_enum)]
        kind: Kind,
        /// 2-cocycle for --kind trb.
        #[arg(long, visible_alias = "phi")]
        cocycle: Option<String>,
        /// Maximum number of candidates [default: RBX_BUDGET or 1048576].
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Evaluate the associative Yang-Baxter equation for r ∈ A⊗A.
    Aybe {
        #[command(flatten)]
        input: Input,
        /// Name of the tensor under "tensors".
        #[arg(long, default_value = "r")]
        tensor: String,
    },
    /// Named instances.
    #[command(subcommand)]
    Catalog(Catalog),
    /// Describe what a verb checks.
    Explain { verb: String },
}

#[derive(Subcommand)]
enum Catalog {
    /// List the catalog.
    List,
    /// Write an entry as an instance file.
    Emit {
        name: String,
        #[arg(long, default_value = "Q")]
        field: Field,
        /// Truncation degree for truncated entries.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the designated checks of an entry.
    Verify {
        name: String,
        #[arg(long, default_value = "Q")]
        field: Field,
        /// Truncation degree for truncated entries.
        #[arg(long)]
        degree: Option<u32>,
        /// Window bound for the Weyl checks.
        #[arg(long)]
        window: Option<u32>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::CheckAssoc(_) => "check-assoc",
            Command::CheckBimodule(_) => "check-bimodule",
            Command::CheckGrb(_) => "check-grb",
            Command::CheckTrb { .. } => "check-trb",
            Command::CheckReynolds(_) => "check-reynolds",
            Command::CheckNijenhuis(_) => "check-nijenhuis",
            Command::CheckDendriform(_) => "check-dendriform",
            Command::CheckNs(_) => "check-ns",
            Command::CheckAddexp(_) => "check-addexp",
            Command::Residual(_) => "residual",
            Command::Bracket { .. } => "bracket",
            Command::Flow { .. } => "flow",
            Command::DeriveDendriform { .. } => "derive-dendriform",
            Command::DeriveNs { .. } => "derive-ns",
            Command::Search { .. } => "search",
            Command::Aybe { .. } => "aybe",
            Command::Catalog(_) => "catalog",
            Command::Explain { .. } => "explain",
        }
    }

    fn file(&self) -> Option<&Path> {
        let path = match self {
            Command::CheckAssoc(i) | Command::CheckBimodule(i) | Command::CheckDendriform(i) | Command::CheckNs(i) => {
                &i.file
            }
            Command::CheckGrb(o) | Command::CheckReynolds(o) | Command::CheckNijenhuis(o) => &o.file,
            Command::CheckTrb { op, .. } | Command::DeriveDendriform { op, .. } => &op.file,
            Command::CheckAddexp(t) | Command::Residual(t) => &t.file,
            Command::Flow { op, .. } | Command::DeriveNs { op, .. } => &op.file,
            Command::Bracket { input, .. } | Command::Search { input, .. } | Command::Aybe { input, .. } => &input.file,
            Command::Catalog(_) | Command::Explain { .. } => return None,
        };
        Some(path)
    }
}

fn load(path: &Path, field: Option<Field>) -> (Result<Document>, String) {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => return (Err(Error::Input(format!("cannot read {}: {e}", path.display()))), report::digest(b"")),
    };
    let parsed = std::str::from_utf8(&bytes)
        .map_err(|e| Error::Input(format!("{} is not UTF-8: {e}", path.display())))
        .and_then(Document::from_json)
        .map(|mut doc| {
            if let Some(f) = field {
                doc.field = f.into();
            }
            doc
        });
    let digest = match parsed.as_ref().map(Document::canonical) {
        Ok(Ok(canon)) => report::digest(canon.to_json().as_bytes()),
        _ => report::digest(&bytes),
    };
    (parsed, digest)
}

fn run(command: &Command, doc: Option<&Document>) -> Result<Outcome> {
    let doc = || doc.ok_or_else(|| Error::Input("no instance file".into()));
    match command {
        Command::CheckAssoc(_) => commands::check_assoc(doc()?),
        Command::CheckBimodule(_) => commands::check_bimodule(doc()?),
        Command::CheckGrb(o) => commands::check_grb(doc()?, &o.map),
        Command::CheckTrb { op, cocycle } => commands::check_trb(doc()?, &op.map, cocycle),
        Command::CheckReynolds(o) => commands::check_reynolds(doc()?, &o.map),
        Command::CheckNijenhuis(o) => commands::check_nijenhuis(doc()?, &o.map),
        Command::CheckDendriform(_) => commands::check_dendriform_cmd(doc()?),
        Command::CheckNs(_) => commands::check_ns_cmd(doc()?),
        Command::CheckAddexp(t) => commands::check_addexp(doc()?, &t.map, t.cocycle.as_deref()),
        Command::Residual(t) => commands::residual(doc()?, &t.map, t.cocycle.as_deref()),
        Command::Bracket { f, g, mu, .. } => commands::bracket(doc()?, f, g, mu.as_deref()),
        Command::Flow { op, emit_products } => {
            commands::flow(doc()?, &op.map, op.cocycle.as_deref(), emit_products.as_deref())
        }
        Command::DeriveDendriform { op, output } => commands::derive_dendriform(doc()?, &op.map, output.as_deref()),
        Command::DeriveNs { op, nijenhuis, output } => {
            commands::derive_ns(doc()?, &op.map, op.cocycle.as_deref(), *nijenhuis, output.as_deref())
        }
        Command::Search { kind, cocycle, budget, .. } => {
            commands::search(doc()?, *kind, cocycle.as_deref(), commands::budget(*budget)?)
        }
        Command::Aybe { tensor, .. } => commands::aybe(doc()?, tensor),
        Command::Catalog(Catalog::List) => Ok(commands::catalog_list()),
        Command::Catalog(Catalog::Emit { name, field, degree, output }) => {
            commands::catalog_emit(name, *field, *degree, output.as_deref())
        }
        Command::Catalog(Catalog::Verify { name, field, degree, window }) => {
            commands::catalog_verify(name, *field, *degree, *window)
        }
        Command::Explain { verb } => match explain::explain(verb) {
            Some(text) => Ok(Outcome::passed().line(text)),
            None => Err(Error::Input(format!("unknown verb {verb:?}"))),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let name = cli.command.name();
    let field = match &cli.command {
        Command::Search { field, .. } => *field,
        _ => None,
    };
    let (result, digest) = match cli.command.file() {
        Some(path) => match load(path, field) {
            (Ok(doc), digest) => (run(&cli.command, Some(&doc)), digest),
            (Err(e), digest) => (Err(e), digest),
        },
        None => {
            let args: Vec<String> = std::env::args().skip(1).filter(|a| a != "--json").collect();
            (run(&cli.command, None), report::digest(args.join("\0").as_bytes()))
        }
    };
    let code = report::exit_code(&result);
    let text = if cli.json {
        let report = report::build(name, &result, digest, start.elapsed());
        serde_json::to_string_pretty(&report).expect("reports serialize") + "\n"
    } else {
        if let Err(e) = &result {
            eprintln!("rbx {name}: {e}");
        }
        render_text(name, &result)
    };
    // a closed pipe (`rbx ... | head`) is not an error of the command
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(code as u8)
}

fn render_text(name: &str, result: &Result<Outcome>) -> String {
    let Ok(o) = result else {
        return String::new();
    };
    if let Some(doc) = &o.document {
        return doc.to_json();
    }
    let mut out = String::new();
    if !matches!(name, "catalog" | "explain") {
        out += &format!("{name}: {}\n", if o.pass { "PASS" } else { "FAIL" });
    }
    for w in &o.failures {
        out += &format!("  {w}\n");
    }
    for line in &o.lines {
        out += &format!("{line}\n");
    }
    out
}
