use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use bci_workbench::fenyves::identity_catalog;
use bci_workbench::holomorph::build_holomorph;
use bci_workbench::morphisms::{
    automorphism_group, boolean_automorphism_subgroups, AutomorphismGroup, Bijection,
};
use bci_workbench::report::{
    catalog, check, classify, enumeration_summary, holomorph_report, ReportBody, ReportDocument,
};
use bci_workbench::search::{
    enumerate_bci, EnumerationOptions, Requirement, MAX_ENUMERATION_ORDER,
};
use bci_workbench::sweep::corpus_sweep;
use bci_workbench::tablefile::{export_corpus, print_holomorph, read_table_file};
use bci_workbench::{Error, FiniteAlgebra, MAX_ORDER};

/// Largest order accepted without `--allow-slow`.
const DEFAULT_ORDER_CAP: usize = 4;

const OK: u8 = 0;
const FALSE: u8 = 1;
const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "bciwb", version, about = "Finite BCI-algebra workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a table file is a BCI-algebra, with both checkers.
    Check { path: PathBuf },
    /// Classify a BCI-algebra: flags, Fenyves profile, automorphisms.
    Classify { path: PathBuf },
    /// Build holomorphs over Boolean groups of automorphisms.
    Holomorph {
        path: PathBuf,
        /// `trivial`, `all`, or a list of involutions such as
        /// `[swap(1,2)]` or `[0 2 1; 0 1 2]`.
        #[arg(long, default_value = "all")]
        subgroups: String,
        /// Directory to write each holomorph table into.
        #[arg(long)]
        emit_table: Option<PathBuf>,
    },
    /// Enumerate BCI-algebras of one order.
    Enumerate {
        order: usize,
        /// Export table files and a manifest into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep isomorphic copies.
        #[arg(long)]
        labelled: bool,
        #[arg(long = "require", value_enum)]
        require: Vec<RequireFlag>,
        /// Keep only algebras satisfying these identities (1..=60).
        #[arg(long = "fenyves")]
        fenyves: Vec<usize>,
        #[arg(long)]
        allow_slow: bool,
        /// Abort after this many seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
    },
    /// Run every theorem row over the corpus up to an order.
    VerifyTheorems {
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        order_max: usize,
        #[arg(long)]
        allow_slow: bool,
    },
    /// Print the sixty Bol-Moufang identities.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RequireFlag {
    Bck,
    PSemisimple,
    Associative,
    NonAssociative,
}

impl From<RequireFlag> for Requirement {
    fn from(r: RequireFlag) -> Self {
        match r {
            RequireFlag::Bck => Requirement::Bck,
            RequireFlag::PSemisimple => Requirement::PSemisimple,
            RequireFlag::Associative => Requirement::Associative,
            RequireFlag::NonAssociative => Requirement::NonAssociative,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotBci => FALSE,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<u8, Failure>;

// A closed pipe (`bciwb catalog | head`) is not an error worth reporting.
fn out(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn emit(body: ReportBody) {
    out(&ReportDocument::new(body).to_json());
}

fn load(path: &Path) -> Result<FiniteAlgebra, Failure> {
    read_table_file(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Classification and holomorphs search automorphisms exhaustively.
fn load_small(path: &Path) -> Result<FiniteAlgebra, Failure> {
    let a = load(path)?;
    if a.order() > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: a.order(),
            max: MAX_ORDER,
        }
        .into());
    }
    Ok(a)
}

fn gate(order: usize, allow_slow: bool) -> Result<(), Failure> {
    if order > MAX_ENUMERATION_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ENUMERATION_ORDER,
        }
        .into());
    }
    if order > DEFAULT_ORDER_CAP && !allow_slow {
        return Err(Failure::usage(format!(
            "order {order} is above {DEFAULT_ORDER_CAP}; pass --allow-slow"
        )));
    }
    Ok(())
}

fn cmd_check(path: &Path) -> Outcome {
    let a = load(path)?;
    let r = check(&a);
    let code = if !r.checkers_agree {
        INTERNAL
    } else if r.bci {
        OK
    } else {
        FALSE
    };
    emit(ReportBody::Check(r));
    Ok(code)
}

fn cmd_classify(path: &Path) -> Outcome {
    let a = load_small(path)?;
    emit(ReportBody::Classification(classify(&a)?));
    Ok(OK)
}

/// Parses `[swap(1,2); 0 2 1]`-style involution lists.
fn parse_involutions(spec: &str, n: usize) -> Result<Vec<Bijection>, Failure> {
    let inner = spec.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(inner);
    let mut out = Vec::new();
    for item in inner.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Failure::usage(format!("cannot parse involution `{item}`"));
        let b = if let Some(args) = item.strip_prefix("swap(").and_then(|s| s.strip_suffix(')')) {
            let ab: Vec<usize> = args
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            if ab.len() != 2 {
                return Err(bad());
            }
            Bijection::swap(n, ab[0], ab[1])?
        } else {
            let image: Vec<usize> = item
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            if image.len() != n {
                return Err(Failure::usage(format!(
                    "`{item}` is not a map on {n} elements"
                )));
            }
            Bijection::new(image)?
        };
        if !b.is_involution() {
            return Err(Failure::usage(format!("`{item}` is not an involution")));
        }
        out.push(b);
    }
    Ok(out)
}

fn select_subgroups(a: &FiniteAlgebra, selector: &str) -> Result<Vec<AutomorphismGroup>, Failure> {
    match selector.trim() {
        "trivial" => Ok(vec![AutomorphismGroup::trivial(a.order())]),
        "all" => Ok(boolean_automorphism_subgroups(&automorphism_group(a))),
        spec => {
            let gens = parse_involutions(spec, a.order())?;
            let g = AutomorphismGroup::generated_by(a, &gens)?;
            if !g.is_boolean() {
                return Err(Error::NotBooleanGroup.into());
            }
            Ok(vec![g])
        }
    }
}

fn cmd_holomorph(path: &Path, selector: &str, emit_table: Option<&Path>) -> Outcome {
    let a = load_small(path)?;
    let base = classify(&a)?;
    let groups = select_subgroups(&a, selector)?;
    let mut reports = Vec::with_capacity(groups.len());
    for (k, g) in groups.iter().enumerate() {
        if let Some(dir) = emit_table {
            fs::create_dir_all(dir).map_err(|e| Failure::usage(e.to_string()))?;
            let h = build_holomorph(&a, g)?;
            let file = dir.join(format!("holomorph-{k}.table"));
            fs::write(&file, print_holomorph(&h))
                .map_err(|e| Failure::usage(format!("{}: {e}", file.display())))?;
        }
        reports.push(holomorph_report(&a, g)?);
    }
    let consistent = reports.iter().all(|r| r.consistent);
    emit(ReportBody::Holomorph {
        base,
        subgroups: reports,
    });
    Ok(if consistent { OK } else { FALSE })
}

struct EnumerateArgs<'a> {
    order: usize,
    out: Option<&'a Path>,
    labelled: bool,
    require: &'a [RequireFlag],
    fenyves: &'a [usize],
    allow_slow: bool,
    budget_secs: Option<u64>,
}

fn cmd_enumerate(args: EnumerateArgs<'_>) -> Outcome {
    gate(args.order, args.allow_slow)?;
    let mut opts = EnumerationOptions::new(args.order);
    opts.up_to_isomorphism = !args.labelled;
    opts.allow_slow = args.allow_slow;
    opts.time_budget = args.budget_secs.map(Duration::from_secs);
    opts.require = args.require.iter().map(|&r| r.into()).collect();
    for &i in args.fenyves {
        if !(1..=60).contains(&i) {
            return Err(Error::FenyvesIndex(i).into());
        }
        opts.require.push(Requirement::Fenyves(i));
    }
    let algebras = enumerate_bci(&opts)?;
    if let Some(dir) = args.out {
        export_corpus(dir, &algebras)?;
    }
    emit(ReportBody::Enumeration(enumeration_summary(
        args.order,
        opts.up_to_isomorphism,
        &algebras,
    )));
    Ok(OK)
}

fn cmd_verify(order_max: usize, allow_slow: bool) -> Outcome {
    gate(order_max, allow_slow)?;
    let m = corpus_sweep(order_max, allow_slow)?;
    let pass = m.all_pass();
    for row in m.failed_rows() {
        eprintln!("{:?}: {} failure(s)", row.id, row.fail);
    }
    emit(ReportBody::TheoremMatrix(m));
    Ok(if pass { OK } else { FALSE })
}

fn cmd_catalog(json: bool) -> Outcome {
    if json {
        emit(ReportBody::Catalog {
            identities: catalog(),
        });
        return Ok(OK);
    }
    let mut text = String::new();
    for f in identity_catalog() {
        let class = if f.is_associative_class {
            "assoc"
        } else {
            "     "
        };
        let name = f.name.as_deref().unwrap_or("");
        let line = format!("F{:<3} {class}  {:<28} {name}", f.index, f.text);
        text.push_str(line.trim_end());
        text.push('\n');
    }
    out(&text);
    Ok(OK)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { path } => cmd_check(&path),
        Command::Classify { path } => cmd_classify(&path),
        Command::Holomorph {
            path,
            subgroups,
            emit_table,
        } => cmd_holomorph(&path, &subgroups, emit_table.as_deref()),
        Command::Enumerate {
            order,
            out,
            labelled,
            require,
            fenyves,
            allow_slow,
            budget_secs,
        } => cmd_enumerate(EnumerateArgs {
            order,
            out: out.as_deref(),
            labelled,
            require: &require,
            fenyves: &fenyves,
            allow_slow,
            budget_secs,
        }),
        Command::VerifyTheorems {
            order_max,
            allow_slow,
        } => cmd_verify(order_max, allow_slow),
        Command::Catalog { json } => cmd_catalog(json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("bciwb: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
