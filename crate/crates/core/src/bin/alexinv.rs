use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use alexinv::exact::parse_rational_list;
use alexinv::exec::Execution;
use alexinv::laurent::{factor_display, TorsionPoint};
use alexinv::modules::Presentation;
use alexinv::pipeline::Scenario;
use alexinv::report::Report;
use alexinv::residue::{shift_norm, ResidueChoice, DEFAULT_BOUND};
use alexinv::{scenario, Error};

#[derive(Parser)]
#[command(name = "alexinv", version, about = "Alexander-type invariants of hypersurface complements")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleOp {
    Charpoly,
    Support,
    Fitting,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a scenario and check its algebra.
    Validate { scenario: String },
    /// Aomoto cohomology for explicit residues (no search).
    Aomoto {
        scenario: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Twisted cohomology at the local system with residue classes beta.
    Twisted {
        scenario: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Search for admissible residues representing beta.
    Admissible {
        scenario: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Scan all torsion points of a level by dim H^k.
    Charvar {
        scenario: String,
        #[arg(long)]
        level: u64,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Characteristic polynomial of the Milnor monodromy on H^m.
    Milnor {
        scenario: String,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u32,
    },
    /// Invariants of a finitely presented module.
    Module {
        #[arg(long)]
        presentation: String,
        #[arg(long, value_enum)]
        op: ModuleOp,
        #[arg(long, default_value_t = 0)]
        i: usize,
        #[arg(long)]
        level: Option<u64>,
    },
}

const EXIT_USAGE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Inconsistent(_) => EXIT_INCONSISTENT,
        Error::Inconclusive { .. } => EXIT_INCONCLUSIVE,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let exec = match configure_threads() {
        Ok(x) => x,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let argv: Vec<String> = std::env::args()
        .enumerate()
        .map(|(i, a)| if i == 0 { "alexinv".into() } else { a })
        .collect();
    match run(&cli.command, argv, exec) {
        Ok((report, code)) => {
            match cli.format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json_string()),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Honors `ALEXINV_THREADS`; `1` means a plain sequential loop.
fn configure_threads() -> Result<Execution, String> {
    let Ok(raw) = std::env::var("ALEXINV_THREADS") else {
        return Ok(Execution::default());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("ALEXINV_THREADS must be a positive integer, got `{raw}`"))?;
    if n == 1 {
        return Ok(Execution::Sequential);
    }
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())?;
    Ok(Execution::default())
}

fn read_input(arg: &str) -> alexinv::Result<Vec<u8>> {
    if Path::new(arg).exists() {
        return Ok(std::fs::read(arg)?);
    }
    scenario::source(arg).map(|s| s.as_bytes().to_vec()).ok_or_else(|| {
        Error::Io(std::io::Error::new(
            std::io::ErrorKind::NotFound,
            format!("`{arg}` is neither a file nor a bundled scenario"),
        ))
    })
}

fn load_scenario(arg: &str) -> alexinv::Result<(Scenario, Vec<u8>)> {
    let bytes = read_input(arg)?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Error::Precondition(format!("`{arg}` is not UTF-8")))?;
    let sc = Scenario::from_json_str(&text)?;
    Ok((sc, bytes))
}

fn strings(v: &[alexinv::exact::Rational]) -> Value {
    json!(v.iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

fn points(pts: &[TorsionPoint]) -> Value {
    json!(pts)
}

fn check_len(what: &str, got: usize, want: usize) -> alexinv::Result<()> {
    if got != want {
        return Err(Error::Dimension(format!("{what} has {got} entries, scenario has {want} parameters")));
    }
    Ok(())
}

fn residue_map(sc: &Scenario, alpha: &ResidueChoice) -> alexinv::Result<Value> {
    let rho = sc.residue_system.residues(alpha)?;
    let mut m = Map::new();
    for (row, r) in sc.residue_system.rows().iter().zip(rho) {
        m.insert(row.label.clone(), Value::String(r.to_string()));
    }
    Ok(Value::Object(m))
}

fn run(cmd: &Command, argv: Vec<String>, exec: Execution) -> alexinv::Result<(Report, u8)> {
    match cmd {
        Command::Validate { scenario } => {
            let bytes = read_input(scenario)?;
            let mut report = Report::new(argv, &bytes);
            let parsed = std::str::from_utf8(&bytes)
                .map_err(|_| Error::Precondition("input is not UTF-8".into()))
                .and_then(Scenario::from_json_str);
            let outcome = parsed.and_then(|sc| sc.validate().map(|_| sc));
            match outcome {
                Ok(sc) => {
                    report.push("scenario", sc.name.as_str());
                    report.push("valid", true);
                    report.push("betti", json!(sc.betti()));
                    Ok((report, 0))
                }
                Err(e) => {
                    report.push("valid", false);
                    report.push("error", e.to_string());
                    if let Error::AlgebraViolation { left, right, degree, .. } = &e {
                        report.push("violation", json!({"left": left, "right": right, "degree": degree}));
                    }
                    if let Error::Schema { pointer, .. } = &e {
                        report.push("pointer", pointer.as_str());
                    }
                    Ok((report, exit_code(&e)))
                }
            }
        }
        Command::Aomoto { scenario, alpha } => {
            let (sc, bytes) = load_scenario(scenario)?;
            sc.validate()?;
            let alpha = ResidueChoice(parse_rational_list(alpha)?);
            check_len("--alpha", alpha.0.len(), sc.nparams())?;
            let mut report = Report::new(argv, &bytes);
            let admissible = sc.residue_system.is_admissible(&alpha)?;
            report.push("scenario", sc.name.as_str());
            report.push("alpha", strings(&alpha.0));
            report.push("admissible", admissible);
            report.push("residues", residue_map(&sc, &alpha)?);
            report.push("omega", strings(&sc.one_form(&alpha)?.0));
            report.push("dims", json!(sc.aomoto_dims(&alpha)?));
            if !admissible {
                report.warn("residues are not admissible: dims need not equal twisted cohomology");
            }
            Ok((report, 0))
        }
        Command::Twisted { scenario, beta, bound } => {
            let (sc, bytes) = load_scenario(scenario)?;
            sc.validate()?;
            let beta = parse_rational_list(beta)?;
            check_len("--beta", beta.len(), sc.nparams())?;
            let mut report = Report::new(argv, &bytes);
            report.push("scenario", sc.name.as_str());
            report.push("beta", strings(&beta));
            report.push("bound", sc.effective_bound(*bound));
            match sc.twisted_cohomology(&beta, *bound) {
                Ok(t) => {
                    report.push("alpha", strings(&t.alpha.0));
                    report.push("shift", shift_norm(&beta, &t.alpha));
                    report.push("dims", json!(t.dims));
                    Ok((report, 0))
                }
                Err(e @ Error::Inconclusive { .. }) => {
                    report.push("dims", Value::Null);
                    report.warn(e.to_string());
                    Ok((report, EXIT_INCONCLUSIVE))
                }
                Err(e) => Err(e),
            }
        }
        Command::Admissible { scenario, beta, bound } => {
            let (sc, bytes) = load_scenario(scenario)?;
            let beta = parse_rational_list(beta)?;
            check_len("--beta", beta.len(), sc.nparams())?;
            let bound = sc.effective_bound(*bound);
            let mut report = Report::new(argv, &bytes);
            report.push("scenario", sc.name.as_str());
            report.push("beta", strings(&beta));
            report.push("bound", bound);
            match sc.residue_system.admissible_search(&beta, bound)? {
                Some(alpha) => {
                    report.push("found", true);
                    report.push("alpha", strings(&alpha.0));
                    report.push("shift", shift_norm(&beta, &alpha));
                    report.push("residues", residue_map(&sc, &alpha)?);
                    Ok((report, 0))
                }
                None => {
                    report.push("found", false);
                    report.warn(format!("no admissible residues within shift bound {bound} (inconclusive)"));
                    Ok((report, EXIT_INCONCLUSIVE))
                }
            }
        }
        Command::Charvar { scenario, level, degree, bound } => {
            let (sc, bytes) = load_scenario(scenario)?;
            sc.validate()?;
            let scan = sc.charvar_scan_with(*level, *degree, *bound, exec)?;
            let mut report = Report::new(argv, &bytes);
            report.push("scenario", sc.name.as_str());
            report.push("level", *level);
            report.push("degree", *degree);
            report.push("bound", sc.effective_bound(*bound));
            report.push("points", scan.total());
            let mut buckets = Map::new();
            for (dim, pts) in &scan.buckets {
                buckets.insert(dim.to_string(), json!({"count": pts.len(), "points": points(pts)}));
            }
            report.push("buckets", Value::Object(buckets));
            let max = scan.buckets.keys().next_back().copied().unwrap_or(0);
            let mut at_least = Map::new();
            for i in 1..=max {
                at_least.insert(i.to_string(), json!(scan.at_least(i).len()));
            }
            report.push("at_least", Value::Object(at_least));
            report.push("inconclusive", points(&scan.inconclusive));
            for p in &scan.inconclusive {
                report.warn(format!("inconclusive point {p}: no admissible residues within bound"));
            }
            let code = if scan.inconclusive.is_empty() { 0 } else { EXIT_INCONCLUSIVE };
            Ok((report, code))
        }
        Command::Milnor { scenario, m, bound } => {
            let (sc, bytes) = load_scenario(scenario)?;
            sc.validate()?;
            let mut report = Report::new(argv, &bytes);
            report.push("scenario", sc.name.as_str());
            report.push("m", *m);
            report.push("order", sc.milnor_order());
            match sc.milnor_charpoly_with(*m, *bound, exec) {
                Ok(p) => {
                    report.push("multiplicities", json!(p.multiplicities));
                    report.push("degree", p.degree());
                    report.push("polynomial", p.to_string());
                    Ok((report, 0))
                }
                Err(e @ Error::Inconclusive { .. }) => {
                    report.push("polynomial", Value::Null);
                    report.warn(e.to_string());
                    Ok((report, EXIT_INCONCLUSIVE))
                }
                Err(e) => Err(e),
            }
        }
        Command::Module { presentation, op, i, level } => {
            let bytes = std::fs::read(presentation)?;
            let text = String::from_utf8(bytes.clone())
                .map_err(|_| Error::Precondition("presentation is not UTF-8".into()))?;
            let p = Presentation::from_json_str(&text)?;
            let mut report = Report::new(argv, &bytes);
            report.push("nvars", p.nvars());
            report.push("generators", p.generators());
            report.push("relations", p.relations());
            let need_level = || {
                level.ok_or_else(|| Error::Precondition("--level is required for this operation".into()))
            };
            match op {
                ModuleOp::Charpoly => {
                    report.push("op", "charpoly");
                    report.push("i", *i);
                    report.push("polynomial", factor_display(&p.char_poly(*i)));
                }
                ModuleOp::Support => {
                    let n = need_level()?;
                    let pts = p.support_scan_with(n, exec)?;
                    report.push("op", "support");
                    report.push("level", n);
                    report.push("count", pts.len());
                    report.push("points", points(&pts));
                }
                ModuleOp::Fitting => {
                    let n = need_level()?;
                    let pts = p.fitting_variety_scan_with(*i, n, exec)?;
                    report.push("op", "fitting");
                    report.push("i", *i);
                    report.push("level", n);
                    report.push("count", pts.len());
                    report.push("points", points(&pts));
                }
            }
            Ok((report, 0))
        }
    }
}

