//! `legsurg`: invariants of contact (±1)-surgery diagrams from the command line.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use legsurg_core::families::{self, FamilyParams, TightStructureCensus};
use legsurg_core::invariants::{self, Computed, EulerClass, InvariantReport};
use legsurg_core::lens::{self, LensSpace};
use legsurg_core::{Error, SurgeryDiagram};
use num_bigint::{BigInt, Sign};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "legsurg", version, about = "Exact invariants of contact surgery diagrams")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// χ, σ, det M, q, c², d₃, H₁ and the Euler class of a diagram file.
    Invariants { file: PathBuf },
    /// tb and rot of the distinguished knot in the surgered manifold.
    Knot { file: PathBuf },
    /// Negative continued fraction of p/q.
    Contfrac { p: u64, q: u64 },
    /// Number of tight contact structures on L(p, q).
    TightCount { p: u64, q: u64 },
    /// Build an exceptional realization and report its invariants.
    Family(FamilyArgs),
    /// Tight structures on L(ns² − s + 1, s²) and their Euler classes.
    Census(CensusArgs),
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    n: i64,
    #[arg(long)]
    s: i64,
    #[arg(long)]
    k: i64,
    #[arg(long)]
    l: i64,
    #[arg(long = "pstab")]
    p_stab: i64,
    #[arg(long = "qstab")]
    q_stab: i64,
    /// Also write the diagram (with the knot L) to this file.
    #[arg(long)]
    emit: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(required_unless_present = "grid")]
    n: Option<i64>,
    #[arg(required_unless_present = "grid")]
    s: Option<i64>,
    /// Run every cell with 2 ≤ n ≤ NMAX, 1 ≤ s ≤ SMAX instead.
    #[arg(long, num_args = 2, value_names = ["NMAX", "SMAX"], conflicts_with_all = ["n", "s"])]
    grid: Option<Vec<i64>>,
}

/// A failure together with the exit code of its class.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::MissingKnot => 4,
            Error::Singular | Error::NonTorsion | Error::D3Precondition(_) => 3,
            _ => 2,
        };
        let message = match &e {
            Error::InvalidDiagram(vs) => {
                let mut s = String::from("invalid diagram:");
                for v in vs {
                    let _ = write!(s, "\n  {v}");
                }
                s
            }
            _ => e.to_string(),
        };
        Failure::new(code, message)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Invariants { file } => cmd_invariants(file, cli.format),
        Command::Knot { file } => cmd_knot(file, cli.format),
        Command::Contfrac { p, q } => cmd_contfrac(*p, *q, cli.format),
        Command::TightCount { p, q } => cmd_tight_count(*p, *q, cli.format),
        Command::Family(args) => cmd_family(args, cli.format),
        Command::Census(args) => cmd_census(args, cli.format),
    }
}

fn load(path: &Path) -> Result<SurgeryDiagram, Failure> {
    let d = SurgeryDiagram::load(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    d.check()?;
    Ok(d)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn computed<T: std::fmt::Display>(c: &Computed<T>) -> String {
    match c {
        Computed::Value(v) => v.to_string(),
        Computed::Absent(why) => format!("undefined ({why})"),
    }
}

fn render_group(orders: &[BigInt]) -> String {
    if orders.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> =
        orders.iter().map(|o| if o.sign() == Sign::NoSign { "Z".into() } else { format!("Z/{o}") }).collect();
    parts.join(" + ")
}

fn render_euler(e: &EulerClass) -> String {
    if let Some(c) = &e.cyclic {
        return format!("{} [{}] in Z/{}", c.residue, c.generator, c.order);
    }
    if e.smith.orders.is_empty() {
        return "0".into();
    }
    let coords: Vec<String> = e.smith.coords.iter().map(ToString::to_string).collect();
    format!("({}) in {}", coords.join(", "), render_group(&e.smith.orders))
}

fn render_report(r: &InvariantReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "chi = {}", r.chi);
    let _ = writeln!(s, "sigma = {}", r.sigma);
    let _ = writeln!(s, "det M = {}", r.det_m);
    let _ = writeln!(s, "q = {}", r.q_plus);
    let _ = writeln!(s, "c2 = {}", computed(&r.c_squared));
    let _ = writeln!(s, "d3 = {}", computed(&r.d3));
    let _ = writeln!(s, "H1 = {}", render_group(&r.h1));
    let _ = writeln!(s, "e = {}", render_euler(&r.euler_class));
    if let Some(k) = &r.knot {
        let _ = writeln!(s, "knot {}: tb = {}, rot = {}", k.id, computed(&k.tb), computed(&k.rot));
    }
    for w in &r.warnings {
        let _ = writeln!(s, "{w}");
    }
    s
}

/// Prints the report, then fails with exit code 3 if a field is undefined.
fn emit_report(r: &InvariantReport, format: Format) -> Outcome {
    match format {
        Format::Text => print!("{}", render_report(r)),
        Format::Json => print_json(r),
    }
    if r.has_absent() {
        return Err(Failure::new(3, "some invariants are undefined for this diagram"));
    }
    Ok(())
}

fn cmd_invariants(path: &Path, format: Format) -> Outcome {
    let d = load(path)?;
    emit_report(&invariants::report(&d)?, format)
}

#[derive(Serialize)]
struct KnotOutput {
    id: String,
    tb: String,
    rot: String,
}

fn knot_output(d: &SurgeryDiagram) -> Result<KnotOutput, Failure> {
    let id = d.knot.as_ref().ok_or(Error::MissingKnot)?.id.clone();
    let tb = invariants::tb_surgered(d)?.to_string();
    let rot = invariants::rot_surgered(d)?.to_string();
    Ok(KnotOutput { id, tb, rot })
}

fn cmd_knot(path: &Path, format: Format) -> Outcome {
    let k = knot_output(&load(path)?)?;
    match format {
        Format::Text => println!("tb = {}\nrot = {}", k.tb, k.rot),
        Format::Json => print_json(&k),
    }
    Ok(())
}

fn lens_space(p: u64, q: u64) -> Result<LensSpace, Failure> {
    Ok(LensSpace::new(p, q)?)
}

fn cmd_contfrac(p: u64, q: u64, format: Format) -> Outcome {
    let cf = lens::neg_contfrac(lens_space(p, q)?);
    match format {
        Format::Text => println!("{p}/{q} = {cf}"),
        Format::Json => print_json(&cf.terms),
    }
    Ok(())
}

fn cmd_tight_count(p: u64, q: u64, format: Format) -> Outcome {
    let l = lens_space(p, q)?;
    let count = lens::tight_count(l);
    match format {
        Format::Text => println!("{l}: {count}"),
        Format::Json => println!("{count}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct FamilyOutput {
    params: FamilyParams,
    lens: LensSpace,
    knot: KnotOutput,
    report: InvariantReport,
}

fn cmd_family(a: &FamilyArgs, format: Format) -> Outcome {
    let fp = FamilyParams::new(a.n, a.s, a.k, a.l, a.p_stab, a.q_stab)?;
    let d = families::exceptional_diagram(&fp)?;
    if let Some(path) = &a.emit {
        let json = d.to_json_pretty();
        std::fs::write(path, json + "\n").map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))?;
    }
    let lens = LensSpace::family(a.n as u64, a.s as u64)?;
    let out = FamilyOutput { params: fp, lens, knot: knot_output(&d)?, report: invariants::report(&d)? };
    match format {
        Format::Text => {
            println!("{} on {}", out.params, out.lens);
            println!("tb = {}\nrot = {}", out.knot.tb, out.knot.rot);
            print!("{}", render_report(&out.report));
        }
        Format::Json => print_json(&out),
    }
    Ok(())
}

fn render_census(c: &TightStructureCensus) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (n={}, s={}): {} rows, {} expected", c.lens, c.n, c.s, c.len(), c.expected_count);
    for e in &c.standard {
        let _ = writeln!(s, "  standard     tb={} rot={}\td3 = {}\te = {}", e.tb, e.rot, e.d3, e.residue);
    }
    for e in &c.exceptional {
        let p = &e.params;
        let _ = writeln!(
            s,
            "  exceptional  k={} l={} pStab={} qStab={}\td3 = {}\te = {}",
            p.k, p.l, p.p_stab, p.q_stab, e.d3, e.residue
        );
    }
    s
}

fn check_cell(n: i64, s: i64) -> Result<(), Failure> {
    if n < 2 || s < 1 {
        return Err(Failure::new(2, format!("census needs n >= 2 and s >= 1, got n={n} s={s}")));
    }
    Ok(())
}

fn cmd_census(a: &CensusArgs, format: Format) -> Outcome {
    let cells = match (&a.grid, a.n, a.s) {
        (Some(g), _, _) => {
            check_cell(g[0], g[1])?;
            families::census_grid(g[0], g[1])?
        }
        (None, Some(n), Some(s)) => {
            check_cell(n, s)?;
            vec![families::census(n, s)?]
        }
        _ => unreachable!("clap enforces n and s without --grid"),
    };
    match format {
        Format::Text => cells.iter().for_each(|c| print!("{}", render_census(c))),
        Format::Json => print_json(&cells),
    }
    let failed: Vec<String> =
        cells.iter().flat_map(|c| c.failures().into_iter().map(move |f| format!("{}: {f}", c.lens))).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(5, failed.join("\n  ")))
    }
}
