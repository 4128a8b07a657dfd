use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use dmlattice::checks::Status;
use dmlattice::params::{derive_params_str, table_params, ExtRational, LatticeParams};
use dmlattice::poincare::presentation;
use dmlattice::report::{
    export, octagon_for, verify_lattice, LatticeContext, VerificationReport, VerifyOptions,
    DEFAULT_SEED,
};

#[derive(Parser)]
#[command(
    name = "dmlattice",
    version,
    about = "Verify the Deligne-Mostow lattices with three-fold symmetry"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 39 lattices with their parameters.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show the parameters, generators and vertices of one lattice.
    Inspect {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full check suite on one lattice or on all of them.
    Verify {
        #[command(flatten)]
        lattice: OptionalLattice,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Write the full JSON report for one lattice.
    Export {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Build the octagon of a point and compare its two areas.
    Octagon {
        #[command(flatten)]
        lattice: LatticeArgs,
        /// `z1` as `re,im`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        z1: String,
        /// `z2` as `re,im`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        z2: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the presentation of one lattice.
    Presentation {
        #[command(flatten)]
        lattice: LatticeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct LatticeArgs {
    #[arg(long)]
    p: String,
    /// An integer or half-integer, e.g. `7/2`.
    #[arg(long, conflicts_with_all = ["k_num", "k_den"])]
    k: Option<String>,
    #[arg(long, requires = "k_den")]
    k_num: Option<i64>,
    #[arg(long, requires = "k_num")]
    k_den: Option<i64>,
}

#[derive(Args)]
struct OptionalLattice {
    #[arg(long, conflicts_with = "all")]
    p: Option<String>,
    #[arg(long, conflicts_with_all = ["k_num", "k_den"])]
    k: Option<String>,
    #[arg(long, requires = "k_den")]
    k_num: Option<i64>,
    #[arg(long, requires = "k_num")]
    k_den: Option<i64>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

impl RunArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            tol: self.tol,
            seed: self.seed,
            ..VerifyOptions::default()
        }
    }
}

struct UsageError(String);

fn resolve(
    p: &str,
    k: Option<&str>,
    k_num: Option<i64>,
    k_den: Option<i64>,
) -> Result<LatticeParams, UsageError> {
    let k = match (k, k_num, k_den) {
        (Some(k), _, _) => k.to_string(),
        (None, Some(n), Some(d)) => format!("{n}/{d}"),
        _ => return Err(UsageError("missing --k (or --k-num/--k-den)".into())),
    };
    derive_params_str(p, &k).map_err(|e| UsageError(e.to_string()))
}

impl LatticeArgs {
    fn params(&self) -> Result<LatticeParams, UsageError> {
        resolve(&self.p, self.k.as_deref(), self.k_num, self.k_den)
    }
}

fn parse_complex(s: &str) -> Result<Complex64, UsageError> {
    let bad = || UsageError(format!("expected `re,im`, got {s:?}"));
    let (re, im) = s.split_once(',').ok_or_else(bad)?;
    Ok(Complex64::new(
        re.trim().parse().map_err(|_| bad())?,
        im.trim().parse().map_err(|_| bad())?,
    ))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn write_out(path: &Path, text: &str) -> Result<(), UsageError> {
    fs::write(path, text).map_err(|e| UsageError(format!("cannot write {}: {e}", path.display())))
}

fn mu_text(params: &LatticeParams) -> String {
    params
        .mu
        .iter()
        .map(|m| m.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[derive(Serialize)]
struct ListRow {
    p: ExtRational,
    k: ExtRational,
    l: ExtRational,
    d: ExtRational,
    t: ExtRational,
    mu: [ExtRational; 5],
    collapse_case: String,
}

fn cmd_list(format: Format) -> ExitCode {
    let rows: Vec<ListRow> = table_params()
        .into_iter()
        .map(|q| ListRow {
            p: q.p,
            k: q.k,
            l: q.l,
            d: q.d,
            t: q.t,
            mu: q.mu,
            collapse_case: q.collapse_case.to_string(),
        })
        .collect();
    match format {
        Format::Json => println!("{}", to_json(&rows)),
        Format::Text => {
            println!(
                "{:>3} {:>5} {:>6} {:>6} {:>6}  {:<36} case",
                "p", "k", "l", "d", "t", "mu"
            );
            for (q, r) in table_params().iter().zip(&rows) {
                println!(
                    "{:>3} {:>5} {:>6} {:>6} {:>6}  {:<36} {}",
                    r.p.to_string(),
                    r.k.to_string(),
                    r.l.to_string(),
                    r.d.to_string(),
                    r.t.to_string(),
                    format!("({})", mu_text(q)),
                    r.collapse_case
                );
            }
        }
    }
    ExitCode::SUCCESS
}

fn cmd_inspect(params: LatticeParams, format: Format) -> ExitCode {
    let ctx = LatticeContext::new(&params);
    if format == Format::Json {
        println!("{}", to_json(&export(&params, &VerifyOptions::default())));
        return ExitCode::SUCCESS;
    }
    println!("lattice      {}", params.label());
    if !params.in_table {
        println!("note         not one of the 39 tabulated lattices");
    }
    println!("l, d, t      {}, {}, {}", params.l, params.d, params.t);
    println!("mu           ({})", mu_text(&params));
    println!("theta, phi   {}, {}", params.theta, params.phi);
    println!("case         {}", params.collapse_case);
    let counts = ctx.complex.counts();
    println!(
        "facets       {} vertices, {} edges, {} ridges, {} sides",
        counts.vertices, counts.edges, counts.ridges, counts.sides
    );
    let f = &ctx.gens.frame;
    for (name, m) in [("R1", f.r1), ("R2", f.r2), ("J", f.j), ("P", f.p)] {
        println!("{name} =");
        for i in 0..3 {
            let row: Vec<String> = (0..3)
                .map(|j| format!("{:>9.5}{:+.5}i", m[(i, j)].re, m[(i, j)].im))
                .collect();
            println!("  [{}]", row.join("  "));
        }
    }
    println!("vertices (z-coordinates)");
    for v in &ctx.vertices.vertices {
        let z = v.z_rep;
        println!(
            "  z{:<2} ({:+.6}{:+.6}i, {:+.6}{:+.6}i, {:+.6}{:+.6}i)",
            v.index, z[0].re, z[0].im, z[1].re, z[1].im, z[2].re, z[2].im
        );
    }
    ExitCode::SUCCESS
}

fn print_report(r: &VerificationReport) {
    println!("== {} {} [{}]", r.p, r.k, r.collapse_case);
    for c in &r.checks {
        println!("  {c}");
    }
    println!(
        "  chi = {} (orbits) = {} (closed form); facets {:?}",
        r.euler.orbit_sum,
        r.euler.closed_form,
        r.facet_counts.as_tuple()
    );
    println!("  overall: {}", r.overall);
}

fn cmd_verify(rows: Vec<LatticeParams>, run: &RunArgs) -> Result<ExitCode, UsageError> {
    let opts = run.options();
    let reports: Vec<VerificationReport> = thread::scope(|s| {
        let handles: Vec<_> = rows
            .iter()
            .map(|q| s.spawn(move || verify_lattice(q, &opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker"))
            .collect()
    });
    let failed = reports.iter().filter(|r| r.overall == Status::Fail).count();
    match run.format {
        Format::Json => println!("{}", to_json(&reports)),
        Format::Text => {
            for r in &reports {
                print_report(r);
            }
            println!(
                "{} of {} lattices passed",
                reports.len() - failed,
                reports.len()
            );
        }
    }
    if let Some(path) = &run.out {
        write_out(path, &to_json(&reports))?;
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_export(params: LatticeParams, run: &RunArgs) -> Result<ExitCode, UsageError> {
    let doc = export(&params, &run.options());
    let text = to_json(&doc);
    match &run.out {
        Some(path) => write_out(path, &text)?,
        None => println!("{text}"),
    }
    Ok(if doc.checks.iter().any(|c| c.failed()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct OctagonOutput {
    vertices: Vec<[f64; 2]>,
    shoelace_area: f64,
    hermitian_area: f64,
    difference: f64,
    positive: bool,
}

fn cmd_octagon(params: LatticeParams, z1: Complex64, z2: Complex64, format: Format) -> ExitCode {
    let (cfg, shoelace, hermitian) = octagon_for(&params, z1, z2);
    let oct = dmlattice::conemetric::build_octagon(&cfg);
    let out = OctagonOutput {
        vertices: oct.vertices.iter().map(|v| [v.re, v.im]).collect(),
        shoelace_area: shoelace,
        hermitian_area: hermitian,
        difference: shoelace - hermitian,
        positive: hermitian > 0.0,
    };
    if !out.positive {
        eprintln!(
            "warning: <z,z> = {hermitian:.6e} is not positive; the octagon is not a cone metric"
        );
    }
    match format {
        Format::Json => println!("{}", to_json(&out)),
        Format::Text => {
            let names = ["v0", "v1", "v2", "v3", "v*", "v-3", "v-2", "v-1"];
            for (n, v) in names.iter().zip(&out.vertices) {
                println!("{n:>4}  {:+.12} {:+.12}i", v[0], v[1]);
            }
            println!("shoelace area   {:.15e}", out.shoelace_area);
            println!("hermitian area  {:.15e}", out.hermitian_area);
            println!("difference      {:.3e}", out.difference);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_presentation(params: LatticeParams, format: Format) -> ExitCode {
    let pres = presentation(&params);
    match format {
        Format::Json => println!("{}", to_json(&pres)),
        Format::Text => {
            for p in &pres {
                println!("{p}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::List { format } => Ok(cmd_list(format)),
        Command::Inspect { lattice, format } => Ok(cmd_inspect(lattice.params()?, format)),
        Command::Verify { lattice, all, run } => {
            let rows = if all {
                table_params()
            } else {
                let p = lattice
                    .p
                    .as_deref()
                    .ok_or_else(|| UsageError("pass --all or --p/--k".into()))?;
                vec![resolve(
                    p,
                    lattice.k.as_deref(),
                    lattice.k_num,
                    lattice.k_den,
                )?]
            };
            cmd_verify(rows, &run)
        }
        Command::Export { lattice, run } => cmd_export(lattice.params()?, &run),
        Command::Octagon {
            lattice,
            z1,
            z2,
            format,
        } => Ok(cmd_octagon(
            lattice.params()?,
            parse_complex(&z1)?,
            parse_complex(&z2)?,
            format,
        )),
        Command::Presentation { lattice, format } => {
            Ok(cmd_presentation(lattice.params()?, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
