//! Command-line interface for the finspinor library.
//!
//! Exit codes: 0 success, 1 failed verification or runtime error, 2 bad
//! input (parse or validation), 3 non-unimodular matrix, 4 decomposition
//! outside its domain.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use finspinor::herm::det_invariant;
use finspinor::n3::{decompose_sl3, Sl3Decomposition};
use finspinor::sample::{random_coords, rng_from_seed};
use finspinor::verify::{run_all, VerifyConfig};
use finspinor::{
    form_tensor, induced_map, Error as CoreError, HermBasis64, HermVector64, Matrix64, Tolerance64,
    GENERATOR_ID,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "finspinor",
    version,
    about = "Finslerian spinor algebra toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Spinor space dimension (inferred from --matrix when omitted).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Seed for all random sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of random draws for sampled checks.
    #[arg(long, global = true, default_value_t = 100)]
    trials: usize,
    /// Absolute tolerance for input validation.
    #[arg(long = "tol-abs", global = true, default_value_t = 1e-10)]
    tol_abs: f64,
    /// Relative tolerance for input validation.
    #[arg(long = "tol-rel", global = true, default_value_t = 1e-9)]
    tol_rel: f64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Path to a JSON matrix: rows of [re, im] pairs.
    #[arg(long, global = true)]
    matrix: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the standard Hermitian basis and its dual.
    Basis,
    /// Print the real linear map induced by a unimodular matrix.
    Lmap,
    /// Print the degree-n form coefficients with a sampled determinant check.
    Form,
    /// Split a 3x3 unimodular matrix into its four canonical factors.
    Decompose,
    /// Run the seeded verification suites.
    Verify,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

/// Input problem that is not surfaced through a library error.
#[derive(Debug)]
struct Invalid(String);

impl std::fmt::Display for Invalid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Invalid {}

fn invalid(msg: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(Invalid(msg.into()))
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    if let Some(core) = err.downcast_ref::<CoreError>() {
        return match core {
            CoreError::NotUnimodular { .. } => 3,
            CoreError::DecompositionDomain { .. } => 4,
            CoreError::NotSquare { .. }
            | CoreError::Dimension { .. }
            | CoreError::RaggedRows { .. }
            | CoreError::NonFinite { .. }
            | CoreError::NotHermitian { .. }
            | CoreError::Domain { .. }
            | CoreError::InvalidTolerance { .. } => 2,
            _ => 1,
        };
    }
    if err.downcast_ref::<Invalid>().is_some()
        || err.downcast_ref::<serde_json::Error>().is_some()
        || err.downcast_ref::<std::io::Error>().is_some()
    {
        return 2;
    }
    1
}

fn run(cli: &Cli) -> Result<i32> {
    let tol = Tolerance64::new(cli.tol_abs, cli.tol_rel)?;
    match cli.command {
        Command::Basis => basis_cmd(cli),
        Command::Lmap => lmap_cmd(cli, &tol),
        Command::Form => form_cmd(cli),
        Command::Decompose => decompose_cmd(cli, &tol),
        Command::Verify => verify_cmd(cli, &tol),
    }
}

fn dimension(cli: &Cli) -> usize {
    cli.n.unwrap_or(2)
}

fn load_matrix(cli: &Cli) -> Result<Matrix64> {
    let path = cli
        .matrix
        .as_ref()
        .ok_or_else(|| invalid("this command needs --matrix <file>"))?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let raw: Vec<Vec<[f64; 2]>> =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    let rows: Vec<Vec<finspinor::C64>> = raw
        .iter()
        .map(|row| {
            row.iter()
                .map(|&[re, im]| finspinor::C64::new(re, im))
                .collect()
        })
        .collect();
    let m = Matrix64::from_rows(&rows)?;
    if let Some(n) = cli.n {
        if m.rows() != n {
            return Err(invalid(format!(
                "--n {} disagrees with the {}x{} matrix in the file",
                n,
                m.rows(),
                m.cols()
            )));
        }
    }
    Ok(m)
}

fn emit(cli: &Cli, text: &str) -> Result<i32> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            use std::io::Write;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(err) = writeln!(lock, "{text}") {
                // A closed pipe (e.g. piping into `head`) is not a failure.
                if err.kind() == std::io::ErrorKind::BrokenPipe {
                    return Ok(0);
                }
                return Err(err.into());
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixDoc {
    fn of(m: &Matrix64) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| {
                    (0..m.cols())
                        .map(|j| [m[(i, j)].re, m[(i, j)].im])
                        .collect()
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct BasisDoc {
    n: usize,
    dim: usize,
    lower: Vec<MatrixDoc>,
    upper: Vec<MatrixDoc>,
}

fn basis_cmd(cli: &Cli) -> Result<i32> {
    let n = dimension(cli);
    let basis = HermBasis64::standard(n)?;
    let doc = BasisDoc {
        n,
        dim: basis.dim(),
        lower: (0..basis.dim())
            .map(|a| MatrixDoc::of(basis.lower_at(a)))
            .collect(),
        upper: (0..basis.dim())
            .map(|a| MatrixDoc::of(basis.upper_at(a)))
            .collect(),
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&doc)?,
        Format::Csv => {
            let mut s = String::from("kind,index,row,col,re,im\n");
            for (kind, mats) in [("lower", &doc.lower), ("upper", &doc.upper)] {
                for (a, m) in mats.iter().enumerate() {
                    for (i, row) in m.entries.iter().enumerate() {
                        for (j, &[re, im]) in row.iter().enumerate() {
                            writeln!(s, "{kind},{a},{i},{j},{re},{im}")?;
                        }
                    }
                }
            }
            s.trim_end().to_string()
        }
        Format::Pretty => {
            let mut s = format!("standard basis for n = {n} ({} members)\n", doc.dim);
            for (kind, mats) in [("lower", &doc.lower), ("upper", &doc.upper)] {
                for (a, m) in mats.iter().enumerate() {
                    writeln!(s, "{kind}[{a}]:")?;
                    for row in &m.entries {
                        let cells: Vec<String> =
                            row.iter().map(|&[re, im]| format!("{re}{im:+}i")).collect();
                        writeln!(s, "  [{}]", cells.join(", "))?;
                    }
                }
            }
            s.trim_end().to_string()
        }
    };
    emit(cli, &text)
}

#[derive(Serialize)]
struct LmapDoc {
    n: usize,
    dim: usize,
    matrix: Vec<Vec<f64>>,
    det: f64,
}

fn lmap_cmd(cli: &Cli, tol: &Tolerance64) -> Result<i32> {
    let m = load_matrix(cli)?;
    let n = m.rows();
    let basis = HermBasis64::standard(n)?;
    let l = induced_map(&m, &basis, tol)?;
    let mat = l.matrix();
    let doc = LmapDoc {
        n,
        dim: n * n,
        matrix: (0..mat.rows())
            .map(|i| (0..mat.cols()).map(|j| mat[(i, j)]).collect())
            .collect(),
        det: l.det()?,
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&doc)?,
        Format::Csv => {
            let mut s = String::from("row,col,value\n");
            for (i, row) in doc.matrix.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    writeln!(s, "{i},{j},{v}")?;
                }
            }
            s.trim_end().to_string()
        }
        Format::Pretty => {
            let mut s = format!(
                "induced map for n = {n} ({0}x{0}), det {1}\n",
                doc.dim, doc.det
            );
            for row in &doc.matrix {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>12.6}")).collect();
                writeln!(s, "  [{}]", cells.join(", "))?;
            }
            s.trim_end().to_string()
        }
    };
    emit(cli, &text)
}

#[derive(Serialize)]
struct FormDoc {
    n: usize,
    degree: usize,
    nonzeros: usize,
    coefficients: BTreeMap<String, f64>,
    check: FormCheck,
}

#[derive(Serialize)]
struct FormCheck {
    samples: usize,
    seed: u64,
    generator: &'static str,
    max_deviation: f64,
}

fn form_cmd(cli: &Cli) -> Result<i32> {
    let n = dimension(cli);
    let basis = HermBasis64::standard(n)?;
    let g = form_tensor(&basis)?;
    let mut rng = rng_from_seed(cli.seed);
    let mut dev = 0.0f64;
    for _ in 0..cli.trials {
        let v = HermVector64::new(n, random_coords(n * n, &mut rng))?;
        let via_form = g.evaluate(v.coords())?;
        let via_det = det_invariant(&v, &basis)?;
        dev = dev.max((via_form - via_det).abs());
    }
    let coefficients: BTreeMap<String, f64> = g
        .iter()
        .map(|(key, c)| {
            let name: Vec<String> = key.iter().map(u8::to_string).collect();
            (name.join(","), c)
        })
        .collect();
    let doc = FormDoc {
        n,
        degree: g.degree(),
        nonzeros: g.nonzeros(),
        coefficients,
        check: FormCheck {
            samples: cli.trials,
            seed: cli.seed,
            generator: GENERATOR_ID,
            max_deviation: dev,
        },
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&doc)?,
        Format::Csv => {
            let mut s = String::from("monomial,coefficient\n");
            for (key, c) in &doc.coefficients {
                writeln!(s, "{},{c}", key.replace(',', "-"))?;
            }
            s.trim_end().to_string()
        }
        Format::Pretty => {
            let mut s = format!(
                "degree-{} form for n = {n}: {} nonzero coefficients\n",
                doc.degree, doc.nonzeros
            );
            for (key, c) in &doc.coefficients {
                writeln!(s, "  g[{key}] = {c}")?;
            }
            writeln!(
                s,
                "determinant agreement over {} samples (seed {}): max deviation {:e}",
                doc.check.samples, doc.check.seed, doc.check.max_deviation
            )?;
            s.trim_end().to_string()
        }
    };
    emit(cli, &text)
}

#[derive(Serialize)]
struct DecomposeDoc {
    n: usize,
    factors: BTreeMap<&'static str, MatrixDoc>,
    d: [f64; 2],
    branch: &'static str,
    residual: f64,
}

fn decompose_cmd(cli: &Cli, tol: &Tolerance64) -> Result<i32> {
    if let Some(n) = cli.n {
        if n != 3 {
            return Err(invalid(format!(
                "decompose only supports n = 3, got --n {n}"
            )));
        }
    }
    let m = load_matrix(cli)?;
    let split: Sl3Decomposition<f64> = decompose_sl3(&m, tol)?;
    let mut factors = BTreeMap::new();
    factors.insert("d1", MatrixDoc::of(&split.d1));
    factors.insert("d2", MatrixDoc::of(&split.d2));
    factors.insert("d3", MatrixDoc::of(&split.d3));
    factors.insert("d4", MatrixDoc::of(&split.d4));
    let doc = DecomposeDoc {
        n: 3,
        factors,
        d: [split.d.re, split.d.im],
        branch: "principal",
        residual: split.residual,
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&doc)?,
        Format::Csv => {
            let mut s = String::from("factor,row,col,re,im\n");
            for (name, m) in &doc.factors {
                for (i, row) in m.entries.iter().enumerate() {
                    for (j, &[re, im]) in row.iter().enumerate() {
                        writeln!(s, "{name},{i},{j},{re},{im}")?;
                    }
                }
            }
            s.trim_end().to_string()
        }
        Format::Pretty => {
            let mut s = format!(
                "four-factor split, d = {}{:+}i ({} branch), residual {:e}\n",
                doc.d[0], doc.d[1], doc.branch, doc.residual
            );
            for (name, m) in &doc.factors {
                writeln!(s, "{name}:")?;
                for row in &m.entries {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|&[re, im]| format!("{re:.6}{im:+.6}i"))
                        .collect();
                    writeln!(s, "  [{}]", cells.join(", "))?;
                }
            }
            s.trim_end().to_string()
        }
    };
    emit(cli, &text)
}

#[derive(Serialize)]
struct ReportDoc {
    suite: &'static str,
    artifact_version: &'static str,
    generator: &'static str,
    n: usize,
    seed: u64,
    trials: usize,
    tol_abs: f64,
    tol_rel: f64,
    properties: Vec<PropertyDoc>,
    pass: bool,
}

#[derive(Serialize)]
struct PropertyDoc {
    name: &'static str,
    trials: usize,
    max_deviation: Option<f64>,
    threshold: f64,
    pass: bool,
    skipped: bool,
}

fn verify_cmd(cli: &Cli, tol: &Tolerance64) -> Result<i32> {
    let cfg = VerifyConfig {
        n: dimension(cli),
        seed: cli.seed,
        trials: cli.trials,
        tol: *tol,
    };
    let report = run_all(&cfg)?;
    let doc = ReportDoc {
        suite: report.suite,
        artifact_version: report.artifact_version,
        generator: report.generator,
        n: report.n,
        seed: report.seed,
        trials: report.trials,
        tol_abs: report.tol_abs,
        tol_rel: report.tol_rel,
        properties: report
            .properties
            .iter()
            .map(|p| PropertyDoc {
                name: p.name,
                trials: p.trials,
                max_deviation: p.max_deviation,
                threshold: p.threshold,
                pass: p.pass,
                skipped: p.skipped,
            })
            .collect(),
        pass: report.pass,
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string(&doc)?,
        Format::Csv => {
            let mut s = String::from("name,trials,max_deviation,threshold,pass,skipped\n");
            for p in &doc.properties {
                let dev = p.max_deviation.map_or(String::new(), |d| format!("{d:e}"));
                writeln!(
                    s,
                    "{},{},{},{:e},{},{}",
                    p.name, p.trials, dev, p.threshold, p.pass, p.skipped
                )?;
            }
            s.trim_end().to_string()
        }
        Format::Pretty => {
            let mut s = format!(
                "verification for n = {} (seed {}, {} trials per suite)\n",
                doc.n, doc.seed, doc.trials
            );
            for p in &doc.properties {
                let status = if p.skipped {
                    "skip"
                } else if p.pass {
                    "pass"
                } else {
                    "FAIL"
                };
                match p.max_deviation {
                    Some(d) if !p.skipped => writeln!(
                        s,
                        "  [{status}] {} ({} trials, measured {d:e}, threshold {:e})",
                        p.name, p.trials, p.threshold
                    )?,
                    _ => writeln!(s, "  [{status}] {}", p.name)?,
                }
            }
            writeln!(s, "overall: {}", if doc.pass { "pass" } else { "FAIL" })?;
            s.trim_end().to_string()
        }
    };
    let code = emit(cli, &text)?;
    if doc.pass {
        Ok(code)
    } else {
        Ok(1)
    }
}
