//! Command-line front end: path enumeration, schedule evaluation, operator
//! computations and verification runs.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on a usage error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deltasq::paths::{enumerate, family_genpoly, class_paths, DecorationKind, Family, FamilySpec};
use deltasq::schedule::{schedule_product, MarkedWord};
use deltasq::symfunc::{self, cache, convert, Basis, SymFunc};
use deltasq::verify::{self, CheckName, CheckReport, CheckSpec, Params, Status};

#[derive(Parser, Debug)]
#[command(name = "deltasq", version, about = "Decorated lattice paths and Macdonald operator identities")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Do not read or write the Macdonald disk cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Largest path size m + n accepted by any subcommand.
    #[arg(long, global = true, default_value_t = 8)]
    max_path_size: u32,
    /// Largest symmetric-function degree accepted by any subcommand.
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every path of a family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Generating polynomial of a family, as JSON.
    Genpoly {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Closed-form enumerator of the paths with a given diagonal word and shift.
    Schedule {
        /// Runs separated by `|`, decorated letters marked with `*`, e.g. "1 2 | 1*".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 0)]
        shift: u32,
        /// Also enumerate the class by brute force and compare.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Apply an operator and print the result.
    Symfunc {
        #[arg(long, value_enum)]
        op: Op,
        /// Argument, e.g. "e[2]" or "(q)*s[2,1] + s[3]".
        #[arg(long)]
        f: Option<String>,
        /// Eigenvalue function for delta and delta_prime.
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value = "schur")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
    },
    /// Run one check.
    Check {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 0)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: u32,
        #[arg(long)]
        r: Option<u32>,
        /// Restrict a per-class check to one shift.
        #[arg(long)]
        s: Option<u32>,
        /// Restrict a per-class check to one diagonal word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Lines)]
        format: Format,
        /// Write 0 for every timing, for byte-identical output.
        #[arg(long)]
        no_timing: bool,
    },
    /// Run the catalogue of checks as JSON lines.
    Suite {
        /// Largest path size m + n in the grid.
        #[arg(long)]
        max_size: u32,
        /// Check names or groups (all, schedule, shift, identities, conjectures, audits).
        #[arg(long, value_delimiter = ',', default_value = "all")]
        families: Vec<String>,
        /// Report file (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write 0 for every timing, for byte-identical output.
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum, default_value_t = KindArg::Valley)]
    kind: KindArg,
    #[arg(long, default_value_t = 0)]
    m: u32,
    #[arg(long)]
    n: u32,
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long)]
    touching: Option<u32>,
    /// Largest label (default n).
    #[arg(long)]
    alphabet: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Lsq,
    Ld,
    Lsqprime,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Valley,
    Rise,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Nabla,
    Delta,
    #[value(name = "delta_prime", alias = "delta-prime")]
    DeltaPrime,
    Theta,
    Enk,
}

/// Why a command stopped early.
enum Failure {
    Usage(String),
    Checks,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

struct Limits {
    path_size: u32,
    degree: u32,
}

impl Limits {
    fn size(&self, flag: &str, v: u32) -> Result<(), Failure> {
        if v > self.path_size {
            return Err(usage(format!("{flag} {v} exceeds --max-path-size {}", self.path_size)));
        }
        Ok(())
    }

    fn degree(&self, flag: &str, v: u32) -> Result<(), Failure> {
        if v > self.degree {
            return Err(usage(format!("{flag} {v} exceeds --max-degree {}", self.degree)));
        }
        Ok(())
    }
}

impl FamilyArgs {
    fn spec(&self, limits: &Limits) -> Result<FamilySpec, Failure> {
        limits.size("--m + --n", self.m + self.n)?;
        let family = match self.family {
            FamilyArg::Lsq => Family::Lsq,
            FamilyArg::Ld => Family::Ld,
            FamilyArg::Lsqprime => Family::LsqPrime,
        };
        let kind = match self.kind {
            KindArg::Valley => DecorationKind::Valley,
            KindArg::Rise => DecorationKind::Rise,
        };
        let mut spec = FamilySpec::new(family, self.m, self.n, self.k, kind);
        if let Some(r) = self.touching {
            spec = spec.with_touching(r);
        }
        if let Some(a) = self.alphabet {
            limits.size("--alphabet", a)?;
            spec = spec.with_alphabet(a);
        }
        spec.validate().map_err(|e| usage(e.to_string()))?;
        Ok(spec)
    }
}

fn parse_sym(flag: &str, s: Option<&String>) -> Result<SymFunc, Failure> {
    let s = s.ok_or_else(|| usage(format!("{flag} is required for this operator")))?;
    s.parse().map_err(|e| usage(format!("{flag}: {e}")))
}

fn write_reports(
    out: &mut dyn Write,
    reports: &mut [CheckReport],
    format: Format,
    no_timing: bool,
) -> io::Result<()> {
    for r in reports.iter_mut() {
        if no_timing {
            r.ms = 0;
        }
        match format {
            Format::Lines => writeln!(out, "{}", r.line())?,
            Format::Json => writeln!(out, "{}", r.to_json())?,
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = Limits { path_size: cli.max_path_size, degree: cli.max_degree };
    symfunc::set_max_degree(cli.max_degree);
    if cli.no_cache {
        cache::disable();
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| usage(format!("--jobs: {e}")))?;
    }
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Enumerate { family, format } => {
            let spec = family.spec(&limits)?;
            for p in enumerate(&spec).map_err(|e| usage(e.to_string()))? {
                match format {
                    Format::Lines => writeln!(out, "{}", p.to_line())?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&p).expect("serializable"))?,
                }
            }
        }
        Command::Genpoly { family } => {
            let spec = family.spec(&limits)?;
            let g = family_genpoly(&spec).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "{}", g.to_json())?;
        }
        Command::Schedule { word, shift, verify, format } => {
            let z: MarkedWord = word.parse().map_err(|e| usage(format!("--word: {e}")))?;
            limits.size("word length", z.len() as u32)?;
            let (product, content) = schedule_product(&z, shift);
            let oracle = verify.then(|| verify::qt_sum(&class_paths(&z, shift)));
            let matched = oracle.as_ref().map(|o| *o == product);
            match format {
                Format::Lines => {
                    writeln!(out, "{product}")?;
                    if let (Some(o), Some(ok)) = (&oracle, matched) {
                        if ok {
                            writeln!(out, "oracle: match")?;
                        } else {
                            writeln!(out, "oracle: mismatch, brute force gives {o}")?;
                        }
                    }
                }
                Format::Json => {
                    let mut v = serde_json::json!({
                        "word": z.to_string(),
                        "shift": shift,
                        "content": content,
                        "product": product.to_string(),
                    });
                    if let Some(o) = &oracle {
                        v["oracle"] = serde_json::json!(o.to_string());
                        v["match"] = serde_json::json!(matched);
                    }
                    writeln!(out, "{v}")?;
                }
            }
            if matched == Some(false) {
                out.flush()?;
                return Err(Failure::Checks);
            }
        }
        Command::Symfunc { op, f, g, n, k, basis, format } => {
            let basis: Basis = basis.parse().map_err(|e| usage(format!("--basis: {e}")))?;
            let result = match op {
                Op::Enk => {
                    let n = n.ok_or_else(|| usage("--n is required for enk"))?;
                    let k = k.ok_or_else(|| usage("--k is required for enk"))?;
                    limits.degree("--n", n)?;
                    if k > n {
                        return Err(usage(format!("--k {k} exceeds --n {n}")));
                    }
                    symfunc::e_nk(n, k)
                }
                Op::Nabla => {
                    let f = parse_sym("--f", f.as_ref())?;
                    limits.degree("degree of --f", f.degree())?;
                    symfunc::nabla(&f)
                }
                Op::Delta | Op::DeltaPrime => {
                    let f = parse_sym("--f", f.as_ref())?;
                    let g = parse_sym("--g", g.as_ref())?;
                    limits.degree("degree of --f", f.degree())?;
                    limits.degree("degree of --g", g.degree())?;
                    if matches!(op, Op::Delta) {
                        symfunc::delta(&g, &f)
                    } else {
                        symfunc::delta_prime(&g, &f)
                    }
                }
                Op::Theta => {
                    let f = parse_sym("--f", f.as_ref())?;
                    let k = k.ok_or_else(|| usage("--k is required for theta"))?;
                    limits.degree("degree of --f plus --k", f.degree() + k)?;
                    symfunc::theta_e(k, &f)
                }
            };
            let result = result.and_then(|r| convert(&r, basis)).map_err(|e| usage(e.to_string()))?;
            match format {
                Format::Lines => writeln!(out, "{result}")?,
                Format::Json => writeln!(out, "{}", result.to_json())?,
            }
        }
        Command::Check { name, m, n, k, r, s, word, format, no_timing } => {
            let name: CheckName = name.parse().map_err(|e: String| usage(format!("--name: {e}")))?;
            limits.size("--m + --n", m + n)?;
            limits.degree("--n", n)?;
            let params = Params { r, s, word, ..Params::mnk(m, n, k) };
            let mut reports = verify::run_spec(&CheckSpec::new(name, params));
            write_reports(&mut out, &mut reports, format, no_timing)?;
            if reports.iter().any(|r| r.status == Status::Fail) {
                out.flush()?;
                return Err(Failure::Checks);
            }
        }
        Command::Suite { max_size, families, out: path, no_timing } => {
            limits.size("--max-size", max_size)?;
            limits.degree("--max-size", max_size)?;
            let checks = verify::parse_families(&families).map_err(|e| usage(format!("--families: {e}")))?;
            let (mut summary, mut reports) = verify::run_suite(max_size, &checks, &mut io::sink())?;
            let mut sink: Box<dyn Write> = match &path {
                Some(p) => Box::new(BufWriter::new(File::create(p)?)),
                None => Box::new(&mut out),
            };
            if no_timing {
                summary.ms = 0;
            }
            write_reports(&mut sink, &mut reports, Format::Json, no_timing)?;
            writeln!(sink, "{}", summary.to_json())?;
            sink.flush()?;
            drop(sink);
            if path.is_some() {
                writeln!(
                    out,
                    "{} checks: {} pass, {} fail, {} skipped",
                    summary.total, summary.pass, summary.fail, summary.skipped
                )?;
            }
            if summary.fail > 0 {
                out.flush()?;
                return Err(Failure::Checks);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
