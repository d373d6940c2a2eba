//! Command-line driver. [`run`] parses arguments, executes one subcommand and
//! returns the rendered report with the process exit status.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use super::bundle::{Bundle, Structure};
use super::catalog::{self, FixtureParams, CATALOG};
use crate::error::{Error, Result};
use crate::exactalg::{Field, LinMap};
use crate::functors::{
    certify_homotopy_preservation, cone_functor, delta_functor, lambda_functor, m2_functor, psi_functor, simp_to_2crossed,
    FunctorCertificate,
};
use crate::homotopy::{three_term, HomotopyTable};
use crate::pairings::{boundary_decomposition_check, gen_p, gen_s, ideal_in};
use crate::report::ValidationReport;
use crate::simplicial::TruncSimplicialAlgebra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FunctorName {
    Lambda,
    Delta,
    Psi,
    M2,
    Cone,
    Simp2,
}

/// Inputs are file paths, or `fixture:<name>` for a catalog entry.
#[derive(Debug, Parser)]
#[command(name = "hocalg", version, about = "Exact checks for algebraic models of homotopy 3-types")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Field for fixtures; for files, reinterprets the scalars over this field.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Truncation of simplicial inputs (fixtures are built to it, files are cut down to it).
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    /// Nilpotency degree for the k[x]/(x^n) fixtures.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    #[arg(long, global = true)]
    pub no_timestamps: bool,
    /// Accept characteristic 2 fields.
    #[arg(long, global = true)]
    pub allow_char2: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the validator of the input's kind.
    Validate { input: String },
    /// Moore complex dimensions and boundary ranks.
    Moore { input: String },
    /// Homotopy table.
    Homotopy { input: String },
    /// Index sets, the ideal I_n and the boundary decomposition at level n.
    Pairings {
        input: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply a functor and emit the output bundle and its certificate.
    Functor {
        #[arg(value_enum)]
        name: FunctorName,
        input: String,
        /// Output bundle path; the certificate goes next to it with a `.cert.json` suffix.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the catalog, or emit one fixture.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the homotopy tables of two bundles in degrees 0 to 3.
    Certify { before: String, after: String },
}

/// Report accumulated by one subcommand.
#[derive(Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub timestamp: Option<u64>,
    lines: Vec<String>,
    data: Map<String, Value>,
    verdicts: Vec<(String, bool)>,
    pub exit: i32,
}

impl RunReport {
    fn new(command: Vec<String>, timestamps: bool) -> RunReport {
        let timestamp = timestamps.then(|| {
            std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
        });
        RunReport { command, timestamp, lines: vec![], data: Map::new(), verdicts: vec![], exit: EXIT_OK }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    fn put(&mut self, key: &str, v: Value) {
        self.data.insert(key.to_string(), v);
    }

    fn verdict(&mut self, name: impl Into<String>, ok: bool) {
        self.verdicts.push((name.into(), ok));
    }

    fn validation(&mut self, key: &str, r: &ValidationReport) {
        self.line(r.render().trim_end().to_string());
        self.put(key, serde_json::to_value(r).expect("reports serialize"));
        self.verdict(key, r.is_valid());
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.1)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut out = format!("$ hocalg {}\n", self.command.join(" "));
                if let Some(t) = self.timestamp {
                    out.push_str(&format!("time {t}\n"));
                }
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                for (name, ok) in &self.verdicts {
                    out.push_str(&format!("verdict {name}: {}\n", if *ok { "pass" } else { "FAIL" }));
                }
                out.push_str(&format!("exit {}\n", self.exit));
                out
            }
            Format::Machine => {
                let mut v = json!({
                    "command": self.command,
                    "lines": self.lines,
                    "data": self.data,
                    "verdicts": self.verdicts.iter().map(|(n, ok)| json!({"name": n, "passed": ok})).collect::<Vec<_>>(),
                    "exit": self.exit,
                });
                if let Some(t) = self.timestamp {
                    v["timestamp"] = json!(t);
                }
                format!("{}\n", serde_json::to_string_pretty(&v).expect("values serialize"))
            }
        }
    }
}

pub struct RunOutcome {
    pub output: String,
    pub exit: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidInput(_) | Error::Construction(_) | Error::NotAnIdeal(_) | Error::Descent(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> RunOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let exit = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return RunOutcome { output: e.render().to_string(), exit };
        }
    };
    let echo: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    let mut report = RunReport::new(echo, !cli.no_timestamps);
    if let Err(e) = execute(&cli, &mut report) {
        report.line(format!("error: {e}"));
        report.put("error", json!(e.to_string()));
        report.exit = exit_code(&e);
    } else {
        report.exit = if report.passed() { EXIT_OK } else { EXIT_FAILED };
    }
    RunOutcome { output: report.render(cli.format), exit: report.exit }
}

fn field_of(cli: &Cli) -> Result<Option<Field>> {
    cli.field.as_deref().map(|s| Field::parse_spec(s, cli.allow_char2)).transpose()
}

fn truncate(e: TruncSimplicialAlgebra, n: usize) -> Result<TruncSimplicialAlgebra> {
    e.require_truncation(n)?;
    if n == e.truncation() {
        return Ok(e);
    }
    let mut degens = e.degens()[..n].to_vec();
    degens.push(Vec::new());
    TruncSimplicialAlgebra::new(e.levels()[..=n].to_vec(), e.faces()[..=n].to_vec(), degens)
}

/// Loads a file or a `fixture:<name>` input, honouring the global flags.
pub fn load(cli: &Cli, input: &str) -> Result<Bundle> {
    let field = field_of(cli)?;
    if let Some(name) = input.strip_prefix("fixture:") {
        let params = FixtureParams {
            field: field.unwrap_or(Field::Rational),
            truncation: cli.truncation,
            degree: cli.degree,
        };
        return catalog::fixture(name, params);
    }
    let text = std::fs::read_to_string(input).map_err(|e| Error::Usage(format!("cannot read {input}: {e}")))?;
    let mut v: Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse { path: format!("{input}: line {} column {}", e.line(), e.column()), msg: e.to_string() })?;
    if let (Some(f), Some(obj)) = (field, v.as_object_mut()) {
        obj.insert("field".into(), json!(f.spec()));
    }
    let mut b = Bundle::from_value(&v, cli.allow_char2)?;
    if let (Some(n), Structure::Simplicial(e)) = (cli.truncation, &b.structure) {
        b.structure = Structure::Simplicial(truncate(e.clone(), n)?);
    }
    Ok(b)
}

pub fn validate_structure(s: &Structure) -> ValidationReport {
    match s {
        Structure::Algebra(a) => a.validate(),
        Structure::Simplicial(e) => e.validate(),
        Structure::PreCrossed(p) => p.validate(false),
        Structure::Crossed(p) => p.validate(true),
        Structure::TwoCrossed(t) => t.validate(),
        Structure::Square(s) => s.validate(),
        Structure::Quadratic(q) => q.validate(),
    }
}

/// Homotopy table in the indexing shared by the 2-type and 3-type models.
/// Simplicial tables are shifted so that `π₀` of the algebra sits in degree 1.
pub fn structure_homotopy(s: &Structure) -> Result<HomotopyTable> {
    Ok(match s {
        Structure::Algebra(_) => return Err(Error::Usage("an algebra has no homotopy table".into())),
        Structure::Simplicial(e) => e.homotopy()?.shifted_up(),
        Structure::PreCrossed(p) | Structure::Crossed(p) => {
            let f = p.r.field();
            three_term(&LinMap::zero(f, 0, p.c.dim()), &p.boundary)
        }
        Structure::TwoCrossed(t) => t.homotopy(),
        Structure::Square(s) => s.homotopy(),
        Structure::Quadratic(q) => q.homotopy(),
    })
}

fn simplicial(b: &Bundle) -> Result<&TruncSimplicialAlgebra> {
    match &b.structure {
        Structure::Simplicial(e) => Ok(e),
        other => Err(Error::Usage(format!("expected a simplicial bundle, got {}", other.kind()))),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))
}

fn execute(cli: &Cli, report: &mut RunReport) -> Result<()> {
    match &cli.command {
        Command::Validate { input } => {
            let b = load(cli, input)?;
            report.line(format!("{} ({}, field {})", b.meta.name, b.kind(), b.field().spec()));
            report.put("digest", json!(b.digest()));
            report.validation("validation", &validate_structure(&b.structure));
        }
        Command::Moore { input } => {
            let b = load(cli, input)?;
            let e = simplicial(&b)?;
            let m = e.moore()?;
            let (dims, ranks) = (m.dims(), m.ranks());
            for (n, d) in dims.iter().enumerate() {
                let r = if n == 0 { String::new() } else { format!(", rank d_{n} = {}", ranks[n]) };
                report.line(format!("dim NE_{n} = {d}{r}"));
            }
            let mut ch = crate::report::CheckBuilder::new("d d = 0");
            for n in 2..m.boundaries.len() {
                let dd = m.boundaries[n - 1].compose(&m.boundaries[n]);
                ch.test(dd.rank() == 0, || format!("d_{} d_{n} is nonzero", n - 1));
            }
            let ch = ch.finish();
            report.verdict(ch.name.clone(), ch.passed());
            report.put("dims", json!(dims));
            report.put("boundary_ranks", json!(ranks));
        }
        Command::Homotopy { input } => {
            let b = load(cli, input)?;
            let t = structure_homotopy(&b.structure)?;
            if let Structure::Simplicial(e) = &b.structure {
                report.line("simplicial pi_n of the Moore complex:");
                report.line(e.homotopy()?.render());
                report.line("as a 3-type model (shifted by one):");
            }
            report.line(t.render());
            report.put("homotopy", serde_json::to_value(&t).expect("tables serialize"));
        }
        Command::Pairings { input, n } => {
            let b = load(cli, input)?;
            let e = simplicial(&b)?;
            let s = gen_s(*n);
            report.line(format!("|S({n})| = {}", s.len()));
            let p: Vec<String> = gen_p(*n).iter().map(|p| p.to_string()).collect();
            report.line(format!("P({n}) = {{{}}}", p.join(", ")));
            report.put("S_size", json!(s.len()));
            report.put("P", json!(p));
            if *n >= 1 {
                let i = ideal_in(e, *n)?;
                report.line(format!("dim I_{n} = {}", i.dim()));
                report.put("dim_I", json!(i.dim()));
            }
            if *n >= 2 {
                let d = boundary_decomposition_check(e, *n)?;
                report.line(d.render().trim_end().to_string());
                report.put("decomposition", d.to_json());
                report.verdict("decomposition", d.verdicts.is_valid());
            }
        }
        Command::Functor { name, input, out } => {
            let b = load(cli, input)?;
            let (output, cert) = apply_functor(*name, &b)?;
            report.line(cert.render());
            report.put("certificate", cert.to_json());
            report.verdict("output validates", cert.verdict.is_valid());
            report.verdict("construction checks", cert.construction.is_valid());
            report.verdict("homotopy preserved", cert.homotopy_preserved());
            report.verdict("witnesses inverse", cert.witnesses_verified());
            match out {
                Some(path) => {
                    write_file(path, &output.to_pretty())?;
                    let cert_path = cert_path(path);
                    let cert_text = serde_json::to_string_pretty(&cert.to_json()).expect("certificates serialize");
                    write_file(&cert_path, &cert_text)?;
                    report.line(format!("wrote {} and {}", path.display(), cert_path.display()));
                }
                None => report.put("output", output.to_value()),
            }
        }
        Command::Fixtures { name: None, .. } => {
            for (name, kind, desc) in CATALOG {
                report.line(format!("{name:<16} {kind:<20} {desc}"));
            }
            report.put("catalog", json!(CATALOG.iter().map(|c| c.0).collect::<Vec<_>>()));
        }
        Command::Fixtures { name: Some(name), out } => {
            let b = load(cli, &format!("fixture:{name}"))?;
            report.validation("validation", &validate_structure(&b.structure));
            match out {
                Some(path) => {
                    write_file(path, &b.to_pretty())?;
                    report.line(format!("wrote {}", path.display()));
                }
                None => report.put("bundle", b.to_value()),
            }
            report.put("digest", json!(b.digest()));
        }
        Command::Certify { before, after } => {
            let (b, a) = (load(cli, before)?, load(cli, after)?);
            let (tb, ta) = (structure_homotopy(&b.structure)?, structure_homotopy(&a.structure)?);
            let degrees = certify_homotopy_preservation(&tb, &ta, 0..=3);
            let show = |x: Option<usize>| x.map_or("undefined".to_string(), |v| v.to_string());
            for d in &degrees {
                report.line(format!(
                    "pi_{}: before {} after {} {}",
                    d.degree,
                    show(d.before),
                    show(d.after),
                    if d.equal { "ok" } else { "MISMATCH" }
                ));
                report.verdict(format!("pi_{} preserved", d.degree), d.equal);
            }
            report.put("degrees", serde_json::to_value(&degrees).expect("verdicts serialize"));
        }
    }
    Ok(())
}

fn cert_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_os_string();
    s.push(".cert.json");
    PathBuf::from(s)
}

/// Dispatches a functor on a bundle of the matching kind.
pub fn apply_functor(name: FunctorName, b: &Bundle) -> Result<(Bundle, FunctorCertificate)> {
    let wrong = || Error::Usage(format!("functor {name:?} does not accept a {} bundle", b.kind()));
    let label = format!("{:?}({})", name, b.meta.name).to_lowercase();
    let (s, cert) = match (name, &b.structure) {
        (FunctorName::Lambda, Structure::TwoCrossed(t)) => lambda_functor(t).map(|(q, c)| (Structure::Quadratic(q), c))?,
        (FunctorName::Delta, Structure::Simplicial(e)) => delta_functor(e).map(|(q, c)| (Structure::Quadratic(q), c))?,
        (FunctorName::Simp2, Structure::Simplicial(e)) => simp_to_2crossed(e).map(|(t, c)| (Structure::TwoCrossed(t), c))?,
        (FunctorName::M2, Structure::Simplicial(e)) => m2_functor(e).map(|(s, c)| (Structure::Square(s), c))?,
        (FunctorName::Cone, Structure::Square(s)) => cone_functor(s).map(|(t, c)| (Structure::TwoCrossed(t), c))?,
        (FunctorName::Psi, Structure::Square(s)) => psi_functor(s).map(|(q, c)| (Structure::Quadratic(q), c))?,
        _ => return Err(wrong()),
    };
    Ok((Bundle::new(label, s), cert))
}

impl std::str::FromStr for FunctorName {
    type Err = Error;
    fn from_str(s: &str) -> Result<FunctorName> {
        <FunctorName as ValueEnum>::from_str(s, true).map_err(|_| Error::Usage(format!("unknown functor {s:?}")))
    }
}
