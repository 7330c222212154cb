//! Command-line front end for `qcurv-core`.
//!
//! [`run`] is the whole program; `main` only wires it to the process streams.
//! JSON goes to `out`, diagnostics to `err`. Exit codes: [`EXIT_OK`],
//! [`EXIT_MISMATCH`] when a verification fails, [`EXIT_USAGE`] for bad input.

pub mod args;
pub mod json;

use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::Path;

use clap::error::ErrorKind;
use clap::Parser;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::Value;

use qcurv_core::asymptotics::classify;
use qcurv_core::bifurcation::{enumerate_instants, find_instants, QuadraticSpectrum, Spectrum, Window};
use qcurv_core::catalog::{
    base_spectrum, expected_theorem_a, hopf_data, theorem_a_table, threshold_of, verify_appendix,
    FamilyId, HopfFamily, TheoremARow,
};
use qcurv_core::geometry::curvature_package;
use qcurv_core::{Rational, SubmersionData};

use args::{Cli, Command, Source};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => f.write_str(m),
            Failure::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl From<qcurv_core::Error> for Failure {
    fn from(e: qcurv_core::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if help { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match cmd {
        Command::Curvature { source, at } => curvature(&source, at.as_ref(), out),
        Command::Instants { source, lambda, eigs, window, spectrum, width } => {
            instants(&source, lambda, eigs, window, spectrum, width, out)
        }
        Command::TheoremA { q_max, json } => theorem_a(q_max, json, out, err),
        Command::VerifyAppendix { q_max } => verify(q_max, out, err),
        Command::Asymptotics { source } => {
            let (d, _) = resolve(&source)?;
            emit(out, &json::verdict(&classify(&d)?))
        }
        Command::Sample { source, t_range, steps, out: path } => {
            sample(&source, &t_range, steps, &path, out)
        }
    }
}

fn resolve(src: &Source) -> Result<(SubmersionData, Option<HopfFamily>), Failure> {
    match (&src.custom, src.family) {
        (Some(d), _) => Ok((d.clone(), None)),
        (None, Some(id)) => {
            let f = HopfFamily::new(id, src.q.unwrap_or(id.min_q()))?;
            Ok((hopf_data(&f), Some(f)))
        }
        (None, None) => Err(Failure::Usage("one of --family or --custom is required".into())),
    }
}

fn emit(out: &mut dyn Write, v: &Value) -> Outcome {
    let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out, "{text}")?;
    Ok(EXIT_OK)
}

fn curvature(src: &Source, at: Option<&Rational>, out: &mut dyn Write) -> Outcome {
    let (d, _) = resolve(src)?;
    let pkg = curvature_package(&d)?;
    let mut doc = serde_json::Map::new();
    doc.insert("data".into(), json::data(&d));
    doc.insert("package".into(), json::package(&pkg));
    if let Some(t) = at {
        let mut vals = serde_json::Map::new();
        vals.insert("t".into(), json::rational(t));
        for (name, p) in json::package_fields(&pkg) {
            vals.insert(name.into(), json::rational(&p.eval(t)?));
        }
        doc.insert("at".into(), Value::Object(vals));
    }
    emit(out, &Value::Object(doc))
}

fn instants(
    src: &Source,
    lambda: Option<Rational>,
    eigs: Option<u32>,
    window: Option<(Rational, Option<Rational>)>,
    spectrum: Option<(Rational, Rational)>,
    width: Option<Rational>,
    out: &mut dyn Write,
) -> Outcome {
    let (d, family) = resolve(src)?;
    if width.as_ref().is_some_and(|w| !w.is_positive()) {
        return Err(Failure::Usage("--width must be positive".into()));
    }
    let mut reports = match (lambda, eigs) {
        (Some(lambda), _) => find_instants(&d, &lambda)?,
        (None, Some(k)) => {
            let spec: Box<dyn Spectrum> = match (spectrum, family) {
                (Some((scale, shift)), _) => Box::new(QuadraticSpectrum::new(scale, shift)?),
                (None, Some(f)) => Box::new(base_spectrum(&f)),
                (None, None) => {
                    return Err(Failure::Usage("--custom with --eigs needs --spectrum".into()))
                }
            };
            let (lo, hi) = window.unwrap_or((Rational::zero(), None));
            enumerate_instants(&d, spec.as_ref(), &Window::new(lo, hi), k)?
        }
        (None, None) => return Err(Failure::Usage("one of --lambda or --eigs is required".into())),
    };
    if let Some(w) = &width {
        for r in &mut reports {
            r.root = r.root.refined(w);
        }
    }
    emit(out, &Value::Array(reports.iter().map(json::report).collect()))
}

fn generic_bundle(id: FamilyId) -> &'static str {
    match id {
        FamilyId::I => "S^1 -> S^(2q+1) -> CP^q",
        FamilyId::II => "S^3 -> S^(4q+3) -> HP^q",
        FamilyId::III => "CP^1 -> CP^(2q+1) -> HP^q",
        FamilyId::IV => "S^7 -> S^15 -> S^8(1/2)",
    }
}

fn markdown_table(rows: &[TheoremARow]) -> String {
    let mut s = String::from(
        "| Family | Bundle | Infinitely many instants as t -> 0 | Infinitely many instants as t -> inf |\n\
         |---|---|---|---|\n",
    );
    for id in FamilyId::ALL {
        let fam: Vec<&TheoremARow> = rows.iter().filter(|r| r.family.id() == id).collect();
        if fam.is_empty() {
            continue;
        }
        let col = |pick: fn(&TheoremARow) -> bool| {
            threshold_of(&fam.iter().map(|r| (r.family.q(), pick(r))).collect::<Vec<_>>())
        };
        s.push_str(&format!(
            "| ({id}) | {} | {} | {} |\n",
            generic_bundle(id),
            col(|r| r.collapse),
            col(|r| r.expansion)
        ));
    }
    s
}

fn theorem_a(q_max: u32, as_json: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let rows = theorem_a_table(q_max)?;
    if as_json {
        let arr = rows.iter().map(|r| json::theorem_row(r, expected_theorem_a(&r.family))).collect();
        emit(out, &Value::Array(arr))?;
    } else {
        write!(out, "{}", markdown_table(&rows))?;
    }
    let deviations: Vec<&TheoremARow> = rows.iter().filter(|r| !r.matches_expected()).collect();
    for r in &deviations {
        let (c, e) = expected_theorem_a(&r.family);
        writeln!(
            err,
            "deviation {}: collapse {} (expected {c}), expansion {} (expected {e})",
            r.family, r.collapse, r.expansion
        )?;
    }
    Ok(if deviations.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

fn verify(q_max: u32, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mismatches = verify_appendix(q_max)?;
    for m in &mismatches {
        writeln!(err, "{} {}:\n  - {}\n  + {}", m.family, m.check, m.expected, m.actual)?;
    }
    let doc = serde_json::json!({
        "q_max": q_max,
        "verified": mismatches.is_empty(),
        "mismatches": mismatches.iter().map(json::mismatch).collect::<Vec<_>>(),
    });
    emit(out, &doc)?;
    Ok(if mismatches.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
}

/// Sample points `lo + (hi − lo)·i/(steps − 1)`, endpoints included.
pub fn sample_points(lo: &Rational, hi: &Rational, steps: u32) -> Vec<Rational> {
    if steps == 1 {
        return vec![lo.clone()];
    }
    let last = Rational::from_integer((steps - 1).into());
    (0..steps)
        .map(|i| lo + (hi - lo) * Rational::from_integer(i.into()) / &last)
        .collect()
}

fn sample(
    src: &Source,
    (lo, hi): &(Rational, Rational),
    steps: u32,
    path: &Path,
    out: &mut dyn Write,
) -> Outcome {
    let (d, _) = resolve(src)?;
    if !lo.is_positive() || hi < lo {
        return Err(Failure::Usage("--t-range needs 0 < lo <= hi".into()));
    }
    if steps == 0 {
        return Err(Failure::Usage("--steps must be at least 1".into()));
    }
    let pkg = curvature_package(&d)?;
    let cols = [&pkg.scal, &pkg.q_curv, &pkg.alpha, &pkg.beta, &pkg.discriminant()].map(Clone::clone);
    let mut csv = String::from("t,scal,Q,alpha,beta,discriminant\n");
    for t in sample_points(lo, hi, steps) {
        csv.push_str(&decimal(&t));
        for p in &cols {
            csv.push(',');
            csv.push_str(&decimal(&p.eval(&t)?));
        }
        csv.push('\n');
    }
    std::fs::write(path, csv)?;
    emit(out, &serde_json::json!({ "out": path.display().to_string(), "rows": steps }))
}

/// 17 significant digits.
fn decimal(r: &Rational) -> String {
    format!("{:.16e}", r.to_f64().unwrap_or(f64::NAN))
}
