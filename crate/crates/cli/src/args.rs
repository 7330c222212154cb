//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qcurv_core::algebra::parse_rational;
use qcurv_core::catalog::FamilyId;
use qcurv_core::{Rational, SubmersionData};

#[derive(Debug, Parser)]
#[command(name = "qcurv", version, about = "Exact Q-curvature analysis of canonical variations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
#[allow(clippy::large_enum_variant)]
pub enum Command {
    /// Print the curvature package as Laurent polynomials in t.
    Curvature {
        #[command(flatten)]
        source: Source,
        /// Also evaluate every quantity at this t.
        #[arg(long, value_name = "P/Q", value_parser = rational)]
        at: Option<Rational>,
    },
    /// Find bifurcation instants.
    Instants {
        #[command(flatten)]
        source: Source,
        /// A single base eigenvalue.
        #[arg(long, value_name = "P/Q", value_parser = rational, conflicts_with_all = ["eigs", "window"])]
        lambda: Option<Rational>,
        /// Use the first K nonzero base eigenvalues.
        #[arg(long, value_name = "K", required_unless_present = "lambda")]
        eigs: Option<u32>,
        /// Open window lo:hi for t; hi may be `inf`.
        #[arg(long, value_name = "LO:HI", value_parser = window, requires = "eigs")]
        window: Option<(Rational, Option<Rational>)>,
        /// Base spectrum scale:shift, giving λ_k = scale·k·(k+shift). Defaults to
        /// the known spectrum for a named family.
        #[arg(long, value_name = "SCALE:SHIFT", value_parser = spectrum, conflicts_with = "lambda")]
        spectrum: Option<(Rational, Rational)>,
        /// Refine every isolating interval to at most this width.
        #[arg(long, value_name = "P/Q", value_parser = rational)]
        width: Option<Rational>,
    },
    /// Reproduce the collapse/expansion classification of the Hopf fibrations.
    #[command(name = "theorem-a")]
    TheoremA {
        #[arg(long, value_name = "N", default_value_t = 30)]
        q_max: u32,
        /// Print the JSON array instead of the markdown table.
        #[arg(long)]
        json: bool,
    },
    /// Check the general formulas against the closed forms of every family.
    #[command(name = "verify-appendix")]
    VerifyAppendix {
        #[arg(long, value_name = "N", default_value_t = 50)]
        q_max: u32,
    },
    /// Classify the asymptotic behaviour of bifurcation instants.
    Asymptotics {
        #[command(flatten)]
        source: Source,
    },
    /// Write decimal samples of scal, Q, α, β and the discriminant to CSV.
    Sample {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "LO:HI", value_parser = range)]
        t_range: (Rational, Rational),
        #[arg(long, value_name = "N")]
        steps: u32,
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
pub struct Source {
    /// Hopf family.
    #[arg(long, value_parser = family)]
    pub family: Option<FamilyId>,
    /// Family parameter (defaults to the smallest admissible value).
    #[arg(long, requires = "family")]
    pub q: Option<u32>,
    /// Arbitrary data: n=..,l=..,zeta=..,eta=..,lamF=..,lamB=..
    #[arg(long, value_name = "SPEC", value_parser = custom, conflicts_with_all = ["family", "q"])]
    pub custom: Option<SubmersionData>,
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|()| format!("unknown family `{s}` (expected i, ii, iii or iv)"))
}

fn window(s: &str) -> Result<(Rational, Option<Rational>), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    let lo = rational(lo)?;
    let hi = match hi {
        "inf" => None,
        h => Some(rational(h)?),
    };
    Ok((lo, hi))
}

fn range(s: &str) -> Result<(Rational, Rational), String> {
    let (lo, hi) = s.split_once(':').ok_or("expected lo:hi")?;
    Ok((rational(lo)?, rational(hi)?))
}

fn spectrum(s: &str) -> Result<(Rational, Rational), String> {
    let (a, b) = s.split_once(':').ok_or("expected scale:shift")?;
    Ok((rational(a)?, rational(b)?))
}

fn custom(s: &str) -> Result<SubmersionData, String> {
    let mut n = None;
    let mut l = None;
    let mut vals: [Option<Rational>; 4] = Default::default();
    for part in s.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
        let slot = match key.trim() {
            "n" => {
                n = Some(value.parse::<u32>().map_err(|_| format!("bad n `{value}`"))?);
                continue;
            }
            "l" => {
                l = Some(value.parse::<u32>().map_err(|_| format!("bad l `{value}`"))?);
                continue;
            }
            "zeta" => 0,
            "eta" => 1,
            "lamF" => 2,
            "lamB" => 3,
            other => return Err(format!("unknown key `{other}`")),
        };
        if vals[slot].replace(rational(value)?).is_some() {
            return Err(format!("duplicate key `{key}`"));
        }
    }
    let missing = |k: &str| format!("missing key `{k}`");
    let [zeta, eta, lf, lb] = vals;
    SubmersionData::new(
        n.ok_or_else(|| missing("n"))?,
        l.ok_or_else(|| missing("l"))?,
        zeta.ok_or_else(|| missing("zeta"))?,
        eta.ok_or_else(|| missing("eta"))?,
        lf.ok_or_else(|| missing("lamF"))?,
        lb.ok_or_else(|| missing("lamB"))?,
    )
    .map_err(|e| e.to_string())
}
