//! The `weil` command line. [`run`] parses argv, dispatches, prints a text
//! report and optionally writes it as JSON.

mod report;
mod selftest;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclo::CyclotomicNumber;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::expansions::{
    parse_index, plus_space_check, verify_s_transform, verify_t_transform, Coeff,
    HarmonicExpansion, TransformReport, VectorForm,
};
use crate::io::{read_json, write_json, CycloJson, Expansion, ExpansionFile, JacobiFile};
use crate::isomap::{
    b_entry_bruteforce, b_entry_table, build_proof_matrices, combine_to_scalar,
    f_j_consistency_vector, gauss_sum_identity_check, rank_lemma_check, split_to_vector,
    split_to_vector_any_index,
};
use crate::jacobi::{
    casimir_reduced_fd, casimir_reduced_fd_fn, heat_operator_term_check, reconstruct,
    theta_decompose, theta_series_sum, thm2_inverse, thm2_map, JacobiForm,
};
use crate::metaplectic::Word;
use crate::weilrep::rho_eval;

pub use report::{CheckRecord, Mode, Report};

#[derive(Debug, Parser)]
#[command(
    name = "weil",
    version,
    about = "Weil representations, plus spaces and Jacobi forms"
)]
struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Builtin {
    /// θ(τ) = Σ q^{x²} at m = 1, k = 0
    Theta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum JacobiBuiltin {
    /// h_0 = q + 1000·Γ(-1/2, 4πy)q^{-1} at k = 2, m = 1
    Harmonic,
    /// y·q·θ_{1,0}, which is not annihilated
    Probe,
}

#[derive(Debug, Args, Serialize)]
struct Source {
    /// Expansion container to read.
    #[arg(long = "in", conflicts_with = "builtin")]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
    /// Upper end of the built-in window.
    #[arg(long, default_value_t = 400)]
    window: i64,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Exact ρ_L (or ρ̄_L) of a word in S, S', T, T', Z.
    Rho {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value = "")]
        word: String,
        #[arg(long)]
        dual: bool,
    },
    /// Milgram's formula for L = 2mZ with the given signature.
    Milgram {
        #[arg(long)]
        m: u64,
        #[arg(long, default_value = "2,1")]
        sig: String,
    },
    /// Plus-space expansion to vector-valued form.
    Split {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow m that is neither 1 nor prime.
        #[arg(long)]
        any_index: bool,
    },
    /// Vector-valued form to plus-space expansion.
    Combine {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an expansion with a certified tail bound.
    Eval {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "i")]
        tau: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Plus-space support condition.
    CheckPlus {
        #[command(flatten)]
        source: Source,
    },
    /// F(τ + 1) = ρ(T)F(τ) at the level of supports.
    #[command(name = "check-T")]
    #[serde(rename = "check-T")]
    CheckT {
        #[command(flatten)]
        source: Source,
    },
    /// F(-1/τ) = τ^w ρ(S)F(τ) at sample points.
    #[command(name = "check-S")]
    #[serde(rename = "check-S")]
    CheckS {
        #[command(flatten)]
        source: Source,
        /// Points separated by `;`, e.g. "i;1/3+i;-0.5+2i".
        #[arg(long, default_value = "i;1/3+i;-1/2+2i")]
        points: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// The f_j identity at sample points.
    FjCheck {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        j: u64,
        #[arg(long, default_value = "i")]
        points: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Exact rank of B = CA and the entry table.
    RankLemma {
        #[arg(long)]
        m: u64,
    },
    /// A·R against its Gauss-sum closed form.
    GaussCheck {
        #[arg(long)]
        m: u64,
    },
    /// One entry of B.
    BEntry {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, allow_hyphen_values = true)]
        gamma: i64,
    },
    /// Jacobi coefficients to theta components.
    JacobiDecompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Theta components to Jacobi coefficients.
    JacobiReconstruct {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Jacobi form to plus-space expansion, or back with --inverse.
    JacobiThm2 {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        inverse: bool,
    },
    /// Heat operator on one theta term, exactly.
    HeatCheck {
        #[arg(long)]
        m: u64,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Reduced Casimir operator by finite differences.
    CasimirCheck {
        #[arg(long = "in", conflicts_with = "builtin")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        builtin: Option<JacobiBuiltin>,
        #[arg(long, default_value = "i")]
        tau: String,
        #[arg(long, default_value = "0.1+0.05i")]
        z: String,
        #[arg(long, default_value_t = 1e-3)]
        h: f64,
        #[arg(long, default_value_t = 1e-4)]
        tol: f64,
        /// Theta series run over |r| ≤ radius.
        #[arg(long, default_value_t = 30)]
        radius: i64,
    },
    /// A quick seeded battery over every layer.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rho { .. } => "rho",
            Command::Milgram { .. } => "milgram",
            Command::Split { .. } => "split",
            Command::Combine { .. } => "combine",
            Command::Eval { .. } => "eval",
            Command::CheckPlus { .. } => "check-plus",
            Command::CheckT { .. } => "check-T",
            Command::CheckS { .. } => "check-S",
            Command::FjCheck { .. } => "fj-check",
            Command::RankLemma { .. } => "rank-lemma",
            Command::GaussCheck { .. } => "gauss-check",
            Command::BEntry { .. } => "b-entry",
            Command::JacobiDecompose { .. } => "jacobi-decompose",
            Command::JacobiReconstruct { .. } => "jacobi-reconstruct",
            Command::JacobiThm2 { .. } => "jacobi-thm2",
            Command::HeatCheck { .. } => "heat-check",
            Command::CasimirCheck { .. } => "casimir-check",
            Command::Selftest { .. } => "selftest",
        }
    }
}

/// Runs one invocation and returns the process exit code: 0 if every check
/// passes, 2 if one fails, 1 on usage or I/O errors.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            println!("{report}");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, report.to_json()) {
                    eprintln!("error: {e}");
                    return 1;
                }
            }
            if report.pass {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn params_of(cmd: &Command) -> Value {
    match serde_json::to_value(cmd) {
        Ok(Value::Object(map)) => map
            .into_iter()
            .next()
            .map(|(_, v)| v)
            .unwrap_or(Value::Null),
        _ => Value::Null,
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    let cmd = &cli.command;
    let mut rep = Report::new(cmd.name(), params_of(cmd));
    match cmd {
        Command::Rho { m, word, dual } => rho(&mut rep, *m, word, *dual)?,
        Command::Milgram { m, sig } => {
            let df = DiscriminantForm::with_signature(nonzero(*m)?, parse_sig(sig)?);
            let (l, r) = df.milgram_sides();
            rep.data("lhs", l.to_string());
            rep.data("rhs", r.to_string());
            rep.check(CheckRecord::exact("milgram", l == r));
        }
        Command::Split {
            input,
            m,
            k,
            out,
            any_index,
        } => {
            let f = load_scalar(input)?.0;
            let v = if *any_index {
                split_to_vector_any_index(&f, nonzero(*m)?, *k)?
            } else {
                split_to_vector(&f, nonzero(*m)?, *k)?
            };
            rep.data("dual", v.dual);
            rep.check(CheckRecord::exact("T support", verify_t_transform(&v)));
            rep.check(CheckRecord::exact(
                "combine(split f) = f",
                combine_to_scalar(&v, *k)? == f,
            ));
            if let Some(out) = out {
                write_json(out, &ExpansionFile::from_vector(&v, *k)?)?;
            }
        }
        Command::Combine { input, out } => {
            let (v, k) = load_vector(input)?;
            let f = combine_to_scalar(&v, k)?;
            let m = v.df.m;
            rep.data("terms", f.len());
            rep.check(CheckRecord::exact("plus space", plus_space_check(&f, m, k)));
            rep.check(CheckRecord::exact(
                "split(combine F) = F",
                split_to_vector_any_index(&f, m, k)? == v,
            ));
            if let Some(out) = out {
                write_json(out, &ExpansionFile::from_scalar(&f, m, k))?;
            }
        }
        Command::Eval { source, tau, tol } => {
            let tau = parse_point(tau)?;
            match load_source(source)? {
                Expansion::Scalar { f, .. } => {
                    let e = f.eval_point(tau, *tol)?;
                    rep.data("value", [e.value.re, e.value.im]);
                    rep.check(CheckRecord::below("tail bound", e.bound, *tol));
                }
                Expansion::Vector { f, .. } => {
                    let e = f.eval_point(tau, *tol)?;
                    let vals: Vec<[f64; 2]> = e.values.iter().map(|z| [z.re, z.im]).collect();
                    rep.data("values", vals);
                    rep.check(CheckRecord::below("tail bound", e.bound, *tol));
                }
            }
        }
        Command::CheckPlus { source } => match load_source(source)? {
            Expansion::Scalar { f, m, k } => {
                rep.check(CheckRecord::exact(
                    "plus space",
                    f.weight_num() == 2 * k + 1 && plus_space_check(&f, m, k),
                ));
            }
            Expansion::Vector { .. } => {
                return Err(WeilError::Invalid(
                    "check-plus takes a scalar expansion".into(),
                ))
            }
        },
        Command::CheckT { source } => {
            let (v, _) = to_vector(load_source(source)?)?;
            rep.check(CheckRecord::exact("T support", verify_t_transform(&v)));
        }
        Command::CheckS {
            source,
            points,
            tol,
        } => {
            let (v, _) = to_vector(load_source(source)?)?;
            let pts = parse_points(points)?;
            record_transform(&mut rep, "S", &verify_s_transform(&v, &pts, *tol)?);
        }
        Command::FjCheck {
            source,
            j,
            points,
            tol,
        } => {
            let (v, _) = to_vector(load_source(source)?)?;
            let pts = parse_points(points)?;
            let name = format!("f_{j}");
            record_transform(
                &mut rep,
                &name,
                &f_j_consistency_vector(&v, *j, &pts, *tol)?,
            );
        }
        Command::RankLemma { m } => {
            let r = rank_lemma_check(nonzero(*m)?)?;
            rep.data("rank", r.rank);
            rep.data("expected_rank", r.expected_rank);
            rep.data(
                "table_deviations",
                r.table_deviations
                    .iter()
                    .map(|d| json!({"beta": d.beta, "gamma": d.gamma, "table": d.table, "actual": d.actual}))
                    .collect::<Vec<_>>(),
            );
            rep.check(CheckRecord::exact("rank = 2φ(m)", r.rank_matches));
            rep.check(CheckRecord::exact(
                "leading 2φ(m) columns independent",
                r.leading_columns_independent,
            ));
            rep.check(CheckRecord::exact(
                "C·A equals the direct sums",
                r.product_matches_entries,
            ));
        }
        Command::GaussCheck { m } => {
            let m = nonzero(*m)?;
            rep.check(CheckRecord::exact(
                "A·R closed form",
                gauss_sum_identity_check(m),
            ));
        }
        Command::BEntry { m, beta, gamma } => {
            let m = nonzero(*m)?;
            let direct = b_entry_bruteforce(m, *beta, *gamma);
            let table = b_entry_table(m, *beta, *gamma);
            let n = 2 * m as i64;
            let pm = build_proof_matrices(m);
            let product =
                pm.b.get(beta.rem_euclid(n) as usize, gamma.rem_euclid(n) as usize)
                    .clone();
            rep.data("value", direct);
            rep.data("table", table);
            rep.data("table_agrees", table == direct);
            rep.check(CheckRecord::exact(
                "C·A entry equals the direct sum",
                product == CyclotomicNumber::from_integer(product.order(), direct),
            ));
        }
        Command::JacobiDecompose { input, out } => {
            let phi = read_json::<JacobiFile>(input)?.decode()?;
            let hs = theta_decompose(&phi)?;
            rep.check(CheckRecord::exact("T support", verify_t_transform(&hs)));
            rep.check(CheckRecord::exact(
                "reconstruct(decompose φ) = φ",
                reconstruct(&hs)? == phi,
            ));
            if let Some(out) = out {
                write_json(out, &ExpansionFile::from_vector(&hs, phi.k - 1)?)?;
            }
        }
        Command::JacobiReconstruct { input, out } => {
            let (hs, _) = load_vector(input)?;
            let phi = reconstruct(&hs)?;
            rep.check(CheckRecord::exact(
                "decompose(reconstruct h) = h",
                theta_decompose(&phi)? == hs,
            ));
            if let Some(out) = out {
                write_json(out, &JacobiFile::from_form(&phi))?;
            }
        }
        Command::JacobiThm2 {
            input,
            out,
            inverse,
        } => {
            if *inverse {
                let (f, m, k) = load_scalar(input)?;
                let phi = thm2_inverse(&f, m, k + 1)?;
                rep.check(CheckRecord::exact(
                    "map(inverse f) = f",
                    thm2_map(&phi)? == f,
                ));
                if let Some(out) = out {
                    write_json(out, &JacobiFile::from_form(&phi))?;
                }
            } else {
                let phi = read_json::<JacobiFile>(input)?.decode()?;
                let f = thm2_map(&phi)?;
                let k = phi.k - 1;
                rep.check(CheckRecord::exact(
                    "plus space",
                    plus_space_check(&f, phi.m, k),
                ));
                rep.check(CheckRecord::exact(
                    "split image = theta decomposition",
                    split_to_vector(&f, phi.m, k)? == theta_decompose(&phi)?,
                ));
                if let Some(out) = out {
                    write_json(out, &ExpansionFile::from_scalar(&f, phi.m, k))?;
                }
            }
        }
        Command::HeatCheck { m, r } => {
            let h = heat_operator_term_check(nonzero(*m)?, *r);
            rep.data("tau_part", h.tau_part.to_string());
            rep.data("z_part", h.z_part.to_string());
            rep.check(CheckRecord::exact("heat operator = 0", h.value == 0.into()));
        }
        Command::CasimirCheck {
            input,
            builtin,
            tau,
            z,
            h,
            tol,
            radius,
        } => {
            let (tau, z) = (parse_point(tau)?, parse_complex(z)?);
            let value = match (input, builtin) {
                (Some(path), _) => {
                    let phi = read_json::<JacobiFile>(path)?.decode()?;
                    casimir_reduced_fd(&phi, tau, z, *h, *radius)?
                }
                (None, Some(JacobiBuiltin::Probe)) => {
                    let r = *radius;
                    let probe = move |t: Complex64, zz: Complex64| {
                        t.im * (Complex64::new(0.0, 2.0 * std::f64::consts::PI) * t).exp()
                            * theta_series_sum(1, 0, t, zz, r)
                    };
                    casimir_reduced_fd_fn(probe, 2, 1, tau, z, *h)
                }
                (None, _) => casimir_reduced_fd(&harmonic_example(), tau, z, *h, *radius)?,
            };
            rep.data("value", [value.re, value.im]);
            rep.check(CheckRecord::below("reduced Casimir", value.norm(), *tol));
        }
        Command::Selftest { seed } => selftest::run(&mut rep, *seed)?,
    }
    Ok(rep)
}

fn rho(rep: &mut Report, m: u64, word: &str, dual: bool) -> Result<()> {
    let df = DiscriminantForm::new(nonzero(m)?);
    let w: Word = word.parse()?;
    let g = w.product();
    let rho = rho_eval(&df, &g, dual);
    let n = df.size();
    let exact: Vec<Vec<CycloJson>> = (0..n)
        .map(|i| (0..n).map(|j| CycloJson::from(rho.entry(i, j))).collect())
        .collect();
    let floats: Vec<Vec<[f64; 2]>> = rho
        .matrix
        .embed()
        .iter()
        .map(|row| row.iter().map(|z| [z.re, z.im]).collect())
        .collect();
    rep.data("element", json!({"matrix": g.matrix(), "sign": g.sign}));
    rep.data("matrix", exact);
    rep.data("embedding", floats);
    rep.check(CheckRecord::exact("unitary", rho.is_unitary()));
    Ok(())
}

fn record_transform(rep: &mut Report, label: &str, t: &TransformReport) {
    for p in &t.points {
        rep.check(CheckRecord::below(
            format!("{label} at τ = {}", fmt_point(p.tau)),
            p.deviation,
            t.tolerance,
        ));
    }
}

fn fmt_point(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

/// The harmonic example used by `casimir-check` without `--in`.
pub fn harmonic_example() -> JacobiForm {
    let mut phi = JacobiForm::new(2, 1, -4, 4);
    phi.set_plus(-4, 0, Coeff::int(1)).expect("valid key");
    phi.set_minus(4, 0, Coeff::int(1000)).expect("valid key");
    phi
}

fn nonzero(m: u64) -> Result<u64> {
    if m == 0 {
        Err(WeilError::Invalid("m must be positive".into()))
    } else {
        Ok(m)
    }
}

fn parse_sig(s: &str) -> Result<(u32, u32)> {
    let bad = || WeilError::Parse(format!("bad signature `{s}`, expected b+,b-"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn load_source(s: &Source) -> Result<Expansion> {
    match (&s.input, s.builtin) {
        (Some(p), _) => read_json::<ExpansionFile>(p)?.decode(),
        (None, Some(Builtin::Theta)) => {
            if s.window < 0 {
                return Err(WeilError::Invalid("window must be non-negative".into()));
            }
            Ok(Expansion::Scalar {
                f: HarmonicExpansion::theta(s.window),
                m: 1,
                k: 0,
            })
        }
        (None, None) => Err(WeilError::Invalid("need --in or --builtin".into())),
    }
}

fn load_scalar(p: &Path) -> Result<(HarmonicExpansion, u64, i64)> {
    match read_json::<ExpansionFile>(p)?.decode()? {
        Expansion::Scalar { f, m, k } => Ok((f, m, k)),
        Expansion::Vector { .. } => Err(WeilError::Invalid("expected a scalar expansion".into())),
    }
}

fn load_vector(p: &Path) -> Result<(VectorForm, i64)> {
    match read_json::<ExpansionFile>(p)?.decode()? {
        Expansion::Vector { f, k } => Ok((f, k)),
        Expansion::Scalar { .. } => Err(WeilError::Invalid("expected a vector expansion".into())),
    }
}

/// Scalar inputs go through `split_to_vector`.
fn to_vector(e: Expansion) -> Result<(VectorForm, i64)> {
    match e {
        Expansion::Scalar { f, m, k } => Ok((split_to_vector(&f, m, k)?, k)),
        Expansion::Vector { f, k } => Ok((f, k)),
    }
}

fn parse_real(s: &str) -> Result<f64> {
    let s = s.trim();
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    let r = parse_index(s)?;
    Ok(*r.numer() as f64 / *r.denom() as f64)
}

/// Parses `x+yi` forms such as `i`, `2i`, `1/3+i`, `-0.5+2i` or `0.3`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Complex64::new(parse_real(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other.strip_prefix('+').unwrap_or(other))?,
    };
    Ok(Complex64::new(parse_real(re)?, im))
}

pub fn parse_point(s: &str) -> Result<Complex64> {
    let z = parse_complex(s)?;
    if z.im > 0.0 {
        Ok(z)
    } else {
        Err(WeilError::NotInUpperHalfPlane(s.into()))
    }
}

/// `;`-separated points.
pub fn parse_points(s: &str) -> Result<Vec<Complex64>> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_point)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points() {
        let c = |re, im| Complex64::new(re, im);
        assert_eq!(parse_point("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_point("2i").unwrap(), c(0.0, 2.0));
        assert_eq!(parse_point("1/3+i").unwrap(), c(1.0 / 3.0, 1.0));
        assert_eq!(parse_point("0.3333+1i").unwrap(), c(0.3333, 1.0));
        assert_eq!(parse_point("-1/2 + 2i").unwrap(), c(-0.5, 2.0));
        assert_eq!(parse_point("1e-3+1e-1i").unwrap(), c(1e-3, 1e-1));
        assert_eq!(parse_complex("0.1-0.05i").unwrap(), c(0.1, -0.05));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert!(parse_point("0.5").is_err());
        assert!(parse_point("1-i").is_err());
        assert!(parse_point("x").is_err());
        assert_eq!(parse_points("i;1/3+i;").unwrap().len(), 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["weil", "milgram", "--m", "5"]), 0);
        assert_eq!(run(["weil", "milgram", "--m", "5", "--sig", "2,2"]), 2);
        assert_eq!(run(["weil", "milgram"]), 1);
        assert_eq!(run(["weil", "no-such-command"]), 1);
        assert_eq!(run(["weil", "heat-check", "--m", "3", "--r", "-7"]), 0);
    }

    #[test]
    fn params_are_echoed() {
        let cli = Cli::try_parse_from(["weil", "rho", "--m", "2", "--word", "S T"]).unwrap();
        let p = params_of(&cli.command);
        assert_eq!(p["m"], 2);
        assert_eq!(p["word"], "S T");
        assert_eq!(cli.command.name(), "rho");
    }
}
