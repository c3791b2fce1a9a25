//! Command-line frontend. Exit codes: 0 success, 1 failed check, 2 usage or
//! argument error.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bwb::{a_via_bwb, a_via_bwb_expansion};
use crate::coproduct::{check_1236bis, check_cor44, check_primitive_shuffle, Verdict};
use crate::divisibility::{check_divisible, primitivity_check, wheel_substitute, Divisibility, WheelVariant};
use crate::dtseries::{a_d_enumerate, slope_bijection_check, wallcrossing_lhs, wallcrossing_rhs};
use crate::error::{Error, Result};
use crate::exactpoly::LaurentPoly;
use crate::limits;
use crate::schur::SchurExpansion;
use crate::selftest;
use crate::shuffle::{a_element, e_class, p_element, shuffle_mul, Kernel, ShuffleElement};
use crate::symfunc::{phi_consistency, primitives_dim, SymFunc};
use crate::weights::enumerate_magic_weights;

pub const MAX_VARS_ENV: &str = "BPSKALC_MAX_VARS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "bpskalc", about = "Exact K-theory computations for quasi-BPS categories of C^3")]
pub struct RunConfig {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[arg(long, default_value_t = 1, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Dv {
    #[arg(short = 'd')]
    pub d: usize,
    #[arg(short = 'v', allow_negative_numbers = true)]
    pub v: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// The symmetrized generator A_{d,v}.
    AElement(Dv),
    /// The K-class of the generating object.
    EClass(Dv),
    /// The element P_{nd,nv}.
    PElement {
        #[command(flatten)]
        dv: Dv,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Shuffle product of two polynomials read from files (JSON or text).
    ShuffleMul {
        #[arg(long, default_value = "xi")]
        kernel: String,
        #[arg(long)]
        lhs: std::path::PathBuf,
        #[arg(long)]
        rhs: std::path::PathBuf,
    },
    /// Alternating-sum expansion of A_{nd,nv}.
    BwbExpand {
        #[arg(short = 'n')]
        n: usize,
        #[command(flatten)]
        dv: Dv,
        #[arg(long)]
        compare_shuffle: bool,
    },
    /// Divides the K-class by the wheel factor.
    Divcheck(Dv),
    /// Wheel substitution on the K-class (1-based indices).
    Wheel {
        #[command(flatten)]
        dv: Dv,
        #[arg(long, value_delimiter = ',', required = true)]
        indices: Vec<usize>,
        #[arg(long, default_value = "q1")]
        variant: String,
    },
    /// Product/coproduct compatibility checks.
    CoproductCheck {
        #[arg(long)]
        mode: String,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[command(flatten)]
        dv: Dv,
        #[arg(short = 'a', default_value_t = 1)]
        a: usize,
        #[arg(short = 'b', default_value_t = 1)]
        b: usize,
        #[arg(short = 'c', default_value_t = 1)]
        c: usize,
        #[arg(short = 'e', default_value_t = 1)]
        e: usize,
    },
    /// Primitive space of symmetric functions, or its shuffle-side bound.
    Primitives {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        shuffle: bool,
        #[arg(short = 'd', default_value_t = 1)]
        d: usize,
        #[arg(short = 'v', default_value_t = 0, allow_negative_numbers = true)]
        v: i64,
    },
    /// Dominant integral weights in the polytope.
    MagicWeights {
        #[arg(short = 'd')]
        d: usize,
        #[arg(short = 'w', allow_negative_numbers = true)]
        w: i64,
    },
    /// Wall-crossing series and dimension counts.
    Dtseries {
        #[arg(short = 'N')]
        order: usize,
        #[arg(long)]
        check: bool,
    },
    /// Runs the acceptance suite.
    Selftest,
}

/// Output of a subcommand: printed text plus whether its check passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

fn poly_out(p: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(p).expect("polynomials serialize"),
    }
}

fn schur_out(s: &SchurExpansion, format: Format) -> String {
    match format {
        Format::Text => s
            .terms()
            .iter()
            .map(|(w, c)| format!("s{w:?}: {c}"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => serde_json::to_string(s).expect("expansions serialize"),
    }
}

fn verdict_out(v: &Verdict, format: Format) -> Report {
    let text = match (v, format) {
        (Verdict::Pass, Format::Text) => "Pass".to_string(),
        (Verdict::Fail(diff), Format::Text) => format!("Fail: difference {diff}"),
        (Verdict::Pass, Format::Json) => json!({"verdict": "pass"}).to_string(),
        (Verdict::Fail(diff), Format::Json) => json!({"verdict": "fail", "difference": diff}).to_string(),
    };
    Report { text, ok: v.passed() }
}

fn read_poly(path: &std::path::Path) -> Result<LaurentPoly> {
    let raw = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    if let Ok(p) = serde_json::from_str::<LaurentPoly>(&raw) {
        return Ok(p);
    }
    // text form: the variable count is the largest zK mentioned
    let nz = raw
        .split('z')
        .skip(1)
        .filter_map(|s| s.chars().take_while(|c| c.is_ascii_digit()).collect::<String>().parse::<usize>().ok())
        .max()
        .unwrap_or(0);
    LaurentPoly::parse(nz, &raw)
}

fn execute(cfg: &RunConfig) -> Result<Report> {
    let f = cfg.format;
    match &cfg.command {
        Command::AElement(dv) => Ok(Report::ok(poly_out(a_element(dv.d, dv.v)?.value(), f))),
        Command::EClass(dv) => Ok(Report::ok(poly_out(e_class(dv.d, dv.v)?.value(), f))),
        Command::PElement { dv, n } => Ok(Report::ok(poly_out(p_element(dv.d, dv.v, *n)?.value(), f))),
        Command::ShuffleMul { kernel, lhs, rhs } => {
            let kernel: Kernel = kernel.parse()?;
            let x = ShuffleElement::new(read_poly(lhs)?)?;
            let y = ShuffleElement::new(read_poly(rhs)?)?;
            Ok(Report::ok(poly_out(shuffle_mul(&x, &y, kernel)?.value(), f)))
        }
        Command::BwbExpand { n, dv, compare_shuffle } => {
            let exp = a_via_bwb_expansion(*n, dv.d, dv.v)?;
            let mut text = schur_out(&exp, f);
            let mut ok = true;
            if *compare_shuffle {
                ok = a_via_bwb(*n, dv.d, dv.v)? == a_element(n * dv.d, *n as i64 * dv.v)?.into_value();
                let _ = write!(text, "\ncomparison with shuffle: {}", if ok { "Pass" } else { "Fail" });
            }
            Ok(Report { text, ok })
        }
        Command::Divcheck(dv) => {
            let e = e_class(dv.d, dv.v)?.into_value();
            match check_divisible(&e, dv.d)? {
                Divisibility::Quotient(q) => {
                    let prim = primitivity_check(&q)?;
                    let text = match f {
                        Format::Text => format!("Quotient: {q}\nprimitivity: {prim:?}"),
                        Format::Json => json!({"quotient": q, "primitivity": format!("{prim:?}")}).to_string(),
                    };
                    Ok(Report::ok(text))
                }
                Divisibility::NotDivisible { factor, removed } => {
                    let text = match f {
                        Format::Text => format!("NotDivisible: factor {factor} after {removed} copies"),
                        Format::Json => json!({"not_divisible": factor.to_string(), "removed": removed}).to_string(),
                    };
                    Ok(Report { text, ok: false })
                }
            }
        }
        Command::Wheel { dv, indices, variant } => {
            let variant: WheelVariant = variant.parse()?;
            if indices.len() != 3 || indices.contains(&0) {
                return Err(Error::InvalidArgument("expected three 1-based indices i,j,k".into()));
            }
            let e = e_class(dv.d, dv.v)?.into_value();
            let out = wheel_substitute(&e, indices[0] - 1, indices[1] - 1, indices[2] - 1, variant)?;
            let ok = out.is_zero();
            Ok(Report { text: poly_out(&out, f), ok })
        }
        Command::CoproductCheck { mode, n, dv, a, b, c, e } => {
            let v = match mode.as_str() {
                "1236bis" => check_1236bis(*n, dv.d, dv.v, *a, *b)?,
                "cor44" => check_cor44(*a, *b, *c, *e, dv.d, dv.v)?,
                "primitive" => check_primitive_shuffle(*n, dv.d, dv.v)?,
                other => return Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
            };
            Ok(verdict_out(&v, f))
        }
        Command::Primitives { n, shuffle, d, v } => {
            if *shuffle {
                let report = phi_consistency(*n, *d, *v, cfg.seed)?;
                let text = match f {
                    Format::Text => format!(
                        "kernel dimensions {:?} at {} points: {}",
                        report.dims,
                        report.points.len(),
                        if report.passed() { "Pass" } else { "Fail" }
                    ),
                    Format::Json => json!({
                        "dims": report.dims,
                        "points": report.points.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
                        "pass": report.passed(),
                    })
                    .to_string(),
                };
                return Ok(Report { text, ok: report.passed() });
            }
            let (dim, basis) = primitives_dim(*n)?;
            let show = |s: &SymFunc| {
                s.terms()
                    .iter()
                    .map(|(p, c)| format!("{c}*e{p:?}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let text = match f {
                Format::Text => format!("dimension {dim}\n{}", basis.iter().map(show).collect::<Vec<_>>().join("\n")),
                Format::Json => json!({"dimension": dim, "basis": basis.iter().map(show).collect::<Vec<_>>()}).to_string(),
            };
            Ok(Report { text, ok: dim == 1 })
        }
        Command::MagicWeights { d, w } => {
            let ws = enumerate_magic_weights(*d, *w)?;
            let text = match f {
                Format::Text => ws.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("\n"),
                Format::Json => serde_json::to_string(&ws).expect("weights serialize"),
            };
            Ok(Report::ok(text))
        }
        Command::Dtseries { order, check } => {
            let lhs = wallcrossing_lhs(-1, *order)?;
            let rhs = wallcrossing_rhs(*order)?;
            let mut ok = true;
            let mut extra = String::new();
            if *check {
                ok = lhs == rhs;
                let enum_order = (*order).min(crate::dtseries::MAX_ENUMERATION_DEGREE);
                let counts = a_d_enumerate(enum_order)?;
                let exps = (1..=enum_order).map(|d| (d, -(d as i64))).collect();
                let prod = crate::dtseries::product_formula(&exps, crate::dtseries::VarSign::Plus, enum_order)?;
                ok &= counts == prod.coeffs();
                ok &= (1..=*order.max(&1)).all(|d| slope_bijection_check(d).unwrap_or(false));
                extra = format!("check: {}", if ok { "Pass" } else { "Fail" });
            }
            let join = |s: &crate::dtseries::PowerSeries| s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            let text = match f {
                Format::Text => {
                    let mut t = format!("lhs: {}\nrhs: {}", join(&lhs), join(&rhs));
                    if *check {
                        t.push('\n');
                        t.push_str(&extra);
                    }
                    t
                }
                Format::Json => json!({"lhs": lhs, "rhs": rhs, "check": check.then_some(ok)}).to_string(),
            };
            Ok(Report { text, ok })
        }
        Command::Selftest => {
            let outcomes = selftest::run_all(cfg.seed);
            let ok = outcomes.iter().all(|o| o.passed);
            let text = match f {
                Format::Text => outcomes.iter().map(|o| o.line()).collect::<Vec<_>>().join("\n"),
                Format::Json => json!(outcomes
                    .iter()
                    .map(|o| json!({"criterion": o.id, "title": o.title, "pass": o.passed, "detail": o.detail}))
                    .collect::<Vec<_>>())
                .to_string(),
            };
            Ok(Report { text, ok })
        }
    }
}

fn apply_limits() -> std::result::Result<(), String> {
    if let Ok(raw) = std::env::var(MAX_VARS_ENV) {
        let n: usize = raw.trim().parse().map_err(|_| format!("{MAX_VARS_ENV} must be a positive integer, got {raw:?}"))?;
        limits::set_max_vars(n);
    }
    Ok(())
}

/// Parses `argv`, runs the subcommand, prints its output, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Err(msg) = apply_limits() {
        eprintln!("{msg}");
        return 2;
    }
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot start worker pool: {e}");
            return 2;
        }
    };
    match pool.install(|| execute(&cfg)) {
        Ok(report) => {
            println!("{}", report.text);
            if report.ok { 0 } else { 1 }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) | Error::BoundExceeded { .. } | Error::AllEqual => 2,
                _ => 1,
            }
        }
    }
}
