//! Command-line front end: single-conic queries (classify, spectrum, arc),
//! oracle queries (sk-count, parabola-count, nbeta, normalform), plane
//! dumps, and the batch census/verify runners.
//!
//! Exit codes: 0 success, 1 at least one check failed, 2 configuration or
//! usage error, 3 a check exceeded its wall-clock budget.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use hallplane::census::{
    all_check_names, emit_open_question_table, run_census, write_open_question_csv,
    write_results_csv, CensusConfig, CensusError, CensusReport, ReportFormat,
};
use hallplane::conic::ConicError;
use hallplane::field::FieldError;
use hallplane::inherited::{arc_report, secant_spectrum};
use hallplane::oracles::{
    count_rational_roots_nbeta, count_three_secant_parabolas, normalize_quadratic, NormalizeError,
};
use hallplane::plane::{AffinePoint, HallPlane, ProjPoint};
use hallplane::{Conic, Field, FieldSpec};

#[derive(Parser)]
#[command(
    name = "hallcensus",
    version,
    about = "Exact computations with conics inherited by Hall planes",
    long_about = "Queries and batch verification for conics of PG(2, q^2) viewed as point \
                  sets of the Hall plane of order q^2. Field selection: --p/--k (canonical \
                  modulus), an explicit --modulus, or a --field-file JSON description."
)]
struct Cli {
    #[command(flatten)]
    field: FieldArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic of the coordinate field (a prime)
    #[arg(long, global = true)]
    p: Option<u32>,
    /// Subfield degree: the plane has order q^2 with q = p^k
    #[arg(long, global = true, default_value_t = 1)]
    k: u32,
    /// Irreducible modulus of GF(q^2) over GF(p), constant term first
    /// (2k+1 comma-separated coefficients)
    #[arg(long, global = true, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    /// JSON field description {"p":..,"k":..,"modulus":[..]}
    #[arg(long, global = true, value_name = "FILE")]
    field_file: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Report format for persisted artifacts
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<ReportFormat>,
    /// Write artifacts into this directory instead of stdout
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Worker threads for batch runs (0 = auto, 1 = serial)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Suppress generation timestamps and wall-time columns, making
    /// repeated runs byte-identical
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Per-check wall-clock budget in seconds
    #[arg(long, global = true)]
    budget: Option<u64>,
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    s.parse()
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a conic: kind, infinite points, nucleus, derivation-set counts
    Classify {
        /// Conic literal: `Q: cxx,cxy,cyy,cxz,cyz,czz` or a named family
        /// like `parabola(u,v,w)`, `hyperbola_xy(d)`, `centered(a,b,w)`,
        /// `normalform(c,u,v,w)`
        conic: String,
    },
    /// Secant spectrum of an inherited conic over the new lines
    Spectrum { conic: String },
    /// Arc/completeness analysis of the inherited point set
    Arc {
        conic: String,
        /// Analyze the affine points only, without the surviving
        /// directions at infinity
        #[arg(long)]
        affine_only: bool,
    },
    /// Inscribed-triangle histograms for the subfield conic X^2 = YZ
    SkCount,
    /// Parabolas meeting a new line exactly in a fixed non-collinear triple
    ParabolaCount,
    /// Rational-root counts of the cubic governing 3-secant lines (even q)
    Nbeta {
        /// A single beta (element literal); omit for the full tally
        beta: Option<String>,
    },
    /// Normalize X^2 + beta X + gamma by a Möbius substitution (even q)
    Normalform { beta: String, gamma: String },
    /// Run named verification checks over one or more field orders
    Census {
        /// JSON config file; command-line field/check flags are ignored
        #[arg(long, value_name = "FILE", conflicts_with_all = ["q", "checks", "families"])]
        config: Option<PathBuf>,
        /// Plane orders q (prime powers), e.g. --q 3,4,5
        #[arg(long, value_delimiter = ',')]
        q: Vec<u32>,
        /// Check names, or `all`; `hallcensus census --list` shows them
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        /// Restrict to conic families (parabola, hyperbola-xy,
        /// normal-form, centered, mixed)
        #[arg(long, value_delimiter = ',')]
        families: Vec<String>,
        /// List the registered checks and exit
        #[arg(long)]
        list: bool,
    },
    /// Run the full registered suite and print a pass/fail matrix
    Verify {
        /// Plane orders q (prime powers), e.g. --q 2,3,4,5,7,8,9
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
    /// Experimental spectrum table for ellipses/hyperbolas off D (odd q)
    OpenQuestion {
        /// Plane orders q (odd prime powers)
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<u32>,
    },
    /// Dump every line of the Hall plane as JSON Lines
    Lines {
        /// Include the full point list of every line
        #[arg(long)]
        emit_points: bool,
    },
}

// ---------------------------------------------------------------------------
// Error plumbing: config/usage problems exit 2, budget overruns exit 3
// ---------------------------------------------------------------------------

enum AppError {
    Census(CensusError),
    Msg(String),
}

impl fmt::Display for AppError {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Census(e) => write!(w, "{e}"),
            AppError::Msg(m) => write!(w, "{m}"),
        }
    }
}

impl AppError {
    fn exit_code(&self) -> ExitCode {
        match self {
            AppError::Census(CensusError::Timeout { .. }) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}

impl From<CensusError> for AppError {
    fn from(e: CensusError) -> AppError {
        AppError::Census(e)
    }
}

impl From<FieldError> for AppError {
    fn from(e: FieldError) -> AppError {
        AppError::Msg(e.to_string())
    }
}

impl From<ConicError> for AppError {
    fn from(e: ConicError) -> AppError {
        AppError::Msg(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> AppError {
        AppError::Msg(format!("io error: {e}"))
    }
}

impl From<serde_json::Error> for AppError {
    fn from(e: serde_json::Error) -> AppError {
        AppError::Msg(format!("json error: {e}"))
    }
}

fn msg(m: impl Into<String>) -> AppError {
    AppError::Msg(m.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

// ---------------------------------------------------------------------------
// Field resolution
// ---------------------------------------------------------------------------

fn resolve_field(fa: &FieldArgs) -> Result<Field, AppError> {
    if let Some(path) = &fa.field_file {
        return Ok(Field::from_spec(&FieldSpec::load(path)?)?);
    }
    let p = fa
        .p
        .ok_or_else(|| msg("a field is required: pass --p (and --k), or --field-file"))?;
    match &fa.modulus {
        Some(modulus) => Ok(Field::from_spec(&FieldSpec {
            p,
            k: fa.k,
            modulus: modulus.clone(),
        })?),
        None => Ok(Field::new(p, fa.k)?),
    }
}

/// Factor a prime power q = p^k into the field spec of GF(q^2).
fn q_to_spec(q: u32) -> Result<FieldSpec, AppError> {
    if q < 2 {
        return Err(msg(format!("q must be a prime power >= 2, got {q}")));
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2 has a prime factor");
    let mut rest = q;
    let mut k = 0;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(msg(format!("q must be a prime power, got {q} = {p}^{k} * {rest}")));
    }
    Ok(Field::new(p, k)?.spec())
}

fn specs_from_q(qs: &[u32]) -> Result<Vec<FieldSpec>, AppError> {
    qs.iter().map(|&q| q_to_spec(q)).collect()
}

// ---------------------------------------------------------------------------
// Output helpers: JSON little-endian coordinate lists for field elements
// ---------------------------------------------------------------------------

fn el_json(f: &Field, x: hallplane::FieldElement) -> serde_json::Value {
    json!(f.coords(x))
}

fn proj_json(f: &Field, p: &ProjPoint) -> serde_json::Value {
    json!([f.coords(p.x()), f.coords(p.y()), f.coords(p.z())])
}

fn affine_json(f: &Field, p: &AffinePoint) -> serde_json::Value {
    json!([f.coords(p.x), f.coords(p.y)])
}

fn extension_json(f: &Field, c: &hallplane::inherited::ExtensionCandidate) -> serde_json::Value {
    use hallplane::inherited::ExtensionCandidate::*;
    use hallplane::HallDirection;
    match c {
        Affine(p) => json!({"affine": affine_json(f, p)}),
        AtInfinity(HallDirection::OldSlope(m)) => json!({"old_slope": el_json(f, *m)}),
        AtInfinity(HallDirection::NewClass(l)) => json!({"new_class": el_json(f, *l)}),
    }
}

/// Write `content` to `<out>/<name>` when --out is given, else to stdout.
fn emit(out: &Option<PathBuf>, name: &str, content: &str) -> Result<(), AppError> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join(name), content)?;
            Ok(())
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit_value(out: &Option<PathBuf>, name: &str, value: &serde_json::Value) -> Result<(), AppError> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(out, name, &text)
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<ExitCode, AppError> {
    match cli.cmd {
        Cmd::Classify { ref conic } => {
            let f = resolve_field(&cli.field)?;
            let plane = HallPlane::new(&f);
            let c = Conic::parse(&f, conic)?;
            let cls = c.classify();
            let counts = c.classify_derivation_set(plane.derivation_set());
            let infinite: Vec<serde_json::Value> = cls
                .infinite_points
                .iter()
                .zip(&cls.infinite_in_d)
                .map(|(p, &ind)| json!({"point": proj_json(&f, p), "in_derivation_set": ind}))
                .collect();
            let value = json!({
                "schema": 1,
                "q": f.q(),
                "conic": c.literal(),
                "kind": cls.kind.name(),
                "affine_points": c.affine_points().len(),
                "infinite_points": infinite,
                "conjugate_infinite_pair": cls.conjugate_infinite_pair,
                "nucleus": cls.nucleus.as_ref().map(|n| json!({
                    "point": proj_json(&f, n),
                    "in_derivation_set": cls.nucleus_in_d,
                })),
                "derivation_counts": {
                    "external": counts.external,
                    "internal": counts.internal,
                    "on": counts.on,
                },
            });
            emit_value(&cli.output.out, "classify.json", &value)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Spectrum { ref conic } => {
            let f = resolve_field(&cli.field)?;
            let plane = HallPlane::new(&f);
            let c = Conic::parse(&f, conic)?;
            let sp = secant_spectrum(&plane, &c);
            match cli.output.format.unwrap_or_default() {
                ReportFormat::Json => {
                    let value = json!({
                        "schema": 1,
                        "q": f.q(),
                        "conic": c.literal(),
                        "a": sp.a,
                        "support": sp.support(),
                        "triples": sp.triples,
                        "max_line": sp.max_line,
                    });
                    emit_value(&cli.output.out, "spectrum.json", &value)?;
                }
                ReportFormat::Csv => {
                    let mut text = String::from("schema,stat,value\n");
                    for (i, n) in sp.a.iter().enumerate() {
                        text.push_str(&format!("1,a{i},{n}\n"));
                    }
                    text.push_str(&format!("1,triples,{}\n1,max_line,{}\n", sp.triples, sp.max_line));
                    emit(&cli.output.out, "spectrum.csv", &text)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Arc {
            ref conic,
            affine_only,
        } => {
            let f = resolve_field(&cli.field)?;
            let plane = HallPlane::new(&f);
            let c = Conic::parse(&f, conic)?;
            // infinite points off D survive derivation as old-slope
            // directions; points in D do not survive as points at all
            let dirs: Vec<_> = if affine_only {
                Vec::new()
            } else {
                c.classify()
                    .infinite_points
                    .iter()
                    .filter(|p| !plane.derivation_set().contains(p))
                    .map(|p| {
                        let slope = f.div(p.y(), p.x());
                        hallplane::HallDirection::OldSlope(slope)
                    })
                    .collect()
            };
            let rep = arc_report(&plane, c.affine_points(), &dirs);
            let value = json!({
                "schema": 1,
                "q": f.q(),
                "conic": c.literal(),
                "size": rep.size,
                "is_arc": rep.is_arc,
                "is_complete": rep.is_complete,
                "max_line_hits": rep.max_line_hits,
                "extension_points": rep.extension_points.iter()
                    .map(|c| extension_json(&f, c)).collect::<Vec<_>>(),
                "hyperoval_reachable": rep.hyperoval_reachable,
                "directions_included": !affine_only,
            });
            emit_value(&cli.output.out, "arc.json", &value)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::SkCount => {
            let f = resolve_field(&cli.field)?;
            let checks = if f.has_even_order() {
                vec!["sk_triangles_even".to_string()]
            } else {
                vec!["sk_triangles_odd".to_string()]
            };
            let mut cfg = CensusConfig::new(vec![f.spec()]);
            cfg.checks = checks;
            apply_output(&mut cfg, &cli.output);
            let report = run_census(&cfg)?;
            finish_report(&report, &cli.output, "sk-count")
        }

        Cmd::ParabolaCount => {
            let f = resolve_field(&cli.field)?;
            if f.has_even_order() {
                return Err(msg(format!(
                    "the three-point pencil count needs odd q; q={} is even",
                    f.q()
                )));
            }
            let plane = HallPlane::new(&f);
            let o = f.zero();
            let m = f.neg(f.one());
            let triple = [
                AffinePoint::new(o, o),
                AffinePoint::new(m, o),
                AffinePoint::new(o, m),
            ];
            let line = plane.hall_line_through(triple[0], triple[1]);
            let count = count_three_secant_parabolas(&plane, line, triple).count as u64;
            let expected = 3 * (f.q() as u64 - 1);
            let value = json!({
                "schema": 1,
                "q": f.q(),
                "triple": triple.iter().map(|p| affine_json(&f, p)).collect::<Vec<_>>(),
                "count": count,
                "expected": expected,
                "pass": count == expected,
            });
            emit_value(&cli.output.out, "parabola-count.json", &value)?;
            Ok(if count == expected {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Cmd::Nbeta { ref beta } => {
            let f = resolve_field(&cli.field)?;
            if !f.has_even_order() {
                return Err(msg(format!(
                    "the cubic root-count analysis needs even q; q={} is odd",
                    f.q()
                )));
            }
            let value = match beta {
                Some(lit) => {
                    let b = f.parse_element(lit)?;
                    if b.is_zero() {
                        return Err(msg("beta must be nonzero"));
                    }
                    json!({
                        "schema": 1,
                        "q": f.q(),
                        "beta": el_json(&f, b),
                        "rational_roots": count_rational_roots_nbeta(&f, b),
                    })
                }
                None => {
                    let mut tally: std::collections::BTreeMap<u32, u64> =
                        std::collections::BTreeMap::new();
                    for b in f.elements().skip(1) {
                        *tally.entry(count_rational_roots_nbeta(&f, b)).or_insert(0) += 1;
                    }
                    json!({
                        "schema": 1,
                        "q": f.q(),
                        "branch": if f.q_is_square() { "square" } else { "non-square" },
                        "tally": tally.iter()
                            .map(|(k, v)| (k.to_string(), json!(v)))
                            .collect::<serde_json::Map<_, _>>(),
                    })
                }
            };
            emit_value(&cli.output.out, "nbeta.json", &value)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Normalform {
            ref beta,
            ref gamma,
        } => {
            let f = resolve_field(&cli.field)?;
            let b = f.parse_element(beta)?;
            let g = f.parse_element(gamma)?;
            let value = match normalize_quadratic(&f, b, g) {
                Ok((map, w)) => json!({
                    "schema": 1,
                    "q": f.q(),
                    "beta": el_json(&f, b),
                    "gamma": el_json(&f, g),
                    "outcome": "normalized",
                    "w": el_json(&f, w),
                    "map": {
                        "a": el_json(&f, map.a),
                        "b": el_json(&f, map.b),
                        "c": el_json(&f, map.c),
                        "d": el_json(&f, map.d),
                    },
                }),
                Err(NormalizeError::OddCharacteristic) => {
                    return Err(msg(format!(
                        "normalization is defined for even q; q={} is odd",
                        f.q()
                    )))
                }
                Err(e) => {
                    let outcome = match e {
                        NormalizeError::RepeatedRoot => "repeated-root",
                        NormalizeError::RootInSubfield => "root-in-subfield",
                        NormalizeError::FrobeniusConjugatePair => "frobenius-pair",
                        NormalizeError::OddCharacteristic => unreachable!(),
                    };
                    json!({
                        "schema": 1,
                        "q": f.q(),
                        "beta": el_json(&f, b),
                        "gamma": el_json(&f, g),
                        "outcome": outcome,
                    })
                }
            };
            emit_value(&cli.output.out, "normalform.json", &value)?;
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Census {
            ref config,
            ref q,
            ref checks,
            ref families,
            list,
        } => {
            if list {
                for def in hallplane::census::registry() {
                    println!("{:<28} [{}] {}", def.name, def.family, def.summary);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let mut cfg = match config {
                Some(path) => {
                    let text = fs::read_to_string(path)?;
                    serde_json::from_str::<CensusConfig>(&text)?
                }
                None => {
                    let fields = if q.is_empty() {
                        vec![resolve_field(&cli.field)?.spec()]
                    } else {
                        specs_from_q(q)?
                    };
                    let mut cfg = CensusConfig::new(fields);
                    cfg.checks = if checks.iter().any(|c| c == "all") {
                        all_check_names()
                    } else {
                        checks.clone()
                    };
                    cfg.families = families.clone();
                    cfg
                }
            };
            apply_output(&mut cfg, &cli.output);
            cfg.validate().map_err(AppError::Census)?;
            let report = run_census(&cfg)?;
            finish_report(&report, &cli.output, "census")
        }

        Cmd::Verify { ref q } => {
            let specs = specs_from_q(q)?;
            let mut cfg = CensusConfig::new(specs);
            cfg.checks = all_check_names();
            apply_output(&mut cfg, &cli.output);
            let report = run_census(&cfg)?;
            // pass/fail matrix on stdout, artifacts (if any) via --out
            for r in &report.results {
                let mark = if r.skipped {
                    "skip"
                } else if r.pass {
                    "pass"
                } else {
                    "FAIL"
                };
                let tail = if r.skipped {
                    format!(" ({})", r.note)
                } else if !r.pass {
                    format!(" expected {} got {}", r.expected, r.actual)
                } else {
                    String::new()
                };
                println!("{mark}  q={:<3} {:<28} {}{}", r.q, r.check, r.conic, tail);
            }
            println!(
                "verify: {} passed, {} failed, {} skipped over q = {:?}",
                report.passed, report.failed, report.skipped, report.q_values
            );
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }

        Cmd::OpenQuestion { ref q } => {
            let specs = specs_from_q(q)?;
            let fields: Vec<Field> = specs
                .iter()
                .map(Field::from_spec)
                .collect::<Result<_, _>>()?;
            let budget =
                std::time::Duration::from_secs(cli.output.budget.unwrap_or(
                    hallplane::census::DEFAULT_BUDGET_SECS,
                ));
            let rows = emit_open_question_table(&fields, budget)?;
            match cli.output.format.unwrap_or_default() {
                ReportFormat::Csv => {
                    let mut buf = Vec::new();
                    write_open_question_csv(&rows, &mut buf)
                        .map_err(AppError::Census)?;
                    emit(
                        &cli.output.out,
                        "open-question.csv",
                        &String::from_utf8(buf).expect("csv writer emits utf-8"),
                    )?;
                }
                ReportFormat::Json => {
                    let value = json!({"schema": 1, "rows": rows});
                    emit_value(&cli.output.out, "open-question.json", &value)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Cmd::Lines { emit_points } => {
            let f = resolve_field(&cli.field)?;
            let plane = HallPlane::new(&f);
            match &cli.output.out {
                Some(dir) => {
                    fs::create_dir_all(dir)?;
                    let mut file = fs::File::create(dir.join("lines.jsonl"))?;
                    plane.dump_lines(emit_points, &mut file)?;
                }
                None => {
                    let stdout = std::io::stdout();
                    let mut lock = stdout.lock();
                    plane.dump_lines(emit_points, &mut lock)?;
                    lock.flush()?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Fold the global output flags into a census config; flags that the user
/// did not pass leave config-file values untouched.
fn apply_output(cfg: &mut CensusConfig, out: &OutputArgs) {
    if let Some(format) = out.format {
        cfg.format = format;
    }
    if let Some(dir) = &out.out {
        cfg.out_dir = Some(dir.clone());
    }
    if let Some(jobs) = out.jobs {
        cfg.jobs = jobs;
    }
    if let Some(budget) = out.budget {
        cfg.budget_secs = budget;
    }
    if out.no_timestamp {
        cfg.timestamp = false;
    }
}

/// Print or persist a census report and turn failures into exit code 1.
fn finish_report(
    report: &CensusReport,
    out: &OutputArgs,
    label: &str,
) -> Result<ExitCode, AppError> {
    // run_census already persisted artifacts when out_dir was set
    if out.out.is_none() {
        match out.format.unwrap_or_default() {
            ReportFormat::Json => {
                let mut text = serde_json::to_string_pretty(report)?;
                text.push('\n');
                print!("{text}");
            }
            ReportFormat::Csv => {
                let mut buf = Vec::new();
                write_results_csv(report, &mut buf).map_err(AppError::Census)?;
                print!("{}", String::from_utf8(buf).expect("csv writer emits utf-8"));
            }
        }
    }
    eprintln!(
        "{label}: {} passed, {} failed, {} skipped",
        report.passed, report.failed, report.skipped
    );
    Ok(if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
