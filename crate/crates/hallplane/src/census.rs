//! Batch verification census: every closed-form count in the library's
//! scope, re-derived by exhaustive enumeration at concrete small q and
//! compared exactly.
//!
//! Checks live in a registry keyed by stable names. Each carries the
//! hypothesis guard of the statement it verifies (parity of q, q > 3,
//! square/non-square q, sweep-scale limits); a requested q outside the
//! hypotheses produces a skip result with the reason instead of a silent
//! misapplication. Results are plain rows (check, q, conic, expected,
//! actual, pass) suitable for JSON or CSV persistence; reruns with the
//! same config reproduce output byte-for-byte once timestamps are
//! suppressed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant, SystemTime};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conic::{Conic, ConicKind};
use crate::field::{Field, FieldElement, FieldError, FieldSpec};
use crate::inherited::{
    arc_report, baer_conic_meeting, collinear_triples_direct, direction_of, old_line_counts,
    per_point_line_distribution, secant_spectrum, three_secant_tangent_witness, HallDirection,
};
use crate::oracles::{
    count_inscribed_triangles, count_rational_roots_nbeta, count_three_secant_parabolas,
    fourth_rational_point, normalize_quadratic, subplane_tangent_count, NormalizeError,
};
use crate::plane::{subplane_points, AffinePoint, HallLine, HallPlane, ProjLine, ProjPoint};

// ============================================================================
// Errors, budgets
// ============================================================================

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("unknown check name `{0}`")]
    UnknownCheck(String),
    #[error("unknown conic family `{0}`")]
    UnknownFamily(String),
    #[error("check `{check}` at q={q} exceeded its {budget_secs}s wall-clock budget")]
    Timeout {
        check: String,
        q: u32,
        budget_secs: u64,
    },
    #[error("the open-question table is defined for odd q only; got q={0}")]
    EvenOrder(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Cooperative per-check wall-clock limit, polled inside sweep loops.
#[derive(Clone)]
pub struct Deadline {
    start: Instant,
    budget: Duration,
    check: &'static str,
    q: u32,
}

impl Deadline {
    fn new(check: &'static str, q: u32, budget: Duration) -> Deadline {
        Deadline {
            start: Instant::now(),
            budget,
            check,
            q,
        }
    }

    pub fn poll(&self) -> Result<(), CensusError> {
        if self.start.elapsed() > self.budget {
            return Err(CensusError::Timeout {
                check: self.check.to_string(),
                q: self.q,
                budget_secs: self.budget.as_secs(),
            });
        }
        Ok(())
    }
}

pub const DEFAULT_BUDGET_SECS: u64 = 60;

// ============================================================================
// Config, results, report
// ============================================================================

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<ReportFormat, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(format!("unknown format `{other}` (expected json or csv)")),
        }
    }
}

fn default_budget() -> u64 {
    DEFAULT_BUDGET_SECS
}
fn default_timestamp() -> bool {
    true
}

/// What to run: which fields, which named checks (empty list = none, by
/// design — `all_check_names` expands to the full suite), an optional
/// conic-family restriction, and output plumbing.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CensusConfig {
    pub fields: Vec<FieldSpec>,
    #[serde(default)]
    pub checks: Vec<String>,
    /// Restrict to checks exercising these conic families; empty = no
    /// restriction. Known families: parabola, hyperbola-xy, normal-form,
    /// centered, mixed.
    #[serde(default)]
    pub families: Vec<String>,
    #[serde(default)]
    pub out_dir: Option<PathBuf>,
    #[serde(default)]
    pub format: ReportFormat,
    /// Worker threads; 0 = library default, 1 = serial.
    #[serde(default)]
    pub jobs: usize,
    #[serde(default = "default_budget")]
    pub budget_secs: u64,
    /// When false, the report omits its generation time and zeroes the
    /// per-row wall times, making output byte-reproducible.
    #[serde(default = "default_timestamp")]
    pub timestamp: bool,
}

impl CensusConfig {
    pub fn new(fields: Vec<FieldSpec>) -> CensusConfig {
        CensusConfig {
            fields,
            checks: Vec::new(),
            families: Vec::new(),
            out_dir: None,
            format: ReportFormat::Json,
            jobs: 0,
            budget_secs: DEFAULT_BUDGET_SECS,
            timestamp: true,
        }
    }

    /// Reject unknown check and family names. Called by `run_census`, and
    /// directly by config parsers that want early errors.
    pub fn validate(&self) -> Result<(), CensusError> {
        for name in &self.checks {
            if !REGISTRY.iter().any(|c| c.name == name) {
                return Err(CensusError::UnknownCheck(name.clone()));
            }
        }
        for fam in &self.families {
            if !FAMILIES.contains(&fam.as_str()) {
                return Err(CensusError::UnknownFamily(fam.clone()));
            }
        }
        Ok(())
    }
}

/// One verified statement at one q: the closed-form value and the
/// enumerated value, compared exactly. Inequality statements render the
/// declared relation inside `expected` (e.g. `>= 1`), so such rows are
/// self-marking. Skipped rows carry the hypothesis-guard reason in `note`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub q: u32,
    pub conic: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub skipped: bool,
    #[serde(default)]
    pub note: String,
    pub millis: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub schema: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
    pub q_values: Vec<u32>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub results: Vec<CheckResult>,
}

impl CensusReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| !r.pass)
    }
}

// ============================================================================
// Check registry
// ============================================================================

pub const FAMILIES: &[&str] = &["parabola", "hyperbola-xy", "normal-form", "centered", "mixed"];

pub struct CheckDef {
    pub name: &'static str,
    pub family: &'static str,
    pub summary: &'static str,
    guard: fn(&Field) -> Option<String>,
    run: fn(&mut Ctx) -> Result<(), CensusError>,
}

pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

pub fn all_check_names() -> Vec<String> {
    REGISTRY.iter().map(|c| c.name.to_string()).collect()
}

static REGISTRY: [CheckDef; 22] = [
    CheckDef {
        name: "hall_axioms",
        family: "mixed",
        summary: "affine plane axioms hold and the plane has (q+1)q^2 new lines",
        guard: any_q,
        run: chk_hall_axioms,
    },
    CheckDef {
        name: "sk_triangles_even",
        family: "mixed",
        summary: "Segre-Korchmaros: one inscribed triangle per triple on a non-tangent line (even q)",
        guard: even_q,
        run: chk_sk_triangles_even,
    },
    CheckDef {
        name: "sk_triangles_odd",
        family: "mixed",
        summary: "Segre-Korchmaros: tangent triples give 1 triangle, non-tangent give 2 or 0 by external parity (odd q)",
        guard: odd_q,
        run: chk_sk_triangles_odd,
    },
    CheckDef {
        name: "a3_a4_parabola_odd",
        family: "parabola",
        summary: "parabola with infinite point off D: a3=(q^2-1)/2, a4=(q-3)(q^2-1)/24, a3+4a4=C(q+1,3)",
        guard: odd_q,
        run: chk_a3_a4_parabola_odd,
    },
    CheckDef {
        name: "three_secant_pencil",
        family: "parabola",
        summary: "exactly 3(q-1) parabolas meet a new line precisely in a given non-collinear triple",
        guard: odd_q,
        run: chk_three_secant_pencil,
    },
    CheckDef {
        name: "parabola_support_even",
        family: "parabola",
        summary: "even q, infinite point and nucleus off D: new lines meet the parabola in 0,1,2 or 4 points",
        guard: even_q,
        run: chk_parabola_support_even,
    },
    CheckDef {
        name: "parabola_conjugate_spectrum",
        family: "parabola",
        summary: "even non-square q, conjugate infinite point and nucleus: full spectrum and per-point line distribution",
        guard: even_nonsquare_q,
        run: chk_parabola_conjugate_spectrum,
    },
    CheckDef {
        name: "parabola_coset_lines",
        family: "parabola",
        summary: "even q, Y=X^2: exactly q parallel q-secant new lines, all Baer subconic traces",
        guard: even_q,
        run: chk_parabola_coset_lines,
    },
    CheckDef {
        name: "parabola_square_oval",
        family: "parabola",
        summary: "even square q: the parabola plus its infinite point is an oval iff point and nucleus are conjugate",
        guard: even_square_q,
        run: chk_parabola_square_oval,
    },
    CheckDef {
        name: "nbeta_roots",
        family: "mixed",
        summary: "cubic root counts N_beta over all beta, split by square/non-square q (even q)",
        guard: even_q,
        run: chk_nbeta_roots,
    },
    CheckDef {
        name: "okp_hyperbola_xy1",
        family: "hyperbola-xy",
        summary: "O'Keefe-Pascasio: XY=1 does not stay an arc in the Hall plane (odd q>3)",
        guard: odd_q_gt3,
        run: chk_okp_hyperbola_xy1,
    },
    CheckDef {
        name: "okp_complete_arc",
        family: "hyperbola-xy",
        summary: "O'Keefe-Pascasio: XY=-d, d a non-square, is a complete (q^2-1)-arc (odd q>3)",
        guard: odd_q_gt3,
        run: chk_okp_complete_arc,
    },
    CheckDef {
        name: "conjugate_hyperbola_odd",
        family: "centered",
        summary: "conjugate infinite pair off D, odd q>3: D all-external gives two (q+1)-lines, all-internal an oval",
        guard: odd_q_gt3,
        run: chk_conjugate_hyperbola_odd,
    },
    CheckDef {
        name: "conjugate_hyperbola_even",
        family: "centered",
        summary: "conjugate infinite pair off D, even q: exactly one (q+1)-line, all other lines meet in at most 2",
        guard: even_q,
        run: chk_conjugate_hyperbola_even,
    },
    CheckDef {
        name: "hyperbola_one_in_d",
        family: "mixed",
        summary: "one infinite point in D, odd q>5: s=(q±1)/2 external, max 3 per line, triples 2s C(q-s,2)+2C(s,3)",
        guard: odd_q_gt5,
        run: chk_hyperbola_one_in_d,
    },
    CheckDef {
        name: "a3_even",
        family: "normal-form",
        summary: "even q ellipse/non-conjugate hyperbola off D: a3=q(q-1)/2 and a3+4a4=C(q+1,3) across a sweep",
        guard: even_q,
        run: chk_a3_even,
    },
    CheckDef {
        name: "tangent_witness_even",
        family: "normal-form",
        summary: "even q: every 3-secant new line has exactly one point whose tangent meets D; a witness caps lines at 3",
        guard: even_q,
        run: chk_tangent_witness_even,
    },
    CheckDef {
        name: "odd_ellipse_never_oval",
        family: "centered",
        summary: "odd q: no ellipse stays an oval; every ellipse in the sweep has a 3-secant new line",
        guard: odd_q_le5,
        run: chk_odd_ellipse_never_oval,
    },
    CheckDef {
        name: "quadratic_normal_form",
        family: "mixed",
        summary: "even q: every admissible X^2+bX+c normalizes to X^2+X+w, w off the subfield, verified by substitution",
        guard: even_q,
        run: chk_quadratic_normal_form,
    },
    CheckDef {
        name: "triples_crosscheck",
        family: "mixed",
        summary: "spectrum-derived triple counts equal direct enumeration; incidence identities; translation invariance",
        guard: q_le5,
        run: chk_triples_crosscheck,
    },
    CheckDef {
        name: "baer_dichotomy",
        family: "mixed",
        summary: "every (Baer subplane, conic) pair meets in at most 4 points or in a full subplane conic",
        guard: q_le4,
        run: chk_baer_dichotomy,
    },
    CheckDef {
        name: "open_question_table",
        family: "centered",
        summary: "ellipses/non-conjugate hyperbolas off D: s-bound and the triple formula hold on every sweep row",
        guard: odd_q,
        run: chk_open_question_table,
    },
];

// ============================================================================
// Hypothesis guards
// ============================================================================

fn any_q(_: &Field) -> Option<String> {
    None
}

fn even_q(f: &Field) -> Option<String> {
    (!f.has_even_order()).then(|| format!("needs even q; q={} is odd", f.q()))
}

fn odd_q(f: &Field) -> Option<String> {
    f.has_even_order()
        .then(|| format!("needs odd q; q={} is even", f.q()))
}

fn odd_q_gt3(f: &Field) -> Option<String> {
    if f.has_even_order() {
        return Some(format!("needs odd q; q={} is even", f.q()));
    }
    (f.q() <= 3).then(|| format!("needs q > 3; q={} is covered by the small-case analysis", f.q()))
}

fn odd_q_gt5(f: &Field) -> Option<String> {
    if f.has_even_order() {
        return Some(format!("needs odd q; q={} is even", f.q()));
    }
    (f.q() <= 5).then(|| format!("needs q > 5; q={} falls outside the hypothesis", f.q()))
}

fn even_nonsquare_q(f: &Field) -> Option<String> {
    if !f.has_even_order() {
        return Some(format!("needs even q; q={} is odd", f.q()));
    }
    f.q_is_square().then(|| {
        format!(
            "needs non-square q for the (q+1)/3 line counts; q={} is a square",
            f.q()
        )
    })
}

fn even_square_q(f: &Field) -> Option<String> {
    if !f.has_even_order() {
        return Some(format!("needs even q; q={} is odd", f.q()));
    }
    (!f.q_is_square()).then(|| format!("needs square q; q={} is not a square", f.q()))
}

fn odd_q_le5(f: &Field) -> Option<String> {
    if f.has_even_order() {
        return Some(format!("needs odd q; q={} is even", f.q()));
    }
    (f.q() > 5).then(|| {
        format!(
            "full ellipse sweeps are run at q <= 5; q={} exceeds the census scale",
            f.q()
        )
    })
}

fn q_le5(f: &Field) -> Option<String> {
    (f.q() > 5).then(|| {
        format!(
            "direct O(|K|^3) cross-checks are run at q <= 5; q={} exceeds the census scale",
            f.q()
        )
    })
}

fn q_le4(f: &Field) -> Option<String> {
    (f.q() > 4).then(|| {
        format!(
            "the exhaustive (subplane, conic) sweep is run at q <= 4; q={} exceeds the census scale",
            f.q()
        )
    })
}

// ============================================================================
// Check context
// ============================================================================

struct Ctx {
    plane: HallPlane,
    deadline: Deadline,
    check: &'static str,
    rows: Vec<CheckResult>,
}

impl Ctx {
    fn f(&self) -> &Field {
        self.plane.field()
    }

    fn q(&self) -> u32 {
        self.plane.q()
    }

    fn tick(&self) -> Result<(), CensusError> {
        self.deadline.poll()
    }

    fn push(&mut self, conic: &str, expected: String, actual: String, pass: bool) {
        self.rows.push(CheckResult {
            check: self.check.to_string(),
            q: self.q(),
            conic: conic.to_string(),
            expected,
            actual,
            pass,
            skipped: false,
            note: String::new(),
            millis: 0,
        });
    }

    /// Exact-equality row: passes iff the rendered values coincide.
    fn eq<T: Display + PartialEq>(&mut self, conic: &str, expected: T, actual: T) {
        let pass = expected == actual;
        self.push(conic, expected.to_string(), actual.to_string(), pass);
    }

    /// Inequality row; the relation is spelled inside `expected`.
    fn at_least(&mut self, conic: &str, bound: u64, actual: u64) {
        self.push(conic, format!(">= {bound}"), actual.to_string(), actual >= bound);
    }
}

fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn choose3(n: u64) -> u64 {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

fn fmt_map<K: Display, V: Display>(m: &BTreeMap<K, V>) -> String {
    let body: Vec<String> = m.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    format!("{{{}}}", body.join(", "))
}

/// Direction at infinity of a projective point (x:y:0) off the derivation
/// set: an old-line slope class y/x outside the subfield.
fn dir_at_infinity(f: &Field, pt: &ProjPoint) -> HallDirection {
    assert!(pt.z().is_zero(), "expected a point at infinity");
    assert!(
        !pt.x().is_zero(),
        "(0:1:0) lies in the derivation set and has no old-line slope"
    );
    let slope = f.div(pt.y(), pt.x());
    assert!(!f.in_subfield(slope), "point lies in the derivation set");
    HallDirection::OldSlope(slope)
}

// ---------------------------------------------------------------------------
// Instance builders (deterministic: scans follow element index order)
// ---------------------------------------------------------------------------

/// Parabolas (X+uY)^2 + vXZ + wYZ + zZ^2 with the infinite point (−u:1:0)
/// off D, i.e. u outside the subfield.
fn odd_parabola_instances(f: &Field, n: usize) -> Vec<Conic> {
    let t = f.generator();
    let t2 = f.sq(t);
    let candidates = [
        (t, f.one(), f.zero(), f.zero()),
        (t2, f.one(), f.one(), f.one()),
        (t, f.zero(), f.one(), f.zero()),
        (t2, f.zero(), f.one(), f.one()),
    ];
    let mut out = Vec::new();
    for (u, v, w, z) in candidates {
        assert!(!f.in_subfield(u));
        if let Ok(c) = Conic::parabola(f, u, v, w, z) {
            out.push(c);
        }
        if out.len() == n {
            break;
        }
    }
    assert_eq!(out.len(), n, "not enough nondegenerate parabola instances");
    out
}

/// Even q: parabola with both the infinite point and the nucleus off D,
/// the two being conjugate (w = conj(u), v = 1).
fn even_parabola_conjugate(f: &Field) -> Conic {
    let u = f.generator();
    Conic::parabola(f, u, f.one(), f.conj(u), f.zero())
        .expect("u outside the subfield makes conj(u) != u, hence nondegenerate")
}

/// Even q: both off D but not conjugate (w outside the subfield,
/// w != conj(u), w != u). No such w exists at q = 2, where the two
/// non-subfield elements of GF(4) are conjugate.
fn even_parabola_nonconjugate(f: &Field) -> Option<Conic> {
    let u = f.generator();
    let w = f
        .elements()
        .find(|&w| !f.in_subfield(w) && w != f.conj(u) && w != u)?;
    Some(Conic::parabola(f, u, f.one(), w, f.zero()).expect("w != u*1 keeps the form nondegenerate"))
}

/// Centered conics X^2+aXY+bY^2 = w whose infinite points form a conjugate
/// pair off D: a, b in the subfield with T^2+aT+b irreducible there.
fn centered_conjugate_hyperbolas(f: &Field) -> Vec<Conic> {
    let sub: Vec<FieldElement> = f.subfield_elements().collect();
    let mut out = Vec::new();
    for &a in &sub {
        for &b in &sub {
            if b.is_zero() {
                continue;
            }
            let rootless = sub
                .iter()
                .all(|&s| !f.add(f.add(f.sq(s), f.mul(a, s)), b).is_zero());
            if !rootless {
                continue;
            }
            for w in [f.one(), f.generator()] {
                if let Ok(c) = Conic::centered(f, a, b, w) {
                    let cls = c.classify();
                    assert_eq!(cls.kind, ConicKind::Hyperbola);
                    assert!(cls.conjugate_infinite_pair);
                    out.push(c);
                }
            }
        }
    }
    assert!(!out.is_empty(), "every q has irreducible quadratics");
    out
}

/// Enumerate every conic of PG(2,q²) once (coefficient vectors up to
/// scalar: first nonzero coefficient = 1), streaming them to `g`.
fn for_all_conics(
    f: &Field,
    deadline: &Deadline,
    mut g: impl FnMut(&Conic) -> Result<(), CensusError>,
) -> Result<u64, CensusError> {
    let n = f.size() as u64;
    let mut seen = 0u64;
    for lead in 0..6usize {
        let free = 5 - lead;
        let total = n.pow(free as u32);
        for code in 0..total {
            if code % 8192 == 0 {
                deadline.poll()?;
            }
            let mut c = [f.zero(); 6];
            c[lead] = f.one();
            let mut rem = code;
            for slot in c.iter_mut().skip(lead + 1) {
                *slot = f.element((rem % n) as usize);
                rem /= n;
            }
            if let Ok(conic) = Conic::new(f, c) {
                seen += 1;
                g(&conic)?;
            }
        }
    }
    Ok(seen)
}

// ============================================================================
// Check bodies
// ============================================================================

fn chk_hall_axioms(ctx: &mut Ctx) -> Result<(), CensusError> {
    let q = ctx.q() as u64;
    let verdict = match ctx.plane.verify_affine_plane_axioms() {
        Ok(()) => "hold".to_string(),
        Err(e) => format!("violated: {e}"),
    };
    ctx.eq("affine axioms", "hold".to_string(), verdict);
    let new_lines = ctx
        .plane
        .enumerate_all_lines()
        .iter()
        .filter(|l| l.is_new())
        .count() as u64;
    ctx.eq("new-line count", (q + 1) * q * q, new_lines);
    Ok(())
}

/// Shared sweep for the inscribed-triangle checks: the subfield conic
/// X² = YZ against every subplane line and every triple of subplane points
/// on it and off the conic. Returns (tangent, non-tangent) histograms
/// keyed by observed triangle count, plus the per-triple external parity
/// histogram for non-tangent lines (odd q).
struct SkSweep {
    tangent: BTreeMap<u32, u64>,
    nontangent: BTreeMap<u32, u64>,
    /// (external-count parity is odd, triangles) → triples (odd q only)
    by_parity: BTreeMap<(bool, u32), u64>,
}

fn sk_sweep(ctx: &Ctx) -> Result<SkSweep, CensusError> {
    let f = ctx.f().clone();
    let conic = Conic::parabola(&f, f.zero(), f.zero(), f.neg(f.one()), f.zero())
        .expect("X^2 - YZ is nondegenerate");
    assert!(conic.is_subfield_conic());
    let pts = subplane_points(&f);
    let odd = !f.has_even_order();
    // subplane external = the point lies on exactly two subplane tangents
    let external: BTreeMap<(usize, usize, usize), bool> = if odd {
        pts.iter()
            .filter(|p| !conic.contains_point(p))
            .map(|p| {
                let key = (p.x().index(), p.y().index(), p.z().index());
                (key, subplane_tangent_count(&conic, p) == 2)
            })
            .collect()
    } else {
        BTreeMap::new()
    };
    let mut sweep = SkSweep {
        tangent: BTreeMap::new(),
        nontangent: BTreeMap::new(),
        by_parity: BTreeMap::new(),
    };
    for lp in &pts {
        ctx.tick()?;
        let r = ProjLine::new(&f, lp.x(), lp.y(), lp.z());
        let on_line: Vec<&ProjPoint> = pts.iter().filter(|p| r.contains(&f, p)).collect();
        let on_conic = on_line.iter().filter(|p| conic.contains_point(p)).count();
        let off: Vec<&ProjPoint> = on_line
            .iter()
            .copied()
            .filter(|p| !conic.contains_point(p))
            .collect();
        let tangent = on_conic == 1;
        for i in 0..off.len() {
            for j in (i + 1)..off.len() {
                for k in (j + 1)..off.len() {
                    let triple = [*off[i], *off[j], *off[k]];
                    let n = count_inscribed_triangles(&conic, &r, triple).count;
                    if tangent {
                        *sweep.tangent.entry(n).or_insert(0) += 1;
                    } else {
                        *sweep.nontangent.entry(n).or_insert(0) += 1;
                        if odd {
                            let e = triple
                                .iter()
                                .filter(|p| {
                                    external[&(p.x().index(), p.y().index(), p.z().index())]
                                })
                                .count();
                            *sweep.by_parity.entry((e % 2 == 1, n)).or_insert(0) += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(sweep)
}

fn chk_sk_triangles_even(ctx: &mut Ctx) -> Result<(), CensusError> {
    let sweep = sk_sweep(ctx)?;
    let total: u64 = sweep.nontangent.values().sum();
    let mut expected = BTreeMap::new();
    expected.insert(1u32, total);
    ctx.eq(
        "X^2 = YZ, non-tangent lines",
        fmt_map(&expected),
        fmt_map(&sweep.nontangent),
    );
    Ok(())
}

fn chk_sk_triangles_odd(ctx: &mut Ctx) -> Result<(), CensusError> {
    let sweep = sk_sweep(ctx)?;
    let tangent_total: u64 = sweep.tangent.values().sum();
    let mut expected_t = BTreeMap::new();
    expected_t.insert(1u32, tangent_total);
    ctx.eq(
        "X^2 = YZ, tangent lines",
        fmt_map(&expected_t),
        fmt_map(&sweep.tangent),
    );
    // 2 triangles iff the triple carries an odd number of external points
    let odd_triples: u64 = sweep
        .by_parity
        .iter()
        .filter(|&(&(odd, _), _)| odd)
        .map(|(_, &n)| n)
        .sum();
    let even_triples: u64 = sweep
        .by_parity
        .iter()
        .filter(|&(&(odd, _), _)| !odd)
        .map(|(_, &n)| n)
        .sum();
    let mut expected_nt = BTreeMap::new();
    expected_nt.insert((true, 2u32), odd_triples);
    expected_nt.insert((false, 0u32), even_triples);
    let expected_str = fmt_map(
        &expected_nt
            .iter()
            .map(|(&(o, n), &c)| (format!("{}x{n}", if o { "odd" } else { "even" }), c))
            .collect(),
    );
    let actual_str = fmt_map(
        &sweep
            .by_parity
            .iter()
            .map(|(&(o, n), &c)| (format!("{}x{n}", if o { "odd" } else { "even" }), c))
            .collect(),
    );
    ctx.eq("X^2 = YZ, non-tangent lines", expected_str, actual_str);
    Ok(())
}

fn chk_a3_a4_parabola_odd(ctx: &mut Ctx) -> Result<(), CensusError> {
    let q = ctx.q() as u64;
    let a3 = (q * q - 1) / 2;
    let a4 = (q - 3) * (q * q - 1) / 24;
    let expected = format!("a3={a3} a4={a4} a3+4a4={}", choose3(q + 1));
    let instances = odd_parabola_instances(ctx.f(), 3);
    let label = format!("{} (+{} further instances)", instances[0].literal(), instances.len() - 1);
    for c in &instances {
        ctx.tick()?;
        assert!(!c.classify().infinite_in_d[0]);
        let sp = secant_spectrum(&ctx.plane, c);
        let actual = format!(
            "a3={} a4={} a3+4a4={}",
            sp.count(3),
            sp.count(4),
            sp.count(3) + 4 * sp.count(4)
        );
        if actual != expected {
            ctx.eq(&c.literal(), expected, actual);
            return Ok(());
        }
    }
    ctx.eq(&label, expected.clone(), expected);
    Ok(())
}

fn chk_three_secant_pencil(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let want = 3 * (q - 1);
    let o = f.zero();
    let m = f.neg(f.one());
    let canonical = [
        AffinePoint::new(o, o),
        AffinePoint::new(m, o),
        AffinePoint::new(o, m),
    ];
    let line = ctx.plane.hall_line_through(canonical[0], canonical[1]);
    let got = count_three_secant_parabolas(&ctx.plane, line, canonical).count as u64;
    ctx.eq("triple (0,0),(-1,0),(0,-1)", want, got);

    // invariance: 20 seeded random non-collinear triples on random new lines
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let dirs = ctx.plane.new_directions().to_vec();
    let n = f.size() as usize;
    let mut counts = BTreeSet::new();
    let mut done = 0;
    while done < 20 {
        ctx.tick()?;
        let lam = dirs[rng.gen_range(0..dirs.len())];
        let base = AffinePoint::new(
            f.element(rng.gen_range(0..n)),
            f.element(rng.gen_range(0..n)),
        );
        let line = ctx.plane.new_line_with_dir_through(lam, base);
        let pts = ctx.plane.line_points(line);
        let a = pts[rng.gen_range(0..pts.len())];
        let b = pts[rng.gen_range(0..pts.len())];
        let c = pts[rng.gen_range(0..pts.len())];
        if a == b || a == c || b == c {
            continue;
        }
        let det = f.sub(
            f.mul(f.sub(b.x, a.x), f.sub(c.y, a.y)),
            f.mul(f.sub(c.x, a.x), f.sub(b.y, a.y)),
        );
        if det.is_zero() {
            continue;
        }
        counts.insert(count_three_secant_parabolas(&ctx.plane, line, [a, b, c]).count as u64);
        done += 1;
    }
    let rendered: Vec<String> = counts.iter().map(u64::to_string).collect();
    ctx.eq(
        "20 random triples",
        format!("{{{want}}}"),
        format!("{{{}}}", rendered.join(", ")),
    );

    // cross-oracle: pencil size equals the count of u with a collapsing
    // fourth rational point
    let collapsing = f
        .elements()
        .filter(|&u| !f.in_subfield(u))
        .filter(|&u| fourth_rational_point(&f, u).coincides_with_base)
        .count() as u64;
    ctx.eq("fourth-point collapse count", want, collapsing);
    Ok(())
}

fn chk_parabola_support_even(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let mut instances = vec![
        even_parabola_conjugate(&f),
        Conic::parabola(&f, f.sq(f.generator()), f.one(), f.conj(f.sq(f.generator())), f.one())
            .expect("conjugate pair with a z-term"),
    ];
    instances.extend(even_parabola_nonconjugate(&f));
    for c in &instances {
        ctx.tick()?;
        let cls = c.classify();
        assert!(cls.infinite_in_d.iter().all(|&b| !b));
        assert!(!cls.nucleus_in_d);
        let sp = secant_spectrum(&ctx.plane, c);
        let support: Vec<usize> = sp.support().into_iter().filter(|&i| i != 0).collect();
        let ok = support.iter().all(|i| [1, 2, 4].contains(i));
        ctx.push(
            &c.literal(),
            "support within {0,1,2,4}".to_string(),
            format!("support {{0,{}}}", support.iter().map(usize::to_string).collect::<Vec<_>>().join(",")),
            ok,
        );
    }
    Ok(())
}

fn chk_parabola_conjugate_spectrum(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let c = even_parabola_conjugate(&f);
    let sp = secant_spectrum(&ctx.plane, &c);
    let expected = format!(
        "a0={} a1={} a2=0 a4={}",
        q * q * (q + 1) / 4,
        2 * q * q * (q + 1) / 3,
        q * q * (q + 1) / 12
    );
    let actual = format!(
        "a0={} a1={} a2={} a4={}",
        sp.count(0),
        sp.count(1),
        sp.count(2),
        sp.count(4)
    );
    ctx.eq(&c.literal(), expected, actual);

    // every conic point sees (q+1)/3 four-secants and 2(q+1)/3 one-secants
    let mut expected_dist = BTreeMap::new();
    expected_dist.insert(1usize, ((q + 1) / 3 * 2) as u32);
    expected_dist.insert(4usize, ((q + 1) / 3) as u32);
    let mut bad = None;
    for &p in c.affine_points() {
        ctx.tick()?;
        let dist = per_point_line_distribution(&ctx.plane, &c, p);
        if dist != expected_dist {
            bad = Some(dist);
            break;
        }
    }
    ctx.eq(
        "per-point line distribution",
        fmt_map(&expected_dist),
        bad.map_or_else(|| fmt_map(&expected_dist), |d| fmt_map(&d)),
    );
    Ok(())
}

fn chk_parabola_coset_lines(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let c = Conic::parabola(&f, f.zero(), f.zero(), f.one(), f.zero())
        .expect("X^2 + YZ is nondegenerate");
    let cls = c.classify();
    assert!(cls.infinite_in_d[0] && cls.nucleus_in_d);
    let sp = secant_spectrum(&ctx.plane, &c);
    ctx.eq(
        &c.literal(),
        format!("support {{0,1,{q}}} with a_q={q}"),
        format!(
            "support {{{}}} with a_q={}",
            sp.support().iter().map(usize::to_string).collect::<Vec<_>>().join(","),
            sp.count(q as usize)
        ),
    );
    let long = sp.lines_with_at_least(q as u32);
    let classes: BTreeSet<String> = long
        .iter()
        .map(|&(l, _)| format!("{:?}", direction_of(l)))
        .collect();
    ctx.eq("q-secants share one direction class", 1, classes.len());
    ctx.eq("collinear triples", q * choose3(q), sp.triples);
    if q >= 4 {
        // each q-secant closes to a Baer subplane meeting the conic in a
        // full subplane conic (q affine points plus the infinite point);
        // below q=4 three points do not determine a conic, so the trace
        // claim has no content
        let subconics = long
            .iter()
            .filter(|&&(l, _)| {
                let m = baer_conic_meeting(&ctx.plane, &c, l);
                m.size == q as usize + 1 && m.subconic.is_some()
            })
            .count();
        ctx.eq("subconic traces", long.len(), subconics);
    }
    Ok(())
}

fn chk_parabola_square_oval(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let conj = even_parabola_conjugate(&f);
    let dir = dir_at_infinity(&f, &conj.infinite_points()[0]);
    let rep = arc_report(&ctx.plane, conj.affine_points(), &[dir]);
    ctx.eq(
        &format!("{} + infinite point", conj.literal()),
        format!("oval of size {}", q * q + 1),
        if rep.is_arc {
            format!("oval of size {}", rep.size)
        } else {
            format!("not an arc (max line hits {})", rep.max_line_hits)
        },
    );
    let nc = even_parabola_nonconjugate(&f).expect("q >= 4 leaves non-conjugate choices");
    let nc_dir = dir_at_infinity(&f, &nc.infinite_points()[0]);
    let nc_rep = arc_report(&ctx.plane, nc.affine_points(), &[nc_dir]);
    ctx.eq(
        &format!("{} + infinite point", nc.literal()),
        "not an arc".to_string(),
        if nc_rep.is_arc {
            "oval".to_string()
        } else {
            "not an arc".to_string()
        },
    );
    Ok(())
}

fn chk_nbeta_roots(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let square = f.q_is_square();
    let mut tally: BTreeMap<u32, u64> = BTreeMap::new();
    let mut mismatches = 0u64;
    for beta in f.elements().skip(1) {
        ctx.tick()?;
        let expect = if square {
            if f.in_subfield(beta) {
                3
            } else {
                1
            }
        } else if f.is_cube(beta) {
            3
        } else {
            0
        };
        let got = count_rational_roots_nbeta(&f, beta);
        if got != expect {
            mismatches += 1;
        }
        *tally.entry(got).or_insert(0) += 1;
    }
    let expected_tally: BTreeMap<u32, u64> = if square {
        [(3u32, q - 1), (1u32, q * q - q)].into_iter().collect()
    } else {
        [(3u32, (q * q - 1) / 3), (0u32, 2 * (q * q - 1) / 3)]
            .into_iter()
            .collect()
    };
    let branch = if square { "square q" } else { "non-square q" };
    ctx.eq(
        &format!("all beta, {branch} branch"),
        format!("{} with 0 case mismatches", fmt_map(&expected_tally)),
        format!("{} with {mismatches} case mismatches", fmt_map(&tally)),
    );
    Ok(())
}

fn chk_okp_hyperbola_xy1(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let c = Conic::hyperbola_xy(&f, f.one()).expect("XY = Z^2 is nondegenerate");
    let sp = secant_spectrum(&ctx.plane, &c);
    ctx.at_least(
        &format!("{} (max new-line hits)", c.literal()),
        3,
        sp.max_line as u64,
    );
    let rep = arc_report(&ctx.plane, c.affine_points(), &[]);
    ctx.eq(&c.literal(), "not an arc".to_string(), if rep.is_arc {
        "arc".to_string()
    } else {
        "not an arc".to_string()
    });
    Ok(())
}

fn chk_okp_complete_arc(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let d = f
        .elements()
        .skip(1)
        .find(|&x| !f.is_square(x))
        .expect("half the nonzero elements are non-squares");
    let c = Conic::hyperbola_xy(&f, f.neg(d)).expect("XY = -d Z^2 is nondegenerate");
    let rep = arc_report(&ctx.plane, c.affine_points(), &[]);
    ctx.eq(
        &c.literal(),
        format!("complete arc of size {}", q * q - 1),
        format!(
            "{}complete {} of size {}",
            if rep.is_complete { "" } else { "in" },
            if rep.is_arc { "arc" } else { "non-arc" },
            rep.size
        ),
    );
    Ok(())
}

fn chk_conjugate_hyperbola_odd(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q();
    let d = ctx.plane.derivation_set().clone();
    let instances = centered_conjugate_hyperbolas(&f);
    let mut mixed = 0u32;
    let mut first_ext: Option<Conic> = None;
    let mut first_int: Option<Conic> = None;
    for c in &instances {
        ctx.tick()?;
        let counts = c.classify_derivation_set(&d);
        if counts.external == q + 1 {
            first_ext.get_or_insert_with(|| c.clone());
        } else if counts.internal == q + 1 {
            first_int.get_or_insert_with(|| c.clone());
        } else {
            mixed += 1;
        }
    }
    ctx.eq(
        &format!("{} centered instances", instances.len()),
        "every instance has D all-external or all-internal".to_string(),
        if mixed == 0 {
            "every instance has D all-external or all-internal".to_string()
        } else {
            format!("{mixed} instances mix external and internal points")
        },
    );
    let ext = first_ext.expect("the sweep contains all-external instances");
    let sp = secant_spectrum(&ctx.plane, &ext);
    let rest = sp
        .support()
        .into_iter()
        .filter(|&i| i != q as usize + 1)
        .max()
        .unwrap_or(0);
    ctx.eq(
        &format!("{} (all of D external)", ext.literal()),
        "a_(q+1)=2, other lines <= 2".to_string(),
        format!("a_(q+1)={}, other lines <= {rest}", sp.count(q as usize + 1)),
    );
    let int = first_int.expect("the sweep contains all-internal instances");
    let dirs: Vec<HallDirection> = int
        .infinite_points()
        .iter()
        .map(|p| dir_at_infinity(&f, p))
        .collect();
    let rep = arc_report(&ctx.plane, int.affine_points(), &dirs);
    ctx.eq(
        &format!("{} (all of D internal)", int.literal()),
        format!("complete oval of size {}", q as u64 * q as u64 + 1),
        format!(
            "{} of size {}",
            match (rep.is_arc, rep.is_complete) {
                (true, true) => "complete oval".to_string(),
                (true, false) => "incomplete arc".to_string(),
                _ => "non-arc".to_string(),
            },
            rep.size
        ),
    );
    Ok(())
}

fn chk_conjugate_hyperbola_even(ctx: &mut Ctx) -> Result<(), CensusError> {
    let q = ctx.q();
    let instances = centered_conjugate_hyperbolas(ctx.f());
    let mut bad = None;
    for c in &instances {
        ctx.tick()?;
        let sp = secant_spectrum(&ctx.plane, c);
        let rest = sp
            .support()
            .into_iter()
            .filter(|&i| i != q as usize + 1)
            .max()
            .unwrap_or(0);
        if sp.count(q as usize + 1) != 1 || rest > 2 {
            bad = Some(format!(
                "{}: a_(q+1)={}, other lines up to {rest}",
                c.literal(),
                sp.count(q as usize + 1)
            ));
            break;
        }
    }
    ctx.eq(
        &format!("{} centered instances", instances.len()),
        "each instance: exactly one (q+1)-line, other lines <= 2".to_string(),
        bad.unwrap_or_else(|| "each instance: exactly one (q+1)-line, other lines <= 2".to_string()),
    );
    Ok(())
}

fn chk_hyperbola_one_in_d(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let d = ctx.plane.derivation_set().clone();
    let t = f.generator();
    let mut seen_s: BTreeSet<u64> = BTreeSet::new();
    let mut instances = 0u32;
    let mut bad: Option<String> = None;
    'outer: for ai in 0..3usize {
        let alpha = f.element(ai);
        for ui in 0..3usize {
            for vi in 0..3usize {
                for wi in 1..4usize {
                    ctx.tick()?;
                    let coeffs = [
                        f.one(),
                        f.neg(f.add(alpha, t)),
                        f.mul(alpha, t),
                        f.element(ui),
                        f.element(vi),
                        f.element(wi),
                    ];
                    let Ok(c) = Conic::new(&f, coeffs) else { continue };
                    let cls = c.classify();
                    if cls.kind != ConicKind::Hyperbola
                        || cls.infinite_in_d.iter().filter(|&&b| b).count() != 1
                    {
                        continue;
                    }
                    instances += 1;
                    let counts = c.classify_derivation_set(&d);
                    let s = counts.external as u64;
                    let sp = secant_spectrum(&ctx.plane, &c);
                    let formula = 2 * s * choose2(q - s) + 2 * choose3(s);
                    let ok = (s == (q - 1) / 2 || s == (q + 1) / 2)
                        && counts.on == 1
                        && sp.max_line <= 3
                        && sp.triples == formula;
                    if ok {
                        seen_s.insert(s);
                    } else {
                        bad = Some(format!(
                            "{}: s={s} on={} max={} triples={} (formula {formula})",
                            c.literal(),
                            counts.on,
                            sp.max_line,
                            sp.triples
                        ));
                        break 'outer;
                    }
                    if instances >= 8 {
                        break 'outer;
                    }
                }
            }
        }
    }
    ctx.eq(
        &format!("{instances} instances, one infinite point in D"),
        "each: s=(q±1)/2, max line 3, triples 2s*C(q-s,2)+2*C(s,3)".to_string(),
        bad.unwrap_or_else(|| {
            "each: s=(q±1)/2, max line 3, triples 2s*C(q-s,2)+2*C(s,3)".to_string()
        }),
    );
    let both: Vec<String> = seen_s.iter().map(u64::to_string).collect();
    ctx.eq(
        "observed s values",
        format!("{{{}, {}}}", (q - 1) / 2, (q + 1) / 2),
        format!("{{{}}}", both.join(", ")),
    );
    Ok(())
}

/// Admissible sweep of X² + XY + cY² + uXZ + vYZ + wZ² with c outside the
/// subfield: at even q, always an ellipse or a hyperbola with non-conjugate
/// infinite points off D.
fn normal_form_sweep(
    ctx: &Ctx,
    c_cap: usize,
    tails: &[(FieldElement, FieldElement, FieldElement)],
    mut g: impl FnMut(&Conic) -> Result<(), CensusError>,
) -> Result<u64, CensusError> {
    let f = ctx.f().clone();
    let mut seen = 0u64;
    let cs: Vec<FieldElement> = f
        .elements()
        .filter(|&c| !f.in_subfield(c))
        .take(c_cap)
        .collect();
    for &c in &cs {
        ctx.tick()?;
        for &(u, v, w) in tails {
            if let Ok(conic) = Conic::normal_form(&f, c, u, v, w) {
                let cls = conic.classify();
                debug_assert!(cls.kind != ConicKind::Parabola);
                debug_assert!(cls.infinite_in_d.iter().all(|&b| !b));
                debug_assert!(!cls.conjugate_infinite_pair);
                seen += 1;
                g(&conic)?;
            }
        }
    }
    Ok(seen)
}

fn full_tails(f: &Field) -> Vec<(FieldElement, FieldElement, FieldElement)> {
    let mut tails = Vec::new();
    for u in f.elements() {
        for v in f.elements() {
            for w in f.elements() {
                tails.push((u, v, w));
            }
        }
    }
    tails
}

fn small_tails(f: &Field) -> Vec<(FieldElement, FieldElement, FieldElement)> {
    let picks = [f.zero(), f.one(), f.generator()];
    let mut tails = Vec::new();
    for &u in &picks {
        for &v in &picks {
            for &w in &picks {
                tails.push((u, v, w));
            }
        }
    }
    tails
}

fn chk_a3_even(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let a3 = q * (q - 1) / 2;
    let a4 = (choose3(q + 1) - a3) / 4;
    let (c_cap, tails) = if q == 4 {
        (usize::MAX, full_tails(&f))
    } else {
        (usize::MAX, small_tails(&f))
    };
    let mut bad: Option<String> = None;
    let plane = &ctx.plane;
    let deadline = ctx.deadline.clone();
    let swept = normal_form_sweep(ctx, c_cap, &tails, |conic| {
        deadline.poll()?;
        if bad.is_some() {
            return Ok(());
        }
        let sp = secant_spectrum(plane, conic);
        if sp.count(3) != a3 || sp.count(4) != a4 || sp.max_line > 4 {
            bad = Some(format!(
                "{}: a3={} a4={} max={}",
                conic.literal(),
                sp.count(3),
                sp.count(4),
                sp.max_line
            ));
        }
        Ok(())
    })?;
    ctx.eq(
        &format!("{swept} admissible instances"),
        format!("each: a3={a3} a4={a4}"),
        bad.unwrap_or_else(|| format!("each: a3={a3} a4={a4}")),
    );
    Ok(())
}

fn chk_tangent_witness_even(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let tails = small_tails(&f);
    let mut three = 0u64;
    let mut four = 0u64;
    let mut bad: Option<String> = None;
    let plane = &ctx.plane;
    let deadline = ctx.deadline.clone();
    let swept = normal_form_sweep(ctx, 4, &tails, |conic| {
        deadline.poll()?;
        if bad.is_some() {
            return Ok(());
        }
        let sp = secant_spectrum(plane, conic);
        for (line, hits) in sp.lines_with_at_least(3) {
            let witness = three_secant_tangent_witness(plane, conic, line);
            match hits {
                3 => {
                    three += 1;
                    if witness.is_none() {
                        bad = Some(format!("{}: 3-secant without witness", conic.literal()));
                    }
                }
                4 => {
                    four += 1;
                    if witness.is_some() {
                        bad = Some(format!("{}: 4-secant with a witness", conic.literal()));
                    }
                }
                other => bad = Some(format!("{}: {other}-secant line", conic.literal())),
            }
        }
        Ok(())
    })?;
    ctx.eq(
        &format!("{swept} instances: {three} 3-secants, {four} 4-secants"),
        "every 3-secant has exactly one witness; no 4-secant has one".to_string(),
        bad.unwrap_or_else(|| {
            "every 3-secant has exactly one witness; no 4-secant has one".to_string()
        }),
    );
    Ok(())
}

fn chk_odd_ellipse_never_oval(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q();
    let plane = &ctx.plane;
    let mut ellipses = 0u64;
    let mut ovals = 0u64;
    if q == 3 {
        // every conic once, up to scalar
        let deadline = ctx.deadline.clone();
        for_all_conics(&f, &deadline, |conic| {
            if conic.kind() == ConicKind::Ellipse {
                ellipses += 1;
                if secant_spectrum(plane, conic).triples == 0 {
                    ovals += 1;
                }
            }
            Ok(())
        })?;
    } else {
        // every ellipse is a translate of a centered conic at odd q
        for ai in 0..f.size() as usize {
            ctx.tick()?;
            for bi in 0..f.size() as usize {
                for wi in 1..f.size() as usize {
                    let Ok(conic) =
                        Conic::centered(&f, f.element(ai), f.element(bi), f.element(wi))
                    else {
                        continue;
                    };
                    if conic.kind() == ConicKind::Ellipse {
                        ellipses += 1;
                        if secant_spectrum(plane, &conic).triples == 0 {
                            ovals += 1;
                        }
                    }
                }
            }
        }
    }
    let scope = if q == 3 {
        "all ellipses"
    } else {
        "all ellipses up to translation"
    };
    ctx.eq(
        &format!("{scope} ({ellipses})"),
        "0 remain ovals".to_string(),
        format!("{ovals} remain ovals"),
    );
    Ok(())
}

fn chk_quadratic_normal_form(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let mut tally: BTreeMap<&'static str, u64> = BTreeMap::new();
    for beta in f.elements() {
        ctx.tick()?;
        for gamma in f.elements() {
            let label = match normalize_quadratic(&f, beta, gamma) {
                Ok((_, w)) => {
                    assert!(!f.in_subfield(w));
                    "normalized"
                }
                Err(NormalizeError::RepeatedRoot) => "repeated-root",
                Err(NormalizeError::RootInSubfield) => "root-in-subfield",
                Err(NormalizeError::FrobeniusConjugatePair) => "frobenius-pair",
                Err(NormalizeError::OddCharacteristic) => unreachable!("guard admits even q only"),
            };
            *tally.entry(label).or_insert(0) += 1;
        }
    }
    let subfield_root = q * (q * q - 1) - q * (q - 1) / 2;
    let frobenius = (q * q - q) / 2;
    let expected: BTreeMap<&'static str, u64> = [
        ("normalized", q.pow(4) - q * q - subfield_root - frobenius),
        ("repeated-root", q * q),
        ("root-in-subfield", subfield_root),
        ("frobenius-pair", frobenius),
    ]
    .into_iter()
    .collect();
    ctx.eq("all (b,c) pairs", fmt_map(&expected), fmt_map(&tally));
    Ok(())
}

fn chk_triples_crosscheck(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as u64;
    let mut exhibits: Vec<Conic> = Vec::new();
    if f.has_even_order() {
        exhibits.push(even_parabola_conjugate(&f));
        exhibits.extend(even_parabola_nonconjugate(&f));
        exhibits.push(
            Conic::parabola(&f, f.zero(), f.zero(), f.one(), f.zero()).expect("X^2 + YZ"),
        );
        exhibits.push(centered_conjugate_hyperbolas(&f)[0].clone());
    } else {
        exhibits.push(odd_parabola_instances(&f, 1)[0].clone());
        exhibits.push(Conic::hyperbola_xy(&f, f.one()).expect("XY = Z^2"));
        exhibits.push(centered_conjugate_hyperbolas(&f)[0].clone());
        let ellipse = (0..f.size() as usize).find_map(|ai| {
            (0..f.size() as usize).find_map(|bi| {
                Conic::centered(&f, f.element(ai), f.element(bi), f.one())
                    .ok()
                    .filter(|c| c.kind() == ConicKind::Ellipse)
            })
        });
        exhibits.push(ellipse.expect("odd q always has ellipses"));
    }
    let mut direct_ok = 0usize;
    let mut identity_ok = 0usize;
    let mut translation_ok = 0usize;
    for c in &exhibits {
        ctx.tick()?;
        let sp = secant_spectrum(&ctx.plane, c);
        if sp.triples == collinear_triples_direct(&ctx.plane, c.affine_points()) {
            direct_ok += 1;
        }
        let total_lines: u64 = sp.a.iter().sum();
        let aff = c.affine_points().len() as u64;
        let old_pairs: u64 = old_line_counts(&ctx.plane, c.affine_points())
            .values()
            .map(|&n| choose2(n as u64))
            .sum();
        if total_lines == (q + 1) * q * q && sp.pairs() + old_pairs == choose2(aff) {
            identity_ok += 1;
        }
        let shifted = c.translated(f.one(), f.generator());
        if secant_spectrum(&ctx.plane, &shifted).a == sp.a {
            translation_ok += 1;
        }
    }
    let n = exhibits.len();
    ctx.eq("spectrum triples == direct enumeration", n, direct_ok);
    ctx.eq("line totals and pair partition identities", n, identity_ok);
    ctx.eq("translation leaves the spectrum unchanged", n, translation_ok);
    Ok(())
}

fn chk_baer_dichotomy(ctx: &mut Ctx) -> Result<(), CensusError> {
    let f = ctx.f().clone();
    let q = ctx.q() as usize;
    let plane = &ctx.plane;
    let dirs = plane.new_directions().to_vec();
    let mut conics = 0u64;
    let mut subconic_meetings = 0u64;
    let mut violations = 0u64;
    let mut witness: Option<String> = None;
    let mut keys: Vec<u64> = Vec::with_capacity(64);
    let deadline = ctx.deadline.clone();
    for_all_conics(&f, &deadline, |conic| {
        conics += 1;
        let in_d = conic
            .classify()
            .infinite_in_d
            .iter()
            .filter(|&&b| b)
            .count();
        keys.clear();
        for &p in conic.affine_points() {
            for &lam in &dirs {
                let HallLine::New { dir, base } = plane.new_line_with_dir_through(lam, p) else {
                    unreachable!()
                };
                keys.push(
                    ((dir.index() as u64) << 40)
                        | ((base.x.index() as u64) << 20)
                        | base.y.index() as u64,
                );
            }
        }
        keys.sort_unstable();
        let mut i = 0;
        while i < keys.len() {
            let mut j = i + 1;
            while j < keys.len() && keys[j] == keys[i] {
                j += 1;
            }
            let size = (j - i) + in_d;
            if size > 4 {
                let dir = f.element((keys[i] >> 40) as usize);
                let base = AffinePoint::new(
                    f.element(((keys[i] >> 20) & 0xfffff) as usize),
                    f.element((keys[i] & 0xfffff) as usize),
                );
                let meeting = baer_conic_meeting(plane, conic, HallLine::New { dir, base });
                assert_eq!(meeting.size, size, "shortcut and pull-back sizes agree");
                if size == q + 1 && meeting.subconic.is_some() {
                    subconic_meetings += 1;
                } else {
                    violations += 1;
                    witness.get_or_insert_with(|| {
                        format!("{} meets a subplane in {size} points", conic.literal())
                    });
                }
            }
            i = j;
        }
        Ok(())
    })?;
    ctx.eq(
        &format!("{conics} conics x {} subplanes", (q + 1) * q * q),
        "0 meetings outside {<=4, subplane conic}".to_string(),
        witness.unwrap_or_else(|| format!("{violations} meetings outside {{<=4, subplane conic}}")),
    );
    if q + 1 > 4 {
        // at q=3 a full subplane conic has only 4 points and never crosses
        // the size-4 detection threshold, so the count is vacuous there
        ctx.at_least("full subplane-conic meetings", 1, subconic_meetings);
    }
    Ok(())
}

fn chk_open_question_table(ctx: &mut Ctx) -> Result<(), CensusError> {
    let rows = open_question_rows(ctx.f(), &ctx.deadline)?;
    let q = ctx.q() as u64;
    let mut bound_bad = 0u64;
    let mut formula_bad = 0u64;
    for row in &rows {
        // s <= q/2 + 1 + sqrt(q), tested exactly in integers
        let t = 2 * row.s as i64 - q as i64 - 2;
        if !(t <= 0 || (t * t) as u64 <= 4 * q) {
            bound_bad += 1;
        }
        let s = row.s as u64;
        if row.triples != 2 * s * choose2(q + 1 - s) + 2 * choose3(s) {
            formula_bad += 1;
        }
    }
    ctx.eq(
        &format!("{} table rows", rows.len()),
        "all rows satisfy s <= q/2+1+sqrt(q)".to_string(),
        if bound_bad == 0 {
            "all rows satisfy s <= q/2+1+sqrt(q)".to_string()
        } else {
            format!("{bound_bad} rows violate the bound")
        },
    );
    ctx.eq(
        &format!("{} table rows", rows.len()),
        "all rows have triples = 2s*C(q+1-s,2)+2*C(s,3)".to_string(),
        if formula_bad == 0 {
            "all rows have triples = 2s*C(q+1-s,2)+2*C(s,3)".to_string()
        } else {
            format!("{formula_bad} rows deviate from the formula")
        },
    );
    Ok(())
}

// ============================================================================
// Open-question table
// ============================================================================

/// Experimental data for the open 3-secant question: one row per distinct
/// (kind, s, a₃, a₄, triples) over ellipses and hyperbolas whose infinite
/// points avoid D and are not conjugate. The sweep runs over every
/// centered conic X²+aXY+bY² = w — exhaustive up to translation — for
/// q ≤ 7, and over a fixed deterministic coefficient range beyond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenQuestionRow {
    pub q: u32,
    pub kind: String,
    pub s: u32,
    pub a3: u64,
    pub a4: u64,
    pub triples: u64,
}

fn open_question_rows(f: &Field, deadline: &Deadline) -> Result<Vec<OpenQuestionRow>, CensusError> {
    if f.has_even_order() {
        return Err(CensusError::EvenOrder(f.q()));
    }
    let plane = HallPlane::new(f);
    let d = plane.derivation_set().clone();
    let n = f.size() as usize;
    let cap = if f.q() <= 7 { n } else { 24.min(n) };
    let mut rows: BTreeSet<(String, u32, u64, u64, u64)> = BTreeSet::new();
    for ai in 0..cap {
        deadline.poll()?;
        for bi in 0..cap {
            for wi in 1..cap {
                let Ok(conic) = Conic::centered(f, f.element(ai), f.element(bi), f.element(wi))
                else {
                    continue;
                };
                let cls = conic.classify();
                let keep = match cls.kind {
                    ConicKind::Ellipse => true,
                    ConicKind::Hyperbola => {
                        !cls.conjugate_infinite_pair && cls.infinite_in_d.iter().all(|&b| !b)
                    }
                    ConicKind::Parabola => false,
                };
                if !keep {
                    continue;
                }
                let counts = conic.classify_derivation_set(&d);
                assert_eq!(counts.on, 0, "the family keeps D off the conic");
                let sp = secant_spectrum(&plane, &conic);
                assert!(sp.max_line <= 4, "no five points of the family are collinear");
                rows.insert((
                    cls.kind.name().to_string(),
                    counts.external,
                    sp.count(3),
                    sp.count(4),
                    sp.triples,
                ));
            }
        }
    }
    Ok(rows
        .into_iter()
        .map(|(kind, s, a3, a4, triples)| OpenQuestionRow {
            q: f.q(),
            kind,
            s,
            a3,
            a4,
            triples,
        })
        .collect())
}

/// Build the experimental table over several odd q. Rows are ordered by
/// (q, kind, s, a₃, a₄, triples) and deterministic across runs.
pub fn emit_open_question_table(
    fields: &[Field],
    budget: Duration,
) -> Result<Vec<OpenQuestionRow>, CensusError> {
    let mut rows = Vec::new();
    for f in fields {
        let deadline = Deadline::new("open_question_table", f.q(), budget);
        rows.extend(open_question_rows(f, &deadline)?);
    }
    rows.sort_by(|a, b| {
        (a.q, &a.kind, a.s, a.a3, a.a4, a.triples).cmp(&(b.q, &b.kind, b.s, b.a3, b.a4, b.triples))
    });
    Ok(rows)
}

pub fn write_open_question_csv(
    rows: &[OpenQuestionRow],
    w: &mut impl Write,
) -> Result<(), CensusError> {
    writeln!(w, "q,kind,s,a3,a4,triples")?;
    for r in rows {
        writeln!(w, "{},{},{},{},{},{}", r.q, r.kind, r.s, r.a3, r.a4, r.triples)?;
    }
    Ok(())
}

// ============================================================================
// Runner
// ============================================================================

fn resolve_checks(cfg: &CensusConfig) -> Result<Vec<&'static CheckDef>, CensusError> {
    cfg.validate()?;
    let mut defs: Vec<&'static CheckDef> = REGISTRY
        .iter()
        .filter(|def| cfg.checks.iter().any(|n| n == def.name))
        .collect();
    if !cfg.families.is_empty() {
        defs.retain(|def| cfg.families.iter().any(|f| f == def.family));
    }
    Ok(defs)
}

fn run_task(
    def: &'static CheckDef,
    field: &Field,
    budget: Duration,
) -> Result<Vec<CheckResult>, CensusError> {
    if let Some(reason) = (def.guard)(field) {
        return Ok(vec![CheckResult {
            check: def.name.to_string(),
            q: field.q(),
            conic: "-".to_string(),
            expected: "-".to_string(),
            actual: "-".to_string(),
            pass: true,
            skipped: true,
            note: reason,
            millis: 0,
        }]);
    }
    let started = Instant::now();
    let mut ctx = Ctx {
        plane: HallPlane::new(field),
        deadline: Deadline::new(def.name, field.q(), budget),
        check: def.name,
        rows: Vec::new(),
    };
    (def.run)(&mut ctx)?;
    let ms = started.elapsed().as_millis() as u64;
    for row in &mut ctx.rows {
        row.millis = ms;
    }
    Ok(ctx.rows)
}

/// Run the configured checks over the configured fields, merge results
/// deterministically, and persist them when an output directory is set.
/// The error (not a failed row) channel carries config problems and
/// per-check budget overruns.
pub fn run_census(cfg: &CensusConfig) -> Result<CensusReport, CensusError> {
    let defs = resolve_checks(cfg)?;
    let fields: Vec<Field> = cfg
        .fields
        .iter()
        .map(Field::from_spec)
        .collect::<Result<_, _>>()?;
    let budget = Duration::from_secs(cfg.budget_secs);

    let mut tasks: Vec<(&'static CheckDef, &Field)> = Vec::new();
    for def in &defs {
        for field in &fields {
            tasks.push((def, field));
        }
    }
    tasks.sort_by_key(|(def, field)| (def.name, field.q()));

    let outcomes: Vec<Result<Vec<CheckResult>, CensusError>> = if cfg.jobs == 1 {
        tasks
            .iter()
            .map(|&(def, field)| run_task(def, field, budget))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| CensusError::Pool(e.to_string()))?;
        pool.install(|| {
            tasks
                .par_iter()
                .map(|&(def, field)| run_task(def, field, budget))
                .collect()
        })
    };

    let mut results = Vec::new();
    for outcome in outcomes {
        results.extend(outcome?);
    }
    results.sort_by(|a, b| {
        (&a.check, a.q, &a.conic, &a.expected).cmp(&(&b.check, b.q, &b.conic, &b.expected))
    });
    if !cfg.timestamp {
        for r in &mut results {
            r.millis = 0;
        }
    }

    let mut q_values: Vec<u32> = fields.iter().map(Field::q).collect();
    q_values.sort_unstable();
    q_values.dedup();
    let report = CensusReport {
        schema: 1,
        generated_at: cfg.timestamp.then(|| {
            SystemTime::now()
                .duration_since(SystemTime::UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0)
        }),
        q_values,
        passed: results.iter().filter(|r| r.pass && !r.skipped).count(),
        failed: results.iter().filter(|r| !r.pass).count(),
        skipped: results.iter().filter(|r| r.skipped).count(),
        results,
    };

    if let Some(dir) = &cfg.out_dir {
        fs::create_dir_all(dir)?;
        match cfg.format {
            ReportFormat::Json => {
                let mut out = serde_json::to_string_pretty(&report)?;
                out.push('\n');
                fs::write(dir.join("census.json"), out)?;
            }
            ReportFormat::Csv => {
                let mut buf = Vec::new();
                write_results_csv(&report, &mut buf)?;
                fs::write(dir.join("census.csv"), buf)?;
            }
        }
    }
    Ok(report)
}

/// CSV rows for a report; the schema version rides along as a column.
pub fn write_results_csv(report: &CensusReport, w: &mut impl Write) -> Result<(), CensusError> {
    writeln!(w, "schema,check,q,conic,expected,actual,pass,skipped,note,millis")?;
    for r in &report.results {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            report.schema,
            csv_field(&r.check),
            r.q,
            csv_field(&r.conic),
            csv_field(&r.expected),
            csv_field(&r.actual),
            r.pass,
            r.skipped,
            csv_field(&r.note),
            r.millis
        )?;
    }
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// The full registered suite at the given fields; hypothesis-guarded
/// checks outside their range report as skipped rather than failing.
pub fn verify_all(
    fields: &[FieldSpec],
    jobs: usize,
    budget_secs: u64,
) -> Result<CensusReport, CensusError> {
    let mut cfg = CensusConfig::new(fields.to_vec());
    cfg.checks = all_check_names();
    cfg.jobs = jobs;
    cfg.budget_secs = budget_secs;
    run_census(&cfg)
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(p: u32, k: u32) -> FieldSpec {
        Field::new(p, k).unwrap().spec()
    }

    fn cfg_for(checks: &[&str], specs: &[(u32, u32)]) -> CensusConfig {
        let mut cfg = CensusConfig::new(specs.iter().map(|&(p, k)| spec(p, k)).collect());
        cfg.checks = checks.iter().map(|s| s.to_string()).collect();
        cfg.timestamp = false;
        cfg
    }

    #[test]
    fn registry_names_unique_and_families_known() {
        let mut names: Vec<&str> = REGISTRY.iter().map(|c| c.name).collect();
        names.sort_unstable();
        let n = names.len();
        names.dedup();
        assert_eq!(n, names.len());
        for def in &REGISTRY {
            assert!(FAMILIES.contains(&def.family), "family {}", def.family);
        }
    }

    #[test]
    fn unknown_names_rejected_at_parse() {
        let cfg = cfg_for(&["no_such_check"], &[(3, 1)]);
        assert!(matches!(
            run_census(&cfg),
            Err(CensusError::UnknownCheck(name)) if name == "no_such_check"
        ));
        let mut cfg = cfg_for(&["hall_axioms"], &[(3, 1)]);
        cfg.families = vec!["septic".to_string()];
        assert!(matches!(
            run_census(&cfg),
            Err(CensusError::UnknownFamily(name)) if name == "septic"
        ));
    }

    #[test]
    fn empty_check_list_yields_zero_results() {
        let cfg = cfg_for(&[], &[(3, 1)]);
        let report = run_census(&cfg).unwrap();
        assert!(report.results.is_empty());
        assert!(report.all_pass());
    }

    #[test]
    fn hypothesis_guards_skip_with_reason() {
        // q = 2: every odd-q and q>3 check must skip, not fail
        let report = run_census(&cfg_for(
            &["sk_triangles_odd", "okp_complete_arc", "hyperbola_one_in_d"],
            &[(2, 1)],
        ))
        .unwrap();
        assert_eq!(report.results.len(), 3);
        for row in &report.results {
            assert!(row.skipped, "{row:?}");
            assert!(row.pass);
            assert!(!row.note.is_empty());
        }
        // q = 9 is odd: the even-q cubic-root branch reports a skip
        let report = run_census(&cfg_for(&["nbeta_roots"], &[(3, 2)])).unwrap();
        assert_eq!(report.results.len(), 1);
        assert!(report.results[0].skipped);
        assert!(report.results[0].note.contains("even"));
    }

    #[test]
    fn a3_a4_results_match_closed_forms_at_3_and_5() {
        let report = run_census(&cfg_for(&["a3_a4_parabola_odd"], &[(3, 1), (5, 1)])).unwrap();
        assert_eq!(report.results.len(), 2);
        assert!(report.all_pass());
        assert!(report.results[0].expected.contains("a3=4 a4=0"));
        assert!(report.results[1].expected.contains("a3=12 a4=2"));
    }

    #[test]
    fn parallel_and_serial_runs_agree() {
        let checks = ["hall_axioms", "a3_a4_parabola_odd", "triples_crosscheck"];
        let mut serial = cfg_for(&checks, &[(3, 1), (2, 2)]);
        serial.jobs = 1;
        let mut parallel = cfg_for(&checks, &[(3, 1), (2, 2)]);
        parallel.jobs = 4;
        let a = run_census(&serial).unwrap();
        let b = run_census(&parallel).unwrap();
        assert_eq!(a.results, b.results);
    }

    #[test]
    fn zero_budget_times_out_with_distinct_error() {
        let mut cfg = cfg_for(&["sk_triangles_odd"], &[(3, 1)]);
        cfg.budget_secs = 0;
        match run_census(&cfg) {
            Err(CensusError::Timeout { check, q, .. }) => {
                assert_eq!(check, "sk_triangles_odd");
                assert_eq!(q, 3);
            }
            other => panic!("expected a timeout, got {other:?}"),
        }
    }

    #[test]
    fn persisted_outputs_are_byte_reproducible() {
        let dir = std::env::temp_dir().join(format!("hallcensus-test-{}", std::process::id()));
        let mut cfg = cfg_for(&["hall_axioms"], &[(3, 1)]);
        cfg.out_dir = Some(dir.clone());
        cfg.format = ReportFormat::Csv;
        run_census(&cfg).unwrap();
        let first = fs::read(dir.join("census.csv")).unwrap();
        run_census(&cfg).unwrap();
        let second = fs::read(dir.join("census.csv")).unwrap();
        assert_eq!(first, second);
        let text = String::from_utf8(first).unwrap();
        assert!(text.starts_with("schema,check,q,"));
        assert!(text.lines().skip(1).all(|l| l.starts_with("1,")));
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn json_report_carries_schema_and_optional_timestamp() {
        let mut cfg = cfg_for(&["hall_axioms"], &[(3, 1)]);
        let report = run_census(&cfg).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(value["schema"], 1);
        assert!(value.get("generated_at").is_none());
        cfg.timestamp = true;
        let report = run_census(&cfg).unwrap();
        let value: serde_json::Value =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert!(value["generated_at"].as_u64().is_some());
    }

    #[test]
    fn open_question_table_is_deterministic_and_consistent() {
        let f3 = Field::new(3, 1).unwrap();
        let rows = emit_open_question_table(&[f3.clone()], Duration::from_secs(60)).unwrap();
        let again = emit_open_question_table(&[f3], Duration::from_secs(60)).unwrap();
        assert_eq!(rows, again);
        // q=3 data: three ellipse classes (s = 1, 2, 3) and two hyperbola
        // classes, all matching the closed formula
        assert_eq!(rows.len(), 5);
        for row in &rows {
            let s = row.s as u64;
            assert_eq!(row.triples, 2 * s * choose2(4 - s) + 2 * choose3(s));
        }
        let mut buf = Vec::new();
        write_open_question_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("q,kind,s,a3,a4,triples\n"));
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn open_question_table_rejects_even_q() {
        let f4 = Field::new(2, 2).unwrap();
        assert!(matches!(
            emit_open_question_table(&[f4], Duration::from_secs(60)),
            Err(CensusError::EvenOrder(4))
        ));
    }

    #[test]
    fn family_filter_restricts_checks() {
        let mut cfg = cfg_for(&["a3_a4_parabola_odd", "okp_complete_arc"], &[(5, 1)]);
        cfg.families = vec!["parabola".to_string()];
        let report = run_census(&cfg).unwrap();
        assert!(report.results.iter().all(|r| r.check == "a3_a4_parabola_odd"));
        assert!(!report.results.is_empty());
    }

    #[test]
    fn full_suite_passes_at_q3() {
        let report = verify_all(&[spec(3, 1)], 0, DEFAULT_BUDGET_SECS).unwrap();
        assert_eq!(report.failed, 0, "{:#?}", report.failures().collect::<Vec<_>>());
        assert!(report.passed > 0);
        assert!(report.skipped > 0); // even-q checks skip at q=3
        assert_eq!(
            report.results.iter().map(|r| r.check.as_str()).collect::<BTreeSet<_>>().len(),
            REGISTRY.len()
        );
    }
}
