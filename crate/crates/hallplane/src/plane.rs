//! PG(2, q²), the standard derivation set, and the affine Hall plane.
//!
//! Derivation keeps every line of AG(2, q²) whose slope lies outside
//! GF(q) ∪ {∞} ("old" lines) and replaces the others by the translates of
//! the GF(q)-subplane {(λu, λv) : u, v ∈ GF(q)} ("new" lines). New lines
//! are stored in canonical form — direction λ least in its coset λ·GF(q)*,
//! base the least point of the line — so equality of lines is equality of
//! representations.

use std::io::Write;

use serde_json::json;

use crate::field::{Field, FieldElement};

// ============================================================================
// Projective and affine points, projective lines
// ============================================================================

/// Point of PG(2, q²), normalized so the last nonzero coordinate is 1.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjPoint {
    x: FieldElement,
    y: FieldElement,
    z: FieldElement,
}

impl ProjPoint {
    pub fn new(f: &Field, x: FieldElement, y: FieldElement, z: FieldElement) -> ProjPoint {
        assert!(
            !(x.is_zero() && y.is_zero() && z.is_zero()),
            "projective point needs a nonzero coordinate"
        );
        let scale = if !z.is_zero() {
            z
        } else if !y.is_zero() {
            y
        } else {
            x
        };
        let s = f.inv(scale);
        ProjPoint {
            x: f.mul(x, s),
            y: f.mul(y, s),
            z: f.mul(z, s),
        }
    }

    pub fn infinite(f: &Field, x: FieldElement, y: FieldElement) -> ProjPoint {
        ProjPoint::new(f, x, y, f.zero())
    }

    pub fn from_affine(f: &Field, p: AffinePoint) -> ProjPoint {
        ProjPoint {
            x: p.x,
            y: p.y,
            z: f.one(),
        }
    }

    pub fn x(&self) -> FieldElement {
        self.x
    }

    pub fn y(&self) -> FieldElement {
        self.y
    }

    pub fn z(&self) -> FieldElement {
        self.z
    }

    pub fn is_infinite(&self) -> bool {
        self.z.is_zero()
    }

    pub fn to_affine(&self) -> Option<AffinePoint> {
        (!self.is_infinite()).then_some(AffinePoint {
            x: self.x,
            y: self.y,
        })
    }
}

/// Point of the affine plane AG(2, q²) (and of the Hall plane — derivation
/// keeps the point set).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffinePoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl AffinePoint {
    pub fn new(x: FieldElement, y: FieldElement) -> AffinePoint {
        AffinePoint { x, y }
    }
}

/// Line of PG(2, q²): [a : b : c] with ax + by + cz = 0, normalized like a
/// point.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ProjLine {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
}

impl ProjLine {
    pub fn new(f: &Field, a: FieldElement, b: FieldElement, c: FieldElement) -> ProjLine {
        let p = ProjPoint::new(f, a, b, c);
        ProjLine {
            a: p.x,
            b: p.y,
            c: p.z,
        }
    }

    /// The unique line through two distinct points (cross product).
    pub fn through(f: &Field, p: &ProjPoint, q: &ProjPoint) -> ProjLine {
        assert_ne!(p, q, "two coincident points do not span a line");
        let a = f.sub(f.mul(p.y, q.z), f.mul(p.z, q.y));
        let b = f.sub(f.mul(p.z, q.x), f.mul(p.x, q.z));
        let c = f.sub(f.mul(p.x, q.y), f.mul(p.y, q.x));
        ProjLine::new(f, a, b, c)
    }

    pub fn contains(&self, f: &Field, p: &ProjPoint) -> bool {
        let s = f.add(
            f.add(f.mul(self.a, p.x), f.mul(self.b, p.y)),
            f.mul(self.c, p.z),
        );
        s.is_zero()
    }

    /// The point where this line meets z = 0; `None` for the line at
    /// infinity itself.
    pub fn infinite_point(&self, f: &Field) -> Option<ProjPoint> {
        if self.a.is_zero() && self.b.is_zero() {
            return None;
        }
        Some(ProjPoint::new(f, f.neg(self.b), self.a, f.zero()))
    }

    /// Intersection point of two distinct lines (cross product, dual).
    pub fn meet(&self, f: &Field, other: &ProjLine) -> ProjPoint {
        assert_ne!(self, other, "two coincident lines do not meet in a point");
        let x = f.sub(f.mul(self.b, other.c), f.mul(self.c, other.b));
        let y = f.sub(f.mul(self.c, other.a), f.mul(self.a, other.c));
        let z = f.sub(f.mul(self.a, other.b), f.mul(self.b, other.a));
        ProjPoint::new(f, x, y, z)
    }
}

/// All q⁴+q²+1 points of PG(2, q²), in deterministic order (affine chart
/// first, then the line at infinity).
pub fn projective_points(f: &Field) -> Vec<ProjPoint> {
    let one = f.one();
    let zero = f.zero();
    let mut out = Vec::with_capacity((f.size() as usize + 1) * f.size() as usize + 1);
    for x in f.elements() {
        for y in f.elements() {
            out.push(ProjPoint { x, y, z: one });
        }
    }
    for x in f.elements() {
        out.push(ProjPoint {
            x,
            y: one,
            z: zero,
        });
    }
    out.push(ProjPoint {
        x: one,
        y: zero,
        z: zero,
    });
    out
}

/// All lines of PG(2, q²), in deterministic order (dual to
/// [`projective_points`]).
pub fn projective_lines(f: &Field) -> Vec<ProjLine> {
    projective_points(f)
        .into_iter()
        .map(|p| ProjLine {
            a: p.x,
            b: p.y,
            c: p.z,
        })
        .collect()
}

/// The q²+q+1 points of the standard Baer subplane PG(2, q): projective
/// points with all coordinates in GF(q).
pub fn subplane_points(f: &Field) -> Vec<ProjPoint> {
    let one = f.one();
    let zero = f.zero();
    let mut out = Vec::new();
    for x in f.subfield_elements() {
        for y in f.subfield_elements() {
            out.push(ProjPoint { x, y, z: one });
        }
    }
    for x in f.subfield_elements() {
        out.push(ProjPoint {
            x,
            y: one,
            z: zero,
        });
    }
    out.push(ProjPoint {
        x: one,
        y: zero,
        z: zero,
    });
    out
}

/// The lines of PG(2, q²) with a representative over GF(q) (the line set of
/// the standard Baer subplane), in deterministic order.
pub fn subplane_lines(f: &Field) -> Vec<ProjLine> {
    subplane_points(f)
        .into_iter()
        .map(|p| ProjLine {
            a: p.x,
            b: p.y,
            c: p.z,
        })
        .collect()
}

// ============================================================================
// Derivation set
// ============================================================================

/// The standard derivation set D = {(x : y : 0) : x, y ∈ GF(q)}: the q+1
/// infinite points whose slope lies in GF(q) ∪ {∞}.
#[derive(Clone)]
pub struct DerivationSet {
    field: Field,
    points: Vec<ProjPoint>,
}

impl DerivationSet {
    pub fn standard(field: &Field) -> DerivationSet {
        let mut points: Vec<ProjPoint> = field
            .subfield_elements()
            .map(|m| ProjPoint::infinite(field, field.one(), m))
            .collect();
        points.push(ProjPoint::infinite(field, field.zero(), field.one()));
        points.sort();
        debug_assert_eq!(points.len(), field.q() as usize + 1);
        DerivationSet {
            field: field.clone(),
            points,
        }
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Membership test for a point of the line at infinity. Panics on an
    /// affine point — callers decide separately what finite points mean.
    pub fn contains(&self, p: &ProjPoint) -> bool {
        assert!(
            p.is_infinite(),
            "derivation-set membership is only defined on the line at infinity"
        );
        self.field.in_subfield(p.x) && self.field.in_subfield(p.y)
    }
}

// ============================================================================
// Hall lines
// ============================================================================

/// A line of the affine Hall plane of order q².
///
/// `Old` lines survive derivation: y = mx + b with slope m ∉ GF(q).
/// `New` lines are Baer-subplane translates {(a+λu, b+λv) : u, v ∈ GF(q)},
/// stored canonically (λ least in λ·GF(q)*, base the least line point), so
/// derived equality coincides with point-set equality.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum HallLine {
    Old {
        slope: FieldElement,
        intercept: FieldElement,
    },
    New {
        dir: FieldElement,
        base: AffinePoint,
    },
}

impl HallLine {
    pub fn is_new(&self) -> bool {
        matches!(self, HallLine::New { .. })
    }
}

// ============================================================================
// The Hall plane
// ============================================================================

/// The affine Hall plane of order q², with canonicalization tables for its
/// new lines. Immutable after construction; all queries are pure.
pub struct HallPlane {
    field: Field,
    derivation: DerivationSet,
    /// Canonical direction representatives, one per coset of GF(q)*, in
    /// ascending index order (q+1 of them).
    dirs: Vec<FieldElement>,
    /// For every nonzero λ: position in `dirs` of its coset representative.
    dir_pos: Vec<u32>,
    /// Per direction d: cmin[d][a] = least index in the additive coset
    /// a + dirs[d]·GF(q).
    cmin: Vec<Vec<u32>>,
    subfield: Vec<FieldElement>,
}

impl HallPlane {
    pub fn new(field: &Field) -> HallPlane {
        let n = field.size() as usize;
        let subfield: Vec<FieldElement> = field.subfield_elements().collect();

        let mut dir_pos = vec![u32::MAX; n];
        let mut dirs = Vec::with_capacity(field.q() as usize + 1);
        for lam in field.elements().skip(1) {
            if dir_pos[lam.index()] != u32::MAX {
                continue;
            }
            let d = dirs.len() as u32;
            for &u in &subfield {
                if !u.is_zero() {
                    dir_pos[field.mul(lam, u).index()] = d;
                }
            }
            dirs.push(lam);
        }
        debug_assert_eq!(dirs.len(), field.q() as usize + 1);

        let mut cmin = Vec::with_capacity(dirs.len());
        for &lam in &dirs {
            let coset: Vec<FieldElement> = subfield.iter().map(|&u| field.mul(lam, u)).collect();
            let mut table = vec![u32::MAX; n];
            for a in field.elements() {
                if table[a.index()] != u32::MAX {
                    continue;
                }
                for &s in &coset {
                    table[field.add(a, s).index()] = a.index() as u32;
                }
            }
            cmin.push(table);
        }

        HallPlane {
            derivation: DerivationSet::standard(field),
            field: field.clone(),
            dirs,
            dir_pos,
            cmin,
            subfield,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    /// Order of the plane (= q², the number of points on a line).
    pub fn order(&self) -> u32 {
        self.field.size()
    }

    pub fn derivation_set(&self) -> &DerivationSet {
        &self.derivation
    }

    /// The q+1 canonical direction representatives of new lines.
    pub fn new_directions(&self) -> &[FieldElement] {
        &self.dirs
    }

    /// Canonical representative of the coset λ·GF(q)*. Panics on zero.
    pub fn canonical_dir(&self, lam: FieldElement) -> FieldElement {
        assert!(!lam.is_zero(), "direction must be nonzero");
        self.dirs[self.dir_pos[lam.index()] as usize]
    }

    fn dir_index(&self, dir: FieldElement) -> usize {
        self.dir_pos[dir.index()] as usize
    }

    /// The canonical new line with direction coset λ·GF(q)* through a point.
    pub fn new_line_with_dir_through(&self, lam: FieldElement, p: AffinePoint) -> HallLine {
        let d = self.dir_index(self.canonical_dir(lam));
        let t = &self.cmin[d];
        HallLine::New {
            dir: self.dirs[d],
            base: AffinePoint {
                x: self.field.element(t[p.x.index()] as usize),
                y: self.field.element(t[p.y.index()] as usize),
            },
        }
    }

    /// The q+1 new lines through a point, one per direction class.
    pub fn new_lines_through(&self, p: AffinePoint) -> Vec<HallLine> {
        self.dirs
            .iter()
            .map(|&lam| self.new_line_with_dir_through(lam, p))
            .collect()
    }

    /// All q²+1 Hall lines through a point: q+1 new, q²−q old.
    pub fn lines_through(&self, p: AffinePoint) -> Vec<HallLine> {
        let f = &self.field;
        let mut out = self.new_lines_through(p);
        for m in f.elements() {
            if f.in_subfield(m) {
                continue;
            }
            out.push(HallLine::Old {
                slope: m,
                intercept: f.sub(p.y, f.mul(m, p.x)),
            });
        }
        out
    }

    /// The unique Hall line through two distinct points.
    pub fn hall_line_through(&self, p: AffinePoint, r: AffinePoint) -> HallLine {
        assert_ne!(p, r, "two coincident points do not span a line");
        let f = &self.field;
        let dx = f.sub(r.x, p.x);
        let dy = f.sub(r.y, p.y);
        if !dx.is_zero() {
            let slope = f.div(dy, dx);
            if !f.in_subfield(slope) {
                return HallLine::Old {
                    slope,
                    intercept: f.sub(p.y, f.mul(slope, p.x)),
                };
            }
            return self.new_line_with_dir_through(dx, p);
        }
        self.new_line_with_dir_through(dy, p)
    }

    /// Membership, decided algebraically (no point-set materialization).
    pub fn contains(&self, line: HallLine, p: AffinePoint) -> bool {
        let f = &self.field;
        match line {
            HallLine::Old { slope, intercept } => {
                p.y == f.add(f.mul(slope, p.x), intercept)
            }
            HallLine::New { dir, base } => {
                let u = f.div(f.sub(p.x, base.x), dir);
                let v = f.div(f.sub(p.y, base.y), dir);
                f.in_subfield(u) && f.in_subfield(v)
            }
        }
    }

    /// The q² points of a line, in a deterministic order.
    pub fn line_points(&self, line: HallLine) -> Vec<AffinePoint> {
        let f = &self.field;
        match line {
            HallLine::Old { slope, intercept } => f
                .elements()
                .map(|x| AffinePoint {
                    x,
                    y: f.add(f.mul(slope, x), intercept),
                })
                .collect(),
            HallLine::New { dir, base } => {
                let mut out = Vec::with_capacity(self.subfield.len() * self.subfield.len());
                for &u in &self.subfield {
                    let x = f.add(base.x, f.mul(dir, u));
                    for &v in &self.subfield {
                        out.push(AffinePoint {
                            x,
                            y: f.add(base.y, f.mul(dir, v)),
                        });
                    }
                }
                out
            }
        }
    }

    /// All (q+1)q² canonical new lines, in deterministic order.
    pub fn enumerate_new_lines(&self) -> Vec<HallLine> {
        let f = &self.field;
        let mut out = Vec::new();
        for (d, &lam) in self.dirs.iter().enumerate() {
            let t = &self.cmin[d];
            let reps: Vec<FieldElement> = f
                .elements()
                .filter(|e| t[e.index()] as usize == e.index())
                .collect();
            for &bx in &reps {
                for &by in &reps {
                    out.push(HallLine::New {
                        dir: lam,
                        base: AffinePoint { x: bx, y: by },
                    });
                }
            }
        }
        out
    }

    /// All q²(q²−q) old lines, in deterministic order.
    pub fn enumerate_old_lines(&self) -> Vec<HallLine> {
        let f = &self.field;
        let mut out = Vec::new();
        for slope in f.elements() {
            if f.in_subfield(slope) {
                continue;
            }
            for intercept in f.elements() {
                out.push(HallLine::Old { slope, intercept });
            }
        }
        out
    }

    pub fn enumerate_all_lines(&self) -> Vec<HallLine> {
        let mut out = self.enumerate_new_lines();
        out.extend(self.enumerate_old_lines());
        out
    }

    /// Image of a line under the translation (x, y) ↦ (x+s, y+t),
    /// re-canonicalized. Translations preserve the line type.
    pub fn translate_line(&self, line: HallLine, s: FieldElement, t: FieldElement) -> HallLine {
        let f = &self.field;
        match line {
            HallLine::Old { slope, intercept } => HallLine::Old {
                slope,
                intercept: f.add(f.sub(intercept, f.mul(slope, s)), t),
            },
            HallLine::New { dir, base } => self.new_line_with_dir_through(
                dir,
                AffinePoint {
                    x: f.add(base.x, s),
                    y: f.add(base.y, t),
                },
            ),
        }
    }

    /// Membership of an infinite point in the derivation set. Panics when
    /// the point is affine.
    pub fn in_derivation_set(&self, p: &ProjPoint) -> bool {
        self.derivation.contains(p)
    }

    /// The q²+q+1 points of the Baer subplane spanned by a new line: its q²
    /// affine points plus all of D. Panics on an old line.
    pub fn baer_subplane_points(&self, line: HallLine) -> Vec<ProjPoint> {
        assert!(
            line.is_new(),
            "only new lines span Baer subplanes containing the derivation set"
        );
        let f = &self.field;
        let mut pts: Vec<ProjPoint> = self
            .line_points(line)
            .into_iter()
            .map(|p| ProjPoint::from_affine(f, p))
            .collect();
        pts.extend_from_slice(self.derivation.points());
        pts
    }

    /// Exhaustive 2-design check: n² points, n²+n lines of n points each,
    /// every point pair on exactly one line. This characterizes an affine
    /// plane of order n = q².
    pub fn verify_affine_plane_axioms(&self) -> Result<(), String> {
        let n = self.order() as usize;
        let lines = self.enumerate_all_lines();
        if lines.len() != n * n + n {
            return Err(format!("expected {} lines, found {}", n * n + n, lines.len()));
        }
        let mut seen = vec![false; n * n * n * n];
        let mut marked = 0usize;
        for &line in &lines {
            let pts = self.line_points(line);
            if pts.len() != n {
                return Err(format!("line {line:?} has {} points, expected {n}", pts.len()));
            }
            let mut ids: Vec<usize> = pts
                .iter()
                .map(|p| p.x.index() * n + p.y.index())
                .collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() != n {
                return Err(format!("line {line:?} has repeated points"));
            }
            for i in 0..ids.len() {
                for j in (i + 1)..ids.len() {
                    let key = ids[i] * n * n + ids[j];
                    if seen[key] {
                        return Err(format!(
                            "point pair ({}, {}) lies on two lines",
                            ids[i], ids[j]
                        ));
                    }
                    seen[key] = true;
                    marked += 1;
                }
            }
        }
        let total = n * n * (n * n - 1) / 2;
        if marked != total {
            return Err(format!("covered {marked} point pairs of {total}"));
        }
        Ok(())
    }

    /// Write every line as one JSON object per line (JSON Lines), new lines
    /// first, optionally materializing the point sets.
    pub fn dump_lines(&self, emit_points: bool, w: &mut impl Write) -> std::io::Result<()> {
        let f = &self.field;
        let co = |e: FieldElement| f.coords(e);
        for line in self.enumerate_all_lines() {
            let mut obj = match line {
                HallLine::New { dir, base } => json!({
                    "type": "new",
                    "dir": co(dir),
                    "base": [co(base.x), co(base.y)],
                }),
                HallLine::Old { slope, intercept } => json!({
                    "type": "old",
                    "slope": co(slope),
                    "intercept": co(intercept),
                }),
            };
            if emit_points {
                let pts: Vec<_> = self
                    .line_points(line)
                    .into_iter()
                    .map(|p| json!([co(p.x), co(p.y)]))
                    .collect();
                obj["points"] = json!(pts);
            }
            writeln!(w, "{obj}")?;
        }
        Ok(())
    }
}

// ============================================================================
// Tests
// ============================================================================
