//! Conics of PG(2, q²): construction with nondegeneracy validation,
//! classification by behaviour at infinity, tangents, nucleus (even q),
//! external/internal point classification (odd q), and how subplane conics
//! extend.
//!
//! A conic is the zero set of Q(X,Y,Z) = c_xx X² + c_xy XY + c_yy Y² +
//! c_xz XZ + c_yz YZ + c_zz Z². Nondegeneracy is verified by exhaustive
//! point enumeration (exactly q²+1 points, none singular), which is uniform
//! over both characteristics.

use crate::field::{Field, FieldElement};
use crate::plane::{
    projective_points, subplane_points, AffinePoint, DerivationSet, ProjLine, ProjPoint,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConicError {
    #[error("conic is degenerate: {0}")]
    Degenerate(String),
    #[error("cannot parse conic {0:?}: {1}")]
    BadLiteral(String, String),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ConicKind {
    Ellipse,
    Parabola,
    Hyperbola,
}

impl ConicKind {
    pub fn name(self) -> &'static str {
        match self {
            ConicKind::Ellipse => "ellipse",
            ConicKind::Parabola => "parabola",
            ConicKind::Hyperbola => "hyperbola",
        }
    }
}

/// Position of a point relative to a conic, for odd q: external points lie
/// on exactly two tangents, internal points on none.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PointPosition {
    On,
    External,
    Internal,
}

/// Cached classification data: kind, the points at infinity with their
/// derivation-set membership, whether the two infinite points of a
/// hyperbola are swapped by conjugation, and (even q) the nucleus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicClass {
    pub kind: ConicKind,
    pub infinite_points: Vec<ProjPoint>,
    pub infinite_in_d: Vec<bool>,
    pub conjugate_infinite_pair: bool,
    pub nucleus: Option<ProjPoint>,
    pub nucleus_in_d: bool,
}

/// External/internal/on counts over the q+1 points of the derivation set
/// (odd q). `external` is the quantity the secant-spectrum results are
/// parameterized by.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DerivationCounts {
    pub external: u32,
    pub internal: u32,
    pub on: u32,
}

/// How a line of the Baer subplane relates to a subplane conic and to its
/// extension: subplane tangents extend to tangents, every other subplane
/// line becomes a secant of the extended conic.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ExtensionRelation {
    TangentToTangent,
    NonTangentToSecant,
}

/// A nondegenerate conic of PG(2, q²) with its q²+1 points and
/// classification cached at construction.
#[derive(Clone)]
pub struct Conic {
    field: Field,
    coeffs: [FieldElement; 6],
    points: Vec<ProjPoint>,
    affine: Vec<AffinePoint>,
    class: ConicClass,
}

impl std::fmt::Debug for Conic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Conic({}, {})", self.literal(), self.class.kind.name())
    }
}

impl Conic {
    /// Build a conic from coefficients `[c_xx, c_xy, c_yy, c_xz, c_yz, c_zz]`,
    /// enumerating its points and rejecting degenerate forms (wrong point
    /// count or a singular point).
    pub fn new(field: &Field, coeffs: [FieldElement; 6]) -> Result<Conic, ConicError> {
        let f = field;
        let [c0, c1, c2, c3, c4, c5] = coeffs;
        let n = f.size() as usize;

        let mut points = Vec::with_capacity(n + 1);
        let mut affine = Vec::with_capacity(n + 1);
        for x in f.elements() {
            // Q(x, y, 1) = c_yy·y² + (c_xy·x + c_yz)·y + (c_xx·x² + c_xz·x + c_zz)
            let bx = f.add(f.mul(c1, x), c4);
            let cx = f.add(f.add(f.mul(f.mul(c0, x), x), f.mul(c3, x)), c5);
            for y in f.elements() {
                let v = f.add(f.add(f.mul(f.mul(c2, y), y), f.mul(bx, y)), cx);
                if v.is_zero() {
                    points.push(ProjPoint::new(f, x, y, f.one()));
                    affine.push(AffinePoint::new(x, y));
                }
            }
        }
        let mut infinite = Vec::new();
        for x in f.elements() {
            // Q(x, 1, 0)
            let v = f.add(f.add(f.mul(f.mul(c0, x), x), f.mul(c1, x)), c2);
            if v.is_zero() {
                infinite.push(ProjPoint::infinite(f, x, f.one()));
            }
        }
        if c0.is_zero() {
            infinite.push(ProjPoint::infinite(f, f.one(), f.zero()));
        }
        points.extend_from_slice(&infinite);

        if points.len() != n + 1 {
            return Err(ConicError::Degenerate(format!(
                "{} projective zeros, expected {}",
                points.len(),
                n + 1
            )));
        }
        let grad = |p: &ProjPoint| -> (FieldElement, FieldElement, FieldElement) {
            let two = |c: FieldElement| f.add(c, c);
            let gx = f.add(f.add(f.mul(two(c0), p.x()), f.mul(c1, p.y())), f.mul(c3, p.z()));
            let gy = f.add(f.add(f.mul(c1, p.x()), f.mul(two(c2), p.y())), f.mul(c4, p.z()));
            let gz = f.add(f.add(f.mul(c3, p.x()), f.mul(c4, p.y())), f.mul(two(c5), p.z()));
            (gx, gy, gz)
        };
        for p in &points {
            let (gx, gy, gz) = grad(p);
            if gx.is_zero() && gy.is_zero() && gz.is_zero() {
                return Err(ConicError::Degenerate(format!(
                    "singular point ({}:{}:{})",
                    f.show(p.x()),
                    f.show(p.y()),
                    f.show(p.z())
                )));
            }
        }

        let kind = match infinite.len() {
            0 => ConicKind::Ellipse,
            1 => ConicKind::Parabola,
            2 => ConicKind::Hyperbola,
            k => unreachable!("{k} infinite points on a nondegenerate conic"),
        };
        let in_d = |p: &ProjPoint| f.in_subfield(p.x()) && f.in_subfield(p.y());
        let infinite_in_d: Vec<bool> = infinite.iter().map(in_d).collect();
        let conjugate_infinite_pair = infinite.len() == 2 && {
            let c = ProjPoint::new(
                f,
                f.conj(infinite[0].x()),
                f.conj(infinite[0].y()),
                f.zero(),
            );
            c == infinite[1]
        };
        let (nucleus, nucleus_in_d) = if f.has_even_order() {
            // Radical of the polarization: (c_yz : c_xz : c_xy). Not all
            // three vanish, else Q would be a square (degenerate).
            let nuc = ProjPoint::new(f, c4, c3, c1);
            let nid = nuc.is_infinite() && in_d(&nuc);
            (Some(nuc), nid)
        } else {
            (None, false)
        };

        Ok(Conic {
            field: f.clone(),
            coeffs,
            points,
            affine,
            class: ConicClass {
                kind,
                infinite_points: infinite,
                infinite_in_d,
                conjugate_infinite_pair,
                nucleus,
                nucleus_in_d,
            },
        })
    }

    // ------------------------------------------------------------------
    // Named families
    // ------------------------------------------------------------------

    /// (X + uY)² + vXZ + wYZ + zc·Z², the parabola family with infinite
    /// point (−u : 1 : 0). Degenerate exactly when w = uv.
    pub fn parabola(
        f: &Field,
        u: FieldElement,
        v: FieldElement,
        w: FieldElement,
        zc: FieldElement,
    ) -> Result<Conic, ConicError> {
        Conic::new(f, [f.one(), f.add(u, u), f.sq(u), v, w, zc])
    }

    /// XY − dZ², the hyperbola through (1:0:0) and (0:1:0).
    pub fn hyperbola_xy(f: &Field, d: FieldElement) -> Result<Conic, ConicError> {
        Conic::new(
            f,
            [f.zero(), f.one(), f.zero(), f.zero(), f.zero(), f.neg(d)],
        )
    }

    /// X² + XY + cY² + uXZ + vYZ + wZ². For c ∉ GF(q) this is an ellipse or
    /// a hyperbola whose infinite points avoid D and are non-conjugate.
    pub fn normal_form(
        f: &Field,
        c: FieldElement,
        u: FieldElement,
        v: FieldElement,
        w: FieldElement,
    ) -> Result<Conic, ConicError> {
        Conic::new(f, [f.one(), f.one(), c, u, v, w])
    }

    /// X² + aXY + bY² = w, a conic with its center at the origin (no linear
    /// terms). Every ellipse is a translate of one of these when q is odd.
    pub fn centered(
        f: &Field,
        a: FieldElement,
        b: FieldElement,
        w: FieldElement,
    ) -> Result<Conic, ConicError> {
        Conic::new(f, [f.one(), a, b, f.zero(), f.zero(), f.neg(w)])
    }

    // ------------------------------------------------------------------
    // Accessors and evaluation
    // ------------------------------------------------------------------

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coefficients(&self) -> [FieldElement; 6] {
        self.coeffs
    }

    pub fn classify(&self) -> &ConicClass {
        &self.class
    }

    pub fn kind(&self) -> ConicKind {
        self.class.kind
    }

    /// All q²+1 projective points, affine chart first.
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn affine_points(&self) -> &[AffinePoint] {
        &self.affine
    }

    pub fn infinite_points(&self) -> &[ProjPoint] {
        &self.class.infinite_points
    }

    /// The nucleus (common point of all tangents). Panics for odd q, where
    /// no nucleus exists.
    pub fn nucleus(&self) -> ProjPoint {
        assert!(
            self.field.has_even_order(),
            "the nucleus exists only in even characteristic"
        );
        self.class.nucleus.unwrap()
    }

    pub fn eval_xyz(&self, x: FieldElement, y: FieldElement, z: FieldElement) -> FieldElement {
        let f = &self.field;
        let [c0, c1, c2, c3, c4, c5] = self.coeffs;
        let mut acc = f.mul(f.mul(c0, x), x);
        acc = f.add(acc, f.mul(f.mul(c1, x), y));
        acc = f.add(acc, f.mul(f.mul(c2, y), y));
        acc = f.add(acc, f.mul(f.mul(c3, x), z));
        acc = f.add(acc, f.mul(f.mul(c4, y), z));
        f.add(acc, f.mul(f.mul(c5, z), z))
    }

    pub fn eval(&self, p: &ProjPoint) -> FieldElement {
        self.eval_xyz(p.x(), p.y(), p.z())
    }

    pub fn eval_affine(&self, p: AffinePoint) -> FieldElement {
        self.eval_xyz(p.x, p.y, self.field.one())
    }

    pub fn contains_point(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    pub fn contains_affine(&self, p: AffinePoint) -> bool {
        self.eval_affine(p).is_zero()
    }

    /// The polarization B(P, R) = Q(P+R) − Q(P) − Q(R), bilinear in both
    /// characteristics; B(P, R) = 0 iff R lies on the polar (for P ∈ K: the
    /// tangent) at P.
    pub fn polar_value(&self, p: &ProjPoint, r: &ProjPoint) -> FieldElement {
        let f = &self.field;
        let s = self.eval_xyz(
            f.add(p.x(), r.x()),
            f.add(p.y(), r.y()),
            f.add(p.z(), r.z()),
        );
        f.sub(f.sub(s, self.eval(p)), self.eval(r))
    }

    // ------------------------------------------------------------------
    // Tangents and point positions
    // ------------------------------------------------------------------

    /// Tangent line at a point of the conic (the gradient line, which in
    /// characteristic 2 is the line through the nucleus). Panics if P ∉ K.
    pub fn tangent_at(&self, p: &ProjPoint) -> ProjLine {
        assert!(self.contains_point(p), "tangent requested off the conic");
        let f = &self.field;
        let [c0, c1, c2, c3, c4, c5] = self.coeffs;
        let two = |c: FieldElement| f.add(c, c);
        let gx = f.add(f.add(f.mul(two(c0), p.x()), f.mul(c1, p.y())), f.mul(c3, p.z()));
        let gy = f.add(f.add(f.mul(c1, p.x()), f.mul(two(c2), p.y())), f.mul(c4, p.z()));
        let gz = f.add(f.add(f.mul(c3, p.x()), f.mul(c4, p.y())), f.mul(two(c5), p.z()));
        ProjLine::new(f, gx, gy, gz)
    }

    /// The second point in which the line through a ∈ K and p ∉ K meets K;
    /// returns a itself when that line is the tangent at a.
    pub fn second_intersection(&self, a: &ProjPoint, p: &ProjPoint) -> ProjPoint {
        let f = &self.field;
        debug_assert!(self.contains_point(a) && !self.contains_point(p));
        let b = self.polar_value(a, p);
        if b.is_zero() {
            return *a;
        }
        let t = f.neg(f.div(b, self.eval(p)));
        ProjPoint::new(
            f,
            f.add(a.x(), f.mul(t, p.x())),
            f.add(a.y(), f.mul(t, p.y())),
            f.add(a.z(), f.mul(t, p.z())),
        )
    }

    /// On / external / internal classification by tangent counting (odd q
    /// only: every point off a conic lies on 0 or 2 tangents).
    pub fn point_position(&self, p: &ProjPoint) -> PointPosition {
        assert!(
            !self.field.has_even_order(),
            "external/internal dichotomy requires odd q"
        );
        if self.contains_point(p) {
            return PointPosition::On;
        }
        let tangents = self
            .points
            .iter()
            .filter(|k| self.polar_value(k, p).is_zero())
            .count();
        match tangents {
            2 => PointPosition::External,
            0 => PointPosition::Internal,
            t => unreachable!("point off a conic on {t} tangents"),
        }
    }

    /// Same classification through the quadratic character of Q(P),
    /// calibrated at a point known to be external (any point of a tangent
    /// other than the contact point). Cross-check for `point_position`.
    pub fn point_position_by_character(&self, p: &ProjPoint) -> PointPosition {
        assert!(
            !self.field.has_even_order(),
            "external/internal dichotomy requires odd q"
        );
        if self.contains_point(p) {
            return PointPosition::On;
        }
        let f = &self.field;
        let k0 = &self.points[0];
        let tangent = self.tangent_at(k0);
        let reference = projective_points(f)
            .into_iter()
            .find(|r| r != k0 && tangent.contains(f, r))
            .expect("a tangent line has q²+1 points");
        let external_char = f.is_square(self.eval(&reference));
        if f.is_square(self.eval(p)) == external_char {
            PointPosition::External
        } else {
            PointPosition::Internal
        }
    }

    /// Counts of external/internal/on points among the q+1 points of the
    /// derivation set (odd q).
    pub fn classify_derivation_set(&self, d: &DerivationSet) -> DerivationCounts {
        let mut counts = DerivationCounts {
            external: 0,
            internal: 0,
            on: 0,
        };
        for p in d.points() {
            match self.point_position(p) {
                PointPosition::External => counts.external += 1,
                PointPosition::Internal => counts.internal += 1,
                PointPosition::On => counts.on += 1,
            }
        }
        counts
    }

    // ------------------------------------------------------------------
    // Subplane conics
    // ------------------------------------------------------------------

    /// True when every coefficient lies in GF(q), i.e. the equation also
    /// defines a conic of the Baer subplane.
    pub fn is_subfield_conic(&self) -> bool {
        self.coeffs.iter().all(|&c| self.field.in_subfield(c))
    }

    /// For a subfield conic and a line r of the Baer subplane: how the pair
    /// extends to PG(2, q²). Subplane tangents stay tangent; subplane
    /// secants and subplane-external lines both become secants.
    pub fn subplane_tangency_extension(&self, r: &ProjLine) -> ExtensionRelation {
        let f = &self.field;
        assert!(self.is_subfield_conic(), "conic is not defined over GF(q)");
        assert!(
            f.in_subfield(r.a) && f.in_subfield(r.b) && f.in_subfield(r.c),
            "line is not a subplane line"
        );
        let n_sub = subplane_points(f)
            .iter()
            .filter(|p| r.contains(f, p) && self.contains_point(p))
            .count();
        let n_ext = self.points.iter().filter(|p| r.contains(f, p)).count();
        match (n_sub, n_ext) {
            (1, 1) => ExtensionRelation::TangentToTangent,
            (0 | 2, 2) => ExtensionRelation::NonTangentToSecant,
            other => unreachable!("subplane line with intersection profile {other:?}"),
        }
    }

    // ------------------------------------------------------------------
    // Substitutions
    // ------------------------------------------------------------------

    /// The conic Q∘M = 0 for an invertible 3×3 matrix M (row-major). The
    /// coefficient matrix transforms as MᵀCM with C upper triangular.
    pub fn substituted(&self, m: &[[FieldElement; 3]; 3]) -> Result<Conic, ConicError> {
        let f = &self.field;
        let [c0, c1, c2, c3, c4, c5] = self.coeffs;
        let z = f.zero();
        let c = [[c0, c1, c3], [z, c2, c4], [z, z, c5]];
        let mut s = [[z; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = z;
                for a in 0..3 {
                    for b in 0..3 {
                        acc = f.add(acc, f.mul(f.mul(m[a][i], c[a][b]), m[b][j]));
                    }
                }
                s[i][j] = acc;
            }
        }
        Conic::new(
            f,
            [
                s[0][0],
                f.add(s[0][1], s[1][0]),
                s[1][1],
                f.add(s[0][2], s[2][0]),
                f.add(s[1][2], s[2][1]),
                s[2][2],
            ],
        )
    }

    /// The conic whose point set is this one shifted by (s, t).
    pub fn translated(&self, s: FieldElement, t: FieldElement) -> Conic {
        let f = &self.field;
        let o = f.one();
        let z = f.zero();
        let m = [[o, z, f.neg(s)], [z, o, f.neg(t)], [z, z, o]];
        self.substituted(&m)
            .expect("translation preserves nondegeneracy")
    }

    // ------------------------------------------------------------------
    // Literals
    // ------------------------------------------------------------------

    /// Canonical coefficient literal, `Q: [..],[..],[..],[..],[..],[..]`.
    pub fn literal(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|&c| self.field.show(c)).collect();
        format!("Q: {}", parts.join(","))
    }

    /// Parse either a raw coefficient literal `Q: cxx,cxy,cyy,cxz,cyz,czz`
    /// or a named family: `parabola(u,v,w[,z])`, `hyperbola_xy(d)`,
    /// `normalform(c,u,v,w)`, `centered(a,b,w)`.
    pub fn parse(f: &Field, input: &str) -> Result<Conic, ConicError> {
        let s = input.trim();
        let bad = |why: &str| ConicError::BadLiteral(input.to_string(), why.to_string());
        let parse_all = |args: &str| -> Result<Vec<FieldElement>, ConicError> {
            split_top_level(args)
                .into_iter()
                .map(|a| {
                    f.parse_element(&a)
                        .map_err(|e| bad(&format!("bad element {a:?}: {e}")))
                })
                .collect()
        };

        if let Some(rest) = s.strip_prefix("Q:") {
            let els = parse_all(rest)?;
            let coeffs: [FieldElement; 6] = els
                .try_into()
                .map_err(|_| bad("expected exactly 6 coefficients"))?;
            return Conic::new(f, coeffs);
        }
        let open = s.find('(').ok_or_else(|| bad("expected name(args)"))?;
        let close = s.rfind(')').ok_or_else(|| bad("expected closing parenthesis"))?;
        if close + 1 != s.len() || close < open {
            return Err(bad("expected name(args)"));
        }
        let name = s[..open].trim();
        let els = parse_all(&s[open + 1..close])?;
        match (name, els.len()) {
            ("parabola", 3) => Conic::parabola(f, els[0], els[1], els[2], f.zero()),
            ("parabola", 4) => Conic::parabola(f, els[0], els[1], els[2], els[3]),
            ("hyperbola_xy", 1) => Conic::hyperbola_xy(f, els[0]),
            ("normalform", 4) => Conic::normal_form(f, els[0], els[1], els[2], els[3]),
            ("centered", 3) => Conic::centered(f, els[0], els[1], els[2]),
            (name, n) => Err(bad(&format!("unknown family {name:?} with {n} arguments"))),
        }
    }
}

/// Split on commas that are not nested inside `[...]`.
fn split_top_level(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' => {
                depth += 1;
                cur.push(ch);
            }
            ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::{projective_lines, subplane_lines};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::HashSet;

    fn gf(p: u32, k: u32) -> Field {
        Field::new(p, k).unwrap()
    }

    /// Y = X², i.e. X² − YZ = 0.
    fn y_equals_x_squared(f: &Field) -> Conic {
        Conic::parabola(f, f.zero(), f.zero(), f.from_int(-1), f.zero()).unwrap()
    }

    // ---- construction, points, degeneracy ----

    #[test]
    fn standard_parabola_has_the_expected_points() {
        for f in [gf(3, 1), gf(2, 2)] {
            let k = y_equals_x_squared(&f);
            assert_eq!(k.kind(), ConicKind::Parabola);
            assert_eq!(k.points().len(), f.size() as usize + 1);
            let expect: HashSet<AffinePoint> = f
                .elements()
                .map(|t| AffinePoint::new(t, f.sq(t)))
                .collect();
            let got: HashSet<AffinePoint> = k.affine_points().iter().copied().collect();
            assert_eq!(expect, got);
            assert_eq!(
                k.infinite_points(),
                &[ProjPoint::infinite(&f, f.zero(), f.one())]
            );
            assert!(k.classify().infinite_in_d[0]);
            for p in k.points() {
                assert!(k.eval(p).is_zero());
            }
        }
    }

    #[test]
    fn degenerate_forms_are_rejected() {
        let f = gf(3, 1);
        let z = f.zero();
        let o = f.one();
        // XY = 0: two lines
        assert!(matches!(
            Conic::new(&f, [z, o, z, z, z, z]),
            Err(ConicError::Degenerate(_))
        ));
        // X² = 0: double line (right point count, every point singular)
        assert!(matches!(
            Conic::new(&f, [o, z, z, z, z, z]),
            Err(ConicError::Degenerate(_))
        ));
        // X² − dY² with d a non-square: a conjugate line pair, one point
        let d = f.elements().find(|&e| !f.is_square(e)).unwrap();
        assert!(matches!(
            Conic::new(&f, [o, z, f.neg(d), z, z, z]),
            Err(ConicError::Degenerate(_))
        ));
        // parabola family degenerates exactly at w = uv
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let v = f.element(2);
        assert!(Conic::parabola(&f, u, v, f.mul(u, v), z).is_err());
        assert!(Conic::parabola(&f, u, v, f.add(f.mul(u, v), o), z).is_ok());
    }

    #[test]
    fn hyperbola_xy_classification() {
        let f = gf(3, 1);
        let k = Conic::hyperbola_xy(&f, f.one()).unwrap();
        assert_eq!(k.kind(), ConicKind::Hyperbola);
        let inf: HashSet<_> = k.infinite_points().iter().copied().collect();
        let expect: HashSet<_> = [
            ProjPoint::infinite(&f, f.one(), f.zero()),
            ProjPoint::infinite(&f, f.zero(), f.one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(inf, expect);
        assert!(k.classify().infinite_in_d.iter().all(|&b| b));
        assert!(!k.classify().conjugate_infinite_pair);
    }

    #[test]
    fn normal_form_class_profile() {
        // c ∉ GF(q) forces: ellipse, or hyperbola with non-conjugate
        // infinite points outside D.
        let f = gf(2, 2);
        let mut kinds = HashSet::new();
        for c in f.elements().filter(|&c| !f.in_subfield(c)) {
            for w in [f.zero(), f.one(), f.element(7)] {
                let Ok(k) = Conic::normal_form(&f, c, f.zero(), f.one(), w) else {
                    continue;
                };
                kinds.insert(k.kind());
                assert_ne!(k.kind(), ConicKind::Parabola);
                assert!(k.classify().infinite_in_d.iter().all(|&b| !b));
                assert!(!k.classify().conjugate_infinite_pair);
            }
        }
        assert_eq!(
            kinds,
            [ConicKind::Ellipse, ConicKind::Hyperbola].into_iter().collect()
        );
    }

    #[test]
    fn conjugate_infinite_points_come_from_subfield_irreducible_parts() {
        // X² + aXY + bY² + wZ² with T²+aT+b irreducible over GF(q) but split
        // over GF(q²): the two infinite points are conjugate.
        let f = gf(3, 1);
        let a = f.zero();
        let b = f.one(); // T²+1 irreducible over GF(3)
        let k = Conic::centered(&f, a, b, f.one()).unwrap();
        assert_eq!(k.kind(), ConicKind::Hyperbola);
        assert!(k.classify().conjugate_infinite_pair);
        assert!(k.classify().infinite_in_d.iter().all(|&b| !b));
    }

    // ---- tangents ----

    #[test]
    fn tangent_to_standard_parabola_at_origin_is_y_zero() {
        let f = gf(3, 1);
        let k = y_equals_x_squared(&f);
        let origin = ProjPoint::new(&f, f.zero(), f.zero(), f.one());
        let t = k.tangent_at(&origin);
        assert_eq!(t, ProjLine::new(&f, f.zero(), f.one(), f.zero()));
    }

    #[test]
    fn every_tangent_meets_the_conic_once_and_lines_meet_at_most_twice() {
        let f = gf(3, 1);
        let k = Conic::hyperbola_xy(&f, f.element(4)).unwrap();
        let mut tangent_lines = HashSet::new();
        for p in k.points() {
            let t = k.tangent_at(p);
            assert_eq!(k.points().iter().filter(|r| t.contains(&f, r)).count(), 1);
            tangent_lines.insert(t);
        }
        assert_eq!(tangent_lines.len(), f.size() as usize + 1);
        // line-conic intersection oracle over every line of PG(2,9)
        let mut ones = 0;
        for l in projective_lines(&f) {
            let hits = k.points().iter().filter(|r| l.contains(&f, r)).count();
            assert!(hits <= 2);
            if hits == 1 {
                ones += 1;
                assert!(tangent_lines.contains(&l));
            }
        }
        assert_eq!(ones, f.size() as usize + 1);
    }

    #[test]
    fn even_q_tangents_are_concurrent_at_the_nucleus() {
        let f = gf(2, 2);
        let k = y_equals_x_squared(&f);
        let n = k.nucleus();
        assert_eq!(n, ProjPoint::infinite(&f, f.one(), f.zero()));
        assert!(k.classify().nucleus_in_d);
        for p in k.points() {
            assert!(k.tangent_at(p).contains(&f, &n));
        }
    }

    #[test]
    #[should_panic(expected = "off the conic")]
    fn tangent_off_conic_panics() {
        let f = gf(3, 1);
        let k = y_equals_x_squared(&f);
        let p = ProjPoint::new(&f, f.one(), f.zero(), f.one()); // (1,0): 1 ≠ 0
        assert!(!k.contains_point(&p));
        k.tangent_at(&p);
    }

    #[test]
    #[should_panic(expected = "even characteristic")]
    fn nucleus_requires_even_q() {
        let f = gf(3, 1);
        y_equals_x_squared(&f).nucleus();
    }

    // ---- second intersection ----

    #[test]
    fn second_intersection_is_exact_on_gf9() {
        let f = gf(3, 1);
        let k = Conic::hyperbola_xy(&f, f.one()).unwrap();
        for a in k.points() {
            for p in projective_points(&f) {
                if k.contains_point(&p) {
                    continue;
                }
                let b = k.second_intersection(a, &p);
                assert!(k.contains_point(&b));
                let line = ProjLine::through(&f, a, &p);
                assert!(line.contains(&f, &b));
                // brute-force the full intersection of that line with K
                let on_line: Vec<_> =
                    k.points().iter().filter(|r| line.contains(&f, r)).collect();
                if b == *a {
                    assert_eq!(on_line.len(), 1, "tangent case must meet K once");
                } else {
                    assert_eq!(on_line.len(), 2);
                    assert!(on_line.contains(&&b));
                }
            }
        }
    }

    // ---- positions (odd q) ----

    #[test]
    fn parabola_derivation_points_are_external_off_the_infinite_point() {
        let f = gf(3, 1);
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let k = Conic::parabola(&f, u, f.one(), f.sq(u), f.zero()).unwrap();
        assert!(!k.classify().infinite_in_d[0]);
        let d = DerivationSet::standard(&f);
        let counts = k.classify_derivation_set(&d);
        assert_eq!(
            counts,
            DerivationCounts {
                external: f.q() + 1,
                internal: 0,
                on: 0
            }
        );
        // with I ∈ D: the remaining q points of D are external
        let k = y_equals_x_squared(&f);
        let counts = k.classify_derivation_set(&d);
        assert_eq!(
            counts,
            DerivationCounts {
                external: f.q(),
                internal: 0,
                on: 1
            }
        );
    }

    #[test]
    fn negative_nonsquare_hyperbola_makes_derivation_set_internal() {
        let f = gf(5, 1);
        let d_el = f.elements().find(|&e| !f.is_square(e)).unwrap();
        let k = Conic::hyperbola_xy(&f, f.neg(d_el)).unwrap();
        // infinite points (1:0:0), (0:1:0) are on K and in D
        let d = DerivationSet::standard(&f);
        let counts = k.classify_derivation_set(&d);
        assert_eq!(counts.on, 2);
        assert_eq!(counts.internal, f.q() - 1);
        assert_eq!(counts.external, 0);
    }

    #[test]
    fn hyperbola_with_one_infinite_point_in_d_splits_half_and_half() {
        let f = gf(5, 1);
        let m = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        // Y(X − mY) − Z²: infinite points (1:0:0) ∈ D and (m:1:0) ∉ D
        let k = Conic::new(
            &f,
            [
                f.zero(),
                f.one(),
                f.neg(m),
                f.zero(),
                f.zero(),
                f.from_int(-1),
            ],
        )
        .unwrap();
        assert_eq!(k.kind(), ConicKind::Hyperbola);
        let in_d: Vec<bool> = k.classify().infinite_in_d.clone();
        assert_eq!(in_d.iter().filter(|&&b| b).count(), 1);
        let counts = k.classify_derivation_set(&DerivationSet::standard(&f));
        assert_eq!(counts.on, 1);
        let q = f.q();
        let pair = [counts.external, counts.internal];
        assert!(pair == [(q + 1) / 2, (q - 1) / 2] || pair == [(q - 1) / 2, (q + 1) / 2]);
    }

    #[test]
    fn tangent_counting_and_character_method_agree_everywhere() {
        for f in [gf(3, 1), gf(5, 1)] {
            let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
            for k in [
                y_equals_x_squared(&f),
                Conic::hyperbola_xy(&f, f.one()).unwrap(),
                Conic::parabola(&f, u, f.one(), f.sq(u), f.zero()).unwrap(),
            ] {
                for p in projective_points(&f) {
                    assert_eq!(
                        k.point_position(&p),
                        k.point_position_by_character(&p),
                        "disagreement at {p:?} on {k:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn ellipse_internal_count_meets_the_lower_bound() {
        // internal points of D: at least q/2 − 1 − √q, checked exactly as
        // (q − 2i − 2 ≤ 0) ∨ ((q − 2i − 2)² ≤ 4q).
        for f in [gf(5, 1), gf(7, 1)] {
            let ell = f
                .elements()
                .flat_map(|a| f.elements().map(move |b| (a, b)))
                .find_map(|(a, b)| {
                    let k = Conic::centered(&f, a, b, f.one()).ok()?;
                    (k.kind() == ConicKind::Ellipse).then_some(k)
                })
                .unwrap();
            let counts = ell.classify_derivation_set(&DerivationSet::standard(&f));
            assert_eq!(counts.on, 0);
            let q = f.q() as i64;
            let i = counts.internal as i64;
            let gap = q - 2 * i - 2;
            assert!(gap <= 0 || gap * gap <= 4 * q, "internal count {i} too small for q={q}");
        }
    }

    #[test]
    #[should_panic(expected = "requires odd q")]
    fn point_position_rejects_even_q() {
        let f = gf(2, 2);
        let k = y_equals_x_squared(&f);
        k.point_position(&ProjPoint::new(&f, f.one(), f.zero(), f.one()));
    }

    // ---- subplane conics ----

    #[test]
    fn subplane_parabola_extends_tangent_and_ellipse_extends_secant() {
        let f = gf(3, 1);
        let linf = ProjLine::new(&f, f.zero(), f.zero(), f.one());
        // subfield parabola: ℓ∞ is a subplane tangent and stays tangent
        let k = y_equals_x_squared(&f);
        assert!(k.is_subfield_conic());
        assert_eq!(
            k.subplane_tangency_extension(&linf),
            ExtensionRelation::TangentToTangent
        );
        // subfield ellipse X²+Y²+Z²: ℓ∞ misses it over GF(3) but the
        // extension is a hyperbola, so ℓ∞ becomes a secant
        let o = f.one();
        let z = f.zero();
        let e = Conic::new(&f, [o, z, o, z, z, o]).unwrap();
        assert_eq!(e.kind(), ConicKind::Hyperbola);
        assert_eq!(
            e.subplane_tangency_extension(&linf),
            ExtensionRelation::NonTangentToSecant
        );
    }

    #[test]
    fn subplane_extension_relation_is_total_over_gf3() {
        // Every nondegenerate GF(3)-conic and every subplane line fall into
        // one of the two allowed relations (the method asserts internally);
        // tally both kinds to make sure the sweep is not vacuous.
        let f = gf(3, 1);
        let sub: Vec<FieldElement> = f.subfield_elements().collect();
        let lines = subplane_lines(&f);
        let mut tangents = 0u64;
        let mut secants = 0u64;
        let mut conics = 0u64;
        for i0 in 0..3 {
            for i1 in 0..3 {
                for i2 in 0..3 {
                    for i3 in 0..3 {
                        for i4 in 0..3 {
                            for i5 in 0..3 {
                                let coeffs =
                                    [sub[i0], sub[i1], sub[i2], sub[i3], sub[i4], sub[i5]];
                                let Ok(k) = Conic::new(&f, coeffs) else {
                                    continue;
                                };
                                conics += 1;
                                for r in &lines {
                                    match k.subplane_tangency_extension(r) {
                                        ExtensionRelation::TangentToTangent => tangents += 1,
                                        ExtensionRelation::NonTangentToSecant => secants += 1,
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(conics > 0);
        // each subplane conic has exactly q+1 = 4 subplane tangent lines
        assert_eq!(tangents, conics * 4);
        assert_eq!(secants, conics * 9);
    }

    // ---- substitutions ----

    #[test]
    fn translation_shifts_the_point_set() {
        let f = gf(2, 2);
        let k = y_equals_x_squared(&f);
        let s = f.element(6);
        let t = f.element(11);
        let moved = k.translated(s, t);
        let expect: HashSet<AffinePoint> = k
            .affine_points()
            .iter()
            .map(|p| AffinePoint::new(f.add(p.x, s), f.add(p.y, t)))
            .collect();
        let got: HashSet<AffinePoint> = moved.affine_points().iter().copied().collect();
        assert_eq!(expect, got);
        assert_eq!(moved.infinite_points(), k.infinite_points());
    }

    #[test]
    fn classification_is_invariant_under_derivation_preserving_maps() {
        // (x,y) ↦ τ·M₀·(x,y) + (s,t) with M₀ over GF(q) invertible and
        // τ ∈ GF(q²)* maps D to D, so kind and D-flags must not change.
        let f = gf(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let subfield: Vec<FieldElement> = f.subfield_elements().collect();
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let conics = [
            y_equals_x_squared(&f),
            Conic::hyperbola_xy(&f, f.one()).unwrap(),
            Conic::parabola(&f, u, f.one(), f.sq(u), f.zero()).unwrap(),
            Conic::centered(&f, f.zero(), f.one(), f.one()).unwrap(),
        ];
        for _ in 0..20 {
            let (m0, det) = loop {
                let pick = |rng: &mut ChaCha8Rng| subfield[rng.gen_range(0..subfield.len())];
                let (a, b, c, d) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
                let det = f.sub(f.mul(a, d), f.mul(b, c));
                if !det.is_zero() {
                    break ([a, b, c, d], det);
                }
            };
            let _ = det;
            let tau = loop {
                let t = f.element(rng.gen_range(1..f.size()) as usize);
                if !t.is_zero() {
                    break t;
                }
            };
            let s = f.element(rng.gen_range(0..f.size()) as usize);
            let t = f.element(rng.gen_range(0..f.size()) as usize);
            let z = f.zero();
            let m = [
                [f.mul(tau, m0[0]), f.mul(tau, m0[1]), s],
                [f.mul(tau, m0[2]), f.mul(tau, m0[3]), t],
                [z, z, f.one()],
            ];
            for k in &conics {
                let kk = k.substituted(&m).unwrap();
                assert_eq!(kk.kind(), k.kind());
                let mut flags_a = k.classify().infinite_in_d.clone();
                let mut flags_b = kk.classify().infinite_in_d.clone();
                flags_a.sort();
                flags_b.sort();
                assert_eq!(flags_a, flags_b);
                assert_eq!(
                    kk.classify().conjugate_infinite_pair,
                    k.classify().conjugate_infinite_pair
                );
            }
        }
    }

    // ---- literals ----

    #[test]
    fn literal_roundtrip_and_named_families() {
        let f = gf(2, 2);
        let k = Conic::parse(&f, "hyperbola_xy(1)").unwrap();
        assert_eq!(k.kind(), ConicKind::Hyperbola);
        let again = Conic::parse(&f, &k.literal()).unwrap();
        assert_eq!(again.coefficients(), k.coefficients());

        let k = Conic::parse(&f, "parabola([0,1], 1, [0,0,1], 0)").unwrap();
        assert_eq!(k.kind(), ConicKind::Parabola);

        // not every parameter choice is nondegenerate; find one that is
        let k = f
            .elements()
            .find_map(|w| {
                Conic::parse(&f, &format!("normalform([0,1],0,1,{})", f.show(w))).ok()
            })
            .unwrap();
        assert!(matches!(
            k.kind(),
            ConicKind::Ellipse | ConicKind::Hyperbola
        ));

        let k = Conic::parse(&f, "Q: 1,0,0,0,[1,1],0");
        assert!(k.is_ok() || matches!(k, Err(ConicError::Degenerate(_))));

        assert!(matches!(
            Conic::parse(&f, "circle(1)"),
            Err(ConicError::BadLiteral(..))
        ));
        assert!(matches!(
            Conic::parse(&f, "Q: 1,2"),
            Err(ConicError::BadLiteral(..))
        ));
        assert!(matches!(
            Conic::parse(&f, "parabola(1,2"),
            Err(ConicError::BadLiteral(..))
        ));
    }
}
