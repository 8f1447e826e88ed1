//! Independent verification procedures with pinned expected outputs.
//!
//! Each oracle here recomputes a quantity that the rest of the crate also
//! produces through the plane/conic machinery, but along a different route:
//! the Segre–Korchmáros triangle correspondence, an explicit parabola pencil
//! through three points of a new line, root counts of an auxiliary cubic, and
//! the Möbius normalization of quadratics in even characteristic.  Agreement
//! between the two routes is what the census and the acceptance suite check.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::conic::Conic;
use crate::field::{Field, FieldElement, FieldEmbedding};
use crate::linalg::kernel_basis;
use crate::plane::{AffinePoint, HallLine, HallPlane, ProjLine, ProjPoint};

// ============================================================================
// Inscribed triangles (Segre–Korchmáros correspondence)
// ============================================================================

/// Triangles inscribed in a subplane conic whose sides meet a fixed line in
/// a prescribed point triple.  Each triangle is stored as `[A1, A2, A3]` so
/// that the chord `AiAj` meets the reference line in `Pk`, where `{i, j, k}`
/// is `{1, 2, 3}`.
#[derive(Debug, Clone)]
pub struct TriangleCount {
    pub count: u32,
    pub triangles: Vec<[ProjPoint; 3]>,
}

fn is_subplane_point(f: &Field, p: &ProjPoint) -> bool {
    f.in_subfield(p.x()) && f.in_subfield(p.y()) && f.in_subfield(p.z())
}

fn is_subplane_line(f: &Field, l: &ProjLine) -> bool {
    f.in_subfield(l.a) && f.in_subfield(l.b) && f.in_subfield(l.c)
}

/// Count the triangles `{A1, A2, A3}` inscribed in the subplane part of a
/// subfield conic such that the side `AiAj` meets `r` exactly in `triple[k-1]`
/// for every complementary index `k`.
///
/// The enumeration follows chords: from each candidate first vertex, the
/// second vertex is forced by the chord through `P3`, the third by the chord
/// through `P1`, and the walk closes iff the remaining side passes through
/// `P2`.  Every valid triangle is produced from exactly one starting vertex —
/// the one incident with both the `P3`-side and the `P2`-side — so the walk
/// needs no deduplication.  Tests cross-check the result against the plain
/// enumeration of all 3-subsets.
///
/// Panics when the conic is not subfield-rational, when `r` is not a subplane
/// line, or when the triple is not three distinct subplane points of `r` off
/// the conic.
pub fn count_inscribed_triangles(
    conic: &Conic,
    r: &ProjLine,
    triple: [ProjPoint; 3],
) -> TriangleCount {
    let f = conic.field().clone();
    assert!(
        conic.is_subfield_conic(),
        "inscribed-triangle counts run in the subplane; the conic must be subfield-rational"
    );
    assert!(is_subplane_line(&f, r), "the reference line must be a subplane line");
    for p in &triple {
        assert!(is_subplane_point(&f, p), "reference points must lie in the subplane");
        assert!(r.contains(&f, p), "reference points must lie on the reference line");
        assert!(!conic.contains_point(p), "reference points must avoid the conic");
    }
    assert!(
        triple[0] != triple[1] && triple[0] != triple[2] && triple[1] != triple[2],
        "reference points must be distinct"
    );

    let vertices: Vec<ProjPoint> = conic
        .points()
        .iter()
        .filter(|p| is_subplane_point(&f, p) && !r.contains(&f, p))
        .copied()
        .collect();

    let mut triangles = Vec::new();
    for &a1 in &vertices {
        let a2 = conic.second_intersection(&a1, &triple[2]);
        if a2 == a1 {
            continue;
        }
        let a3 = conic.second_intersection(&a2, &triple[0]);
        if a3 == a2 || a3 == a1 {
            continue;
        }
        debug_assert!(is_subplane_point(&f, &a2) && is_subplane_point(&f, &a3));
        if ProjLine::through(&f, &a3, &a1).contains(&f, &triple[1]) {
            triangles.push([a1, a2, a3]);
        }
    }
    TriangleCount { count: triangles.len() as u32, triangles }
}

/// Number of subplane tangents of a subfield conic through a subplane point
/// off the conic.  For odd q this is 0 (subplane-internal) or 2
/// (subplane-external); the distinction can differ from the one in the big
/// plane because a secant subplane polar may meet the conic in two conjugate
/// points outside the subplane.
pub fn subplane_tangent_count(conic: &Conic, p: &ProjPoint) -> usize {
    let f = conic.field().clone();
    assert!(conic.is_subfield_conic(), "subplane tangency needs a subfield conic");
    assert!(is_subplane_point(&f, p), "subplane tangency needs a subplane point");
    assert!(!conic.contains_point(p), "tangent count requested on the conic");
    conic
        .points()
        .iter()
        .filter(|a| is_subplane_point(&f, a) && conic.polar_value(a, p).is_zero())
        .count()
}

// ============================================================================
// The parabola pencil through three points of a new line
// ============================================================================

/// Parabolas through a fixed non-collinear triple of a new line that meet the
/// line in exactly those three points.
#[derive(Debug, Clone)]
pub struct ParabolaCount {
    pub count: u32,
    pub witnesses: Vec<Conic>,
}

/// For every `u ∉ GF(q)` there is a unique member of the family
/// `(X + uY)² + vXZ + wYZ + zZ²` through three given non-collinear affine
/// points; its infinite point `(−u : 1 : 0)` avoids the derivation set.  This
/// oracle builds each member and counts those meeting `line` in exactly the
/// triple.  Every member meets the line in 3 or 4 points, never fewer, which
/// is asserted along the way.
///
/// Panics for even q, for an old `line`, when the triple is not three
/// distinct points of `line`, or when the triple spans a Desarguesian line
/// (no conic passes through a collinear triple).
pub fn count_three_secant_parabolas(
    plane: &HallPlane,
    line: HallLine,
    triple: [AffinePoint; 3],
) -> ParabolaCount {
    let f = plane.field().clone();
    assert!(!f.has_even_order(), "the pencil count requires odd q");
    assert!(line.is_new(), "the pencil count runs over new lines");
    for p in &triple {
        assert!(plane.contains(line, *p), "the triple must lie on the line");
    }
    assert!(
        triple[0] != triple[1] && triple[0] != triple[2] && triple[1] != triple[2],
        "the triple must be three distinct points"
    );
    let [p1, p2, p3] = triple;
    let det = f.sub(
        f.mul(f.sub(p2.x, p1.x), f.sub(p3.y, p1.y)),
        f.mul(f.sub(p3.x, p1.x), f.sub(p2.y, p1.y)),
    );
    assert!(
        !det.is_zero(),
        "the triple spans a Desarguesian line, so no conic passes through it"
    );

    let mut witnesses = Vec::new();
    for u in f.elements().filter(|&u| !f.in_subfield(u)) {
        // Unique (v, w, z) with (x + uy)² + vx + wy + z = 0 at the triple.
        let rows: Vec<Vec<FieldElement>> = triple
            .iter()
            .map(|p| vec![p.x, p.y, f.one(), f.sq(f.add(p.x, f.mul(u, p.y)))])
            .collect();
        let ker = kernel_basis(&f, &rows);
        assert_eq!(ker.len(), 1, "a non-collinear triple pins the pencil member");
        let k = &ker[0];
        assert!(!k[3].is_zero(), "the fit keeps the quadratic part");
        let inv = f.inv(k[3]);
        let (v, w, z) = (f.mul(k[0], inv), f.mul(k[1], inv), f.mul(k[2], inv));
        let member = Conic::parabola(&f, u, v, w, z)
            .expect("pencil members through new-line points stay nondegenerate");
        let hits = member
            .affine_points()
            .iter()
            .filter(|&&p| plane.contains(line, p))
            .count();
        assert!(
            hits == 3 || hits == 4,
            "a pencil member meets the line in 3 or 4 points, found {hits}"
        );
        if hits == 3 {
            witnesses.push(member);
        }
    }
    ParabolaCount { count: witnesses.len() as u32, witnesses }
}

/// The unique fourth subfield-rational point of the pencil member through
/// `(0,0)`, `(−1,0)`, `(0,−1)` with infinite point `(−u : 1 : 0)`, together
/// with whether it coincides with one of those three base points.
#[derive(Debug, Clone, Copy)]
pub struct FourthPoint {
    pub point: AffinePoint,
    pub coincides_with_base: bool,
}

/// Evaluate the closed form
/// `P = ((u+ū)(2uū−u−ū)/(u−ū)², (u+ū)(2−u−ū)/(u−ū)²)`
/// for the fourth subfield-rational point of `(X+uY)² + XZ + u²YZ`, confirm
/// it by exhausting the subfield-rational points of that parabola, and report
/// whether it collapses onto a base point — which happens exactly when
/// `u+ū ∈ {0, 2}` or `1/u + 1/ū = 2`.
///
/// Panics for even q or `u ∈ GF(q)`.
pub fn fourth_rational_point(f: &Field, u: FieldElement) -> FourthPoint {
    assert!(!f.has_even_order(), "the closed form is an odd-q statement");
    assert!(!f.in_subfield(u), "u must lie outside the subfield");
    let ub = f.conj(u);
    let s = f.add(u, ub);
    let pr = f.mul(u, ub);
    let two = f.from_int(2);
    let d2 = f.sq(f.sub(u, ub));
    let px = f.div(f.mul(s, f.sub(f.add(pr, pr), s)), d2);
    let py = f.div(f.mul(s, f.sub(two, s)), d2);
    let point = AffinePoint::new(px, py);

    let member = Conic::parabola(&f.clone(), u, f.one(), f.sq(u), f.zero())
        .expect("u outside the subfield keeps the member nondegenerate");
    assert!(member.contains_affine(point), "the closed form lands on the parabola");
    assert!(
        f.in_subfield(px) && f.in_subfield(py),
        "the closed form is subfield-rational"
    );

    let base = [
        AffinePoint::new(f.zero(), f.zero()),
        AffinePoint::new(f.neg(f.one()), f.zero()),
        AffinePoint::new(f.zero(), f.neg(f.one())),
    ];
    let rational: BTreeSet<AffinePoint> = member
        .affine_points()
        .iter()
        .filter(|p| f.in_subfield(p.x) && f.in_subfield(p.y))
        .copied()
        .collect();
    let mut expected: BTreeSet<AffinePoint> = base.iter().copied().collect();
    expected.insert(point);
    assert_eq!(
        rational, expected,
        "the parabola has no subfield-rational points beyond the base triple and P"
    );

    let coincides_with_base = base.contains(&point);
    let criterion = s.is_zero() || s == two || s == f.add(pr, pr);
    assert_eq!(
        coincides_with_base, criterion,
        "P collapses onto a base point exactly when u+ū ∈ {{0,2}} or 1/u+1/ū = 2"
    );
    FourthPoint { point, coincides_with_base }
}

// ============================================================================
// Rational roots of the auxiliary cubic (even q)
// ============================================================================

fn poly_eval(f: &Field, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    let mut acc = f.zero();
    for &c in coeffs.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// Divide an ascending-coefficient polynomial by (T − r); r must be a root.
fn poly_deflate(f: &Field, a: &[FieldElement], r: FieldElement) -> Vec<FieldElement> {
    let n = a.len() - 1;
    let mut b = vec![f.zero(); n];
    b[n - 1] = a[n];
    for i in (1..n).rev() {
        b[i - 1] = f.add(a[i], f.mul(r, b[i]));
    }
    let rem = f.add(a[0], f.mul(r, b[0]));
    assert!(rem.is_zero(), "deflation requires a root");
    b
}

/// Number of roots of `T³ + ββ̄·T + ββ̄(β + β̄)` in the subfield GF(q),
/// counted with multiplicity (for `β = β̄` the roots are 0, β, β).
/// Characteristic 2 only; β must be nonzero.
pub fn count_rational_roots_nbeta(f: &Field, beta: FieldElement) -> u32 {
    assert!(f.has_even_order(), "the cubic root count is a characteristic-2 tool");
    assert!(!beta.is_zero(), "beta must be nonzero");
    let n = f.norm(beta);
    let tr = f.rel_trace(beta);
    let mut poly = vec![f.mul(n, tr), n, f.zero(), f.one()];
    let mut count = 0;
    let subfield: Vec<FieldElement> = f.subfield_elements().collect();
    for r in subfield {
        while poly.len() > 1 && poly_eval(f, &poly, r).is_zero() {
            poly = poly_deflate(f, &poly, r);
            count += 1;
        }
    }
    count
}

// ============================================================================
// Möbius normalization of quadratics (even q)
// ============================================================================

/// A fractional-linear map z ↦ (az + b)/(cz + d) whose entries are
/// subfield-rational and with ad − bc ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MoebiusMap {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl MoebiusMap {
    pub fn new(
        f: &Field,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> MoebiusMap {
        for e in [a, b, c, d] {
            assert!(f.in_subfield(e), "Möbius entries must be subfield-rational");
        }
        let det = f.sub(f.mul(a, d), f.mul(b, c));
        assert!(!det.is_zero(), "a Möbius map needs ad − bc ≠ 0");
        MoebiusMap { a, b, c, d }
    }

    pub fn apply(&self, f: &Field, z: FieldElement) -> FieldElement {
        let den = f.add(f.mul(self.c, z), self.d);
        assert!(!den.is_zero(), "Möbius map evaluated at its pole");
        f.div(f.add(f.mul(self.a, z), self.b), den)
    }

    /// The same map with entries pushed through a field embedding.
    pub fn embedded(&self, emb: &FieldEmbedding) -> MoebiusMap {
        MoebiusMap {
            a: emb.map(self.a),
            b: emb.map(self.b),
            c: emb.map(self.c),
            d: emb.map(self.d),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NormalizeError {
    #[error("normalization is an even-characteristic construction")]
    OddCharacteristic,
    #[error("the quadratic has a repeated root")]
    RepeatedRoot,
    #[error("the quadratic has a root in the subfield GF(q)")]
    RootInSubfield,
    #[error("the roots form a Frobenius-conjugate pair over GF(q)")]
    FrobeniusConjugatePair,
}

/// Bring `X² + βX + γ` over GF(q²), q even, to the shape `X² + X + w` with
/// `w ∉ GF(q)` by a subfield-rational fractional-linear substitution.
///
/// The construction requires the roots `u1, u2` of the quadratic (they live
/// in GF(q⁴)) to satisfy `ui ∉ {ui^q, uj, uj^q}`; each violation is reported
/// as a distinct error after an honest check in the quartic extension.  On
/// success the returned map has been verified by substitution: the numerator
/// of `f((az+b)/(cz+d))` is a scalar multiple of `z² + z + w`, and the roots
/// of `z² + z + w` map exactly onto `{u1, u2}`.
pub fn normalize_quadratic(
    f: &Field,
    beta: FieldElement,
    gamma: FieldElement,
) -> Result<(MoebiusMap, FieldElement), NormalizeError> {
    if !f.has_even_order() {
        return Err(NormalizeError::OddCharacteristic);
    }
    if beta.is_zero() {
        return Err(NormalizeError::RepeatedRoot);
    }
    let emb = f.quartic_extension().expect("the quartic extension fits the size limit");
    let ext = emb.target.clone();
    let (be, ge) = (emb.map(beta), emb.map(gamma));
    let roots: Vec<FieldElement> = ext
        .elements()
        .filter(|&t| ext.add(ext.add(ext.sq(t), ext.mul(be, t)), ge).is_zero())
        .collect();
    assert_eq!(roots.len(), 2, "a separable quadratic splits in the quartic extension");
    let frob = |x| ext.pow(x, f.q() as u64);
    let (u1, u2) = (roots[0], roots[1]);
    if frob(u1) == u1 || frob(u2) == u2 {
        return Err(NormalizeError::RootInSubfield);
    }
    if frob(u1) == u2 || frob(u2) == u1 {
        return Err(NormalizeError::FrobeniusConjugatePair);
    }

    let m = if f.in_subfield(beta) {
        // z ↦ βz rescales the quadratic directly.
        MoebiusMap::new(f, beta, f.zero(), f.zero(), f.one())
    } else if f.in_subfield(f.div(gamma, beta)) {
        // γ = tβ with t ∈ GF(q)*: invert through z ↦ t/z.
        let t = f.div(gamma, beta);
        MoebiusMap::new(f, f.zero(), t, f.one(), f.zero())
    } else {
        // β, γ span GF(q²) over GF(q): write 1 = t1·β + t2·γ and compose
        // (z+1)/(√t2·z + 1+√t2) with the rescaling z ↦ z/(t1+√t2).
        let mut found = None;
        'outer: for t1 in f.subfield_elements() {
            for t2 in f.subfield_elements() {
                if f.add(f.mul(t1, beta), f.mul(t2, gamma)) == f.one() {
                    found = Some((t1, t2));
                    break 'outer;
                }
            }
        }
        let (t1, t2) = found.expect("a spanning pair produces the unit");
        let s = f.pow(t2, (f.size() as u64) / 2);
        let den = f.add(t1, s);
        assert!(!den.is_zero(), "t1 + √t2 = 0 would put a root of the quadratic in GF(q)");
        let b0 = f.inv(den);
        MoebiusMap::new(f, b0, f.one(), f.mul(s, b0), f.add(f.one(), s))
    };

    // Substitution in characteristic 2: the numerator of f((az+b)/(cz+d)) is
    // (a² + βac + γc²)z² + β(cb + ad)z + (b² + βbd + γd²).
    let (a, b, c, d) = (m.a, m.b, m.c, m.d);
    let qa = f.add(f.add(f.sq(a), f.mul(beta, f.mul(a, c))), f.mul(gamma, f.sq(c)));
    let qb = f.mul(beta, f.add(f.mul(c, b), f.mul(a, d)));
    let qc = f.add(f.add(f.sq(b), f.mul(beta, f.mul(b, d))), f.mul(gamma, f.sq(d)));
    assert!(!qa.is_zero(), "the substituted quadratic keeps degree 2");
    assert_eq!(qa, qb, "leading and linear coefficients must match for the X² + X + w shape");
    let w = f.div(qc, qa);
    assert!(!f.in_subfield(w), "the normal-form constant stays outside GF(q)");

    // Root correspondence: the map carries the roots of z² + z + w onto
    // the roots of the original quadratic.
    let me = m.embedded(&emb);
    let we = emb.map(w);
    let images: BTreeSet<FieldElement> = ext
        .elements()
        .filter(|&z| ext.add(ext.add(ext.sq(z), z), we).is_zero())
        .map(|z| me.apply(&ext, z))
        .collect();
    let expected: BTreeSet<FieldElement> = [u1, u2].into_iter().collect();
    assert_eq!(images, expected, "the Möbius map must carry normal-form roots onto the originals");

    Ok((m, w))
}

// ============================================================================
// Tests
// ============================================================================
