//! How a conic of PG(2, q²) behaves as a point set of the Hall plane:
//! secant spectra over the new lines, collinear-triple counts, arc and
//! completeness analysis, internal nuclei, and Baer-subplane intersections.

use crate::conic::Conic;
use crate::field::FieldElement;
use crate::linalg::kernel_basis;
use crate::plane::{subplane_points, AffinePoint, HallLine, HallPlane, ProjPoint};
use std::collections::{BTreeMap, HashMap, HashSet};

/// A direction (parallel class) of the Hall plane: either a surviving
/// Desarguesian slope m ∉ GF(q) or one of the q+1 derived classes,
/// identified by its canonical direction element.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HallDirection {
    OldSlope(FieldElement),
    NewClass(FieldElement),
}

/// The parallel class a line belongs to.
pub fn direction_of(line: HallLine) -> HallDirection {
    match line {
        HallLine::Old { slope, .. } => HallDirection::OldSlope(slope),
        HallLine::New { dir, .. } => HallDirection::NewClass(dir),
    }
}

/// The unique line through `p` in the given parallel class.
pub fn line_with_direction(plane: &HallPlane, p: AffinePoint, d: HallDirection) -> HallLine {
    let f = plane.field();
    match d {
        HallDirection::OldSlope(m) => {
            assert!(!f.in_subfield(m), "old slopes lie outside GF(q)");
            HallLine::Old {
                slope: m,
                intercept: f.sub(p.y, f.mul(m, p.x)),
            }
        }
        HallDirection::NewClass(lam) => plane.new_line_with_dir_through(lam, p),
    }
}

/// Every direction of the plane: the q²−q old slopes then the q+1 new
/// classes, q²+1 in total.
pub fn all_directions(plane: &HallPlane) -> Vec<HallDirection> {
    let f = plane.field();
    let mut out: Vec<HallDirection> = f
        .elements()
        .filter(|&m| !f.in_subfield(m))
        .map(HallDirection::OldSlope)
        .collect();
    out.extend(
        plane
            .new_directions()
            .iter()
            .map(|&d| HallDirection::NewClass(d)),
    );
    out
}

// ============================================================================
// Secant spectrum
// ============================================================================

/// Intersection-size distribution of a point set against all (q+1)q² new
/// lines. `a[i]` counts new lines meeting the set in exactly i points.
/// Old lines are excluded: they meet a conic as lines meet conics in
/// PG(2,q²), in at most two points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecantSpectrum {
    pub a: Vec<u64>,
    pub triples: u64,
    pub max_line: usize,
    per_line: HashMap<HallLine, u32>,
}

impl SecantSpectrum {
    /// a_i, zero beyond the stored range.
    pub fn count(&self, i: usize) -> u64 {
        self.a.get(i).copied().unwrap_or(0)
    }

    /// Intersection sizes that occur on at least one line (including 0).
    pub fn support(&self) -> Vec<usize> {
        (0..self.a.len()).filter(|&i| self.a[i] > 0).collect()
    }

    /// Σ C(i,2)·a_i: unordered point pairs lying on a common new line.
    pub fn pairs(&self) -> u64 {
        self.a
            .iter()
            .enumerate()
            .map(|(i, &c)| c * choose2(i as u64))
            .sum()
    }

    /// New lines meeting the set in at least `min` points, with counts.
    pub fn lines_with_at_least(&self, min: u32) -> Vec<(HallLine, u32)> {
        let mut v: Vec<(HallLine, u32)> = self
            .per_line
            .iter()
            .filter(|&(_, &c)| c >= min)
            .map(|(&l, &c)| (l, c))
            .collect();
        v.sort();
        v
    }

    /// Points of the new line meeting the set in exactly i points.
    pub fn hits_on(&self, line: HallLine) -> u32 {
        self.per_line.get(&line).copied().unwrap_or(0)
    }
}

fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn choose3(n: u64) -> u64 {
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// Spectrum of an arbitrary affine point set (entries must be distinct).
pub fn point_set_spectrum(plane: &HallPlane, points: &[AffinePoint]) -> SecantSpectrum {
    debug_assert_eq!(
        points.iter().collect::<HashSet<_>>().len(),
        points.len(),
        "spectrum input must not repeat points"
    );
    let q = plane.q() as u64;
    let mut per_line: HashMap<HallLine, u32> = HashMap::new();
    for &p in points {
        for line in plane.new_lines_through(p) {
            *per_line.entry(line).or_insert(0) += 1;
        }
    }
    let max_line = per_line.values().copied().max().unwrap_or(0) as usize;
    let mut a = vec![0u64; (q as usize + 2).max(max_line + 1)];
    for &c in per_line.values() {
        a[c as usize] += 1;
    }
    let total_new = (q + 1) * q * q;
    a[0] = total_new - per_line.len() as u64;
    let triples = a
        .iter()
        .enumerate()
        .map(|(i, &c)| c * choose3(i as u64))
        .sum();
    SecantSpectrum {
        a,
        triples,
        max_line,
        per_line,
    }
}

/// Spectrum of the affine part of a conic.
pub fn secant_spectrum(plane: &HallPlane, conic: &Conic) -> SecantSpectrum {
    point_set_spectrum(plane, conic.affine_points())
}

/// Collinear triples of the affine part of K in the Hall plane. Only new
/// lines can carry three conic points, so this is the spectrum total.
pub fn collinear_triples(plane: &HallPlane, conic: &Conic) -> u64 {
    secant_spectrum(plane, conic).triples
}

/// Brute-force triple count over all Hall lines (old ones included), used
/// as an independent oracle for the spectrum computation.
pub fn collinear_triples_direct(plane: &HallPlane, points: &[AffinePoint]) -> u64 {
    let n = points.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let line = plane.hall_line_through(points[i], points[j]);
            for &r in points.iter().skip(j + 1) {
                if plane.contains(line, r) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Per-line point counts over the old (Desarguesian) lines spanned by at
/// least two of the given points.
pub fn old_line_counts(plane: &HallPlane, points: &[AffinePoint]) -> HashMap<HallLine, u32> {
    let mut members: HashMap<HallLine, HashSet<usize>> = HashMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let line = plane.hall_line_through(points[i], points[j]);
            if !line.is_new() {
                let e = members.entry(line).or_default();
                e.insert(i);
                e.insert(j);
            }
        }
    }
    members
        .into_iter()
        .map(|(l, s)| (l, s.len() as u32))
        .collect()
}

/// Largest intersection of the point set with an old line.
pub fn old_line_max(plane: &HallPlane, points: &[AffinePoint]) -> usize {
    let floor = points.len().min(1);
    old_line_counts(plane, points)
        .values()
        .copied()
        .max()
        .unwrap_or(0)
        .max(floor as u32) as usize
}

/// Distribution of |L ∩ K| over the q+1 new lines through an affine point
/// P of K (P itself included in the counts). Panics when P ∉ K.
pub fn per_point_line_distribution(
    plane: &HallPlane,
    conic: &Conic,
    p: AffinePoint,
) -> BTreeMap<usize, u32> {
    assert!(
        conic.contains_affine(p),
        "line distribution requested at a point off the conic"
    );
    let spectrum = secant_spectrum(plane, conic);
    let mut dist: BTreeMap<usize, u32> = BTreeMap::new();
    for line in plane.new_lines_through(p) {
        *dist.entry(spectrum.hits_on(line) as usize).or_insert(0) += 1;
    }
    dist
}

// ============================================================================
// Arcs
// ============================================================================

/// A candidate that can be adjoined to a point set of the projective
/// closure of the Hall plane: an affine point or a direction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtensionCandidate {
    Affine(AffinePoint),
    AtInfinity(HallDirection),
}

/// Arc analysis of a point set S (affine points plus at most two adjoined
/// directions) in the projective closure of the Hall plane.
#[derive(Clone, Debug)]
pub struct ArcReport {
    pub is_arc: bool,
    pub is_complete: bool,
    pub extension_points: Vec<ExtensionCandidate>,
    pub hyperoval_reachable: bool,
    /// |S|, adjoined directions included.
    pub size: usize,
    /// Largest |line ∩ affine part| over all Hall lines.
    pub max_line_hits: usize,
}

struct ArcCore {
    is_arc: bool,
    max_line_hits: usize,
    /// Lines carrying ≥ 2 affine points, with their counts.
    secants: HashMap<HallLine, u32>,
}

fn arc_core(plane: &HallPlane, points: &[AffinePoint], dirs: &[HallDirection]) -> ArcCore {
    let mut secants: HashMap<HallLine, u32> = HashMap::new();
    for (l, c) in point_set_spectrum(plane, points).per_line {
        if c >= 2 {
            secants.insert(l, c);
        }
    }
    for (l, c) in old_line_counts(plane, points) {
        if c >= 2 {
            secants.insert(l, c);
        }
    }
    let max_line_hits = secants
        .values()
        .copied()
        .max()
        .unwrap_or(points.len().min(1) as u32) as usize;

    let mut is_arc = max_line_hits <= 2 && dirs.len() <= 2;
    let distinct: HashSet<_> = dirs.iter().collect();
    is_arc &= distinct.len() == dirs.len();
    // a direction is on the arc only if no secant runs in that class
    if is_arc {
        let secant_dirs: HashSet<HallDirection> =
            secants.keys().map(|&l| direction_of(l)).collect();
        is_arc &= dirs.iter().all(|d| !secant_dirs.contains(d));
    }
    ArcCore {
        is_arc,
        max_line_hits,
        secants,
    }
}

/// Every single-point extension of the arc S = points ∪ dirs, over all q⁴
/// affine points and all q²+1 directions.
fn extensions_of(
    plane: &HallPlane,
    points: &[AffinePoint],
    dirs: &[HallDirection],
    core: &ArcCore,
) -> Vec<ExtensionCandidate> {
    let f = plane.field();
    let member: HashSet<AffinePoint> = points.iter().copied().collect();
    // affine points ruled out: on a secant, or on a line joining a member
    // point to an adjoined direction (which would make a triple with them)
    let mut blocked: HashSet<AffinePoint> = HashSet::new();
    for &l in core.secants.keys() {
        blocked.extend(plane.line_points(l));
    }
    for &d in dirs {
        for &p in points {
            blocked.extend(plane.line_points(line_with_direction(plane, p, d)));
        }
    }
    let mut out = Vec::new();
    for x in f.elements() {
        for y in f.elements() {
            let p = AffinePoint::new(x, y);
            if !member.contains(&p) && !blocked.contains(&p) {
                out.push(ExtensionCandidate::Affine(p));
            }
        }
    }
    if dirs.len() < 2 {
        let secant_dirs: HashSet<HallDirection> =
            core.secants.keys().map(|&l| direction_of(l)).collect();
        for d in all_directions(plane) {
            if !dirs.contains(&d) && !secant_dirs.contains(&d) {
                out.push(ExtensionCandidate::AtInfinity(d));
            }
        }
    }
    out
}

/// Full arc analysis. `dirs` adjoins points at infinity to S (at most two
/// can coexist on an arc, the line at infinity being a line of the
/// projective closure). Extension candidates and hyperoval reachability
/// (even q, within two extensions of q²+2) are computed exhaustively.
pub fn arc_report(
    plane: &HallPlane,
    points: &[AffinePoint],
    dirs: &[HallDirection],
) -> ArcReport {
    let core = arc_core(plane, points, dirs);
    let size = points.len() + dirs.len();
    if !core.is_arc {
        return ArcReport {
            is_arc: false,
            is_complete: false,
            extension_points: Vec::new(),
            hyperoval_reachable: false,
            size,
            max_line_hits: core.max_line_hits,
        };
    }
    let mut extension_points = extensions_of(plane, points, dirs, &core);
    extension_points.sort();
    let is_complete = extension_points.is_empty();

    let target = plane.order() as usize + 2;
    let hyperoval_reachable = plane.field().has_even_order()
        && match target.checked_sub(size) {
            Some(0) => true,
            Some(1) => !extension_points.is_empty(),
            Some(2) => extension_points.iter().any(|&e| {
                let (mut pts, mut ds) = (points.to_vec(), dirs.to_vec());
                match e {
                    ExtensionCandidate::Affine(p) => pts.push(p),
                    ExtensionCandidate::AtInfinity(d) => ds.push(d),
                }
                let core2 = arc_core(plane, &pts, &ds);
                core2.is_arc && !extensions_of(plane, &pts, &ds, &core2).is_empty()
            }),
            _ => false,
        };

    ArcReport {
        is_arc: true,
        is_complete,
        extension_points,
        hyperoval_reachable,
        size,
        max_line_hits: core.max_line_hits,
    }
}

/// Points P of S such that every Hall line through P carries at most one
/// other point of S.
pub fn internal_nucleus_set(plane: &HallPlane, points: &[AffinePoint]) -> Vec<AffinePoint> {
    let mut out = Vec::new();
    for (i, &p) in points.iter().enumerate() {
        let mut through: HashMap<HallLine, u32> = HashMap::new();
        let mut ok = true;
        for (j, &r) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let line = plane.hall_line_through(p, r);
            let c = through.entry(line).or_insert(0);
            *c += 1;
            if *c >= 2 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(p);
        }
    }
    out
}

// ============================================================================
// Tangent witnesses
// ============================================================================

/// §-style tangency witness for a new line L: among the affine points of
/// L ∩ K, those whose Desarguesian tangent meets the derivation set. When
/// |L∩K| = 3 the witness is asserted unique and returned; when any witness
/// exists, |L∩K| ≤ 3 is asserted. Intended for even q.
pub fn three_secant_tangent_witness(
    plane: &HallPlane,
    conic: &Conic,
    line: HallLine,
) -> Option<AffinePoint> {
    let f = plane.field();
    let hits: Vec<AffinePoint> = conic
        .affine_points()
        .iter()
        .copied()
        .filter(|&p| plane.contains(line, p))
        .collect();
    let witnesses: Vec<AffinePoint> = hits
        .iter()
        .copied()
        .filter(|&p| {
            let t = conic.tangent_at(&ProjPoint::from_affine(f, p));
            t.infinite_point(f)
                .is_some_and(|i| plane.in_derivation_set(&i))
        })
        .collect();
    if !witnesses.is_empty() {
        assert!(
            hits.len() <= 3,
            "a tangent through D forbids 4 collinear points, got {}",
            hits.len()
        );
    }
    if hits.len() == 3 {
        assert_eq!(
            witnesses.len(),
            1,
            "a 3-secant must carry exactly one tangent-through-D witness"
        );
    }
    witnesses.into_iter().next()
}

// ============================================================================
// Baer subplane intersections
// ============================================================================

/// Intersection of a conic with the Baer subplane closing a new line:
/// its size (affine part plus conic points of D), and the subplane conic
/// carving it out when the intersection exceeds four points.
#[derive(Clone, Debug)]
pub struct BaerConicMeeting {
    pub line: HallLine,
    pub size: usize,
    pub subconic: Option<Conic>,
}

impl BaerConicMeeting {
    /// The dichotomy: at most 4 common points, or a full subconic of q+1.
    pub fn bounded_or_subconic(&self) -> bool {
        self.size <= 4 || self.subconic.is_some()
    }
}

/// Compute |B ∩ K| for the Baer subplane B of a new line, pulling the
/// intersection back to PG(2,q) and fitting a subplane conic when it is
/// five or more points.
pub fn baer_conic_meeting(plane: &HallPlane, conic: &Conic, line: HallLine) -> BaerConicMeeting {
    let HallLine::New { dir, base } = line else {
        panic!("only new lines close to Baer subplanes of the derivation net");
    };
    let f = plane.field();
    // Pull back through (u,v,w) ↦ (dir·u + base.x·w, dir·v + base.y·w, w),
    // a bijection PG(2,q) → B.
    let z = f.zero();
    let m = [
        [dir, z, base.x],
        [z, dir, base.y],
        [z, z, f.one()],
    ];
    let image = |p: &ProjPoint| {
        ProjPoint::new(
            f,
            f.add(f.mul(dir, p.x()), f.mul(base.x, p.z())),
            f.add(f.mul(dir, p.y()), f.mul(base.y, p.z())),
            p.z(),
        )
    };
    let pulled: Vec<ProjPoint> = subplane_points(f)
        .into_iter()
        .filter(|p| conic.contains_point(&image(p)))
        .collect();
    let size = pulled.len();
    if size <= 4 {
        return BaerConicMeeting {
            line,
            size,
            subconic: None,
        };
    }
    // Fit: GF(q)-coefficient conics through all pulled-back points. The
    // monomial matrix has subfield entries, so elimination stays in GF(q).
    let rows: Vec<Vec<FieldElement>> = pulled
        .iter()
        .map(|p| {
            let (x, y, w) = (p.x(), p.y(), p.z());
            vec![
                f.sq(x),
                f.mul(x, y),
                f.sq(y),
                f.mul(x, w),
                f.mul(y, w),
                f.sq(w),
            ]
        })
        .collect();
    let subconic = kernel_basis(f, &rows).into_iter().find_map(|v| {
        let coeffs: [FieldElement; 6] = v.try_into().ok()?;
        if !coeffs.iter().all(|&c| f.in_subfield(c)) {
            return None;
        }
        let cand = Conic::new(f, coeffs).ok()?;
        let zeros: HashSet<ProjPoint> = subplane_points(f)
            .into_iter()
            .filter(|p| cand.contains_point(p))
            .collect();
        let target: HashSet<ProjPoint> = pulled.iter().copied().collect();
        (zeros == target).then(|| {
            cand.substituted(&m)
                .expect("pull-back of a nondegenerate conic stays nondegenerate")
        })
    });
    BaerConicMeeting {
        line,
        size,
        subconic,
    }
}

// ============================================================================
// Tests
// ============================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::ConicKind;
    use crate::field::Field;
    use crate::plane::DerivationSet;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn setup(p: u32, k: u32) -> (Field, HallPlane) {
        let f = Field::new(p, k).unwrap();
        let plane = HallPlane::new(&f);
        (f, plane)
    }

    fn parabola_outside_d(f: &Field) -> Conic {
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        Conic::parabola(f, u, f.one(), f.sq(u), f.zero()).unwrap()
    }

    // ---- spectrum ----

    #[test]
    fn spectrum_identities_hold_for_conics() {
        for (p, k) in [(3, 1), (2, 2), (5, 1)] {
            let (f, plane) = setup(p, k);
            let q = f.q() as u64;
            for conic in [
                parabola_outside_d(&f),
                Conic::hyperbola_xy(&f, f.one()).unwrap(),
            ] {
                let s = secant_spectrum(&plane, &conic);
                let n_aff = conic.affine_points().len() as u64;
                assert_eq!(s.a.iter().sum::<u64>(), (q + 1) * q * q);
                assert_eq!(
                    s.a.iter().enumerate().map(|(i, &c)| i as u64 * c).sum::<u64>(),
                    (q + 1) * n_aff
                );
                // every pair lies on exactly one Hall line
                let old_pairs: u64 = old_line_counts(&plane, conic.affine_points())
                    .values()
                    .map(|&c| choose2(c as u64))
                    .sum();
                assert_eq!(s.pairs() + old_pairs, choose2(n_aff));
                assert_eq!(old_line_max(&plane, conic.affine_points()), 2);
            }
        }
    }

    #[test]
    fn spectrum_triples_match_direct_enumeration() {
        for (p, k) in [(3, 1), (2, 2)] {
            let (f, plane) = setup(p, k);
            for conic in [
                parabola_outside_d(&f),
                Conic::hyperbola_xy(&f, f.one()).unwrap(),
                Conic::parabola(&f, f.zero(), f.zero(), f.from_int(-1), f.zero()).unwrap(),
            ] {
                let s = secant_spectrum(&plane, &conic);
                assert_eq!(
                    s.triples,
                    collinear_triples_direct(&plane, conic.affine_points())
                );
                assert_eq!(s.triples, collinear_triples(&plane, &conic));
            }
        }
    }

    #[test]
    fn random_point_sets_split_triples_between_line_families() {
        let (f, plane) = setup(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let all: Vec<AffinePoint> = f
            .elements()
            .flat_map(|x| f.elements().map(move |y| AffinePoint::new(x, y)))
            .collect();
        for round in 0..6 {
            let mut pool = all.clone();
            pool.shuffle(&mut rng);
            let pts = &pool[..10 + round];
            let s = point_set_spectrum(&plane, pts);
            let old_triples: u64 = old_line_counts(&plane, pts)
                .values()
                .map(|&c| choose3(c as u64))
                .sum();
            assert_eq!(
                s.triples + old_triples,
                collinear_triples_direct(&plane, pts)
            );
        }
    }

    #[test]
    fn even_subfield_parabola_spectrum_shows_parallel_q_secants() {
        // Y = X² over GF(16): the 16 affine points split into 4 parallel
        // 4-point new lines of the λ=1 class, everything else ≤ 1.
        let (f, plane) = setup(2, 2);
        let conic = Conic::parabola(&f, f.zero(), f.zero(), f.one(), f.zero()).unwrap();
        let s = secant_spectrum(&plane, &conic);
        assert_eq!(s.count(4), 4);
        assert_eq!(s.max_line, 4);
        assert_eq!(s.count(2), 0);
        assert_eq!(s.count(3), 0);
        let quads = s.lines_with_at_least(3);
        assert!(quads
            .iter()
            .all(|&(l, c)| c == 4 && matches!(l, HallLine::New { dir, .. } if dir == f.one())));
        // parallel: all in the same class, distinct base cosets
        assert_eq!(quads.len(), 4);
        // and the internal nucleus set is empty: every point is on a 4-line
        assert!(internal_nucleus_set(&plane, conic.affine_points()).is_empty());
    }

    #[test]
    fn per_point_distribution_sums_to_pencil_size() {
        let (f, plane) = setup(3, 1);
        let conic = parabola_outside_d(&f);
        for &p in conic.affine_points() {
            let dist = per_point_line_distribution(&plane, &conic, p);
            assert_eq!(dist.values().sum::<u32>(), f.q() + 1);
            assert!(dist.keys().all(|&i| i >= 1));
        }
    }

    #[test]
    #[should_panic(expected = "off the conic")]
    fn per_point_distribution_rejects_foreign_points() {
        let (f, plane) = setup(3, 1);
        let conic = Conic::hyperbola_xy(&f, f.one()).unwrap();
        // (0,0) is not on XY=1
        per_point_line_distribution(&plane, &conic, AffinePoint::new(f.zero(), f.zero()));
    }

    #[test]
    fn spectrum_is_invariant_under_translations_and_dilations() {
        let (f, plane) = setup(2, 2);
        let conic = parabola_outside_d(&f);
        let s0 = secant_spectrum(&plane, &conic);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..8 {
            let s = f.element(rand::Rng::gen_range(&mut rng, 0..f.size()) as usize);
            let t = f.element(rand::Rng::gen_range(&mut rng, 0..f.size()) as usize);
            let lam = f.element(rand::Rng::gen_range(&mut rng, 1..f.size()) as usize);
            let moved: Vec<AffinePoint> = conic
                .affine_points()
                .iter()
                .map(|p| AffinePoint::new(f.add(f.mul(lam, p.x), s), f.add(f.mul(lam, p.y), t)))
                .collect();
            let s1 = point_set_spectrum(&plane, &moved);
            assert_eq!(s0.a, s1.a);
            assert_eq!(s0.triples, s1.triples);
        }
    }

    // ---- arcs ----

    #[test]
    fn arc_report_on_small_synthetic_sets_matches_brute_force() {
        let (f, plane) = setup(3, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let all: Vec<AffinePoint> = f
            .elements()
            .flat_map(|x| f.elements().map(move |y| AffinePoint::new(x, y)))
            .collect();
        for _ in 0..10 {
            let mut pool = all.clone();
            pool.shuffle(&mut rng);
            let pts = &pool[..4];
            let report = arc_report(&plane, pts, &[]);
            assert_eq!(
                report.is_arc,
                collinear_triples_direct(&plane, pts) == 0,
                "arc flag disagrees with direct triples on {pts:?}"
            );
            if !report.is_arc {
                continue;
            }
            // brute-force affine extension check
            for &cand in &all {
                if pts.contains(&cand) {
                    continue;
                }
                let mut bigger = pts.to_vec();
                bigger.push(cand);
                let extends = collinear_triples_direct(&plane, &bigger) == 0;
                assert_eq!(
                    report
                        .extension_points
                        .contains(&ExtensionCandidate::Affine(cand)),
                    extends
                );
            }
            // brute-force direction extension check: no pair of pts spans d
            for d in all_directions(&plane) {
                let spanned = (0..pts.len()).any(|i| {
                    (i + 1..pts.len()).any(|j| {
                        direction_of(plane.hall_line_through(pts[i], pts[j])) == d
                    })
                });
                assert_eq!(
                    report
                        .extension_points
                        .contains(&ExtensionCandidate::AtInfinity(d)),
                    !spanned
                );
            }
        }
    }

    #[test]
    fn adjoined_directions_constrain_arcs() {
        let (f, plane) = setup(3, 1);
        let p0 = AffinePoint::new(f.zero(), f.zero());
        let p1 = AffinePoint::new(f.one(), f.one());
        // p0, p1 span the new class of direction 1
        let spanned = direction_of(plane.hall_line_through(p0, p1));
        assert_eq!(spanned, HallDirection::NewClass(plane.canonical_dir(f.one())));
        let r = arc_report(&plane, &[p0, p1], &[spanned]);
        assert!(!r.is_arc);
        // any other direction coexists
        let other = all_directions(&plane)
            .into_iter()
            .find(|&d| d != spanned)
            .unwrap();
        let r = arc_report(&plane, &[p0, p1], &[other]);
        assert!(r.is_arc);
        // three directions never form an arc (the line at infinity)
        let ds: Vec<HallDirection> = all_directions(&plane).into_iter().take(3).collect();
        assert!(!arc_report(&plane, &[], &ds).is_arc);
        // duplicated directions are rejected
        assert!(!arc_report(&plane, &[p0], &[other, other]).is_arc);
    }

    #[test]
    fn even_parabola_with_nucleus_direction_in_d_extends_to_hyperoval() {
        // q = 4, I ∉ D, N ∈ D: the 16 affine points are an arc reaching an
        // 18-point hyperoval by two infinite extensions.
        let (f, plane) = setup(2, 2);
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let conic = Conic::parabola(&f, u, f.one(), f.one(), f.zero()).unwrap();
        assert_eq!(conic.kind(), ConicKind::Parabola);
        assert!(!conic.classify().infinite_in_d[0]);
        assert!(conic.classify().nucleus_in_d);
        assert_eq!(conic.affine_points().len(), 16);

        let report = arc_report(&plane, conic.affine_points(), &[]);
        assert!(report.is_arc);
        assert!(report.hyperoval_reachable);
        let dirs: Vec<HallDirection> = report
            .extension_points
            .iter()
            .filter_map(|e| match e {
                ExtensionCandidate::AtInfinity(d) => Some(*d),
                _ => None,
            })
            .collect();
        assert!(dirs.len() >= 2, "need two infinite extensions, got {dirs:?}");
        // exhibit an actual hyperoval: 16 + 2 = 18 = q² + 2, complete
        let mut found = false;
        'outer: for i in 0..dirs.len() {
            for j in i + 1..dirs.len() {
                let r2 = arc_report(&plane, conic.affine_points(), &[dirs[i], dirs[j]]);
                if r2.is_arc {
                    assert_eq!(r2.size, 18);
                    assert!(r2.is_complete, "a hyperoval admits no extension");
                    assert!(r2.hyperoval_reachable);
                    found = true;
                    break 'outer;
                }
            }
        }
        assert!(found, "no direction pair completed the parabola");
    }

    #[test]
    fn internal_nucleus_set_of_an_arc_is_everything() {
        let (f, plane) = setup(3, 1);
        let conic = Conic::hyperbola_xy(&f, f.element(4)).unwrap();
        let pts = conic.affine_points();
        let r = arc_report(&plane, pts, &[]);
        let nuclei = internal_nucleus_set(&plane, pts);
        if r.is_arc {
            assert_eq!(nuclei.len(), pts.len());
        } else {
            assert!(nuclei.len() < pts.len());
        }
        assert!(internal_nucleus_set(&plane, &[]).is_empty());
    }

    // ---- tangent witnesses ----

    #[test]
    fn tangent_witness_on_even_three_secants_is_unique() {
        // q = 4, normal-form family: every 3-secant new line carries
        // exactly one point whose tangent meets D; 4-secants carry none.
        let (f, plane) = setup(2, 2);
        let c = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let conic = (0..f.size())
            .find_map(|w| Conic::normal_form(&f, c, f.zero(), f.one(), f.element(w as usize)).ok())
            .unwrap();
        let spectrum = secant_spectrum(&plane, &conic);
        let mut threes = 0;
        for (line, hits) in spectrum.lines_with_at_least(3) {
            let w = three_secant_tangent_witness(&plane, &conic, line);
            match hits {
                3 => {
                    assert!(w.is_some());
                    threes += 1;
                }
                4 => assert!(w.is_none(), "4-secant with a tangent through D"),
                _ => {}
            }
        }
        assert_eq!(threes, spectrum.count(3));
        assert!(threes > 0, "sweep found no 3-secants to witness");
    }

    // ---- Baer meetings ----

    #[test]
    fn baer_meeting_of_subfield_conic_is_a_subconic_on_the_base_subplane() {
        // X² + Y² − Z² over GF(9) restricted to the canonical Baer subplane
        // (the closure of the λ=1 line through the origin) has 4 = q+1
        // points at q=3: exactly its GF(3)-conic.
        let (f, plane) = setup(3, 1);
        let o = f.one();
        let z = f.zero();
        let conic = Conic::new(&f, [o, z, o, z, z, f.neg(o)]).unwrap();
        let base_line = plane.new_line_with_dir_through(f.one(), AffinePoint::new(z, z));
        let m = baer_conic_meeting(&plane, &conic, base_line);
        assert_eq!(m.size, 4);
        assert!(m.subconic.is_none(), "four points stay under the threshold");
        assert!(m.bounded_or_subconic());
    }

    #[test]
    fn baer_meetings_obey_the_four_or_subconic_dichotomy_at_q3() {
        let (f, plane) = setup(3, 1);
        let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        let conics = [
            parabola_outside_d(&f),
            Conic::hyperbola_xy(&f, f.one()).unwrap(),
            Conic::hyperbola_xy(&f, u).unwrap(),
            Conic::parabola(&f, f.zero(), f.zero(), f.from_int(-1), f.zero()).unwrap(),
            Conic::centered(&f, f.zero(), f.one(), f.one()).unwrap(),
        ];
        for conic in &conics {
            let infinite_in_d = conic
                .infinite_points()
                .iter()
                .filter(|p| plane.in_derivation_set(p))
                .count();
            for line in plane.enumerate_new_lines() {
                let m = baer_conic_meeting(&plane, conic, line);
                assert!(m.bounded_or_subconic(), "violation on {line:?}");
                // size decomposes as affine hits + conic ∩ D
                let affine_hits = conic
                    .affine_points()
                    .iter()
                    .filter(|&&p| plane.contains(line, p))
                    .count();
                assert_eq!(m.size, affine_hits + infinite_in_d);
                if let Some(sc) = &m.subconic {
                    assert_eq!(m.size, f.q() as usize + 1);
                    // the fitted conic really carves out the meeting
                    let baer = plane.baer_subplane_points(line);
                    let carved: Vec<&ProjPoint> = baer
                        .iter()
                        .filter(|p| sc.contains_point(p))
                        .collect();
                    assert_eq!(carved.len(), m.size);
                    assert!(carved.iter().all(|p| conic.contains_point(p)));
                }
            }
        }
    }

    #[test]
    fn subconic_meetings_exist_for_scaled_subfield_conics_at_q4() {
        // A subfield conic meets the Baer closure of every λ=1 line it
        // fully lives on in q+1 = 5 > 4 points, forcing the subconic arm.
        let (f, plane) = setup(2, 2);
        let o = f.one();
        let z = f.zero();
        // X² + YZ over GF(16) has all-GF(4) coefficients
        let conic = Conic::new(&f, [o, z, z, z, o, z]).unwrap();
        let base_line = plane.new_line_with_dir_through(o, AffinePoint::new(z, z));
        let m = baer_conic_meeting(&plane, &conic, base_line);
        assert_eq!(m.size, 5);
        let sc = m.subconic.as_ref().expect("five points force a subconic");
        assert_eq!(
            sc.points().iter().filter(|p| conic.contains_point(p)).count(),
            sc.points().len()
        );
        assert!(m.bounded_or_subconic());
    }

    #[test]
    #[should_panic(expected = "only new lines")]
    fn baer_meeting_rejects_old_lines() {
        let (f, plane) = setup(3, 1);
        let conic = Conic::hyperbola_xy(&f, f.one()).unwrap();
        let m = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
        baer_conic_meeting(
            &plane,
            &conic,
            HallLine::Old {
                slope: m,
                intercept: f.zero(),
            },
        );
    }

    // ---- derivation-set counts feeding the spectra ----

    #[test]
    fn odd_conjugate_external_hyperbola_has_two_full_lines() {
        // q = 3: conjugate infinite points, all of D external ⇒ a_{q+1} = 2.
        let (f, plane) = setup(3, 1);
        let conic = Conic::centered(&f, f.zero(), f.one(), f.one()).unwrap();
        assert!(conic.classify().conjugate_infinite_pair);
        let d = DerivationSet::standard(&f);
        let counts = conic.classify_derivation_set(&d);
        assert_eq!(counts.external, f.q() + 1);
        let s = secant_spectrum(&plane, &conic);
        assert_eq!(s.count(f.q() as usize + 1), 2);
    }
}
