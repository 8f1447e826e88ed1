//! Construct the Hall plane of order q² and walk its structure: the
//! derivation set D on the line at infinity, the two line families (old
//! lines with slope off GF(q) ∪ {∞}, new lines replacing the rest), the
//! axiom check, and the Baer subplane closing over a new line.
//!
//! Usage: hall_plane_basics [p k]   (defaults to p=3 k=1, order 9)

use hallplane::{AffinePoint, Field, HallLine, HallPlane};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(3, |s| s.parse().expect("p"));
    let k: u32 = args.next().map_or(1, |s| s.parse().expect("k"));
    let f = Field::new(p, k).expect("field");
    let plane = HallPlane::new(&f);
    let q = f.q() as u64;
    println!(
        "Hall plane of order {} from AG(2, {}) by derivation, q = {q}",
        f.size(),
        f.size()
    );
    println!(
        "derivation set D: {} points of the line at infinity (slopes in GF(q) and infinity)\n",
        plane.derivation_set().len()
    );

    let all = plane.enumerate_all_lines();
    let new = all.iter().filter(|l| l.is_new()).count() as u64;
    let old = all.len() as u64 - new;
    println!("lines: {} total = {old} old + {new} new", all.len());
    println!("  old: slope outside GF(q), kept from AG(2, q^2): (q^2-q)·q^2 = {old}");
    println!("  new: translates of the q+1 subplane classes: (q+1)·q^2 = {new}");

    match plane.verify_affine_plane_axioms() {
        Ok(()) => println!("affine plane axioms: hold (unique joins, parallels, order {})", f.size()),
        Err(e) => println!("affine plane axioms: VIOLATED: {e}"),
    }

    // every point pair determines one line; mixed pairs ride old lines
    // exactly when the slope of their join is off GF(q)
    let o = AffinePoint::new(f.zero(), f.zero());
    let a = AffinePoint::new(f.one(), f.generator());
    let b = AffinePoint::new(f.one(), f.one());
    for (name, pt) in [("(1, t)", a), ("(1, 1)", b)] {
        let l = plane.hall_line_through(o, pt);
        let family = match l {
            HallLine::Old { .. } => "old (slope off GF(q))",
            HallLine::New { .. } => "new (slope in GF(q), replaced by a subplane translate)",
        };
        println!("line through (0,0) and {name}: {family}, {} points", plane.line_points(l).len());
    }

    // the q+1 new directions partition the new lines into parallel classes
    let dirs = plane.new_directions().to_vec();
    println!("\nnew parallel classes: {}", dirs.len());
    for lam in dirs.iter().take(3) {
        let l = plane.new_line_with_dir_through(*lam, o);
        println!(
            "  class {} through the origin: {} points, e.g. {:?}",
            f.show(*lam),
            plane.line_points(l).len(),
            plane
                .line_points(l)
                .iter()
                .take(3)
                .map(|p| format!("({}, {})", f.show(p.x), f.show(p.y)))
                .collect::<Vec<_>>()
        );
    }

    // lines through a point: one per direction, q^2+q in total, q+1 of
    // them new
    let through = plane.lines_through(a);
    let new_through = through.iter().filter(|l| l.is_new()).count();
    println!(
        "\nlines through (1, t): {} total, {new_through} new (one per class)",
        through.len()
    );

    // a new line plus its q+1 directions at infinity closes to a Baer
    // subplane of the projective closure: q^2 + q + 1 points
    let lam = dirs[0];
    let base = plane.new_line_with_dir_through(lam, o);
    let affine = plane.line_points(base).len();
    println!(
        "\nBaer subplane over one new line: {affine} affine points + {} in D = {}",
        q + 1,
        affine as u64 + q + 1
    );

    println!(
        "its direction class, canonically: NewClass({})",
        f.show(plane.canonical_dir(lam))
    );
}
