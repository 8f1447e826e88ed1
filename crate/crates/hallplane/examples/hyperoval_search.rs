//! Even q: exhaustive hyperoval search over the parabola family
//! (X + uY)² + XZ + wYZ with both the infinite point and the nucleus off
//! the derivation set. The inherited point set plus those two directions
//! has q² + 2 points; it is a hyperoval exactly when no line carries three.
//!
//! Usage: hyperoval_search [p k]   (defaults to p=2 k=2, i.e. q=4)

use hallplane::inherited::arc_report;
use hallplane::{Conic, ExtensionCandidate, Field, HallDirection, HallPlane, ProjPoint};

fn dir_of(f: &Field, pt: &ProjPoint) -> HallDirection {
    assert!(pt.z().is_zero() && !pt.x().is_zero());
    HallDirection::OldSlope(f.div(pt.y(), pt.x()))
}

fn show_dir(f: &Field, d: HallDirection) -> String {
    match d {
        HallDirection::OldSlope(m) => format!("old slope {}", f.show(m)),
        HallDirection::NewClass(lam) => format!("new class {}", f.show(lam)),
    }
}

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(2, |s| s.parse().expect("p"));
    let k: u32 = args.next().map_or(2, |s| s.parse().expect("k"));
    let f = Field::new(p, k).expect("field");
    if !f.has_even_order() {
        eprintln!("hyperovals need even q; q = {} is odd", f.q());
        std::process::exit(2);
    }
    let plane = HallPlane::new(&f);
    let q = f.q();
    println!(
        "Hall plane of order {}, q = {q} ({}a square)\n",
        f.size(),
        if f.q_is_square() { "" } else { "not " }
    );

    // sweep all (u, w) with u, w outside GF(q); w = u is the degenerate
    // case, w = conj(u) makes the infinite point and nucleus conjugate
    let mut conj = [0u32; 2]; // [hyperovals, instances] over conjugate pairs
    let mut rest = [0u32; 2];
    let mut shown = 0;
    for u in f.elements().filter(|&u| !f.in_subfield(u)) {
        for w in f.elements().filter(|&w| !f.in_subfield(w)) {
            let Ok(c) = Conic::parabola(&f, u, f.one(), w, f.zero()) else {
                continue;
            };
            let i_dir = dir_of(&f, &c.infinite_points()[0]);
            let n_dir = dir_of(&f, &c.nucleus());
            let rep = arc_report(&plane, c.affine_points(), &[i_dir, n_dir]);
            let hyperoval = rep.is_arc && rep.size == f.size() as usize + 2;
            let bucket = if w == f.conj(u) { &mut conj } else { &mut rest };
            bucket[0] += hyperoval as u32;
            bucket[1] += 1;
            if hyperoval && shown < 3 {
                shown += 1;
                println!(
                    "hyperoval: {} + {} + {}  ({} points, complete: {})",
                    c.literal(),
                    show_dir(&f, i_dir),
                    show_dir(&f, n_dir),
                    rep.size,
                    rep.is_complete
                );
            }
        }
    }
    println!(
        "\nconjugate pairs (w = u^q): {}/{} complete to hyperovals",
        conj[0], conj[1]
    );
    println!(
        "other choices of (u, w):   {}/{} complete to hyperovals",
        rest[0], rest[1]
    );
    if conj[1] > 0 && conj[0] == conj[1] && rest[0] == 0 {
        println!("conjugacy characterizes hyperoval completion in this family");
    } else if conj[0] == 0 && rest[0] == 0 {
        println!("no member of the family completes at this order");
    }

    // one oval in detail: its only extension should be the nucleus class
    let u = f.generator();
    let c = Conic::parabola(&f, u, f.one(), f.conj(u), f.zero()).expect("conjugate parabola");
    let rep = arc_report(
        &plane,
        c.affine_points(),
        &[dir_of(&f, &c.infinite_points()[0])],
    );
    println!(
        "\n{} + infinite point: arc = {}, size = {}, complete = {}, hyperoval reachable = {}",
        c.literal(),
        rep.is_arc,
        rep.size,
        rep.is_complete,
        rep.hyperoval_reachable
    );
    for cand in &rep.extension_points {
        match cand {
            ExtensionCandidate::Affine(pt) => {
                println!("  extends by affine point ({}, {})", f.show(pt.x), f.show(pt.y));
            }
            ExtensionCandidate::AtInfinity(d) => {
                println!("  extends by {}", show_dir(&f, *d));
            }
        }
    }
}
