//! Through three non-collinear points of a new line there pass exactly
//! 3(q−1) parabolas with non-derived infinite point meeting the line in
//! exactly those three points.
//!
//! Usage: parabola_pencil [p k]   (odd q; default 5 1)

use hallplane::oracles::{count_three_secant_parabolas, fourth_rational_point};
use hallplane::{AffinePoint, Field, HallPlane};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u32 = args.first().map(|s| s.parse().unwrap()).unwrap_or(5);
    let k: u32 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(1);
    let f = Field::new(p, k).expect("valid field parameters");
    let q = f.q();
    assert!(!f.has_even_order(), "the pencil count is an odd-q statement");
    let plane = HallPlane::new(&f);

    let o = f.zero();
    let m1 = f.neg(f.one());
    let triple = [
        AffinePoint::new(o, o),
        AffinePoint::new(m1, o),
        AffinePoint::new(o, m1),
    ];
    let line = plane.new_line_with_dir_through(f.one(), triple[0]);

    println!("Hall({}), canonical triple (0,0), (-1,0), (0,-1) on the unit new line", q * q);
    let pencil = count_three_secant_parabolas(&plane, line, triple);
    println!("three-point secant parabolas: {}   (3(q-1) = {})", pencil.count, 3 * (q - 1));
    assert_eq!(pencil.count, 3 * (q - 1));
    for wit in pencil.witnesses.iter().take(3) {
        println!("  e.g. {}", wit.literal());
    }

    // The count is governed by the fourth rational point of each pencil
    // member: the member is a 3-secant exactly when that point collapses
    // onto the base triple.
    let mut collapsed = 0;
    let mut sample = None;
    for u in f.elements().filter(|&u| !f.in_subfield(u)) {
        let fp = fourth_rational_point(&f, u);
        if fp.coincides_with_base {
            collapsed += 1;
        } else if sample.is_none() {
            sample = Some((u, fp.point));
        }
    }
    println!("\nfourth-point collapses over u ∉ GF({q}): {collapsed}");
    assert_eq!(collapsed, pencil.count);
    if let Some((u, pt)) = sample {
        println!(
            "  non-collapsing sample: u = {}, fourth rational point ({}, {})",
            f.show(u),
            f.show(pt.x),
            f.show(pt.y)
        );
    }
}
