//! Conics that stay arcs after derivation — and ones that do not.
//!
//! Three exhibits:
//!   1. XY = 1 in Hall(25): collinear triples appear, no inherited arc.
//!   2. XY = -d with d a non-square of GF(25): a complete 24-arc of
//!      Hall(25) (O'Keefe–Pascasio).
//!   3. q = 4 parabola with vertex direction outside D and nucleus
//!      direction inside: a 16-point translation arc completing to an
//!      18-point hyperoval by two extensions at infinity.

use hallplane::inherited::{arc_report, ExtensionCandidate, HallDirection};
use hallplane::{Conic, Field, HallPlane};

fn dir_name(f: &Field, d: HallDirection) -> String {
    match d {
        HallDirection::OldSlope(m) => format!("old slope {}", f.show(m)),
        HallDirection::NewClass(l) => format!("derived class {}", f.show(l)),
    }
}

fn main() {
    let f5 = Field::new(5, 1).expect("GF(25)");
    let plane5 = HallPlane::new(&f5);

    let xy1 = Conic::hyperbola_xy(&f5, f5.one()).unwrap();
    let r = arc_report(&plane5, xy1.affine_points(), &[]);
    println!(
        "XY=1 in Hall(25): {} affine points, arc: {}, longest line section: {}",
        xy1.affine_points().len(),
        r.is_arc,
        r.max_line_hits
    );

    let d = f5.elements().find(|&e| !f5.is_square(e)).unwrap();
    let neg = Conic::hyperbola_xy(&f5, f5.neg(d)).unwrap();
    let r = arc_report(&plane5, neg.affine_points(), &[]);
    println!(
        "XY={} in Hall(25): {} affine points, arc: {}, complete: {}, extension points: {}",
        f5.show(f5.neg(d)),
        neg.affine_points().len(),
        r.is_arc,
        r.is_complete,
        r.extension_points.len()
    );

    let f4 = Field::new(2, 2).expect("GF(16)");
    let plane4 = HallPlane::new(&f4);
    let u = f4.elements().find(|&e| !f4.in_subfield(e)).unwrap();
    let parab = Conic::parabola(&f4, u, f4.one(), f4.one(), f4.zero()).unwrap();
    let r = arc_report(&plane4, parab.affine_points(), &[]);
    println!(
        "\nq=4 parabola {}: {} affine points, arc: {}, hyperoval reachable: {}",
        parab.literal(),
        parab.affine_points().len(),
        r.is_arc,
        r.hyperoval_reachable
    );
    let dirs: Vec<_> = r
        .extension_points
        .iter()
        .filter_map(|e| match e {
            ExtensionCandidate::AtInfinity(d) => Some(*d),
            ExtensionCandidate::Affine(_) => None,
        })
        .collect();
    let named: Vec<String> = dirs.iter().map(|&d| dir_name(&f4, d)).collect();
    println!("  extensions at infinity: {}", named.join(", "));
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            let r2 = arc_report(&plane4, parab.affine_points(), &[dirs[i], dirs[j]]);
            if r2.is_arc {
                println!(
                    "  hyperoval: affine part + {} + {} = {} points, complete: {}",
                    dir_name(&f4, dirs[i]),
                    dir_name(&f4, dirs[j]),
                    r2.size,
                    r2.is_complete
                );
            }
        }
    }
}
