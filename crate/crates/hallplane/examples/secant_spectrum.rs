//! Print the new-line secant spectrum of representative conics in the Hall
//! plane of order q², together with the counting identities that pin it
//! down: Σa_i = (q+1)q², Σ i·a_i = (q+1)·|K ∩ AG(2,q²)|, and the triple
//! count Σ C(i,3)·a_i cross-checked by direct enumeration.
//!
//! Usage: secant_spectrum [p k]   (defaults to p=5 k=1, i.e. q=5)

use hallplane::inherited::{collinear_triples_direct, old_line_max, secant_spectrum};
use hallplane::{Conic, Field, HallPlane};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(5, |s| s.parse().expect("p"));
    let k: u32 = args.next().map_or(1, |s| s.parse().expect("k"));
    let f = Field::new(p, k).expect("field");
    let plane = HallPlane::new(&f);
    let q = f.q();
    println!("Hall plane of order {} (q = {q})", plane.order());

    let u = f.elements().find(|&e| !f.in_subfield(e)).unwrap();
    let samples: Vec<(String, Conic)> = [
        (
            format!("parabola, infinite point outside D: parabola({},1,{},0)", f.show(u), f.show(f.sq(u))),
            Conic::parabola(&f, u, f.one(), f.sq(u), f.zero()),
        ),
        ("hyperbola XY = 1".to_string(), Conic::hyperbola_xy(&f, f.one())),
        (
            "parabola Y = X^2".to_string(),
            Conic::parabola(&f, f.zero(), f.zero(), f.from_int(-1), f.zero()),
        ),
    ]
    .into_iter()
    .filter_map(|(label, c)| c.ok().map(|c| (label, c)))
    .collect();

    for (label, conic) in samples {
        let s = secant_spectrum(&plane, &conic);
        println!("\n{label}  [{}]", conic.kind().name());
        let shown: Vec<String> = s
            .a
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c > 0 || i <= 4)
            .map(|(i, c)| format!("a{i}={c}"))
            .collect();
        println!("  spectrum: {}", shown.join("  "));
        println!(
            "  collinear triples {} (direct enumeration {}), longest new line {}, longest old line {}",
            s.triples,
            collinear_triples_direct(&plane, conic.affine_points()),
            s.max_line,
            old_line_max(&plane, conic.affine_points()),
        );
        let n_aff = conic.affine_points().len() as u64;
        let qq = q as u64;
        assert_eq!(s.a.iter().sum::<u64>(), (qq + 1) * qq * qq);
        assert_eq!(
            s.a.iter().enumerate().map(|(i, &c)| i as u64 * c).sum::<u64>(),
            (qq + 1) * n_aff
        );
        println!("  identities verified: line total and incidence total both match");
    }
}
