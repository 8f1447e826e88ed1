//! Classify a handful of representative conics of PG(2, q²) and report the
//! data that matters for derivation: kind, points at infinity and whether
//! they lie in the derivation set, conjugacy of the infinite pair, the
//! nucleus (even q), and external/internal counts over D (odd q).
//!
//! Usage: classify_conics [p k]   (defaults to p=3 k=1, i.e. q=3)

use hallplane::{Conic, DerivationSet, Field};

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(3, |s| s.parse().expect("p"));
    let k: u32 = args.next().map_or(1, |s| s.parse().expect("k"));
    let f = Field::new(p, k).expect("field");
    println!(
        "PG(2, {}) over GF({}) with modulus {:?}, q = {}",
        f.size(),
        f.size(),
        f.modulus(),
        f.q()
    );

    let u = f
        .elements()
        .find(|&e| !f.in_subfield(e))
        .expect("GF(q^2) exceeds GF(q)");
    // a quadratic T^2+aT+b over GF(q) without roots in GF(q): its two roots
    // in GF(q^2) are conjugate, so the centered conic below is the conjugate
    // hyperbola case
    let (a, b) = f
        .subfield_elements()
        .flat_map(|a| f.subfield_elements().map(move |b| (a, b)))
        .find(|&(a, b)| {
            f.subfield_elements()
                .all(|t| !f.add(f.add(f.sq(t), f.mul(a, t)), b).is_zero())
        })
        .expect("irreducible quadratics exist over every finite field");
    let samples: Vec<(&str, String)> = vec![
        ("Y = X^2", "parabola(0,0,[-1],0)".to_string()),
        (
            "parabola, vertex direction outside D",
            format!("parabola({},1,{},0)", f.show(u), f.show(f.sq(u))),
        ),
        ("XY = 1", "hyperbola_xy(1)".to_string()),
        (
            "conjugate-pair hyperbola",
            format!("centered({},{},1)", f.show(a), f.show(b)),
        ),
    ];

    let d = DerivationSet::standard(&f);
    for (label, literal) in samples {
        println!("\n{label}:  {literal}");
        let conic = match Conic::parse(&f, &literal) {
            Ok(c) => c,
            Err(e) => {
                println!("  skipped: {e}");
                continue;
            }
        };
        let class = conic.classify();
        println!(
            "  kind: {} ({} affine points + {} at infinity)",
            class.kind.name(),
            conic.affine_points().len(),
            conic.infinite_points().len()
        );
        for (pt, in_d) in class.infinite_points.iter().zip(&class.infinite_in_d) {
            println!(
                "  infinite point ({}:{}:0) {}",
                f.show(pt.x()),
                f.show(pt.y()),
                if *in_d { "in D" } else { "outside D" }
            );
        }
        if class.infinite_points.len() == 2 {
            println!(
                "  infinite pair conjugate under x -> x^q: {}",
                class.conjugate_infinite_pair
            );
        }
        if let Some(n) = class.nucleus {
            println!(
                "  nucleus ({}:{}:{}) {}",
                f.show(n.x()),
                f.show(n.y()),
                f.show(n.z()),
                if class.nucleus_in_d { "in D" } else { "not in D" }
            );
        }
        if !f.has_even_order() {
            let c = conic.classify_derivation_set(&d);
            println!(
                "  derivation set: {} external, {} internal, {} on the conic",
                c.external, c.internal, c.on
            );
        }
    }
}
