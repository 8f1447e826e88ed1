//! Möbius normalization of quadratics X² + βX + γ over GF(q²), q even: a
//! subfield-rational map z ↦ (az+b)/(cz+d) brings every admissible quadratic
//! to X² + X + w with w ∉ GF(q).  Admissible means the roots u1, u2 in
//! GF(q⁴) satisfy ui ∉ {ui^q, uj, uj^q}.
//!
//! Usage: normal_form [p k]   (p = 2; default 2 2)

use std::collections::BTreeMap;

use hallplane::oracles::normalize_quadratic;
use hallplane::Field;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u32 = args.first().map(|s| s.parse().unwrap()).unwrap_or(2);
    let k: u32 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(2);
    let f = Field::new(p, k).expect("valid field parameters");
    assert!(f.has_even_order(), "normalization is an even-q construction");
    println!("quadratics X² + βX + γ over GF({})\n", f.size());

    let mut outcomes: BTreeMap<String, u32> = BTreeMap::new();
    let mut worked = None;
    for beta in f.elements() {
        for gamma in f.elements() {
            match normalize_quadratic(&f, beta, gamma) {
                Ok((m, w)) => {
                    *outcomes.entry("normalized".into()).or_default() += 1;
                    if worked.is_none() && !f.in_subfield(gamma) && !f.in_subfield(beta) {
                        worked = Some((beta, gamma, m, w));
                    }
                }
                Err(e) => *outcomes.entry(e.to_string()).or_default() += 1,
            }
        }
    }
    for (what, n) in &outcomes {
        println!("{n:4}  {what}");
    }
    let total: u32 = outcomes.values().sum();
    assert_eq!(total, f.size() * f.size());

    if let Some((beta, gamma, m, w)) = worked {
        println!(
            "\nworked case: β = {}, γ = {} (both outside GF({}))",
            f.show(beta),
            f.show(gamma),
            f.q()
        );
        println!(
            "  z ↦ ({}·z + {}) / ({}·z + {})",
            f.show(m.a),
            f.show(m.b),
            f.show(m.c),
            f.show(m.d)
        );
        println!("  normal form X² + X + {}", f.show(w));
    }
}
