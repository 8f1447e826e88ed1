//! Rational roots of T³ + ββ̄T + ββ̄(β+β̄) over GF(q), q even: the count is
//! 3 or 1 for square q (by β ∈ GF(q) or not) and 3 or 0 for non-square q
//! (by β a cube in GF(q²)* or not).
//!
//! Usage: nbeta_roots [p k]   (p = 2; default 2 2)

use std::collections::BTreeMap;

use hallplane::oracles::count_rational_roots_nbeta;
use hallplane::Field;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u32 = args.first().map(|s| s.parse().unwrap()).unwrap_or(2);
    let k: u32 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(2);
    let f = Field::new(p, k).expect("valid field parameters");
    assert!(f.has_even_order(), "the cubic lives in characteristic 2");
    let q = f.q();
    println!(
        "GF({}) over GF({q}); q is {}a square\n",
        f.size(),
        if f.q_is_square() { "" } else { "not " }
    );

    // (class, count) -> how many β
    let mut tally: BTreeMap<(&str, u32), u32> = BTreeMap::new();
    for beta in f.elements().filter(|b| !b.is_zero()) {
        let n = count_rational_roots_nbeta(&f, beta);
        let class = if f.q_is_square() {
            if f.in_subfield(beta) { "β ∈ GF(q)" } else { "β ∉ GF(q)" }
        } else if f.is_cube(beta) {
            "β a cube"
        } else {
            "β a non-cube"
        };
        *tally.entry((class, n)).or_default() += 1;
        let want = match (f.q_is_square(), class) {
            (true, "β ∈ GF(q)") => 3,
            (true, _) => 1,
            (false, "β a cube") => 3,
            (false, _) => 0,
        };
        assert_eq!(n, want, "β = {}", f.show(beta));
    }
    for ((class, n), betas) in &tally {
        println!("{betas:4} β with {class}: {n} rational roots each");
    }
    println!("\nall {} nonzero β agree with the case formula", f.size() - 1);
}
