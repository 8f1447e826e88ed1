//! Tour of GF(q²) arithmetic as the library exposes it: coordinates over
//! the prime field, the subfield GF(q), conjugation x ↦ x^q, norm and
//! relative trace, squares and cubes, and the canonical quartic extension
//! used by the root-counting oracles.
//!
//! Usage: field_tour [p k]   (defaults to p=3 k=1, i.e. GF(9) over GF(3))

use hallplane::Field;

fn main() {
    let mut args = std::env::args().skip(1);
    let p: u32 = args.next().map_or(3, |s| s.parse().expect("p"));
    let k: u32 = args.next().map_or(1, |s| s.parse().expect("k"));
    let f = Field::new(p, k).expect("field");
    println!(
        "GF({}) = GF({}^{}) with modulus {:?} (coefficients by ascending degree)",
        f.size(),
        p,
        2 * k,
        f.modulus()
    );
    println!(
        "subfield GF({}), generator t = {}\n",
        f.q(),
        f.show(f.generator())
    );

    let t = f.generator();
    println!("powers of t: t^2 = {}, t^3 = {}", f.show(f.sq(t)), f.show(f.mul(t, f.sq(t))));
    println!(
        "conj(t) = t^q = {}, conj is an involution: conj(conj(t)) = {}",
        f.show(f.conj(t)),
        f.show(f.conj(f.conj(t)))
    );
    // norm and relative trace land in GF(q) for every element
    println!(
        "norm(t) = t·t^q = {} (in GF(q): {}), trace(t) = t+t^q = {} (in GF(q): {})",
        f.show(f.norm(t)),
        f.in_subfield(f.norm(t)),
        f.show(f.rel_trace(t)),
        f.in_subfield(f.rel_trace(t))
    );

    let subfield: Vec<String> = f.subfield_elements().map(|e| f.show(e)).collect();
    println!("\nGF({}) inside GF({}): {}", f.q(), f.size(), subfield.join(" "));
    let fixed = f.elements().filter(|&e| f.conj(e) == e).count();
    println!("fixed points of conj: {fixed} (= q)");

    let squares = f.elements().skip(1).filter(|&e| f.is_square(e)).count();
    let cubes = f.elements().skip(1).filter(|&e| f.is_cube(e)).count();
    println!("\nnonzero squares: {squares}, nonzero cubes: {cubes}");
    if f.has_even_order() {
        // characteristic 2: squaring is a bijection, every element a square
        println!("even q: squaring is a field automorphism");
    }

    // the quartic extension GF(q^4) hosts the roots that the cubic and
    // quadratic oracles count; the embedding respects arithmetic
    let ext = f.quartic_extension().expect("quartic extension");
    let big = &ext.target;
    println!(
        "\nquartic extension GF({}) with modulus {:?}",
        big.size(),
        big.modulus()
    );
    let im = ext.map(t);
    println!(
        "t embeds to {}; image of t^2 equals square of image: {}",
        big.show(im),
        ext.map(f.sq(t)) == big.sq(im)
    );
}
