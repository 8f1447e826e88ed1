//! Arithmetic in GF(q²) = GF(p^(2k)) with its distinguished subfield GF(q).
//!
//! A [`Field`] is built once (tables and all) and then shared cheaply; a
//! [`FieldElement`] is a plain `Copy` value tagged with a fingerprint of the
//! field it belongs to, so mixing elements of different fields panics instead
//! of silently computing garbage.
//!
//! Elements are coordinate vectors over Z_p in the polynomial basis
//! {1, t, …, t^(2k-1)} determined by the modulus. The canonical element order
//! used everywhere for canonicalization is the ascending base-p integer
//! encoding of the coordinate vector (c₀ least significant).

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field size p^(2k). Everything in scope is far below it.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

// ============================================================================
// Errors
// ============================================================================

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("p = {0} is not prime")]
    NotPrime(u32),
    #[error("extension degree k must be at least 1")]
    ZeroDegree,
    #[error("field size p^{deg} = {size} exceeds the supported bound 2^16")]
    TooLarge { deg: u32, size: u64 },
    #[error("modulus must be a monic degree-{expected} polynomial (got {got:?})")]
    BadModulusShape { expected: u32, got: Vec<u32> },
    #[error("modulus is reducible: divisible by {0}")]
    ReducibleModulus(String),
    #[error("Frobenius^k fixes {got} elements, expected q = {q}")]
    BadSubfield { got: usize, q: u32 },
    #[error("cannot parse element literal {0:?}")]
    BadElementLiteral(String),
    #[error("base modulus has no root in the extension field")]
    NoEmbedding,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

// ============================================================================
// Field specification (the on-disk format)
// ============================================================================

/// Plain description of a field: prime p, subfield degree k, and the monic
/// degree-2k modulus as coefficients `[c0, c1, …, c_2k]` (ascending degree).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub k: u32,
    pub modulus: Vec<u32>,
}

impl FieldSpec {
    pub fn load(path: impl AsRef<Path>) -> Result<FieldSpec, FieldError> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), FieldError> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }
}

// ============================================================================
// Elements
// ============================================================================

/// An element of a specific [`Field`], identified by its canonical index
/// (the base-p encoding of its coordinate vector). All arithmetic goes
/// through the owning `Field`; operations assert that both operands carry
/// the same field fingerprint.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    field: u32,
    idx: u32,
}

impl FieldElement {
    /// Canonical index: the base-p little-endian encoding of the coordinates.
    pub fn index(self) -> usize {
        self.idx as usize
    }

    pub fn is_zero(self) -> bool {
        self.idx == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}#{:08x}", self.idx, self.field)
    }
}

// ============================================================================
// Polynomial helpers over Z_p (construction-time only)
// ============================================================================

mod poly {
    /// Trim trailing zeros (highest-degree coefficients).
    fn trim(v: &mut Vec<u32>) {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
    }

    pub fn mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ai * bj) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of a modulo the monic polynomial m.
    pub fn rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
        debug_assert_eq!(*m.last().unwrap(), 1);
        let mut r: Vec<u32> = a.to_vec();
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for i in 0..=dm {
                    let sub = (lead * m[i]) % p;
                    r[shift + i] = (r[shift + i] + p * p - sub) % p;
                }
            }
            r.pop();
        }
        while r.len() < dm {
            r.push(0);
        }
        r
    }

    /// Exhaustive trial division: a monic polynomial of degree d is
    /// irreducible iff no monic polynomial of degree 1..=d/2 divides it.
    pub fn irreducible(p: u32, m: &[u32]) -> Result<(), Vec<u32>> {
        let d = m.len() - 1;
        for dd in 1..=(d / 2) {
            let count = (p as u64).pow(dd as u32);
            for enc in 0..count {
                let mut div: Vec<u32> = Vec::with_capacity(dd + 1);
                let mut e = enc;
                for _ in 0..dd {
                    div.push((e % p as u64) as u32);
                    e /= p as u64;
                }
                div.push(1); // monic
                let r = rem(p, m, &div);
                if r.iter().all(|&c| c == 0) {
                    return Err(div);
                }
            }
        }
        Ok(())
    }

    /// Lexicographically least monic irreducible polynomial of degree d,
    /// scanning constant-first encodings in ascending order.
    pub fn canonical_irreducible(p: u32, d: u32) -> Vec<u32> {
        let count = (p as u64).pow(d);
        for enc in 0..count {
            let mut m: Vec<u32> = Vec::with_capacity(d as usize + 1);
            let mut e = enc;
            for _ in 0..d {
                m.push((e % p as u64) as u32);
                e /= p as u64;
            }
            m.push(1);
            if irreducible(p, &m).is_ok() {
                return m;
            }
        }
        unreachable!("irreducible polynomials of every degree exist over Z_p")
    }

    pub fn format(m: &[u32]) -> String {
        let terms: Vec<String> = m
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".into(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            })
            .collect();
        terms.join(" + ")
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ============================================================================
// The field itself
// ============================================================================

struct FieldCore {
    p: u32,
    k: u32,
    deg: u32,
    size: u32,
    q: u32,
    modulus: Vec<u32>,
    fp: u32,
    pow_p: Vec<u32>,
    digits: Vec<u8>,  // size * deg, little-endian coordinates
    neg: Vec<u32>,
    log: Vec<u32>,    // log[0] is unused
    exp: Vec<u32>,    // length 2*(size-1)
    conj: Vec<u32>,   // Frobenius^k
    in_sub: Vec<bool>,
    subfield: Vec<u32>,
    gen_idx: u32,
}

/// GF(p^(2k)) with all operation tables precomputed. Cloning is cheap
/// (shared immutable core), and a `Field` can be used from many threads.
#[derive(Clone)]
pub struct Field(Arc<FieldCore>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Field(GF({}^{}), modulus {})",
            self.0.p,
            self.0.deg,
            poly::format(&self.0.modulus)
        )
    }
}

fn fingerprint(p: u32, k: u32, modulus: &[u32]) -> u32 {
    // FNV-1a over the defining data; equal specs interoperate even across
    // separate constructions.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |v: u32| {
        for b in v.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
    };
    eat(p);
    eat(k);
    for &c in modulus {
        eat(c);
    }
    (h ^ (h >> 32)) as u32
}

impl Field {
    /// GF(p^(2k)) with the canonical (lexicographically least irreducible)
    /// modulus for this p and degree.
    pub fn new(p: u32, k: u32) -> Result<Field, FieldError> {
        Self::check_shape(p, k)?;
        let modulus = poly::canonical_irreducible(p, 2 * k);
        Self::build(p, k, modulus)
    }

    /// GF(p^(2k)) with an explicit modulus; irreducibility is re-verified.
    pub fn with_modulus(p: u32, k: u32, modulus: &[u32]) -> Result<Field, FieldError> {
        Self::check_shape(p, k)?;
        if modulus.len() != (2 * k + 1) as usize
            || *modulus.last().unwrap_or(&0) != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadModulusShape {
                expected: 2 * k,
                got: modulus.to_vec(),
            });
        }
        Self::build(p, k, modulus.to_vec())
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Field, FieldError> {
        Self::with_modulus(spec.p, spec.k, &spec.modulus)
    }

    pub fn spec(&self) -> FieldSpec {
        FieldSpec {
            p: self.0.p,
            k: self.0.k,
            modulus: self.0.modulus.clone(),
        }
    }

    fn check_shape(p: u32, k: u32) -> Result<(), FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = (p as u64).pow(2 * k);
        if size > MAX_FIELD_SIZE {
            return Err(FieldError::TooLarge { deg: 2 * k, size });
        }
        Ok(())
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Result<Field, FieldError> {
        if let Err(div) = poly::irreducible(p, &modulus) {
            return Err(FieldError::ReducibleModulus(poly::format(&div)));
        }
        let deg = 2 * k;
        let size = (p as u64).pow(deg) as u32;
        let q = (p as u64).pow(k) as u32;

        let mut pow_p = Vec::with_capacity(deg as usize + 1);
        let mut acc = 1u32;
        for _ in 0..=deg {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }

        let mut digits = vec![0u8; (size * deg) as usize];
        for i in 0..size {
            let mut e = i;
            for j in 0..deg {
                digits[(i * deg + j) as usize] = (e % p) as u8;
                e /= p;
            }
        }

        let encode = |coords: &[u32]| -> u32 {
            coords
                .iter()
                .enumerate()
                .map(|(j, &c)| (c % p) * pow_p[j])
                .sum()
        };

        let mut neg = vec![0u32; size as usize];
        for i in 0..size {
            let co: Vec<u32> = (0..deg)
                .map(|j| {
                    let c = digits[(i * deg + j) as usize] as u32;
                    (p - c) % p
                })
                .collect();
            neg[i as usize] = encode(&co);
        }

        // Multiplication tables via a generator of the cyclic group.
        let n1 = size - 1;
        let coords_of = |i: u32| -> Vec<u32> {
            (0..deg)
                .map(|j| digits[(i * deg + j) as usize] as u32)
                .collect()
        };
        let raw_mul = |a: u32, b: u32| -> u32 {
            let prod = poly::mul(p, &coords_of(a), &coords_of(b));
            let red = poly::rem(p, &prod, &modulus);
            encode(&red)
        };

        let mut gen_idx = 0u32;
        let mut exp_chain: Vec<u32> = Vec::new();
        'cand: for g in 2..size {
            let mut chain = Vec::with_capacity(n1 as usize);
            let mut x = 1u32;
            loop {
                chain.push(x);
                x = raw_mul(x, g);
                if x == 1 {
                    break;
                }
                if chain.len() as u32 > n1 {
                    continue 'cand; // cannot happen in a field, defensive
                }
            }
            if chain.len() as u32 == n1 {
                gen_idx = g;
                exp_chain = chain;
                break;
            }
        }
        if gen_idx == 0 {
            return Err(FieldError::BadSubfield { got: 0, q });
        }

        let mut log = vec![0u32; size as usize];
        let mut exp = vec![0u32; 2 * n1 as usize];
        for (e, &x) in exp_chain.iter().enumerate() {
            log[x as usize] = e as u32;
            exp[e] = x;
            exp[e + n1 as usize] = x;
        }

        // Frobenius^k (x -> x^q) from the log tables.
        let mut conj = vec![0u32; size as usize];
        for i in 1..size {
            let e = (log[i as usize] as u64 * q as u64) % n1 as u64;
            conj[i as usize] = exp[e as usize];
        }

        let mut in_sub = vec![false; size as usize];
        let mut subfield = Vec::with_capacity(q as usize);
        for i in 0..size {
            if conj[i as usize] == i {
                in_sub[i as usize] = true;
                subfield.push(i);
            }
        }
        if subfield.len() != q as usize {
            return Err(FieldError::BadSubfield {
                got: subfield.len(),
                q,
            });
        }

        let fp = fingerprint(p, k, &modulus);
        Ok(Field(Arc::new(FieldCore {
            p,
            k,
            deg,
            size,
            q,
            modulus,
            fp,
            pow_p,
            digits,
            neg,
            log,
            exp,
            conj,
            in_sub,
            subfield,
            gen_idx,
        })))
    }

    // ------------------------------------------------------------------
    // Shape accessors
    // ------------------------------------------------------------------

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    /// Subfield order q = p^k.
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Full field order q² = p^(2k).
    pub fn size(&self) -> u32 {
        self.0.size
    }

    /// Degree over the prime field (2k).
    pub fn degree(&self) -> u32 {
        self.0.deg
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn has_even_order(&self) -> bool {
        self.0.p == 2
    }

    /// True when q = p^k is itself a square (k even).
    pub fn q_is_square(&self) -> bool {
        self.0.k % 2 == 0
    }

    /// True when the two fields share p, k and modulus.
    pub fn same_field(&self, other: &Field) -> bool {
        self.0.fp == other.0.fp
    }

    // ------------------------------------------------------------------
    // Element construction
    // ------------------------------------------------------------------

    #[inline]
    fn owned(&self, idx: u32) -> FieldElement {
        FieldElement {
            field: self.0.fp,
            idx,
        }
    }

    #[inline]
    fn own_check(&self, x: FieldElement) -> u32 {
        assert_eq!(
            x.field, self.0.fp,
            "element belongs to a different field than {self:?}"
        );
        x.idx
    }

    pub fn zero(&self) -> FieldElement {
        self.owned(0)
    }

    pub fn one(&self) -> FieldElement {
        self.owned(1)
    }

    /// Element with the given canonical index. Panics when out of range.
    pub fn element(&self, idx: usize) -> FieldElement {
        assert!(idx < self.0.size as usize, "element index out of range");
        self.owned(idx as u32)
    }

    /// Embedding of an integer via the prime field (n mod p).
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.0.p as i64;
        self.owned(n.rem_euclid(p) as u32)
    }

    /// Element from a little-endian coordinate list (length ≤ 2k, entries
    /// reduced mod p).
    pub fn from_coords(&self, coords: &[u32]) -> FieldElement {
        assert!(
            coords.len() <= self.0.deg as usize,
            "coordinate list longer than the field degree"
        );
        let idx = coords
            .iter()
            .enumerate()
            .map(|(j, &c)| (c % self.0.p) * self.0.pow_p[j])
            .sum();
        self.owned(idx)
    }

    /// Little-endian coordinates of x over Z_p (length 2k).
    pub fn coords(&self, x: FieldElement) -> Vec<u32> {
        let i = self.own_check(x);
        let d = self.0.deg as usize;
        self.0.digits[i as usize * d..(i as usize + 1) * d]
            .iter()
            .map(|&c| c as u32)
            .collect()
    }

    /// A fixed generator of the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        self.owned(self.0.gen_idx)
    }

    /// All elements in canonical (ascending index) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.size).map(move |i| self.owned(i))
    }

    /// The q elements of the subfield GF(q), in canonical order.
    pub fn subfield_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.0.subfield.iter().map(move |&i| self.owned(i))
    }

    // ------------------------------------------------------------------
    // Arithmetic
    // ------------------------------------------------------------------

    #[inline]
    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let a = self.own_check(x);
        let b = self.own_check(y);
        if self.0.p == 2 {
            return self.owned(a ^ b);
        }
        let d = self.0.deg as usize;
        let da = &self.0.digits[a as usize * d..a as usize * d + d];
        let db = &self.0.digits[b as usize * d..b as usize * d + d];
        let mut idx = 0u32;
        for j in 0..d {
            let mut s = da[j] as u32 + db[j] as u32;
            if s >= self.0.p {
                s -= self.0.p;
            }
            idx += s * self.0.pow_p[j];
        }
        self.owned(idx)
    }

    #[inline]
    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let a = self.own_check(x);
        self.owned(self.0.neg[a as usize])
    }

    #[inline]
    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let a = self.own_check(x);
        let b = self.own_check(y);
        if a == 0 || b == 0 {
            return self.owned(0);
        }
        let e = self.0.log[a as usize] as usize + self.0.log[b as usize] as usize;
        self.owned(self.0.exp[e])
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, x: FieldElement) -> FieldElement {
        let a = self.own_check(x);
        assert!(a != 0, "inverse of zero");
        let n1 = (self.0.size - 1) as usize;
        let e = n1 - self.0.log[a as usize] as usize;
        self.owned(self.0.exp[e])
    }

    #[inline]
    pub fn div(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.mul(x, self.inv(y))
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        let a = self.own_check(x);
        if a == 0 {
            return if e == 0 { self.one() } else { self.zero() };
        }
        let n1 = (self.0.size - 1) as u64;
        let le = (self.0.log[a as usize] as u64 * (e % n1)) % n1;
        self.owned(self.0.exp[le as usize])
    }

    /// x², convenience for the many quadratic-form evaluations.
    #[inline]
    pub fn sq(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    // ------------------------------------------------------------------
    // Frobenius, subfield, characters
    // ------------------------------------------------------------------

    /// The involutory conjugation x ↦ x^q.
    #[inline]
    pub fn conj(&self, x: FieldElement) -> FieldElement {
        let a = self.own_check(x);
        self.owned(self.0.conj[a as usize])
    }

    /// True iff x lies in the subfield GF(q) (fixed by conjugation).
    #[inline]
    pub fn in_subfield(&self, x: FieldElement) -> bool {
        let a = self.own_check(x);
        self.0.in_sub[a as usize]
    }

    /// Norm over the subfield: x · x̄ (always lands in GF(q)).
    pub fn norm(&self, x: FieldElement) -> FieldElement {
        self.mul(x, self.conj(x))
    }

    /// Relative trace over the subfield: x + x̄ (always lands in GF(q)).
    pub fn rel_trace(&self, x: FieldElement) -> FieldElement {
        self.add(x, self.conj(x))
    }

    /// Quadratic character in GF(q²): true iff x is a square. Zero counts
    /// as a square; in characteristic 2 everything is a square.
    pub fn is_square(&self, x: FieldElement) -> bool {
        let a = self.own_check(x);
        if a == 0 || self.0.p == 2 {
            return true;
        }
        self.0.log[a as usize] % 2 == 0
    }

    /// Quadratic character within GF(q). Panics when x is outside GF(q).
    pub fn is_square_in_subfield(&self, x: FieldElement) -> bool {
        assert!(
            self.in_subfield(x),
            "subfield square test on an element outside GF(q)"
        );
        if x.is_zero() || self.0.p == 2 {
            return true;
        }
        self.pow(x, (self.0.q as u64 - 1) / 2) == self.one()
    }

    /// Cube test in GF(q²)*. Panics on zero.
    pub fn is_cube(&self, x: FieldElement) -> bool {
        let a = self.own_check(x);
        assert!(a != 0, "cube test on zero");
        let n1 = self.0.size - 1;
        if n1 % 3 != 0 {
            return true;
        }
        self.0.log[a as usize] % 3 == 0
    }

    /// Absolute trace GF(q²) → Z_p: sum of all Frobenius conjugates,
    /// returned as an integer in 0..p.
    pub fn absolute_trace(&self, x: FieldElement) -> u32 {
        self.own_check(x);
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..self.0.deg {
            acc = self.add(acc, y);
            y = self.pow(y, self.0.p as u64);
        }
        debug_assert!(acc.idx < self.0.p);
        acc.idx
    }

    /// Absolute trace GF(q) → Z_p of a subfield element. Panics when x is
    /// outside GF(q).
    pub fn subfield_absolute_trace(&self, x: FieldElement) -> u32 {
        assert!(
            self.in_subfield(x),
            "subfield trace on an element outside GF(q)"
        );
        let mut acc = self.zero();
        let mut y = x;
        for _ in 0..self.0.k {
            acc = self.add(acc, y);
            y = self.pow(y, self.0.p as u64);
        }
        debug_assert!(acc.idx < self.0.p);
        acc.idx
    }

    // ------------------------------------------------------------------
    // Literals
    // ------------------------------------------------------------------

    /// Render an element as a little-endian coordinate list, e.g. `[1,2]`.
    pub fn show(&self, x: FieldElement) -> String {
        let co = self.coords(x);
        let items: Vec<String> = co.iter().map(|c| c.to_string()).collect();
        format!("[{}]", items.join(","))
    }

    /// Parse `[c0,c1,…]` (entries reduced mod p), a bare index n, or either
    /// form with a leading `-`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let t = s.trim();
        let bad = || FieldError::BadElementLiteral(s.to_string());
        let (negate, t) = match t.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, t),
        };
        let el = if let Some(inner) = t.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(bad)?;
            let mut coords = Vec::new();
            if !inner.trim().is_empty() {
                for piece in inner.split(',') {
                    let c: i64 = piece.trim().parse().map_err(|_| bad())?;
                    coords.push(c.rem_euclid(self.0.p as i64) as u32);
                }
            }
            if coords.len() > self.0.deg as usize {
                return Err(bad());
            }
            self.from_coords(&coords)
        } else {
            let n: u64 = t.parse().map_err(|_| bad())?;
            if n >= self.0.size as u64 {
                return Err(bad());
            }
            self.element(n as usize)
        };
        Ok(if negate { self.neg(el) } else { el })
    }

    // ------------------------------------------------------------------
    // Quartic extension (GF(q⁴)) with embedding
    // ------------------------------------------------------------------

    /// Build GF(q⁴) = GF(p^(4k)) with its canonical modulus, together with
    /// the field embedding GF(q²) ↪ GF(q⁴) that sends the basis element t to
    /// a root of this field's modulus.
    pub fn quartic_extension(&self) -> Result<FieldEmbedding, FieldError> {
        let target = Field::new(self.0.p, 2 * self.0.k)?;
        // Find a root of our modulus inside the target.
        let coeffs: Vec<FieldElement> = self
            .0
            .modulus
            .iter()
            .map(|&c| target.from_int(c as i64))
            .collect();
        let mut root = None;
        for cand in target.elements() {
            // Horner evaluation of the base modulus at cand.
            let mut acc = target.zero();
            for &c in coeffs.iter().rev() {
                acc = target.add(target.mul(acc, cand), c);
            }
            if acc.is_zero() {
                root = Some(cand);
                break;
            }
        }
        let root = root.ok_or(FieldError::NoEmbedding)?;
        let mut powers = Vec::with_capacity(self.0.deg as usize);
        let mut acc = target.one();
        for _ in 0..self.0.deg {
            powers.push(acc);
            acc = target.mul(acc, root);
        }
        Ok(FieldEmbedding {
            base: self.clone(),
            target,
            powers,
        })
    }
}

/// An embedding GF(q²) ↪ GF(q⁴) (base modulus root substitution).
pub struct FieldEmbedding {
    base: Field,
    pub target: Field,
    powers: Vec<FieldElement>,
}

impl FieldEmbedding {
    pub fn map(&self, x: FieldElement) -> FieldElement {
        let co = self.base.coords(x);
        let mut acc = self.target.zero();
        for (j, &c) in co.iter().enumerate() {
            if c != 0 {
                let scalar = self.target.from_int(c as i64);
                acc = self
                    .target
                    .add(acc, self.target.mul(scalar, self.powers[j]));
            }
        }
        acc
    }
}

// ============================================================================
// Tests
// ============================================================================
