//! Arithmetic in GF(p^d).
//!
//! Elements are encoded as integers: the polynomial `c_0 + c_1 x + ... +
//! c_{d-1} x^{d-1}` (reduced modulo the field modulus) has code
//! `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`. The modulus is the monic
//! irreducible polynomial of degree `d` whose coefficient tuple
//! `(c_{d-1}, ..., c_0)` is lexicographically smallest, and the distinguished
//! primitive element is the smallest code of multiplicative order `q - 1`.
//! Both choices are deterministic, so codes are reproducible.
//!
//! Multiplication, inversion and the Frobenius map go through discrete
//! log/antilog tables; addition uses Zech logarithms.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order. Tables are `O(q)` in size.
pub const MAX_FIELD_ORDER: u64 = 1 << 24;

const NO_ZECH: u32 = u32::MAX;

/// An element of GF(q), identified by its integer code in `[0, q)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw code without range checking. Use [`Field::element`] for
    /// checked construction.
    #[inline]
    pub const fn from_code(code: u32) -> Self {
        FieldElement(code)
    }

    #[inline]
    pub const fn code(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field GF(p^d) with its lookup tables. Immutable once built.
#[derive(Clone)]
pub struct Field {
    p: u32,
    d: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: FieldElement,
    // exp has length 2(q-1) so that exp[i + j] needs no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    neg: Vec<u32>,
    // p^e mod (q-1) for e in 0..d
    frob_mult: Vec<u64>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("d", &self.d)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator.0)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.d == other.d
    }
}

impl Eq for Field {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut f = 3;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// Returns `(p, d)` with `q = p^d` when `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q is prime
        return Some((q as u32, 1));
    }
    let mut rest = q;
    let mut d = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p as u32, d))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            out.push(f);
            while n.is_multiple_of(f) {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// Dense polynomials over F_p, coefficient vectors low degree first.
mod poly {
    pub fn trim(a: &mut Vec<u32>) {
        while a.last() == Some(&0) {
            a.pop();
        }
    }

    /// Remainder of `a` modulo the monic polynomial `m`.
    pub fn rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dm;
            for (i, &c) in m.iter().enumerate() {
                let sub = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        rem(&prod, m, p)
    }

    pub fn digits(code: u64, p: u32, len: usize) -> Vec<u32> {
        let mut c = code;
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push((c % p as u64) as u32);
            c /= p as u64;
        }
        out
    }

    pub fn code(digits: &[u32], p: u32) -> u64 {
        digits.iter().rev().fold(0u64, |acc, &c| acc * p as u64 + c as u64)
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        if deg <= 1 {
            return deg == 1;
        }
        for dd in 1..=deg / 2 {
            let count = (p as u64).pow(dd as u32);
            for low in 0..count {
                let mut divisor = digits(low, p, dd);
                divisor.push(1);
                if rem(f, &divisor, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

impl Field {
    /// Builds GF(p^d).
    pub fn new(p: u32, d: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::domain(format!("characteristic {p} is not prime")));
        }
        if d == 0 {
            return Err(Error::domain("extension degree must be at least 1"));
        }
        let q = (p as u64)
            .checked_pow(d)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| {
                Error::domain(format!(
                    "field order {p}^{d} exceeds the supported maximum {MAX_FIELD_ORDER}"
                ))
            })?;
        let modulus = Self::least_irreducible(p, d);
        let du = d as usize;
        let to_poly = |code: u64| {
            let mut v = poly::digits(code, p, du);
            poly::trim(&mut v);
            v
        };
        let order = q - 1;
        let factors = prime_factors(order);
        let pow = |base: &[u32], mut e: u64| {
            let mut acc = vec![1u32];
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    acc = poly::mul_mod(&acc, &b, &modulus, p);
                }
                b = poly::mul_mod(&b, &b, &modulus, p);
                e >>= 1;
            }
            acc
        };
        let generator = (1..q)
            .find(|&c| {
                let a = to_poly(c);
                factors.iter().all(|&r| pow(&a, order / r) != [1])
                    && (order != 1 || a == [1])
            })
            .expect("a finite field has a primitive element");

        let qu = q as usize;
        let gpoly = to_poly(generator);
        let mut exp = vec![0u32; 2 * (qu - 1)];
        let mut log = vec![0u32; qu];
        let mut cur = vec![1u32];
        for i in 0..qu - 1 {
            let c = poly::code(&cur, p) as u32;
            exp[i] = c;
            exp[i + qu - 1] = c;
            log[c as usize] = i as u32;
            cur = poly::mul_mod(&cur, &gpoly, &modulus, p);
        }

        let neg: Vec<u32> = (0..q)
            .map(|c| {
                let ds: Vec<u32> = poly::digits(c, p, du).into_iter().map(|x| (p - x) % p).collect();
                poly::code(&ds, p) as u32
            })
            .collect();
        let add_digits = |a: u64, b: u64| {
            let da = poly::digits(a, p, du);
            let db = poly::digits(b, p, du);
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            poly::code(&s, p) as u32
        };
        let zech: Vec<u32> = (0..qu - 1)
            .map(|k| {
                let s = add_digits(1, exp[k] as u64);
                if s == 0 {
                    NO_ZECH
                } else {
                    log[s as usize]
                }
            })
            .collect();
        let frob_mult = (0..d)
            .map(|e| (p as u64).pow(e) % order.max(1))
            .collect();

        Ok(Field {
            p,
            d,
            q: q as u32,
            modulus,
            generator: FieldElement(generator as u32),
            exp,
            log,
            zech,
            neg,
            frob_mult,
        })
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, d) =
            prime_power(q).ok_or_else(|| Error::domain(format!("{q} is not a prime power")))?;
        Self::new(p, d)
    }

    fn least_irreducible(p: u32, d: u32) -> Vec<u32> {
        let count = (p as u64).pow(d);
        (0..count)
            .map(|low| {
                let mut f = poly::digits(low, p, d as usize);
                f.push(1);
                f
            })
            .find(|f| poly::is_irreducible(f, p))
            .expect("irreducible polynomials exist in every degree")
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn d(&self) -> u32 {
        self.d
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, coefficients low degree first (length `d + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The distinguished primitive element.
    #[inline]
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code < self.q {
            Ok(FieldElement(code))
        } else {
            Err(Error::domain(format!("code {code} out of range for GF({})", self.q)))
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 {
            return b;
        }
        if b.0 == 0 {
            return a;
        }
        let n = self.q - 1;
        let i = self.log[a.0 as usize];
        let j = self.log[b.0 as usize];
        let k = if j >= i { j - i } else { j + n - i };
        match self.zech[k as usize] {
            NO_ZECH => FieldElement(0),
            z => FieldElement(self.exp[(i + z) as usize]),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        FieldElement(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    /// Multiplicative inverse. Fails on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::domain("zero has no multiplicative inverse"));
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: FieldElement) -> FieldElement {
        debug_assert!(a.0 != 0);
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        FieldElement(self.exp[((n - l) % n.max(1)) as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`, with `0^0 = 1`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l * (e % n)) % n) as usize])
    }

    /// `g^i` for the distinguished primitive element `g`.
    #[inline]
    pub fn exp(&self, i: u64) -> FieldElement {
        FieldElement(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    /// Discrete logarithm base the primitive element; `None` for zero.
    #[inline]
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a.0 != 0).then(|| self.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Result<u64> {
        let l = self.log(a).ok_or_else(|| Error::domain("zero has no multiplicative order"))?;
        let n = (self.q - 1) as u64;
        Ok(n / gcd(n, l as u64))
    }

    /// The field automorphism `a ↦ a^(p^e)`; `e` is taken modulo `d`.
    #[inline]
    pub fn frobenius(&self, a: FieldElement, e: u32) -> FieldElement {
        if a.0 == 0 || e.is_multiple_of(self.d) {
            return a;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l * self.frob_mult[(e % self.d) as usize]) % n) as usize])
    }

    /// Whether a nonzero element is a square. Every nonzero element is a
    /// square in characteristic 2.
    pub fn is_square(&self, a: FieldElement) -> Result<bool> {
        if a.0 == 0 {
            return Err(Error::domain("square class of zero is undefined"));
        }
        if self.p == 2 {
            return Ok(true);
        }
        Ok(self.pow(a, ((self.q - 1) / 2) as u64) == FieldElement::ONE)
    }

    /// `g^((q-1)/6)`, a root of `x^2 - x + 1`. Requires `6 | q - 1`.
    pub fn primitive_sixth_root(&self) -> Result<FieldElement> {
        let n = self.q - 1;
        if !n.is_multiple_of(6) {
            return Err(Error::domain(format!(
                "GF({}) has no primitive sixth root of unity: 6 does not divide {n}",
                self.q
            )));
        }
        Ok(self.exp((n / 6) as u64))
    }

    /// Smallest nonzero code that is not a square. Requires odd `q`.
    pub fn smallest_nonsquare(&self) -> Result<FieldElement> {
        if self.p == 2 {
            return Err(Error::domain(format!(
                "every nonzero element of GF({}) is a square",
                self.q
            )));
        }
        self.elements()
            .skip(1)
            .find(|&a| !self.is_square(a).unwrap())
            .ok_or_else(|| Error::domain("no non-square found"))
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(c: u32) -> FieldElement {
        FieldElement::from_code(c)
    }

    // Schoolbook reduction of x*x modulo x^2 + 1 over F_3, independent of the tables.
    #[test]
    fn gf9_multiplication_matches_polynomial_reduction() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.mul(fe(3), fe(3)), fe(2));
    }

    #[test]
    fn prime_field_constructions() {
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.generator(), fe(2));
        let f7 = Field::new(7, 1).unwrap();
        assert_eq!(f7.generator(), fe(3));
        assert_eq!(f7.inv(fe(3)).unwrap(), fe(5));
    }

    #[test]
    fn least_irreducible_quadratic_over_f3_by_enumeration() {
        // brute force: a monic quadratic is irreducible iff it has no root
        let mut irreducible = Vec::new();
        for c1 in 0..3u32 {
            for c0 in 0..3u32 {
                let has_root = (0..3u32).any(|x| (x * x + c1 * x + c0) % 3 == 0);
                if !has_root {
                    irreducible.push((c1, c0));
                }
            }
        }
        irreducible.sort();
        let (c1, c0) = irreducible[0];
        assert_eq!(Field::new(3, 2).unwrap().modulus(), &[c0, c1, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(matches!(Field::new(4, 1), Err(Error::Domain(_))));
        assert!(matches!(Field::new(3, 0), Err(Error::Domain(_))));
        assert!(matches!(Field::new(2, 40), Err(Error::Domain(_))));
        assert!(Field::with_order(12).is_err());
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        let f = Field::new(5, 1).unwrap();
        assert!(f.inv(FieldElement::ZERO).is_err());
        assert!(f.is_square(FieldElement::ZERO).is_err());
    }

    #[test]
    fn frobenius_on_gf9() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.frobenius(fe(3), 1), fe(6));
        assert_eq!(f.frobenius(fe(3), 1), f.pow(fe(3), 3));
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
            assert_eq!(f.frobenius(f.frobenius(a, 1), 1), a);
        }
    }

    #[test]
    fn squares_and_minus_one() {
        let f9 = Field::new(3, 2).unwrap();
        assert!(f9.is_square(fe(2)).unwrap());
        let f7 = Field::new(7, 1).unwrap();
        assert!(!f7.is_square(fe(6)).unwrap());
        for q in [5u64, 7, 9, 13, 25, 27, 81] {
            let f = Field::with_order(q).unwrap();
            assert!(f.is_square(FieldElement::ONE).unwrap());
            let minus_one = f.neg(FieldElement::ONE);
            assert_eq!(f.is_square(minus_one).unwrap(), q % 4 == 1, "q = {q}");
            let squares = f.elements().skip(1).filter(|&a| f.is_square(a).unwrap()).count();
            assert_eq!(squares as u64, (q - 1) / 2);
        }
        let f8 = Field::new(2, 3).unwrap();
        assert!(f8.elements().skip(1).all(|a| f8.is_square(a).unwrap()));
        assert!(f8.smallest_nonsquare().is_err());
    }

    #[test]
    fn sixth_roots() {
        let f7 = Field::new(7, 1).unwrap();
        // brute force over F_7: elements of order exactly 6
        let brute: Vec<u32> = (1..7u32)
            .filter(|&a| (1..6).all(|k| a.pow(k) % 7 != 1))
            .collect();
        let eps = f7.primitive_sixth_root().unwrap();
        assert!(brute.contains(&eps.code()));
        assert_eq!(eps, fe(3));

        let f13 = Field::new(13, 1).unwrap();
        let eps = f13.primitive_sixth_root().unwrap();
        assert_eq!(eps, f13.pow(f13.generator(), 2));
        assert_eq!(f13.pow(eps, 6), FieldElement::ONE);
        assert_ne!(f13.pow(eps, 3), FieldElement::ONE);
        assert_ne!(f13.pow(eps, 2), FieldElement::ONE);
        // x^2 - x + 1 = 0
        let val = f13.add(f13.sub(f13.mul(eps, eps), eps), FieldElement::ONE);
        assert_eq!(val, FieldElement::ZERO);

        assert!(Field::new(3, 2).unwrap().primitive_sixth_root().is_err());
    }

    #[test]
    fn smallest_nonsquares() {
        let squares = |p: u32| -> Vec<u32> { (1..p).map(|x| x * x % p).collect() };
        for p in [7u32, 13] {
            let sq = squares(p);
            let expected = (1..p).find(|a| !sq.contains(a)).unwrap();
            let f = Field::new(p, 1).unwrap();
            assert_eq!(f.smallest_nonsquare().unwrap().code(), expected);
        }
        assert_eq!(Field::new(7, 1).unwrap().smallest_nonsquare().unwrap(), fe(3));
        assert_eq!(Field::new(13, 1).unwrap().smallest_nonsquare().unwrap(), fe(2));
        let f9 = Field::new(3, 2).unwrap();
        let expected = (1..9u32).find(|&a| f9.pow(fe(a), 4) != FieldElement::ONE).unwrap();
        assert_eq!(f9.smallest_nonsquare().unwrap().code(), expected);
    }

    #[test]
    fn generator_has_full_order() {
        for q in [2u64, 3, 4, 8, 9, 16, 25, 27, 49, 64, 81, 125, 243, 729] {
            let f = Field::with_order(q).unwrap();
            let g = f.generator();
            let mut x = FieldElement::ONE;
            for k in 1..q - 1 {
                x = f.mul(x, g);
                assert_ne!(x, FieldElement::ONE, "q = {q}, k = {k}");
            }
            assert_eq!(f.mul(x, g), FieldElement::ONE);
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(81), Some((3, 4)));
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(36), None);
        assert_eq!(prime_power(343), Some((7, 3)));
    }
}
