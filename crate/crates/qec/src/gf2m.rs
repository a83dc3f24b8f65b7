//! Arithmetic in GF(2^m), primitive n-th roots of unity, and minimal
//! polynomials of field elements over GF(2).
//!
//! The field is fixed by two deterministic choices: the modulus is the
//! lexicographically least irreducible polynomial of degree m (comparing the
//! bit encodings as integers), and the generator is the least primitive
//! element in the same order. Every downstream object is then reproducible
//! bit for bit.

use crate::error::{Error, Result};
use std::fmt;

/// Degree of a nonzero bit-encoded polynomial (low bit = constant term).
#[inline]
fn small_deg(p: u64) -> usize {
    debug_assert_ne!(p, 0);
    63 - p.leading_zeros() as usize
}

/// Carry-less product of two bit-encoded polynomials.
#[inline]
fn small_mul(a: u64, b: u64) -> u64 {
    let mut acc = 0u64;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

/// Remainder of a bit-encoded polynomial modulo another.
#[inline]
fn small_rem(mut a: u64, m: u64) -> u64 {
    let md = small_deg(m);
    while a != 0 && small_deg(a) >= md {
        a ^= m << (small_deg(a) - md);
    }
    a
}

fn is_irreducible(p: u64) -> bool {
    let d = small_deg(p);
    if d == 0 {
        return false;
    }
    // trial division by every polynomial of degree 1..=d/2
    for q in 2u64..(1u64 << (d / 2 + 1)) {
        if small_deg(q) >= 1 && small_rem(p, q) == 0 {
            return false;
        }
    }
    true
}

/// A concrete GF(2^m): extension degree, irreducible modulus, and a
/// primitive element. Cheap to copy; elements carry their context.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FieldContext {
    m: usize,
    modulus: u64,
    generator: u64,
}

/// An element of GF(2^m), encoded as a polynomial of degree < m.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldContext,
    value: u64,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:#b} mod {:#b})", self.value, self.field.modulus)
    }
}

impl FieldContext {
    /// The field GF(2^m) with the canonical modulus and generator.
    pub fn new(m: usize) -> Result<FieldContext> {
        if m == 0 || m > 16 {
            return Err(Error::UnsupportedDegree(m));
        }
        let modulus = ((1u64 << m)..(1u64 << (m + 1)))
            .find(|&p| is_irreducible(p))
            .expect("an irreducible polynomial exists in every degree");
        Self::with_modulus(m, modulus)
    }

    /// The field GF(2^m) with an explicitly chosen irreducible modulus.
    /// Different moduli give isomorphic fields; code parameters built from
    /// them agree even though coordinates permute.
    pub fn with_modulus(m: usize, modulus: u64) -> Result<FieldContext> {
        if m == 0 || m > 16 {
            return Err(Error::UnsupportedDegree(m));
        }
        assert_eq!(small_deg(modulus), m, "modulus must have degree m");
        assert!(is_irreducible(modulus), "modulus must be irreducible");
        let mut ctx = FieldContext { m, modulus, generator: 1 };
        let group_order = (1u64 << m) - 1;
        let generator = (1..=group_order)
            .find(|&g| ctx.order_of(g) == group_order)
            .expect("a finite field's multiplicative group is cyclic");
        ctx.generator = generator;
        Ok(ctx)
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Order of the multiplicative group, 2^m - 1.
    pub fn group_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, value: 1 }
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement { field: *self, value: self.generator }
    }

    /// Element from its bit-encoded polynomial value (must have degree < m).
    pub fn element(&self, value: u64) -> FieldElement {
        assert!(value < (1u64 << self.m), "value {value} outside field");
        FieldElement { field: *self, value }
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        small_rem(small_mul(a, b), self.modulus)
    }

    fn order_of(&self, value: u64) -> u64 {
        debug_assert_ne!(value, 0);
        let mut acc = value;
        let mut k = 1;
        while acc != 1 {
            acc = self.mul_raw(acc, value);
            k += 1;
        }
        k
    }
}

impl FieldElement {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(FieldElement {
            field: self.field,
            value: self.value ^ other.value,
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(FieldElement {
            field: self.field,
            value: self.field.mul_raw(self.value, other.value),
        })
    }

    /// Power by square-and-multiply.
    pub fn pow(&self, e: u64) -> FieldElement {
        let mut result = self.field.one();
        let mut base = *self;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same context");
            }
            base = base.mul(&base).expect("same context");
            e >>= 1;
        }
        result
    }

    /// Multiplicative inverse of a nonzero element via Fermat:
    /// a^(2^m - 2) since a^(2^m - 1) = 1.
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DomainError {
                value: 0.0,
                domain: "inverse of zero field element",
            });
        }
        Ok(self.pow(self.field.group_order() - 1))
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        assert!(!self.is_zero());
        self.field.order_of(self.value)
    }
}

/// Multiplicative order of 2 modulo odd n: the least m with 2^m = 1 (mod n).
pub fn ord2_mod(n: usize) -> Result<usize> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    if n == 1 {
        return Ok(1);
    }
    let mut pow = 2usize % n;
    let mut m = 1usize;
    while pow != 1 {
        pow = pow * 2 % n;
        m += 1;
    }
    Ok(m)
}

/// A primitive n-th root of unity together with its field GF(2^m), where
/// m is the multiplicative order of 2 mod n.
pub fn nth_root_of_unity(n: usize) -> Result<(FieldContext, FieldElement)> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let m = ord2_mod(n)?;
    let field = FieldContext::new(m)?;
    let alpha = field.generator().pow(field.group_order() / n as u64);
    debug_assert_eq!(alpha.order(), n as u64);
    Ok((field, alpha))
}

/// As `nth_root_of_unity` but inside the given field; used to check that the
/// choice of modulus does not affect code parameters.
pub fn nth_root_in(field: &FieldContext, n: usize) -> Result<FieldElement> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    if !field.group_order().is_multiple_of(n as u64) {
        return Err(Error::BadCodeData(format!(
            "no primitive {n}th root of unity in GF(2^{})",
            field.degree()
        )));
    }
    Ok(field.generator().pow(field.group_order() / n as u64))
}

/// The minimal polynomial of alpha^s over GF(2): the product of (x - alpha^i)
/// over the cyclotomic coset of s mod n. Expanding over the extension field
/// must leave every coefficient in the base field.
pub fn minimal_polynomial(alpha: &FieldElement, s: usize, n: usize) -> Result<Poly2> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    debug_assert_eq!(alpha.order(), n as u64);
    // doubling orbit of s mod n
    let mut exponents = Vec::new();
    let mut e = s % n;
    loop {
        exponents.push(e);
        e = e * 2 % n;
        if e == s % n {
            break;
        }
    }
    // product of (x + alpha^i), coefficients tracked in the extension field
    let field = alpha.field();
    let mut coeffs: Vec<FieldElement> = vec![field.one()];
    for &i in &exponents {
        let root = alpha.pow(i as u64);
        let mut next = vec![field.zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = next[j + 1].add(c)?;
            next[j] = next[j].add(&c.mul(&root)?)?;
        }
        coeffs = next;
    }
    let mut poly = Poly2::zero();
    for (j, c) in coeffs.iter().enumerate() {
        match c.value() {
            0 => {}
            1 => poly.set_coeff(j, true),
            v => {
                return Err(Error::CoefficientNotBinary(format!(
                    "coefficient of x^{j} is {v:#b}"
                )))
            }
        }
    }
    debug_assert_eq!(poly.degree(), Some(exponents.len()));
    Ok(poly)
}

/// A polynomial over GF(2) of arbitrary degree, bit-packed low-order first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Poly2 {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Poly2 {
        Poly2 { words: vec![1] }
    }

    /// x^d
    pub fn monomial(d: usize) -> Poly2 {
        let mut p = Poly2::zero();
        p.set_coeff(d, true);
        p
    }

    /// x^n + 1, the polynomial every length-n cyclic code divides into.
    pub fn x_pow_plus_one(n: usize) -> Poly2 {
        let mut p = Poly2::monomial(n);
        p.set_coeff(0, true);
        p
    }

    /// From a small bit encoding, e.g. 0b1011 = x^3 + x + 1.
    pub fn from_bits(bits: u64) -> Poly2 {
        let mut p = Poly2 { words: vec![bits] };
        p.normalize();
        p
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.words.last()?;
        Some((self.words.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        let w = i / 64;
        if w >= self.words.len() {
            if !value {
                return;
            }
            self.words.resize(w + 1, 0);
        }
        if value {
            self.words[w] |= 1u64 << (i % 64);
        } else {
            self.words[w] &= !(1u64 << (i % 64));
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &Poly2) -> Poly2 {
        let mut words = vec![0u64; self.words.len().max(other.words.len())];
        for (i, w) in words.iter_mut().enumerate() {
            *w = self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0);
        }
        let mut p = Poly2 { words };
        p.normalize();
        p
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        if self.is_zero() || other.is_zero() {
            return Poly2::zero();
        }
        let deg = self.degree().unwrap() + other.degree().unwrap();
        let mut words = vec![0u64; deg / 64 + 1];
        for (i, w) in self.words.iter().enumerate() {
            let mut bits = *w;
            while bits != 0 {
                let shift = i * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let (word_shift, bit_shift) = (shift / 64, shift % 64);
                for (j, &ow) in other.words.iter().enumerate() {
                    words[j + word_shift] ^= ow << bit_shift;
                    if bit_shift != 0 && j + word_shift + 1 < words.len() {
                        words[j + word_shift + 1] ^= ow >> (64 - bit_shift);
                    }
                }
            }
        }
        let mut p = Poly2 { words };
        p.normalize();
        p
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divmod(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.set_coeff(shift, true);
            rem = rem.add(&divisor.mul(&Poly2::monomial(shift)));
        }
        (quot, rem)
    }

    pub fn rem(&self, divisor: &Poly2) -> Poly2 {
        self.divmod(divisor).1
    }

    pub fn divides(&self, other: &Poly2) -> bool {
        other.rem(self).is_zero()
    }

    /// Coefficients as booleans, constant term first, length `len`.
    pub fn coeffs(&self, len: usize) -> Vec<bool> {
        (0..len).map(|i| self.coeff(i)).collect()
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..=self.degree().unwrap()).rev() {
            if !self.coeff(d) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_fields() {
        let f1 = FieldContext::new(1).unwrap();
        assert_eq!(f1.modulus(), 0b10); // x itself
        assert_eq!(f1.generator().value(), 1);

        let f3 = FieldContext::new(3).unwrap();
        assert_eq!(f3.modulus(), 0b1011); // x^3 + x + 1
        assert_eq!(f3.generator().order(), 7);

        let f4 = FieldContext::new(4).unwrap();
        assert_eq!(f4.generator().order(), 15);

        assert_eq!(FieldContext::new(0), Err(Error::UnsupportedDegree(0)));
        assert_eq!(FieldContext::new(17), Err(Error::UnsupportedDegree(17)));
    }

    #[test]
    fn gf8_multiplication() {
        // in GF(2^3) mod x^3+x+1: x * x^2 = x + 1
        let f = FieldContext::new(3).unwrap();
        let x = f.element(0b010);
        let x2 = f.element(0b100);
        assert_eq!(x.mul(&x2).unwrap().value(), 0b011);
    }

    #[test]
    fn unit_and_inverse_laws() {
        let f = FieldContext::new(5).unwrap();
        let one = f.one();
        for v in 1..32 {
            let a = f.element(v);
            assert_eq!(a.mul(&one).unwrap(), a);
            // a * a^(2^m - 2) = 1
            let inv = a.pow(f.group_order() - 1);
            assert_eq!(a.mul(&inv).unwrap(), one);
            assert_eq!(a.inverse().unwrap().mul(&a).unwrap(), one);
            // Fermat: a^(2^m - 1) = 1
            assert_eq!(a.pow(f.group_order()), one);
        }
        assert!(f.zero().inverse().is_err());
    }

    #[test]
    fn context_mismatch_detected() {
        let f3 = FieldContext::new(3).unwrap();
        let f4 = FieldContext::new(4).unwrap();
        assert_eq!(
            f3.one().mul(&f4.one()),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn frobenius_is_additive() {
        let f = FieldContext::new(6).unwrap();
        for a in 0..64u64 {
            for b in [0u64, 1, 5, 17, 40, 63] {
                let ea = f.element(a);
                let eb = f.element(b);
                let lhs = ea.add(&eb).unwrap().pow(2);
                let rhs = ea.pow(2).add(&eb.pow(2)).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(ea.pow(2), ea.mul(&ea).unwrap());
            }
        }
    }

    #[test]
    fn roots_of_unity() {
        let (f, a) = nth_root_of_unity(7).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(a.order(), 7);

        let (f, a) = nth_root_of_unity(15).unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(a.order(), 15);

        let (f, a) = nth_root_of_unity(21).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(a.order(), 21);

        assert_eq!(nth_root_of_unity(8), Err(Error::EvenLength(8)));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let (_, a7) = nth_root_of_unity(7).unwrap();
        // s = 0: the coset {0} gives the factor x + 1
        assert_eq!(minimal_polynomial(&a7, 0, 7).unwrap(), Poly2::from_bits(0b11));
        // s = 1: degree 3 = |C_1|, and one of the two irreducible cubics
        let m1 = minimal_polynomial(&a7, 1, 7).unwrap();
        assert_eq!(m1.degree(), Some(3));
        assert!(m1 == Poly2::from_bits(0b1011) || m1 == Poly2::from_bits(0b1101));
        // with the canonical generator alpha = x, the conjugates of x are the
        // roots of the modulus itself
        assert_eq!(m1, Poly2::from_bits(0b1011));

        let (_, a15) = nth_root_of_unity(15).unwrap();
        let m5 = minimal_polynomial(&a15, 5, 15).unwrap();
        assert_eq!(m5.degree(), Some(2)); // C_5 = {5, 10}
        assert_eq!(m5, Poly2::from_bits(0b111)); // x^2 + x + 1, the only irreducible quadratic
    }

    #[test]
    fn minimal_polynomials_divide_xn_plus_one() {
        for n in [7usize, 15, 21, 45] {
            let (_, alpha) = nth_root_of_unity(n).unwrap();
            let xn1 = Poly2::x_pow_plus_one(n);
            let mut product = Poly2::one();
            let mut seen = vec![false; n];
            for s in 0..n {
                if seen[s] {
                    continue;
                }
                let mut e = s;
                loop {
                    seen[e] = true;
                    e = e * 2 % n;
                    if e == s {
                        break;
                    }
                }
                let m = minimal_polynomial(&alpha, s, n).unwrap();
                assert!(m.divides(&xn1), "M^({s}) must divide x^{n} + 1");
                // coset invariance: M^(s) = M^(2s mod n)
                assert_eq!(m, minimal_polynomial(&alpha, 2 * s % n, n).unwrap());
                product = product.mul(&m);
            }
            // the distinct minimal polynomials factor x^n + 1 completely
            assert_eq!(product, xn1);
        }
    }

    #[test]
    fn poly_divmod_round_trip() {
        let a = Poly2::from_bits(0b1100101);
        let b = Poly2::from_bits(0b1011);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        if let Some(rd) = r.degree() {
            assert!(rd < b.degree().unwrap());
        }
    }
}
