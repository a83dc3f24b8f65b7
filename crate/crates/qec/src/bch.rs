//! Cyclotomic cosets, BCH defining sets, generator polynomials, the
//! dual-containment criterion for cyclic codes, and the length scans used to
//! pick good non-primitive lengths.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::gf2m::{self, Poly2};
use crate::linear::LinearCode;
use std::collections::BTreeSet;

/// The doubling orbit of s mod n: {s, 2s, 4s, ...}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    n: usize,
    representative: usize,
    elements: Vec<usize>,
}

impl CyclotomicCoset {
    pub fn modulus(&self) -> usize {
        self.n
    }

    /// Smallest element of the orbit.
    pub fn representative(&self) -> usize {
        self.representative
    }

    /// Sorted orbit elements.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, value: usize) -> bool {
        self.elements.binary_search(&(value % self.n)).is_ok()
    }
}

/// Cyclotomic coset of s mod n over GF(2). n must be odd.
pub fn coset(n: usize, s: usize) -> Result<CyclotomicCoset> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let s = s % n;
    let mut elements = Vec::new();
    let mut e = s;
    loop {
        elements.push(e);
        e = e * 2 % n;
        if e == s {
            break;
        }
    }
    elements.sort_unstable();
    Ok(CyclotomicCoset {
        n,
        representative: elements[0],
        elements,
    })
}

/// All cosets mod n, one per orbit, ordered by representative. They
/// partition 0..n.
pub fn all_cosets(n: usize) -> Result<Vec<CyclotomicCoset>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let c = coset(n, s)?;
        for &e in c.elements() {
            seen[e] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// A BCH code description: length, starting exponent, designed distance,
/// and the defining set they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BchSpec {
    n: usize,
    b: usize,
    delta: usize,
    defining_set: Vec<usize>,
    k: usize,
}

impl BchSpec {
    pub fn length(&self) -> usize {
        self.n
    }

    pub fn start(&self) -> usize {
        self.b
    }

    pub fn designed_distance(&self) -> usize {
        self.delta
    }

    /// Sorted union of the cyclotomic cosets C_b ... C_{b+delta-2}.
    pub fn defining_set(&self) -> &[usize] {
        &self.defining_set
    }

    /// Code dimension n - |defining set|.
    pub fn dimension(&self) -> usize {
        self.k
    }

    /// Dual-containment criterion for cyclic codes: the defining set must
    /// not meet its own mirror, i.e. (n - i) mod n stays outside it for
    /// every member i.
    pub fn is_dual_containing(&self) -> bool {
        let set: BTreeSet<usize> = self.defining_set.iter().copied().collect();
        self.defining_set
            .iter()
            .all(|&i| !set.contains(&((self.n - i) % self.n)))
    }
}

/// Defining set of the BCH code of length n (odd), start b, designed
/// distance delta >= 2: the union of the cosets of b ..= b + delta - 2.
pub fn defining_set(n: usize, b: usize, delta: usize) -> Result<BchSpec> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    if delta < 2 {
        return Err(Error::BadCodeData(format!(
            "designed distance must be at least 2, got {delta}"
        )));
    }
    let mut union = BTreeSet::new();
    for s in b..=b + delta - 2 {
        for &e in coset(n, s % n)?.elements() {
            union.insert(e);
        }
    }
    let defining_set: Vec<usize> = union.into_iter().collect();
    let k = n - defining_set.len();
    Ok(BchSpec { n, b, delta, defining_set, k })
}

/// Generator polynomial: the product of the distinct minimal polynomials
/// M^(s) over the cosets of the defining set (their l.c.m., since distinct
/// cosets give coprime factors).
pub fn generator_polynomial(spec: &BchSpec) -> Result<Poly2> {
    let (_, alpha) = gf2m::nth_root_of_unity(spec.n)?;
    generator_polynomial_with_alpha(spec, &alpha)
}

/// As `generator_polynomial` but with a caller-supplied primitive n-th root
/// of unity, so different field moduli can be compared.
pub fn generator_polynomial_with_alpha(
    spec: &BchSpec,
    alpha: &gf2m::FieldElement,
) -> Result<Poly2> {
    let mut reps = BTreeSet::new();
    for s in spec.b..=spec.b + spec.delta - 2 {
        reps.insert(coset(spec.n, s % spec.n)?.representative());
    }
    let mut g = Poly2::one();
    for &s in &reps {
        g = g.mul(&gf2m::minimal_polynomial(alpha, s, spec.n)?);
    }
    assert_eq!(
        g.degree(),
        Some(spec.defining_set.len()),
        "generator degree must equal the defining set size"
    );
    assert!(
        g.divides(&Poly2::x_pow_plus_one(spec.n)),
        "generator polynomial must divide x^n + 1"
    );
    Ok(g)
}

/// The BCH code as a linear code: k cyclic shifts of g(x) as generator rows.
/// The constant term of g is always 1, so the shifts form a staircase and
/// the matrix has full rank k.
pub fn bch_code(spec: &BchSpec) -> Result<LinearCode> {
    let g = generator_polynomial(spec)?;
    bch_code_from_generator_poly(spec, &g)
}

pub fn bch_code_with_alpha(spec: &BchSpec, alpha: &gf2m::FieldElement) -> Result<LinearCode> {
    let g = generator_polynomial_with_alpha(spec, alpha)?;
    bch_code_from_generator_poly(spec, &g)
}

fn bch_code_from_generator_poly(spec: &BchSpec, g: &Poly2) -> Result<LinearCode> {
    let n = spec.n;
    let k = spec.k;
    let mut rows = Vec::with_capacity(k);
    for shift in 0..k {
        let mut row = BitVec::zeros(n);
        for j in 0..n - shift {
            if g.coeff(j) {
                row.set(j + shift, true);
            }
        }
        rows.push(row);
    }
    let generator = BitMatrix::from_rows(&rows, n)?;
    let code = LinearCode::from_generator(generator)?;
    debug_assert_eq!(code.dimension(), k);
    Ok(code.with_designed_distance(spec.delta))
}

/// Largest designed distance for which the narrow-sense BCH code of length n
/// still contains its dual. Growing delta only grows the defining set, so
/// the property is monotone and the first failure ends the search. Returns 1
/// when even delta = 2 fails (only the trivial [n, n, 1] code qualifies).
pub fn max_dual_containing_delta(n: usize) -> Result<usize> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let mut best = 1;
    for delta in 2..=n {
        if defining_set(n, 1, delta)?.is_dual_containing() {
            best = delta;
        } else {
            break;
        }
    }
    Ok(best)
}

/// All odd lengths 1 < n <= limit whose coset C_1 does not contain n - 1;
/// these are the lengths admitting a dual-containing BCH code with delta
/// >= 2 beyond the trivial one.
pub fn scan_nonprimitive(limit: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for n in (3..=limit).step_by(2) {
        let c1 = coset(n, 1).expect("n is odd");
        let keep = !c1.contains(n - 1);
        // -1 can be a power of 2 mod n only when the order of 2 is even
        debug_assert!(keep || c1.len().is_multiple_of(2));
        if keep {
            out.push(n);
        }
    }
    out
}

/// Size of the smallest coset other than {0} mod n.
pub fn smallest_nontrivial_coset_size(n: usize) -> Result<usize> {
    Ok(all_cosets(n)?
        .iter()
        .filter(|c| c.representative() != 0)
        .map(|c| c.len())
        .min()
        .unwrap_or(0))
}

/// Scan-list entries that also have some nontrivial coset of size at most
/// `max_coset_size`. Small cosets keep the defining set small, which is what
/// makes a length efficient; the cutoff is a tunable because no single value
/// reproduces every published choice.
pub fn scan_with_small_cosets(limit: usize, max_coset_size: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for n in scan_nonprimitive(limit) {
        if smallest_nontrivial_coset_size(n)? <= max_coset_size {
            out.push(n);
        }
    }
    Ok(out)
}
