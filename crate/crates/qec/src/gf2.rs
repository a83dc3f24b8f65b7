//! Exact linear algebra over GF(2) on bit-packed vectors and matrices.
//!
//! Vectors and matrices are packed into 64-bit words so that row operations
//! are word-parallel XORs and weights are popcounts. All algebraic operations
//! treat values as immutable and return new values; everything here is `Send`
//! and `Sync` and safe to share across distance-search shards.

use crate::error::{Error, Result};
use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// Parity of the AND of two word slices (a GF(2) dot product).
#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0u64;
    for (x, y) in a.iter().zip(b) {
        acc ^= x & y;
    }
    acc.count_ones() & 1 == 1
}

/// A bit vector over GF(2). Bits beyond `len` are kept zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// All-ones vector of the given length.
    pub fn ones(len: usize) -> Self {
        let mut v = BitVec::zeros(len);
        for i in 0..len {
            v.set(i, true);
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Parse a string of `0`/`1` characters, most significant position first.
    pub fn parse(s: &str) -> Result<Self> {
        let mut v = BitVec::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => return Err(Error::BadCodeData(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Hamming weight.
    #[inline]
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitVec) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(dot_words(&self.words, &other.words))
    }

    /// Weight of the bitwise OR of two vectors.
    pub fn or_weight(&self, other: &BitVec) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len + other.len);
        for (i, b) in self.iter().enumerate() {
            out.set(i, b);
        }
        for (i, b) in other.iter().enumerate() {
            out.set(self.len + i, b);
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

/// Result of reduced row-echelon elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// A dense bit matrix over GF(2), stored row-major in 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let wpr = words_for(cols).max(1);
        BitMatrix {
            rows,
            cols,
            wpr,
            data: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(rows: &[BitVec], cols: usize) -> Result<Self> {
        let mut m = BitMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has length {} instead of {cols}",
                    r.len()
                )));
            }
            m.data[i * m.wpr..(i + 1) * m.wpr].copy_from_slice(r.words());
        }
        Ok(m)
    }

    /// Parse rows of `0`/`1` strings; handy in tests and the text format.
    pub fn parse(rows: &[&str]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::BadCodeData("cannot parse an empty matrix".into()));
        }
        let cols = rows[0].len();
        let parsed: Vec<BitVec> = rows.iter().map(|s| BitVec::parse(s)).collect::<Result<_>>()?;
        BitMatrix::from_rows(&parsed, cols)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        self.data[r * self.wpr + c / WORD_BITS] >> (c % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let mask = 1u64 << (c % WORD_BITS);
        let w = &mut self.data[r * self.wpr + c / WORD_BITS];
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub(crate) fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.wpr..(r + 1) * self.wpr]
    }

    /// Copy of row `r` as a vector.
    pub fn row(&self, r: usize) -> BitVec {
        BitVec {
            len: self.cols,
            words: self.row_words(r).to_vec(),
        }
    }

    pub fn row_iter(&self) -> impl Iterator<Item = BitVec> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let (a, b) = if src < dst {
            let (lo, hi) = self.data.split_at_mut(dst * self.wpr);
            (&lo[src * self.wpr..(src + 1) * self.wpr], &mut hi[..self.wpr])
        } else {
            let (lo, hi) = self.data.split_at_mut(src * self.wpr);
            let dst_slice = &mut lo[dst * self.wpr..(dst + 1) * self.wpr];
            (&hi[..self.wpr] as &[u64], dst_slice)
        };
        for (d, s) in b.iter_mut().zip(a) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.wpr {
            self.data.swap(a * self.wpr + w, b * self.wpr + w);
        }
    }

    /// Reduced row-echelon form over GF(2).
    ///
    /// Pivots are eliminated both below and above, so the result is canonical
    /// for the row space: two matrices span the same space iff their nonzero
    /// rref rows are identical.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| m.get(r, col));
            let Some(r) = found else { continue };
            m.swap_rows(r, pivot_row);
            for other in 0..m.rows {
                if other != pivot_row && m.get(other, col) {
                    m.xor_row_into(pivot_row, other);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref { matrix: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the right kernel `{v : self * v^T = 0}`, one row per basis
    /// vector. Has `cols - rank` rows; the kernel of a full-rank square
    /// matrix is the empty (0-row) matrix.
    pub fn kernel(&self) -> BitMatrix {
        let Rref { matrix: r, pivots, rank } = self.rref();
        let mut pivot_of_col = vec![usize::MAX; self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            pivot_of_col[p] = i;
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| pivot_of_col[*c] == usize::MAX).collect();
        let mut out = BitMatrix::zeros(free.len(), self.cols);
        for (row, &f) in free.iter().enumerate() {
            out.set(row, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    out.set(row, p, true);
                }
            }
        }
        debug_assert_eq!(out.rows, self.cols - rank);
        out
    }

    /// Inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Result<BitMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = self.hstack(&BitMatrix::identity(n))?;
        let red = aug.rref();
        if red.rank < n || red.pivots.iter().take(n).ne((0..n).collect::<Vec<_>>().iter()) {
            let plain_rank = self.rank();
            return Err(Error::SingularMatrix { rank: plain_rank, dim: n });
        }
        let mut inv = BitMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.matrix.get(r, n + c));
            }
        }
        Ok(inv)
    }

    /// Matrix product over GF(2).
    pub fn multiply(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let row = self.row_words(i);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let j = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let src_start = j * other.wpr;
                    let dst_start = i * out.wpr;
                    for k in 0..other.wpr {
                        out.data[dst_start + k] ^= other.data[src_start + k];
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self * other^T` without materializing the transpose.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "gram product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                if dot_words(self.row_words(i), other.row_words(j)) {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Entrywise sum mod 2; addition is its own inverse in characteristic 2.
    pub fn add(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "sum of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            let row = self.row_words(r);
            for (w, &word) in row.iter().enumerate() {
                let mut bits = word;
                while bits != 0 {
                    let c = w * WORD_BITS + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Stack `self` above `other`.
    pub fn vstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vstack of widths {} and {}",
                self.cols, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows + other.rows, self.cols);
        out.data[..self.rows * self.wpr].copy_from_slice(&self.data);
        out.data[self.rows * self.wpr..].copy_from_slice(&other.data);
        Ok(out)
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of heights {} and {}",
                self.rows, other.rows
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) {
                    out.set(r, c, true);
                }
            }
            for c in 0..other.cols {
                if other.get(r, c) {
                    out.set(r, self.cols + c, true);
                }
            }
        }
        Ok(out)
    }

    /// Columns `range` as a new matrix.
    pub fn columns(&self, range: std::ops::Range<usize>) -> BitMatrix {
        assert!(range.end <= self.cols);
        let mut out = BitMatrix::zeros(self.rows, range.len());
        for r in 0..self.rows {
            for (c_out, c_in) in range.clone().enumerate() {
                if self.get(r, c_in) {
                    out.set(r, c_out, true);
                }
            }
        }
        out
    }

    /// Membership of `v` in the row space, decided by elimination.
    pub fn row_space_contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: self.cols,
            });
        }
        let red = self.rref();
        let mut rem = v.clone();
        for (i, &p) in red.pivots.iter().enumerate() {
            if rem.get(p) {
                let mut row = red.matrix.row(i);
                std::mem::swap(&mut rem, &mut row);
                rem.xor_assign(&row);
            }
        }
        Ok(rem.is_zero())
    }

    /// Row-space equality via comparison of canonical rref bases.
    pub fn row_space_equal(&self, other: &BitMatrix) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "row spaces in GF(2)^{} vs GF(2)^{}",
                self.cols, other.cols
            )));
        }
        let a = self.rref();
        let b = other.rref();
        if a.rank != b.rank {
            return Ok(false);
        }
        let rows_equal = (0..a.rank).all(|r| a.matrix.row_words(r) == b.matrix.row_words(r));
        Ok(rows_equal)
    }

    /// Nonzero rows of the rref: a canonical basis of the row space.
    pub fn row_basis(&self) -> BitMatrix {
        let red = self.rref();
        let mut out = BitMatrix::zeros(red.rank, self.cols);
        for r in 0..red.rank {
            out.data[r * out.wpr..(r + 1) * out.wpr].copy_from_slice(red.matrix.row_words(r));
        }
        out
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            writeln!(f, "{}", self.row(r))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    pub(crate) fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if rng.random::<bool>() {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = BitMatrix::identity(3);
        let red = id.rref();
        assert_eq!(red.matrix, id);
        assert_eq!(red.pivots, vec![0, 1, 2]);
        assert_eq!(red.rank, 3);

        let z = BitMatrix::zeros(2, 4);
        let red = z.rref();
        assert_eq!(red.matrix, z);
        assert!(red.pivots.is_empty());
        assert_eq!(red.rank, 0);
    }

    #[test]
    fn rref_dependent_rows() {
        // third row is the XOR of the first two
        let m = BitMatrix::parse(&["1100", "0110", "1010"]).unwrap();
        let mut xor = m.row(0);
        xor.xor_assign(&m.row(1));
        assert_eq!(xor, m.row(2));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rref_is_idempotent() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 6, 9);
            let once = m.rref().matrix;
            let twice = once.rref().matrix;
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn kernel_of_full_rank_square_is_empty() {
        let m = BitMatrix::parse(&["110", "011", "001"]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.kernel().rows(), 0);
    }

    #[test]
    fn kernel_of_all_ones_row_is_even_weight_space() {
        let m = BitMatrix::parse(&["1111"]).unwrap();
        let k = m.kernel();
        assert_eq!(k.rows(), 3);
        assert_eq!(k.rank(), 3);
        // oracle: enumerate all 16 vectors of length 4 and keep those
        // orthogonal to 1111
        let ones = BitVec::ones(4);
        for value in 0u32..16 {
            let v = BitVec::from_bools(&[
                value & 1 != 0,
                value & 2 != 0,
                value & 4 != 0,
                value & 8 != 0,
            ]);
            let orthogonal = !v.dot(&ones).unwrap();
            assert_eq!(k.row_space_contains(&v).unwrap(), orthogonal);
        }
    }

    pub(crate) fn hamming_7_4_generator() -> BitMatrix {
        BitMatrix::parse(&["1000110", "0100101", "0010011", "0001111"]).unwrap()
    }

    #[test]
    fn kernel_of_hamming_generator_checks_it() {
        let g = hamming_7_4_generator();
        let h = g.kernel();
        assert_eq!(h.rows(), 3);
        let product = g.mul_transpose(&h).unwrap();
        assert!(product.is_zero());
    }

    #[test]
    fn rank_nullity_and_double_dual() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..100 {
            let rows = rng.random_range(1..=8);
            let cols = rng.random_range(1..=12);
            let m = random_matrix(&mut rng, rows, cols);
            let k = m.kernel();
            assert_eq!(m.rank() + k.rows(), cols);
            assert!(m.mul_transpose(&k).unwrap().is_zero());
            // double dual: kernel(kernel(m)) spans the same space as m
            let kk = k.kernel();
            assert!(kk.row_space_equal(&m).unwrap());
        }
    }

    #[test]
    fn inverse_small_cases() {
        let id = BitMatrix::identity(4);
        assert_eq!(id.inverse().unwrap(), id);

        let m = BitMatrix::parse(&["01", "11"]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(inv, BitMatrix::parse(&["11", "10"]).unwrap());
        assert_eq!(m.multiply(&inv).unwrap(), BitMatrix::identity(2));
        assert_eq!(inv.multiply(&m).unwrap(), BitMatrix::identity(2));

        let s = BitMatrix::parse(&["11", "11"]).unwrap();
        assert_eq!(
            s.inverse(),
            Err(Error::SingularMatrix { rank: 1, dim: 2 })
        );
    }

    #[test]
    fn inverse_round_trips_on_random_invertible() {
        let mut rng = StdRng::seed_from_u64(13);
        let mut found = 0;
        while found < 30 {
            let m = random_matrix(&mut rng, 6, 6);
            if m.rank() < 6 {
                continue;
            }
            found += 1;
            let inv = m.inverse().unwrap();
            assert_eq!(m.multiply(&inv).unwrap(), BitMatrix::identity(6));
            assert_eq!(inv.multiply(&m).unwrap(), BitMatrix::identity(6));
        }
    }

    #[test]
    fn product_transpose_identity() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..50 {
            let a = random_matrix(&mut rng, 5, 5);
            let b = random_matrix(&mut rng, 5, 5);
            let left = a.multiply(&b).unwrap().transpose();
            let right = b.transpose().multiply(&a.transpose()).unwrap();
            assert_eq!(left, right);
        }
    }

    #[test]
    fn multiply_by_identity_and_self_cancellation() {
        let mut rng = StdRng::seed_from_u64(19);
        let a = random_matrix(&mut rng, 4, 6);
        assert_eq!(a.multiply(&BitMatrix::identity(6)).unwrap(), a);
        assert!(a.add(&a).unwrap().is_zero());
        // addition is an involution
        let b = random_matrix(&mut rng, 4, 6);
        assert_eq!(a.add(&b).unwrap().add(&b).unwrap(), a);
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = BitMatrix::zeros(2, 3);
        let b = BitMatrix::zeros(2, 3);
        assert!(matches!(a.multiply(&b), Err(Error::DimensionMismatch(_))));
        assert!(matches!(
            a.add(&BitMatrix::zeros(3, 3)),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn row_space_membership() {
        let m = BitMatrix::parse(&["110", "011"]).unwrap();
        assert!(m.row_space_contains(&BitVec::zeros(3)).unwrap());
        assert!(m.row_space_contains(&BitVec::parse("101").unwrap()).unwrap());
        assert!(!m.row_space_contains(&BitVec::parse("111").unwrap()).unwrap());
    }

    #[test]
    fn row_space_equality_under_invertible_left_multiple() {
        let mut rng = StdRng::seed_from_u64(23);
        for _ in 0..30 {
            let d = random_matrix(&mut rng, 4, 10);
            let a = loop {
                let c = random_matrix(&mut rng, 4, 4);
                if c.rank() == 4 {
                    break c;
                }
            };
            let ad = a.multiply(&d).unwrap();
            assert!(d.row_space_equal(&ad).unwrap());
        }
    }

    #[test]
    fn kernel_of_empty_matrix_is_full_space() {
        let m = BitMatrix::zeros(0, 5);
        let k = m.kernel();
        assert_eq!(k.rows(), 5);
        assert_eq!(k.rank(), 5);
    }
}
