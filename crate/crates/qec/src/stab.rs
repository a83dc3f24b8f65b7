//! Stabilizer codes in the binary symplectic representation: paired (X|Z)
//! bit matrices, the commutativity conditions, the CSS construction, and
//! exhaustive quantum distance search.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::linear::LinearCode;
use crate::search::{self, DistanceOutcome, SearchCaps};

/// An n-qubit Pauli operator up to phase, as the pair (x | z) of n-bit
/// strings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticVector {
    n: usize,
    x: BitVec,
    z: BitVec,
}

impl SymplecticVector {
    pub fn new(x: BitVec, z: BitVec) -> Result<SymplecticVector> {
        if x.len() != z.len() {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(SymplecticVector { n: x.len(), x, z })
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    pub fn x_part(&self) -> &BitVec {
        &self.x
    }

    pub fn z_part(&self) -> &BitVec {
        &self.z
    }

    /// Weight of the operator: the Hamming weight of x OR z, i.e. the count
    /// of qubits acted on nontrivially.
    pub fn weight(&self) -> usize {
        self.x.or_weight(&self.z)
    }

    /// Symplectic inner product x1.z2 + z1.x2 mod 2. Zero exactly when the
    /// two operators commute.
    pub fn inner(&self, other: &SymplecticVector) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(self.x.dot(&other.z)? ^ self.z.dot(&other.x)?)
    }
}

/// Basis of claimed distances: measured exhaustively, or inherited from
/// construction (designed) bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimBasis {
    Measured,
    Designed,
}

/// An [[n, K, D]] stabilizer code as paired (X|Z) generator and stabilizer
/// matrices. Construction verifies the commutativity conditions, full
/// ranks, and containment of the stabilizer space in the code space.
#[derive(Debug, Clone)]
pub struct StabilizerCode {
    n: usize,
    logical: usize,
    gen_x: BitMatrix,
    gen_z: BitMatrix,
    stab_x: BitMatrix,
    stab_z: BitMatrix,
    claimed_distance: Option<usize>,
    claim_basis: Option<ClaimBasis>,
    verified_distance: Option<usize>,
    pure: Option<bool>,
}

impl StabilizerCode {
    pub fn new(
        gen_x: BitMatrix,
        gen_z: BitMatrix,
        stab_x: BitMatrix,
        stab_z: BitMatrix,
    ) -> Result<StabilizerCode> {
        let n = gen_x.cols();
        if gen_z.cols() != n || stab_x.cols() != n || stab_z.cols() != n {
            return Err(Error::DimensionMismatch(
                "all four blocks must share the qubit count".into(),
            ));
        }
        if gen_x.rows() != gen_z.rows() || stab_x.rows() != stab_z.rows() {
            return Err(Error::DimensionMismatch(
                "paired X and Z blocks must have equal row counts".into(),
            ));
        }
        let gen_rows = gen_x.rows();
        let stab_rows = stab_x.rows();
        if gen_rows + stab_rows != 2 * n || gen_rows < n {
            return Err(Error::DimensionMismatch(format!(
                "expected n + K generator and n - K stabilizer rows, got {gen_rows} and {stab_rows} for n = {n}"
            )));
        }
        let logical = gen_rows - n;
        let code = StabilizerCode {
            n,
            logical,
            gen_x,
            gen_z,
            stab_x,
            stab_z,
            claimed_distance: None,
            claim_basis: None,
            verified_distance: None,
            pure: None,
        };
        if !code.check_commutativity() {
            return Err(Error::BadCodeData(
                "commutativity conditions violated".into(),
            ));
        }
        let gen_full = code.gen_x.hstack(&code.gen_z)?;
        let stab_full = code.stab_x.hstack(&code.stab_z)?;
        if gen_full.rank() != gen_rows || (stab_rows > 0 && stab_full.rank() != stab_rows) {
            return Err(Error::BadCodeData(
                "generator or stabilizer rows are dependent".into(),
            ));
        }
        for row in stab_full.row_iter() {
            if !gen_full.row_space_contains(&row)? {
                return Err(Error::BadCodeData(
                    "stabilizer space must lie inside the code space".into(),
                ));
            }
        }
        Ok(code)
    }

    pub fn qubits(&self) -> usize {
        self.n
    }

    /// Logical dimension K.
    pub fn logical_dimension(&self) -> usize {
        self.logical
    }

    pub fn generator_x(&self) -> &BitMatrix {
        &self.gen_x
    }

    pub fn generator_z(&self) -> &BitMatrix {
        &self.gen_z
    }

    pub fn stabilizer_x(&self) -> &BitMatrix {
        &self.stab_x
    }

    pub fn stabilizer_z(&self) -> &BitMatrix {
        &self.stab_z
    }

    pub fn claimed_distance(&self) -> Option<usize> {
        self.claimed_distance
    }

    pub fn claim_basis(&self) -> Option<ClaimBasis> {
        self.claim_basis
    }

    pub fn verified_distance(&self) -> Option<usize> {
        self.verified_distance
    }

    pub fn is_pure(&self) -> Option<bool> {
        self.pure
    }

    pub fn with_claimed_distance(mut self, d: usize, basis: ClaimBasis) -> StabilizerCode {
        self.claimed_distance = Some(d);
        self.claim_basis = Some(basis);
        self
    }

    pub fn with_verified_distance(mut self, d: usize, pure: bool) -> StabilizerCode {
        self.verified_distance = Some(d);
        self.pure = Some(pure);
        self
    }

    /// Both commutativity conditions, exactly: the stabilizer commutes with
    /// itself and with every generator row.
    pub fn check_commutativity(&self) -> bool {
        let hh = symplectic_products(&self.stab_x, &self.stab_z, &self.stab_x, &self.stab_z);
        let hg = symplectic_products(&self.stab_x, &self.stab_z, &self.gen_x, &self.gen_z);
        hh.is_zero() && hg.is_zero()
    }

    /// CSS construction from classical codes with dual(c1) contained in c2:
    /// block-diagonal generator diag(G1 | G2) and stabilizer diag(H2 | H1).
    pub fn css(c1: &LinearCode, c2: &LinearCode) -> Result<StabilizerCode> {
        if c1.length() != c2.length() {
            return Err(Error::LengthMismatch {
                left: c1.length(),
                right: c2.length(),
            });
        }
        if !c2.contains(&c1.dual())? {
            return Err(Error::DualConditionViolated);
        }
        let n = c1.length();
        let (k1, k2) = (c1.dimension(), c2.dimension());
        let zero = |rows: usize| BitMatrix::zeros(rows, n);

        let gen_x = c1.generator().vstack(&zero(k2))?;
        let gen_z = zero(k1).vstack(c2.generator())?;
        let stab_x = c2.check().vstack(&zero(n - k1))?;
        let stab_z = zero(n - k2).vstack(c1.check())?;

        let code = StabilizerCode::new(gen_x, gen_z, stab_x, stab_z)?;
        debug_assert_eq!(code.logical_dimension(), k1 + k2 - n);

        let d1 = c1.best_distance_claim();
        let d2 = c2.best_distance_claim();
        match (d1, d2) {
            (Some(d1), Some(d2)) => {
                let basis = if c1.distance().is_some() && c2.distance().is_some() {
                    ClaimBasis::Measured
                } else {
                    ClaimBasis::Designed
                };
                Ok(code.with_claimed_distance(d1.min(d2), basis))
            }
            _ => Ok(code),
        }
    }

    /// Exhaustive distance over the 2^(n+K) generator-space vectors, within
    /// the symplectic cap. Returns the minimum weight outside the code's
    /// symplectic dual together with the purity flag (no smaller weight
    /// anywhere in the code). For K = 0 the code equals its dual and the
    /// distance is the minimum weight over all nonzero vectors.
    pub fn distance(&self, caps: &SearchCaps) -> (DistanceOutcome, Option<bool>) {
        let t = self.n + self.logical;
        if t >= 64 || 1u64 << t > caps.max_symplectic {
            return (
                DistanceOutcome::Unverified {
                    designed: self.claimed_distance,
                    no_word_below: 1,
                },
                None,
            );
        }
        let scan = search::symplectic_scan(&self.gen_x, &self.gen_z);
        if self.logical == 0 {
            return (DistanceOutcome::Exact(scan.min_all), Some(true));
        }
        let pure = scan.min_all == scan.min_outside;
        (DistanceOutcome::Exact(scan.min_outside), Some(pure))
    }

    /// Stabilizer rows rendered one Pauli character per qubit:
    /// (x, z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
    pub fn pauli_strings(&self) -> Vec<String> {
        (0..self.stab_x.rows())
            .map(|r| {
                (0..self.n)
                    .map(|c| match (self.stab_x.get(r, c), self.stab_z.get(r, c)) {
                        (false, false) => 'I',
                        (true, false) => 'X',
                        (false, true) => 'Z',
                        (true, true) => 'Y',
                    })
                    .collect()
            })
            .collect()
    }

    /// Rebuild a code from stabilizer Pauli strings. The generator is the
    /// kernel of [Hz | Hx], the full space of operators commuting with the
    /// stabilizer.
    pub fn from_pauli_strings(rows: &[String]) -> Result<StabilizerCode> {
        if rows.is_empty() {
            return Err(Error::BadCodeData("no stabilizer rows".into()));
        }
        let n = rows[0].chars().count();
        let stab_rows = rows.len();
        if stab_rows > n {
            return Err(Error::BadCodeData(format!(
                "{stab_rows} stabilizer rows exceed {n} qubits"
            )));
        }
        let mut stab_x = BitMatrix::zeros(stab_rows, n);
        let mut stab_z = BitMatrix::zeros(stab_rows, n);
        for (r, s) in rows.iter().enumerate() {
            if s.chars().count() != n {
                return Err(Error::BadCodeData(format!(
                    "stabilizer row {r} has length {} instead of {n}",
                    s.chars().count()
                )));
            }
            for (c, ch) in s.chars().enumerate() {
                match ch {
                    'I' => {}
                    'X' => stab_x.set(r, c, true),
                    'Z' => stab_z.set(r, c, true),
                    'Y' => {
                        stab_x.set(r, c, true);
                        stab_z.set(r, c, true);
                    }
                    _ => {
                        return Err(Error::BadCodeData(format!(
                            "invalid Pauli character {ch:?} in row {r}"
                        )))
                    }
                }
            }
        }
        // commuting space: (ux | uz) with Hx.uz + Hz.ux = 0
        let constraint = stab_z.hstack(&stab_x)?;
        let gen_full = constraint.kernel();
        let gen_x = gen_full.columns(0..n);
        let gen_z = gen_full.columns(n..2 * n);
        StabilizerCode::new(gen_x, gen_z, stab_x, stab_z)
    }
}

/// Matrix of pairwise symplectic inner products: Ax.Bz^T + Az.Bx^T.
fn symplectic_products(ax: &BitMatrix, az: &BitMatrix, bx: &BitMatrix, bz: &BitMatrix) -> BitMatrix {
    let left = ax.mul_transpose(bz).expect("checked dimensions");
    let right = az.mul_transpose(bx).expect("checked dimensions");
    left.add(&right).expect("equal shapes")
}

/// Weight of a Pauli vector given as (x | z) parts.
pub fn symplectic_weight(v: &SymplecticVector) -> usize {
    v.weight()
}

/// Symplectic inner product of two Pauli vectors.
pub fn symplectic_inner(a: &SymplecticVector, b: &SymplecticVector) -> Result<bool> {
    a.inner(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn hamming_7_4() -> LinearCode {
        let g = BitMatrix::parse(&["1000110", "0100101", "0010011", "0001111"]).unwrap();
        LinearCode::from_generator(g)
            .unwrap()
            .with_distance(3)
            .with_designed_distance(3)
    }

    fn sv(x: &str, z: &str) -> SymplecticVector {
        SymplecticVector::new(BitVec::parse(x).unwrap(), BitVec::parse(z).unwrap()).unwrap()
    }

    #[test]
    fn weight_examples() {
        assert_eq!(sv("0000", "0000").weight(), 0);
        assert_eq!(sv("1100", "0110").weight(), 3);
    }

    #[test]
    fn weight_identity_from_overlap_count() {
        // wt(x | z) = (wt(x) + wt(z) + wt(x + z)) / 2
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..1000 {
            let n = rng.random_range(1..=80);
            let mut x = BitVec::zeros(n);
            let mut z = BitVec::zeros(n);
            for i in 0..n {
                x.set(i, rng.random());
                z.set(i, rng.random());
            }
            let mut sum = x.clone();
            sum.xor_assign(&z);
            let rhs = (x.weight() + z.weight() + sum.weight()) / 2;
            let v = SymplecticVector::new(x, z).unwrap();
            assert_eq!(v.weight(), rhs);
        }
    }

    #[test]
    fn inner_product_examples() {
        let v = sv("10", "00");
        let w = sv("00", "10");
        assert!(v.inner(&w).unwrap());
        assert!(!v.inner(&v).unwrap()); // alternating form
        assert!(matches!(
            v.inner(&sv("100", "000")),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn inner_product_is_bilinear() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..200 {
            let n = 12;
            let mut parts = Vec::new();
            for _ in 0..6 {
                let mut v = BitVec::zeros(n);
                for i in 0..n {
                    v.set(i, rng.random());
                }
                parts.push(v);
            }
            let a = SymplecticVector::new(parts[0].clone(), parts[1].clone()).unwrap();
            let b = SymplecticVector::new(parts[2].clone(), parts[3].clone()).unwrap();
            let c = SymplecticVector::new(parts[4].clone(), parts[5].clone()).unwrap();
            let mut bx = parts[2].clone();
            bx.xor_assign(&parts[4]);
            let mut bz = parts[3].clone();
            bz.xor_assign(&parts[5]);
            let bc = SymplecticVector::new(bx, bz).unwrap();
            assert_eq!(
                a.inner(&bc).unwrap(),
                a.inner(&b).unwrap() ^ a.inner(&c).unwrap()
            );
        }
    }

    #[test]
    fn css_from_hamming_gives_7_1_3() {
        let c = hamming_7_4();
        let code = StabilizerCode::css(&c, &c).unwrap();
        assert_eq!(code.qubits(), 7);
        assert_eq!(code.logical_dimension(), 1);
        assert!(code.check_commutativity());
        assert_eq!(code.claimed_distance(), Some(3));
        let (d, pure) = code.distance(&SearchCaps::default());
        assert_eq!(d, DistanceOutcome::Exact(3));
        assert_eq!(pure, Some(true));
    }

    #[test]
    fn css_from_extended_hamming_gives_8_0_4() {
        let e = hamming_7_4().extend_parity();
        let code = StabilizerCode::css(&e, &e).unwrap();
        assert_eq!(code.logical_dimension(), 0);
        let (d, pure) = code.distance(&SearchCaps::default());
        assert_eq!(d, DistanceOutcome::Exact(4));
        assert_eq!(pure, Some(true));
    }

    #[test]
    fn css_rejects_bad_dual_pair() {
        // the even-weight code's dual (repetition) is not inside Hamming's
        // dual pair arrangement: [7,6] even-weight with itself fails since
        // its dual (the repetition code) is contained, but Hamming with the
        // repetition code fails the other way
        let h = hamming_7_4();
        let rep = LinearCode::even_weight(7).unwrap().dual();
        assert!(matches!(
            StabilizerCode::css(&h, &rep),
            Err(Error::DualConditionViolated)
        ));
    }

    #[test]
    fn empty_stabilizer_commutes() {
        // K = n: the whole Pauli group, no stabilizers
        let n = 3;
        let gen_x = BitMatrix::identity(n).vstack(&BitMatrix::zeros(n, n)).unwrap();
        let gen_z = BitMatrix::zeros(n, n).vstack(&BitMatrix::identity(n)).unwrap();
        let code = StabilizerCode::new(
            gen_x,
            gen_z,
            BitMatrix::zeros(0, n),
            BitMatrix::zeros(0, n),
        )
        .unwrap();
        assert_eq!(code.logical_dimension(), n);
        assert!(code.check_commutativity());
    }

    #[test]
    fn flipped_bit_breaks_commutativity() {
        let c = hamming_7_4();
        let code = StabilizerCode::css(&c, &c).unwrap();
        let mut bad_x = code.stabilizer_x().clone();
        bad_x.set(0, 0, !bad_x.get(0, 0));
        let tampered = StabilizerCode::new(
            code.generator_x().clone(),
            code.generator_z().clone(),
            bad_x,
            code.stabilizer_z().clone(),
        );
        assert!(tampered.is_err());
    }

    #[test]
    fn pauli_string_rendering() {
        let mut stab_x = BitMatrix::zeros(1, 4);
        let mut stab_z = BitMatrix::zeros(1, 4);
        // x = 1100, z = 0110 -> XYZI
        stab_x.set(0, 0, true);
        stab_x.set(0, 1, true);
        stab_z.set(0, 1, true);
        stab_z.set(0, 2, true);
        let constraint = stab_z.hstack(&stab_x).unwrap();
        let gen_full = constraint.kernel();
        let code = StabilizerCode::new(
            gen_full.columns(0..4),
            gen_full.columns(4..8),
            stab_x,
            stab_z,
        )
        .unwrap();
        assert_eq!(code.pauli_strings(), vec!["XYZI".to_string()]);

        // all-identity row renders as "III...": a zero stabilizer row is
        // rejected by the rank check, so render directly from a fresh code
        let c = hamming_7_4();
        let css = StabilizerCode::css(&c, &c).unwrap();
        for s in css.pauli_strings() {
            assert_eq!(s.len(), 7);
        }
    }

    #[test]
    fn pauli_round_trip() {
        let c = hamming_7_4();
        let code = StabilizerCode::css(&c, &c).unwrap();
        let strings = code.pauli_strings();
        let rebuilt = StabilizerCode::from_pauli_strings(&strings).unwrap();
        assert_eq!(rebuilt.qubits(), 7);
        assert_eq!(rebuilt.logical_dimension(), 1);
        assert_eq!(rebuilt.pauli_strings(), strings);
        let (d, pure) = rebuilt.distance(&SearchCaps::default());
        assert_eq!(d, DistanceOutcome::Exact(3));
        assert_eq!(pure, Some(true));
    }
}
