//! The enlarged CSS construction: a dual-containing classical code C,
//! together with a strictly larger code C' of dimension k' > k + 1,
//! yields a pure [[n, k + k' - n, min(d, ceil(3d'/2))]] quantum code.
//!
//! The generator stacks mixed rows (D | AD) built from coset representatives
//! D of C'/C and a fixed-point-free invertible map A on top of the plain CSS
//! rows (G | 0), (0 | G). The stabilizer compensates with a matching mixing
//! of the extra checks so that every commutativity condition keeps holding.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::linear::LinearCode;
use crate::stab::{ClaimBasis, StabilizerCode};

/// Everything the construction produced, retained so each algebraic
/// identity can be re-verified after the fact.
#[derive(Debug, Clone)]
pub struct EnlargementRecord {
    /// C, the dual-containing code.
    pub subcode: LinearCode,
    /// C', the enlarging code.
    pub supercode: LinearCode,
    /// Coset representatives of C'/C; together with C's generator they
    /// generate C'.
    pub coset_reps: BitMatrix,
    /// Checks of C beyond those of C', normalized so that
    /// extra_checks * coset_reps^T is the identity.
    pub extra_checks: BitMatrix,
    /// Check matrix of C'.
    pub supercode_checks: BitMatrix,
    /// The fixed-point-free invertible map A applied to the coset block.
    pub mixing_map: BitMatrix,
    /// The compensating stabilizer mixing, B D^T (A^T)^-1 (B D^T)^-1.
    pub check_mixing: BitMatrix,
    /// True when the claimed distance rests on measured classical
    /// distances rather than designed bounds.
    pub claim_basis: ClaimBasis,
    pub code: StabilizerCode,
}

/// Rows of `supercode` completing `subcode` to a basis of the larger code:
/// k' - k coset representatives, chosen deterministically from the rref
/// basis of the supercode.
pub fn coset_complement(subcode: &LinearCode, supercode: &LinearCode) -> Result<BitMatrix> {
    if !supercode.contains(subcode)? {
        return Err(Error::NotASubcode {
            inner: subcode.dimension(),
            outer: supercode.dimension(),
        });
    }
    if supercode.dimension() <= subcode.dimension() {
        return Err(Error::DimensionOrder {
            k: subcode.dimension(),
            kprime: supercode.dimension(),
        });
    }
    complete_basis(subcode.generator(), supercode.generator())
}

/// Rows of `target`'s row space independent of `base`, appended one at a
/// time until base + new rows span the target.
fn complete_basis(base: &BitMatrix, target: &BitMatrix) -> Result<BitMatrix> {
    let n = base.cols();
    let mut stacked = base.row_basis();
    let mut picked = BitMatrix::zeros(0, n);
    for row in target.row_basis().row_iter() {
        if !stacked.row_space_contains(&row)? {
            let single = BitMatrix::from_rows(&[row], n)?;
            picked = picked.vstack(&single)?;
            stacked = stacked.vstack(&single)?;
        }
    }
    Ok(picked)
}

/// The fixed-point-free invertible map of the construction: a cyclic shift
/// with one mixed last row,
///
/// ```text
/// 0 1 0 ... 0
/// 0 0 1 ... 0
///       ...
/// 0 0 0 ... 1
/// 1 1 0 ... 0
/// ```
///
/// No nonzero u satisfies uA = u, equivalently A + I is invertible. A single
/// row cannot support such a map, hence the size >= 2 requirement.
pub fn fixed_point_free_map(size: usize) -> Result<BitMatrix> {
    if size < 2 {
        return Err(Error::SizeTooSmall(size));
    }
    let mut a = BitMatrix::zeros(size, size);
    for i in 0..size - 1 {
        a.set(i, i + 1, true);
    }
    a.set(size - 1, 0, true);
    a.set(size - 1, 1, true);
    debug_assert!(a.inverse().is_ok());
    debug_assert!(a.add(&BitMatrix::identity(size)).unwrap().inverse().is_ok());
    Ok(a)
}

/// The stabilizer-side mixing matrix B D^T (A^T)^-1 (B D^T)^-1, defined so
/// that (mixed checks) * (A D)^T reproduces B D^T.
pub fn check_mixing_matrix(
    mixing: &BitMatrix,
    extra_checks: &BitMatrix,
    coset_reps: &BitMatrix,
) -> Result<BitMatrix> {
    let pairing = extra_checks.mul_transpose(coset_reps)?;
    let pairing_inv = pairing.inverse()?;
    let at_inv = mixing.transpose().inverse()?;
    pairing.multiply(&at_inv)?.multiply(&pairing_inv)
}

fn ceil_three_halves(d: usize) -> usize {
    (3 * d).div_ceil(2)
}

/// Run the enlarged construction on a dual-containing subcode and a strictly
/// larger supercode with k' > k + 1.
pub fn enlarge(subcode: &LinearCode, supercode: &LinearCode) -> Result<EnlargementRecord> {
    if !subcode.contains_own_dual()? {
        return Err(Error::DualConditionViolated);
    }
    if !supercode.contains(subcode)? {
        return Err(Error::NotASubcode {
            inner: subcode.dimension(),
            outer: supercode.dimension(),
        });
    }
    let n = subcode.length();
    let k = subcode.dimension();
    let kprime = supercode.dimension();
    if kprime <= k + 1 {
        return Err(Error::InsufficientEnlargement { k, kprime });
    }
    let extra = kprime - k;

    let coset_reps = coset_complement(subcode, supercode)?;
    debug_assert_eq!(coset_reps.rows(), extra);

    // the supercode's checks are a subspace of the subcode's; the extra
    // checks complete them
    let supercode_checks = supercode.check().clone();
    let mut extra_checks = complete_basis(&supercode_checks, subcode.check())?;
    debug_assert_eq!(extra_checks.rows(), extra);
    debug_assert!(supercode_checks
        .vstack(&extra_checks)
        .unwrap()
        .row_space_equal(subcode.check())
        .unwrap());

    // The pairing (extra checks) x (coset reps) -> GF(2) is nondegenerate,
    // so B D^T is invertible for any pair of bases; normalizing B to make it
    // the identity keeps the construction deterministic.
    let pairing = extra_checks.mul_transpose(&coset_reps)?;
    let pairing_inv = pairing.inverse().map_err(|_| Error::SingularMatrix {
        rank: pairing.rank(),
        dim: extra,
    })?;
    extra_checks = pairing_inv.multiply(&extra_checks)?;
    debug_assert_eq!(
        extra_checks.mul_transpose(&coset_reps).unwrap(),
        BitMatrix::identity(extra)
    );

    let mixing_map = fixed_point_free_map(extra)?;
    let check_mixing = check_mixing_matrix(&mixing_map, &extra_checks, &coset_reps)?;

    let mixed_reps = mixing_map.multiply(&coset_reps)?;
    // D and AD generate the same set
    assert!(
        coset_reps.row_space_equal(&mixed_reps)?,
        "mixing map must preserve the coset-representative span"
    );
    // the defining identity of the check mixing
    let lhs = check_mixing
        .multiply(&extra_checks)?
        .mul_transpose(&mixed_reps)?;
    let rhs = extra_checks.mul_transpose(&coset_reps)?;
    assert_eq!(lhs, rhs, "check mixing identity must hold exactly");

    let zero_k = BitMatrix::zeros(k, n);
    let zero_h = BitMatrix::zeros(supercode_checks.rows(), n);
    let gen_x = coset_reps
        .vstack(subcode.generator())?
        .vstack(&zero_k)?;
    let gen_z = mixed_reps.vstack(&zero_k)?.vstack(subcode.generator())?;
    let mixed_checks = check_mixing.multiply(&extra_checks)?;
    let stab_x = mixed_checks.vstack(&supercode_checks)?.vstack(&zero_h)?;
    let stab_z = extra_checks.vstack(&zero_h)?.vstack(&supercode_checks)?;

    let code = StabilizerCode::new(gen_x, gen_z, stab_x, stab_z)?;
    debug_assert_eq!(code.logical_dimension(), k + kprime - n);

    let (claimed, claim_basis) = match (
        subcode.best_distance_claim(),
        supercode.best_distance_claim(),
    ) {
        (Some(d), Some(dprime)) => {
            let basis = if subcode.distance().is_some() && supercode.distance().is_some() {
                ClaimBasis::Measured
            } else {
                ClaimBasis::Designed
            };
            (Some(d.min(ceil_three_halves(dprime))), basis)
        }
        _ => (None, ClaimBasis::Designed),
    };

    let code = match claimed {
        Some(d) => code.with_claimed_distance(d, claim_basis),
        None => code,
    };

    Ok(EnlargementRecord {
        subcode: subcode.clone(),
        supercode: supercode.clone(),
        coset_reps,
        extra_checks,
        supercode_checks,
        mixing_map,
        check_mixing,
        claim_basis,
        code,
    })
}

/// Re-run the construction on the unextended pair obtained by dropping the
/// parity coordinate; for claimed distance D > 3 this yields an
/// [[n-1, K+1, D-1]] code. Distances shrink by one because the extended
/// distances are even.
pub fn unextended_variant(record: &EnlargementRecord) -> Result<EnlargementRecord> {
    let claimed = record
        .code
        .claimed_distance()
        .ok_or_else(|| Error::NotApplicable("no claimed distance on the record".into()))?;
    if claimed <= 3 {
        return Err(Error::NotApplicable(format!(
            "unextended variant needs claimed distance > 3, got {claimed}"
        )));
    }
    let strip = |code: &LinearCode| -> Result<LinearCode> {
        let punctured = code.puncture_last()?;
        let punctured = match code.distance() {
            Some(d) if d % 2 == 0 => punctured.with_distance(d - 1),
            Some(_) => {
                return Err(Error::NotApplicable(
                    "expected parity-extended codes with even distance".into(),
                ))
            }
            None => punctured,
        };
        Ok(match code.designed_distance() {
            Some(d) if d % 2 == 0 => punctured.with_designed_distance(d - 1),
            Some(_) => {
                return Err(Error::NotApplicable(
                    "expected parity-extended codes with even designed distance".into(),
                ))
            }
            None => punctured,
        })
    };
    let sub = strip(&record.subcode)?;
    let sup = strip(&record.supercode)?;
    let variant = enlarge(&sub, &sup)?;

    let expected_n = record.code.qubits() - 1;
    let expected_k = record.code.logical_dimension() + 1;
    let expected_d = claimed - 1;
    assert_eq!(variant.code.qubits(), expected_n);
    assert_eq!(variant.code.logical_dimension(), expected_k);
    assert_eq!(variant.code.claimed_distance(), Some(expected_d));
    Ok(variant)
}
