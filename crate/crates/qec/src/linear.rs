//! Classical [n, k] binary linear codes: duals, subcode tests, parity
//! extension, the even-weight code, and exact minimum-distance search.

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec};
use crate::search::{self, DistanceOutcome, SearchCaps};

/// An [n, k] binary linear code with a full-rank generator and its check
/// matrix. Values are immutable; the `with_*` builders return new values.
#[derive(Debug, Clone)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: BitMatrix,
    check: BitMatrix,
    distance: Option<usize>,
    designed_distance: Option<usize>,
}

impl LinearCode {
    /// Build from a full-rank generator matrix; the check matrix is the
    /// kernel.
    pub fn from_generator(generator: BitMatrix) -> Result<LinearCode> {
        let k = generator.rows();
        let n = generator.cols();
        if generator.rank() != k {
            return Err(Error::BadCodeData(format!(
                "generator matrix has rank {} but {k} rows",
                generator.rank()
            )));
        }
        let check = generator.kernel();
        debug_assert!(generator.mul_transpose(&check).unwrap().is_zero());
        Ok(LinearCode {
            n,
            k,
            generator,
            check,
            distance: None,
            designed_distance: None,
        })
    }

    /// Record an exhaustively verified minimum distance.
    pub fn with_distance(mut self, d: usize) -> LinearCode {
        self.distance = Some(d);
        self
    }

    /// Record a construction lower bound on the distance.
    pub fn with_designed_distance(mut self, d: usize) -> LinearCode {
        self.designed_distance = Some(d);
        self
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    pub fn check(&self) -> &BitMatrix {
        &self.check
    }

    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    pub fn designed_distance(&self) -> Option<usize> {
        self.designed_distance
    }

    /// Verified distance if present, else the designed bound.
    pub fn best_distance_claim(&self) -> Option<usize> {
        self.distance.or(self.designed_distance)
    }

    /// The dual code: generator and check swap roles.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            generator: self.check.clone(),
            check: self.generator.clone(),
            distance: None,
            designed_distance: None,
        }
    }

    /// Does this code contain `inner` as a subcode?
    pub fn contains(&self, inner: &LinearCode) -> Result<bool> {
        if self.n != inner.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: inner.n,
            });
        }
        for row in inner.generator.row_iter() {
            if !self.generator.row_space_contains(&row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Matrix-level dual containment check.
    pub fn contains_own_dual(&self) -> Result<bool> {
        self.contains(&self.dual())
    }

    /// Append an overall parity bit to every codeword. The dimension is
    /// unchanged, all codewords become even weight, and an odd distance d
    /// becomes d + 1 (even weights are untouched by the extra bit).
    pub fn extend_parity(&self) -> LinearCode {
        let mut rows = Vec::with_capacity(self.k);
        for r in 0..self.k {
            let row = self.generator.row(r);
            let parity = row.weight() % 2 == 1;
            let mut extended = BitVec::zeros(self.n + 1);
            for (i, b) in row.iter().enumerate() {
                extended.set(i, b);
            }
            extended.set(self.n, parity);
            rows.push(extended);
        }
        let generator = BitMatrix::from_rows(&rows, self.n + 1).expect("consistent widths");
        let mut code = LinearCode::from_generator(generator).expect("extension preserves rank");
        let bump = |d: usize| d + d % 2;
        if let Some(d) = self.distance {
            code.distance = Some(bump(d));
        }
        if let Some(d) = self.designed_distance {
            code.designed_distance = Some(bump(d));
        }
        code
    }

    /// Drop the last coordinate. Only valid when the shortened generator
    /// keeps full rank, as it does when undoing `extend_parity`. Distance
    /// claims do not transfer.
    pub fn puncture_last(&self) -> Result<LinearCode> {
        if self.n < 2 {
            return Err(Error::BadCodeData("cannot puncture a length-1 code".into()));
        }
        let generator = self.generator.columns(0..self.n - 1);
        LinearCode::from_generator(generator)
    }

    /// The [n, n-1, 2] code of all even-weight words.
    pub fn even_weight(n: usize) -> Result<LinearCode> {
        if n < 2 {
            return Err(Error::BadCodeData(format!(
                "even-weight code needs n >= 2, got {n}"
            )));
        }
        let mut rows = Vec::with_capacity(n - 1);
        for i in 0..n - 1 {
            let mut row = BitVec::zeros(n);
            row.set(i, true);
            row.set(n - 1, true);
            rows.push(row);
        }
        let generator = BitMatrix::from_rows(&rows, n)?;
        Ok(LinearCode::from_generator(generator)?
            .with_distance(2)
            .with_designed_distance(2))
    }

    /// Exact minimum distance where the work caps allow.
    ///
    /// Enumerates all 2^k codewords in a sharded Gray-code walk when that
    /// fits `caps.max_codewords`; otherwise searches for dependent
    /// check-matrix columns of growing count within
    /// `caps.max_column_subsets`. When both budgets run out the result is
    /// unverified and carries the designed bound.
    pub fn min_distance(&self, caps: &SearchCaps) -> DistanceOutcome {
        if self.k == 0 {
            return DistanceOutcome::Unverified {
                designed: None,
                no_word_below: self.n + 1,
            };
        }
        if self.k < 64 && 1u64 << self.k <= caps.max_codewords {
            return DistanceOutcome::Exact(search::min_weight_enumerated(&self.generator));
        }
        match search::min_weight_by_columns(&self.check, caps.max_column_subsets) {
            DistanceOutcome::Exact(d) => DistanceOutcome::Exact(d),
            DistanceOutcome::Unverified { no_word_below, .. } => DistanceOutcome::Unverified {
                designed: self.designed_distance,
                no_word_below,
            },
        }
    }

    /// Codeword-space enumeration regardless of caps; the caller is
    /// responsible for keeping 2^k sane.
    pub fn min_distance_enumerated(&self) -> usize {
        search::min_weight_enumerated(&self.generator)
    }

    /// Column-dependency search regardless of the enumeration route.
    pub fn min_distance_by_columns(&self, max_subsets: u64) -> DistanceOutcome {
        search::min_weight_by_columns(&self.check, max_subsets)
    }
}
