//! Linear codes over GF(q) and their generalized Hamming weights.

use crate::algebra::{Field, FieldElem, Mat};
use crate::error::{Error, Result};
use crate::matroid::{Matroid, DEFAULT_GUARD};
use crate::subset::{k_subsets, GroundSubset, MAX_GROUND};
use crate::weights::{ghw, GhwSequence, GhwSource};

/// Codeword enumeration is used for the minimum distance up to this many codewords.
const MAX_CODEWORDS: u64 = 1 << 20;

/// A code given by a full-rank generator matrix, with a parity-check matrix
/// computed as a kernel basis.
#[derive(Clone, Debug)]
pub struct LinearCode {
    gen: Mat,
    parity: Mat,
    zero_columns: GroundSubset,
    guard: usize,
}

impl LinearCode {
    /// Requires full row rank and `1 <= k < n`.
    pub fn new(gen: Mat) -> Result<Self> {
        if gen.rows() == 0 || gen.rows() >= gen.cols() {
            return Err(Error::BadParams(format!("a code needs 1 <= k < n, got k={}, n={}", gen.rows(), gen.cols())));
        }
        Self::build(gen)
    }

    /// Also accepts `k = n`, whose parity-check matrix has no rows.
    pub fn new_allow_degenerate(gen: Mat) -> Result<Self> {
        if gen.rows() == 0 || gen.rows() > gen.cols() {
            return Err(Error::BadParams(format!("a code needs 1 <= k <= n, got k={}", gen.rows())));
        }
        Self::build(gen)
    }

    fn build(gen: Mat) -> Result<Self> {
        let parity = gen.nullspace_basis()?;
        let zero_columns =
            (1..=gen.cols().min(MAX_GROUND)).filter(|&j| gen.column(j - 1).iter().all(|&x| x == 0)).collect();
        Ok(LinearCode { gen, parity, zero_columns, guard: DEFAULT_GUARD })
    }

    pub fn with_guard(mut self, guard: usize) -> Self {
        self.guard = guard;
        self
    }

    pub fn k(&self) -> usize {
        self.gen.rows()
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn field(&self) -> &Field {
        self.gen.field()
    }

    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    pub fn parity_check(&self) -> &Mat {
        &self.parity
    }

    /// Columns that vanish in every codeword.
    pub fn zero_columns(&self) -> GroundSubset {
        self.zero_columns
    }

    pub fn is_degenerate(&self) -> bool {
        self.k() == self.n()
    }

    /// Column matroid of the generator matrix.
    pub fn matroid(&self) -> Result<Matroid> {
        Ok(Matroid::from_matrix(self.gen.clone())?.with_guard(self.guard))
    }

    fn check_r(&self, r: usize) -> Result<()> {
        if r == 0 || r > self.k() {
            return Err(Error::ROutOfRange { r, max: self.k() });
        }
        let limit = self.guard.min(MAX_GROUND);
        if self.n() > limit {
            return Err(Error::GroundSetTooLarge { n: self.n(), guard: limit });
        }
        Ok(())
    }

    /// Smallest `|J|` with `|J| - rank(H_J) >= r`, scanning sizes from `from` up.
    fn wei_from(&self, r: usize, from: usize) -> usize {
        (from..=self.n())
            .find(|&size| {
                k_subsets(self.n(), size)
                    .any(|j| size - self.parity.rank_of_columns(j).expect("columns inside the code") >= r)
            })
            .expect("the full support has nullity k")
    }
}

pub fn dual_code(c: &LinearCode) -> Result<LinearCode> {
    let mut d = LinearCode::new_allow_degenerate(c.parity.clone())?;
    d.guard = c.guard;
    Ok(d)
}

/// `d_r(C)` by enumerating column subsets of the parity-check matrix.
pub fn ghw_wei(c: &LinearCode, r: usize) -> Result<u64> {
    c.check_r(r)?;
    Ok(c.wei_from(r, r) as u64)
}

/// All weights `d_1, ..., d_k`, each search starting just above the previous value.
pub fn ghw_wei_all(c: &LinearCode) -> Result<GhwSequence> {
    c.check_r(1)?;
    let mut values = Vec::with_capacity(c.k());
    let mut prev = 0;
    for r in 1..=c.k() {
        prev = c.wei_from(r, prev + 1);
        values.push(prev as u64);
    }
    GhwSequence::new(values, GhwSource::Code)
}

/// `d_r(C) = d_r(M(C)*)`.
pub fn ghw_via_matroid(c: &LinearCode, r: usize) -> Result<u64> {
    c.check_r(r)?;
    Ok(ghw(&c.matroid()?.dual())?.get(r))
}

pub fn weight(v: &[FieldElem]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Minimum weight of a nonzero codeword. Enumerates codewords when there are at
/// most 2^20 of them and falls back to [`ghw_wei`] otherwise.
pub fn min_distance(c: &LinearCode) -> Result<u64> {
    let q = c.field().order() as u64;
    let total = q.checked_pow(c.k() as u32).filter(|&t| t <= MAX_CODEWORDS);
    let Some(total) = total else {
        return ghw_wei(c, 1);
    };
    let mut coeffs = vec![0 as FieldElem; c.k()];
    let mut best = u64::MAX;
    for _ in 1..total {
        for x in coeffs.iter_mut() {
            *x += 1;
            if (*x as u64) < q {
                break;
            }
            *x = 0;
        }
        best = best.min(weight(&c.gen.combine_rows(&coeffs)) as u64);
    }
    Ok(best)
}
