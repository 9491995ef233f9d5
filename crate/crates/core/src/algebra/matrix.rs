use std::fmt;

use super::field::{Field, FieldElem};
use crate::error::{Error, Result};
use crate::subset::GroundSubset;

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        *self.field == *other.field && self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Mat {}

impl Mat {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<FieldElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, got: data.len() });
        }
        if let Some(&bad) = data.iter().find(|&&x| !field.contains(x as u64)) {
            return Err(Error::InvalidEntry { value: bad as u64, q: field.order() });
        }
        Ok(Mat { field, rows, cols, data })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }

    /// Rows of element codes; all rows must have equal length.
    pub fn from_rows(field: Field, rows: &[Vec<FieldElem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
        }
        Mat::new(field, rows.len(), cols, rows.concat())
    }

    /// Rows of integers mapped into the prime subfield, so `-1` becomes `p - 1`.
    pub fn from_int_rows(field: Field, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<FieldElem>> = rows.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect();
        Mat::from_rows(field, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    fn check_columns(&self, cols: GroundSubset) -> Result<()> {
        match cols.max_element() {
            Some(c) if c > self.cols => Err(Error::ColumnOutOfRange { col: c, cols: self.cols }),
            _ => Ok(()),
        }
    }

    /// Rank of the columns indexed by `cols` (1-based).
    pub fn rank_of_columns(&self, cols: GroundSubset) -> Result<usize> {
        self.check_columns(cols)?;
        let idx: Vec<usize> = cols.iter().map(|c| c - 1).collect();
        let width = idx.len();
        let mut work: Vec<FieldElem> = Vec::with_capacity(self.rows * width);
        for i in 0..self.rows {
            work.extend(idx.iter().map(|&j| self.get(i, j)));
        }
        Ok(eliminate(&self.field, &mut work, self.rows, width).len())
    }

    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        eliminate(&self.field, &mut work, self.rows, self.cols).len()
    }

    /// Reduced row echelon form and pivot columns (0-based).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut work = self.data.clone();
        let pivots = eliminate(&self.field, &mut work, self.rows, self.cols);
        (Mat { field: self.field.clone(), rows: self.rows, cols: self.cols, data: work }, pivots)
    }

    /// Basis of the right kernel, one row per free column in increasing order.
    pub fn nullspace_basis(&self) -> Result<Mat> {
        let (r, pivots) = self.rref();
        if pivots.len() < self.rows {
            return Err(Error::NotFullRowRank { rank: pivots.len(), rows: self.rows });
        }
        let f = &self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zeros(f.clone(), free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(r.get(i, fc)));
            }
        }
        Ok(out)
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let f = &self.field;
        let mut out = Mat::zeros(f.clone(), self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let v = self.row(i).iter().zip(other.row(j)).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    /// Row vector `coeffs * self`.
    pub fn combine_rows(&self, coeffs: &[FieldElem]) -> Vec<FieldElem> {
        let f = &self.field;
        let mut v = vec![0; self.cols];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (slot, &x) in v.iter_mut().zip(self.row(i)) {
                *slot = f.add(*slot, f.mul(c, x));
            }
        }
        v
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }
}

/// In-place Gauss-Jordan elimination. Pivots on the first nonzero entry of each
/// column; returns pivot columns.
fn eliminate(f: &Field, m: &mut [FieldElem], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for c in 0..cols {
        if prow == rows {
            break;
        }
        let Some(r) = (prow..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if r != prow {
            for j in 0..cols {
                m.swap(r * cols + j, prow * cols + j);
            }
        }
        let inv = f.inv(m[prow * cols + c]);
        for j in c..cols {
            m[prow * cols + j] = f.mul(m[prow * cols + j], inv);
        }
        for r2 in 0..rows {
            let factor = m[r2 * cols + c];
            if r2 == prow || factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = f.mul(factor, m[prow * cols + j]);
                m[r2 * cols + j] = f.sub(m[r2 * cols + j], sub);
            }
        }
        pivots.push(c);
        prow += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;
    use proptest::prelude::*;

    fn gf(p: u64) -> Field {
        make_field(p, 1).unwrap()
    }

    #[test]
    fn rank_of_selected_columns() {
        let g = Mat::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(g.rank_of_columns(GroundSubset::from_elements([1, 2])).unwrap(), 2);
        assert_eq!(g.rank_of_columns(GroundSubset::from_elements([1, 2, 3])).unwrap(), 2);
        assert_eq!(g.rank_of_columns(GroundSubset::from_elements([3])).unwrap(), 1);
        assert_eq!(g.rank_of_columns(GroundSubset::EMPTY).unwrap(), 0);
        assert_eq!(
            g.rank_of_columns(GroundSubset::from_elements([4])).unwrap_err(),
            Error::ColumnOutOfRange { col: 4, cols: 3 }
        );
    }

    #[test]
    fn nullspace_of_small_code() {
        let g = Mat::from_int_rows(gf(2), &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        let h = g.nullspace_basis().unwrap();
        assert_eq!(h, Mat::from_int_rows(gf(2), &[&[1, 1, 1]]).unwrap());
    }

    #[test]
    fn nullspace_of_block_identity() {
        let g = Mat::from_int_rows(gf(3), &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]]).unwrap();
        let h = g.nullspace_basis().unwrap();
        let expected = Mat::from_int_rows(gf(3), &[&[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]]);
        assert_eq!(h, expected.unwrap());
    }

    #[test]
    fn nullspace_of_standard_form_is_p_then_identity() {
        // G = [I_2 | -P^T] with P = I_2, over GF(3) so the sign is visible.
        let g = Mat::from_int_rows(gf(3), &[&[1, 0, -1, 0], &[0, 1, 0, -1]]).unwrap();
        let h = g.nullspace_basis().unwrap();
        let expected = Mat::from_int_rows(gf(3), &[&[1, 0, 1, 0], &[0, 1, 0, 1]]).unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn nullspace_requires_full_row_rank() {
        let g = Mat::from_int_rows(gf(2), &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(g.nullspace_basis().unwrap_err(), Error::NotFullRowRank { rank: 1, rows: 2 });
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(matches!(Mat::new(gf(3), 1, 2, vec![1, 3]), Err(Error::InvalidEntry { value: 3, q: 3 })));
        assert!(matches!(Mat::new(gf(3), 1, 2, vec![1]), Err(Error::DimensionMismatch { .. })));
    }

    fn arb_matrix() -> impl Strategy<Value = Mat> {
        (prop_oneof![Just((2u64, 1u32)), Just((3, 1)), Just((2, 2)), Just((5, 1))], 1usize..5, 1usize..8).prop_flat_map(
            |((p, e), rows, cols)| {
                let q = p.pow(e) as u8;
                proptest::collection::vec(0..q, rows * cols)
                    .prop_map(move |data| Mat::new(make_field(p, e).unwrap(), rows, cols, data).unwrap())
            },
        )
    }

    proptest! {
        #[test]
        fn nullspace_rows_are_orthogonal(m in arb_matrix()) {
            let (r, pivots) = m.rref();
            // Use the nonzero rows of the RREF so the input has full row rank.
            let k = pivots.len();
            prop_assume!(k > 0 && k < m.cols());
            let g = Mat::from_rows(m.field().clone(), &(0..k).map(|i| r.row(i).to_vec()).collect::<Vec<_>>()).unwrap();
            let h = g.nullspace_basis().unwrap();
            prop_assert_eq!(h.rows(), m.cols() - k);
            prop_assert_eq!(h.rank(), m.cols() - k);
            prop_assert!(g.mul_transpose(&h).unwrap().is_zero());
        }

        #[test]
        fn rank_of_columns_is_monotone(m in arb_matrix(), a in 0u64..256, b in 0u64..256) {
            let full = GroundSubset::full(m.cols()).mask();
            let a = GroundSubset::from_mask(a & full);
            let b = GroundSubset::from_mask((a.mask() | b) & full);
            let ra = m.rank_of_columns(a).unwrap();
            let rb = m.rank_of_columns(b).unwrap();
            prop_assert!(ra <= rb);
            prop_assert!(rb <= ra + b.difference(a).len());
        }
    }
}
