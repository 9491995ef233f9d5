//! Named matroids and codes used as fixtures, plus closed-form weight sequences.

use crate::algebra::{make_field, Field, FieldElem, Mat};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, GroundSubset};
use crate::weights::{GhwSequence, GhwSource};

pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
    Matroid::uniform(k, n)
}

/// The four-element circuits removed from the 4-subsets of `{1, ..., 8}`.
pub const VAMOS_CIRCUIT_HYPERPLANES: [[usize; 4]; 5] =
    [[1, 2, 3, 4], [1, 4, 5, 6], [2, 3, 5, 6], [1, 4, 7, 8], [2, 3, 7, 8]];

/// The Vámos matroid: rank 4 on 8 elements, 65 bases.
pub fn vamos() -> Matroid {
    let removed: Vec<GroundSubset> =
        VAMOS_CIRCUIT_HYPERPLANES.iter().map(|c| GroundSubset::from_elements(c.iter().copied())).collect();
    let bases = k_subsets(8, 4).filter(|b| !removed.contains(b)).collect();
    Matroid::from_bases(8, bases).expect("the Vámos bases satisfy exchange")
}

/// A Steiner system `S(t, k, n)`: every `t`-subset lies in exactly one block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerSystem {
    n: usize,
    t: usize,
    k: usize,
    blocks: Vec<GroundSubset>,
}

impl SteinerSystem {
    pub fn new(n: usize, t: usize, k: usize, blocks: Vec<GroundSubset>) -> Result<Self> {
        if !(1 <= t && t < k && k < n && n <= 64) {
            return Err(Error::BadParams(format!("need 1 <= t < k < n <= 64, got t={t}, k={k}, n={n}")));
        }
        let full = GroundSubset::full(n);
        if let Some(b) = blocks.iter().find(|b| b.len() != k || !b.is_subset(full)) {
            return Err(Error::BadParams(format!("block {b} is not a {k}-subset of 1..={n}")));
        }
        let mut subsets: Vec<GroundSubset> = k_subsets(n, t).collect();
        crate::subset::sort_canonical(&mut subsets);
        for subset in subsets {
            let count = blocks.iter().filter(|b| subset.is_subset(**b)).count();
            if count != 1 {
                return Err(Error::InvalidSteiner { subset, count });
            }
        }
        Ok(SteinerSystem { n, t, k, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn blocks(&self) -> &[GroundSubset] {
        &self.blocks
    }
}

/// Blocks of the Fano plane `S(2, 3, 7)`.
pub const FANO_BLOCKS: [[usize; 3]; 7] = [[1, 2, 4], [1, 3, 5], [2, 3, 6], [1, 6, 7], [2, 5, 7], [3, 4, 7], [4, 5, 6]];

pub fn fano() -> SteinerSystem {
    let blocks = FANO_BLOCKS.iter().map(|b| GroundSubset::from_elements(b.iter().copied())).collect();
    SteinerSystem::new(7, 2, 3, blocks).expect("the Fano plane is a Steiner system")
}

/// Rank-`k` matroid whose bases are the `k`-subsets that are not blocks.
pub fn steiner_matroid(s: &SteinerSystem) -> Matroid {
    let bases = k_subsets(s.n, s.k).filter(|b| !s.blocks.contains(b)).collect();
    Matroid::from_bases(s.n, bases).expect("blocks of a Steiner system are circuit-hyperplanes")
}

/// First-order Reed-Muller code: an all-ones row above the points of GF(q)^m in
/// increasing lexicographic order.
pub fn reed_muller_code(field: &Field, m: usize) -> Result<LinearCode> {
    let q = field.order();
    let n = (q as u64).checked_pow(m as u32).filter(|&n| n <= 512);
    let Some(n) = n else {
        return Err(Error::TooLarge(format!("q^m exceeds 512 for q={q}, m={m}")));
    };
    if m == 0 {
        return Err(Error::BadParams("m must be at least 1".into()));
    }
    let n = n as usize;
    let mut g = Mat::zeros(field.clone(), m + 1, n);
    for col in 0..n {
        g.set(0, col, 1);
        let mut rest = col;
        for row in (1..=m).rev() {
            g.set(row, col, (rest % q) as FieldElem);
            rest /= q;
        }
    }
    LinearCode::new(g)
}

/// Binary simplex code: all nonzero points of GF(2)^m as columns, ordered by
/// weight and then lexicographically from the largest. For `m = 3` this is
/// `[e1 e2 e3 e1+e2 e1+e3 e2+e3 e1+e2+e3]`.
pub fn dual_hamming_code(m: usize) -> Result<LinearCode> {
    if !(2..=8).contains(&m) {
        return Err(Error::BadParams(format!("dual Hamming code needs 2 <= m <= 8, got {m}")));
    }
    let field = make_field(2, 1)?;
    let point = |v: usize| -> Vec<FieldElem> { (0..m).map(|i| (v >> (m - 1 - i) & 1) as FieldElem).collect() };
    let mut points: Vec<usize> = (1..1 << m).collect();
    points.sort_by_key(|&v| (v.count_ones(), std::cmp::Reverse(v)));
    let mut g = Mat::zeros(field, m, points.len());
    for (col, &v) in points.iter().enumerate() {
        for (row, x) in point(v).into_iter().enumerate() {
            g.set(row, col, x);
        }
    }
    LinearCode::new(g)
}

fn standard_form(field: &Field, k: usize, minus_pt: impl Fn(usize) -> Vec<bool>) -> Result<LinearCode> {
    let cols: Vec<Vec<bool>> = (0..k).map(minus_pt).collect();
    let l = cols[0].len();
    let minus_one = field.neg(1);
    let mut g = Mat::zeros(field.clone(), k, k + l);
    for (i, col) in cols.iter().enumerate() {
        g.set(i, i, 1);
        for (j, &on) in col.iter().enumerate() {
            if on {
                g.set(i, k + j, minus_one);
            }
        }
    }
    LinearCode::new(g)
}

/// `G = [I_k | -P^T]` where row block `i` of `P` has `n_i` rows with a single 1 in column `i`.
pub fn complete_intersection_code(field: &Field, sizes: &[usize]) -> Result<LinearCode> {
    let k = sizes.len();
    if k < 2 || sizes.contains(&0) || sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadParams(format!("need at least two positive nondecreasing block sizes, got {sizes:?}")));
    }
    let l: usize = sizes.iter().sum();
    let starts: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &x| {
            let s = *acc;
            *acc += x;
            Some(s)
        })
        .collect();
    standard_form(field, k, |i| (0..l).map(|j| j >= starts[i] && j < starts[i] + sizes[i]).collect())
}

/// `G = [I_k | -J]` with `J` the all-ones `k x l` matrix.
pub fn all_ones_code(field: &Field, k: usize, l: usize) -> Result<LinearCode> {
    if k < 2 || l < 2 {
        return Err(Error::BadParams(format!("need k, l >= 2, got k={k}, l={l}")));
    }
    standard_form(field, k, |_| vec![true; l])
}

/// `[n, k]` code with columns `(1, a, ..., a^(k-1))` for the first `n` field elements.
pub fn vandermonde_code(field: &Field, k: usize, n: usize) -> Result<LinearCode> {
    if k == 0 || k >= n || n > field.order() {
        return Err(Error::BadParams(format!("need 1 <= k < n <= q, got k={k}, n={n}")));
    }
    let mut g = Mat::zeros(field.clone(), k, n);
    for col in 0..n {
        let a = col as FieldElem;
        let mut x: FieldElem = 1;
        for row in 0..k {
            g.set(row, col, x);
            x = field.mul(x, a);
        }
    }
    LinearCode::new(g)
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Splits a prime power `q` into `(p, e)`.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::BadParams(format!("{q} is not a prime power")))?;
    make_field(p, e)
}

/// `d_i = d (q^i - 1) / (q^(i-1) (q - 1))` for `i = 1..k`.
pub fn constant_weight_ghw(q: u64, k: usize, d: u64) -> Result<GhwSequence> {
    if prime_power(q).is_none() {
        return Err(Error::BadParams(format!("{q} is not a prime power")));
    }
    if k == 0 || d == 0 {
        return Err(Error::BadParams("k and d must be positive".into()));
    }
    let divisor = q.checked_pow(k as u32 - 1).ok_or_else(|| Error::TooLarge(format!("{q}^{}", k - 1)))?;
    if !d.is_multiple_of(divisor) {
        return Err(Error::DivisibilityViolated { d, divisor });
    }
    let values = (1..=k as u32).map(|i| d * (q.pow(i) - 1) / (q.pow(i - 1) * (q - 1))).collect();
    GhwSequence::new(values, GhwSource::Formula)
}

/// A `[13, 3]` ternary code whose nonzero codewords all have weight 9.
pub fn constant_weight_fixture() -> LinearCode {
    let field = make_field(3, 1).expect("GF(3)");
    let g = Mat::from_int_rows(
        field,
        &[
            &[1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2],
            &[0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2],
            &[0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        ],
    )
    .expect("literal matrix");
    LinearCode::new(g).expect("full row rank")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{ghw_wei_all, min_distance};
    use crate::weights::{classify, ghw};

    fn s(e: &[usize]) -> GroundSubset {
        GroundSubset::from_elements(e.iter().copied())
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(uniform(2, 4).unwrap().circuits().unwrap().len(), 4);
        assert_eq!(uniform(1, 2).unwrap().circuits().unwrap(), &[s(&[1, 2])]);
        for (k, n) in [(0, 3), (2, 5), (5, 5)] {
            assert!(uniform(k, n).unwrap().dual().same_ranks(&uniform(n - k, n).unwrap()).unwrap());
        }
        assert!(matches!(uniform(4, 3), Err(Error::BadParams(_))));
    }

    #[test]
    fn vamos_facts() {
        let v = vamos();
        assert_eq!(v.bases().unwrap().len(), 65);
        assert_eq!(v.rank(s(&[2, 3, 7, 8])).unwrap(), 3);
        assert!(k_subsets(8, 3).all(|a| v.is_independent(a).unwrap()));
    }

    #[test]
    fn fano_matroid() {
        let m = steiner_matroid(&fano());
        assert_eq!(m.rank_total(), 3);
        assert_eq!(m.bases().unwrap().len(), 28);
        assert!(m.is_sparse_paving().unwrap());
    }

    #[test]
    fn steiner_validation_names_the_pair() {
        let mut blocks: Vec<GroundSubset> = fano().blocks().to_vec();
        blocks.pop();
        let err = SteinerSystem::new(7, 2, 3, blocks).unwrap_err();
        assert_eq!(err, Error::InvalidSteiner { subset: s(&[4, 5]), count: 0 });
    }

    #[test]
    fn reed_muller_weights() {
        let rm = reed_muller_code(&make_field(2, 1).unwrap(), 3).unwrap();
        assert_eq!((rm.k(), rm.n()), (4, 8));
        assert_eq!(ghw_wei_all(&rm).unwrap().values(), &[4, 6, 7, 8]);
        let rm = reed_muller_code(&make_field(3, 1).unwrap(), 2).unwrap();
        assert_eq!(ghw_wei_all(&rm).unwrap().values(), &[6, 8, 9]);
        assert!(matches!(reed_muller_code(&make_field(2, 1).unwrap(), 10), Err(Error::TooLarge(_))));
    }

    #[test]
    fn dual_hamming_matches_the_displayed_matrix() {
        let h = dual_hamming_code(3).unwrap();
        let f = make_field(2, 1).unwrap();
        let expected =
            Mat::from_int_rows(f, &[&[1, 0, 0, 1, 1, 0, 1], &[0, 1, 0, 1, 0, 1, 1], &[0, 0, 1, 0, 1, 1, 1]]).unwrap();
        assert_eq!(h.generator(), &expected);
        assert_eq!(ghw_wei_all(&h).unwrap().values(), &[4, 6, 7]);
        assert_eq!(ghw_wei_all(&dual_hamming_code(2).unwrap()).unwrap().values(), &[2, 3]);
    }

    #[test]
    fn standard_form_codes() {
        let f2 = make_field(2, 1).unwrap();
        let ci = complete_intersection_code(&f2, &[1, 2, 3]).unwrap();
        assert_eq!((ci.k(), ci.n()), (3, 9));
        assert_eq!(ghw_wei_all(&ci).unwrap().values(), &[2, 5, 9]);
        assert_eq!(ghw_wei_all(&all_ones_code(&f2, 3, 3).unwrap()).unwrap().values(), &[2, 3, 6]);
        assert_eq!(ghw_wei_all(&all_ones_code(&f2, 2, 2).unwrap()).unwrap().values(), &[2, 4]);
        assert!(matches!(complete_intersection_code(&f2, &[2, 1]), Err(Error::BadParams(_))));
        assert!(matches!(all_ones_code(&f2, 1, 3), Err(Error::BadParams(_))));
    }

    #[test]
    fn vandermonde_is_mds() {
        let c = vandermonde_code(&make_field(5, 1).unwrap(), 2, 5).unwrap();
        assert_eq!(min_distance(&c).unwrap(), 4);
        assert_eq!(ghw_wei_all(&c).unwrap().values(), &[4, 5]);
    }

    #[test]
    fn constant_weight_sequences() {
        assert_eq!(constant_weight_ghw(3, 3, 9).unwrap().values(), &[9, 12, 13]);
        assert_eq!(constant_weight_ghw(2, 2, 2).unwrap().values(), &[2, 3]);
        assert!(classify(constant_weight_ghw(3, 3, 9).unwrap().values()).unwrap().is_extended_subadditive);
        assert_eq!(constant_weight_ghw(3, 3, 6).unwrap_err(), Error::DivisibilityViolated { d: 6, divisor: 9 });
        assert!(matches!(constant_weight_ghw(6, 2, 6), Err(Error::BadParams(_))));
    }

    #[test]
    fn constant_weight_fixture_facts() {
        let c = constant_weight_fixture();
        assert_eq!(min_distance(&c).unwrap(), 9);
        assert_eq!(ghw_wei_all(&c).unwrap().values(), &[9, 12, 13]);
        assert_eq!(ghw(&c.matroid().unwrap().dual()).unwrap().values(), &[9, 12, 13]);
    }
}
