//! Generalized Hamming weights of matroids and subadditivity of their sequences.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{sort_canonical, GroundSubset};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GhwSource {
    Code,
    Matroid,
    Formula,
}

/// A strictly increasing sequence `d_1 < d_2 < ... < d_D`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GhwSequence {
    values: Vec<u64>,
    source: GhwSource,
}

impl GhwSequence {
    pub fn new(values: Vec<u64>, source: GhwSource) -> Result<Self> {
        check_increasing(&values)?;
        Ok(GhwSequence { values, source })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn source(&self) -> GhwSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `d_r`, 1-based. Panics when `r` is out of range.
    pub fn get(&self, r: usize) -> u64 {
        self.values[r - 1]
    }
}

fn check_increasing(values: &[u64]) -> Result<()> {
    if values.is_empty() || values[0] == 0 {
        return Err(Error::InvalidSequence);
    }
    match values.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(Error::NotStrictlyIncreasing(i + 2)),
        None => Ok(()),
    }
}

fn require_dual_rank(m: &Matroid) -> Result<usize> {
    match m.corank_total() {
        0 => Err(Error::RankHypothesisViolated(
            "the dual has rank 0, so there are no generalized Hamming weights".into(),
        )),
        c => Ok(c),
    }
}

/// `d_r(M)` for `r = 1..rk(M*)`: `n` minus the largest flat of `M*` of rank `rk(M*) - r`.
pub fn ghw(m: &Matroid) -> Result<GhwSequence> {
    let c = require_dual_rank(m)?;
    let dual = m.dual();
    let lattice = dual.flat_lattice()?;
    let n = m.n() as u64;
    let values = (1..=c).map(|r| n - lattice[c - r].iter().map(|f| f.len() as u64).max().unwrap_or(0)).collect();
    GhwSequence::new(values, GhwSource::Matroid)
}

/// Circuits of `E^{r-1}(M)`, read off as complements of the flats of `M*` of rank `rk(M*) - r`.
pub fn elongation_circuits(m: &Matroid, r: usize) -> Result<Vec<GroundSubset>> {
    let c = require_dual_rank(m)?;
    if r == 0 || r > c {
        return Err(Error::ROutOfRange { r, max: c });
    }
    let dual = m.dual();
    let mut out: Vec<GroundSubset> = dual.flats_of_rank(c - r)?.iter().map(|f| f.complement(m.n())).collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// A pair breaking one of the subadditivity conditions (1-based indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// `a_{i+j} > a_i + a_j`.
    Subadditive { i: usize, j: usize },
    /// `d_r + d_D > d_t + d_{D+r-t}`.
    Extended { r: usize, t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubadditivityReport {
    /// Entry `r - 1` is true when `a_r <= a_i + a_j` for all `i + j = r`.
    pub subadditive_term: Vec<bool>,
    /// Same with strict inequality.
    pub strictly_subadditive_term: Vec<bool>,
    pub is_subadditive: bool,
    pub is_extended_subadditive: bool,
    pub witnesses: Vec<Witness>,
}

impl SubadditivityReport {
    pub fn is_subadditive_term(&self, r: usize) -> bool {
        self.subadditive_term[r - 1]
    }

    pub fn is_strictly_subadditive_term(&self, r: usize) -> bool {
        self.strictly_subadditive_term[r - 1]
    }
}

/// Classifies a strictly increasing sequence.
pub fn classify(values: &[u64]) -> Result<SubadditivityReport> {
    check_increasing(values)?;
    Ok(subadditivity_profile(values))
}

/// Classification without the monotonicity requirement.
pub fn subadditivity_profile(a: &[u64]) -> SubadditivityReport {
    let len = a.len();
    let mut witnesses = Vec::new();
    let mut sub = vec![true; len];
    let mut strict = vec![true; len];
    for l in 2..=len {
        for i in 1..=l / 2 {
            let j = l - i;
            let bound = a[i - 1] + a[j - 1];
            if a[l - 1] >= bound {
                strict[l - 1] = false;
            }
            if a[l - 1] > bound {
                sub[l - 1] = false;
                witnesses.push(Witness::Subadditive { i, j });
            }
        }
    }
    let is_subadditive = sub.iter().all(|&b| b);
    let mut extended_ok = true;
    for r in 1..len {
        for t in r + 1..=len {
            if a[r - 1] + a[len - 1] > a[t - 1] + a[len + r - t - 1] {
                extended_ok = false;
                witnesses.push(Witness::Extended { r, t });
            }
        }
    }
    SubadditivityReport {
        subadditive_term: sub,
        strictly_subadditive_term: strict,
        is_subadditive,
        is_extended_subadditive: is_subadditive && extended_ok,
        witnesses,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PavingProfile {
    pub is_paving: bool,
    pub dual_is_paving: bool,
    pub is_sparse_paving: bool,
    pub is_matroid_design: bool,
}

/// Paving data from `d_1`, `d_2` and the sizes of the rank-`(k-1)` flats.
pub fn paving_profile(m: &Matroid) -> Result<PavingProfile> {
    let (k, n) = (m.rank_total(), m.n());
    if k < 2 || k >= n {
        return Err(Error::RankHypothesisViolated(format!("paving profile needs 2 <= k <= n-1, got k={k}, n={n}")));
    }
    let d = ghw(m)?;
    let k64 = k as u64;
    let is_paving = d.get(1) >= k64;
    // A rank-1 dual is always paving.
    let dual_is_paving = if k + 2 <= n { d.get(2) == k64 + 2 } else { true };
    let sizes: Vec<usize> = m.flats_of_rank(k - 1)?.iter().map(|f| f.len()).collect();
    Ok(PavingProfile {
        is_paving,
        dual_is_paving,
        is_sparse_paving: is_paving && dual_is_paving,
        is_matroid_design: sizes.windows(2).all(|w| w[0] == w[1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{uniform, vamos};
    use proptest::prelude::*;

    #[test]
    fn vamos_weights() {
        assert_eq!(ghw(&vamos()).unwrap().values(), &[4, 6, 7, 8]);
        assert_eq!(ghw(&vamos().dual()).unwrap().values(), &[4, 6, 7, 8]);
    }

    #[test]
    fn uniform_weights() {
        assert_eq!(ghw(&uniform(3, 5).unwrap()).unwrap().values(), &[4, 5]);
        assert!(matches!(ghw(&uniform(4, 4).unwrap()), Err(Error::RankHypothesisViolated(_))));
    }

    #[test]
    fn classify_examples() {
        let v = classify(&[4, 6, 7, 8]).unwrap();
        assert!(v.is_subadditive && v.is_extended_subadditive && v.witnesses.is_empty());

        let r = classify(&[2, 3, 5]).unwrap();
        assert!(r.is_subadditive);
        assert!(!r.is_extended_subadditive);
        // r = 1, t = 2: d_1 + d_3 = 7 > d_2 + d_2 = 6
        assert_eq!(r.witnesses, vec![Witness::Extended { r: 1, t: 2 }]);

        let r = classify(&[2, 3, 6]).unwrap();
        assert!(!r.is_subadditive);
        assert!(!r.is_subadditive_term(3));
        assert_eq!(r.witnesses[0], Witness::Subadditive { i: 1, j: 2 });

        assert_eq!(classify(&[3, 3]).unwrap_err(), Error::NotStrictlyIncreasing(2));
        assert_eq!(classify(&[]).unwrap_err(), Error::InvalidSequence);
    }

    #[test]
    fn first_term_is_always_strict() {
        let r = classify(&[5, 100, 200]).unwrap();
        assert!(r.is_subadditive_term(1) && r.is_strictly_subadditive_term(1));
        assert!(!r.is_subadditive_term(2));
    }

    #[test]
    fn paving_profiles() {
        for (k, n) in [(2, 4), (3, 6), (2, 6), (4, 7)] {
            let p = paving_profile(&uniform(k, n).unwrap()).unwrap();
            assert!(p.is_paving && p.dual_is_paving && p.is_sparse_paving && p.is_matroid_design);
        }
        let p = paving_profile(&vamos()).unwrap();
        assert!(p.is_sparse_paving);
        assert!(!p.is_matroid_design);
        assert!(matches!(paving_profile(&uniform(1, 3).unwrap()), Err(Error::RankHypothesisViolated(_))));
    }

    fn brute_classify(a: &[u64]) -> (Vec<bool>, Vec<bool>, bool) {
        let len = a.len();
        let sub: Vec<bool> = (1..=len).map(|l| (1..l).all(|i| a[l - 1] <= a[i - 1] + a[l - i - 1])).collect();
        let strict: Vec<bool> = (1..=len).map(|l| (1..l).all(|i| a[l - 1] < a[i - 1] + a[l - i - 1])).collect();
        // Extended: the sequence d_1..d_D, d_D + d_1, ..., d_D + d_D is subadditive.
        let mut ext: Vec<u64> = a.to_vec();
        ext.extend(a.iter().map(|x| x + a[len - 1]));
        let extended = (1..=ext.len()).all(|l| (1..l).all(|i| ext[l - 1] <= ext[i - 1] + ext[l - i - 1]));
        (sub, strict, extended)
    }

    proptest! {
        #[test]
        fn classify_matches_brute_force(steps in proptest::collection::vec(1u64..6, 1..8), start in 1u64..6) {
            let mut a = vec![start];
            for s in steps.iter().skip(1) {
                a.push(a.last().unwrap() + s);
            }
            let rep = classify(&a).unwrap();
            let (sub, strict, extended) = brute_classify(&a);
            prop_assert_eq!(&rep.subadditive_term, &sub);
            prop_assert_eq!(&rep.strictly_subadditive_term, &strict);
            prop_assert_eq!(rep.is_extended_subadditive, extended);
            prop_assert!(!rep.is_extended_subadditive || rep.is_subadditive);
            prop_assert_eq!(rep.witnesses.is_empty(), rep.is_extended_subadditive);
        }
    }
}
