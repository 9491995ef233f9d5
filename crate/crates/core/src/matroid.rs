//! Matroids on at most 64 elements behind a memoized rank oracle.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::Mat;
use crate::error::{Error, Result};
use crate::subset::{k_subsets, sort_canonical, GroundSubset, MAX_GROUND};

/// Default bound on `n` for routines that enumerate subsets.
pub const DEFAULT_GUARD: usize = 24;

#[derive(Clone)]
pub enum Backend {
    Linear(Mat),
    Uniform(usize),
    ExplicitBases(Vec<GroundSubset>),
    Dual(Matroid),
    Elongation(Matroid, usize),
    Truncation(Matroid, usize),
}

struct Inner {
    n: usize,
    rank: usize,
    backend: Backend,
    guard: usize,
    axioms_verified: bool,
    memo: RwLock<HashMap<u64, u8>>,
    bases: OnceLock<Vec<GroundSubset>>,
    circuits: OnceLock<Vec<GroundSubset>>,
    flats: OnceLock<Vec<Vec<GroundSubset>>>,
}

/// A matroid on `{1, ..., n}`. Cloning shares the rank memo.
#[derive(Clone)]
pub struct Matroid(Arc<Inner>);

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match &self.0.backend {
            Backend::Linear(_) => "linear".to_string(),
            Backend::Uniform(_) => "uniform".to_string(),
            Backend::ExplicitBases(b) => format!("{} bases", b.len()),
            Backend::Dual(_) => "dual".to_string(),
            Backend::Elongation(_, r) => format!("elongation by {r}"),
            Backend::Truncation(_, r) => format!("truncation by {r}"),
        };
        write!(f, "Matroid(n={}, rank={}, {kind})", self.0.n, self.0.rank)
    }
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        Err(Error::GroundSetTooLarge { n, guard: MAX_GROUND })
    } else {
        Ok(())
    }
}

impl Matroid {
    fn build(n: usize, rank: usize, backend: Backend, guard: usize, axioms_verified: bool) -> Self {
        Matroid(Arc::new(Inner {
            n,
            rank,
            backend,
            guard,
            axioms_verified,
            memo: RwLock::new(HashMap::new()),
            bases: OnceLock::new(),
            circuits: OnceLock::new(),
            flats: OnceLock::new(),
        }))
    }

    /// Column matroid of a matrix.
    pub fn from_matrix(m: Mat) -> Result<Self> {
        check_ground(m.cols())?;
        let rank = m.rank();
        Ok(Self::build(m.cols(), rank, Backend::Linear(m), DEFAULT_GUARD, true))
    }

    pub fn uniform(k: usize, n: usize) -> Result<Self> {
        check_ground(n)?;
        if k > n {
            return Err(Error::BadParams(format!("uniform matroid needs k <= n, got k={k}, n={n}")));
        }
        Ok(Self::build(n, k, Backend::Uniform(k), DEFAULT_GUARD, true))
    }

    /// Matroid given by its bases. The exchange axiom is checked when `n` is
    /// within the default guard; otherwise [`Matroid::axioms_verified`] is false.
    pub fn from_bases(n: usize, bases: Vec<GroundSubset>) -> Result<Self> {
        check_ground(n)?;
        let full = GroundSubset::full(n);
        if bases.is_empty() {
            return Err(Error::InvalidBases("no bases given".into()));
        }
        if let Some(b) = bases.iter().find(|b| !b.is_subset(full)) {
            return Err(Error::InvalidBases(format!("basis {b} is not inside 1..={n}")));
        }
        let rank = bases[0].len();
        if let Some(b) = bases.iter().find(|b| b.len() != rank) {
            return Err(Error::InvalidBases(format!("basis {b} does not have size {rank}")));
        }
        let mut uniq: Vec<GroundSubset> = bases.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        sort_canonical(&mut uniq);
        let verified = n <= DEFAULT_GUARD;
        if verified {
            verify_exchange(&uniq)?;
        }
        Ok(Self::build(n, rank, Backend::ExplicitBases(uniq), DEFAULT_GUARD, verified))
    }

    /// Same matroid with a different enumeration guard (fresh memo).
    pub fn with_guard(&self, guard: usize) -> Self {
        Self::build(self.0.n, self.0.rank, self.0.backend.clone(), guard, self.0.axioms_verified)
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    /// Rank of the whole ground set.
    pub fn rank_total(&self) -> usize {
        self.0.rank
    }

    /// Rank of the dual, `n - rk(M)`.
    pub fn corank_total(&self) -> usize {
        self.0.n - self.0.rank
    }

    pub fn guard(&self) -> usize {
        self.0.guard
    }

    pub fn backend(&self) -> &Backend {
        &self.0.backend
    }

    /// False when explicit bases were accepted without the exchange check.
    pub fn axioms_verified(&self) -> bool {
        self.0.axioms_verified
    }

    pub fn ground(&self) -> GroundSubset {
        GroundSubset::full(self.0.n)
    }

    pub fn check_subset(&self, a: GroundSubset) -> Result<()> {
        match a.max_element() {
            Some(e) if e > self.0.n => Err(Error::ElementOutOfRange { element: e, n: self.0.n }),
            _ => Ok(()),
        }
    }

    /// Fails when `n` exceeds this matroid's enumeration guard.
    pub fn check_guard(&self) -> Result<()> {
        if self.0.n > self.0.guard {
            Err(Error::GroundSetTooLarge { n: self.0.n, guard: self.0.guard })
        } else {
            Ok(())
        }
    }

    pub fn rank(&self, a: GroundSubset) -> Result<usize> {
        self.check_subset(a)?;
        Ok(self.rk(a))
    }

    /// Rank without the range check; `a` must lie inside the ground set.
    pub(crate) fn rk(&self, a: GroundSubset) -> usize {
        let inner = &*self.0;
        match &inner.backend {
            Backend::Uniform(k) => return a.len().min(*k),
            Backend::Elongation(p, r) => return (p.rk(a) + r).min(a.len()),
            Backend::Truncation(p, r) => return p.rk(a).min(p.rank_total() - r),
            _ => {}
        }
        if let Some(&r) = inner.memo.read().expect("rank memo poisoned").get(&a.mask()) {
            return r as usize;
        }
        let r = match &inner.backend {
            Backend::Linear(m) => m.rank_of_columns(a).expect("subset checked against ground set"),
            Backend::ExplicitBases(bases) => bases.iter().map(|b| b.intersection(a).len()).max().unwrap_or(0),
            Backend::Dual(p) => a.len() + p.rk(a.complement(inner.n)) - p.rank_total(),
            _ => unreachable!(),
        };
        inner.memo.write().expect("rank memo poisoned").insert(a.mask(), r as u8);
        r
    }

    pub fn is_independent(&self, a: GroundSubset) -> Result<bool> {
        Ok(self.rank(a)? == a.len())
    }

    pub fn closure(&self, a: GroundSubset) -> Result<GroundSubset> {
        self.check_subset(a)?;
        Ok(self.cl(a))
    }

    fn cl(&self, a: GroundSubset) -> GroundSubset {
        let r = self.rk(a);
        let extra = a.complement(self.0.n).iter().filter(|&e| self.rk(a.with(e)) == r).collect::<Vec<_>>();
        extra.into_iter().fold(a, |acc, e| acc.with(e))
    }

    pub fn is_flat(&self, a: GroundSubset) -> Result<bool> {
        Ok(self.closure(a)? == a)
    }

    pub fn dual(&self) -> Matroid {
        if let Backend::Dual(p) = &self.0.backend {
            return if p.guard() == self.0.guard { p.clone() } else { p.with_guard(self.0.guard) };
        }
        Self::build(self.0.n, self.corank_total(), Backend::Dual(self.clone()), self.0.guard, self.0.axioms_verified)
    }

    /// `E^r(M)`: independent sets are those of nullity at most `r`.
    pub fn elongate(&self, r: usize) -> Result<Matroid> {
        if r > self.corank_total() {
            return Err(Error::ElongationOutOfRange { r, max: self.corank_total() });
        }
        if r == 0 {
            return Ok(self.clone());
        }
        Ok(Self::build(
            self.0.n,
            self.0.rank + r,
            Backend::Elongation(self.clone(), r),
            self.0.guard,
            self.0.axioms_verified,
        ))
    }

    /// `T^r(M)`: rank clipped at `rk(M) - r`.
    pub fn truncate(&self, r: usize) -> Result<Matroid> {
        if r > self.0.rank {
            return Err(Error::TruncationOutOfRange { r, max: self.0.rank });
        }
        if r == 0 {
            return Ok(self.clone());
        }
        Ok(Self::build(
            self.0.n,
            self.0.rank - r,
            Backend::Truncation(self.clone(), r),
            self.0.guard,
            self.0.axioms_verified,
        ))
    }

    pub fn loops(&self) -> GroundSubset {
        (1..=self.0.n).filter(|&e| self.rk(GroundSubset::singleton(e)) == 0).collect()
    }

    pub fn coloops(&self) -> GroundSubset {
        self.dual().loops()
    }

    /// All bases in canonical order.
    pub fn bases(&self) -> Result<&[GroundSubset]> {
        if let Backend::ExplicitBases(b) = &self.0.backend {
            return Ok(b);
        }
        if let Some(b) = self.0.bases.get() {
            return Ok(b);
        }
        self.check_guard()?;
        let k = self.0.rank;
        let found: Vec<GroundSubset> = k_subsets(self.0.n, k).filter(|&b| self.rk(b) == k).collect();
        let mut found = found;
        sort_canonical(&mut found);
        Ok(self.0.bases.get_or_init(|| found))
    }

    /// Inclusion-minimal dependent sets, ordered by size then lexicographically.
    pub fn circuits(&self) -> Result<&[GroundSubset]> {
        if let Some(c) = self.0.circuits.get() {
            return Ok(c);
        }
        self.check_guard()?;
        let n = self.0.n;
        let mut found: Vec<GroundSubset> = Vec::new();
        for size in 1..=(self.0.rank + 1).min(n) {
            let mut level: Vec<GroundSubset> = k_subsets(n, size)
                .filter(|&a| !found.iter().any(|c| c.is_subset(a)))
                .filter(|&a| self.rk(a) < size)
                .collect();
            sort_canonical(&mut level);
            found.extend(level);
        }
        Ok(self.0.circuits.get_or_init(|| found))
    }

    /// Flats grouped by rank: entry `r` holds the rank-`r` flats in canonical order.
    pub fn flat_lattice(&self) -> Result<&[Vec<GroundSubset>]> {
        if let Some(f) = self.0.flats.get() {
            return Ok(f);
        }
        self.check_guard()?;
        let n = self.0.n;
        let mut levels = vec![vec![self.cl(GroundSubset::EMPTY)]];
        for r in 0..self.0.rank {
            let mut next: HashSet<GroundSubset> = HashSet::new();
            for &f in &levels[r] {
                for e in f.complement(n).iter() {
                    let g = self.cl(f.with(e));
                    if !next.contains(&g) {
                        debug_assert_eq!(self.rk(g), r + 1);
                        next.insert(g);
                    }
                }
            }
            let mut next: Vec<GroundSubset> = next.into_iter().collect();
            sort_canonical(&mut next);
            levels.push(next);
        }
        Ok(self.0.flats.get_or_init(|| levels))
    }

    pub fn flats_of_rank(&self, r: usize) -> Result<&[GroundSubset]> {
        if r > self.0.rank {
            return Err(Error::RankOutOfRange { r, max: self.0.rank });
        }
        Ok(&self.flat_lattice()?[r])
    }

    /// Flats of rank `rk(M) - 1`.
    pub fn hyperplanes(&self) -> Result<&[GroundSubset]> {
        if self.0.rank == 0 {
            return Ok(&[]);
        }
        self.flats_of_rank(self.0.rank - 1)
    }

    /// Circuits of the dual, as complements of hyperplanes.
    pub fn cocircuits(&self) -> Result<Vec<GroundSubset>> {
        let mut c: Vec<GroundSubset> = self.hyperplanes()?.iter().map(|h| h.complement(self.0.n)).collect();
        sort_canonical(&mut c);
        Ok(c)
    }

    /// Paving test through the first generalized Hamming weight: `d_1(M) >= k`.
    pub fn is_paving(&self) -> Result<bool> {
        let k = self.0.rank;
        if k < 2 || k >= self.0.n {
            return Err(Error::RankHypothesisViolated(format!(
                "paving criterion needs 2 <= k <= n-1, got k={k}, n={}",
                self.0.n
            )));
        }
        let d = crate::weights::ghw(self)?;
        Ok(d.get(1) >= k as u64)
    }

    /// Sparse paving test: `k <= d_1 <= k+1` and `d_2 = k+2`.
    pub fn is_sparse_paving(&self) -> Result<bool> {
        let k = self.0.rank;
        if k < 2 || k + 2 > self.0.n {
            return Err(Error::RankHypothesisViolated(format!(
                "sparse paving criterion needs 2 <= k <= n-2, got k={k}, n={}",
                self.0.n
            )));
        }
        let d = crate::weights::ghw(self)?;
        let k = k as u64;
        Ok((k..=k + 1).contains(&d.get(1)) && d.get(2) == k + 2)
    }

    /// True when both matroids have the same rank on every subset.
    pub fn same_ranks(&self, other: &Matroid) -> Result<bool> {
        if self.0.n != other.0.n {
            return Ok(false);
        }
        self.check_guard()?;
        Ok((0..1u64 << self.0.n).all(|m| {
            let a = GroundSubset::from_mask(m);
            self.rk(a) == other.rk(a)
        }))
    }
}

fn verify_exchange(bases: &[GroundSubset]) -> Result<()> {
    let set: HashSet<GroundSubset> = bases.iter().copied().collect();
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).iter() {
                let ok = b2.difference(b1).iter().any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return Err(Error::InvalidBases(format!("exchange fails for {b1}, {b2} at element {x}")));
                }
            }
        }
    }
    Ok(())
}
