//! Fixture corpus and property checks shared by the integration tests and the
//! acceptance runner. Each check returns the first violation it finds.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mw_core::algebra::{make_field, Mat};
use mw_core::codes::{dual_code, ghw_via_matroid, ghw_wei_all, LinearCode};
use mw_core::families::{
    all_ones_code, complete_intersection_code, constant_weight_fixture, dual_hamming_code, fano, reed_muller_code,
    steiner_matroid, uniform, vamos, vandermonde_code,
};
use mw_core::subset::{k_subsets, GroundSubset};
use mw_core::symbolic::{
    alpha_fast, alpha_oracle, minimal_generators_symbolic, rees_generators, ExponentVector, ReesGenerator,
};
use mw_core::weights::{elongation_circuits, ghw, subadditivity_profile};
use mw_core::{DSequence, Matroid};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Check = Result<(), String>;

pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
    pub code: Option<LinearCode>,
}

fn from_code(name: &str, code: LinearCode) -> Vec<Entry> {
    let m = code.matroid().expect("corpus codes fit in a mask");
    vec![
        Entry { name: format!("{name}*"), matroid: m.dual(), code: None },
        Entry { name: name.to_string(), matroid: m, code: Some(code) },
    ]
}

fn from_matroid(name: &str, m: Matroid) -> Vec<Entry> {
    vec![
        Entry { name: format!("{name}*"), matroid: m.dual(), code: None },
        Entry { name: name.to_string(), matroid: m, code: None },
    ]
}

/// U_{3,5} with a coloop added as element 6.
pub fn paving_with_coloop() -> Matroid {
    let bases = k_subsets(5, 3).map(|b| b.with(6)).collect();
    Matroid::from_bases(6, bases).unwrap()
}

/// Every named fixture together with its dual.
pub fn corpus() -> Vec<Entry> {
    let gf2 = make_field(2, 1).unwrap();
    let gf3 = make_field(3, 1).unwrap();
    let gf4 = make_field(2, 2).unwrap();
    let gf5 = make_field(5, 1).unwrap();
    let mut out = Vec::new();
    out.extend(from_matroid("vamos", vamos()));
    for (k, n) in [(1, 4), (2, 4), (2, 5), (3, 5), (3, 6), (2, 6), (3, 7), (4, 7)] {
        out.extend(from_matroid(&format!("uniform:{k},{n}"), uniform(k, n).unwrap()));
    }
    out.extend(from_matroid("steiner:fano", steiner_matroid(&fano())));
    out.extend(from_matroid("paving-with-coloop", paving_with_coloop()));
    out.extend(from_code("complete-intersection:1,2,3", complete_intersection_code(&gf2, &[1, 2, 3]).unwrap()));
    out.extend(from_code("complete-intersection:1,1,2", complete_intersection_code(&gf3, &[1, 1, 2]).unwrap()));
    for (k, l) in [(3, 3), (3, 2), (4, 2), (5, 2)] {
        out.extend(from_code(&format!("all-ones:{k},{l}"), all_ones_code(&gf2, k, l).unwrap()));
    }
    out.extend(from_code("reed-muller:2,3", reed_muller_code(&gf2, 3).unwrap()));
    out.extend(from_code("reed-muller:3,2", reed_muller_code(&gf3, 2).unwrap()));
    out.extend(from_code("dual-hamming:3", dual_hamming_code(3).unwrap()));
    out.extend(from_code("constant-weight", constant_weight_fixture()));
    out.extend(from_code("vandermonde:5,2,5", vandermonde_code(&gf5, 2, 5).unwrap()));
    out.extend(from_code("vandermonde:4,2,4", vandermonde_code(&gf4, 2, 4).unwrap()));
    out
}

/// Random full-rank codes with `3 <= n <= 10` and `q` in {2, 3}, always with `k < n`.
pub fn random_codes(seed: u64, count: usize) -> Vec<LinearCode> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let q: u64 = if rng.gen_bool(0.5) { 2 } else { 3 };
        let field = make_field(q, 1).unwrap();
        let n = rng.gen_range(3..=10);
        let k = rng.gen_range(1..n);
        let data = (0..k * n).map(|_| rng.gen_range(0..q) as u8).collect();
        let g = Mat::new(field, k, n, data).unwrap();
        if let Ok(c) = LinearCode::new(g) {
            out.push(c);
        }
    }
    out
}

fn random_subset(rng: &mut StdRng, n: usize) -> GroundSubset {
    GroundSubset::from_mask(rng.gen::<u64>() & GroundSubset::full(n).mask())
}

pub fn rank_axioms(m: &Matroid, pairs: usize, seed: u64) -> Check {
    let n = m.n();
    let mut rng = StdRng::seed_from_u64(seed);
    let rk = |a: GroundSubset| m.rank(a).unwrap();
    if rk(GroundSubset::EMPTY) != 0 {
        return Err("rank of the empty set is nonzero".into());
    }
    for _ in 0..pairs {
        let a = random_subset(&mut rng, n);
        let b = random_subset(&mut rng, n);
        if rk(a) > a.len() {
            return Err(format!("rk({a}) exceeds |{a}|"));
        }
        if rk(a.union(b)) + rk(a.intersection(b)) > rk(a) + rk(b) {
            return Err(format!("submodularity fails at {a}, {b}"));
        }
        let e = rng.gen_range(1..=n);
        let (lo, hi) = (rk(a), rk(a.with(e)));
        if hi < lo || hi > lo + 1 {
            return Err(format!("adding {e} to {a} changes the rank from {lo} to {hi}"));
        }
        if rk(a) > rk(a.union(b)) {
            return Err(format!("rank is not monotone at {a}"));
        }
    }
    Ok(())
}

fn same_ranks(x: &Matroid, y: &Matroid, what: &str) -> Check {
    if x.same_ranks(y).unwrap() {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

/// The dual built from complemented bases, dualized again, recovers the matroid.
pub fn double_dual(m: &Matroid) -> Check {
    let n = m.n();
    let complements = m.bases().unwrap().iter().map(|b| b.complement(n)).collect();
    let explicit = Matroid::from_bases(n, complements).unwrap();
    same_ranks(&explicit, &m.dual(), "dual rank formula disagrees with complemented bases")?;
    same_ranks(&explicit.dual(), m, "dual of the dual differs from the matroid")
}

/// `T^r(M)* = E^r(M*)` for every admissible `r`.
pub fn truncation_elongation_duality(m: &Matroid) -> Check {
    for r in 1..=m.rank_total() {
        let lhs = m.truncate(r).unwrap().dual();
        let rhs = m.dual().elongate(r).unwrap();
        same_ranks(&lhs, &rhs, &format!("truncation by {r} is not dual to elongation"))?;
    }
    Ok(())
}

/// Circuits of `E^{r-1}(M)` enumerated directly equal the complements of flats of `M*`.
pub fn elongation_circuits_match_flats(m: &Matroid) -> Check {
    for r in 1..=m.corank_total() {
        let direct: BTreeSet<u64> = m.elongate(r - 1).unwrap().circuits().unwrap().iter().map(|c| c.mask()).collect();
        let via_flats: BTreeSet<u64> = elongation_circuits(m, r).unwrap().iter().map(|c| c.mask()).collect();
        if direct != via_flats {
            return Err(format!("r = {r}: circuit sets differ"));
        }
    }
    Ok(())
}

/// `{d_r(C-perp)}` and `{n + 1 - d_r(C)}` partition `{1, ..., n}`, and both
/// weight routes agree.
pub fn wei_duality(c: &LinearCode) -> Check {
    let n = c.n() as u64;
    let d = ghw_wei_all(c).map_err(|e| e.to_string())?;
    for r in 1..=c.k() {
        let via = ghw_via_matroid(c, r).unwrap();
        if via != d.get(r) {
            return Err(format!("d_{r}: Wei gives {}, matroid gives {via}", d.get(r)));
        }
    }
    let dual = dual_code(c).unwrap();
    let dd = ghw_wei_all(&dual).map_err(|e| e.to_string())?;
    let mut all: Vec<u64> = dd.values().to_vec();
    all.extend(d.values().iter().map(|x| n + 1 - x));
    all.sort_unstable();
    if all != (1..=n).collect::<Vec<_>>() {
        return Err(format!("weights {:?} and dual weights {:?} do not interleave", d.values(), dd.values()));
    }
    Ok(())
}

pub fn oracle_matches_dp(m: &Matroid, max_s: u64) -> Check {
    let d = DSequence::from(&ghw(m).unwrap());
    for s in 1..=max_s {
        let (fast, slow) = (alpha_fast(&d, s), alpha_oracle(m, s).unwrap());
        if fast != slow {
            return Err(format!("s = {s}: DP gives {fast}, oracle gives {slow}"));
        }
    }
    Ok(())
}

/// Splits `a` into generator supports with orders summing to exactly `s`.
fn factor(a: &mut [u32], s: usize, gens: &[ReesGenerator], used: &mut Vec<ReesGenerator>) -> bool {
    let Some(first) = a.iter().position(|&x| x > 0) else {
        return s == 0;
    };
    for g in gens {
        if g.order > s || !g.support.contains(first + 1) || !g.support.iter().all(|e| a[e - 1] > 0) {
            continue;
        }
        for e in g.support.iter() {
            a[e - 1] -= 1;
        }
        used.push(*g);
        if factor(a, s - g.order, gens, used) {
            for e in g.support.iter() {
                a[e - 1] += 1;
            }
            return true;
        }
        used.pop();
        for e in g.support.iter() {
            a[e - 1] += 1;
        }
    }
    false
}

pub fn factor_into_generators(a: &ExponentVector, s: usize, gens: &[ReesGenerator]) -> Option<Vec<ReesGenerator>> {
    let mut work = a.0.clone();
    let mut used = Vec::new();
    factor(&mut work, s, gens, &mut used).then_some(used)
}

/// Every minimal generator of `I^(s)` is a product of Rees generators of total order `s`.
pub fn minimal_generators_factor(m: &Matroid, max_s: u64) -> Check {
    let gens = rees_generators(m).unwrap();
    for s in 1..=max_s {
        for a in minimal_generators_symbolic(m, s).unwrap() {
            if factor_into_generators(&a, s as usize, &gens).is_none() {
                return Err(format!("s = {s}: {:?} has no factorization", a.0));
            }
        }
    }
    Ok(())
}

/// `alpha(I^(r)) = d_r` exactly when `d_r` is a subadditive term.
pub fn fixed_points_are_subadditive_terms(m: &Matroid) -> Check {
    let g = ghw(m).unwrap();
    let d = DSequence::from(&g);
    let rep = subadditivity_profile(g.values());
    for r in 1..=g.len() {
        let fixed = alpha_fast(&d, r as u64) == g.get(r);
        if fixed != rep.is_subadditive_term(r) {
            return Err(format!(
                "d = {:?}, r = {r}: fixed point {fixed}, subadditive term {}",
                g.values(),
                rep.is_subadditive_term(r)
            ));
        }
    }
    Ok(())
}

/// Runs `check` on every item, reporting the first failure with its label.
pub fn all<'a, T: 'a>(items: impl IntoIterator<Item = (String, &'a T)>, check: impl Fn(&T) -> Check) -> Check {
    for (label, item) in items {
        check(item).map_err(|e| format!("{label}: {e}"))?;
    }
    Ok(())
}

pub fn matroids<'a>(corpus: &'a [Entry], max_n: usize) -> impl Iterator<Item = (String, &'a Matroid)> + 'a {
    corpus.iter().filter(move |e| e.matroid.n() <= max_n).map(|e| (e.name.clone(), &e.matroid))
}

/// Corpus matroids with at least one weight.
pub fn weighted<'a>(corpus: &'a [Entry], max_n: usize) -> impl Iterator<Item = (String, &'a Matroid)> + 'a {
    matroids(corpus, max_n).filter(|(_, m)| m.corank_total() > 0)
}
