//! Matroid configurations: the ideal obtained by substituting forms of degrees
//! `delta_1, ..., delta_n` for the variables. Only invariants and published
//! bounds on the resurgence are computed, never the resurgence itself.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::rational::Rational;
use crate::subset::GroundSubset;
use crate::symbolic::waldschmidt;
use crate::weights::{elongation_circuits, ghw, paving_profile};

/// Degrees of the substituted forms, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAssignment(Vec<u64>);

impl DegreeAssignment {
    pub fn new(delta: Vec<u64>) -> Result<Self> {
        if delta.is_empty() || delta.contains(&0) {
            return Err(Error::BadParams("degrees must be positive".into()));
        }
        Ok(DegreeAssignment(delta))
    }

    pub fn constant(n: usize, c: u64) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn values(&self) -> &[u64] {
        &self.0
    }

    /// The common degree when all entries agree.
    pub fn as_constant(&self) -> Option<u64> {
        let first = self.0[0];
        self.0.iter().all(|&x| x == first).then_some(first)
    }

    fn weight(&self, set: GroundSubset) -> u64 {
        set.iter().map(|e| self.0[e - 1]).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializedInvariants {
    pub alpha: u64,
    pub waldschmidt: Rational,
    pub regularity: i64,
}

fn check_len(m: &Matroid, delta: &DegreeAssignment) -> Result<()> {
    if delta.0.len() != m.n() {
        return Err(Error::DimensionMismatch { expected: m.n(), got: delta.0.len() });
    }
    Ok(())
}

/// Smallest `delta`-weight of a circuit of `E^{r-1}(M)`, for `r = 1..n-k`.
fn min_elongation_weights(m: &Matroid, delta: &DegreeAssignment) -> Result<Vec<u64>> {
    (1..=m.corank_total())
        .map(|r| {
            Ok(elongation_circuits(m, r)?
                .iter()
                .map(|&u| delta.weight(u))
                .min()
                .expect("every elongation below the top has a circuit"))
        })
        .collect()
}

pub fn specialized_invariants(m: &Matroid, delta: &DegreeAssignment) -> Result<SpecializedInvariants> {
    check_len(m, delta)?;
    let circuits = m.circuits()?;
    let alpha = circuits.iter().map(|&c| delta.weight(c)).min().ok_or(Error::ZeroIdeal)?;
    let waldschmidt = min_elongation_weights(m, delta)?
        .iter()
        .enumerate()
        .map(|(i, &w)| Rational::new(w as i64, i as i64 + 1))
        .min()
        .expect("the dual has positive rank when a circuit exists");
    let outside_dual_loops = m.coloops().complement(m.n());
    let regularity = delta.weight(outside_dual_loops) as i64 - m.corank_total() as i64 + 1;
    Ok(SpecializedInvariants { alpha, waldschmidt, regularity })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
    /// The quantity is strictly below the value.
    StrictUpper,
    Exact,
}

/// Which quantity a bound concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// The resurgence.
    Rho,
    /// The asymptotic resurgence.
    RhoHat,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub name: &'static str,
    pub kind: BoundKind,
    pub target: Target,
    #[serde(flatten)]
    pub value: Rational,
}

/// `lower` and `upper` bracket the asymptotic resurgence; `bounds` lists every
/// individual bound with the result it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
    pub bounds: Vec<Bound>,
}

/// `max_r r d_1 / d_r`, valid when every form has the same degree.
pub fn equal_degree_lower_bound(m: &Matroid, delta: &DegreeAssignment) -> Result<Rational> {
    check_len(m, delta)?;
    if delta.as_constant().is_none() {
        return Err(Error::MixedDegreesForEqualDegreeBound);
    }
    let d = ghw(m)?;
    Ok(d.values()
        .iter()
        .enumerate()
        .map(|(i, &dr)| Rational::new((i as i64 + 1) * d.get(1) as i64, dr as i64))
        .max()
        .expect("nonempty"))
}

pub fn resurgence_bounds(m: &Matroid, delta: &DegreeAssignment, points_case: bool) -> Result<BoundsReport> {
    check_len(m, delta)?;
    let (n, k) = (m.n() as i64, m.rank_total() as i64);
    let inv = specialized_invariants(m, delta)?;
    let constant = delta.as_constant();
    let mut bounds = vec![Bound {
        name: "initial-degree-ratio",
        kind: BoundKind::Lower,
        target: Target::RhoHat,
        value: Rational::from_integer(inv.alpha as i64) / inv.waldschmidt,
    }];
    if constant.is_some() {
        let d1 = ghw(m)?.get(1) as i64;
        let ell = m.coloops().len() as i64;
        bounds.push(Bound {
            name: "equal-degree-ratio",
            kind: BoundKind::Lower,
            target: Target::RhoHat,
            value: equal_degree_lower_bound(m, delta)?,
        });
        bounds.push(Bound {
            name: "equal-degree-coarse",
            kind: BoundKind::Lower,
            target: Target::RhoHat,
            value: Rational::new((n - k) * d1, n - ell),
        });
    }
    bounds.push(Bound {
        name: "height",
        kind: BoundKind::StrictUpper,
        target: Target::Rho,
        value: Rational::from_integer(n - k),
    });

    if points_case {
        let mins = min_elongation_weights(m, delta)?;
        let ratio_max = |numer: i64| {
            mins.iter()
                .enumerate()
                .map(|(i, &w)| Rational::new((i as i64 + 1) * numer, w as i64))
                .max()
                .expect("nonempty")
        };
        bounds.push(Bound {
            name: "points-regularity",
            kind: BoundKind::Upper,
            target: Target::Rho,
            value: ratio_max(inv.regularity),
        });
        let omega = m.circuits()?.iter().map(|&c| delta.weight(c)).max().expect("circuits exist");
        bounds.push(Bound {
            name: "points-largest-circuit",
            kind: BoundKind::Upper,
            target: Target::RhoHat,
            value: ratio_max(omega as i64),
        });

        let paving = (2..n).contains(&k).then(|| paving_profile(m)).transpose()?;
        if let (Some(delta0), Some(p)) = (constant, paving) {
            let sparse = p.is_sparse_paving && k <= n - 2;
            if sparse {
                bounds.push(Bound {
                    name: "sparse-paving-lower",
                    kind: BoundKind::Lower,
                    target: Target::RhoHat,
                    value: Rational::new((n - k) * k, n),
                });
                bounds.push(Bound {
                    name: "sparse-paving-regularity",
                    kind: BoundKind::Upper,
                    target: Target::Rho,
                    value: Rational::new(n - k, n)
                        * (Rational::from_integer(n) - Rational::new(n - k - 1, delta0 as i64)),
                });
                // Equal circuit sizes alone are not enough: uniform matroids have
                // all circuits of size k + 1 and a strictly larger value.
                if m.circuits()?.iter().all(|c| c.len() as i64 == k) {
                    bounds.push(Bound {
                        name: "sparse-paving-design",
                        kind: BoundKind::Exact,
                        target: Target::RhoHat,
                        value: Rational::new((n - k) * k, n),
                    });
                }
            }
            if p.is_paving && delta0 == 1 && !m.coloops().is_empty() {
                bounds.push(Bound {
                    name: "paving-dual-loop",
                    kind: BoundKind::Exact,
                    target: Target::Both,
                    value: Rational::new((n - k) * k, n - 1),
                });
            }
        }
    }

    let lower = bounds
        .iter()
        .filter(|b| matches!(b.kind, BoundKind::Lower | BoundKind::Exact))
        .map(|b| b.value)
        .max()
        .expect("a lower bound is always present");
    let upper = bounds
        .iter()
        .filter(|b| b.kind != BoundKind::Lower)
        .map(|b| b.value)
        .min()
        .expect("the height bound is always present");
    let named_exact = bounds.iter().find(|b| b.kind == BoundKind::Exact).map(|b| b.value);
    let exact = named_exact.or((lower == upper).then_some(lower));
    Ok(BoundsReport { lower, upper, exact, bounds })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    /// `alpha(I) / alpha_hat(I)`.
    pub lower: Rational,
    /// The height `n - k`.
    pub upper: u64,
}

pub fn resurgence_sandwich(m: &Matroid) -> Result<Sandwich> {
    let alpha = ghw(m)?.get(1) as i64;
    Ok(Sandwich { lower: Rational::from_integer(alpha) / waldschmidt(m)?, upper: m.corank_total() as u64 })
}
