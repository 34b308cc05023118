//! Stalks of the higher direct images `R^{2h}π_*Q` of the Douady–Barlet map
//! `π: X^[n] → X^(n)`, described through the partition combinatorics of the
//! strata, and the stalk-level and global checks of the decomposition.
//!
//! Sheaves appear only as stalk-dimension tables per stratum. A stalk depends
//! on the stratum of the base point and never on the point itself.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use crate::goettsche::{decomposition_poincare, poincare_sym_product};
use crate::partitions::{self, fiber_s_h, Partition};
use crate::series::CoeffPoly;
use crate::surface::SurfaceModel;

/// Strata `X^(n)_(a)` in the support of `R^{2h}π_*Q`: those with `λ(a) <= n - h`.
/// Empty for `h >= n`. Odd direct images vanish, so there is no odd variant.
pub fn support_strata(n: usize, h: usize) -> Vec<Partition> {
    if h >= n {
        return Vec::new();
    }
    partitions::enumerate(n)
        .into_iter()
        .filter(|a| a.length() <= n - h)
        .collect()
}

/// `rows[h]` is the dimension of the stalk of `R^{2h}π_*Q` at a point of the
/// stratum `nu`, for `0 <= h < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StalkTable {
    pub nu: Partition,
    pub rows: Vec<usize>,
}

impl StalkTable {
    /// `Σ_h rows[h] t^{2h}`.
    pub fn poincare(&self) -> CoeffPoly {
        let mut p = CoeffPoly::zero();
        for (h, &d) in self.rows.iter().enumerate() {
            p.add_term([2 * h as u32, 0, 0], BigRational::from_integer(d.into()));
        }
        p
    }
}

/// Stalk dimensions from the bijection between fiber components over a point
/// of `X^(n)_(ν)` and the tuples `S(h, ν)`.
pub fn stalk_table(nu: &Partition) -> StalkTable {
    let n = nu.weight();
    StalkTable {
        nu: nu.clone(),
        rows: (0..n).map(|h| fiber_s_h(h, nu).len()).collect(),
    }
}

/// Local Poincaré polynomial of `Δ^[m]`, counted directly over `P(m)`.
fn local_factor(m: usize) -> CoeffPoly {
    let mut counts = BTreeMap::new();
    for mu in partitions::enumerate(m) {
        *counts.entry(m - mu.length()).or_insert(0u64) += 1;
    }
    let mut p = CoeffPoly::zero();
    for (h, c) in counts {
        p.add_term([2 * h as u32, 0, 0], BigRational::from_integer(c.into()));
    }
    p
}

/// Both sides of the local check at `ν`: the stalk polynomial
/// `Σ_h rows[h] t^{2h}` and the cohomology of the local model
/// `π^{-1}(U) ≅ ∏_j Δ^[ν_j]`.
pub fn local_fiber_sides(nu: &Partition) -> (CoeffPoly, CoeffPoly) {
    let local = nu
        .parts()
        .iter()
        .fold(CoeffPoly::one(), |acc, &part| &acc * &local_factor(part));
    (stalk_table(nu).poincare(), local)
}

/// Whether the stalk table at `ν` matches the local model. Also checks `rows[0] = 1`.
pub fn local_fiber_check(nu: &Partition) -> bool {
    let table = stalk_table(nu);
    if nu.weight() > 0 && table.rows.first() != Some(&1) {
        return false;
    }
    let (stalks, local) = local_fiber_sides(nu);
    stalks == local
}

/// `P_t(X^[n])` grouped by direct-image degree:
/// `Σ_h t^{2h} Σ_{λ(a) = n-h} P_t(X^(a))`, with `P_t(X^(m))` from the
/// single-mode product formula.
pub fn leray_grouped_poincare(s: &SurfaceModel, n: usize) -> CoeffPoly {
    let sym: Vec<CoeffPoly> = (0..=n).map(|m| poincare_sym_product(s, m)).collect();
    let mut total = CoeffPoly::zero();
    for h in 0..n.max(1) {
        let mut layer = CoeffPoly::zero();
        for a in partitions::enumerate_with_length(n, n - h) {
            let stratum = a
                .multiplicities()
                .iter()
                .fold(CoeffPoly::one(), |acc, &ai| &acc * &sym[ai]);
            layer += &stratum;
        }
        total += &layer.mul_monomial(&[2 * h as u32, 0, 0], &BigRational::one());
    }
    total
}

/// `E_2`-degeneration at the level of Betti numbers: the stratum sum for
/// `P_t(X^[n])` agrees with its regrouping by Leray degree.
pub fn global_degeneration_check(s: &SurfaceModel, n: usize) -> bool {
    decomposition_poincare(s, n) == leray_grouped_poincare(s, n)
}
