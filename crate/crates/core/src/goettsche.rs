//! Poincaré and Hodge polynomials of `X^[n]`, `X^(m)`, `X^(a)` and punctual
//! fibers, Euler numbers, and the K-theoretic and orbifold dimension counts.
//!
//! Wherever two independent routes exist (an infinite product on one side,
//! a sum over strata on the other) both are exposed, so callers can compare
//! them exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{self, Partition};
use crate::series::{self, product_expand, Exponents, FactorFamily, QTSeries, Var};
pub use crate::surface::{preset, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoettscheError {
    #[error("surface {0:?} carries no Hodge numbers")]
    MissingHodgeData(String),
}

/// A graded piece of a super vector space: monomial weight of each basis
/// element, parity, and dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GradedBlock {
    pub exps: Exponents,
    pub odd: bool,
    pub dim: u32,
}

/// Betti blocks: degree `d` carries weight `t^d` and parity `d mod 2`.
pub fn betti_blocks(s: &SurfaceModel) -> Vec<GradedBlock> {
    s.betti()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b > 0)
        .map(|(d, &b)| GradedBlock {
            exps: [d as u32, 0, 0],
            odd: d % 2 == 1,
            dim: b,
        })
        .collect()
}

/// Hodge blocks: type `(p,q)` carries weight `x^p y^q` and parity `p+q mod 2`.
pub fn hodge_blocks(s: &SurfaceModel) -> Result<Vec<GradedBlock>, GoettscheError> {
    let hodge = s
        .hodge()
        .ok_or_else(|| GoettscheError::MissingHodgeData(s.name().to_string()))?;
    Ok(hodge
        .iter()
        .filter(|(_, &h)| h > 0)
        .map(|(&(p, q), &h)| GradedBlock {
            exps: [0, p, q],
            odd: (p + q) % 2 == 1,
            dim: h,
        })
        .collect())
}

/// Graded dimension of the `m`-th super-symmetric power. A degree-homogeneous
/// block of dimension `b` contributes `Sym^k` (even) or `Λ^k` (odd) of a
/// `b`-dimensional space, so only the split of `m` among blocks is enumerated.
pub fn super_symmetric_power(blocks: &[GradedBlock], m: usize) -> series::CoeffPoly {
    use series::CoeffPoly;
    let mut acc = vec![CoeffPoly::zero(); m + 1];
    acc[0] = CoeffPoly::one();
    for block in blocks {
        let mut next = vec![CoeffPoly::zero(); m + 1];
        for (have, poly) in acc.iter().enumerate() {
            if poly.is_zero() {
                continue;
            }
            for k in 0..=m - have {
                let dim = if block.odd {
                    binomial(block.dim as i64, k)
                } else {
                    binomial(block.dim as i64 + k as i64 - 1, k)
                };
                if dim.is_zero() {
                    if block.odd {
                        break;
                    }
                    continue;
                }
                let k32 = k as u32;
                let exps = [
                    block.exps[0] * k32,
                    block.exps[1] * k32,
                    block.exps[2] * k32,
                ];
                next[have + k] += &poly.mul_monomial(&exps, &BigRational::from_integer(dim));
            }
        }
        acc = next;
    }
    acc.swap_remove(m)
}

/// Generalized binomial `C(top, k)` for any integer `top`.
pub fn binomial(top: i64, k: usize) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(top - i as i64) / BigInt::from(i + 1);
    }
    c
}

/// The five factor families of Göttsche's product.
pub fn goettsche_families(s: &SurfaceModel) -> Vec<FactorFamily> {
    let b = s.betti();
    vec![
        FactorFamily::numerator(b[1]).t(2, -1),
        FactorFamily::numerator(b[3]).t(2, 1),
        FactorFamily::denominator(b[0]).t(2, -2),
        FactorFamily::denominator(b[2]).t(2, 0),
        FactorFamily::denominator(b[4]).t(2, 2),
    ]
}

/// `Σ_n P_t(X^[n]) q^n` by expanding the infinite product.
pub fn poincare_hilbert_product(s: &SurfaceModel, order: usize) -> QTSeries {
    product_expand(&goettsche_families(s), order)
}

/// `Σ_n E(X^[n]; x, y) q^n` as the bigraded product: one family per Hodge type,
/// factors `(1 -/+ x^{p+m-1} y^{q+m-1} q^m)^{-/+ h^{p,q}}`.
pub fn hodge_hilbert_product(s: &SurfaceModel, order: usize) -> Result<QTSeries, GoettscheError> {
    let families: Vec<FactorFamily> = hodge_blocks(s)?
        .into_iter()
        .map(|b| {
            let fam = if b.odd {
                FactorFamily::numerator(b.dim)
            } else {
                FactorFamily::denominator(b.dim)
            };
            fam.x(1, b.exps[1] as i64 - 1).y(1, b.exps[2] as i64 - 1)
        })
        .collect();
    Ok(product_expand(&families, order))
}

/// `P_t(X^(m))`.
pub fn poincare_sym(s: &SurfaceModel, m: usize) -> series::CoeffPoly {
    super_symmetric_power(&betti_blocks(s), m)
}

/// `P_t(X^(m))` read off the single-mode product
/// `(1 + t q)^{b1} (1 + t^3 q)^{b3} / ((1 - q)^{b0} (1 - t^2 q)^{b2} (1 - t^4 q)^{b4})`.
pub fn poincare_sym_product(s: &SurfaceModel, m: usize) -> series::CoeffPoly {
    let b = s.betti();
    let families = [
        FactorFamily::numerator(b[1]).t(0, 1).up_to_mode(1),
        FactorFamily::numerator(b[3]).t(0, 3).up_to_mode(1),
        FactorFamily::denominator(b[0]).up_to_mode(1),
        FactorFamily::denominator(b[2]).t(0, 2).up_to_mode(1),
        FactorFamily::denominator(b[4]).t(0, 4).up_to_mode(1),
    ];
    product_expand(&families, m)
        .coeff(m)
        .expect("m is within order")
        .clone()
}

/// Hodge polynomial of `X^(m)`.
pub fn hodge_sym(s: &SurfaceModel, m: usize) -> Result<series::CoeffPoly, GoettscheError> {
    Ok(super_symmetric_power(&hodge_blocks(s)?, m))
}

fn sym_table(blocks: &[GradedBlock], n: usize) -> Vec<series::CoeffPoly> {
    (0..=n).map(|m| super_symmetric_power(blocks, m)).collect()
}

fn stratum_from_table(table: &[series::CoeffPoly], a: &Partition) -> series::CoeffPoly {
    a.multiplicities()
        .iter()
        .filter(|&&ai| ai > 0)
        .fold(series::CoeffPoly::one(), |acc, &ai| &acc * &table[ai])
}

/// `P_t(X^(a)) = ∏_i P_t(X^(a_i))`; entries `a_i = 0` are a point.
pub fn poincare_stratum_space(s: &SurfaceModel, a: &Partition) -> series::CoeffPoly {
    let table = sym_table(&betti_blocks(s), a.length());
    stratum_from_table(&table, a)
}

/// `Σ_{a ∈ P(n)} t^{2(n - λ(a))} P_t(X^(a))`.
pub fn decomposition_poincare(s: &SurfaceModel, n: usize) -> series::CoeffPoly {
    let table = sym_table(&betti_blocks(s), n);
    let mut total = series::CoeffPoly::zero();
    for a in partitions::enumerate(n) {
        let shift = [2 * (n - a.length()) as u32, 0, 0];
        total += &stratum_from_table(&table, &a).mul_monomial(&shift, &BigRational::one());
    }
    total
}

/// Hodge polynomial of `X^[n]`: `Σ_a (xy)^{n - λ(a)} ∏_i E(X^(a_i))`.
pub fn hodge_hilbert(s: &SurfaceModel, n: usize) -> Result<series::CoeffPoly, GoettscheError> {
    let table = sym_table(&hodge_blocks(s)?, n);
    let mut total = series::CoeffPoly::zero();
    for a in partitions::enumerate(n) {
        let shift = (n - a.length()) as u32;
        total +=
            &stratum_from_table(&table, &a).mul_monomial(&[0, shift, shift], &BigRational::one());
    }
    Ok(total)
}

/// `P_t(Δ^[n]_o) = Σ_{ν ∈ P(n)} t^{2n - 2λ(ν)}`.
pub fn poincare_punctual(n: usize) -> series::CoeffPoly {
    let mut p = series::CoeffPoly::zero();
    for nu in partitions::enumerate(n) {
        p.add_term([2 * (n - nu.length()) as u32, 0, 0], BigRational::one());
    }
    p
}

/// The two facts behind irreducibility of the punctual Hilbert scheme:
/// `b_{2(n-1)} = 1` and `b_k = 0` for `k > 2(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PunctualTop {
    pub top_betti: BigRational,
    pub vanishes_above: bool,
}

pub fn punctual_top(n: usize) -> PunctualTop {
    let p = poincare_punctual(n);
    let top = 2 * n.saturating_sub(1) as u32;
    PunctualTop {
        top_betti: p.t_coeff(top),
        vanishes_above: p.degree_in(Var::T).is_none_or(|d| d <= top),
    }
}

/// `e(X^[n])`: coefficient of `q^n` in `∏(1 - q^m)^{-e}`.
pub fn euler_hilbert(e: i64, n: usize) -> BigInt {
    series::eta_power_coefficient(e, n)
}

/// `Σ_{a ∈ P(n)} ∏_i C(e + a_i - 1, a_i)`, the orbifold Euler number of `(X^n, S_n)`.
pub fn orbifold_euler(e: i64, n: usize) -> BigInt {
    partitions::enumerate(n)
        .iter()
        .map(|a| {
            a.multiplicities()
                .iter()
                .filter(|&&ai| ai > 0)
                .map(|&ai| binomial(e + ai as i64 - 1, ai))
                .fold(BigInt::one(), |acc, c| acc * c)
        })
        .sum()
}

/// `dim K_{S_n}(X^n) ⊗ Q = Σ_{a ∈ P(n)} ∏_i dim H^*(X^(a_i))`.
pub fn dim_equivariant_k(s: &SurfaceModel, n: usize) -> BigInt {
    let table = sym_table(&betti_blocks(s), n);
    partitions::enumerate(n)
        .iter()
        .map(|a| stratum_from_table(&table, a).coefficient_sum().to_integer())
        .sum()
}

/// Literal enumeration of multisets of basis elements (odd elements at most
/// once), accumulating the monomial weight of each. Exponential; meant as an
/// oracle for small `m`.
pub fn enumerate_super_symmetric_power(blocks: &[GradedBlock], m: usize) -> series::CoeffPoly {
    let elements: Vec<(Exponents, bool)> = blocks
        .iter()
        .flat_map(|b| std::iter::repeat((b.exps, b.odd)).take(b.dim as usize))
        .collect();
    let bound =
        |slot: usize| elements.iter().map(|(e, _)| e[slot]).max().unwrap_or(0) as usize * m + 1;
    let dims = [bound(0), bound(1), bound(2)];
    let mut counts = vec![0u64; dims[0] * dims[1] * dims[2]];
    let mut state = EnumState {
        elements: &elements,
        dims,
        counts: &mut counts,
    };
    state.visit(0, m, [0, 0, 0]);
    let mut out = series::CoeffPoly::zero();
    for (idx, &c) in counts.iter().enumerate() {
        if c > 0 {
            let t = idx % dims[0];
            let x = (idx / dims[0]) % dims[1];
            let y = idx / (dims[0] * dims[1]);
            out.add_term(
                [t as u32, x as u32, y as u32],
                BigRational::from_integer(BigInt::from(c)),
            );
        }
    }
    out
}

struct EnumState<'a> {
    elements: &'a [(Exponents, bool)],
    dims: [usize; 3],
    counts: &'a mut [u64],
}

impl EnumState<'_> {
    fn visit(&mut self, i: usize, remaining: usize, weight: Exponents) {
        if remaining == 0 {
            let idx = weight[0] as usize
                + self.dims[0] * (weight[1] as usize + self.dims[1] * weight[2] as usize);
            self.counts[idx] += 1;
            return;
        }
        if i == self.elements.len() {
            return;
        }
        let (exps, odd) = self.elements[i];
        let max_mult = if odd { remaining.min(1) } else { remaining };
        for k in 0..=max_mult {
            let k32 = k as u32;
            let w = [
                weight[0] + exps[0] * k32,
                weight[1] + exps[1] * k32,
                weight[2] + exps[2] * k32,
            ];
            self.visit(i + 1, remaining - k, w);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, CoeffPoly};

    fn t(coeffs: &[i64]) -> CoeffPoly {
        CoeffPoly::from_t_coefficients(coeffs.iter().copied())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hilbert_product_examples() {
        let delta = preset("delta").unwrap();
        let s = poincare_hilbert_product(&delta, 3);
        assert_eq!(s.coeff(3).unwrap(), &t(&[1, 0, 1, 0, 1]));
        let p2 = preset("p2").unwrap();
        let s = poincare_hilbert_product(&p2, 2);
        assert_eq!(s.coeff(2).unwrap(), &t(&[1, 0, 2, 0, 3, 0, 2, 0, 1]));
        for model in crate::surface::all_presets() {
            assert_eq!(
                poincare_hilbert_product(&model, 4).coeff(0).unwrap(),
                &CoeffPoly::one()
            );
        }
    }

    #[test]
    fn sym_examples() {
        let p2 = preset("p2").unwrap();
        assert_eq!(poincare_sym(&p2, 1), t(&[1, 0, 1, 0, 1]));
        assert_eq!(poincare_sym(&p2, 2), t(&[1, 0, 1, 0, 2, 0, 1, 0, 1]));
        let delta = preset("delta").unwrap();
        for m in 0..6 {
            assert_eq!(poincare_sym(&delta, m), CoeffPoly::one());
        }
        let ab = preset("abelian").unwrap();
        assert_eq!(poincare_sym(&ab, 1), t(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn stratum_space_examples() {
        let p2 = preset("p2").unwrap();
        assert_eq!(
            poincare_stratum_space(&p2, &p(&[1, 1, 1])),
            poincare_sym(&p2, 3)
        );
        let s1 = poincare_sym(&p2, 1);
        assert_eq!(poincare_stratum_space(&p2, &p(&[2, 1])), &s1 * &s1);
        assert_eq!(poincare_stratum_space(&p2, &p(&[4])), s1);
    }

    #[test]
    fn decomposition_examples() {
        let p2 = preset("p2").unwrap();
        assert_eq!(decomposition_poincare(&p2, 0), CoeffPoly::one());
        assert_eq!(
            decomposition_poincare(&p2, 2),
            t(&[1, 0, 2, 0, 3, 0, 2, 0, 1])
        );
        let delta = preset("delta").unwrap();
        for n in 1..8 {
            assert_eq!(decomposition_poincare(&delta, n), poincare_punctual(n));
        }
    }

    #[test]
    fn punctual_examples() {
        assert_eq!(poincare_punctual(1), CoeffPoly::one());
        assert_eq!(poincare_punctual(3), t(&[1, 0, 1, 0, 1]));
        assert_eq!(poincare_punctual(4), t(&[1, 0, 1, 0, 2, 0, 1]));
        let top = punctual_top(5);
        assert_eq!(top.top_betti, int(1));
        assert!(top.vanishes_above);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_hilbert(24, 2), BigInt::from(324));
        assert_eq!(euler_hilbert(24, 3), BigInt::from(3200));
        assert_eq!(euler_hilbert(-7, 0), BigInt::from(1));
        assert_eq!(orbifold_euler(24, 2), BigInt::from(324));
        assert_eq!(orbifold_euler(13, 0), BigInt::from(1));
        for n in 0..8 {
            let pn = crate::partitions::enumerate(n).len();
            assert_eq!(orbifold_euler(1, n), BigInt::from(pn));
        }
    }

    #[test]
    fn hodge_examples() {
        let p2 = preset("p2").unwrap();
        let h = hodge_hilbert(&p2, 2).unwrap();
        let mut expected = CoeffPoly::zero();
        for (k, c) in [1, 2, 3, 2, 1].into_iter().enumerate() {
            expected.add_term([0, k as u32, k as u32], int(c));
        }
        assert_eq!(h, expected);
        assert_eq!(hodge_hilbert(&p2, 0).unwrap(), CoeffPoly::one());
        let bare =
            SurfaceModel::with_standard_pairing("bare", [1, 0, 1, 0, 1], [1, 0, 1, 0, 1], None)
                .unwrap();
        assert_eq!(
            hodge_hilbert(&bare, 1),
            Err(GoettscheError::MissingHodgeData("bare".into()))
        );
    }

    #[test]
    fn k_theory_examples() {
        let p2 = preset("p2").unwrap();
        assert_eq!(dim_equivariant_k(&p2, 1), BigInt::from(3));
        // Sym^2(P^2) has 6 classes, the (2) stratum contributes 3
        assert_eq!(dim_equivariant_k(&p2, 2), BigInt::from(9));
        let delta = preset("delta").unwrap();
        assert_eq!(dim_equivariant_k(&delta, 6), BigInt::from(11));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(binomial(-3, 2), BigInt::from(6));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
    }
}
