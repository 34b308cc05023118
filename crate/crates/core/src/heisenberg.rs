//! The Heisenberg/Clifford superalgebra on `H^*(X)` acting on the Fock space
//! `⊕_n H^*(X^[n])`, realized as the free supercommutative algebra on the
//! creation modes `α[i]`, `i > 0`.
//!
//! A monomial is a sorted list of factors `(mode, class)`. Its stored
//! coefficient absorbs the Koszul sign of sorting, and an odd factor never
//! repeats. Annihilation operators act as superderivations:
//! `[β[-j], α[i]] = δ_{ij} (-1)^{i-1} i <α, β>`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::partitions::{a_factorial, Partition};
use crate::series::{CoeffPoly, QTSeries};
use crate::surface::SurfaceModel;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HeisenbergError {
    #[error("class index {class} out of range ({available} classes)")]
    UnknownClass { class: usize, available: usize },
    #[error("operator modes must be positive")]
    ModeNonPositive,
    #[error("stratum classes need a single degree-0 class, surface {0:?} has more")]
    WrongModel(String),
    #[error("surface {0:?} carries no Hodge numbers")]
    MissingHodgeData(String),
}

/// One creation factor `α[mode]` with `α` the ordinary class `class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factor {
    pub mode: u32,
    pub class: usize,
}

impl Factor {
    pub fn new(mode: u32, class: usize) -> Self {
        Factor { mode, class }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FockMonomial {
    factors: Vec<Factor>,
}

fn parity(model: &SurfaceModel, class: usize) -> u32 {
    (model.class_degree(class).expect("class validated") % 2) as u32
}

fn factor_degree(model: &SurfaceModel, f: &Factor) -> u32 {
    model.class_degree(f.class).expect("class validated") as u32 + 2 * (f.mode - 1)
}

impl FockMonomial {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// Canonical form of a product of factors in the given order, with the
    /// Koszul sign of sorting. `None` if an odd factor repeats.
    pub fn from_product(model: &SurfaceModel, factors: &[Factor]) -> Option<(Self, i32)> {
        let mut mono = FockMonomial::vacuum();
        let mut sign = 1;
        for f in factors.iter().rev() {
            let (m, s) = mono.times_left(model, *f)?;
            mono = m;
            sign *= s;
        }
        Some((mono, sign))
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_vacuum(&self) -> bool {
        self.factors.is_empty()
    }

    /// `Σ` of modes.
    pub fn level(&self) -> u32 {
        self.factors.iter().map(|f| f.mode).sum()
    }

    pub fn degree(&self, model: &SurfaceModel) -> u32 {
        self.factors.iter().map(|f| factor_degree(model, f)).sum()
    }

    /// Bidegree: a factor of Hodge type `(p, q)` and mode `k` has type `(p+k-1, q+k-1)`.
    pub fn bidegree(&self, model: &SurfaceModel) -> Option<(u32, u32)> {
        let mut total = (0, 0);
        for f in &self.factors {
            let (p, q) = model.class_hodge_type(f.class)?;
            total.0 += p + f.mode - 1;
            total.1 += q + f.mode - 1;
        }
        Some(total)
    }

    pub fn parity(&self, model: &SurfaceModel) -> u32 {
        self.factors
            .iter()
            .map(|f| parity(model, f.class))
            .sum::<u32>()
            % 2
    }

    /// `f · self` in canonical order with its Koszul sign, or `None` when it vanishes.
    fn times_left(&self, model: &SurfaceModel, f: Factor) -> Option<(Self, i32)> {
        let odd = parity(model, f.class) == 1;
        let pos = self.factors.partition_point(|g| *g <= f);
        if odd && pos > 0 && self.factors[pos - 1] == f {
            return None;
        }
        let passed: u32 = self.factors[..pos]
            .iter()
            .map(|g| parity(model, g.class))
            .sum();
        let sign = if odd && passed % 2 == 1 { -1 } else { 1 };
        let mut factors = self.factors.clone();
        factors.insert(pos, f);
        Some((FockMonomial { factors }, sign))
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "p{}({})", g.mode, g.class)?;
        }
        Ok(())
    }
}

/// A finite linear combination of Fock monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FockState {
    terms: BTreeMap<FockMonomial, BigRational>,
}

impl FockState {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn vacuum() -> Self {
        Self::monomial(FockMonomial::vacuum(), BigRational::one())
    }

    pub fn monomial(m: FockMonomial, c: BigRational) -> Self {
        let mut s = Self::zero();
        s.add_term(m, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FockMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &FockMonomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: FockMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    /// Largest level among the monomials, `None` for the zero state.
    pub fn max_level(&self) -> Option<u32> {
        self.terms.keys().map(FockMonomial::level).max()
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else if c.is_integer() {
                write!(f, "{} {m}", c.numer())?;
            } else {
                write!(f, "{}/{} {m}", c.numer(), c.denom())?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeisenbergOp {
    /// `P_α[mode]` for an ordinary class `α`.
    Create { mode: u32, class: usize },
    /// `R_β[mode]` for a compactly supported class `β`.
    Annihilate { mode: u32, class: usize },
    /// The central element, acting as the identity.
    Central,
}

impl HeisenbergOp {
    pub fn parity(&self, model: &SurfaceModel) -> Result<u32, HeisenbergError> {
        self.validate(model)?;
        Ok(match *self {
            HeisenbergOp::Create { class, .. } => parity(model, class),
            HeisenbergOp::Annihilate { class, .. } => {
                (model.compact_class_degree(class).expect("validated") % 2) as u32
            }
            HeisenbergOp::Central => 0,
        })
    }

    fn validate(&self, model: &SurfaceModel) -> Result<(), HeisenbergError> {
        let (mode, class, available) = match *self {
            HeisenbergOp::Create { mode, class } => (mode, class, model.num_classes()),
            HeisenbergOp::Annihilate { mode, class } => (mode, class, model.num_compact_classes()),
            HeisenbergOp::Central => return Ok(()),
        };
        if mode == 0 {
            return Err(HeisenbergError::ModeNonPositive);
        }
        if class >= available {
            return Err(HeisenbergError::UnknownClass { class, available });
        }
        Ok(())
    }
}

/// `(-1)^{i-1} i`.
fn mode_factor(i: u32) -> BigRational {
    let v = BigInt::from(i);
    BigRational::from_integer(if i % 2 == 0 { -v } else { v })
}

pub fn apply(
    op: &HeisenbergOp,
    st: &FockState,
    model: &SurfaceModel,
) -> Result<FockState, HeisenbergError> {
    op.validate(model)?;
    let mut out = FockState::zero();
    match *op {
        HeisenbergOp::Central => return Ok(st.clone()),
        HeisenbergOp::Create { mode, class } => {
            let f = Factor::new(mode, class);
            for (m, c) in &st.terms {
                if let Some((prod, sign)) = m.times_left(model, f) {
                    let c = if sign < 0 { -c.clone() } else { c.clone() };
                    out.add_term(prod, c);
                }
            }
        }
        HeisenbergOp::Annihilate { mode, class } => {
            let beta_odd = model.compact_class_degree(class).expect("validated") % 2 == 1;
            let scale = mode_factor(mode);
            for (m, c) in &st.terms {
                let mut passed = 0u32;
                for (s, f) in m.factors.iter().enumerate() {
                    if f.mode == mode {
                        let pairing = model.pair(f.class, class).expect("validated");
                        if !pairing.is_zero() {
                            let mut v = c * &scale * pairing;
                            if beta_odd && passed % 2 == 1 {
                                v = -v;
                            }
                            let mut rest = m.factors.clone();
                            rest.remove(s);
                            out.add_term(FockMonomial { factors: rest }, v);
                        }
                    }
                    passed += parity(model, f.class);
                }
            }
        }
    }
    Ok(out)
}

/// Supercommutator `op1 op2 - (-1)^{|op1||op2|} op2 op1` applied to `st`.
pub fn commutator(
    op1: &HeisenbergOp,
    op2: &HeisenbergOp,
    st: &FockState,
    model: &SurfaceModel,
) -> Result<FockState, HeisenbergError> {
    let sign_odd = op1.parity(model)? * op2.parity(model)? == 1;
    let a = apply(op1, &apply(op2, st, model)?, model)?;
    let b = apply(op2, &apply(op1, st, model)?, model)?;
    Ok(if sign_odd { a.add(&b) } else { a.sub(&b) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `[P_α[k], P_γ[l]] = 0`
    CreateCreate,
    /// `[R_β[k], R_δ[l]] = 0`
    AnnihilateAnnihilate,
    /// `[R_β[l], P_α[k]] = δ_{kl} (-1)^{k-1} k <α,β> Id`
    AnnihilateCreate,
}

impl Relation {
    pub const ALL: [Relation; 3] = [
        Relation::CreateCreate,
        Relation::AnnihilateAnnihilate,
        Relation::AnnihilateCreate,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Relation::CreateCreate => "[P,P]=0",
            Relation::AnnihilateAnnihilate => "[R,R]=0",
            Relation::AnnihilateCreate => "[R,P]=c",
        }
    }

    /// Number of (first, second) class choices for this relation on `model`.
    pub fn class_ranges(&self, model: &SurfaceModel) -> (usize, usize) {
        let (o, c) = (model.num_classes(), model.num_compact_classes());
        match self {
            Relation::CreateCreate => (o, o),
            Relation::AnnihilateAnnihilate => (c, c),
            Relation::AnnihilateCreate => (c, o),
        }
    }
}

/// Evaluates both sides of `relation` with modes `(k, l)` on `st`.
/// For [`Relation::AnnihilateCreate`], `first` is the compact class `β` paired
/// with mode `l` and `second` the ordinary class `α` paired with mode `k`.
pub fn relation_sides(
    relation: Relation,
    k: u32,
    l: u32,
    first: usize,
    second: usize,
    st: &FockState,
    model: &SurfaceModel,
) -> Result<(FockState, FockState), HeisenbergError> {
    let (op1, op2) = match relation {
        Relation::CreateCreate => (
            HeisenbergOp::Create {
                mode: k,
                class: first,
            },
            HeisenbergOp::Create {
                mode: l,
                class: second,
            },
        ),
        Relation::AnnihilateAnnihilate => (
            HeisenbergOp::Annihilate {
                mode: k,
                class: first,
            },
            HeisenbergOp::Annihilate {
                mode: l,
                class: second,
            },
        ),
        Relation::AnnihilateCreate => (
            HeisenbergOp::Annihilate {
                mode: l,
                class: first,
            },
            HeisenbergOp::Create {
                mode: k,
                class: second,
            },
        ),
    };
    let lhs = commutator(&op1, &op2, st, model)?;
    let rhs = match relation {
        Relation::AnnihilateCreate if k == l => {
            let pairing = model.pair(second, first).expect("validated");
            st.scale(&(mode_factor(k) * pairing))
        }
        _ => FockState::zero(),
    };
    Ok((lhs, rhs))
}

/// Degree bookkeeping result for a state.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateDegree<D> {
    /// The zero state has no degree.
    Zero,
    Homogeneous(D),
    Mixed,
}

fn common<D: PartialEq + Copy>(mut it: impl Iterator<Item = D>) -> StateDegree<D> {
    let Some(first) = it.next() else {
        return StateDegree::Zero;
    };
    if it.all(|d| d == first) {
        StateDegree::Homogeneous(first)
    } else {
        StateDegree::Mixed
    }
}

pub fn degree_of(st: &FockState, model: &SurfaceModel) -> StateDegree<u32> {
    common(st.terms.keys().map(|m| m.degree(model)))
}

pub fn bidegree_of(
    st: &FockState,
    model: &SurfaceModel,
) -> Result<StateDegree<(u32, u32)>, HeisenbergError> {
    if model.hodge().is_none() {
        return Err(HeisenbergError::MissingHodgeData(model.name().to_string()));
    }
    let degrees: Vec<(u32, u32)> = st
        .terms
        .keys()
        .map(|m| m.bidegree(model).expect("hodge data present"))
        .collect();
    Ok(common(degrees.into_iter()))
}

#[derive(Clone, Copy, Debug)]
struct Generator {
    mode: u32,
    degree: u32,
    odd: bool,
}

/// `census[n][d]`: number of level-`n` monomials of cohomological degree `d`,
/// for every `n <= order`, counted by visiting each monomial once.
pub fn monomial_census(model: &SurfaceModel, order: usize) -> Vec<Vec<u64>> {
    let degrees = model.class_degrees();
    // modes descending so the admissible generators for a remaining level form a suffix
    let mut gens = Vec::new();
    for mode in (1..=order as u32).rev() {
        for &d in &degrees {
            gens.push(Generator {
                mode,
                degree: d as u32 + 2 * (mode - 1),
                odd: d % 2 == 1,
            });
        }
    }
    let first_fit: Vec<usize> = (0..=order)
        .map(|r| {
            gens.iter()
                .position(|g| g.mode as usize <= r)
                .unwrap_or(gens.len())
        })
        .collect();
    let max_degree = 4 * order + 1;
    let mut census = vec![vec![0u64; max_degree + 1]; order + 1];
    census[0][0] = 1;
    let mut walk = Census {
        gens: &gens,
        first_fit: &first_fit,
        census: &mut census,
        order,
    };
    walk.visit(0, 0, 0);
    census
}

struct Census<'a> {
    gens: &'a [Generator],
    first_fit: &'a [usize],
    census: &'a mut [Vec<u64>],
    order: usize,
}

impl Census<'_> {
    fn visit(&mut self, start: usize, level: usize, degree: u32) {
        let remaining = self.order - level;
        let from = start.max(self.first_fit[remaining]);
        for j in from..self.gens.len() {
            let g = self.gens[j];
            let lvl = level + g.mode as usize;
            let deg = degree + g.degree;
            self.census[lvl][deg as usize] += 1;
            self.visit(if g.odd { j + 1 } else { j }, lvl, deg);
        }
    }
}

/// `Σ_n q^n Σ_{monomials of level n} t^{degree}`.
pub fn graded_character(model: &SurfaceModel, order: usize) -> QTSeries {
    let census = monomial_census(model, order);
    let coeffs = census
        .iter()
        .map(|row| {
            let mut p = CoeffPoly::zero();
            for (d, &c) in row.iter().enumerate() {
                p.add_term([d as u32, 0, 0], BigRational::from_integer(BigInt::from(c)));
            }
            p
        })
        .collect();
    QTSeries::from_coeffs(order, coeffs).expect("census has order + 1 rows")
}

/// Number of level-`n` monomials.
pub fn level_dim(model: &SurfaceModel, n: usize) -> u64 {
    monomial_census(model, n)[n].iter().sum()
}

/// All level-`n` monomials in canonical order. Exponential in `n`.
pub fn level_basis(model: &SurfaceModel, n: usize) -> Vec<FockMonomial> {
    let mut factors_all = Vec::new();
    for mode in 1..=n as u32 {
        for class in 0..model.num_classes() {
            factors_all.push(Factor::new(mode, class));
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_basis(model, &factors_all, 0, n as u32, &mut current, &mut out);
    out.sort();
    out
}

fn collect_basis(
    model: &SurfaceModel,
    gens: &[Factor],
    start: usize,
    remaining: u32,
    current: &mut Vec<Factor>,
    out: &mut Vec<FockMonomial>,
) {
    if remaining == 0 {
        out.push(FockMonomial {
            factors: current.clone(),
        });
        return;
    }
    for j in start..gens.len() {
        let g = gens[j];
        if g.mode > remaining {
            continue;
        }
        current.push(g);
        let next = if parity(model, g.class) == 1 {
            j + 1
        } else {
            j
        };
        collect_basis(model, gens, next, remaining - g.mode, current, out);
        current.pop();
    }
}

/// A random state: up to `max_terms` monomials of level at most `max_level`,
/// built from modes at most `max_mode`, with small nonzero rational coefficients.
pub fn random_state<R: Rng + ?Sized>(
    model: &SurfaceModel,
    rng: &mut R,
    max_terms: usize,
    max_level: u32,
    max_mode: u32,
) -> FockState {
    let mut st = FockState::zero();
    let classes = model.num_classes();
    if classes == 0 {
        return st;
    }
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut remaining = rng.gen_range(0..=max_level);
        let mut factors = Vec::new();
        while remaining > 0 {
            let mode = rng.gen_range(1..=remaining.min(max_mode).max(1));
            factors.push(Factor::new(mode, rng.gen_range(0..classes)));
            remaining = remaining.saturating_sub(mode);
        }
        if let Some((m, sign)) = FockMonomial::from_product(model, &factors) {
            let num = loop {
                let v: i64 = rng.gen_range(-5..=5);
                if v != 0 {
                    break v;
                }
            };
            let den: i64 = rng.gen_range(1..=3);
            st.add_term(m, BigRational::new((sign as i64 * num).into(), den.into()));
        }
    }
    st
}

/// `(1/a!) P_[X][ν_1] ∘ ... ∘ P_[X][ν_k] (1)`, the class of the closure of the
/// stratum `ν` in the Fock model of `Δ` or `C^2`.
pub fn stratum_class(nu: &Partition, model: &SurfaceModel) -> Result<FockState, HeisenbergError> {
    if model.num_classes() != 1 || model.class_degree(0) != Some(0) {
        return Err(HeisenbergError::WrongModel(model.name().to_string()));
    }
    let mut st = FockState::vacuum();
    for &part in nu.parts().iter().rev() {
        st = apply(
            &HeisenbergOp::Create {
                mode: part as u32,
                class: 0,
            },
            &st,
            model,
        )?;
    }
    let denom = BigInt::from(a_factorial(nu));
    Ok(st.scale(&BigRational::new(BigInt::one(), denom)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::int;
    use crate::surface::preset;

    fn create(mode: u32, class: usize) -> HeisenbergOp {
        HeisenbergOp::Create { mode, class }
    }

    fn annihilate(mode: u32, class: usize) -> HeisenbergOp {
        HeisenbergOp::Annihilate { mode, class }
    }

    #[test]
    fn annihilators_kill_vacuum() {
        let p2 = preset("p2").unwrap();
        for mode in 1..4 {
            for class in 0..3 {
                assert!(apply(&annihilate(mode, class), &FockState::vacuum(), &p2)
                    .unwrap()
                    .is_zero());
            }
        }
    }

    #[test]
    fn annihilate_after_create() {
        let p2 = preset("p2").unwrap();
        // class 1 is the hyperplane class in H^2, compact class 1 is its dual
        let st = apply(&create(2, 1), &FockState::vacuum(), &p2).unwrap();
        let back = apply(&annihilate(2, 1), &st, &p2).unwrap();
        assert_eq!(back, FockState::vacuum().scale(&int(-2)));
    }

    #[test]
    fn odd_square_vanishes() {
        let ab = preset("abelian").unwrap();
        let once = apply(&create(1, 1), &FockState::vacuum(), &ab).unwrap();
        assert!(!once.is_zero());
        assert!(apply(&create(1, 1), &once, &ab).unwrap().is_zero());
    }

    #[test]
    fn odd_factors_anticommute() {
        let ab = preset("abelian").unwrap();
        let v = FockState::vacuum();
        let xy = apply(&create(1, 1), &apply(&create(2, 2), &v, &ab).unwrap(), &ab).unwrap();
        let yx = apply(&create(2, 2), &apply(&create(1, 1), &v, &ab).unwrap(), &ab).unwrap();
        assert_eq!(xy, yx.scale(&int(-1)));
    }

    #[test]
    fn commutator_examples() {
        let p2 = preset("p2").unwrap();
        let st = apply(&create(1, 0), &FockState::vacuum(), &p2).unwrap();
        assert!(commutator(&create(2, 1), &create(3, 2), &st, &p2)
            .unwrap()
            .is_zero());
        // [R_β[3], P_α[3]] on vacuum = 3 <α,β>
        let c = commutator(&annihilate(3, 2), &create(3, 0), &FockState::vacuum(), &p2).unwrap();
        assert_eq!(c, FockState::vacuum().scale(&int(3)));
        let c = commutator(&annihilate(2, 2), &create(5, 0), &FockState::vacuum(), &p2).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn operator_errors() {
        let p2 = preset("p2").unwrap();
        let v = FockState::vacuum();
        assert_eq!(
            apply(&create(0, 0), &v, &p2),
            Err(HeisenbergError::ModeNonPositive)
        );
        assert_eq!(
            apply(&annihilate(1, 3), &v, &p2),
            Err(HeisenbergError::UnknownClass {
                class: 3,
                available: 3
            })
        );
        assert_eq!(apply(&HeisenbergOp::Central, &v, &p2), Ok(v));
    }

    #[test]
    fn degrees() {
        let p2 = preset("p2").unwrap();
        let v = FockState::vacuum();
        assert_eq!(degree_of(&v, &p2), StateDegree::Homogeneous(0));
        assert_eq!(degree_of(&FockState::zero(), &p2), StateDegree::Zero);
        for (k, class, d) in [(1u32, 0usize, 0u32), (3, 1, 2), (2, 2, 4)] {
            let st = apply(&create(k, class), &v, &p2).unwrap();
            assert_eq!(
                degree_of(&st, &p2),
                StateDegree::Homogeneous(d + 2 * (k - 1))
            );
        }
        let delta = preset("delta").unwrap();
        let p2v = apply(&create(2, 0), &v, &delta).unwrap();
        let p11 = apply(
            &create(1, 0),
            &apply(&create(1, 0), &v, &delta).unwrap(),
            &delta,
        )
        .unwrap();
        assert_eq!(degree_of(&p2v.add(&p11), &delta), StateDegree::Mixed);

        let k3 = preset("k3").unwrap();
        let st = apply(&create(2, 1), &v, &k3).unwrap();
        assert_eq!(bidegree_of(&st, &k3), Ok(StateDegree::Homogeneous((3, 1))));
    }

    #[test]
    fn character_examples() {
        let delta = preset("delta").unwrap();
        let ch = graded_character(&delta, 3);
        assert_eq!(
            ch.coeff(3).unwrap(),
            &CoeffPoly::from_t_coefficients([1, 0, 1, 0, 1])
        );
        let ab = preset("abelian").unwrap();
        assert_eq!(
            graded_character(&ab, 2).coeff(2).unwrap().coefficient_sum(),
            int(144)
        );
        for model in crate::surface::all_presets() {
            assert_eq!(
                graded_character(&model, 0).coeff(0).unwrap(),
                &CoeffPoly::one()
            );
            assert_eq!(level_dim(&model, 0), 1);
        }
        assert_eq!(level_dim(&preset("k3").unwrap(), 2), 324);
        assert_eq!(level_dim(&delta, 7), 15);
    }

    #[test]
    fn basis_matches_census() {
        let ab = preset("abelian").unwrap();
        for n in 0..=3 {
            assert_eq!(level_basis(&ab, n).len() as u64, level_dim(&ab, n));
        }
    }

    #[test]
    fn stratum_classes() {
        let delta = preset("delta").unwrap();
        let ones = stratum_class(&Partition::ones(3), &delta).unwrap();
        let (m, _) = FockMonomial::from_product(&delta, &[Factor::new(1, 0); 3]).unwrap();
        assert_eq!(
            ones,
            FockState::monomial(m, BigRational::new(1.into(), 6.into()))
        );
        assert_eq!(degree_of(&ones, &delta), StateDegree::Homogeneous(0));

        let top = stratum_class(&Partition::single(4), &delta).unwrap();
        assert_eq!(degree_of(&top, &delta), StateDegree::Homogeneous(6));

        let nu: Partition = "(2,1)".parse().unwrap();
        let st = stratum_class(&nu, &delta).unwrap();
        let (m, _) =
            FockMonomial::from_product(&delta, &[Factor::new(2, 0), Factor::new(1, 0)]).unwrap();
        assert_eq!(st, FockState::monomial(m, int(1)));
        assert_eq!(degree_of(&st, &delta), StateDegree::Homogeneous(2));

        let p2 = preset("p2").unwrap();
        assert!(matches!(
            stratum_class(&nu, &p2),
            Err(HeisenbergError::WrongModel(_))
        ));
    }
}
