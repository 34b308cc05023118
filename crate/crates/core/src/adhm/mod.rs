//! The commuting-matrix model of `(C^2)^[n]`: triples `(A, B, v)` with
//! `[A, B] = 0` and `v` cyclic, up to `GL(n)` conjugation.
//!
//! Points of the quotient are only ever seen through conjugation-invariant
//! data: the traces `Tr(A^k B^l)`, the joint spectrum with multiplicities,
//! and (for nilpotent triples) the staircase of monomials not killing `v`.

mod gaussian;
mod spectrum;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use gaussian::{GaussianRational, ParseGaussianError};
pub use spectrum::CANDIDATE_NORM_LIMIT;

use crate::linalg::Matrix;
use crate::partitions::Partition;

pub type GMatrix = Matrix<GaussianRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdhmError {
    #[error("matrices do not commute")]
    NotCommuting,
    #[error("a characteristic polynomial does not split over the Gaussian rationals")]
    SpectrumNotSplit,
    #[error("support cycle fails the trace check at (k, l) = ({k}, {l})")]
    TraceMismatch { k: u32, l: u32 },
    #[error("spectrum is not inside the open bidisk")]
    NotInBidisk,
    #[error("torus scalars must be nonzero")]
    ZeroScalar,
    #[error("conjugating matrix is singular")]
    Singular,
    #[error("inconsistent dimensions: {0}")]
    Dimension(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixTriple {
    a: GMatrix,
    b: GMatrix,
    v: Vec<GaussianRational>,
}

impl MatrixTriple {
    pub fn new(a: GMatrix, b: GMatrix, v: Vec<GaussianRational>) -> Result<Self, AdhmError> {
        let n = v.len();
        for (name, m) in [("A", &a), ("B", &b)] {
            if m.rows() != n || m.cols() != n {
                return Err(AdhmError::Dimension(format!(
                    "{name} is {}x{}, expected {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(MatrixTriple { a, b, v })
    }

    /// Diagonal pair with the all-ones vector.
    pub fn diagonal(xs: &[GaussianRational], ys: &[GaussianRational]) -> Result<Self, AdhmError> {
        if xs.len() != ys.len() {
            return Err(AdhmError::Dimension(
                "diagonal entries differ in length".into(),
            ));
        }
        Self::new(
            Matrix::diagonal(xs),
            Matrix::diagonal(ys),
            vec![GaussianRational::one(); xs.len()],
        )
    }

    pub fn n(&self) -> usize {
        self.v.len()
    }

    pub fn a(&self) -> &GMatrix {
        &self.a
    }

    pub fn b(&self) -> &GMatrix {
        &self.b
    }

    pub fn v(&self) -> &[GaussianRational] {
        &self.v
    }

    /// `(G A G^-1, G B G^-1, G v)`.
    pub fn conjugate(&self, g: &GMatrix) -> Result<Self, AdhmError> {
        if g.rows() != self.n() || g.cols() != self.n() {
            return Err(AdhmError::Dimension(
                "conjugating matrix has the wrong size".into(),
            ));
        }
        let inv = g.inverse().ok_or(AdhmError::Singular)?;
        Ok(MatrixTriple {
            a: g.mul(&self.a).mul(&inv),
            b: g.mul(&self.b).mul(&inv),
            v: g.mul_vec(&self.v),
        })
    }
}

impl fmt::Display for MatrixTriple {
    /// The triple file format read by [`parse_triple`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for m in [&self.a, &self.b] {
            for i in 0..m.rows() {
                let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
                writeln!(f, "{}", row.join(", "))?;
            }
        }
        let v: Vec<String> = self.v.iter().map(ToString::to_string).collect();
        writeln!(f, "{}", v.join(", "))
    }
}

pub fn is_commuting(tr: &MatrixTriple) -> bool {
    tr.a.mul(&tr.b) == tr.b.mul(&tr.a)
}

fn require_commuting(tr: &MatrixTriple) -> Result<(), AdhmError> {
    if is_commuting(tr) {
        Ok(())
    } else {
        Err(AdhmError::NotCommuting)
    }
}

/// Whether `span{A^k B^l v} = C^n`, by growing the Krylov span until it stops.
pub fn is_stable(tr: &MatrixTriple) -> Result<bool, AdhmError> {
    require_commuting(tr)?;
    Ok(krylov_dimension(tr) == tr.n())
}

fn krylov_dimension(tr: &MatrixTriple) -> usize {
    let n = tr.n();
    let mut basis: Vec<Vec<GaussianRational>> = Vec::new();
    let mut frontier = vec![tr.v.clone()];
    let rank_of = |vs: &[Vec<GaussianRational>]| {
        if vs.is_empty() {
            0
        } else {
            Matrix::from_rows(vs.to_vec()).rank()
        }
    };
    while !frontier.is_empty() && basis.len() < n {
        let mut next = Vec::new();
        for w in frontier {
            let mut trial = basis.clone();
            trial.push(w.clone());
            if rank_of(&trial) > basis.len() {
                basis = trial;
                next.push(tr.a.mul_vec(&w));
                next.push(tr.b.mul_vec(&w));
            }
        }
        frontier = next;
    }
    basis.len()
}

/// `Tr(A^k B^l)`.
pub fn invariant(tr: &MatrixTriple, k: u32, l: u32) -> GaussianRational {
    tr.a.pow(k).mul(&tr.b.pow(l)).trace()
}

/// A 0-cycle on `C^2`: support points with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SupportCycle {
    points: BTreeMap<(GaussianRational, GaussianRational), usize>,
}

impl SupportCycle {
    pub fn from_points<I>(points: I) -> Self
    where
        I: IntoIterator<Item = ((GaussianRational, GaussianRational), usize)>,
    {
        let mut out = SupportCycle::default();
        for (p, m) in points {
            if m > 0 {
                *out.points.entry(p).or_insert(0) += m;
            }
        }
        out
    }

    pub fn points(&self) -> impl Iterator<Item = (&(GaussianRational, GaussianRational), usize)> {
        self.points.iter().map(|(p, &m)| (p, m))
    }

    pub fn degree(&self) -> usize {
        self.points.values().sum()
    }

    pub fn multiplicity(&self, x: &GaussianRational, y: &GaussianRational) -> usize {
        self.points
            .get(&(x.clone(), y.clone()))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ mult · x^k y^l`.
    pub fn power_sum(&self, k: u32, l: u32) -> GaussianRational {
        self.points
            .iter()
            .fold(GaussianRational::zero(), |acc, ((x, y), &m)| {
                acc + x.pow(k) * y.pow(l) * GaussianRational::from(m as i64)
            })
    }

    /// The stratum of the cycle: its multiplicities as a partition.
    pub fn partition_type(&self) -> Partition {
        Partition::from_unsorted(self.points.values().copied().collect())
            .expect("positive multiplicities")
    }
}

impl fmt::Display for SupportCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.points.is_empty() {
            return write!(f, "0");
        }
        for (i, ((x, y), m)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m > 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "({x}, {y})")?;
        }
        Ok(())
    }
}

/// The Douady–Barlet image: the joint spectrum of `(A, B)` with multiplicities.
///
/// Checked against `Σ x^k y^l = Tr(A^k B^l)` for all `k + l <= n`.
pub fn barlet_support(tr: &MatrixTriple) -> Result<SupportCycle, AdhmError> {
    require_commuting(tr)?;
    let points = spectrum::joint_spectrum(&tr.a, &tr.b).ok_or(AdhmError::SpectrumNotSplit)?;
    let cycle = SupportCycle::from_points(points);
    let n = tr.n() as u32;
    for k in 0..=n {
        for l in 0..=n - k {
            if cycle.power_sum(k, l) != invariant(tr, k, l) {
                return Err(AdhmError::TraceMismatch { k, l });
            }
        }
    }
    Ok(cycle)
}

fn max_norm_sq(cycle: &SupportCycle) -> BigRational {
    cycle
        .points()
        .flat_map(|((x, y), _)| [x.norm_sq(), y.norm_sq()])
        .max()
        .unwrap_or_else(BigRational::zero)
}

/// Every support point has `|x| < 1` and `|y| < 1`.
pub fn in_bidisk(tr: &MatrixTriple) -> Result<bool, AdhmError> {
    let cycle = barlet_support(tr)?;
    Ok(max_norm_sq(&cycle) < BigRational::one())
}

/// Rational bounds `lo <= φ <= hi` on the largest eigenvalue modulus `φ` of
/// `A` and `B`, with `hi - lo <= precision` and `hi < 1`. Equal when exact.
pub fn max_modulus_bounds(
    tr: &MatrixTriple,
    precision: &BigRational,
) -> Result<(BigRational, BigRational), AdhmError> {
    let cycle = barlet_support(tr)?;
    let phi_sq = max_norm_sq(&cycle);
    if phi_sq >= BigRational::one() {
        return Err(AdhmError::NotInBidisk);
    }
    let mut eps = precision.clone();
    loop {
        let (lo, hi) = spectrum::sqrt_bounds(&phi_sq, &eps);
        if hi < BigRational::one() {
            return Ok((lo, hi));
        }
        eps = eps / BigRational::from_integer(2.into());
    }
}

/// The retraction `(A, B, v) ↦ (A/(1-φ), B/(1-φ), v)` of the bidisk model onto
/// all of `(C^2)^[n]`.
///
/// When `φ` is irrational the scale is `1/(1-hi)` with `hi` the upper bound of
/// [`max_modulus_bounds`], so it overestimates the true factor, never
/// underestimates it.
pub fn retract(tr: &MatrixTriple, precision: &BigRational) -> Result<MatrixTriple, AdhmError> {
    let (_, hi) = max_modulus_bounds(tr, precision)?;
    let scale = GaussianRational::real(BigRational::one() / (BigRational::one() - hi));
    Ok(MatrixTriple {
        a: tr.a.scale(&scale),
        b: tr.b.scale(&scale),
        v: tr.v.clone(),
    })
}

/// `(λ1 A, λ2 B, v)`.
pub fn torus_act(
    l1: &GaussianRational,
    l2: &GaussianRational,
    tr: &MatrixTriple,
) -> Result<MatrixTriple, AdhmError> {
    if l1.is_zero() || l2.is_zero() {
        return Err(AdhmError::ZeroScalar);
    }
    Ok(MatrixTriple {
        a: tr.a.scale(l1),
        b: tr.b.scale(l2),
        v: tr.v.clone(),
    })
}

/// Monomials `x^i y^j` with `j < μ_{i+1}`, ordered by `(i, j)`.
pub fn staircase(mu: &Partition) -> Vec<(usize, usize)> {
    mu.parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect()
}

/// Multiplication by `x` and `y` on `C[x, y] / I_μ` in the staircase basis,
/// with `v` the class of `1`.
pub fn from_monomial_ideal(mu: &Partition) -> MatrixTriple {
    let cells = staircase(mu);
    let n = cells.len();
    let index: BTreeMap<(usize, usize), usize> =
        cells.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let mut a = GMatrix::zeros(n, n);
    let mut b = GMatrix::zeros(n, n);
    for (col, &(i, j)) in cells.iter().enumerate() {
        if let Some(&row) = index.get(&(i + 1, j)) {
            a[(row, col)] = GaussianRational::one();
        }
        if let Some(&row) = index.get(&(i, j + 1)) {
            b[(row, col)] = GaussianRational::one();
        }
    }
    let mut v = vec![GaussianRational::zero(); n];
    if n > 0 {
        v[index[&(0, 0)]] = GaussianRational::one();
    }
    MatrixTriple { a, b, v }
}

/// `Diag(λ1^i λ2^j)` over the staircase of `μ`: conjugating the monomial triple
/// by it gives the torus-translated triple.
pub fn staircase_weights(mu: &Partition, l1: &GaussianRational, l2: &GaussianRational) -> GMatrix {
    let weights: Vec<GaussianRational> = staircase(mu)
        .into_iter()
        .map(|(i, j)| l1.pow(i as u32) * l2.pow(j as u32))
        .collect();
    Matrix::diagonal(&weights)
}

/// `μ_i = #{j : A^{i-1} B^j v ≠ 0}`: the monomials acting nontrivially on `v`.
/// Conjugation invariant; recovers `μ` from a monomial-ideal triple.
pub fn nonvanishing_staircase(tr: &MatrixTriple) -> Result<Partition, AdhmError> {
    require_commuting(tr)?;
    let mut rows = Vec::new();
    let mut x_power = tr.v.clone();
    while x_power.iter().any(|c| !c.is_zero()) && rows.len() <= tr.n() {
        let mut count = 0;
        let mut w = x_power.clone();
        while w.iter().any(|c| !c.is_zero()) && count <= tr.n() {
            count += 1;
            w = tr.b.mul_vec(&w);
        }
        rows.push(count);
        x_power = tr.a.mul_vec(&x_power);
    }
    // an order ideal of monomials, so the counts are weakly decreasing
    Partition::new(rows).map_err(|e| AdhmError::Dimension(e.to_string()))
}

/// Reads a triple: `n`, then `n` rows of `A`, `n` rows of `B`, then `v`, each a
/// line of comma-separated scalars `a/b+c/d i`. Blank lines and `#` comments
/// are skipped.
pub fn parse_triple(text: &str) -> Result<MatrixTriple, AdhmError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, n_text) = lines.next().ok_or(AdhmError::Parse {
        line: 0,
        message: "empty triple file".into(),
    })?;
    let n: usize = n_text.parse().map_err(|_| AdhmError::Parse {
        line: first,
        message: format!("expected the size n, found {n_text:?}"),
    })?;
    let mut read_row = |what: &str| -> Result<Vec<GaussianRational>, AdhmError> {
        let (line, text) = lines.next().ok_or(AdhmError::Parse {
            line: 0,
            message: format!("missing {what}"),
        })?;
        let row = text
            .split(',')
            .map(|s| s.trim().parse::<GaussianRational>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| AdhmError::Parse {
                line,
                message: e.to_string(),
            })?;
        if row.len() != n {
            return Err(AdhmError::Parse {
                line,
                message: format!("{what} has {} entries, expected {n}", row.len()),
            });
        }
        Ok(row)
    };
    let mut matrices = Vec::new();
    for name in ["A", "B"] {
        let rows = (0..n)
            .map(|i| read_row(&format!("row {} of {name}", i + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        matrices.push(if n == 0 {
            GMatrix::zeros(0, 0)
        } else {
            Matrix::from_rows(rows)
        });
    }
    let v = if n == 0 { Vec::new() } else { read_row("v")? };
    if let Some((line, _)) = lines.next() {
        return Err(AdhmError::Parse {
            line,
            message: "unexpected trailing content".into(),
        });
    }
    let b = matrices.pop().unwrap();
    let a = matrices.pop().unwrap();
    MatrixTriple::new(a, b, v)
}
