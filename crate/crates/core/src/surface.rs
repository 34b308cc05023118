//! Graded cohomological data of a complex surface.
//!
//! Ordinary classes (cohomology) and compactly supported classes are each
//! numbered globally, grouped by degree `0..=4`. The Poincaré pairing is
//! stored as one block per degree `d`, pairing `H^d` with `H^{4-d}_c`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::series::int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("pairing block for degree {degree} must be {rows}x{cols}, got {got_rows}x{got_cols}")]
    PairingShape {
        degree: usize,
        rows: usize,
        cols: usize,
        got_rows: usize,
        got_cols: usize,
    },
    #[error("pairing block for degree {0} is not square (b_d must equal compact b_(4-d))")]
    PairingNotSquare(usize),
    #[error("pairing block for degree {0} is degenerate")]
    DegeneratePairing(usize),
    #[error("hodge number h^{{{p},{q}}} is outside the surface range")]
    HodgeRange { p: u32, q: u32 },
    #[error("hodge numbers are not symmetric at ({p},{q})")]
    HodgeAsymmetric { p: u32, q: u32 },
    #[error("hodge numbers in degree {degree} sum to {sum}, but b_{degree} = {betti}")]
    HodgeBetti { degree: usize, sum: u32, betti: u32 },
    #[error("unknown surface preset {0:?}")]
    UnknownPreset(String),
}

/// `h^{p,q}` keyed by `(p, q)`.
pub type HodgeNumbers = BTreeMap<(u32, u32), u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    name: String,
    betti: [u32; 5],
    betti_c: [u32; 5],
    pairing: Vec<Matrix<BigRational>>,
    hodge: Option<HodgeNumbers>,
}

impl SurfaceModel {
    /// Validates shapes and nondegeneracy of the pairing and consistency of
    /// the Hodge numbers (pure of weight equal to degree).
    pub fn new(
        name: impl Into<String>,
        betti: [u32; 5],
        betti_c: [u32; 5],
        pairing: Vec<Matrix<BigRational>>,
        hodge: Option<HodgeNumbers>,
    ) -> Result<Self, SurfaceError> {
        assert_eq!(pairing.len(), 5, "one pairing block per degree");
        for (d, block) in pairing.iter().enumerate() {
            let rows = betti[d] as usize;
            let cols = betti_c[4 - d] as usize;
            if rows != cols {
                return Err(SurfaceError::PairingNotSquare(d));
            }
            if block.rows() != rows || block.cols() != cols {
                return Err(SurfaceError::PairingShape {
                    degree: d,
                    rows,
                    cols,
                    got_rows: block.rows(),
                    got_cols: block.cols(),
                });
            }
            if rows > 0 && block.determinant().is_zero() {
                return Err(SurfaceError::DegeneratePairing(d));
            }
        }
        if let Some(h) = &hodge {
            check_hodge(h, &betti)?;
        }
        Ok(SurfaceModel {
            name: name.into(),
            betti,
            betti_c,
            pairing,
            hodge,
        })
    }

    /// Uses the standard pairing: identity blocks in degrees 0, 1, 2, 4 and
    /// minus identity in degree 3, so that `<a,b>` is graded-symmetric.
    pub fn with_standard_pairing(
        name: impl Into<String>,
        betti: [u32; 5],
        betti_c: [u32; 5],
        hodge: Option<HodgeNumbers>,
    ) -> Result<Self, SurfaceError> {
        let mut blocks = Vec::with_capacity(5);
        for d in 0..5 {
            let rows = betti[d] as usize;
            let cols = betti_c[4 - d] as usize;
            if rows != cols {
                return Err(SurfaceError::PairingNotSquare(d));
            }
            let id = Matrix::identity(rows);
            blocks.push(if d == 3 { id.scale(&int(-1)) } else { id });
        }
        Self::new(name, betti, betti_c, blocks, hodge)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn betti(&self) -> [u32; 5] {
        self.betti
    }

    pub fn betti_c(&self) -> [u32; 5] {
        self.betti_c
    }

    pub fn hodge(&self) -> Option<&HodgeNumbers> {
        self.hodge.as_ref()
    }

    pub fn pairing_block(&self, degree: usize) -> &Matrix<BigRational> {
        &self.pairing[degree]
    }

    /// `Σ (-1)^d b_d`.
    pub fn euler(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn total_betti(&self) -> u64 {
        self.betti.iter().map(|&b| b as u64).sum()
    }

    pub fn is_compact_like(&self) -> bool {
        self.betti == self.betti_c
    }

    pub fn num_classes(&self) -> usize {
        self.betti.iter().sum::<u32>() as usize
    }

    pub fn num_compact_classes(&self) -> usize {
        self.betti_c.iter().sum::<u32>() as usize
    }

    /// Degree and position within its degree block of ordinary class `idx`.
    pub fn class_slot(&self, idx: usize) -> Option<(usize, usize)> {
        slot(&self.betti, idx)
    }

    pub fn compact_class_slot(&self, idx: usize) -> Option<(usize, usize)> {
        slot(&self.betti_c, idx)
    }

    pub fn class_degree(&self, idx: usize) -> Option<usize> {
        self.class_slot(idx).map(|(d, _)| d)
    }

    pub fn compact_class_degree(&self, idx: usize) -> Option<usize> {
        self.compact_class_slot(idx).map(|(d, _)| d)
    }

    /// Degrees of all ordinary classes, in index order.
    pub fn class_degrees(&self) -> Vec<usize> {
        (0..self.num_classes())
            .map(|i| self.class_degree(i).unwrap())
            .collect()
    }

    /// Hodge type `(p, q)` of ordinary class `idx`. Within a degree block the
    /// classes are assigned types in order of decreasing `p`.
    pub fn class_hodge_type(&self, idx: usize) -> Option<(u32, u32)> {
        let hodge = self.hodge.as_ref()?;
        let (d, pos) = self.class_slot(idx)?;
        let mut seen = 0usize;
        for p in (0..=d as u32).rev() {
            let q = d as u32 - p;
            let h = hodge.get(&(p, q)).copied().unwrap_or(0) as usize;
            if pos < seen + h {
                return Some((p, q));
            }
            seen += h;
        }
        None
    }

    /// `<alpha, beta>` for an ordinary class and a compactly supported class.
    pub fn pair(&self, alpha: usize, beta: usize) -> Option<BigRational> {
        let (d, i) = self.class_slot(alpha)?;
        let (e, j) = self.compact_class_slot(beta)?;
        if d + e != 4 {
            return Some(BigRational::zero());
        }
        Some(self.pairing[d][(i, j)].clone())
    }
}

fn slot(betti: &[u32; 5], idx: usize) -> Option<(usize, usize)> {
    let mut start = 0usize;
    for (d, &b) in betti.iter().enumerate() {
        let b = b as usize;
        if idx < start + b {
            return Some((d, idx - start));
        }
        start += b;
    }
    None
}

fn check_hodge(h: &HodgeNumbers, betti: &[u32; 5]) -> Result<(), SurfaceError> {
    for (&(p, q), &v) in h {
        if p > 2 || q > 2 {
            return Err(SurfaceError::HodgeRange { p, q });
        }
        if h.get(&(q, p)).copied().unwrap_or(0) != v {
            return Err(SurfaceError::HodgeAsymmetric { p, q });
        }
    }
    for (degree, &b) in betti.iter().enumerate() {
        let sum: u32 = h
            .iter()
            .filter(|((p, q), _)| (p + q) as usize == degree)
            .map(|(_, &v)| v)
            .sum();
        if sum != b {
            return Err(SurfaceError::HodgeBetti {
                degree,
                sum,
                betti: b,
            });
        }
    }
    Ok(())
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} b={:?}", self.name, self.betti)
    }
}

pub const PRESET_NAMES: [&str; 5] = ["delta", "p2", "p1xp1", "k3", "abelian"];

fn hodge_of(entries: &[((u32, u32), u32)]) -> HodgeNumbers {
    entries.iter().copied().filter(|&(_, v)| v > 0).collect()
}

fn hyperbolic_sum(copies: usize) -> Matrix<BigRational> {
    let mut m = Matrix::zeros(2 * copies, 2 * copies);
    for c in 0..copies {
        m[(2 * c, 2 * c + 1)] = BigRational::one();
        m[(2 * c + 1, 2 * c)] = BigRational::one();
    }
    m
}

/// Cartan matrix of E8 (Bourbaki labelling), negated.
fn minus_e8() -> Matrix<BigRational> {
    let edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)];
    let mut m = Matrix::zeros(8, 8);
    for i in 0..8 {
        m[(i, i)] = int(-2);
    }
    for (a, b) in edges {
        m[(a, b)] = int(1);
        m[(b, a)] = int(1);
    }
    m
}

fn block_sum(blocks: &[Matrix<BigRational>]) -> Matrix<BigRational> {
    let n: usize = blocks.iter().map(Matrix::rows).sum();
    let mut m = Matrix::zeros(n, n);
    let mut off = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(off + i, off + j)] = b[(i, j)].clone();
            }
        }
        off += b.rows();
    }
    m
}

fn one() -> Matrix<BigRational> {
    Matrix::identity(1)
}

fn empty() -> Matrix<BigRational> {
    Matrix::zeros(0, 0)
}

/// The shipped surfaces: `delta` (open bidisk, also `c2`), `p2`, `p1xp1`, `k3`, `abelian`.
pub fn preset(name: &str) -> Result<SurfaceModel, SurfaceError> {
    let model = match name.to_ascii_lowercase().as_str() {
        "delta" | "c2" | "bidisk" => SurfaceModel::new(
            "delta",
            [1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1],
            vec![one(), empty(), empty(), empty(), empty()],
            Some(hodge_of(&[((0, 0), 1)])),
        ),
        "p2" => SurfaceModel::new(
            "p2",
            [1, 0, 1, 0, 1],
            [1, 0, 1, 0, 1],
            vec![one(), empty(), one(), empty(), one()],
            Some(hodge_of(&[((0, 0), 1), ((1, 1), 1), ((2, 2), 1)])),
        ),
        "p1xp1" => SurfaceModel::new(
            "p1xp1",
            [1, 0, 2, 0, 1],
            [1, 0, 2, 0, 1],
            vec![one(), empty(), hyperbolic_sum(1), empty(), one()],
            Some(hodge_of(&[((0, 0), 1), ((1, 1), 2), ((2, 2), 1)])),
        ),
        "k3" => SurfaceModel::new(
            "k3",
            [1, 0, 22, 0, 1],
            [1, 0, 22, 0, 1],
            vec![
                one(),
                empty(),
                block_sum(&[hyperbolic_sum(3), minus_e8(), minus_e8()]),
                empty(),
                one(),
            ],
            Some(hodge_of(&[
                ((0, 0), 1),
                ((2, 0), 1),
                ((1, 1), 20),
                ((0, 2), 1),
                ((2, 2), 1),
            ])),
        ),
        "abelian" | "torus" => SurfaceModel::new(
            "abelian",
            [1, 4, 6, 4, 1],
            [1, 4, 6, 4, 1],
            vec![
                one(),
                Matrix::identity(4),
                hyperbolic_sum(3),
                Matrix::identity(4).scale(&int(-1)),
                one(),
            ],
            Some(hodge_of(&[
                ((0, 0), 1),
                ((1, 0), 2),
                ((0, 1), 2),
                ((2, 0), 1),
                ((1, 1), 4),
                ((0, 2), 1),
                ((2, 1), 2),
                ((1, 2), 2),
                ((2, 2), 1),
            ])),
        ),
        _ => return Err(SurfaceError::UnknownPreset(name.to_string())),
    };
    Ok(model.expect("preset data is consistent"))
}

pub fn all_presets() -> Vec<SurfaceModel> {
    PRESET_NAMES.iter().map(|n| preset(n).unwrap()).collect()
}
