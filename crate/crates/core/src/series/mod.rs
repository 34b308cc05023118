//! Truncated power series in `q` with polynomial coefficients, and expansion
//! of infinite products of the shape `∏_m (1 ± t^{c·m+d} q^m)^{±w}`.
//!
//! All arithmetic is exact. The truncation order is fixed at construction and
//! combining series of different orders is an error.

mod poly;

pub(crate) use poly::int;
pub use poly::{Assignment, CoeffPoly, Exponents, Subst, Var};

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

/// `Σ_{i=0}^{N} c_i q^i`, coefficients beyond `q^N` are discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTSeries {
    coeffs: Vec<CoeffPoly>,
}

impl QTSeries {
    pub fn zero(order: usize) -> Self {
        QTSeries {
            coeffs: vec![CoeffPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = CoeffPoly::one();
        s
    }

    /// Builds a series from its first coefficients; missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: Vec<CoeffPoly>) -> Result<Self, SeriesError> {
        if coeffs.len() > order + 1 {
            return Err(SeriesError::IndexOutOfRange {
                index: coeffs.len() - 1,
                order,
            });
        }
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> Result<&CoeffPoly, SeriesError> {
        self.coeffs.get(m).ok_or(SeriesError::IndexOutOfRange {
            index: m,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[CoeffPoly] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(QTSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(QTSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Drops coefficients above `order`. Raising the order is an error.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(QTSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn specialize(&self, assignment: &Assignment) -> Self {
        QTSeries {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| c.specialize(assignment))
                .collect(),
        }
    }

    /// Multiplies in place by a series supported on multiples of `step`:
    /// `Σ_k terms[k] q^{step·k}`, each term a single scaled monomial.
    fn mul_sparse(&mut self, step: usize, terms: &[(Exponents, BigRational)]) {
        let n = self.order();
        let old = self.coeffs.clone();
        for i in 0..=n {
            let mut acc = CoeffPoly::zero();
            for (k, (exps, c)) in terms.iter().enumerate() {
                let shift = step * k;
                if shift > i {
                    break;
                }
                let src = &old[i - shift];
                if !src.is_zero() {
                    acc += &src.mul_monomial(exps, c);
                }
            }
            self.coeffs[i] = acc;
        }
    }
}

impl fmt::Display for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^{i}")?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `c·m + d`, required to be non-negative for every `m >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Affine {
    pub slope: i64,
    pub offset: i64,
}

impl Affine {
    pub fn new(slope: i64, offset: i64) -> Self {
        assert!(
            slope >= 0 && slope + offset >= 0,
            "exponent {slope}·m + {offset} is negative for some m >= 1"
        );
        Affine { slope, offset }
    }

    pub fn at(&self, m: usize) -> u32 {
        (self.slope * m as i64 + self.offset) as u32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `(1 ± M q^m)^w`
    Numerator,
    /// `(1 ± M q^m)^{-w}`
    Denominator,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TermSign {
    Plus,
    Minus,
}

/// One family `∏_{m>=1} (1 ± t^{e_t(m)} x^{e_x(m)} y^{e_y(m)} q^m)^{±w}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorFamily {
    pub kind: FactorKind,
    pub sign: TermSign,
    pub exponents: [Affine; 3],
    pub weight: u32,
    /// Restricts the product to `m <= max_mode` when set.
    pub max_mode: Option<usize>,
}

impl FactorFamily {
    /// `(1 + M q^m)^w`, the shape of odd-cohomology factors.
    pub fn numerator(weight: u32) -> Self {
        FactorFamily {
            kind: FactorKind::Numerator,
            sign: TermSign::Plus,
            exponents: [Affine::default(); 3],
            weight,
            max_mode: None,
        }
    }

    /// `(1 - M q^m)^{-w}`, the shape of even-cohomology factors.
    pub fn denominator(weight: u32) -> Self {
        FactorFamily {
            kind: FactorKind::Denominator,
            sign: TermSign::Minus,
            exponents: [Affine::default(); 3],
            weight,
            max_mode: None,
        }
    }

    pub fn with_sign(mut self, sign: TermSign) -> Self {
        self.sign = sign;
        self
    }

    pub fn t(mut self, slope: i64, offset: i64) -> Self {
        self.exponents[0] = Affine::new(slope, offset);
        self
    }

    pub fn x(mut self, slope: i64, offset: i64) -> Self {
        self.exponents[1] = Affine::new(slope, offset);
        self
    }

    pub fn y(mut self, slope: i64, offset: i64) -> Self {
        self.exponents[2] = Affine::new(slope, offset);
        self
    }

    pub fn up_to_mode(mut self, max_mode: usize) -> Self {
        self.max_mode = Some(max_mode);
        self
    }

    /// Coefficients of `(1 ± M q^m)^{±w}` up to `q^order`, as scaled monomials in `q^m`.
    fn factor_terms(&self, m: usize, order: usize) -> Vec<(Exponents, BigRational)> {
        let base = [
            self.exponents[0].at(m),
            self.exponents[1].at(m),
            self.exponents[2].at(m),
        ];
        let max_k = order / m;
        let w = BigInt::from(self.weight);
        let sign = match self.sign {
            TermSign::Plus => BigInt::one(),
            TermSign::Minus => -BigInt::one(),
        };
        let mut out = Vec::with_capacity(max_k + 1);
        // c_k = binom(w, k) for numerators, binom(-w, k) for denominators
        let mut binom = BigInt::one();
        let mut sign_pow = BigInt::one();
        for k in 0..=max_k {
            if k > 0 {
                let kk = BigInt::from(k);
                binom = match self.kind {
                    FactorKind::Numerator => binom * (&w - &kk + BigInt::one()) / kk,
                    FactorKind::Denominator => -(binom * (&w + &kk - BigInt::one())) / kk,
                };
                sign_pow *= &sign;
            }
            if binom.is_zero() {
                break;
            }
            let exps = [base[0] * k as u32, base[1] * k as u32, base[2] * k as u32];
            out.push((exps, BigRational::from_integer(&binom * &sign_pow)));
        }
        out
    }
}

/// Expands `∏_{m=1}^{N} ∏_{families} factor(m)` to order `q^N`.
/// Factors with `m > N` only contribute beyond `q^N`.
pub fn product_expand(families: &[FactorFamily], order: usize) -> QTSeries {
    let mut s = QTSeries::one(order);
    for m in 1..=order {
        for fam in families {
            if fam.weight == 0 || fam.max_mode.is_some_and(|top| m > top) {
                continue;
            }
            let terms = fam.factor_terms(m, order);
            s.mul_sparse(m, &terms);
        }
    }
    s
}

/// `Σ p(n) q^n` truncated at `order`.
pub fn partition_series(order: usize) -> QTSeries {
    product_expand(&[FactorFamily::denominator(1)], order)
}

/// Integer coefficient `q^n` of `∏(1 - q^m)^{-e}`, any sign of `e`.
pub fn eta_power_coefficient(e: i64, n: usize) -> BigInt {
    let fam = if e >= 0 {
        FactorFamily::denominator(e as u32)
    } else {
        FactorFamily::numerator(e.unsigned_abs() as u32).with_sign(TermSign::Minus)
    };
    let s = product_expand(&[fam], n);
    s.coeffs[n].coeff(&[0, 0, 0]).to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_series(order: usize, rows: &[&[i64]]) -> QTSeries {
        QTSeries::from_coeffs(
            order,
            rows.iter()
                .map(|r| CoeffPoly::from_t_coefficients(r.iter().copied()))
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(product_expand(&[], 5), QTSeries::one(5));
    }

    #[test]
    fn partition_counts() {
        let s = partition_series(10);
        let counts: Vec<BigRational> = s.coeffs().iter().map(|c| c.t_coeff(0)).collect();
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        assert_eq!(counts, expected.iter().map(|&v| int(v)).collect::<Vec<_>>());
    }

    #[test]
    fn eta_24_second_coefficient() {
        // (1-q)^{-24}(1-q^2)^{-24}: C(25,2) + 24
        let s = product_expand(&[FactorFamily::denominator(24)], 2);
        assert_eq!(s.coeff(2).unwrap(), &CoeffPoly::constant(int(324)));
        assert_eq!(eta_power_coefficient(24, 3), BigInt::from(3200));
        assert_eq!(eta_power_coefficient(-1, 5), BigInt::from(1)); // 1 - q - q^2 + q^5 + ...
        assert_eq!(eta_power_coefficient(-1, 3), BigInt::from(0));
        assert_eq!(eta_power_coefficient(-1, 2), BigInt::from(-1));
    }

    #[test]
    fn mul_by_one_minus_q() {
        let p = partition_series(8);
        let one_minus_q = t_series(8, &[&[1], &[-1]]);
        let prod = one_minus_q.mul(&p).unwrap();
        let pn = [1i64, 1, 2, 3, 5, 7, 11, 15, 22];
        for n in 0..=8 {
            let expected = pn[n] - if n > 0 { pn[n - 1] } else { 0 };
            assert_eq!(
                prod.coeff(n).unwrap(),
                &CoeffPoly::from_t_coefficients([expected])
            );
        }
    }

    #[test]
    fn order_errors() {
        let a = QTSeries::one(3);
        let b = QTSeries::one(4);
        assert_eq!(
            a.mul(&b),
            Err(SeriesError::OrderMismatch { left: 3, right: 4 })
        );
        assert_eq!(
            a.coeff(4),
            Err(SeriesError::IndexOutOfRange { index: 4, order: 3 })
        );
        assert!(a.truncate(5).is_err());
        assert!(QTSeries::from_coeffs(1, vec![CoeffPoly::one(); 3]).is_err());
    }

    #[test]
    fn restricted_modes() {
        // only the m = 1 factor of (1 - t^2 q^m)^{-1}
        let s = product_expand(&[FactorFamily::denominator(1).t(0, 2).up_to_mode(1)], 4);
        for k in 0..=4 {
            assert_eq!(
                s.coeff(k).unwrap(),
                &CoeffPoly::var_power(Var::T, 2 * k as u32)
            );
        }
    }

    #[test]
    #[should_panic]
    fn negative_exponent_rejected() {
        let _ = FactorFamily::numerator(1).t(-1, 3);
    }
}
