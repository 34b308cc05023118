//! Exact polynomials in the cohomological variables `t`, `x`, `y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::SeriesError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    X,
    Y,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::T, Var::X, Var::Y];

    fn slot(self) -> usize {
        match self {
            Var::T => 0,
            Var::X => 1,
            Var::Y => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::X => "x",
            Var::Y => "y",
        }
    }

    pub fn from_name(name: &str) -> Result<Var, SeriesError> {
        match name.trim() {
            "t" => Ok(Var::T),
            "x" => Ok(Var::X),
            "y" => Ok(Var::Y),
            other => Err(SeriesError::UnknownVariable(other.to_string())),
        }
    }
}

/// Exponents of `(t, x, y)`.
pub type Exponents = [u32; 3];

/// A polynomial with exact rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<Exponents, BigRational>,
}

pub(crate) fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl CoeffPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term([0, 0, 0], c)
    }

    pub fn term(exps: Exponents, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        CoeffPoly { terms }
    }

    /// `v^k`.
    pub fn var_power(v: Var, k: u32) -> Self {
        let mut exps = [0; 3];
        exps[v.slot()] = k;
        Self::term(exps, BigRational::one())
    }

    /// Univariate polynomial `Σ coeffs[i] t^i`.
    pub fn from_t_coefficients<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            p.add_term([i as u32, 0, 0], int(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &Exponents) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Coefficient of `t^k` (other variables at exponent zero).
    pub fn t_coeff(&self, k: u32) -> BigRational {
        self.coeff(&[k, 0, 0])
    }

    pub fn add_term(&mut self, exps: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `c · t^e0 x^e1 y^e2`.
    pub fn mul_monomial(&self, exps: &Exponents, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| ([e[0] + exps[0], e[1] + exps[1], e[2] + exps[2]], v * c))
            .collect();
        CoeffPoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.mul_monomial(&[0, 0, 0], c)
    }

    /// Sum of all coefficients, i.e. evaluation at `t = x = y = 1`.
    pub fn coefficient_sum(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Highest power of `v` with a nonzero coefficient.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.slot()]).max()
    }

    /// Dense coefficients of a polynomial in `t` alone.
    pub fn t_coefficients(&self) -> Vec<BigRational> {
        let top = self.degree_in(Var::T).unwrap_or(0) as usize;
        let mut out = vec![BigRational::zero(); if self.is_zero() { 0 } else { top + 1 }];
        for (e, c) in &self.terms {
            out[e[0] as usize] += c;
        }
        out
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v.slot()] > 0)
    }

    /// Substitutes variables according to `assignment`; unassigned variables stay.
    pub fn specialize(&self, assignment: &Assignment) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut exps = [0u32; 3];
            let mut coeff = c.clone();
            for v in Var::ALL {
                let k = e[v.slot()];
                if k == 0 {
                    continue;
                }
                match assignment.get(v) {
                    None => exps[v.slot()] += k,
                    Some(Subst::Var(w)) => exps[w.slot()] += k,
                    Some(Subst::Value(r)) => coeff *= pow(r, k),
                }
            }
            out.add_term(exps, coeff);
        }
        out
    }
}

fn pow(r: &BigRational, k: u32) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * r)
}

/// What a variable is replaced with by [`CoeffPoly::specialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Value(BigRational),
    Var(Var),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    map: BTreeMap<Var, Subst>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(mut self, name: &str, value: BigRational) -> Result<Self, SeriesError> {
        self.map.insert(Var::from_name(name)?, Subst::Value(value));
        Ok(self)
    }

    pub fn rename(mut self, name: &str, target: &str) -> Result<Self, SeriesError> {
        self.map
            .insert(Var::from_name(name)?, Subst::Var(Var::from_name(target)?));
        Ok(self)
    }

    pub fn get(&self, v: Var) -> Option<&Subst> {
        self.map.get(&v)
    }

    /// `t = -1`, the Euler specialization.
    pub fn euler() -> Self {
        Self::new()
            .value("t", int(-1))
            .expect("t is a known variable")
    }

    /// `x -> t, y -> t`.
    pub fn hodge_to_poincare() -> Self {
        Self::new()
            .rename("x", "t")
            .and_then(|a| a.rename("y", "t"))
            .expect("x, y, t are known variables")
    }
}

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = self.clone();
        out += &-rhs;
        out
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        let mut out = CoeffPoly::zero();
        for (e, c) in &rhs.terms {
            out += &self.mul_monomial(e, c);
        }
        out
    }
}

fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for CoeffPoly {
    /// Terms in increasing total degree; within a degree, higher powers of
    /// the earlier variable (`t`, then `x`, then `y`) come first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Exponents, &BigRational)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        for (i, (e, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mut vars = String::new();
            for v in Var::ALL {
                match e[v.slot()] {
                    0 => {}
                    1 => vars.push_str(v.name()),
                    k => vars.push_str(&format!("{}^{k}", v.name())),
                }
            }
            if vars.is_empty() || !magnitude.is_one() {
                write!(f, "{}", render_rational(&magnitude))?;
            }
            write!(f, "{vars}")?;
        }
        Ok(())
    }
}
