//! Exact root finding over the Gaussian rationals for characteristic
//! polynomials, and joint spectra of commuting matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gaussian::GaussianRational as G;
use crate::linalg::Matrix;

/// Candidate roots are searched in a disc of squared radius at most this many
/// lattice units; polynomials needing more are reported as not split.
pub const CANDIDATE_NORM_LIMIT: u64 = 4_000_000;

/// Coefficients, lowest degree first, with no trailing zeros.
pub(crate) type Poly = Vec<G>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &Poly) -> Poly {
    let mut d: Poly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.clone() * G::from(k as i64))
        .collect();
    trim(&mut d);
    d
}

/// Quotient and remainder. `b` must be nonzero.
fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let mut rem = a.clone();
    trim(&mut rem);
    let lead = b.last().expect("nonzero divisor").clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![G::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap().clone() / lead.clone();
        for (k, bk) in b.iter().enumerate() {
            rem[shift + k] = rem[shift + k].clone() - c.clone() * bk.clone();
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

fn monic(p: &Poly) -> Poly {
    let lead = p.last().expect("nonzero polynomial").clone();
    p.iter().map(|c| c.clone() / lead.clone()).collect()
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// The monic square-free part `p / gcd(p, p')`.
pub(crate) fn square_free(p: &Poly) -> Poly {
    let d = derivative(p);
    if d.is_empty() {
        return monic(p);
    }
    let g = gcd(p, &d);
    monic(&div_rem(p, &g).0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    fn add(&self, o: &GaussInt) -> GaussInt {
        GaussInt {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

fn eval_int(p: &[GaussInt], w: &GaussInt) -> GaussInt {
    let zero = GaussInt {
        re: BigInt::zero(),
        im: BigInt::zero(),
    };
    p.iter().rev().fold(zero, |acc, c| acc.mul(w).add(c))
}

/// All roots of a monic square-free polynomial over `Q(i)`, or `None` when
/// some root is not a Gaussian rational or lies beyond the search disc.
///
/// With `D` the common denominator of the coefficients, `w = D z` is a root
/// of a monic polynomial with Gaussian-integer coefficients, so `w` is a
/// Gaussian integer whose norm divides the norm of the constant term.
pub(crate) fn gaussian_roots(sqfree: &Poly) -> Option<Vec<G>> {
    let degree = sqfree.len() - 1;
    let scale = sqfree
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator_lcm()));
    let mut coeffs: Vec<GaussInt> = sqfree
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let factor = BigRational::from_integer(scale.pow((degree - k) as u32));
            let re = &c.re * &factor;
            let im = &c.im * &factor;
            debug_assert!(re.is_integer() && im.is_integer());
            GaussInt {
                re: re.to_integer(),
                im: im.to_integer(),
            }
        })
        .collect();

    let mut roots = Vec::new();
    if coeffs[0].is_zero() {
        roots.push(G::zero());
        coeffs.remove(0);
    }
    let remaining = coeffs.len() - 1;
    if remaining > 0 {
        // Fujiwara: |w| <= 2 max_k |c_{d-k}|^{1/k}
        let d = remaining;
        let mut radius = BigInt::zero();
        for k in 1..=d {
            let r = coeffs[d - k].norm().nth_root(2 * k as u32) + BigInt::one();
            radius = radius.max(r);
        }
        radius *= 2;
        let radius_sq = &radius * &radius;
        if radius_sq > BigInt::from(CANDIDATE_NORM_LIMIT) {
            return None;
        }
        let r: i64 = radius.try_into().ok()?;
        let constant_norm = coeffs[0].norm();
        let mut found = 0;
        'search: for a in -r..=r {
            for b in -r..=r {
                let norm = a * a + b * b;
                if norm == 0 || norm > r * r || !(&constant_norm % norm).is_zero() {
                    continue;
                }
                let w = GaussInt {
                    re: a.into(),
                    im: b.into(),
                };
                if eval_int(&coeffs, &w).is_zero() {
                    let denom = BigRational::from_integer(scale.clone());
                    roots.push(G::new(
                        BigRational::from_integer(a.into()) / &denom,
                        BigRational::from_integer(b.into()) / &denom,
                    ));
                    found += 1;
                    if found == d {
                        break 'search;
                    }
                }
            }
        }
    }
    if roots.len() != degree {
        return None;
    }
    roots.sort();
    Some(roots)
}

/// Characteristic polynomial `det(z I - M)`, lowest degree first.
pub(crate) fn char_poly(m: &Matrix<G>) -> Poly {
    m.characteristic_polynomial()
}

/// Distinct eigenvalues of `m` in `Q(i)` with their algebraic multiplicities
/// and generalized eigenspaces (as column bases), or `None` when the
/// spectrum does not split.
pub(crate) fn generalized_eigenspaces(m: &Matrix<G>) -> Option<Vec<(G, Vec<Vec<G>>)>> {
    let n = m.rows();
    if n == 0 {
        return Some(Vec::new());
    }
    let roots = gaussian_roots(&square_free(&char_poly(m)))?;
    let id = Matrix::<G>::identity(n);
    let mut out = Vec::new();
    let mut total = 0;
    for x in roots {
        let shifted = m.sub(&id.scale(&x)).pow(n as u32);
        let basis = shifted.nullspace();
        total += basis.len();
        out.push((x, basis));
    }
    (total == n).then_some(out)
}

/// Matrix of `m` restricted to the invariant subspace spanned by `basis`.
pub(crate) fn restrict(m: &Matrix<G>, basis: &[Vec<G>]) -> Matrix<G> {
    let n = m.rows();
    let k = Matrix::from_columns(basis, n);
    let (_, pivot_rows) = k.transpose().rref();
    let sub = |mat: &Matrix<G>| {
        Matrix::from_rows(pivot_rows.iter().map(|&r| mat.row(r).to_vec()).collect())
    };
    let image = m.mul(&k);
    let inv = sub(&k).inverse().expect("basis rows are independent");
    inv.mul(&sub(&image))
}

/// Joint spectrum of a commuting pair as `((x, y), multiplicity)`.
pub(crate) fn joint_spectrum(a: &Matrix<G>, b: &Matrix<G>) -> Option<Vec<((G, G), usize)>> {
    let mut points = Vec::new();
    for (x, space) in generalized_eigenspaces(a)? {
        let b_restricted = restrict(b, &space);
        for (y, inner) in generalized_eigenspaces(&b_restricted)? {
            points.push(((x.clone(), y), inner.len()));
        }
    }
    Some(points)
}

/// Upper and lower rational bounds on `sqrt(r)` for `r >= 0`, at most `precision` apart.
pub(crate) fn sqrt_bounds(r: &BigRational, precision: &BigRational) -> (BigRational, BigRational) {
    if let Some(exact) = exact_sqrt(r) {
        return (exact.clone(), exact);
    }
    let mut lo = BigRational::zero();
    let mut hi = if r > &BigRational::one() {
        r.clone()
    } else {
        BigRational::one()
    };
    let two = BigRational::from_integer(2.into());
    while &hi - &lo > *precision {
        let mid = (&lo + &hi) / &two;
        if &(&mid * &mid) <= r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

pub(crate) fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_from_roots(roots: &[G]) -> Poly {
        let mut p: Poly = vec![G::one()];
        for r in roots {
            let mut next = vec![G::zero(); p.len() + 1];
            for (k, c) in p.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + c.clone();
                next[k] = next[k].clone() - c.clone() * r.clone();
            }
            p = next;
        }
        p
    }

    #[test]
    fn finds_gaussian_roots() {
        let mut roots = vec![
            G::from_fractions(1, 2, 0, 1),
            G::from_fractions(-1, 3, 2, 3),
            G::from_ints(0, 0),
            G::from_ints(2, -1),
        ];
        roots.sort();
        let p = poly_from_roots(&roots);
        assert_eq!(gaussian_roots(&square_free(&p)).unwrap(), roots);
    }

    #[test]
    fn square_free_part() {
        let r = [G::from(1), G::from(1), G::from(2), G::i(), G::i(), G::i()];
        let p = poly_from_roots(&r);
        assert_eq!(square_free(&p).len(), 4);
        assert_eq!(
            gaussian_roots(&square_free(&p)).unwrap(),
            vec![G::i(), G::from(1), G::from(2)]
        );
    }

    #[test]
    fn irrational_roots_are_rejected() {
        // z^2 - 2
        let p = vec![G::from(-2), G::zero(), G::one()];
        assert!(gaussian_roots(&square_free(&p)).is_none());
        // z^2 + z + 1 has primitive cube roots of unity
        let p = vec![G::one(), G::one(), G::one()];
        assert!(gaussian_roots(&p).is_none());
    }

    #[test]
    fn sqrt_approximation() {
        let eps = BigRational::new(1.into(), 1000.into());
        let two = BigRational::from_integer(2.into());
        let (lo, hi) = sqrt_bounds(&two, &eps);
        assert!(&lo * &lo <= two && &hi * &hi >= two && &hi - &lo <= eps);
        let quarter = BigRational::new(1.into(), 4.into());
        assert_eq!(
            sqrt_bounds(&quarter, &eps),
            (
                BigRational::new(1.into(), 2.into()),
                BigRational::new(1.into(), 2.into())
            )
        );
    }
}
