//! Independent oracles shared by the integration tests. Nothing here calls the
//! library routine it is meant to check.

#![allow(dead_code)]

use hilbert_points::adhm::{GMatrix, GaussianRational, MatrixTriple};
use hilbert_points::linalg::Matrix;
use hilbert_points::series::CoeffPoly;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;

/// `p(n)` for `n <= max` by Euler's pentagonal recurrence.
pub fn partition_numbers(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max as i64 {
        let mut total = 0i64;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                total += sign * p[(n - g2) as usize];
            }
        }
        p[n as usize] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Series in `q` whose coefficients are integer polynomials in `t`, as dense arrays.
pub struct DenseSeries {
    pub order: usize,
    pub max_t: usize,
    pub coeffs: Vec<Vec<i64>>,
}

impl DenseSeries {
    pub fn one(order: usize, max_t: usize) -> Self {
        let mut coeffs = vec![vec![0; max_t + 1]; order + 1];
        coeffs[0][0] = 1;
        DenseSeries {
            order,
            max_t,
            coeffs,
        }
    }

    /// Multiplies in place by `1 + sign t^a q^m`.
    pub fn times_binomial(&mut self, sign: i64, a: usize, m: usize) {
        for n in (m..=self.order).rev() {
            for d in (a..=self.max_t).rev() {
                let v = self.coeffs[n - m][d - a];
                self.coeffs[n][d] += sign * v;
            }
        }
    }

    /// Multiplies in place by `1 / (1 - t^a q^m)`.
    pub fn times_geometric(&mut self, a: usize, m: usize) {
        for n in m..=self.order {
            for d in a..=self.max_t {
                let v = self.coeffs[n - m][d - a];
                self.coeffs[n][d] += v;
            }
        }
    }
}

/// `∏_m (1+t^{2m-1}q^m)^{b1}(1+t^{2m+1}q^m)^{b3} / ((1-t^{2m-2}q^m)^{b0}(1-t^{2m}q^m)^{b2}(1-t^{2m+2}q^m)^{b4})`
/// by repeated multiplication by linear factors and geometric series.
pub fn goettsche_oracle(betti: [u32; 5], order: usize) -> DenseSeries {
    let mut s = DenseSeries::one(order, 4 * order + 2);
    for m in 1..=order {
        for _ in 0..betti[1] {
            s.times_binomial(1, 2 * m - 1, m);
        }
        for _ in 0..betti[3] {
            s.times_binomial(1, 2 * m + 1, m);
        }
        for (k, shift) in [(0usize, 0usize), (2, 2), (4, 4)] {
            for _ in 0..betti[k] {
                s.times_geometric(2 * m + shift - 2, m);
            }
        }
    }
    s
}

/// `∏_m (1 - q^m)^{-e}` coefficients up to `order`, for any integer `e`.
pub fn eta_oracle(e: i64, order: usize) -> Vec<i64> {
    let mut s = DenseSeries::one(order, 0);
    for m in 1..=order {
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                s.times_geometric(0, m);
            } else {
                s.times_binomial(-1, 0, m);
            }
        }
    }
    s.coeffs.iter().map(|c| c[0]).collect()
}

/// Dense `t`-coefficients of a polynomial in `t` only, padded to `len`.
pub fn t_dense(p: &CoeffPoly, len: usize) -> Vec<i64> {
    let mut out = vec![0; len];
    for (exps, c) in p.terms() {
        assert_eq!((exps[1], exps[2]), (0, 0), "polynomial in t only");
        assert!(c.is_integer());
        out[exps[0] as usize] = c.to_integer().to_i64().unwrap();
    }
    out
}

pub fn gauss(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> GaussianRational {
    GaussianRational::from_fractions(re_num, re_den, im_num, im_den)
}

/// A small Gaussian rational `a/b + c/d i` with `|a|, |c| <= 2`, `b, d ∈ {1, 2}`.
pub fn random_scalar<R: Rng>(rng: &mut R) -> GaussianRational {
    gauss(
        rng.gen_range(-2..=2),
        rng.gen_range(1..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(1..=2),
    )
}

/// Invertible matrix with small Gaussian-integer entries.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> GMatrix {
    loop {
        let rows = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        GaussianRational::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1))
                    })
                    .collect()
            })
            .collect();
        let g: GMatrix = Matrix::from_rows(rows);
        if !g.determinant().is_zero() {
            return g;
        }
    }
}

/// A commuting pair conjugate to `(diag(xs), diag(ys))`, with its joint eigenvalues.
pub fn random_split_pair<R: Rng>(
    rng: &mut R,
    n: usize,
) -> (MatrixTriple, Vec<(GaussianRational, GaussianRational)>) {
    let pairs: Vec<(GaussianRational, GaussianRational)> = (0..n)
        .map(|_| (random_scalar(rng), random_scalar(rng)))
        .collect();
    let xs: Vec<_> = pairs.iter().map(|p| p.0.clone()).collect();
    let ys: Vec<_> = pairs.iter().map(|p| p.1.clone()).collect();
    let diag = MatrixTriple::diagonal(&xs, &ys).unwrap();
    let g = random_invertible(rng, n);
    (diag.conjugate(&g).unwrap(), pairs)
}
