//! Integer partitions in the two standard notations.
//!
//! A partition of `n` is stored both as its weakly decreasing list of parts
//! (`nu`) and as its dense multiplicity vector `a = (a_1, ..., a_n)`, where
//! `a_i` counts the parts equal to `i`. Strata of the symmetric product
//! `X^(n)` are indexed by these partitions, and the partial order
//! [`stratum_geq`] is the closure order between strata.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("partitions have different weights: {left} vs {right}")]
    MismatchedWeight { left: usize, right: usize },
    #[error("tuple has {got} components but host partition has length {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("component {index} has weight {got}, expected {expected}")]
    ComponentWeight {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A partition of `n`, kept in both notations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    mult: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts the parts first; zero parts are still rejected.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// Builds a partition from its a-notation: `a[i-1]` is the number of parts equal to `i`.
    pub fn from_multiplicities(a: &[usize]) -> Self {
        let mut parts = Vec::new();
        for (i, &count) in a.iter().enumerate().rev() {
            parts.extend(std::iter::repeat(i + 1).take(count));
        }
        Self::from_sorted(parts)
    }

    fn from_sorted(parts: Vec<usize>) -> Self {
        let n: usize = parts.iter().sum();
        let mut mult = vec![0; n];
        for &p in &parts {
            mult[p - 1] += 1;
        }
        Partition { parts, mult }
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            mult: Vec::new(),
        }
    }

    /// The one-part partition `(n)`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The partition `(1, ..., 1)` of `n`.
    pub fn ones(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// Parts in ν-notation.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The dense a-notation vector of length `n`.
    pub fn multiplicities(&self) -> &[usize] {
        &self.mult
    }

    /// `a_i`, zero when `i` is out of range.
    pub fn multiplicity(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.mult.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn weight(&self) -> usize {
        self.mult.len()
    }

    /// Number of parts λ.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Accepts `(3,1,1)`, `3,1,1`, `3 1 1` and `()`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            let p = tok
                .parse::<usize>()
                .map_err(|_| PartitionError::Parse(s.to_string()))?;
            parts.push(p);
        }
        Partition::from_unsorted(parts)
    }
}

/// All partitions of `n`, in descending lexicographic order of ν-notation.
pub fn enumerate(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n, n, &mut current, &mut out);
    out
}

fn descend(rest: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        current.push(p);
        descend(rest - p, p, current, out);
        current.pop();
    }
}

/// Partitions of `n` with exactly `k` parts, generated directly rather than by filtering.
pub fn enumerate_with_length(n: usize, k: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    with_length(n, k, n, &mut current, &mut out);
    out
}

fn with_length(
    rest: usize,
    slots: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if slots == 0 {
        if rest == 0 {
            out.push(Partition::from_sorted(current.clone()));
        }
        return;
    }
    // every remaining slot needs at least 1, and no slot may exceed max_part
    if rest < slots || rest > slots * max_part {
        return;
    }
    let hi = max_part.min(rest - (slots - 1));
    for p in (1..=hi).rev() {
        current.push(p);
        with_length(rest - p, slots - 1, p, current, out);
        current.pop();
    }
}

/// `#{p ∈ P(n) : λ(p) = l}`.
pub fn count_by_length(n: usize, l: usize) -> usize {
    enumerate(n).iter().filter(|p| p.length() == l).count()
}

/// `a! = ∏ a_i!`.
pub fn a_factorial(p: &Partition) -> BigUint {
    p.multiplicities()
        .iter()
        .map(|&a| factorial(a))
        .fold(BigUint::one(), |acc, f| acc * f)
}

pub(crate) fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// Closure order on strata: `p_prime >= p` iff the parts of `p_prime` split into
/// `λ(p)` groups, the `j`-th group summing to `ν_j`.
///
/// `(1^n)` is the maximum and `(n)` the minimum.
pub fn stratum_geq(p_prime: &Partition, p: &Partition) -> Result<bool, PartitionError> {
    if p_prime.weight() != p.weight() {
        return Err(PartitionError::MismatchedWeight {
            left: p_prime.weight(),
            right: p.weight(),
        });
    }
    if p_prime.length() < p.length() {
        return Ok(false);
    }
    let mut memo = HashMap::new();
    Ok(split_into(
        p.parts(),
        0,
        p_prime.multiplicities().to_vec(),
        &mut memo,
    ))
}

fn split_into(
    targets: &[usize],
    j: usize,
    remaining: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), bool>,
) -> bool {
    if j == targets.len() {
        return remaining.iter().all(|&c| c == 0);
    }
    if let Some(&hit) = memo.get(&(j, remaining.clone())) {
        return hit;
    }
    let mut found = false;
    let mut rem = remaining.clone();
    sub_multisets(targets[j], remaining.len(), &mut rem, &mut |rest| {
        if !found && split_into(targets, j + 1, rest.to_vec(), memo) {
            found = true;
        }
        found
    });
    memo.insert((j, remaining), found);
    found
}

/// Calls `visit` with the leftover multiplicities for every sub-multiset of
/// `rem` (restricted to part sizes `<= max_size`) summing to `target`.
/// Stops early once `visit` returns true.
fn sub_multisets(
    target: usize,
    max_size: usize,
    rem: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if target == 0 {
        return visit(rem);
    }
    let top = max_size.min(target);
    for size in (1..=top).rev() {
        let avail = rem[size - 1];
        if avail == 0 {
            continue;
        }
        for take in (1..=avail.min(target / size)).rev() {
            rem[size - 1] -= take;
            let stop = sub_multisets(target - take * size, size - 1, rem, visit);
            rem[size - 1] += take;
            if stop {
                return true;
            }
        }
    }
    false
}

/// A tuple `(b_1, ..., b_k)` with `b_j ∈ P(ν_j)` for a host partition `ν`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionTuple {
    host: Partition,
    parts: Vec<Partition>,
}

impl PartitionTuple {
    pub fn new(host: Partition, parts: Vec<Partition>) -> Result<Self, PartitionError> {
        if parts.len() != host.length() {
            return Err(PartitionError::TupleLength {
                expected: host.length(),
                got: parts.len(),
            });
        }
        for (index, (b, &nu_j)) in parts.iter().zip(host.parts()).enumerate() {
            if b.weight() != nu_j {
                return Err(PartitionError::ComponentWeight {
                    index,
                    expected: nu_j,
                    got: b.weight(),
                });
            }
        }
        Ok(PartitionTuple { host, parts })
    }

    pub fn host(&self) -> &Partition {
        &self.host
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    /// `Σ_j λ(b_j)`.
    pub fn total_length(&self) -> usize {
        self.parts.iter().map(Partition::length).sum()
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Every element of `∏_j P(ν_j)`, in lexicographic order of the factors.
pub fn tuples(nu: &Partition) -> Vec<PartitionTuple> {
    let factors: Vec<Vec<Partition>> = nu.parts().iter().map(|&p| enumerate(p)).collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(factors.len());
    product(&factors, &mut current, &mut |chosen| {
        out.push(PartitionTuple {
            host: nu.clone(),
            parts: chosen.to_vec(),
        })
    });
    out
}

fn product(
    factors: &[Vec<Partition>],
    current: &mut Vec<Partition>,
    emit: &mut dyn FnMut(&[Partition]),
) {
    if current.len() == factors.len() {
        emit(current);
        return;
    }
    for b in &factors[current.len()] {
        current.push(b.clone());
        product(factors, current, emit);
        current.pop();
    }
}

/// The partition of `n` whose a-notation entry `i` is `Σ_j b_j(i)`.
pub fn u_map(beta: &PartitionTuple) -> Partition {
    let n = beta.host.weight();
    let mut a = vec![0; n];
    for b in &beta.parts {
        for (i, &c) in b.multiplicities().iter().enumerate() {
            a[i] += c;
        }
    }
    Partition::from_multiplicities(&a)
}

/// `S^a(ν) = u^{-1}(a)`; empty unless `a >= ν`.
pub fn fiber_s_a(a: &Partition, nu: &Partition) -> Result<Vec<PartitionTuple>, PartitionError> {
    if a.weight() != nu.weight() {
        return Err(PartitionError::MismatchedWeight {
            left: a.weight(),
            right: nu.weight(),
        });
    }
    Ok(tuples(nu)
        .into_iter()
        .filter(|beta| &u_map(beta) == a)
        .collect())
}

/// `S(h, ν)`: tuples whose total length is `n - h`.
pub fn fiber_s_h(h: usize, nu: &Partition) -> Vec<PartitionTuple> {
    let n = nu.weight();
    if h > n {
        return Vec::new();
    }
    tuples(nu)
        .into_iter()
        .filter(|beta| beta.total_length() == n - h)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        let four: Vec<String> = enumerate(4).iter().map(|p| p.to_string()).collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate(6).len(), 11);
    }

    #[test]
    fn notation_round_trip() {
        let q = p(&[3, 3, 1]);
        assert_eq!(q.multiplicities(), &[1, 0, 2, 0, 0, 0, 0]);
        assert_eq!(q.length(), 3);
        assert_eq!(Partition::from_multiplicities(q.multiplicities()), q);
        assert_eq!("(3,1,3)".parse::<Partition>().unwrap(), q);
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
        assert!(matches!(
            Partition::new(vec![2, 0]),
            Err(PartitionError::ZeroPart(_))
        ));
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn a_factorial_values() {
        assert_eq!(a_factorial(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(a_factorial(&p(&[2, 1])), BigUint::from(1u32));
        assert_eq!(a_factorial(&p(&[2, 2, 1, 1, 1])), BigUint::from(12u32));
    }

    #[test]
    fn order_examples() {
        assert!(stratum_geq(&p(&[1, 1, 1, 1, 1, 1]), &p(&[2, 2, 2])).unwrap());
        for (x, y) in [
            (p(&[3, 3]), p(&[4, 1, 1])),
            (p(&[2, 2, 2]), p(&[3, 1, 1, 1])),
            (p(&[2, 2, 2]), p(&[5, 1])),
            (p(&[2, 2, 2]), p(&[3, 3])),
        ] {
            assert!(!stratum_geq(&x, &y).unwrap(), "{x} >= {y}");
            assert!(!stratum_geq(&y, &x).unwrap(), "{y} >= {x}");
        }
        assert!(stratum_geq(&p(&[2, 1, 1]), &p(&[3, 1])).unwrap());
        assert!(!stratum_geq(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap());
        assert_eq!(
            stratum_geq(&p(&[1]), &p(&[2])),
            Err(PartitionError::MismatchedWeight { left: 1, right: 2 })
        );
    }

    #[test]
    fn u_map_examples() {
        let nu = p(&[2, 1]);
        let beta = PartitionTuple::new(nu.clone(), vec![p(&[2]), p(&[1])]).unwrap();
        assert_eq!(u_map(&beta), p(&[2, 1]));
        let beta = PartitionTuple::new(nu, vec![p(&[1, 1]), p(&[1])]).unwrap();
        assert_eq!(u_map(&beta), p(&[1, 1, 1]));
        let beta = PartitionTuple::new(p(&[5]), vec![p(&[5])]).unwrap();
        assert_eq!(u_map(&beta), p(&[5]));
    }

    #[test]
    fn tuple_validation() {
        assert!(matches!(
            PartitionTuple::new(p(&[2, 1]), vec![p(&[2])]),
            Err(PartitionError::TupleLength { .. })
        ));
        assert!(matches!(
            PartitionTuple::new(p(&[2, 1]), vec![p(&[1]), p(&[1])]),
            Err(PartitionError::ComponentWeight { index: 0, .. })
        ));
    }

    #[test]
    fn fiber_examples() {
        let s = fiber_s_a(&p(&[2, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to_string(), "((2),(1))");
        let s = fiber_s_a(&p(&[1, 1, 1]), &p(&[3])).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].to_string(), "((1,1,1))");
        assert!(fiber_s_a(&p(&[3]), &p(&[1, 1, 1])).unwrap().is_empty());
        assert!(fiber_s_a(&p(&[3]), &p(&[1, 1])).is_err());

        let nu = p(&[2, 1]);
        let h0 = fiber_s_h(0, &nu);
        assert_eq!(h0.len(), 1);
        assert_eq!(h0[0].to_string(), "((1,1),(1))");
        let h1 = fiber_s_h(1, &nu);
        assert_eq!(h1.len(), 1);
        assert_eq!(h1[0].to_string(), "((2),(1))");
        assert!(fiber_s_h(2, &nu).is_empty());
    }

    #[test]
    fn length_counts() {
        assert_eq!(count_by_length(4, 2), 2);
        assert_eq!(count_by_length(7, 7), 1);
        assert_eq!(count_by_length(4, 5), 0);
        for n in 0..=10 {
            for k in 0..=n + 1 {
                assert_eq!(enumerate_with_length(n, k).len(), count_by_length(n, k));
            }
        }
    }
}
