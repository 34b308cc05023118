//! Exact combinatorics and cohomology counts for Hilbert schemes of points
//! on complex surfaces.
//!
//! - [`partitions`]: partitions of `n`, the closure order on strata and the fiber sets `S(h, ν)`.
//! - [`series`]: truncated `q`-series with polynomial coefficients and infinite-product expansion.
//! - [`surface`]: cohomology data of a surface (Betti and Hodge numbers, intersection pairing) and presets.
//! - [`linalg`]: dense exact matrices.
//! - [`goettsche`]: Poincaré/Hodge polynomials of `X^[n]`, `X^(m)`, punctual fibers, Euler and K-theory counts.
//! - [`heisenberg`]: the Heisenberg/Clifford superalgebra acting on the Fock space.
//! - [`adhm`]: commuting-matrix triples, their support cycles and torus fixed points.
//! - [`stratification`]: stalk dimensions of the direct images along the Douady–Barlet map.
//! - [`cli`]: the command-line front end.

pub mod adhm;
pub mod cli;
pub mod goettsche;
pub mod heisenberg;
pub mod linalg;
pub mod partitions;
pub mod series;
pub mod stratification;
pub mod surface;
