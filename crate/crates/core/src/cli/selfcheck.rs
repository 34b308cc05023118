//! Cross-identities between independently computed quantities, evaluated up
//! to a given order.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::goettsche::{
    decomposition_poincare, dim_equivariant_k, euler_hilbert, hodge_hilbert, hodge_hilbert_product,
    orbifold_euler, poincare_hilbert_product, poincare_sym, poincare_sym_product, punctual_top,
};
use crate::heisenberg::{graded_character, random_state, relation_sides, Relation};
use crate::partitions;
use crate::series::Assignment;
use crate::stratification::{leray_grouped_poincare, local_fiber_sides};
use crate::surface::SurfaceModel;

/// One evaluated identity with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub identity: &'static str,
    pub surface: String,
    pub case: String,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check(
    identity: &'static str,
    surface: &str,
    case: impl ToString,
    lhs: impl ToString,
    rhs: impl ToString,
) -> Check {
    Check {
        identity,
        surface: surface.to_string(),
        case: case.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

/// Identities that depend on a surface.
pub fn surface_checks(s: &SurfaceModel, order: usize, seed: u64) -> Vec<Check> {
    let name = s.name();
    let mut out = Vec::new();
    let product = poincare_hilbert_product(s, order);
    let character = graded_character(s, order);
    let hodge_product = hodge_hilbert_product(s, order).ok();
    let e = s.euler();
    for n in 0..=order {
        let coeff = product.coeff(n).expect("within order");
        let decomposition = decomposition_poincare(s, n);
        out.push(check("goettsche", name, n, coeff, &decomposition));
        out.push(check(
            "character",
            name,
            n,
            character.coeff(n).expect("within order"),
            coeff,
        ));
        out.push(check(
            "leray",
            name,
            n,
            &decomposition,
            leray_grouped_poincare(s, n),
        ));
        out.push(check(
            "ktheory",
            name,
            n,
            dim_equivariant_k(s, n),
            coeff.coefficient_sum(),
        ));
        out.push(check(
            "sym",
            name,
            n,
            poincare_sym(s, n),
            poincare_sym_product(s, n),
        ));
        out.push(check(
            "euler_orbifold",
            name,
            n,
            euler_hilbert(e, n),
            orbifold_euler(e, n),
        ));
        let at_minus_one = coeff.specialize(&Assignment::euler()).t_coeff(0);
        out.push(check(
            "euler_specialization",
            name,
            n,
            BigRational::from_integer(euler_hilbert(e, n)),
            at_minus_one,
        ));
        if let (Ok(hodge), Some(hp)) = (hodge_hilbert(s, n), &hodge_product) {
            out.push(check(
                "hodge_product",
                name,
                n,
                &hodge,
                hp.coeff(n).expect("within order"),
            ));
            out.push(check(
                "hodge_specialization",
                name,
                n,
                hodge.specialize(&Assignment::hodge_to_poincare()),
                coeff,
            ));
        }
    }
    out.extend(commutator_checks(s, 5, 20, seed));
    out
}

/// Random supercommutator checks with modes up to `max_mode`; only failures
/// are reported individually, followed by one summary row per relation.
pub fn commutator_checks(s: &SurfaceModel, max_mode: u32, samples: usize, seed: u64) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for relation in Relation::ALL {
        let (first_range, second_range) = relation.class_ranges(s);
        if first_range == 0 || second_range == 0 {
            continue;
        }
        let mut failures = 0usize;
        for sample in 0..samples {
            let st = random_state(s, &mut rng, 3, 4, max_mode);
            let k = rng.gen_range(1..=max_mode);
            let l = rng.gen_range(1..=max_mode);
            let first = rng.gen_range(0..first_range);
            let second = rng.gen_range(0..second_range);
            let (lhs, rhs) =
                relation_sides(relation, k, l, first, second, &st, s).expect("indices in range");
            if lhs != rhs {
                failures += 1;
                out.push(check(
                    relation.name(),
                    s.name(),
                    format!("sample {sample}: k={k} l={l} classes=({first},{second}) state={st}"),
                    lhs,
                    rhs,
                ));
            }
        }
        out.push(check(
            relation.name(),
            s.name(),
            format!("{samples} samples"),
            failures,
            0,
        ));
    }
    out
}

/// Identities that do not involve a surface.
pub fn local_checks(order: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=order {
        for nu in partitions::enumerate(n) {
            let (stalks, local) = local_fiber_sides(&nu);
            out.push(check("local_fiber", "-", &nu, stalks, local));
        }
        let top = punctual_top(n);
        out.push(check(
            "punctual_top",
            "-",
            n,
            format!("{} {}", top.top_betti, top.vanishes_above),
            format!("{} true", BigInt::from(1)),
        ));
    }
    out
}
