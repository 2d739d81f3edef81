//! Seeded random inputs shared by the self-test command and the test suites.

use rand::Rng;

use crate::factor;
use crate::families::quad_cubic_irreducible;
use crate::poly::{int, QPoly};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// A monic irreducible polynomial of the given degree with lower
/// coefficients drawn uniformly from `[-bound, bound]`.
pub fn random_monic_irreducible<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> QPoly {
    loop {
        let mut c: Vec<i64> = (0..degree).map(|_| rng.gen_range(-bound..=bound)).collect();
        c.push(1);
        let p = QPoly::from_i64(&c);
        if factor::is_irreducible(&p) {
            return p;
        }
    }
}

/// A triple `(a, b, c)` with entries in `[-bound, bound]` for which the
/// quadratic-plus-cubic sextic is irreducible.
pub fn random_quad_cubic_triple<R: Rng>(rng: &mut R, bound: i64) -> (i64, i64, i64) {
    loop {
        let t = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        if quad_cubic_irreducible(&int(t.0), &int(t.1), &int(t.2)) {
            return t;
        }
    }
}
