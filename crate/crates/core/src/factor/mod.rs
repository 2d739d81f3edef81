//! Resultants and complete factorization over the rationals.

pub mod modp;
mod resultant;
mod zassenhaus;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use modp::{ModPError, ModPoly};
pub use resultant::{
    discriminant, newton_interpolate, pair_sum_resultant, resultant, resultant_wrt_y,
    substitute_x_minus_sy, zresultant, BiPoly,
};

use crate::poly::{BigRat, QPoly};

const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// `unit * prod f_i^m_i` with each `f_i` monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigRat,
    pub factors: Vec<(QPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> QPoly {
        let mut acc = QPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

/// Cheap modular squarefree certificate: a prime not dividing the leading
/// coefficient modulo which `f` is squarefree.
pub(crate) fn squarefree_mod_certificate(f: &[BigInt]) -> bool {
    let n = f.len() - 1;
    for p in modp::primes_above(n.max(2) as u64).take(12) {
        let fp = ModPoly::from_ints(p, f);
        if fp.degree() == n && fp.is_squarefree() {
            return true;
        }
    }
    false
}

/// Factor a squarefree monic rational polynomial into monic irreducibles.
fn factor_squarefree(p: &QPoly) -> Vec<QPoly> {
    let (_, mut f) = p.primitive_part();
    let mut out = Vec::new();
    // Peel powers of x.
    if f[0].is_zero() {
        out.push(QPoly::x());
        f.remove(0);
    }
    if f.len() <= 1 {
        return out;
    }
    for g in zassenhaus::zassenhaus(&f, DEFAULT_SEED) {
        out.push(QPoly::from_bigints(g).monic());
    }
    out
}

fn sort_factors(v: &mut [(QPoly, usize)]) {
    v.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| cmp_coeffs(&a.0, &b.0))
            .then(a.1.cmp(&b.1))
    });
}

fn cmp_coeffs(a: &QPoly, b: &QPoly) -> std::cmp::Ordering {
    for (x, y) in a.coeffs().iter().zip(b.coeffs().iter()) {
        let o = x.cmp(y);
        if o.is_ne() {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

/// Complete factorization of a nonzero rational polynomial.
pub fn factor_over_q(p: &QPoly) -> Factorization {
    let unit = p.leading_coeff();
    if p.degree() == 0 {
        return Factorization { unit, factors: Vec::new() };
    }
    let m = p.monic();
    let (_, prim) = m.primitive_part();
    let parts = if squarefree_mod_certificate(&prim) {
        vec![(m, 1)]
    } else {
        m.squarefree_decompose()
    };
    let mut factors = Vec::new();
    for (part, mult) in parts {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    sort_factors(&mut factors);
    Factorization { unit, factors }
}

pub fn is_irreducible(p: &QPoly) -> bool {
    if p.degree() == 0 {
        return false;
    }
    if p.degree() == 1 {
        return true;
    }
    let m = p.monic();
    let (_, prim) = m.primitive_part();
    if prim[0].is_zero() {
        return false;
    }
    if !squarefree_mod_certificate(&prim) && !m.is_squarefree() {
        return false;
    }
    zassenhaus::zassenhaus(&prim, DEFAULT_SEED).len() == 1
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > DIVISOR_LIMIT || n == 0 {
        return None;
    }
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut m = n;
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            let mut e = 0;
            while m % q == 0 {
                m /= q;
                e += 1;
            }
            primes.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if m > 1 {
        primes.push((m, 1));
    }
    let mut divs = vec![1u64];
    for (q, e) in primes {
        let cur = divs.clone();
        let mut pw = 1;
        for _ in 0..e {
            pw *= q;
            divs.extend(cur.iter().map(|d| d * pw));
        }
    }
    divs.sort_unstable();
    Some(divs.into_iter().map(BigInt::from).collect())
}

/// Distinct rational roots, sorted increasingly.
pub fn rational_roots(p: &QPoly) -> Vec<BigRat> {
    if p.degree() == 0 {
        return Vec::new();
    }
    let (_, mut f) = p.primitive_part();
    let mut roots = Vec::new();
    if f[0].is_zero() {
        roots.push(BigRat::zero());
        while f[0].is_zero() {
            f.remove(0);
        }
    }
    if f.len() > 1 {
        let q = QPoly::from_bigints(f.clone());
        match (small_divisors(&f[0]), small_divisors(f.last().unwrap())) {
            (Some(num), Some(den)) => {
                for a in &num {
                    for b in &den {
                        if !a.gcd(b).is_one() {
                            continue;
                        }
                        for s in [a.clone(), -a.clone()] {
                            let r = BigRat::new(s, b.clone());
                            if q.eval(&r).is_zero() {
                                roots.push(r);
                            }
                        }
                    }
                }
            }
            _ => {
                for (g, _) in factor_over_q(&q).factors {
                    if g.degree() == 1 {
                        roots.push(-g.coeff(0));
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn factor_examples() {
        let f = factor_over_q(&qp(&[-4, 24, 12, 4, -6, 0, 1]));
        assert!(f.is_irreducible());
        let f = factor_over_q(&qp(&[-1, 0, 0, 0, 1]));
        assert_eq!(
            f.factors,
            vec![(qp(&[-1, 1]), 1), (qp(&[1, 1]), 1), (qp(&[1, 0, 1]), 1)]
        );
        let prod = &qp(&[-2, 0, 1]) * &qp(&[2, 0, 0, 1]);
        let f = factor_over_q(&prod);
        assert_eq!(f.factors, vec![(qp(&[-2, 0, 1]), 1), (qp(&[2, 0, 0, 1]), 1)]);
        assert_eq!(f.expand(), prod);
    }

    #[test]
    fn multiplicities_and_units() {
        let p = (&qp(&[0, 0, 1, 1]) * &qp(&[3])).scale(&BigRat::new(1.into(), 2.into()));
        let f = factor_over_q(&p);
        assert_eq!(f.unit, BigRat::new(3.into(), 2.into()));
        assert_eq!(f.factors, vec![(qp(&[0, 1]), 2), (qp(&[1, 1]), 1)]);
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn irreducibility_and_roots() {
        assert!(is_irreducible(&qp(&[2, 0, 0, 1])));
        assert!(rational_roots(&qp(&[2, 0, 0, 1])).is_empty());
        assert_eq!(rational_roots(&qp(&[2, -3, 0, 1])), vec![int(-2), int(1)]);
        assert!(is_irreducible(&qp(&[1, 0, 0, 1, 0, 0, 1])));
        assert!(!is_irreducible(&qp(&[1, 0, 0, 0, 0, 0, 1])));
        let p = QPoly::from_rats(vec![BigRat::new((-1).into(), 3.into()), int(2)]);
        assert_eq!(rational_roots(&p), vec![BigRat::new(1.into(), 6.into())]);
    }
}
