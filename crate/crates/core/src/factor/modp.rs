//! Polynomials over a prime field `F_p` with `p < 2^32`, and their
//! factorization by distinct-degree then equal-degree splitting.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::poly::QPoly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModPError {
    #[error("prime {0} divides the leading coefficient")]
    BadPrime(u64),
    #[error("polynomial is not squarefree modulo {0}")]
    NotSquarefree(u64),
    #[error("denominator not invertible modulo {0}")]
    DenominatorNotInvertible(u64),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    pub p: u64,
    /// Residues in `[0, p)`, constant term first, no trailing zeros.
    pub c: Vec<u64>,
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Reduce a big integer to `[0, p)`.
pub fn reduce_int(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        ModPoly::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        ModPoly::new(p, vec![0, 1])
    }

    pub fn from_ints(p: u64, c: &[BigInt]) -> Self {
        ModPoly::new(p, c.iter().map(|a| reduce_int(a, p)).collect())
    }

    pub fn from_i64(p: u64, c: &[i64]) -> Self {
        ModPoly::new(p, c.iter().map(|&a| a.rem_euclid(p as i64) as u64).collect())
    }

    /// Reduce a rational polynomial; fails if `p` divides its denominator.
    pub fn from_qpoly(p: u64, f: &QPoly) -> Result<Self, ModPError> {
        let d = reduce_int(f.denominator(), p);
        if d == 0 {
            return Err(ModPError::DenominatorNotInvertible(p));
        }
        let di = inv_mod(d, p);
        Ok(ModPoly::new(
            p,
            f.numerators().iter().map(|a| reduce_int(a, p) * di % p).collect(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    /// Symmetric lift to integers in `(-p/2, p/2]`.
    pub fn to_ints(&self) -> Vec<BigInt> {
        let half = self.p / 2;
        self.c
            .iter()
            .map(|&a| if a > half { BigInt::from(a) - BigInt::from(self.p) } else { BigInt::from(a) })
            .collect()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &a in self.c.iter().rev() {
            acc = (acc * x + a) % self.p;
        }
        acc
    }

    pub fn add(&self, o: &ModPoly) -> ModPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + o.c.get(i).unwrap_or(&0)) % p)
            .collect();
        ModPoly::new(p, v)
    }

    pub fn sub(&self, o: &ModPoly) -> ModPoly {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        let v = (0..n)
            .map(|i| (self.c.get(i).unwrap_or(&0) + p - o.c.get(i).unwrap_or(&0)) % p)
            .collect();
        ModPoly::new(p, v)
    }

    pub fn scale(&self, k: u64) -> ModPoly {
        ModPoly::new(self.p, self.c.iter().map(|&a| a * k % self.p).collect())
    }

    pub fn mul(&self, o: &ModPoly) -> ModPoly {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a * b) % p;
            }
        }
        ModPoly::new(p, v)
    }

    pub fn monic(&self) -> ModPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lc(), self.p))
    }

    pub fn div_rem(&self, b: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!b.is_zero(), "division by zero polynomial mod p");
        let p = self.p;
        if self.c.len() < b.c.len() {
            return (ModPoly::zero(p), self.clone());
        }
        let inv = inv_mod(b.lc(), p);
        let mut r = self.c.clone();
        let db = b.c.len() - 1;
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let t = r[k + db] * inv % p;
            q[k] = t;
            if t != 0 {
                for (j, &bj) in b.c.iter().enumerate() {
                    r[k + j] = (r[k + j] + p - t * bj % p) % p;
                }
            }
        }
        r.truncate(db);
        (ModPoly::new(p, q), ModPoly::new(p, r))
    }

    pub fn rem(&self, b: &ModPoly) -> ModPoly {
        self.div_rem(b).1
    }

    pub fn derivative(&self) -> ModPoly {
        let p = self.p;
        ModPoly::new(
            p,
            self.c.iter().enumerate().skip(1).map(|(i, &a)| (i as u64 % p) * a % p).collect(),
        )
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn mulmod(&self, o: &ModPoly, m: &ModPoly) -> ModPoly {
        self.mul(o).rem(m)
    }

    /// `self^e mod m`.
    pub fn powmod(&self, e: &BigUint, m: &ModPoly) -> ModPoly {
        let mut result = ModPoly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mulmod(&result, m);
            if e.bit(i) {
                result = result.mulmod(&base, m);
            }
        }
        result
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd(&self.derivative()).degree() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(product of all irreducible factors of degree d, d)`.
    pub fn distinct_degree(&self) -> Vec<(ModPoly, usize)> {
        let p = self.p;
        let mut f = self.monic();
        let mut out = Vec::new();
        let x = ModPoly::x(p);
        let pe = BigUint::from(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while 2 * (d + 1) <= f.degree() {
            d += 1;
            h = h.powmod(&pe, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.degree() > 0 {
            let deg = f.degree();
            out.push((f, deg));
        }
        out
    }

    /// Split a product of distinct irreducibles all of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<ModPoly> {
        let f = self.monic();
        let n = f.degree();
        if n == d {
            return vec![f];
        }
        let p = self.p;
        loop {
            let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree() == 0 {
                continue;
            }
            let b = if p == 2 {
                // Trace map a + a^2 + ... + a^(2^(d-1)) with ground field F_2.
                let mut acc = a.rem(&f);
                let mut t = acc.clone();
                let two = BigUint::from(2u32);
                for _ in 1..d {
                    t = t.powmod(&two, &f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let e = (num_traits::pow(BigUint::from(p), d) - BigUint::one()) / BigUint::from(2u32);
                a.powmod(&e, &f).sub(&ModPoly::one(p))
            };
            let g = b.gcd(&f);
            if g.degree() > 0 && g.degree() < n {
                let h = f.div_rem(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles, sorted by degree then
    /// coefficients. Requires `p` not dividing the leading coefficient and
    /// the polynomial squarefree modulo `p`.
    pub fn factor(&self, seed: u64) -> Result<Vec<ModPoly>, ModPError> {
        if self.is_zero() || self.lc() == 0 {
            return Err(ModPError::BadPrime(self.p));
        }
        if !self.is_squarefree() {
            return Err(ModPError::NotSquarefree(self.p));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            out.extend(g.equal_degree(d, &mut rng));
        }
        out.sort_by(|a, b| a.c.len().cmp(&b.c.len()).then_with(|| a.c.cmp(&b.c)));
        Ok(out)
    }

    /// Resultant `Res(self, b)` over `F_p`, using the formal degree of `self`
    /// given by its stored length.
    pub fn resultant(&self, b: &ModPoly) -> u64 {
        let p = self.p;
        if self.is_zero() || b.is_zero() {
            return 0;
        }
        let mut a = self.clone();
        let mut b = b.clone();
        let mut acc = 1u64;
        loop {
            let (da, db) = (a.degree(), b.degree());
            if db == 0 {
                return acc * pow_mod(b.c[0], da as u64, p) % p;
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return 0;
            }
            if (da * db) % 2 == 1 {
                acc = (p - acc) % p;
            }
            acc = acc * pow_mod(b.lc(), (da - r.degree()) as u64, p) % p;
            a = b;
            b = r;
        }
    }

    /// Interpolating polynomial through `(i, ys[i])` for `i = 0, 1, ...` over `F_p`.
    pub fn interpolate_consecutive(p: u64, ys: &[u64]) -> ModPoly {
        let n = ys.len();
        let inv: Vec<u64> = (0..n as u64).map(|j| if j == 0 { 0 } else { inv_mod(j % p, p) }).collect();
        let mut dd = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = (dd[i] + p - dd[i - 1]) % p * inv[j] % p;
            }
        }
        // Horner in the Newton basis: prod (x - i).
        let mut acc = vec![0u64; n];
        let mut len = 0;
        for i in (0..n).rev() {
            // acc = acc * (x - i) + dd[i]
            let shift = (p - (i as u64) % p) % p;
            let mut next = vec![0u64; len + 1];
            for t in 0..len {
                next[t + 1] = (next[t + 1] + acc[t]) % p;
                next[t] = (next[t] + acc[t] * shift) % p;
            }
            next[0] = (next[0] + dd[i]) % p;
            len += 1;
            acc[..len].copy_from_slice(&next);
        }
        ModPoly::new(p, acc)
    }

    /// Degrees of the irreducible factors (distinct-degree pass only).
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            out.extend(std::iter::repeat(d).take(g.degree() / d));
        }
        out.sort_unstable();
        out
    }
}

/// Primes in increasing order starting above `lo`.
pub fn primes_above(lo: u64) -> impl Iterator<Item = u64> {
    (lo + 1..).filter(|&n| is_prime_u64(n))
}

/// Deterministic Miller-Rabin for 64-bit integers.
/// Primes below `hi` in decreasing order.
pub fn primes_below(hi: u64) -> impl Iterator<Item = u64> {
    (2..hi).rev().filter(|&n| is_prime_u64(n))
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for q in BASES {
        if n % q == 0 {
            return n == q;
        }
    }
    let mulm = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulm(r, a);
            }
            a = mulm(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulm(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
