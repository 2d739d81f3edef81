//! Simple algebraic extensions `Q(theta) = Q[x]/(m(x))`, polynomials over
//! them, Trager factorization, and splitting fields.
//!
//! A splitting field is grown one root at a time. Each adjunction replaces
//! the current generator `theta` by `theta' = z + s*theta`, where `z` is the
//! new root and `s` the Trager shift, so every level is again a simple
//! extension of the rationals. The [`Tower`] keeps the relative modulus of
//! each level so the adjunction history stays inspectable.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::factor::{self, modp::primes_above, ModPoly};
use crate::linalg::{self, DependencyFinder};
use crate::poly::{BigRat, QPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NfError {
    #[error("modulus is not monic and irreducible over Q")]
    NotIrreducible,
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("splitting field degree exceeds the order cap {cap} (lower bound {bound})")]
    OrderCapExceeded { cap: usize, bound: usize },
    #[error("degree {0} is outside the supported range 2..=7")]
    DegreeOutOfRange(usize),
}

/// `Q[x]/(modulus)` for a monic irreducible rational polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    modulus: QPoly,
}

/// Polynomial with coefficients in a number field, constant term first.
pub type KPoly = Vec<QPoly>;

impl NumberField {
    pub fn new(modulus: QPoly) -> Result<Self, NfError> {
        if modulus.degree() == 0 || !modulus.is_monic() || !factor::is_irreducible(&modulus) {
            return Err(NfError::NotIrreducible);
        }
        Ok(NumberField { modulus })
    }

    /// Construct without the irreducibility check, for moduli known to be irreducible.
    pub(crate) fn new_unchecked(modulus: QPoly) -> Self {
        debug_assert!(modulus.is_monic());
        NumberField { modulus }
    }

    pub fn modulus(&self) -> &QPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    pub fn reduce(&self, a: &QPoly) -> QPoly {
        a.rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() || b.is_zero() {
            return QPoly::zero();
        }
        self.reduce(&(a * b))
    }

    /// Multiply by the generator.
    pub fn mul_gen(&self, a: &QPoly) -> QPoly {
        self.reduce(&(a * &QPoly::x()))
    }

    /// Inverse by solving `a * u = 1` on the multiplication matrix of `a`.
    pub fn inv(&self, a: &QPoly) -> Result<QPoly, NfError> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Err(NfError::DivisionByZero);
        }
        let n = self.degree();
        if a.degree() == 0 {
            return Ok(QPoly::constant(a.coeff(0).recip()));
        }
        let mut cols = Vec::with_capacity(n);
        let mut cur = a;
        for _ in 0..n {
            cols.push(self.coords(&cur));
            cur = self.mul_gen(&cur);
        }
        let rows: Vec<Vec<BigRat>> = (0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        let mut rhs = vec![BigRat::zero(); n];
        rhs[0] = BigRat::one();
        let u = linalg::solve(&rows, &rhs).ok_or(NfError::DivisionByZero)?;
        Ok(QPoly::from_rats(u))
    }

    pub fn pow(&self, a: &QPoly, k: u32) -> QPoly {
        let mut result = QPoly::one();
        let mut base = self.reduce(a);
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Evaluate a rational polynomial at a field element.
    pub fn eval(&self, f: &QPoly, at: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in f.coeffs().into_iter().rev() {
            acc = &self.mul(&acc, at) + &QPoly::constant(c);
        }
        acc
    }

    /// Coordinates in the power basis `1, theta, ..., theta^(n-1)`.
    pub fn coords(&self, a: &QPoly) -> Vec<BigRat> {
        (0..self.degree()).map(|i| a.coeff(i)).collect()
    }

    /// Minimal polynomial of an element, from the first linear dependency
    /// among its powers.
    pub fn minpoly(&self, e: &QPoly) -> QPoly {
        let n = self.degree();
        let mut dep = DependencyFinder::new(n);
        let mut pw = QPoly::one();
        loop {
            if let Some(c) = dep.push(self.coords(&pw)) {
                return QPoly::from_rats(c);
            }
            pw = self.mul(&pw, e);
        }
    }

    // Polynomials over the field.

    pub fn kp_trim(&self, mut a: KPoly) -> KPoly {
        while a.last().is_some_and(|c| c.is_zero()) {
            a.pop();
        }
        a
    }

    pub fn kp_from_q(&self, p: &QPoly) -> KPoly {
        p.coeffs().into_iter().map(QPoly::constant).collect()
    }

    pub fn kp_add(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let n = a.len().max(b.len());
        let z = QPoly::zero();
        self.kp_trim((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect())
    }

    pub fn kp_sub(&self, a: &KPoly, b: &KPoly) -> KPoly {
        let n = a.len().max(b.len());
        let z = QPoly::zero();
        self.kp_trim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
    }

    pub fn kp_mul(&self, a: &KPoly, b: &KPoly) -> KPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        self.kp_trim(out.into_iter().map(|c| self.reduce(&c)).collect())
    }

    pub fn kp_scale(&self, a: &KPoly, c: &QPoly) -> KPoly {
        self.kp_trim(a.iter().map(|x| self.mul(x, c)).collect())
    }

    pub fn kp_monic(&self, a: &KPoly) -> Result<KPoly, NfError> {
        let lc = a.last().ok_or(NfError::DivisionByZero)?;
        if lc.is_one() {
            return Ok(a.clone());
        }
        let inv = self.inv(lc)?;
        Ok(self.kp_scale(a, &inv))
    }

    /// Division with remainder by a monic divisor.
    pub fn kp_divrem_monic(&self, a: &KPoly, b: &KPoly) -> (KPoly, KPoly) {
        let db = b.len() - 1;
        debug_assert!(b[db].is_one());
        let mut r = a.clone();
        if r.len() <= db {
            return (Vec::new(), r);
        }
        let mut q = vec![QPoly::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let t = std::mem::replace(&mut r[k + db], QPoly::zero());
            if !t.is_zero() {
                for j in 0..db {
                    if !b[j].is_zero() {
                        r[k + j] = &r[k + j] - &self.mul(&t, &b[j]);
                    }
                }
            }
            q[k] = t;
        }
        r.truncate(db);
        (self.kp_trim(q), self.kp_trim(r))
    }

    /// Monic gcd over the field.
    pub fn kp_gcd(&self, a: &KPoly, b: &KPoly) -> Result<KPoly, NfError> {
        let mut r0 = self.kp_trim(a.clone());
        let mut r1 = self.kp_trim(b.clone());
        while !r1.is_empty() {
            r1 = self.kp_monic(&r1)?;
            let (_, r) = self.kp_divrem_monic(&r0, &r1);
            r0 = r1;
            r1 = r;
        }
        self.kp_monic(&r0)
    }

    /// Evaluate `a(x)` at a field element.
    pub fn kp_eval(&self, a: &KPoly, at: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in a.iter().rev() {
            acc = &self.mul(&acc, at) + c;
        }
        acc
    }

    /// `N(x + s*theta) mod g` for a rational `N` and monic `g` over the field.
    fn shifted_rem(&self, n: &QPoly, s: i64, g: &KPoly) -> KPoly {
        let k = g.len() - 1;
        let st = QPoly::monomial(BigRat::from_integer(s.into()), 1);
        let st = self.reduce(&st);
        let mut acc: KPoly = Vec::new();
        for c in n.coeffs().into_iter().rev() {
            // acc * (x + s theta)
            let mut next = vec![QPoly::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] = &next[i + 1] + a;
                if s != 0 {
                    next[i] = &next[i] + &self.mul(a, &st);
                }
            }
            if next.is_empty() {
                next.push(QPoly::zero());
            }
            next[0] = &next[0] + &QPoly::constant(c);
            if next.len() > k {
                let t = next.pop().unwrap();
                if !t.is_zero() {
                    for j in 0..k {
                        if !g[j].is_zero() {
                            next[j] = &next[j] - &self.mul(&t, &g[j]);
                        }
                    }
                }
            }
            acc = self.kp_trim(next);
        }
        acc
    }

    /// `g(x - s*y)` reduced modulo `m(y)`: entry `b` is the coefficient of
    /// `y^b` as a polynomial in `x`.
    fn shifted_bivariate(&self, g: &KPoly, s: i64) -> Vec<QPoly> {
        let mut bi: Vec<QPoly> = Vec::new();
        let neg_s = BigRat::from_integer((-s).into());
        for (j, gj) in g.iter().enumerate() {
            let mut binom = BigInt::one();
            let mut spow = BigRat::one();
            for l in 0..=j {
                let coef = &spow * BigRat::from_integer(binom.clone());
                if !coef.is_zero() {
                    for (a, ga) in gj.coeffs().into_iter().enumerate() {
                        if ga.is_zero() {
                            continue;
                        }
                        let idx = a + l;
                        if bi.len() <= idx {
                            bi.resize(idx + 1, QPoly::zero());
                        }
                        bi[idx] = &bi[idx] + &QPoly::monomial(&ga * &coef, j - l);
                    }
                }
                binom = binom * BigInt::from(j - l) / BigInt::from(l + 1);
                spow *= &neg_s;
            }
        }
        let n = self.degree();
        let m = self.modulus.coeffs();
        while bi.len() > n {
            let top = bi.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = bi.len() - n;
            for (t, mt) in m.iter().enumerate().take(n) {
                if !mt.is_zero() {
                    bi[base + t] = &bi[base + t] - &top.scale(mt);
                }
            }
        }
        bi
    }

    /// The norm `Res_y(m(y), g(x - s*y))` of a polynomial over the field.
    pub fn norm(&self, g: &KPoly, s: i64) -> QPoly {
        let bi = self.shifted_bivariate(g, s);
        match NormCrt::new(self, bi) {
            Some(mut crt) => crt.finish(),
            None => self.norm_by_interpolation(g, s),
        }
    }

    /// Exact norm via bivariate resultant and rational interpolation.
    pub fn norm_by_interpolation(&self, g: &KPoly, s: i64) -> QPoly {
        let bi = self.shifted_bivariate(g, s);
        let m: Vec<QPoly> = self.modulus.coeffs().into_iter().map(QPoly::constant).collect();
        factor::resultant_wrt_y(&m, &bi)
    }
}

/// Multimodular computation of a norm `Res_y(m(y), G(x, y))` for an integral
/// monic modulus `m`.
///
/// With `c` the common denominator of `G` and `B` a bound on the absolute
/// values of the roots of `m`, every coefficient of `c^n N` is bounded by
/// `T^n` where `T = sum |c G_ab| B^b`.
struct NormCrt {
    m_int: Vec<BigInt>,
    bi: Vec<QPoly>,
    den: BigInt,
    xdeg: usize,
    bits_needed: u64,
    primes: Box<dyn Iterator<Item = u64>>,
    modulus: BigInt,
    values: Vec<BigInt>,
}

const CRT_PRIME_TOP: u64 = 1 << 31;

impl NormCrt {
    fn new(k: &NumberField, bi: Vec<QPoly>) -> Option<Self> {
        let mcoeffs = k.modulus.coeffs();
        if mcoeffs.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let m_int: Vec<BigInt> = mcoeffs.iter().map(|c| c.to_integer()).collect();
        let n = k.degree();
        let mut root_bound = BigInt::one();
        for j in 1..=n {
            let c = m_int[n - j].magnitude().clone();
            let r = BigInt::from(c.nth_root(j as u32)) + 1;
            root_bound = root_bound.max(r);
        }
        root_bound *= 2;
        let mut den = BigInt::one();
        for c in &bi {
            den = den.lcm(c.denominator());
        }
        let mut t = BigInt::zero();
        let mut bpow = BigInt::one();
        let mut xdeg = 0;
        for c in &bi {
            if !c.is_zero() {
                xdeg = xdeg.max(c.degree());
            }
            for a in c.coeffs() {
                let v = (a * BigRat::from_integer(den.clone())).to_integer();
                t += v.abs() * &bpow;
            }
            bpow *= &root_bound;
        }
        let bits_needed = t.bits() * n as u64 + 2;
        Some(NormCrt {
            m_int,
            bi,
            den,
            xdeg: xdeg * n,
            bits_needed,
            primes: Box::new(factor::modp::primes_below(CRT_PRIME_TOP)),
            modulus: BigInt::one(),
            values: Vec::new(),
        })
    }

    /// `N mod q` at the next usable prime.
    fn next_image(&mut self) -> (u64, ModPoly) {
        loop {
            let q = self.primes.next().expect("enough word-size primes");
            if (&self.den % q).is_zero() {
                continue;
            }
            let mq = ModPoly::new(q, self.m_int.iter().map(|c| factor::modp::reduce_int(c, q)).collect());
            let bq: Vec<ModPoly> = self
                .bi
                .iter()
                .map(|c| ModPoly::from_qpoly(q, c).expect("prime avoids denominators"))
                .collect();
            let ys: Vec<u64> = (0..=self.xdeg as u64)
                .map(|x0| {
                    let spec = ModPoly::new(q, bq.iter().map(|c| c.eval(x0)).collect());
                    mq.resultant(&spec)
                })
                .collect();
            return (q, ModPoly::interpolate_consecutive(q, &ys));
        }
    }

    fn absorb(&mut self, q: u64, image: &ModPoly) {
        let scale = factor::modp::pow_mod(
            factor::modp::reduce_int(&self.den, q),
            self.m_int.len() as u64 - 1,
            q,
        );
        let minv = factor::modp::inv_mod(factor::modp::reduce_int(&self.modulus, q), q);
        let len = self.xdeg + 1;
        self.values.resize(len, BigInt::zero());
        for (i, v) in self.values.iter_mut().enumerate() {
            let r = image.c.get(i).copied().unwrap_or(0) * scale % q;
            let cur = factor::modp::reduce_int(v, q);
            let t = (r + q - cur) % q * minv % q;
            if t != 0 {
                *v += &self.modulus * t;
            }
        }
        self.modulus *= q;
    }

    fn finish(&mut self) -> QPoly {
        while self.modulus.bits() < self.bits_needed {
            let (q, img) = self.next_image();
            self.absorb(q, &img);
        }
        self.reconstruct()
    }

    fn reconstruct(&self) -> QPoly {
        let half = &self.modulus >> 1;
        let scale = BigRat::from_integer(self.den.pow(self.m_int.len() as u32 - 1));
        let coeffs = self
            .values
            .iter()
            .map(|v| {
                let v = if v > &half { v - &self.modulus } else { v.clone() };
                BigRat::from_integer(v) / &scale
            })
            .collect();
        QPoly::from_rats(coeffs)
    }
}

/// Find a shift whose norm is squarefree, certified modulo a prime, and
/// return it together with the exact norm.
fn squarefree_norm(k: &NumberField, g: &KPoly) -> (i64, QPoly) {
    let target = k.degree() * (g.len() - 1);
    for s in shift_sequence() {
        let bi = k.shifted_bivariate(g, s);
        let Some(mut crt) = NormCrt::new(k, bi) else {
            let n = k.norm_by_interpolation(g, s);
            if is_squarefree_q(&n) {
                return (s, n);
            }
            continue;
        };
        for _ in 0..2 {
            let (q, img) = crt.next_image();
            crt.absorb(q, &img);
            if img.degree() == target && img.is_squarefree() {
                return (s, crt.finish());
            }
        }
    }
    unreachable!("shift sequence is infinite")
}

fn shift_sequence() -> impl Iterator<Item = i64> {
    (0..).map(|k: i64| if k == 0 { 0 } else if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) })
}

fn is_squarefree_q(n: &QPoly) -> bool {
    let (_, prim) = n.primitive_part();
    factor::squarefree_mod_certificate(&prim) || n.is_squarefree()
}

/// An irreducible factor over the field together with the norm of
/// `factor(x - s*theta)`, which is irreducible over the rationals.
#[derive(Clone, Debug)]
pub struct TragerFactor {
    pub factor: KPoly,
    pub norm: QPoly,
}

#[derive(Clone, Debug)]
pub struct TragerResult {
    pub shift: i64,
    pub factors: Vec<TragerFactor>,
}

/// Factor a monic squarefree polynomial over the field by Trager's method.
pub fn trager_factor(k: &NumberField, g: &KPoly) -> Result<TragerResult, NfError> {
    let g = k.kp_monic(&k.kp_trim(g.clone()))?;
    let (shift, norm) = squarefree_norm(k, &g);
    let parts: Vec<QPoly> = factor::factor_over_q(&norm).factors.into_iter().map(|(f, _)| f).collect();
    if parts.len() == 1 {
        return Ok(TragerResult { shift, factors: vec![TragerFactor { factor: g, norm }] });
    }
    let mut factors = Vec::with_capacity(parts.len());
    let mut rest = g.clone();
    let last = parts.len() - 1;
    for (i, ni) in parts.into_iter().enumerate() {
        let h = if i == last {
            k.kp_monic(&rest)?
        } else {
            let r = k.shifted_rem(&ni, shift, &rest);
            let h = k.kp_gcd(&rest, &r)?;
            rest = k.kp_divrem_monic(&rest, &h).0;
            h
        };
        factors.push(TragerFactor { factor: h, norm: ni });
    }
    Ok(TragerResult { shift, factors })
}

/// One adjunction step: the relative modulus over the previous level and
/// the absolute minimal polynomial of the new generator.
#[derive(Clone, Debug)]
pub struct TowerLevel {
    /// Monic irreducible polynomial over the previous level, in the previous generator.
    pub relative: KPoly,
    /// Minimal polynomial over Q of the generator after this step.
    pub absolute: QPoly,
    /// New generator is `root + shift * previous generator`.
    pub shift: i64,
}

#[derive(Clone, Debug)]
pub struct Tower {
    pub levels: Vec<TowerLevel>,
}

impl Tower {
    pub fn total_degree(&self) -> usize {
        self.levels.iter().map(|l| l.relative.len() - 1).product()
    }
}

/// All roots of a polynomial inside its splitting field.
#[derive(Clone, Debug)]
pub struct SplittingData {
    pub poly: QPoly,
    pub tower: Tower,
    /// The final field; its generator is a primitive element of degree
    /// equal to the tower degree.
    pub field: Arc<NumberField>,
    /// Roots in the order they were found, as polynomials in the generator.
    pub roots: Vec<QPoly>,
}

impl SplittingData {
    pub fn total_degree(&self) -> usize {
        self.field.degree()
    }
}

fn lcm_usize(a: usize, b: usize) -> usize {
    a / a.gcd(&b) * b
}

/// Lower bound for the Galois group order from `d` and the element orders
/// read off from factorization patterns modulo small primes.
pub fn group_order_lower_bound(p: &QPoly, primes: usize) -> usize {
    let d = p.degree();
    let (_, f) = p.primitive_part();
    let mut bound = d.max(1);
    let mut used = 0;
    for q in primes_above(d as u64) {
        if used >= primes {
            break;
        }
        let fq = ModPoly::from_ints(q, &f);
        if fq.degree() != d || !fq.is_squarefree() {
            continue;
        }
        used += 1;
        for deg in fq.factor_degrees() {
            bound = lcm_usize(bound, deg);
        }
    }
    bound
}

/// Integer monic `D^d p(x/D)` for a monic rational `p`, with `D`.
fn integral_scaling(p: &QPoly) -> (QPoly, BigInt) {
    let mut dd = BigInt::one();
    for c in p.coeffs() {
        dd = dd.lcm(c.denom());
    }
    (p.scale_roots(&BigRat::from_integer(dd.clone())), dd)
}

/// Adjoin a root `z` of the irreducible factor `h` (with Trager norm `norm`
/// for shift `s`) to the field `k`. Returns the new field and the image of
/// the old generator as a polynomial in the new one.
fn adjoin(k: &NumberField, h: &KPoly, norm: &QPoly, s: i64) -> (NumberField, QPoly) {
    let n = k.degree();
    let kk = h.len() - 1;
    let big = n * kk;
    let st = k.reduce(&QPoly::monomial(BigRat::from_integer(s.into()), 1));
    // Powers of theta' = z + s*theta in L = K[z]/(h), in the basis theta^a z^b.
    let mut cols: Vec<Vec<BigRat>> = Vec::with_capacity(big);
    let mut cur: Vec<QPoly> = vec![QPoly::zero(); kk];
    cur[0] = QPoly::one();
    for _ in 0..big {
        let mut flat = Vec::with_capacity(big);
        for c in &cur {
            flat.extend(k.coords(c));
        }
        cols.push(flat);
        // cur * z
        let top = cur[kk - 1].clone();
        let mut next = vec![QPoly::zero(); kk];
        for b in (1..kk).rev() {
            next[b] = cur[b - 1].clone();
        }
        if !top.is_zero() {
            for b in 0..kk {
                if !h[b].is_zero() {
                    next[b] = &next[b] - &k.mul(&top, &h[b]);
                }
            }
        }
        // + s*theta * cur
        if s != 0 {
            for b in 0..kk {
                if !cur[b].is_zero() {
                    next[b] = &next[b] + &k.mul(&cur[b], &st);
                }
            }
        }
        cur = next;
    }
    let a: Vec<Vec<BigRat>> = (0..big).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let mut rhs = vec![BigRat::zero(); big];
    if n == 1 {
        rhs[0] = -k.modulus().coeff(0);
    } else {
        rhs[1] = BigRat::one();
    }
    let c = linalg::solve(&a, &rhs).expect("powers of a primitive element form a basis");
    (NumberField::new_unchecked(norm.clone()), QPoly::from_rats(c))
}

/// Maps elements of the old field into the new one via `theta -> C(theta')`.
struct Embedding {
    powers: Vec<QPoly>,
}

impl Embedding {
    fn new(new_field: &NumberField, c: &QPoly, old_degree: usize) -> Self {
        let mut powers = Vec::with_capacity(old_degree);
        let mut cur = QPoly::one();
        for _ in 0..old_degree {
            powers.push(cur.clone());
            cur = new_field.mul(&cur, c);
        }
        Embedding { powers }
    }

    fn map(&self, field: &NumberField, e: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for (i, c) in e.coeffs().into_iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &self.powers[i].scale(&c);
            }
        }
        field.reduce(&acc)
    }

    fn map_poly(&self, field: &NumberField, f: &KPoly) -> KPoly {
        f.iter().map(|c| self.map(field, c)).collect()
    }
}

/// Splitting field of a monic irreducible polynomial of degree 2..=7, with all
/// of its roots. Fails with `OrderCapExceeded` if the field degree would
/// exceed `order_cap`.
pub fn splitting_field(p: &QPoly, order_cap: usize) -> Result<SplittingData, NfError> {
    let d = p.degree();
    if !(2..=7).contains(&d) {
        return Err(NfError::DegreeOutOfRange(d));
    }
    let p = p.monic();
    let bound = group_order_lower_bound(&p, 8);
    if bound > order_cap {
        return Err(NfError::OrderCapExceeded { cap: order_cap, bound });
    }
    let (field, tower, mut roots) = split_all(std::slice::from_ref(&p), order_cap)?;
    Ok(SplittingData { poly: p, tower, field: Arc::new(field), roots: roots.remove(0) })
}

/// Splitting field of `p = Res_y(y^2 - a, R(x - y))` built from the
/// summands: the field is generated by the roots of the cubic `R` and by
/// `sqrt(a)`. The roots are listed as `sqrt(a) + b_j` for `j = 1, 2, 3`
/// followed by `-sqrt(a) + b_j`, where `b_j` are the roots of `R`.
///
/// Both `R` and `x^2 - a` must be irreducible over the rationals.
pub fn splitting_field_quad_cubic(
    p: &QPoly,
    a: &BigRat,
    cubic: &QPoly,
    order_cap: usize,
) -> Result<SplittingData, NfError> {
    let quad = QPoly::from_rats(vec![-a.clone(), BigRat::zero(), BigRat::one()]);
    let (field, tower, roots) = split_all(&[cubic.monic(), quad], order_cap)?;
    let sq = &roots[1][0];
    let mut out = Vec::with_capacity(6);
    for sign in [1, -1] {
        for b in &roots[0] {
            out.push(if sign == 1 { b + sq } else { b - sq });
        }
    }
    Ok(SplittingData { poly: p.monic(), tower, field: Arc::new(field), roots: out })
}

/// Smallest field containing the roots of every input (each monic and
/// irreducible over Q), with those roots listed per input.
fn split_all(inputs: &[QPoly], order_cap: usize) -> Result<(NumberField, Tower, Vec<Vec<QPoly>>), NfError> {
    let scaled: Vec<(QPoly, BigInt)> = inputs.iter().map(integral_scaling).collect();
    let first = &scaled[0].0;
    let mut field = NumberField::new_unchecked(first.clone());
    let mut levels = vec![TowerLevel { relative: field.kp_from_q(first), absolute: first.clone(), shift: 0 }];
    let mut roots: Vec<Vec<QPoly>> = vec![Vec::new(); inputs.len()];
    let mut pending: Vec<(usize, KPoly)> = Vec::new();
    roots[0].push(QPoly::x());
    let lin: KPoly = vec![-QPoly::x(), QPoly::one()];
    pending.push((0, field.kp_divrem_monic(&field.kp_from_q(first), &lin).0));
    for (i, (pt, _)) in scaled.iter().enumerate().skip(1) {
        pending.push((i, field.kp_from_q(pt)));
    }
    loop {
        let mut nonlinear: Vec<(usize, KPoly, QPoly, i64)> = Vec::new();
        for (idx, f) in pending.drain(..) {
            let d = scaled[idx].0.degree();
            if f.len() == 2 {
                roots[idx].push(-&f[0]);
                continue;
            }
            // Once only one root is missing it is the trace minus the others.
            if roots[idx].len() + 1 == d {
                continue;
            }
            let tr = trager_factor(&field, &f)?;
            for tf in tr.factors {
                if tf.factor.len() == 2 {
                    roots[idx].push(-&tf.factor[0]);
                } else {
                    nonlinear.push((idx, tf.factor, tf.norm, tr.shift));
                }
            }
        }
        for (idx, (pt, _)) in scaled.iter().enumerate() {
            let d = pt.degree();
            if roots[idx].len() + 1 == d {
                let mut last = QPoly::constant(-pt.coeff(d - 1));
                for r in &roots[idx] {
                    last = &last - r;
                }
                roots[idx].push(last);
                nonlinear.retain(|(i, ..)| *i != idx);
            }
        }
        if nonlinear.is_empty() {
            break;
        }
        let pick = (0..nonlinear.len()).min_by_key(|&i| nonlinear[i].1.len()).unwrap();
        let (idx, h, norm, s) = nonlinear.remove(pick);
        let n = field.degree();
        let new_degree = n * (h.len() - 1);
        if new_degree > order_cap {
            return Err(NfError::OrderCapExceeded { cap: order_cap, bound: new_degree });
        }
        let (new_field, c) = adjoin(&field, &h, &norm, s);
        let emb = Embedding::new(&new_field, &c, n);
        for rs in roots.iter_mut() {
            *rs = rs.iter().map(|r| emb.map(&new_field, r)).collect();
        }
        // z = theta' - s*theta
        let z = new_field.reduce(&(&QPoly::x() - &c.scale(&BigRat::from_integer(s.into()))));
        roots[idx].push(z.clone());
        let h_new = emb.map_poly(&new_field, &h);
        let lin: KPoly = vec![-z, QPoly::one()];
        let (rest, _) = new_field.kp_divrem_monic(&h_new, &lin);
        if rest.len() > 1 {
            pending.push((idx, rest));
        }
        for (i, f, _, _) in nonlinear {
            pending.push((i, emb.map_poly(&new_field, &f)));
        }
        levels.push(TowerLevel { relative: h, absolute: norm, shift: s });
        field = new_field;
    }
    // Undo the integral scaling: roots of each input are roots of the
    // scaled polynomial divided by its scale factor.
    let roots = roots
        .into_iter()
        .zip(&scaled)
        .map(|(rs, (_, dd))| {
            let inv = BigRat::new(BigInt::one(), dd.clone());
            rs.iter().map(|r| r.scale(&inv)).collect()
        })
        .collect();
    Ok((field, Tower { levels }, roots))
}

/// A primitive element `sum c_i * root_i` of the splitting field.
#[derive(Clone, Debug)]
pub struct PrimitiveElement {
    pub weights: Vec<i64>,
    pub element: QPoly,
}

/// A prime `q` modulo which the field modulus splits into distinct linear
/// factors and every root is `q`-integral, with the roots of the modulus.
pub(crate) fn split_prime(data: &SplittingData, start: u64) -> (u64, Vec<u64>) {
    let m = data.field.modulus();
    let mut den = m.denominator().clone();
    for r in &data.roots {
        den = den.lcm(r.denominator());
    }
    let n = m.degree();
    for q in primes_above(start) {
        if (&den % q).is_zero() {
            continue;
        }
        let Ok(mq) = ModPoly::from_qpoly(q, m) else { continue };
        let xq = ModPoly::x(q).powmod(&num_bigint::BigUint::from(q), &mq);
        if xq.sub(&ModPoly::x(q)).rem(&mq).is_zero() && mq.is_squarefree() {
            let mut roots: Vec<u64> = if n == 1 {
                vec![(q - mq.c[0]) % q]
            } else {
                mq.factor(q).expect("squarefree").iter().map(|l| (q - l.c[0]) % q).collect()
            };
            roots.sort_unstable();
            return (q, roots);
        }
    }
    unreachable!("infinitely many totally split primes")
}

/// Reduce a field element modulo `q` at the root `r` of the modulus.
pub(crate) fn eval_mod(e: &QPoly, q: u64, r: u64) -> u64 {
    let eq = ModPoly::from_qpoly(q, e).expect("q-integral");
    eq.eval(r)
}

/// Deterministic weight search: `(1, t, t^2, ...)` for `t = 1, 2, ...`.
/// A weight vector is accepted when the element has as many distinct
/// conjugates as the field degree, certified by a modular rank computation.
pub fn primitive_element(data: &SplittingData) -> PrimitiveElement {
    let d = data.roots.len();
    let n = data.total_degree();
    for t in 1i64.. {
        let weights: Vec<i64> = (0..d as u32).map(|i| t.pow(i)).collect();
        let element = weighted_sum(data, &weights);
        if certify_generator(&data.field, &element) {
            return PrimitiveElement { weights, element };
        }
        debug_assert!(n > 0);
    }
    unreachable!()
}

pub(crate) fn weighted_sum(data: &SplittingData, weights: &[i64]) -> QPoly {
    let mut acc = QPoly::zero();
    for (w, r) in weights.iter().zip(&data.roots) {
        if *w != 0 {
            acc = &acc + &r.scale(&BigRat::from_integer((*w).into()));
        }
    }
    acc
}

/// `true` iff the element generates the whole field, i.e. its powers
/// `1, e, ..., e^(n-1)` are linearly independent. Checked modulo a few
/// primes first, with an exact fallback.
pub fn certify_generator(k: &NumberField, e: &QPoly) -> bool {
    let n = k.degree();
    let mut powers = Vec::with_capacity(n);
    let mut cur = QPoly::one();
    for _ in 0..n {
        powers.push(cur.clone());
        cur = k.mul(&cur, e);
    }
    let mut den = k.modulus().denominator().clone();
    for pw in &powers {
        den = den.lcm(pw.denominator());
    }
    let mut tried = 0;
    for q in primes_above(1 << 30) {
        if tried >= 3 {
            break;
        }
        if (&den % q).is_zero() {
            continue;
        }
        tried += 1;
        let rows: Vec<Vec<u64>> = powers
            .iter()
            .map(|pw| {
                let m = ModPoly::from_qpoly(q, pw).expect("q-integral");
                (0..n).map(|i| m.c.get(i).copied().unwrap_or(0)).collect()
            })
            .collect();
        if linalg::rank_mod_p(&rows, q) == n {
            return true;
        }
    }
    k.minpoly(e).degree() == n
}
