//! Certified complex roots and a brute-force numeric relation search, used
//! only as an independent cross-check of the exact routes.
//!
//! Roots are refined by Aberth iteration in fixed point (values are
//! `BigInt / 2^bits`). For each approximation `z` the disk of radius
//! `d |p(z)| / |p'(z)|` contains a root; `p(z)` and `p'(z)` are evaluated
//! exactly over the Gaussian integers, so the radii are rigorous upper
//! bounds. Pairwise disjoint disks then hold exactly one root each.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::factor;
use crate::poly::{int, BigRat, QPoly};
use crate::relations::{BetaKind, RelationReport};

pub const DEFAULT_CEILING_BITS: u32 = 4096;
const PERTURBATION_SEED: u64 = 0x0a11_ce5e_ed00;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NumericError {
    #[error("root certification failed below the precision ceiling of {0} bits")]
    PrecisionExhausted(u32),
    #[error("a candidate relation could not be decided at {0} bits")]
    Inconclusive(u32),
    #[error("polynomial must be squarefree of degree at least 1")]
    BadInput,
    #[error("labeling not found among the numeric roots")]
    NoLabeling,
}

/// A complex root approximation `(re + i im) / 2^bits` with a rigorous bound
/// `radius / 2^bits` on the distance to a true root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedRoot {
    pub re: BigInt,
    pub im: BigInt,
    pub radius: BigInt,
    pub bits: u32,
}

fn big_to_f64(v: &BigInt, bits: u32) -> f64 {
    // Keep 60 significant bits before converting.
    let len = v.bits();
    if len > 60 {
        let shift = len - 60;
        (v >> shift).to_f64().unwrap_or(0.0) * 2f64.powi(shift as i32 - bits as i32)
    } else {
        v.to_f64().unwrap_or(0.0) * 2f64.powi(-(bits as i32))
    }
}

impl CertifiedRoot {
    pub fn approx(&self) -> (f64, f64) {
        (big_to_f64(&self.re, self.bits), big_to_f64(&self.im, self.bits))
    }

    pub fn radius_f64(&self) -> f64 {
        big_to_f64(&self.radius, self.bits)
    }
}

/// Certified roots of one polynomial at a common precision.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub bits: u32,
    pub roots: Vec<CertifiedRoot>,
    /// Lower bound on the squared minimal root distance.
    pub separation_sq: BigRat,
    poly: Vec<BigInt>,
}

impl RootSet {
    /// Decision tolerance: a quarter of the separation bound, squared.
    pub fn tolerance_sq(&self) -> BigRat {
        &self.separation_sq / BigRat::from_integer(16.into())
    }
}

/// Mahler's bound `sep^2 >= 3 |D| / (d^(d+2) M^(2(d-1)))` with the Mahler
/// measure `M` replaced by the larger Euclidean norm.
pub fn separation_bound_sq(p: &QPoly) -> BigRat {
    let (_, f) = p.primitive_part();
    let d = f.len() - 1;
    if d < 2 {
        return BigRat::from_integer(BigInt::one());
    }
    let disc = factor::discriminant(&QPoly::from_bigints(f.clone())).abs();
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let den = BigInt::from(d).pow(d as u32 + 2) * norm_sq.pow(d as u32 - 1);
    disc * BigRat::from_integer(BigInt::from(3)) / BigRat::from_integer(den)
}

#[derive(Clone, Copy, Debug)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn add(self, o: C64) -> C64 {
        C64 { re: self.re + o.re, im: self.im + o.im }
    }
    fn sub(self, o: C64) -> C64 {
        C64 { re: self.re - o.re, im: self.im - o.im }
    }
    fn mul(self, o: C64) -> C64 {
        C64 { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
    fn div(self, o: C64) -> C64 {
        let n = o.re * o.re + o.im * o.im;
        C64 { re: (self.re * o.re + self.im * o.im) / n, im: (self.im * o.re - self.re * o.im) / n }
    }
    fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Gaussian fixed-point number at a scale of `2^bits`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Fix {
    re: BigInt,
    im: BigInt,
}

impl Fix {
    fn zero() -> Fix {
        Fix { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn add(&self, o: &Fix) -> Fix {
        Fix { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Fix) -> Fix {
        Fix { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn mul(&self, o: &Fix, bits: u32) -> Fix {
        Fix {
            re: (&self.re * &o.re - &self.im * &o.im) >> bits,
            im: (&self.re * &o.im + &self.im * &o.re) >> bits,
        }
    }
    fn div(&self, o: &Fix, bits: u32) -> Option<Fix> {
        let n = &o.re * &o.re + &o.im * &o.im;
        if n.is_zero() {
            return None;
        }
        let re = ((&self.re * &o.re + &self.im * &o.im) << bits) / &n;
        let im = ((&self.im * &o.re - &self.re * &o.im) << bits) / &n;
        Some(Fix { re, im })
    }
    fn norm_sq(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
    fn rescale(&self, from: u32, to: u32) -> Fix {
        if to >= from {
            Fix { re: &self.re << (to - from), im: &self.im << (to - from) }
        } else {
            Fix { re: &self.re >> (from - to), im: &self.im >> (from - to) }
        }
    }
}

fn f64_aberth(coeffs: &[f64]) -> Vec<C64> {
    let d = coeffs.len() - 1;
    let lc = coeffs[d];
    let c: Vec<f64> = coeffs.iter().map(|x| x / lc).collect();
    let radius = 1.0 + c[..d].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut rng = ChaCha8Rng::seed_from_u64(PERTURBATION_SEED);
    let golden = PI * (3.0 - 5f64.sqrt());
    let mut z: Vec<C64> = (0..d)
        .map(|k| {
            let ang = golden * k as f64 + rng.gen_range(-0.05..0.05);
            let r = radius * (1.0 + rng.gen_range(-0.01..0.01));
            C64 { re: r * ang.cos(), im: r * ang.sin() }
        })
        .collect();
    let eval = |x: C64| -> (C64, C64) {
        let mut pv = C64 { re: 0.0, im: 0.0 };
        let mut dv = C64 { re: 0.0, im: 0.0 };
        for &ci in c.iter().rev() {
            dv = dv.mul(x).add(pv);
            pv = pv.mul(x).add(C64 { re: ci, im: 0.0 });
        }
        (pv, dv)
    };
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let (pv, dv) = eval(z[k]);
            if pv.abs() == 0.0 {
                continue;
            }
            let n = pv.div(dv);
            let mut s = C64 { re: 0.0, im: 0.0 };
            for j in 0..d {
                if j != k {
                    s = s.add(C64 { re: 1.0, im: 0.0 }.div(z[k].sub(z[j])));
                }
            }
            let w = n.div(C64 { re: 1.0, im: 0.0 }.sub(n.mul(s)));
            if w.re.is_finite() && w.im.is_finite() {
                z[k] = z[k].sub(w);
                max_step = max_step.max(w.abs() / (1.0 + z[k].abs()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

fn to_fix(z: C64, bits: u32) -> Fix {
    let conv = |x: f64| {
        let m = x * 2f64.powi(52);
        let v = BigInt::from(m as i128);
        if bits >= 52 {
            v << (bits - 52)
        } else {
            v >> (52 - bits)
        }
    };
    Fix { re: conv(z.re), im: conv(z.im) }
}

/// `p(z)` and `p'(z)` in fixed point by Horner.
fn eval_fix(f: &[BigInt], z: &Fix, bits: u32) -> (Fix, Fix) {
    let mut pv = Fix::zero();
    let mut dv = Fix::zero();
    for c in f.iter().rev() {
        dv = dv.mul(z, bits).add(&pv);
        pv = pv.mul(z, bits);
        pv.re += c << bits;
    }
    (pv, dv)
}

fn aberth_fix(f: &[BigInt], z: &mut [Fix], bits: u32) {
    let d = z.len();
    let one = Fix { re: BigInt::one() << bits, im: BigInt::zero() };
    let target = BigInt::one() << 16u32;
    for _ in 0..200 {
        let mut max_step = BigInt::zero();
        for k in 0..d {
            let (pv, dv) = eval_fix(f, &z[k], bits);
            let Some(n) = pv.div(&dv, bits) else { continue };
            let mut s = Fix::zero();
            for j in 0..d {
                if j != k {
                    if let Some(t) = one.div(&z[k].sub(&z[j]), bits) {
                        s = s.add(&t);
                    }
                }
            }
            let Some(w) = n.div(&one.sub(&n.mul(&s, bits)), bits) else { continue };
            let step = w.re.abs().max(w.im.abs());
            if step > max_step {
                max_step = step;
            }
            z[k] = z[k].sub(&w);
        }
        if max_step < target {
            break;
        }
    }
}

fn ceil_sqrt(n: &BigInt) -> BigInt {
    let r = n.sqrt();
    if &(&r * &r) < n {
        r + 1
    } else {
        r
    }
}

/// Rigorous radius at scale `2^bits`: `ceil(2^bits * d |p(z)| / |p'(z)|)`.
fn certified_radius(f: &[BigInt], z: &Fix, bits: u32) -> Option<BigInt> {
    let d = f.len() - 1;
    // Exact Gaussian-integer evaluation of 2^(bits d) p(z) and 2^(bits (d-1)) p'(z).
    let (a, b) = (&z.re, &z.im);
    let mut pw: Vec<(BigInt, BigInt)> = Vec::with_capacity(d + 1);
    pw.push((BigInt::one(), BigInt::zero()));
    for j in 1..=d {
        let (x, y) = &pw[j - 1];
        pw.push((x * a - y * b, x * b + y * a));
    }
    let (mut pr, mut pi) = (BigInt::zero(), BigInt::zero());
    let (mut dr, mut di) = (BigInt::zero(), BigInt::zero());
    for (j, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sc = c << (bits as usize * (d - j));
        pr += &sc * &pw[j].0;
        pi += &sc * &pw[j].1;
        if j > 0 {
            let sd = (c * BigInt::from(j)) << (bits as usize * (d - j));
            dr += &sd * &pw[j - 1].0;
            di += &sd * &pw[j - 1].1;
        }
    }
    let pn = &pr * &pr + &pi * &pi;
    let dn = &dr * &dr + &di * &di;
    if dn.is_zero() {
        return None;
    }
    // (2^bits r)^2 = d^2 |P|^2 / |P'|^2 with P = 2^(bits d) p(z), P' = 2^(bits(d-1)) p'(z).
    let num = pn * BigInt::from(d * d);
    let q = (&num + &dn - 1) / &dn;
    Some(ceil_sqrt(&q))
}

fn try_certify(f: &[BigInt], z: &[Fix], bits: u32, sep_sq: &BigRat) -> Option<Vec<CertifiedRoot>> {
    let mut roots = Vec::with_capacity(z.len());
    let scale_sq = BigRat::from_integer(BigInt::one() << (2 * bits));
    let half_sep_sq = sep_sq * &scale_sq / BigRat::from_integer(4.into());
    for zi in z {
        let r = certified_radius(f, zi, bits)?;
        if BigRat::from_integer(&r * &r) > half_sep_sq {
            return None;
        }
        roots.push(CertifiedRoot { re: zi.re.clone(), im: zi.im.clone(), radius: r, bits });
    }
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let dre = &roots[i].re - &roots[j].re;
            let dim = &roots[i].im - &roots[j].im;
            let rr = &roots[i].radius + &roots[j].radius;
            if &dre * &dre + &dim * &dim <= &rr * &rr {
                return None;
            }
        }
    }
    Some(roots)
}

/// Certified roots of a squarefree polynomial, starting at `bits` and
/// doubling up to `ceiling`.
pub fn complex_roots_with_ceiling(p: &QPoly, bits: u32, ceiling: u32) -> Result<RootSet, NumericError> {
    if p.is_zero() || p.degree() == 0 || !p.is_squarefree() {
        return Err(NumericError::BadInput);
    }
    let (_, f) = p.primitive_part();
    let sep_sq = separation_bound_sq(p);
    let coeffs: Vec<f64> = f.iter().map(|c| c.to_f64().unwrap_or(f64::MAX)).collect();
    let start = f64_aberth(&coeffs);
    let mut bits = bits.max(64);
    let mut z: Vec<Fix> = start.iter().map(|&c| to_fix(c, bits)).collect();
    let mut prev_bits = bits;
    while bits <= ceiling {
        z = z.iter().map(|x| x.rescale(prev_bits, bits)).collect();
        aberth_fix(&f, &mut z, bits);
        if let Some(roots) = try_certify(&f, &z, bits, &sep_sq) {
            return Ok(RootSet { bits, roots, separation_sq: sep_sq, poly: f });
        }
        prev_bits = bits;
        bits *= 2;
    }
    Err(NumericError::PrecisionExhausted(ceiling))
}

pub fn complex_roots(p: &QPoly, bits: u32) -> Result<RootSet, NumericError> {
    complex_roots_with_ceiling(p, bits, DEFAULT_CEILING_BITS)
}

/// Outcome of testing whether an integer combination of roots vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    /// Zero lies in the combined disk and the disk is narrower than the tolerance.
    Zero,
    /// Zero lies outside the combined disk.
    NonZero,
    Inconclusive,
}

impl RootSet {
    /// Center and radius of `sum c_i root_i`.
    fn combine(&self, coeffs: &[(usize, i64)]) -> (Fix, BigInt) {
        let mut c = Fix::zero();
        let mut r = BigInt::zero();
        for &(i, k) in coeffs {
            let root = &self.roots[i];
            c.re += &root.re * k;
            c.im += &root.im * k;
            r += &root.radius * k.abs();
        }
        (c, r)
    }

    pub fn decide(&self, coeffs: &[(usize, i64)]) -> Decision {
        let (c, r) = self.combine(coeffs);
        if c.norm_sq() > &r * &r {
            return Decision::NonZero;
        }
        // (2r / 2^bits)^2 < tol^2
        let width_sq = BigRat::new(BigInt::from(4) * &r * &r, BigInt::one() << (2 * self.bits));
        if width_sq < self.tolerance_sq() {
            Decision::Zero
        } else {
            Decision::Inconclusive
        }
    }

    /// Approximate modulus of a combination, for reporting.
    pub fn residual(&self, coeffs: &[(usize, i64)]) -> f64 {
        let (c, _) = self.combine(coeffs);
        big_to_f64(&c.re, self.bits).hypot(big_to_f64(&c.im, self.bits))
    }

    /// Check that the sum of the roots is within the summed radii of the trace.
    pub fn trace_consistent(&self) -> bool {
        let d = self.poly.len() - 1;
        let lc = &self.poly[d];
        let all: Vec<(usize, i64)> = (0..self.roots.len()).map(|i| (i, 1)).collect();
        let (c, r) = self.combine(&all);
        // trace = -c_{d-1}/c_d, scaled.
        let tr = BigRat::new(-&self.poly[d - 1], lc.clone()) * BigRat::from_integer(BigInt::one() << self.bits);
        let dre = BigRat::from_integer(c.re) - tr;
        let dim = BigRat::from_integer(c.im);
        let rr = BigRat::from_integer(r + 1);
        &dre * &dre + &dim * &dim <= &rr * &rr
    }
}

/// A numerically detected relation with the indices of the roots involved.
#[derive(Clone, Debug, PartialEq)]
pub struct Hit {
    pub indices: Vec<usize>,
    pub residual: f64,
}

/// All numerically detected relations.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct OracleReport {
    /// `a_i + a_j = a_k + a_l`, indices `[i, j, k, l]`.
    pub pair_equal: Vec<Hit>,
    /// `a_i + a_j + a_k + a_l = 0`.
    pub sum_zero: Vec<Hit>,
    /// `a_i + a_j + a_k = a_l`, indices `[i, j, k, l]`.
    pub three_vs_one: Vec<Hit>,
    /// `2 a_i = a_j + a_k`, indices `[i, j, k]`.
    pub midpoint: Vec<Hit>,
}

/// Exhaustive scan over index tuples.
pub fn brute_force_relations(roots: &RootSet) -> Result<OracleReport, NumericError> {
    let d = roots.roots.len();
    let mut rep = OracleReport::default();
    let check = |coeffs: Vec<(usize, i64)>, indices: Vec<usize>, out: &mut Vec<Hit>| match roots.decide(&coeffs) {
        Decision::Zero => {
            out.push(Hit { residual: roots.residual(&coeffs), indices });
            Ok(())
        }
        Decision::NonZero => Ok(()),
        Decision::Inconclusive => Err(NumericError::Inconclusive(roots.bits)),
    };
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    for (x, &(i, j)) in pairs.iter().enumerate() {
        for &(k, l) in &pairs[x + 1..] {
            if k == i || k == j || l == i || l == j {
                continue;
            }
            check(vec![(i, 1), (j, 1), (k, -1), (l, -1)], vec![i, j, k, l], &mut rep.pair_equal)?;
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                for l in k + 1..d {
                    check(vec![(i, 1), (j, 1), (k, 1), (l, 1)], vec![i, j, k, l], &mut rep.sum_zero)?;
                }
                for l in 0..d {
                    if l != i && l != j && l != k {
                        check(vec![(i, 1), (j, 1), (k, 1), (l, -1)], vec![i, j, k, l], &mut rep.three_vs_one)?;
                    }
                }
            }
        }
    }
    for i in 0..d {
        for &(j, k) in &pairs {
            if j != i && k != i {
                check(vec![(i, 2), (j, -1), (k, -1)], vec![i, j, k], &mut rep.midpoint)?;
            }
        }
    }
    Ok(rep)
}

/// Roots and relation scan, doubling the precision while any candidate is
/// undecided.
pub fn oracle_relations(p: &QPoly, bits: u32) -> Result<(RootSet, OracleReport), NumericError> {
    let mut bits = bits.max(64);
    loop {
        let roots = complex_roots(p, bits)?;
        match brute_force_relations(&roots) {
            Ok(rep) => return Ok((roots, rep)),
            Err(NumericError::Inconclusive(b)) => {
                if b * 2 > DEFAULT_CEILING_BITS {
                    return Err(NumericError::PrecisionExhausted(DEFAULT_CEILING_BITS));
                }
                bits = b * 2;
            }
            Err(e) => return Err(e),
        }
    }
}

/// A numeric candidate for the three-sum labeling of a sextic.
#[derive(Clone, Debug)]
pub struct NumericLabeling {
    /// `order[k]` is the index of the numeric root labeled `k + 1`.
    pub order: [usize; 6],
    /// Approximate `beta_1, beta_2, beta_3`.
    pub betas: [(f64, f64); 3],
}

/// Match numeric roots of a sextic to the system
/// `a1+a2 = a3+a4`, `a2+a5 = a3+a6`, `a1+a6 = a4+a5` together with
/// `-2(a1+a2) = a5+a6`, `-2(a2+a5) = a1+a4`, `-2(a1+a6) = a2+a3`,
/// with the three sums pairwise distinct.
pub fn label_conjugates(roots: &RootSet) -> Result<NumericLabeling, NumericError> {
    if roots.roots.len() != 6 {
        return Err(NumericError::BadInput);
    }
    let zero = |coeffs: Vec<(usize, i64)>| -> Result<bool, NumericError> {
        match roots.decide(&coeffs) {
            Decision::Zero => Ok(true),
            Decision::NonZero => Ok(false),
            Decision::Inconclusive => Err(NumericError::Inconclusive(roots.bits)),
        }
    };
    for a1 in 0..6 {
        for a2 in 0..6 {
            if a2 == a1 {
                continue;
            }
            for a3 in 0..6 {
                for a4 in 0..6 {
                    let used = [a1, a2];
                    if a3 == a4 || used.contains(&a3) || used.contains(&a4) {
                        continue;
                    }
                    if !zero(vec![(a1, 1), (a2, 1), (a3, -1), (a4, -1)])? {
                        continue;
                    }
                    for a5 in 0..6 {
                        if [a1, a2, a3, a4].contains(&a5) {
                            continue;
                        }
                        let a6 = (0..6).find(|i| ![a1, a2, a3, a4, a5].contains(i)).expect("six roots");
                        let eqs = [
                            vec![(a2, 1), (a5, 1), (a3, -1), (a6, -1)],
                            vec![(a1, 1), (a6, 1), (a4, -1), (a5, -1)],
                            vec![(a1, 2), (a2, 2), (a5, 1), (a6, 1)],
                            vec![(a2, 2), (a5, 2), (a1, 1), (a4, 1)],
                            vec![(a1, 2), (a6, 2), (a2, 1), (a3, 1)],
                        ];
                        let mut ok = true;
                        for e in eqs {
                            if !zero(e)? {
                                ok = false;
                                break;
                            }
                        }
                        if !ok {
                            continue;
                        }
                        // Distinct sums: b1 - b2, b1 - b3, b2 - b3 nonzero.
                        let distinct = !zero(vec![(a1, 1), (a2, 1), (a2, -1), (a5, -1)])?
                            && !zero(vec![(a1, 1), (a2, 1), (a1, -1), (a6, -1)])?
                            && !zero(vec![(a2, 1), (a5, 1), (a1, -1), (a6, -1)])?;
                        if !distinct {
                            continue;
                        }
                        let approx = |i: usize, j: usize| {
                            let (x1, y1) = roots.roots[i].approx();
                            let (x2, y2) = roots.roots[j].approx();
                            (x1 + x2, y1 + y2)
                        };
                        return Ok(NumericLabeling {
                            order: [a1, a2, a3, a4, a5, a6],
                            betas: [approx(a1, a2), approx(a2, a5), approx(a1, a6)],
                        });
                    }
                }
            }
        }
    }
    Err(NumericError::NoLabeling)
}

/// Relation types that can be found by either route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    SumZero,
    PairEqual,
    ThreeVsOne,
    Midpoint,
}

impl RelationKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RelationKind::SumZero => "sum_zero",
            RelationKind::PairEqual => "pair_equal",
            RelationKind::ThreeVsOne => "three_vs_one",
            RelationKind::Midpoint => "midpoint",
        }
    }
}

pub fn exact_relation_set(r: &RelationReport) -> BTreeSet<RelationKind> {
    let mut out = BTreeSet::new();
    if r.sum_zero_quadruple {
        out.insert(RelationKind::SumZero);
    }
    if r.pair_equal.is_some() {
        out.insert(RelationKind::PairEqual);
    }
    if r.three_vs_one {
        out.insert(RelationKind::ThreeVsOne);
    }
    out
}

impl OracleReport {
    pub fn relation_set(&self) -> BTreeSet<RelationKind> {
        let mut out = BTreeSet::new();
        for (kind, hits) in [
            (RelationKind::SumZero, &self.sum_zero),
            (RelationKind::PairEqual, &self.pair_equal),
            (RelationKind::ThreeVsOne, &self.three_vs_one),
            (RelationKind::Midpoint, &self.midpoint),
        ] {
            if !hits.is_empty() {
                out.insert(kind);
            }
        }
        out
    }
}

/// A disk in exact rational coordinates.
struct Disk {
    re: BigRat,
    im: BigRat,
    radius: BigRat,
}

impl Disk {
    fn of_sum(roots: &RootSet, idx: &[usize]) -> Disk {
        let scale = BigRat::from_integer(BigInt::one() << roots.bits);
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        let mut r = BigInt::zero();
        for &i in idx {
            re += &roots.roots[i].re;
            im += &roots.roots[i].im;
            r += &roots.roots[i].radius;
        }
        Disk {
            re: BigRat::from_integer(re) / &scale,
            im: BigRat::from_integer(im) / &scale,
            radius: BigRat::from_integer(r) / &scale,
        }
    }

    fn of_root(root: &CertifiedRoot) -> Disk {
        let scale = BigRat::from_integer(BigInt::one() << root.bits);
        Disk {
            re: BigRat::from_integer(root.re.clone()) / &scale,
            im: BigRat::from_integer(root.im.clone()) / &scale,
            radius: BigRat::from_integer(root.radius.clone()) / &scale,
        }
    }

    fn meets(&self, o: &Disk) -> bool {
        let dre = &self.re - &o.re;
        let dim = &self.im - &o.im;
        let rr = &self.radius + &o.radius;
        &dre * &dre + &dim * &dim <= &rr * &rr
    }
}

/// Check the numeric scan against the exact report: both must name the same
/// relation types, and every pair-equal hit must reproduce the exact common
/// value (the rational `beta`, or a root of its cubic minimal polynomial).
pub fn confirm_hits(exact: &RelationReport, roots: &RootSet, rep: &OracleReport) -> Result<(), String> {
    let e = exact_relation_set(exact);
    let n = rep.relation_set();
    if e != n {
        let names = |s: &BTreeSet<RelationKind>| s.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(",");
        return Err(format!("exact relations {{{}}} but numeric relations {{{}}}", names(&e), names(&n)));
    }
    let Some(pe) = &exact.pair_equal else { return Ok(()) };
    let shift2 = int(2) * &exact.trace_shift.r;
    let targets: Vec<Disk> = match pe.beta_kind {
        BetaKind::Rational => {
            let v = pe.beta_value.clone().ok_or("rational beta without a value")?;
            vec![Disk { re: v, im: BigRat::zero(), radius: BigRat::zero() }]
        }
        BetaKind::Cubic => {
            let m = pe.beta_minpoly.as_ref().ok_or("cubic beta without a minimal polynomial")?;
            let moved = m.translate(&-shift2);
            complex_roots(&moved, roots.bits)
                .map_err(|e| e.to_string())?
                .roots
                .iter()
                .map(Disk::of_root)
                .collect()
        }
    };
    for hit in &rep.pair_equal {
        let d = Disk::of_sum(roots, &hit.indices[..2]);
        if !targets.iter().any(|t| t.meets(&d)) {
            return Err(format!("pair-equal hit {:?} does not match the exact common value", hit.indices));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two() {
        let rs = complex_roots(&QPoly::from_i64(&[-2, 0, 1]), 64).unwrap();
        let mut re: Vec<f64> = rs.roots.iter().map(|r| r.approx().0).collect();
        re.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((re[1] - 2f64.sqrt()).abs() < 1e-15 && (re[0] + 2f64.sqrt()).abs() < 1e-15);
        assert!(rs.roots.iter().all(|r| r.radius_f64() < 2f64.powi(-50)));
        assert!(rs.trace_consistent());
    }

    #[test]
    fn eighth_roots_of_unity() {
        let rs = complex_roots(&QPoly::from_i64(&[1, 0, 0, 0, 1]), 64).unwrap();
        for r in &rs.roots {
            let (x, y) = r.approx();
            assert!((x.abs() - 0.5f64.sqrt()).abs() < 1e-12 && (y.abs() - 0.5f64.sqrt()).abs() < 1e-12);
        }
        let rep = brute_force_relations(&rs).unwrap();
        assert!(!rep.pair_equal.is_empty() && !rep.sum_zero.is_empty());
        assert!(rep.three_vs_one.is_empty() && rep.midpoint.is_empty());
    }

    #[test]
    fn quintic_has_no_relations() {
        let (_, rep) = oracle_relations(&QPoly::from_i64(&[-1, -1, 0, 0, 0, 1]), 64).unwrap();
        assert_eq!(rep, OracleReport::default());
    }
}
