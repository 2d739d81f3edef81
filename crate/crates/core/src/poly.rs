//! Dense univariate polynomials over the rationals.
//!
//! A [`QPoly`] is stored as integer numerators over one common positive
//! denominator, constant term first. The representation is canonical: the
//! numerators carry no trailing zeros, and their content is coprime to the
//! denominator, so structural equality is polynomial equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type BigRat = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not an exact square")]
    NotASquare,
    #[error("degree {0} is too small for this operation")]
    DegreeTooSmall(usize),
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    num: Vec<BigInt>,
    den: BigInt,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_rats(vec![c])
    }

    pub fn monomial(c: BigRat, k: usize) -> Self {
        let mut v = vec![BigRat::zero(); k + 1];
        v[k] = c;
        Self::from_rats(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_parts(coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::from_parts(coeffs, BigInt::one())
    }

    /// Build from numerators over a shared (nonzero) denominator.
    pub fn from_parts(num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut p = QPoly { num, den };
        p.normalize();
        p
    }

    pub fn from_rats(coeffs: Vec<BigRat>) -> Self {
        let mut den = BigInt::one();
        for c in &coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(num, den)
    }

    fn normalize(&mut self) {
        while self.num.last().is_some_and(|c| c.is_zero()) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den = &self.den / &g;
            for c in &mut self.num {
                *c = &*c / &g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.den.is_one() && self.num[0].is_one()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.num.len().saturating_sub(1)
    }

    /// Degree, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0 for zero).
    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn is_empty(&self) -> bool {
        self.num.is_empty()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        match self.num.get(i) {
            Some(c) => BigRat::new(c.clone(), self.den.clone()),
            None => BigRat::zero(),
        }
    }

    /// Coefficients, constant term first.
    pub fn coeffs(&self) -> Vec<BigRat> {
        (0..self.num.len()).map(|i| self.coeff(i)).collect()
    }

    pub fn leading_coeff(&self) -> BigRat {
        match self.deg() {
            Some(d) => self.coeff(d),
            None => BigRat::zero(),
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_one()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.den.is_one()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_parts(
            self.num.iter().map(|a| a * c.numer()).collect(),
            &self.den * c.denom(),
        )
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::from_parts(self.num.iter().map(|a| a * c).collect(), self.den.clone())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let lc = self.num.last().unwrap().clone();
        // p / (lc/den) = num/lc
        Self::from_parts(self.num.clone(), lc)
    }

    /// Content `c` and primitive integer part `P` with `self = c * P`,
    /// `gcd(P) = 1` and positive leading coefficient. Zero maps to `(0, [])`.
    pub fn primitive_part(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let mut g = BigInt::zero();
        for c in &self.num {
            g = g.gcd(c);
        }
        if self.num.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = self.num.iter().map(|c| c / &g).collect();
        (BigRat::new(g, self.den.clone()), prim)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        // Horner on numerators over x = n/d, scaled by d^deg.
        if self.is_zero() {
            return BigRat::zero();
        }
        let (n, d) = (x.numer(), x.denom());
        let deg = self.degree();
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.num.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // acc = sum c_i n^i d^(deg-i)
        BigRat::new(acc, &self.den * num_traits::pow(d.clone(), deg))
    }

    pub fn derivative(&self) -> Self {
        if self.num.len() <= 1 {
            return Self::zero();
        }
        Self::from_parts(
            self.num
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
            self.den.clone(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// `self(q(x))`.
    pub fn compose(&self, q: &QPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs().into_iter().rev() {
            acc = &(&acc * q) + &Self::constant(c);
        }
        acc
    }

    /// `self(x + r)`, computed by a Taylor shift on the integer numerators.
    pub fn translate(&self, r: &BigRat) -> Self {
        if self.is_zero() || r.is_zero() {
            return self.clone();
        }
        // p(x + n/d) = d^-deg * P(d x + n) / d^... : work with q(y) = sum c_i (y+n)^i d^(deg-i)
        // where y = d x, then substitute back.
        let deg = self.degree();
        let (n, d) = (r.numer().clone(), r.denom().clone());
        // scaled coefficients c_i * d^(deg - i)
        let mut a: Vec<BigInt> = Vec::with_capacity(deg + 1);
        let mut dp = BigInt::one();
        let mut pows = vec![BigInt::one(); deg + 1];
        for i in (0..=deg).rev() {
            pows[i] = dp.clone();
            dp *= &d;
        }
        for i in 0..=deg {
            a.push(&self.num[i] * &pows[i]);
        }
        // Taylor shift by n: a(y) -> a(y + n)
        for i in 0..deg {
            for j in (i..deg).rev() {
                let t = &a[j + 1] * &n;
                a[j] += t;
            }
        }
        // a(y) with y = d x: coefficient of x^i is a_i d^i; overall / d^deg
        let mut dp = BigInt::one();
        for c in a.iter_mut() {
            *c *= &dp;
            dp *= &d;
        }
        let den = &self.den * num_traits::pow(d, deg);
        Self::from_parts(a, den)
    }

    /// `self(-x)`.
    pub fn reflect(&self) -> Self {
        Self::from_parts(
            self.num
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
            self.den.clone(),
        )
    }

    /// `c^deg * self(x / c)`: roots scaled by `c`. Keeps monic inputs monic.
    pub fn scale_roots(&self, c: &BigRat) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let deg = self.degree();
        let coeffs = self
            .coeffs()
            .into_iter()
            .enumerate()
            .map(|(i, a)| a * num_traits::pow(c.clone(), deg - i))
            .collect();
        Self::from_rats(coeffs)
    }

    pub fn is_even(&self) -> bool {
        self.num.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn div_rem(&self, q: &QPoly) -> Result<(QPoly, QPoly), PolyError> {
        let dq = q.deg().ok_or(PolyError::DivisionByZero)?;
        let Some(dp) = self.deg() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dp < dq {
            return Ok((Self::zero(), self.clone()));
        }
        // Pseudo-division on integer numerators: lc^k * P = Q*B + R.
        let b = &q.num;
        let lb = b[dq].clone();
        let mut r: Vec<BigInt> = self.num.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        let steps = dp - dq + 1;
        for k in (0..steps).rev() {
            let top = r[k + dq].clone();
            for c in quot.iter_mut() {
                *c *= &lb;
            }
            for c in r.iter_mut() {
                *c *= &lb;
            }
            quot[k] += &top;
            if !top.is_zero() {
                for (j, bj) in b.iter().enumerate() {
                    r[k + j] -= &top * bj;
                }
            }
            r.pop();
        }
        // lb^steps * self.num = quot * b + r   (over integers)
        // self = self.num/self.den ; q = b/q.den
        // self = (quot * q.den / (lb^steps * self.den)) * q + r/(lb^steps * self.den)
        let scale = num_traits::pow(lb, steps) * &self.den;
        let qq = Self::from_parts(quot.iter().map(|c| c * &q.den).collect(), scale.clone());
        let rr = Self::from_parts(r, scale);
        Ok((qq, rr))
    }

    pub fn rem(&self, q: &QPoly) -> Result<QPoly, PolyError> {
        let dq = q.deg().ok_or(PolyError::DivisionByZero)?;
        if self.num.len() <= dq {
            return Ok(self.clone());
        }
        let b = &q.num;
        let lb = &b[dq];
        let mut r = self.num.clone();
        let mut steps = 0usize;
        if lb.is_one() {
            for k in (0..r.len() - dq).rev() {
                let top = std::mem::take(&mut r[k + dq]);
                if !top.is_zero() {
                    for (j, bj) in b.iter().enumerate().take(dq) {
                        if !bj.is_zero() {
                            r[k + j] -= &top * bj;
                        }
                    }
                }
            }
        } else {
            for k in (0..r.len() - dq).rev() {
                let top = std::mem::take(&mut r[k + dq]);
                for c in r[..k + dq].iter_mut() {
                    *c *= lb;
                }
                steps += 1;
                if !top.is_zero() {
                    for (j, bj) in b.iter().enumerate().take(dq) {
                        r[k + j] -= &top * bj;
                    }
                }
            }
        }
        r.truncate(dq);
        let scale = num_traits::pow(lb.clone(), steps) * &self.den;
        Ok(Self::from_parts(r, scale))
    }

    /// Exact quotient; `None` if the division leaves a remainder.
    pub fn exact_div(&self, q: &QPoly) -> Option<QPoly> {
        let (quot, r) = self.div_rem(q).ok()?;
        r.is_zero().then_some(quot)
    }

    /// Monic greatest common divisor. `gcd(0, 0)` is zero.
    pub fn gcd_monic(&self, other: &QPoly) -> QPoly {
        let (_, a) = self.primitive_part();
        let (_, b) = other.primitive_part();
        let g = zgcd_primitive(a, b);
        QPoly::from_bigints(g).monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &QPoly, b: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let lc = r0.leading_coeff().recip();
        (r0.scale(&lc), s0.scale(&lc), t0.scale(&lc))
    }

    /// Yun's square-free decomposition: `(f_i, m_i)` with `self = lc * prod f_i^m_i`,
    /// each `f_i` monic, square-free, and pairwise coprime. Sorted by multiplicity.
    pub fn squarefree_decompose(&self) -> Vec<(QPoly, usize)> {
        if self.degree() == 0 {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd_monic(&df);
        let mut b = f.exact_div(&a0).expect("gcd divides");
        let mut c = df.exact_div(&a0).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let a = b.gcd_monic(&d);
            if a.degree() > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a).expect("gcd divides");
            if b.degree() == 0 {
                break;
            }
            c = d.exact_div(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Discriminant; zero exactly when there is a repeated root.
    pub fn discriminant(&self) -> BigRat {
        crate::factor::discriminant(self)
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree() == 0 || self.gcd_monic(&self.derivative()).degree() == 0
    }

    /// Exact square root with positive leading coefficient, by coefficient
    /// recursion from the top. Verified by squaring.
    pub fn sqrt(&self) -> Result<QPoly, PolyError> {
        let Some(d) = self.deg() else {
            return Ok(Self::zero());
        };
        if d % 2 == 1 {
            return Err(PolyError::NotASquare);
        }
        let c = self.coeffs();
        let lead = rat_sqrt(&c[d]).ok_or(PolyError::NotASquare)?;
        let m = d / 2;
        let mut r = vec![BigRat::zero(); m + 1];
        r[m] = lead;
        let two_lead = &r[m] * int(2);
        for k in (0..m).rev() {
            // coefficient of x^(m+k) in r^2 = c[m+k]
            let mut s = c[m + k].clone();
            for j in (k + 1)..m {
                let i = m + k - j;
                if i > m || i <= k {
                    continue;
                }
                s -= &r[i] * &r[j];
            }
            r[k] = s / &two_lead;
        }
        let root = Self::from_rats(r);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(PolyError::NotASquare)
        }
    }
}

/// Primitive PRS gcd over the integers; result primitive with positive leading coefficient.
pub(crate) fn zgcd_primitive(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    let (mut a, mut b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    if b.is_empty() {
        return zprimitive(a);
    }
    a = zprimitive(a);
    b = zprimitive(b);
    while !b.is_empty() {
        let r = zprem(&a, &b);
        a = b;
        b = zprimitive(r);
    }
    if a.len() == 1 {
        return vec![BigInt::one()];
    }
    a
}

pub(crate) fn zcontent(a: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

pub(crate) fn ztrim(a: &mut Vec<BigInt>) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

/// Divide out the content and make the leading coefficient positive.
pub(crate) fn zprimitive(mut a: Vec<BigInt>) -> Vec<BigInt> {
    ztrim(&mut a);
    if a.is_empty() {
        return a;
    }
    let mut g = zcontent(&a);
    if a.last().unwrap().is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for c in a.iter_mut() {
            *c = &*c / &g;
        }
    }
    a
}

/// Pseudo-remainder of integer polynomials: `lc(b)^(deg a - deg b + 1) a mod b`.
pub(crate) fn zprem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    ztrim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r;
    }
    let lb = &b[db];
    let mut steps = r.len() - b.len() + 1;
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let top = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &top * bj;
        }
        r.pop();
        ztrim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

pub(crate) fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

pub fn rat_sqrt(q: &BigRat) -> Option<BigRat> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt_exact(q.numer())?;
    let d = int_sqrt_exact(q.denom())?;
    Some(BigRat::new(n, d))
}

pub fn is_rational_square(q: &BigRat) -> bool {
    rat_sqrt(q).is_some()
}

pub fn int_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = num_integer::Roots::sqrt(n);
    (&r * &r == *n).then_some(r)
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (l, r) = if self.den == o.den {
            (BigInt::one(), BigInt::one())
        } else {
            let g = self.den.gcd(&o.den);
            (&o.den / &g, &self.den / &g)
        };
        let n = self.num.len().max(o.num.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.num.get(i).map(|c| c * &l).unwrap_or_default();
            let b = o.num.get(i).map(|c| c * &r).unwrap_or_default();
            out.push(a + b);
        }
        QPoly::from_parts(out, &self.den * &l)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &(-o)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_parts(zmul(&self.num, &o.num), &self.den * &o.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QPoly {
            type Output = QPoly;
            fn $m(self, o: QPoly) -> QPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

fn fmt_rat_abs(c: &BigRat) -> String {
    let a = c.abs();
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for QPoly {
    /// Human-readable form such as `x^6 - 6x^4 + 4x^3 - 3/2*x - 4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.num.len()).rev() {
            let c = self.coeff(i);
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{}", fmt_rat_abs(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else if a.is_integer() {
                write!(f, "{}{mono}", fmt_rat_abs(&a))?;
            } else {
                write!(f, "{}*{mono}", fmt_rat_abs(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

/// Translation applied to reach a zero-trace polynomial. The normalized
/// polynomial is `p(x + r)`, whose roots are `alpha - r` with `r = tr(alpha)/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceShift {
    pub r: BigRat,
}

/// `p(x + r)` for a monic `p`; roots move by `-r`.
pub fn translate(p: &QPoly, r: &BigRat) -> QPoly {
    p.translate(r)
}

/// Monicize and translate so the `x^(d-1)` coefficient vanishes.
/// Returns the polynomial whose roots are `alpha - r`, with `r = tr(alpha)/d`.
pub fn trace_normalize(p: &QPoly) -> Result<(QPoly, TraceShift), PolyError> {
    let d = p.degree();
    if p.is_zero() || d == 0 {
        return Err(PolyError::DegreeTooSmall(d));
    }
    let m = p.monic();
    let r = -m.coeff(d - 1) / int(d as i64);
    Ok((m.translate(&r), TraceShift { r }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn arithmetic_basics() {
        assert_eq!(&qp(&[1, 1]) * &qp(&[-1, 1]), qp(&[-1, 0, 1]));
        let (q, r) = qp(&[-1, 0, 1]).div_rem(&qp(&[-1, 1])).unwrap();
        assert_eq!((q, r), (qp(&[1, 1]), QPoly::zero()));
        let (q, r) = qp(&[1, 2, 0, 1]).div_rem(&qp(&[0, 0, 1])).unwrap();
        assert_eq!((q, r), (qp(&[0, 1]), qp(&[1, 2])));
        assert_eq!(qp(&[1, 1]).div_rem(&QPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn rational_division() {
        let p = QPoly::from_rats(vec![rat(1, 2), rat(3, 4), rat(5, 3)]);
        let q = QPoly::from_rats(vec![rat(-2, 7), rat(2, 5)]);
        let (quot, r) = p.div_rem(&q).unwrap();
        assert_eq!(&(&quot * &q) + &r, p);
        assert!(r.degree() < q.degree() || r.is_zero());
    }

    #[test]
    fn translate_examples() {
        assert_eq!(qp(&[-2, 0, 1]).translate(&int(1)), qp(&[-1, 2, 1]));
        let p = qp(&[-1, 1, 0, -2, 1]);
        let expect = QPoly::from_rats(vec![rat(-11, 16), int(0), rat(-3, 2), int(0), int(1)]);
        assert_eq!(p.translate(&rat(1, 2)), expect);
        assert_eq!(expect.translate(&rat(-1, 2)), p);
        assert_eq!(p.translate(&int(0)), p);
    }

    #[test]
    fn translate_oracle_by_evaluation() {
        // p(x + r) evaluated at x in {0..4} must equal p evaluated at x + r.
        let p = qp(&[-1, 1, 0, -2, 1]);
        let r = rat(-1, 2);
        let t = p.translate(&r);
        for x in 0..5 {
            let x = int(x);
            assert_eq!(t.eval(&x), p.eval(&(&x + &r)));
        }
    }

    #[test]
    fn trace_normalize_examples() {
        let (q, s) = trace_normalize(&qp(&[-1, 1, 0, -2, 1])).unwrap();
        assert_eq!(q, QPoly::from_rats(vec![rat(-11, 16), int(0), rat(-3, 2), int(0), int(1)]));
        assert_eq!(s.r, rat(1, 2));
        let (q, s) = trace_normalize(&qp(&[1, 0, 0, 1, 0, 0, 1])).unwrap();
        assert_eq!(q, qp(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(s.r, int(0));
        let (q, s) = trace_normalize(&qp(&[3, 2, 1])).unwrap();
        assert_eq!(q, qp(&[2, 0, 1]));
        assert_eq!(s.r, int(-1));
    }

    #[test]
    fn gcd_and_squarefree() {
        assert_eq!(qp(&[-1, 0, 1]).gcd_monic(&qp(&[1, 2, 1])), qp(&[1, 1]));
        assert_eq!(
            qp(&[0, 0, 1, 1]).squarefree_decompose(),
            vec![(qp(&[1, 1]), 1), (qp(&[0, 1]), 2)]
        );
        let p = qp(&[1, 0, 0, 1, 0, 0, 1]);
        assert!(p.gcd_monic(&p.derivative()).is_one());
    }

    #[test]
    fn xgcd_identity() {
        let a = qp(&[1, 2, 0, 3]);
        let b = qp(&[-1, 0, 1]);
        let (g, s, t) = QPoly::xgcd(&a, &b);
        assert!(g.is_one());
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn sqrt_roundtrip() {
        let r = QPoly::from_rats(vec![rat(1, 3), int(-2), int(0), int(1)]);
        assert_eq!((&r * &r).sqrt().unwrap(), r);
        assert_eq!(qp(&[1, 0, 2]).sqrt(), Err(PolyError::NotASquare));
    }

    #[test]
    fn display() {
        assert_eq!(qp(&[-4, 24, 12, 4, -6, 0, 1]).to_string(), "x^6 - 6x^4 + 4x^3 + 12x^2 + 24x - 4");
        let p = QPoly::from_rats(vec![rat(-11, 16), int(0), rat(-3, 2), int(0), int(1)]);
        assert_eq!(p.to_string(), "x^4 - 3/2*x^2 - 11/16");
        assert_eq!(qp(&[0, -1]).to_string(), "-x");
    }

    #[test]
    fn canonical_form() {
        let p = QPoly::from_parts(vec![BigInt::from(2), BigInt::from(4)], BigInt::from(-6));
        assert_eq!(p.denominator(), &BigInt::from(3));
        assert_eq!(p.coeff(1), rat(-2, 3));
        assert!(QPoly::from_i64(&[0, 0, 0]).is_zero());
    }
}
