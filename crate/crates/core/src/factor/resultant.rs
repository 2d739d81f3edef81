//! Scalar and bivariate resultants.
//!
//! The scalar kernel runs the subresultant remainder sequence on primitive
//! integer polynomials. Bivariate resultants evaluate the first variable at
//! small integers, call the scalar kernel, and interpolate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::{zcontent, zprem, ztrim, BigRat, QPoly};

/// Polynomial in `y` whose coefficients are polynomials in `x`; entry `j`
/// is the coefficient of `y^j`.
pub type BiPoly = Vec<QPoly>;

/// Sylvester resultant `Res(f, g)` over the rationals.
pub fn resultant(f: &QPoly, g: &QPoly) -> BigRat {
    if f.is_zero() || g.is_zero() {
        return BigRat::zero();
    }
    let (cf, pf) = f.primitive_part();
    let (cg, pg) = g.primitive_part();
    let df = f.degree();
    let dg = g.degree();
    let r = zresultant(&pf, &pg);
    BigRat::from_integer(r) * num_traits::pow(cf, dg) * num_traits::pow(cg, df)
}

/// Resultant of two integer polynomials (constant term first, nonzero).
pub fn zresultant(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    ztrim(&mut a);
    ztrim(&mut b);
    if a.is_empty() || b.is_empty() {
        return BigInt::zero();
    }
    let mut sign = false;
    if a.len() < b.len() {
        let (da, db) = (a.len() - 1, b.len() - 1);
        if (da * db) % 2 == 1 {
            sign = !sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    let (da, db) = (a.len() - 1, b.len() - 1);
    if db == 0 {
        let r = num_traits::pow(b[0].clone(), da);
        return if sign { -r } else { r };
    }
    let ca = zcontent(&a);
    let cb = zcontent(&b);
    for c in a.iter_mut() {
        *c = &*c / &ca;
    }
    for c in b.iter_mut() {
        *c = &*c / &cb;
    }
    let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    while b.len() > 1 {
        let dega = a.len() - 1;
        let degb = b.len() - 1;
        let delta = dega - degb;
        if dega % 2 == 1 && degb % 2 == 1 {
            sign = !sign;
        }
        let r = zprem(&a, &b);
        if r.is_empty() {
            return BigInt::zero();
        }
        a = b;
        let div = &g * num_traits::pow(h.clone(), delta);
        b = r.into_iter().map(|c| c / &div).collect();
        g = a.last().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
        };
    }
    let dega = a.len() - 1;
    let lb = b[0].clone();
    let hh = if dega == 0 {
        h
    } else {
        num_traits::pow(lb, dega) / num_traits::pow(h, dega - 1)
    };
    let r = t * hh;
    if sign {
        -r
    } else {
        r
    }
}

/// Discriminant `(-1)^(d(d-1)/2) Res(p, p') / lc(p)`.
pub fn discriminant(p: &QPoly) -> BigRat {
    let d = p.degree();
    if p.is_zero() || d == 0 {
        return BigRat::zero();
    }
    if d == 1 {
        return BigRat::one();
    }
    let r = resultant(p, &p.derivative()) / p.leading_coeff();
    if (d * (d - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn bi_degrees(f: &BiPoly) -> (usize, usize) {
    let dy = f.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
    let dx = f.iter().map(|c| c.degree()).max().unwrap_or(0);
    (dy, dx)
}

/// Clear denominators: returns integer coefficient rows and the scale `c`
/// with `c * f` integral.
fn bi_integral(f: &BiPoly) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut den = BigInt::one();
    for c in f {
        den = den.lcm(c.denominator());
    }
    let rows = f
        .iter()
        .map(|c| {
            let s = &den / c.denominator();
            c.numerators().iter().map(|a| a * &s).collect()
        })
        .collect();
    (rows, den)
}

fn eval_int(c: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for a in c.iter().rev() {
        acc = acc * x + a;
    }
    acc
}

/// `Res_y(F, G)` as a polynomial in `x`.
pub fn resultant_wrt_y(f: &BiPoly, g: &BiPoly) -> QPoly {
    let (dyf, dxf) = bi_degrees(f);
    let (dyg, dxg) = bi_degrees(g);
    let f = &f[..=dyf];
    let g = &g[..=dyg];
    if f.iter().all(|c| c.is_zero()) || g.iter().all(|c| c.is_zero()) {
        return QPoly::zero();
    }
    let bound = dyf * dxg + dyg * dxf;
    let (fi, cf) = bi_integral(&f.to_vec());
    let (gi, cg) = bi_integral(&g.to_vec());
    let mut xs: Vec<BigInt> = Vec::with_capacity(bound + 1);
    let mut ys: Vec<BigInt> = Vec::with_capacity(bound + 1);
    let mut k: i64 = 0;
    while xs.len() <= bound {
        let x0 = BigInt::from(if k == 0 { 0 } else if k % 2 == 1 { (k + 1) / 2 } else { -(k / 2) });
        k += 1;
        let fe: Vec<BigInt> = fi.iter().map(|c| eval_int(c, &x0)).collect();
        let ge: Vec<BigInt> = gi.iter().map(|c| eval_int(c, &x0)).collect();
        if fe[dyf].is_zero() || ge[dyg].is_zero() {
            continue;
        }
        ys.push(zresultant(&fe, &ge));
        xs.push(x0);
    }
    let interp = newton_interpolate(&xs, &ys);
    // Res(cf F, cg G) = cf^dyg cg^dyf Res(F, G)
    let scale = num_traits::pow(cf, dyg) * num_traits::pow(cg, dyf);
    interp.scale(&BigRat::new(BigInt::one(), scale))
}

/// Interpolating polynomial through integer points, exact over the rationals.
pub fn newton_interpolate(xs: &[BigInt], ys: &[BigInt]) -> QPoly {
    let n = xs.len();
    let mut dd: Vec<BigRat> = ys.iter().map(|y| BigRat::from_integer(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            dd[i] = num / BigRat::from_integer(&xs[i] - &xs[i - j]);
        }
    }
    // Horner in the Newton basis, integer when possible.
    let mut acc = QPoly::zero();
    for i in (0..n).rev() {
        let lin = QPoly::from_bigints(vec![-xs[i].clone(), BigInt::one()]);
        acc = &(&acc * &lin) + &QPoly::constant(dd[i].clone());
    }
    acc
}

/// `Res_y(p(y), p(x - y))`, whose roots are all sums `alpha_i + alpha_j`.
pub fn pair_sum_resultant(p: &QPoly) -> QPoly {
    let f: BiPoly = p.coeffs().into_iter().map(QPoly::constant).collect();
    resultant_wrt_y(&f, &substitute_x_minus_sy(p, &BigRat::one()))
}

/// The bivariate polynomial `p(x - s*y)`.
pub fn substitute_x_minus_sy(p: &QPoly, s: &BigRat) -> BiPoly {
    // (x - s y)^k = sum_j C(k,j) x^(k-j) (-s y)^j
    let d = p.degree();
    let mut out = vec![QPoly::zero(); d + 1];
    let coeffs = p.coeffs();
    let neg_s = -s.clone();
    for (k, ck) in coeffs.iter().enumerate() {
        if ck.is_zero() {
            continue;
        }
        let mut binom = BigInt::one();
        let mut spow = BigRat::one();
        for j in 0..=k {
            let c = ck * &spow * BigRat::from_integer(binom.clone());
            out[j] = &out[j] + &QPoly::monomial(c, k - j);
            binom = binom * BigInt::from(k - j) / BigInt::from(j + 1);
            spow *= &neg_s;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(resultant(&qp(&[-2, 0, 1]), &qp(&[-3, 0, 1])), int(1));
        assert_eq!(resultant(&qp(&[1, 2, 3]), &qp(&[5])), int(25));
        let g = qp(&[7, -1, 0, 2]);
        assert_eq!(resultant(&qp(&[-3, 1]), &g), g.eval(&int(3)));
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&qp(&[1, -3, 0, 1])), int(81));
        assert_eq!(discriminant(&qp(&[5, 3, 1])), int(9 - 20));
        assert_eq!(discriminant(&qp(&[2, 0, 0, 1])), int(-108));
        assert_eq!(discriminant(&qp(&[0, 0, 1, 1])), int(0));
    }

    #[test]
    fn bivariate_examples() {
        let p = qp(&[-2, 0, 1]);
        assert_eq!(pair_sum_resultant(&p), qp(&[0, 0, -8, 0, 1]));
        let p = qp(&[0, -1, 1]);
        // x (x-1)^2 (x-2)
        let expect = &(&(&qp(&[0, 1]) * &qp(&[-1, 1])) * &qp(&[-1, 1])) * &qp(&[-2, 1]);
        assert_eq!(pair_sum_resultant(&p), expect);
        // Res_y(y - c, F(x, y)) = F(x, c)
        let f: BiPoly = vec![qp(&[1, 2]), qp(&[0, 0, 3]), qp(&[-1])];
        let lin: BiPoly = vec![QPoly::constant(int(-2)), QPoly::one()];
        let direct = &(&f[0] + &f[1].scale(&int(2))) + &f[2].scale(&int(4));
        assert_eq!(resultant_wrt_y(&lin, &f), direct);
    }
}
