//! Parametric polynomial families: even quartics and sextics, sextics whose
//! roots are sums of a quadratic and a cubic algebraic number, and the
//! one-parameter families with prescribed Galois groups.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::factor;
use crate::galois::GroupName;
use crate::poly::{int, is_rational_square, trace_normalize, BigRat, QPoly, TraceShift};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("closed form and product expansion disagree for (a, b, c) = ({0}, {1}, {2})")]
    InternalMismatch(BigRat, BigRat, BigRat),
    #[error("table {table} has no row for {row}")]
    UnknownRow { table: u8, row: String },
    #[error("polynomial is not a sum-of-quadratic-and-cubic sextic")]
    NotQuadCubic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `x^4 + a x^2 + b`
    QuarticEven,
    /// `x^6 + a x^4 + b x^2 + c`
    SexticEven,
    /// `R(x - sqrt a) R(x + sqrt a)` with `R = x^3 + b x + c`
    QuadCubic,
    /// Even sextic one-parameter family with the named group.
    SexticTableRow(GroupName),
    /// Even quartic one-parameter family with the named group.
    QuarticTableRow(GroupName),
}

impl FamilyKind {
    pub fn label(&self) -> String {
        match self {
            FamilyKind::QuarticEven => "quartic_even".into(),
            FamilyKind::SexticEven => "sextic_even".into(),
            FamilyKind::QuadCubic => "quad_cubic".into(),
            FamilyKind::SexticTableRow(g) => format!("sextic_row_{g}"),
            FamilyKind::QuarticTableRow(g) => format!("quartic_row_{g}"),
        }
    }
}

/// Family parameters; unused fields are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
    pub t: BigRat,
}

impl FamilyParams {
    pub fn quad_cubic(a: BigRat, b: BigRat, c: BigRat) -> Self {
        FamilyParams { kind: FamilyKind::QuadCubic, a, b, c, t: BigRat::zero() }
    }
}

fn q(c: Vec<BigRat>) -> QPoly {
    QPoly::from_rats(c)
}

/// `x^4 + a x^2 + b`.
pub fn gen_even_quartic(a: &BigRat, b: &BigRat) -> QPoly {
    q(vec![b.clone(), BigRat::zero(), a.clone(), BigRat::zero(), BigRat::one()])
}

/// `x^6 + a x^4 + b x^2 + c`.
pub fn gen_even_sextic(a: &BigRat, b: &BigRat, c: &BigRat) -> QPoly {
    q(vec![
        c.clone(),
        BigRat::zero(),
        b.clone(),
        BigRat::zero(),
        a.clone(),
        BigRat::zero(),
        BigRat::one(),
    ])
}

/// Closed-form coefficients of `R(x - sqrt a) R(x + sqrt a)`.
pub fn quad_cubic_closed_form(a: &BigRat, b: &BigRat, c: &BigRat) -> QPoly {
    let two = int(2);
    let three = int(3);
    q(vec![
        -(a * a * a) - &two * a * a * b - a * b * b + c * c,
        &two * c * (&three * a + b),
        &three * a * a + b * b,
        &two * c,
        &two * b - &three * a,
        BigRat::zero(),
        BigRat::one(),
    ])
}

/// `R(x + y) R(x - y)` reduced with `y^2 = a`, computed as `A^2 - a B^2`
/// where `R(x + y) = A(x) + y B(x)`.
pub fn quad_cubic_expanded(a: &BigRat, b: &BigRat, c: &BigRat) -> QPoly {
    let r = [c.clone(), b.clone(), BigRat::zero(), BigRat::one()];
    let mut ea = QPoly::zero();
    let mut eb = QPoly::zero();
    for (k, rk) in r.iter().enumerate() {
        if rk.is_zero() {
            continue;
        }
        // (x + y)^k = sum_i C(k, i) x^(k-i) y^i
        let mut binom = 1i64;
        for i in 0..=k {
            let ypow = a.pow((i / 2) as i32);
            let term = QPoly::monomial(rk * int(binom) * ypow, k - i);
            if i % 2 == 0 {
                ea = &ea + &term;
            } else {
                eb = &eb + &term;
            }
            binom = binom * (k - i) as i64 / (i + 1) as i64;
        }
    }
    &(&ea * &ea) - &(&eb * &eb).scale(a)
}

/// The sextic whose roots are `+-sqrt(a) + beta` over the roots `beta` of
/// `x^3 + b x + c`. Both constructions are computed and must agree.
pub fn gen_quad_cubic(a: &BigRat, b: &BigRat, c: &BigRat) -> Result<QPoly, FamilyError> {
    let closed = quad_cubic_closed_form(a, b, c);
    if closed != quad_cubic_expanded(a, b, c) {
        return Err(FamilyError::InternalMismatch(a.clone(), b.clone(), c.clone()));
    }
    Ok(closed)
}

/// `x^3 + b x + c`.
pub fn cubic(b: &BigRat, c: &BigRat) -> QPoly {
    q(vec![c.clone(), b.clone(), BigRat::zero(), BigRat::one()])
}

/// Irreducibility of [`gen_quad_cubic`]: `a` is not a rational square and
/// `x^3 + b x + c` has no rational root.
pub fn quad_cubic_irreducible(a: &BigRat, b: &BigRat, c: &BigRat) -> bool {
    !is_rational_square(a) && factor::rational_roots(&cubic(b, c)).is_empty()
}

/// Parameters `(a, b, c)` with `p = gen_quad_cubic(a, b, c)` for a monic
/// zero-trace sextic `p`. The coefficients of `x^4` and `x^3` give `b` and
/// `c` in terms of `a`, and the `x^2` coefficient leaves
/// `21 a^2 + 6 e4 a + e4^2 - 4 e2 = 0`.
pub fn match_quad_cubic(p: &QPoly) -> Vec<(BigRat, BigRat, BigRat)> {
    if p.degree() != 6 || !p.is_monic() || !p.coeff(5).is_zero() {
        return Vec::new();
    }
    let e = p.coeffs();
    let (two, three) = (int(2), int(3));
    let c = &e[3] / &two;
    let quadratic = q(vec![&e[4] * &e[4] - int(4) * &e[2], int(6) * &e[4], int(21)]);
    let mut out = Vec::new();
    for a in factor::rational_roots(&quadratic) {
        let b = (&e[4] + &three * &a) / &two;
        let x1 = &two * &c * (&three * &a + &b);
        let x0 = -(&a * &a * &a) - &two * &a * &a * &b - &a * &b * &b + &c * &c;
        if x1 == e[1] && x0 == e[0] {
            out.push((a, b, c.clone()));
        }
    }
    out
}

/// A sextic written as `R(x - sqrt a) R(x + sqrt a)` after trace
/// normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCubicDecomposition {
    pub a: BigRat,
    pub b: BigRat,
    pub c: BigRat,
    /// `x^2 - a`
    pub quad: QPoly,
    /// `x^3 + b x + c`
    pub cubic: QPoly,
    /// The zero-trace sextic.
    pub normalized: QPoly,
    /// Roots of the input are roots of `normalized` plus `shift.r`.
    pub shift: TraceShift,
    /// A root of the input is `(gamma + gamma_shift) + (delta + delta_shift)`
    /// with `gamma^2 = a` and `R(delta) = 0`. The rational shift is carried
    /// by the cubic summand.
    pub gamma_shift: BigRat,
    pub delta_shift: BigRat,
}

/// Decompose a sextic into a quadratic and a cubic summand.
pub fn decompose_quad_cubic(p: &QPoly) -> Result<QuadCubicDecomposition, FamilyError> {
    if p.degree() != 6 {
        return Err(FamilyError::NotQuadCubic);
    }
    let (normalized, shift) = trace_normalize(p).map_err(|_| FamilyError::NotQuadCubic)?;
    let matches = match_quad_cubic(&normalized);
    let (a, b, c) = match matches.as_slice() {
        [one] => one.clone(),
        _ => return Err(FamilyError::NotQuadCubic),
    };
    let expanded = gen_quad_cubic(&a, &b, &c)?;
    if expanded != normalized {
        return Err(FamilyError::InternalMismatch(a, b, c));
    }
    Ok(QuadCubicDecomposition {
        quad: q(vec![-a.clone(), BigRat::zero(), BigRat::one()]),
        cubic: cubic(&b, &c),
        normalized,
        gamma_shift: BigRat::zero(),
        delta_shift: shift.r.clone(),
        shift,
        a,
        b,
        c,
    })
}

const SEXTIC_ROWS: [GroupName; 8] = [
    GroupName::C6,
    GroupName::S3,
    GroupName::D6,
    GroupName::A4,
    GroupName::A4xC2,
    GroupName::S4Plus,
    GroupName::S4Minus,
    GroupName::S4xC2,
];

const QUARTIC_ROWS: [GroupName; 3] = [GroupName::V4, GroupName::C4, GroupName::D4];

/// Group names of the even-sextic (`table = 1`) or even-quartic
/// (`table = 2`) one-parameter families.
pub fn table_rows(table: u8) -> &'static [GroupName] {
    match table {
        1 => &SEXTIC_ROWS,
        2 => &QUARTIC_ROWS,
        _ => &[],
    }
}

/// Member `t` of a one-parameter family with prescribed group.
pub fn gen_table_family(table: u8, row: GroupName, t: &BigRat) -> Result<QPoly, FamilyError> {
    use GroupName::*;
    let z = BigRat::zero();
    let t2 = t * t;
    let unknown = || FamilyError::UnknownRow { table, row: row.to_string() };
    match table {
        1 => {
            let (a, b, c) = match row {
                C6 => {
                    let tm1 = t - BigRat::one();
                    (&t2 + int(5), &tm1 * &tm1 + int(5), BigRat::one())
                }
                S3 => (z.clone(), z, int(3) * &t2),
                D6 => (z.clone(), z, int(2) * &t2),
                A4 => (z, int(-3) * &t2 * &t2, -(&t2 * &t2 * &t2)),
                A4xC2 => (z, int(-3) * &t2, &t2 * t),
                S4Plus => (t2.clone(), z, -(&t2 * &t2 * &t2)),
                S4Minus => {
                    let u = int(31) * &t2;
                    (z, &u * &u, &u * &u * &u)
                }
                S4xC2 => {
                    let u = int(2) * &t2;
                    (z, &u * &u, &u * &u * &u)
                }
                _ => return Err(unknown()),
            };
            Ok(gen_even_sextic(&a, &b, &c))
        }
        2 => {
            let (a, b) = match row {
                V4 => {
                    let u = int(2) * t + int(1);
                    (z, &u * &u)
                }
                C4 => (int(4) * t, int(2) * &t2),
                D4 => (z, &t2 + int(1)),
                _ => return Err(unknown()),
            };
            Ok(gen_even_quartic(&a, &b))
        }
        _ => Err(unknown()),
    }
}

/// A polynomial with its expected group.
#[derive(Clone, Debug)]
pub struct GroupFixture {
    pub poly: QPoly,
    pub params: Option<(i64, i64, i64)>,
    pub group: GroupName,
}

/// Quadratic-plus-cubic sextics with their parameters and groups.
pub fn quad_cubic_fixtures() -> Vec<GroupFixture> {
    vec![
        GroupFixture {
            poly: QPoly::from_i64(&[-4, 24, 12, 4, -6, 0, 1]),
            params: Some((2, 0, 2)),
            group: GroupName::D6,
        },
        GroupFixture {
            poly: QPoly::from_i64(&[17, -12, 12, 2, -3, 0, 1]),
            params: Some((-1, -3, 1)),
            group: GroupName::C6,
        },
        GroupFixture {
            poly: QPoly::from_i64(&[32, -48, 12, 8, -3, 0, 1]),
            params: Some((-1, -3, 4)),
            group: GroupName::S3,
        },
    ]
}

/// Sextics with the same three groups that are not quadratic-plus-cubic.
pub fn non_quad_cubic_fixtures() -> Vec<GroupFixture> {
    vec![
        GroupFixture { poly: QPoly::from_i64(&[2, 0, 0, 2, 0, 0, 1]), params: None, group: GroupName::D6 },
        GroupFixture { poly: QPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1]), params: None, group: GroupName::C6 },
        GroupFixture { poly: QPoly::from_i64(&[1029, 0, 0, 54, 0, 0, 1]), params: None, group: GroupName::S3 },
    ]
}

/// The quartic `x^4 - 2x^3 + x - 1`, which has two pairs of roots with
/// equal sum 1.
pub fn pair_equal_quartic_fixture() -> QPoly {
    QPoly::from_i64(&[-1, 1, 0, -2, 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_examples() {
        let p = gen_quad_cubic(&int(2), &int(0), &int(2)).unwrap();
        assert_eq!(p, QPoly::from_i64(&[-4, 24, 12, 4, -6, 0, 1]));
        let p = gen_quad_cubic(&int(-1), &int(-3), &int(4)).unwrap();
        assert_eq!(p, QPoly::from_i64(&[32, -48, 12, 8, -3, 0, 1]));
        let r = cubic(&int(5), &int(-7));
        assert_eq!(gen_quad_cubic(&int(0), &int(5), &int(-7)).unwrap(), &r * &r);
    }

    #[test]
    fn irreducibility_criterion() {
        assert!(quad_cubic_irreducible(&int(2), &int(0), &int(2)));
        assert!(!quad_cubic_irreducible(&int(4), &int(0), &int(2)));
        assert!(!quad_cubic_irreducible(&int(2), &int(-3), &int(2)));
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_quad_cubic(&QPoly::from_i64(&[-4, 24, 12, 4, -6, 0, 1])).unwrap();
        assert_eq!((d.quad, d.cubic), (QPoly::from_i64(&[-2, 0, 1]), QPoly::from_i64(&[2, 0, 0, 1])));
        let d = decompose_quad_cubic(&QPoly::from_i64(&[17, -12, 12, 2, -3, 0, 1])).unwrap();
        assert_eq!((d.quad, d.cubic), (QPoly::from_i64(&[1, 0, 1]), QPoly::from_i64(&[1, -3, 0, 1])));
        assert_eq!(
            decompose_quad_cubic(&QPoly::from_i64(&[1, 0, 0, 1, 0, 0, 1])),
            Err(FamilyError::NotQuadCubic)
        );
    }

    #[test]
    fn table_members() {
        let t1 = int(1);
        assert_eq!(gen_table_family(1, GroupName::C6, &t1).unwrap(), QPoly::from_i64(&[1, 0, 5, 0, 6, 0, 1]));
        assert_eq!(gen_table_family(2, GroupName::V4, &t1).unwrap(), QPoly::from_i64(&[9, 0, 0, 0, 1]));
        assert_eq!(gen_table_family(1, GroupName::D6, &t1).unwrap(), QPoly::from_i64(&[2, 0, 0, 0, 0, 0, 1]));
        assert!(gen_table_family(2, GroupName::S5, &t1).is_err());
    }
}
