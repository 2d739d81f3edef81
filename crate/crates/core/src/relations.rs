//! Detection of linear relations among four conjugates:
//! `a1 + a2 + a3 + a4 = 0`, `a1 + a2 = a3 + a4` and `a1 + a2 + a3 = a4`.
//!
//! The pair-equal relation is found twice. The normal-form route matches the
//! trace-normalized polynomial against the even quartic, even sextic and
//! quadratic-plus-cubic families; the resultant route looks for repeated
//! roots of the pair-sum polynomial `s(x)`. The two must agree.

use num_traits::Zero;
use thiserror::Error;

use crate::factor;
use crate::families::{self, FamilyKind, FamilyParams};
use crate::poly::{int, trace_normalize, BigRat, QPoly, TraceShift};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationsError {
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error("degree {0} is outside 4..=7")]
    DegreeOutOfRange(usize),
    #[error("pair-sum resultant divided by p2 is not a square")]
    SquareRootFailure,
    #[error("detection routes disagree: {0}")]
    RouteDisagreement(String),
    #[error("classification contradiction: {0}")]
    ClassificationContradiction(String),
    #[error("no pair-equal relation to certify")]
    NotApplicable,
}

/// `s(x)` with roots `a_i + a_j` (`i < j`) and `p2(x)` with roots `2 a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairSumPoly {
    pub s: QPoly,
    pub p2: QPoly,
}

/// Pair-sum polynomial from `Res_y(p(y), p(x - y)) = p2(x) s(x)^2`.
pub fn pair_sum_poly(p: &QPoly) -> Result<PairSumPoly, RelationsError> {
    let p = p.monic();
    let p2 = p.scale_roots(&int(2));
    let full = factor::pair_sum_resultant(&p);
    let quot = full.exact_div(&p2).ok_or(RelationsError::SquareRootFailure)?;
    let s = quot.sqrt().map_err(|_| RelationsError::SquareRootFailure)?.monic();
    Ok(PairSumPoly { s, p2 })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaKind {
    Rational,
    Cubic,
}

/// The common value `beta = a1 + a2 = a3 + a4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEqualData {
    pub beta_kind: BetaKind,
    /// Rational case: `beta` in the original coordinates.
    pub beta_value: Option<BigRat>,
    /// Cubic case: minimal polynomial of `beta` for the zero-trace polynomial.
    pub beta_minpoly: Option<QPoly>,
    /// Multiplicities of the repeated roots of `s`, one entry per root,
    /// in decreasing order.
    pub multiplicity_profile: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    pub degree: usize,
    pub trace_shift: TraceShift,
    pub sum_zero_quadruple: bool,
    /// Never set for irreducible inputs; kept so reports show the check.
    pub three_vs_one: bool,
    pub pair_equal: Option<PairEqualData>,
    pub matched_forms: Vec<FamilyParams>,
}

/// Family matches for a monic zero-trace polynomial of degree 4 or 6.
pub fn form_match(p: &QPoly) -> Vec<FamilyParams> {
    let z = BigRat::zero;
    let mut out = Vec::new();
    match p.degree() {
        4 if p.coeff(1).is_zero() && p.coeff(3).is_zero() => {
            out.push(FamilyParams {
                kind: FamilyKind::QuarticEven,
                a: p.coeff(2),
                b: p.coeff(0),
                c: z(),
                t: z(),
            });
        }
        6 => {
            if p.is_even() {
                out.push(FamilyParams {
                    kind: FamilyKind::SexticEven,
                    a: p.coeff(4),
                    b: p.coeff(2),
                    c: p.coeff(0),
                    t: z(),
                });
            }
            for (a, b, c) in families::match_quad_cubic(p) {
                out.push(FamilyParams::quad_cubic(a, b, c));
            }
        }
        _ => {}
    }
    out
}

fn check_input(p: &QPoly) -> Result<QPoly, RelationsError> {
    let d = p.degree();
    if !(4..=7).contains(&d) {
        return Err(RelationsError::DegreeOutOfRange(d));
    }
    if !factor::is_irreducible(p) {
        return Err(RelationsError::NotIrreducible);
    }
    Ok(p.monic())
}

/// Repeated roots of `s`: the squarefree parts with multiplicity at least two.
fn repeated_parts(s: &QPoly) -> Vec<(QPoly, usize)> {
    s.squarefree_decompose().into_iter().filter(|(_, m)| *m >= 2).collect()
}

/// Detect the relations for a monic irreducible polynomial of degree 4..=7.
pub fn detect_relations(p: &QPoly) -> Result<RelationReport, RelationsError> {
    let p = check_input(p)?;
    let d = p.degree();
    let (normalized, shift) = trace_normalize(&p).expect("degree at least 4");
    let mut report = RelationReport {
        degree: d,
        trace_shift: shift.clone(),
        sum_zero_quadruple: false,
        three_vs_one: false,
        pair_equal: None,
        matched_forms: Vec::new(),
    };
    if d == 5 || d == 7 {
        return Ok(report);
    }
    report.sum_zero_quadruple = (d == 4 && p.coeff(3).is_zero()) || (d == 6 && p.is_even());
    report.matched_forms = form_match(&normalized);

    let pair = pair_sum_poly(&normalized)?;
    let repeated = repeated_parts(&pair.s);
    let mut profile = Vec::new();
    let mut kinds: Vec<(BetaKind, QPoly)> = Vec::new();
    for (f, m) in &repeated {
        for _ in 0..f.degree() {
            profile.push(*m);
        }
        for (g, _) in factor::factor_over_q(f).factors {
            match g.degree() {
                1 => kinds.push((BetaKind::Rational, g)),
                3 => kinds.push((BetaKind::Cubic, g)),
                k => {
                    return Err(RelationsError::ClassificationContradiction(format!(
                        "repeated pair sum of degree {k}"
                    )))
                }
            }
        }
    }
    profile.sort_unstable_by(|a, b| b.cmp(a));

    let form_says_rational = report
        .matched_forms
        .iter()
        .any(|f| matches!(f.kind, FamilyKind::QuarticEven | FamilyKind::SexticEven));
    let form_says_cubic = report.matched_forms.iter().any(|f| f.kind == FamilyKind::QuadCubic);
    let res_says_rational = kinds.iter().any(|(k, _)| *k == BetaKind::Rational);
    let res_says_cubic = kinds.iter().any(|(k, _)| *k == BetaKind::Cubic);
    if form_says_rational != res_says_rational || form_says_cubic != res_says_cubic {
        return Err(RelationsError::RouteDisagreement(format!(
            "normal forms give rational={form_says_rational} cubic={form_says_cubic}, \
             pair sums give rational={res_says_rational} cubic={res_says_cubic}"
        )));
    }
    if kinds.len() > 1 {
        return Err(RelationsError::ClassificationContradiction(
            "more than one repeated pair-sum value".into(),
        ));
    }
    if let Some((kind, g)) = kinds.pop() {
        let data = match kind {
            BetaKind::Rational => {
                let beta = -g.coeff(0);
                if !beta.is_zero() {
                    return Err(RelationsError::ClassificationContradiction(format!(
                        "rational pair sum {beta} is not zero after normalization"
                    )));
                }
                PairEqualData {
                    beta_kind: kind,
                    beta_value: Some(beta + int(2) * &shift.r),
                    beta_minpoly: None,
                    multiplicity_profile: profile,
                }
            }
            BetaKind::Cubic => {
                if !g.coeff(2).is_zero() {
                    return Err(RelationsError::ClassificationContradiction(
                        "cubic pair sum has nonzero trace".into(),
                    ));
                }
                PairEqualData {
                    beta_kind: kind,
                    beta_value: None,
                    beta_minpoly: Some(g),
                    multiplicity_profile: profile,
                }
            }
        };
        report.pair_equal = Some(data);
    }
    Ok(report)
}

/// Which alternative holds for a sextic with a pair-equal relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairSumDegree {
    /// `a1 + a2 = 0` in zero-trace coordinates.
    Zero,
    /// `a1 + a2` is a cubic number of trace zero with this minimal polynomial.
    Cubic(QPoly),
}

/// For an irreducible sextic with `a1 + a2 = a3 + a4`, certify that the
/// common value is `0` or a zero-trace cubic number.
pub fn certify_pair_sum_degree(p: &QPoly) -> Result<PairSumDegree, RelationsError> {
    let p = check_input(p)?;
    if p.degree() != 6 {
        return Err(RelationsError::NotApplicable);
    }
    let (normalized, _) = trace_normalize(&p).expect("sextic");
    let pair = pair_sum_poly(&normalized)?;
    let repeated = repeated_parts(&pair.s);
    if repeated.is_empty() {
        return Err(RelationsError::NotApplicable);
    }
    let mut prod = QPoly::one();
    for (f, _) in &repeated {
        prod = &prod * f;
    }
    if prod == QPoly::x() {
        return Ok(PairSumDegree::Zero);
    }
    if prod.degree() == 3 && factor::is_irreducible(&prod) && prod.coeff(2).is_zero() {
        return Ok(PairSumDegree::Cubic(prod));
    }
    Err(RelationsError::ClassificationContradiction(format!(
        "repeated pair sums are roots of {prod}, neither 0 nor a zero-trace cubic"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(c: &[i64]) -> QPoly {
        QPoly::from_i64(c)
    }

    #[test]
    fn pair_sum_examples() {
        let ps = pair_sum_poly(&qp(&[-2, 0, 1])).unwrap();
        assert_eq!((ps.s, ps.p2), (qp(&[0, 1]), qp(&[-8, 0, 1])));
        let ps = pair_sum_poly(&qp(&[1, 0, 0, 0, 1])).unwrap();
        assert_eq!(ps.s, qp(&[0, 0, -4, 0, 0, 0, 1]));
        // Zero-trace cubic: a_i + a_j = -a_k.
        let p = qp(&[1, -3, 0, 1]);
        assert_eq!(pair_sum_poly(&p).unwrap().s, p.reflect().monic());
    }

    #[test]
    fn detection_examples() {
        let r = detect_relations(&qp(&[1, 0, 0, 0, 1])).unwrap();
        assert!(r.sum_zero_quadruple);
        let pe = r.pair_equal.unwrap();
        assert_eq!((pe.beta_kind, pe.beta_value), (BetaKind::Rational, Some(BigRat::zero())));

        let r = detect_relations(&qp(&[-4, 24, 12, 4, -6, 0, 1])).unwrap();
        let pe = r.pair_equal.unwrap();
        assert_eq!(pe.beta_kind, BetaKind::Cubic);
        assert!(pe.beta_minpoly.unwrap().coeff(2).is_zero());
        assert_eq!(r.matched_forms, vec![FamilyParams::quad_cubic(int(2), int(0), int(2))]);

        let r = detect_relations(&qp(&[-1, -1, 0, 0, 0, 1])).unwrap();
        assert!(r.pair_equal.is_none() && !r.sum_zero_quadruple && r.matched_forms.is_empty());

        let r = detect_relations(&qp(&[-1, 1, 0, -2, 1])).unwrap();
        assert_eq!(r.pair_equal.unwrap().beta_value, Some(int(1)));
        assert!(!r.sum_zero_quadruple);
    }

    #[test]
    fn form_match_examples() {
        assert!(form_match(&qp(&[1, 0, 0, 1, 0, 0, 1])).is_empty());
        assert_eq!(
            form_match(&qp(&[17, -12, 12, 2, -3, 0, 1])),
            vec![FamilyParams::quad_cubic(int(-1), int(-3), int(1))]
        );
    }

    #[test]
    fn pair_sum_degree_branches() {
        assert_eq!(certify_pair_sum_degree(&qp(&[-2, 0, 1, 0, 2, 0, 1])), Ok(PairSumDegree::Zero));
        match certify_pair_sum_degree(&qp(&[32, -48, 12, 8, -3, 0, 1])).unwrap() {
            PairSumDegree::Cubic(m) => assert!(m.coeff(2).is_zero()),
            other => panic!("{other:?}"),
        }
        assert_eq!(certify_pair_sum_degree(&qp(&[1, 0, 0, 1, 0, 0, 1])), Err(RelationsError::NotApplicable));
    }
}
