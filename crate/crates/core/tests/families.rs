use conjrel::families::{
    cubic, decompose_quad_cubic, gen_quad_cubic, quad_cubic_closed_form, quad_cubic_irreducible, FamilyKind,
};
use conjrel::numberfield::NumberField;
use conjrel::poly::{int, rat, BigRat, QPoly};
use conjrel::relations::form_match;
use proptest::prelude::*;

fn params() -> impl Strategy<Value = (BigRat, BigRat, BigRat)> {
    let r = || (-20i64..=20, 1i64..=4).prop_map(|(n, d)| rat(n, d));
    (r(), r(), r())
}

/// `Res_y(R(y), (x - y)^2 - a)` computed as the norm from `Q[y]/R` of
/// `(x - y)^2 - a`. Its roots are `beta_j +- sqrt(a)`.
fn sum_minpoly(a: &BigRat, b: &BigRat, c: &BigRat) -> QPoly {
    let k = NumberField::new(cubic(b, c)).unwrap();
    let y = QPoly::from_i64(&[0, 1]);
    // Coefficients in x: (y^2 - a) - 2y x + x^2.
    let g = vec![
        &(&y * &y) - &QPoly::constant(a.clone()),
        y.scale(&int(-2)),
        QPoly::one(),
    ];
    k.norm(&g, 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn generation_and_matching_are_inverse((a, b, c) in params()) {
        prop_assume!(quad_cubic_irreducible(&a, &b, &c));
        let p = gen_quad_cubic(&a, &b, &c).unwrap();
        prop_assert_eq!(p.degree(), 6);
        prop_assert!(p.coeff(5) == BigRat::from_integer(0.into()));
        let forms: Vec<_> = form_match(&p).into_iter().filter(|f| f.kind == FamilyKind::QuadCubic).collect();
        prop_assert_eq!(forms.len(), 1);
        prop_assert_eq!((&forms[0].a, &forms[0].b, &forms[0].c), (&a, &b, &c));
        let d = decompose_quad_cubic(&p).unwrap();
        prop_assert_eq!(d.quad, QPoly::from_rats(vec![-a.clone(), int(0), int(1)]));
        prop_assert_eq!(d.cubic, cubic(&b, &c));
    }

    #[test]
    fn closed_form_matches_norm_construction((a, b, c) in params()) {
        // The norm construction needs a field, so the cubic must be irreducible.
        prop_assume!(conjrel::factor::is_irreducible(&cubic(&b, &c)));
        prop_assert_eq!(quad_cubic_closed_form(&a, &b, &c), sum_minpoly(&a, &b, &c));
    }

    #[test]
    fn quadratic_plus_cubic_has_degree_six((a, b, c) in params()) {
        let irreducible_parts = !conjrel::poly::is_rational_square(&a)
            && conjrel::factor::is_irreducible(&cubic(&b, &c));
        prop_assume!(irreducible_parts);
        // Coprime degrees: the sum generates a degree-6 field.
        prop_assert!(quad_cubic_irreducible(&a, &b, &c));
        prop_assert!(conjrel::factor::is_irreducible(&sum_minpoly(&a, &b, &c)));
    }
}

#[test]
fn decomposition_of_shifted_input() {
    let p = gen_quad_cubic(&int(-1), &int(-3), &int(4)).unwrap();
    let moved = p.translate(&rat(-5, 2));
    let d = decompose_quad_cubic(&moved).unwrap();
    assert_eq!((d.a, d.b, d.c), (int(-1), int(-3), int(4)));
    assert_eq!(d.shift.r, rat(5, 2));
}

#[test]
fn non_family_sextics_are_rejected() {
    for c in [&[2i64, 0, 0, 2, 0, 0, 1][..], &[1, 0, 0, 1, 0, 0, 1], &[1029, 0, 0, 54, 0, 0, 1]] {
        assert!(decompose_quad_cubic(&QPoly::from_i64(c)).is_err());
    }
}
