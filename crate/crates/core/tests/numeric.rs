use conjrel::factor;
use conjrel::families::{non_quad_cubic_fixtures, quad_cubic_fixtures};
use conjrel::numeric::{
    complex_roots, complex_roots_with_ceiling, label_conjugates, CertifiedRoot, Decision, NumericError, RootSet,
};
use conjrel::poly::{rat, BigRat, QPoly};
use conjrel::relations::detect_relations;
use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;

fn irreducible_monic(min_deg: usize, max_deg: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-10i64..=10, min_deg..=max_deg)
        .prop_map(|mut c| {
            c.push(1);
            QPoly::from_i64(&c)
        })
        .prop_filter("irreducible", factor::is_irreducible)
}

/// Squared distance between two disk centers, and the square of their summed
/// radii, both at the finer of the two precisions.
fn disks_meet(a: &CertifiedRoot, b: &CertifiedRoot) -> bool {
    let bits = a.bits.max(b.bits);
    let lift = |v: &BigInt, from: u32| v << (bits - from);
    let dre = lift(&a.re, a.bits) - lift(&b.re, b.bits);
    let dim = lift(&a.im, a.bits) - lift(&b.im, b.bits);
    let r = lift(&a.radius, a.bits) + lift(&b.radius, b.bits);
    &dre * &dre + &dim * &dim <= &r * &r
}

fn contains_rational(root: &CertifiedRoot, x: &BigRat) -> bool {
    // |(re + i im)/2^bits - n/d| <= radius/2^bits, scaled by d.
    let d = x.denom();
    let dre = &root.re * d - (x.numer() << root.bits);
    let dim = &root.im * d;
    let r = &root.radius * d;
    &dre * &dre + &dim * &dim <= &r * &r
}

fn pair_combinations(d: usize) -> Vec<Vec<(usize, i64)>> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                for l in k + 1..d {
                    if [i, j].contains(&k) || [i, j].contains(&l) || (i, j) >= (k, l) {
                        continue;
                    }
                    out.push(vec![(i, 1), (j, 1), (k, -1), (l, -1)]);
                }
            }
        }
    }
    out
}

/// Index of the unique root of `fine` whose disk meets `r`.
fn matching_root(r: &CertifiedRoot, fine: &RootSet) -> usize {
    let hits: Vec<usize> = (0..fine.roots.len()).filter(|&j| disks_meet(r, &fine.roots[j])).collect();
    assert_eq!(hits.len(), 1, "each coarse disk meets exactly one fine disk");
    hits[0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certified_roots_are_trace_consistent(p in irreducible_monic(2, 7)) {
        let rs = complex_roots(&p, 64).unwrap();
        prop_assert_eq!(rs.roots.len(), p.degree());
        prop_assert!(rs.trace_consistent());
        for r in &rs.roots {
            // The certified radius never exceeds half the guaranteed separation.
            let rad = BigRat::new(&r.radius * &r.radius, BigInt::one() << (2 * r.bits));
            prop_assert!(rad * rat(4, 1) <= rs.separation_sq);
        }
    }

    #[test]
    fn decisions_survive_higher_precision(p in irreducible_monic(4, 6)) {
        let coarse = complex_roots(&p, 64).unwrap();
        let fine = complex_roots(&p, 128).unwrap();
        let map: Vec<usize> = coarse.roots.iter().map(|r| matching_root(r, &fine)).collect();
        let mut sorted = map.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), map.len(), "matching is a bijection");
        for combo in pair_combinations(p.degree()) {
            let lifted: Vec<(usize, i64)> = combo.iter().map(|&(i, k)| (map[i], k)).collect();
            let before = coarse.decide(&combo);
            let after = fine.decide(&lifted);
            if before != Decision::Inconclusive {
                prop_assert_eq!(before, after);
            }
        }
    }

    #[test]
    fn rational_roots_lie_in_their_disks(
        roots in prop::collection::btree_set((-30i64..=30, 1i64..=5), 2..=5)
    ) {
        let xs: Vec<BigRat> = roots.iter().map(|&(n, d)| rat(n, d)).collect();
        let mut distinct = xs.clone();
        distinct.sort();
        distinct.dedup();
        prop_assume!(distinct.len() == xs.len());
        let mut p = QPoly::one();
        for x in &xs {
            p = &p * &QPoly::from_rats(vec![-x.clone(), rat(1, 1)]);
        }
        let rs = complex_roots(&p, 64).unwrap();
        for x in &xs {
            let inside = rs.roots.iter().filter(|r| contains_rational(r, x)).count();
            prop_assert_eq!(inside, 1, "{} lies in exactly one disk", x);
        }
    }
}

#[test]
fn clustered_roots_need_more_precision() {
    // x^7 - 2(1000x - 1)^2 has two roots within about 1e-13 of each other.
    let p = &QPoly::from_i64(&[0, 0, 0, 0, 0, 0, 0, 1])
        - &(&QPoly::from_i64(&[-1, 1000]) * &QPoly::from_i64(&[-2, 2000]));
    assert!(factor::is_irreducible(&p));
    assert_eq!(complex_roots_with_ceiling(&p, 16, 32).unwrap_err(), NumericError::PrecisionExhausted(32));
    let rs = complex_roots(&p, 16).unwrap();
    assert!(rs.bits > 32);
    assert_eq!(rs.roots.len(), 7);
    assert!(rs.trace_consistent());
}

#[test]
fn labeled_sums_are_roots_of_the_beta_polynomial() {
    for f in quad_cubic_fixtures() {
        let rs = complex_roots(&f.poly, 64).unwrap();
        let lab = label_conjugates(&rs).unwrap();
        let rep = detect_relations(&f.poly).unwrap();
        let m = rep.pair_equal.unwrap().beta_minpoly.expect("cubic beta");
        let beta_roots = complex_roots(&m, 64).unwrap();
        for (re, im) in lab.betas {
            let near = beta_roots.roots.iter().any(|r| {
                let (x, y) = r.approx();
                (x - re).hypot(y - im) < 1e-9 * (1.0 + re.hypot(im))
            });
            assert!(near, "{}: beta ({re}, {im}) is not a root of {m}", f.poly);
        }
    }
    for f in non_quad_cubic_fixtures() {
        let rs = complex_roots(&f.poly, 64).unwrap();
        assert_eq!(label_conjugates(&rs).unwrap_err(), NumericError::NoLabeling, "{}", f.poly);
    }
}
