use std::collections::BTreeSet;

use conjrel::factor::{self, modp::is_prime_u64};
use conjrel::families::{non_quad_cubic_fixtures, quad_cubic_fixtures};
use conjrel::galois::{
    all_perms, catalog, fingerprint_collision, frobenius_cycle_type, galois_group, galois_group_with_data,
    is_transitive, quartic_galois, ExactMembership, GroupName, Perm,
};
use conjrel::poly::QPoly;
use proptest::prelude::*;

fn irreducible_quartic() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(-8i64..=8, 4)
        .prop_map(|mut c| {
            c.push(1);
            QPoly::from_i64(&c)
        })
        .prop_filter("irreducible", factor::is_irreducible)
}

fn check_group_axioms(perms: &[Perm], d: usize) {
    let set: BTreeSet<&Perm> = perms.iter().collect();
    assert_eq!(set.len(), perms.len(), "no duplicates");
    assert!(set.contains(&Perm::identity(d)));
    for a in perms {
        assert!(set.contains(&a.inverse()));
        for b in perms {
            assert!(set.contains(&a.compose(b)));
        }
    }
    assert!(is_transitive(perms));
    assert_eq!(perms.len() % d, 0);
}

/// Cycle types of `p` modulo the first `count` primes above 10 that are good
/// for `p`.
fn frobenius_types(p: &QPoly, count: usize) -> Vec<Vec<usize>> {
    (11u64..)
        .filter(|&q| is_prime_u64(q))
        .filter_map(|q| frobenius_cycle_type(p, q))
        .take(count)
        .collect()
}

fn check_dedekind(p: &QPoly, perms: &[Perm]) {
    let present: BTreeSet<Vec<usize>> = perms
        .iter()
        .map(|g| {
            let mut t = g.cycle_type();
            t.sort_unstable_by(|a, b| b.cmp(a));
            t
        })
        .collect();
    for t in frobenius_types(p, 5) {
        assert!(present.contains(&t), "{p}: cycle type {t:?} missing");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quartic_groups_are_consistent(p in irreducible_quartic()) {
        let (g, data) = galois_group_with_data(&p, 24).unwrap();
        check_group_axioms(&g.perms, 4);
        prop_assert_eq!(g.order, data.total_degree());
        check_dedekind(&p, &g.perms);
        prop_assert_eq!(g.name, Some(quartic_galois(&p)));
    }
}

proptest! {
    // The scan oracle computes a degree-|G| minimal polynomial exactly, so
    // it runs on fewer cases.
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn quartic_groups_match_exhaustive_scan(p in irreducible_quartic()) {
        let (g, data) = galois_group_with_data(&p, 24).unwrap();
        let oracle = ExactMembership::new(&data);
        let scanned: BTreeSet<Perm> = all_perms(4).into_iter().filter(|s| oracle.contains(s)).collect();
        let computed: BTreeSet<Perm> = g.perms.iter().cloned().collect();
        prop_assert_eq!(scanned, computed);
    }
}

#[test]
fn sextic_fixture_groups_are_consistent() {
    for f in quad_cubic_fixtures().into_iter().chain(non_quad_cubic_fixtures()) {
        let (g, data) = galois_group_with_data(&f.poly, 48).unwrap();
        check_group_axioms(&g.perms, 6);
        assert_eq!(g.order, data.total_degree());
        assert_eq!(g.name, Some(f.group), "{}", f.poly);
        check_dedekind(&f.poly, &g.perms);
    }
}

#[test]
fn exhaustive_scan_agrees_on_a_sextic() {
    // D6 example: the scan over all 720 permutations finds exactly the group.
    let p = QPoly::from_i64(&[2, 0, 0, 2, 0, 0, 1]);
    let (g, data) = galois_group_with_data(&p, 48).unwrap();
    let oracle = ExactMembership::new(&data);
    let scanned: BTreeSet<Perm> = all_perms(6).into_iter().filter(|s| oracle.contains(s)).collect();
    assert_eq!(scanned, g.perms.iter().cloned().collect());
}

#[test]
fn classical_small_degree_groups() {
    let cases: [(&[i64], GroupName); 8] = [
        (&[-2, 0, 1], GroupName::C2),
        (&[1, -3, 0, 1], GroupName::C3),
        (&[-2, 0, 0, 1], GroupName::S3),
        // Real subfield of the 11th cyclotomic field.
        (&[1, 3, -3, -4, 1, 1], GroupName::C5),
        (&[12, -5, 0, 0, 0, 1], GroupName::D5),
        (&[-2, 0, 0, 0, 0, 1], GroupName::F20),
        // Degree-7 subfield of the 29th cyclotomic field.
        (&[-1, -9, -14, 28, 7, -12, -1, 1], GroupName::C7),
        (&[-2, 0, 0, 0, 0, 0, 0, 1], GroupName::F42),
    ];
    for (c, want) in cases {
        let p = QPoly::from_i64(c);
        let g = galois_group(&p, 48).unwrap_or_else(|e| panic!("{p}: {e}"));
        assert_eq!(g.name, Some(want), "{p}");
        check_group_axioms(&g.perms, p.degree());
    }
    let c7 = QPoly::from_i64(&[-1, -9, -14, 28, 7, -12, -1, 1]);
    // Field discriminant 29^6 times the square of the index of the order.
    let ratio = c7.discriminant() / conjrel::poly::int(29).pow(6);
    assert!(conjrel::poly::is_rational_square(&ratio), "{ratio}");
}

#[test]
fn large_groups_hit_the_order_cap() {
    for c in [&[-1i64, -1, 0, 0, 0, 1][..], &[16, 20, 0, 0, 0, 1]] {
        let p = QPoly::from_i64(c);
        assert!(galois_group(&p, 48).is_err(), "{p}");
    }
}

#[test]
fn catalog_fingerprints_are_injective() {
    assert_eq!(fingerprint_collision(catalog()), None);
    let sextics: Vec<_> = catalog().iter().filter(|g| g.fingerprint.degree == 6).collect();
    assert_eq!(sextics.len(), 8);
}
