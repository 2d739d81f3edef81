//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use conjrel::corpus::{random_monic_irreducible, random_quad_cubic_triple, DEFAULT_SEED};
use conjrel::factor;
use conjrel::families::{decompose_quad_cubic, gen_quad_cubic, gen_table_family, table_rows, FamilyKind};
use conjrel::galois::{
    catalog, certify_three_sum_labeling, fingerprint, galois_group, pi, quad_cubic_galois_fast, quartic_galois, sigma,
    Fingerprint, GroupName, Perm,
};
use conjrel::numeric::{confirm_hits, exact_relation_set, oracle_relations, RelationKind};
use conjrel::poly::{int, trace_normalize, BigRat, QPoly};
use conjrel::relations::{detect_relations, form_match, pair_sum_poly, BetaKind};
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORDER_CAP: usize = 48;

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    r.set_stream(stream);
    r
}

fn poly(c: &[i64]) -> QPoly {
    QPoly::from_i64(c)
}

fn group_of(p: &QPoly) -> GroupName {
    let g = galois_group(p, ORDER_CAP).unwrap_or_else(|e| panic!("{p}: {e}"));
    g.name.unwrap_or_else(|| panic!("{p}: group of order {} not in the catalog", g.order))
}

/// Run `f` over `items` on all cores, keeping input order in the output.
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync) -> Vec<U> {
    let threads = std::thread::available_parallelism().map_or(4, |n| n.get()).min(items.len().max(1));
    let chunk = items.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().map(&f).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    })
}

// ---------------------------------------------------------------------------
// Fixtures written out literally.

const QUAD_CUBIC_ROWS: [((i64, i64, i64), [i64; 7], GroupName, usize); 3] = [
    ((2, 0, 2), [-4, 24, 12, 4, -6, 0, 1], GroupName::D6, 12),
    ((-1, -3, 1), [17, -12, 12, 2, -3, 0, 1], GroupName::C6, 6),
    ((-1, -3, 4), [32, -48, 12, 8, -3, 0, 1], GroupName::S3, 6),
];

const OTHER_SEXTICS: [([i64; 7], GroupName); 3] = [
    ([2, 0, 0, 2, 0, 0, 1], GroupName::D6),
    ([1, 0, 0, 1, 0, 0, 1], GroupName::C6),
    ([1029, 0, 0, 54, 0, 0, 1], GroupName::S3),
];

/// Even sextic families `x^6 + A x^4 + B x^2 + C`, coefficients as functions of `t`.
fn sextic_family(row: GroupName, t: i64) -> QPoly {
    let t2 = t * t;
    let (a, b, c) = match row {
        GroupName::C6 => (t2 + 5, (t - 1) * (t - 1) + 5, 1),
        GroupName::S3 => (0, 0, 3 * t2),
        GroupName::D6 => (0, 0, 2 * t2),
        GroupName::A4 => (0, -3 * t2 * t2, -t2 * t2 * t2),
        GroupName::A4xC2 => (0, -3 * t2, t2 * t),
        GroupName::S4Plus => (t2, 0, -t2 * t2 * t2),
        GroupName::S4Minus => (0, (31 * t2).pow(2), (31 * t2).pow(3)),
        GroupName::S4xC2 => (0, (2 * t2).pow(2), (2 * t2).pow(3)),
        other => panic!("no sextic family for {other}"),
    };
    poly(&[c, 0, b, 0, a, 0, 1])
}

/// Even quartic families `x^4 + A x^2 + B`.
fn quartic_family(row: GroupName, t: i64) -> QPoly {
    let (a, b) = match row {
        GroupName::V4 => (0, (2 * t + 1).pow(2)),
        GroupName::C4 => (4 * t, 2 * t * t),
        GroupName::D4 => (0, t * t + 1),
        other => panic!("no quartic family for {other}"),
    };
    poly(&[b, 0, a, 0, 1])
}

// ---------------------------------------------------------------------------
// Criteria.

fn criterion_1() -> String {
    for ((a, b, c), coeffs, group, order) in QUAD_CUBIC_ROWS {
        let p = gen_quad_cubic(&int(a), &int(b), &int(c)).unwrap();
        assert_eq!(p, poly(&coeffs), "({a},{b},{c})");
        let g = galois_group(&p, ORDER_CAP).unwrap();
        assert_eq!((g.name, g.order), (Some(group), order), "{p}");
    }
    "3 sextics reproduced, groups D6, C6, S3".into()
}

fn criterion_2() -> String {
    for (coeffs, group) in OTHER_SEXTICS {
        let p = poly(&coeffs);
        assert_eq!(group_of(&p), group, "{p}");
        assert!(form_match(&trace_normalize(&p).unwrap().0).is_empty(), "{p} matched a family form");
        assert!(decompose_quad_cubic(&p).is_err());
    }
    "3 sextics, no family form".into()
}

fn criterion_3() -> String {
    let mut checked = 0;
    for &row in table_rows(1) {
        let mut ok = 0;
        for t in 1..=10 {
            let p = sextic_family(row, t);
            assert_eq!(p, gen_table_family(1, row, &int(t)).unwrap(), "{row} t={t}");
            if !factor::is_irreducible(&p) {
                continue;
            }
            assert_eq!(group_of(&p), row, "{row} t={t}: {p}");
            ok += 1;
            if ok == 2 {
                break;
            }
        }
        assert_eq!(ok, 2, "{row}: fewer than two irreducible members");
        checked += ok;
    }
    format!("{checked} family members across 8 rows")
}

fn criterion_4() -> String {
    let mut checked = 0;
    for &row in table_rows(2) {
        for t in [1, 2] {
            let p = quartic_family(row, t);
            assert_eq!(p, gen_table_family(2, row, &int(t)).unwrap());
            if !factor::is_irreducible(&p) {
                continue;
            }
            assert_eq!(quartic_galois(&p), row, "{p}");
            assert_eq!(group_of(&p), row, "{p}");
            checked += 1;
        }
    }
    assert!(checked >= table_rows(2).len(), "only {checked} irreducible members");
    format!("{checked} quartics, both classifiers agree")
}

fn seeded_triples() -> Vec<(i64, i64, i64)> {
    let mut r = rng(5);
    (0..60).map(|_| random_quad_cubic_triple(&mut r, 20)).collect()
}

fn criterion_5() -> String {
    let mut triples: Vec<(i64, i64, i64)> = QUAD_CUBIC_ROWS.iter().map(|r| r.0).collect();
    triples.extend(seeded_triples());
    let results = par_map(&triples, |&(a, b, c)| {
        let p = gen_quad_cubic(&int(a), &int(b), &int(c)).unwrap();
        (quad_cubic_galois_fast(&int(a), &int(b), &int(c)), group_of(&p))
    });
    let bad: Vec<_> = triples.iter().zip(&results).filter(|(_, (f, g))| f != g).collect();
    assert!(bad.is_empty(), "disagreements: {bad:?}");
    let mut counts = BTreeMap::new();
    for (_, g) in &results {
        *counts.entry(g.as_str()).or_insert(0) += 1;
    }
    format!("{} triples, 0 disagreements, groups {counts:?}", triples.len())
}

struct CorpusEntry {
    poly: QPoly,
    exact: BTreeSet<RelationKind>,
    numeric: BTreeSet<RelationKind>,
    confirmed: Result<(), String>,
    three_vs_one_hits: usize,
    midpoint_hits: usize,
    coprime: bool,
}

fn corpus() -> &'static [CorpusEntry] {
    static CORPUS: std::sync::OnceLock<Vec<CorpusEntry>> = std::sync::OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut polys = Vec::new();
        for d in 4..=7usize {
            let mut r = rng(d as u64);
            polys.extend((0..200).map(|_| random_monic_irreducible(&mut r, d, 10)));
        }
        par_map(&polys, |p| {
            let exact = detect_relations(p).unwrap();
            let (roots, rep) = oracle_relations(p, 64).unwrap();
            let ps = pair_sum_poly(&trace_normalize(p).unwrap().0).unwrap();
            CorpusEntry {
                poly: p.clone(),
                exact: exact_relation_set(&exact),
                numeric: rep.relation_set(),
                confirmed: confirm_hits(&exact, &roots, &rep),
                three_vs_one_hits: rep.three_vs_one.len(),
                midpoint_hits: rep.midpoint.len(),
                coprime: ps.s.gcd_monic(&ps.p2).degree() == 0,
            }
        })
    })
}

fn criterion_6() -> String {
    let entries = corpus();
    let mut disagreements = Vec::new();
    let mut with_relations = BTreeMap::new();
    for e in entries {
        if e.exact != e.numeric || e.confirmed.is_err() {
            disagreements.push(format!("{}: exact {:?} numeric {:?} {:?}", e.poly, e.exact, e.numeric, e.confirmed));
        }
        if !e.exact.is_empty() {
            *with_relations.entry(e.poly.degree()).or_insert(0) += 1;
        }
    }
    assert!(disagreements.is_empty(), "{}", disagreements.join("\n"));
    format!("{} polynomials, 0 disagreements, with relations by degree {with_relations:?}", entries.len())
}

fn criterion_7() -> String {
    let entries = corpus();
    for e in entries {
        if e.poly.degree() % 2 == 1 {
            assert!(e.exact.is_empty() && e.numeric.is_empty(), "{}", e.poly);
        }
        assert_eq!(e.three_vs_one_hits, 0, "{}", e.poly);
        assert_eq!(e.midpoint_hits, 0, "{}", e.poly);
        assert!(!e.exact.contains(&RelationKind::ThreeVsOne));
        assert!(e.coprime, "{}: s and p2 share a factor", e.poly);
    }
    format!("{} polynomials checked", entries.len())
}

/// `R(x - y) R(x + y)` reduced modulo `y^2 = a`, as `P0 + y P1`.
fn expand_bivariate(a: i64, b: i64, c: i64) -> (QPoly, QPoly) {
    type Elt = (QPoly, QPoly);
    let a = QPoly::constant(int(a));
    let mul = |u: &Elt, v: &Elt| -> Elt {
        (&(&u.0 * &v.0) + &(&(&u.1 * &v.1) * &a), &(&u.0 * &v.1) + &(&u.1 * &v.0))
    };
    let x = poly(&[0, 1]);
    let cubic_at = |z: &Elt| -> Elt {
        let z3 = mul(&mul(z, z), z);
        (&(&z3.0 + &z.0.scale(&int(b))) + &QPoly::constant(int(c)), &z3.1 + &z.1.scale(&int(b)))
    };
    let minus = (x.clone(), QPoly::constant(int(-1)));
    let plus = (x, QPoly::one());
    mul(&cubic_at(&minus), &cubic_at(&plus))
}

fn round_trip_triples() -> Vec<(i64, i64, i64)> {
    let mut r = rng(8);
    (0..10_000).map(|_| random_quad_cubic_triple(&mut r, 30)).collect()
}

fn criterion_8() -> String {
    let triples = round_trip_triples();
    let failures = par_map(&triples, |&(a, b, c)| {
        let (ra, rb, rc) = (int(a), int(b), int(c));
        let p = gen_quad_cubic(&ra, &rb, &rc).ok()?;
        let forms: Vec<_> = form_match(&p).into_iter().filter(|f| f.kind == FamilyKind::QuadCubic).collect();
        if forms.len() != 1 || (&forms[0].a, &forms[0].b, &forms[0].c) != (&ra, &rb, &rc) {
            return Some(format!("({a},{b},{c}): form match {forms:?}"));
        }
        let d = decompose_quad_cubic(&p).ok()?;
        if d.quad != poly(&[-a, 0, 1]) || d.cubic != poly(&[c, b, 0, 1]) {
            return Some(format!("({a},{b},{c}): decomposition {} / {}", d.quad, d.cubic));
        }
        let (even, odd) = expand_bivariate(a, b, c);
        if !odd.is_zero() || even != p {
            return Some(format!("({a},{b},{c}): expansion {even} + y({odd})"));
        }
        None
    });
    // `ok()?` above maps generation or decomposition errors to None, so count them separately.
    let errors = par_map(&triples, |&(a, b, c)| {
        gen_quad_cubic(&int(a), &int(b), &int(c)).and_then(|p| decompose_quad_cubic(&p)).is_err()
    });
    let errors = errors.into_iter().filter(|&e| e).count();
    let failures: Vec<String> = failures.into_iter().flatten().collect();
    assert_eq!(errors, 0, "{errors} triples failed to generate or decompose");
    assert!(failures.is_empty(), "{}", failures[..failures.len().min(5)].join("\n"));
    format!("{} triples round-tripped", triples.len())
}

fn sorted(perms: &[Perm]) -> BTreeSet<Perm> {
    perms.iter().cloned().collect()
}

fn check_labeling(a: i64, b: i64, c: i64) -> Result<GroupName, String> {
    let p = gen_quad_cubic(&int(a), &int(b), &int(c)).map_err(|e| e.to_string())?;
    let lab = certify_three_sum_labeling(&p).map_err(|e| format!("({a},{b},{c}): {e}"))?;
    let k = &lab.splitting.field;
    let r = &lab.roots;
    let s = |i: usize, j: usize| &r[i - 1] + &r[j - 1];
    let neg2 = |e: &QPoly| e.scale(&int(-2));
    let [b1, b2, b3] = &lab.betas;
    let nine = [
        (s(1, 2), b1.clone()),
        (s(3, 4), b1.clone()),
        (s(5, 6), neg2(b1)),
        (s(2, 5), b2.clone()),
        (s(3, 6), b2.clone()),
        (s(1, 4), neg2(b2)),
        (s(1, 6), b3.clone()),
        (s(4, 5), b3.clone()),
        (s(2, 3), neg2(b3)),
    ];
    for (n, (lhs, rhs)) in nine.iter().enumerate() {
        if lhs != rhs {
            return Err(format!("({a},{b},{c}): equality {} fails", n + 1));
        }
    }
    for beta in &lab.betas {
        if !k.eval(&lab.beta_minpoly, beta).is_zero() {
            return Err(format!("({a},{b},{c}): beta is not a root of {}", lab.beta_minpoly));
        }
    }
    if b1 == b2 || b1 == b3 || b2 == b3 {
        return Err(format!("({a},{b},{c}): betas coincide"));
    }
    // The roots are distinct roots of p.
    for (i, x) in r.iter().enumerate() {
        if !k.eval(&p, x).is_zero() || r[..i].contains(x) {
            return Err(format!("({a},{b},{c}): root {} invalid", i + 1));
        }
    }
    let group = sorted(&lab.group);
    let hit = catalog()
        .iter()
        .filter(|g| g.fingerprint.degree == 6 && matches!(g.name, GroupName::D6 | GroupName::C6 | GroupName::S3))
        .find(|g| sorted(&g.perms) == group)
        .ok_or_else(|| format!("({a},{b},{c}): relabeled group is none of the three catalog groups"))?;
    if hit.name != lab.name || hit.name != quad_cubic_galois_fast(&int(a), &int(b), &int(c)) {
        return Err(format!("({a},{b},{c}): {} vs {}", hit.name, lab.name));
    }
    Ok(hit.name)
}

/// `pi = (1 2 5 4 3 6)` on points `0..6`, built here rather than taken from the library.
fn pi_by_hand() -> Vec<usize> {
    let cycle = [1usize, 2, 5, 4, 3, 6];
    let mut img = vec![0; 6];
    for i in 0..6 {
        img[cycle[i] - 1] = cycle[(i + 1) % 6] - 1;
    }
    img
}

fn criterion_9() -> String {
    let p = pi_by_hand();
    let p4: Vec<usize> = (0..6).map(|i| p[p[p[p[i]]]]).collect();
    assert_eq!(pi().images(), &p[..]);
    assert_eq!(sigma().images(), &p4[..], "sigma = pi^4");

    let mut triples: Vec<(i64, i64, i64)> = QUAD_CUBIC_ROWS.iter().map(|r| r.0).collect();
    triples.extend(seeded_triples());
    triples.extend(round_trip_triples());
    let results = par_map(&triples, |&(a, b, c)| check_labeling(a, b, c));
    let failures: Vec<&String> = results.iter().filter_map(|r| r.as_ref().err()).collect();
    assert!(failures.is_empty(), "{} failures, first: {}", failures.len(), failures[0]);
    let mut counts = BTreeMap::new();
    for g in results.iter().flatten() {
        *counts.entry(g.as_str()).or_insert(0) += 1;
    }
    format!("{} labelings certified, groups {counts:?}", triples.len())
}

fn criterion_10() -> String {
    let p = poly(&[-1, 1, 0, -2, 1]);
    let rep = detect_relations(&p).unwrap();
    let pe = rep.pair_equal.expect("pair-equal relation");
    assert_eq!(pe.beta_kind, BetaKind::Rational);
    assert_eq!(pe.beta_value, Some(BigRat::one()));
    // u = sqrt(3 + 2 sqrt5) satisfies (u^2 - 3)^2 = 20, that is u^4 - 6u^2 - 11 = 0.
    // With x = (1 + u)/2 we have u = 2x - 1, and the quartic in u is 16 p(x).
    let u = poly(&[-1, 2]);
    let u2 = &u * &u;
    let radical = &(&(&u2 * &u2) - &u2.scale(&int(6))) - &QPoly::constant(int(11));
    assert_eq!(radical, p.scale(&int(16)));
    assert!(factor::is_irreducible(&p));
    format!("beta = 1, {p} confirmed by radical expansion")
}

// Transitive subgroup enumeration, independent of the library's group code.

type Images = Vec<u8>;

fn compose(a: &Images, b: &Images) -> Images {
    // (a * b)(i) = a(b(i))
    b.iter().map(|&i| a[i as usize]).collect()
}

fn all_images(d: usize) -> Vec<Images> {
    fn rec(d: usize, cur: &mut Images, used: &mut [bool], out: &mut Vec<Images>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in 0..d {
            if !used[i] {
                used[i] = true;
                cur.push(i as u8);
                rec(d, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(d, &mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

fn generated(d: usize, gens: &[&Images]) -> BTreeSet<Images> {
    let id: Images = (0..d as u8).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let n = compose(h, &g);
            if seen.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    seen
}

fn transitive(d: usize, g: &BTreeSet<Images>) -> bool {
    let orbit: BTreeSet<u8> = g.iter().map(|p| p[0]).collect();
    orbit.len() == d
}

fn inverse(a: &Images) -> Images {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

fn conjugate(g: &BTreeSet<Images>, h: &Images) -> BTreeSet<Images> {
    let hi = inverse(h);
    g.iter().map(|x| compose(h, &compose(x, &hi))).collect()
}

/// One representative of each conjugacy class of transitive subgroups of S_d.
fn transitive_classes(d: usize) -> Vec<BTreeSet<Images>> {
    let all = all_images(d);
    // Conjugacy class representatives for the first generator suffice.
    let mut reps: Vec<&Images> = Vec::new();
    let mut types = BTreeSet::new();
    for g in &all {
        if types.insert(cycle_type(g)) {
            reps.push(g);
        }
    }
    let mut subgroups = BTreeSet::new();
    for g in &reps {
        for h in &all {
            let sub = generated(d, &[g, h]);
            if transitive(d, &sub) {
                subgroups.insert(sub);
            }
        }
    }
    let mut classified: BTreeSet<BTreeSet<Images>> = BTreeSet::new();
    let mut classes = Vec::new();
    for sub in subgroups {
        if classified.contains(&sub) {
            continue;
        }
        for h in &all {
            classified.insert(conjugate(&sub, h));
        }
        classes.push(sub);
    }
    classes
}

fn cycle_type(p: &Images) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn to_perms(g: &BTreeSet<Images>) -> Vec<Perm> {
    g.iter().map(|p| Perm::from_images(p.iter().map(|&i| i as usize).collect()).unwrap()).collect()
}

fn criterion_11() -> String {
    let mut summary = Vec::new();
    for (d, expected) in [(4usize, 5usize), (6, 16)] {
        let classes = transitive_classes(d);
        assert_eq!(classes.len(), expected, "transitive subgroup classes of S{d}");
        let prints: Vec<Fingerprint> = classes.iter().map(|g| fingerprint(&to_perms(g))).collect();
        let distinct: BTreeSet<&Fingerprint> = prints.iter().collect();
        assert_eq!(distinct.len(), prints.len(), "fingerprint collision among transitive subgroups of S{d}");
        // Every catalog entry of this degree is one of the classes, with its own fingerprint.
        let all = all_images(d);
        for entry in catalog().iter().filter(|g| g.fingerprint.degree == d) {
            let perms: BTreeSet<Images> =
                entry.perms.iter().map(|p| p.images().iter().map(|&i| i as u8).collect()).collect();
            let idx = classes
                .iter()
                .position(|c| c.len() == perms.len() && all.iter().any(|h| &conjugate(c, h) == &perms))
                .unwrap_or_else(|| panic!("{} is not a transitive subgroup of S{d}", entry.name));
            assert_eq!(prints[idx], entry.fingerprint, "{}", entry.name);
        }
        summary.push(format!("S{d}: {} classes", classes.len()));
    }
    summary.join(", ") + ", fingerprints injective"
}

fn main() {
    let criteria: [(u32, fn() -> String); 11] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, f) in criteria {
        if only.is_some_and(|o| o != n) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({detail}; {secs:.1} s)"),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {n}: FAIL ({msg}; {secs:.1} s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
