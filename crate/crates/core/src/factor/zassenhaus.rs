//! Factoring squarefree primitive integer polynomials: modular factorization,
//! quadratic Hensel lifting on a factor tree, and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{primes_above, ModPoly};
use crate::poly::{zmul, zprimitive, ztrim};

const CANDIDATE_PRIMES: usize = 5;
const PRIME_SCAN_LIMIT: usize = 400;

fn zmod(a: &mut [BigInt], m: &BigInt) {
    for c in a.iter_mut() {
        *c = c.mod_floor(m);
    }
}

fn zsub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x - y
        })
        .collect()
}

fn zadd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            let y = b.get(i).cloned().unwrap_or_default();
            x + y
        })
        .collect()
}

fn reduce(mut a: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    zmod(&mut a, m);
    ztrim(&mut a);
    a
}

fn mulm(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    reduce(zmul(a, b), m)
}

/// Division by a monic `b` modulo `m`.
fn divrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut r = a.to_vec();
    ztrim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let t = r[k + db].mod_floor(m);
        if !t.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &t * bj;
            }
            for j in 0..=db {
                r[k + j] = r[k + j].mod_floor(m);
            }
        }
        q[k] = t;
    }
    r.truncate(db);
    (reduce(q, m), reduce(r, m))
}

struct Lift {
    g: Vec<BigInt>,
    h: Vec<BigInt>,
    s: Vec<BigInt>,
    t: Vec<BigInt>,
}

/// One quadratic Hensel step from modulus `m` to `mm = m^2`.
fn hensel_step(f: &[BigInt], l: Lift, mm: &BigInt) -> Lift {
    let Lift { g, h, s, t } = l;
    let e = reduce(zsub(f, &zmul(&g, &h)), mm);
    let (q, r) = divrem_monic(&mulm(&s, &e, mm), &h, mm);
    let g2 = reduce(zadd(&zadd(&g, &zmul(&t, &e)), &zmul(&q, &g)), mm);
    let h2 = reduce(zadd(&h, &r), mm);
    let mut b = zadd(&zmul(&s, &g2), &zmul(&t, &h2));
    if b.is_empty() {
        b.push(BigInt::zero());
    }
    b[0] -= 1;
    let b = reduce(b, mm);
    let (c, d) = divrem_monic(&mulm(&s, &b, mm), &h2, mm);
    let s2 = reduce(zsub(&s, &d), mm);
    let t2 = reduce(zsub(&zsub(&t, &zmul(&t, &b)), &zmul(&c, &g2)), mm);
    Lift { g: g2, h: h2, s: s2, t: t2 }
}

fn mod_product(fs: &[ModPoly], p: u64) -> ModPoly {
    fs.iter().fold(ModPoly::one(p), |acc, g| acc.mul(g))
}

/// Lift monic modular factors of `f` (with `f = lc * prod facs mod p`) to
/// monic factors modulo `pk = p^k`.
fn lift_tree(f: &[BigInt], facs: &[ModPoly], p: u64, pk: &BigInt) -> Vec<Vec<BigInt>> {
    if facs.len() == 1 {
        let lc = f.last().unwrap().mod_floor(pk);
        let inv = lc.extended_gcd(pk).x.mod_floor(pk);
        let v: Vec<BigInt> = f.iter().map(|c| c * &inv).collect();
        return vec![reduce(v, pk)];
    }
    let mid = facs.len() / 2;
    let lcp = super::modp::reduce_int(f.last().unwrap(), p);
    let g0 = mod_product(&facs[..mid], p).scale(lcp);
    let h0 = mod_product(&facs[mid..], p);
    let (_, s0, t0) = g0.xgcd(&h0);
    let mut l = Lift {
        g: g0.c.iter().map(|&a| BigInt::from(a)).collect(),
        h: h0.c.iter().map(|&a| BigInt::from(a)).collect(),
        s: s0.c.iter().map(|&a| BigInt::from(a)).collect(),
        t: t0.c.iter().map(|&a| BigInt::from(a)).collect(),
    };
    let mut m = BigInt::from(p);
    while &m < pk {
        m = &m * &m;
        let fm = reduce(f.to_vec(), &m);
        l = hensel_step(&fm, l, &m);
    }
    let g = reduce(l.g, pk);
    let h = reduce(l.h, pk);
    let mut out = lift_tree(&g, &facs[..mid], p, pk);
    out.extend(lift_tree(&h, &facs[mid..], p, pk));
    out
}

fn symmetric(mut a: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    for c in a.iter_mut() {
        *c = c.mod_floor(m);
        if *c > half {
            *c -= m;
        }
    }
    ztrim(&mut a);
    a
}

/// Exact division of integer polynomials, `None` if not exact.
pub(crate) fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    ztrim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return if r.is_empty() { Some(Vec::new()) } else { None };
    }
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let (t, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !t.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] -= &t * bj;
            }
        }
        q[k] = t;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(q)
}

fn sq_norm(f: &[BigInt]) -> BigInt {
    f.iter().map(|c| c * c).sum()
}

/// Bitset of degrees attainable as sums of a sub-multiset of `degs`.
fn subset_sums(degs: &[usize], n: usize) -> Vec<bool> {
    let mut ok = vec![false; n + 1];
    ok[0] = true;
    for &d in degs {
        for s in (d..=n).rev() {
            if ok[s - d] {
                ok[s] = true;
            }
        }
    }
    ok
}

struct PrimeChoice {
    p: u64,
    fp: ModPoly,
    count: usize,
}

/// Pick good primes: `p > deg`, `p` not dividing the leading coefficient and
/// `f` squarefree mod `p`. Returns the chosen prime and the admissible factor
/// degrees (intersection over all candidate primes).
fn choose_prime(f: &[BigInt]) -> (PrimeChoice, Vec<bool>) {
    let n = f.len() - 1;
    let mut allowed = vec![true; n + 1];
    let mut best: Option<PrimeChoice> = None;
    let mut found = 0;
    for (scanned, p) in primes_above((n as u64).max(2)).enumerate() {
        if found >= CANDIDATE_PRIMES || (scanned >= PRIME_SCAN_LIMIT && best.is_some()) {
            break;
        }
        let fp = ModPoly::from_ints(p, f);
        if fp.degree() != n || !fp.is_squarefree() {
            continue;
        }
        found += 1;
        let degs = fp.factor_degrees();
        let sums = subset_sums(&degs, n);
        for (a, s) in allowed.iter_mut().zip(&sums) {
            *a &= *s;
        }
        let count = degs.len();
        if best.as_ref().is_none_or(|b| count < b.count) {
            best = Some(PrimeChoice { p, fp, count });
        }
        if count == 1 {
            break;
        }
    }
    (best.expect("a squarefree integer polynomial has good primes"), allowed)
}

/// Factor a squarefree primitive integer polynomial of degree >= 1 with
/// positive leading coefficient into primitive irreducible integer factors.
pub(crate) fn zassenhaus(f: &[BigInt], seed: u64) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let (choice, allowed) = choose_prime(f);
    if choice.count == 1 || (1..n).all(|d| !allowed[d]) {
        return vec![f.to_vec()];
    }
    let p = choice.p;
    let modfacs = choice.fp.monic().factor(seed).expect("good prime");
    let lc = f[n].abs();
    // Factor coefficient bound, scaled by the leading coefficient.
    let bound = (sq_norm(f).sqrt() + 1u32) * (BigInt::one() << n) * &lc;
    let target = bound * 2u32;
    let mut pk = BigInt::from(p);
    while pk <= target {
        pk *= p;
    }
    let lifted = lift_tree(f, &modfacs, p, &pk);
    recombine(f.to_vec(), lifted, &pk, &allowed)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn recombine(
    mut f: Vec<BigInt>,
    mut facs: Vec<Vec<BigInt>>,
    pk: &BigInt,
    allowed: &[bool],
) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= facs.len() {
        let r = facs.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| facs[i].len() - 1).sum();
            if allowed.get(deg).copied().unwrap_or(false) {
                let lc = f.last().unwrap().clone();
                let f0 = &f[0] * &lc;
                let mut c0 = lc.clone();
                for &i in &idx {
                    c0 = (c0 * &facs[i][0]).mod_floor(pk);
                }
                let c0 = symmetric(vec![c0], pk).pop().unwrap_or_default();
                let plausible = if f0.is_zero() {
                    true
                } else {
                    !c0.is_zero() && (&f0 % &c0).is_zero()
                };
                if plausible {
                    let mut g = vec![lc.clone()];
                    for &i in &idx {
                        g = mulm(&g, &facs[i], pk);
                    }
                    let g = zprimitive(symmetric(g, pk));
                    if let Some(q) = zdiv_exact(&f, &g) {
                        out.push(g);
                        f = q;
                        let mut keep = Vec::with_capacity(r - size);
                        for (i, fac) in facs.into_iter().enumerate() {
                            if !idx.contains(&i) {
                                keep.push(fac);
                            }
                        }
                        facs = keep;
                        continue 'outer;
                    }
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        size += 1;
    }
    if f.len() > 1 {
        out.push(zprimitive(f));
    }
    out
}
