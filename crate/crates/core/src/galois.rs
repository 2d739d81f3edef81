//! Galois groups of splitting fields as explicit permutation groups on the
//! root indices, and their names among small transitive groups.
//!
//! The group is read off at a prime `q` modulo which the field generator's
//! minimal polynomial splits into distinct linear factors. Every such root
//! `r_j` gives a homomorphism from the field to `F_q`, these homomorphisms
//! are `phi_1 o g` for the automorphisms `g`, and comparing the images of the
//! roots of `p` under `phi_j` and `phi_1` yields the permutation of `g`.
//! No candidate filtering is involved, so the result is exact.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use crate::factor::{self, ModPoly};
use crate::families;
use crate::numberfield::{self, NfError, PrimitiveElement, SplittingData};
use crate::poly::{is_rational_square, BigRat, QPoly};

/// A permutation of `{0, .., d-1}`, stored by images. Printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(d: usize) -> Self {
        Perm((0..d).collect())
    }

    /// From an image list; `None` unless it is a bijection of `0..d`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    /// From disjoint cycles written with 1-based points.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = b - 1;
            }
        }
        Perm::from_images(images).expect("disjoint cycles")
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self o other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: u32) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
    }

    /// Conjugate by a relabeling: `label[k]` is the old index carrying the
    /// new label `k`. Returns `label^-1 o self o label`.
    pub fn relabel(&self, label: &Perm) -> Perm {
        label.inverse().compose(&self.compose(label))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] == s {
                continue;
            }
            write!(f, "(")?;
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// The group generated by `gens`, sorted.
pub fn closure(d: usize, gens: &[Perm]) -> Vec<Perm> {
    let id = Perm::identity(d);
    let mut seen: BTreeSet<Perm> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen.into_iter().collect()
}

/// Contains the identity and is closed under composition (hence a group,
/// being finite).
pub fn is_group(perms: &[Perm]) -> bool {
    let Some(first) = perms.first() else { return false };
    let set: BTreeSet<&Perm> = perms.iter().collect();
    set.contains(&Perm::identity(first.degree()))
        && perms.iter().all(|a| perms.iter().all(|b| set.contains(&a.compose(b))))
}

pub fn is_transitive(perms: &[Perm]) -> bool {
    let Some(first) = perms.first() else { return false };
    let mut orbit: BTreeSet<usize> = BTreeSet::new();
    for g in perms {
        orbit.insert(g.apply(0));
    }
    orbit.len() == first.degree()
}

pub fn is_abelian(perms: &[Perm]) -> bool {
    perms.iter().all(|a| perms.iter().all(|b| a.compose(b) == b.compose(a)))
}

/// Names of the transitive groups this crate recognizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupName {
    C2,
    C3,
    S3,
    V4,
    C4,
    D4,
    A4,
    S4,
    C5,
    D5,
    F20,
    A5,
    S5,
    C6,
    D6,
    A4xC2,
    S4Plus,
    S4Minus,
    S4xC2,
    C7,
    D7,
    F21,
    F42,
}

impl GroupName {
    pub const ALL: [GroupName; 23] = {
        use GroupName::*;
        [
            C2, C3, S3, V4, C4, D4, A4, S4, C5, D5, F20, A5, S5, C6, D6, A4xC2, S4Plus, S4Minus, S4xC2, C7, D7,
            F21, F42,
        ]
    };

    pub fn as_str(&self) -> &'static str {
        use GroupName::*;
        match self {
            C2 => "C2",
            C3 => "C3",
            S3 => "S3",
            V4 => "V4",
            C4 => "C4",
            D4 => "D4",
            A4 => "A4",
            S4 => "S4",
            C5 => "C5",
            D5 => "D5",
            F20 => "F20",
            A5 => "A5",
            S5 => "S5",
            C6 => "C6",
            D6 => "D6",
            A4xC2 => "A4xC2",
            S4Plus => "S4+",
            S4Minus => "S4-",
            S4xC2 => "S4xC2",
            C7 => "C7",
            D7 => "D7",
            F21 => "F21",
            F42 => "F42",
        }
    }
}

impl std::str::FromStr for GroupName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupName::ALL
            .into_iter()
            .find(|g| g.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown group name {s:?}"))
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Degree, order, cycle-type multiset and commutativity of a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub degree: usize,
    pub order: usize,
    pub cycle_types: BTreeMap<Vec<usize>, usize>,
    pub abelian: bool,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}, order {}, cycle types {{", self.degree, self.order)?;
        for (i, (ct, n)) in self.cycle_types.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = ct.iter().map(|l| l.to_string()).collect();
            write!(f, "[{}]: {}", parts.join(" "), n)?;
        }
        write!(f, "}}{}", if self.abelian { ", abelian" } else { "" })
    }
}

pub fn fingerprint(perms: &[Perm]) -> Fingerprint {
    let mut cycle_types = BTreeMap::new();
    for g in perms {
        *cycle_types.entry(g.cycle_type()).or_insert(0) += 1;
    }
    Fingerprint {
        degree: perms.first().map_or(0, Perm::degree),
        order: perms.len(),
        cycle_types,
        abelian: is_abelian(perms),
    }
}

/// The six-point permutations `pi = (1 2 5 4 3 6)`, `sigma = pi^4` and
/// `tau = (1 2)(3 4)(5 6)`.
pub fn pi() -> Perm {
    Perm::from_cycles(6, &[&[1, 2, 5, 4, 3, 6]])
}

pub fn sigma() -> Perm {
    pi().pow(4)
}

pub fn tau() -> Perm {
    Perm::from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]])
}

/// A reference group in the catalog.
#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: GroupName,
    pub perms: Vec<Perm>,
    pub fingerprint: Fingerprint,
}

impl CatalogGroup {
    fn new(name: GroupName, perms: Vec<Perm>) -> Self {
        let mut perms = perms;
        perms.sort();
        perms.dedup();
        let fingerprint = fingerprint(&perms);
        CatalogGroup { name, perms, fingerprint }
    }
}

/// Action of `group` by left multiplication on the left cosets of `sub`.
/// Cosets are numbered by first appearance in the sorted group.
pub fn coset_action(group: &[Perm], sub: &[Perm]) -> Vec<Perm> {
    let mut cosets: Vec<BTreeSet<Perm>> = Vec::new();
    for g in group {
        if cosets.iter().any(|c| c.contains(g)) {
            continue;
        }
        cosets.push(sub.iter().map(|h| g.compose(h)).collect());
    }
    let index_of = |p: &Perm| cosets.iter().position(|c| c.contains(p)).expect("coset");
    let reps: Vec<Perm> = cosets.iter().map(|c| c.iter().next().unwrap().clone()).collect();
    let mut out: Vec<Perm> = group
        .iter()
        .map(|g| Perm(reps.iter().map(|r| index_of(&g.compose(r))).collect()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Affine maps `i -> a*i + b` on `Z/p` for `a` in `mults`.
fn affine_group(p: usize, mults: &[usize]) -> Vec<Perm> {
    let mut gens = vec![Perm((0..p).map(|i| (i + 1) % p).collect())];
    for &a in mults {
        gens.push(Perm((0..p).map(|i| (a * i) % p).collect()));
    }
    closure(p, &gens)
}

fn build_catalog() -> Vec<CatalogGroup> {
    use GroupName::*;
    let c = |d: usize, cycles: &[&[usize]]| Perm::from_cycles(d, cycles);
    let s4 = closure(4, &[c(4, &[&[1, 2, 3, 4]]), c(4, &[&[1, 2]])]);
    let a4 = closure(4, &[c(4, &[&[1, 2, 3]]), c(4, &[&[1, 2], &[3, 4]])]);
    let c4 = closure(4, &[c(4, &[&[1, 2, 3, 4]])]);
    let pair_stab_s4 = closure(4, &[c(4, &[&[1, 2]]), c(4, &[&[3, 4]])]);
    let pair_stab_a4 = closure(4, &[c(4, &[&[1, 2], &[3, 4]])]);
    // On the cosets of a pair stabilizer (the six 2-subsets of {1..4}), the
    // map sending a coset to its complement commutes with the action.
    let s4_pairs = coset_action(&s4, &pair_stab_s4);
    let a4_pairs = coset_action(&a4, &pair_stab_a4);
    let complement = pair_complement(&s4, &pair_stab_s4);
    let s4_c4 = coset_action(&s4, &c4);
    let with_complement = |g: &[Perm]| {
        let mut gens = g.to_vec();
        gens.push(complement.clone());
        closure(6, &gens)
    };
    let (s4_even, s4_odd) = if s4_pairs.iter().all(Perm::is_even) {
        (s4_pairs.clone(), s4_c4)
    } else {
        (s4_c4, s4_pairs.clone())
    };
    let (pi, sigma, tau) = (pi(), sigma(), tau());
    let s3_six = vec![
        Perm::identity(6),
        sigma.clone(),
        sigma.pow(2),
        tau.clone(),
        tau.compose(&sigma),
        tau.compose(&sigma.pow(2)),
    ];
    vec![
        CatalogGroup::new(C2, closure(2, &[c(2, &[&[1, 2]])])),
        CatalogGroup::new(C3, closure(3, &[c(3, &[&[1, 2, 3]])])),
        CatalogGroup::new(S3, closure(3, &[c(3, &[&[1, 2, 3]]), c(3, &[&[1, 2]])])),
        CatalogGroup::new(
            V4,
            closure(4, &[c(4, &[&[1, 2], &[3, 4]]), c(4, &[&[1, 3], &[2, 4]])]),
        ),
        CatalogGroup::new(C4, c4.clone()),
        CatalogGroup::new(D4, closure(4, &[c(4, &[&[1, 2, 3, 4]]), c(4, &[&[1, 3]])])),
        CatalogGroup::new(A4, a4.clone()),
        CatalogGroup::new(S4, s4.clone()),
        CatalogGroup::new(C5, affine_group(5, &[])),
        CatalogGroup::new(D5, affine_group(5, &[4])),
        CatalogGroup::new(F20, affine_group(5, &[2])),
        CatalogGroup::new(
            A5,
            closure(5, &[c(5, &[&[1, 2, 3, 4, 5]]), c(5, &[&[1, 2, 3]])]),
        ),
        CatalogGroup::new(S5, closure(5, &[c(5, &[&[1, 2, 3, 4, 5]]), c(5, &[&[1, 2]])])),
        CatalogGroup::new(C6, closure(6, std::slice::from_ref(&pi))),
        CatalogGroup::new(S3, s3_six),
        CatalogGroup::new(D6, closure(6, &[tau, pi])),
        CatalogGroup::new(A4, a4_pairs.clone()),
        CatalogGroup::new(A4xC2, with_complement(&a4_pairs)),
        CatalogGroup::new(S4Plus, s4_even),
        CatalogGroup::new(S4Minus, s4_odd),
        CatalogGroup::new(S4xC2, with_complement(&s4_pairs)),
        CatalogGroup::new(C7, affine_group(7, &[])),
        CatalogGroup::new(D7, affine_group(7, &[6])),
        CatalogGroup::new(F21, affine_group(7, &[2])),
        CatalogGroup::new(F42, affine_group(7, &[3])),
    ]
}

/// The involution on the cosets of the stabilizer of `{1, 2}` sending the
/// coset of pair `{i, j}` to the coset of the complementary pair.
fn pair_complement(s4: &[Perm], stab: &[Perm]) -> Perm {
    // Coset representatives in the same order as `coset_action` numbers them.
    let mut reps: Vec<Perm> = Vec::new();
    for g in s4 {
        if reps.iter().any(|r| stab.iter().any(|h| &r.compose(h) == g)) {
            continue;
        }
        reps.push(g.clone());
    }
    let pair_of = |r: &Perm| {
        let mut pr = [r.apply(0), r.apply(1)];
        pr.sort_unstable();
        pr
    };
    let pairs: Vec<[usize; 2]> = reps.iter().map(pair_of).collect();
    let images = pairs
        .iter()
        .map(|pr| {
            let mut rest: Vec<usize> = (0..4).filter(|i| !pr.contains(i)).collect();
            rest.sort_unstable();
            pairs.iter().position(|q| q[..] == rest[..]).expect("complement pair")
        })
        .collect();
    Perm(images)
}

/// Reference groups, built once.
pub fn catalog() -> &'static [CatalogGroup] {
    static CATALOG: OnceLock<Vec<CatalogGroup>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Two catalog groups with equal fingerprints, if any.
pub fn fingerprint_collision(groups: &[CatalogGroup]) -> Option<(GroupName, GroupName)> {
    for (i, a) in groups.iter().enumerate() {
        for b in &groups[i + 1..] {
            if a.fingerprint == b.fingerprint {
                return Some((a.name, b.name));
            }
        }
    }
    None
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GaloisError {
    #[error("no catalog group has fingerprint {0}")]
    UnknownFingerprint(Fingerprint),
    #[error("polynomial is not irreducible over Q")]
    NotIrreducible,
    #[error(transparent)]
    NumberField(#[from] NfError),
    #[error("polynomial is not a sum-of-quadratic-and-cubic sextic")]
    NotQuadCubic,
    #[error("no root labeling satisfies the three-sum system")]
    LabelingNotFound,
    #[error("classification contradiction: {0}")]
    ClassificationContradiction(String),
}

/// Name of a transitive permutation group from its fingerprint.
pub fn name_group(perms: &[Perm]) -> Result<GroupName, GaloisError> {
    let fp = fingerprint(perms);
    catalog()
        .iter()
        .find(|g| g.fingerprint == fp)
        .map(|g| g.name)
        .ok_or(GaloisError::UnknownFingerprint(fp))
}

/// The Galois group as a permutation set on the roots of a splitting field.
#[derive(Clone, Debug)]
pub struct GaloisResult {
    pub degree: usize,
    pub order: usize,
    /// Sorted; indices refer to `SplittingData::roots`.
    pub perms: Vec<Perm>,
    /// `None` when the group is not in the catalog.
    pub name: Option<GroupName>,
    pub fingerprint: Fingerprint,
}

impl GaloisResult {
    fn from_perms(perms: Vec<Perm>) -> Self {
        let fingerprint = fingerprint(&perms);
        GaloisResult {
            degree: fingerprint.degree,
            order: perms.len(),
            name: name_group(&perms).ok(),
            perms,
            fingerprint,
        }
    }
}

/// Galois group of a monic irreducible polynomial of degree 2..=7.
pub fn galois_group(p: &QPoly, order_cap: usize) -> Result<GaloisResult, GaloisError> {
    if !factor::is_irreducible(p) {
        return Err(GaloisError::NotIrreducible);
    }
    let data = numberfield::splitting_field(p, order_cap)?;
    Ok(GaloisResult::from_perms(group_from_splitting(&data)))
}

/// Galois group together with the splitting data it refers to.
pub fn galois_group_with_data(
    p: &QPoly,
    order_cap: usize,
) -> Result<(GaloisResult, SplittingData), GaloisError> {
    if !factor::is_irreducible(p) {
        return Err(GaloisError::NotIrreducible);
    }
    let data = numberfield::splitting_field(p, order_cap)?;
    Ok((GaloisResult::from_perms(group_from_splitting(&data)), data))
}

/// Read the automorphism group off a totally split prime.
pub fn group_from_splitting(data: &SplittingData) -> Vec<Perm> {
    let mut start = 1u64 << 20;
    loop {
        let (q, field_roots) = numberfield::split_prime(data, start);
        let images = |r: u64| -> Vec<u64> {
            data.roots.iter().map(|a| numberfield::eval_mod(a, q, r)).collect()
        };
        let base = images(field_roots[0]);
        let distinct: BTreeSet<u64> = base.iter().copied().collect();
        if distinct.len() != base.len() {
            start = q;
            continue;
        }
        let mut perms: Vec<Perm> = field_roots
            .iter()
            .map(|&r| {
                let img = images(r);
                Perm(img.iter().map(|v| base.iter().position(|b| b == v).expect("image is a root")).collect())
            })
            .collect();
        perms.sort();
        return perms;
    }
}

/// Exact membership test: the permutation is an automorphism iff the
/// minimal polynomial of the primitive element vanishes at the permuted
/// weighted root sum.
pub struct ExactMembership<'a> {
    data: &'a SplittingData,
    prim: PrimitiveElement,
    minpoly: QPoly,
}

impl<'a> ExactMembership<'a> {
    pub fn new(data: &'a SplittingData) -> Self {
        let prim = numberfield::primitive_element(data);
        let minpoly = data.field.minpoly(&prim.element);
        ExactMembership { data, prim, minpoly }
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let mut theta = QPoly::zero();
        for (i, &w) in self.prim.weights.iter().enumerate() {
            if w != 0 {
                theta = &theta + &self.data.roots[g.apply(i)].scale(&BigRat::from_integer(w.into()));
            }
        }
        let mut acc = QPoly::zero();
        for c in self.minpoly.coeffs().into_iter().rev() {
            acc = &self.data.field.mul(&acc, &theta) + &QPoly::constant(c);
        }
        acc.is_zero()
    }
}

/// Every permutation of the roots, in lexicographic order.
pub fn all_perms(d: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        let d = used.len();
        if prefix.len() == d {
            out.push(Perm(prefix.clone()));
            return;
        }
        for i in 0..d {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

/// Galois group of an irreducible quartic from its resolvent cubic and
/// discriminant.
pub fn quartic_galois(p: &QPoly) -> GroupName {
    assert_eq!(p.degree(), 4, "quartic expected");
    let p = p.monic();
    let (a3, a2, a1, a0) = (p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
    // Roots a1 a2 + a3 a4 and its conjugates.
    let resolvent = QPoly::from_rats(vec![
        -(&a3 * &a3 * &a0 - BigRat::from_integer(4.into()) * &a2 * &a0 + &a1 * &a1),
        &a1 * &a3 - BigRat::from_integer(4.into()) * &a0,
        -a2.clone(),
        BigRat::from_integer(1.into()),
    ]);
    let disc = factor::discriminant(&p);
    let roots = factor::rational_roots(&resolvent);
    match roots.len() {
        0 => {
            if is_rational_square(&disc) {
                GroupName::A4
            } else {
                GroupName::S4
            }
        }
        1 => {
            let r = &roots[0];
            let splits = |q: BigRat| q.is_zero() || is_rational_square(&q) || is_rational_square(&(&q * &disc));
            let four = BigRat::from_integer(4.into());
            if splits(r * r - &four * &a0) && splits(&a3 * &a3 - &four * (&a2 - r)) {
                GroupName::C4
            } else {
                GroupName::D4
            }
        }
        _ => GroupName::V4,
    }
}

/// Group of the quadratic-plus-cubic sextic with parameters `(a, b, c)` from
/// the discriminant `-4b^3 - 27c^2` of `x^3 + bx + c`.
pub fn quad_cubic_galois_fast(a: &BigRat, b: &BigRat, c: &BigRat) -> GroupName {
    let delta = BigRat::from_integer((-4).into()) * b * b * b - BigRat::from_integer(27.into()) * c * c;
    if is_rational_square(&delta) {
        GroupName::C6
    } else if is_rational_square(&(a * &delta)) {
        GroupName::S3
    } else {
        GroupName::D6
    }
}

/// A root ordering satisfying the three-sum system together with the group
/// expressed in that ordering.
#[derive(Clone, Debug)]
pub struct ThreeSumLabeling {
    /// `label.apply(k)` is the index (in the splitting data) of root `k+1`.
    pub label: Perm,
    /// The roots in label order.
    pub roots: Vec<QPoly>,
    /// `beta_1, beta_2, beta_3` in the splitting field.
    pub betas: [QPoly; 3],
    /// Minimal polynomial of `beta_1`.
    pub beta_minpoly: QPoly,
    /// The group relabeled, sorted.
    pub group: Vec<Perm>,
    pub name: GroupName,
    pub splitting: SplittingData,
}

/// Find a labeling `a_1..a_6` of the roots of a quadratic-plus-cubic sextic
/// with
///
/// ```text
/// b_1 = a_1 + a_2 = a_3 + a_4,   -2 b_1 = a_5 + a_6,
/// b_2 = a_2 + a_5 = a_3 + a_6,   -2 b_2 = a_1 + a_4,
/// b_3 = a_1 + a_6 = a_4 + a_5,   -2 b_3 = a_2 + a_3,
/// ```
///
/// where `b_1, b_2, b_3` are the conjugates of `b_1`. The relabeled group
/// must equal one of the catalog groups generated by `pi`, `tau`, `sigma`
/// verbatim, and must agree with [`quad_cubic_galois_fast`].
pub fn certify_three_sum_labeling(p: &QPoly) -> Result<ThreeSumLabeling, GaloisError> {
    let dec = families::decompose_quad_cubic(p).map_err(|_| GaloisError::NotQuadCubic)?;
    let normalized = &dec.normalized;
    let data = numberfield::splitting_field_quad_cubic(normalized, &dec.a, &dec.cubic, 12)?;
    let field = data.field.clone();
    let r = &data.roots;
    let sum = |i: usize, j: usize| &r[i] + &r[j];
    // beta: the common value of two disjoint pair sums.
    let mut beta = None;
    'outer: for i in 0..6 {
        for j in i + 1..6 {
            for k in i + 1..6 {
                for l in k + 1..6 {
                    if k != j && l != j && sum(i, j) == sum(k, l) {
                        beta = Some(sum(i, j));
                        break 'outer;
                    }
                }
            }
        }
    }
    let beta = beta.ok_or(GaloisError::LabelingNotFound)?;
    let beta_minpoly = field.minpoly(&beta);
    if beta_minpoly.degree() != 3 {
        return Err(GaloisError::ClassificationContradiction(format!(
            "pair sum has degree {} instead of 3",
            beta_minpoly.degree()
        )));
    }
    let mut conj: Vec<QPoly> = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let s = sum(i, j);
            if !conj.contains(&s) && field.eval(&beta_minpoly, &s).is_zero() {
                conj.push(s);
            }
        }
    }
    if conj.len() != 3 {
        return Err(GaloisError::LabelingNotFound);
    }
    let label = search_labeling(r, &beta, &conj).ok_or(GaloisError::LabelingNotFound)?;
    let l = Perm::from_images(label.to_vec()).expect("labeling is a bijection");
    let (b2, b3) = {
        let b2 = sum(label[1], label[4]);
        let b3 = sum(label[0], label[5]);
        (b2, b3)
    };
    let mut group: Vec<Perm> = group_from_splitting(&data).iter().map(|g| g.relabel(&l)).collect();
    group.sort();
    let matched = catalog()
        .iter()
        .find(|c| matches!(c.name, GroupName::D6 | GroupName::C6 | GroupName::S3) && c.perms == group)
        .ok_or_else(|| {
            GaloisError::ClassificationContradiction("relabeled group is not a catalog group verbatim".into())
        })?;
    if sigma() != pi().pow(4) || !group.contains(&sigma()) {
        return Err(GaloisError::ClassificationContradiction("sigma is not in the group".into()));
    }
    let fast = quad_cubic_galois_fast(&dec.a, &dec.b, &dec.c);
    if fast != matched.name {
        return Err(GaloisError::ClassificationContradiction(format!(
            "discriminant test gives {fast}, labeling gives {}",
            matched.name
        )));
    }
    let roots = label.iter().map(|&i| r[i].clone()).collect();
    Ok(ThreeSumLabeling {
        label: l,
        roots,
        betas: [beta, b2, b3],
        beta_minpoly,
        group,
        name: matched.name,
        splitting: data,
    })
}

fn search_labeling(r: &[QPoly], beta: &QPoly, conj: &[QPoly]) -> Option<[usize; 6]> {
    let sum = |i: usize, j: usize| &r[i] + &r[j];
    let neg2 = |b: &QPoly| b.scale(&BigRat::from_integer((-2).into()));
    for a1 in 0..6 {
        for a2 in 0..6 {
            if a2 == a1 || &sum(a1, a2) != beta {
                continue;
            }
            for a3 in 0..6 {
                for a4 in 0..6 {
                    let used = [a1, a2];
                    if a3 == a4 || used.contains(&a3) || used.contains(&a4) || &sum(a3, a4) != beta {
                        continue;
                    }
                    for b2 in conj.iter().filter(|b| *b != beta) {
                        let b3 = conj.iter().find(|b| *b != beta && *b != b2)?;
                        for a5 in 0..6 {
                            if [a1, a2, a3, a4].contains(&a5) || &sum(a2, a5) != b2 {
                                continue;
                            }
                            let a6 = (0..6).find(|i| ![a1, a2, a3, a4, a5].contains(i))?;
                            let ok = &sum(a3, a6) == b2
                                && &sum(a1, a6) == b3
                                && &sum(a4, a5) == b3
                                && sum(a5, a6) == neg2(beta)
                                && sum(a1, a4) == neg2(b2)
                                && sum(a2, a3) == neg2(b3);
                            if ok {
                                return Some([a1, a2, a3, a4, a5, a6]);
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Factor-degree pattern of `p` modulo a prime not dividing its
/// discriminant, as a decreasing list (a cycle type of some group element).
pub fn frobenius_cycle_type(p: &QPoly, q: u64) -> Option<Vec<usize>> {
    let (_, f) = p.primitive_part();
    let fq = ModPoly::from_ints(q, &f);
    if fq.degree() != p.degree() || !fq.is_squarefree() {
        return None;
    }
    let mut degs = fq.factor_degrees();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    Some(degs)
}
