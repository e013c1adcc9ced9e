//! Ideals of a finite commutative ring and the residuated lattice
//! `(Id(A), ∩, +, ⊗, →, {0}, A)` they form, with `I → J = (J : I)`.
//!
//! Ideals are bitsets over element ids. Sums are grown one cyclic subgroup
//! at a time and products are sums of the principal-like ideals `g·J` over
//! generators `g` of `I`, so everything stays within `O(|R| log |R|)` per
//! operation.

mod claims;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::lattice::{check_prel, check_div, LatticeError, ResLattice, Report, Witness, MAX_WITNESSES};
use crate::ring::{Elem, FinRing, RingError};

pub use claims::{audit_ring_claims, ClaimCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("ideal lattice construction failed: {0}")]
    Lattice(#[from] LatticeError),
    #[error("internal error: {0}")]
    Internal(String),
}

/// An ideal: a subset of the carrier containing zero, closed under addition
/// and under multiplication by arbitrary ring elements.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FinRing>,
    members: FixedBitSet,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.members == other.members
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.members().map(|a| self.ring.label(a)).collect();
        write!(f, "Ideal{{{}}}", labels.join(", "))
    }
}

fn same_ring(a: &Arc<FinRing>, b: &Arc<FinRing>) -> bool {
    Arc::ptr_eq(a, b) || a.expr() == b.expr()
}

impl Ideal {
    fn from_bits(ring: &Arc<FinRing>, members: FixedBitSet) -> Self {
        Ideal {
            ring: Arc::clone(ring),
            members,
        }
    }

    pub fn zero(ring: &Arc<FinRing>) -> Self {
        let mut bits = FixedBitSet::with_capacity(ring.size());
        bits.insert(ring.zero());
        Self::from_bits(ring, bits)
    }

    pub fn whole(ring: &Arc<FinRing>) -> Self {
        let mut bits = FixedBitSet::with_capacity(ring.size());
        bits.insert_range(..);
        Self::from_bits(ring, bits)
    }

    /// Wraps an explicit member set, checking the ideal axioms.
    pub fn from_members(ring: &Arc<FinRing>, members: &[Elem]) -> Option<Self> {
        let mut bits = FixedBitSet::with_capacity(ring.size());
        for &m in members {
            if m >= ring.size() {
                return None;
            }
            bits.insert(m);
        }
        let ideal = Self::from_bits(ring, bits);
        ideal.is_ideal().then_some(ideal)
    }

    pub fn ring(&self) -> &Arc<FinRing> {
        &self.ring
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.members.ones()
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.ring.size()
    }

    /// Exhaustive check of the ideal axioms.
    pub fn is_ideal(&self) -> bool {
        let r = &self.ring;
        self.contains(r.zero())
            && self
                .members()
                .all(|a| self.members().all(|b| self.contains(r.add(a, b))))
            && self
                .members()
                .all(|a| r.elements().all(|x| self.contains(r.mul(x, a))))
    }

    /// A generating set chosen greedily by smallest element id.
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = Ideal::zero(&self.ring);
        for a in self.members() {
            if !span.contains(a) {
                gens.push(a);
                span = span.sum_unchecked(&principal_ideal(&self.ring, a));
            }
        }
        gens
    }

    /// `(0)`, `(1)`, `(2)`, `(2,X)`, ...: the smallest single generator if
    /// the ideal is principal, the greedy generators otherwise.
    pub fn label(&self) -> String {
        let r = &self.ring;
        if self.is_whole() {
            return format!("({})", r.label(r.one()));
        }
        if let Some(g) = self
            .members()
            .find(|&a| principal_ideal(r, a).members == self.members)
        {
            return format!("({})", r.label(g));
        }
        let gens = self.generators();
        let parts: Vec<String> = gens.iter().map(|&g| self.ring.label(g)).collect();
        format!("({})", parts.join(","))
    }

    fn check_ring(&self, other: &Ideal) -> Result<(), IdealError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(IdealError::RingMismatch)
        }
    }

    /// Extends the additive subgroup `bits` by the element `g`.
    fn extend_subgroup(ring: &FinRing, bits: &mut FixedBitSet, g: Elem) {
        if bits.contains(g) {
            return;
        }
        let base: Vec<Elem> = bits.ones().collect();
        let mut multiple = g;
        while !bits.contains(multiple) {
            for &s in &base {
                bits.insert(ring.add(multiple, s));
            }
            multiple = ring.add(multiple, g);
        }
    }

    fn sum_unchecked(&self, other: &Ideal) -> Ideal {
        if other.is_subset(self) {
            return self.clone();
        }
        if self.is_subset(other) {
            return other.clone();
        }
        let mut bits = self.members.clone();
        for j in other.members() {
            Self::extend_subgroup(&self.ring, &mut bits, j);
        }
        Ideal::from_bits(&self.ring, bits)
    }

    /// `I + J = {i + j}`
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        Ok(self.sum_unchecked(other))
    }

    /// `I ∩ J`
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        let mut bits = self.members.clone();
        bits.intersect_with(&other.members);
        Ok(Ideal::from_bits(&self.ring, bits))
    }

    /// `I ⊗ J`, the additive closure of `{i·j}`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        let r = &self.ring;
        let mut bits = Ideal::zero(r).members;
        for g in self.generators() {
            // g·J is already an ideal, so only its elements need adding
            for j in other.members() {
                Self::extend_subgroup(r, &mut bits, r.mul(g, j));
            }
        }
        Ok(Ideal::from_bits(r, bits))
    }

    /// `(I : J) = {x : x·J ⊆ I}`
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        self.check_ring(other)?;
        let r = &self.ring;
        let gens = other.generators();
        let mut bits = FixedBitSet::with_capacity(r.size());
        for x in r.elements() {
            if gens.iter().all(|&g| self.contains(r.mul(x, g))) {
                bits.insert(x);
            }
        }
        Ok(Ideal::from_bits(r, bits))
    }

    /// `Ann(I) = (0 : I)`
    pub fn annihilator(&self) -> Ideal {
        Ideal::zero(&self.ring)
            .quotient(self)
            .expect("same ring")
    }

    /// Cardinality first, then the sorted member list lexicographically.
    pub fn canonical_cmp(&self, other: &Ideal) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.members().cmp(other.members()))
    }
}

/// `(a) = {r·a : r ∈ R}`
pub fn principal_ideal(ring: &Arc<FinRing>, a: Elem) -> Ideal {
    let mut bits = FixedBitSet::with_capacity(ring.size());
    for r in ring.elements() {
        bits.insert(ring.mul(r, a));
    }
    Ideal::from_bits(ring, bits)
}

/// Every ideal of `ring` in canonical order: all distinct principal ideals,
/// closed under sums to a fixpoint.
pub fn all_ideals(ring: &Arc<FinRing>) -> Vec<Ideal> {
    let mut principals: Vec<Ideal> = Vec::new();
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    for a in ring.elements() {
        let p = principal_ideal(ring, a);
        if !seen.contains_key(&p.members) {
            seen.insert(p.members.clone(), principals.len());
            principals.push(p);
        }
    }
    let mut ideals = principals.clone();
    let mut next = 0;
    while next < ideals.len() {
        let current = ideals[next].clone();
        next += 1;
        for p in &principals {
            let s = current.sum_unchecked(p);
            if !seen.contains_key(&s.members) {
                seen.insert(s.members.clone(), ideals.len());
                ideals.push(s);
            }
        }
    }
    ideals.sort_by(Ideal::canonical_cmp);
    ideals
}

/// Maximal and minimal flags per ideal, plus locality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClassification {
    pub maximal: Vec<bool>,
    pub minimal: Vec<bool>,
    pub local: bool,
}

/// Maximal: proper and contained in no other proper ideal. Minimal: nonzero
/// and containing no other nonzero ideal. Local: exactly one maximal ideal.
pub fn classify(ideals: &[Ideal]) -> IdealClassification {
    let maximal: Vec<bool> = ideals
        .iter()
        .map(|i| {
            !i.is_whole()
                && !ideals
                    .iter()
                    .any(|j| !j.is_whole() && j != i && i.is_subset(j))
        })
        .collect();
    let minimal = ideals
        .iter()
        .map(|i| {
            !i.is_zero()
                && !ideals
                    .iter()
                    .any(|j| !j.is_zero() && j != i && j.is_subset(i))
        })
        .collect();
    let local = maximal.iter().filter(|&&m| m).count() == 1;
    IdealClassification {
        maximal,
        minimal,
        local,
    }
}

/// The ideals of a ring together with their residuated lattice.
#[derive(Debug, Clone)]
pub struct IdealLatticeMeta {
    pub ideals: Vec<Ideal>,
    pub maximal_flags: Vec<bool>,
    pub minimal_flags: Vec<bool>,
    pub local: bool,
    pub lattice: ResLattice,
    /// `quotient[i][j]` is the index of `(I_i : I_j)`.
    quotient: Vec<Vec<usize>>,
    /// `product[i][j]` is the index of `I_i ⊗ I_j`.
    product: Vec<Vec<usize>>,
    /// `sum[i][j]` is the index of `I_i + I_j`.
    sum: Vec<Vec<usize>>,
}

impl IdealLatticeMeta {
    pub fn ring(&self) -> &Arc<FinRing> {
        self.ideals[0].ring()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.ideals.iter().position(|i| i == ideal)
    }

    pub fn quotient_index(&self, i: usize, j: usize) -> usize {
        self.quotient[i][j]
    }

    pub fn product_index(&self, i: usize, j: usize) -> usize {
        self.product[i][j]
    }

    pub fn sum_index(&self, i: usize, j: usize) -> usize {
        self.sum[i][j]
    }
}

/// Builds `Id(ring)` as a residuated lattice ordered by inclusion with
/// `⊙ = ⊗`, and cross-checks the residuum derived from the order against
/// the ring-level quotient `(J : I)`.
pub fn ideal_lattice(ring: &Arc<FinRing>) -> Result<IdealLatticeMeta, IdealError> {
    let ideals = all_ideals(ring);
    let m = ideals.len();
    let index: HashMap<&FixedBitSet, usize> =
        ideals.iter().enumerate().map(|(k, i)| (&i.members, k)).collect();
    let lookup = |i: &Ideal| -> Result<usize, IdealError> {
        index
            .get(&i.members)
            .copied()
            .ok_or_else(|| IdealError::Internal(format!("{i:?} missing from ideal list")))
    };
    let mut quotient = vec![vec![0; m]; m];
    let mut product = vec![vec![0; m]; m];
    let mut sum = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            quotient[a][b] = lookup(&ideals[a].quotient(&ideals[b])?)?;
            product[a][b] = lookup(&ideals[a].product(&ideals[b])?)?;
            sum[a][b] = lookup(&ideals[a].sum(&ideals[b])?)?;
        }
    }
    let names: Vec<String> = ideals.iter().map(Ideal::label).collect();
    let leq: Vec<Vec<bool>> = ideals
        .iter()
        .map(|i| ideals.iter().map(|j| i.is_subset(j)).collect())
        .collect();
    let lattice = ResLattice::new(names, leq, product.clone())?;
    for a in 0..m {
        for b in 0..m {
            // a -> b = (I_b : I_a)
            if lattice.imp(a, b) != quotient[b][a] {
                return Err(IdealError::Internal(format!(
                    "derived residuum {} -> {} disagrees with the ideal quotient",
                    lattice.name(a),
                    lattice.name(b)
                )));
            }
            let meet = lookup(&ideals[a].intersection(&ideals[b])?)?;
            if lattice.meet(a, b) != meet || lattice.join(a, b) != sum[a][b] {
                return Err(IdealError::Internal(format!(
                    "lattice operations disagree with ∩/+ at ({a}, {b})"
                )));
            }
        }
    }
    let class = classify(&ideals);
    Ok(IdealLatticeMeta {
        ideals,
        maximal_flags: class.maximal,
        minimal_flags: class.minimal,
        local: class.local,
        lattice,
        quotient,
        product,
        sum,
    })
}

/// Recomputes the maximal/minimal flags and locality of a computed ideal list.
pub fn classify_ideals(meta: &IdealLatticeMeta) -> IdealClassification {
    classify(&meta.ideals)
}

/// Decides whether `Id(ring)` is a BL-algebra two ways: prelinearity plus
/// divisibility on the lattice tables, and the ideal identity
/// `(K : [I ⊗ (J : I)]) = (K : I) + (K : J)` evaluated with ring-level ideal
/// arithmetic. Verdicts: `prel`, `div`, `bl`, `ideal_identity`,
/// `routes_agree`.
pub fn check_blring(ring: &Arc<FinRing>) -> Result<Report, IdealError> {
    let meta = ideal_lattice(ring)?;
    Ok(check_blring_meta(&meta))
}

pub fn check_blring_meta(meta: &IdealLatticeMeta) -> Report {
    let rl = &meta.lattice;
    let mut report = Report::new();
    let prel = check_prel(rl);
    let div = check_div(rl);
    let bl = prel.verdict("prel") && div.verdict("div");
    report.merge(prel);
    report.merge(div);
    report.set("bl", bl);

    let m = meta.ideals.len();
    let mut failures = 0;
    for i in 0..m {
        for j in 0..m {
            // I ⊗ (J : I)
            let left = meta.product[i][meta.quotient[j][i]];
            for k in 0..m {
                let lhs = meta.quotient[k][left];
                let rhs = meta.sum[meta.quotient[k][i]][meta.quotient[k][j]];
                if lhs != rhs {
                    if failures < MAX_WITNESSES {
                        report.push_witness(Witness {
                            law: "ideal_identity".into(),
                            elems: vec![i, j, k],
                            labels: [i, j, k].iter().map(|&e| rl.name(e).to_string()).collect(),
                        });
                    }
                    failures += 1;
                }
            }
        }
    }
    let identity = failures == 0;
    report.set("ideal_identity", identity);
    report.set("routes_agree", identity == bl);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{is_bl, is_chain, is_mv};
    use crate::ring::{build_ring, RingExpr, DEFAULT_SIZE_CAP};

    fn ring(expr: RingExpr) -> Arc<FinRing> {
        Arc::new(build_ring(&expr, DEFAULT_SIZE_CAP).unwrap())
    }

    fn zn(n: usize) -> Arc<FinRing> {
        ring(RingExpr::zn(n))
    }

    fn dual(n: usize) -> Arc<FinRing> {
        ring(RingExpr::poly_quot(RingExpr::zn(n), 2))
    }

    fn set(i: &Ideal) -> Vec<Elem> {
        i.members().collect()
    }

    fn by_labels(r: &Arc<FinRing>, labels: &[&str]) -> Ideal {
        let members: Vec<Elem> = labels.iter().map(|l| r.element_by_label(l).unwrap()).collect();
        Ideal::from_members(r, &members).unwrap()
    }

    #[test]
    fn principal_ideals_of_z8() {
        let r = zn(8);
        assert_eq!(set(&principal_ideal(&r, 2)), [0, 2, 4, 6]);
        assert_eq!(set(&principal_ideal(&r, 4)), [0, 4]);
        assert_eq!(set(&principal_ideal(&r, 0)), [0]);
        assert!(principal_ideal(&r, 6).is_ideal());
    }

    #[test]
    fn ideal_lists() {
        let z8: Vec<Vec<Elem>> = all_ideals(&zn(8)).iter().map(set).collect();
        assert_eq!(z8, vec![vec![0], vec![0, 4], vec![0, 2, 4, 6], (0..8).collect()]);
        assert_eq!(all_ideals(&zn(12)).len(), 6);
        let r = dual(2);
        let labels: Vec<String> = all_ideals(&r).iter().map(Ideal::label).collect();
        assert_eq!(labels, ["(0)", "(X)", "(1)"]);
    }

    #[test]
    fn ideal_arithmetic() {
        let r = zn(6);
        let two = principal_ideal(&r, 2);
        let three = principal_ideal(&r, 3);
        assert!(two.sum(&three).unwrap().is_whole());
        assert!(two.intersection(&three).unwrap().is_zero());

        let r = zn(8);
        let two = principal_ideal(&r, 2);
        assert_eq!(set(&two.product(&two).unwrap()), [0, 4]);
        assert_eq!(two.quotient(&Ideal::whole(&r)).unwrap(), two);
        assert_eq!(set(&two.annihilator()), [0, 4]);
        assert!(Ideal::whole(&r).annihilator().is_zero());

        let r = zn(6);
        let whole = Ideal::whole(&r);
        for j in all_ideals(&r) {
            assert!(whole.quotient(&j).unwrap().is_whole());
        }
    }

    #[test]
    fn dual_number_ideals() {
        for n in [2, 3, 5, 6] {
            let r = dual(n);
            let x = principal_ideal(&r, r.element_by_label("X").unwrap());
            assert!(x.product(&x).unwrap().is_zero(), "n = {n}");
        }
        let r = dual(2);
        let x = principal_ideal(&r, r.element_by_label("X").unwrap());
        assert_eq!(Ideal::zero(&r).quotient(&x).unwrap(), x);
    }

    #[test]
    fn annihilator_in_product_ring() {
        let r = ring(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(2)]));
        let i = by_labels(&r, &["(0,0)", "(0,1)"]);
        assert_eq!(i.annihilator(), by_labels(&r, &["(0,0)", "(1,0)"]));
    }

    #[test]
    fn ring_mismatch() {
        let a = Ideal::whole(&zn(4));
        let b = Ideal::whole(&zn(6));
        assert_eq!(a.sum(&b), Err(IdealError::RingMismatch));
        assert_eq!(a.quotient(&b), Err(IdealError::RingMismatch));
    }

    #[test]
    fn classification() {
        let meta = ideal_lattice(&zn(8)).unwrap();
        let c = classify_ideals(&meta);
        assert_eq!(c.maximal, [false, false, true, false]);
        assert_eq!(c.minimal, [false, true, false, false]);
        assert!(c.local);

        let meta = ideal_lattice(&zn(6)).unwrap();
        let maximal: Vec<String> = meta
            .ideals
            .iter()
            .zip(&meta.maximal_flags)
            .filter(|(_, &m)| m)
            .map(|(i, _)| i.label())
            .collect();
        assert_eq!(maximal, ["(3)", "(2)"]);
        assert!(!meta.local);

        let meta = ideal_lattice(&zn(7)).unwrap();
        assert_eq!(meta.maximal_flags, [true, false]);
        assert!(meta.local);
    }

    #[test]
    fn small_ideal_lattices() {
        let meta = ideal_lattice(&zn(4)).unwrap();
        let l = &meta.lattice;
        assert_eq!(l.size(), 3);
        assert!(is_chain(l) && is_bl(l) && is_mv(l).verdict("mv"));
        // (2) ⊗ (2) = (0)
        assert_eq!(l.odot(1, 1), 0);

        let meta = ideal_lattice(&zn(2)).unwrap();
        assert_eq!(meta.lattice.names(), ["(0)", "(1)"]);
    }

    #[test]
    fn boolean_four_tables() {
        let r = ring(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(2)]));
        let meta = ideal_lattice(&r).unwrap();
        let l = &meta.lattice;
        // O, {(0,0),(0,1)}, {(0,0),(1,0)}, E
        assert_eq!(l.names(), ["((0,0))", "((0,1))", "((1,0))", "((1,1))"]);
        let imp: Vec<Vec<usize>> = l.imp_rows();
        assert_eq!(imp, vec![vec![3, 3, 3, 3], vec![2, 3, 2, 3], vec![1, 1, 3, 3], vec![0, 1, 2, 3]]);
        let odot = l.odot_rows();
        assert_eq!(odot, vec![vec![0, 0, 0, 0], vec![0, 1, 0, 1], vec![0, 0, 2, 2], vec![0, 1, 2, 3]]);
        assert_eq!(l.join(1, 2), 3);
    }

    #[test]
    fn blring_routes() {
        for r in [zn(8), ring(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(4)]))] {
            let rep = check_blring(&r).unwrap();
            assert!(rep.verdict("bl"));
            assert!(rep.verdict("ideal_identity"));
            assert!(rep.verdict("routes_agree"));
        }
    }

    #[test]
    fn z4_dual_numbers_fail_prelinearity() {
        let r = dual(4);
        let rep = check_blring(&r).unwrap();
        assert!(!rep.verdict("prel"));
        assert!(!rep.verdict("bl"));
        assert!(!rep.verdict("ideal_identity"));
        assert!(rep.verdict("routes_agree"));
        let labels: Vec<Vec<String>> = rep.witnesses_for("prel").map(|w| w.labels.clone()).collect();
        assert!(
            labels.contains(&vec!["(X)".to_string(), "(2)".to_string()]),
            "{labels:?}"
        );
    }
}
