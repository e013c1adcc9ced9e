use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use reslat_core::census::{canonical_key, lukasiewicz_chain};
use reslat_core::lattice::{is_chain, validate};
use reslat_core::shell::parse_ring;
use reslat_core::{all_ideals, are_isomorphic, build_ring, ideal_lattice, ring_units, FinRing, Ideal};

fn ring(text: &str) -> Arc<FinRing> {
    Arc::new(build_ring(&parse_ring(text).unwrap(), 1 << 12).unwrap())
}

/// Additive subgroups as member bitmasks, by closing `{0}` under adjoining
/// one element at a time.
fn additive_subgroups(r: &FinRing) -> BTreeSet<u64> {
    assert!(r.size() <= 64);
    let close = |mut mask: u64| loop {
        let mut next = mask;
        for a in r.elements().filter(|&a| mask >> a & 1 == 1) {
            for b in r.elements().filter(|&b| mask >> b & 1 == 1) {
                next |= 1 << r.add(a, b);
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    };
    let zero = close(1 << r.zero());
    let mut found = BTreeSet::from([zero]);
    let mut stack = vec![zero];
    while let Some(g) = stack.pop() {
        for a in r.elements().filter(|&a| g >> a & 1 == 0) {
            let h = close(g | 1 << a);
            if found.insert(h) {
                stack.push(h);
            }
        }
    }
    found
}

fn brute_ideals(r: &FinRing) -> BTreeSet<u64> {
    additive_subgroups(r)
        .into_iter()
        .filter(|&g| {
            r.elements()
                .filter(|&a| g >> a & 1 == 1)
                .all(|a| r.elements().all(|x| g >> r.mul(x, a) & 1 == 1))
        })
        .collect()
}

fn mask(ideal: &Ideal) -> u64 {
    ideal.members().fold(0, |m, a| m | 1 << a)
}

const SMALL_RINGS: [&str; 14] = [
    "Z12",
    "Z30",
    "Z64",
    "Z2 x Z2 x Z2",
    "Z2 x Z4",
    "Z4 x Z4",
    "Z2 x Z3 x Z5",
    "Z2[X]/(X^2)",
    "Z2[X]/(X^3)",
    "Z3[X]/(X^2)",
    "Z4[X]/(X^2)",
    "Z6[X]/(X^2)",
    "(Z2 x Z2)[X]/(X^2)",
    "Z8[X]/(X^2)",
];

#[test]
fn ideals_match_brute_force_subgroup_scan() {
    for text in SMALL_RINGS {
        let r = ring(text);
        let computed: BTreeSet<u64> = all_ideals(&r).iter().map(mask).collect();
        assert_eq!(computed, brute_ideals(&r), "{text}");
    }
}

#[test]
fn ideal_operations_are_consistent() {
    for text in ["Z12", "Z2 x Z4", "Z4[X]/(X^2)", "Z6[X]/(X^2)", "Z2[X]/(X^3)"] {
        let r = ring(text);
        let ideals = all_ideals(&r);
        for i in &ideals {
            for j in &ideals {
                let prod = i.product(j).unwrap();
                let meet = i.intersection(j).unwrap();
                let sum = i.sum(j).unwrap();
                assert!(prod.is_subset(&meet), "{text}");
                assert!(meet.is_subset(i) && meet.is_subset(j));
                assert!(i.is_subset(&sum) && j.is_subset(&sum));
                let quot = j.quotient(i).unwrap();
                for k in &ideals {
                    assert_eq!(
                        i.product(k).unwrap().is_subset(j),
                        k.is_subset(&quot),
                        "{text}: residuation"
                    );
                }
            }
        }
    }
}

#[test]
fn double_annihilator_on_zn_products() {
    for text in ["Z12", "Z30", "Z8", "Z2 x Z4", "Z4 x Z9", "Z2 x Z2 x Z3"] {
        let r = ring(text);
        for i in all_ideals(&r) {
            assert_eq!(i.annihilator().annihilator(), i, "{text}");
        }
    }
}

#[test]
fn chinese_remainder_lattices_agree() {
    for (split, whole) in [("Z2 x Z3", "Z6"), ("Z4 x Z3", "Z12"), ("Z2 x Z3 x Z5", "Z30")] {
        let a = ideal_lattice(&ring(split)).unwrap().lattice;
        let b = ideal_lattice(&ring(whole)).unwrap().lattice;
        assert!(are_isomorphic(&a, &b).is_some(), "{split} vs {whole}");
    }
}

#[test]
fn prime_power_rings_give_chains() {
    for p in [2usize, 3, 5, 7, 11] {
        let mut q = p;
        let mut e = 1;
        while q <= 128 {
            let meta = ideal_lattice(&ring(&format!("Z{q}"))).unwrap();
            let rl = &meta.lattice;
            assert!(validate(rl).verdict("residuated_lattice"));
            assert!(is_chain(rl), "Z{q}");
            assert_eq!(rl.size(), e + 1, "Z{q}");
            assert_eq!(canonical_key(rl), canonical_key(&lukasiewicz_chain(e + 1)));
            assert!(meta.local);
            q *= p;
            e += 1;
        }
    }
}

fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn units_of_zn_are_counted_by_totient(n in 2usize..300) {
        prop_assert_eq!(ring_units(&ring(&format!("Z{n}"))).len(), totient(n));
    }

    #[test]
    fn zn_ideal_lattice_matches_divisors(n in 2usize..400) {
        let meta = ideal_lattice(&ring(&format!("Z{n}"))).unwrap();
        let divisors = (1..=n).filter(|d| n % d == 0).count();
        prop_assert_eq!(meta.ideals.len(), divisors);
        prop_assert_eq!(meta.maximal_flags.iter().filter(|&&f| f).count(),
            (2..=n).filter(|&p| n % p == 0 && (2..p).all(|q| p % q != 0)).count());
    }
}
