use proptest::prelude::*;
use reslat_core::census::{
    are_isomorphic, canonical_key, enumerate_bl_ordinal, enumerate_reslat_oracle, godel_chain,
    lukasiewicz_chain, Filter,
};
use reslat_core::lattice::{direct_product, is_bl, is_chain, validate};
use reslat_core::ordinal_product;
use reslat_core::shell::{deserialize, parse_expr, serialize, AlgebraExpr};
use reslat_core::{ResLattice, RingExpr};

fn pool() -> Vec<ResLattice> {
    (2..=4).flat_map(|n| enumerate_bl_ordinal(n).unwrap()).collect()
}

#[test]
fn ordinal_product_is_associative_up_to_naming() {
    let pool = pool();
    for a in &pool {
        for b in &pool {
            for c in pool.iter().take(4) {
                let left = ordinal_product(&ordinal_product(a, b), c);
                let right = ordinal_product(a, &ordinal_product(b, c));
                assert_eq!(left.odot_rows(), right.odot_rows());
                assert_eq!(left.leq_rows(), right.leq_rows());
            }
        }
    }
}

#[test]
fn ordinal_product_is_not_commutative() {
    let (l3, l2) = (lukasiewicz_chain(3), lukasiewicz_chain(2));
    let ab = ordinal_product(&l3, &l2);
    let ba = ordinal_product(&l2, &l3);
    assert!(are_isomorphic(&ab, &ba).is_none());
    assert_ne!(canonical_key(&ab), canonical_key(&ba));
}

#[test]
fn ordinal_products_of_chains_are_bl_chains() {
    let chains: Vec<ResLattice> = pool().into_iter().filter(is_chain).collect();
    for a in &chains {
        for b in &chains {
            let p = ordinal_product(a, b);
            assert!(is_chain(&p) && is_bl(&p));
            assert_eq!(p.size(), a.size() + b.size() - 1);
        }
    }
}

#[test]
fn godel_chain_is_an_iterated_ordinal_product() {
    let two = lukasiewicz_chain(2);
    let mut g = two.clone();
    for k in 3..=6 {
        g = ordinal_product(&g, &two);
        assert_eq!(canonical_key(&g), canonical_key(&godel_chain(k)));
    }
}

#[test]
fn serialization_round_trips_the_oracle_corpus() {
    for n in 2..=5 {
        for rl in enumerate_reslat_oracle(n, Filter::All).unwrap() {
            let text = serialize(&rl);
            let back = deserialize(&text).unwrap();
            assert_eq!(back, rl);
            assert_eq!(serialize(&back), text);
        }
    }
}

#[test]
fn direct_products_of_bl_algebras_are_bl() {
    let pool = pool();
    for a in pool.iter().take(5) {
        for b in pool.iter().take(5) {
            let p = direct_product(&[a.clone(), b.clone()]);
            assert!(validate(&p).verdict("residuated_lattice"));
            assert!(is_bl(&p));
        }
    }
}

fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = (2usize..40).prop_map(RingExpr::Zn);
    leaf.prop_recursive(3, 8, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(RingExpr::Product),
            (inner, 2usize..4).prop_map(|(r, k)| RingExpr::poly_quot(r, k)),
        ]
    })
}

fn algebra_expr() -> impl Strategy<Value = AlgebraExpr> {
    let leaf = prop_oneof![
        ring_expr().prop_map(AlgebraExpr::IdOf),
        (2usize..9).prop_map(AlgebraExpr::Luk),
        "[a-z/_.]{1,12}".prop_map(AlgebraExpr::Load),
    ];
    leaf.prop_recursive(3, 10, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(a, b)| AlgebraExpr::Ord(Box::new(a), Box::new(b))),
            prop::collection::vec(inner, 1..4).prop_map(AlgebraExpr::ProductAlg),
        ]
    })
}

proptest! {
    #[test]
    fn grammar_round_trips(expr in algebra_expr()) {
        let text = expr.to_string();
        let parsed = parse_expr(&text).unwrap();
        prop_assert_eq!(parsed.to_string(), text);
        prop_assert_eq!(parsed, expr);
    }
}
