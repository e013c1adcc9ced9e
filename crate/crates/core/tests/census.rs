use std::collections::BTreeSet;

use reslat_core::census::{
    census_table, enumerate_bl_ordinal_keyed, enumerate_mv, enumerate_reslat_oracle,
    enumerate_reslat_oracle_keyed, multiplicative_partitions, Filter, REFERENCE_COUNTS,
};
use reslat_core::lattice::{is_bl, is_chain, validate};

#[test]
fn census_rows_match_both_ways() {
    let rows = census_table(5).unwrap();
    for row in &rows {
        println!("{row}");
        assert!(row.keys_match, "n = {}", row.n);
        assert_eq!(row.matches_reference(), Some(true), "n = {}", row.n);
    }
    assert_eq!(rows.len(), REFERENCE_COUNTS.len());
}

#[test]
fn oracle_bl_counts() {
    assert_eq!(enumerate_reslat_oracle(4, Filter::Bl).unwrap().len(), 5);
    assert_eq!(enumerate_reslat_oracle(5, Filter::BlChain).unwrap().len(), 8);
    for rl in enumerate_reslat_oracle(5, Filter::All).unwrap() {
        assert!(validate(&rl).verdict("residuated_lattice"));
    }
}

#[test]
fn generated_sets_equal_oracle_sets() {
    for n in 2..=5 {
        let generated: BTreeSet<_> = enumerate_bl_ordinal_keyed(n)
            .unwrap()
            .into_iter()
            .map(|(k, _)| k)
            .collect();
        let oracle: BTreeSet<_> = enumerate_reslat_oracle_keyed(n)
            .unwrap()
            .into_iter()
            .filter(|(_, rl)| is_bl(rl))
            .map(|(k, _)| k)
            .collect();
        assert_eq!(generated, oracle, "n = {n}");
    }
}

#[test]
fn mv_count_is_pi_plus_one_with_one_chain() {
    for n in 2..=16 {
        let mv = enumerate_mv(n).unwrap();
        assert_eq!(mv.len(), multiplicative_partitions(n) + 1, "n = {n}");
        assert_eq!(mv.iter().filter(|rl| is_chain(rl)).count(), 1, "n = {n}");
    }
}
