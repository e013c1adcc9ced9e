//! MV-algebras from Łukasiewicz chains and BL-algebras from ordinal
//! products of smaller ones.

use std::collections::BTreeMap;

use super::{canonical_key, factorizations, lukasiewicz_chain, CanonicalKey, CensusError};
use crate::lattice::{direct_product, is_chain, ResLattice};
use crate::ordinal::ordinal_product;

/// Largest order accepted by [`enumerate_mv`].
pub const MV_CAP: usize = 64;
/// Largest order accepted by [`enumerate_bl_ordinal`].
pub const BL_ORDINAL_CAP: usize = 9;

/// Deduplicates by canonical key; the result is sorted by key.
pub fn dedup(algebras: impl IntoIterator<Item = ResLattice>) -> Vec<(CanonicalKey, ResLattice)> {
    let mut seen: BTreeMap<CanonicalKey, ResLattice> = BTreeMap::new();
    for rl in algebras {
        seen.entry(canonical_key(&rl)).or_insert(rl);
    }
    seen.into_iter().collect()
}

/// One MV-algebra of order `n` per isomorphism class: `Ł_n` and the products
/// `Ł_{k1} × ... × Ł_{km}` over the factorizations `n = k1 ⋯ km`.
pub fn enumerate_mv(n: usize) -> Result<Vec<ResLattice>, CensusError> {
    Ok(enumerate_mv_keyed(n)?.into_iter().map(|(_, rl)| rl).collect())
}

pub fn enumerate_mv_keyed(n: usize) -> Result<Vec<(CanonicalKey, ResLattice)>, CensusError> {
    check_order(n, MV_CAP)?;
    let mut all = vec![lukasiewicz_chain(n)];
    for f in factorizations(n) {
        let factors: Vec<ResLattice> = f.iter().map(|&k| lukasiewicz_chain(k)).collect();
        all.push(direct_product(&factors));
    }
    Ok(dedup(all))
}

/// BL-algebras of order `n`: the MV-algebras of order `n` together with
/// `C ⊠ B` for every BL-chain `C` of order `i` and BL-algebra `B` of order
/// `j`, `i + j = n + 1`.
pub fn enumerate_bl_ordinal(n: usize) -> Result<Vec<ResLattice>, CensusError> {
    Ok(enumerate_bl_ordinal_keyed(n)?
        .into_iter()
        .map(|(_, rl)| rl)
        .collect())
}

pub fn enumerate_bl_ordinal_keyed(n: usize) -> Result<Vec<(CanonicalKey, ResLattice)>, CensusError> {
    check_order(n, BL_ORDINAL_CAP)?;
    // levels[m] holds the BL-algebras of order m
    let mut levels: Vec<Vec<(CanonicalKey, ResLattice)>> = vec![Vec::new(), Vec::new()];
    for m in 2..=n {
        let mut all: Vec<ResLattice> = enumerate_mv(m)?;
        for i in 2..m {
            let j = m + 1 - i;
            for (_, c) in levels[i].iter().filter(|(_, c)| is_chain(c)) {
                for (_, b) in &levels[j] {
                    all.push(ordinal_product(c, b));
                }
            }
        }
        levels.push(dedup(all));
    }
    Ok(levels.pop().expect("level n"))
}

fn check_order(n: usize, cap: usize) -> Result<(), CensusError> {
    if n < 2 {
        return Err(CensusError::OrderTooSmall(n));
    }
    if n > cap {
        return Err(CensusError::CapExceeded { n, cap });
    }
    Ok(())
}
