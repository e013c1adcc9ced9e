use std::collections::BTreeSet;
use std::fmt;

use super::{
    enumerate_bl_ordinal_keyed, enumerate_mv_keyed, enumerate_reslat_oracle_keyed,
    multiplicative_partitions, CanonicalKey, CensusError,
};
use crate::lattice::{is_bl, is_chain, is_mv, ResLattice};

/// Known counts `(n, BL, BL-chains, MV, MV-chains)` for orders 2 to 5.
pub const REFERENCE_COUNTS: [(usize, usize, usize, usize, usize); 4] = [
    (2, 1, 1, 1, 1),
    (3, 2, 2, 1, 1),
    (4, 5, 4, 2, 1),
    (5, 9, 8, 1, 1),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counts {
    pub bl: usize,
    pub bl_chains: usize,
    pub mv: usize,
    pub mv_chains: usize,
}

impl Counts {
    fn tally<'a>(algebras: impl IntoIterator<Item = &'a ResLattice>) -> Self {
        let mut c = Counts::default();
        for rl in algebras {
            if !is_bl(rl) {
                continue;
            }
            let chain = is_chain(rl);
            let mv = is_mv(rl).verdict("mv");
            c.bl += 1;
            c.bl_chains += chain as usize;
            c.mv += mv as usize;
            c.mv_chains += (mv && chain) as usize;
        }
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub pi: usize,
    /// Counts from the MV construction and ordinal products.
    pub generator: Counts,
    /// Counts from the brute-force oracle.
    pub oracle: Counts,
    /// The two routes produce the same set of canonical keys, for the
    /// BL-algebras and separately for the MV-algebras.
    pub keys_match: bool,
    pub reference: Option<Counts>,
}

impl CensusRow {
    pub fn matches_reference(&self) -> Option<bool> {
        self.reference
            .map(|r| r == self.generator && r == self.oracle)
    }
}

impl fmt::Display for CensusRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.generator;
        let o = self.oracle;
        write!(
            f,
            "n={} pi={} generator: bl={} bl-chains={} mv={} mv-chains={} | oracle: bl={} bl-chains={} mv={} mv-chains={} | keys {}",
            self.n,
            self.pi,
            g.bl,
            g.bl_chains,
            g.mv,
            g.mv_chains,
            o.bl,
            o.bl_chains,
            o.mv,
            o.mv_chains,
            if self.keys_match { "match" } else { "DIFFER" }
        )?;
        if let Some(m) = self.matches_reference() {
            write!(f, " | reference {}", if m { "match" } else { "MISMATCH" })?;
        }
        Ok(())
    }
}

/// Census rows for `n = 2..=n_max`, each computed both ways.
pub fn census_table(n_max: usize) -> Result<Vec<CensusRow>, CensusError> {
    (2..=n_max).map(census_row).collect()
}

pub fn census_row(n: usize) -> Result<CensusRow, CensusError> {
    let bl = enumerate_bl_ordinal_keyed(n)?;
    let mv = enumerate_mv_keyed(n)?;
    let oracle = enumerate_reslat_oracle_keyed(n)?;

    let keys = |items: &mut dyn Iterator<Item = &(CanonicalKey, ResLattice)>| -> BTreeSet<CanonicalKey> {
        items.map(|(k, _)| k.clone()).collect()
    };
    let oracle_bl = keys(&mut oracle.iter().filter(|(_, rl)| is_bl(rl)));
    let oracle_mv = keys(&mut oracle.iter().filter(|(_, rl)| is_mv(rl).verdict("mv")));
    let keys_match = keys(&mut bl.iter()) == oracle_bl && keys(&mut mv.iter()) == oracle_mv;

    let reference = REFERENCE_COUNTS
        .iter()
        .find(|r| r.0 == n)
        .map(|&(_, bl, bl_chains, mv, mv_chains)| Counts {
            bl,
            bl_chains,
            mv,
            mv_chains,
        });
    Ok(CensusRow {
        n,
        pi: multiplicative_partitions(n),
        generator: Counts::tally(bl.iter().map(|(_, rl)| rl)),
        oracle: Counts::tally(oracle.iter().map(|(_, rl)| rl)),
        keys_match,
        reference,
    })
}
