//! Brute-force enumeration of residuated lattices of a given order, from
//! nothing but the axioms. Shares no construction code with the
//! generators: lattice orders are enumerated as relations, products as
//! partially filled tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use super::{canonical_key, CanonicalKey, CensusError};
use crate::lattice::{derive_residuum, is_bl, is_chain, is_mv, ResLattice};

/// Largest order the oracle accepts.
pub const ORACLE_CAP: usize = 6;

/// Which algebras to keep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Filter {
    All,
    Bl,
    Mv,
    Chain,
    BlChain,
    MvChain,
}

impl Filter {
    pub fn admits(self, rl: &ResLattice) -> bool {
        match self {
            Filter::All => true,
            Filter::Bl => is_bl(rl),
            Filter::Mv => is_mv(rl).verdict("mv"),
            Filter::Chain => is_chain(rl),
            Filter::BlChain => is_chain(rl) && is_bl(rl),
            Filter::MvChain => is_chain(rl) && is_mv(rl).verdict("mv"),
        }
    }
}

impl FromStr for Filter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => Filter::All,
            "bl" => Filter::Bl,
            "mv" => Filter::Mv,
            "chain" => Filter::Chain,
            "bl-chain" => Filter::BlChain,
            "mv-chain" => Filter::MvChain,
            _ => return Err(format!("unknown filter {s:?} (all, bl, mv, chain, bl-chain, mv-chain)")),
        })
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::Bl => "bl",
            Filter::Mv => "mv",
            Filter::Chain => "chain",
            Filter::BlChain => "bl-chain",
            Filter::MvChain => "mv-chain",
        })
    }
}

pub fn enumerate_reslat_oracle(n: usize, filter: Filter) -> Result<Vec<ResLattice>, CensusError> {
    Ok(enumerate_reslat_oracle_keyed(n)?
        .into_iter()
        .filter(|(_, rl)| filter.admits(rl))
        .map(|(_, rl)| rl)
        .collect())
}

/// Every residuated lattice of order `n` up to isomorphism, sorted by key.
pub fn enumerate_reslat_oracle_keyed(n: usize) -> Result<Vec<(CanonicalKey, ResLattice)>, CensusError> {
    if n < 2 {
        return Err(CensusError::OrderTooSmall(n));
    }
    if n > ORACLE_CAP {
        return Err(CensusError::CapExceeded { n, cap: ORACLE_CAP });
    }
    let mut found: BTreeMap<CanonicalKey, ResLattice> = BTreeMap::new();
    for leq in lattice_orders(n) {
        let mut search = ProductSearch::new(n, leq);
        search.run(&mut |leq, table| {
            let Ok(_) = derive_residuum(n, leq, table) else {
                return;
            };
            let names = (0..n).map(|i| i.to_string()).collect();
            let rows = |flat: &[usize]| flat.chunks(n).map(<[usize]>::to_vec).collect();
            let leq_rows = leq.chunks(n).map(<[bool]>::to_vec).collect();
            let rl = ResLattice::new(names, leq_rows, rows(table))
                .expect("search only emits residuated tables");
            found.entry(canonical_key(&rl)).or_insert(rl);
        });
    }
    Ok(found.into_iter().collect())
}

/// Lattice orders on `0..n` with `0` least and `n-1` greatest, one per
/// isomorphism class, as flat `n*n` matrices.
fn lattice_orders(n: usize) -> Vec<Vec<bool>> {
    let inner: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&a| inner.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    let mut classes: BTreeMap<Vec<bool>, Vec<bool>> = BTreeMap::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true;
            leq[x * n + n - 1] = true;
        }
        for (bit, &(a, b)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                leq[a * n + b] = true;
            }
        }
        if !is_lattice_order(n, &leq) {
            continue;
        }
        // smallest relabeling of the inner elements
        let canon = inner
            .iter()
            .copied()
            .permutations(inner.len())
            .map(|perm| {
                let relabel = |x: usize| if x == 0 || x == n - 1 { x } else { perm[x - 1] };
                let mut out = vec![false; n * n];
                for x in 0..n {
                    for y in 0..n {
                        out[relabel(x) * n + relabel(y)] = leq[x * n + y];
                    }
                }
                out
            })
            .min()
            .expect("at least the identity permutation");
        classes.entry(canon).or_insert(leq);
    }
    classes.into_values().collect()
}

fn is_lattice_order(n: usize, leq: &[bool]) -> bool {
    let le = |x: usize, y: usize| leq[x * n + y];
    for x in 0..n {
        for y in 0..n {
            if x != y && le(x, y) && le(y, x) {
                return false;
            }
            for z in 0..n {
                if le(x, y) && le(y, z) && !le(x, z) {
                    return false;
                }
            }
        }
    }
    // every pair needs a greatest lower bound and a least upper bound
    (0..n).all(|x| {
        (0..n).all(|y| {
            let lower: Vec<usize> = (0..n).filter(|&z| le(z, x) && le(z, y)).collect();
            let upper: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
            lower.iter().any(|&m| lower.iter().all(|&z| le(z, m)))
                && upper.iter().any(|&j| upper.iter().all(|&z| le(j, z)))
        })
    })
}

const UNSET: usize = usize::MAX;

/// Backtracking over commutative, monotone, associative products with the
/// top as identity.
struct ProductSearch {
    n: usize,
    leq: Vec<bool>,
    table: Vec<usize>,
    /// cells `(x, y)` with `x <= y` (as ids) among the inner elements
    cells: Vec<(usize, usize)>,
    /// allowed values per cell: everything below both arguments
    domains: Vec<Vec<usize>>,
}

impl ProductSearch {
    fn new(n: usize, leq: Vec<bool>) -> Self {
        let top = n - 1;
        let mut table = vec![UNSET; n * n];
        for x in 0..n {
            table[x] = 0;
            table[x * n] = 0;
            table[top * n + x] = x;
            table[x * n + top] = x;
        }
        let cells: Vec<(usize, usize)> = (1..top)
            .flat_map(|x| (x..top).map(move |y| (x, y)))
            .collect();
        let domains = cells
            .iter()
            .map(|&(x, y)| {
                (0..n)
                    .filter(|&z| leq[z * n + x] && leq[z * n + y])
                    .collect()
            })
            .collect();
        ProductSearch {
            n,
            leq,
            table,
            cells,
            domains,
        }
    }

    fn run(&mut self, emit: &mut dyn FnMut(&[bool], &[usize])) {
        if self.consistent() {
            self.fill(0, emit);
        }
    }

    fn fill(&mut self, k: usize, emit: &mut dyn FnMut(&[bool], &[usize])) {
        if k == self.cells.len() {
            emit(&self.leq, &self.table);
            return;
        }
        let (x, y) = self.cells[k];
        let n = self.n;
        for i in 0..self.domains[k].len() {
            let z = self.domains[k][i];
            self.table[x * n + y] = z;
            self.table[y * n + x] = z;
            if self.consistent() {
                self.fill(k + 1, emit);
            }
        }
        self.table[x * n + y] = UNSET;
        self.table[y * n + x] = UNSET;
    }

    /// Monotonicity and associativity over every fully known instance.
    fn consistent(&self) -> bool {
        let n = self.n;
        let t = |a: usize, b: usize| self.table[a * n + b];
        let le = |a: usize, b: usize| self.leq[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = t(a, b);
                if ab == UNSET {
                    continue;
                }
                for c in 0..n {
                    // a <= c implies a ⊙ b <= c ⊙ b
                    let cb = t(c, b);
                    if cb != UNSET && le(a, c) && !le(ab, cb) {
                        return false;
                    }
                    let bc = t(b, c);
                    if bc == UNSET {
                        continue;
                    }
                    let (left, right) = (t(ab, c), t(a, bc));
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}
