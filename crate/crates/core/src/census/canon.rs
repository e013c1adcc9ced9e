//! Canonical keys by individualization and refinement.
//!
//! Elements are colored by isomorphism-invariant data and the coloring is
//! refined until stable. Non-singleton color classes are then split by
//! trying each member as the first of its class, recursively. Every
//! discrete leaf coloring orders the carrier; the key is the smallest
//! serialization of `(leq, odot)` over all leaves. Since every step depends
//! only on the structure, isomorphic algebras produce the same set of leaf
//! serializations, and a serialization determines the tables up to
//! relabeling.

use std::collections::BTreeMap;

use crate::lattice::ResLattice;

/// Isomorphism fingerprint: equal keys exactly for isomorphic algebras.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Carrier size recorded in the key.
    pub fn size(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }
}

fn initial_colors(rl: &ResLattice) -> Vec<usize> {
    let sig: Vec<(usize, usize, bool)> = rl
        .elements()
        .map(|x| (rl.down_set_size(x), rl.up_set_size(x), rl.odot(x, x) == x))
        .collect();
    rank(&sig)
}

/// Replaces each signature by its rank among the distinct signatures.
fn rank<T: Ord + Clone>(sig: &[T]) -> Vec<usize> {
    let mut distinct: Vec<T> = sig.to_vec();
    distinct.sort();
    distinct.dedup();
    sig.iter()
        .map(|s| distinct.binary_search(s).expect("present"))
        .collect()
}

fn class_count(colors: &[usize]) -> usize {
    let mut seen = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Refines until the number of classes stops growing.
fn refine(rl: &ResLattice, mut colors: Vec<usize>) -> Vec<usize> {
    let mut classes = class_count(&colors);
    loop {
        let sig: Vec<(usize, Vec<(usize, bool, bool, usize)>)> = rl
            .elements()
            .map(|x| {
                let mut nbrs: Vec<_> = rl
                    .elements()
                    .map(|y| (colors[y], rl.leq(x, y), rl.leq(y, x), colors[rl.odot(x, y)]))
                    .collect();
                nbrs.sort_unstable();
                (colors[x], nbrs)
            })
            .collect();
        let next = rank(&sig);
        let next_classes = class_count(&next);
        if next_classes == classes {
            return colors;
        }
        colors = next;
        classes = next_classes;
    }
}

/// Writes the tables with element `order[k]` at position `k`.
fn serialize(rl: &ResLattice, order: &[usize]) -> Vec<u8> {
    let n = rl.size();
    let mut pos = vec![0; n];
    for (k, &e) in order.iter().enumerate() {
        pos[e] = k;
    }
    let mut out = Vec::with_capacity(2 + n * n * 3);
    out.extend_from_slice(&(n as u16).to_be_bytes());
    for &a in order {
        for &b in order {
            out.push(rl.leq(a, b) as u8);
        }
    }
    for &a in order {
        for &b in order {
            out.extend_from_slice(&(pos[rl.odot(a, b)] as u16).to_be_bytes());
        }
    }
    out
}

/// Calls `visit` with the carrier order of every leaf of the search tree,
/// stopping early when it returns `true`.
fn walk_leaves(rl: &ResLattice, colors: Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    let n = rl.size();
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        cells.entry(colors[x]).or_default().push(x);
    }
    // smallest non-singleton class, ties broken by color
    let target = cells
        .iter()
        .filter(|(_, members)| members.len() > 1)
        .min_by_key(|(c, members)| (members.len(), **c));
    let Some((&c, members)) = target else {
        let mut order = vec![0; n];
        for x in 0..n {
            order[colors[x]] = x;
        }
        return visit(&order);
    };
    for &x in members {
        // x comes first in its class
        let split: Vec<usize> = (0..n)
            .map(|y| {
                let base = if colors[y] > c { colors[y] + 1 } else { colors[y] };
                if colors[y] == c && y != x {
                    base + 1
                } else {
                    base
                }
            })
            .collect();
        if walk_leaves(rl, refine(rl, split), visit) {
            return true;
        }
    }
    false
}

pub fn canonical_key(rl: &ResLattice) -> CanonicalKey {
    let mut best: Option<Vec<u8>> = None;
    walk_leaves(rl, refine(rl, initial_colors(rl)), &mut |order| {
        let code = serialize(rl, order);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
        false
    });
    CanonicalKey(best.expect("at least one leaf"))
}

/// `rl` relabeled into the carrier order that produces its canonical key.
pub fn canonical_form(rl: &ResLattice) -> ResLattice {
    let key = canonical_key(rl);
    let mut found = None;
    walk_leaves(rl, refine(rl, initial_colors(rl)), &mut |order| {
        if serialize(rl, order) == key.0 {
            found = Some(order.to_vec());
            return true;
        }
        false
    });
    let order = found.expect("canonical leaf exists");
    let mut perm = vec![0; rl.size()];
    for (k, &e) in order.iter().enumerate() {
        perm[e] = k;
    }
    rl.permuted(&perm)
}
