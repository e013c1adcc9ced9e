//! Isomorphism search by backtracking, independent of canonical keys.

use crate::lattice::ResLattice;

type Invariant = (usize, usize, bool, usize);

fn invariant(rl: &ResLattice, x: usize) -> Invariant {
    // number of y with x odot y = x
    let absorbs = rl.elements().filter(|&y| rl.odot(x, y) == x).count();
    (rl.down_set_size(x), rl.up_set_size(x), rl.odot(x, x) == x, absorbs)
}

/// A bijection `f` (indexed by elements of `a`) preserving the order and the
/// product, if one exists. Meets, joins, residua and constants are then
/// preserved as well.
pub fn are_isomorphic(a: &ResLattice, b: &ResLattice) -> Option<Vec<usize>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let inv_a: Vec<Invariant> = a.elements().map(|x| invariant(a, x)).collect();
    let inv_b: Vec<Invariant> = b.elements().map(|x| invariant(b, x)).collect();
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    // shallow elements first, so the bottom and its covers fix much early
    let mut order: Vec<usize> = a.elements().collect();
    order.sort_by_key(|&x| (inv_a[x].0, x));

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &inv_a, &inv_b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &ResLattice,
    b: &ResLattice,
    inv_a: &[Invariant],
    inv_b: &[Invariant],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    for y in b.elements() {
        if used[y] || inv_a[x] != inv_b[y] {
            continue;
        }
        map[x] = y;
        if consistent(a, b, map, &order[..=depth]) {
            used[y] = true;
            if extend(a, b, inv_a, inv_b, order, depth + 1, map, used) {
                return true;
            }
            used[y] = false;
        }
        map[x] = usize::MAX;
    }
    false
}

/// Checks every relation between the newest placed element and those placed
/// before it.
fn consistent(a: &ResLattice, b: &ResLattice, map: &[usize], placed: &[usize]) -> bool {
    let x = *placed.last().expect("nonempty");
    placed.iter().all(|&u| {
        let (fx, fu) = (map[x], map[u]);
        if a.leq(x, u) != b.leq(fx, fu) || a.leq(u, x) != b.leq(fu, fx) {
            return false;
        }
        let p = a.odot(x, u);
        map[p] == usize::MAX || map[p] == b.odot(fx, fu)
    }) && placed.iter().all(|&u| {
        // products landing on x that were computed from earlier elements
        placed.iter().all(|&v| {
            a.odot(u, v) != x || b.odot(map[u], map[v]) == map[x]
        })
    })
}
