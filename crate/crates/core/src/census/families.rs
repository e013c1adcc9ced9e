use crate::lattice::ResLattice;

fn chain(k: usize, odot: impl Fn(usize, usize) -> usize) -> ResLattice {
    assert!(k >= 2, "a chain needs at least two elements");
    let names = (0..k).map(|i| i.to_string()).collect();
    let leq = (0..k).map(|i| (0..k).map(|j| i <= j).collect()).collect();
    let table = (0..k).map(|i| (0..k).map(|j| odot(i, j)).collect()).collect();
    ResLattice::new(names, leq, table).expect("chain tables are residuated")
}

/// `Ł_k` on `0..k`: `x ⊙ y = max(0, x + y - (k-1))`, and
/// `x → y = min(k-1, k-1 - x + y)`.
pub fn lukasiewicz_chain(k: usize) -> ResLattice {
    let rl = chain(k, |x, y| (x + y).saturating_sub(k - 1));
    debug_assert!(rl
        .elements()
        .all(|x| rl.elements().all(|y| rl.imp(x, y) == (k - 1).min(k - 1 - x + y))));
    rl
}

/// The `k`-chain with `⊙ = min`.
pub fn godel_chain(k: usize) -> ResLattice {
    chain(k, usize::min)
}
