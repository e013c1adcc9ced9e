//! Ordinal product `L1 ⊠ L2`: `L2` stacked on top of `L1` with the top of
//! `L1` glued to the bottom of `L2`.
//!
//! Ids `0..n1` are the elements of `L1` (the glued element keeps the id of
//! `1₁`); the elements of `L2` other than `0₂` follow as `n1..n1+n2-1`.

use crate::lattice::{validate, ResLattice};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Left(usize),
    Right(usize),
}

pub fn ordinal_product(l1: &ResLattice, l2: &ResLattice) -> ResLattice {
    let (n1, n2) = (l1.size(), l2.size());
    let n = n1 + n2 - 1;
    let top1 = l1.top();
    let bot2 = l2.bot();

    // L2 ids skipping bot2, in original order
    let right_ids: Vec<usize> = l2.elements().filter(|&y| y != bot2).collect();
    let side = |e: usize| -> Side {
        if e < n1 {
            Side::Left(e)
        } else {
            Side::Right(right_ids[e - n1])
        }
    };
    let id_of_right = |y: usize| -> usize {
        if y == bot2 {
            top1
        } else {
            n1 + right_ids.iter().position(|&r| r == y).expect("element of L2")
        }
    };
    // every element viewed inside L2, when it belongs there
    let as_right = |e: usize| -> Option<usize> {
        match side(e) {
            Side::Left(x) if x == top1 => Some(bot2),
            Side::Left(_) => None,
            Side::Right(y) => Some(y),
        }
    };

    let leq = |a: usize, b: usize| -> bool {
        match (side(a), side(b)) {
            (Side::Left(x), Side::Left(y)) => l1.leq(x, y),
            (Side::Left(_), Side::Right(_)) => true,
            (Side::Right(_), Side::Left(_)) => false,
            (Side::Right(x), Side::Right(y)) => l2.leq(x, y),
        }
    };

    let odot = |a: usize, b: usize| -> usize {
        match (as_right(a), as_right(b)) {
            (Some(x), Some(y)) => id_of_right(l2.odot(x, y)),
            _ => match (side(a), side(b)) {
                (Side::Left(x), Side::Left(y)) => l1.odot(x, y),
                // one side is in L1 \ {1₁}, the other in L2
                (Side::Left(x), _) => x,
                (_, Side::Left(y)) => y,
                _ => unreachable!(),
            },
        }
    };

    let imp = |a: usize, b: usize| -> usize {
        if leq(a, b) {
            return id_of_right(l2.top());
        }
        if let (Some(x), Some(y)) = (as_right(a), as_right(b)) {
            return id_of_right(l2.imp(x, y));
        }
        match (side(a), side(b)) {
            (Side::Left(x), Side::Left(y)) => l1.imp(x, y),
            // x in L2 \ {0₂}, y in L1 \ {1₁}
            (Side::Right(_), Side::Left(_)) => b,
            (_, Side::Right(_)) => unreachable!("both lie in L2"),
        }
    };

    let mut names: Vec<String> = l1.names().iter().map(|s| format!("l:{s}")).collect();
    names.extend(right_ids.iter().map(|&y| format!("r:{}", l2.name(y))));
    let leq_rows = (0..n).map(|a| (0..n).map(|b| leq(a, b)).collect()).collect();
    let odot_rows = (0..n).map(|a| (0..n).map(|b| odot(a, b)).collect()).collect();
    let imp_rows = (0..n).map(|a| (0..n).map(|b| imp(a, b)).collect()).collect();

    let product = ResLattice::from_parts(names, leq_rows, odot_rows, imp_rows)
        .unwrap_or_else(|e| panic!("internal error: ordinal product is malformed: {e}"));
    let report = validate(&product);
    assert!(
        report.verdict("residuated_lattice"),
        "internal error: ordinal product is not a residuated lattice:\n{report}"
    );
    let derived = product.derived_imp().expect("validated lattice has a residuum");
    assert_eq!(
        derived,
        product.imp_rows(),
        "internal error: ordinal product residuum differs from the derived one"
    );
    product
}
