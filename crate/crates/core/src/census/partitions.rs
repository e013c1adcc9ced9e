//! Unordered factorizations of an integer.

/// All multisets of integers `>= 2`, with at least two members, whose
/// product is `n`. Each factorization is listed in nondecreasing order.
pub fn factorizations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect(n, 2, &mut current, &mut out);
    out.retain(|f| f.len() >= 2);
    out
}

fn collect(n: usize, min: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if n == 1 {
        out.push(current.clone());
        return;
    }
    for d in min..=n {
        if d * d > n && d != n {
            continue;
        }
        if n.is_multiple_of(d) {
            current.push(d);
            collect(n / d, d, current, out);
            current.pop();
        }
    }
}

/// `π(n)`: the number of factorizations of `n` into at least two factors.
pub fn multiplicative_partitions(n: usize) -> usize {
    assert!(n >= 2, "π(n) needs n >= 2");
    factorizations(n).len()
}
