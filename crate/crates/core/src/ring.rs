//! Finite commutative unital rings built from `Z_n`, direct products and
//! truncated polynomial quotients `R[X]/(X^k)`.
//!
//! Elements are dense ids `0..size`. Arithmetic is evaluated on demand from
//! the encoding, so no `|R|^2` tables are ever stored:
//!
//! * `Z_n`: the residue itself.
//! * products: mixed-radix tuple index, first factor most significant.
//! * `R[X]/(X^k)`: base-`|R|` digits `a_0 + a_1 |R| + ...` for the
//!   polynomial `a_0 + a_1 X + ... + a_{k-1} X^{k-1}`.

use std::fmt;

use thiserror::Error;

/// Element id inside a [`FinRing`].
pub type Elem = usize;

/// Default upper bound on ring carrier size.
pub const DEFAULT_SIZE_CAP: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring of size {size} exceeds the size cap {cap}")]
    SizeCapExceeded { size: u128, cap: usize },
    #[error("malformed ring expression: {0}")]
    MalformedSpec(String),
}

/// Syntax tree of a finite commutative ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    Product(Vec<RingExpr>),
    /// `base[X]/(X^degree)`
    PolyQuot(Box<RingExpr>, usize),
}

impl RingExpr {
    pub fn zn(n: usize) -> Self {
        RingExpr::Zn(n)
    }

    pub fn product(factors: Vec<RingExpr>) -> Self {
        RingExpr::Product(factors)
    }

    pub fn poly_quot(base: RingExpr, degree: usize) -> Self {
        RingExpr::PolyQuot(Box::new(base), degree)
    }

    /// Carrier size without any cap, or `None` on overflow.
    pub fn carrier_size(&self) -> Option<u128> {
        match self {
            RingExpr::Zn(n) => Some(*n as u128),
            RingExpr::Product(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| acc.checked_mul(f.carrier_size()?)),
            RingExpr::PolyQuot(base, k) => {
                let b = base.carrier_size()?;
                let mut acc = 1u128;
                for _ in 0..*k {
                    acc = acc.checked_mul(b)?;
                }
                Some(acc)
            }
        }
    }

    fn check_well_formed(&self) -> Result<(), RingError> {
        match self {
            RingExpr::Zn(n) if *n < 2 => Err(RingError::MalformedSpec(format!(
                "Z{n}: modulus must be at least 2"
            ))),
            RingExpr::Zn(_) => Ok(()),
            RingExpr::Product(fs) if fs.is_empty() => Err(RingError::MalformedSpec(
                "empty direct product".to_string(),
            )),
            RingExpr::Product(fs) => fs.iter().try_for_each(|f| f.check_well_formed()),
            RingExpr::PolyQuot(_, k) if *k < 2 => Err(RingError::MalformedSpec(format!(
                "[X]/(X^{k}): degree must be at least 2"
            ))),
            RingExpr::PolyQuot(base, _) => base.check_well_formed(),
        }
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z{n}"),
            RingExpr::Product(fs) => {
                for (i, factor) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    match factor {
                        RingExpr::Product(_) => write!(f, "({factor})")?,
                        _ => write!(f, "{factor}")?,
                    }
                }
                Ok(())
            }
            RingExpr::PolyQuot(base, k) => match **base {
                RingExpr::Product(_) => write!(f, "({base})[X]/(X^{k})"),
                _ => write!(f, "{base}[X]/(X^{k})"),
            },
        }
    }
}

#[derive(Debug, Clone)]
enum Node {
    Zn(usize),
    Product {
        factors: Vec<Node>,
        sizes: Vec<usize>,
    },
    PolyQuot {
        base: Box<Node>,
        base_size: usize,
        degree: usize,
    },
}

impl Node {
    fn from_expr(expr: &RingExpr) -> (Node, usize) {
        match expr {
            RingExpr::Zn(n) => (Node::Zn(*n), *n),
            RingExpr::Product(fs) => {
                let (factors, sizes): (Vec<_>, Vec<_>) = fs.iter().map(Node::from_expr).unzip();
                let size = sizes.iter().product();
                (Node::Product { factors, sizes }, size)
            }
            RingExpr::PolyQuot(base, k) => {
                let (base, base_size) = Node::from_expr(base);
                let node = Node::PolyQuot {
                    base: Box::new(base),
                    base_size,
                    degree: *k,
                };
                (node, base_size.pow(*k as u32))
            }
        }
    }

    fn one(&self) -> Elem {
        match self {
            Node::Zn(_) => 1,
            Node::Product { factors, sizes } => {
                let ones: Vec<Elem> = factors.iter().map(Node::one).collect();
                encode_tuple(&ones, sizes)
            }
            // constant term is the least significant digit
            Node::PolyQuot { base, .. } => base.one(),
        }
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Node::Zn(n) => (a + b) % n,
            Node::Product { factors, sizes } => {
                let xs = decode_tuple(a, sizes);
                let ys = decode_tuple(b, sizes);
                let zs: Vec<Elem> = factors
                    .iter()
                    .zip(xs.iter().zip(&ys))
                    .map(|(f, (&x, &y))| f.add(x, y))
                    .collect();
                encode_tuple(&zs, sizes)
            }
            Node::PolyQuot {
                base,
                base_size,
                degree,
            } => {
                let xs = decode_digits(a, *base_size, *degree);
                let ys = decode_digits(b, *base_size, *degree);
                let zs: Vec<Elem> = xs.iter().zip(&ys).map(|(&x, &y)| base.add(x, y)).collect();
                encode_digits(&zs, *base_size)
            }
        }
    }

    fn neg(&self, a: Elem) -> Elem {
        match self {
            Node::Zn(n) => (n - a) % n,
            Node::Product { factors, sizes } => {
                let xs = decode_tuple(a, sizes);
                let zs: Vec<Elem> = factors.iter().zip(&xs).map(|(f, &x)| f.neg(x)).collect();
                encode_tuple(&zs, sizes)
            }
            Node::PolyQuot {
                base,
                base_size,
                degree,
            } => {
                let xs = decode_digits(a, *base_size, *degree);
                let zs: Vec<Elem> = xs.iter().map(|&x| base.neg(x)).collect();
                encode_digits(&zs, *base_size)
            }
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match self {
            Node::Zn(n) => (a * b) % n,
            Node::Product { factors, sizes } => {
                let xs = decode_tuple(a, sizes);
                let ys = decode_tuple(b, sizes);
                let zs: Vec<Elem> = factors
                    .iter()
                    .zip(xs.iter().zip(&ys))
                    .map(|(f, (&x, &y))| f.mul(x, y))
                    .collect();
                encode_tuple(&zs, sizes)
            }
            Node::PolyQuot {
                base,
                base_size,
                degree,
            } => {
                let xs = decode_digits(a, *base_size, *degree);
                let ys = decode_digits(b, *base_size, *degree);
                // X^degree = 0: drop every term of total degree >= degree
                let mut zs = vec![0; *degree];
                for (i, &x) in xs.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in ys.iter().enumerate().take(degree - i) {
                        zs[i + j] = base.add(zs[i + j], base.mul(x, y));
                    }
                }
                encode_digits(&zs, *base_size)
            }
        }
    }

    fn label(&self, a: Elem) -> String {
        match self {
            Node::Zn(_) => a.to_string(),
            Node::Product { factors, sizes } => {
                let xs = decode_tuple(a, sizes);
                let parts: Vec<String> = factors.iter().zip(&xs).map(|(f, &x)| f.label(x)).collect();
                format!("({})", parts.join(","))
            }
            Node::PolyQuot {
                base,
                base_size,
                degree,
            } => {
                let xs = decode_digits(a, *base_size, *degree);
                let one = base.one();
                let mut terms = Vec::new();
                for (i, &c) in xs.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let coeff = base.label(c);
                    let coeff = if coeff.contains('+') {
                        format!("({coeff})")
                    } else {
                        coeff
                    };
                    let term = match i {
                        0 => coeff,
                        _ => {
                            let power = if i == 1 {
                                "X".to_string()
                            } else {
                                format!("X^{i}")
                            };
                            if c == one {
                                power
                            } else {
                                format!("{coeff}{power}")
                            }
                        }
                    };
                    terms.push(term);
                }
                if terms.is_empty() {
                    base.label(0)
                } else {
                    terms.join("+")
                }
            }
        }
    }
}

fn decode_tuple(mut a: Elem, sizes: &[usize]) -> Vec<Elem> {
    let mut out = vec![0; sizes.len()];
    for (slot, &s) in out.iter_mut().zip(sizes).rev() {
        *slot = a % s;
        a /= s;
    }
    out
}

fn encode_tuple(xs: &[Elem], sizes: &[usize]) -> Elem {
    xs.iter().zip(sizes).fold(0, |acc, (&x, &s)| acc * s + x)
}

fn decode_digits(mut a: Elem, base: usize, len: usize) -> Vec<Elem> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(a % base);
        a /= base;
    }
    out
}

fn encode_digits(xs: &[Elem], base: usize) -> Elem {
    xs.iter().rev().fold(0, |acc, &x| acc * base + x)
}

/// A concrete finite commutative unital ring. Immutable after construction.
#[derive(Debug, Clone)]
pub struct FinRing {
    expr: RingExpr,
    node: Node,
    size: usize,
    one: Elem,
}

/// A failed ring axiom together with the offending elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub law: &'static str,
    pub elems: Vec<Elem>,
}

impl FinRing {
    pub fn expr(&self) -> &RingExpr {
        &self.expr
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.node.add(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.node.neg(a)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.node.mul(a, b)
    }

    pub fn label(&self, a: Elem) -> String {
        self.node.label(a)
    }

    /// Looks up an element by its label.
    pub fn element_by_label(&self, label: &str) -> Option<Elem> {
        self.elements().find(|&a| self.label(a) == label)
    }

    /// Exhaustive scan of the commutative-ring axioms. `O(|R|^3)`, so meant
    /// for small rings only.
    pub fn check_axioms(&self) -> Result<(), AxiomViolation> {
        let fail = |law, elems: &[Elem]| {
            Err(AxiomViolation {
                law,
                elems: elems.to_vec(),
            })
        };
        if self.one == self.zero() {
            return fail("zero_ne_one", &[]);
        }
        for a in self.elements() {
            if self.add(a, 0) != a {
                return fail("additive_identity", &[a]);
            }
            if self.mul(a, self.one) != a {
                return fail("multiplicative_identity", &[a]);
            }
            if self.add(a, self.neg(a)) != 0 {
                return fail("additive_inverse", &[a]);
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive_commutativity", &[a, b]);
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return fail("multiplicative_commutativity", &[a, b]);
                }
                for c in self.elements() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return fail("additive_associativity", &[a, b, c]);
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return fail("multiplicative_associativity", &[a, b, c]);
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity", &[a, b, c]);
                    }
                }
            }
        }
        Ok(())
    }
}

/// Builds the ring denoted by `spec`, refusing carriers larger than `size_cap`.
pub fn build_ring(spec: &RingExpr, size_cap: usize) -> Result<FinRing, RingError> {
    spec.check_well_formed()?;
    let size = spec.carrier_size().unwrap_or(u128::MAX);
    if size > size_cap as u128 {
        return Err(RingError::SizeCapExceeded {
            size,
            cap: size_cap,
        });
    }
    let (node, size) = Node::from_expr(spec);
    let one = node.one();
    Ok(FinRing {
        expr: spec.clone(),
        node,
        size,
        one,
    })
}

/// All invertible elements, found by exhaustive search.
pub fn ring_units(ring: &FinRing) -> Vec<Elem> {
    ring.elements()
        .filter(|&a| ring.elements().any(|b| ring.mul(a, b) == ring.one()))
        .collect()
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        assert_eq!(factorize(360), [(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(97), [(97, 1)]);
        assert!(factorize(1).is_empty());
    }

    fn ring(expr: RingExpr) -> FinRing {
        build_ring(&expr, DEFAULT_SIZE_CAP).unwrap()
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn z6_basics() {
        let r = ring(RingExpr::zn(6));
        assert_eq!(r.size(), 6);
        assert_eq!(r.zero(), 0);
        assert_eq!(r.one(), 1);
        assert_eq!(r.mul(4, 5), 2);
        assert_eq!(r.neg(2), 4);
    }

    #[test]
    fn dual_numbers_over_z6() {
        let r = ring(RingExpr::poly_quot(RingExpr::zn(6), 2));
        assert_eq!(r.size(), 36);
        let x = r.element_by_label("X").unwrap();
        assert_eq!(x, 6);
        assert_eq!(r.mul(x, x), 0);
        let a = r.element_by_label("3+2X").unwrap();
        assert_eq!(a, 3 + 2 * 6);
        // (3+2X)(3+2X) = 9 + 12X = 3
        assert_eq!(r.label(r.mul(a, a)), "3");
    }

    #[test]
    fn product_of_two_fields() {
        let r = ring(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(2)]));
        let labels: Vec<String> = r.elements().map(|a| r.label(a)).collect();
        assert_eq!(labels, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        assert_eq!(r.one(), 3);
        assert_eq!(r.mul(1, 2), 0);
    }

    #[test]
    fn cubic_truncation() {
        let r = ring(RingExpr::poly_quot(RingExpr::zn(3), 3));
        let x = r.element_by_label("X").unwrap();
        let x2 = r.mul(x, x);
        assert_eq!(r.label(x2), "X^2");
        assert_eq!(r.mul(x2, x), 0);
    }

    #[test]
    fn axioms_hold_on_small_rings() {
        for expr in [
            RingExpr::zn(2),
            RingExpr::zn(12),
            RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(4)]),
            RingExpr::poly_quot(RingExpr::zn(4), 2),
            RingExpr::poly_quot(RingExpr::zn(2), 3),
            RingExpr::poly_quot(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(2)]), 2),
        ] {
            assert_eq!(ring(expr.clone()).check_axioms(), Ok(()), "{expr}");
        }
    }

    #[test]
    fn units() {
        assert_eq!(ring_units(&ring(RingExpr::zn(6))), vec![1, 5]);
        assert_eq!(ring_units(&ring(RingExpr::zn(5))), vec![1, 2, 3, 4]);
        let r = ring(RingExpr::poly_quot(RingExpr::zn(2), 2));
        let labels: Vec<String> = ring_units(&r).into_iter().map(|u| r.label(u)).collect();
        assert_eq!(labels, ["1", "1+X"]);
    }

    #[test]
    fn unit_count_is_totient() {
        for n in 2..=60 {
            let phi = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(ring_units(&ring(RingExpr::zn(n))).len(), phi, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(matches!(
            build_ring(&RingExpr::zn(1), DEFAULT_SIZE_CAP),
            Err(RingError::MalformedSpec(_))
        ));
        assert!(matches!(
            build_ring(&RingExpr::poly_quot(RingExpr::zn(3), 1), DEFAULT_SIZE_CAP),
            Err(RingError::MalformedSpec(_))
        ));
        assert!(matches!(
            build_ring(&RingExpr::product(vec![]), DEFAULT_SIZE_CAP),
            Err(RingError::MalformedSpec(_))
        ));
        assert!(matches!(
            build_ring(&RingExpr::poly_quot(RingExpr::zn(100), 2), DEFAULT_SIZE_CAP),
            Err(RingError::SizeCapExceeded { size: 10000, .. })
        ));
        assert!(build_ring(&RingExpr::poly_quot(RingExpr::zn(30), 2), DEFAULT_SIZE_CAP).is_ok());
    }

    #[test]
    fn display() {
        let e = RingExpr::poly_quot(RingExpr::product(vec![RingExpr::zn(2), RingExpr::zn(3)]), 2);
        assert_eq!(e.to_string(), "(Z2 x Z3)[X]/(X^2)");
    }
}
