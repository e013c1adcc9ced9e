//! Finite commutative residuated lattices stored as explicit tables.
//!
//! A [`ResLattice`] is a carrier `0..n` with a partial order, the monoid
//! product `odot` and its residuum `imp`. Meets and joins are derived from
//! the order once, at construction.

mod laws;
mod mv;
mod report;

use thiserror::Error;

pub use laws::{
    check_bl_condition_implication, check_bl_identity, check_div, check_div_implication,
    check_prel, check_prel_implication, check_prel_meet_identity, check_product_below_meet,
    is_bl, is_chain, is_involutive, is_mv, validate,
};
pub use mv::{bl_from_mv, mv_from_bl, MvAlgebra, MvError};
pub use report::{Report, Witness, MAX_WITNESSES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("order is not a bounded lattice: {0}")]
    NotALattice(String),
    #[error("no residuum for ({x}, {y}): maximal candidates {candidates:?} are incomparable")]
    NotResiduated {
        x: usize,
        y: usize,
        candidates: Vec<usize>,
    },
    #[error("declared residuum at ({x}, {y}) is {declared}, derived value is {derived}")]
    ResiduumMismatch {
        x: usize,
        y: usize,
        declared: usize,
        derived: usize,
    },
    #[error("tables do not form a residuated lattice:\n{0}")]
    Invalid(Box<Report>),
}

/// A finite residuated lattice. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResLattice {
    names: Vec<String>,
    leq: Vec<bool>,
    odot: Vec<usize>,
    imp: Vec<usize>,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
}

fn flatten<T: Copy>(rows: &[Vec<T>], n: usize, what: &str) -> Result<Vec<T>, LatticeError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(LatticeError::MalformedTable(format!(
            "{what} table must be {n}x{n}"
        )));
    }
    Ok(rows.iter().flatten().copied().collect())
}

fn check_ids(table: &[usize], n: usize, what: &str) -> Result<(), LatticeError> {
    match table.iter().find(|&&v| v >= n) {
        Some(v) => Err(LatticeError::MalformedTable(format!(
            "{what} table entry {v} out of range 0..{n}"
        ))),
        None => Ok(()),
    }
}

/// Derives meet and join tables plus the bounds from a flat order matrix.
fn lattice_structure(
    n: usize,
    leq: &[bool],
) -> Result<(Vec<usize>, Vec<usize>, usize, usize), LatticeError> {
    let le = |a: usize, b: usize| leq[a * n + b];
    for a in 0..n {
        if !le(a, a) {
            return Err(LatticeError::NotALattice(format!("not reflexive at {a}")));
        }
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return Err(LatticeError::NotALattice(format!(
                    "not antisymmetric at ({a}, {b})"
                )));
            }
            for c in 0..n {
                if le(a, b) && le(b, c) && !le(a, c) {
                    return Err(LatticeError::NotALattice(format!(
                        "not transitive at ({a}, {b}, {c})"
                    )));
                }
            }
        }
    }
    let bot = (0..n)
        .find(|&a| (0..n).all(|b| le(a, b)))
        .ok_or_else(|| LatticeError::NotALattice("no bottom element".into()))?;
    let top = (0..n)
        .find(|&a| (0..n).all(|b| le(b, a)))
        .ok_or_else(|| LatticeError::NotALattice("no top element".into()))?;
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            meet[a * n + b] = *lower
                .iter()
                .find(|&&c| lower.iter().all(|&d| le(d, c)))
                .ok_or_else(|| LatticeError::NotALattice(format!("no meet of ({a}, {b})")))?;
            let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            join[a * n + b] = *upper
                .iter()
                .find(|&&c| upper.iter().all(|&d| le(c, d)))
                .ok_or_else(|| LatticeError::NotALattice(format!("no join of ({a}, {b})")))?;
        }
    }
    Ok((meet, join, bot, top))
}

/// The residuum forced by `odot` under the order: `x -> y` is the maximum of
/// `{z : x odot z <= y}`. Both tables are flat `n*n`.
pub fn derive_residuum(n: usize, leq: &[bool], odot: &[usize]) -> Result<Vec<usize>, LatticeError> {
    let mut imp = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&z| leq[odot[x * n + z] * n + y]).collect();
            match cands.iter().find(|&&m| cands.iter().all(|&z| leq[z * n + m])) {
                Some(&m) => imp[x * n + y] = m,
                None => {
                    let maximal = cands
                        .iter()
                        .copied()
                        .filter(|&m| !cands.iter().any(|&z| z != m && leq[m * n + z]))
                        .collect();
                    return Err(LatticeError::NotResiduated {
                        x,
                        y,
                        candidates: maximal,
                    });
                }
            }
        }
    }
    Ok(imp)
}

impl ResLattice {
    /// Assembles a lattice from explicit tables without checking the monoid
    /// or residuation laws; run [`validate`] for that. The order must be a
    /// bounded lattice and all ids in range.
    pub fn from_parts(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        odot: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        if n < 2 {
            return Err(LatticeError::MalformedTable(
                "a residuated lattice needs at least two elements".into(),
            ));
        }
        let leq = flatten(&leq, n, "leq")?;
        let odot = flatten(&odot, n, "odot")?;
        let imp = flatten(&imp, n, "imp")?;
        check_ids(&odot, n, "odot")?;
        check_ids(&imp, n, "imp")?;
        Self::from_flat(names, leq, odot, imp)
    }

    fn from_flat(
        names: Vec<String>,
        leq: Vec<bool>,
        odot: Vec<usize>,
        imp: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        let (meet, join, bot, top) = lattice_structure(n, &leq)?;
        Ok(ResLattice {
            names,
            leq,
            odot,
            imp,
            meet,
            join,
            bot,
            top,
        })
    }

    /// Builds a residuated lattice from its order and product, deriving the
    /// residuum and validating every axiom.
    pub fn new(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        odot: Vec<Vec<usize>>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        let leq = flatten(&leq, n, "leq")?;
        let odot = flatten(&odot, n, "odot")?;
        check_ids(&odot, n, "odot")?;
        Self::from_flat_checked(names, leq, odot)
    }

    pub(crate) fn from_flat_checked(
        names: Vec<String>,
        leq: Vec<bool>,
        odot: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        if n < 2 {
            return Err(LatticeError::MalformedTable(
                "a residuated lattice needs at least two elements".into(),
            ));
        }
        // reject non-lattices before trying to derive a residuum
        lattice_structure(n, &leq)?;
        let imp = derive_residuum(n, &leq, &odot)?;
        let rl = Self::from_flat(names, leq, odot, imp)?;
        let report = validate(&rl);
        if report.verdict("residuated_lattice") {
            Ok(rl)
        } else {
            Err(LatticeError::Invalid(Box::new(report)))
        }
    }

    /// Like [`ResLattice::new`], but first compares the derived residuum
    /// against a declared one, reporting the first differing cell.
    pub fn with_declared_imp(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        odot: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
    ) -> Result<Self, LatticeError> {
        let n = names.len();
        let declared = flatten(&imp, n, "imp")?;
        check_ids(&declared, n, "imp")?;
        let leq_flat = flatten(&leq, n, "leq")?;
        let odot_flat = flatten(&odot, n, "odot")?;
        check_ids(&odot_flat, n, "odot")?;
        if n >= 2 {
            lattice_structure(n, &leq_flat)?;
            let derived = derive_residuum(n, &leq_flat, &odot_flat)?;
            if let Some(i) = (0..n * n).find(|&i| declared[i] != derived[i]) {
                return Err(LatticeError::ResiduumMismatch {
                    x: i / n,
                    y: i % n,
                    declared: declared[i],
                    derived: derived[i],
                });
            }
        }
        Self::from_flat_checked(names, leq_flat, odot_flat)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Same algebra with new element names.
    pub fn renamed(&self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.size());
        ResLattice {
            names,
            ..self.clone()
        }
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.size() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    pub fn odot(&self, x: usize, y: usize) -> usize {
        self.odot[x * self.size() + y]
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.size() + y]
    }

    /// `x* = x -> 0`
    pub fn neg(&self, x: usize) -> usize {
        self.imp(x, self.bot)
    }

    pub fn leq_rows(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size()).map(<[bool]>::to_vec).collect()
    }

    pub fn odot_rows(&self) -> Vec<Vec<usize>> {
        self.odot.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn imp_rows(&self) -> Vec<Vec<usize>> {
        self.imp.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    /// The residuum recomputed from the order and product.
    pub fn derived_imp(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        let n = self.size();
        let imp = derive_residuum(n, &self.leq, &self.odot)?;
        Ok(imp.chunks(n).map(<[usize]>::to_vec).collect())
    }

    /// Applies the relabeling `perm` (old id -> new id), keeping names attached
    /// to their elements.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.size();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        let mut leq = vec![false; n * n];
        let mut odot = vec![0; n * n];
        let mut imp = vec![0; n * n];
        for x in 0..n {
            names[perm[x]] = self.names[x].clone();
            for y in 0..n {
                let i = perm[x] * n + perm[y];
                leq[i] = self.leq(x, y);
                odot[i] = perm[self.odot(x, y)];
                imp[i] = perm[self.imp(x, y)];
            }
        }
        Self::from_flat(names, leq, odot, imp).expect("permutation preserves lattice structure")
    }

    /// Elements below `x`, including `x`.
    pub fn down_set_size(&self, x: usize) -> usize {
        self.elements().filter(|&y| self.leq(y, x)).count()
    }

    pub fn up_set_size(&self, x: usize) -> usize {
        self.elements().filter(|&y| self.leq(x, y)).count()
    }
}

/// Direct product with componentwise order and operations. Element ids are
/// mixed-radix tuples, first factor most significant.
pub fn direct_product(factors: &[ResLattice]) -> ResLattice {
    assert!(!factors.is_empty(), "direct product needs at least one factor");
    let sizes: Vec<usize> = factors.iter().map(ResLattice::size).collect();
    let n: usize = sizes.iter().product();
    let decode = |mut a: usize| {
        let mut out = vec![0; sizes.len()];
        for (slot, &s) in out.iter_mut().zip(&sizes).rev() {
            *slot = a % s;
            a /= s;
        }
        out
    };
    let encode = |xs: &[usize]| xs.iter().zip(&sizes).fold(0, |acc, (&x, &s)| acc * s + x);
    let tuples: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let names = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = factors.iter().zip(t).map(|(f, &x)| f.name(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let mut leq = vec![false; n * n];
    let mut odot = vec![0; n * n];
    let mut imp = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let (ta, tb) = (&tuples[a], &tuples[b]);
            leq[a * n + b] = factors
                .iter()
                .enumerate()
                .all(|(i, f)| f.leq(ta[i], tb[i]));
            let prod: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.odot(ta[i], tb[i]))
                .collect();
            odot[a * n + b] = encode(&prod);
            let res: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.imp(ta[i], tb[i]))
                .collect();
            imp[a * n + b] = encode(&res);
        }
    }
    ResLattice::from_flat(names, leq, odot, imp).expect("product of lattices is a lattice")
}
