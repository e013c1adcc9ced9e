//! Translation between involutive BL-algebras and MV-algebras
//! `(L, oplus, *, 0)`.

use thiserror::Error;

use super::{is_bl, is_involutive, LatticeError, ResLattice, Report, Witness, MAX_WITNESSES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvError {
    #[error("not involutive: {label}** != {label}")]
    NotInvolutive { elem: usize, label: String },
    #[error("not a BL-algebra")]
    NotBl,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// An MV-algebra given by its `oplus` table, negation and zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvAlgebra {
    names: Vec<String>,
    oplus: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
}

impl MvAlgebra {
    pub fn new(names: Vec<String>, oplus: Vec<Vec<usize>>, neg: Vec<usize>, zero: usize) -> Self {
        let n = names.len();
        assert!(oplus.len() == n && oplus.iter().all(|r| r.len() == n) && neg.len() == n);
        MvAlgebra {
            names,
            oplus: oplus.into_iter().flatten().collect(),
            neg,
            zero,
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.oplus[x * self.size() + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    /// Checks MV1-MV4: abelian monoid, `x** = x`, `x oplus 0* = 0*`, and
    /// `(x* oplus y)* oplus y = (y* oplus x)* oplus x`.
    pub fn check_axioms(&self) -> Report {
        let n = self.size();
        let mut r = Report::new();
        let mut law = |name: &str, arity: usize, holds: &dyn Fn(&[usize]) -> bool| {
            let mut failures = 0;
            let total = n.pow(arity as u32);
            for code in 0..total {
                let mut t = vec![0; arity];
                let mut c = code;
                for slot in t.iter_mut().rev() {
                    *slot = c % n;
                    c /= n;
                }
                if !holds(&t) {
                    if failures < MAX_WITNESSES {
                        r.push_witness(Witness {
                            law: name.to_string(),
                            labels: t.iter().map(|&e| self.names[e].clone()).collect(),
                            elems: t,
                        });
                    }
                    failures += 1;
                }
            }
            r.set(name, failures == 0);
        };
        let one = self.neg(self.zero);
        law("mv1_associative", 3, &|t| {
            self.oplus(self.oplus(t[0], t[1]), t[2]) == self.oplus(t[0], self.oplus(t[1], t[2]))
        });
        law("mv1_commutative", 2, &|t| self.oplus(t[0], t[1]) == self.oplus(t[1], t[0]));
        law("mv1_zero", 1, &|t| self.oplus(t[0], self.zero) == t[0]);
        law("mv2_involution", 1, &|t| self.neg(self.neg(t[0])) == t[0]);
        law("mv3_absorbing_top", 1, &|t| self.oplus(t[0], one) == one);
        law("mv4", 2, &|t| {
            let (x, y) = (t[0], t[1]);
            self.oplus(self.neg(self.oplus(self.neg(x), y)), y)
                == self.oplus(self.neg(self.oplus(self.neg(y), x)), x)
        });
        r
    }
}

/// `x oplus y = (x* odot y*)*` on an involutive BL-algebra.
pub fn mv_from_bl(rl: &ResLattice) -> Result<MvAlgebra, MvError> {
    if let Some(x) = rl.elements().find(|&x| rl.neg(rl.neg(x)) != x) {
        return Err(MvError::NotInvolutive {
            elem: x,
            label: rl.name(x).to_string(),
        });
    }
    if !is_bl(rl) {
        return Err(MvError::NotBl);
    }
    debug_assert!(is_involutive(rl));
    let n = rl.size();
    let oplus = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| rl.neg(rl.odot(rl.neg(x), rl.neg(y))))
                .collect()
        })
        .collect();
    let neg = (0..n).map(|x| rl.neg(x)).collect();
    Ok(MvAlgebra::new(rl.names().to_vec(), oplus, neg, rl.bot()))
}

/// `x odot y = (x* oplus y*)*`, `x -> y = x* oplus y`, `1 = 0*`, with
/// `x <= y` iff `x -> y = 1`.
pub fn bl_from_mv(mv: &MvAlgebra) -> Result<ResLattice, MvError> {
    let n = mv.size();
    let one = mv.neg(mv.zero());
    let imp: Vec<Vec<usize>> = (0..n)
        .map(|x| (0..n).map(|y| mv.oplus(mv.neg(x), y)).collect())
        .collect();
    let odot = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| mv.neg(mv.oplus(mv.neg(x), mv.neg(y))))
                .collect()
        })
        .collect();
    let leq = imp
        .iter()
        .map(|row| row.iter().map(|&v| v == one).collect())
        .collect();
    Ok(ResLattice::from_parts(mv.names().to_vec(), leq, odot, imp)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate;

    fn chain(n: usize, odot: impl Fn(usize, usize) -> usize) -> ResLattice {
        let names = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        let table = (0..n).map(|i| (0..n).map(|j| odot(i, j)).collect()).collect();
        ResLattice::new(names, leq, table).unwrap()
    }

    #[test]
    fn two_element_oplus_is_join() {
        let b2 = chain(2, usize::min);
        let mv = mv_from_bl(&b2).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(mv.oplus(x, y), x.max(y));
            }
        }
        assert!(mv.check_axioms().all_pass());
    }

    #[test]
    fn lukasiewicz_round_trip() {
        let l3 = chain(3, |x, y| (x + y).saturating_sub(2));
        let mv = mv_from_bl(&l3).unwrap();
        assert!(mv.check_axioms().all_pass());
        // truncated addition
        assert_eq!(mv.oplus(1, 1), 2);
        let back = bl_from_mv(&mv).unwrap();
        assert_eq!(back, l3);
        assert!(validate(&back).verdict("residuated_lattice"));
    }

    #[test]
    fn godel_chain_is_rejected() {
        let g3 = chain(3, usize::min);
        assert_eq!(
            mv_from_bl(&g3),
            Err(MvError::NotInvolutive {
                elem: 1,
                label: "1".into()
            })
        );
    }
}
