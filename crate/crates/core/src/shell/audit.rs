//! Audits a table file against the claims written into it.
//!
//! Claims are directive lines `#! claim <property> <true|false>`. The
//! tables are taken as written: a declared residuum that differs from the
//! derived one is reported and then used for every other check.

use std::fmt::Write as _;

use super::format::{parse_raw, FormatError, RawTables};
use crate::lattice::{
    check_bl_identity, derive_residuum, is_mv, validate, LatticeError, ResLattice, Report,
    Witness, MAX_WITNESSES,
};

/// Properties a claim may name.
pub const AUDIT_PROPERTIES: [&str; 9] = [
    "residuated_lattice",
    "residuum_consistent",
    "prel",
    "div",
    "bl",
    "bl_identity",
    "mv",
    "chain",
    "involutive",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditClaim {
    pub property: String,
    pub claimed: bool,
    pub computed: bool,
}

impl AuditClaim {
    pub fn holds(&self) -> bool {
        self.claimed == self.computed
    }
}

#[derive(Debug, Clone)]
pub struct Audit {
    pub names: Vec<String>,
    pub report: Report,
    pub claims: Vec<AuditClaim>,
}

impl Audit {
    pub fn all_claims_hold(&self) -> bool {
        self.claims.iter().all(AuditClaim::holds)
    }

    /// Deterministic plain-text rendering.
    pub fn render(&self, title: &str) -> String {
        let mut out = String::new();
        writeln!(out, "audit {title}").unwrap();
        writeln!(out, "elements: {} ({})", self.names.len(), self.names.join(" ")).unwrap();
        out.push_str("verdicts:\n");
        for (name, value) in self.report.verdicts() {
            writeln!(out, "  {name}: {value}").unwrap();
        }
        if !self.report.witnesses().is_empty() {
            out.push_str("witnesses:\n");
            for w in self.report.witnesses() {
                writeln!(out, "  {w}").unwrap();
            }
        }
        for note in self.report.notes() {
            writeln!(out, "note: {note}").unwrap();
        }
        out.push_str("claims:\n");
        for c in &self.claims {
            writeln!(
                out,
                "  {} {}: claimed {}, computed {}",
                if c.holds() { "PASS" } else { "FAIL" },
                c.property,
                c.claimed,
                c.computed
            )
            .unwrap();
        }
        let held = self.claims.iter().filter(|c| c.holds()).count();
        writeln!(out, "summary: {held} of {} claims hold", self.claims.len()).unwrap();
        out
    }
}

fn parse_claims(raw: &RawTables) -> Result<Vec<(String, bool)>, FormatError> {
    let mut claims = Vec::new();
    for d in &raw.directives {
        let toks: Vec<&str> = d.split_whitespace().collect();
        match toks[..] {
            ["claim", prop, value] if AUDIT_PROPERTIES.contains(&prop) => {
                let v = match value {
                    "true" => true,
                    "false" => false,
                    _ => {
                        return Err(FormatError::Syntax {
                            line: 0,
                            message: format!("claim value must be true or false: {d:?}"),
                        })
                    }
                };
                claims.push((prop.to_string(), v));
            }
            _ => {
                return Err(FormatError::Syntax {
                    line: 0,
                    message: format!("unknown directive {d:?}"),
                })
            }
        }
    }
    Ok(claims)
}

pub fn audit_text(text: &str) -> Result<Audit, FormatError> {
    let raw = parse_raw(text)?;
    let claims = parse_claims(&raw)?;
    let n = raw.names.len();
    let leq_flat: Vec<bool> = raw.leq.iter().flatten().copied().collect();
    let odot_flat: Vec<usize> = raw.odot.iter().flatten().copied().collect();

    let mut report = Report::new();
    // the order has to be a lattice before anything else can be evaluated
    let shell = ResLattice::from_parts(
        raw.names.clone(),
        raw.leq.clone(),
        raw.odot.clone(),
        raw.odot.clone(),
    )?;
    let derived = derive_residuum(n, &leq_flat, &odot_flat);
    let imp: Vec<Vec<usize>> = match (&raw.imp, &derived) {
        (Some(declared), Ok(derived)) => {
            let mut mismatches = 0;
            for x in 0..n {
                for y in 0..n {
                    let d = derived[x * n + y];
                    if declared[x][y] != d {
                        if mismatches < MAX_WITNESSES {
                            report.push_witness(Witness {
                                law: "residuum_consistent".into(),
                                elems: vec![x, y],
                                labels: vec![shell.name(x).into(), shell.name(y).into()],
                            });
                            report.note(format!(
                                "{} -> {} declared {}, derived {}",
                                shell.name(x),
                                shell.name(y),
                                shell.name(declared[x][y]),
                                shell.name(d)
                            ));
                        }
                        mismatches += 1;
                    }
                }
            }
            report.set("residuum_consistent", mismatches == 0);
            declared.clone()
        }
        (Some(declared), Err(e)) => {
            report.set("residuum_consistent", false);
            if let LatticeError::NotResiduated { x, y, .. } = e {
                report.push_witness(Witness {
                    law: "residuum_consistent".into(),
                    elems: vec![*x, *y],
                    labels: vec![shell.name(*x).into(), shell.name(*y).into()],
                });
            }
            report.note(format!("no residuum derivable: {}", describe(&shell, e)));
            declared.clone()
        }
        (None, Ok(derived)) => {
            report.set("residuum_consistent", true);
            derived.chunks(n).map(<[usize]>::to_vec).collect()
        }
        (None, Err(e)) => return Err(FormatError::Lattice(e.clone())),
    };
    let rl = ResLattice::from_parts(raw.names.clone(), raw.leq.clone(), raw.odot.clone(), imp)?;

    let mut checks = validate(&rl);
    let bl = check_bl_identity(&rl);
    let bl_verdict = bl.verdict("prel_and_div");
    checks.merge(bl);
    checks.set("bl", bl_verdict);
    checks.merge(is_mv(&rl));

    let mut chain = true;
    for x in rl.elements() {
        for y in x + 1..n {
            if !rl.leq(x, y) && !rl.leq(y, x) {
                if chain {
                    checks.push_witness(Witness {
                        law: "chain".into(),
                        elems: vec![x, y],
                        labels: vec![rl.name(x).into(), rl.name(y).into()],
                    });
                }
                chain = false;
            }
        }
    }
    checks.set("chain", chain);
    let mut involutive = true;
    for x in rl.elements() {
        if rl.neg(rl.neg(x)) != x {
            if involutive {
                checks.push_witness(Witness {
                    law: "involutive".into(),
                    elems: vec![x],
                    labels: vec![rl.name(x).into()],
                });
            }
            involutive = false;
        }
    }
    checks.set("involutive", involutive);
    report.merge(checks);

    let claims = claims
        .into_iter()
        .map(|(property, claimed)| AuditClaim {
            computed: report.verdict(&property),
            property,
            claimed,
        })
        .collect();
    Ok(Audit {
        names: raw.names,
        report,
        claims,
    })
}

fn describe(rl: &ResLattice, e: &LatticeError) -> String {
    match e {
        LatticeError::NotResiduated { x, y, candidates } => {
            let c: Vec<&str> = candidates.iter().map(|&c| rl.name(c)).collect();
            format!(
                "{} -> {} has incomparable maximal candidates {}",
                rl.name(*x),
                rl.name(*y),
                c.join(", ")
            )
        }
        other => other.to_string(),
    }
}
