use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use reslat_core::census::{
    canonical_key, census_table, enumerate_bl_ordinal_keyed, enumerate_reslat_oracle_keyed,
    are_isomorphic, CanonicalKey, Filter,
};
use reslat_core::lattice::{check_bl_identity, check_div, check_prel, is_chain, is_involutive, is_mv, validate};
use reslat_core::shell::{audit_text, eval_expr, parse_expr, parse_ring, serialize};
use reslat_core::{audit_ring_claims, build_ring, check_blring, ideal_lattice, ResLattice, Report};

use crate::render::{print_report, print_tables};
use crate::{Cli, Command, Method, Prop};

/// Runs one command. `Ok(false)` means a checked property or claim failed.
pub fn run(cli: &Cli) -> Result<bool> {
    match &cli.command {
        Command::Check { expr, props } => check(cli, expr, props),
        Command::Tables { expr, format } => {
            let rl = eval(cli, expr)?;
            print_tables(&rl, *format);
            write_out(cli, "algebra.reslat", &serialize(&rl))?;
            Ok(true)
        }
        Command::Ideals { ring, claims } => ideals(cli, ring, *claims),
        Command::Blring { ring } => blring(cli, ring),
        Command::Enumerate { n, method, filter } => enumerate(cli, *n, *method, *filter),
        Command::Census { nmax } => census(*nmax),
        Command::Iso { left, right } => iso(cli, left, right),
        Command::Audit { path } => audit(path),
    }
}

fn eval(cli: &Cli, text: &str) -> Result<ResLattice> {
    let expr = parse_expr(text).with_context(|| format!("in expression {text:?}"))?;
    Ok(eval_expr(&expr, cli.size_cap)?)
}

fn write_out(cli: &Cli, name: &str, contents: &str) -> Result<()> {
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let path = dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn check(cli: &Cli, text: &str, props: &[Prop]) -> Result<bool> {
    let rl = eval(cli, text)?;
    let all = [
        Prop::Prel,
        Prop::Div,
        Prop::Bl,
        Prop::Mv,
        Prop::Chain,
        Prop::Involutive,
        Prop::BlIdentity,
    ];
    // without --props every property is reported and none is required
    let required = !props.is_empty();
    let props = if required { props } else { &all[..] };
    println!("{text}: {} elements", rl.size());
    let valid = validate(&rl);
    if !valid.verdict("residuated_lattice") {
        print_report(&valid);
        return Ok(false);
    }
    let mut report = Report::new();
    for prop in props {
        match prop {
            Prop::Prel => report.merge(check_prel(&rl)),
            Prop::Div => report.merge(check_div(&rl)),
            Prop::Bl => {
                let (p, d) = (check_prel(&rl), check_div(&rl));
                report.set("bl", p.verdict("prel") && d.verdict("div"));
            }
            Prop::Mv => report.merge(is_mv(&rl)),
            Prop::Chain => report.set("chain", is_chain(&rl)),
            Prop::Involutive => report.set("involutive", is_involutive(&rl)),
            Prop::BlIdentity => {
                let r = check_bl_identity(&rl);
                report.set("bl_identity", r.verdict("bl_identity"));
                report.set("routes_agree", r.verdict("routes_agree"));
                for w in r.witnesses_for("bl_identity") {
                    report.push_witness(w.clone());
                }
            }
        }
    }
    print_report(&report);
    Ok(!required || report.all_pass())
}

fn ideals(cli: &Cli, text: &str, claims: bool) -> Result<bool> {
    let expr = parse_ring(text).with_context(|| format!("in ring {text:?}"))?;
    let ring = Arc::new(build_ring(&expr, cli.size_cap)?);
    let meta = ideal_lattice(&ring)?;
    println!("ring {expr}: {} elements, {} ideals", ring.size(), meta.ideals.len());
    for (k, ideal) in meta.ideals.iter().enumerate() {
        let mut flags = Vec::new();
        if meta.maximal_flags[k] {
            flags.push("maximal");
        }
        if meta.minimal_flags[k] {
            flags.push("minimal");
        }
        println!(
            "  {k}: {} size {}{}",
            ideal.label(),
            ideal.len(),
            if flags.is_empty() {
                String::new()
            } else {
                format!(" [{}]", flags.join(", "))
            }
        );
    }
    println!("local: {}", meta.local);
    write_out(cli, "ideals.reslat", &serialize(&meta.lattice))?;
    if !claims {
        return Ok(true);
    }
    let checks = audit_ring_claims(&meta, cli.size_cap)?;
    if checks.is_empty() {
        println!("no closed-form statements apply to this ring");
    }
    for c in &checks {
        println!("{c}");
    }
    Ok(checks.iter().all(|c| c.pass))
}

fn blring(cli: &Cli, text: &str) -> Result<bool> {
    let expr = parse_ring(text).with_context(|| format!("in ring {text:?}"))?;
    let ring = Arc::new(build_ring(&expr, cli.size_cap)?);
    let report = check_blring(&ring)?;
    println!("ring {expr}");
    print_report(&report);
    if !report.verdict("routes_agree") {
        bail!("internal error: the two BL-ring routes disagree");
    }
    Ok(report.verdict("bl"))
}

fn enumerate(cli: &Cli, n: usize, method: Method, filter: Filter) -> Result<bool> {
    let keep = |list: Vec<(CanonicalKey, ResLattice)>| -> Vec<(CanonicalKey, ResLattice)> {
        list.into_iter().filter(|(_, rl)| filter.admits(rl)).collect()
    };
    let mut sets: Vec<(&str, Vec<(CanonicalKey, ResLattice)>)> = Vec::new();
    if matches!(method, Method::Ordinal | Method::Both) {
        sets.push(("ordinal", keep(enumerate_bl_ordinal_keyed(n)?)));
    }
    if matches!(method, Method::Oracle | Method::Both) {
        sets.push(("oracle", keep(enumerate_reslat_oracle_keyed(n)?)));
    }
    for (name, list) in &sets {
        println!("{name}: {} algebras of order {n} (filter {filter})", list.len());
        for (i, (_, rl)) in list.iter().enumerate() {
            write_out(cli, &format!("{name}_{n}_{i}.reslat"), &serialize(rl))?;
        }
    }
    if let [(_, a), (_, b)] = &sets[..] {
        let ka: BTreeSet<&CanonicalKey> = a.iter().map(|(k, _)| k).collect();
        let kb: BTreeSet<&CanonicalKey> = b.iter().map(|(k, _)| k).collect();
        let same = ka == kb;
        println!("canonical key sets {}", if same { "match" } else { "differ" });
        if filter != Filter::All && filter != Filter::Bl && filter != Filter::BlChain && !same {
            println!("note: the ordinal generator only produces BL-algebras");
        }
        return Ok(same);
    }
    Ok(true)
}

fn census(nmax: usize) -> Result<bool> {
    if nmax < 2 {
        bail!("--nmax must be at least 2");
    }
    let rows = census_table(nmax)?;
    let mut ok = true;
    for row in &rows {
        println!("{row}");
        ok &= row.keys_match && row.matches_reference() != Some(false);
    }
    println!(
        "{:<12}{}",
        "n",
        rows.iter().map(|r| format!("{:>4}", r.n)).collect::<String>()
    );
    for (label, get) in [
        ("MV", (|c: &reslat_core::census::Counts| c.mv) as fn(&_) -> usize),
        ("MV-chains", |c| c.mv_chains),
        ("BL", |c| c.bl),
        ("BL-chains", |c| c.bl_chains),
    ] {
        println!(
            "{label:<12}{}",
            rows.iter().map(|r| format!("{:>4}", get(&r.generator))).collect::<String>()
        );
    }
    Ok(ok)
}

fn iso(cli: &Cli, left: &str, right: &str) -> Result<bool> {
    let a = eval(cli, left)?;
    let b = eval(cli, right)?;
    match are_isomorphic(&a, &b) {
        Some(map) => {
            println!("isomorphic");
            for (x, &y) in map.iter().enumerate() {
                println!("  {} -> {}", a.name(x), b.name(y));
            }
            debug_assert_eq!(canonical_key(&a), canonical_key(&b));
            Ok(true)
        }
        None => {
            println!("not isomorphic");
            Ok(false)
        }
    }
}

fn audit(path: &Path) -> Result<bool> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let audit = audit_text(&text).with_context(|| format!("in {}", path.display()))?;
    let title = path
        .file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    print!("{}", audit.render(&title));
    Ok(audit.all_claims_hold())
}
