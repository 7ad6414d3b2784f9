//! Acceptance run: one line per criterion, non-zero exit if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dioph_core::classforms::{
    bound_h, check_analytic_bound, check_field_class_cap, check_g_decreasing, check_hn_below_n,
    class_number, g_bound, h_form, QuadForm,
};
use dioph_core::descent::{descend, verify_grid, DescentInstance, GridLimits};
use dioph_core::identities::{mod32_suite, s_mod8_suite, sampled_expansions, verify_sums_lemma};
use dioph_core::lehmer::{is_defective, lehmer_number, verify_table1};
use dioph_core::search::{run_search, SearchConfig};
use dioph_core::{CandidateTuple, ExpansionKind, LehmerPair};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn valid_pairs(bound: i64) -> Vec<LehmerPair> {
    (-bound..=bound)
        .flat_map(|r| (-bound..=bound).map(move |q| (r, q)))
        .filter_map(|(r, q)| LehmerPair::new(r, q).ok())
        .collect()
}

fn table1() -> Outcome {
    let rep = verify_table1();
    ensure(
        rep.checks.len() == 26,
        format!("{} entries", rep.checks.len()),
    )?;
    for c in &rep.checks {
        ensure(
            c.passed,
            format!(
                "s = {}, (R, Q) = ({}, {}) failed",
                c.entry.s, c.entry.r, c.entry.q
            ),
        )?;
    }
    Ok("26 entries valid, defective, twist-invariant to s = 30".into())
}

fn lehmer_oracles() -> Outcome {
    let small = valid_pairs(10);
    let bad: Vec<String> = small
        .par_iter()
        .flat_map_iter(|p| {
            let seq = p.sequence(12);
            (1..=12u32)
                .filter(move |&s| common::ring_lehmer(p, s).as_ref() != Some(&seq[s as usize]))
                .map(move |s| format!("ring L_{s}({}, {})", p.r(), p.q()))
        })
        .collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    let wide = valid_pairs(30);
    let bad: Vec<String> = wide
        .par_iter()
        .flat_map_iter(|p| {
            (2..=30u64)
                .filter(move |&s| {
                    is_defective(p, s).expect("s >= 2").defective
                        != common::factored_defective(p, s)
                })
                .map(move |s| format!("defect s = {s} ({}, {})", p.r(), p.q()))
        })
        .collect();
    ensure(bad.is_empty(), bad.join("; "))?;
    Ok(format!(
        "{} pairs x 12 ring values, {} pairs x 29 defect checks",
        small.len(),
        wide.len()
    ))
}

fn spot_values() -> Outcome {
    let a = LehmerPair::new(1, 2).map_err(|e| e.to_string())?;
    let b = LehmerPair::new(1, -1).map_err(|e| e.to_string())?;
    let l = |p: &LehmerPair, s| lehmer_number(p, s).unwrap();
    ensure(
        l(&a, 7) == BigInt::from(7),
        format!("L_7(1,2) = {}", l(&a, 7)),
    )?;
    ensure(
        l(&a, 13) == BigInt::from(-1),
        format!("L_13(1,2) = {}", l(&a, 13)),
    )?;
    ensure(
        l(&b, 7) == BigInt::from(13),
        format!("L_7(1,-1) = {}", l(&b, 7)),
    )?;
    ensure(
        !is_defective(&b, 7).unwrap().defective,
        "(1,-1) defective at 7",
    )?;
    Ok("L_7 = 7, L_13 = -1 for (1, 2); L_7 = 13 non-defective for (1, -1)".into())
}

fn sums_lemma() -> Outcome {
    let rep = verify_sums_lemma(201).map_err(|e| e.to_string())?;
    ensure(rep.rows.len() == 101, format!("{} rows", rep.rows.len()))?;
    if let Some(r) = rep.rows.iter().find(|r| !r.passed) {
        return Err(format!("t = {}", r.t));
    }
    let neg = rep.rows.iter().filter(|r| r.sign < 0).count();
    Ok(format!(
        "101 odd t <= 201; alternating sum sign +: {}, -: {neg}",
        rep.rows.len() - neg
    ))
}

fn class_facts() -> Outcome {
    for c in [
        check_hn_below_n(5000),
        check_field_class_cap(300, 22),
        check_field_class_cap(66, 8),
    ] {
        ensure(
            c.passed && c.instances > 0,
            format!("{}: {:?}", c.name, c.violations),
        )?;
    }
    let r = h_form(-20).map_err(|e| e.to_string())?;
    ensure(r.h == 2, format!("h(-20) = {}", r.h))?;
    ensure(
        r.forms == [QuadForm { a: 1, b: 0, c: 5 }, QuadForm { a: 2, b: 2, c: 3 }],
        "forms of -20",
    )?;
    Ok("h(-4n) < n to 5000; h_F <= 22 (wn <= 300); h_F <= 8 (wn <= 66); h(-20) = 2".into())
}

fn analytic() -> Outcome {
    let (g50, g51) = (g_bound(50.0), g_bound(51.0));
    ensure(g50 - 1.0 > 1e-3, format!("g(50) = {g50}"))?;
    ensure(1.0 - g51 > 1e-3, format!("g(51) = {g51}"))?;
    let dec = check_g_decreasing(1000);
    ensure(dec.passed, format!("{:?}", dec.violations))?;
    let bound = check_analytic_bound(300);
    ensure(
        bound.passed && bound.instances > 0,
        format!("{:?}", bound.violations),
    )?;
    ensure((bound_h(-20) - 7.1107).abs() < 1e-3, "bound_h(-20)")?;
    ensure(class_number(-20) == Ok(2), "h(-20)")?;
    Ok(format!(
        "g(50) = {g50:.6}, g(51) = {g51:.6}; g decreasing on 1..1000; bound_h >= h on {} discriminants",
        bound.instances
    ))
}

fn descent() -> Outcome {
    let rep = verify_grid(GridLimits::default());
    ensure(
        rep.passed,
        format!("{} failures: {:?}", rep.failures.len(), rep.failures),
    )?;
    let check =
        |d, k, x: i64, y: i64, z, want: (i64, i64, u32, u32, i8, i8)| -> Result<(), String> {
            let inst = DescentInstance::new(d, k, x, y, z).map_err(|e| e.to_string())?;
            let w = descend(&inst).map_err(|e| e.to_string())?;
            let got = (
                w.x1.to_i64().unwrap(),
                w.y1.to_i64().unwrap(),
                w.z1,
                w.t,
                w.l1,
                w.l2,
            );
            ensure(
                got == want && w.verify(&inst),
                format!("({d},{k},{x},{y},{z}) -> {got:?}"),
            )
        };
    check(2, 3, 5, 1, 3, (1, 1, 1, 3, -1, -1))?;
    check(5, 3, 2, 1, 2, (2, 1, 2, 1, 1, 1))?;
    Ok(format!(
        "{} instances, 0 NoWitness; worked examples exact",
        rep.instances
    ))
}

fn residues() -> Outcome {
    let s8 = s_mod8_suite();
    let m32 = mod32_suite(&[1, 9, 17, 25]);
    for s in [&s8, &m32] {
        ensure(
            s.passed && s.grid_size > 0,
            format!("{}: {:?}", s.name, s.violations),
        )?;
    }
    Ok(format!(
        "S ≡ 5 (mod 8) on {} cells; mod-32 expression ≡ 16 on {} cells",
        s8.grid_size, m32.grid_size
    ))
}

fn expansions() -> Outcome {
    for kind in ExpansionKind::ALL {
        let b = sampled_expansions(kind, 200, 20240601);
        ensure(
            b.passed && b.samples == 200,
            format!("{kind:?}: {} failures", b.failures.len()),
        )?;
    }
    Ok("5 families x 200 seeded samples".into())
}

fn main_search() -> Outcome {
    let cfg = SearchConfig::main(13, 200, 40, 25).with_jobs(4);
    let f = run_search(&cfg).map_err(|e| e.to_string())?;
    let u = run_search(&cfg.with_filter(false)).map_err(|e| e.to_string())?;
    ensure(
        f.solutions.is_empty(),
        format!("filtered found {:?}", f.solutions),
    )?;
    ensure(
        u.solutions.is_empty(),
        format!("unfiltered found {:?}", u.solutions),
    )?;
    Ok(format!(
        "0 solutions; cells tested filtered {}, unfiltered {}",
        f.candidates_tested, u.candidates_tested
    ))
}

fn variant_search() -> Outcome {
    let r = run_search(&SearchConfig::variant(4, 10, 5, 5)).map_err(|e| e.to_string())?;
    let hit = CandidateTuple::new(3, 17, 7, 1, 3).map_err(|e| e.to_string())?;
    ensure(
        r.solutions.contains(&hit),
        format!("missing (17,7,1,3,3): {:?}", r.solutions),
    )?;
    ensure(
        r.solutions.iter().all(|s| matches!(s.n, 3 | 4)) && r.catalog_conflicts.is_empty(),
        format!("exponent outside {{3, 4}}: {:?}", r.solutions),
    )?;
    Ok(format!(
        "{} solutions, all N in {{3, 4}}",
        r.solutions.len()
    ))
}

type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria: [Criterion; 11] = [
        ("table1", secs(5), table1),
        ("lehmer-oracles", secs(30), lehmer_oracles),
        ("spot-values", None, spot_values),
        ("sums-lemma", None, sums_lemma),
        ("class-facts", secs(10), class_facts),
        ("analytic-threshold", None, analytic),
        ("descent", secs(60), descent),
        ("residues", None, residues),
        ("expansions", None, expansions),
        ("main-search", secs(60), main_search),
        ("variant-search", None, variant_search),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = run();
        let took = start.elapsed();
        let res = match (res, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:?}, limit {l:?}")),
            (r, _) => r,
        };
        match res {
            Ok(detail) => println!(
                "PASS {:>2} {name} ({:.2}s): {detail}",
                i + 1,
                took.as_secs_f64()
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "FAIL {:>2} {name} ({:.2}s): {why}",
                    i + 1,
                    took.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
