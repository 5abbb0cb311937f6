//! The table and verify subcommands.

use crate::{TableArgs, VerifyArgs};
use piclat_core::error::{Error, Result};
use piclat_core::verify::{self, SuiteReport, TableRow};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::process::ExitCode;

pub fn run_table(args: &TableArgs) -> Result<ExitCode> {
    let rows = match args.family.as_str() {
        "A" | "a" => verify::sweep_type_a(args.nmax)?,
        "BC" | "bc" => verify::sweep_bc(args.lmax)?,
        "D" | "d" => verify::sweep_d(args.lmax)?,
        "E" | "e" => verify::sweep_exceptional()?
            .into_iter()
            .filter(|r| r.label.contains("E"))
            .collect(),
        "FG" | "fg" => verify::sweep_exceptional()?
            .into_iter()
            .filter(|r| r.label.starts_with("F4") || r.label.starts_with("G2"))
            .collect(),
        "tori" => {
            let lifts: Vec<Vec<i64>> = (0..=args.dmax)
                .map(|d| {
                    let mut v = vec![0; args.dim];
                    v[0] = d;
                    v
                })
                .collect();
            verify::sweep_tori(args.dim, args.g, &lifts)?
        }
        other => return Err(Error::Parse(format!("unknown family {:?}", other))),
    };
    let ok = rows.iter().all(|r| r.ok());
    if args.format == "json" {
        crate::emit(&serde_json::to_string_pretty(&rows_json(&rows)).expect("serializable"));
    } else {
        print_markdown(&rows);
    }
    if ok {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("error: engine/oracle mismatch in the table");
        Ok(ExitCode::from(4))
    }
}

fn rows_json(rows: &[TableRow]) -> Value {
    let out: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "ok": r.ok(),
                "cells": r.cells.iter().map(|c| json!({
                    "quantity": c.quantity,
                    "engine": c.engine,
                    "oracle": c.oracle,
                    "ok": c.matches(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(out)
}

fn print_markdown(rows: &[TableRow]) {
    if rows.is_empty() {
        crate::emit("(empty table)");
        return;
    }
    let quantities: Vec<String> = rows[0].cells.iter().map(|c| c.quantity.clone()).collect();
    crate::emit(&format!("| case | {} |", quantities.join(" | ")));
    crate::emit(&format!("|---|{}|", quantities.iter().map(|_| "---").collect::<Vec<_>>().join("|")));
    for r in rows {
        let cells: Vec<String> = r
            .cells
            .iter()
            .map(|c| {
                if c.matches() {
                    c.engine.clone()
                } else {
                    format!("MISMATCH {} vs {}", c.engine, c.oracle)
                }
            })
            .collect();
        crate::emit(&format!("| {} | {} |", r.label, cells.join(" | ")));
    }
}

pub fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    type Job = (&'static str, fn() -> Result<SuiteReport>);
    let jobs: Vec<Job> = vec![
        ("type-sweeps", || {
            let mut rows = verify::sweep_type_a(12)?;
            rows.extend(verify::sweep_bc(8)?);
            rows.extend(verify::sweep_d(10)?);
            rows.extend(verify::sweep_exceptional()?);
            Ok(SuiteReport::from_rows("type-sweeps", &rows))
        }),
        ("torus-closed-forms", verify::torus_suite),
        ("im-factors", verify::suite_im_factors),
        ("order-identities", verify::suite_order_identities),
        ("rank-bookkeeping", verify::suite_rank_bookkeeping),
        ("weyl-bruteforce", verify::suite_weyl_bruteforce),
        ("functoriality", || verify::suite_functoriality(50, 100)),
        ("gl-sanity", verify::suite_gl_sanity),
    ];
    let selected: Vec<Job> = match &args.suite {
        Some(name) => {
            let filtered: Vec<Job> =
                jobs.into_iter().filter(|(n, _)| n == name).collect();
            if filtered.is_empty() {
                return Err(Error::Parse(format!("unknown suite {:?}", name)));
            }
            filtered
        }
        None => jobs,
    };
    let reports: Vec<Result<SuiteReport>> =
        selected.par_iter().map(|(_, f)| f()).collect();
    let mut passed = 0usize;
    let mut failed = 0usize;
    for r in reports {
        let r = r?;
        crate::emit(&r.summary());
        for f in r.failures.iter().take(10) {
            crate::emit(&format!("  {}", f));
        }
        if r.ok() {
            passed += r.cases;
        } else {
            failed += r.failures.len();
            passed += r.cases - r.failures.len();
        }
    }
    crate::emit(&format!("verify: {} checks passed, {} failed", passed, failed));
    if failed == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(5))
    }
}
