//! Recomputes every derivable column of the golden tables by independent
//! routes and reports each comparison.

use std::collections::BTreeSet;
use std::fmt;

use crate::catalog::{self, GoldenRow};
use crate::error::Result;
use crate::poset;
use crate::strata;
use crate::taut;
use crate::weyl;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn record(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
            }
        }
        let failed = self.failures().count();
        writeln!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(got: T, want: T) -> (bool, String) {
    if got == want {
        (true, String::new())
    } else {
        (false, format!("got {got:?}, expected {want:?}"))
    }
}

/// Columns nu, mu, f, a, codim recomputed from the stored final type.
fn combinatorial_route(row: &GoldenRow) -> (bool, String) {
    let mu = strata::final_to_young(&row.nu);
    let got = (
        mu.clone(),
        strata::young_to_final(&row.mu),
        strata::p_rank_of_final(&row.nu),
        strata::a_number_of_final(&row.nu),
        strata::stratum_codim(&mu),
    );
    expect_eq(
        got,
        (row.mu.clone(), row.nu.clone(), row.f, row.a, row.codim),
    )
}

/// The same columns recomputed from the Dieudonne module of the row's name.
fn engine_route(row: &GoldenRow) -> Result<(bool, String)> {
    let module = catalog::build_module(&row.name);
    let report = module.canonical_filtration()?;
    let nu = report.final_type;
    let mu = strata::final_to_young(&nu);
    let interaction_g = report.interaction.last().copied().unwrap_or(0);
    let got = (
        nu,
        mu.codim(),
        module.p_rank(),
        module.a_number(),
        interaction_g,
    );
    Ok(expect_eq(
        got,
        (row.nu.clone(), row.codim, row.f, row.a, row.a),
    ))
}

fn weyl_route(row: &GoldenRow) -> (bool, String) {
    let from_word = weyl::evaluate_word(&row.word);
    let from_mu = weyl::from_young(&row.mu);
    let len = weyl::length(&from_mu);
    expect_eq(
        (from_word, row.word.len(), len),
        (from_mu, len, strata::stratum_dim(&row.nu)),
    )
}

pub fn run() -> Report {
    let mut report = Report::default();
    let golden = catalog::golden();

    for row in golden.rows() {
        let label = format!("g={} {}", row.g, row.name);
        let (ok, detail) = combinatorial_route(row);
        report.record(format!("{label}: invariants from final type"), ok, detail);
        let (ok, detail) = match engine_route(row) {
            Ok(res) => res,
            Err(e) => (false, e.to_string()),
        };
        report.record(
            format!("{label}: invariants from Dieudonne module"),
            ok,
            detail,
        );
        let (ok, detail) = weyl_route(row);
        report.record(
            format!("{label}: Weyl word, from_young and length"),
            ok,
            detail,
        );
        let (ok, detail) = match catalog::classify(&row.nu) {
            Ok(name) => expect_eq(name, row.name.clone()),
            Err(e) => (false, e.to_string()),
        };
        report.record(format!("{label}: classification"), ok, detail);
    }

    for g in 1..=4 {
        let golden_set: BTreeSet<_> = golden
            .table(g)
            .map(|rows| rows.into_iter().map(|r| r.nu.clone()).collect())
            .unwrap_or_default();
        let all: BTreeSet<_> = strata::enumerate_final_types(g)
            .map(|v| v.into_iter().collect())
            .unwrap_or_default();
        let (ok, detail) = expect_eq(golden_set.len(), 1 << g);
        report.record(
            format!("g={g}: table covers all 2^g final types"),
            ok && golden_set == all,
            detail,
        );
    }

    let (ok, detail) = match poset::hasse(4) {
        Ok(h) => {
            let golden_edges: BTreeSet<_> = golden.hasse_g4_edges().iter().cloned().collect();
            let (ok, detail) = expect_eq(h.nodes.len(), 16);
            if ok && h.edge_set() != golden_edges {
                (false, "edge sets differ".to_string())
            } else {
                (ok, detail)
            }
        }
        Err(e) => (false, e.to_string()),
    };
    report.record("g=4: Hasse diagram has the 20 golden edges", ok, detail);

    for g in 1..=4 {
        let (ok, detail) = match poset::orders_match(g) {
            Ok(m) => expect_eq(m, true),
            Err(e) => (false, e.to_string()),
        };
        report.record(
            format!("g={g}: Young containment reverses Bruhat order"),
            ok,
            detail,
        );
    }

    for row in golden.rows().iter().filter(|r| r.a <= 1) {
        let Some(stored) = &row.cycle_class else {
            continue;
        };
        let (ok, detail) = match taut::prank_class(row.g, row.f) {
            Ok(c) => expect_eq(c, stored.clone()),
            Err(e) => (false, e.to_string()),
        };
        report.record(
            format!("g={} {}: p-rank cycle class", row.g, row.name),
            ok,
            detail,
        );
    }

    report
}
