//! Built-in regression corpus: every example builder is run through the
//! full pipeline and each intermediate value is compared exactly against
//! the expected record.

use num::BigUint;
use serde::{Deserialize, Serialize};

use crate::index_engine::build_index_table;
use crate::oracles::{build_example, ExampleName};
use crate::orbit_invariants::orbit_report;
use crate::vanishing::{b_constant, check_main, e_vector, moduli_dim, Status};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CorpusResult {
    pub id: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// Run the whole corpus. `perturb_b` shifts the constant B before the
/// feasibility re-derivation; it exists so tests can prove the corpus
/// detects an off-by-one there. Production callers pass 0.
pub fn run(perturb_b: i64) -> Vec<CorpusResult> {
    let names = ExampleName::all();
    #[cfg(feature = "parallel")]
    {
        names.par_iter().map(|n| run_one(*n, perturb_b)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        names.iter().map(|n| run_one(*n, perturb_b)).collect()
    }
}

fn run_one(name: ExampleName, perturb_b: i64) -> CorpusResult {
    let id = name.id();
    let mut failures = Vec::new();
    let mut check = |label: &str, ok: bool| {
        if !ok {
            failures.push(label.to_string());
        }
    };
    match pipeline(name, perturb_b) {
        Err(e) => failures.push(format!("pipeline error: {e}")),
        Ok(p) => {
            check("m_quantity", p.m == p.expected_m);
            check("d(c)", p.d_c == p.expected_d_c);
            check("component count", p.rows == p.expected_rows);
            check("index rows", p.rows_match);
            check("verdict", p.status == p.expected_status);
            check("feasibility re-derivation", p.rederived_status == p.expected_status);
            check("oracle consistency", p.oracle_consistent);
        }
    }
    CorpusResult {
        passed: failures.is_empty(),
        id,
        failures,
    }
}

struct PipelineOutcome {
    m: i64,
    expected_m: i64,
    d_c: i64,
    expected_d_c: i64,
    rows: usize,
    expected_rows: usize,
    rows_match: bool,
    status: Status,
    expected_status: Status,
    rederived_status: Status,
    oracle_consistent: bool,
}

fn pipeline(name: ExampleName, perturb_b: i64) -> Result<PipelineOutcome, crate::Error> {
    let (spec, expected) = build_example(name)?;
    let d_c = moduli_dim(&spec)?;
    let orbit = orbit_report(&spec)?;
    let table = build_index_table(&spec)?;
    let rows_match = match &expected.uniform_row {
        Some(row) => table.rows.iter().all(|r| r == row),
        None => true,
    };
    let verdict = check_main(&spec, &table)?;
    // independent feasibility re-derivation through the closed form
    let b = b_constant(orbit.m_quantity) + perturb_b;
    let needed: i64 = e_vector(&table, b).iter().sum();
    let rederived_status = if d_c < 0 || d_c.rem_euclid(2) == 1 {
        Status::VanishesTrivially
    } else if needed <= d_c / 2 {
        Status::VanishesModP
    } else {
        Status::Inconclusive
    };
    let oracle_consistent = match &expected.oracle_sw {
        Some(sw) if (sw % BigUint::from(spec.p)).bits() != 0 => {
            verdict.status != Status::VanishesModP
        }
        _ => true,
    };
    Ok(PipelineOutcome {
        m: orbit.m_quantity,
        expected_m: expected.m_quantity,
        d_c,
        expected_d_c: expected.d_c,
        rows: table.rows.len(),
        expected_rows: expected.num_jacobian_components,
        rows_match,
        status: verdict.status,
        expected_status: expected.status,
        rederived_status,
        oracle_consistent,
    })
}
