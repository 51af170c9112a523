//! Assembling a full analysis of one input document into a report that can
//! be rendered as text or serialized to JSON. Every value is exact:
//! rationals are formatted "a/b", cyclotomic values as coefficient tuples.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cyclotomic::CycloNum;
use crate::error::Error;
use crate::gmanifold::{load_spec, ActionType, ManifoldSpec};
use crate::index_engine::{build_index_table, character_table, IndexTable};
use crate::orbit_invariants::orbit_report;
use crate::vanishing::{
    b_constant, check_main, check_torus_cut, e_vector, moduli_dim, partition_search, CutSpec,
    Verdict,
};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SpecSummary {
    pub p: u64,
    pub action_type: ActionType,
    pub free: bool,
    pub fixed_components: usize,
    pub jacobian_components: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct OrbitSummary {
    pub euler_orbit: i64,
    pub sign_orbit: i64,
    pub sign_defects: Vec<i64>,
    pub m_quantity: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Report {
    pub spec_sha256: String,
    pub summary: SpecSummary,
    pub index_table: IndexTable,
    pub orbit: OrbitSummary,
    pub d_c: i64,
    pub b_constant: i64,
    pub e_vector: Vec<i64>,
    pub verdict: Verdict,
    /// Witness found by the independent brute-force search, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub searched_partition: Option<Vec<i64>>,
}

fn sha256_hex(document: &str) -> String {
    let mut h = Sha256::new();
    h.update(document.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn summarize(spec: &ManifoldSpec) -> SpecSummary {
    SpecSummary {
        p: spec.p,
        action_type: spec.action_type,
        free: spec.is_free(),
        fixed_components: spec.fixed_components.len(),
        jacobian_components: spec.jacobian_components.len(),
    }
}

fn assemble(
    document: &str,
    spec: &ManifoldSpec,
    verdict: Verdict,
    table: IndexTable,
    with_search: bool,
) -> Result<Report, Error> {
    let orbit = orbit_report(spec)?;
    let b = b_constant(orbit.m_quantity);
    let e = e_vector(&table, b);
    let d_c = moduli_dim(spec)?;
    let searched_partition = if with_search && d_c >= 0 && d_c % 2 == 0 {
        partition_search(&table, orbit.m_quantity, d_c / 2)
    } else {
        None
    };
    Ok(Report {
        spec_sha256: sha256_hex(document),
        summary: summarize(spec),
        index_table: table,
        orbit: OrbitSummary {
            euler_orbit: orbit.euler_orbit,
            sign_orbit: orbit.sign_orbit,
            sign_defects: orbit.sign_defects,
            m_quantity: orbit.m_quantity,
        },
        d_c,
        b_constant: b,
        e_vector: e,
        verdict,
        searched_partition,
    })
}

/// Run the main criterion on a JSON document.
pub fn analyze(document: &str, with_search: bool) -> Result<Report, Error> {
    let spec = load_spec(document)?;
    let table = build_index_table(&spec)?;
    let verdict = check_main(&spec, &table)?;
    assemble(document, &spec, verdict, table, with_search)
}

/// Run the torus-cut criterion on a JSON document.
pub fn analyze_cut(document: &str, cut: &CutSpec) -> Result<Report, Error> {
    let spec = load_spec(document)?;
    let table = build_index_table(&spec)?;
    let verdict = check_torus_cut(&spec, &table, cut)?;
    assemble(document, &spec, verdict, table, false)
}

fn fmt_row(row: &[i64]) -> String {
    format!(
        "({})",
        row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    )
}

fn fmt_cyclo(v: &CycloNum) -> String {
    format!(
        "({})",
        v.coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

pub fn render_index_table(table: &IndexTable) -> String {
    let mut out = String::new();
    let weights = table.weights();
    out.push_str(&format!(
        "index table (columns are weights {}):\n",
        fmt_row(&weights.iter().map(|w| *w as i64).collect::<Vec<_>>())
    ));
    for (label, row) in table.labels.iter().zip(&table.rows) {
        out.push_str(&format!("  {label}: {}\n", fmt_row(row)));
    }
    out
}

/// Exact character values per component, one line per power of the
/// generator, as coefficient tuples in the ambient cyclotomic field.
pub fn render_characters(spec: &ManifoldSpec) -> Result<String, Error> {
    let mut out = String::new();
    for (label, values) in character_table(spec)? {
        out.push_str(&format!("characters of {label}:\n"));
        for (k, v) in values.iter().enumerate() {
            out.push_str(&format!("  g^{k}: {}\n", fmt_cyclo(v)));
        }
    }
    Ok(out)
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str(&format!("spec sha256: {}\n", report.spec_sha256));
    out.push_str(&format!(
        "p = {}, {} fixed components, {} Jacobian components{}\n",
        report.summary.p,
        report.summary.fixed_components,
        report.summary.jacobian_components,
        if report.summary.free { " (free action)" } else { "" },
    ));
    out.push_str(&render_index_table(&report.index_table));
    out.push_str(&format!(
        "orbit space: euler = {}, signature = {}, defects = {}, m = {}\n",
        report.orbit.euler_orbit,
        report.orbit.sign_orbit,
        fmt_row(&report.orbit.sign_defects),
        report.orbit.m_quantity,
    ));
    out.push_str(&format!(
        "d(c) = {}, B = {}, e = {}\n",
        report.d_c,
        report.b_constant,
        fmt_row(&report.e_vector)
    ));
    for line in &report.verdict.narrative {
        out.push_str(&format!("  {line}\n"));
    }
    for w in &report.verdict.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.push_str(&format!("verdict: {:?}\n", report.verdict.status));
    if let Some(w) = &report.verdict.witness_partition {
        out.push_str(&format!("witness partition: {}\n", fmt_row(w)));
    }
    if let Some(s) = &report.searched_partition {
        out.push_str(&format!("search partition: {}\n", fmt_row(s)));
    }
    if !report.verdict.violating_pairs.is_empty() {
        out.push_str("violating pairs (weight, component):\n");
        for (j, l) in &report.verdict.violating_pairs {
            out.push_str(&format!("  ({j}, {l})\n"));
        }
    }
    out
}
