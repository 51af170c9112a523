//! The decision core: moduli-space dimension, the partition criterion
//! 2 k_j^l < 2 d_j + m over partitions (d_j) of d(c)/2, its closed form via
//! the constant B and the excess vector e, torus-cut variants, the
//! free-action infeasibility argument, the per-component dimension/rank
//! audit, and the adjunction-type inequality for involutions.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::gmanifold::{ActionType, ManifoldSpec};
use crate::index_engine::IndexTable;
use crate::orbit_invariants::orbit_report;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "VANISHES_MOD_P")]
    VanishesModP,
    #[serde(rename = "VANISHES_TRIVIALLY")]
    VanishesTrivially,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
    #[serde(rename = "NOT_APPLICABLE")]
    NotApplicable,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub modulus: u64,
    /// Present iff status is VANISHES_MOD_P; entries are indexed by the
    /// table's weight slots and sum to the required half-dimension.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_partition: Option<Vec<i64>>,
    /// (weight j, component label) with k_j^l > B, when INCONCLUSIVE.
    pub violating_pairs: Vec<(u64, String)>,
    pub narrative: Vec<String>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CutSpec {
    pub d_t: u32,
    pub d_t_g: u32,
    pub invariant: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DimensionAudit {
    pub dim: i64,
    pub rank: i64,
    pub gap_holds: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// Virtual dimension d(c) = (c1^2 - sign)/4 - (1 - b1 + b_+).
pub fn moduli_dim(spec: &ManifoldSpec) -> Result<i64, Error> {
    let n = spec.global.c1_squared - spec.global.signature;
    if n.rem_euclid(4) != 0 {
        return Err(Error::InvalidSpec {
            path: "global".into(),
            msg: format!("c1_squared - signature = {n} is not divisible by 4"),
        });
    }
    Ok(n / 4 - (1 - spec.global.b1 as i64 + spec.global.b_plus as i64))
}

/// B = (m-1)/2 for odd m, (m-2)/2 for even m; the largest value with
/// 2B < m, so k <= B iff 2k < 2*0 + m.
pub fn b_constant(m: i64) -> i64 {
    if m.rem_euclid(2) == 1 {
        (m - 1) / 2
    } else {
        (m - 2) / 2
    }
}

/// e_j = max_l max(k_j^l - B, 0): the smallest admissible d_j per slot.
pub fn e_vector(table: &IndexTable, b: i64) -> Vec<i64> {
    (0..table.num_slots())
        .map(|j| {
            table
                .rows
                .iter()
                .map(|row| (row[j] - b).max(0))
                .max()
                .unwrap_or(0)
        })
        .collect()
}

/// Brute-force search for a partition (d_j) of `target` with
/// 2 k_j^l < 2 d_j + m for all j, l; independent of the closed form.
/// Slots are filled greedily from the left with the largest remainder,
/// so a hit is the partition with maximal leading entries.
pub fn partition_search(table: &IndexTable, m: i64, target: i64) -> Option<Vec<i64>> {
    if target < 0 {
        return None;
    }
    let slots = table.num_slots();
    let col_max: Vec<i64> = (0..slots)
        .map(|j| table.rows.iter().map(|row| row[j]).max().unwrap_or(0))
        .collect();
    let mut d = vec![0i64; slots];
    fn rec(col_max: &[i64], m: i64, d: &mut Vec<i64>, j: usize, rest: i64) -> bool {
        if j == col_max.len() {
            return rest == 0;
        }
        for v in (0..=rest).rev() {
            if 2 * col_max[j] < 2 * v + m {
                d[j] = v;
                if rec(col_max, m, d, j + 1, rest - v) {
                    return true;
                }
            }
        }
        false
    }
    if rec(&col_max, m, &mut d, 0, target) {
        Some(d)
    } else {
        None
    }
}

/// Resolve b_+^G: explicit value if supplied, otherwise m - 1 + b1_G.
/// Returns (value, warning) with a warning when neither is derivable.
fn resolve_bplus_g(spec: &ManifoldSpec, m: i64) -> (Option<i64>, Option<String>) {
    if let Some(b) = spec.global.bplus_g {
        return (Some(b as i64), None);
    }
    if let Some(b1g) = spec.global.b1_g {
        return (Some(m - 1 + b1g as i64), None);
    }
    (
        None,
        Some("b_+^G not derivable from the input; assuming b_+^G >= 1 holds".into()),
    )
}

fn feasibility_verdict(
    table: &IndexTable,
    m: i64,
    target: i64,
    constrained_from: usize,
    modulus: u64,
    mut narrative: Vec<String>,
    warnings: Vec<String>,
) -> Verdict {
    let b = b_constant(m);
    let e = e_vector(table, b);
    narrative.push(format!("B = {b}"));
    narrative.push(format!(
        "e = ({})",
        e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
    ));
    let needed: i64 = e[constrained_from..].iter().sum();
    if needed <= target {
        // slack goes to the first slot; for the orbit-sum cut variant that
        // slot is unconstrained anyway
        let mut witness = e.clone();
        for w in witness[..constrained_from].iter_mut() {
            *w = 0;
        }
        witness[0] += target - needed;
        narrative.push(format!(
            "sum of required d_j = {needed} <= {target}: criterion satisfied"
        ));
        Verdict {
            status: Status::VanishesModP,
            modulus,
            witness_partition: Some(witness),
            violating_pairs: vec![],
            narrative,
            warnings,
        }
    } else {
        let weights = table.weights();
        let mut violating = Vec::new();
        for (label, row) in table.labels.iter().zip(&table.rows) {
            for (j, k) in row.iter().enumerate() {
                if j >= constrained_from && *k > b {
                    violating.push((weights[j], label.clone()));
                }
            }
        }
        narrative.push(format!(
            "sum of required d_j = {needed} > {target}: no admissible partition"
        ));
        Verdict {
            status: Status::Inconclusive,
            modulus,
            witness_partition: None,
            violating_pairs: violating,
            narrative,
            warnings,
        }
    }
}

/// The main criterion: decide whether the fixed-point data forces
/// SW_X(c) = 0 mod p.
pub fn check_main(spec: &ManifoldSpec, table: &IndexTable) -> Result<Verdict, Error> {
    let orbit = orbit_report(spec)?;
    let m = orbit.m_quantity;
    let d = moduli_dim(spec)?;
    let (bplus_g, warn) = resolve_bplus_g(spec, m);
    let warnings: Vec<String> = warn.into_iter().collect();
    let mut narrative = vec![
        format!("d(c) = {d}"),
        format!("m = 1 - b1_G + bplus_G = {m}"),
    ];
    if spec.global.b_plus < 2 || bplus_g.is_some_and(|b| b < 1) {
        narrative.push("hypotheses b_+ >= 2 and b_+^G >= 1 are not met".into());
        return Ok(Verdict {
            status: Status::NotApplicable,
            modulus: spec.p,
            witness_partition: None,
            violating_pairs: vec![],
            narrative,
            warnings,
        });
    }
    if d < 0 || d.rem_euclid(2) == 1 {
        narrative.push("d(c) odd or negative: the invariant vanishes by definition".into());
        return Ok(Verdict {
            status: Status::VanishesTrivially,
            modulus: spec.p,
            witness_partition: None,
            violating_pairs: vec![],
            narrative,
            warnings,
        });
    }
    Ok(feasibility_verdict(
        table,
        m,
        d / 2,
        0,
        spec.p,
        narrative,
        warnings,
    ))
}

/// Variant cutting the moduli space along a d_T-dimensional torus of classes.
/// For an invariant torus the criterion constrains every weight slot; for a
/// torus moved by the action it constrains j >= 1 only and the conclusion is
/// a congruence for the orbit sum of invariants.
pub fn check_torus_cut(
    spec: &ManifoldSpec,
    table: &IndexTable,
    cut: &CutSpec,
) -> Result<Verdict, Error> {
    if spec.is_free() {
        return Err(Error::NotApplicable(
            "the torus-cut criterion requires a nonempty fixed-point set".into(),
        ));
    }
    if spec.action_type == ActionType::OddTypeP2 {
        return Err(Error::NotApplicable(
            "the torus-cut criterion is stated for equivariant structures only".into(),
        ));
    }
    if cut.d_t_g > cut.d_t {
        return Err(Error::InvalidSpec {
            path: "cut".into(),
            msg: format!("d_T_G = {} exceeds d_T = {}", cut.d_t_g, cut.d_t),
        });
    }
    let orbit = orbit_report(spec)?;
    let d = moduli_dim(spec)?;
    let (bplus_g, warn) = resolve_bplus_g(spec, orbit.m_quantity);
    let Some(bplus_g) = bplus_g else {
        return Err(Error::Unsupported(
            "the torus-cut criterion needs b_+^G (supply bplus_G or b1_G)".into(),
        ));
    };
    let warnings: Vec<String> = warn.into_iter().collect();
    let m = 1 - cut.d_t_g as i64 + bplus_g;
    let conclusion = if cut.invariant {
        "conclusion: SW evaluated against U^{d'} and the torus class vanishes mod p"
    } else {
        "conclusion: the orbit sum of SW evaluations vanishes mod p"
    };
    let mut narrative = vec![
        format!("d(c) = {d}, d_T = {}, d_T_G = {}", cut.d_t, cut.d_t_g),
        format!("m = 1 - d_T_G + bplus_G = {m}"),
        conclusion.to_string(),
    ];
    let dd = d - cut.d_t as i64;
    if dd < 0 || dd.rem_euclid(2) == 1 {
        narrative.push("d(c) - d_T odd or negative: the evaluation vanishes by definition".into());
        return Ok(Verdict {
            status: Status::VanishesTrivially,
            modulus: spec.p,
            witness_partition: None,
            violating_pairs: vec![],
            narrative,
            warnings,
        });
    }
    let constrained_from = if cut.invariant { 0 } else { 1 };
    Ok(feasibility_verdict(
        table,
        m,
        dd / 2,
        constrained_from,
        spec.p,
        narrative,
        warnings,
    ))
}

/// A free action never satisfies the criterion: every multiplicity equals
/// (c1^2 - sign)/(8p) = (d(c) + 2)/(2p) + const, and summing the strict
/// inequalities 2k < 2 d_j + m over j contradicts sum d_j = d(c)/2.
pub fn free_infeasibility(spec: &ManifoldSpec) -> Result<Verdict, Error> {
    if !spec.is_free() {
        return Err(Error::Unsupported(
            "free_infeasibility applies to free actions only".into(),
        ));
    }
    let d = moduli_dim(spec)?;
    let narrative = vec![
        format!("d(c) = {d}"),
        "for a free action 1 - b1 + b_+ = p (1 - b1_G + bplus_G), so the \
         inequalities 2k_j < 2 d_j + m sum over j to d(c) < d(c): no partition exists"
            .into(),
    ];
    Ok(Verdict {
        status: Status::Inconclusive,
        modulus: spec.p,
        witness_partition: None,
        violating_pairs: vec![],
        narrative,
        warnings: vec![],
    })
}

/// Per-component comparison of the dimension of the reducible locus with
/// the rank of the obstruction: dim = 2k_+ - 1 + a + b1_G versus
/// rank = 2(k_- + d_j) + a + bplus_G; the criterion needs dim < rank.
pub fn dimension_audit(
    k_plus: i64,
    k_minus: i64,
    a: i64,
    d_j: i64,
    b1_g: i64,
    bplus_g: i64,
) -> DimensionAudit {
    let dim = 2 * k_plus - 1 + a + b1_g;
    let rank = 2 * (k_minus + d_j) + a + bplus_g;
    DimensionAudit {
        dim,
        rank,
        gap_holds: dim < rank,
    }
}

/// For a spin involution with trivial determinant line: the fixed-point set
/// contains no isolated points, forcing 1 - b1 + b_+ >= 2m when
/// d(c) = 0 mod 4 and >= 2(m - 1) when d(c) = 2 mod 4.
pub fn adjunction_conclusion(spec: &ManifoldSpec) -> Result<AdjunctionReport, Error> {
    if spec.p != 2 || spec.global.c1_squared != 0 || !spec.spin {
        return Err(Error::NotApplicable(
            "the adjunction bound applies to spin involutions with c1^2 = 0".into(),
        ));
    }
    let d = moduli_dim(spec)?;
    let m = orbit_report(spec)?.m_quantity;
    let lhs = 1 - spec.global.b1 as i64 + spec.global.b_plus as i64;
    let rhs = if d.rem_euclid(4) == 0 { 2 * m } else { 2 * (m - 1) };
    Ok(AdjunctionReport {
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}
