//! Equivariant Dirac index computation from fixed-point data.
//!
//! Character values at nontrivial group elements are sums of local
//! contributions over fixed components, twisted by the flat-bundle weight of
//! the Jacobian component at hand; the trivial-element entry is the ordinary
//! index (c1^2 - signature)/8. Inverting the character vector yields the
//! multiplicity row (k_0, ..., k_{p-1}) for that Jacobian component.

use num::BigInt;

use crate::cyclotomic::{half_power, rat, rat_int, CycloNum, Rational};
use crate::error::Error;
use crate::gmanifold::{ActionType, FixedComponent, JacobianComponent, ManifoldSpec};
use crate::rep_ring::{from_characters, CharacterVector, RepElement};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Multiplicity table k_j^l: one integer row per Jacobian fixed component.
/// For odd-type order-2 actions the two columns carry the weights 1 and 3
/// of the order-4 lift; otherwise column j is weight j in 0..p.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub struct IndexTable {
    pub p: u64,
    pub odd_type: bool,
    pub labels: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

impl IndexTable {
    pub fn weights(&self) -> Vec<u64> {
        if self.odd_type {
            vec![1, 3]
        } else {
            (0..self.p).collect()
        }
    }

    pub fn num_slots(&self) -> usize {
        if self.odd_type {
            2
        } else {
            self.p as usize
        }
    }
}

/// Ordinary Dirac index (c1^2 - signature)/8; errors when not an integer.
pub fn ordinary_index(spec: &ManifoldSpec) -> Result<i64, Error> {
    let d = spec.global.c1_squared - spec.global.signature;
    if d.rem_euclid(8) != 0 {
        return Err(Error::InvalidSpec {
            path: "global".into(),
            msg: format!("c1_squared - signature = {d} is not divisible by 8"),
        });
    }
    Ok(d / 8)
}

/// Local contribution of an isolated fixed point to the character at g^k:
/// nu^{1/2} / ((w1^{1/2} - w1^{-1/2})(w2^{1/2} - w2^{-1/2})) with
/// w_i = zeta^{k w_i}, nu = zeta^{k det_weight}. For odd p all half powers
/// follow the p-th-root rule; for p = 2 the sign is not canonical and must
/// be supplied per component.
pub fn contribution_isolated(c: &FixedComponent, k: u64, p: u64) -> Result<CycloNum, Error> {
    let FixedComponent::Isolated { w1, w2, det_weight, p2_sign } = c else {
        return Err(Error::Unsupported("contribution_isolated needs an isolated component".into()));
    };
    if p == 2 {
        let Some(sign) = p2_sign else {
            return Err(Error::SignUndetermined(2));
        };
        // |1/((w^{1/2}-w^{-1/2})^2)| = 1/4 at w = -1; sign and the square
        // root of nu = (-1)^{det_weight} are the caller's explicit choice.
        let i_pow = CycloNum::root_of_unity(4, *det_weight)?;
        return Ok(i_pow.scale(&rat(*sign as i64, 4)));
    }
    let k = k as i64;
    let nu_half = half_power(p, k * det_weight)?;
    let mut den = CycloNum::one(p);
    for w in [*w1, *w2] {
        let a = half_power(p, k * w)?;
        let b = half_power(p, -k * w)?;
        den = &den * &(&a - &b);
    }
    Ok(&nu_half * &den.inverse()?)
}

/// Local contribution of a fixed surface to the character at g^k:
/// -nu^{1/2} * (1/2) * (w^{1/2}+w^{-1/2})/(w^{1/2}-w^{-1/2})^2 * [S]^2
/// with w = zeta^{k normal_weight}. For p = 2 of odd type, w = -1 kills the
/// numerator, so the value is 0 for every sign choice; an even-type order-2
/// action has no fixed surface at all.
pub fn contribution_surface(
    c: &FixedComponent,
    k: u64,
    p: u64,
    action: ActionType,
) -> Result<CycloNum, Error> {
    let FixedComponent::Surface { self_int, normal_weight, det_weight, .. } = c else {
        return Err(Error::Unsupported("contribution_surface needs a surface component".into()));
    };
    if p == 2 {
        return match action {
            ActionType::OddTypeP2 => Ok(CycloNum::zero(4)),
            ActionType::Equivariant => Err(Error::Unsupported(
                "an even-type involution has isolated fixed points only".into(),
            )),
        };
    }
    let k = k as i64;
    let nu_half = half_power(p, k * det_weight)?;
    let a = half_power(p, k * normal_weight)?;
    let b = half_power(p, -k * normal_weight)?;
    let num = &a + &b;
    let den = (&a - &b).pow(2);
    let frac = &num * &den.inverse()?;
    Ok((&nu_half * &frac).scale(&rat(-*self_int, 2)))
}

fn contribution(
    c: &FixedComponent,
    k: u64,
    p: u64,
    action: ActionType,
) -> Result<CycloNum, Error> {
    match c {
        FixedComponent::Isolated { .. } => contribution_isolated(c, k, p),
        FixedComponent::Surface { .. } => contribution_surface(c, k, p, action),
    }
}

/// Full character vector (entries at g^0, ..., g^{p-1}) for one Jacobian
/// component of an equivariant action. Values live in Q(zeta_p).
pub fn character_vector(
    spec: &ManifoldSpec,
    jc: &JacobianComponent,
) -> Result<CharacterVector, Error> {
    let p = spec.p;
    let ind = ordinary_index(spec)?;
    // Order-2 contributions are computed in Q(zeta_4) and must sum to a
    // rational before entering the character vector over Q(zeta_2).
    let work_order = if p == 2 { 4 } else { p };
    let mut values = vec![CycloNum::from_rational(p, rat_int(ind))];
    for k in 1..p {
        let mut acc = CycloNum::zero(work_order);
        for (n, c) in spec.fixed_components.iter().enumerate() {
            let twist = jc.twists[n];
            let e = if p == 2 { 2 } else { 1 } * k as i64 * twist;
            let zeta_t = CycloNum::root_of_unity(work_order, e)?;
            let f = contribution(c, k, p, spec.action_type)?;
            acc = &acc + &(&zeta_t * &f);
        }
        let v = if p == 2 {
            let r = acc.as_rational().ok_or_else(|| Error::Integrality {
                j: k as usize,
                value: acc.to_string(),
            })?;
            CycloNum::from_rational(2, r)
        } else {
            acc
        };
        values.push(v);
    }
    Ok(CharacterVector { p, values })
}

/// Multiplicity row for one Jacobian component of an equivariant action.
pub fn equivariant_index(
    spec: &ManifoldSpec,
    jc: &JacobianComponent,
) -> Result<RepElement, Error> {
    if spec.is_free() {
        return Err(Error::Unsupported(
            "equivariant_index needs a nonempty fixed-point set".into(),
        ));
    }
    from_characters(&character_vector(spec, jc)?)
}

/// For a free action every multiplicity equals (c1^2 - signature)/(8p).
pub fn free_case_index(spec: &ManifoldSpec) -> Result<RepElement, Error> {
    let p = spec.p;
    let d = spec.global.c1_squared - spec.global.signature;
    let v = Rational::new(BigInt::from(d), BigInt::from(8 * p));
    if !v.is_integer() {
        return Err(Error::InvalidSpec {
            path: "global".into(),
            msg: format!("(c1_squared - signature)/(8p) = {v} is not an integer"),
        });
    }
    let k: i64 = d / (8 * p as i64);
    Ok(RepElement::new(p, vec![k; p as usize]))
}

fn odd_type_row(spec: &ManifoldSpec) -> Result<Vec<i64>, Error> {
    if spec.fixed_components.iter().any(FixedComponent::is_isolated) {
        return Err(Error::Unsupported(
            "an odd-type involution has a 2-dimensional fixed-point set".into(),
        ));
    }
    let ind = ordinary_index(spec)?;
    if ind.rem_euclid(2) != 0 {
        return Err(Error::InvalidSpec {
            path: "global".into(),
            msg: format!("odd-type index {ind} must be even to split as k_1 = k_3"),
        });
    }
    Ok(vec![ind / 2, ind / 2])
}

/// Build the whole table: the override verbatim when present, the uniform
/// free-action row, the k_1 = k_3 split for odd-type involutions, or one
/// equivariant index row per Jacobian component.
pub fn build_index_table(spec: &ManifoldSpec) -> Result<IndexTable, Error> {
    build_table(spec, true)
}

/// Sequential variant of [`build_index_table`]; rows of the table are
/// independent, so the default path fans them out across threads.
pub fn build_index_table_seq(spec: &ManifoldSpec) -> Result<IndexTable, Error> {
    build_table(spec, false)
}

#[allow(unused_variables)]
fn build_table(spec: &ManifoldSpec, parallel: bool) -> Result<IndexTable, Error> {
    let odd_type = spec.action_type == ActionType::OddTypeP2;
    if let Some(kt) = &spec.k_table_override {
        let ind = ordinary_index(spec)?;
        for (i, row) in kt.rows.iter().enumerate() {
            let dim: i64 = row.iter().sum();
            if dim != ind {
                return Err(Error::InvalidSpec {
                    path: format!("k_table_override.rows[{i}]"),
                    msg: format!("virtual dimension {dim} != ordinary index {ind}"),
                });
            }
        }
        return Ok(IndexTable {
            p: spec.p,
            odd_type,
            labels: kt.labels.clone(),
            rows: kt.rows.clone(),
        });
    }
    let labels: Vec<String> = spec
        .jacobian_components
        .iter()
        .map(|jc| jc.label.clone())
        .collect();
    let rows: Vec<Vec<i64>> = if spec.is_free() {
        vec![free_case_index(spec)?.mult().to_vec()]
    } else if odd_type {
        let row = odd_type_row(spec)?;
        vec![row; spec.jacobian_components.len()]
    } else {
        let compute = |jc: &JacobianComponent| -> Result<Vec<i64>, Error> {
            Ok(equivariant_index(spec, jc)?.mult().to_vec())
        };
        #[cfg(feature = "parallel")]
        {
            if parallel {
                spec.jacobian_components
                    .par_iter()
                    .map(compute)
                    .collect::<Result<_, _>>()?
            } else {
                spec.jacobian_components
                    .iter()
                    .map(compute)
                    .collect::<Result<_, _>>()?
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            spec.jacobian_components
                .iter()
                .map(compute)
                .collect::<Result<_, _>>()?
        }
    };
    Ok(IndexTable {
        p: spec.p,
        odd_type,
        labels,
        rows,
    })
}

/// Character vectors per Jacobian component, for reporting. For odd-type
/// involutions the entries are k_1 + k_3 and (k_1 - k_3) * i in Q(zeta_4).
pub fn character_table(spec: &ManifoldSpec) -> Result<Vec<(String, Vec<CycloNum>)>, Error> {
    if spec.action_type == ActionType::OddTypeP2 {
        let table = build_index_table_seq(spec)?;
        let mut out = Vec::new();
        for (label, row) in table.labels.iter().zip(&table.rows) {
            let c0 = CycloNum::from_int(4, row[0] + row[1]);
            let c1 = CycloNum::root_of_unity(4, 1)?.scale(&rat_int(row[0] - row[1]));
            out.push((label.clone(), vec![c0, c1]));
        }
        return Ok(out);
    }
    if spec.is_free() {
        let r = free_case_index(spec)?;
        let jc = &spec.jacobian_components[0];
        return Ok(vec![(
            jc.label.clone(),
            (0..spec.p as i64).map(|k| r.character(k)).collect(),
        )]);
    }
    spec.jacobian_components
        .iter()
        .map(|jc| Ok((jc.label.clone(), character_vector(spec, jc)?.values)))
        .collect()
}
