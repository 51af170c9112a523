//! Input data model for a problem instance: global topological invariants of
//! the 4-manifold X, fixed-point data of the Z_p action, Spin^c data, and the
//! flat-bundle twists attached to the fixed components of the Jacobian torus.
//!
//! Specs are ingested from JSON, validated once, and immutable afterwards.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::is_prime;
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ActionType {
    /// Odd p, or an order-2 action whose lift to the Spin^c bundle has order 2.
    Equivariant,
    /// Order-2 action whose lift to the Spin^c bundle generates Z_4.
    OddTypeP2,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GlobalInvariants {
    pub b1: u32,
    pub b_plus: u32,
    pub signature: i64,
    pub euler: i64,
    pub c1_squared: i64,
    #[serde(rename = "b1_G", default, skip_serializing_if = "Option::is_none")]
    pub b1_g: Option<u32>,
    #[serde(rename = "bplus_G", default, skip_serializing_if = "Option::is_none")]
    pub bplus_g: Option<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum FixedComponent {
    /// Isolated fixed point with tangent rotation weights (w1, w2) mod p.
    Isolated {
        w1: i64,
        w2: i64,
        det_weight: i64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p2_sign: Option<i8>,
    },
    /// Fixed surface with normal rotation weight mod p.
    Surface {
        genus: u32,
        self_int: i64,
        normal_weight: i64,
        det_weight: i64,
    },
}

impl FixedComponent {
    pub fn is_isolated(&self) -> bool {
        matches!(self, FixedComponent::Isolated { .. })
    }
}

/// A fixed component of the Jacobian torus, described by the weight of the
/// flat twisting bundle at each fixed component of X.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JacobianComponent {
    pub label: String,
    pub twists: Vec<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KTableOverride {
    pub labels: Vec<String>,
    pub rows: Vec<Vec<i64>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldSpec {
    pub p: u64,
    pub action_type: ActionType,
    pub global: GlobalInvariants,
    #[serde(default)]
    pub spin: bool,
    pub fixed_components: Vec<FixedComponent>,
    pub jacobian_components: Vec<JacobianComponent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_table_override: Option<KTableOverride>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_defects_override: Option<Vec<i64>>,
}

fn err(path: &str, msg: impl Into<String>) -> Error {
    Error::InvalidSpec {
        path: path.to_string(),
        msg: msg.into(),
    }
}

impl ManifoldSpec {
    pub fn is_free(&self) -> bool {
        self.fixed_components.is_empty()
    }

    /// Number of index-table columns: p weights, or 2 for the odd-type case.
    pub fn num_weights(&self) -> usize {
        match self.action_type {
            ActionType::OddTypeP2 => 2,
            ActionType::Equivariant => self.p as usize,
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        let p = self.p;
        if !is_prime(p) {
            return Err(err("p", format!("{p} is not prime")));
        }
        if self.action_type == ActionType::OddTypeP2 && p != 2 {
            return Err(err("action_type", "odd_type_p2 requires p = 2"));
        }
        for (n, c) in self.fixed_components.iter().enumerate() {
            let path = |f: &str| format!("fixed_components[{n}].{f}");
            match c {
                FixedComponent::Isolated { w1, w2, p2_sign, .. } => {
                    if w1.rem_euclid(p as i64) == 0 {
                        return Err(err(&path("w1"), "rotation weight must be nonzero mod p"));
                    }
                    if w2.rem_euclid(p as i64) == 0 {
                        return Err(err(&path("w2"), "rotation weight must be nonzero mod p"));
                    }
                    if let Some(s) = p2_sign {
                        if *s != 1 && *s != -1 {
                            return Err(err(&path("p2_sign"), "sign must be 1 or -1"));
                        }
                    }
                }
                FixedComponent::Surface { normal_weight, .. } => {
                    if normal_weight.rem_euclid(p as i64) == 0 {
                        return Err(err(
                            &path("normal_weight"),
                            "rotation weight must be nonzero mod p",
                        ));
                    }
                }
            }
        }
        if self.jacobian_components.is_empty() {
            return Err(err("jacobian_components", "must be nonempty"));
        }
        if self.is_free() && self.jacobian_components.len() != 1 {
            return Err(err(
                "jacobian_components",
                "a free action carries exactly one Jacobian component",
            ));
        }
        for (l, jc) in self.jacobian_components.iter().enumerate() {
            if jc.twists.len() != self.fixed_components.len() {
                return Err(err(
                    &format!("jacobian_components[{l}].twists"),
                    format!(
                        "length {} does not match {} fixed components",
                        jc.twists.len(),
                        self.fixed_components.len()
                    ),
                ));
            }
        }
        if let Some(origin) = self.jacobian_components.first() {
            if origin.twists.iter().any(|t| t.rem_euclid(p as i64) != 0) {
                return Err(err(
                    "jacobian_components[0].twists",
                    "the origin component must have all-zero twists",
                ));
            }
        }
        if let Some(kt) = &self.k_table_override {
            if kt.rows.len() != kt.labels.len() {
                return Err(err("k_table_override", "labels/rows length mismatch"));
            }
            for (i, row) in kt.rows.iter().enumerate() {
                if row.len() != self.num_weights() {
                    return Err(err(
                        &format!("k_table_override.rows[{i}]"),
                        format!("row width must be {}", self.num_weights()),
                    ));
                }
            }
        }
        if let Some(sd) = &self.sign_defects_override {
            if sd.len() != (p - 1) as usize {
                return Err(err(
                    "sign_defects_override",
                    format!("must have length p - 1 = {}", p - 1),
                ));
            }
        }
        if self.spin && self.global.c1_squared == 0 {
            let s = self.global.euler + self.global.signature;
            if s.rem_euclid(4) != 0 {
                return Err(err(
                    "global",
                    format!("spin manifold needs euler + signature = 0 mod 4, got {s}"),
                ));
            }
        }
        Ok(())
    }
}

/// Parse and validate a JSON spec document.
pub fn load_spec(document: &str) -> Result<ManifoldSpec, Error> {
    let spec: ManifoldSpec = serde_json::from_str(document)?;
    spec.validate()?;
    Ok(spec)
}

/// Serialize a spec back to the JSON input format.
pub fn emit_spec(spec: &ManifoldSpec) -> String {
    serde_json::to_string_pretty(spec).expect("spec serialization cannot fail")
}

/// Euler characteristic of the fixed-point set: 1 per isolated point,
/// 2 - 2g per genus-g surface.
pub fn euler_of_fixed_set(spec: &ManifoldSpec) -> i64 {
    spec.fixed_components
        .iter()
        .map(|c| match c {
            FixedComponent::Isolated { .. } => 1,
            FixedComponent::Surface { genus, .. } => 2 - 2 * *genus as i64,
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal(p: u64) -> ManifoldSpec {
        ManifoldSpec {
            p,
            action_type: ActionType::Equivariant,
            global: GlobalInvariants {
                b1: 0,
                b_plus: 3,
                signature: 0,
                euler: 4,
                c1_squared: 0,
                b1_g: None,
                bplus_g: None,
            },
            spin: false,
            fixed_components: vec![FixedComponent::Isolated {
                w1: 1,
                w2: 2,
                det_weight: 0,
                p2_sign: None,
            }],
            jacobian_components: vec![JacobianComponent {
                label: "origin".into(),
                twists: vec![0],
            }],
            k_table_override: None,
            sign_defects_override: None,
        }
    }

    #[test]
    fn roundtrip() {
        let spec = minimal(3);
        let parsed = load_spec(&emit_spec(&spec)).unwrap();
        assert_eq!(parsed, spec);
    }

    #[test]
    fn nonprime_rejected() {
        let spec = minimal(4);
        let doc = emit_spec(&spec);
        match load_spec(&doc) {
            Err(Error::InvalidSpec { path, .. }) => assert_eq!(path, "p"),
            other => panic!("expected non-prime error, got {other:?}"),
        }
    }

    #[test]
    fn zero_weight_rejected() {
        let mut spec = minimal(3);
        spec.fixed_components[0] = FixedComponent::Isolated {
            w1: 0,
            w2: 1,
            det_weight: 0,
            p2_sign: None,
        };
        match load_spec(&emit_spec(&spec)) {
            Err(Error::InvalidSpec { path, .. }) => assert_eq!(path, "fixed_components[0].w1"),
            other => panic!("expected weight error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let doc = emit_spec(&minimal(3)).replace("\"spin\": false", "\"spin\": false, \"extra\": 1");
        assert!(matches!(load_spec(&doc), Err(Error::Parse(_))));
    }

    #[test]
    fn twist_length_checked() {
        let mut spec = minimal(3);
        spec.jacobian_components[0].twists = vec![0, 0];
        assert!(load_spec(&emit_spec(&spec)).is_err());
    }

    #[test]
    fn origin_twists_must_vanish() {
        let mut spec = minimal(3);
        spec.jacobian_components[0].twists = vec![1];
        assert!(load_spec(&emit_spec(&spec)).is_err());
    }

    #[test]
    fn free_action_single_component() {
        let mut spec = minimal(3);
        spec.fixed_components.clear();
        spec.jacobian_components = vec![
            JacobianComponent { label: "a".into(), twists: vec![] },
            JacobianComponent { label: "b".into(), twists: vec![] },
        ];
        assert!(load_spec(&emit_spec(&spec)).is_err());
        spec.jacobian_components.truncate(1);
        assert!(load_spec(&emit_spec(&spec)).is_ok());
    }

    #[test]
    fn euler_of_fixed_set_examples() {
        let mut spec = minimal(3);
        spec.fixed_components = vec![
            FixedComponent::Isolated { w1: 1, w2: 2, det_weight: 0, p2_sign: None };
            6
        ];
        spec.jacobian_components[0].twists = vec![0; 6];
        assert_eq!(euler_of_fixed_set(&spec), 6);

        spec.fixed_components = vec![FixedComponent::Surface {
            genus: 3,
            self_int: 4,
            normal_weight: 1,
            det_weight: 0,
        }];
        spec.jacobian_components[0].twists = vec![0];
        assert_eq!(euler_of_fixed_set(&spec), -4);

        spec.fixed_components.clear();
        spec.jacobian_components[0].twists = vec![];
        assert_eq!(euler_of_fixed_set(&spec), 0);
    }
}
