//! Topological invariants of the orbit space X/G: Euler characteristic,
//! signature via the G-signature defects, and the integer
//! m = (chi(X/G) + sign(X/G))/2 = 1 - b1(X/G) + b_+(X/G)
//! that bounds the multiplicities in the vanishing criterion.

use num::BigInt;

use crate::cyclotomic::Rational;
use crate::error::Error;
use crate::gmanifold::{euler_of_fixed_set, FixedComponent, ManifoldSpec};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitReport {
    pub euler_orbit: i64,
    pub sign_orbit: i64,
    pub sign_defects: Vec<i64>,
    pub m_quantity: i64,
}

/// chi(X/G) = (chi(X) + (p-1) chi(X^G)) / p.
pub fn euler_orbit(spec: &ManifoldSpec) -> Result<i64, Error> {
    let p = spec.p as i64;
    let n = spec.global.euler + (p - 1) * euler_of_fixed_set(spec);
    if n.rem_euclid(p) != 0 {
        return Err(Error::InvalidSpec {
            path: "global.euler".into(),
            msg: format!("chi(X) + (p-1) chi(X^G) = {n} is not divisible by p = {p}"),
        });
    }
    Ok(n / p)
}

/// Signature defect at g^k, 1 <= k < p, in the cases where it has a closed
/// form: free actions (0), involutions with only surface components (sum of
/// self-intersections), and pseudofree order-3 actions ((m_+ - m_-)/3 where
/// m_+ counts points of rotation type {1,2} and m_- the others). Anything
/// else needs an explicit override.
pub fn sign_defect(spec: &ManifoldSpec, k: u64) -> Result<i64, Error> {
    debug_assert!(k >= 1 && k < spec.p);
    if let Some(sd) = &spec.sign_defects_override {
        return Ok(sd[(k - 1) as usize]);
    }
    if spec.is_free() {
        return Ok(0);
    }
    if spec.p == 2 && spec.fixed_components.iter().all(|c| !c.is_isolated()) {
        let total = spec
            .fixed_components
            .iter()
            .map(|c| match c {
                FixedComponent::Surface { self_int, .. } => *self_int,
                FixedComponent::Isolated { .. } => unreachable!(),
            })
            .sum();
        return Ok(total);
    }
    if spec.p == 3 && spec.fixed_components.iter().all(FixedComponent::is_isolated) {
        let mut plus = 0i64;
        let mut minus = 0i64;
        for c in &spec.fixed_components {
            let FixedComponent::Isolated { w1, w2, .. } = c else { unreachable!() };
            let (a, b) = (w1.rem_euclid(3), w2.rem_euclid(3));
            if a == b {
                minus += 1;
            } else {
                plus += 1;
            }
        }
        let d = plus - minus;
        if d.rem_euclid(3) != 0 {
            return Err(Error::InvalidSpec {
                path: "fixed_components".into(),
                msg: format!("m_+ - m_- = {d} must be divisible by 3"),
            });
        }
        return Ok(d / 3);
    }
    Err(Error::Unsupported(
        "no closed form for the signature defect of this action; \
         supply sign_defects_override"
            .into(),
    ))
}

/// sign(X/G) = (sign(X) + sum of defects) / p.
pub fn sign_orbit(spec: &ManifoldSpec, defects: &[i64]) -> Result<i64, Error> {
    let p = spec.p as i64;
    let n = spec.global.signature + defects.iter().sum::<i64>();
    if n.rem_euclid(p) != 0 {
        return Err(Error::InvalidSpec {
            path: "global.signature".into(),
            msg: format!("sign(X) + defects = {n} is not divisible by p = {p}"),
        });
    }
    Ok(n / p)
}

/// Compute the orbit-space invariants and the integer m, cross-checking
/// against supplied quotient Betti numbers when present.
pub fn orbit_report(spec: &ManifoldSpec) -> Result<OrbitReport, Error> {
    let euler = euler_orbit(spec)?;
    let defects: Vec<i64> = (1..spec.p)
        .map(|k| sign_defect(spec, k))
        .collect::<Result<_, _>>()?;
    let sign = sign_orbit(spec, &defects)?;
    let half = Rational::new(BigInt::from(euler + sign), BigInt::from(2));
    if !half.is_integer() {
        return Err(Error::InvalidSpec {
            path: "global".into(),
            msg: format!("(chi(X/G) + sign(X/G))/2 = {half} is not an integer"),
        });
    }
    let m = (euler + sign) / 2;
    if let (Some(b1g), Some(bpg)) = (spec.global.b1_g, spec.global.bplus_g) {
        let expected = 1 - b1g as i64 + bpg as i64;
        if expected != m {
            return Err(Error::InvalidSpec {
                path: "global".into(),
                msg: format!(
                    "1 - b1_G + bplus_G = {expected} disagrees with \
                     (chi(X/G) + sign(X/G))/2 = {m}"
                ),
            });
        }
    }
    Ok(OrbitReport {
        euler_orbit: euler,
        sign_orbit: sign,
        sign_defects: defects,
        m_quantity: m,
    })
}

/// For a free action 1 - b1(X) + b_+(X) must equal p (1 - b1_G + bplus_G).
pub fn free_relation_holds(spec: &ManifoldSpec, m: i64) -> bool {
    let lhs = 1 - spec.global.b1 as i64 + spec.global.b_plus as i64;
    lhs == spec.p as i64 * m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmanifold::{ActionType, GlobalInvariants, JacobianComponent};

    fn k3_involution() -> ManifoldSpec {
        ManifoldSpec {
            p: 2,
            action_type: ActionType::OddTypeP2,
            global: GlobalInvariants {
                b1: 0, b_plus: 3, signature: -16, euler: 24, c1_squared: 0,
                b1_g: Some(0), bplus_g: Some(1),
            },
            spin: true,
            fixed_components: vec![FixedComponent::Surface {
                genus: 3, self_int: 4, normal_weight: 1, det_weight: 0,
            }],
            jacobian_components: vec![JacobianComponent { label: "origin".into(), twists: vec![0] }],
            k_table_override: None,
            sign_defects_override: None,
        }
    }

    fn pseudofree_z3() -> ManifoldSpec {
        // 3 points of rotation type {1,2}, 3 of type {1,1}
        let mut comps = Vec::new();
        let mut twists = Vec::new();
        for _ in 0..3 {
            comps.push(FixedComponent::Isolated { w1: 1, w2: 2, det_weight: 0, p2_sign: None });
            twists.push(0);
        }
        for _ in 0..3 {
            comps.push(FixedComponent::Isolated { w1: 1, w2: 1, det_weight: 0, p2_sign: None });
            twists.push(0);
        }
        ManifoldSpec {
            p: 3,
            action_type: ActionType::Equivariant,
            global: GlobalInvariants {
                b1: 8, b_plus: 7, signature: 0, euler: 0, c1_squared: 0,
                b1_g: Some(2), bplus_g: Some(3),
            },
            spin: true,
            fixed_components: comps,
            jacobian_components: vec![JacobianComponent { label: "origin".into(), twists }],
            k_table_override: None,
            sign_defects_override: None,
        }
    }

    #[test]
    fn k3_orbit() {
        let r = orbit_report(&k3_involution()).unwrap();
        assert_eq!(r.euler_orbit, 10);
        assert_eq!(r.sign_defects, vec![4]);
        assert_eq!(r.sign_orbit, -6);
        assert_eq!(r.m_quantity, 2);
    }

    #[test]
    fn pseudofree_z3_orbit() {
        let r = orbit_report(&pseudofree_z3()).unwrap();
        assert_eq!(r.euler_orbit, 4);
        assert_eq!(r.sign_defects, vec![0, 0]);
        assert_eq!(r.sign_orbit, 0);
        assert_eq!(r.m_quantity, 2);
    }

    #[test]
    fn free_orbit() {
        let mut spec = pseudofree_z3();
        spec.fixed_components.clear();
        spec.jacobian_components = vec![JacobianComponent { label: "o".into(), twists: vec![] }];
        spec.global = GlobalInvariants {
            b1: 2, b_plus: 1, signature: 0, euler: 0, c1_squared: 0,
            b1_g: Some(2), bplus_g: Some(1),
        };
        let r = orbit_report(&spec).unwrap();
        assert_eq!(r.euler_orbit, 0);
        assert_eq!(r.sign_orbit, 0);
        assert_eq!(r.m_quantity, 0);
        assert!(free_relation_holds(&spec, 0));
    }

    #[test]
    fn defect_audit() {
        // p * sign(X/G) - sign(X) equals the defect sum
        for spec in [k3_involution(), pseudofree_z3()] {
            let r = orbit_report(&spec).unwrap();
            let total: i64 = r.sign_defects.iter().sum();
            assert_eq!(spec.p as i64 * r.sign_orbit - spec.global.signature, total);
        }
    }

    #[test]
    fn override_and_unsupported() {
        let mut spec = pseudofree_z3();
        spec.p = 5;
        spec.global.b1_g = None;
        spec.global.bplus_g = None;
        assert!(matches!(sign_defect(&spec, 1), Err(Error::Unsupported(_))));
        spec.sign_defects_override = Some(vec![1, 2, 3, 4]);
        assert_eq!(sign_defect(&spec, 3).unwrap(), 3);
    }

    #[test]
    fn inconsistent_quotient_betti_rejected() {
        let mut spec = k3_involution();
        spec.global.bplus_g = Some(2);
        assert!(matches!(orbit_report(&spec), Err(Error::InvalidSpec { .. })));
    }
}
