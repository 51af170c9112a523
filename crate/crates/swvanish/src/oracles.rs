//! Independent ground truth: the binomial formula for the Seiberg-Witten
//! invariant of T^2 x Sigma_g, enumeration of flat twisting bundles on a
//! surface with marked points, and fully populated example inputs with
//! their expected pipeline values.

use num::BigUint;

use crate::error::Error;
use crate::gmanifold::{
    ActionType, FixedComponent, GlobalInvariants, JacobianComponent, ManifoldSpec,
};
use crate::vanishing::Status;

/// |SW| of T^2 x Sigma_g with the product Spin^c structure: C(2g-2, g-1).
/// The sign is not determined, but mod-p conclusions only need magnitude.
pub fn sw_torus_surface(g: u64) -> Result<BigUint, Error> {
    if g < 2 {
        return Err(Error::Unsupported(format!(
            "the binomial formula needs genus >= 2, got {g}"
        )));
    }
    Ok(binomial(2 * g - 2, g - 1))
}

fn binomial(n: u64, k: u64) -> BigUint {
    let k = k.min(n - k);
    let mut acc = BigUint::from(1u32);
    for i in 1..=k {
        acc = acc * BigUint::from(n - k + i) / BigUint::from(i);
    }
    acc
}

/// Weights d_n of a flat twisting divisor D = sum d_n p_n, reduced mod p.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DivisorClass {
    pub coefficients: Vec<i64>,
}

fn canonical(v: &[i64], p: i64) -> Vec<i64> {
    // orbit under simultaneous shifts that preserve the total degree mod p
    let n = v.len() as i64;
    let mut best: Option<Vec<i64>> = None;
    for c in 0..p {
        if (n * c).rem_euclid(p) != 0 {
            continue;
        }
        let shifted: Vec<i64> = v.iter().map(|d| (d + c).rem_euclid(p)).collect();
        if best.as_ref().is_none_or(|b| shifted < *b) {
            best = Some(shifted);
        }
    }
    best.unwrap()
}

/// All divisor classes (d_1,...,d_n) mod p with sum d_n = c1 mod p, up to a
/// simultaneous shift of all weights (a global twist, which only shifts the
/// resulting index-table row). Deterministic lexicographic order.
pub fn flat_twist_classes(p: u64, n_points: usize, c1_mod_p: i64) -> Vec<DivisorClass> {
    assert!(n_points >= 1);
    let pi = p as i64;
    let c1 = c1_mod_p.rem_euclid(pi);
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut cur = vec![0i64; n_points];
    fn rec(p: i64, c1: i64, cur: &mut Vec<i64>, i: usize, sum: i64, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            if sum.rem_euclid(p) == c1 {
                out.push(canonical(cur, p));
            }
            return;
        }
        for d in 0..p {
            cur[i] = d;
            rec(p, c1, cur, i + 1, sum + d, out);
        }
    }
    rec(pi, c1, &mut cur, 0, 0, &mut out);
    out.sort();
    out.dedup();
    out.into_iter()
        .map(|coefficients| DivisorClass { coefficients })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ExampleName {
    FermatK3Z2,
    FourTorusZ2,
    T2Sigma3hZ3(u64),
    T1Sigma2Z3,
}

impl ExampleName {
    pub fn all() -> Vec<ExampleName> {
        vec![
            ExampleName::FermatK3Z2,
            ExampleName::FourTorusZ2,
            ExampleName::T2Sigma3hZ3(1),
            ExampleName::T2Sigma3hZ3(2),
            ExampleName::T1Sigma2Z3,
        ]
    }

    pub fn id(&self) -> String {
        match self {
            ExampleName::FermatK3Z2 => "fermat_k3_z2".into(),
            ExampleName::FourTorusZ2 => "four_torus_z2".into(),
            ExampleName::T2Sigma3hZ3(h) => format!("t2_sigma3h_z3(h={h})"),
            ExampleName::T1Sigma2Z3 => "t1_sigma2_z3".into(),
        }
    }
}

/// Expected pipeline values for a built example, to be compared exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expected {
    pub m_quantity: i64,
    pub d_c: i64,
    /// When every index-table row is the same, that row.
    pub uniform_row: Option<Vec<i64>>,
    pub num_jacobian_components: usize,
    pub status: Status,
    /// |SW| of the underlying manifold when known.
    pub oracle_sw: Option<BigUint>,
}

/// Build one of the worked examples together with its expected values.
pub fn build_example(name: ExampleName) -> Result<(ManifoldSpec, Expected), Error> {
    let (spec, expected) = match name {
        ExampleName::FermatK3Z2 => fermat_k3_z2(),
        ExampleName::FourTorusZ2 => four_torus_z2(),
        ExampleName::T2Sigma3hZ3(h) => {
            if h < 1 {
                return Err(Error::Unsupported("h must be >= 1".into()));
            }
            t2_sigma3h_z3(h)
        }
        ExampleName::T1Sigma2Z3 => t1_sigma2_z3(),
    };
    spec.validate()?;
    Ok((spec, expected))
}

/// The K3 surface of Fermat type with the odd-type holomorphic involution;
/// fixed set a genus-3 surface of self-intersection 4.
fn fermat_k3_z2() -> (ManifoldSpec, Expected) {
    let spec = ManifoldSpec {
        p: 2,
        action_type: ActionType::OddTypeP2,
        global: GlobalInvariants {
            b1: 0,
            b_plus: 3,
            signature: -16,
            euler: 24,
            c1_squared: 0,
            b1_g: Some(0),
            bplus_g: Some(1),
        },
        spin: true,
        fixed_components: vec![FixedComponent::Surface {
            genus: 3,
            self_int: 4,
            normal_weight: 1,
            det_weight: 0,
        }],
        jacobian_components: vec![JacobianComponent {
            label: "origin".into(),
            twists: vec![0],
        }],
        k_table_override: None,
        sign_defects_override: None,
    };
    let expected = Expected {
        m_quantity: 2,
        d_c: 0,
        uniform_row: Some(vec![1, 1]),
        num_jacobian_components: 1,
        status: Status::Inconclusive,
        oracle_sw: Some(BigUint::from(1u32)),
    };
    (spec, expected)
}

/// The 4-torus with an odd-type involution fixing four 2-tori of
/// self-intersection 0.
fn four_torus_z2() -> (ManifoldSpec, Expected) {
    let spec = ManifoldSpec {
        p: 2,
        action_type: ActionType::OddTypeP2,
        global: GlobalInvariants {
            b1: 4,
            b_plus: 3,
            signature: 0,
            euler: 0,
            c1_squared: 0,
            b1_g: Some(2),
            bplus_g: Some(1),
        },
        spin: true,
        fixed_components: vec![
            FixedComponent::Surface {
                genus: 1,
                self_int: 0,
                normal_weight: 1,
                det_weight: 0,
            };
            4
        ],
        jacobian_components: vec![JacobianComponent {
            label: "origin".into(),
            twists: vec![0; 4],
        }],
        k_table_override: None,
        sign_defects_override: None,
    };
    let expected = Expected {
        m_quantity: 0,
        d_c: 0,
        uniform_row: Some(vec![0, 0]),
        num_jacobian_components: 1,
        status: Status::Inconclusive,
        oracle_sw: Some(BigUint::from(1u32)),
    };
    (spec, expected)
}

/// T^2 x Sigma_{3h} with the diagonal Z_3 action: rotation with 3 fixed
/// points on the torus times a 3-fold branched covering Sigma_{3h} -> Sigma_h
/// with two branch points q_+ (weight 2) and q_- (weight 1). Fixed points
/// (p_i, q_+) have rotation type (1,2); (p_i, q_-) have type (1,1).
fn t2_sigma3h_z3(h: u64) -> (ManifoldSpec, Expected) {
    let g = 3 * h;
    let mut fixed = Vec::new();
    for _ in 0..3 {
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 2, det_weight: 0, p2_sign: None });
    }
    for _ in 0..3 {
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 1, det_weight: 0, p2_sign: None });
    }
    // flat twistings split as products over the two factors; the weight at
    // (p_i, q_+-) is a_i plus the weight of the surface divisor there
    let torus_classes = flat_twist_classes(3, 3, 0);
    let surface_classes = flat_twist_classes(3, 2, 0);
    let mut jacobian = Vec::new();
    for a in &torus_classes {
        for d in &surface_classes {
            let mut twists = Vec::with_capacity(6);
            for i in 0..3 {
                twists.push(a.coefficients[i] + 2 * d.coefficients[0]);
            }
            for i in 0..3 {
                twists.push(a.coefficients[i] + d.coefficients[1]);
            }
            jacobian.push(JacobianComponent {
                label: format!(
                    "a{}_d{}",
                    digits(&a.coefficients),
                    digits(&d.coefficients)
                ),
                twists,
            });
        }
    }
    let spec = ManifoldSpec {
        p: 3,
        action_type: ActionType::Equivariant,
        global: GlobalInvariants {
            b1: 2 + 2 * g as u32,
            b_plus: 2 * g as u32 + 1,
            signature: 0,
            euler: 0,
            c1_squared: 0,
            b1_g: Some(2 * h as u32),
            bplus_g: Some(2 * h as u32 + 1),
        },
        spin: true,
        fixed_components: fixed,
        jacobian_components: jacobian,
        k_table_override: None,
        sign_defects_override: None,
    };
    let expected = Expected {
        m_quantity: 2,
        d_c: 0,
        uniform_row: Some(vec![0, 0, 0]),
        num_jacobian_components: 9,
        status: Status::VanishesModP,
        oracle_sw: Some(binomial(2 * g - 2, g - 1)),
    };
    (spec, expected)
}

/// T^2 x Sigma_2 with the Z_3 action rotating the torus and acting on
/// Sigma_2 with four fixed points: u_1, u_2 of weight 1 and s_1, s_2 of
/// weight 2. All 12 fixed points are isolated, 6 of each rotation type, so
/// the orbit invariants look exactly like the vanishing examples — but the
/// invariant is 2, not divisible by 3, and the criterion must not fire.
fn t1_sigma2_z3() -> (ManifoldSpec, Expected) {
    let mut fixed = Vec::new();
    for _ in 0..3 {
        // (p_i, u_1), (p_i, u_2): type (1,1); (p_i, s_1), (p_i, s_2): type (1,2)
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 1, det_weight: 0, p2_sign: None });
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 1, det_weight: 0, p2_sign: None });
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 2, det_weight: 0, p2_sign: None });
        fixed.push(FixedComponent::Isolated { w1: 1, w2: 2, det_weight: 0, p2_sign: None });
    }
    let torus_classes = flat_twist_classes(3, 3, 0);
    let surface_classes = flat_twist_classes(3, 4, 0);
    let mut jacobian = Vec::new();
    for a in &torus_classes {
        for d in &surface_classes {
            let mut twists = Vec::with_capacity(12);
            for i in 0..3 {
                twists.push(a.coefficients[i] + d.coefficients[0]);
                twists.push(a.coefficients[i] + d.coefficients[1]);
                twists.push(a.coefficients[i] + 2 * d.coefficients[2]);
                twists.push(a.coefficients[i] + 2 * d.coefficients[3]);
            }
            jacobian.push(JacobianComponent {
                label: format!(
                    "a{}_d{}",
                    digits(&a.coefficients),
                    digits(&d.coefficients)
                ),
                twists,
            });
        }
    }
    let num = jacobian.len();
    let spec = ManifoldSpec {
        p: 3,
        action_type: ActionType::Equivariant,
        global: GlobalInvariants {
            b1: 6,
            b_plus: 5,
            signature: 0,
            euler: 0,
            c1_squared: 0,
            b1_g: Some(0),
            bplus_g: Some(3),
        },
        spin: true,
        fixed_components: fixed,
        jacobian_components: jacobian,
        k_table_override: None,
        sign_defects_override: None,
    };
    let expected = Expected {
        m_quantity: 4,
        d_c: 0,
        uniform_row: None,
        num_jacobian_components: num,
        status: Status::Inconclusive,
        oracle_sw: Some(BigUint::from(2u32)),
    };
    (spec, expected)
}

fn digits(v: &[i64]) -> String {
    v.iter().map(|d| d.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index_engine::build_index_table;
    use crate::orbit_invariants::orbit_report;
    use crate::vanishing::{check_main, moduli_dim};

    #[test]
    fn binomial_oracle() {
        assert_eq!(sw_torus_surface(3).unwrap(), BigUint::from(6u32));
        assert_eq!(sw_torus_surface(2).unwrap(), BigUint::from(2u32));
        assert_eq!(sw_torus_surface(6).unwrap(), BigUint::from(252u32));
        assert!(sw_torus_surface(1).is_err());
    }

    #[test]
    fn divisibility_mod_3() {
        for h in 1..=4u64 {
            let v = sw_torus_surface(3 * h).unwrap();
            assert!((v % BigUint::from(3u32)).bits() == 0, "h = {h}");
        }
    }

    #[test]
    fn twist_class_examples() {
        let c = flat_twist_classes(3, 2, 0);
        let got: Vec<Vec<i64>> = c.into_iter().map(|d| d.coefficients).collect();
        assert_eq!(got, vec![vec![0, 0], vec![1, 2], vec![2, 1]]);

        assert_eq!(flat_twist_classes(2, 1, 0).len(), 1);
        assert_eq!(flat_twist_classes(3, 3, 0).len(), 3);
        assert_eq!(flat_twist_classes(3, 4, 0).len(), 27);
        assert_eq!(flat_twist_classes(5, 3, 2).len(), 25);
    }

    #[test]
    fn twist_classes_closed_under_relabeling() {
        // multiplying every weight by a unit permutes the classes
        for (p, n, c1) in [(3u64, 4usize, 0i64), (3, 2, 0), (5, 3, 0)] {
            let classes = flat_twist_classes(p, n, c1);
            for unit in 2..p as i64 {
                let mut relabeled: Vec<Vec<i64>> = classes
                    .iter()
                    .map(|d| {
                        let v: Vec<i64> = d
                            .coefficients
                            .iter()
                            .map(|x| (x * unit).rem_euclid(p as i64))
                            .collect();
                        canonical(&v, p as i64)
                    })
                    .collect();
                relabeled.sort();
                let plain: Vec<Vec<i64>> = flat_twist_classes(p, n, (c1 * unit).rem_euclid(p as i64))
                    .into_iter()
                    .map(|d| d.coefficients)
                    .collect();
                assert_eq!(relabeled, plain, "p={p} n={n} unit={unit}");
            }
        }
    }

    #[test]
    fn examples_match_expected_values() {
        for name in ExampleName::all() {
            let (spec, expected) = build_example(name).unwrap();
            assert_eq!(moduli_dim(&spec).unwrap(), expected.d_c, "{}", name.id());
            let orbit = orbit_report(&spec).unwrap();
            assert_eq!(orbit.m_quantity, expected.m_quantity, "{}", name.id());
            let table = build_index_table(&spec).unwrap();
            assert_eq!(
                table.rows.len(),
                expected.num_jacobian_components,
                "{}",
                name.id()
            );
            if let Some(row) = &expected.uniform_row {
                for r in &table.rows {
                    assert_eq!(r, row, "{}", name.id());
                }
            }
            let verdict = check_main(&spec, &table).unwrap();
            assert_eq!(verdict.status, expected.status, "{}", name.id());
        }
    }

    #[test]
    fn counterexample_has_violating_rows() {
        let (spec, _) = build_example(ExampleName::T1Sigma2Z3).unwrap();
        let table = build_index_table(&spec).unwrap();
        let verdict = check_main(&spec, &table).unwrap();
        assert_eq!(verdict.status, Status::Inconclusive);
        assert!(!verdict.violating_pairs.is_empty());
        // hand-computed row: a = (0,0,0), d = (0,0,1,2) gives k = (-2,1,1)
        let idx = table.labels.iter().position(|l| l == "a000_d0012").unwrap();
        assert_eq!(table.rows[idx], vec![-2, 1, 1]);
    }

    #[test]
    fn oracle_consistency() {
        // wherever |SW| is known and nonzero mod p, the verdict is never
        // VANISHES_MOD_P
        for name in ExampleName::all() {
            let (spec, expected) = build_example(name).unwrap();
            let Some(sw) = &expected.oracle_sw else { continue };
            if (sw % BigUint::from(spec.p)).bits() != 0 {
                let table = build_index_table(&spec).unwrap();
                let verdict = check_main(&spec, &table).unwrap();
                assert_ne!(verdict.status, Status::VanishesModP, "{}", name.id());
            }
        }
    }
}
