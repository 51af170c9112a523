//! The representation ring R(Z_p) = Z[t]/(t^p - 1): virtual representations
//! as integer multiplicity vectors, character evaluation at group elements,
//! and exact recovery of multiplicities from a full character vector.

use num::ToPrimitive;

use crate::cyclotomic::{rat_int, CycloNum, Rational};
use crate::error::Error;

/// A virtual representation sum k_j * C_j of the cyclic group of prime
/// order p, where C_j is the weight-j one-dimensional complex representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepElement {
    p: u64,
    mult: Vec<i64>,
}

impl RepElement {
    pub fn new(p: u64, mult: Vec<i64>) -> Self {
        assert_eq!(mult.len(), p as usize, "multiplicity vector must have length p");
        RepElement { p, mult }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn mult(&self) -> &[i64] {
        &self.mult
    }

    pub fn virtual_dim(&self) -> i64 {
        self.mult.iter().sum()
    }

    /// Character at g^k: sum_j k_j * zeta_p^{jk}.
    pub fn character(&self, k: i64) -> CycloNum {
        let mut acc = CycloNum::zero(self.p);
        for (j, kj) in self.mult.iter().enumerate() {
            if *kj == 0 {
                continue;
            }
            let z = CycloNum::root_of_unity(self.p, j as i64 * k).unwrap();
            acc = &acc + &z.scale(&rat_int(*kj));
        }
        acc
    }

    /// The representation with multiplicities cyclically shifted by c,
    /// i.e. k'_j = k_{(j - c) mod p}.
    pub fn shifted(&self, c: i64) -> Self {
        let p = self.p as i64;
        let mult = (0..p)
            .map(|j| self.mult[((j - c).rem_euclid(p)) as usize])
            .collect();
        RepElement { p: self.p, mult }
    }
}

/// Character values of a (purported) virtual Z_p-representation at all
/// group elements; entry k is the value at g^k, so entry 0 is the ordinary
/// numeric index.
#[derive(Clone, PartialEq, Debug)]
pub struct CharacterVector {
    pub p: u64,
    pub values: Vec<CycloNum>,
}

impl CharacterVector {
    pub fn of(r: &RepElement) -> Self {
        CharacterVector {
            p: r.p(),
            values: (0..r.p() as i64).map(|k| r.character(k)).collect(),
        }
    }
}

/// Invert character evaluation: k_j = (1/p) * sum_k values[k] * zeta^{-jk}.
/// Every k_j must come out a rational integer; anything else means the
/// character vector is not that of a virtual Z_p-representation.
pub fn from_characters(cv: &CharacterVector) -> Result<RepElement, Error> {
    let p = cv.p;
    assert_eq!(cv.values.len(), p as usize, "character vector must have length p");
    for v in &cv.values {
        assert_eq!(v.order(), p, "character values must live in Q(zeta_p)");
    }
    let mut mult = Vec::with_capacity(p as usize);
    for j in 0..p {
        let mut s = CycloNum::zero(p);
        for (k, v) in cv.values.iter().enumerate() {
            let z = CycloNum::root_of_unity(p, -((j * k as u64) as i64))?;
            s = &s + &(v * &z);
        }
        let kj = s
            .as_rational()
            .map(|r| r / Rational::from_integer(p.into()))
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
            .ok_or_else(|| Error::Integrality {
                j: j as usize,
                value: s.to_string(),
            })?;
        mult.push(kj);
    }
    Ok(RepElement::new(p, mult))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::rat;
    use proptest::prelude::*;

    fn zeta(m: u64, a: i64) -> CycloNum {
        CycloNum::root_of_unity(m, a).unwrap()
    }

    #[test]
    fn character_examples() {
        let trivial = RepElement::new(3, vec![1, 0, 0]);
        for k in 0..3 {
            assert_eq!(trivial.character(k), CycloNum::one(3));
        }
        let regular = RepElement::new(3, vec![1, 1, 1]);
        assert_eq!(regular.character(1), CycloNum::zero(3));
        let defining = RepElement::new(3, vec![0, 1, 0]);
        assert_eq!(defining.character(2), zeta(3, 2));
    }

    #[test]
    fn from_characters_examples() {
        let z = CharacterVector {
            p: 3,
            values: vec![CycloNum::zero(3); 3],
        };
        assert_eq!(from_characters(&z).unwrap(), RepElement::new(3, vec![0, 0, 0]));

        let reg = CharacterVector {
            p: 3,
            values: vec![CycloNum::from_int(3, 3), CycloNum::zero(3), CycloNum::zero(3)],
        };
        assert_eq!(from_characters(&reg).unwrap(), RepElement::new(3, vec![1, 1, 1]));

        let bad = CharacterVector {
            p: 3,
            values: vec![CycloNum::one(3), CycloNum::zero(3), CycloNum::zero(3)],
        };
        assert!(matches!(from_characters(&bad), Err(Error::Integrality { .. })));
    }

    #[test]
    fn fractional_character_rejected() {
        let cv = CharacterVector {
            p: 2,
            values: vec![
                CycloNum::from_rational(2, rat(1, 2)),
                CycloNum::from_rational(2, rat(1, 2)),
            ],
        };
        assert!(matches!(from_characters(&cv), Err(Error::Integrality { .. })));
    }

    proptest! {
        #[test]
        fn roundtrip(p in prop::sample::select(vec![2u64, 3, 5, 7]),
                     seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) as i64 % 9) - 4 };
            let mult: Vec<i64> = (0..p).map(|_| next()).collect();
            let r = RepElement::new(p, mult);
            let back = from_characters(&CharacterVector::of(&r)).unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn conjugation_symmetry(p in prop::sample::select(vec![3u64, 5, 7]),
                                seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) as i64 % 7) - 3 };
            let r = RepElement::new(p, (0..p).map(|_| next()).collect());
            for k in 1..p as i64 {
                let lhs = r.character(p as i64 - k);
                let rhs = r.character(k).galois(-1).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn weight_shift(p in prop::sample::select(vec![3u64, 5]),
                        c in 0i64..5,
                        seed in any::<u64>()) {
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) as i64 % 7) - 3 };
            let r = RepElement::new(p, (0..p).map(|_| next()).collect());
            let shifted = r.shifted(c);
            for k in 0..p as i64 {
                let z = CycloNum::root_of_unity(p, c * k).unwrap();
                prop_assert_eq!(shifted.character(k), &z * &r.character(k));
            }
        }
    }
}
