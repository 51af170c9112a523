//! Exact arithmetic in cyclotomic fields Q(zeta_m) for m prime or m = 4.
//!
//! Elements are stored in the power basis 1, zeta, ..., zeta^{phi(m)-1} of
//! Q[t]/Phi_m(t), so equality is coefficient comparison and identities like
//! 1 + zeta + ... + zeta^{p-1} = 0 hold on the nose. All coefficients are
//! arbitrary-precision rationals; arithmetic never overflows or rounds.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;

pub type Rational = BigRational;

/// Small-integer rational constructor, mostly for tests and builders.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Orders handled by [`CycloNum`]: primes, and 4 for the order-2 actions
/// whose lifts generate a cyclic group of order 4.
pub fn supported_order(m: u64) -> bool {
    m == 4 || is_prime(m)
}

/// Degree of Q(zeta_m) over Q.
pub fn phi(m: u64) -> usize {
    if m == 4 {
        2
    } else {
        (m - 1) as usize
    }
}

/// Exponents coprime to m: the Galois group of Q(zeta_m)/Q.
pub fn units(m: u64) -> Vec<u64> {
    (1..m).filter(|k| num::integer::gcd(*k, m) == 1).collect()
}

fn reduce_exp(m: u64, a: i64) -> usize {
    a.rem_euclid(m as i64) as usize
}

/// An element of Q(zeta_m) in canonical power-basis form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloNum {
    order: u64,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(m: u64) -> Self {
        assert!(supported_order(m), "unsupported cyclotomic order {m}");
        CycloNum {
            order: m,
            coeffs: vec![Rational::zero(); phi(m)],
        }
    }

    pub fn one(m: u64) -> Self {
        Self::from_rational(m, Rational::one())
    }

    pub fn from_rational(m: u64, r: Rational) -> Self {
        let mut out = Self::zero(m);
        out.coeffs[0] = r;
        out
    }

    pub fn from_int(m: u64, n: i64) -> Self {
        Self::from_rational(m, rat_int(n))
    }

    /// zeta_m^a in canonical form; the exponent is reduced mod m.
    pub fn root_of_unity(m: u64, a: i64) -> Result<Self, Error> {
        if !supported_order(m) {
            return Err(Error::UnsupportedOrder(m));
        }
        let mut v = vec![Rational::zero(); m as usize];
        v[reduce_exp(m, a)] = Rational::one();
        Ok(Self::canonical(m, v))
    }

    /// Reduce a length-m exponent vector mod the m-th cyclotomic polynomial.
    fn canonical(m: u64, v: Vec<Rational>) -> Self {
        let coeffs = if m == 4 {
            // Phi_4 = t^2 + 1
            vec![&v[0] - &v[2], &v[1] - &v[3]]
        } else {
            // Phi_p = 1 + t + ... + t^{p-1}, so zeta^{p-1} = -(1 + ... + zeta^{p-2})
            let top = v[(m - 1) as usize].clone();
            (0..(m - 1) as usize).map(|i| &v[i] - &top).collect()
        };
        CycloNum { order: m, coeffs }
    }

    fn lift(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.order as usize];
        v[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        v
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The automorphism sending zeta_m to zeta_m^k; requires gcd(k, m) = 1.
    pub fn galois(&self, k: i64) -> Result<Self, Error> {
        let m = self.order;
        let kr = k.rem_euclid(m as i64) as u64;
        if num::integer::gcd(kr, m) != 1 {
            return Err(Error::NotCoprime(k, m));
        }
        let mut v = vec![Rational::zero(); m as usize];
        for (i, c) in self.lift().into_iter().enumerate() {
            let j = (i as u64 * kr % m) as usize;
            v[j] = &v[j] + &c;
        }
        Ok(Self::canonical(m, v))
    }

    /// Multiplicative inverse, computed from the product of Galois conjugates:
    /// a * prod(conjugates) is the field norm, a nonzero rational for a != 0.
    pub fn inverse(&self) -> Result<Self, Error> {
        let m = self.order;
        let mut prod = Self::one(m);
        for k in units(m).into_iter().skip(1) {
            prod = &prod * &self.galois(k as i64)?;
        }
        let norm = (self * &prod)
            .as_rational()
            .expect("norm of a cyclotomic number is rational");
        if norm.is_zero() {
            return Err(Error::DivisionByZero(m));
        }
        Ok(prod.scale(&norm.recip()))
    }
}

/// The square root of zeta_p^a that is itself a p-th root of unity,
/// i.e. zeta_p^{a(p+1)/2}. Only defined for odd prime p; at order 2 or 4
/// there is no canonical sign and the caller must supply one explicitly.
pub fn half_power(m: u64, a: i64) -> Result<CycloNum, Error> {
    if m == 2 || m == 4 {
        return Err(Error::SignUndetermined(m));
    }
    if !is_prime(m) {
        return Err(Error::UnsupportedOrder(m));
    }
    let e = (a as i128) * ((m as i128 + 1) / 2);
    CycloNum::root_of_unity(m, e.rem_euclid(m as i128) as i64)
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        CycloNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        CycloNum {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        assert_eq!(self.order, rhs.order, "cyclotomic order mismatch");
        let m = self.order as usize;
        let (a, b) = (self.lift(), rhs.lift());
        let mut v = vec![Rational::zero(); m];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let k = (i + j) % m;
                v[k] = &v[k] + &(ai * bj);
            }
        }
        CycloNum::canonical(self.order, v)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*z^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
