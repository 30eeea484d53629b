//! Arithmetic in GF(3) and GF(9) = GF(3)[i] with i² = −1.
//!
//! `ZETA = 1 + i` generates the multiplicative group of GF(9).
//! Frobenius is `a + bi ↦ a − bi`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F3(u8);

impl F3 {
    pub const ZERO: F3 = F3(0);
    pub const ONE: F3 = F3(1);
    pub const MINUS_ONE: F3 = F3(2);

    pub const fn new(v: i64) -> F3 {
        F3(v.rem_euclid(3) as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Signed representative in {−1, 0, 1}.
    pub fn signed(self) -> i8 {
        match self.0 {
            0 => 0,
            1 => 1,
            _ => -1,
        }
    }

    pub fn all() -> [F3; 3] {
        [F3(0), F3(1), F3(2)]
    }

    /// Inverse of a nonzero element; every nonzero element is its own inverse.
    pub fn inv(self) -> Result<F3, Error> {
        if self.0 == 0 {
            Err(Error::ZeroInverse)
        } else {
            Ok(self)
        }
    }
}

impl Add for F3 {
    type Output = F3;
    fn add(self, rhs: F3) -> F3 {
        F3((self.0 + rhs.0) % 3)
    }
}

impl AddAssign for F3 {
    fn add_assign(&mut self, rhs: F3) {
        *self = *self + rhs;
    }
}

impl Sub for F3 {
    type Output = F3;
    fn sub(self, rhs: F3) -> F3 {
        F3((self.0 + 3 - rhs.0) % 3)
    }
}

impl Neg for F3 {
    type Output = F3;
    fn neg(self) -> F3 {
        F3((3 - self.0) % 3)
    }
}

impl Mul for F3 {
    type Output = F3;
    fn mul(self, rhs: F3) -> F3 {
        F3((self.0 * rhs.0) % 3)
    }
}

impl fmt::Display for F3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `re + im·i` in GF(9).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct F9 {
    pub re: F3,
    pub im: F3,
}

pub const ZETA: F9 = F9 { re: F3::ONE, im: F3::ONE };
pub const I: F9 = F9 { re: F3::ZERO, im: F3::ONE };

impl F9 {
    pub const ZERO: F9 = F9 { re: F3::ZERO, im: F3::ZERO };
    pub const ONE: F9 = F9 { re: F3::ONE, im: F3::ZERO };

    pub const fn new(re: i64, im: i64) -> F9 {
        F9 { re: F3::new(re), im: F3::new(im) }
    }

    pub fn from_f3(a: F3) -> F9 {
        F9 { re: a, im: F3::ZERO }
    }

    /// Index in 0..9 as `re + 3·im`.
    pub fn index(self) -> usize {
        self.re.value() as usize + 3 * self.im.value() as usize
    }

    pub fn from_index(k: usize) -> F9 {
        F9::new((k % 3) as i64, ((k / 3) % 3) as i64)
    }

    pub fn all() -> impl Iterator<Item = F9> {
        (0..9).map(F9::from_index)
    }

    pub fn nonzero() -> impl Iterator<Item = F9> {
        (1..9).map(F9::from_index)
    }

    pub fn is_zero(self) -> bool {
        self == F9::ZERO
    }

    pub fn frobenius(self) -> F9 {
        F9 { re: self.re, im: -self.im }
    }

    pub fn conj(self) -> F9 {
        self.frobenius()
    }

    pub fn trace(self) -> F3 {
        self.re + self.re
    }

    pub fn norm(self) -> F3 {
        self.re * self.re + self.im * self.im
    }

    pub fn trace_norm(self) -> (F3, F3) {
        (self.trace(), self.norm())
    }

    /// The F3-component when `self` lies in F3.
    pub fn as_f3(self) -> Option<F3> {
        self.im.is_zero().then_some(self.re)
    }

    pub fn pow(self, mut e: u64) -> F9 {
        let mut base = self;
        let mut acc = F9::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Result<F9, Error> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::ZeroInverse);
        }
        // x⁻¹ = x̄ / N(x)
        Ok(self.conj() * F9::from_f3(n.inv()?))
    }

    pub fn mult_order(self) -> Result<u32, Error> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut x = self;
        let mut n = 1;
        while x != F9::ONE {
            x = x * self;
            n += 1;
        }
        Ok(n)
    }

    pub fn is_square(self) -> bool {
        F9::all().any(|y| y * y == self)
    }
}

impl Add for F9 {
    type Output = F9;
    fn add(self, rhs: F9) -> F9 {
        F9 { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl AddAssign for F9 {
    fn add_assign(&mut self, rhs: F9) {
        *self = *self + rhs;
    }
}

impl Sub for F9 {
    type Output = F9;
    fn sub(self, rhs: F9) -> F9 {
        F9 { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for F9 {
    type Output = F9;
    fn neg(self) -> F9 {
        F9 { re: -self.re, im: -self.im }
    }
}

impl Mul for F9 {
    type Output = F9;
    fn mul(self, rhs: F9) -> F9 {
        F9 {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl Mul<F3> for F9 {
    type Output = F9;
    fn mul(self, rhs: F3) -> F9 {
        F9 { re: self.re * rhs, im: self.im * rhs }
    }
}

impl From<F3> for F9 {
    fn from(a: F3) -> F9 {
        F9::from_f3(a)
    }
}

impl fmt::Display for F9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.value(), self.im.value()) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "i"),
            (0, b) => write!(f, "{b}i"),
            (a, 1) => write!(f, "{a}+i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}

pub fn f9_mul(x: F9, y: F9) -> F9 {
    x * y
}

pub fn frobenius(x: F9) -> F9 {
    x.frobenius()
}

pub fn trace_norm(x: F9) -> (F3, F3) {
    x.trace_norm()
}

pub fn mult_order(x: F9) -> Result<u32, Error> {
    x.mult_order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f9() -> impl Strategy<Value = F9> {
        (0usize..9).prop_map(F9::from_index)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(I * I, -F9::ONE);
        assert_eq!(ZETA * ZETA, -I);
        assert_eq!(ZETA.pow(4), -F9::ONE);
        assert_eq!(ZETA.pow(8), F9::ONE);
        assert_eq!(mult_order(ZETA).unwrap(), 8);
        assert_eq!(mult_order(F9::ONE).unwrap(), 1);
        assert_eq!(mult_order(-F9::ONE).unwrap(), 2);
        assert!(mult_order(F9::ZERO).is_err());
    }

    #[test]
    fn frobenius_values() {
        assert_eq!(frobenius(F9::ONE), F9::ONE);
        assert_eq!(frobenius(I), -I);
        assert_eq!(frobenius(ZETA), ZETA.pow(3));
    }

    #[test]
    fn trace_norm_values() {
        assert_eq!(trace_norm(F9::ZERO), (F3::ZERO, F3::ZERO));
        assert_eq!(trace_norm(I), (F3::ZERO, F3::ONE));
        assert_eq!(trace_norm(ZETA), (F3::new(2), F3::new(2)));
    }

    #[test]
    fn zeta_powers_enumerate_units() {
        let mut seen: Vec<F9> = (0..8).map(|k| ZETA.pow(k)).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 8);
        assert!(!seen.contains(&F9::ZERO));
    }

    #[test]
    fn pairwise_identities() {
        for x in F9::all() {
            assert_eq!(x.frobenius().frobenius(), x);
            for y in F9::all() {
                assert_eq!((x + y).trace(), x.trace() + y.trace());
                assert_eq!((x * y).norm(), x.norm() * y.norm());
                assert_eq!((x + y).norm(), x.norm() + y.norm() + (x.conj() * y).trace());
            }
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(F9::ZERO.to_string(), "0");
        assert_eq!(F9::new(2, 0).to_string(), "2");
        assert_eq!(I.to_string(), "i");
        assert_eq!(F9::new(0, 2).to_string(), "2i");
        assert_eq!(ZETA.to_string(), "1+i");
        assert_eq!(F9::new(2, 2).to_string(), "2+2i");
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(x in f9()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(x * x.inv().unwrap(), F9::ONE);
        }

        #[test]
        fn ring_laws(x in f9(), y in f9(), z in f9()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!((x * y).frobenius(), x.frobenius() * y.frobenius());
        }
    }
}
