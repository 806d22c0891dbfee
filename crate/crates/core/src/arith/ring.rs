//! Coefficient-ring abstraction shared by the polynomial code.
//!
//! Rings here are commutative integral domains with an exact-division
//! test, which is all the subresultant sequence needs. Fields add inverses
//! and an embedding of the rationals.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::poly::{euclid_gcd, rational_gcd, Poly};

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    /// Exact quotient `self / divisor`, or `None` when the division is not exact.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow_u(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: &BigRational) -> Self;

    /// Rational coordinates of the element over the prime field.
    fn rational_parts(&self) -> Vec<BigRational>;

    /// Monic gcd in `Self[x]`.
    fn poly_gcd(p: &Poly<Self>, q: &Poly<Self>) -> Poly<Self> {
        euclid_gcd(p, q)
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.clone() * r)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        BigInt::from(0)
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(divisor) {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        <BigRational as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!num_traits::Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
    fn rational_parts(&self) -> Vec<BigRational> {
        vec![self.clone()]
    }
    fn poly_gcd(p: &Poly<Self>, q: &Poly<Self>) -> Poly<Self> {
        rational_gcd(p, q)
    }
}

/// `BigRational` from a pair of machine integers.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
