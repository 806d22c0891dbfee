//! Elements `a + b·√d` of a quadratic field ℚ(√d).
//!
//! A field tag of `0` marks a plain rational that has not yet met an
//! irrational partner; it adopts the tag of whatever it is combined with.
//! Combining two different nonzero tags is a programming error for the
//! operator impls and a [`Error::Domain`] for the `try_*` methods.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{euclid_gcd, rational_gcd, Poly};
use super::ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct QuadExt {
    d: i64,
    a: BigRational,
    b: BigRational,
}

/// Alternative name for elements of a quadratic field.
pub type QuadExtElem = QuadExt;

pub(crate) fn is_squarefree(n: i64) -> bool {
    let m = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

impl QuadExt {
    /// `a + b·√d`; `d` must be squarefree and different from 0 and 1.
    pub fn new(d: i64, a: BigRational, b: BigRational) -> Result<Self> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(Error::domain(format!(
                "field tag {d} is not a squarefree integer other than 0, 1"
            )));
        }
        Ok(QuadExt { d, a, b })
    }

    pub fn rational(a: BigRational) -> Self {
        QuadExt {
            d: 0,
            a,
            b: BigRational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `√n` for any nonzero integer; square factors are pulled out so the
    /// result carries a squarefree tag (or none when `n` is a perfect square).
    pub fn sqrt(n: i64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::from_int(0));
        }
        let mut core = n;
        let mut outside: i64 = 1;
        let mut p: i64 = 2;
        while p * p <= core.abs() {
            while core % (p * p) == 0 {
                core /= p * p;
                outside *= p;
            }
            p += 1;
        }
        if core == 1 {
            return Ok(Self::from_int(outside));
        }
        Self::new(
            core,
            BigRational::zero(),
            BigRational::from_integer(outside.into()),
        )
    }

    /// Field tag, `0` for an untagged rational.
    pub fn tag(&self) -> i64 {
        self.d
    }

    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of `√d`.
    pub fn im(&self) -> &BigRational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.a.clone())
    }

    fn merge_tag(&self, other: &Self) -> Result<i64> {
        match (self.d, other.d) {
            (0, t) | (t, 0) => Ok(t),
            (s, t) if s == t => Ok(s),
            (s, t) => {
                // rationals that happen to carry a tag are still compatible
                if self.b.is_zero() {
                    Ok(t)
                } else if other.b.is_zero() {
                    Ok(s)
                } else {
                    Err(Error::domain(format!(
                        "cannot combine elements of Q(sqrt({s})) and Q(sqrt({t}))"
                    )))
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.merge_tag(other)?;
        Ok(QuadExt {
            d,
            a: &self.a + &other.a,
            b: &self.b + &other.b,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other.clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.merge_tag(other)?;
        let dd = BigRational::from_integer(d.into());
        Ok(QuadExt {
            d,
            a: &self.a * &other.a + &self.b * &other.b * dd,
            b: &self.a * &other.b + &self.b * &other.a,
        })
    }

    pub fn conjugate(&self) -> Self {
        QuadExt {
            d: self.d,
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        let dd = BigRational::from_integer(self.d.into());
        &self.a * &self.a - dd * &self.b * &self.b
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.a.is_zero() && self.b.is_zero() {
            return Err(Error::domain("inverse of zero"));
        }
        let n = self.norm();
        Ok(QuadExt {
            d: self.d,
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        if self.a != other.a || self.b != other.b {
            return false;
        }
        self.b.is_zero() || self.d == other.d
    }
}

impl Eq for QuadExt {}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: Self) -> Self {
        self.try_add(&rhs).expect("mixed quadratic fields")
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: Self) -> Self {
        self.try_sub(&rhs).expect("mixed quadratic fields")
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: Self) -> Self {
        self.try_mul(&rhs).expect("mixed quadratic fields")
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> Self {
        QuadExt {
            d: self.d,
            a: -self.a,
            b: -self.b,
        }
    }
}

impl ring::Ring for QuadExt {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_int(n)
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let inv = divisor.inverse().ok()?;
        self.try_mul(&inv).ok()
    }
}

impl ring::Field for QuadExt {
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }
    fn rational_parts(&self) -> Vec<BigRational> {
        vec![self.a.clone(), self.b.clone()]
    }
    fn poly_gcd(p: &Poly<Self>, q: &Poly<Self>) -> Poly<Self> {
        let rational = |f: &Poly<Self>| f.coeffs().iter().all(QuadExt::is_rational);
        if rational(p) && rational(q) {
            let g = rational_gcd(&p.map(|c| c.a.clone()), &q.map(|c| c.a.clone()));
            return g.map(|c| QuadExt::rational(c.clone()));
        }
        euclid_gcd(p, q)
    }
}

impl From<BigRational> for QuadExt {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rational(&self.a));
        }
        let root = format!("sqrt({})", self.d);
        let irr = if self.b == BigRational::from_integer(1.into()) {
            root
        } else if self.b == BigRational::from_integer((-1).into()) {
            format!("-{root}")
        } else {
            format!("{}*{root}", fmt_rational(&self.b))
        };
        if self.a.is_zero() {
            write!(f, "{irr}")
        } else if irr.starts_with('-') {
            write!(f, "{}{irr}", fmt_rational(&self.a))
        } else {
            write!(f, "{}+{irr}", fmt_rational(&self.a))
        }
    }
}
