//! Reduced rational functions in one variable over a field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::poly::Poly;
use super::ring::{Field, Ring};
use super::text::{is_unit_monomial, poly_text, term_count, CoeffText};
use crate::error::{Error, Result};

/// `numer / denom` with the gcd removed and a monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFunc {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let l = den.lc().unwrap().inv().unwrap();
        RatFunc {
            num: num.scale(&l),
            den: den.scale(&l),
        }
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn numer(&self) -> &Poly<F> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// Degree as a map of the projective line: `max(deg num, deg den)`.
    pub fn degree(&self) -> usize {
        self.num.deg0().max(self.den.deg0())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of the zero function"));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.inv()?)
    }

    pub fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.is_constant() {
            return Err(Error::domain("composition with a constant inner function"));
        }
        let n = self.degree();
        let a_pows = powers(&inner.num, n);
        let b_pows = powers(&inner.den, n);
        let homog = |p: &Poly<F>| {
            p.coeffs()
                .iter()
                .enumerate()
                .fold(Poly::zero(), |acc, (i, c)| {
                    acc + (a_pows[i].clone() * b_pows[n - i].clone()).scale(c)
                })
        };
        Ok(Self::reduced(homog(&self.num), homog(&self.den)))
    }

    /// Value at a point, `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        d.inv().map(|di| self.num.eval(x) * di)
    }

    pub fn eval_checked(&self, x: &F) -> Result<F> {
        self.eval(x)
            .ok_or_else(|| Error::Pole(format!("{x:?} is a pole")))
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G) -> RatFunc<G> {
        RatFunc::reduced(self.num.map(&f), self.den.map(&f))
    }

    /// Numerator and denominator rescaled by a common positive rational so
    /// that all coordinates are coprime integers; the denominator keeps a
    /// positive leading coefficient.
    pub fn integral_parts(&self) -> (Poly<F>, Poly<F>) {
        let parts = || {
            self.num
                .coeffs()
                .iter()
                .chain(self.den.coeffs())
                .flat_map(|c| c.rational_parts())
        };
        let l = parts().fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
        let g = parts().fold(BigInt::from(0), |acc, q| {
            acc.gcd(&(q * BigRational::from_integer(l.clone())).to_integer())
        });
        let s = F::from_rational(&BigRational::new(l, g));
        (self.num.scale(&s), self.den.scale(&s))
    }
}

impl<F: Field + CoeffText> RatFunc<F> {
    /// Canonical text with integral coefficients, e.g. `(3*z^2+1)/(9*z^2-1)`.
    pub fn to_text(&self, var: &str) -> String {
        let (n, d) = self.integral_parts();
        let nt = poly_text(&n, var);
        if d.is_constant() && d.lc().is_some_and(|c| c.is_one()) {
            return nt;
        }
        let dt = poly_text(&d, var);
        let nt = if term_count(&n) > 1 {
            format!("({nt})")
        } else {
            nt
        };
        let dt = if d.is_constant() || is_unit_monomial(&d) {
            dt
        } else {
            format!("({dt})")
        };
        format!("{nt}/{dt}")
    }
}

impl<F: Field + CoeffText> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("z"))
    }
}

fn powers<F: Field>(p: &Poly<F>, n: usize) -> Vec<Poly<F>> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(Poly::one());
    for i in 0..n {
        out.push(out[i].clone() * p.clone());
    }
    out
}

impl<F: Field> Add for RatFunc<F> {
    type Output = RatFunc<F>;
    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::reduced(self.num + rhs.num, self.den);
        }
        Self::reduced(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = RatFunc<F>;
    fn neg(self) -> Self {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = RatFunc<F>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = RatFunc<F>;
    fn mul(self, rhs: Self) -> Self {
        Self::reduced(self.num * rhs.num, self.den * rhs.den)
    }
}
