//! Dense univariate polynomials over a [`Ring`].

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty vector and has no degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Polynomial from integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial counted as degree 0.
    pub(crate) fn deg0(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_u(e)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            acc * inner.clone() + Self::constant(c.clone())
        })
    }

    /// Pseudo-remainder `lc(d)^(deg self − deg d + 1) · self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-remainder by zero polynomial");
        let lcd = d.lc().unwrap().clone();
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return r;
        };
        if dr < dd {
            return r;
        }
        let mut extra = (dr - dd + 1) as u32;
        while let Some(deg) = r.degree() {
            if deg < dd {
                break;
            }
            let shift = deg - dd;
            let lr = r.lc().unwrap().clone();
            r = r.scale(&lcd) - (d.scale(&lr)).shift(shift);
            extra -= 1;
        }
        r.scale(&lcd.pow_u(extra))
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Exact quotient in `R[x]`, `None` when `d` does not divide `self`.
    pub fn div_exact_poly(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let lcd = d.lc().unwrap();
        let mut r = self.clone();
        let mut q = vec![R::zero(); r.coeffs.len().saturating_sub(dd)];
        while let Some(deg) = r.degree() {
            if deg < dd {
                return None;
            }
            let c = r.lc().unwrap().div_exact(lcd)?;
            let shift = deg - dd;
            r = r - d.scale(&c).shift(shift);
            q[shift] = c;
        }
        Some(Self::new(q))
    }
}

impl<F: Field> Poly<F> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lc().unwrap().inv().unwrap();
        let mut r = self.clone();
        let mut q = vec![F::zero(); r.coeffs.len().saturating_sub(dd)];
        while let Some(deg) = r.degree() {
            if deg < dd {
                break;
            }
            let c = r.lc().unwrap().clone() * inv.clone();
            let shift = deg - dd;
            r = r - d.scale(&c).shift(shift);
            q[shift] = c;
        }
        (Self::new(q), r)
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        F::poly_gcd(self, other)
    }

    /// Squarefree decomposition (Yun): `self = unit · ∏ fᵢ^mᵢ` with the
    /// `fᵢ` monic, squarefree and pairwise coprime, one factor per multiplicity.
    pub fn squarefree_factor(&self) -> Result<SquarefreeFactorization<F>> {
        let unit = self
            .lc()
            .ok_or_else(|| Error::domain("squarefree factorization of the zero polynomial"))?
            .clone();
        let f = self.monic();
        let mut factors = Vec::new();
        if f.deg0() == 0 {
            return Ok(SquarefreeFactorization { unit, factors });
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let c = df.div_rem(&a0).0;
        let mut d = c - b.derivative();
        let mut mult = 1u32;
        while b.deg0() > 0 {
            let a = b.gcd(&d);
            b = b.div_rem(&a).0;
            let c = d.div_rem(&a).0;
            d = c - b.derivative();
            if a.deg0() > 0 {
                factors.push((a, mult));
            }
            mult += 1;
        }
        Ok(SquarefreeFactorization { unit, factors })
    }
}

/// Output of [`Poly::squarefree_factor`].
#[derive(Clone, Debug, PartialEq)]
pub struct SquarefreeFactorization<F> {
    pub unit: F,
    pub factors: Vec<(Poly<F>, u32)>,
}

impl<F: Field> SquarefreeFactorization<F> {
    /// `unit · ∏ fᵢ^mᵢ`.
    pub fn reassemble(&self) -> Poly<F> {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (p, m)| {
                acc * p.pow(*m)
            })
    }

    /// Multiplicities of the distinct roots over an algebraic closure,
    /// one entry per root.
    pub fn root_multiplicities(&self) -> Vec<u32> {
        self.factors
            .iter()
            .flat_map(|(p, m)| std::iter::repeat_n(*m, p.deg0()))
            .collect()
    }
}

/// Monic gcd by the Euclidean algorithm over the field.
pub(crate) fn euclid_gcd<F: Field>(p: &Poly<F>, q: &Poly<F>) -> Poly<F> {
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Monic gcd over ℚ through the primitive remainder sequence over ℤ, which
/// keeps coefficient sizes bounded by the inputs.
pub(crate) fn rational_gcd(p: &Poly<BigRational>, q: &Poly<BigRational>) -> Poly<BigRational> {
    let (mut a, mut b) = (p.clear_denominators().1, q.clear_denominators().1);
    if a.deg0() < b.deg0() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = a.pseudo_rem(&b).primitive_part();
        a = b;
        b = r;
    }
    a.map(|c| BigRational::from_integer(c.clone())).monic()
}

impl Poly<BigInt> {
    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::from(0), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if self.is_zero() {
            return self.clone();
        }
        let c = if self.lc().unwrap().is_negative() {
            -c
        } else {
            c
        };
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }
}

impl Poly<BigRational> {
    /// Scale by a positive rational so that all coefficients are coprime
    /// integers; returns `(scale, integer polynomial)` with `self = poly / scale`.
    pub fn clear_denominators(&self) -> (BigRational, Poly<BigInt>) {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect();
        let p = Poly::new(ints);
        let g = p.content();
        if p.is_zero() {
            return (BigRational::from_integer(1.into()), p);
        }
        let p = Poly::new(p.coeffs.iter().map(|c| c / &g).collect());
        (BigRational::new(l, g), p)
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Poly::new(long)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div_exact_poly(divisor)
    }
}
