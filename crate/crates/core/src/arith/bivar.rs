//! Sparse bivariate integer polynomials in `X` and `Y`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::ring::Field;

/// `Σ c_ij X^i Y^j` keyed by `(i, j)`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: descending total degree, then descending
    /// power of `X`.
    pub fn terms(&self) -> Vec<((u32, u32), &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(&k, c)| (k, c)).collect();
        v.sort_by_key(|&((i, j), _)| (std::cmp::Reverse(i + j), std::cmp::Reverse(i)));
        v
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// `Φ(Y, X)`.
    pub fn swap(&self) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.swap()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division of every coefficient; panics if inexact.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, v)| {
                    let (q, r) = v.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    (k, q)
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc * self.clone())
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i) * y.pow(j))
            .sum()
    }

    /// Evaluate at elements of any field.
    pub fn eval_in<F: Field>(&self, x: &F, y: &F) -> F {
        self.terms.iter().fold(F::zero(), |acc, (&(i, j), c)| {
            acc + F::from_rational(&c.clone().into()) * x.pow_u(i) * y.pow_u(j)
        })
    }

    /// Evaluate at two rational functions of a common variable.
    pub fn eval_ratfunc<F: Field>(&self, x: &RatFunc<F>, y: &RatFunc<F>) -> RatFunc<F> {
        let dx = self.degree_x().unwrap_or(0) as usize;
        let dy = self.degree_y().unwrap_or(0) as usize;
        let xn = powers(x.numer(), dx);
        let xd = powers(x.denom(), dx);
        let yn = powers(y.numer(), dy);
        let yd = powers(y.denom(), dy);
        let num = self.terms.iter().fold(Poly::zero(), |acc, (&(i, j), c)| {
            let (i, j) = (i as usize, j as usize);
            let c = F::from_rational(&c.clone().into());
            acc + (xn[i].clone() * xd[dx - i].clone() * yn[j].clone() * yd[dy - j].clone())
                .scale(&c)
        });
        let den = xd[dx].clone() * yd[dy].clone();
        RatFunc::new(num, den).expect("denominators are nonzero")
    }

    /// `Φ(x_expr, y_expr)` for bivariate substitutions.
    pub fn substitute(&self, x_expr: &Self, y_expr: &Self) -> Self {
        let dx = self.degree_x().unwrap_or(0) as usize;
        let dy = self.degree_y().unwrap_or(0) as usize;
        let mut xp = vec![Self::constant(1)];
        for k in 0..dx {
            xp.push(xp[k].clone() * x_expr.clone());
        }
        let mut yp = vec![Self::constant(1)];
        for k in 0..dy {
            yp.push(yp[k].clone() * y_expr.clone());
        }
        self.terms.iter().fold(Self::zero(), |acc, (&(i, j), c)| {
            acc + (xp[i as usize].clone() * yp[j as usize].clone()).scale(c)
        })
    }

    /// From a polynomial in `Y` whose coefficients are polynomials in `X`.
    pub fn from_nested(p: &Poly<Poly<BigInt>>) -> Self {
        let mut out = Self::zero();
        for (j, cy) in p.coeffs().iter().enumerate() {
            for (i, c) in cy.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c.clone());
            }
        }
        out
    }

    /// Inverse of [`BivarPoly::from_nested`].
    pub fn to_nested(&self) -> Poly<Poly<BigInt>> {
        let dy = self.degree_y().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); dy];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[j as usize];
            if row.len() <= i as usize {
                row.resize(i as usize + 1, BigInt::zero());
            }
            row[i as usize] = c.clone();
        }
        Poly::new(rows.into_iter().map(Poly::new).collect())
    }

    /// Canonical text, e.g. `-X^2*Y^2+X^3+1488*X^2*Y+Y^3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for ((i, j), c) in self.terms() {
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mut factors = Vec::new();
            let mag = c.abs();
            if !mag.is_one() || (i == 0 && j == 0) {
                factors.push(mag.to_string());
            }
            for (v, e) in [("X", i), ("Y", j)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

fn powers<F: Field>(p: &Poly<F>, n: usize) -> Vec<Poly<F>> {
    let mut out = vec![Poly::constant(F::one())];
    for k in 0..n {
        out.push(out[k].clone() * p.clone());
    }
    out
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: Self) -> Self {
        for ((i, j), c) in rhs.terms {
            self.add_term(i, j, c);
        }
        self
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> Self {
        BivarPoly {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: Self) -> Self {
        let mut out = BivarPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}
