//! Canonical text rendering of coefficients and univariate polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::poly::Poly;
use super::quadext::{fmt_rational, QuadExt};
use super::ring::Ring;

/// How a coefficient prints in front of a monomial.
pub trait CoeffText {
    /// `(negative, magnitude)`. The magnitude is parenthesized whenever it
    /// is a sum, so that `magnitude*z^k` parses back to the same value.
    fn coeff_text(&self) -> (bool, String);
}

impl CoeffText for BigInt {
    fn coeff_text(&self) -> (bool, String) {
        (self.is_negative(), self.abs().to_string())
    }
}

impl CoeffText for BigRational {
    fn coeff_text(&self) -> (bool, String) {
        (self.is_negative(), fmt_rational(&self.abs()))
    }
}

impl CoeffText for QuadExt {
    fn coeff_text(&self) -> (bool, String) {
        if Zero::is_zero(self.im()) {
            return self.re().coeff_text();
        }
        if Zero::is_zero(self.re()) {
            let neg = self.im().is_negative();
            let mag = QuadExt::new(self.tag(), <BigRational as Zero>::zero(), self.im().abs())
                .expect("tag already validated");
            return (neg, mag.to_string());
        }
        (false, format!("({self})"))
    }
}

/// Render `p` in descending powers of `var`, e.g. `3*z^2-z+1/2`.
pub fn poly_text<R: Ring + CoeffText>(p: &Poly<R>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = c.coeff_text();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if mono.is_empty() {
            out.push_str(&mag);
        } else if mag == "1" {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Number of printed terms.
pub(crate) fn term_count<R: Ring>(p: &Poly<R>) -> usize {
    p.coeffs().iter().filter(|c| !c.is_zero()).count()
}

pub(crate) fn is_unit_monomial<R: Ring>(p: &Poly<R>) -> bool {
    term_count(p) == 1 && p.lc().is_some_and(|c| c.is_one())
}
