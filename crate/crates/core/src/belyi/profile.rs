//! Ramification profiles of rational maps of the projective line.

use std::fmt;

use crate::arith::{Field, Poly, QuadExt, RatFunc};
use crate::dessin::DessinPassport;
use crate::error::{Error, Result};

/// Rational map of the projective line with coefficients in ℚ or ℚ(√d).
pub type RatMap = RatFunc<QuadExt>;

/// Fiber multiplicities over 0, 1 and ∞, each sorted in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamProfile {
    pub degree: usize,
    pub over0: Vec<usize>,
    pub over1: Vec<usize>,
    pub over_inf: Vec<usize>,
}

impl RamProfile {
    /// `Σ (degree − #points)` over the three fibers.
    pub fn ramification_total(&self) -> usize {
        [&self.over0, &self.over1, &self.over_inf]
            .iter()
            .map(|p| self.degree - p.len())
            .sum()
    }
}

fn fmt_parts(p: &[usize]) -> String {
    let v: Vec<String> = p.iter().map(usize::to_string).collect();
    format!("[{}]", v.join(","))
}

impl fmt::Display for RamProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "degree={} over0={} over1={} overinf={}",
            self.degree,
            fmt_parts(&self.over0),
            fmt_parts(&self.over1),
            fmt_parts(&self.over_inf)
        )
    }
}

/// Multiplicities of the zeros of `p` viewed as a section of degree `d`:
/// finite roots from the squarefree decomposition, plus `d − deg p` at ∞.
fn fiber<F: Field>(p: &Poly<F>, d: usize) -> Result<Vec<usize>> {
    let mut parts: Vec<usize> = p
        .squarefree_factor()?
        .root_multiplicities()
        .into_iter()
        .map(|m| m as usize)
        .collect();
    let drop = d - p.deg0();
    if drop > 0 {
        parts.push(drop);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

pub fn ram_profile<F: Field>(f: &RatFunc<F>) -> Result<RamProfile> {
    if f.is_constant() {
        return Err(Error::precondition(
            "ramification profile of a constant map",
        ));
    }
    let d = f.degree();
    let (num, den) = (f.numer(), f.denom());
    Ok(RamProfile {
        degree: d,
        over0: fiber(num, d)?,
        over1: fiber(&(num.clone() - den.clone()), d)?,
        over_inf: fiber(den, d)?,
    })
}

/// Riemann–Hurwitz on the sphere: all `2d − 2` ramification lies over 0, 1, ∞.
pub fn is_belyi<F: Field>(f: &RatFunc<F>) -> Result<bool> {
    let p = ram_profile(f)?;
    Ok(p.ramification_total() == 2 * p.degree - 2)
}

/// The profile as a genus-zero passport: black over 0, white over 1,
/// faces over ∞.
pub fn passport_of_map<F: Field>(f: &RatFunc<F>) -> Result<DessinPassport> {
    let p = ram_profile(f)?;
    if p.ramification_total() != 2 * p.degree - 2 {
        return Err(Error::precondition("map is not a Belyi map"));
    }
    Ok(DessinPassport {
        degree: p.degree,
        genus: 0,
        nu_inf: p.over_inf.len(),
        black: p.over0,
        white: p.over1,
        faces: p.over_inf,
        nu2: None,
        nu3: None,
    })
}

/// Quadratic field of the coefficients, `0` when all are rational.
pub fn field_tag(f: &RatMap) -> Result<i64> {
    let mut tag = 0;
    for c in f.numer().coeffs().iter().chain(f.denom().coeffs()) {
        if c.is_rational() {
            continue;
        }
        if tag != 0 && tag != c.tag() {
            return Err(Error::domain(
                "coefficients from different quadratic fields",
            ));
        }
        tag = c.tag();
    }
    Ok(tag)
}

/// Exact equality of two maps over a common field.
pub fn verify_identity(lhs: &RatMap, rhs: &RatMap) -> Result<bool> {
    let (a, b) = (field_tag(lhs)?, field_tag(rhs)?);
    if a != 0 && b != 0 && a != b {
        return Err(Error::domain(format!(
            "identity mixes Q(sqrt({a})) and Q(sqrt({b}))"
        )));
    }
    Ok(lhs == rhs)
}

/// `f − 1`.
pub fn minus_one<F: Field>(f: &RatFunc<F>) -> RatFunc<F> {
    f.clone() - RatFunc::constant(F::one())
}
