//! Exact verification of isogenies `(x, y) ↦ (h(x), g(x)·y)` between curves
//! `y² = C(x)`.

use crate::arith::{parse_ratfunc, Grammar, Poly, QuadExt, RatFunc};
use crate::belyi::{field_tag, RatMap};
use crate::error::{Error, Result};

/// The curve `y² = C(x)` with `C` squarefree of degree 3 or 4.
#[derive(Clone, Debug, PartialEq)]
pub struct EllCurveHyper {
    rhs: Poly<QuadExt>,
}

impl EllCurveHyper {
    pub fn new(rhs: Poly<QuadExt>) -> Result<Self> {
        let d = rhs.deg0();
        if !(d == 3 || d == 4) {
            return Err(Error::domain(format!(
                "curve polynomial has degree {d}, not 3 or 4"
            )));
        }
        field_tag(&RatFunc::from_poly(rhs.clone()))?;
        if rhs.gcd(&rhs.derivative()).deg0() > 0 {
            return Err(Error::domain("curve polynomial is not squarefree"));
        }
        Ok(EllCurveHyper { rhs })
    }

    /// Parse `C(x)` in the variable `x`; `i` denotes `sqrt(-1)`.
    pub fn parse(src: &str) -> Result<Self> {
        let f = parse_ratfunc(
            src,
            Grammar {
                var: "x",
                allow_i: true,
            },
        )?;
        if !f.denom().is_constant() {
            return Err(Error::domain("curve right-hand side must be a polynomial"));
        }
        let c = f.denom().coeff(0);
        let inv = c.inverse()?;
        Self::new(f.numer().scale(&inv))
    }

    pub fn rhs(&self) -> &Poly<QuadExt> {
        &self.rhs
    }

    /// `C(r)` for a rational function `r`.
    fn eval_at(&self, r: &RatMap) -> RatMap {
        self.rhs
            .coeffs()
            .iter()
            .rev()
            .fold(RatFunc::constant(QuadExt::from_int(0)), |acc, c| {
                acc * r.clone() + RatFunc::constant(c.clone())
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IsogenyMap {
    pub h: RatMap,
    pub g: RatMap,
}

impl IsogenyMap {
    pub fn new(h: RatMap, g: RatMap) -> Result<Self> {
        let (a, b) = (field_tag(&h)?, field_tag(&g)?);
        if a != 0 && b != 0 && a != b {
            return Err(Error::domain(
                "h and g have coefficients in different fields",
            ));
        }
        Ok(IsogenyMap { h, g })
    }

    /// Parse `h` and `g` in the variable `x`; `i` denotes `sqrt(-1)`.
    pub fn parse(h: &str, g: &str) -> Result<Self> {
        let grammar = Grammar {
            var: "x",
            allow_i: true,
        };
        Self::new(parse_ratfunc(h, grammar)?, parse_ratfunc(g, grammar)?)
    }

    /// The same map with `g` replaced by `−g`.
    pub fn negate_g(&self) -> Self {
        IsogenyMap {
            h: self.h.clone(),
            g: -self.g.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsogenyCheck {
    pub holds: bool,
    /// `deg h` as a map of the projective line.
    pub degree: usize,
}

/// Exact check of `C_target(h(x)) = g(x)²·C_source(x)`.
pub fn verify_isogeny(
    source: &EllCurveHyper,
    target: &EllCurveHyper,
    map: &IsogenyMap,
) -> Result<IsogenyCheck> {
    let mut tag = 0;
    for t in [
        field_tag(&RatFunc::from_poly(source.rhs.clone()))?,
        field_tag(&RatFunc::from_poly(target.rhs.clone()))?,
        field_tag(&map.h)?,
        field_tag(&map.g)?,
    ] {
        if t != 0 {
            if tag != 0 && tag != t {
                return Err(Error::domain(format!(
                    "isogeny data mixes Q(sqrt({tag})) and Q(sqrt({t}))"
                )));
            }
            tag = t;
        }
    }
    if map.h.is_constant() {
        return Err(Error::domain("x-coordinate map is constant"));
    }
    let lhs = target.eval_at(&map.h);
    let rhs = map.g.clone() * map.g.clone() * RatFunc::from_poly(source.rhs.clone());
    Ok(IsogenyCheck {
        holds: lhs == rhs,
        degree: map.h.degree(),
    })
}

/// A named curve together with a self-isogeny.
#[derive(Clone, Debug)]
pub struct IsogenyPreset {
    pub name: &'static str,
    pub curve: EllCurveHyper,
    pub map: IsogenyMap,
}

pub const PRESET_NAMES: [&str; 2] = ["hexagonal3", "square5"];

/// Degree-three self-isogeny of `y² = x³ − 1` over ℚ(√−3).
pub fn hexagonal3() -> IsogenyPreset {
    IsogenyPreset {
        name: "hexagonal3",
        curve: EllCurveHyper::parse("x^3-1").expect("valid curve"),
        map: IsogenyMap::parse("(4-x^3)/(3x^2)", "sqrt(-3)(x^3+8)/(9x^3)").expect("valid map"),
    }
}

/// Degree-five self-isogeny of `y² = x³ − x` over ℚ(i).
pub fn square5() -> IsogenyPreset {
    IsogenyPreset {
        name: "square5",
        curve: EllCurveHyper::parse("x^3-x").expect("valid curve"),
        map: IsogenyMap::parse(
            "(-1+2i)^2x(x^2-(1+2i))^2/(5x^2-(1-2i))^2",
            "(-1+2i)^3(x^2-(1+2i))(x^4+(8i+2)x^2+1)/(5x^2-(1-2i))^3",
        )
        .expect("valid map"),
    }
}

pub fn preset(name: &str) -> Result<IsogenyPreset> {
    match name {
        "hexagonal3" => Ok(hexagonal3()),
        "square5" => Ok(square5()),
        _ => Err(Error::domain(format!(
            "unknown preset '{name}', expected one of {}",
            PRESET_NAMES.join(", ")
        ))),
    }
}
