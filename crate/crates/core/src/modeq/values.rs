//! Exact values `1728·f(v)` at registered points of `X₀(N)`.

use crate::arith::{lift, parse_ratfunc, Grammar, QuadExt, RatFunc};
use crate::error::{Error, Result};
use num_rational::BigRational;

use super::elimination::level_pair;

/// A registered point: the `j`-value it computes, the vertex it represents
/// on `X₀(N)`, its coordinate and the factored form of the value.
#[derive(Clone, Copy, Debug)]
pub struct RegisteredPoint {
    pub label: &'static str,
    pub vertex: &'static str,
    pub coordinate: &'static str,
    pub factored: &'static str,
}

const LEVEL2_POINTS: &[RegisteredPoint] = &[
    RegisteredPoint {
        label: "j(sqrt(3)*i)",
        vertex: "[rho/2]",
        coordinate: "3/4",
        factored: "16*15^3",
    },
    RegisteredPoint {
        label: "j(2*i)",
        vertex: "[i/2]",
        coordinate: "9/8",
        factored: "66^3",
    },
    RegisteredPoint {
        label: "j(sqrt(2)*i)",
        vertex: "[sqrt(2)*i/2]",
        coordinate: "2",
        factored: "20^3",
    },
    RegisteredPoint {
        label: "j(i)",
        vertex: "[(i-1)/2]",
        coordinate: "0",
        factored: "12^3",
    },
];

const LEVEL3_POINTS: &[RegisteredPoint] = &[
    RegisteredPoint {
        label: "j((1+3*sqrt(3)*i)/2)",
        vertex: "[rho/3]",
        coordinate: "8/9",
        factored: "-3*160^3",
    },
    RegisteredPoint {
        label: "j(3*i)",
        vertex: "[i/3]",
        coordinate: "(6+2*sqrt(3))/9",
        factored: "(18+6*sqrt(3))*(82+54*sqrt(3))^3",
    },
    RegisteredPoint {
        label: "j((1+3*i)/2)",
        vertex: "[(i+1)/3]",
        coordinate: "(6-2*sqrt(3))/9",
        factored: "(18-6*sqrt(3))*(82-54*sqrt(3))^3",
    },
    RegisteredPoint {
        label: "j(sqrt(3)*i)",
        vertex: "[sqrt(3)*i/3]",
        coordinate: "2",
        factored: "2*30^3",
    },
    RegisteredPoint {
        label: "j(rho)",
        vertex: "[(2*rho-5)/(rho-2)]",
        coordinate: "0",
        factored: "0",
    },
];

pub fn registered_points(level: u32) -> Result<&'static [RegisteredPoint]> {
    match level {
        2 => Ok(LEVEL2_POINTS),
        3 => Ok(LEVEL3_POINTS),
        _ => Err(Error::domain(format!(
            "no registered points for level {level}; levels 2 and 3 are available"
        ))),
    }
}

/// Parse a constant such as `(6+2*sqrt(3))/9`.
pub fn parse_constant(src: &str) -> Result<QuadExt> {
    let f = parse_ratfunc(
        src,
        Grammar {
            var: "z",
            allow_i: false,
        },
    )?;
    if !f.is_constant() {
        return Err(Error::domain(format!("'{src}' is not a constant")));
    }
    f.numer().coeff(0).try_mul(&f.denom().coeff(0).inverse()?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialValue {
    pub label: String,
    pub point: QuadExt,
    /// `1728·f(point)`, or a pole error.
    pub value: Result<QuadExt>,
}

/// `1728·f(v)` for each labelled point.
pub fn special_values(f: &RatFunc<BigRational>, points: &[(String, QuadExt)]) -> Vec<SpecialValue> {
    let f = lift(f);
    let k = QuadExt::from_int(1728);
    points
        .iter()
        .map(|(label, v)| SpecialValue {
            label: label.clone(),
            point: v.clone(),
            value: f.eval_checked(v).and_then(|y| y.try_mul(&k)),
        })
        .collect()
}

/// One row of the registered table for a level.
#[derive(Clone, Debug, PartialEq)]
pub struct JValueRow {
    pub label: &'static str,
    pub vertex: &'static str,
    pub point: QuadExt,
    pub value: QuadExt,
    pub factored: &'static str,
    /// Whether the factored form evaluates to `value`.
    pub factored_matches: bool,
}

/// The registered table for `level`, evaluated with the built-in `f`.
pub fn jvalue_table(level: u32) -> Result<Vec<JValueRow>> {
    let pts = registered_points(level)?;
    let (f, _) = level_pair(level)?;
    let inputs = pts
        .iter()
        .map(|p| Ok((p.label.to_string(), parse_constant(p.coordinate)?)))
        .collect::<Result<Vec<_>>>()?;
    pts.iter()
        .zip(special_values(&f, &inputs))
        .map(|(p, sv)| {
            let value = sv.value?;
            Ok(JValueRow {
                label: p.label,
                vertex: p.vertex,
                point: sv.point,
                factored_matches: parse_constant(p.factored)? == value,
                value,
                factored: p.factored,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    #[test]
    fn constants_parse() {
        assert_eq!(parse_constant("16*15^3").unwrap(), QuadExt::from_int(54000));
        assert!(parse_constant("z").is_err());
    }

    #[test]
    fn pole_entry() {
        let f = parse_rational("(z+3)^3/(27(z-1)^2)", "z").unwrap();
        let v = special_values(&f, &[("p".into(), QuadExt::from_int(1))]);
        assert!(matches!(v[0].value, Err(Error::Pole(_))));
    }
}
