//! Explicit Belyi maps on the projective line attached to subgroups of
//! the modular group, stored as expression text and parsed on demand.

use crate::arith::{parse_ratfunc, Grammar};

use super::profile::RatMap;

#[derive(Clone, Copy, Debug)]
pub struct CatalogMap {
    pub name: &'static str,
    pub var: &'static str,
    pub expr: &'static str,
    /// Factored form of `f − 1`, when one is displayed alongside `f`.
    pub minus_one: Option<&'static str>,
    /// Subgroup whose dessin the map realizes, in subgroup-spec syntax.
    pub subgroup: &'static str,
    /// 1 for maps to `X(1)`, 2 for maps to `X(2)`.
    pub construction: u8,
}

impl CatalogMap {
    fn parse(&self, src: &str) -> RatMap {
        parse_ratfunc(
            src,
            Grammar {
                var: self.var,
                allow_i: false,
            },
        )
        .expect("catalog expressions parse")
    }

    pub fn map(&self) -> RatMap {
        self.parse(self.expr)
    }

    pub fn minus_one_map(&self) -> Option<RatMap> {
        self.minus_one.map(|s| self.parse(s))
    }
}

pub const CATALOG: &[CatalogMap] = &[
    CatalogMap {
        name: "gamma2",
        var: "z",
        expr: "(3z^2+1)^3/(9z^2-1)^2",
        minus_one: Some("27z^2(z^2-1)^2/(9z^2-1)^2"),
        subgroup: "gamma:2",
        construction: 1,
    },
    CatalogMap {
        name: "gamma3",
        var: "z",
        expr: "z^3(z^3+8)^3/(64(z^3-1)^3)",
        minus_one: Some("(z^6-20z^3-8)^2/(64(z^3-1)^3)"),
        subgroup: "gamma:3",
        construction: 1,
    },
    CatalogMap {
        name: "gamma4",
        var: "z",
        expr: "-(z^2-1)^2/(4z^2)",
        minus_one: Some("-(z^2+1)^2/(4z^2)"),
        subgroup: "gamma:4",
        construction: 2,
    },
    CatalogMap {
        name: "gamma4_j",
        var: "z",
        expr: "(z^8+14z^4+1)^3/(108z^4(z^4-1)^4)",
        minus_one: Some("(z^4+1)^2(z^4+6z^2+1)^2(z^4-6z^2+1)^2/(108z^4(z^4-1)^4)"),
        subgroup: "gamma:4",
        construction: 1,
    },
    CatalogMap {
        name: "gamma6_t3",
        var: "x",
        expr: "-((x^3-4)((x^3-4)^3-216x^6)/(12x^2(x^3-1)(x^3+8)^2))^3",
        minus_one: None,
        subgroup: "join:gamma:6;word=T^3",
        construction: 1,
    },
    CatalogMap {
        name: "gamma0_2",
        var: "z",
        expr: "(z+3)^3/(27(z-1)^2)",
        minus_one: Some("z(z-9)^2/(27(z-1)^2)"),
        subgroup: "gamma0:2",
        construction: 1,
    },
    CatalogMap {
        name: "gamma0_3",
        var: "z",
        expr: "z(z+8)^3/(64(z-1)^3)",
        minus_one: Some("(z^2-20z-8)^2/(64(z-1)^3)"),
        subgroup: "gamma0:3",
        construction: 1,
    },
    CatalogMap {
        name: "gamma0_6",
        var: "z",
        expr: "-(z-4)^3(z^3-228z^2+48z-64)^3/(1728z^2(z-1)^3(z+8)^6)",
        minus_one: Some("-((z^3+258z^2+48z-64)^2-78732z^4)^2/(1728z^2(z-1)^3(z+8)^6)"),
        subgroup: "gamma0:6",
        construction: 1,
    },
    CatalogMap {
        name: "gamma0_2_level",
        var: "z",
        expr: "(4z-3)^3/(27(z-1))",
        minus_one: Some("z(8z-9)^2/(27(z-1))"),
        subgroup: "gamma0:2",
        construction: 1,
    },
    CatalogMap {
        name: "gamma0_3_level",
        var: "z",
        expr: "z(9z-8)^3/(64(z-1))",
        minus_one: Some("(27z^2-36z+8)^2/(64(z-1))"),
        subgroup: "gamma0:3",
        construction: 1,
    },
];

pub fn catalog_map(name: &str) -> Option<&'static CatalogMap> {
    CATALOG.iter().find(|m| m.name == name)
}

/// The degree-three map `x ↦ (4−x³)/(3x²)` between the level-three and
/// level-six curves; it has four branch values and is not a Belyi map.
pub const HEXAGONAL_FACTOR: &str = "(4-x^3)/(3x^2)";

/// `z ↦ (z+1)/(3(z−1))`, relating the two coordinates used on `X(2)`.
pub const LEVEL_TWO_COORDINATE_CHANGE: &str = "(z+1)/(3(z-1))";

/// `z ↦ ((z+1)/(z−1/3))²`, the quotient `X(2) → X₀(2)`.
pub const LEVEL_TWO_QUOTIENT: &str = "((z+1)/(z-1/3))^2";

pub fn parse_catalog_expr(src: &str, var: &str) -> RatMap {
    parse_ratfunc(
        src,
        Grammar {
            var,
            allow_i: false,
        },
    )
    .expect("catalog expressions parse")
}
