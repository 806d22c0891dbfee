//! Modular equations for `Γ₀(N)` from pairs of Belyi maps, and special
//! values of `j`.

pub mod elimination;
pub mod values;

pub use elimination::{
    involution_check, level_pair, mobius, modular_polynomial, modular_polynomial_for_level,
    normalize, proportional, symmetric_route_check, ModularPolynomial, SymmetricRoute,
};
pub use values::{
    jvalue_table, parse_constant, registered_points, special_values, JValueRow, RegisteredPoint,
    SpecialValue,
};
