//! Rational Belyi maps: ramification profiles, the Belyi property and
//! exact identity checks.

pub mod catalog;
pub mod constrained;
pub mod profile;

pub use catalog::{
    catalog_map, parse_catalog_expr, CatalogMap, CATALOG, HEXAGONAL_FACTOR,
    LEVEL_TWO_COORDINATE_CHANGE, LEVEL_TWO_QUOTIENT,
};
pub use constrained::{
    constrained_identity_check, constrained_identity_concrete, constrained_identity_parametric,
};
pub use profile::{
    field_tag, is_belyi, minus_one, passport_of_map, ram_profile, verify_identity, RamProfile,
    RatMap,
};
