//! Self-isogenies of elliptic curves in the form `y² = C(x)`, checked
//! exactly, and the ℘-function identities they induce, checked numerically.

pub mod curve;
pub mod wp;

pub use curve::{
    hexagonal3, preset, square5, verify_isogeny, EllCurveHyper, IsogenyCheck, IsogenyMap,
    IsogenyPreset, PRESET_NAMES,
};
pub use wp::{
    default_samples, omega, verify_square_identity_with, verify_wp_identity, wp_eval, HalfPeriods,
    WpIdentity, WpLattice, WpReport, DEFAULT_EPS, DEFAULT_TOL,
};
