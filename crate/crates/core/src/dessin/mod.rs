//! Combinatorial dessins: passports, monodromy and graph export.

pub mod diagnostics;
pub mod dot;
pub mod passport;

pub use diagnostics::{diagnostics, group_closure, Diagnostics};
pub use dot::export_dot;
pub use passport::{
    euler_genus, face_boundaries, passport_from_construction1, passport_from_construction2,
    triple_from_construction1, triple_from_construction2, DessinPassport, MonodromyTriple, Side,
};
