//! The modular group: matrices, words, subgroups, coset tables, cusps and
//! orbits of special points.

pub mod coset;
pub mod cusp;
pub mod gamma2;
pub mod matrix;
pub mod orbit;
pub mod subgroup;
pub mod word;

pub use coset::{coset_table, index_formula, Ambient, CosetTable, IndexFamily};
pub use cusp::{cusp_classes, cusp_orbit_classify, cusp_width, gamma2_cusp_class, Cusp};
pub use gamma2::gamma2_word_decompose;
pub use matrix::{MatSL2, PSL2Elem};
pub use orbit::{
    gamma0_left_transversal, scaled_orbit_partition, scaled_orbit_partition_with_reps, Base, Orbit,
    OrbitPartition, OrbitPoint,
};
pub use subgroup::{KernelHom, SubgroupSpec};
pub use word::{word_eval, Gen, Word};
