//! Truncated fermion/boson Fock spaces on a lattice of lines of half-integer sites.

mod basis;
mod config;
mod ops;
mod projector;

pub use basis::{FockBasis, ModeId, ModeKind};
pub use config::{
    step_sign, CrossLineNumbers, Deformation, HalfInt, LatticeConfig, OrderingScheme, DEFAULT_DIM_CAP,
};
pub use ops::{
    boson_annihilate, boson_create, boson_lower_with, fermion_annihilate, fermion_create, number,
    occupation_vector,
};
pub use projector::{bulk_projector, bulk_projector_with, BulkProjector, Projection};
