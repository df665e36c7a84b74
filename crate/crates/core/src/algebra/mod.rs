//! Cartan data and the oscillator / anyon realizations of the simple generators.

mod cartan;
mod cartan_weyl;
mod generators;

pub use cartan::{CartanData, Root, Sign, Weight};
pub use cartan_weyl::{cartan_generator, root_generator};
pub use generators::{
    affine_constant, affine_phase, central_charge_operator, chevalley_generators, deformed_generators,
    local_cartan_diag, local_cartan_terms, local_q_generator, piece_sites, undeformed_generators, GeneratorOptions,
    GeneratorSet, LocalPiece,
};
