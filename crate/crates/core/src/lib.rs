//! Oscillator and anyon realizations of the affine Lie superalgebra
//! `A(M-1,N-1)^` and its quantum deformation on truncated lattices, with
//! numerical checks of their defining relations.

pub mod algebra;
pub mod anyons;
pub mod error;
pub mod fock;
pub mod io;
pub mod oscillators;
pub mod sparse;
pub mod verify;

pub use error::{Error, Result};
