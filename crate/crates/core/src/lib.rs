//! Exact lattice-point computations for FFLV and Lusztig polytopes of type
//! `A_n`, rhombic tilings, and crystal graphs on FFLV points.

pub mod crystal;
pub mod error;
pub mod fflv;
pub mod polytope;
pub mod roots;
pub mod tiling;
pub mod verify;

pub use error::{Error, Result};
pub use polytope::{HPolytope, LatticePoint, PointSet};
pub use roots::{Rank, ReducedWord, Root, Weight};
