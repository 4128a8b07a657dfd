//! Fundamental domains, side pairings and presentations for the Deligne-Mostow
//! lattices with three-fold symmetry.
//!
//! The modules follow the construction bottom up:
//!
//! - [`params`]: exact lattice parameters and the table of 39 lattices
//! - [`cxgeom`]: Hermitian form, projective points and isometries on ℂ³
//! - [`moves`]: the generators and their relations
//! - [`conemetric`]: the octagon model of a cone metric and its area
//! - [`polyhedron`]: vertices, lines, bisectors and the facet complex of `D`
//! - [`poincare`]: ridge cycles, orbit table, Euler characteristic, presentations
//! - [`report`]: the verification driver behind the command-line tool

pub mod checks;
pub mod conemetric;
pub mod cxgeom;
pub mod moves;
pub mod params;
pub mod poincare;
pub mod polyhedron;
pub mod report;

pub use checks::{Check, Status};
pub use params::{derive_params, CollapseCase, ExtRational, LatticeParams, PiAngle, Rational};
