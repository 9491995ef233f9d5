//! Generalized Hamming weights of matroids and codes, symbolic powers of
//! matroid ideals, and invariants of matroid configurations.

pub mod algebra;
pub mod codes;
pub mod configurations;
pub mod error;
pub mod families;
pub mod io;
pub mod matroid;
pub mod rational;
pub mod subset;
pub mod symbolic;
pub mod weights;

pub use algebra::{make_field, Field, FieldElem, FieldSpec, Mat};
pub use codes::LinearCode;
pub use configurations::{BoundsReport, DegreeAssignment, SpecializedInvariants};
pub use error::{Error, Result};
pub use matroid::{Matroid, DEFAULT_GUARD};
pub use rational::Rational;
pub use subset::GroundSubset;
pub use symbolic::{DSequence, ExponentVector, ReesGenerator};
pub use weights::{GhwSequence, GhwSource, SubadditivityReport};
