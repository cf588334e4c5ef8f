//! Quaternionic generator families, SU(2) irreducible representations, and
//! per-block norm experiments.

pub mod irrep;
pub mod quaternion;
pub mod su2;
pub mod tower;

pub use irrep::{
    character, character_closed_form, clebsch_gordan_check, irrep_matrix, IrrepMatrix,
};
pub use quaternion::{lps_quaternions, IntegerQuaternion};
pub use su2::{quaternion_to_su2, su2_to_so3, SU2Element};
pub use tower::RepresentationTower;
