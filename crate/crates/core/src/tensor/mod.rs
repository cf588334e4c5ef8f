//! Minimal tensor norms of Σ aᵢ ⊗ b̄ᵢ and the inequalities around them:
//! lower-bound gaps, the cross-term (Haagerup) bound, the PSD trace-form
//! ascent, and moment domination against exact counts.

pub mod form;
pub mod norm;
pub mod oracle;
pub mod psd;
pub mod szarek;

pub use form::{superop_adjoint_apply, superop_apply, QuadraticForm};
pub use norm::{
    haagerup_slack, lower_bound_constant, lower_bound_gap, lower_bound_gap_with_tolerance,
    min_tensor_norm, min_tensor_norm_conjugate, HaagerupReport, NormReport, INPUT_UNITARITY_TOL,
};
pub use psd::{psd_sup_form, PsdAscentOpts, PsdAscentReport};
pub use szarek::{random_psd_unit, szarek_moment, SzarekMoment};
