//! Operadic Lie algebras in Ver_p: axioms, modules, invariant forms,
//! gl(L) and sl(L), semidirect products, and the semisimplification of
//! classical Lie algebras along a nilpotent derivation.

pub mod algebra;
pub mod classical;
pub mod form;
pub mod gl;
pub mod module;
pub mod semidirect;

pub use algebra::{check_lie_axioms, lie_axiom_report, AxiomReport, LieAlgebra};
pub use classical::{semisimplify_lie, StructureConstants};
pub use form::InvariantForm;
pub use gl::{categorical_dim, gl, restrict_bracket, sl, trace_form, SubLie};
pub use module::{check_module, dual_action, LieModule};
pub use semidirect::{
    check_derivation_compat, check_module_compat, is_action_by_derivations, is_lie_map, semidirect, Semidirect,
};
