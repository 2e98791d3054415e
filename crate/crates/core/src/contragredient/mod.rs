//! Contragredient Lie algebras g(ρ, d) in Ver_p.
//!
//! A datum consists of a Lie algebra X, an X-module V and an X-module map
//! d: V ⊗ V* → X. The algebra g(ρ, d) is the quotient of the Lie algebra
//! generated by V* ⊕ X ⊕ V with [v, φ] = d(v ⊗ φ) by its largest graded
//! ideal meeting X trivially.

pub mod catalog;
pub mod datum;
pub mod engine;
pub mod form;
pub mod graded;
pub mod oracle;
pub mod report;
pub mod scan;
pub mod symmetrizable;

pub use catalog::{
    datum_from_cartan_matrix, datum_gl_chain, datum_over_gl2, datum_over_one, datum_over_sl2, symmetrizable_over_one,
    CartanData, ChainData,
};
pub use datum::{check_datum, dual_datum, is_reduced, ContragredientDatum, TorusKind};
pub use engine::{positive_side, prepare_parts, Part, QPiece, Side, DEFAULT_ENGINE_BUDGET};
pub use form::{FormReport, GradedForm};
pub use graded::{
    contragredient_compute, contragredient_compute_with_budget, q_grading, Assembled, Checks, GradedContragredient,
    QGrading, DEFAULT_MAX_DEGREE,
};
pub use oracle::{flie_quotient, maximal_ideal_step, radical_quotient, FlieLowering, FlieQuotient};
pub use report::{
    is_symmetrizable_kind, report, report_for, ChecksReport, PieceReport, QPieceReport, Report, ReportOptions,
};
pub use scan::{gl2_table, scan_gl2, Column, RowStatus, ScanReport, ScanRow};
pub use symmetrizable::{derive_d, SymmetrizableDatum};
