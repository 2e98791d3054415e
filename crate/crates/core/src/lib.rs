//! Exact computation in the Verlinde category Ver_p.
//!
//! The crate works in two layers. Upstairs is Rep(α_p): vector spaces over
//! F_p with a nilpotent operator `t`, where all tensor algebra is plain
//! matrix algebra. Downstairs is Ver_p, the semisimplification, whose
//! objects are multiplicity vectors over the simples L_1, …, L_{p−1} and
//! whose morphisms are block matrices. Every Ver_p object keeps an upstairs
//! realization, so any composite can be evaluated upstairs and projected
//! down once at the end.
//!
//! On top of this sit operadic Lie algebras in Ver_p, free Lie algebras,
//! and the contragredient Lie algebras g(ρ, d) built from a torus X, an
//! X-module V and a pairing d: V ⊗ V* → X.

pub mod contragredient;
pub mod error;
pub mod ff_linalg;
pub mod free_lie;
pub mod lie_objects;
pub mod rep_alphap;
pub mod verp;

pub use error::{Error, Result};
pub mod verify;
