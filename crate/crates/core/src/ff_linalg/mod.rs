//! Exact linear algebra over the prime field F_p.

pub mod fp;
pub mod jordan;
pub mod matrix;
pub mod sparse;

pub use fp::{check_prime, is_odd_prime, Fp};
pub use jordan::{nilpotent_jordan, Chain, JordanBlock, JordanData, LocalJordan};
pub use matrix::{rref_rank_kernel, Echelon, Matrix, Rref};
pub use sparse::SparseMatrix;
