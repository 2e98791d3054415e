//! The category Rep(α_p): vector spaces with a nilpotent operator t.
//!
//! Tensor products are flattened Kronecker products with the left factor's
//! index varying slowest, so iterated tensor products are strictly
//! associative. The operator on a tensor product is t⊗1 + 1⊗t, on a dual
//! it is −tᵀ, and the symmetry is the plain permutation of factors.
//!
//! Evaluation and coevaluation come in two orders:
//!
//! * `ev_left(A)`: A*⊗A → 𝟙 and `coev_left(A)`: 𝟙 → A⊗A*, the pair
//!   satisfying the snake identities for A.
//! * `ev_right(A)`: A⊗A* → 𝟙 and `coev_right(A)`: 𝟙 → A*⊗A, the same
//!   pairings with the factors exchanged. Since A** has the same matrix as
//!   A, these are the evaluation and coevaluation of A* under the identity
//!   identification A ≅ A**.

use crate::error::{Error, Result};
use crate::ff_linalg::{check_prime, Matrix, SparseMatrix};

/// An object of Rep(α_p): a space of dimension `dim` with t^p = 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlphaObject {
    p: u32,
    t: SparseMatrix,
}

impl AlphaObject {
    /// Wraps a sparse operator, verifying t^p = 0.
    pub fn from_sparse(t: SparseMatrix) -> Result<Self> {
        check_prime(t.p())?;
        if t.rows() != t.cols() {
            return Err(Error::ShapeMismatch("t must be square".into()));
        }
        crate::ff_linalg::JordanData::of_sparse(&t)?;
        Ok(AlphaObject { p: t.p(), t })
    }

    /// Wraps a dense operator, verifying t^p = 0.
    pub fn from_matrix(t: &Matrix) -> Result<Self> {
        Self::from_sparse(SparseMatrix::from_dense(t))
    }

    /// The Jordan block L_i (1 ≤ i ≤ p) with t e_r = e_{r+1}.
    pub fn simple(p: u32, i: usize) -> Self {
        assert!(i <= p as usize, "L_{i} does not exist for p = {p}");
        let t = SparseMatrix::from_triples(p, i, i, (1..i).map(|r| (r, r - 1, 1)));
        AlphaObject { p, t }
    }

    /// The unit object 𝟙 = L_1.
    pub fn unit(p: u32) -> Self {
        Self::simple(p, 1)
    }

    /// The zero object.
    pub fn zero(p: u32) -> Self {
        AlphaObject { p, t: SparseMatrix::zeros(p, 0, 0) }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.t.rows()
    }

    pub fn t(&self) -> &SparseMatrix {
        &self.t
    }

    pub fn t_dense(&self) -> Matrix {
        self.t.to_dense()
    }

    pub fn direct_sum(p: u32, parts: &[&AlphaObject]) -> Self {
        let ts: Vec<&SparseMatrix> = parts.iter().map(|a| &a.t).collect();
        AlphaObject { p, t: SparseMatrix::direct_sum(p, &ts) }
    }
}

/// Tensor product with t = t_A⊗1 + 1⊗t_B.
pub fn tensor(a: &AlphaObject, b: &AlphaObject) -> AlphaObject {
    assert_eq!(a.p, b.p, "tensor of objects over different primes");
    AlphaObject { p: a.p, t: SparseMatrix::kron_sum(&a.t, &b.t) }
}

/// Iterated tensor product, associated left to right.
pub fn tensor_all(p: u32, parts: &[&AlphaObject]) -> AlphaObject {
    parts.iter().fold(AlphaObject::unit(p), |acc, x| tensor(&acc, x))
}

/// Dual object with t* = −tᵀ in the dual basis.
pub fn dual(a: &AlphaObject) -> AlphaObject {
    AlphaObject { p: a.p, t: a.t.neg_transpose() }
}

/// A t-equivariant linear map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaMorphism {
    pub src: AlphaObject,
    pub dst: AlphaObject,
    pub m: Matrix,
}

impl AlphaMorphism {
    /// Builds a morphism, checking shape and equivariance.
    pub fn new(src: AlphaObject, dst: AlphaObject, m: Matrix) -> Result<Self> {
        if m.shape() != (dst.dim(), src.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "matrix {:?} for map of dimension {} -> {}",
                m.shape(),
                src.dim(),
                dst.dim()
            )));
        }
        if !check_equivariance(&src, &dst, &m) {
            return Err(Error::NotEquivariant);
        }
        Ok(AlphaMorphism { src, dst, m })
    }

    pub fn identity(a: &AlphaObject) -> Self {
        AlphaMorphism { src: a.clone(), dst: a.clone(), m: Matrix::identity(a.p, a.dim()) }
    }

    pub fn compose(&self, inner: &AlphaMorphism) -> Result<Self> {
        if inner.dst != self.src {
            return Err(Error::ShapeMismatch("composition of non-composable maps".into()));
        }
        Ok(AlphaMorphism { src: inner.src.clone(), dst: self.dst.clone(), m: self.m.mul(&inner.m) })
    }

    pub fn tensor(&self, other: &AlphaMorphism) -> Self {
        AlphaMorphism {
            src: tensor(&self.src, &other.src),
            dst: tensor(&self.dst, &other.dst),
            m: self.m.kron(&other.m),
        }
    }
}

/// True iff M t_src = t_dst M.
pub fn check_equivariance(src: &AlphaObject, dst: &AlphaObject, m: &Matrix) -> bool {
    if m.shape() != (dst.dim(), src.dim()) {
        return false;
    }
    SparseMatrix::dense_mul(m, &src.t) == dst.t.mul_dense(m)
}

/// Matrix of the pairing of a basis with its dual basis, as a 1 × n² row.
fn pairing_row(p: u32, n: usize) -> Matrix {
    let mut m = Matrix::zeros(p, 1, n * n);
    for i in 0..n {
        m.set(0, i * n + i, 1);
    }
    m
}

/// ev_left(A): A*⊗A → 𝟙, φ⊗a ↦ φ(a).
pub fn ev_left(a: &AlphaObject) -> Matrix {
    pairing_row(a.p, a.dim())
}

/// ev_right(A): A⊗A* → 𝟙, a⊗φ ↦ φ(a).
pub fn ev_right(a: &AlphaObject) -> Matrix {
    pairing_row(a.p, a.dim())
}

/// coev_left(A): 𝟙 → A⊗A*, 1 ↦ Σ a_i⊗φ_i.
pub fn coev_left(a: &AlphaObject) -> Matrix {
    pairing_row(a.p, a.dim()).transpose()
}

/// coev_right(A): 𝟙 → A*⊗A, 1 ↦ Σ φ_i⊗a_i.
pub fn coev_right(a: &AlphaObject) -> Matrix {
    pairing_row(a.p, a.dim()).transpose()
}

/// Permutation matrix of A⊗B → B⊗A for spaces of the given dimensions.
pub fn swap_matrix(p: u32, da: usize, db: usize) -> Matrix {
    let mut m = Matrix::zeros(p, da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            m.set(j * da + i, i * db + j, 1);
        }
    }
    m
}

/// The symmetry A⊗B → B⊗A.
pub fn swap(a: &AlphaObject, b: &AlphaObject) -> AlphaMorphism {
    AlphaMorphism { src: tensor(a, b), dst: tensor(b, a), m: swap_matrix(a.p, a.dim(), b.dim()) }
}

/// Permutation matrix of a reordering of tensor factors.
///
/// `dims` are the factor dimensions of the source; factor `k` of the target
/// is factor `perm[k]` of the source.
pub fn permutation_matrix(p: u32, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let n: usize = dims.iter().product();
    let tdims: Vec<usize> = perm.iter().map(|&k| dims[k]).collect();
    let mut m = Matrix::zeros(p, n, n);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..n {
        let mut r = src;
        for k in (0..dims.len()).rev() {
            idx[k] = r % dims[k];
            r /= dims[k];
        }
        let dst = perm.iter().zip(&tdims).fold(0, |acc, (&k, &d)| acc * d + idx[k]);
        m.set(dst, src, 1);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff_linalg::nilpotent_jordan;

    #[test]
    fn tensor_jordan_types() {
        let l2 = AlphaObject::simple(5, 2);
        let t = tensor(&l2, &l2);
        assert_eq!(nilpotent_jordan(&t.t_dense()).unwrap().partition(), vec![3, 1]);
        let l4 = AlphaObject::simple(5, 4);
        let t = tensor(&l4, &l4);
        assert_eq!(nilpotent_jordan(&t.t_dense()).unwrap().partition(), vec![5, 5, 5, 1]);
        let l1 = AlphaObject::unit(7);
        let l5 = AlphaObject::simple(7, 5);
        assert_eq!(nilpotent_jordan(&tensor(&l1, &l5).t_dense()).unwrap().partition(), vec![5]);
    }

    #[test]
    fn snake_identities() {
        for i in 1..=5 {
            let a = AlphaObject::simple(5, i);
            let n = a.dim();
            let id = Matrix::identity(5, n);
            // A → A⊗A*⊗A → A
            let left = id.kron(&ev_left(&a)).mul(&coev_left(&a).kron(&id));
            assert!(left.is_identity());
            // A* → A*⊗A⊗A* → A*
            let right = ev_left(&a).kron(&id).mul(&id.kron(&coev_left(&a)));
            assert!(right.is_identity());
        }
    }

    #[test]
    fn structural_maps_are_equivariant() {
        let a = AlphaObject::direct_sum(7, &[&AlphaObject::simple(7, 3), &AlphaObject::simple(7, 2)]);
        let ad = dual(&a);
        let one = AlphaObject::unit(7);
        assert!(check_equivariance(&tensor(&ad, &a), &one, &ev_left(&a)));
        assert!(check_equivariance(&tensor(&a, &ad), &one, &ev_right(&a)));
        assert!(check_equivariance(&one, &tensor(&a, &ad), &coev_left(&a)));
        assert!(check_equivariance(&one, &tensor(&ad, &a), &coev_right(&a)));
        let s = swap(&a, &ad);
        assert!(check_equivariance(&s.src, &s.dst, &s.m));
    }

    #[test]
    fn swap_trace_and_involution() {
        let l2 = AlphaObject::simple(5, 2);
        assert_eq!(swap(&l2, &l2).m.trace(), 2);
        let l3 = AlphaObject::simple(5, 3);
        let back = swap(&l3, &l2).compose(&swap(&l2, &l3)).unwrap();
        assert!(back.m.is_identity());
    }

    #[test]
    fn non_commuting_map_is_rejected() {
        let l2 = AlphaObject::simple(5, 2);
        let m = Matrix::from_rows(5, &[vec![1, 0], vec![0, 2]]);
        assert!(!check_equivariance(&l2, &l2, &m));
        assert!(check_equivariance(&l2, &l2, &l2.t_dense()));
    }

    #[test]
    fn permutation_matches_swap() {
        assert_eq!(permutation_matrix(5, &[2, 3], &[1, 0]), swap_matrix(5, 2, 3));
    }
}
