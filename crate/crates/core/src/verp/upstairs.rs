//! Upstairs helpers shared by the Lie-theoretic layers.
//!
//! Morphisms out of tensor products are evaluated upstairs on the chain
//! vectors of each simple summand. A summand of type L_i of an object is
//! given by the matrix whose columns are the vectors of one Jordan chain;
//! this matrix is an equivariant map from the standard L_i, and its
//! projection to Ver_p is the inclusion of that summand.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::object::{Obj, VerObject};
use crate::ff_linalg::Matrix;

/// One non-negligible simple summand of an object.
#[derive(Clone, Debug)]
pub struct Summand {
    /// Simple type i of the summand L_i.
    pub ty: usize,
    /// Position of the summand among the summands of the same type.
    pub index: usize,
    /// Chain vectors as columns: an upstairs map L_i → object.
    pub basis: Matrix,
}

/// The non-negligible simple summands, ordered by type and then by chain.
///
/// The order matches the rows and columns of morphism blocks.
pub fn summands(obj: &VerObject) -> Vec<Summand> {
    let p = obj.p();
    let mut out = Vec::new();
    for ty in 1..p as usize {
        for (index, &c) in obj.chains_of(ty).iter().enumerate() {
            let mut basis = Matrix::zeros(p, obj.dim_upstairs(), ty);
            for r in 0..ty {
                for (g, v) in obj.jordan().chain_vector(c, r) {
                    basis.set(g, r, v);
                }
            }
            out.push(Summand { ty, index, basis });
        }
    }
    out
}

/// The tensor product of standard simples L_{i_1} ⊗ … ⊗ L_{i_n}, cached.
pub fn simple_tensor(p: u32, types: &[usize]) -> Obj {
    static CACHE: OnceLock<Mutex<HashMap<(u32, Vec<usize>), Obj>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (p, types.to_vec());
    if let Some(hit) = cache.lock().expect("simple tensor cache").get(&key) {
        return hit.clone();
    }
    let parts: Vec<Obj> = types.iter().map(|&i| VerObject::simple(p, i)).collect();
    let refs: Vec<&VerObject> = parts.iter().map(|x| x.as_ref()).collect();
    let obj = VerObject::tensor_all(p, &refs);
    cache.lock().expect("simple tensor cache").insert(key, obj.clone());
    obj
}

/// `f · (a ⊗ b)` for an upstairs map `f` out of a two-fold tensor product.
pub fn apply2(f: &Matrix, a: &Matrix, b: &Matrix) -> Matrix {
    f.mul_kron_id(a, b.rows()).mul_id_kron(b)
}

/// Reorders the columns of a map out of a three-fold tensor product.
///
/// `w` is indexed by the factors listed in `order` (slowest first), with
/// factor dimensions `dims`; the result is indexed by the factors in their
/// natural order 0, 1, 2. This is `w` precomposed with the permutation of
/// tensor factors.
pub fn reorder3(w: &Matrix, dims: [usize; 3], order: [usize; 3]) -> Matrix {
    let total = dims[0] * dims[1] * dims[2];
    assert_eq!(w.cols(), total, "column count does not match the factor dimensions");
    let mut cols = Vec::with_capacity(total);
    for x0 in 0..dims[0] {
        for x1 in 0..dims[1] {
            for x2 in 0..dims[2] {
                let x = [x0, x1, x2];
                let idx = (x[order[0]] * dims[order[1]] + x[order[1]]) * dims[order[2]] + x[order[2]];
                cols.push(idx);
            }
        }
    }
    w.select_cols(&cols)
}

/// `f · c_{A,B}` where `f` is a map out of B ⊗ A, dim A = `da`, dim B = `db`.
pub fn mul_swap(f: &Matrix, da: usize, db: usize) -> Matrix {
    assert_eq!(f.cols(), da * db);
    let cols: Vec<usize> = (0..da).flat_map(|i| (0..db).map(move |j| j * da + i)).collect();
    f.select_cols(&cols)
}

/// `c_{A,B} · m` where `m` maps into A ⊗ B, dim A = `da`, dim B = `db`.
pub fn swap_mul(m: &Matrix, da: usize, db: usize) -> Matrix {
    assert_eq!(m.rows(), da * db);
    let rows: Vec<usize> = (0..db).flat_map(|j| (0..da).map(move |i| i * db + j)).collect();
    m.select_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep_alphap::{permutation_matrix, swap_matrix};

    #[test]
    fn swap_helpers_match_the_permutation_matrix() {
        let p = 5;
        let f = Matrix::from_fn(p, 2, 6, |i, j| ((i + 3 * j) % 5) as u32);
        assert_eq!(mul_swap(&f, 2, 3), f.mul(&swap_matrix(p, 2, 3)));
        let m = Matrix::from_fn(p, 6, 2, |i, j| ((2 * i + j) % 5) as u32);
        assert_eq!(swap_mul(&m, 3, 2), swap_matrix(p, 3, 2).mul(&m));
    }

    #[test]
    fn reorder_matches_permutation_matrix() {
        let p = 7;
        let dims = [2, 3, 2];
        let w = Matrix::from_fn(p, 1, 12, |_, j| j as u32 % 7);
        // w is indexed by (x1, x2, x0); precompose with x0⊗x1⊗x2 ↦ x1⊗x2⊗x0.
        let perm = permutation_matrix(p, &dims, &[1, 2, 0]);
        assert_eq!(reorder3(&w, dims, [1, 2, 0]), w.mul(&perm));
    }

    #[test]
    fn summands_of_a_canonical_object() {
        let obj = VerObject::canonical(5, &[1, 0, 2, 0]);
        let s = summands(&obj);
        assert_eq!(s.iter().map(|x| x.ty).collect::<Vec<_>>(), vec![1, 3, 3]);
        assert_eq!(s[2].basis.get(4, 0), 1);
    }
}
