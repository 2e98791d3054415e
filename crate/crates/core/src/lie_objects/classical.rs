//! Classical Lie algebras over F_p given by structure constants, and their
//! semisimplification along ad e for a nilpotent element e.

use serde::{Deserialize, Serialize};

use super::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::ff_linalg::{fp, Matrix};
use crate::rep_alphap::{self, AlphaObject};
use crate::verp::VerObject;

/// Structure constants of a Lie algebra over F_p.
///
/// `c[i][j]` lists pairs `(k, val)` with `[x_i, x_j] = Σ val · x_k`.
/// `e_index` names the basis vector e whose adjoint action becomes the
/// generator t of α_p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstants {
    pub dim: usize,
    pub p: u32,
    pub c: Vec<Vec<Vec<(usize, i64)>>>,
    pub e_index: usize,
}

impl StructureConstants {
    /// Reads the constants off a bracket given as a function on basis
    /// indices returning a coefficient vector.
    pub fn from_fn(p: u32, dim: usize, e_index: usize, mut bracket: impl FnMut(usize, usize) -> Vec<i64>) -> Self {
        let c = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| bracket(i, j).into_iter().enumerate().filter(|&(_, v)| fp::from_i64(v, p) != 0).collect())
                    .collect()
            })
            .collect();
        StructureConstants { dim, p, c, e_index }
    }

    /// Structure constants of a matrix Lie algebra spanned by `basis`.
    ///
    /// The span must be closed under commutators; coordinates are found
    /// by solving against the basis.
    pub fn from_matrices(p: u32, basis: &[Matrix], e_index: usize) -> Result<Self> {
        let dim = basis.len();
        let flat = |m: &Matrix| m.data().to_vec();
        let cols: Vec<Vec<u32>> = basis.iter().map(flat).collect();
        let n2 = cols.first().map_or(0, Vec::len);
        let b = Matrix::from_columns(p, n2, &cols);
        let mut out = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                let comm = basis[i].mul(&basis[j]).sub(&basis[j].mul(&basis[i]));
                let rhs = Matrix::from_columns(p, n2, &[flat(&comm)]);
                let x = b
                    .solve(&rhs)
                    .ok_or_else(|| Error::InvalidInput("basis is not closed under the commutator".into()))?;
                out[i][j] =
                    (0..dim).filter(|&k| x.get(k, 0) != 0).map(|k| (k, fp::to_signed(x.get(k, 0), p))).collect();
            }
        }
        Ok(StructureConstants { dim, p, c: out, e_index })
    }

    /// The bracket as a dim × dim² matrix, column i·dim + j holding [x_i, x_j].
    pub fn bracket_matrix(&self) -> Result<Matrix> {
        let n = self.dim;
        if self.c.len() != n || self.c.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!("structure constants must form a {n} × {n} table")));
        }
        let mut b = Matrix::zeros(self.p, n, n * n);
        for (i, row) in self.c.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                for &(k, v) in entry {
                    if k >= n {
                        return Err(Error::InvalidInput(format!("basis index {k} out of range")));
                    }
                    b.add_at(k, i * n + j, fp::from_i64(v, self.p));
                }
            }
        }
        Ok(b)
    }

    /// The matrix of ad e, column j holding [e, x_j].
    pub fn ad_e(&self) -> Result<Matrix> {
        if self.e_index >= self.dim {
            return Err(Error::InvalidInput(format!("e_index {} out of range", self.e_index)));
        }
        let n = self.dim;
        let b = self.bracket_matrix()?;
        Ok(Matrix::from_fn(self.p, n, n, |k, j| b.get(k, self.e_index * n + j)))
    }
}

/// Semisimplifies a classical Lie algebra along ad e.
///
/// The algebra becomes an object of Rep(α_p) with t acting by ad e, the
/// bracket is t-equivariant whenever Jacobi holds, and both are pushed
/// down to Ver_p.
pub fn semisimplify_lie(g0: &StructureConstants) -> Result<LieAlgebra> {
    fp::check_prime(g0.p)?;
    let b = g0.bracket_matrix()?;
    let t = g0.ad_e()?;
    let alpha = AlphaObject::from_matrix(&t)?;
    let square = rep_alphap::tensor(&alpha, &alpha);
    if !rep_alphap::check_equivariance(&square, &alpha, &b) {
        return Err(Error::NotEquivariant);
    }
    let obj = VerObject::from_alpha(alpha)?;
    Ok(LieAlgebra::from_upstairs(std::sync::Arc::new(obj), &b))
}
