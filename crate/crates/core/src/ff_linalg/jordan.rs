//! Jordan decomposition of nilpotent operators over F_p.
//!
//! The operator is first split into the connected components of its
//! nonzero pattern; each component is an invariant coordinate subspace and
//! is decomposed on its own. Inside a component the chains are read off the
//! kernel filtration ker t ⊆ ker t² ⊆ …, taking kernel basis vectors in the
//! order produced by reduced row-echelon form, so the output depends only on
//! the input matrix.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::matrix::{Echelon, Matrix};
use super::sparse::SparseMatrix;
use crate::error::{Error, Result};

/// Jordan data of one invariant coordinate block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalJordan {
    /// Columns are the chain vectors, chain after chain.
    pub basis: Matrix,
    /// Inverse of `basis`.
    pub inverse: Matrix,
    /// Chain lengths in order.
    pub lengths: Vec<usize>,
    /// Column offset of each chain inside `basis`.
    pub offsets: Vec<usize>,
}

/// An invariant block of coordinates with its local decomposition.
#[derive(Clone, Debug)]
pub struct JordanBlock {
    /// Global coordinates spanning the block, increasing.
    pub coords: Vec<usize>,
    /// Restriction of t to the block.
    pub t: Matrix,
    pub local: Arc<LocalJordan>,
}

/// A Jordan chain: block index plus position inside that block's basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chain {
    pub len: usize,
    pub block: usize,
    /// Column offset inside the block basis.
    pub offset: usize,
}

/// Jordan decomposition of a nilpotent operator.
///
/// In the basis formed by the chains, listed in order, t maps every chain
/// vector to the next one of its chain and the last one to zero.
#[derive(Clone, Debug)]
pub struct JordanData {
    pub dim: usize,
    pub blocks: Vec<JordanBlock>,
    pub chains: Vec<Chain>,
}

impl PartialEq for JordanData {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.chains == other.chains
            && self.blocks.len() == other.blocks.len()
            && self.blocks.iter().zip(&other.blocks).all(|(a, b)| a.coords == b.coords && a.local == b.local)
    }
}

fn cache() -> &'static Mutex<HashMap<Matrix, Arc<LocalJordan>>> {
    static CACHE: OnceLock<Mutex<HashMap<Matrix, Arc<LocalJordan>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// True when t is the standard lower shift (t e_r = e_{r+1}).
fn is_lower_shift(t: &Matrix) -> bool {
    let n = t.rows();
    (0..n).all(|i| (0..n).all(|j| t.get(i, j) == u32::from(i == j + 1)))
}

/// Decomposes a dense nilpotent matrix that is treated as one block.
pub fn local_jordan(t: &Matrix) -> Result<Arc<LocalJordan>> {
    assert!(t.is_square());
    if is_lower_shift(t) {
        let n = t.rows();
        if n > t.p() as usize {
            return Err(Error::NotNilpotent);
        }
        let lengths = if n == 0 { vec![] } else { vec![n] };
        let offsets = if n == 0 { vec![] } else { vec![0] };
        let id = Matrix::identity(t.p(), n);
        return Ok(Arc::new(LocalJordan { basis: id.clone(), inverse: id, lengths, offsets }));
    }
    if let Some(hit) = cache().lock().expect("jordan cache").get(t) {
        return Ok(hit.clone());
    }
    let result = Arc::new(compute_local(t)?);
    cache().lock().expect("jordan cache").insert(t.clone(), result.clone());
    Ok(result)
}

fn compute_local(t: &Matrix) -> Result<LocalJordan> {
    let p = t.p();
    let n = t.rows();
    // kernels[j] holds a basis of ker t^j as columns, j = 0..=e.
    let mut kernels: Vec<Matrix> = vec![Matrix::zeros(p, n, 0)];
    let mut power = Matrix::identity(p, n);
    loop {
        let prev = kernels.last().expect("nonempty").cols();
        if prev == n {
            break;
        }
        if kernels.len() > p as usize {
            return Err(Error::NotNilpotent);
        }
        power = power.mul(t);
        let k = power.kernel();
        if k.cols() == prev {
            return Err(Error::NotNilpotent);
        }
        kernels.push(k);
    }
    let e = kernels.len() - 1;
    let mut heads: Vec<(Vec<u32>, usize)> = Vec::new();
    for l in (1..=e).rev() {
        let mut span = Echelon::new(p, n);
        let lower = &kernels[l - 1];
        for c in 0..lower.cols() {
            span.insert(&lower.col(c));
        }
        for (h, len) in &heads {
            let mut v = h.clone();
            for _ in 0..(len - l) {
                v = t.apply(&v);
            }
            span.insert(&v);
        }
        let cur = &kernels[l];
        for c in 0..cur.cols() {
            let v = cur.col(c);
            if span.insert(&v) {
                heads.push((v, l));
            }
        }
    }
    let mut columns = Vec::with_capacity(n);
    let mut lengths = Vec::new();
    let mut offsets = Vec::new();
    for (h, len) in heads {
        offsets.push(columns.len());
        lengths.push(len);
        let mut v = h;
        for _ in 0..len {
            let next = t.apply(&v);
            columns.push(v);
            v = next;
        }
    }
    debug_assert_eq!(columns.len(), n);
    let basis = Matrix::from_columns(p, n, &columns);
    let inverse = basis.inverse().expect("chain vectors form a basis");
    Ok(LocalJordan { basis, inverse, lengths, offsets })
}

impl JordanData {
    /// Assembles global data from blocks, listing chains block by block.
    pub fn from_blocks(dim: usize, blocks: Vec<JordanBlock>) -> Self {
        let mut chains = Vec::new();
        for (b, blk) in blocks.iter().enumerate() {
            for (&len, &offset) in blk.local.lengths.iter().zip(&blk.local.offsets) {
                chains.push(Chain { len, block: b, offset });
            }
        }
        JordanData { dim, blocks, chains }
    }

    /// Decomposes a sparse nilpotent operator.
    pub fn of_sparse(t: &SparseMatrix) -> Result<Self> {
        let mut blocks = Vec::new();
        for coords in t.components() {
            let tl = t.local(&coords);
            let local = local_jordan(&tl)?;
            blocks.push(JordanBlock { coords, t: tl, local });
        }
        Ok(JordanData::from_blocks(t.rows(), blocks))
    }

    /// Jordan data of a Kronecker sum, built from the blocks of the factors.
    pub fn tensor(a: &JordanData, b: &JordanData) -> Result<Self> {
        let p = a.blocks.first().or(b.blocks.first()).map_or(3, |blk| blk.t.p());
        let mut blocks = Vec::with_capacity(a.blocks.len() * b.blocks.len());
        for ba in &a.blocks {
            for bb in &b.blocks {
                let coords: Vec<usize> =
                    ba.coords.iter().flat_map(|&i| bb.coords.iter().map(move |&j| i * b.dim + j)).collect();
                let ta = ba.t.kron(&Matrix::identity(p, bb.coords.len()));
                let tb = Matrix::identity(p, ba.coords.len()).kron(&bb.t);
                let t = ta.add(&tb);
                let local = local_jordan(&t)?;
                blocks.push(JordanBlock { coords, t, local });
            }
        }
        blocks.sort_by_key(|blk| blk.coords[0]);
        Ok(JordanData::from_blocks(a.dim * b.dim, blocks))
    }

    /// Jordan data of a direct sum, shifting coordinates.
    pub fn direct_sum(parts: &[&JordanData]) -> Self {
        let mut blocks = Vec::new();
        let mut off = 0;
        for part in parts {
            for blk in &part.blocks {
                blocks.push(JordanBlock {
                    coords: blk.coords.iter().map(|c| c + off).collect(),
                    t: blk.t.clone(),
                    local: blk.local.clone(),
                });
            }
            off += part.dim;
        }
        JordanData::from_blocks(off, blocks)
    }

    /// Chain lengths in chain order.
    pub fn lengths(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.len).collect()
    }

    /// Chain lengths sorted decreasingly (the partition type of t).
    pub fn partition(&self) -> Vec<usize> {
        let mut v = self.lengths();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The r-th vector of chain `c` as a sparse global vector.
    pub fn chain_vector(&self, c: usize, r: usize) -> Vec<(usize, u32)> {
        let ch = self.chains[c];
        let blk = &self.blocks[ch.block];
        let col = ch.offset + r;
        blk.coords
            .iter()
            .enumerate()
            .filter_map(|(a, &g)| {
                let v = blk.local.basis.get(a, col);
                (v != 0).then_some((g, v))
            })
            .collect()
    }

    /// Dense change-of-basis matrix whose columns are all chain vectors.
    pub fn change_of_basis(&self) -> Matrix {
        let p = self.blocks.first().map_or(3, |b| b.t.p());
        let mut m = Matrix::zeros(p, self.dim, self.dim);
        let mut col = 0;
        for c in 0..self.chains.len() {
            for r in 0..self.chains[c].len {
                for (g, v) in self.chain_vector(c, r) {
                    m.set(g, col, v);
                }
                col += 1;
            }
        }
        m
    }

    /// Chains as (length, matrix of chain vectors as columns).
    pub fn chain_list(&self) -> Vec<(usize, Matrix)> {
        let p = self.blocks.first().map_or(3, |b| b.t.p());
        (0..self.chains.len())
            .map(|c| {
                let len = self.chains[c].len;
                let mut m = Matrix::zeros(p, self.dim, len);
                for r in 0..len {
                    for (g, v) in self.chain_vector(c, r) {
                        m.set(g, r, v);
                    }
                }
                (len, m)
            })
            .collect()
    }
}

/// Jordan decomposition of a dense nilpotent matrix with t^p = 0.
pub fn nilpotent_jordan(t: &Matrix) -> Result<JordanData> {
    JordanData::of_sparse(&SparseMatrix::from_dense(t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shift(p: u32, n: usize) -> Matrix {
        Matrix::from_fn(p, n, n, |i, j| u32::from(i == j + 1))
    }

    #[test]
    fn zero_operator() {
        let j = nilpotent_jordan(&Matrix::zeros(5, 4, 4)).unwrap();
        assert_eq!(j.partition(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn single_block() {
        let j = nilpotent_jordan(&shift(7, 5)).unwrap();
        assert_eq!(j.partition(), vec![5]);
    }

    #[test]
    fn l2_tensor_l2() {
        let t = shift(5, 2);
        let i = Matrix::identity(5, 2);
        let k = t.kron(&i).add(&i.kron(&t));
        assert_eq!(nilpotent_jordan(&k).unwrap().partition(), vec![3, 1]);
    }

    #[test]
    fn not_nilpotent() {
        assert_eq!(nilpotent_jordan(&Matrix::identity(5, 2)).unwrap_err(), Error::NotNilpotent);
        // Nilpotent, but of order 6 > p = 5.
        assert_eq!(nilpotent_jordan(&shift(5, 6)).unwrap_err(), Error::NotNilpotent);
    }

    #[test]
    fn basis_conjugates_to_shift() {
        let p = 7;
        let t = Matrix::from_rows(p, &[vec![0, 1, 2], vec![0, 0, 3], vec![0, 0, 0]]);
        let j = nilpotent_jordan(&t).unwrap();
        let pm = j.change_of_basis();
        let conj = pm.inverse().unwrap().mul(&t).mul(&pm);
        assert_eq!(conj, shift(p, 3));
    }
}
