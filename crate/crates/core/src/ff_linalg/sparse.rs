//! Sparse square operators, used for the nilpotent generator `t`.
//!
//! The operator `t` of a tensor power is a Kronecker sum of very sparse
//! blocks, so it is stored row-wise as (column, value) pairs. Everything
//! else in the crate stays dense.

use super::fp;
use super::matrix::Matrix;

/// A sparse matrix stored as sorted (column, value) lists per row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparseMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, u32)>>,
}

impl SparseMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        SparseMatrix { p, rows, cols, entries: vec![Vec::new(); rows] }
    }

    pub fn from_dense(m: &Matrix) -> Self {
        let mut s = SparseMatrix::zeros(m.p(), m.rows(), m.cols());
        for i in 0..m.rows() {
            s.entries[i] = m.row(i).iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, &x)| (j, x)).collect();
        }
        s
    }

    /// Builds from (row, col, value) triples; repeated positions are summed.
    pub fn from_triples(
        p: u32,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Self {
        let mut s = SparseMatrix::zeros(p, rows, cols);
        for (i, j, v) in triples {
            s.add_at(i, j, v);
        }
        s
    }

    fn add_at(&mut self, i: usize, j: usize, v: u32) {
        let p = self.p;
        let row = &mut self.entries[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => {
                row[k].1 = fp::add(row[k].1, v % p, p);
                if row[k].1 == 0 {
                    row.remove(k);
                }
            }
            Err(k) => {
                if !v.is_multiple_of(p) {
                    row.insert(k, (j, v % p));
                }
            }
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, u32)] {
        &self.entries[i]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i].binary_search_by_key(&j, |e| e.0).map_or(0, |k| self.entries[i][k].1)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows, self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, v) in row {
                m.set(i, j, v);
            }
        }
        m
    }

    /// The matrix `a ⊗ 1 + 1 ⊗ b` acting on the Kronecker product space.
    pub fn kron_sum(a: &SparseMatrix, b: &SparseMatrix) -> SparseMatrix {
        assert!(a.rows == a.cols && b.rows == b.cols);
        let (n, m) = (a.rows, b.rows);
        let mut out = SparseMatrix::zeros(a.p, n * m, n * m);
        for i in 0..n {
            for k in 0..m {
                let mut row: Vec<(usize, u32)> = Vec::new();
                for &(j, v) in &a.entries[i] {
                    row.push((j * m + k, v));
                }
                for &(l, v) in &b.entries[k] {
                    row.push((i * m + l, v));
                }
                row.sort_unstable_by_key(|e| e.0);
                let mut merged: Vec<(usize, u32)> = Vec::with_capacity(row.len());
                for (c, v) in row {
                    match merged.last_mut() {
                        Some(last) if last.0 == c => last.1 = fp::add(last.1, v, a.p),
                        _ => merged.push((c, v)),
                    }
                }
                merged.retain(|e| e.1 != 0);
                out.entries[i * m + k] = merged;
            }
        }
        out
    }

    /// The matrix `-transpose(self)`.
    pub fn neg_transpose(&self) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.p, self.cols, self.rows);
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, v) in row {
                out.entries[j].push((i, fp::neg(v, self.p)));
            }
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(p: u32, parts: &[&SparseMatrix]) -> SparseMatrix {
        let n: usize = parts.iter().map(|s| s.rows).sum();
        let mut out = SparseMatrix::zeros(p, n, n);
        let mut off = 0;
        for s in parts {
            for (i, row) in s.entries.iter().enumerate() {
                out.entries[off + i] = row.iter().map(|&(j, v)| (j + off, v)).collect();
            }
            off += s.rows;
        }
        out
    }

    /// Dense product `self * m`.
    pub fn mul_dense(&self, m: &Matrix) -> Matrix {
        assert_eq!(self.cols, m.rows());
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, m.cols());
        let mut acc = vec![0u64; m.cols()];
        for (i, row) in self.entries.iter().enumerate() {
            if row.is_empty() {
                continue;
            }
            acc.iter_mut().for_each(|x| *x = 0);
            for &(k, v) in row {
                for (x, &b) in acc.iter_mut().zip(m.row(k)) {
                    *x += v as u64 * b as u64;
                }
            }
            for (o, x) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    /// Dense product `m * self`.
    pub fn dense_mul(m: &Matrix, s: &SparseMatrix) -> Matrix {
        assert_eq!(m.cols(), s.rows);
        let p = s.p as u64;
        let mut out = Matrix::zeros(s.p, m.rows(), s.cols);
        let mut acc = vec![0u64; s.cols];
        for i in 0..m.rows() {
            acc.iter_mut().for_each(|x| *x = 0);
            for (k, &a) in m.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for &(j, v) in &s.entries[k] {
                    acc[j] += a as u64 * v as u64;
                }
            }
            for (o, x) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    /// Connected components of the undirected graph of nonzero entries,
    /// each sorted, listed in order of their smallest index.
    pub fn components(&self) -> Vec<Vec<usize>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (i, row) in self.entries.iter().enumerate() {
            for &(j, _) in row {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut index_of_root = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index_of_root[r]].push(i);
        }
        comps
    }

    /// Restriction to a set of coordinates, as a dense matrix.
    pub fn local(&self, coords: &[usize]) -> Matrix {
        let mut pos = std::collections::HashMap::with_capacity(coords.len());
        for (a, &c) in coords.iter().enumerate() {
            pos.insert(c, a);
        }
        let mut m = Matrix::zeros(self.p, coords.len(), coords.len());
        for (a, &c) in coords.iter().enumerate() {
            for &(j, v) in &self.entries[c] {
                if let Some(&b) = pos.get(&j) {
                    m.set(a, b, v);
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_sum_matches_dense() {
        let a = Matrix::from_rows(5, &[vec![0, 0], vec![1, 0]]);
        let b = Matrix::from_rows(5, &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 2, 0]]);
        let s = SparseMatrix::kron_sum(&SparseMatrix::from_dense(&a), &SparseMatrix::from_dense(&b));
        let dense = a.kron(&Matrix::identity(5, 3)).add(&Matrix::identity(5, 2).kron(&b));
        assert_eq!(s.to_dense(), dense);
    }

    #[test]
    fn components_of_block_diagonal() {
        let a = SparseMatrix::from_triples(5, 5, 5, [(1, 0, 1), (4, 3, 1)]);
        assert_eq!(a.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn products_agree_with_dense() {
        let s = SparseMatrix::from_triples(7, 3, 3, [(1, 0, 1), (2, 1, 3)]);
        let m = Matrix::from_rows(7, &[vec![1, 2, 3], vec![4, 5, 6], vec![0, 1, 0]]);
        assert_eq!(s.mul_dense(&m), s.to_dense().mul(&m));
        assert_eq!(SparseMatrix::dense_mul(&m, &s), m.mul(&s.to_dense()));
    }
}
