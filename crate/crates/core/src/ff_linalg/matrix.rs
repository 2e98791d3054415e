//! Dense matrices over F_p with exact Gaussian elimination.

use std::fmt;

use super::fp;

/// A dense row-major matrix over F_p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Matrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = fp::from_i64(x, p);
            }
        }
        m
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Matrix::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % p;
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % p;
            }
        }
        m
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

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    /// Adds `v` to entry (i, j).
    #[inline]
    pub fn add_at(&mut self, i: usize, j: usize, v: u32) {
        let k = i * self.cols + j;
        self.data[k] = fp::add(self.data[k], v % self.p, self.p);
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| fp::add(acc, self.get(i, i), self.p))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "product shape mismatch {:?} * {:?}", self.shape(), other.shape());
        assert_eq!(self.p, other.p);
        let p = self.p as u64;
        let n = other.cols;
        let mut out = Matrix::zeros(self.p, self.rows, n);
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0u32;
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u64;
                for (x, &b) in acc.iter_mut().zip(other.row(k)) {
                    *x += a * b as u64;
                }
                pending += 1;
                // Each term is below 2^32, so 2^31 terms never overflow.
                if pending == 1 << 30 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, x) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (x % p) as u32;
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "sum shape mismatch");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| fp::add(a, b, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "difference shape mismatch");
        let p = self.p;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| fp::sub(a, b, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| fp::neg(a, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let p = self.p;
        let data = self.data.iter().map(|&a| fp::mul(a, s % p, p)).collect();
        Matrix { p, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Kronecker product, with the left factor's index varying slowest.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Matrix::zeros(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.data[(i * other.rows + k) * c + j * other.cols + l] = fp::mul(a, b, self.p);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.p, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The same entries read with a different shape (row-major order).
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.data.len(), "reshape changes the number of entries");
        Matrix { p: self.p, rows, cols, data: self.data.clone() }
    }

    /// `self · (I_n ⊗ d)` where `n = cols / d.rows`.
    pub fn mul_id_kron(&self, d: &Matrix) -> Matrix {
        assert!(d.rows > 0 && self.cols.is_multiple_of(d.rows), "column count is not a multiple of the factor");
        let n = self.cols / d.rows;
        self.reshape(self.rows * n, d.rows).mul(d).reshape(self.rows, n * d.cols)
    }

    /// `self · (d ⊗ I_n)`.
    pub fn mul_kron_id(&self, d: &Matrix, n: usize) -> Matrix {
        assert_eq!(self.cols, d.rows * n, "column count does not match d ⊗ I_n");
        let p = self.p as u64;
        let oc = d.cols * n;
        let mut out = Matrix::zeros(self.p, self.rows, oc);
        let mut acc = vec![0u64; oc];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let row = self.row(r);
            for i in 0..d.rows {
                let seg = &row[i * n..(i + 1) * n];
                if seg.iter().all(|&x| x == 0) {
                    continue;
                }
                for (j, &dv) in d.row(i).iter().enumerate() {
                    if dv == 0 {
                        continue;
                    }
                    let dv = dv as u64;
                    for (o, &a) in acc[j * n..(j + 1) * n].iter_mut().zip(seg) {
                        *o = (*o + dv * a as u64) % p;
                    }
                }
            }
            for (o, &x) in out.row_mut(r).iter_mut().zip(&acc) {
                *o = x as u32;
            }
        }
        out
    }

    /// `(I_n ⊗ d) · self` where `n = rows / d.cols`.
    pub fn id_kron_mul(&self, d: &Matrix) -> Matrix {
        if d.cols == 0 {
            assert_eq!(self.rows, 0);
            return Matrix::zeros(self.p, 0, self.cols);
        }
        assert_eq!(self.rows % d.cols, 0, "row count is not a multiple of the factor");
        let n = self.rows / d.cols;
        let mut out = Matrix::zeros(self.p, n * d.rows, self.cols);
        for x in 0..n {
            let part = Matrix {
                p: self.p,
                rows: d.cols,
                cols: self.cols,
                data: self.data[x * d.cols * self.cols..(x + 1) * d.cols * self.cols].to_vec(),
            };
            out.paste(x * d.rows, 0, &d.mul(&part));
        }
        out
    }

    /// `(d ⊗ I_n) · self`.
    pub fn kron_id_mul(&self, d: &Matrix, n: usize) -> Matrix {
        assert_eq!(self.rows, d.cols * n, "row count does not match d ⊗ I_n");
        // Rows are indexed (b, y); regroup them as (y, b), apply d, regroup back.
        let perm: Vec<usize> = (0..n).flat_map(|y| (0..d.cols).map(move |b| b * n + y)).collect();
        let inner = self.select_rows(&perm).id_kron_mul(d);
        let back: Vec<usize> = (0..d.rows).flat_map(|a| (0..n).map(move |y| y * d.rows + a)).collect();
        inner.select_rows(&back)
    }

    /// Partial transpose moving the last tensor factor of the source into
    /// the target: for `self`: A ⊗ B → C with dim B = n, returns the map
    /// A → C ⊗ B with entry `(c·n + b, a) = self(c, a·n + b)`.
    pub fn mate_last(&self, n: usize) -> Matrix {
        assert!(n > 0 && self.cols.is_multiple_of(n), "source is not a tensor with a factor of dimension {n}");
        let a = self.cols / n;
        let mut out = Matrix::zeros(self.p, self.rows * n, a);
        for c in 0..self.rows {
            let row = self.row(c);
            for x in 0..a {
                for b in 0..n {
                    out.data[(c * n + b) * a + x] = row[x * n + b];
                }
            }
        }
        out
    }

    /// Inverse of [`Matrix::mate_last`]: from A → C ⊗ B back to A ⊗ B → C.
    pub fn unmate_last(&self, n: usize) -> Matrix {
        assert!(n > 0 && self.rows.is_multiple_of(n), "target is not a tensor with a factor of dimension {n}");
        let c = self.rows / n;
        let a = self.cols;
        let mut out = Matrix::zeros(self.p, c, a * n);
        for y in 0..c {
            for b in 0..n {
                let row = self.row(y * n + b);
                for x in 0..a {
                    out.data[y * a * n + x * n + b] = row[x];
                }
            }
        }
        out
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j);
            }
        }
        m
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.p, rows.len(), self.cols);
        for (a, &i) in rows.iter().enumerate() {
            m.row_mut(a).copy_from_slice(self.row(i));
        }
        m
    }

    pub fn select_cols(&self, cols: &[usize]) -> Matrix {
        let all: Vec<usize> = (0..self.rows).collect();
        self.select(&all, cols)
    }

    /// Horizontal concatenation.
    pub fn hstack(p: u32, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + m.cols].copy_from_slice(m.row(i));
            }
            off += m.cols;
        }
        out
    }

    /// Vertical concatenation.
    pub fn vstack(p: u32, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
        }
        Matrix { p, rows, cols, data }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(p: u32, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in parts {
            out.paste(r0, c0, m);
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    /// Writes `m` into `self` with its top-left corner at (r0, c0).
    pub fn paste(&mut self, r0: usize, c0: usize, m: &Matrix) {
        for i in 0..m.rows {
            let c = self.cols;
            self.data[(r0 + i) * c + c0..(r0 + i) * c + c0 + m.cols].copy_from_slice(m.row(i));
        }
    }

    /// Reduced row-echelon form; pivots are the leftmost possible columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            if piv != r {
                for j in 0..m.cols {
                    m.data.swap(piv * m.cols + j, r * m.cols + j);
                }
            }
            let s = fp::inv(m.get(r, c), p);
            for x in m.row_mut(r)[c..].iter_mut() {
                *x = fp::mul(*x, s, p);
            }
            let pivot_row: Vec<u32> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                let nf = fp::neg(f, p) as u64;
                for (x, &y) in m.row_mut(i)[c..].iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = ((*x as u64 + nf * y as u64) % p as u64) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Kernel basis as the columns of a matrix, one per free column in
    /// increasing order, each normalized to 1 at its free coordinate.
    pub fn kernel(&self) -> Matrix {
        let Rref { matrix: r, pivots } = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Solves `self * X = b`, returning one solution if any exists.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let aug = Matrix::hstack(self.p, self.rows, &[self, b]);
        let Rref { matrix: r, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, b.cols);
        for (i, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Matrix::identity(self.p, self.rows)).filter(|_| self.rank() == self.rows)
    }

    /// Basis of the column space in reduced column-echelon form.
    pub fn column_space(&self) -> Matrix {
        let Rref { matrix: r, pivots } = self.transpose().rref();
        r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose()
    }

    /// Converts to signed representatives, useful for printing.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| fp::to_signed(x, self.p)).collect()).collect()
    }
}

/// Kernel basis from an already reduced matrix.
pub fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Matrix {
    let p = r.p;
    let mut is_pivot = vec![false; r.cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..r.cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = Matrix::zeros(p, r.cols, free.len());
    for (j, &f) in free.iter().enumerate() {
        k.set(f, j, 1);
        for (i, &c) in pivots.iter().enumerate() {
            k.set(c, j, fp::neg(r.get(i, f), p));
        }
    }
    k
}

/// Rank, kernel basis (as columns) and reduced row-echelon form of `a`.
pub fn rref_rank_kernel(a: &Matrix) -> (usize, Matrix, Matrix) {
    let Rref { matrix, pivots } = a.rref();
    let kernel = kernel_from_rref(&matrix, &pivots);
    (pivots.len(), kernel, matrix)
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// An incrementally built echelon basis, used to test membership in a span.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u32,
    dim: usize,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon {
    pub fn new(p: u32, dim: usize) -> Self {
        Echelon { p, dim, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` against the stored basis.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.dim);
        let p = self.p as u64;
        let mut w = v.to_vec();
        for (piv, row) in &self.rows {
            let f = w[*piv];
            if f == 0 {
                continue;
            }
            let nf = fp::neg(f, self.p) as u64;
            for (x, &y) in w.iter_mut().zip(row) {
                if y != 0 {
                    *x = ((*x as u64 + nf * y as u64) % p) as u32;
                }
            }
        }
        w
    }

    /// Inserts `v` if it is independent of the stored vectors; returns
    /// whether it was inserted.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = self.reduce(v);
        let Some(piv) = w.iter().position(|&x| x != 0) else { return false };
        let s = fp::inv(w[piv], self.p);
        for x in w.iter_mut() {
            *x = fp::mul(*x, s, self.p);
        }
        self.rows.push((piv, w));
        true
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let (rank, k, _) = rref_rank_kernel(&Matrix::zeros(5, 3, 3));
        assert_eq!(rank, 0);
        assert!(k.is_identity());
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let (rank, k, r) = rref_rank_kernel(&Matrix::identity(7, 4));
        assert_eq!(rank, 4);
        assert_eq!(k.cols(), 0);
        assert!(r.is_identity());
    }

    #[test]
    fn dependent_rows() {
        let a = Matrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
        let (rank, k, _) = rref_rank_kernel(&a);
        assert_eq!(rank, 1);
        assert!(a.mul(&k).is_zero());
    }

    #[test]
    fn inverse_and_solve() {
        let a = Matrix::from_rows(7, &[vec![2, 1, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let inv = a.inverse().expect("invertible");
        assert!(a.mul(&inv).is_identity());
        let b = Matrix::from_rows(7, &[vec![1], vec![2], vec![3]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = Matrix::from_rows(7, &[vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn kron_shapes() {
        let a = Matrix::from_rows(5, &[vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(5, 3);
        let k = a.kron(&i);
        assert_eq!(k.shape(), (6, 6));
        assert_eq!(k.get(3, 0), 3);
        assert_eq!(k.get(4, 1), 3);
    }

    #[test]
    fn kron_helpers_agree_with_kron() {
        let p = 7;
        let a = Matrix::from_fn(p, 3, 12, |i, j| ((i * 5 + j * 3 + 1) % 7) as u32);
        let d = Matrix::from_fn(p, 4, 2, |i, j| ((i + 2 * j) % 7) as u32);
        let e = Matrix::from_fn(p, 3, 5, |i, j| ((3 * i + j + 2) % 7) as u32);
        assert_eq!(a.mul_id_kron(&d), a.mul(&Matrix::identity(p, 3).kron(&d)));
        assert_eq!(a.mul_kron_id(&d, 3), a.mul(&d.kron(&Matrix::identity(p, 3))));
        let m = Matrix::from_fn(p, 10, 3, |i, j| ((i * i + j) % 7) as u32);
        let f = Matrix::from_fn(p, 4, 5, |i, j| ((i * j + 1) % 7) as u32);
        assert_eq!(m.id_kron_mul(&f), Matrix::identity(p, 2).kron(&f).mul(&m));
        assert_eq!(m.kron_id_mul(&f, 2), f.kron(&Matrix::identity(p, 2)).mul(&m));
        let g = e.select_cols(&[0, 1, 2]);
        assert_eq!(g.kron_id_mul(&Matrix::identity(p, 1), 3), g);
        let x = a.mate_last(4);
        assert_eq!(x.shape(), (12, 3));
        assert_eq!(x.unmate_last(4), a);
    }

    #[test]
    fn echelon_membership() {
        let mut e = Echelon::new(5, 3);
        assert!(e.insert(&[1, 2, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(!e.insert(&[2, 0, 1]));
        assert!(e.contains(&[1, 3, 1]));
        assert!(!e.contains(&[0, 0, 1]));
    }
}
