//! Morphisms of Ver_p as per-simple-type block matrices.
//!
//! A morphism A → B is a family of matrices, one for each simple type L_i,
//! of shape mult_i(B) × mult_i(A). Upstairs it is represented by the map
//! that sends the r-th vector of a source chain to the r-th vector of a
//! target chain, weighted by the block entry. Conversely an upstairs map
//! is projected down by taking, for each pair of chains of equal length
//! i < p, the normalized trace of its chain-to-chain component.

use std::sync::Arc;

use super::object::{Obj, VerObject};
use crate::error::{Error, Result};
use crate::ff_linalg::{fp, Matrix};

/// A morphism of Ver_p.
#[derive(Clone, Debug)]
pub struct VerMorphism {
    src: Obj,
    dst: Obj,
    blocks: Vec<Matrix>,
}

impl PartialEq for VerMorphism {
    fn eq(&self, other: &Self) -> bool {
        same_object(&self.src, &other.src) && same_object(&self.dst, &other.dst) && self.blocks == other.blocks
    }
}

/// Object identity used for composability: the same handle, or equal data.
pub fn same_object(a: &Obj, b: &Obj) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Component of an upstairs vector on the chain rows of a Jordan basis:
/// the r-th row of the inverse change of basis belonging to chain `c`.
fn inverse_row(obj: &VerObject, c: usize, r: usize) -> Vec<(usize, u32)> {
    let j = obj.jordan();
    let ch = j.chains[c];
    let blk = &j.blocks[ch.block];
    let row = blk.local.inverse.row(ch.offset + r);
    blk.coords.iter().zip(row).filter(|(_, &v)| v != 0).map(|(&g, &v)| (g, v)).collect()
}

impl VerMorphism {
    /// Builds a morphism from its blocks, checking their shapes.
    pub fn new(src: Obj, dst: Obj, blocks: Vec<Matrix>) -> Result<Self> {
        let p = src.p();
        if dst.p() != p || blocks.len() != p as usize - 1 {
            return Err(Error::ShapeMismatch("block list does not match p".into()));
        }
        for (k, b) in blocks.iter().enumerate() {
            if b.shape() != (dst.mult()[k], src.mult()[k]) {
                return Err(Error::ShapeMismatch(format!(
                    "block for L{} has shape {:?}, expected {:?}",
                    k + 1,
                    b.shape(),
                    (dst.mult()[k], src.mult()[k])
                )));
            }
        }
        Ok(VerMorphism { src, dst, blocks })
    }

    pub fn zero(src: &Obj, dst: &Obj) -> Self {
        let p = src.p();
        let blocks = (0..p as usize - 1).map(|k| Matrix::zeros(p, dst.mult()[k], src.mult()[k])).collect();
        VerMorphism { src: src.clone(), dst: dst.clone(), blocks }
    }

    pub fn identity(obj: &Obj) -> Self {
        let p = obj.p();
        let blocks = obj.mult().iter().map(|&m| Matrix::identity(p, m)).collect();
        VerMorphism { src: obj.clone(), dst: obj.clone(), blocks }
    }

    pub fn src(&self) -> &Obj {
        &self.src
    }

    pub fn dst(&self) -> &Obj {
        &self.dst
    }

    pub fn p(&self) -> u32 {
        self.src.p()
    }

    /// Block for simple type L_i.
    pub fn block(&self, i: usize) -> &Matrix {
        &self.blocks[i - 1]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    /// Projects an upstairs map `f`: src → dst down to Ver_p.
    pub fn semisimplify(f: &Matrix, src: &Obj, dst: &Obj) -> Self {
        assert_eq!(
            f.shape(),
            (dst.dim_upstairs(), src.dim_upstairs()),
            "upstairs map has the wrong shape for its realizations"
        );
        let p = src.p();
        let ft = f.transpose();
        let mut blocks = Vec::with_capacity(p as usize - 1);
        for i in 1..p as usize {
            let (sc, dc) = (src.chains_of(i), dst.chains_of(i));
            let mut b = Matrix::zeros(p, dc.len(), sc.len());
            if sc.is_empty() || dc.is_empty() {
                blocks.push(b);
                continue;
            }
            let inv_i = fp::inv(i as u32 % p, p) as u64;
            let dst_rows: Vec<Vec<Vec<(usize, u32)>>> =
                dc.iter().map(|&c| (0..i).map(|r| inverse_row(dst, c, r)).collect()).collect();
            for (a, &cs) in sc.iter().enumerate() {
                // Images of the chain vectors of source chain `cs`.
                let images: Vec<Vec<u32>> = (0..i)
                    .map(|r| {
                        let v = src.jordan().chain_vector(cs, r);
                        let mut out = vec![0u64; f.rows()];
                        for (g, x) in v {
                            for (o, &y) in out.iter_mut().zip(ft.row(g)) {
                                *o += x as u64 * y as u64;
                            }
                        }
                        out.into_iter().map(|x| (x % p as u64) as u32).collect()
                    })
                    .collect();
                for (bi, rows) in dst_rows.iter().enumerate() {
                    let mut s = 0u64;
                    for (r, row) in rows.iter().enumerate() {
                        for &(g, x) in row {
                            s += x as u64 * images[r][g] as u64;
                        }
                    }
                    b.set(bi, a, ((s % p as u64) * inv_i % p as u64) as u32);
                }
            }
            blocks.push(b);
        }
        VerMorphism { src: src.clone(), dst: dst.clone(), blocks }
    }

    /// An upstairs representative of this morphism.
    pub fn lift(&self) -> Matrix {
        let p = self.p();
        let mut f = Matrix::zeros(p, self.dst.dim_upstairs(), self.src.dim_upstairs());
        for i in 1..p as usize {
            let blk = &self.blocks[i - 1];
            if blk.is_zero() {
                continue;
            }
            for (a, &cs) in self.src.chains_of(i).iter().enumerate() {
                let rows: Vec<Vec<(usize, u32)>> = (0..i).map(|r| inverse_row(&self.src, cs, r)).collect();
                for (b, &cd) in self.dst.chains_of(i).iter().enumerate() {
                    let c = blk.get(b, a);
                    if c == 0 {
                        continue;
                    }
                    for (r, row) in rows.iter().enumerate() {
                        for (gd, y) in self.dst.jordan().chain_vector(cd, r) {
                            let cy = fp::mul(c, y, p);
                            for &(gs, x) in row {
                                f.add_at(gd, gs, fp::mul(cy, x, p));
                            }
                        }
                    }
                }
            }
        }
        f
    }

    fn check_parallel(&self, other: &VerMorphism) -> Result<()> {
        if same_object(&self.src, &other.src) && same_object(&self.dst, &other.dst) {
            Ok(())
        } else {
            Err(Error::ShapeMismatch("morphisms are not parallel".into()))
        }
    }

    /// The composite `self ∘ inner`.
    pub fn compose(&self, inner: &VerMorphism) -> Result<Self> {
        if !same_object(&inner.dst, &self.src) {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: target {} does not match source {}",
                inner.dst, self.src
            )));
        }
        let blocks = self.blocks.iter().zip(&inner.blocks).map(|(a, b)| a.mul(b)).collect();
        Ok(VerMorphism { src: inner.src.clone(), dst: self.dst.clone(), blocks })
    }

    /// Composite that panics on a mismatch; for internal use on maps whose
    /// objects are known to agree.
    pub fn then(&self, outer: &VerMorphism) -> Self {
        outer.compose(self).expect("composable morphisms")
    }

    pub fn add(&self, other: &VerMorphism) -> Result<Self> {
        self.check_parallel(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Ok(VerMorphism { src: self.src.clone(), dst: self.dst.clone(), blocks })
    }

    pub fn sub(&self, other: &VerMorphism) -> Result<Self> {
        self.check_parallel(other)?;
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Ok(VerMorphism { src: self.src.clone(), dst: self.dst.clone(), blocks })
    }

    pub fn scale(&self, s: u32) -> Self {
        let blocks = self.blocks.iter().map(|a| a.scale(s)).collect();
        VerMorphism { src: self.src.clone(), dst: self.dst.clone(), blocks }
    }

    pub fn neg(&self) -> Self {
        let blocks = self.blocks.iter().map(Matrix::neg).collect();
        VerMorphism { src: self.src.clone(), dst: self.dst.clone(), blocks }
    }

    /// Replaces source and target by equal objects (e.g. other handles).
    pub fn retarget(&self, src: &Obj, dst: &Obj) -> Result<Self> {
        if !same_object(&self.src, src) || !same_object(&self.dst, dst) {
            return Err(Error::ShapeMismatch("retarget to different objects".into()));
        }
        Ok(VerMorphism { src: src.clone(), dst: dst.clone(), blocks: self.blocks.clone() })
    }

    /// Tensor product, computed by lifting, tensoring and projecting down.
    pub fn tensor(&self, other: &VerMorphism) -> Self {
        let src = VerObject::tensor(&self.src, &other.src);
        let dst = VerObject::tensor(&self.dst, &other.dst);
        self.tensor_into(other, &src, &dst)
    }

    /// Tensor product with prescribed (equal) tensor objects.
    pub fn tensor_into(&self, other: &VerMorphism, src: &Obj, dst: &Obj) -> Self {
        let f = self.lift().kron(&other.lift());
        VerMorphism::semisimplify(&f, src, dst)
    }

    /// Kernel as a canonical object with its inclusion.
    pub fn kernel(&self) -> (Obj, VerMorphism) {
        let p = self.p();
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::kernel).collect();
        let mult: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let k = VerObject::canonical(p, &mult);
        (k.clone(), VerMorphism { src: k, dst: self.src.clone(), blocks: bases })
    }

    /// Image as a canonical object, with its inclusion into the target and
    /// the corestriction of `self` onto it.
    pub fn image(&self) -> (Obj, VerMorphism, VerMorphism) {
        let p = self.p();
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space).collect();
        let mult: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let im = VerObject::canonical(p, &mult);
        let coords: Vec<Matrix> =
            bases.iter().zip(&self.blocks).map(|(b, f)| b.solve(f).expect("columns lie in the column space")).collect();
        let incl = VerMorphism { src: im.clone(), dst: self.dst.clone(), blocks: bases };
        let cores = VerMorphism { src: self.src.clone(), dst: im.clone(), blocks: coords };
        (im, incl, cores)
    }

    pub fn is_mono(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    /// A left inverse of a monomorphism.
    pub fn left_inverse(&self) -> Result<Self> {
        let p = self.p();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            if b.rank() != b.cols() {
                return Err(Error::InvalidInput("left inverse of a non-injective map".into()));
            }
            let rows = b.transpose().rref().pivots;
            let sq = b.select_rows(&rows);
            let inv = sq.inverse().expect("pivot rows are independent");
            let mut l = Matrix::zeros(p, b.cols(), b.rows());
            for (a, &r) in rows.iter().enumerate() {
                for i in 0..b.cols() {
                    l.set(i, r, inv.get(i, a));
                }
            }
            blocks.push(l);
        }
        Ok(VerMorphism { src: self.dst.clone(), dst: self.src.clone(), blocks })
    }

    /// A right inverse of an epimorphism.
    pub fn right_inverse(&self) -> Result<Self> {
        let p = self.p();
        let mut blocks = Vec::new();
        for b in &self.blocks {
            if b.rank() != b.rows() {
                return Err(Error::InvalidInput("right inverse of a non-surjective map".into()));
            }
            let cols = b.rref().pivots;
            let sq = b.select_cols(&cols);
            let inv = sq.inverse().expect("pivot columns are independent");
            let mut r = Matrix::zeros(p, b.cols(), b.rows());
            for (a, &c) in cols.iter().enumerate() {
                for j in 0..b.rows() {
                    r.set(c, j, inv.get(a, j));
                }
            }
            blocks.push(r);
        }
        Ok(VerMorphism { src: self.dst.clone(), dst: self.src.clone(), blocks })
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_iso() {
            return Err(Error::InvalidInput("inverse of a non-invertible map".into()));
        }
        self.left_inverse()
    }
}

/// Direct sum of objects with the canonical injections and projections.
pub fn direct_sum_with_maps(p: u32, parts: &[Obj]) -> (Obj, Vec<VerMorphism>, Vec<VerMorphism>) {
    let refs: Vec<&VerObject> = parts.iter().map(|x| x.as_ref()).collect();
    let sum = VerObject::direct_sum(p, &refs);
    let mut incls = Vec::new();
    let mut projs = Vec::new();
    for (k, part) in parts.iter().enumerate() {
        let mut ib = Vec::new();
        let mut pb = Vec::new();
        for i in 1..p as usize {
            let before: usize = parts[..k].iter().map(|x| x.mult_of(i)).sum();
            let m = part.mult_of(i);
            let total = sum.mult_of(i);
            let mut inc = Matrix::zeros(p, total, m);
            for r in 0..m {
                inc.set(before + r, r, 1);
            }
            pb.push(inc.transpose());
            ib.push(inc);
        }
        incls.push(VerMorphism { src: part.clone(), dst: sum.clone(), blocks: ib });
        projs.push(VerMorphism { src: sum.clone(), dst: part.clone(), blocks: pb });
    }
    (sum, incls, projs)
}

/// Direct sum of morphisms, block-diagonal in every type.
pub fn direct_sum_morphisms(p: u32, parts: &[&VerMorphism]) -> VerMorphism {
    let srcs: Vec<&VerObject> = parts.iter().map(|f| f.src.as_ref()).collect();
    let dsts: Vec<&VerObject> = parts.iter().map(|f| f.dst.as_ref()).collect();
    let src = VerObject::direct_sum(p, &srcs);
    let dst = VerObject::direct_sum(p, &dsts);
    let blocks = (0..p as usize - 1)
        .map(|k| {
            let bs: Vec<&Matrix> = parts.iter().map(|f| &f.blocks[k]).collect();
            Matrix::block_diag(p, &bs)
        })
        .collect();
    VerMorphism { src, dst, blocks }
}
