//! Invariant bilinear forms on Lie algebras.

use std::collections::HashMap;

use super::algebra::{on_pair, vanishes, LieAlgebra};
use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::verp::upstairs::{apply2, mul_swap, summands};
use crate::verp::{same_object, VerMorphism, VerObject};

/// A bilinear form obj ⊗ obj → 𝟙 on a Lie algebra.
#[derive(Clone, Debug)]
pub struct InvariantForm {
    alg: LieAlgebra,
    form: VerMorphism,
}

impl InvariantForm {
    /// Wraps a form; its source must be the tensor square of the algebra.
    pub fn new(alg: LieAlgebra, form: VerMorphism) -> Result<Self> {
        let unit = VerObject::unit(alg.p());
        if !same_object(form.src(), alg.square()) || !same_object(form.dst(), &unit) {
            return Err(Error::ShapeMismatch("form must map obj ⊗ obj to the unit".into()));
        }
        let form = form.retarget(alg.square(), &unit)?;
        Ok(InvariantForm { alg, form })
    }

    /// Projects an upstairs form (a 1 × n² matrix) down to Ver_p.
    pub fn from_upstairs(alg: LieAlgebra, form: &Matrix) -> Self {
        let unit = VerObject::unit(alg.p());
        let f = VerMorphism::semisimplify(form, alg.square(), &unit);
        InvariantForm { alg, form: f }
    }

    pub fn alg(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn form(&self) -> &VerMorphism {
        &self.form
    }

    /// B = B ∘ c modulo negligibles.
    pub fn is_symmetric(&self) -> bool {
        let f = self.form.lift();
        let parts = summands(self.alg.obj());
        let unit = VerObject::unit(self.alg.p());
        for (i, x) in parts.iter().enumerate() {
            for y in &parts[i..] {
                let d = on_pair(&f, x, y).sub(&mul_swap(&on_pair(&f, y, x), x.ty, y.ty));
                if !vanishes(&d, &[x.ty, y.ty], &unit) {
                    return false;
                }
            }
        }
        true
    }

    /// B(b ⊗ id) = B(id ⊗ b) modulo negligibles.
    pub fn is_invariant(&self) -> bool {
        let f = self.form.lift();
        let b = self.alg.bracket_up();
        let parts = summands(self.alg.obj());
        let unit = VerObject::unit(self.alg.p());
        let mut pairs: HashMap<(usize, usize), Matrix> = HashMap::new();
        for i in 0..parts.len() {
            for j in 0..parts.len() {
                let xy = pairs.entry((i, j)).or_insert_with(|| on_pair(b, &parts[i], &parts[j])).clone();
                for k in 0..parts.len() {
                    let yz = pairs.entry((j, k)).or_insert_with(|| on_pair(b, &parts[j], &parts[k])).clone();
                    let lhs = apply2(&f, &xy, &parts[k].basis);
                    let rhs = apply2(&f, &parts[i].basis, &yz);
                    if !vanishes(&lhs.sub(&rhs), &[parts[i].ty, parts[j].ty, parts[k].ty], &unit) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The mate obj → obj*, projected to Ver_p.
    pub fn mate(&self) -> VerMorphism {
        let obj = self.alg.obj();
        let n = obj.dim_upstairs();
        let m = self.form.lift().mate_last(n);
        VerMorphism::semisimplify(&m, obj, &obj.dual())
    }

    /// Nondegenerate when the mate is an isomorphism.
    pub fn is_nondegenerate(&self) -> bool {
        self.mate().is_iso()
    }
}
