//! Modules over operadic Lie algebras and dual actions.

use std::collections::HashMap;

use super::algebra::{on_pair, vanishes, LieAlgebra};
use crate::error::{Error, Result};
use crate::ff_linalg::{fp, Matrix};
use crate::verp::upstairs::{apply2, reorder3, summands};
use crate::verp::{same_object, Obj, VerMorphism, VerObject};

/// A module over a Lie algebra: an action alg ⊗ obj → obj.
#[derive(Clone, Debug)]
pub struct LieModule {
    alg: LieAlgebra,
    obj: Obj,
    action: VerMorphism,
}

impl LieModule {
    /// Wraps an action; its source must be alg.obj ⊗ obj.
    pub fn new(alg: LieAlgebra, obj: Obj, action: VerMorphism) -> Result<Self> {
        let src = VerObject::tensor(alg.obj(), &obj);
        if !same_object(action.src(), &src) || !same_object(action.dst(), &obj) {
            return Err(Error::ShapeMismatch("action must map alg ⊗ obj to obj".into()));
        }
        let action = action.retarget(&src, &obj)?;
        Ok(LieModule { alg, obj, action })
    }

    /// The trivial module structure on `obj`.
    pub fn trivial(alg: &LieAlgebra, obj: &Obj) -> Self {
        let src = VerObject::tensor(alg.obj(), obj);
        LieModule { alg: alg.clone(), obj: obj.clone(), action: VerMorphism::zero(&src, obj) }
    }

    /// The adjoint module.
    pub fn adjoint(alg: &LieAlgebra) -> Self {
        LieModule { alg: alg.clone(), obj: alg.obj().clone(), action: alg.bracket().clone() }
    }

    pub fn alg(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn obj(&self) -> &Obj {
        &self.obj
    }

    pub fn action(&self) -> &VerMorphism {
        &self.action
    }
}

/// Checks the module axiom η(b ⊗ id) = η(id ⊗ η)((id − c) ⊗ id) modulo
/// negligibles, summand triple by summand triple.
pub fn check_module(m: &LieModule) -> bool {
    let b = m.alg.bracket_up();
    let a = m.action.lift();
    let gs = summands(m.alg.obj());
    let ms = summands(&m.obj);
    let mut inner: HashMap<(usize, usize), Matrix> = HashMap::new();
    for (i, x) in gs.iter().enumerate() {
        for (j, y) in gs.iter().enumerate() {
            let xy = on_pair(b, x, y);
            for (k, z) in ms.iter().enumerate() {
                let dims = [x.ty, y.ty, z.ty];
                let lhs = apply2(&a, &xy, &z.basis);
                let yz = inner.entry((j, k)).or_insert_with(|| on_pair(&a, y, z)).clone();
                let xz = inner.entry((i, k)).or_insert_with(|| on_pair(&a, x, z)).clone();
                let r1 = apply2(&a, &x.basis, &yz);
                let r2 = reorder3(&apply2(&a, &y.basis, &xz), dims, [1, 0, 2]);
                if !vanishes(&lhs.sub(&r1).add(&r2), &dims, &m.obj) {
                    return false;
                }
            }
        }
    }
    true
}

/// Upstairs dual action on the dual realization.
///
/// This is the composite −(ev ⊗ id)(id ⊗ η ⊗ id)(id ⊗ coev) c_{g,V*}: the
/// element x ⊗ φ is sent to −Σ_b φ(η(x ⊗ e_b)) e_b*, so the entry for the
/// input x ⊗ e_c* and output e_a* is −η(e_c-coefficient of x ⊗ e_a).
pub fn dual_action_upstairs(action: &Matrix, n: usize) -> Matrix {
    let p = action.p();
    let xdim = action.cols() / n.max(1);
    let mut out = Matrix::zeros(p, n, action.cols());
    for x in 0..xdim {
        for a in 0..n {
            for c in 0..n {
                let v = action.get(c, x * n + a);
                if v != 0 {
                    out.set(a, x * n + c, fp::neg(v, p));
                }
            }
        }
    }
    out
}

/// The dual module on obj*, realized on the dual space.
pub fn dual_action(m: &LieModule) -> LieModule {
    let dual = m.obj.dual();
    let up = dual_action_upstairs(&m.action.lift(), m.obj.dim_upstairs());
    let src = VerObject::tensor(m.alg.obj(), &dual);
    let action = VerMorphism::semisimplify(&up, &src, &dual);
    LieModule { alg: m.alg.clone(), obj: dual, action }
}

/// Upstairs action on a tensor product, η_A ⊗ id + (id ⊗ η_B)(c_{g,A} ⊗ id).
pub fn tensor_action_upstairs(eta_a: &Matrix, eta_b: &Matrix, gdim: usize, adim: usize, bdim: usize) -> Matrix {
    let p = eta_a.p();
    let first = eta_a.kron(&Matrix::identity(p, bdim));
    // (id_A ⊗ η_B) on A ⊗ g ⊗ B, then precompose with the swap of g and A.
    let second = Matrix::identity(p, adim).kron(eta_b);
    let perm: Vec<usize> = (0..gdim)
        .flat_map(|x| (0..adim).flat_map(move |a| (0..bdim).map(move |b| (a * gdim + x) * bdim + b)))
        .collect();
    first.add(&second.select_cols(&perm))
}
