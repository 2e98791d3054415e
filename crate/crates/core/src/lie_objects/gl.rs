//! The general and special Lie algebras gl(L) = L ⊗ L* and sl(L).

use super::algebra::LieAlgebra;
use super::form::InvariantForm;
use crate::error::Result;
use crate::ff_linalg::Matrix;
use crate::rep_alphap;
use crate::verp::upstairs::{apply2, mul_swap};
use crate::verp::{Obj, VerMorphism, VerObject};

/// Upstairs product of the associative algebra L ⊗ L*: id ⊗ ev ⊗ id,
/// that is E_ab · E_cd = δ_bc E_ad with E_ab = e_a ⊗ e_b*.
pub fn gl_product_upstairs(p: u32, n: usize) -> Matrix {
    let n2 = n * n;
    let mut m = Matrix::zeros(p, n2, n2 * n2);
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                m.set(a * n + d, (a * n + b) * n2 + b * n + d, 1);
            }
        }
    }
    m
}

/// Upstairs commutator bracket of gl(L).
pub fn gl_bracket_upstairs(p: u32, n: usize) -> Matrix {
    let m = gl_product_upstairs(p, n);
    m.sub(&mul_swap(&m, n * n, n * n))
}

/// gl(L) with underlying object L ⊗ L* (L* the dual realization).
pub fn gl(l: &Obj) -> LieAlgebra {
    let obj = VerObject::tensor(l, &l.dual());
    LieAlgebra::from_upstairs(obj, &gl_bracket_upstairs(l.p(), l.dim_upstairs()))
}

/// A Lie subalgebra given by an inclusion, with a chosen retraction.
#[derive(Clone, Debug)]
pub struct SubLie {
    pub alg: LieAlgebra,
    pub incl: VerMorphism,
    pub proj: VerMorphism,
}

/// Restricts a bracket along a monomorphism ι: the bracket π b (ι ⊗ ι),
/// with π a left inverse of ι. Returns `None` when b(ι ⊗ ι) leaves im ι.
pub fn restrict_bracket(big: &LieAlgebra, incl: &VerMorphism) -> Result<Option<SubLie>> {
    let proj = incl.left_inverse()?;
    let sub = incl.src().clone();
    let i_up = incl.lift();
    let restricted = apply2(big.bracket_up(), &i_up, &i_up);
    let sq = VerObject::tensor(&sub, &sub);
    let down = VerMorphism::semisimplify(&restricted, &sq, big.obj());
    let b_sub = proj.compose(&down)?;
    if incl.compose(&b_sub)? != down {
        return Ok(None);
    }
    let alg = LieAlgebra::new(sub, b_sub)?;
    Ok(Some(SubLie { alg, incl: incl.clone(), proj }))
}

/// sl(L): the kernel of ev_right on gl(L), with the restricted bracket.
pub fn sl(l: &Obj) -> SubLie {
    let g = gl(l);
    let ev = VerMorphism::semisimplify(&rep_alphap::ev_right(l.alpha()), g.obj(), &VerObject::unit(l.p()));
    let (_, incl) = ev.kernel();
    restrict_bracket(&g, &incl)
        .expect("kernel inclusion is mono")
        .expect("the kernel of the trace is closed under the commutator")
}

/// The categorical dimension of L: ev_right ∘ coev_left as a scalar.
pub fn categorical_dim(l: &Obj) -> u32 {
    let ev = rep_alphap::ev_right(l.alpha());
    let coev = rep_alphap::coev_left(l.alpha());
    ev.mul(&coev).get(0, 0)
}

/// The trace form B(x ⊗ y) = ev(x · y) on gl(L), where `·` is the
/// associative product: B(E_ab ⊗ E_cd) = δ_bc δ_ad.
pub fn trace_form(l: &Obj) -> InvariantForm {
    let g = gl(l);
    let n = l.dim_upstairs();
    let prod = gl_product_upstairs(l.p(), n);
    let ev = rep_alphap::ev_right(l.alpha());
    InvariantForm::from_upstairs(g, &ev.mul(&prod))
}
