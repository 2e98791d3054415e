//! Semidirect products and the compatibility criteria for maps and
//! modules out of them.

use std::collections::HashMap;

use super::algebra::{on_pair, vanishes, LieAlgebra};
use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::verp::upstairs::{apply2, reorder3, summands};
use crate::verp::{direct_sum_with_maps, same_object, Obj, VerMorphism, VerObject};

/// The semidirect product f ⋊_ρ x with its structure maps.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub alg: LieAlgebra,
    pub incl_f: VerMorphism,
    pub incl_x: VerMorphism,
    pub proj_f: VerMorphism,
    pub proj_x: VerMorphism,
}

/// Checks that ρ: x ⊗ f → f acts by derivations of the bracket of f:
/// ρ(id ⊗ b_f) = b_f(ρ ⊗ id) + b_f(id ⊗ ρ)(c_{x,f} ⊗ id).
pub fn is_action_by_derivations(f: &LieAlgebra, x: &LieAlgebra, rho: &VerMorphism) -> bool {
    let r = rho.lift();
    let bf = f.bracket_up();
    let xs = summands(x.obj());
    let fs = summands(f.obj());
    let mut xf: HashMap<(usize, usize), Matrix> = HashMap::new();
    let mut ff: HashMap<(usize, usize), Matrix> = HashMap::new();
    for (i, a) in xs.iter().enumerate() {
        for (j, b) in fs.iter().enumerate() {
            for (k, c) in fs.iter().enumerate() {
                let dims = [a.ty, b.ty, c.ty];
                let bc = ff.entry((j, k)).or_insert_with(|| on_pair(bf, b, c)).clone();
                let lhs = apply2(&r, &a.basis, &bc);
                let ab = xf.entry((i, j)).or_insert_with(|| on_pair(&r, a, b)).clone();
                let ac = xf.entry((i, k)).or_insert_with(|| on_pair(&r, a, c)).clone();
                let t1 = apply2(bf, &ab, &c.basis);
                let t2 = reorder3(&apply2(bf, &b.basis, &ac), dims, [1, 0, 2]);
                if !vanishes(&lhs.sub(&t1).sub(&t2), &dims, f.obj()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Upstairs bracket of f ⊕ x assembled from the four blocks
/// b_f, ρ, −ρ c_{f,x} and b_x.
fn semidirect_bracket_upstairs(bf: &Matrix, bx: &Matrix, rho: &Matrix, nf: usize, nx: usize) -> Matrix {
    let p = bf.p();
    let n = nf + nx;
    let mut b = Matrix::zeros(p, n, n * n);
    for u in 0..n {
        for v in 0..n {
            let col = u * n + v;
            match (u < nf, v < nf) {
                (true, true) => {
                    for r in 0..nf {
                        b.set(r, col, bf.get(r, u * nf + v));
                    }
                }
                (false, true) => {
                    for r in 0..nf {
                        b.set(r, col, rho.get(r, (u - nf) * nf + v));
                    }
                }
                (true, false) => {
                    for r in 0..nf {
                        let val = rho.get(r, (v - nf) * nf + u);
                        b.set(r, col, crate::ff_linalg::fp::neg(val, p));
                    }
                }
                (false, false) => {
                    for r in 0..nx {
                        b.set(nf + r, col, bx.get(r, (u - nf) * nx + (v - nf)));
                    }
                }
            }
        }
    }
    b
}

/// The semidirect product f ⋊_ρ x on the object f ⊕ x.
pub fn semidirect(f: &LieAlgebra, x: &LieAlgebra, rho: &VerMorphism) -> Result<Semidirect> {
    let src = VerObject::tensor(x.obj(), f.obj());
    if !same_object(rho.src(), &src) || !same_object(rho.dst(), f.obj()) {
        return Err(Error::ShapeMismatch("ρ must map x ⊗ f to f".into()));
    }
    if !is_action_by_derivations(f, x, rho) {
        return Err(Error::NotDerivation);
    }
    let p = f.p();
    let (sum, incls, projs) = direct_sum_with_maps(p, &[f.obj().clone(), x.obj().clone()]);
    let (nf, nx) = (f.obj().dim_upstairs(), x.obj().dim_upstairs());
    let b = semidirect_bracket_upstairs(f.bracket_up(), x.bracket_up(), &rho.lift(), nf, nx);
    let alg = LieAlgebra::from_upstairs(sum, &b);
    Ok(Semidirect {
        alg,
        incl_f: incls[0].clone(),
        incl_x: incls[1].clone(),
        proj_f: projs[0].clone(),
        proj_x: projs[1].clone(),
    })
}

/// True when φ: a → b is a Lie algebra map: φ b_a = b_b (φ ⊗ φ).
pub fn is_lie_map(a: &LieAlgebra, b: &LieAlgebra, phi: &VerMorphism) -> bool {
    let f = phi.lift();
    let parts = summands(a.obj());
    let ba = a.bracket_up();
    for x in &parts {
        for y in &parts {
            let lhs = f.mul(&on_pair(ba, x, y));
            let fx = f.mul(&x.basis);
            let fy = f.mul(&y.basis);
            let rhs = apply2(b.bracket_up(), &fx, &fy);
            if !vanishes(&lhs.sub(&rhs), &[x.ty, y.ty], b.obj()) {
                return false;
            }
        }
    }
    true
}

/// The criterion for φ_f ⊔ φ_x: f ⋊ x → h to be a Lie map:
/// φ_f ∘ ρ = b_h (φ_x ⊗ φ_f) on x ⊗ W.
///
/// Here ρ: x ⊗ W → W is the action on a generating object W of f (for
/// f = FLie(W) it suffices to check on W), and φ_f is restricted to W.
pub fn check_derivation_compat(h: &LieAlgebra, phi_f: &VerMorphism, phi_x: &VerMorphism, rho: &VerMorphism) -> bool {
    let r = rho.lift();
    let ff = phi_f.lift();
    let fx = phi_x.lift();
    let xs = summands(phi_x.src());
    let ws = summands(phi_f.src());
    for a in &xs {
        for w in &ws {
            let lhs = ff.mul(&on_pair(&r, a, w));
            let rhs = apply2(h.bracket_up(), &fx.mul(&a.basis), &ff.mul(&w.basis));
            if !vanishes(&lhs.sub(&rhs), &[a.ty, w.ty], h.obj()) {
                return false;
            }
        }
    }
    true
}

/// The criterion for η_f ⊔ η_x to be an (f ⋊ x)-module structure:
/// η_f(ρ ⊗ id) = η_x(id ⊗ η_f) − η_f(id ⊗ η_x)(c_{x,f} ⊗ id) on x ⊗ W ⊗ V.
pub fn check_module_compat(eta_f: &VerMorphism, eta_x: &VerMorphism, rho: &VerMorphism, x: &Obj, w: &Obj) -> bool {
    let ef = eta_f.lift();
    let ex = eta_x.lift();
    let r = rho.lift();
    let v = eta_f.dst().clone();
    let xs = summands(x);
    let wsum = summands(w);
    let vs = summands(&v);
    for a in &xs {
        for b in &wsum {
            let ab = on_pair(&r, a, b);
            for c in &vs {
                let dims = [a.ty, b.ty, c.ty];
                let lhs = apply2(&ef, &ab, &c.basis);
                let t1 = apply2(&ex, &a.basis, &on_pair(&ef, b, c));
                let t2 = reorder3(&apply2(&ef, &b.basis, &on_pair(&ex, a, c)), dims, [1, 0, 2]);
                if !vanishes(&lhs.sub(&t1).add(&t2), &dims, &v) {
                    return false;
                }
            }
        }
    }
    true
}
