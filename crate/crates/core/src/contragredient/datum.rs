//! Contragredient data (X, ρ, d) and their basic operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::lie_objects::algebra::{on_pair, vanishes};
use crate::lie_objects::module::dual_action_upstairs;
use crate::lie_objects::{check_lie_axioms, check_module, LieAlgebra, LieModule};
use crate::verp::upstairs::{apply2, reorder3, summands};
use crate::verp::{direct_sum_with_maps, same_object, Obj, VerMorphism, VerObject};

/// Which catalog family a datum belongs to, with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "torus", content = "params", rename_all = "snake_case")]
pub enum TorusKind {
    One { k: usize, a: i64, b: i64 },
    Sl2 { k: usize, atilde: i64, btilde: i64 },
    Gl2 { k: usize, a: i64, atilde: i64, b: i64, btilde: i64 },
    GlChain { simples: Vec<usize>, special: bool },
    Cartan { matrix: Vec<Vec<i64>>, odd: Vec<bool> },
    Custom,
}

impl TorusKind {
    /// Short name used in reports.
    pub fn name(&self) -> &'static str {
        match self {
            TorusKind::One { .. } => "one",
            TorusKind::Sl2 { .. } => "sl2",
            TorusKind::Gl2 { .. } => "gl2",
            TorusKind::GlChain { .. } => "gl_chain",
            TorusKind::Cartan { .. } => "cartan",
            TorusKind::Custom => "custom",
        }
    }
}

/// A contragredient datum: a Lie algebra X, an X-module V with action
/// ρ: X ⊗ V → V, and an X-module map d: V ⊗ V* → X.
///
/// V is the direct sum of `parts` (upstairs block-diagonal in that order);
/// the parts are the summands used for the multidegree grading.
#[derive(Clone, Debug)]
pub struct ContragredientDatum {
    x: LieAlgebra,
    parts: Vec<Obj>,
    v: Obj,
    v_dual: Obj,
    rho: VerMorphism,
    d: VerMorphism,
    kind: TorusKind,
}

impl ContragredientDatum {
    /// Builds and validates a datum: ρ must be a module structure and d
    /// must satisfy the compatibility condition.
    pub fn new(x: LieAlgebra, parts: Vec<Obj>, rho: VerMorphism, d: VerMorphism, kind: TorusKind) -> Result<Self> {
        let datum = Self::new_unchecked(x, parts, rho, d, kind)?;
        if !datum.is_module() {
            return Err(Error::InvalidInput("ρ is not a module structure".into()));
        }
        if !check_datum(&datum) {
            return Err(Error::InvalidScalars("d is not a map of X-modules".into()));
        }
        Ok(datum)
    }

    /// Builds a datum checking only shapes.
    pub fn new_unchecked(
        x: LieAlgebra,
        parts: Vec<Obj>,
        rho: VerMorphism,
        d: VerMorphism,
        kind: TorusKind,
    ) -> Result<Self> {
        let p = x.p();
        if parts.is_empty() {
            return Err(Error::InvalidInput("V needs at least one summand".into()));
        }
        let refs: Vec<&VerObject> = parts.iter().map(|o| o.as_ref()).collect();
        let v = if parts.len() == 1 { parts[0].clone() } else { VerObject::direct_sum(p, &refs) };
        let v_dual = v.dual();
        let xv = VerObject::tensor(x.obj(), &v);
        let vv = VerObject::tensor(&v, &v_dual);
        if !same_object(rho.src(), &xv) || !same_object(rho.dst(), &v) {
            return Err(Error::ShapeMismatch("ρ must map X ⊗ V to V".into()));
        }
        if !same_object(d.src(), &vv) || !same_object(d.dst(), x.obj()) {
            return Err(Error::ShapeMismatch("d must map V ⊗ V* to X".into()));
        }
        let rho = rho.retarget(&xv, &v)?;
        let d = d.retarget(&vv, x.obj())?;
        Ok(ContragredientDatum { x, parts, v, v_dual, rho, d, kind })
    }

    pub fn p(&self) -> u32 {
        self.x.p()
    }

    pub fn x(&self) -> &LieAlgebra {
        &self.x
    }

    pub fn v(&self) -> &Obj {
        &self.v
    }

    pub fn v_dual(&self) -> &Obj {
        &self.v_dual
    }

    pub fn parts(&self) -> &[Obj] {
        &self.parts
    }

    pub fn rho(&self) -> &VerMorphism {
        &self.rho
    }

    pub fn d(&self) -> &VerMorphism {
        &self.d
    }

    pub fn kind(&self) -> &TorusKind {
        &self.kind
    }

    /// The X-module V.
    pub fn module(&self) -> LieModule {
        LieModule::new(self.x.clone(), self.v.clone(), self.rho.clone()).expect("shapes checked at construction")
    }

    /// True when X is a Lie algebra and ρ a module structure.
    pub fn is_module(&self) -> bool {
        check_module(&self.module())
    }

    /// True when X passes the Lie algebra axioms.
    pub fn x_is_lie(&self) -> bool {
        check_lie_axioms(&self.x)
    }

    /// Upstairs dual action ρ^∨ on V*.
    pub fn rho_dual_up(&self) -> Matrix {
        dual_action_upstairs(&self.rho.lift(), self.v.dim_upstairs())
    }

    /// Whether the torus family is one for which the theory's hypotheses
    /// (enough modules) are known to hold.
    pub fn has_known_torus(&self) -> bool {
        !matches!(self.kind, TorusKind::Custom)
    }

    /// The same datum with V replaced by one summand, for a single part.
    pub fn with_single_part(&self) -> ContragredientDatum {
        let mut out = self.clone();
        out.parts = vec![self.v.clone()];
        out
    }

    /// The same datum with V replaced by its canonical form.
    pub fn canonicalized(&self) -> (ContragredientDatum, VerMorphism) {
        let p = self.p();
        let vc = VerObject::canonical(p, self.v.mult());
        let blocks: Vec<Matrix> = self.v.mult().iter().map(|&m| Matrix::identity(p, m)).collect();
        let phi = VerMorphism::new(self.v.clone(), vc.clone(), blocks.clone()).expect("identity blocks");
        let phi_inv = VerMorphism::new(vc.clone(), self.v.clone(), blocks).expect("identity blocks");
        let (phi_up, phi_inv_up) = (phi.lift(), phi_inv.lift());
        let rho = phi_up.mul(&self.rho.lift()).mul_id_kron(&phi_inv_up);
        // V_c* → V* is the transpose of φ.
        let d = self.d.lift().mul_kron_id(&phi_inv_up, vc.dim_upstairs()).mul_id_kron(&phi_up.transpose());
        let vcd = vc.dual();
        let rho = VerMorphism::semisimplify(&rho, &VerObject::tensor(self.x.obj(), &vc), &vc);
        let d = VerMorphism::semisimplify(&d, &VerObject::tensor(&vc, &vcd), self.x.obj());
        let out = ContragredientDatum {
            x: self.x.clone(),
            parts: vec![vc.clone()],
            v: vc,
            v_dual: vcd,
            rho,
            d,
            kind: self.kind.clone(),
        };
        (out, phi)
    }

    /// Injections and projections of the parts of V.
    pub fn part_maps(&self) -> (Vec<VerMorphism>, Vec<VerMorphism>) {
        if self.parts.len() == 1 {
            let id = VerMorphism::identity(&self.v);
            return (vec![id.clone()], vec![id]);
        }
        let (sum, incls, projs) = direct_sum_with_maps(self.p(), &self.parts);
        let incls = incls.into_iter().map(|f| f.retarget(f.src(), &self.v).expect("same sum")).collect();
        let projs = projs.into_iter().map(|f| f.retarget(&self.v, f.dst()).expect("same sum")).collect();
        let _ = sum;
        (incls, projs)
    }
}

/// Evaluates the compatibility condition
/// b_X(id ⊗ d) = d(ρ ⊗ id) + d(id ⊗ ρ^∨)(c_{X,V} ⊗ id)
/// on X ⊗ V ⊗ V* modulo negligibles, summand triple by summand triple.
pub fn check_datum(datum: &ContragredientDatum) -> bool {
    let bx = datum.x.bracket_up();
    let rho = datum.rho.lift();
    let rho_dual = datum.rho_dual_up();
    let d = datum.d.lift();
    let xs = summands(datum.x.obj());
    let vs = summands(&datum.v);
    let fs = summands(&datum.v_dual);
    for a in &xs {
        for b in &vs {
            let ab = on_pair(&rho, a, b);
            for c in &fs {
                let dims = [a.ty, b.ty, c.ty];
                let lhs = apply2(bx, &a.basis, &on_pair(&d, b, c));
                let t1 = apply2(&d, &ab, &c.basis);
                let t2 = reorder3(&apply2(&d, &b.basis, &on_pair(&rho_dual, a, c)), dims, [1, 0, 2]);
                if !vanishes(&lhs.sub(&t1).sub(&t2), &dims, datum.x.obj()) {
                    return false;
                }
            }
        }
    }
    true
}

/// A datum is reduced when no nonzero subobject S ⊆ V has d(S ⊗ V*) = 0
/// and no nonzero T ⊆ V* has d(V ⊗ T) = 0; equivalently both mates of d,
/// V → X ⊗ V and V* → X ⊗ V*, are monomorphisms.
pub fn is_reduced(datum: &ContragredientDatum) -> bool {
    let (n, nd) = (datum.v.dim_upstairs(), datum.v_dual.dim_upstairs());
    let d = datum.d.lift();
    let x = datum.x.obj();
    let left = VerMorphism::semisimplify(&d.mate_last(nd), &datum.v, &VerObject::tensor(x, &datum.v));
    let swapped = crate::verp::upstairs::mul_swap(&d, nd, n);
    let right = VerMorphism::semisimplify(&swapped.mate_last(n), &datum.v_dual, &VerObject::tensor(x, &datum.v_dual));
    left.is_mono() && right.is_mono()
}

/// The dual datum (ρ^∨, d^∨) on V*, with d^∨(φ ⊗ v) = −d(v ⊗ φ) and V**
/// identified with V through the identity of the upstairs space.
pub fn dual_datum(datum: &ContragredientDatum) -> ContragredientDatum {
    let (n, nd) = (datum.v.dim_upstairs(), datum.v_dual.dim_upstairs());
    let parts: Vec<Obj> = datum.parts.iter().map(|o| o.dual()).collect();
    let refs: Vec<&VerObject> = parts.iter().map(|o| o.as_ref()).collect();
    let v = if parts.len() == 1 { parts[0].clone() } else { VerObject::direct_sum(datum.p(), &refs) };
    let v_dual = v.dual();
    let rho = VerMorphism::semisimplify(&datum.rho_dual_up(), &VerObject::tensor(datum.x.obj(), &v), &v);
    let d_up = crate::verp::upstairs::mul_swap(&datum.d.lift(), nd, n).neg();
    let d = VerMorphism::semisimplify(&d_up, &VerObject::tensor(&v, &v_dual), datum.x.obj());
    ContragredientDatum { x: datum.x.clone(), parts, v, v_dual, rho, d, kind: datum.kind.clone() }
}
