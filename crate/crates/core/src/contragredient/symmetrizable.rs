//! Symmetrizable data: a module with a nondegenerate invariant form on X,
//! from which the map d is derived.

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::lie_objects::{InvariantForm, LieAlgebra};
use crate::verp::{Obj, VerMorphism, VerObject};

use super::datum::{ContragredientDatum, TorusKind};

/// X, an X-module (V, ρ) and a symmetric nondegenerate invariant form K.
#[derive(Clone, Debug)]
pub struct SymmetrizableDatum {
    pub x: LieAlgebra,
    pub parts: Vec<Obj>,
    pub rho: VerMorphism,
    pub k: InvariantForm,
    pub kind: TorusKind,
}

impl SymmetrizableDatum {
    /// Checks that K is a symmetric, invariant, nondegenerate form on X.
    pub fn new(x: LieAlgebra, parts: Vec<Obj>, rho: VerMorphism, k: InvariantForm, kind: TorusKind) -> Result<Self> {
        if !k.is_nondegenerate() {
            return Err(Error::SingularK);
        }
        if !k.is_symmetric() || !k.is_invariant() {
            return Err(Error::InvalidInput("K must be symmetric and invariant".into()));
        }
        Ok(SymmetrizableDatum { x, parts, rho, k, kind })
    }

    /// The V object, the direct sum of the parts.
    pub fn v(&self) -> Obj {
        let refs: Vec<&VerObject> = self.parts.iter().map(|o| o.as_ref()).collect();
        if self.parts.len() == 1 {
            self.parts[0].clone()
        } else {
            VerObject::direct_sum(self.x.p(), &refs)
        }
    }

    /// The contragredient datum (ρ, d_{ρ,K}).
    pub fn datum(&self) -> Result<ContragredientDatum> {
        let d = derive_d(&self.x, &self.v(), &self.rho, &self.k)?;
        ContragredientDatum::new(self.x.clone(), self.parts.clone(), self.rho.clone(), d, self.kind.clone())
    }
}

/// The unique d: V ⊗ V* → X with K(y ⊗ d(v ⊗ φ)) = φ(ρ(y ⊗ v)).
///
/// With K♭: X → X* the mate of K and Φ: V ⊗ V* → X* the mate of
/// ev(ρ ⊗ id), this is d = K♭⁻¹ ∘ Φ, solved type by type in Ver_p.
pub fn derive_d(x: &LieAlgebra, v: &Obj, rho: &VerMorphism, k: &InvariantForm) -> Result<VerMorphism> {
    let p = x.p();
    let (nx, nv) = (x.obj().dim_upstairs(), v.dim_upstairs());
    let kflat = k.mate();
    let kinv = kflat.inverse().map_err(|_| Error::SingularK)?;
    let r = rho.lift();
    // Φ[y, v·n + φ] = coefficient of e_φ in ρ(y ⊗ v).
    let phi = Matrix::from_fn(p, nx, nv * nv, |y, col| r.get(col % nv, y * nv + col / nv));
    let vv = VerObject::tensor(v, &v.dual());
    let phi = VerMorphism::semisimplify(&phi, &vv, &x.obj().dual());
    kinv.compose(&phi)
}
