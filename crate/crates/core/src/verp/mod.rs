//! The Verlinde category Ver_p as the semisimplification of Rep(α_p).

pub mod fusion;
pub mod morphism;
pub mod object;
pub mod upstairs;

pub use fusion::{format_signs, fusion_rule, fusion_upstairs, self_braiding_signs};
pub use morphism::{direct_sum_morphisms, direct_sum_with_maps, same_object, VerMorphism};
pub use object::{format_mult, Obj, ObjectSummary, VerObject};

use crate::rep_alphap::{self, swap_matrix};

/// Projects an upstairs object to Ver_p.
pub fn semisimplify_object(a: rep_alphap::AlphaObject) -> crate::Result<VerObject> {
    VerObject::from_alpha(a)
}

/// Projects an upstairs morphism between two realizations to Ver_p.
pub fn semisimplify_morphism(f: &crate::ff_linalg::Matrix, src: &Obj, dst: &Obj) -> VerMorphism {
    VerMorphism::semisimplify(f, src, dst)
}

/// The symmetry A⊗B → B⊗A between given tensor objects.
pub fn braiding(a: &Obj, b: &Obj) -> VerMorphism {
    let ab = VerObject::tensor(a, b);
    let ba = VerObject::tensor(b, a);
    VerMorphism::semisimplify(&swap_matrix(a.p(), a.dim_upstairs(), b.dim_upstairs()), &ab, &ba)
}

/// ev_right(A): A⊗A* → 𝟙 in Ver_p, with A* the dual realization.
pub fn ev_right(a: &Obj) -> VerMorphism {
    let ad = a.dual();
    let src = VerObject::tensor(a, &ad);
    VerMorphism::semisimplify(&rep_alphap::ev_right(a.alpha()), &src, &VerObject::unit(a.p()))
}

/// coev_left(A): 𝟙 → A⊗A* in Ver_p.
pub fn coev_left(a: &Obj) -> VerMorphism {
    let ad = a.dual();
    let dst = VerObject::tensor(a, &ad);
    VerMorphism::semisimplify(&rep_alphap::coev_left(a.alpha()), &VerObject::unit(a.p()), &dst)
}
