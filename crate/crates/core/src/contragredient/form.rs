//! The invariant form B on g(ρ, d) for symmetrizable data.
//!
//! B is built degree by degree from invariance: B_0 = K, B_1 is the
//! evaluation pairing of V with V*, and for x = [v, x'] ∈ g_n
//!
//!   B([v, x'], y) = B(v, [x', y]),
//!
//! which requires the right-hand side to vanish on the kernel of
//! V ⊗ g_{n−1} → g_n. The negative degrees are built the same way by
//! peeling a generator of V*, so symmetry is a genuine check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::lie_objects::InvariantForm;
use crate::verp::upstairs::mul_swap;
use crate::verp::{Obj, VerMorphism, VerObject};

use super::graded::GradedContragredient;

/// The pairings B_n: g_n ⊗ g_{−n} → 𝟙 for |n| within the computed range.
#[derive(Clone, Debug)]
pub struct GradedForm {
    p: u32,
    /// Upstairs 1 × (dim g_n · dim g_{−n}) matrices, keyed by n.
    blocks: BTreeMap<i64, Matrix>,
}

/// Outcome of the checks of the form on the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormReport {
    /// B_0 = K is symmetric, invariant and nondegenerate on X.
    pub restricts_to_k: bool,
    /// B = B ∘ c in every degree.
    pub symmetric: bool,
    /// B([x, y], z) = B(x, [y, z]) whenever all degrees are computed.
    pub invariant: bool,
    /// Every pairing g_n ⊗ g_{−n} → 𝟙 is nondegenerate.
    pub nondegenerate: bool,
}

impl FormReport {
    pub fn all(&self) -> bool {
        self.restricts_to_k && self.symmetric && self.invariant && self.nondegenerate
    }
}

impl GradedForm {
    /// Builds B from K on a computed algebra.
    pub fn new(g: &GradedContragredient, k: &InvariantForm) -> Result<Self> {
        let p = g.p();
        let datum = g.datum();
        let nd = datum.v_dual().dim_upstairs();
        let ev = crate::verp::ev_right(datum.v()).lift();
        let mut blocks = BTreeMap::new();
        blocks.insert(0, k.form().lift());
        let top = g.degree_limit() as i64;
        if g.dim(1) == 0 || g.dim(-1) == 0 {
            return Ok(GradedForm { p, blocks });
        }
        let (s_pos, _) = g.section(true, 1)?;
        let (s_neg, _) = g.section(false, 1)?;
        // V ⊗ g_{−1} → 𝟙 and V* ⊗ g_1 → 𝟙.
        let bv = ev.mul_id_kron(&s_neg);
        let bvd = mul_swap(&ev.mul_kron_id(&s_pos, nd), nd, g.dim(1));
        for n in 1..=top {
            let (dn, dm) = (g.dim(n), g.dim(-n));
            if dn == 0 || dm == 0 {
                break;
            }
            for (positive, gen) in [(true, &bv), (false, &bvd)] {
                let sign = if positive { 1 } else { -1 };
                let own = sign * n;
                let f = if n == 1 {
                    gen.mul_kron_id(&if positive { s_pos.clone() } else { s_neg.clone() }, g.dim(-own))
                } else {
                    let inner = g.bracket(own - sign, -own)?;
                    let lifted = gen.mul_id_kron(&inner);
                    let (s, k_incl) = g.section(positive, n as usize)?;
                    let k_obj = k_incl.src().clone();
                    if !k_obj.is_zero() {
                        let on_kernel = lifted.mul_kron_id(&k_incl.lift(), g.dim(-own));
                        let src = VerObject::tensor(&k_obj, &g.piece(-own));
                        if !VerMorphism::semisimplify(&on_kernel, &src, &VerObject::unit(p)).is_zero() {
                            return Err(Error::RecursionInconsistent(own));
                        }
                    }
                    lifted.mul_kron_id(&s, g.dim(-own))
                };
                blocks.insert(own, f);
            }
        }
        Ok(GradedForm { p, blocks })
    }

    /// B_n: g_n ⊗ g_{−n} → 𝟙, upstairs.
    pub fn block(&self, n: i64) -> Option<&Matrix> {
        self.blocks.get(&n)
    }

    /// Degrees on which B is known.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.blocks.keys().copied()
    }

    /// The radical of B_n, as the multiplicities of g_n modulo it.
    pub fn quotient_mult(&self, g: &GradedContragredient, n: i64) -> Option<Vec<usize>> {
        let f = self.blocks.get(&n)?;
        let (a, b) = (g.piece(n), g.piece(-n));
        let mate = VerMorphism::semisimplify(&f.mate_last(b.dim_upstairs()), &a, &b.dual());
        let (img, _, _) = mate.image();
        Some(img.mult().to_vec())
    }

    /// Checks the properties of B on the computed truncation.
    pub fn check(&self, g: &GradedContragredient, k: &InvariantForm) -> Result<FormReport> {
        let p = self.p;
        let unit = VerObject::unit(p);
        let zero = |m: &Matrix, src: &Obj| VerMorphism::semisimplify(m, src, &unit).is_zero();
        let restricts_to_k = k.is_symmetric() && k.is_invariant() && k.is_nondegenerate();
        let mut symmetric = true;
        let mut nondegenerate = true;
        for (&n, f) in &self.blocks {
            let (a, b) = (g.piece(n), g.piece(-n));
            if n > 0 {
                let swapped = mul_swap(&self.blocks[&(-n)], b.dim_upstairs(), a.dim_upstairs());
                symmetric &= zero(&f.sub(&swapped), &VerObject::tensor(&a, &b));
            }
            let mate = VerMorphism::semisimplify(&f.mate_last(b.dim_upstairs()), &a, &b.dual());
            nondegenerate &= mate.is_iso();
        }
        let mut invariant = true;
        let known: Vec<i64> = self.blocks.keys().copied().collect();
        for &a in &known {
            for &b in &known {
                let c = -a - b;
                if !self.blocks.contains_key(&c) || !self.blocks.contains_key(&(a + b)) {
                    continue;
                }
                let (da, db, dc) = (g.dim(a), g.dim(b), g.dim(c));
                if da * db * dc == 0 {
                    continue;
                }
                // B([x, y] ⊗ z) and B(x ⊗ [y, z]) on g_a ⊗ g_b ⊗ g_c.
                let lhs = self.blocks[&(a + b)].mul_kron_id(&g.bracket(a, b)?, dc);
                let rhs = self.blocks[&a].mul_id_kron(&g.bracket(b, c)?);
                let src = VerObject::tensor(&VerObject::tensor(&g.piece(a), &g.piece(b)), &g.piece(c));
                if !zero(&lhs.sub(&rhs), &src) {
                    invariant = false;
                }
            }
        }
        Ok(FormReport { restricts_to_k, symmetric, invariant, nondegenerate })
    }

    /// The form on the assembled algebra, once g has stabilized.
    pub fn on_assembled(&self, g: &GradedContragredient) -> Result<InvariantForm> {
        let asm = g.assemble()?;
        let total: usize = asm.dims.iter().sum();
        let mut m = Matrix::zeros(self.p, 1, total * total);
        for (ia, &a) in asm.degrees.iter().enumerate() {
            let Some(ib) = asm.degrees.iter().position(|&b| b == -a) else { continue };
            let f = &self.blocks[&a];
            for x in 0..asm.dims[ia] {
                for y in 0..asm.dims[ib] {
                    let v = f.get(0, x * asm.dims[ib] + y);
                    if v != 0 {
                        m.set(0, (asm.offsets[ia] + x) * total + asm.offsets[ib] + y, v);
                    }
                }
            }
        }
        Ok(InvariantForm::from_upstairs(asm.alg, &m))
    }
}
