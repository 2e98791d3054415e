//! The maximal ideal computed inside the free Lie algebra FLie(V).
//!
//! This is the direct method: the lowering operator FLie_n ⊗ V* → FLie_{n−1}
//! is built recursively, m_n is the kernel of the mate of the lowering
//! followed by the projection modulo m_{n−1}, and g_n = FLie_n / m_n. For
//! symmetrizable data the form B̃ on FLie(V) ⊗ FLie(V*) gives a second
//! computation of m as its radical.

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::free_lie::GradedFreeLie;
use crate::verp::upstairs::{mul_swap, reorder3};
use crate::verp::{Obj, VerMorphism, VerObject};

use super::datum::{dual_datum, ContragredientDatum};

/// The lowering operators on FLie(V) for one datum.
#[derive(Debug)]
pub struct FlieLowering {
    pub datum: ContragredientDatum,
    pub flie: GradedFreeLie,
    /// low[n − 1]: FLie_n ⊗ V* → FLie_{n−1} (FLie_0 = X), upstairs.
    low: Vec<Matrix>,
    /// X-action on FLie_n, upstairs, index n − 1.
    acts: Vec<Matrix>,
}

impl FlieLowering {
    /// Starts from a datum; V is replaced by its canonical form.
    pub fn new(datum: &ContragredientDatum, budget: usize) -> Self {
        let (dc, _) = datum.canonicalized();
        let flie = GradedFreeLie::with_budget(dc.v(), budget);
        let low = vec![dc.d().lift()];
        let acts = vec![dc.rho().lift()];
        FlieLowering { datum: dc, flie, low, acts }
    }

    fn dim(&self, n: usize) -> usize {
        if n == 0 {
            self.datum.x().obj().dim_upstairs()
        } else {
            self.flie.computed_piece(n).expect("computed").obj.dim_upstairs()
        }
    }

    /// FLie_n as an object (X for n = 0).
    pub fn piece(&mut self, n: usize) -> Result<Obj> {
        if n == 0 {
            return Ok(self.datum.x().obj().clone());
        }
        Ok(self.flie.piece(n)?.obj.clone())
    }

    /// The X-action on FLie_n, upstairs.
    pub fn action(&mut self, n: usize) -> Result<Matrix> {
        while self.acts.len() < n {
            let k = self.acts.len() + 1;
            let x = self.datum.x().obj().clone();
            let a = self.flie.action_on_piece(&x, self.datum.rho(), k)?;
            self.acts.push(a.lift());
        }
        Ok(self.acts[n - 1].clone())
    }

    /// The lowering FLie_n ⊗ V* → FLie_{n−1}; d itself for n = 1.
    ///
    /// For ξ = [v, ξ'] the recursion is
    /// [[v, ξ'], f] = [v, [ξ', f]] + ρ(d(v ⊗ f) ⊗ ξ').
    pub fn lowering(&mut self, n: usize) -> Result<Matrix> {
        if n == 0 {
            return Err(Error::OutOfRange("lowering starts in degree 1".into()));
        }
        while self.low.len() < n {
            let k = self.low.len() + 1;
            self.flie.extend_to(k)?;
            let m = self.next_lowering(k)?;
            self.low.push(m);
        }
        Ok(self.low[n - 1].clone())
    }

    fn next_lowering(&mut self, n: usize) -> Result<Matrix> {
        let p = self.datum.p();
        let nv = self.datum.v().dim_upstairs();
        let x_dim = self.dim(0);
        let prev_low = self.lowering(n - 1)?;
        let d_prev = self.dim(n - 1);
        let d_n = self.dim(n);
        if d_n == 0 || d_prev == 0 {
            return Ok(Matrix::zeros(p, d_prev, d_n * nv));
        }
        // [v, z] for z ∈ FLie_{n−2} (X when n = 2).
        let vz = if n == 2 {
            mul_swap(&self.datum.rho().lift(), nv, x_dim).neg()
        } else {
            self.flie.bracket(1, n - 2)?.lift()
        };
        let t1 = if prev_low.rows() == 0 {
            Matrix::zeros(p, d_prev, nv * prev_low.cols())
        } else {
            vz.mul_id_kron(&prev_low)
        };
        let act = self.action(n - 1)?;
        let w = act.mul_kron_id(&self.datum.d().lift(), d_prev);
        let t2 = reorder3(&w, [nv, d_prev, nv], [0, 2, 1]);
        let g = t1.add(&t2);
        let piece = self.flie.computed_piece(n).expect("extended").clone();
        let cores = piece.cores.expect("degree ≥ 2");
        let section = piece.section.expect("degree ≥ 2").lift();
        let (kobj, ker) = cores.kernel();
        if !kobj.is_zero() {
            let on_kernel = g.mul_kron_id(&ker.lift(), nv);
            let vd = self.datum.v_dual().clone();
            let src = VerObject::tensor(&kobj, &vd);
            let target = self.piece(n - 1)?;
            if !VerMorphism::semisimplify(&on_kernel, &src, &target).is_zero() {
                return Err(Error::RecursionInconsistent(n as i64));
            }
        }
        Ok(g.mul_kron_id(&section, nv))
    }
}

/// Result of the kernel method on FLie(V).
#[derive(Clone, Debug)]
pub struct FlieQuotient {
    /// Multiplicities of FLie_n for n = 1, 2, …
    pub flie: Vec<Vec<usize>>,
    /// Multiplicities of m_n.
    pub ideal: Vec<Vec<usize>>,
    /// Multiplicities of g_n = FLie_n / m_n.
    pub quotient: Vec<Vec<usize>>,
    /// The X-action preserved every m_n.
    pub ideal_stable: bool,
    /// First degree with g_n = 0, if reached.
    pub zero_degree: Option<usize>,
    /// First degree skipped because FLie_n exceeded the budget.
    pub budget_degree: Option<usize>,
}

/// One step of the kernel method: given the projection π_{n−1} of FLie_{n−1}
/// onto g_{n−1}, returns (m_n inclusion, π_n).
pub fn maximal_ideal_step(
    lowering: &mut FlieLowering,
    n: usize,
    prev_proj: &VerMorphism,
) -> Result<(VerMorphism, VerMorphism)> {
    let nv = lowering.datum.v().dim_upstairs();
    let low = lowering.lowering(n)?;
    let fn_obj = lowering.piece(n)?;
    let g_prev = prev_proj.dst().clone();
    let lowered = prev_proj.lift().mul(&low);
    let mate =
        VerMorphism::semisimplify(&lowered.mate_last(nv), &fn_obj, &VerObject::tensor(&g_prev, lowering.datum.v()));
    let (_, m_incl) = mate.kernel();
    let (_, _, cores) = mate.image();
    Ok((m_incl, cores))
}

/// Runs the kernel method up to degree `max_degree`, continuing two
/// degrees past the first vanishing piece. Stops early, recording the
/// degree, once the budget would be exceeded.
pub fn flie_quotient(datum: &ContragredientDatum, max_degree: usize, budget: usize) -> Result<FlieQuotient> {
    let mut lowering = FlieLowering::new(datum, budget);
    let x = lowering.datum.x().obj().clone();
    let mut proj = VerMorphism::identity(&x);
    let mut out = FlieQuotient {
        flie: Vec::new(),
        ideal: Vec::new(),
        quotient: Vec::new(),
        ideal_stable: true,
        zero_degree: None,
        budget_degree: None,
    };
    for n in 1..=max_degree {
        if out.zero_degree.is_some_and(|z| n > z + 2) {
            break;
        }
        if n > 1 && lowering.flie.check_budget(n).is_err() {
            if out.zero_degree.is_none() {
                out.budget_degree = Some(n);
            }
            break;
        }
        let (m_incl, cores) = maximal_ideal_step(&mut lowering, n, &proj)?;
        let fobj = lowering.piece(n)?;
        // The X-action preserves m_n: π_n ρ_n (id ⊗ ι_m) = 0.
        let act = lowering.action(n)?;
        let m_obj = m_incl.src().clone();
        if !m_obj.is_zero() {
            let moved = cores.lift().mul(&act).mul_id_kron(&m_incl.lift());
            let src = VerObject::tensor(&x, &m_obj);
            if !VerMorphism::semisimplify(&moved, &src, cores.dst()).is_zero() {
                out.ideal_stable = false;
            }
        }
        out.flie.push(fobj.mult().to_vec());
        out.ideal.push(m_obj.mult().to_vec());
        out.quotient.push(cores.dst().mult().to_vec());
        if cores.dst().is_zero() && out.zero_degree.is_none() {
            out.zero_degree = Some(n);
        }
        proj = cores;
    }
    Ok(out)
}

/// The radical method: the form B̃_n: FLie(V)_n ⊗ FLie(V*)_n → 𝟙 with
/// B̃_1 = ev and B̃_n(x ⊗ [f, y']) = B̃_{n−1}([x, f] ⊗ y'); returns the
/// multiplicities of FLie_n modulo the left radical for n = 1, …
pub fn radical_quotient(datum: &ContragredientDatum, max_degree: usize, budget: usize) -> Result<Vec<Vec<usize>>> {
    let p = datum.p();
    let mut plus = FlieLowering::new(datum, budget);
    let (dual_c, psi) = dual_datum(plus.datum()).canonicalized();
    let minus_flie = GradedFreeLie::with_budget(dual_c.v(), budget);
    let mut minus = minus_flie;
    // ψ⁻¹: V' → V*, with V' the canonical form of V*.
    let psi_inv = psi.inverse()?.lift();
    let ev = crate::rep_alphap::ev_right(plus.datum.v().alpha());
    let mut form = ev.mul_id_kron(&psi_inv);
    let unit = VerObject::unit(p);
    let mut out = Vec::new();
    for n in 1..=max_degree {
        if n > 1 {
            if plus.flie.check_budget(n).is_err() || minus.check_budget(n).is_err() {
                break;
            }
            // FLie is generated in degree 1, so a zero piece ends both sides.
            if plus.piece(n)?.is_zero() || minus.piece(n)?.obj.is_zero() {
                out.push(vec![0; plus.datum.v().mult().len()]);
                break;
            }
            let low = plus.lowering(n)?.mul_id_kron(&psi_inv);
            let d_minus_prev = minus.piece(n - 1)?.obj.dim_upstairs();
            let g = form.mul_kron_id(&low, d_minus_prev);
            let piece = minus.piece(n)?.clone();
            let cores = piece.cores.expect("degree ≥ 2");
            let (kobj, ker) = cores.kernel();
            let fn_obj = plus.piece(n)?;
            if !kobj.is_zero() {
                let on_kernel = g.mul_id_kron(&ker.lift());
                let src = VerObject::tensor(&fn_obj, &kobj);
                if !VerMorphism::semisimplify(&on_kernel, &src, &unit).is_zero() {
                    return Err(Error::RecursionInconsistent(n as i64));
                }
            }
            form = g.mul_id_kron(&piece.section.expect("degree ≥ 2").lift());
        }
        let fn_obj = plus.piece(n)?;
        let minus_obj = minus.piece(n)?.obj.clone();
        let mate = VerMorphism::semisimplify(&form.mate_last(minus_obj.dim_upstairs()), &fn_obj, &minus_obj.dual());
        let (_, _, cores) = mate.image();
        out.push(cores.dst().mult().to_vec());
    }
    Ok(out)
}

impl FlieLowering {
    pub fn datum(&self) -> &ContragredientDatum {
        &self.datum
    }
}
