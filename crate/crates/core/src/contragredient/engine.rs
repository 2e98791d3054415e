//! Degree-by-degree computation of the positive part of g(ρ, d).
//!
//! V = V_1 ⊕ … ⊕ V_r is graded by multidegrees α with deg V_i = α_i. The
//! piece g_α is the quotient of S_α = ⊕_i V_i ⊗ g_{α−α_i} by the kernel of
//!
//!   Ψ_α: S_α → T_α = ⊕_j g_{α−α_j} ⊗ V_j,
//!
//! the mate of the bracket with V_j*. Since the maximal ideal consists of
//! the elements killed by repeated lowering, g_α is the image of Ψ_α. The
//! lowering of v ⊗ y ∈ V_i ⊗ g_β by f ∈ V_j* is
//!
//!   [[v, y], f] = [v, [y, f]] + δ_ij [[v, f], y],
//!
//! with [v, f] = d(v ⊗ f) ∈ X acting on y. For height one Ψ is the mate of
//! d_ii: V_i → X ⊗ V_i.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::lie_objects::module::tensor_action_upstairs;
use crate::verp::upstairs::{mul_swap, reorder3};
use crate::verp::{Obj, VerMorphism, VerObject};

use super::datum::ContragredientDatum;

/// Default cap on the upstairs dimension of any intermediate object.
pub const DEFAULT_ENGINE_BUDGET: usize = 20_000;

/// A summand V_i of V with its restricted structure maps.
#[derive(Clone, Debug)]
pub struct Part {
    pub obj: Obj,
    /// ρ_i: X ⊗ V_i → V_i, upstairs.
    pub rho: Matrix,
    /// d_ii: V_i ⊗ V_i* → X, upstairs.
    pub d: Matrix,
}

/// One nonzero piece g_α.
#[derive(Clone, Debug)]
pub struct QPiece {
    pub alpha: Vec<usize>,
    pub obj: Obj,
    /// Indices i with g_{α−α_i} nonzero, in the order of the summands of S_α.
    pub sources: Vec<usize>,
    /// The surjection S_α → g_α in Ver_p.
    pub cores: VerMorphism,
    /// cores restricted to V_i ⊗ g_{α−α_i} (V_i at height one), upstairs.
    pub cores_part: BTreeMap<usize, Matrix>,
    /// Lowering g_α ⊗ V_j* → g_{α−α_j}, upstairs, for each j in `sources`.
    pub low: BTreeMap<usize, Matrix>,
    /// X-action X ⊗ g_α → g_α, upstairs.
    pub act: Matrix,
}

impl QPiece {
    pub fn height(&self) -> usize {
        self.alpha.iter().sum()
    }

    pub fn mult(&self) -> &[usize] {
        self.obj.mult()
    }
}

/// The positive part of g(ρ, d) up to some height.
#[derive(Clone, Debug)]
pub struct Side {
    pub p: u32,
    pub x_obj: Obj,
    pub x_bracket: Matrix,
    pub parts: Vec<Part>,
    pub pieces: BTreeMap<Vec<usize>, QPiece>,
    pub max_height: usize,
    /// Smallest height at which every piece vanishes, if reached.
    pub zero_height: Option<usize>,
}

impl Side {
    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn stabilized(&self) -> bool {
        self.zero_height.is_some()
    }

    /// Largest height with a nonzero piece, once stabilized.
    pub fn top_height(&self) -> Option<usize> {
        self.zero_height.map(|h| h - 1)
    }

    pub fn piece(&self, alpha: &[usize]) -> Option<&QPiece> {
        self.pieces.get(alpha)
    }

    /// Multiplicities summed over all multidegrees of the given height.
    pub fn height_mult(&self, h: usize) -> Vec<usize> {
        let mut m = vec![0; self.p as usize - 1];
        for piece in self.pieces.values().filter(|q| q.height() == h) {
            for (a, b) in m.iter_mut().zip(piece.mult()) {
                *a += b;
            }
        }
        m
    }

    fn dim_of(&self, alpha: &[usize]) -> usize {
        if alpha.iter().all(|&a| a == 0) {
            return self.x_obj.dim_upstairs();
        }
        self.pieces.get(alpha).map_or(0, |q| q.obj.dim_upstairs())
    }

    fn act_of(&self, alpha: &[usize]) -> Option<&Matrix> {
        if alpha.iter().all(|&a| a == 0) {
            Some(&self.x_bracket)
        } else {
            self.pieces.get(alpha).map(|q| &q.act)
        }
    }

    /// [v, z] for v ∈ V_i and z ∈ g_γ, landing in g_{γ+α_i}; `None` when
    /// the target vanishes.
    pub fn generator_bracket(&self, i: usize, gamma: &[usize]) -> Option<Matrix> {
        let target = add_unit(gamma, i);
        let tp = self.pieces.get(&target)?;
        if gamma.iter().all(|&a| a == 0) {
            // [v, x] = −π ρ_i(x ⊗ v).
            let part = &self.parts[i];
            let pr = tp.cores_part[&i].mul(&part.rho);
            return Some(mul_swap(&pr, part.obj.dim_upstairs(), self.x_obj.dim_upstairs()).neg());
        }
        self.pieces.get(gamma)?;
        tp.cores_part.get(&i).cloned()
    }
}

fn add_unit(alpha: &[usize], i: usize) -> Vec<usize> {
    let mut out = alpha.to_vec();
    out[i] += 1;
    out
}

fn sub_unit(alpha: &[usize], i: usize) -> Option<Vec<usize>> {
    if alpha[i] == 0 {
        return None;
    }
    let mut out = alpha.to_vec();
    out[i] -= 1;
    Some(out)
}

/// Restricts ρ and d to the parts of V, checking that the decomposition is
/// X-stable and that d has no components between different parts.
pub fn prepare_parts(datum: &ContragredientDatum) -> Result<Vec<Part>> {
    let (incls, projs) = datum.part_maps();
    let x = datum.x().obj();
    let rho = datum.rho().lift();
    let d = datum.d().lift();
    let nd = datum.v_dual().dim_upstairs();
    let mut parts = Vec::new();
    for (i, (inc, pr)) in incls.iter().zip(&projs).enumerate() {
        let obj = inc.src().clone();
        let (iu, pu) = (inc.lift(), pr.lift());
        let rho_i = pu.mul(&rho).mul_id_kron(&iu);
        let src = VerObject::tensor(x, &obj);
        let lhs = VerMorphism::semisimplify(&iu.mul(&rho_i), &src, datum.v());
        let rhs = VerMorphism::semisimplify(&rho.mul_id_kron(&iu), &src, datum.v());
        if lhs != rhs {
            return Err(Error::DecompositionNotStable(format!("summand {} is not an X-submodule", i + 1)));
        }
        let half = d.mul_kron_id(&iu, nd);
        for (j, pj) in projs.iter().enumerate() {
            let dij = half.mul_id_kron(&pj.lift().transpose());
            let src = VerObject::tensor(&obj, &pj.dst().dual());
            if i != j && !VerMorphism::semisimplify(&dij, &src, x).is_zero() {
                return Err(Error::DecompositionNotStable(format!(
                    "d pairs summand {} with the dual of summand {}",
                    i + 1,
                    j + 1
                )));
            }
            if i == j {
                parts.push(Part { obj: obj.clone(), rho: rho_i.clone(), d: dij });
            }
        }
    }
    Ok(parts)
}

/// Computes the positive part of g(ρ, d) graded by the parts of V, up to
/// `max_height` or until a whole height vanishes.
pub fn positive_side(datum: &ContragredientDatum, max_height: usize, budget: usize) -> Result<Side> {
    let parts = prepare_parts(datum)?;
    let x_obj = datum.x().obj().clone();
    let mut side = Side {
        p: datum.p(),
        x_bracket: datum.x().bracket_up().clone(),
        x_obj,
        parts,
        pieces: BTreeMap::new(),
        max_height,
        zero_height: None,
    };
    let r = side.rank();
    let mut frontier: Vec<Vec<usize>> = vec![vec![0; r]];
    for h in 1..=max_height {
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                let alpha = add_unit(beta, i);
                if !candidates.contains(&alpha) {
                    candidates.push(alpha);
                }
            }
        }
        candidates.sort();
        let mut next = Vec::new();
        for alpha in candidates {
            if let Some(piece) = compute_piece(&side, &alpha, budget)? {
                side.pieces.insert(alpha.clone(), piece);
                next.push(alpha);
            }
        }
        if next.is_empty() {
            side.zero_height = Some(h);
            break;
        }
        frontier = next;
    }
    Ok(side)
}

fn compute_piece(side: &Side, alpha: &[usize], budget: usize) -> Result<Option<QPiece>> {
    let p = side.p;
    let height: usize = alpha.iter().sum();
    let sources: Vec<usize> = (0..side.rank())
        .filter(|&i| match sub_unit(alpha, i) {
            Some(b) => b.iter().all(|&x| x == 0) || side.pieces.contains_key(&b),
            None => false,
        })
        .collect();
    if sources.is_empty() {
        return Ok(None);
    }
    let x_dim = side.x_obj.dim_upstairs();
    // Source and target summands.
    let mut s_objs = Vec::new();
    let mut t_objs = Vec::new();
    for &i in &sources {
        let beta = sub_unit(alpha, i).expect("source index");
        let vi = &side.parts[i].obj;
        if height == 1 {
            s_objs.push(vi.clone());
            t_objs.push(VerObject::tensor(&side.x_obj, vi));
        } else {
            let gb = &side.pieces[&beta].obj;
            s_objs.push(VerObject::tensor(vi, gb));
            t_objs.push(VerObject::tensor(gb, vi));
        }
    }
    let s_dim: usize = s_objs.iter().map(|o| o.dim_upstairs()).sum();
    let t_dim: usize = t_objs.iter().map(|o| o.dim_upstairs()).sum();
    if s_dim.max(t_dim) > budget {
        return Err(Error::BudgetExceeded { needed: s_dim.max(t_dim), budget });
    }
    let mut psi = Matrix::zeros(p, t_dim, s_dim);
    let mut col = 0;
    for (si, &i) in sources.iter().enumerate() {
        let beta = sub_unit(alpha, i).expect("source index");
        let mut row = 0;
        for (ti, &j) in sources.iter().enumerate() {
            let block = if height == 1 {
                // Only i = j occurs at height one.
                side.parts[i].d.mate_last(side.parts[i].obj.dim_upstairs())
            } else {
                lowering_block(side, i, &beta, j)?.mate_last(side.parts[j].obj.dim_upstairs())
            };
            assert_eq!(block.shape(), (t_objs[ti].dim_upstairs(), s_objs[si].dim_upstairs()));
            psi.paste(row, col, &block);
            row += t_objs[ti].dim_upstairs();
        }
        col += s_objs[si].dim_upstairs();
    }
    let s_refs: Vec<&VerObject> = s_objs.iter().map(|o| o.as_ref()).collect();
    let t_refs: Vec<&VerObject> = t_objs.iter().map(|o| o.as_ref()).collect();
    let s_obj = if s_objs.len() == 1 { s_objs[0].clone() } else { VerObject::direct_sum(p, &s_refs) };
    let t_obj = if t_objs.len() == 1 { t_objs[0].clone() } else { VerObject::direct_sum(p, &t_refs) };
    let psi_v = VerMorphism::semisimplify(&psi, &s_obj, &t_obj);
    let (obj, incl, cores) = psi_v.image();
    if obj.is_zero() {
        return Ok(None);
    }
    let cores_up = cores.lift();
    let incl_up = incl.lift();
    let mut cores_part = BTreeMap::new();
    let mut low = BTreeMap::new();
    let (mut c0, mut r0) = (0, 0);
    for (k, &i) in sources.iter().enumerate() {
        let (sd, td) = (s_objs[k].dim_upstairs(), t_objs[k].dim_upstairs());
        let cols: Vec<usize> = (c0..c0 + sd).collect();
        cores_part.insert(i, cores_up.select_cols(&cols));
        let rows: Vec<usize> = (r0..r0 + td).collect();
        low.insert(i, incl_up.select_rows(&rows).unmate_last(side.parts[i].obj.dim_upstairs()));
        c0 += sd;
        r0 += td;
    }
    // X-action on T_α, restricted to the image.
    let mut acts = Vec::new();
    for &j in &sources {
        let beta = sub_unit(alpha, j).expect("source index");
        let part = &side.parts[j];
        let act_b = side.act_of(&beta).expect("nonzero lower piece");
        acts.push(tensor_action_upstairs(act_b, &part.rho, x_dim, side.dim_of(&beta), part.obj.dim_upstairs()));
    }
    let rho_t = block_diag_actions(p, &acts, x_dim, &t_objs);
    let retraction = incl.left_inverse()?.lift();
    let moved = rho_t.mul_id_kron(&incl_up);
    let act = retraction.mul(&moved);
    let xg = VerObject::tensor(&side.x_obj, &obj);
    if VerMorphism::semisimplify(&incl_up.mul(&act), &xg, &t_obj) != VerMorphism::semisimplify(&moved, &xg, &t_obj) {
        return Err(Error::ImageEscapesPiece(format!("X-action on degree {alpha:?}")));
    }
    Ok(Some(QPiece { alpha: alpha.to_vec(), obj, sources, cores, cores_part, low, act }))
}

/// The map V_i ⊗ g_β ⊗ V_j* → g_{β+α_i−α_j}, v ⊗ y ⊗ f ↦ [[v, y], f].
fn lowering_block(side: &Side, i: usize, beta: &[usize], j: usize) -> Result<Matrix> {
    let p = side.p;
    let vi = side.parts[i].obj.dim_upstairs();
    let vj = side.parts[j].obj.dim_upstairs();
    let gb = side.dim_of(beta);
    let target = sub_unit(&add_unit(beta, i), j).expect("j is a source");
    let mut out = Matrix::zeros(p, side.dim_of(&target), vi * gb * vj);
    // [v, [y, f]].
    if let Some(gamma) = sub_unit(beta, j) {
        let piece = &side.pieces[beta];
        let inner_nonzero = gamma.iter().all(|&a| a == 0) || side.pieces.contains_key(&gamma);
        if inner_nonzero {
            if let Some(outer) = side.generator_bracket(i, &gamma) {
                out = out.add(&outer.mul_id_kron(&piece.low[&j]));
            }
        }
    }
    // [[v, f], y] = ρ_β(d(v ⊗ f) ⊗ y), only when i = j.
    if i == j {
        let act = side.act_of(beta).expect("nonzero piece");
        let w = act.mul_kron_id(&side.parts[i].d, gb);
        out = out.add(&reorder3(&w, [vi, gb, vj], [0, 2, 1]));
    }
    Ok(out)
}

/// Block-diagonal assembly of actions X ⊗ T_k → T_k into X ⊗ (⊕T_k) → ⊕T_k.
fn block_diag_actions(p: u32, acts: &[Matrix], x_dim: usize, objs: &[Obj]) -> Matrix {
    let dims: Vec<usize> = objs.iter().map(|o| o.dim_upstairs()).collect();
    let total: usize = dims.iter().sum();
    let mut out = Matrix::zeros(p, total, x_dim * total);
    let mut off = 0;
    for (act, &d) in acts.iter().zip(&dims) {
        for x in 0..x_dim {
            for a in 0..d {
                for b in 0..d {
                    let v = act.get(b, x * d + a);
                    if v != 0 {
                        out.set(off + b, x * total + off + a, v);
                    }
                }
            }
        }
        off += d;
    }
    out
}
