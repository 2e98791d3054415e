//! The ℤ-graded contragredient Lie algebra g(ρ, d) = n_− ⊕ X ⊕ n_+.
//!
//! The positive part is computed from the datum and the negative part,
//! independently, as the positive part of the dual datum. Brackets between
//! arbitrary degrees are then obtained by peeling one generator off the
//! left factor with the Jacobi identity.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::lie_objects::LieAlgebra;
use crate::verp::upstairs::{mul_swap, reorder3};
use crate::verp::{Obj, VerMorphism, VerObject};

use super::datum::{dual_datum, is_reduced, ContragredientDatum};
use super::engine::{positive_side, Side, DEFAULT_ENGINE_BUDGET};

/// Default truncation degree.
pub const DEFAULT_MAX_DEGREE: usize = 12;

/// Consistency checks gathered while computing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Checks {
    /// Multiplicities of g(ρ,d)_n and g(ρ^∨,d^∨)_{−n} agree, and so do
    /// those of g_n and g_{−n}.
    pub mirror: bool,
    /// The X-action and the lowering operators preserve the computed pieces.
    pub ideal: bool,
    /// Radical-method and kernel-method multiplicities agree.
    pub form_agreement: Option<bool>,
}

/// The contragredient algebra truncated at |degree| ≤ max_degree.
#[derive(Debug)]
pub struct GradedContragredient {
    datum: ContragredientDatum,
    dual: ContragredientDatum,
    max_degree: usize,
    pos: Side,
    neg: Side,
    pub checks: Checks,
    pub warnings: Vec<String>,
    cache: Mutex<HashMap<(i64, i64), Matrix>>,
}

/// Computes g(ρ, d) up to degree `max_degree` on both sides.
pub fn contragredient_compute(datum: &ContragredientDatum, max_degree: usize) -> Result<GradedContragredient> {
    contragredient_compute_with_budget(datum, max_degree, DEFAULT_ENGINE_BUDGET)
}

pub fn contragredient_compute_with_budget(
    datum: &ContragredientDatum,
    max_degree: usize,
    budget: usize,
) -> Result<GradedContragredient> {
    let single = datum.with_single_part();
    let dual = dual_datum(&single);
    let pos = positive_side(&single, max_degree, budget)?;
    let neg = positive_side(&dual, max_degree, budget)?;
    let mut warnings = Vec::new();
    if !is_reduced(datum) {
        warnings.push("datum is not reduced".to_string());
    }
    if !datum.has_known_torus() {
        warnings.push("torus outside the catalog: enough modules is not verified".to_string());
    }
    let mirror_side = positive_side(&dual_datum(&dual), max_degree, budget)?;
    let top = max_degree.min(pos.pieces.len().max(neg.pieces.len()) + 1);
    let mirror = (1..=top).all(|n| pos.height_mult(n) == mirror_side.height_mult(n))
        && (1..=max_degree).all(|n| pos.height_mult(n) == neg.height_mult(n));
    let g = GradedContragredient {
        datum: datum.clone(),
        dual,
        max_degree,
        pos,
        neg,
        checks: Checks { mirror, ideal: true, form_agreement: None },
        warnings,
        cache: Mutex::new(HashMap::new()),
    };
    Ok(g)
}

impl GradedContragredient {
    pub fn datum(&self) -> &ContragredientDatum {
        &self.datum
    }

    pub fn dual_datum(&self) -> &ContragredientDatum {
        &self.dual
    }

    pub fn p(&self) -> u32 {
        self.datum.p()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn positive(&self) -> &Side {
        &self.pos
    }

    pub fn negative(&self) -> &Side {
        &self.neg
    }

    /// Both sides reached a vanishing degree within the truncation.
    pub fn stabilized(&self) -> bool {
        self.pos.stabilized() && self.neg.stabilized()
    }

    /// Largest degree with a nonzero piece, once stabilized.
    pub fn top_degree(&self) -> Option<usize> {
        if !self.stabilized() {
            return None;
        }
        Some(self.pos.top_height().unwrap_or(0).max(self.neg.top_height().unwrap_or(0)))
    }

    /// Whether g_n is known (computed, or zero by stabilization).
    fn known(&self, n: i64) -> bool {
        let side = if n >= 0 { &self.pos } else { &self.neg };
        n.unsigned_abs() as usize <= self.max_degree || side.stabilized()
    }

    /// The piece g_n; g_0 = X.
    pub fn piece(&self, n: i64) -> Obj {
        if n == 0 {
            return self.datum.x().obj().clone();
        }
        let side = if n > 0 { &self.pos } else { &self.neg };
        side.piece(&[n.unsigned_abs() as usize]).map_or_else(|| VerObject::zero(self.p()), |q| q.obj.clone())
    }

    pub fn mult(&self, n: i64) -> Vec<usize> {
        self.piece(n).mult().to_vec()
    }

    pub(crate) fn dim(&self, n: i64) -> usize {
        self.piece(n).dim_upstairs()
    }

    /// Degrees −t..t with t the top degree, or the truncation if unstabilized.
    pub fn degree_range(&self) -> std::ops::RangeInclusive<i64> {
        let t = self.top_degree().unwrap_or(self.max_degree) as i64;
        -t..=t
    }

    /// Largest n such that g_n and g_{−n} are both known.
    pub fn degree_limit(&self) -> usize {
        self.top_degree().unwrap_or(self.max_degree)
    }

    /// Total upstairs dimension over the degree range.
    pub fn total_dim(&self) -> usize {
        self.degree_range().map(|n| self.dim(n)).sum()
    }

    fn side(&self, positive: bool) -> &Side {
        if positive {
            &self.pos
        } else {
            &self.neg
        }
    }

    /// Generator object of a side: V for the positive, V* for the negative.
    fn gen_dim(&self) -> usize {
        self.datum.v().dim_upstairs()
    }

    /// Section of the surjection V ⊗ g_{n−1} → g_n (V → g_1 for n = 1)
    /// on the given side, with the kernel inclusion of that surjection.
    pub(crate) fn section(&self, positive: bool, n: usize) -> Result<(Matrix, VerMorphism)> {
        let q = self.side(positive).piece(&[n]).expect("nonzero piece");
        let s = q.cores.right_inverse()?.lift();
        let (_, k) = q.cores.kernel();
        Ok((s, k))
    }

    /// The X-action on g_n.
    pub fn x_action(&self, n: i64) -> Matrix {
        if n == 0 {
            return self.datum.x().bracket_up().clone();
        }
        let side = self.side(n > 0);
        side.piece(&[n.unsigned_abs() as usize]).map_or_else(|| Matrix::zeros(self.p(), 0, 0), |q| q.act.clone())
    }

    /// Bracket of a generator of the given side with g_b, landing in
    /// g_{b±1}: for the positive side [v, z] with v ∈ V.
    fn generator_bracket(&self, positive: bool, b: i64) -> Result<Matrix> {
        let p = self.p();
        let sign = if positive { 1 } else { -1 };
        let nv = self.gen_dim();
        let target = b + sign;
        let (dt, db) = (self.dim(target), self.dim(b));
        if dt == 0 || db == 0 {
            return Ok(Matrix::zeros(p, dt, nv * db));
        }
        let own = self.side(positive);
        let other = self.side(!positive);
        let rel = b * sign;
        if rel >= 0 {
            return Ok(own.generator_bracket(0, &[rel as usize]).expect("nonzero target"));
        }
        if rel == -1 {
            // [v, y] = d(v ⊗ s(y)) with s a section of V* → g_{−1}.
            let (s, _) = self.section(!positive, 1)?;
            return Ok(own.parts[0].d.mul_id_kron(&s));
        }
        // [v, y] = −[y, v] ∘ c with [y, v] the lowering on the other side.
        let q = other.piece(&[(-rel) as usize]).expect("nonzero piece");
        Ok(mul_swap(&q.low[&0], nv, db).neg())
    }

    /// The bracket g_a ⊗ g_b → g_{a+b}, upstairs.
    pub fn bracket(&self, a: i64, b: i64) -> Result<Matrix> {
        if let Some(m) = self.cache.lock().expect("bracket cache").get(&(a, b)) {
            return Ok(m.clone());
        }
        let m = self.compute_bracket(a, b)?;
        self.cache.lock().expect("bracket cache").insert((a, b), m.clone());
        Ok(m)
    }

    fn compute_bracket(&self, a: i64, b: i64) -> Result<Matrix> {
        let p = self.p();
        for n in [a, b, a + b] {
            if !self.known(n) {
                return Err(Error::OutOfRange(format!("degree {n} lies beyond the truncation")));
            }
        }
        let (da, db, dab) = (self.dim(a), self.dim(b), self.dim(a + b));
        if da == 0 || db == 0 || dab == 0 {
            return Ok(Matrix::zeros(p, dab, da * db));
        }
        if a == 0 {
            return Ok(self.x_action(b));
        }
        if b == 0 {
            return Ok(mul_swap(&self.x_action(a), da, db).neg());
        }
        let positive = a > 0;
        let sign = if positive { 1 } else { -1 };
        if a.abs() == 1 {
            let (s, _) = self.section(positive, 1)?;
            return Ok(self.generator_bracket(positive, b)?.mul_kron_id(&s, db));
        }
        // [[v, x'], y] = [v, [x', y]] − [x', [v, y]] for x' ∈ g_{a∓1}.
        let a1 = a - sign;
        let nv = self.gen_dim();
        let da1 = self.dim(a1);
        let t1 = mul_id_kron_dim(&self.generator_bracket(positive, a1 + b)?, nv, &self.bracket(a1, b)?);
        let w = mul_id_kron_dim(&self.bracket(a1, b + sign)?, da1, &self.generator_bracket(positive, b)?);
        let t2 = reorder3(&w, [nv, da1, db], [1, 0, 2]);
        let g = t1.sub(&t2);
        let (s, k) = self.section(positive, a.unsigned_abs() as usize)?;
        let k_obj = k.src().clone();
        if !k_obj.is_zero() {
            let on_kernel = g.mul_kron_id(&k.lift(), db);
            let src = VerObject::tensor(&k_obj, &self.piece(b));
            if !VerMorphism::semisimplify(&on_kernel, &src, &self.piece(a + b)).is_zero() {
                return Err(Error::RecursionInconsistent(a));
            }
        }
        Ok(g.mul_kron_id(&s, db))
    }

    /// The bracket in Ver_p.
    pub fn bracket_ver(&self, a: i64, b: i64) -> Result<VerMorphism> {
        let m = self.bracket(a, b)?;
        let src = VerObject::tensor(&self.piece(a), &self.piece(b));
        Ok(VerMorphism::semisimplify(&m, &src, &self.piece(a + b)))
    }

    /// [x, y] for x ∈ g_m, y ∈ g_{−n} with m, n > 0.
    pub fn cross_bracket(&self, m: usize, n: usize) -> Result<Matrix> {
        self.bracket(m as i64, -(n as i64))
    }

    /// The pairing g_n ⊗ g_{−n} → X.
    pub fn pairing(&self, n: usize) -> Result<Matrix> {
        self.cross_bracket(n, n)
    }

    /// The lowering g_n ⊗ V* → g_{n−1} of the positive side, upstairs.
    pub fn lowering(&self, n: usize) -> Option<Matrix> {
        if n == 1 {
            return Some(self.datum.d().lift());
        }
        self.pos.piece(&[n]).map(|q| q.low[&0].clone())
    }

    /// The whole algebra ⊕_n g_n as one Lie algebra, once stabilized.
    pub fn assemble(&self) -> Result<Assembled> {
        let top = self.top_degree().ok_or_else(|| Error::OutOfRange("the algebra has not stabilized".into()))? as i64;
        let p = self.p();
        let degrees: Vec<i64> = (-top..=top).filter(|&n| self.dim(n) > 0).collect();
        let objs: Vec<Obj> = degrees.iter().map(|&n| self.piece(n)).collect();
        let refs: Vec<&VerObject> = objs.iter().map(|o| o.as_ref()).collect();
        let obj = VerObject::direct_sum(p, &refs);
        let dims: Vec<usize> = objs.iter().map(|o| o.dim_upstairs()).collect();
        let offs: Vec<usize> = dims.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect();
        let total: usize = dims.iter().sum();
        let mut bracket = Matrix::zeros(p, total, total * total);
        for (ia, &a) in degrees.iter().enumerate() {
            for (ib, &b) in degrees.iter().enumerate() {
                let Some(ic) = degrees.iter().position(|&c| c == a + b) else { continue };
                let m = self.bracket(a, b)?;
                for r in 0..dims[ic] {
                    for x in 0..dims[ia] {
                        for y in 0..dims[ib] {
                            let v = m.get(r, x * dims[ib] + y);
                            if v != 0 {
                                bracket.set(offs[ic] + r, (offs[ia] + x) * total + offs[ib] + y, v);
                            }
                        }
                    }
                }
            }
        }
        Ok(Assembled { alg: LieAlgebra::from_upstairs(obj, &bracket), degrees, offsets: offs, dims })
    }
}

/// `f · (I_n ⊗ d)`, allowing d with no rows.
fn mul_id_kron_dim(f: &Matrix, n: usize, d: &Matrix) -> Matrix {
    if d.rows() == 0 {
        return Matrix::zeros(f.p(), f.rows(), n * d.cols());
    }
    f.mul_id_kron(d)
}

/// The assembled algebra with the position of each degree.
#[derive(Clone, Debug)]
pub struct Assembled {
    pub alg: LieAlgebra,
    pub degrees: Vec<i64>,
    pub offsets: Vec<usize>,
    pub dims: Vec<usize>,
}

impl Assembled {
    /// Upstairs columns of the degree-n piece inside the assembled object.
    pub fn embedding(&self, n: i64) -> Option<Matrix> {
        let k = self.degrees.iter().position(|&d| d == n)?;
        let total: usize = self.dims.iter().sum();
        let p = self.alg.p();
        Some(Matrix::from_fn(p, total, self.dims[k], |r, c| u32::from(r == self.offsets[k] + c)))
    }
}

/// Multiplicities of g refined by the multidegrees of V = V_1 ⊕ … ⊕ V_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QGrading {
    pub rank: usize,
    /// g_α for α > 0, keyed by the coefficient vector of α.
    pub positive: BTreeMap<Vec<usize>, Vec<usize>>,
    /// g_{−α} for α > 0, keyed by the coefficient vector of α.
    pub negative: BTreeMap<Vec<usize>, Vec<usize>>,
    pub stabilized: bool,
}

impl QGrading {
    /// Multiplicities of g_n summed over all α of height |n|.
    pub fn height_mult(&self, n: i64) -> Vec<usize> {
        let table = if n >= 0 { &self.positive } else { &self.negative };
        let h = n.unsigned_abs() as usize;
        let mut out: Vec<usize> = Vec::new();
        for m in table.iter().filter(|(a, _)| a.iter().sum::<usize>() == h).map(|(_, m)| m) {
            if out.is_empty() {
                out = vec![0; m.len()];
            }
            for (a, b) in out.iter_mut().zip(m) {
                *a += b;
            }
        }
        out
    }
}

/// The Q-grading of g(ρ, d) with deg V_i = α_i for the parts of the datum,
/// both sides computed up to height `max_degree`.
pub fn q_grading(datum: &ContragredientDatum, max_degree: usize, budget: usize) -> Result<QGrading> {
    let pos = positive_side(datum, max_degree, budget)?;
    let neg = positive_side(&dual_datum(datum), max_degree, budget)?;
    let table = |s: &Side| s.pieces.iter().map(|(a, q)| (a.clone(), q.mult().to_vec())).collect();
    Ok(QGrading {
        rank: pos.rank(),
        positive: table(&pos),
        negative: table(&neg),
        stabilized: pos.stabilized() && neg.stabilized(),
    })
}
