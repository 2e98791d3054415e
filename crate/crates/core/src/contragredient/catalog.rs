//! Catalog of contragredient data: rank one over 𝟙, over sl(L_2) and over
//! gl(L_2), the chain data realizing gl(L) and sl(L), and classical data
//! from generalized Cartan matrices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::ff_linalg::{fp, Matrix};
use crate::lie_objects::gl::{gl_bracket_upstairs, gl_product_upstairs};
use crate::lie_objects::{gl, restrict_bracket, sl, InvariantForm, LieAlgebra};
use crate::rep_alphap;
use crate::verp::upstairs::apply2;
use crate::verp::{Obj, VerMorphism, VerObject};

use super::datum::{ContragredientDatum, TorusKind};
use super::symmetrizable::{derive_d, SymmetrizableDatum};

fn check_k(p: u32, k: usize) -> Result<()> {
    fp::check_prime(p)?;
    if k == 0 || k >= p as usize {
        return Err(Error::OutOfRange(format!("L{k} is not a simple object for p = {p}")));
    }
    Ok(())
}

/// Natural action of gl(L) = L ⊗ L* on L: E_ab ⊗ e_c ↦ δ_bc e_a.
fn natural_action(p: u32, n: usize) -> Matrix {
    let mut m = Matrix::zeros(p, n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            m.set(a, (a * n + b) * n + b, 1);
        }
    }
    m
}

/// Rank one over the torus 𝟙: ρ = a·id on L_k and d = b·ev.
pub fn datum_over_one(p: u32, k: usize, a: i64, b: i64) -> Result<ContragredientDatum> {
    check_k(p, k)?;
    let unit = VerObject::unit(p);
    let x = LieAlgebra::abelian(&unit);
    let v = VerObject::simple(p, k);
    let rho_up = Matrix::identity(p, k).scale(fp::from_i64(a, p));
    let rho = VerMorphism::semisimplify(&rho_up, &VerObject::tensor(&unit, &v), &v);
    let d_up = rep_alphap::ev_right(v.alpha()).scale(fp::from_i64(b, p));
    let d = VerMorphism::semisimplify(&d_up, &VerObject::tensor(&v, &v.dual()), &unit);
    ContragredientDatum::new(x, vec![v], rho, d, TorusKind::One { k, a, b })
}

/// The data shared by the sl(L_2) and gl(L_2) families on V = L_k: the
/// normalized Lie map sl(L_2) → gl(L_k), the resulting action, and the
/// moment map d_sl derived from the trace form of L_2.
struct Sl2Pieces {
    sl: crate::lie_objects::SubLie,
    /// Upstairs action sl(L_2) ⊗ L_k → L_k of the normalized Lie map.
    rho: Matrix,
    /// Upstairs d_sl: L_k ⊗ L_k* → sl(L_2).
    d: Matrix,
}

fn sl2_pieces(p: u32, k: usize) -> Result<Sl2Pieces> {
    check_k(p, k)?;
    if k == 1 || k == p as usize - 1 {
        return Err(Error::InvalidScalars(format!("sl(L2) has no nonzero action on L{k}")));
    }
    let l2 = VerObject::simple(p, 2);
    let s = sl(&l2);
    let lk = VerObject::simple(p, k);
    let glk = gl(&lk);
    // The unique, up to scalar, map L_3 → gl(L_k).
    let mut blocks: Vec<Matrix> =
        (1..p as usize).map(|i| Matrix::zeros(p, glk.obj().mult_of(i), s.alg.obj().mult_of(i))).collect();
    if blocks[2].shape() != (1, 1) {
        return Err(Error::InvalidScalars(format!("L3 does not occur once in gl(L{k})")));
    }
    blocks[2].set(0, 0, 1);
    let psi = VerMorphism::new(s.alg.obj().clone(), glk.obj().clone(), blocks)?;
    let psi_up = psi.lift();
    // b_gl(ψ ⊗ ψ) = μ · ψ b_sl; the Lie map is μ⁻¹ ψ.
    let lhs = VerMorphism::semisimplify(&apply2(glk.bracket_up(), &psi_up, &psi_up), s.alg.square(), glk.obj());
    let rhs = psi.compose(s.alg.bracket())?;
    let mu = proportionality(&lhs, &rhs)
        .ok_or_else(|| Error::InvalidScalars("no Lie map sl(L2) → gl(Lk) through L3".into()))?;
    let phi_up = psi_up.scale(fp::inv(mu, p));
    let rho = natural_action(p, k).mul_kron_id(&phi_up, k);
    let rho_v = VerMorphism::semisimplify(&rho, &VerObject::tensor(s.alg.obj(), &lk), &lk);
    let l2_trace = gl_trace_form_up(p, 2);
    let i_up = s.incl.lift();
    let k_sl = InvariantForm::from_upstairs(s.alg.clone(), &apply2(&l2_trace, &i_up, &i_up));
    let d = derive_d(&s.alg, &lk, &rho_v, &k_sl)?.lift();
    Ok(Sl2Pieces { sl: s, rho, d })
}

/// Upstairs trace form of gl(L) for dim L = n.
fn gl_trace_form_up(p: u32, n: usize) -> Matrix {
    let ev = Matrix::from_fn(p, 1, n * n, |_, j| u32::from(j / n == j % n));
    ev.mul(&gl_product_upstairs(p, n))
}

/// The scalar μ with f = μ g, when f and g are proportional with g ≠ 0.
fn proportionality(f: &VerMorphism, g: &VerMorphism) -> Option<u32> {
    let p = f.p();
    let mut mu = None;
    for (fb, gb) in f.blocks().iter().zip(g.blocks()) {
        for (&x, &y) in fb.data().iter().zip(gb.data()) {
            if y != 0 {
                let m = fp::mul(x, fp::inv(y, p), p);
                if m == 0 || mu.is_some_and(|old| old != m) {
                    return None;
                }
                mu = Some(m);
            } else if x != 0 {
                return None;
            }
        }
    }
    mu
}

fn normalized_atilde(p: u32, atilde: i64) -> Result<u32> {
    match fp::from_i64(atilde, p) {
        0 => Ok(0),
        1 => Ok(1),
        _ => Err(Error::InvalidScalars("ã must be 0 or 1".into())),
    }
}

/// Rank one over sl(L_2) on V = L_k: ρ = ã·φ with φ the normalized Lie
/// map and d = b̃·d_sl.
pub fn datum_over_sl2(p: u32, k: usize, atilde: i64, btilde: i64) -> Result<ContragredientDatum> {
    let at = normalized_atilde(p, atilde)?;
    let pieces = sl2_pieces(p, k)?;
    let x = pieces.sl.alg.clone();
    let v = VerObject::simple(p, k);
    let rho = VerMorphism::semisimplify(&pieces.rho.scale(at), &VerObject::tensor(x.obj(), &v), &v);
    let d =
        VerMorphism::semisimplify(&pieces.d.scale(fp::from_i64(btilde, p)), &VerObject::tensor(&v, &v.dual()), x.obj());
    ContragredientDatum::new(x, vec![v], rho, d, TorusKind::Sl2 { k, atilde, btilde })
}

/// Rank one over gl(L_2) = 𝟙 ⊕ sl(L_2) on V = L_k with
/// ρ = diag(a·id_𝟙, ã·φ) and d = diag(b·ev, b̃·d_sl).
pub fn datum_over_gl2(p: u32, k: usize, a: i64, atilde: i64, b: i64, btilde: i64) -> Result<ContragredientDatum> {
    let at = normalized_atilde(p, atilde)?;
    let pieces = sl2_pieces(p, k)?;
    let l2 = VerObject::simple(p, 2);
    let x = gl(&l2);
    let v = VerObject::simple(p, k);
    // gl(L_2) = 𝟙 ⊕ sl(L_2): ι_𝟙 = coev, π_𝟙 = ev/2; the sl part uses the
    // kernel inclusion and its retraction.
    let ev2 = rep_alphap::ev_right(l2.alpha());
    let coev2 = rep_alphap::coev_left(l2.alpha());
    let half = fp::inv(2, p);
    let proj_sl = pieces.sl.proj.lift();
    let incl_sl = pieces.sl.incl.lift();
    let scalar = ev2.scale(fp::mul(half, fp::from_i64(a, p), p)).kron(&Matrix::identity(p, k));
    let rho_up = scalar.add(&pieces.rho.scale(at).mul_kron_id(&proj_sl, k));
    let d_up = coev2
        .mul(&rep_alphap::ev_right(v.alpha()))
        .scale(fp::from_i64(b, p))
        .add(&incl_sl.mul(&pieces.d).scale(fp::from_i64(btilde, p)));
    let rho = VerMorphism::semisimplify(&rho_up, &VerObject::tensor(x.obj(), &v), &v);
    let d = VerMorphism::semisimplify(&d_up, &VerObject::tensor(&v, &v.dual()), x.obj());
    ContragredientDatum::new(x, vec![v], rho, d, TorusKind::Gl2 { k, a, atilde, b, btilde })
}

/// The chain datum of L = X_1 ⊕ … ⊕ X_r with every X_i simple, realized
/// inside gl(L): the torus is the block diagonal ⊕ gl(X_i) (its trace-zero
/// part when `special`), V = ⊕ X_i ⊗ X_{i+1}*, ρ and d are commutators.
#[derive(Clone, Debug)]
pub struct ChainData {
    pub datum: ContragredientDatum,
    /// The algebra gl(L) or sl(L) that the datum should reproduce.
    pub target: LieAlgebra,
    /// The trace form restricted to the torus.
    pub k: InvariantForm,
    /// Degree of every upstairs basis element E_ab of gl(L).
    pub degrees: Vec<i64>,
}

pub fn datum_gl_chain(p: u32, simples: &[usize], special: bool) -> Result<ChainData> {
    fp::check_prime(p)?;
    if simples.len() < 2 {
        return Err(Error::InvalidInput("a chain needs at least two summands".into()));
    }
    for &s in simples {
        check_k(p, s)?;
    }
    let r = simples.len();
    let xs: Vec<Obj> = simples.iter().map(|&s| VerObject::simple(p, s)).collect();
    let refs: Vec<&VerObject> = xs.iter().map(|o| o.as_ref()).collect();
    let l = VerObject::direct_sum(p, &refs);
    let n = l.dim_upstairs();
    let offs: Vec<usize> = simples.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect();
    let block_of = |a: usize| offs.iter().rposition(|&o| o <= a).expect("offsets start at 0");
    let degrees: Vec<i64> = (0..n * n).map(|e| block_of(e % n) as i64 - block_of(e / n) as i64).collect();
    // Upstairs inclusion of the block X_i ⊗ X_j* (local index a·dim X_j + b).
    let block_incl = |i: usize, j: usize| {
        let (di, dj) = (simples[i], simples[j]);
        let mut m = Matrix::zeros(p, n * n, di * dj);
        for a in 0..di {
            for b in 0..dj {
                m.set((offs[i] + a) * n + offs[j] + b, a * dj + b, 1);
            }
        }
        m
    };
    let bgl = gl_bracket_upstairs(p, n);
    let tors: Vec<Obj> = xs.iter().map(|o| VerObject::tensor(o, &o.dual())).collect();
    let tor_refs: Vec<&VerObject> = tors.iter().map(|o| o.as_ref()).collect();
    let x_full = VerObject::direct_sum(p, &tor_refs);
    let j0_parts: Vec<Matrix> = (0..r).map(|i| block_incl(i, i)).collect();
    let j0 = Matrix::hstack(p, n * n, &j0_parts.iter().collect::<Vec<_>>());
    let x_gl = LieAlgebra::from_upstairs(x_full.clone(), &j0.transpose().mul(&apply2(&bgl, &j0, &j0)));
    let parts: Vec<Obj> = (0..r - 1).map(|i| VerObject::tensor(&xs[i], &xs[i + 1].dual())).collect();
    let j1_parts: Vec<Matrix> = (0..r - 1).map(|i| block_incl(i, i + 1)).collect();
    let j1 = Matrix::hstack(p, n * n, &j1_parts.iter().collect::<Vec<_>>());
    // V* block for X_i ⊗ X_{i+1}*: e*_(a,b) ↦ E_{b a} in the block (i+1, i).
    let jm_parts: Vec<Matrix> = (0..r - 1)
        .map(|i| {
            let (di, dj) = (simples[i], simples[i + 1]);
            let mut m = Matrix::zeros(p, n * n, di * dj);
            for a in 0..di {
                for b in 0..dj {
                    m.set((offs[i + 1] + b) * n + offs[i] + a, a * dj + b, 1);
                }
            }
            m
        })
        .collect();
    let jm = Matrix::hstack(p, n * n, &jm_parts.iter().collect::<Vec<_>>());
    let full_trace = gl_trace_form_up(p, n);
    let (x, incl_up, proj_up) = if special {
        let tr = full_trace.mul_id_kron(&coev_of(p, n)).mul(&j0);
        let tr_v = VerMorphism::semisimplify(&tr, &x_full, &VerObject::unit(p));
        let (_, incl) = tr_v.kernel();
        let sub = restrict_bracket(&x_gl, &incl)?
            .ok_or_else(|| Error::InvalidInput("trace-zero torus is not a subalgebra".into()))?;
        (sub.alg.clone(), sub.incl.lift(), sub.proj.lift())
    } else {
        let id = Matrix::identity(p, x_full.dim_upstairs());
        (x_gl.clone(), id.clone(), id)
    };
    let jx = j0.mul(&incl_up);
    let rho_up = j1.transpose().mul(&apply2(&bgl, &jx, &j1));
    let d_up = proj_up.mul(&j0.transpose()).mul(&apply2(&bgl, &j1, &jm));
    let refs: Vec<&VerObject> = parts.iter().map(|o| o.as_ref()).collect();
    let v = VerObject::direct_sum(p, &refs);
    let rho = VerMorphism::semisimplify(&rho_up, &VerObject::tensor(x.obj(), &v), &v);
    let d = VerMorphism::semisimplify(&d_up, &VerObject::tensor(&v, &v.dual()), x.obj());
    let kind = TorusKind::GlChain { simples: simples.to_vec(), special };
    let datum = ContragredientDatum::new(x.clone(), parts, rho, d, kind)?;
    let k = InvariantForm::from_upstairs(x, &apply2(&full_trace, &jx, &jx));
    let glv = gl(&l);
    let target = if special {
        let ev = VerMorphism::semisimplify(&rep_alphap::ev_right(l.alpha()), glv.obj(), &VerObject::unit(p));
        let (_, incl) = ev.kernel();
        restrict_bracket(&glv, &incl)?.expect("sl(L) is a subalgebra").alg
    } else {
        glv
    };
    Ok(ChainData { datum, target, k, degrees })
}

/// coev of an n-dimensional space as a column: 1 ↦ Σ e_a ⊗ e_a*.
fn coev_of(p: u32, n: usize) -> Matrix {
    Matrix::from_fn(p, n * n, 1, |i, _| u32::from(i / n == i % n))
}

/// The classical datum of a generalized Cartan matrix A (n × n).
#[derive(Clone, Debug)]
pub struct CartanData {
    pub datum: ContragredientDatum,
    /// Symmetrizing scalars ε with ε_i a_ji = ε_j a_ij.
    pub eps: Vec<u32>,
    /// Dimension of the realization, 2n − rank A.
    pub torus_dim: usize,
    /// The invariant form K on the torus.
    pub k: Option<InvariantForm>,
}

/// Symmetrizing scalars found by breadth-first search over the graph of A.
fn symmetrize(p: u32, a: &[Vec<i64>]) -> Option<Vec<u32>> {
    let n = a.len();
    let mut eps: Vec<Option<u32>> = vec![None; n];
    for start in 0..n {
        if eps[start].is_some() {
            continue;
        }
        eps[start] = Some(1);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let ei = eps[i].expect("visited");
            for j in 0..n {
                let (aij, aji) = (fp::from_i64(a[i][j], p), fp::from_i64(a[j][i], p));
                if i == j || (aij == 0 && aji == 0) {
                    continue;
                }
                if aij == 0 || aji == 0 {
                    return None;
                }
                let ej = fp::mul(ei, fp::mul(aji, fp::inv(aij, p), p), p);
                match eps[j] {
                    None => {
                        eps[j] = Some(ej);
                        queue.push_back(j);
                    }
                    Some(old) if old != ej => return None,
                    Some(_) => {}
                }
            }
        }
    }
    eps.into_iter().collect()
}

/// Builds the datum of A with parities `odd`: the torus is abelian of
/// dimension 2n − rank A with coroots h_i = e_i and simple roots ξ_j
/// satisfying ξ_j(h_i) = a_ij; V_i is L_1 for even and L_{p−1} for odd
/// indices; d(v_i ⊗ f_j) = δ_ij ε_i⁻¹ h_i when A is symmetrizable and
/// δ_ij h_i otherwise.
pub fn datum_from_cartan_matrix(p: u32, a: &[Vec<i64>], odd: &[bool]) -> Result<CartanData> {
    fp::check_prime(p)?;
    let n = a.len();
    if n == 0 || a.iter().any(|row| row.len() != n) || odd.len() != n {
        return Err(Error::InvalidInput("Cartan matrix must be square with one parity per row".into()));
    }
    let am = Matrix::from_rows(p, a);
    let rank = am.rank();
    let m = 2 * n - rank;
    // Rows ξ_j over the basis e_1..e_m: (a_1j … a_nj | extra).
    let mut xi = Matrix::zeros(p, n, m);
    for j in 0..n {
        for i in 0..n {
            xi.set(j, i, am.get(i, j));
        }
    }
    let mut extra = n;
    for u in 0..n {
        if extra == m {
            break;
        }
        let mut trial = xi.clone();
        trial.set(u, extra, 1);
        if trial.rank() > xi.rank() {
            xi = trial;
            extra += 1;
        }
    }
    if xi.rank() != n {
        return Err(Error::RealizationFailure("simple roots are not independent".into()));
    }
    let eps = symmetrize(p, a);
    let torus = VerObject::canonical(p, &{
        let mut mult = vec![0; p as usize - 1];
        mult[0] = m;
        mult
    });
    let x = LieAlgebra::abelian(&torus);
    let parts: Vec<Obj> = odd.iter().map(|&o| VerObject::simple(p, if o { p as usize - 1 } else { 1 })).collect();
    let dims: Vec<usize> = parts.iter().map(|o| o.dim_upstairs()).collect();
    let offs: Vec<usize> = dims.iter().scan(0, |acc, &s| Some(std::mem::replace(acc, *acc + s))).collect();
    let nv: usize = dims.iter().sum();
    let mut rho_up = Matrix::zeros(p, nv, m * nv);
    let mut d_up = Matrix::zeros(p, m, nv * nv);
    for i in 0..n {
        let scale = eps.as_ref().map_or(1, |e| fp::inv(e[i], p));
        for r in 0..dims[i] {
            let v = offs[i] + r;
            for y in 0..m {
                rho_up.set(v, y * nv + v, xi.get(i, y));
            }
            d_up.set(i, v * nv + v, scale);
        }
    }
    let refs: Vec<&VerObject> = parts.iter().map(|o| o.as_ref()).collect();
    let v = VerObject::direct_sum(p, &refs);
    let rho = VerMorphism::semisimplify(&rho_up, &VerObject::tensor(x.obj(), &v), &v);
    let d = VerMorphism::semisimplify(&d_up, &VerObject::tensor(&v, &v.dual()), x.obj());
    let kind = TorusKind::Cartan { matrix: a.to_vec(), odd: odd.to_vec() };
    let datum = ContragredientDatum::new(x.clone(), parts, rho, d, kind)?;
    let k = eps.as_ref().map(|e| {
        // K(h_i, y) = ε_i ξ_i(y); the added directions pair to zero.
        let mut km = Matrix::zeros(p, m, m);
        for i in 0..n {
            for y in 0..m {
                let val = fp::mul(e[i], xi.get(i, y), p);
                km.set(i, y, val);
                km.set(y, i, val);
            }
        }
        for u in n..m {
            for w in n..m {
                km.set(u, w, 0);
            }
        }
        let flat = Matrix::from_fn(p, 1, m * m, |_, c| km.get(c / m, c % m));
        InvariantForm::from_upstairs(x.clone(), &flat)
    });
    Ok(CartanData { datum, eps: eps.unwrap_or_default(), torus_dim: m, k })
}

/// The symmetrizable form of a catalog datum over 𝟙: K = 1.
pub fn symmetrizable_over_one(p: u32, k: usize, a: i64) -> Result<SymmetrizableDatum> {
    check_k(p, k)?;
    let unit = VerObject::unit(p);
    let x = LieAlgebra::abelian(&unit);
    let v = VerObject::simple(p, k);
    let rho_up = Matrix::identity(p, k).scale(fp::from_i64(a, p));
    let rho = VerMorphism::semisimplify(&rho_up, &VerObject::tensor(&unit, &v), &v);
    let kf = InvariantForm::from_upstairs(x.clone(), &Matrix::identity(p, 1));
    SymmetrizableDatum::new(x, vec![v], rho, kf, TorusKind::One { k, a, b: a })
}
