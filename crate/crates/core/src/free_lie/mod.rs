//! Graded pieces of the free Lie algebra FLie(V) inside the tensor algebra.
//!
//! The tensor powers V^⊗n are never decomposed directly: a single Jordan
//! block of V^⊗n can be far too large for dense elimination. Instead each
//! power is kept in canonical form T_n, a direct sum of standard simples,
//! together with two identifications
//!
//! * Q_n: T_{n−1} ⊗ V → T_n (multiply by a generator on the right),
//! * P_n: V ⊗ T_{n−1} → T_n (multiply by a generator on the left),
//!
//! both induced by the same identification of V^⊗n. Every computation then
//! involves only tensor products of canonical objects with V, whose Jordan
//! data are cheap.
//!
//! The piece FLie_n is the image of the commutator V ⊗ FLie_{n−1} → T_n,
//! v ⊗ ξ ↦ vξ − ξv, taken in Ver_p.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::verp::{braiding, Obj, VerMorphism, VerObject};

/// Default cap on the upstairs dimension of V^⊗n.
pub const DEFAULT_BUDGET: usize = 20_000;

/// The canonical tensor power T_n with its two product identifications.
#[derive(Clone, Debug)]
pub struct TensorPower {
    /// T_n as a canonical object.
    pub obj: Obj,
    /// Q_n: T_{n−1} ⊗ V → T_n.
    pub right: VerMorphism,
    /// P_n: V ⊗ T_{n−1} → T_n.
    pub left: VerMorphism,
}

/// One graded piece FLie_n ⊆ T_n.
#[derive(Clone, Debug)]
pub struct Piece {
    pub degree: usize,
    pub obj: Obj,
    /// Inclusion FLie_n → T_n.
    pub incl: VerMorphism,
    /// Left inverse of `incl`.
    pub proj: VerMorphism,
    /// The bracket V ⊗ FLie_{n−1} ↠ FLie_n, corestricted (absent for n = 1).
    pub cores: Option<VerMorphism>,
    /// A right inverse of `cores`.
    pub section: Option<VerMorphism>,
}

/// FLie(V) computed degree by degree.
#[derive(Clone, Debug)]
pub struct GradedFreeLie {
    v: Obj,
    budget: usize,
    powers: Vec<TensorPower>,
    pieces: Vec<Piece>,
    brackets: HashMap<(usize, usize), VerMorphism>,
    products: HashMap<(usize, usize), VerMorphism>,
    raw: Vec<Matrix>,
}

fn canonical_iso(obj: &Obj) -> (Obj, VerMorphism, VerMorphism) {
    let p = obj.p();
    let canon = VerObject::canonical(p, obj.mult());
    let blocks: Vec<Matrix> = obj.mult().iter().map(|&m| Matrix::identity(p, m)).collect();
    let to = VerMorphism::new(obj.clone(), canon.clone(), blocks.clone()).expect("identity blocks");
    let from = VerMorphism::new(canon.clone(), obj.clone(), blocks).expect("identity blocks");
    (canon, to, from)
}

/// The identity of the common upstairs space of two realizations.
fn reassociate(src: &Obj, dst: &Obj) -> VerMorphism {
    VerMorphism::semisimplify(&Matrix::identity(src.p(), src.dim_upstairs()), src, dst)
}

fn id_tensor(a: &Obj, f: &VerMorphism) -> VerMorphism {
    VerMorphism::identity(a).tensor(f)
}

fn tensor_id(f: &VerMorphism, a: &Obj) -> VerMorphism {
    f.tensor(&VerMorphism::identity(a))
}

impl GradedFreeLie {
    /// Starts FLie(V) with the default budget. V is replaced by its
    /// canonical form; negligible summands of V play no role in Ver_p.
    pub fn new(v: &Obj) -> Self {
        Self::with_budget(v, DEFAULT_BUDGET)
    }

    pub fn with_budget(v: &Obj, budget: usize) -> Self {
        let p = v.p();
        let v = VerObject::canonical(p, v.mult());
        let id = VerMorphism::identity(&v);
        let power = TensorPower { obj: v.clone(), right: id.clone(), left: id.clone() };
        let piece = Piece { degree: 1, obj: v.clone(), incl: id.clone(), proj: id, cores: None, section: None };
        GradedFreeLie {
            v: v.clone(),
            budget,
            powers: vec![power],
            pieces: vec![piece],
            brackets: HashMap::new(),
            products: HashMap::new(),
            raw: vec![Matrix::identity(p, v.dim_upstairs())],
        }
    }

    /// The generating object, in canonical form.
    pub fn generators(&self) -> &Obj {
        &self.v
    }

    pub fn p(&self) -> u32 {
        self.v.p()
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// The highest degree computed so far.
    pub fn degree(&self) -> usize {
        self.pieces.len()
    }

    /// Upstairs dimension of V^⊗n, checked against the budget.
    pub fn check_budget(&self, n: usize) -> Result<usize> {
        let k = self.v.dim_upstairs();
        let needed = u32::try_from(n).ok().and_then(|e| k.checked_pow(e)).unwrap_or(usize::MAX);
        if needed > self.budget {
            return Err(Error::BudgetExceeded { needed, budget: self.budget });
        }
        Ok(needed)
    }

    /// Computes all pieces up to degree `n`.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.pieces.len() < n {
            let next = self.pieces.len() + 1;
            self.check_budget(next)?;
            self.push_power(next);
            self.push_piece(next);
        }
        Ok(())
    }

    fn push_power(&mut self, n: usize) {
        let v = self.v.clone();
        let prev = self.powers[n - 2].obj.clone();
        let (obj, right, _) = canonical_iso(&VerObject::tensor(&prev, &v));
        let left = if n == 2 {
            right.clone()
        } else {
            // P_n = Q_n (P_{n−1} ⊗ id)(id ⊗ Q_{n−1}^{-1}), re-associating V ⊗ T_{n−2} ⊗ V.
            let q_prev_inv = self.powers[n - 2].right.inverse().expect("Q is an isomorphism");
            let step1 = id_tensor(&v, &q_prev_inv);
            let step3 = tensor_id(&self.powers[n - 2].left, &v);
            let step2 = reassociate(step1.dst(), step3.src());
            step1.then(&step2).then(&step3).then(&right)
        };
        self.powers.push(TensorPower { obj, right, left });
    }

    fn push_piece(&mut self, n: usize) {
        let v = self.v.clone();
        let prev = &self.pieces[n - 2];
        let power = &self.powers[n - 1];
        let vl = id_tensor(&v, &prev.incl).then(&power.left);
        let vr = braiding(&v, &prev.obj).then(&tensor_id(&prev.incl, &v)).then(&power.right);
        let phi = vl.sub(&vr.retarget(vl.src(), vl.dst()).expect("same objects")).expect("parallel maps");
        let (obj, incl, cores) = phi.image();
        let proj = incl.left_inverse().expect("inclusions are monic");
        let section = cores.right_inverse().expect("corestrictions are epic");
        self.pieces.push(Piece { degree: n, obj, incl, proj, cores: Some(cores), section: Some(section) });
    }

    /// The canonical tensor power T_n.
    pub fn tensor_power(&mut self, n: usize) -> Result<&TensorPower> {
        self.extend_to(n)?;
        Ok(&self.powers[n - 1])
    }

    /// The piece FLie_n.
    pub fn piece(&mut self, n: usize) -> Result<&Piece> {
        if n == 0 {
            return Err(Error::OutOfRange("free Lie degrees start at 1".into()));
        }
        self.extend_to(n)?;
        Ok(&self.pieces[n - 1])
    }

    /// A computed piece, without extending.
    pub fn computed_piece(&self, n: usize) -> Option<&Piece> {
        n.checked_sub(1).and_then(|i| self.pieces.get(i))
    }

    /// The bracket FLie_m ⊗ FLie_n → FLie_{m+n}.
    ///
    /// Brackets with a generator are the corestricted commutators; all
    /// others follow from [x, [v, y]] = [[x, v], y] + [v, [x, y]] through
    /// the section of V ⊗ FLie_{n−1} ↠ FLie_n. Well-definedness on the
    /// kernel of that surjection is verified.
    pub fn bracket(&mut self, m: usize, n: usize) -> Result<VerMorphism> {
        if m == 0 || n == 0 {
            return Err(Error::OutOfRange("free Lie degrees start at 1".into()));
        }
        if let Some(b) = self.brackets.get(&(m, n)) {
            return Ok(b.clone());
        }
        self.extend_to(m + n)?;
        let b = if m == 1 {
            let cores = self.pieces[n].cores.clone().expect("degree ≥ 2");
            let src = VerObject::tensor(&self.v, &self.pieces[n - 1].obj);
            cores.retarget(&src, cores.dst()).expect("V ⊗ FLie_n")
        } else if n == 1 {
            let b1 = self.bracket(1, m)?;
            let c = braiding(&self.pieces[m - 1].obj, &self.v);
            c.then(&b1.retarget(c.dst(), b1.dst()).expect("V ⊗ FLie_m")).neg()
        } else {
            self.bracket_by_jacobi(m, n)?
        };
        self.brackets.insert((m, n), b.clone());
        Ok(b)
    }

    fn bracket_by_jacobi(&mut self, m: usize, n: usize) -> Result<VerMorphism> {
        let xm = self.bracket(m, 1)?.lift();
        let outer = self.bracket(m + 1, n - 1)?.lift();
        let inner = self.bracket(m, n - 1)?.lift();
        let gen = self.bracket(1, m + n - 1)?.lift();
        let fm = self.pieces[m - 1].obj.clone();
        let fn1 = self.pieces[n - 2].obj.clone();
        let target = self.pieces[m + n - 1].obj.clone();
        let (dm, dv, dn1) = (fm.dim_upstairs(), self.v.dim_upstairs(), fn1.dim_upstairs());
        // G on F_m ⊗ V ⊗ F_{n−1}: [[x, v], y] + [v, [x, y]] with x moved past v.
        let t1 = outer.mul_kron_id(&xm, dn1);
        let t2 = gen.mul_id_kron(&inner);
        let g = t1.add(&swap_first_two(&t2, dm, dv, dn1));
        let piece = &self.pieces[n - 1];
        let cores = piece.cores.as_ref().expect("degree ≥ 2");
        let section = piece.section.as_ref().expect("degree ≥ 2");
        let (kobj, ker) = cores.kernel();
        let on_kernel = g.mul_id_kron(&ker.lift());
        if !VerMorphism::semisimplify(&on_kernel, &VerObject::tensor(&fm, &kobj), &target).is_zero() {
            return Err(Error::RecursionInconsistent((m + n) as i64));
        }
        let through = g.mul_id_kron(&section.lift());
        let src = VerObject::tensor(&fm, &piece.obj);
        Ok(VerMorphism::semisimplify(&through, &src, &target))
    }

    /// The product T_m ⊗ T_n → T_{m+n} of the tensor algebra.
    pub fn product(&mut self, m: usize, n: usize) -> Result<VerMorphism> {
        if let Some(mu) = self.products.get(&(m, n)) {
            return Ok(mu.clone());
        }
        self.extend_to(m + n)?;
        let mu = if n == 1 {
            let q = self.powers[m].right.clone();
            let src = VerObject::tensor(&self.powers[m - 1].obj, &self.v);
            q.retarget(&src, q.dst()).expect("T_m ⊗ V")
        } else {
            // μ_{m,n} = Q_{m+n} (μ_{m,n−1} ⊗ id)(id ⊗ Q_n^{-1}).
            let tm = self.powers[m - 1].obj.clone();
            let q_inv = self.powers[n - 1].right.inverse().expect("Q is an isomorphism");
            let step1 = id_tensor(&tm, &q_inv);
            let prev = self.product(m, n - 1)?;
            let step3 = tensor_id(&prev, &self.v);
            let step2 = reassociate(step1.dst(), step3.src());
            let q = self.powers[m + n - 1].right.clone();
            step1.then(&step2).then(&step3).then(&q.retarget(step3.dst(), q.dst()).expect("T ⊗ V"))
        };
        self.products.insert((m, n), mu.clone());
        Ok(mu)
    }

    /// The commutator xy − yx in the tensor algebra, restricted to
    /// FLie_m ⊗ FLie_n and landing in T_{m+n}.
    pub fn commutator_in_tensor_algebra(&mut self, m: usize, n: usize) -> Result<VerMorphism> {
        let mu_mn = self.product(m, n)?;
        let mu_nm = self.product(n, m)?;
        let im = self.pieces[m - 1].incl.clone();
        let inn = self.pieces[n - 1].incl.clone();
        let xy = im.tensor(&inn).then(&mu_mn.retarget(&VerObject::tensor(im.dst(), inn.dst()), mu_mn.dst())?);
        let c = braiding(im.src(), inn.src());
        let yx = c.then(&inn.tensor(&im)).then(&mu_nm.retarget(&VerObject::tensor(inn.dst(), im.dst()), mu_nm.dst())?);
        xy.sub(&yx.retarget(xy.src(), xy.dst())?)
    }

    /// The bracket as a map into T_{m+n}, checked to land in FLie_{m+n}.
    pub fn bracket_into_tensor_algebra(&mut self, m: usize, n: usize) -> Result<VerMorphism> {
        let comm = self.commutator_in_tensor_algebra(m, n)?;
        let piece = &self.pieces[m + n - 1];
        let back = piece.proj.compose(&comm.retarget(comm.src(), piece.incl.dst())?)?;
        if piece.incl.compose(&back)? != comm.retarget(comm.src(), piece.incl.dst())? {
            return Err(Error::ImageEscapesPiece(format!("[FLie_{m}, FLie_{n}]")));
        }
        Ok(back)
    }

    /// Extends an action ρ: X ⊗ V → V to T_n by derivations:
    /// ρ_n = Q_n (ρ_{n−1} ⊗ id + (id ⊗ ρ)(c_{X,T_{n−1}} ⊗ id))(id ⊗ Q_n^{-1}).
    ///
    /// `rho` must have source X ⊗ V for the given X and the canonical V.
    pub fn extend_action(&mut self, x: &Obj, rho: &VerMorphism, n: usize) -> Result<VerMorphism> {
        self.extend_to(n)?;
        let p = self.p();
        let xdim = x.dim_upstairs();
        let expected = VerObject::tensor(x, &self.v);
        let r1 = rho.retarget(&expected, &self.v)?.lift();
        let mut cur = r1.clone();
        for k in 2..=n {
            let dprev = self.powers[k - 2].obj.dim_upstairs();
            let dv = self.v.dim_upstairs();
            // On X ⊗ T_{k−1} ⊗ V.
            let a = cur.kron(&Matrix::identity(p, dv));
            let b = Matrix::identity(p, dprev).kron(&r1);
            let b = swap_first_two(&b, xdim, dprev, dv);
            let mid = a.add(&b);
            let q = self.powers[k - 1].right.lift();
            let q_inv = self.powers[k - 1].right.inverse().expect("Q is an isomorphism").lift();
            cur = q.mul(&mid).mul_id_kron(&q_inv);
        }
        let tn = self.powers[n - 1].obj.clone();
        let src = VerObject::tensor(x, &tn);
        Ok(VerMorphism::semisimplify(&cur, &src, &tn))
    }

    /// The action of X on FLie_n obtained by restricting the extension to
    /// T_n; fails if FLie_n is not stable.
    pub fn action_on_piece(&mut self, x: &Obj, rho: &VerMorphism, n: usize) -> Result<VerMorphism> {
        let ext = self.extend_action(x, rho, n)?;
        let piece = self.pieces[n - 1].clone();
        let restricted =
            id_tensor(x, &piece.incl).then(&ext.retarget(&VerObject::tensor(x, piece.incl.dst()), ext.dst())?);
        let back = restricted.then(&piece.proj);
        if back.then(&piece.incl) != restricted {
            return Err(Error::ImageEscapesPiece(format!("X-action on FLie_{n}")));
        }
        Ok(back)
    }

    /// An upstairs basis of FLie_n inside V^⊗n, in column echelon form.
    pub fn upstairs_basis(&mut self, n: usize) -> Result<Matrix> {
        self.extend_to(n)?;
        let p = self.p();
        while self.raw.len() < n {
            // K_k = (K_{k−1} ⊗ I) Q_k^{-1}: canonical T_k → V^⊗k.
            let k = self.raw.len() + 1;
            let q_inv = self.powers[k - 1].right.inverse().expect("Q is an isomorphism").lift();
            let prev = &self.raw[k - 2];
            let next = prev.kron(&Matrix::identity(p, self.v.dim_upstairs())).mul(&q_inv);
            self.raw.push(next);
        }
        let spanning = self.raw[n - 1].mul(&self.pieces[n - 1].incl.lift());
        let r = spanning.transpose().rref();
        let rank = r.pivots.len();
        Ok(r.matrix.select_rows(&(0..rank).collect::<Vec<_>>()).transpose())
    }
}

/// Reorders the source of `m` from B ⊗ A ⊗ C to A ⊗ B ⊗ C, i.e. returns
/// m ∘ (c_{A,B} ⊗ id_C) with dims (a, b, c).
fn swap_first_two(m: &Matrix, a: usize, b: usize, c: usize) -> Matrix {
    let perm: Vec<usize> =
        (0..a).flat_map(|i| (0..b).flat_map(move |j| (0..c).map(move |k| (j * a + i) * c + k))).collect();
    m.select_cols(&perm)
}

/// The piece FLie(V)_n: an upstairs basis inside V^⊗n and its Ver_p object.
pub fn flie_piece(v: &Obj, n: usize) -> Result<(Matrix, Obj)> {
    let mut f = GradedFreeLie::new(v);
    let obj = f.piece(n)?.obj.clone();
    Ok((f.upstairs_basis(n)?, obj))
}

/// Multiplicity vectors of FLie(V)_1, …, FLie(V)_n.
pub fn flie_multiplicities(v: &Obj, n: usize) -> Result<Vec<Vec<usize>>> {
    let mut f = GradedFreeLie::new(v);
    f.extend_to(n)?;
    Ok((1..=n).map(|k| f.computed_piece(k).expect("computed").obj.mult().to_vec()).collect())
}
