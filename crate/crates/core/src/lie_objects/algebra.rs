//! Operadic Lie algebras and the axiom checks.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::ff_linalg::Matrix;
use crate::verp::upstairs::{apply2, mul_swap, reorder3, simple_tensor, summands, Summand};
use crate::verp::{same_object, Obj, VerMorphism, VerObject};

/// An operadic Lie algebra in Ver_p: an object with a bracket
/// obj ⊗ obj → obj, antisymmetric and satisfying Jacobi modulo negligibles.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    obj: Obj,
    square: Obj,
    bracket: VerMorphism,
    lift: Arc<OnceLock<Matrix>>,
}

impl LieAlgebra {
    /// Wraps a bracket; its source must be the tensor square of `obj`.
    pub fn new(obj: Obj, bracket: VerMorphism) -> Result<Self> {
        let square = VerObject::tensor(&obj, &obj);
        if !same_object(bracket.src(), &square) || !same_object(bracket.dst(), &obj) {
            return Err(Error::ShapeMismatch("bracket must map obj ⊗ obj to obj".into()));
        }
        let bracket = bracket.retarget(&square, &obj)?;
        Ok(LieAlgebra { obj, square, bracket, lift: Arc::new(OnceLock::new()) })
    }

    /// Projects an upstairs bracket obj ⊗ obj → obj down to Ver_p.
    pub fn from_upstairs(obj: Obj, bracket: &Matrix) -> Self {
        let square = VerObject::tensor(&obj, &obj);
        let b = VerMorphism::semisimplify(bracket, &square, &obj);
        LieAlgebra { obj, square, bracket: b, lift: Arc::new(OnceLock::new()) }
    }

    /// The abelian Lie algebra on `obj`.
    pub fn abelian(obj: &Obj) -> Self {
        let square = VerObject::tensor(obj, obj);
        let bracket = VerMorphism::zero(&square, obj);
        LieAlgebra { obj: obj.clone(), square, bracket, lift: Arc::new(OnceLock::new()) }
    }

    pub fn obj(&self) -> &Obj {
        &self.obj
    }

    pub fn p(&self) -> u32 {
        self.obj.p()
    }

    /// The tensor square obj ⊗ obj, source of the bracket.
    pub fn square(&self) -> &Obj {
        &self.square
    }

    pub fn bracket(&self) -> &VerMorphism {
        &self.bracket
    }

    /// An upstairs representative of the bracket, computed once.
    pub fn bracket_up(&self) -> &Matrix {
        self.lift.get_or_init(|| self.bracket.lift())
    }

    pub fn is_abelian(&self) -> bool {
        self.bracket.is_zero()
    }
}

/// Outcome of the two axiom checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub antisymmetric: bool,
    pub jacobi: bool,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.antisymmetric && self.jacobi
    }
}

/// True when both Lie algebra axioms hold modulo negligibles.
pub fn check_lie_axioms(l: &LieAlgebra) -> bool {
    lie_axiom_report(l).holds()
}

/// Checks antisymmetry b(id + c) = 0 and the Jacobi identity
/// b(b ⊗ id)(id + σ + σ²) = 0, with σ the cyclic permutation of obj^⊗3.
///
/// Both maps are multilinear, so they vanish in Ver_p exactly when their
/// restrictions to every tensor product of simple summands vanish; those
/// restrictions are small and are projected down one at a time.
pub fn lie_axiom_report(l: &LieAlgebra) -> AxiomReport {
    let b = l.bracket_up();
    let parts = summands(&l.obj);
    let antisymmetric = check_antisymmetric(b, &parts, &l.obj);
    let jacobi = check_jacobi(b, &parts, &l.obj);
    AxiomReport { antisymmetric, jacobi }
}

/// `f` restricted to the summand pair (a, b), i.e. `f · (E_a ⊗ E_b)`.
pub(crate) fn on_pair(f: &Matrix, a: &Summand, b: &Summand) -> Matrix {
    apply2(f, &a.basis, &b.basis)
}

/// True when an upstairs map out of L_i ⊗ L_j ⊗ … is zero in Ver_p.
pub(crate) fn vanishes(m: &Matrix, types: &[usize], dst: &Obj) -> bool {
    if m.is_zero() {
        return true;
    }
    let src = simple_tensor(dst.p(), types);
    VerMorphism::semisimplify(m, &src, dst).is_zero()
}

fn check_antisymmetric(b: &Matrix, parts: &[Summand], obj: &Obj) -> bool {
    for (i, x) in parts.iter().enumerate() {
        for y in &parts[i..] {
            let xy = on_pair(b, x, y);
            let yx = on_pair(b, y, x);
            let sum = xy.add(&mul_swap(&yx, x.ty, y.ty));
            if !vanishes(&sum, &[x.ty, y.ty], obj) {
                return false;
            }
        }
    }
    true
}

fn check_jacobi(b: &Matrix, parts: &[Summand], obj: &Obj) -> bool {
    let n = parts.len();
    let mut pair_cache: HashMap<(usize, usize), Matrix> = HashMap::new();
    // W(a, b, c) = [[x, y], z] on the summand triple (a, b, c).
    let w = |a: usize, bb: usize, c: usize, cache: &mut HashMap<(usize, usize), Matrix>| -> Matrix {
        let inner = cache.entry((a, bb)).or_insert_with(|| on_pair(b, &parts[a], &parts[bb])).clone();
        apply2(b, &inner, &parts[c].basis)
    };
    for a in 0..n {
        for bb in 0..n {
            for c in 0..n {
                // The Jacobiator is invariant under cyclic permutations, so one
                // representative per rotation class suffices.
                if (bb, c, a) < (a, bb, c) || (c, a, bb) < (a, bb, c) {
                    continue;
                }
                let dims = [parts[a].ty, parts[bb].ty, parts[c].ty];
                let t1 = w(a, bb, c, &mut pair_cache);
                let t2 = reorder3(&w(bb, c, a, &mut pair_cache), dims, [1, 2, 0]);
                let t3 = reorder3(&w(c, a, bb, &mut pair_cache), dims, [2, 0, 1]);
                let sum = t1.add(&t2).add(&t3);
                if !vanishes(&sum, &dims, obj) {
                    return false;
                }
            }
        }
    }
    true
}
