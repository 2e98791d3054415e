//! Lie algebras in Ver_p: axioms, gl and sl, forms, dual actions,
//! semidirect products and classical semisimplification.

use verlie::ff_linalg::{fp, Matrix};
use verlie::lie_objects::gl::gl_product_upstairs;
use verlie::lie_objects::module::dual_action_upstairs;
use verlie::lie_objects::*;
use verlie::rep_alphap;
use verlie::verp::upstairs::mul_swap;
use verlie::verp::{Obj, VerMorphism, VerObject};

fn simple(p: u32, i: usize) -> Obj {
    VerObject::simple(p, i)
}

fn sum2(p: u32, i: usize, j: usize) -> Obj {
    VerObject::direct_sum(p, &[&simple(p, i), &simple(p, j)])
}

fn mult(p: u32, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut m = vec![0; p as usize - 1];
    for &(i, k) in pairs {
        m[i - 1] = k;
    }
    m
}

/// Structure constants of sl_2 in the basis (e, h, f).
fn sl2_constants(p: u32, e_index: usize) -> StructureConstants {
    StructureConstants::from_fn(p, 3, e_index, |i, j| {
        let mut v = vec![0i64; 3];
        match (i, j) {
            (0, 2) => v[1] = 1,
            (2, 0) => v[1] = -1,
            (1, 0) => v[0] = 2,
            (0, 1) => v[0] = -2,
            (1, 2) => v[2] = -2,
            (2, 1) => v[2] = 2,
            _ => {}
        }
        v
    })
}

fn elementary(p: u32, n: usize, i: usize, j: usize) -> Matrix {
    Matrix::from_fn(p, n, n, |a, b| u32::from(a == i && b == j))
}

/// A basis of sl_3: the six root vectors E_ij followed by E_11 − E_22 and E_22 − E_33.
fn sl3_basis(p: u32) -> Vec<Matrix> {
    let mut basis = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                basis.push(elementary(p, 3, i, j));
            }
        }
    }
    basis.push(elementary(p, 3, 0, 0).sub(&elementary(p, 3, 1, 1)));
    basis.push(elementary(p, 3, 1, 1).sub(&elementary(p, 3, 2, 2)));
    basis
}

/// The sl_2 algebra in Ver_p with trivial t, basis (e, h, f) over 3 L_1.
fn classical_sl2(p: u32) -> LieAlgebra {
    let b = sl2_constants(p, 0).bracket_matrix().unwrap();
    LieAlgebra::from_upstairs(VerObject::canonical(p, &mult(p, &[(1, 3)])), &b)
}

#[test]
fn abelian_bracket_satisfies_the_axioms() {
    let l = LieAlgebra::abelian(&sum2(5, 2, 3));
    assert!(check_lie_axioms(&l));
}

#[test]
fn gl_satisfies_the_axioms_on_simples() {
    for p in [5u32, 7] {
        for i in 1..p as usize {
            assert!(check_lie_axioms(&gl(&simple(p, i))), "gl(L_{i}) at p = {p}");
        }
    }
}

#[test]
fn gl_satisfies_the_axioms_on_sums_of_two_simples() {
    for (p, i, j) in [(5u32, 1, 2), (5, 2, 3), (5, 1, 4), (5, 2, 2), (7, 2, 3), (7, 1, 5), (7, 3, 4)] {
        assert!(check_lie_axioms(&gl(&sum2(p, i, j))), "gl(L_{i} + L_{j}) at p = {p}");
    }
}

#[test]
fn gl_of_the_unit_is_one_dimensional_abelian() {
    let g = gl(&simple(5, 1));
    assert_eq!(g.obj().mult(), &mult(5, &[(1, 1)])[..]);
    assert!(g.is_abelian());
}

#[test]
fn sl_of_l2_is_l3_and_nonabelian() {
    let s = sl(&simple(5, 2));
    assert_eq!(s.alg.obj().mult(), &mult(5, &[(3, 1)])[..]);
    assert!(!s.alg.is_abelian());
    assert!(check_lie_axioms(&s.alg));
}

#[test]
fn gl_of_l2_splits_as_unit_plus_sl() {
    let g = gl(&simple(5, 2));
    assert_eq!(g.obj().mult(), &mult(5, &[(1, 1), (3, 1)])[..]);
}

#[test]
fn unit_summand_of_gl_l2_is_central() {
    let l = simple(5, 2);
    let g = gl(&l);
    let coev = VerMorphism::semisimplify(&rep_alphap::coev_left(l.alpha()), &VerObject::unit(5), g.obj());
    let src = VerObject::tensor(&VerObject::unit(5), g.obj());
    let up = g.bracket_up().mul(&coev.lift().kron(&Matrix::identity(5, g.obj().dim_upstairs())));
    assert!(VerMorphism::semisimplify(&up, &src, g.obj()).is_zero());
}

#[test]
fn gl_equals_sl_semidirect_unit_with_zero_action() {
    let l = simple(5, 2);
    let s = sl(&l);
    let unit_alg = LieAlgebra::abelian(&VerObject::unit(5));
    let rho = VerMorphism::zero(&VerObject::tensor(unit_alg.obj(), s.alg.obj()), s.alg.obj());
    let sd = semidirect(&s.alg, &unit_alg, &rho).unwrap();
    assert!(check_lie_axioms(&sd.alg));
    assert_eq!(sd.alg.obj().mult(), gl(&l).obj().mult());
    assert!(is_lie_map(&s.alg, &sd.alg, &sd.incl_f));
    assert!(is_lie_map(&unit_alg, &sd.alg, &sd.incl_x));
    assert!(is_lie_map(&sd.alg, &unit_alg, &sd.proj_x));
}

#[test]
fn categorical_dimension_of_simples() {
    for p in [5u32, 7] {
        for i in 1..p as usize {
            assert_eq!(categorical_dim(&simple(p, i)), i as u32 % p);
        }
    }
}

#[test]
fn trace_form_is_symmetric_invariant_and_nondegenerate() {
    for l in [simple(5, 2), simple(5, 3), sum2(5, 1, 2), simple(7, 3)] {
        let b = trace_form(&l);
        assert!(b.is_symmetric());
        assert!(b.is_invariant());
        assert!(b.is_nondegenerate());
    }
}

#[test]
fn symmetric_projection_bracket_fails_antisymmetry() {
    let l = simple(5, 2);
    let g = gl(&l);
    let m = gl_product_upstairs(5, 2);
    let anti = m.add(&mul_swap(&m, 4, 4));
    let bad = LieAlgebra::from_upstairs(g.obj().clone(), &anti);
    let report = lie_axiom_report(&bad);
    assert!(!report.antisymmetric);
}

#[test]
fn adjoint_and_trivial_modules_pass() {
    let g = gl(&simple(5, 2));
    assert!(check_module(&LieModule::adjoint(&g)));
    assert!(check_module(&LieModule::trivial(&g, &simple(5, 3))));
}

#[test]
fn dual_of_trivial_action_is_trivial() {
    let g = gl(&simple(5, 2));
    let m = LieModule::trivial(&g, &simple(5, 3));
    let d = dual_action(&m);
    assert!(d.action().is_zero());
}

#[test]
fn dual_of_a_scalar_unit_action_is_the_negated_scalar() {
    let p = 7;
    let a = 3u32;
    let unit_alg = LieAlgebra::abelian(&VerObject::unit(p));
    for k in 1..p as usize {
        let v = simple(p, k);
        let src = VerObject::tensor(unit_alg.obj(), &v);
        let act = VerMorphism::semisimplify(&Matrix::identity(p, k).scale(a), &src, &v);
        let m = LieModule::new(unit_alg.clone(), v.clone(), act).unwrap();
        let d = dual_action(&m);
        let expected = Matrix::identity(p, k).scale(fp::neg(a, p));
        let dual_src = VerObject::tensor(unit_alg.obj(), d.obj());
        assert_eq!(d.action(), &VerMorphism::semisimplify(&expected, &dual_src, d.obj()));
    }
}

#[test]
fn dual_action_is_a_module_and_double_dual_recovers_the_action() {
    let l = simple(5, 2);
    let g = gl(&l);
    // gl(L) acts on L by the associative product restricted to (L ⊗ L*) ⊗ L.
    let n = 2;
    let mut up = Matrix::zeros(5, n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            up.set(a, (a * n + b) * n + b, 1);
        }
    }
    let src = VerObject::tensor(g.obj(), &l);
    let m = LieModule::new(g.clone(), l.clone(), VerMorphism::semisimplify(&up, &src, &l)).unwrap();
    assert!(check_module(&m));
    let d = dual_action(&m);
    assert!(check_module(&d));
    let dd = dual_action_upstairs(&dual_action_upstairs(&up, n), n);
    assert_eq!(dd, up);
    let ddm = dual_action(&d);
    assert!(check_module(&ddm));
}

#[test]
fn rescaled_action_fails_the_module_axiom() {
    let l = simple(5, 2);
    let g = gl(&l);
    let n = 2;
    let mut up = Matrix::zeros(5, n, n * n * n);
    for a in 0..n {
        for b in 0..n {
            up.set(a, (a * n + b) * n + b, 1);
        }
    }
    // Doubling an action breaks the module axiom: the two sides scale by 2 and 4.
    let src = VerObject::tensor(g.obj(), &l);
    let bad = VerMorphism::semisimplify(&up.scale(2), &src, &l);
    let m = LieModule::new(g, l, bad).unwrap();
    assert!(!check_module(&m));
}

#[test]
fn zero_action_on_abelian_is_the_direct_sum() {
    let p = 5;
    let f = LieAlgebra::abelian(&simple(p, 2));
    let x = LieAlgebra::abelian(&simple(p, 3));
    let rho = VerMorphism::zero(&VerObject::tensor(x.obj(), f.obj()), f.obj());
    let sd = semidirect(&f, &x, &rho).unwrap();
    assert!(sd.alg.is_abelian());
    assert_eq!(sd.alg.obj().mult(), &mult(p, &[(2, 1), (3, 1)])[..]);
}

#[test]
fn scalar_action_block_has_the_expected_signs() {
    let p = 7;
    let k = 3;
    let a = 2u32;
    let f = LieAlgebra::abelian(&simple(p, k));
    let x = LieAlgebra::abelian(&VerObject::unit(p));
    let src = VerObject::tensor(x.obj(), f.obj());
    let rho = VerMorphism::semisimplify(&Matrix::identity(p, k).scale(a), &src, f.obj());
    let sd = semidirect(&f, &x, &rho).unwrap();
    assert!(check_lie_axioms(&sd.alg));
    let b = sd.alg.bracket_up();
    let n = k + 1;
    for v in 0..k {
        // [x, v] = a v and [v, x] = −a v, with x the last basis vector.
        assert_eq!(b.get(v, k * n + v), a);
        assert_eq!(b.get(v, v * n + k), fp::neg(a, p));
    }
}

#[test]
fn non_derivation_is_rejected() {
    let p = 5;
    let g = classical_sl2(p);
    // Let the one-dimensional x act on sl_2 by the identity: not a derivation.
    let x = LieAlgebra::abelian(&VerObject::unit(p));
    let src = VerObject::tensor(x.obj(), g.obj());
    let rho = VerMorphism::semisimplify(&Matrix::identity(p, 3), &src, g.obj());
    assert!(matches!(semidirect(&g, &x, &rho), Err(verlie::Error::NotDerivation)));
}

#[test]
fn classical_sl2_triple_satisfies_the_compatibility_criteria() {
    let p = 5;
    let h = classical_sl2(p);
    let unit = VerObject::unit(p);
    let one = |v: u32| Matrix::from_fn(p, 1, 1, |_, _| v);
    let col = |i: usize| Matrix::from_fn(p, 3, 1, |r, _| u32::from(r == i));
    // x = span(h), W = span(e), ρ(h ⊗ e) = 2e.
    let phi_x = VerMorphism::semisimplify(&col(1), &unit, h.obj());
    let phi_f = VerMorphism::semisimplify(&col(0), &unit, h.obj());
    let sq = VerObject::tensor(&unit, &unit);
    let rho = VerMorphism::semisimplify(&one(2), &sq, &unit);
    assert!(check_derivation_compat(&h, &phi_f, &phi_x, &rho));
    let flipped = VerMorphism::semisimplify(&one(fp::neg(2, p)), &sq, &unit);
    assert!(!check_derivation_compat(&h, &phi_f, &phi_x, &flipped));

    // The standard module: e, h act on k² by their matrices.
    let v = VerObject::canonical(p, &mult(p, &[(1, 2)]));
    let e_mat = Matrix::from_rows(p, &[vec![0, 1], vec![0, 0]]);
    let h_mat = Matrix::from_rows(p, &[vec![1, 0], vec![0, -1]]);
    let s = VerObject::tensor(&unit, &v);
    let eta_f = VerMorphism::semisimplify(&e_mat, &s, &v);
    let eta_x = VerMorphism::semisimplify(&h_mat, &s, &v);
    assert!(check_module_compat(&eta_f, &eta_x, &rho, &unit, &unit));
    assert!(!check_module_compat(&eta_f, &eta_x, &flipped, &unit, &unit));
}

#[test]
fn sl2_semisimplifies_to_sl_l2() {
    let p = 5;
    let g = semisimplify_lie(&sl2_constants(p, 0)).unwrap();
    assert_eq!(g.obj().mult(), &mult(p, &[(3, 1)])[..]);
    assert!(check_lie_axioms(&g));
    let s = sl(&simple(p, 2));
    // Hom(L_3 ⊗ L_3, L_3) is one-dimensional, so both brackets are
    // scalars c_1, c_2 on the L_3 summand of the square; a scaling λ is a
    // Lie isomorphism iff λ c_1 = λ² c_2.
    let c1 = scalar_on_l3(&g);
    let c2 = scalar_on_l3(&s.alg);
    assert_ne!(c1, 0);
    assert_ne!(c2, 0);
    let lambda = fp::mul(c1, fp::inv(c2, p), p);
    assert_eq!(fp::mul(lambda, c1, p), fp::mul(fp::mul(lambda, lambda, p), c2, p));
}

fn scalar_on_l3(g: &LieAlgebra) -> u32 {
    let b = g.bracket();
    let blk = b.block(3);
    assert_eq!(blk.shape(), (1, 1));
    blk.get(0, 0)
}

#[test]
fn abelian_classical_algebra_with_zero_e_is_trivial() {
    let p = 7;
    let g0 = StructureConstants::from_fn(p, 4, 0, |_, _| vec![0; 4]);
    let g = semisimplify_lie(&g0).unwrap();
    assert_eq!(g.obj().mult(), &mult(p, &[(1, 4)])[..]);
    assert!(g.is_abelian());
}

#[test]
fn non_nilpotent_e_is_rejected() {
    // In sl_2 the element h has ad h semisimple and nonzero.
    let g0 = sl2_constants(5, 1);
    assert!(matches!(semisimplify_lie(&g0), Err(verlie::Error::NotNilpotent)));
}

#[test]
fn non_jacobi_table_is_not_equivariant() {
    let p = 5;
    // [x0, x1] = x1 with x0 = e would make ad e non-nilpotent; use a table
    // with ad e nilpotent but a bracket that does not commute with it.
    let g0 = StructureConstants::from_fn(p, 3, 0, |i, j| {
        let mut v = vec![0i64; 3];
        match (i, j) {
            (0, 1) => v[2] = 1,
            (1, 0) => v[2] = -1,
            (1, 2) => v[1] = 1,
            (2, 1) => v[1] = -1,
            _ => {}
        }
        v
    });
    assert!(matches!(semisimplify_lie(&g0), Err(verlie::Error::NotEquivariant)));
}

#[test]
fn structure_constants_round_trip_through_json() {
    let g0 = sl2_constants(5, 0);
    let text = serde_json::to_string(&g0).unwrap();
    let back: StructureConstants = serde_json::from_str(&text).unwrap();
    assert_eq!(back, g0);
}

#[test]
fn sl3_along_a_root_vector_has_a_triangular_decomposition() {
    let p = 5;
    let basis = sl3_basis(p);
    // e = E_12 is the first basis vector.
    let g0 = StructureConstants::from_matrices(p, &basis, 0).unwrap();
    let g = semisimplify_lie(&g0).unwrap();
    assert!(check_lie_axioms(&g));

    // h = diag(2, 2, 1) commutes with e, so ad h is t-equivariant and its
    // eigenspaces give a Z-grading of the semisimplified algebra.
    let hmat = Matrix::from_rows(p, &[vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 1]]);
    let ad_h: Vec<u32> = basis
        .iter()
        .map(|x| {
            let c = hmat.mul(x).sub(&x.mul(&hmat));
            // Every basis vector is an ad h eigenvector; read off the eigenvalue.
            let (r, s) = (0..3).flat_map(|r| (0..3).map(move |s| (r, s))).find(|&(r, s)| x.get(r, s) != 0).unwrap();
            fp::mul(c.get(r, s), fp::inv(x.get(r, s), p), p)
        })
        .collect();
    let t = g0.ad_e().unwrap();
    let mut dims = std::collections::BTreeMap::new();
    for (lambda, sign) in [(0u32, 0i64), (1, 1), (fp::neg(1, p), -1)] {
        let idx: Vec<usize> = (0..8).filter(|&i| ad_h[i] == lambda).collect();
        // t-stable: ad e maps the eigenspace into itself.
        for &j in &idx {
            for k in 0..8 {
                if t.get(k, j) != 0 {
                    assert!(idx.contains(&k));
                }
            }
        }
        let tt = Matrix::from_fn(p, idx.len(), idx.len(), |a, b| t.get(idx[a], idx[b]));
        let piece = VerObject::from_alpha(rep_alphap::AlphaObject::from_matrix(&tt).unwrap()).unwrap();
        dims.insert(sign, (idx.len(), piece.mult().to_vec()));
    }
    assert_eq!(dims[&0], (4, mult(p, &[(1, 1), (3, 1)])));
    assert_eq!(dims[&1], (2, mult(p, &[(2, 1)])));
    assert_eq!(dims[&-1], (2, mult(p, &[(2, 1)])));
    assert!(ad_h.iter().all(|&v| v == 0 || v == 1 || v == fp::neg(1, p)));
    assert_eq!(g.obj().mult(), &mult(p, &[(1, 1), (2, 2), (3, 1)])[..]);
}
