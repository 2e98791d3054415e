//! Graded pieces of free Lie algebras in Ver_p.

use verlie::ff_linalg::Matrix;
use verlie::free_lie::{flie_multiplicities, flie_piece, GradedFreeLie};
use verlie::lie_objects::gl::gl;
use verlie::rep_alphap::{self, permutation_matrix, AlphaObject};
use verlie::verp::{Obj, VerMorphism, VerObject};

fn simple(p: u32, i: usize) -> Obj {
    VerObject::simple(p, i)
}

fn mult(p: u32, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut m = vec![0; p as usize - 1];
    for &(i, k) in pairs {
        m[i - 1] += k;
    }
    m
}

/// Summands L_{2k−1} of L_i ⊗ L_i, k = 1, …, min(i, p − i), on which the
/// self-braiding acts by (−1)^{i−k} = −1.
fn antisymmetric_part(p: u32, i: usize) -> Vec<usize> {
    let mut m = vec![0; p as usize - 1];
    for k in 1..=i.min(p as usize - i) {
        if (i - k) % 2 == 1 {
            m[2 * k - 2] += 1;
        }
    }
    m
}

#[test]
fn degree_one_is_the_generators() {
    for k in 1..5 {
        let (_, obj) = flie_piece(&simple(5, k), 1).unwrap();
        assert_eq!(obj.mult(), &mult(5, &[(k, 1)])[..]);
    }
}

#[test]
fn degree_two_for_l2_and_l3_at_p5() {
    assert_eq!(flie_piece(&simple(5, 2), 2).unwrap().1.mult(), &mult(5, &[(1, 1)])[..]);
    assert_eq!(flie_piece(&simple(5, 3), 2).unwrap().1.mult(), &mult(5, &[(3, 1)])[..]);
}

#[test]
fn degree_two_is_the_antisymmetric_part() {
    for p in [5u32, 7, 11] {
        for i in 1..p as usize {
            let m = flie_multiplicities(&simple(p, i), 2).unwrap();
            assert_eq!(m[1], antisymmetric_part(p, i), "p = {p}, i = {i}");
            assert_eq!(m[1][0] == 1, i % 2 == 0, "unit summand for p = {p}, i = {i}");
        }
    }
}

#[test]
fn brackets_agree_with_commutators_in_the_tensor_algebra() {
    for v in [simple(5, 2), simple(5, 3), VerObject::direct_sum(5, &[&simple(5, 1), &simple(5, 2)])] {
        let mut f = GradedFreeLie::new(&v);
        for (m, n) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)] {
            let via_tensor = f.bracket_into_tensor_algebra(m, n).unwrap();
            let recursive = f.bracket(m, n).unwrap();
            assert_eq!(
                via_tensor,
                recursive.retarget(via_tensor.src(), via_tensor.dst()).unwrap(),
                "[{m}, {n}] on {v}"
            );
        }
    }
}

#[test]
fn bracket_of_generators_spans_degree_two() {
    let mut f = GradedFreeLie::new(&simple(7, 4));
    let b = f.bracket(1, 1).unwrap();
    assert!(b.is_epi());
}

#[test]
fn degree_two_bracket_is_antisymmetric() {
    let mut f = GradedFreeLie::new(&simple(5, 2));
    let b = f.bracket(2, 2).unwrap();
    let obj = f.piece(2).unwrap().obj.clone();
    let c = verlie::verp::braiding(&obj, &obj);
    let sum = b.add(&c.then(&b.retarget(c.dst(), b.dst()).unwrap())).unwrap();
    assert!(sum.is_zero());
}

#[test]
fn jacobi_holds_on_three_generators() {
    for v in [simple(5, 2), simple(7, 3), VerObject::direct_sum(5, &[&simple(5, 1), &simple(5, 3)])] {
        let p = v.p();
        let mut f = GradedFreeLie::new(&v);
        let b11 = f.bracket(1, 1).unwrap().lift();
        let b21 = f.bracket(2, 1).unwrap().lift();
        let target = f.piece(3).unwrap().obj.clone();
        let gens = f.generators().clone();
        let k = gens.dim_upstairs();
        let w = b21.mul_kron_id(&b11, k);
        let dims = [k, k, k];
        let jac = w.add(&w.mul(&permutation_matrix(p, &dims, &[1, 2, 0]))).add(&w.mul(&permutation_matrix(
            p,
            &dims,
            &[2, 0, 1],
        )));
        let src = VerObject::tensor_all(p, &[&gens, &gens, &gens]);
        assert!(VerMorphism::semisimplify(&jac, &src, &target).is_zero(), "Jacobi on {v}");
    }
}

#[test]
fn piece_dimensions_are_bounded_by_the_tensor_power() {
    let v = VerObject::direct_sum(7, &[&simple(7, 2), &simple(7, 3)]);
    let mut f = GradedFreeLie::new(&v);
    for n in 1..=4 {
        let piece = f.piece(n).unwrap().obj.dim_upstairs();
        assert!(piece <= 5usize.pow(n as u32));
    }
}

#[test]
fn pieces_do_not_depend_on_the_order_of_generators() {
    let a = VerObject::direct_sum(5, &[&simple(5, 1), &simple(5, 2)]);
    let b = VerObject::direct_sum(5, &[&simple(5, 2), &simple(5, 1)]);
    assert_eq!(flie_multiplicities(&a, 4).unwrap(), flie_multiplicities(&b, 4).unwrap());
}

#[test]
fn free_lie_on_the_unit_is_one_dimensional() {
    let m = flie_multiplicities(&simple(5, 1), 3).unwrap();
    assert_eq!(m[1], vec![0; 4]);
    assert_eq!(m[2], vec![0; 4]);
}

#[test]
fn budget_is_enforced() {
    let mut f = GradedFreeLie::with_budget(&simple(5, 3), 100);
    assert!(f.piece(4).is_ok());
    assert!(matches!(f.piece(5), Err(verlie::Error::BudgetExceeded { needed: 243, budget: 100 })));
}

#[test]
fn upstairs_basis_is_a_stable_subspace_of_the_right_size() {
    for (v, n) in [(simple(5, 2), 3), (simple(5, 3), 3), (simple(7, 3), 2)] {
        let p = v.p();
        let mut f = GradedFreeLie::new(&v);
        let basis = f.upstairs_basis(n).unwrap();
        let obj = f.piece(n).unwrap().obj.clone();
        assert_eq!(basis.cols(), obj.dim_upstairs());
        assert_eq!(basis.rank(), basis.cols());
        let alpha = AlphaObject::simple(p, v.mult().iter().position(|&m| m > 0).unwrap() + 1);
        let parts: Vec<&AlphaObject> = (0..n).map(|_| &alpha).collect();
        let t = rep_alphap::tensor_all(p, &parts).t_dense();
        let both = Matrix::hstack(p, basis.rows(), &[&basis, &t.mul(&basis)]);
        assert_eq!(both.rank(), basis.cols());
    }
}

#[test]
fn derivation_extension_preserves_the_pieces() {
    // gl(L_2) acts on L_2 by the associative product.
    let p = 5;
    let l = simple(p, 2);
    let g = gl(&l);
    let mut up = Matrix::zeros(p, 2, 8);
    for a in 0..2 {
        for b in 0..2 {
            up.set(a, (a * 2 + b) * 2 + b, 1);
        }
    }
    let mut f = GradedFreeLie::new(&l);
    let v = f.generators().clone();
    let rho = VerMorphism::semisimplify(&up, &VerObject::tensor(g.obj(), &v), &v);
    for n in 1..=4 {
        assert!(f.action_on_piece(g.obj(), &rho, n).is_ok(), "degree {n}");
    }
}
