//! The Verlinde category: fusion, negligible objects, braiding and the
//! semisimplification functor.

use proptest::prelude::*;
use verlie::ff_linalg::Matrix;
use verlie::rep_alphap::{self, AlphaObject};
use verlie::verp::{braiding, format_mult, fusion_rule, fusion_upstairs, self_braiding_signs, VerMorphism, VerObject};

/// L_i ⊗ L_j = ⊕ L_k for |i − j| < k ≤ min(i + j − 1, 2p − i − j − 1),
/// k ≡ i + j − 1 (mod 2).
fn verlinde(p: usize, i: usize, j: usize) -> Vec<usize> {
    let mut m = vec![0; p - 1];
    let top = (i + j - 1).min(2 * p - i - j - 1);
    let mut k = i.abs_diff(j) + 1;
    while k <= top {
        m[k - 1] += 1;
        k += 2;
    }
    m
}

#[test]
fn l_p_is_negligible() {
    for p in [3u32, 5, 7] {
        let lp = VerObject::from_alpha(AlphaObject::simple(p, p as usize)).unwrap();
        assert!(lp.is_zero());
        assert_eq!(lp.negligible_count(), 1);
    }
}

#[test]
fn unit_is_neutral_and_top_simple_is_invertible() {
    let p = 7;
    for i in 1..p as usize {
        assert_eq!(fusion_rule(p, 1, i).unwrap(), verlinde(7, 1, i));
        let mut expected = vec![0; 6];
        expected[p as usize - i - 1] = 1;
        assert_eq!(fusion_rule(p, p as usize - 1, i).unwrap(), expected);
    }
}

#[test]
fn small_products() {
    assert_eq!(format_mult(&fusion_rule(5, 2, 2).unwrap()), "L1 + L3");
    assert_eq!(format_mult(&fusion_rule(5, 3, 3).unwrap()), "L1 + L3");
    assert_eq!(format_mult(&fusion_rule(7, 3, 4).unwrap()), "L2 + L4 + L6");
    assert_eq!(fusion_upstairs(5, 3, 3).unwrap(), (vec![1, 0, 1, 0], 1));
}

#[test]
fn self_braiding_on_l2_and_l3() {
    assert_eq!(self_braiding_signs(5, 2).unwrap(), vec![-1, 1]);
    assert_eq!(self_braiding_signs(5, 3).unwrap(), vec![1, -1]);
}

#[test]
fn braiding_squares_to_identity() {
    let p = 5;
    let a = VerObject::simple(p, 2);
    let b = VerObject::simple(p, 3);
    let c = braiding(&a, &b);
    let back = braiding(&b, &a).compose(&c).unwrap();
    let ab = VerObject::tensor(&a, &b);
    assert_eq!(back.lift().shape(), (6, 6));
    assert!(back.sub(&VerMorphism::identity(&ab)).unwrap().is_zero());
}

#[test]
fn nilpotent_operator_is_semisimplified_to_zero() {
    let p = 5;
    let l2 = VerObject::simple(p, 2);
    let t = l2.t().to_dense();
    assert!(VerMorphism::semisimplify(&t, &l2, &l2).is_zero());
    let id = VerMorphism::semisimplify(&Matrix::identity(p, 2), &l2, &l2);
    assert!(id.is_iso());
}

#[test]
fn kernel_and_image_of_the_evaluation() {
    let p = 5;
    let v = VerObject::simple(p, 3);
    let ev = verlie::verp::ev_right(&v);
    let (k, incl) = ev.kernel();
    let (img, _, _) = ev.image();
    assert_eq!(format_mult(img.mult()), "L1");
    assert_eq!(format_mult(k.mult()), "L3");
    assert!(incl.is_mono());
}

proptest! {
    #[test]
    fn upstairs_fusion_matches_closed_form(p in proptest::sample::select(vec![3u32, 5, 7, 11, 13]), i in 1usize..13, j in 1usize..13) {
        let (i, j) = (1 + i % (p as usize - 1), 1 + j % (p as usize - 1));
        let (up, negligible) = fusion_upstairs(p, i, j).unwrap();
        prop_assert_eq!(&up, &verlinde(p as usize, i, j));
        let covered: usize = up.iter().enumerate().map(|(k, m)| (k + 1) * m).sum();
        prop_assert_eq!(covered + p as usize * negligible, i * j);
    }

    #[test]
    fn fusion_is_commutative_and_associative(i in 1usize..7, j in 1usize..7, k in 1usize..7) {
        let p = 7;
        prop_assert_eq!(fusion_rule(p, i, j).unwrap(), fusion_rule(p, j, i).unwrap());
        let (a, b, c) = (VerObject::simple(p, i), VerObject::simple(p, j), VerObject::simple(p, k));
        let left = VerObject::tensor(&VerObject::tensor(&a, &b), &c);
        let right = VerObject::tensor(&a, &VerObject::tensor(&b, &c));
        prop_assert_eq!(left.mult(), right.mult());
    }

    #[test]
    fn semisimplification_is_functorial(i in 1usize..5, j in 1usize..5, seed in 0u32..1000) {
        let p = 5;
        let a = VerObject::simple(p, i);
        let b = VerObject::tensor(&VerObject::simple(p, j), &VerObject::simple(p, 2));
        // t-equivariant maps: polynomials in t composed with any equivariant map.
        let ab = VerObject::tensor(&a, &b);
        let t = ab.t().to_dense();
        let mut f = Matrix::identity(p, ab.dim_upstairs());
        let mut g = Matrix::identity(p, ab.dim_upstairs());
        let mut power = Matrix::identity(p, ab.dim_upstairs());
        for r in 0..3u32 {
            power = power.mul(&t);
            f = f.add(&power.scale((seed + r) % p));
            g = g.add(&power.scale((seed / 5 + 2 * r) % p));
        }
        prop_assert!(rep_alphap::check_equivariance(ab.alpha(), ab.alpha(), &f));
        let sf = VerMorphism::semisimplify(&f, &ab, &ab);
        let sg = VerMorphism::semisimplify(&g, &ab, &ab);
        let sfg = VerMorphism::semisimplify(&f.mul(&g), &ab, &ab);
        prop_assert!(sf.compose(&sg).unwrap().sub(&sfg).unwrap().is_zero());
    }
}
