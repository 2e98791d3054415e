//! Rep(α_p): equivariant maps, structural morphisms and their images in Ver_p.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use verlie::ff_linalg::Matrix;
use verlie::rep_alphap::{self, check_equivariance, AlphaObject};
use verlie::verp::{VerMorphism, VerObject};

/// A uniformly random t-equivariant map A → B, drawn from the kernel of
/// M ↦ t_B·M − M·t_A.
fn random_hom(a: &AlphaObject, b: &AlphaObject, rng: &mut StdRng) -> Matrix {
    let p = a.p();
    let (m, n) = (b.dim(), a.dim());
    let (ta, tb) = (a.t_dense(), b.t_dense());
    let op = Matrix::from_fn(p, m * n, m * n, |row, col| {
        let (i, j) = (row / n, row % n);
        let (k, l) = (col / n, col % n);
        let mut v = 0;
        if l == j {
            v = tb.get(i, k);
        }
        if k == i {
            v = verlie::ff_linalg::fp::sub(v, ta.get(l, j), p);
        }
        v
    });
    let basis = op.kernel();
    let coeffs: Vec<u32> = (0..basis.cols()).map(|_| rng.gen_range(0..p)).collect();
    let flat = basis.apply(&coeffs);
    Matrix::from_fn(p, m, n, |i, j| flat[i * n + j])
}

#[test]
fn random_equivariant_maps_compose_functorially() {
    let mut rng = StdRng::seed_from_u64(7);
    let p = 5;
    for _ in 0..40 {
        let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=p as usize)).collect();
        let objs: Vec<AlphaObject> = dims
            .iter()
            .map(|&i| AlphaObject::direct_sum(p, &[&AlphaObject::simple(p, i), &AlphaObject::simple(p, 2)]))
            .collect();
        let f = random_hom(&objs[0], &objs[1], &mut rng);
        let g = random_hom(&objs[1], &objs[2], &mut rng);
        assert!(check_equivariance(&objs[0], &objs[1], &f));
        assert!(check_equivariance(&objs[1], &objs[2], &g));
        let vs: Vec<_> = objs.iter().map(|a| std::sync::Arc::new(VerObject::from_alpha(a.clone()).unwrap())).collect();
        let sf = VerMorphism::semisimplify(&f, &vs[0], &vs[1]);
        let sg = VerMorphism::semisimplify(&g, &vs[1], &vs[2]);
        let sgf = VerMorphism::semisimplify(&g.mul(&f), &vs[0], &vs[2]);
        assert!(sg.compose(&sf).unwrap().sub(&sgf).unwrap().is_zero());
    }
}

#[test]
fn maps_between_distinct_simples_are_negligible() {
    let mut rng = StdRng::seed_from_u64(11);
    let p = 7;
    for i in 1..p as usize {
        for j in 1..p as usize {
            if i == j {
                continue;
            }
            let (a, b) = (AlphaObject::simple(p, i), AlphaObject::simple(p, j));
            let f = random_hom(&a, &b, &mut rng);
            let s = VerMorphism::semisimplify(&f, &VerObject::simple(p, i), &VerObject::simple(p, j));
            assert!(s.is_zero());
        }
    }
}

#[test]
fn evaluation_after_coevaluation_is_the_dimension() {
    for p in [5u32, 7] {
        for i in 1..=p as usize {
            let a = AlphaObject::simple(p, i);
            let trace = rep_alphap::ev_right(&a).mul(&rep_alphap::coev_left(&a));
            assert_eq!(trace.get(0, 0), (i as u32) % p);
        }
    }
}

#[test]
fn nilpotency_is_enforced() {
    let t = Matrix::from_rows(3, &[vec![1, 0], vec![0, 0]]);
    assert!(AlphaObject::from_matrix(&t).is_err());
    let t = Matrix::from_rows(3, &[vec![0, 0], vec![1, 0]]);
    assert_eq!(AlphaObject::from_matrix(&t).unwrap().dim(), 2);
}
