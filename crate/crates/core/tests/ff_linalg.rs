//! Linear algebra over F_p: field arithmetic, elimination and Jordan types.

use proptest::prelude::*;
use verlie::ff_linalg::{fp, nilpotent_jordan, Matrix, SparseMatrix};

const PRIMES: [u32; 4] = [3, 5, 7, 11];

fn matrix(p: u32, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(0..p, rows * cols)
        .prop_map(move |v| Matrix::from_fn(p, rows, cols, |i, j| v[i * cols + j]))
}

fn prime_and_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::sample::select(PRIMES.to_vec()).prop_flat_map(move |p| matrix(p, rows, cols))
}

#[test]
fn inverses_in_small_fields() {
    for p in PRIMES {
        for a in 1..p {
            assert_eq!(fp::mul(a, fp::inv(a, p), p), 1);
        }
    }
    assert_eq!(fp::to_signed(4, 5), -1);
    assert_eq!(fp::from_i64(-3, 7), 4);
}

#[test]
fn singular_matrix_has_no_inverse() {
    let m = Matrix::from_rows(5, &[vec![1, 2], vec![2, 4]]);
    assert_eq!(m.rank(), 1);
    assert!(m.inverse().is_none());
    assert_eq!(m.kernel().cols(), 1);
}

#[test]
fn jordan_block_of_a_single_chain() {
    let t = SparseMatrix::from_triples(7, 4, 4, (1..4).map(|r| (r, r - 1, 1))).to_dense();
    assert_eq!(nilpotent_jordan(&t).unwrap().partition(), vec![4]);
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in prime_and_matrix(4, 6)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.cols(), 6);
        prop_assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn inverse_is_two_sided(m in prime_and_matrix(4, 4)) {
        if let Some(inv) = m.inverse() {
            prop_assert!(m.mul(&inv).is_identity());
            prop_assert!(inv.mul(&m).is_identity());
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn kron_mixed_product((a, b, c, d) in (matrix(5, 2, 3), matrix(5, 2, 2), matrix(5, 3, 2), matrix(5, 2, 1))) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn fused_kron_products_match((f, d) in (matrix(7, 2, 6), matrix(7, 3, 2))) {
        let id2 = Matrix::identity(7, 2);
        prop_assert_eq!(f.mul_id_kron(&d), f.mul(&id2.kron(&d)));
        let g = Matrix::from_fn(7, 2, 6, |i, j| f.get(i, j));
        prop_assert_eq!(g.mul_kron_id(&d, 2), g.mul(&d.kron(&id2)));
    }

    #[test]
    fn field_axioms(p in proptest::sample::select(PRIMES.to_vec()), a in 0u32..11, b in 0u32..11, c in 0u32..11) {
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(fp::mul(a, fp::add(b, c, p), p), fp::add(fp::mul(a, b, p), fp::mul(a, c, p), p));
        prop_assert_eq!(fp::add(fp::sub(a, b, p), b, p), a);
        prop_assert_eq!(fp::add(a, fp::neg(a, p), p), 0);
    }

    #[test]
    fn jordan_partition_counts_kernel_dimensions(parts in proptest::collection::vec(1usize..=5, 1..4)) {
        let p = 5;
        let n: usize = parts.iter().sum();
        let mut triples = Vec::new();
        let mut start = 0;
        for &len in &parts {
            for r in 1..len {
                triples.push((start + r, start + r - 1, 1));
            }
            start += len;
        }
        let t = SparseMatrix::from_triples(p, n, n, triples).to_dense();
        let mut expected = parts.clone();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(nilpotent_jordan(&t).unwrap().partition(), expected);
    }
}
