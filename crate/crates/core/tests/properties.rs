//! Randomized algebraic invariants checked with proptest.

use finspinor::herm::{form_tensor, pack, unpack};
use finspinor::spinor::scalar_n_product;
use finspinor::tensor::Valency;
use finspinor::{
    random_sl, BasisChange, HermBasis64, Matrix64, SpinTensor64, Spinor64, Tolerance64, C64,
};
use proptest::collection::vec;
use proptest::prelude::*;

fn c64(range: f64) -> impl Strategy<Value = C64> {
    (-range..range, -range..range).prop_map(|(re, im)| C64::new(re, im))
}

fn square(n: usize) -> impl Strategy<Value = Matrix64> {
    vec(c64(1.0), n * n).prop_map(move |d| Matrix64::from_fn(n, n, |i, j| d[i * n + j]))
}

fn spinor(n: usize) -> impl Strategy<Value = Spinor64> {
    vec(c64(1.0), n).prop_map(|d| Spinor64::new(d).unwrap())
}

fn spinor_list(n: usize) -> impl Strategy<Value = Vec<Spinor64>> {
    vec(spinor(n), n)
}

fn sl_change(n: usize) -> impl Strategy<Value = BasisChange<f64>> {
    any::<u64>().prop_map(move |seed| {
        BasisChange::from_basis_matrix(random_sl(n, seed).unwrap(), &Tolerance64::default())
            .unwrap()
    })
}

proptest! {
    #[test]
    fn determinant_is_multiplicative(
        (n, a, b) in (2usize..=5).prop_flat_map(|n| (Just(n), square(n), square(n)))
    ) {
        prop_assert_eq!(a.rows(), n);
        let lhs = (&a * &b).det().unwrap();
        let rhs = a.det().unwrap() * b.det().unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-8 * (1.0 + rhs.norm()));
    }

    #[test]
    fn adjoint_reverses_products_and_is_involutive(
        (a, b) in (2usize..=4).prop_flat_map(|n| (square(n), square(n)))
    ) {
        prop_assert!(a.hermitian_adjoint().hermitian_adjoint().max_diff(&a) == 0.0);
        let lhs = (&a * &b).hermitian_adjoint();
        let rhs = &b.hermitian_adjoint() * &a.hermitian_adjoint();
        prop_assert!(lhs.max_diff(&rhs) <= 1e-13);
    }

    #[test]
    fn scalar_product_is_antisymmetric(
        (k, spinors) in (2usize..=4)
            .prop_flat_map(|n| ((0..n - 1), spinor_list(n)))
    ) {
        let p = scalar_n_product(&spinors).unwrap();
        let mut swapped = spinors;
        swapped.swap(k, k + 1);
        let q = scalar_n_product(&swapped).unwrap();
        prop_assert!((p + q).norm() <= 1e-10 * (1.0 + p.norm()));
    }

    #[test]
    fn scalar_product_is_linear_in_the_first_slot(
        (alpha, beta, x, y, mut rest) in (2usize..=4).prop_flat_map(|n| {
            (c64(1.0), c64(1.0), spinor(n), spinor(n), spinor_list(n))
        })
    ) {
        let combined = Spinor64::new(
            (0..x.n())
                .map(|i| alpha * x.component(i) + beta * y.component(i))
                .collect(),
        ).unwrap();
        rest[0] = combined;
        let lhs = scalar_n_product(&rest).unwrap();
        let with_x = {
            let mut args = rest.clone();
            args[0] = x;
            scalar_n_product(&args).unwrap()
        };
        let with_y = {
            let mut args = rest.clone();
            args[0] = y;
            scalar_n_product(&args).unwrap()
        };
        let rhs = alpha * with_x + beta * with_y;
        prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
    }

    #[test]
    fn scalar_product_is_invariant_under_basis_change(
        (spinors, change) in (2usize..=4)
            .prop_flat_map(|n| (spinor_list(n), sl_change(n)))
    ) {
        let before = scalar_n_product(&spinors).unwrap();
        let moved: Vec<_> = spinors
            .iter()
            .map(|s| {
                let t = SpinTensor64::from_spinor(s).unwrap().transform(&change).unwrap();
                Spinor64::new((0..s.n()).map(|i| t.get(&[i]).unwrap()).collect()).unwrap()
            })
            .collect();
        let after = scalar_n_product(&moved).unwrap();
        prop_assert!((before - after).norm() <= 1e-8 * (1.0 + before.norm()));
    }

    #[test]
    fn pack_unpack_round_trips_hermitian_matrices(
        (n, m) in (2usize..=5).prop_flat_map(|n| (Just(n), square(n)))
    ) {
        let herm = (&m + &m.hermitian_adjoint()).scaled(C64::new(0.5, 0.0));
        let basis = HermBasis64::standard(n).unwrap();
        let coords = pack(&herm, &basis, &Tolerance64::default()).unwrap();
        let back = unpack(&coords, &basis).unwrap();
        prop_assert!(back.max_diff(&herm) <= 1e-12);
    }

    #[test]
    fn form_is_homogeneous_of_degree_n(
        (n, coords, t) in (2usize..=4)
            .prop_flat_map(|n| (Just(n), vec(-1.0..1.0f64, n * n), -2.0..2.0f64))
    ) {
        let basis = HermBasis64::standard(n).unwrap();
        let g = form_tensor(&basis).unwrap();
        let scaled: Vec<f64> = coords.iter().map(|x| t * x).collect();
        let lhs = g.evaluate(&scaled).unwrap();
        let rhs = t.powi(n as i32) * g.evaluate(&coords).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs.abs()));
    }

    #[test]
    fn transform_distributes_over_tensor_product(
        (n, da, db, change) in (2usize..=3).prop_flat_map(|n| {
            (Just(n), vec(c64(1.0), n * n), vec(c64(1.0), n), sl_change(n))
        })
    ) {
        let a = SpinTensor64::from_components(n, Valency::new(1, 0, 1, 0), da).unwrap();
        let b = SpinTensor64::from_components(n, Valency::new(0, 1, 0, 0), db).unwrap();
        let joint = a.tensor_product(&b).unwrap().transform(&change).unwrap();
        let split = a
            .transform(&change)
            .unwrap()
            .tensor_product(&b.transform(&change).unwrap())
            .unwrap();
        let scale = joint.max_norm().max(1.0);
        prop_assert!(joint.max_diff(&split) <= 1e-9 * scale);
    }
}
