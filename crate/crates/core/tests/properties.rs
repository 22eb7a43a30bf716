use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use leibniz_core::catalog::{suite_for, Fingerprint};
use leibniz_core::cohomology::{cohomology, cohomology_dims, differential, Cochain, Theory};
use leibniz_core::derivations::{derivation_space, is_derivation, LinearMap};
use leibniz_core::gradings::{max_length_search, verify_gradation};
use leibniz_core::{Algebra, Matrix, Rational};

fn small_suite() -> Vec<Algebra> {
    suite_for(&[5])
        .into_iter()
        .map(|e| e.id.build().unwrap())
        .filter(|a| a.dim() <= 7)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fingerprint_survives_basis_change(idx in 0usize..64, seed in any::<u64>()) {
        let suite = small_suite();
        let a = &suite[idx % suite.len()];
        let g = Matrix::random_invertible(a.dim(), 4, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = a.change_basis(&g).unwrap();
        prop_assert_eq!(Fingerprint::compute(a), Fingerprint::compute(&b));
        prop_assert_eq!(a.nil_index(), b.nil_index());
        prop_assert_eq!(
            cohomology_dims(Theory::Leibniz, a, 1).unwrap(),
            cohomology_dims(Theory::Leibniz, &b, 1).unwrap()
        );
    }

    #[test]
    fn d_squared_is_zero(idx in 0usize..64, coeffs in proptest::collection::vec(-3i64..4, 49)) {
        let suite = small_suite();
        let a = &suite[idx % suite.len()];
        let n = a.dim();
        let c: Vec<Rational> = coeffs.iter().cycle().take(n * n).map(|&x| Rational::from_integer(x)).collect();
        let phi = Cochain::new(1, n, n, c, false).unwrap();
        let dd = differential(Theory::Leibniz, a, &differential(Theory::Leibniz, a, &phi).unwrap()).unwrap();
        prop_assert!(dd.is_zero());
        if a.is_lie() {
            let dd = differential(Theory::Lie, a, &differential(Theory::Lie, a, &phi).unwrap()).unwrap();
            prop_assert!(dd.is_zero());
        }
    }

    #[test]
    fn derivations_transport(idx in 0usize..64, seed in any::<u64>()) {
        let suite = small_suite();
        let a = &suite[idx % suite.len()];
        let g = Matrix::random_invertible(a.dim(), 2, &mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.inverse().unwrap();
        let b = a.change_basis(&g).unwrap();
        for d in derivation_space(a).basis {
            let moved = LinearMap::new(g.mul(d.matrix()).unwrap().mul(&h).unwrap()).unwrap();
            prop_assert!(is_derivation(&b, &moved));
        }
    }
}

#[test]
fn two_cocycles_transport_to_cocycles() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in small_suite().iter().filter(|a| a.is_lie()).take(6) {
        let g = Matrix::random_invertible(a.dim(), 3, &mut rng);
        let b = a.change_basis(&g).unwrap();
        let r = cohomology(Theory::Lie, a, 2).unwrap();
        for rep in &r.representatives {
            let moved = rep.transport(&g).unwrap();
            assert!(differential(Theory::Lie, &b, &moved).unwrap().is_zero());
        }
    }
}

#[test]
fn found_gradations_scale() {
    for a in small_suite().iter().filter(|a| a.is_nilpotent()) {
        let g = max_length_search(a, 2 * a.dim() as i64).unwrap();
        for c in 2..4 {
            let s = g.scaled(c);
            assert!(verify_gradation(a, s.weights()));
            assert_eq!(s.length().0 as i64, (g.length().0 as i64 - 1) * c + 1);
        }
    }
}
