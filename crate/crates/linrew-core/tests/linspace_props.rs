//! Vector-space laws for sparse combinations.

mod common;

use common::{random_vect, small_rat, Vect};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn vector_space_laws_hold_on_random_inputs() {
    let mut rng = StdRng::seed_from_u64(201);
    for _ in 0..1000 {
        let basis_size = rng.gen_range(1..=6);
        let u = random_vect(&mut rng, basis_size);
        let v = random_vect(&mut rng, basis_size);
        let w = random_vect(&mut rng, basis_size);
        let lambda = small_rat(&mut rng);
        let mu = small_rat(&mut rng);
        // Associativity and commutativity of addition.
        assert_eq!(u.add(&v).add(&w), u.add(&v.add(&w)));
        assert_eq!(u.add(&v), v.add(&u));
        // Bilinearity of add_scaled.
        assert_eq!(
            u.add_scaled(&lambda, &v.add(&w)),
            u.add_scaled(&lambda, &v).add_scaled(&lambda, &w)
        );
        assert_eq!(
            u.add_scaled(&(lambda.clone() + &mu), &v),
            u.add_scaled(&lambda, &v).add_scaled(&mu, &v)
        );
        // Neutral element and inverses.
        assert_eq!(u.add(&Vect::zero()), u);
        assert!(u.sub(&u).is_zero());
    }
}

#[test]
fn canonical_sparse_form_never_stores_zero() {
    let mut rng = StdRng::seed_from_u64(202);
    for _ in 0..500 {
        let u = random_vect(&mut rng, 5);
        let v = random_vect(&mut rng, 5);
        let lambda = small_rat(&mut rng);
        let combined = u.add_scaled(&lambda, &v);
        for (_, coeff) in combined.iter() {
            assert!(!num_traits::Zero::is_zero(coeff));
        }
        // Support is exactly the key set.
        assert_eq!(combined.support().count(), combined.support_len());
    }
}
