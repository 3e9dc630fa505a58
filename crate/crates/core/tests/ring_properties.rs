//! Randomized ring laws for Laurent polynomials.

use proptest::prelude::*;
use slnweb::ring::{exact_divide, qbinom, qint, symmetrize_correction, LaurentPoly};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..=6, -5i64..=5), 0..6).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn division_undoes_multiplication(q in poly(), r in poly()) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!(exact_divide(&(&q * &r), &q).unwrap(), r);
    }

    #[test]
    fn correction_splits_off_the_nonnegative_part(c in poly()) {
        // c - γ lies in v^{-1}Z[v^{-1}] and γ is bar-invariant
        let gamma = symmetrize_correction(&c);
        prop_assert!(gamma.is_bar_invariant());
        let rest = &c - &gamma;
        prop_assert!(rest.is_zero() || rest.in_negative_part(), "{} - {}", c, gamma);
    }

    #[test]
    fn binomials_are_bar_invariant(n in 0i64..12, k in 0i64..12) {
        let b = qbinom(n, k);
        prop_assert!(b.is_bar_invariant());
        prop_assert_eq!(b, qbinom(n, n - k));
    }

    #[test]
    fn quantum_integers_multiply_out(n in 1u32..10) {
        // [n] (v - v^{-1}) = v^n - v^{-n}
        let lhs = &qint(n) * &LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        prop_assert_eq!(lhs, LaurentPoly::from_terms([(n as i32, 1), (-(n as i32), -1)]));
    }
}

#[test]
fn division_by_a_non_divisor_fails() {
    let q = LaurentPoly::from_terms([(0, 2)]);
    let p = LaurentPoly::from_terms([(0, 1)]);
    assert!(exact_divide(&p, &q).is_err());
}
