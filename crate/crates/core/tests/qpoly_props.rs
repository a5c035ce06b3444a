mod common;

use common::{d_add, d_mono, d_mul, dense, qbinom_count, qint_sum};
use moykit::qpoly::{bar, qbinom, qint, LaurentPoly};
use proptest::prelude::*;

proptest! {
    #[test]
    fn binomial_symmetry_and_bar(j in 0i64..=8, k in 0i64..=8) {
        prop_assume!(k <= j);
        let b = qbinom(j, k);
        prop_assert_eq!(&b, &qbinom(j, j - k));
        prop_assert_eq!(bar(&b), b.clone());
        prop_assert_eq!(dense(&b), qbinom_count(j, k));
    }

    #[test]
    fn pascal_identity(j in 1i64..=8, k in 0i64..=8) {
        prop_assume!(k <= j);
        // [j k] = q^k [j−1 k] + q^{k−j} [j−1 k−1], expanded densely
        let lhs = dense(&qbinom(j, k));
        let rhs = d_add(
            &d_mul(&d_mono(1, 2 * k), &qbinom_count(j - 1, k)),
            &d_mul(&d_mono(1, 2 * (k - j)), &qbinom_count(j - 1, k - 1)),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_integers(n in 0u32..=12) {
        prop_assert_eq!(dense(&qint(n)), qint_sum(n));
    }

    #[test]
    fn triples_round_trip(terms in prop::collection::vec((-20i64..20, -50i64..50), 0..8)) {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        let back = LaurentPoly::from_triples(p.to_triples()).unwrap();
        prop_assert_eq!(&back, &p);
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&json).unwrap(), p);
    }
}
