//! Property tests for the polynomial ring.

use poly_engine::{elementary_symmetric, rat_int, Monomial, Polynomial, Rational};
use proptest::prelude::*;

fn arb_poly(nvars: usize, max_terms: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (
        proptest::collection::vec(0..=max_deg, nvars),
        -20i64..=20i64,
    );
    proptest::collection::vec(term, 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(
            nvars,
            terms.into_iter().filter_map(|(exps, c)| {
                let total: u32 = exps.iter().sum();
                if total > max_deg || c == 0 {
                    None
                } else {
                    Some((Monomial::from_exps(&exps), rat_int(c)))
                }
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((f, g, h) in (arb_poly(3, 5, 4), arb_poly(3, 5, 4), arb_poly(3, 5, 4))) {
        // Associativity and commutativity of both operations, distributivity.
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.sub(&f), Polynomial::zero(3));
        prop_assert_eq!(f.mul(&Polynomial::one(3)), f);
    }

    #[test]
    fn exact_division_inverts_multiplication(
        (f, g) in (arb_poly(3, 4, 3), arb_poly(3, 4, 3))
    ) {
        prop_assume!(!g.is_zero());
        let prod = f.mul(&g);
        prop_assert_eq!(prod.exact_div(&g).unwrap(), f);
    }

    #[test]
    fn display_parse_round_trip(f in arb_poly(4, 6, 5)) {
        let s = f.to_display_string();
        let back = poly_engine::parse_polynomial(&s, 4).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn newton_identities_cross_check() {
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i with p_i the power sums,
    // checked for l <= 7.
    for n in 1..=7usize {
        let power_sum = |i: u32| {
            let mut p = Polynomial::zero(n);
            for v in 0..n {
                p = p.add(&Polynomial::var(v, n).pow(i));
            }
            p
        };
        for k in 1..=n {
            let mut rhs = Polynomial::zero(n);
            for i in 1..=k {
                let term = elementary_symmetric(k - i, &[], n)
                    .unwrap()
                    .mul(&power_sum(i as u32));
                if i % 2 == 1 {
                    rhs = rhs.add(&term);
                } else {
                    rhs = rhs.sub(&term);
                }
            }
            let lhs = elementary_symmetric(k, &[], n)
                .unwrap()
                .scale(&Rational::from(num_bigint::BigInt::from(k)));
            assert_eq!(lhs, rhs, "Newton identity failed at n = {n}, k = {k}");
        }
    }
}
