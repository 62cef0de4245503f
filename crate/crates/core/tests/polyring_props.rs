use lisword_core::polyring::{gaussian_pairing, monomial_norm, ExponentVector, TPoly, VSeries};
use lisword_core::rational::{int, rat, Rational};
use num_traits::Zero;
use proptest::prelude::*;

const NVARS: usize = 3;

fn arb_exponents() -> impl Strategy<Value = ExponentVector> {
    prop::collection::vec(0u32..4, NVARS).prop_map(ExponentVector::new)
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn arb_poly() -> impl Strategy<Value = TPoly> {
    prop::collection::vec((arb_exponents(), arb_rational()), 0..5)
        .prop_map(|terms| TPoly::from_terms(NVARS, terms).unwrap())
}

fn arb_homogeneous(degree: usize) -> impl Strategy<Value = TPoly> {
    prop::collection::vec((0..=degree, 0..=degree / 2, arb_rational()), 0..4).prop_map(move |raw| {
        let terms = raw.into_iter().filter_map(|(a, b, c)| {
            // a + 2b + 3c' = degree
            let used = a + 2 * b;
            (used <= degree && (degree - used).is_multiple_of(3)).then(|| {
                (
                    ExponentVector::new(vec![a as u32, b as u32, ((degree - used) / 3) as u32]),
                    c,
                )
            })
        });
        TPoly::from_terms(NVARS, terms).unwrap()
    })
}

proptest! {
    #[test]
    fn association_order_does_not_matter(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&(&a - &b) - &(&a - &b)).is_zero());
    }

    #[test]
    fn pairing_orthogonality(k in arb_exponents(), l in arb_exponents()) {
        let p = TPoly::monomial(k.clone(), int(1));
        let q = TPoly::monomial(l.clone(), int(1));
        let expected = if k == l {
            Rational::from_integer(monomial_norm(&k).into())
        } else {
            Rational::zero()
        };
        prop_assert_eq!(gaussian_pairing(&p, &q).unwrap(), expected);
    }

    #[test]
    fn pairing_bilinear(p in arb_poly(), q in arb_poly(), s in arb_poly(), a in arb_rational(), b in arb_rational()) {
        let combo = &p.scale(&a) + &q.scale(&b);
        let lhs = gaussian_pairing(&combo, &s).unwrap();
        let rhs = a * gaussian_pairing(&p, &s).unwrap() + b * gaussian_pairing(&q, &s).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(gaussian_pairing(&p, &s).unwrap(), gaussian_pairing(&s, &p).unwrap());
    }

    #[test]
    fn graded_orthogonality((p, q) in (0usize..8, 0usize..8)
        .prop_filter("degrees differ", |(a, b)| a != b)
        .prop_flat_map(|(a, b)| (arb_homogeneous(a), arb_homogeneous(b))))
    {
        prop_assert!(gaussian_pairing(&p, &q).unwrap().is_zero());
    }

    #[test]
    fn truncated_products_are_consistent(
        a in prop::collection::vec(arb_poly(), 0..5),
        b in prop::collection::vec(arb_poly(), 0..5),
        low in 0usize..4,
        extra in 1usize..3,
    ) {
        let high = low + extra;
        let sa = VSeries::from_coeffs(NVARS, 6, a);
        let sb = VSeries::from_coeffs(NVARS, 6, b);
        let short = sa.mul(&sb, low).unwrap();
        let long = sa.mul(&sb, high).unwrap();
        for k in 0..=low {
            prop_assert_eq!(short.coefficient(k).unwrap(), long.coefficient(k).unwrap());
        }
    }
}

#[test]
fn thousand_random_monomial_pairs() {
    use proptest::test_runner::{Config, TestRunner};
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        ..Config::default()
    });
    runner
        .run(&(arb_exponents(), arb_exponents()), |(k, l)| {
            let p = TPoly::monomial(k.clone(), int(1));
            let q = TPoly::monomial(l.clone(), int(1));
            let value = gaussian_pairing(&p, &q).unwrap();
            prop_assert_eq!(value.is_zero(), k != l);
            Ok(())
        })
        .unwrap();
}
