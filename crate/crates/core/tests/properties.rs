use overdet::acceptance::random_column;
use overdet::groebner::{buchberger, krull_dim, syzygies, Ideal, ModuleOrder, MonomialOrder};
use overdet::oracle::{in_span, kernel_slice};
use overdet::poly::rat;
use overdet::sampling::{rng_for, Stream};
use overdet::{emit, parse, GaussPoly, GaussRational, Monomial, SystemSpec};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(p, q, im)| GaussRational::new(rat(p, q), rat(im, 1)))
}

fn poly(n: usize, max_deg: u32) -> impl Strategy<Value = GaussPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), coeff()), 0..5)
        .prop_map(move |terms| GaussPoly::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial(e), c))))
}

fn three(n: usize) -> impl Strategy<Value = (GaussPoly, GaussPoly, GaussPoly)> {
    (poly(n, 3), poly(n, 3), poly(n, 3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ring_axioms((a, b, c) in three(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn conjugation_is_multiplicative((a, b, _) in three(2)) {
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn text_round_trip(rows in prop::collection::vec(prop::collection::vec(poly(3, 3), 2), 1..4)) {
        let spec = SystemSpec::new(Some("t".into()), 3, 2, rows, None, None).unwrap();
        prop_assert_eq!(parse(&emit(&spec)).unwrap(), spec);
    }

    #[test]
    fn generators_reduce_to_zero(gens in prop::collection::vec(poly(3, 2), 1..4)) {
        let gens: Vec<Vec<GaussPoly>> = gens.into_iter().map(|g| vec![g]).collect();
        let gb = buchberger(&gens, &ModuleOrder::ideal(MonomialOrder::Grevlex));
        for g in &gens {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn dimension_does_not_depend_on_order(gens in prop::collection::vec(poly(3, 2), 1..4)) {
        let ideal = Ideal::new(3, gens);
        prop_assert_eq!(krull_dim(&ideal, MonomialOrder::Grevlex), krull_dim(&ideal, MonomialOrder::Lex));
    }

    #[test]
    fn syzygies_span_the_graded_kernel(seed in any::<u64>()) {
        let m = random_column(&mut rng_for(seed, Stream::SelfTest));
        let q = syzygies(&m).unwrap();
        if q.nrows() > 0 {
            prop_assert!(q.mul(&m).unwrap().is_zero());
        }
        for delta in 0..=4 {
            for z in kernel_slice(&m, delta) {
                prop_assert!(q.nrows() > 0 && in_span(&q, &z, delta));
            }
        }
    }
}
