use num_bigint::BigInt;
use proptest::prelude::*;

use qshuffle::bilinear_form::BilinearForm;
use qshuffle::cartan::{CartanDatum, Word};
use qshuffle::free_algebra::{concat_mul, coproduct_r, tensor_mul, word_vector, GradedVector};
use qshuffle::scalar::{LaurentPoly, Monomial, ScalarFraction};
use qshuffle::shuffle_image::{iota, shuffle_mul, IotaMode};

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-3i32..=3, 3), -4i64..=4), 0..5).prop_map(|ts| {
        LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn word(rank: u8, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..rank, 0..=max).prop_map(Word)
}

fn datum(name: &str) -> CartanDatum {
    CartanDatum::preset(name).unwrap()
}

fn rank2() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec!["A2", "B2", "G2"])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &LaurentPoly::one(), a);
    }

    #[test]
    fn fraction_field_axioms(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = ScalarFraction::new(a.clone(), b.clone()).unwrap();
        let y = ScalarFraction::new(c.clone(), d.clone()).unwrap();
        let sum = ScalarFraction::new(&(&a * &d) + &(&b * &c), &b * &d).unwrap();
        prop_assert_eq!(&x + &y, sum);
        prop_assert_eq!(&x * &y, ScalarFraction::new(&a * &c, &b * &d).unwrap());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn coproduct_is_multiplicative(name in rank2(), u in word(2, 3), w in word(2, 3)) {
        let d = datum(name);
        let (x, y) = (word_vector(u), word_vector(w));
        let lhs = coproduct_r(&d, &concat_mul(&x, &y));
        let rhs = tensor_mul(&d, &coproduct_r(&d, &x), &coproduct_r(&d, &y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_symmetric_and_recursions_agree(name in rank2(), u in word(2, 4), w in word(2, 4)) {
        let f = BilinearForm::new(&datum(name));
        let (x, y) = (word_vector(u), word_vector(w));
        prop_assert_eq!(f.pair(&x, &y), f.pair(&y, &x));
        prop_assert_eq!(f.pair(&x, &y), f.pair_mirror(&x, &y));
    }

    #[test]
    fn iota_is_an_algebra_map(name in rank2(), u in word(2, 3), w in word(2, 2), normalized in any::<bool>()) {
        let d = datum(name);
        let f = BilinearForm::new(&d);
        let mode = if normalized { IotaMode::Normalized } else { IotaMode::Plain };
        let (x, y) = (word_vector(u), word_vector(w));
        let lhs = iota(&f, &concat_mul(&x, &y), mode).unwrap();
        let rhs = shuffle_mul(&d, &iota(&f, &x, mode).unwrap(), &iota(&f, &y, mode).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_bilinear(u in word(2, 3), w in word(2, 3), t in word(2, 3), k in -3i64..=3) {
        let f = BilinearForm::new(&datum("B2"));
        let c = ScalarFraction::from_int(k);
        let mut xy: GradedVector = word_vector(u.clone());
        xy.add_scaled(&word_vector(w.clone()), &c);
        let z = word_vector(t);
        let lhs = f.pair(&xy, &z);
        let rhs = &f.pair(&word_vector(u), &z) + &(&c * &f.pair(&word_vector(w), &z));
        prop_assert_eq!(lhs, rhs);
    }
}
