use std::collections::BTreeSet;

use qshuffle::bilinear_form::BilinearForm;
use qshuffle::braid_symmetries::{kappa, t_i_apply, truncation_threshold, vanishing_element};
use qshuffle::cartan::{CartanDatum, Coloring, Word};
use qshuffle::free_algebra::{concat_mul, divided_power_word, serre_element, word_vector};
use qshuffle::linalg::{mat_vec, nullity, Matrix};
use qshuffle::scalar::ScalarFraction;
use qshuffle::shuffle_image::{iota, shuffle_mul, IotaMode};

fn datum(name: &str) -> CartanDatum {
    CartanDatum::preset(name).unwrap()
}

/// Coefficients λ_l with Σ λ_l ι(DP(i,l) x DP(i,k-l)) = 0 form a line spanned by
/// the signed κ weights, for every x of weight 2 avoiding i and k = t + 1.
#[test]
fn kappa_is_the_unique_vanishing_combination() {
    for name in ["A2", "B2", "G2"] {
        let d = datum(name);
        let f = BilinearForm::new(&d);
        for i in 0..2 {
            let j = 1 - i;
            let x = word_vector(Word::repeat(j, 2));
            let c = Coloring::simple(2, j).add(&Coloring::simple(2, j));
            let k = truncation_threshold(&d, i, &c) + 1;
            let cols: Vec<_> = (0..=k)
                .map(|l| {
                    let y = concat_mul(&concat_mul(&divided_power_word(&d, i, l), &x), &divided_power_word(&d, i, k - l));
                    iota(&f, &y, IotaMode::Plain).unwrap()
                })
                .collect();
            let rows: BTreeSet<Word> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
            let m: Matrix = rows.iter().map(|w| cols.iter().map(|c| c.get(w)).collect()).collect();
            assert_eq!(nullity(&m), 1, "{name} i={}", i + 1);
            let signed: Vec<ScalarFraction> = (0..=k)
                .map(|l| {
                    let s = kappa(&d, i, &c, k, l);
                    if (k - l) % 2 == 1 { -s } else { s }
                })
                .collect();
            assert!(mat_vec(&m, &signed).iter().all(ScalarFraction::is_zero), "{name} i={}", i + 1);
            assert!(vanishing_element(&f, i, &x, k).unwrap().is_zero());
            assert!(!vanishing_element(&f, i, &x, k - 1).unwrap().is_zero());
        }
    }
}

#[test]
fn t1_kills_serre_elements_away_from_1_in_a3() {
    let d = datum("A3");
    let f = BilinearForm::new(&d);
    for (j, k) in [(1, 2), (2, 1)] {
        let s = serre_element(&d, j, k).unwrap();
        assert!(t_i_apply(&f, 0, &s).unwrap().is_zero(), "T_1 serre({},{})", j + 1, k + 1);
    }
}

#[test]
fn t_i_is_multiplicative() {
    for name in ["A3", "B3"] {
        let d = datum(name);
        let f = BilinearForm::new(&d);
        let words = [Word(vec![1, 2]), Word(vec![2]), Word(vec![2, 1, 1])];
        for a in &words {
            for b in &words {
                let (x, y) = (word_vector(a.clone()), word_vector(b.clone()));
                let lhs = t_i_apply(&f, 0, &concat_mul(&x, &y)).unwrap();
                let rhs = shuffle_mul(&d, &t_i_apply(&f, 0, &x).unwrap(), &t_i_apply(&f, 0, &y).unwrap());
                assert_eq!(lhs, rhs, "{name} {a} {b}");
            }
        }
    }
}

#[test]
fn t_i_rejects_words_containing_i() {
    let d = datum("A2");
    let f = BilinearForm::new(&d);
    assert!(t_i_apply(&f, 1, &word_vector(Word(vec![0, 1]))).is_err());
}
