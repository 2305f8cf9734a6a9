//! The free algebra on simple-root letters: concatenation, the twisted
//! coproduct `r`, divided powers and Serre elements.

use crate::cartan::{CartanDatum, Word};
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{sym, sym_binomial, sym_factorial, LaurentPoly, ScalarFraction};

/// Element of the free algebra in the word basis.
pub type GradedVector = LinComb<Word>;
/// Element of the tensor square in the basis of word pairs.
pub type TensorVector = LinComb<(Word, Word)>;

pub fn word_vector(w: Word) -> GradedVector {
    LinComb::basis(w)
}

/// `v^{d_i}`, the variable of the quantum numbers attached to root `i`.
pub fn v_root(datum: &CartanDatum, i: usize) -> LaurentPoly {
    LaurentPoly::v_pow(datum.d(i))
}

pub fn concat_mul(x: &GradedVector, y: &GradedVector) -> GradedVector {
    let mut out = GradedVector::zero();
    for (u, a) in x.iter() {
        for (w, b) in y.iter() {
            out.add_term(u.concat(w), a * b);
        }
    }
    out
}

/// `e(S) = Σ_{i<j, i∉S, j∈S} (w_i, w_j)` for the position set `S` given as a
/// bit mask.
pub fn subset_exponent(datum: &CartanDatum, w: &[u8], mask: u64) -> i32 {
    let mut e = 0;
    let mut outside: Vec<u8> = Vec::new();
    for (j, &l) in w.iter().enumerate() {
        if mask >> j & 1 == 1 {
            for &o in &outside {
                e += datum.inner(o as usize, l as usize);
            }
        } else {
            outside.push(l);
        }
    }
    e
}

/// Splits `w` along the mask into the letters in `S` and those outside.
pub fn split_by_mask(w: &[u8], mask: u64) -> (Word, Word) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (j, &l) in w.iter().enumerate() {
        if mask >> j & 1 == 1 {
            a.push(l);
        } else {
            b.push(l);
        }
    }
    (Word(a), Word(b))
}

/// `r(w) = Σ_S v^{e(S)} w|_S ⊗ w|_{S^c}`.
pub fn coproduct_word(datum: &CartanDatum, w: &Word) -> TensorVector {
    let n = w.len();
    assert!(n < 63, "word too long for subset enumeration");
    let mut out = TensorVector::zero();
    for mask in 0..(1u64 << n) {
        let e = subset_exponent(datum, &w.0, mask);
        out.add_term(split_by_mask(&w.0, mask), ScalarFraction::v_pow(e));
    }
    out
}

pub fn coproduct_r(datum: &CartanDatum, x: &GradedVector) -> TensorVector {
    let mut out = TensorVector::zero();
    for (w, c) in x.iter() {
        out.add_scaled(&coproduct_word(datum, w), c);
    }
    out
}

/// Twisted product `(x1⊗x2)(y1⊗y2) = v^{(c(x2), c(y1))} x1y1 ⊗ x2y2`.
pub fn tensor_mul(datum: &CartanDatum, a: &TensorVector, b: &TensorVector) -> TensorVector {
    let rank = datum.rank();
    let mut out = TensorVector::zero();
    for ((x1, x2), c) in a.iter() {
        let c2 = x2.content(rank);
        for ((y1, y2), d) in b.iter() {
            let e = datum.inner_colorings(&c2, &y1.content(rank));
            let coef = &(c * d) * &ScalarFraction::v_pow(e);
            out.add_term((x1.concat(y1), x2.concat(y2)), coef);
        }
    }
    out
}

/// `DP(i, k) = w[i^k] / [k]_{v^{d_i}}!` (0-based `i`).
pub fn divided_power_word(datum: &CartanDatum, i: usize, k: usize) -> GradedVector {
    let f = sym_factorial(k as i32, &v_root(datum, i));
    let c = ScalarFraction::new(LaurentPoly::one(), f).expect("nonzero factorial");
    LinComb::term(Word::repeat(i, k), c)
}

/// `Σ_{l=0}^{k} sign(l) · weight(l) · DP(i,l) · x · DP(i,k-l)`, where the
/// sign is `(-1)^l` or `(-1)^{k-l}`.
pub fn alternating_sum(
    datum: &CartanDatum,
    i: usize,
    x: &GradedVector,
    k: usize,
    sign_from_right: bool,
    weight: impl Fn(usize) -> ScalarFraction,
) -> GradedVector {
    let mut out = GradedVector::zero();
    for l in 0..=k {
        let exp = if sign_from_right { k - l } else { l };
        let sign = if exp % 2 == 0 { 1 } else { -1 };
        let term = concat_mul(
            &concat_mul(&divided_power_word(datum, i, l), x),
            &divided_power_word(datum, i, k - l),
        );
        let c = &weight(l) * &ScalarFraction::from_int(sign);
        out.add_scaled(&term, &c);
    }
    out
}

/// `Σ_{l=0}^{k} (-1)^{k-l} DP(i,l) w[j] DP(i,k-l)` with `k = 1 - a_ij`
/// (0-based indices).
pub fn serre_element(datum: &CartanDatum, i: usize, j: usize) -> Result<GradedVector> {
    let k = serre_degree(datum, i, j)?;
    Ok(alternating_sum(
        datum,
        i,
        &word_vector(Word::letter(j)),
        k,
        true,
        |_| ScalarFraction::one(),
    ))
}

/// `[k]_{v^{d_i}}!` times the Serre element: `Σ (-1)^{k-l} [k over l] w[i^l j i^{k-l}]`,
/// which has integral coefficients.
pub fn serre_integral(datum: &CartanDatum, i: usize, j: usize) -> Result<GradedVector> {
    let k = serre_degree(datum, i, j)?;
    let var = v_root(datum, i);
    let mut out = GradedVector::zero();
    for l in 0..=k {
        let mut w = vec![i as u8; l];
        w.push(j as u8);
        w.extend(std::iter::repeat_n(i as u8, k - l));
        let mut c = sym_binomial(k as i32, l as i32, &var);
        if (k - l) % 2 == 1 {
            c = -c;
        }
        out.add_poly_term(Word(w), c);
    }
    Ok(out)
}

/// `1 - a_ij`, checking `i != j` and the index range.
pub fn serre_degree(datum: &CartanDatum, i: usize, j: usize) -> Result<usize> {
    let n = datum.rank();
    for x in [i, j] {
        if x >= n {
            return Err(Error::IndexOutOfRange { index: x + 1, rank: n });
        }
    }
    if i == j {
        return Err(Error::Precondition("Serre element needs i != j".into()));
    }
    Ok((1 - datum.a(i, j)) as usize)
}

/// `[k]_{v^{d_i}}` as a scalar.
pub fn qint_root(datum: &CartanDatum, i: usize, k: usize) -> ScalarFraction {
    ScalarFraction::from(sym(k as i32, &v_root(datum, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(l: &[u8]) -> Word {
        Word(l.to_vec())
    }

    #[test]
    fn concatenation() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let _ = a2;
        let x = word_vector(w(&[0]));
        let y = word_vector(w(&[1]));
        assert_eq!(concat_mul(&x, &y), word_vector(w(&[0, 1])));
        let s = &x + &y;
        assert_eq!(concat_mul(&s, &x), &word_vector(w(&[0, 0])) + &word_vector(w(&[1, 0])));
        let one = word_vector(Word::empty());
        assert_eq!(concat_mul(&one, &s), s);
    }

    #[test]
    fn coproduct_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let r = coproduct_word(&a2, &w(&[0]));
        let mut expect = TensorVector::zero();
        expect.add_term((w(&[0]), Word::empty()), ScalarFraction::one());
        expect.add_term((Word::empty(), w(&[0])), ScalarFraction::one());
        assert_eq!(r, expect);
        let r12 = coproduct_word(&a2, &w(&[0, 1]));
        assert_eq!(r12.get(&(w(&[1]), w(&[0]))), ScalarFraction::v_pow(-1));
        assert_eq!(r12.get(&(w(&[0]), w(&[1]))), ScalarFraction::one());
        assert_eq!(r12.get(&(w(&[0, 1]), Word::empty())), ScalarFraction::one());
        assert_eq!(r12.get(&(Word::empty(), w(&[0, 1]))), ScalarFraction::one());
        assert_eq!(r12.len(), 4);
        assert_eq!(
            coproduct_word(&a2, &Word::empty()),
            LinComb::basis((Word::empty(), Word::empty()))
        );
    }

    #[test]
    fn serre_examples() {
        let a1a1 = CartanDatum::preset("A1xA1").unwrap();
        assert_eq!(
            serre_element(&a1a1, 0, 1).unwrap(),
            &word_vector(w(&[0, 1])) - &word_vector(w(&[1, 0]))
        );
        let a2 = CartanDatum::preset("A2").unwrap();
        let s = serre_element(&a2, 0, 1).unwrap();
        let two = qint_root(&a2, 0, 2);
        let half = ScalarFraction::one().checked_div(&two).unwrap();
        assert_eq!(s.get(&w(&[0, 0, 1])), half);
        assert_eq!(s.get(&w(&[0, 1, 0])), ScalarFraction::from_int(-1));
        assert_eq!(s.get(&w(&[1, 0, 0])), half);
        assert!(serre_element(&a2, 1, 1).is_err());
        let scaled = serre_integral(&a2, 0, 1).unwrap();
        assert_eq!(s.scale(&two), scaled);
    }

    #[test]
    fn divided_powers() {
        let b2 = CartanDatum::preset("B2").unwrap();
        assert_eq!(divided_power_word(&b2, 0, 1), word_vector(w(&[0])));
        assert_eq!(divided_power_word(&b2, 0, 0), word_vector(Word::empty()));
        let dp2 = divided_power_word(&b2, 0, 2);
        // d_0 = 2, so [2]_{v^2} = v^2 + v^-2
        let two = &ScalarFraction::v_pow(2) + &ScalarFraction::v_pow(-2);
        assert_eq!(dp2.scale(&two), word_vector(w(&[0, 0])));
    }
}
