//! Shuffle coordinates: the map `ι` from the free algebra, the quantum
//! shuffle product and radical membership.

use std::collections::BTreeMap;

use crate::bilinear_form::BilinearForm;
use crate::cartan::{enumerate_words, CartanDatum, Coloring, Word};
use crate::error::Result;
use crate::free_algebra::GradedVector;
use crate::lincomb::LinComb;
use crate::scalar::{LaurentPoly, Monomial, ScalarFraction};

/// Element in the shuffle (pearl-necklace) coordinates.
pub type BMElement = LinComb<Word>;

/// Word bound used when `ι` enumerates target words internally.
pub const IOTA_WORD_BOUND: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum IotaMode {
    /// `ι(x)[w] = (x, w)`.
    #[default]
    Plain,
    /// `ι̂(x)[w] = λ(c)·(x, w)`, so that `ι̂(w[α]) = δ_(α)`.
    Normalized,
}

/// Unit coordinate vector at `w`.
pub fn delta(w: Word) -> BMElement {
    LinComb::basis(w)
}

/// `ι(x)` in the given mode.
pub fn iota(form: &BilinearForm, x: &GradedVector, mode: IotaMode) -> Result<BMElement> {
    let rank = form.datum().rank();
    let mut by_content: BTreeMap<Coloring, GradedVector> = BTreeMap::new();
    for (w, c) in x.iter() {
        by_content
            .entry(w.content(rank))
            .or_default()
            .add_term(w.clone(), c.clone());
    }
    let mut out = BMElement::zero();
    for (c, part) in by_content {
        let targets = enumerate_words(&c, IOTA_WORD_BOUND)?;
        let lam = match mode {
            IotaMode::Plain => Some(ScalarFraction::from(form.lambda(&c))),
            IotaMode::Normalized => None,
        };
        for t in targets {
            let mut acc = ScalarFraction::zero();
            for (u, a) in part.iter() {
                let h = form.pair_hat_words(u, &t);
                if !h.is_zero() {
                    acc += &(a * &ScalarFraction::from(h));
                }
            }
            if let Some(l) = &lam {
                acc = acc.checked_div(l).expect("λ is nonzero");
            }
            out.add_term(t, acc);
        }
    }
    Ok(out)
}

/// `δ_u ⋆ δ_t` as a map from words to Laurent polynomials in `v`.
pub fn shuffle_words(datum: &CartanDatum, u: &[u8], t: &[u8]) -> BTreeMap<Word, LaurentPoly> {
    let mut out: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
    let mut buf = Vec::with_capacity(u.len() + t.len());
    shuffle_rec(datum, u, t, 0, 0, 0, &mut buf, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn shuffle_rec(
    datum: &CartanDatum,
    u: &[u8],
    t: &[u8],
    i: usize,
    j: usize,
    e: i32,
    buf: &mut Vec<u8>,
    out: &mut BTreeMap<Word, LaurentPoly>,
) {
    if i == u.len() && j == t.len() {
        out.entry(Word(buf.clone()))
            .or_default()
            .add_term(Monomial::var(0, e), 1.into());
        return;
    }
    if i < u.len() {
        // a letter of the left factor passing the right-factor letters already placed
        let l = u[i];
        let extra: i32 = t[..j].iter().map(|&x| datum.inner(x as usize, l as usize)).sum();
        buf.push(l);
        shuffle_rec(datum, u, t, i + 1, j, e + extra, buf, out);
        buf.pop();
    }
    if j < t.len() {
        buf.push(t[j]);
        shuffle_rec(datum, u, t, i, j + 1, e, buf, out);
        buf.pop();
    }
}

/// `(a·b)[w] = Σ_S v^{e(S)} a[w|_S] b[w|_{S^c}]`.
pub fn shuffle_mul(datum: &CartanDatum, a: &BMElement, b: &BMElement) -> BMElement {
    let mut acc: BTreeMap<Word, ScalarFraction> = BTreeMap::new();
    for (u, x) in a.iter() {
        for (t, y) in b.iter() {
            let xy = x * y;
            for (w, p) in shuffle_words(datum, &u.0, &t.0) {
                let term = &xy * &p;
                acc.entry(w)
                    .and_modify(|s| *s += &term)
                    .or_insert(term);
            }
        }
    }
    acc.into_iter().collect()
}

/// True iff `ι(x) = 0`.
pub fn is_in_radical(form: &BilinearForm, x: &GradedVector) -> Result<bool> {
    Ok(iota(form, x, IotaMode::Normalized)?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::{concat_mul, serre_element, word_vector};

    fn w(l: &[u8]) -> Word {
        Word(l.to_vec())
    }

    #[test]
    fn iota_of_letter() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let form = BilinearForm::new(&a2);
        let x = word_vector(w(&[0]));
        let plain = iota(&form, &x, IotaMode::Plain).unwrap();
        let base = ScalarFraction::new(LaurentPoly::one(), &LaurentPoly::one() - &LaurentPoly::v_pow(-2)).unwrap();
        assert_eq!(plain.get(&w(&[0])), base);
        assert!(plain.get(&w(&[1])).is_zero());
        assert_eq!(iota(&form, &x, IotaMode::Normalized).unwrap(), delta(w(&[0])));
    }

    #[test]
    fn homomorphism_small() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let form = BilinearForm::new(&a2);
        let x = word_vector(w(&[0]));
        let y = word_vector(w(&[1]));
        for mode in [IotaMode::Plain, IotaMode::Normalized] {
            let lhs = iota(&form, &concat_mul(&x, &y), mode).unwrap();
            let rhs = shuffle_mul(&a2, &iota(&form, &x, mode).unwrap(), &iota(&form, &y, mode).unwrap());
            assert_eq!(lhs, rhs);
        }
        let unit = delta(Word::empty());
        let a = iota(&form, &x, IotaMode::Plain).unwrap();
        assert_eq!(shuffle_mul(&a2, &unit, &a), a);
    }

    #[test]
    fn serre_in_radical() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let form = BilinearForm::new(&a2);
        assert!(is_in_radical(&form, &serre_element(&a2, 0, 1).unwrap()).unwrap());
        assert!(!is_in_radical(&form, &word_vector(w(&[0]))).unwrap());
    }
}
