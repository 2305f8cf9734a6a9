//! Braid operators `T_i` on the subalgebra of weights with no `α_i`
//! component, and the truncation elements `V_k`.

use crate::bilinear_form::BilinearForm;
use crate::cartan::{CartanDatum, Coloring, Word};
use crate::error::{Error, Result};
use crate::free_algebra::{alternating_sum, word_vector, GradedVector};
use crate::shuffle_image::{delta, iota, shuffle_mul, BMElement, IotaMode};
use crate::scalar::ScalarFraction;

fn check_root(datum: &CartanDatum, i: usize) -> Result<()> {
    if i >= datum.rank() {
        return Err(Error::IndexOutOfRange { index: i + 1, rank: datum.rank() });
    }
    Ok(())
}

/// The free-algebra element `Σ_{l=0}^{k} (-1)^{k-l} v^{d_i l} DP(i,l) w[j] DP(i,k-l)`
/// with `k = -a_ij` (0-based indices).
pub fn t_i_generator_free(datum: &CartanDatum, i: usize, j: usize) -> Result<GradedVector> {
    check_root(datum, i)?;
    check_root(datum, j)?;
    if i == j {
        return Err(Error::Precondition("T_i(F_j) needs i != j".into()));
    }
    let k = (-datum.a(i, j)) as usize;
    let d = datum.d(i);
    Ok(alternating_sum(
        datum,
        i,
        &word_vector(Word::letter(j)),
        k,
        true,
        |l| ScalarFraction::v_pow(d * l as i32),
    ))
}

/// `T_i(F_j)` in shuffle coordinates (plain `ι`).
pub fn t_i_generator(form: &BilinearForm, i: usize, j: usize) -> Result<BMElement> {
    iota(form, &t_i_generator_free(form.datum(), i, j)?, IotaMode::Plain)
}

/// `T_i(x)` for `x` supported on words without the letter `i`: letterwise
/// substitution followed by shuffle multiplication.
pub fn t_i_apply(form: &BilinearForm, i: usize, x: &GradedVector) -> Result<BMElement> {
    let datum = form.datum();
    check_root(datum, i)?;
    if let Some(w) = x.keys().find(|w| w.0.contains(&(i as u8))) {
        return Err(Error::Precondition(format!(
            "T_{} is only defined on weights without α_{}; support contains {w}",
            i + 1,
            i + 1
        )));
    }
    let gens: Vec<Option<BMElement>> = (0..datum.rank())
        .map(|j| if j == i { Ok(None) } else { t_i_generator(form, i, j).map(Some) })
        .collect::<Result<_>>()?;
    let mut out = BMElement::zero();
    for (w, c) in x.iter() {
        let mut acc = delta(Word::empty());
        for &l in &w.0 {
            let g = gens[l as usize].as_ref().expect("letter differs from i");
            acc = shuffle_mul(datum, &acc, g);
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `k(i, c) = Σ_j c_j (-a_ij)`, the truncation threshold.
pub fn truncation_threshold(datum: &CartanDatum, i: usize, c: &Coloring) -> usize {
    (0..datum.rank())
        .filter(|&j| j != i)
        .map(|j| c.get(j) as i64 * -(datum.a(i, j) as i64))
        .sum::<i64>() as usize
}

/// Weight `κ_l = v^{-l (α_i, c)} · v^{d_i ((k-l)(k-l-1)/2 - l(l-1)/2)}`.
pub fn kappa(datum: &CartanDatum, i: usize, c: &Coloring, k: usize, l: usize) -> ScalarFraction {
    let (k, l) = (k as i32, l as i32);
    let d = datum.d(i);
    let e = -l * datum.inner_root_coloring(i, c) + d * ((k - l) * (k - l - 1) / 2 - l * (l - 1) / 2);
    ScalarFraction::v_pow(e)
}

/// The free-algebra element `Σ_{l} (-1)^{k-l} κ_l DP(i,l) x DP(i,k-l)`.
pub fn vanishing_free(datum: &CartanDatum, i: usize, x: &GradedVector, k: usize) -> Result<GradedVector> {
    check_root(datum, i)?;
    let c = pure_content(datum, x)?;
    if c.get(i) != 0 {
        return Err(Error::Precondition(format!("content {c} has an α_{} component", i + 1)));
    }
    Ok(alternating_sum(datum, i, x, k, true, |l| kappa(datum, i, &c, k, l)))
}

/// `V_k(i, x)` in shuffle coordinates (plain `ι`).
pub fn vanishing_element(form: &BilinearForm, i: usize, x: &GradedVector, k: usize) -> Result<BMElement> {
    iota(form, &vanishing_free(form.datum(), i, x, k)?, IotaMode::Plain)
}

fn pure_content(datum: &CartanDatum, x: &GradedVector) -> Result<Coloring> {
    let mut it = x.keys().map(|w| w.content(datum.rank()));
    let Some(c) = it.next() else {
        return Ok(Coloring::zero(datum.rank()));
    };
    if it.any(|d| d != c) {
        return Err(Error::Precondition("element is not homogeneous".into()));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::serre_element;

    fn w(l: &[u8]) -> Word {
        Word(l.to_vec())
    }

    #[test]
    fn generator_examples() {
        let a1a1 = CartanDatum::preset("A1xA1").unwrap();
        let f = BilinearForm::new(&a1a1);
        assert_eq!(
            t_i_generator(&f, 0, 1).unwrap(),
            iota(&f, &word_vector(w(&[1])), IotaMode::Plain).unwrap()
        );
        let a2 = CartanDatum::preset("A2").unwrap();
        let f = BilinearForm::new(&a2);
        let i12 = iota(&f, &word_vector(w(&[0, 1])), IotaMode::Plain).unwrap();
        let i21 = iota(&f, &word_vector(w(&[1, 0])), IotaMode::Plain).unwrap();
        let expect = &i12.scale(&ScalarFraction::v_pow(1)) - &i21;
        assert_eq!(t_i_generator(&f, 0, 1).unwrap(), expect);
        let b2 = CartanDatum::preset("B2").unwrap();
        let g = t_i_generator_free(&b2, 1, 0).unwrap();
        assert!(g.keys().all(|u| u.content(2) == Coloring(vec![1, 2])));
        assert!(t_i_generator(&f, 0, 0).is_err());
    }

    #[test]
    fn apply_respects_domain() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let f = BilinearForm::new(&a2);
        assert_eq!(t_i_apply(&f, 0, &word_vector(Word::empty())).unwrap(), delta(Word::empty()));
        assert!(t_i_apply(&f, 0, &word_vector(w(&[0, 1]))).is_err());
    }

    #[test]
    fn vanishing_basics() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let f = BilinearForm::new(&a2);
        let x = word_vector(w(&[1]));
        assert_eq!(vanishing_element(&f, 0, &x, 0).unwrap(), iota(&f, &x, IotaMode::Plain).unwrap());
        assert!(vanishing_element(&f, 0, &x, 2).unwrap().is_zero());
        assert!(!vanishing_element(&f, 0, &x, 1).unwrap().is_zero());
        // V at k = 1 - a_ij is a unit multiple of the Serre element
        let v = vanishing_free(&a2, 0, &x, 2).unwrap();
        let s = serre_element(&a2, 0, 1).unwrap();
        assert_eq!(v, s.scale(&ScalarFraction::v_pow(1)));
        let xx = word_vector(w(&[1, 1]));
        assert!(vanishing_element(&f, 0, &xx, 3).unwrap().is_zero());
        assert!(!vanishing_element(&f, 0, &xx, 2).unwrap().is_zero());
    }
}
