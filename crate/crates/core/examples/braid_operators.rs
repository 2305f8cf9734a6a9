//! Braid group operators T_i and the truncation elements V_k.

use qshuffle::bilinear_form::BilinearForm;
use qshuffle::braid_symmetries::{t_i_apply, truncation_threshold, vanishing_element};
use qshuffle::cartan::{CartanDatum, Word};
use qshuffle::free_algebra::{serre_element, word_vector};
use qshuffle::scalar::Symbols;

fn main() -> qshuffle::Result<()> {
    let a2 = CartanDatum::preset("A2")?;
    let form = BilinearForm::new(&a2);
    let sym = Symbols::new(2, true);
    let t = t_i_apply(&form, 0, &word_vector(Word(vec![1])))?;
    println!("A2: T_1(w[2]) = {}", t.fmt_with(&sym, |w| format!("δ{w}")));

    let a3 = CartanDatum::preset("A3")?;
    let form3 = BilinearForm::new(&a3);
    let img = t_i_apply(&form3, 0, &serre_element(&a3, 1, 2)?)?;
    println!("A3: T_1(serre(2,3)) = 0: {}", img.is_zero());

    let b2 = CartanDatum::preset("B2")?;
    let form = BilinearForm::new(&b2);
    for (i, w) in [(0, Word(vec![1])), (1, Word(vec![0, 0]))] {
        let x = word_vector(w.clone());
        let t = truncation_threshold(&b2, i, &w.content(2));
        let zeros: Vec<bool> = (0..=t + 1)
            .map(|k| vanishing_element(&form, i, &x, k).map(|v| v.is_zero()))
            .collect::<qshuffle::Result<_>>()?;
        println!("B2: V_k({}, w{w}), threshold {t}, zero for k = 0..{}: {zeros:?}", i + 1, t + 1);
    }
    Ok(())
}
