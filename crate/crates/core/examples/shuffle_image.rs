//! Shuffle coordinates of free-algebra elements: the map ι, the shuffle
//! product and the vanishing of Serre elements.

use qshuffle::bilinear_form::BilinearForm;
use qshuffle::cartan::{CartanDatum, Word};
use qshuffle::free_algebra::{concat_mul, serre_element, word_vector};
use qshuffle::scalar::Symbols;
use qshuffle::shuffle_image::{iota, shuffle_mul, IotaMode};

fn main() -> qshuffle::Result<()> {
    let g2 = CartanDatum::preset("G2")?;
    let form = BilinearForm::new(&g2);
    let sym = Symbols::new(2, true);
    let label = |w: &Word| format!("δ{w}");

    let x = word_vector(Word(vec![0]));
    let y = word_vector(Word(vec![1, 0]));
    let ix = iota(&form, &x, IotaMode::Plain)?;
    let iy = iota(&form, &y, IotaMode::Plain)?;
    println!("ι(w[1]) = {}", ix.fmt_with(&sym, label));
    println!("ι(w[2,1]) = {}", iy.fmt_with(&sym, label));

    let prod = shuffle_mul(&g2, &ix, &iy);
    let direct = iota(&form, &concat_mul(&x, &y), IotaMode::Plain)?;
    println!("ι(w[1]) * ι(w[2,1]) = {}", prod.fmt_with(&sym, label));
    println!("equals ι(w[1,2,1]): {}", prod == direct);

    for (i, j) in [(0, 1), (1, 0)] {
        let s = serre_element(&g2, i, j)?;
        let img = iota(&form, &s, IotaMode::Normalized)?;
        println!("serre({},{}) has {} words, ι̂ of it is zero: {}", i + 1, j + 1, s.len(), img.is_zero());
    }
    Ok(())
}
