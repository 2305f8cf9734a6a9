//! Gram matrices of the bilinear form and the dimension count against the
//! Serre ideal.

use qshuffle::bilinear_form::{ideal_span_dimension, BilinearForm};
use qshuffle::cartan::{CartanDatum, Coloring};
use qshuffle::scalar::Symbols;

fn main() -> qshuffle::Result<()> {
    let b2 = CartanDatum::preset("B2")?;
    let form = BilinearForm::new(&b2);
    let sym = Symbols::new(2, true);

    let c = Coloring(vec![1, 1]);
    let (words, gram) = form.gram(&c, 8)?;
    println!("B2, weight {c}");
    for (w, row) in words.iter().zip(&gram) {
        let cells: Vec<String> = row.iter().map(|x| x.fmt_with(&sym)).collect();
        println!("  {w}: [{}]", cells.join(", "));
    }

    println!("weight  words  rank  words - ideal span");
    for c in [[2, 1], [1, 2], [3, 1], [2, 2]] {
        let c = Coloring(c.to_vec());
        let words = c.multinomial();
        let rank = form.radical_rank(&c, 8)?;
        let predicted = ideal_span_dimension(&b2, &c, 8)?;
        println!("{:>6}  {words:>5}  {rank:>4}  {predicted}", c.to_string());
    }
    Ok(())
}
