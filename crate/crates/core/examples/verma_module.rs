//! Verma modules and their tensor products in shuffle coordinates.

use qshuffle::cartan::{CartanDatum, Word};
use qshuffle::scalar::Symbols;
use qshuffle::verma::VermaModule;

fn main() -> qshuffle::Result<()> {
    let a1 = CartanDatum::preset("A1")?;
    let m = VermaModule::single(&a1);
    let sym = Symbols::new(1, true);
    let show = |x: &qshuffle::verma::TensorElement| {
        x.fmt_with(&sym, |t: &Vec<Word>| t.iter().map(|w| format!("δ{w}")).collect::<Vec<_>>().join("⊗"))
    };

    let v0 = m.vacuum();
    let f2 = m.act_f(0, 2, &v0);
    println!("F^(2) v0 = {}", show(&f2));
    println!("K F^(2) v0 = {}", show(&m.act_k(0, 1, &f2)));
    println!("E F^(2) v0 = {}", show(&m.act_e(0, &f2)));

    let two = VermaModule::tensor(&a1, 2);
    let x = two.act_f(0, 1, &two.vacuum());
    println!("on M1⊗M2, F v0 = {}", show(&x));
    println!("E F v0 = {}", show(&two.act_e(0, &x)));
    Ok(())
}
