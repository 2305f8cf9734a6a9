//! Exact Laurent polynomials, rational functions and quantum integers.

use qshuffle::scalar::{qnum, sym_binomial, LaurentPoly, QKind, ScalarFraction, Symbols};

fn main() -> qshuffle::Result<()> {
    let sym = Symbols::new(2, true);
    let v = LaurentPoly::v_pow(1);
    let q = LaurentPoly::v_pow(2);

    for k in 1..=4 {
        let sym_k = qnum(QKind::Sym, k, None, &v)?;
        let asym_k = qnum(QKind::Asym, k, None, &q)?;
        println!("[{k}]_v = {}    ({k})_q = {}", sym_k.fmt_with(&sym), asym_k.fmt_with(&sym));
    }
    println!("[4 choose 2]_v = {}", sym_binomial(4, 2, &v).fmt_with(&sym));

    // 1/(1 - q^-1) reduces to q/(q - 1)
    let one_minus = &LaurentPoly::one() - &LaurentPoly::v_pow(-2);
    let x = ScalarFraction::new(LaurentPoly::one(), one_minus)?;
    println!("1/(1 - q^-1) = {}", x.fmt_with(&sym));
    let y = &x * &x.inv()?;
    println!("x * x^-1 = {}", y.fmt_with(&sym));
    Ok(())
}
