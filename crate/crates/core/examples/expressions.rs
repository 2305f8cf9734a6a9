//! The expression language: parse, print canonically, evaluate, and report
//! errors with positions.

use qshuffle::cartan::CartanDatum;
use qshuffle::expr_dsl::{eval, parse, Carrier, Value};
use qshuffle::scalar::Symbols;
use qshuffle::shuffle_image::IotaMode;

fn main() -> qshuffle::Result<()> {
    let a2 = CartanDatum::preset("A2")?;
    let sym = Symbols::new(2, true);
    for (text, carrier) in [
        ("(q + 1) * w[1,2] - v^-1 * w[2,1]", Carrier::Free),
        ("w[1]*w[2]", Carrier::Shuffle(IotaMode::Plain)),
        ("serre(1,2)", Carrier::Shuffle(IotaMode::Normalized)),
        ("E(1)*F(1) - F(1)*E(1)", Carrier::Operator),
    ] {
        let e = parse(text)?;
        let shown = match eval(&a2, &e, carrier)? {
            Value::Free(x) => x.fmt_with(&sym, |w| format!("w[{}]", w.key())),
            Value::Shuffle(x) => x.fmt_with(&sym, |w| format!("δ{w}")),
            Value::Operator(x) => format!("{} operator terms", x.len()),
        };
        println!("{e}\n  = {shown}");
    }
    for bad in ["F(1", "w[1,2] )", "F(1) +\n  * F(2)"] {
        println!("{bad:?}: {}", parse(bad).unwrap_err());
    }
    Ok(())
}
