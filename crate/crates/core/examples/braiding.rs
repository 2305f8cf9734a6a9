//! Braiding blocks on a tensor square and the braid relation on three strands.

use qshuffle::braiding::{ybe_check, Ansatz, Braiding};
use qshuffle::cartan::CartanDatum;
use qshuffle::scalar::Symbols;
use qshuffle::verma::{BasisOrder, VermaBases};

fn main() -> qshuffle::Result<()> {
    let a1 = CartanDatum::preset("A1")?;
    let bases = VermaBases::new(&a1, 2, BasisOrder::Lex);
    let b = Braiding::solve(&bases, (0, 1), 2, Ansatz::Triangular)?;
    let sym = Symbols::new(1, true);
    for block in b.blocks() {
        println!("block {} (dim {})", block.content, block.dim());
        for row in &block.matrix {
            let cells: Vec<String> = row.iter().map(|x| x.fmt_with(&sym)).collect();
            println!("  [{}]", cells.join(", "));
        }
        println!("  det = {}", block.determinant().fmt_with(&sym));
    }

    let report = ybe_check(&a1, 2)?;
    println!("braid relation at weight ≤ 2: {}", if report.all_pass() { "holds" } else { "fails" });
    Ok(())
}
