//! Runs a few command-line invocations in-process.

fn main() {
    for args in [
        vec!["qshuffle", "dims", "--name", "A2", "--weight", "2,1"],
        vec!["qshuffle", "rank", "--name", "G2", "--weight", "3,1", "--oracle"],
        vec!["qshuffle", "pair", "--name", "B2", "--x", "w[1,2]", "--y", "w[2,1]"],
        vec!["qshuffle", "rmatrix", "--name", "A1", "--truncate", "1", "--format", "json"],
        vec!["qshuffle", "verify", "pairing-base"],
    ] {
        println!("$ {}", args.join(" "));
        let code = qshuffle::cli::run_with(args, &mut std::io::stdout(), &mut std::io::stderr());
        println!("(exit {code})\n");
    }
}
