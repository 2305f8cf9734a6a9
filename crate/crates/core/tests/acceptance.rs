//! The eleven acceptance criteria, each under its time limit. Prints one
//! PASS/FAIL line per criterion and fails if any criterion fails.

use std::time::{Duration, Instant};

use qshuffle::cli::{verify, Criterion};

const CRITERIA: [(usize, &str, Criterion, u64); 11] = [
    (1, "pairing base case on roots of A2, B2, G2", Criterion::PairingBase, 1),
    (2, "quantum Serre elements vanish in A2, B2, G2", Criterion::Serre, 10),
    (3, "radical rank equals word count minus ideal span", Criterion::Dimensions, 60),
    (4, "divided powers ι(w[α])^k = [k]! ι(DP(α,k)), k ≤ 5", Criterion::DividedPowers, 5),
    (5, "fundamental relation [E, F^(k+1)] on truncated Verma modules", Criterion::Fundamental, 30),
    (6, "full relations with both Serre families, A2 at m_c ≤ 4", Criterion::Relations, 60),
    (7, "adjointness of E^[k] and F^(k) at m_c ≤ 4", Criterion::Adjoint, 30),
    (8, "split equivariance on 2-fold tensors at weight ≤ 4", Criterion::Split, 30),
    (9, "unique invertible braiding blocks and braid relation", Criterion::Braiding, 120),
    (10, "coproduct, pairing, ι, T_i and truncation thresholds", Criterion::Structural, 60),
    (11, "expression parser round trip and error positions", Criterion::Parser, 1),
];

fn main() {
    let mut failed = Vec::new();
    for (n, what, c, limit) in CRITERIA {
        let start = Instant::now();
        let result = verify(c, 0);
        let took = start.elapsed();
        let in_time = took < Duration::from_secs(limit);
        let detail = match &result {
            Ok(r) if r.all_pass() => format!("{} checks", r.items.len()),
            Ok(r) => {
                let f = r.failures();
                format!("{} of {} checks failed, first: {} [{}]", f.len(), r.items.len(), f[0].name, f[0].block)
            }
            Err(e) => format!("error: {e}"),
        };
        let pass = in_time && matches!(&result, Ok(r) if r.all_pass());
        println!(
            "{} {n:>2} {what} ({detail}; {:.2}s of {limit}s)",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
        if !pass {
            failed.push(n);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
