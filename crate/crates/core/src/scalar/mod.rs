//! Exact scalars: Laurent polynomials in `v` (with `v^2 = q`) and the
//! puncture symbols `s_{p,a}`, their fractions, and quantum numbers.

mod fraction;
mod poly;

pub use fraction::{fraction_reduce, ScalarFraction};
pub use poly::{LaurentPoly, Monomial};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Exponent slot of the symbol `s_{p,a}` (both 1-based) for a datum of rank
/// `rank`.
pub fn s_slot(rank: usize, p: usize, a: usize) -> usize {
    1 + (p - 1) * rank + (a - 1)
}

/// The monomial `s_{p,a}^e` as a polynomial.
pub fn s_pow(rank: usize, p: usize, a: usize, e: i32) -> LaurentPoly {
    LaurentPoly::var_pow(s_slot(rank, p, a), e)
}

/// Naming scheme used when printing scalars.
#[derive(Clone, Debug, Default)]
pub struct Symbols {
    /// Rank of the datum; 0 prints puncture slots generically as `x1, x2, ..`.
    pub rank: usize,
    /// Print `q` instead of `v` whenever every `v` exponent is even.
    pub q_notation: bool,
}

impl Symbols {
    pub fn new(rank: usize, q_notation: bool) -> Self {
        Symbols { rank, q_notation }
    }

    pub fn slot_name(&self, slot: usize) -> String {
        if slot == 0 {
            return "v".into();
        }
        if self.rank == 0 {
            return format!("x{slot}");
        }
        let p = (slot - 1) / self.rank + 1;
        let a = (slot - 1) % self.rank + 1;
        format!("s({p},{a})")
    }
}

/// Names of the exponent slots `0..nslots`, used as the JSON header.
pub fn slot_header(sym: &Symbols, nslots: usize) -> Vec<String> {
    (0..nslots).map(|i| sym.slot_name(i)).collect()
}

fn poly_json(p: &LaurentPoly, nslots: usize) -> Value {
    let rows: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let mut row = vec![coef_json(c)];
            row.extend((0..nslots).map(|i| json!(m.exp(i))));
            Value::Array(row)
        })
        .collect();
    Value::Array(rows)
}

fn coef_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

/// `{"num": [[coef, e_v, e_s..]..], "den": ..}` with exponent rows padded to
/// `nslots` entries.
pub fn scalar_json(x: &ScalarFraction, nslots: usize) -> Value {
    json!({ "num": poly_json(x.num(), nslots), "den": poly_json(x.den(), nslots) })
}

/// Kinds of quantum integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QKind {
    /// `(k)_x = 1 + x + .. + x^{k-1}`
    Asym,
    AsymFact,
    AsymBinom,
    /// `[k]_x = (x^k - x^{-k}) / (x - x^{-1})`
    Sym,
    SymFact,
    SymBinom,
    /// `{k}_x = x^k - x^{-k}`
    Brace,
}

/// Quantum number of the given kind in the monomial unit `var`.
pub fn qnum(kind: QKind, k: i64, l: Option<i64>, var: &LaurentPoly) -> Result<LaurentPoly> {
    if !var.is_unit() {
        return Err(Error::QuantumArgs(format!("{var} is not a monomial unit")));
    }
    if k < 0 {
        return Err(Error::QuantumArgs(format!("k = {k} is negative")));
    }
    let k32 = i32::try_from(k).map_err(|_| Error::QuantumArgs("k too large".into()))?;
    match kind {
        QKind::Asym => Ok(asym(k32, var)),
        QKind::AsymFact => Ok((1..=k32).fold(LaurentPoly::one(), |acc, i| acc * asym(i, var))),
        QKind::Sym => Ok(sym(k32, var)),
        QKind::SymFact => Ok(sym_factorial(k32, var)),
        QKind::Brace => Ok(var.pow(k32)? - var.pow(-k32)?),
        QKind::AsymBinom | QKind::SymBinom => {
            let l = l.ok_or_else(|| Error::QuantumArgs("binomial needs l".into()))?;
            if l < 0 || l > k {
                return Err(Error::QuantumArgs(format!("need 0 <= l <= k, got l = {l}, k = {k}")));
            }
            let fact = if kind == QKind::AsymBinom { QKind::AsymFact } else { QKind::SymFact };
            let top = qnum(fact, k, None, var)?;
            let bottom = qnum(fact, l, None, var)? * qnum(fact, k - l, None, var)?;
            top.exact_div(&bottom)
                .ok_or_else(|| Error::QuantumArgs("inexact binomial".into()))
        }
    }
}

fn asym(k: i32, var: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut p = LaurentPoly::one();
    for _ in 0..k {
        acc += &p;
        p = &p * var;
    }
    acc
}

/// `[k]_x` for a monomial unit `x`.
pub fn sym(k: i32, var: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for i in 0..k {
        acc += &var.pow(k - 1 - 2 * i).expect("unit");
    }
    acc
}

/// `[k]_x!`.
pub fn sym_factorial(k: i32, var: &LaurentPoly) -> LaurentPoly {
    (1..=k).fold(LaurentPoly::one(), |acc, i| acc * sym(i, var))
}

/// `[k over l]_x` as a polynomial.
pub fn sym_binomial(k: i32, l: i32, var: &LaurentPoly) -> LaurentPoly {
    qnum(QKind::SymBinom, k as i64, Some(l as i64), var).expect("valid binomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn examples() {
        let one = LaurentPoly::one();
        assert_eq!(qnum(QKind::Asym, 3, None, &v(1)).unwrap(), &(&one + &v(1)) + &v(2));
        assert_eq!(qnum(QKind::Sym, 2, None, &v(1)).unwrap(), &v(1) + &v(-1));
        assert_eq!(
            qnum(QKind::Asym, 3, None, &v(-2)).unwrap(),
            &v(-2) * &qnum(QKind::Sym, 3, None, &v(1)).unwrap()
        );
        assert_eq!(qnum(QKind::Brace, 2, None, &v(1)).unwrap(), &v(2) - &v(-2));
        // q_alpha for d = 2
        assert_eq!(v(2).pow(2).unwrap(), v(4));
    }

    #[test]
    fn argument_errors() {
        assert!(qnum(QKind::SymBinom, 2, Some(3), &v(1)).is_err());
        assert!(qnum(QKind::Sym, 2, None, &(&v(1) + &v(2))).is_err());
    }

    #[test]
    fn asymmetric_vs_symmetric() {
        for k in 1..=8i64 {
            let af = qnum(QKind::AsymFact, k, None, &v(-2)).unwrap();
            let sf = qnum(QKind::SymFact, k, None, &v(1)).unwrap();
            assert_eq!(af, &v(-(k * (k - 1) / 2) as i32) * &sf);
            for l in 0..=8i64 {
                let ab = qnum(QKind::AsymBinom, k + l, Some(l), &v(-2)).unwrap();
                let sb = qnum(QKind::SymBinom, k + l, Some(l), &v(1)).unwrap();
                assert_eq!(ab, &v(-(k * l) as i32) * &sb);
            }
        }
    }

    #[test]
    fn json_and_names() {
        let sym = Symbols::new(2, false);
        assert_eq!(sym.slot_name(s_slot(2, 2, 1)), "s(2,1)");
        let x = ScalarFraction::from(&s_pow(2, 1, 2, -1) * &v(3));
        let j = scalar_json(&x, 3);
        assert_eq!(j["num"], json!([[1, 3, 0, -1]]));
        assert_eq!(j["den"], json!([[1, 0, 0, 0]]));
        assert_eq!(x.fmt_with(&sym), "v^3*s(1,2)^-1");
    }

    #[test]
    fn q_notation() {
        let sym = Symbols::new(1, true);
        assert_eq!((&v(2) - &v(-4)).fmt_with(&sym), "q - q^-2");
        assert_eq!((&v(1) + &v(2)).fmt_with(&sym), "v^2 + v");
    }
}
