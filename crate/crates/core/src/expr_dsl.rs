//! A small expression language for algebra elements and operator words.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | factor
//! factor := scalar | gen | "w[" int ("," int)* "]" | "(" expr ")"
//! gen    := ("F" | "E" | "K" | "Kinv" | "dp" | "serre") "(" int ("," int)* ")"
//! scalar := atom ("^" ["-"] int)?        atom := q | v | s(p,i) | int
//! ```
//!
//! Indices are 1-based and checked at evaluation time.

use std::fmt;

use crate::cartan::{CartanDatum, Word};
use crate::error::{Error, Result};
use crate::free_algebra::{divided_power_word, serre_degree, serre_element, GradedVector};
use crate::lincomb::LinComb;
use crate::scalar::{s_pow, LaurentPoly, ScalarFraction};
use crate::shuffle_image::{iota, BMElement, IotaMode};
use crate::bilinear_form::BilinearForm;
use crate::verma::{ModuleOp, TensorElement, VermaModule};

/// Generator nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    F(usize, Option<usize>),
    E(usize, Option<usize>),
    K(usize),
    Kinv(usize),
    Dp(usize, usize),
    Serre(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Q,
    V,
    S(usize, usize),
    Pow(Box<Expr>, i32),
    Gen(Gen),
    Word(Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut line, mut col) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| err(l0, c0, format!("integer literal {s} is too large")))?;
            col += i - start;
            out.push((Tok::Int(n), l0, c0));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), l0, c0));
            continue;
        }
        let t = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            _ => return Err(err(l0, c0, format!("unexpected character '{c}'"))),
        };
        out.push((t, l0, c0));
        col += 1;
        i += 1;
    }
    out.push((Tok::Eof, line, col));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
    /// Positions of open parentheses and brackets, for unbalanced input.
    open: Vec<(usize, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn here(&self) -> (usize, usize) {
        let (_, l, c) = self.toks[self.pos];
        (l, c)
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        if *self.peek() == t {
            self.bump();
            if matches!(t, Tok::RParen | Tok::RBracket) {
                self.open.pop();
            }
            return Ok(());
        }
        if matches!(t, Tok::RParen | Tok::RBracket) && *self.peek() == Tok::Eof {
            if let Some(&(l, c)) = self.open.last() {
                return Err(err(l, c, format!("unbalanced: {t} expected to close this")));
            }
        }
        self.fail(format!("expected {t}, found {}", self.peek()))
    }

    fn open_here(&mut self, t: Tok) -> Result<()> {
        let at = self.here();
        if *self.peek() != t {
            return self.fail(format!("expected {t}, found {}", self.peek()));
        }
        self.bump();
        self.open.push(at);
        Ok(())
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            t => self.fail(format!("expected an integer, found {t}")),
        }
    }

    fn index(&mut self) -> Result<usize> {
        let (l, c) = self.here();
        let n = self.int()?;
        usize::try_from(n).map_err(|_| err(l, c, "index too large"))
    }

    fn args(&mut self) -> Result<Vec<usize>> {
        self.open_here(Tok::LParen)?;
        let mut out = vec![self.index()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.index()?);
        }
        self.expect(Tok::RParen)?;
        Ok(out)
    }

    fn exponent(&mut self, base: Expr) -> Result<Expr> {
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let neg = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (l, c) = self.here();
        let n = match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                n
            }
            t => return Err(err(l, c, format!("malformed exponent: expected an integer, found {t}"))),
        };
        let e = i32::try_from(n).map_err(|_| err(l, c, "malformed exponent: too large"))?;
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn factor(&mut self) -> Result<Expr> {
        let (l, c) = self.here();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                self.exponent(Expr::Int(n))
            }
            Tok::LParen => {
                self.open_here(Tok::LParen)?;
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(name) => {
                self.bump();
                let arity = |a: &[usize], lo: usize, hi: usize| -> Result<()> {
                    if a.len() < lo || a.len() > hi {
                        let want = if lo == hi { lo.to_string() } else { format!("{lo} or {hi}") };
                        return Err(err(l, c, format!("{name} takes {want} arguments, found {}", a.len())));
                    }
                    Ok(())
                };
                match name.as_str() {
                    "q" => self.exponent(Expr::Q),
                    "v" => self.exponent(Expr::V),
                    "s" => {
                        let a = self.args()?;
                        arity(&a, 2, 2)?;
                        self.exponent(Expr::S(a[0], a[1]))
                    }
                    "w" => {
                        self.open_here(Tok::LBracket)?;
                        let mut ls = vec![self.index()?];
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            ls.push(self.index()?);
                        }
                        self.expect(Tok::RBracket)?;
                        Ok(Expr::Word(ls))
                    }
                    "F" | "E" => {
                        let a = self.args()?;
                        arity(&a, 1, 2)?;
                        let k = a.get(1).copied();
                        Ok(Expr::Gen(if name == "F" { Gen::F(a[0], k) } else { Gen::E(a[0], k) }))
                    }
                    "K" | "Kinv" => {
                        let a = self.args()?;
                        arity(&a, 1, 1)?;
                        Ok(Expr::Gen(if name == "K" { Gen::K(a[0]) } else { Gen::Kinv(a[0]) }))
                    }
                    "dp" => {
                        let a = self.args()?;
                        arity(&a, 2, 2)?;
                        Ok(Expr::Gen(Gen::Dp(a[0], a[1])))
                    }
                    "serre" => {
                        let a = self.args()?;
                        arity(&a, 2, 2)?;
                        Ok(Expr::Gen(Gen::Serre(a[0], a[1])))
                    }
                    _ => Err(err(l, c, format!("unknown identifier '{name}'"))),
                }
            }
            Tok::RParen => self.fail("unbalanced: ')' without a matching '('"),
            t => self.fail(format!("expected an expression, found {t}")),
        }
    }
}

/// Parses an expression; errors carry 1-based line and column.
pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(text)?, pos: 0, open: Vec::new() };
    let e = p.expr()?;
    match p.peek() {
        Tok::Eof => Ok(e),
        Tok::RParen => p.fail("unbalanced: ')' without a matching '('"),
        t => p.fail(format!("unexpected {t} after expression")),
    }
}

fn is_sum(e: &Expr) -> bool {
    matches!(e, Expr::Add(..) | Expr::Sub(..))
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::F(i, None) => write!(f, "F({i})"),
            Gen::F(i, Some(k)) => write!(f, "F({i},{k})"),
            Gen::E(i, None) => write!(f, "E({i})"),
            Gen::E(i, Some(k)) => write!(f, "E({i},{k})"),
            Gen::K(i) => write!(f, "K({i})"),
            Gen::Kinv(i) => write!(f, "Kinv({i})"),
            Gen::Dp(i, k) => write!(f, "dp({i},{k})"),
            Gen::Serre(i, j) => write!(f, "serre({i},{j})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let paren = |f: &mut fmt::Formatter<'_>, e: &Expr, wrap: bool| {
            if wrap {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Q => f.write_str("q"),
            Expr::V => f.write_str("v"),
            Expr::S(p, i) => write!(f, "s({p},{i})"),
            Expr::Pow(b, e) => {
                paren(f, b, !matches!(**b, Expr::Int(_) | Expr::Q | Expr::V | Expr::S(..)))?;
                write!(f, "^{e}")
            }
            Expr::Gen(g) => write!(f, "{g}"),
            Expr::Word(ls) => {
                let s: Vec<String> = ls.iter().map(ToString::to_string).collect();
                write!(f, "w[{}]", s.join(","))
            }
            Expr::Neg(e) => {
                f.write_str("-")?;
                paren(f, e, is_sum(e) || matches!(**e, Expr::Mul(..)))
            }
            Expr::Add(a, b) => {
                write!(f, "{a} + ")?;
                paren(f, b, is_sum(b))
            }
            Expr::Sub(a, b) => {
                write!(f, "{a} - ")?;
                paren(f, b, is_sum(b))
            }
            Expr::Mul(a, b) => {
                paren(f, a, is_sum(a))?;
                f.write_str("*")?;
                paren(f, b, is_sum(b) || matches!(**b, Expr::Mul(..)))
            }
        }
    }
}

/// Where an expression is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Carrier {
    /// The free algebra on the letters.
    Free,
    /// Shuffle coordinates, through `ι`.
    Shuffle(IotaMode),
    /// A linear combination of operator words acting on modules.
    Operator,
}

/// Linear combination of operator words; `ops[0]` acts last.
pub type OperatorWord = LinComb<Vec<ModuleOp>>;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Free(GradedVector),
    Shuffle(BMElement),
    Operator(OperatorWord),
}

fn root(datum: &CartanDatum, i: usize) -> Result<usize> {
    if i == 0 || i > datum.rank() {
        return Err(Error::IndexOutOfRange { index: i, rank: datum.rank() });
    }
    Ok(i - 1)
}

fn scalar_atom(datum: &CartanDatum, e: &Expr) -> Result<Option<ScalarFraction>> {
    Ok(Some(match e {
        Expr::Int(n) => ScalarFraction::from(LaurentPoly::from_bigint((*n).into())),
        Expr::Q => ScalarFraction::v_pow(2),
        Expr::V => ScalarFraction::v_pow(1),
        Expr::S(p, i) => {
            if *p == 0 {
                return Err(Error::Eval("symbol group index p in s(p,i) starts at 1".into()));
            }
            let a = root(datum, *i)? + 1;
            ScalarFraction::from(s_pow(datum.rank(), *p, a, 1))
        }
        Expr::Pow(b, k) => match scalar_atom(datum, b)? {
            Some(x) => x.pow(*k).map_err(|_| Error::Eval(format!("{b} is not invertible")))?,
            None => return Err(Error::Eval("exponents apply to scalars only".into())),
        },
        _ => return Ok(None),
    }))
}

/// Evaluates in a free monoid algebra with keys `K`; `gen` maps generator
/// and word nodes.
fn eval_monoid<K: Ord + Clone>(
    datum: &CartanDatum,
    e: &Expr,
    unit: &K,
    concat: &dyn Fn(&K, &K) -> K,
    gen: &dyn Fn(&Expr) -> Result<LinComb<K>>,
) -> Result<LinComb<K>> {
    if let Some(s) = scalar_atom(datum, e)? {
        return Ok(LinComb::term(unit.clone(), s));
    }
    let rec = |x: &Expr| eval_monoid(datum, x, unit, concat, gen);
    Ok(match e {
        Expr::Neg(a) => -rec(a)?,
        Expr::Add(a, b) => rec(a)? + rec(b)?,
        Expr::Sub(a, b) => rec(a)? - rec(b)?,
        Expr::Mul(a, b) => {
            let (x, y) = (rec(a)?, rec(b)?);
            let mut out = LinComb::zero();
            for (u, p) in x.iter() {
                for (w, r) in y.iter() {
                    out.add_term(concat(u, w), p * r);
                }
            }
            out
        }
        _ => gen(e)?,
    })
}

/// Free-algebra value of `e`; `F(i)` is the letter `i`, `F(i,k)` a divided power.
pub fn eval_free(datum: &CartanDatum, e: &Expr) -> Result<GradedVector> {
    let gen = |e: &Expr| -> Result<GradedVector> {
        match e {
            Expr::Word(ls) => {
                let w: Vec<u8> = ls.iter().map(|&i| root(datum, i).map(|x| x as u8)).collect::<Result<_>>()?;
                Ok(LinComb::basis(Word(w)))
            }
            Expr::Gen(Gen::F(i, k)) => Ok(divided_power_word(datum, root(datum, *i)?, k.unwrap_or(1))),
            Expr::Gen(Gen::Dp(i, k)) => Ok(divided_power_word(datum, root(datum, *i)?, *k)),
            Expr::Gen(Gen::Serre(i, j)) => serre_element(datum, root(datum, *i)?, root(datum, *j)?),
            Expr::Gen(g) => Err(Error::Eval(format!("module operator {g} in a ring-element context"))),
            _ => unreachable!("handled by the evaluator"),
        }
    };
    eval_monoid(datum, e, &Word::empty(), &|a, b| a.concat(b), &gen)
}

/// Operator-word value of `e`: words and divided powers become products of
/// `F`, and `serre(i,j)` the corresponding alternating sum.
pub fn eval_operator(datum: &CartanDatum, e: &Expr) -> Result<OperatorWord> {
    let gen = |e: &Expr| -> Result<OperatorWord> {
        Ok(match e {
            Expr::Word(ls) => {
                let ops: Vec<ModuleOp> =
                    ls.iter().map(|&i| root(datum, i).map(|a| ModuleOp::F(a, 1))).collect::<Result<_>>()?;
                LinComb::basis(ops)
            }
            Expr::Gen(Gen::F(i, k)) => LinComb::basis(vec![ModuleOp::F(root(datum, *i)?, k.unwrap_or(1))]),
            Expr::Gen(Gen::E(i, k)) => LinComb::basis(vec![ModuleOp::E(root(datum, *i)?, k.unwrap_or(1))]),
            Expr::Gen(Gen::K(i)) => LinComb::basis(vec![ModuleOp::K(root(datum, *i)?)]),
            Expr::Gen(Gen::Kinv(i)) => LinComb::basis(vec![ModuleOp::Kinv(root(datum, *i)?)]),
            Expr::Gen(Gen::Dp(i, k)) => LinComb::basis(vec![ModuleOp::F(root(datum, *i)?, *k)]),
            Expr::Gen(Gen::Serre(i, j)) => {
                let (a, b) = (root(datum, *i)?, root(datum, *j)?);
                let k = serre_degree(datum, a, b)?;
                let mut out = OperatorWord::zero();
                for l in 0..=k {
                    let sign = if (k - l) % 2 == 0 { 1 } else { -1 };
                    out.add_term(
                        vec![ModuleOp::F(a, l), ModuleOp::F(b, 1), ModuleOp::F(a, k - l)],
                        ScalarFraction::from_int(sign),
                    );
                }
                out
            }
            _ => unreachable!("handled by the evaluator"),
        })
    };
    eval_monoid(datum, e, &Vec::new(), &|a: &Vec<ModuleOp>, b| [a.as_slice(), b].concat(), &gen)
}

/// Evaluates `e` in the requested carrier.
pub fn eval(datum: &CartanDatum, e: &Expr, carrier: Carrier) -> Result<Value> {
    Ok(match carrier {
        Carrier::Free => Value::Free(eval_free(datum, e)?),
        Carrier::Shuffle(mode) => {
            let x = eval_free(datum, e)?;
            Value::Shuffle(iota(&BilinearForm::new(datum), &x, mode)?)
        }
        Carrier::Operator => Value::Operator(eval_operator(datum, e)?),
    })
}

/// Applies an operator combination to a module element.
pub fn apply_operator(module: &VermaModule, op: &OperatorWord, x: &TensorElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for (word, c) in op.iter() {
        out.add_scaled(&module.apply_word(word, x), c);
    }
    out
}

/// Expressions whose printing must reparse to the same tree.
pub const CORPUS: &[&str] = &[
    "F(1)*F(2) - q^-1*F(2)*F(1)",
    "serre(1,2)",
    "serre(2,1) + serre(1,2)",
    "F(0)",
    "w[1,2]",
    "w[1,2,1,2]",
    "dp(1,2)*w[2]",
    "dp(2,3)",
    "F(1,2)",
    "E(1,3)*F(1,3)",
    "E(2)*F(2) - F(2)*E(2)",
    "K(1)*E(2)*Kinv(1)",
    "Kinv(2)",
    "q",
    "v^3",
    "q^-2",
    "s(1,1)",
    "s(2,1)^-1*s(1,2)^2",
    "7",
    "2^10",
    "-F(1)",
    "--w[1]",
    "-(F(1) + F(2))",
    "-(F(1)*F(2))",
    "(F(1) + F(2))*(F(1) - F(2))",
    "F(1) - (F(2) - F(1))",
    "F(1) - (F(2) + F(1))",
    "F(1)*(F(2)*F(1))",
    "(F(1)*F(2))*F(1)",
    "q*w[1] + v^-1*w[2] - 3*w[1,2]",
    "(q - q^-1)*E(1)",
    "F(1)*-F(2)",
    "1 + 2*(3 + 4*(5 - 6))",
    "s(1,1)*v^2*(w[1,1] - w[1])",
    "E(1)*F(1,2) - F(1,2)*E(1)",
    "F(3,2)*K(3)*E(3)",
    "serre(1,3)*w[2]",
    "-v^-1*(dp(1,1) + dp(2,1))",
];

/// Malformed inputs with the expected position of the error.
pub const ERROR_CASES: &[(&str, usize, usize)] = &[
    ("F(1", 1, 2),
    ("q^", 1, 3),
    ("q^x", 1, 3),
    ("F(1) $ 2", 1, 6),
    ("(F(1)\n + w[1]", 1, 1),
    ("w[1,2] )", 1, 8),
    ("foo(1)", 1, 1),
    ("F(1) +\n  * F(2)", 2, 3),
    ("w[1,", 1, 5),
    ("s(1)", 1, 1),
    ("", 1, 1),
];

/// Round trip over [`CORPUS`] and error positions over [`ERROR_CASES`].
pub fn round_trip_check() -> crate::checks::Report {
    let mut r = crate::checks::Report::default();
    for t in CORPUS {
        let ok = match parse(t) {
            Ok(e) => parse(&e.to_string()).is_ok_and(|f| f == e),
            Err(_) => false,
        };
        r.push("round trip", *t, ok);
    }
    for &(t, l, c) in ERROR_CASES {
        let ok = matches!(parse(t), Err(Error::Parse { line, column, .. }) if (line, column) == (l, c));
        r.push(format!("error at {l}:{c}"), t.escape_debug().to_string(), ok);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_algebra::word_vector;
    use crate::scalar::sym;

    #[test]
    fn parses_examples() {
        let e = parse("F(1)*F(2) - q^-1*F(2)*F(1)").unwrap();
        assert!(matches!(e, Expr::Sub(..)));
        assert_eq!(parse("serre(1,2)").unwrap(), Expr::Gen(Gen::Serre(1, 2)));
        assert_eq!(parse("F(0)").unwrap(), Expr::Gen(Gen::F(0, None)));
        let a2 = CartanDatum::preset("A2").unwrap();
        assert!(matches!(eval_free(&a2, &parse("F(0)").unwrap()), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn evaluates_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let Value::Shuffle(s) = eval(&a2, &parse("serre(1,2)").unwrap(), Carrier::Shuffle(IotaMode::Plain)).unwrap()
        else {
            panic!()
        };
        assert!(s.is_zero());
        assert_eq!(eval_free(&a2, &parse("w[1,2]").unwrap()).unwrap(), word_vector(Word(vec![0, 1])));
        let x = eval_free(&a2, &parse("dp(1,2)*w[2]").unwrap()).unwrap();
        let two = ScalarFraction::from(sym(2, &LaurentPoly::v_pow(1)));
        assert_eq!(x.scale(&two), word_vector(Word(vec![0, 0, 1])));
        assert!(matches!(eval_free(&a2, &parse("E(1)").unwrap()), Err(Error::Eval(_))));
    }

    #[test]
    fn corpus_and_error_positions() {
        assert!(CORPUS.len() >= 30);
        let r = round_trip_check();
        assert!(r.all_pass(), "{:?}", r.failures());
    }

    #[test]
    fn printing_round_trips() {
        for t in ["-(F(1) + F(2))*E(1)", "q^-1 - -v", "2^3*s(1,2)^-2*w[1,2,1]", "F(1) - (F(2) - w[1])"] {
            let e = parse(t).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{t} -> {e}");
        }
    }
}
