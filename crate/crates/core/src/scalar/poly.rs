use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Symbols;

/// Exponent vector of a Laurent monomial.
///
/// Slot 0 is `v` (with `v^2 = q`); slot `1 + p*rank + a` is the puncture
/// symbol `s_{p+1, a+1}`. Trailing zero slots are never stored, so two
/// monomials are equal exactly when their stored vectors are equal. The
/// order is lexicographic with slot 0 most significant and missing slots
/// read as zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<i32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(slot: usize, e: i32) -> Self {
        let mut exps = vec![0; slot + 1];
        exps[slot] = e;
        Self::new(exps)
    }

    pub fn exp(&self, slot: usize) -> i32 {
        self.0.get(slot).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn slots(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| f(self.exp(i), other.exp(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        self.zip_with(other, |a, b| a + b)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn inv(&self) -> Self {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Self {
        Self::new(self.0.iter().map(|e| e * k).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.min(b))
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// True when only the `v` slot is used.
    pub fn is_v_only(&self) -> bool {
        self.0.len() <= 1
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of `Z[v^{±1}, s_{p,a}^{±1}]`, stored sparsely without zero terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(Monomial::var(0, e), BigInt::one())
    }

    pub fn var_pow(slot: usize, e: i32) -> Self {
        Self::monomial(Monomial::var(slot, e), BigInt::one())
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// A monomial with coefficient ±1.
    pub fn is_unit(&self) -> bool {
        self.single_term().is_some_and(|(_, c)| c.abs().is_one())
    }

    pub fn inverse_unit(&self) -> Result<Self> {
        match self.single_term() {
            Some((m, c)) if c.abs().is_one() => Ok(Self::monomial(m.inv(), c.clone())),
            _ => Err(Error::NonInvertible(self.to_string())),
        }
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inverse_unit()?.pow(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        Ok(acc)
    }

    pub fn scale_monomial(&self, m: &Monomial) -> Self {
        if m.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect(),
        }
    }

    /// Positive gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, x)| (k.clone(), x / c)).collect(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        it.fold(first.clone(), |acc, m| acc.meet(m))
    }

    pub fn max_slots(&self) -> usize {
        self.terms.keys().map(Monomial::slots).max().unwrap_or(0)
    }

    pub fn is_v_only(&self) -> bool {
        self.terms.keys().all(Monomial::is_v_only)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((dm, dc)) = d.single_term() {
            let mut q = Self::zero();
            for (m, c) in &self.terms {
                let (quo, rem) = c.div_rem(dc);
                if !rem.is_zero() {
                    return None;
                }
                q.terms.insert(m.div(dm), quo);
            }
            return Some(q);
        }
        let ma = self.min_monomial();
        let mb = d.min_monomial();
        let mut r = self.scale_monomial(&ma.inv());
        let b = d.scale_monomial(&mb.inv());
        let (lbm, lbc) = b.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut q = Self::zero();
        while let Some((lm, lc)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let shift = lm.div(&lbm);
            if !shift.is_nonneg() {
                return None;
            }
            let (quo, rem) = lc.div_rem(&lbc);
            if !rem.is_zero() {
                return None;
            }
            for (m, c) in &b.terms {
                r.add_term(m.mul(&shift), -(c * &quo));
            }
            q.add_term(shift, quo);
        }
        Some(q.scale_monomial(&ma.div(&mb)))
    }

    pub fn fmt_with(&self, sym: &Symbols) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let q_mode = sym.q_notation && self.terms.keys().all(|m| m.exp(0) % 2 == 0);
        let mut out = String::new();
        // highest terms first reads more naturally
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors = monomial_factors(m, sym, q_mode);
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

fn monomial_factors(m: &Monomial, sym: &Symbols, q_mode: bool) -> Vec<String> {
    let mut out = Vec::new();
    for (slot, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        let (name, e) = if slot == 0 {
            if q_mode {
                ("q".to_string(), e / 2)
            } else {
                ("v".to_string(), e)
            }
        } else {
            (sym.slot_name(slot), e)
        };
        if e == 1 {
            out.push(name);
        } else {
            out.push(format!("{name}^{e}"));
        }
    }
    out
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&Symbols::default()))
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = rhs.single_term() {
            if c.is_one() {
                return self.scale_monomial(m);
            }
        }
        if let Some((m, c)) = self.single_term() {
            if c.is_one() {
                return rhs.scale_monomial(m);
            }
        }
        let mut out = LaurentPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &'a LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// Dense univariate helpers for gcds in the `v` slot.

fn to_dense_v(p: &LaurentPoly) -> (i32, Vec<BigInt>) {
    let lo = p.terms.keys().map(|m| m.exp(0)).min().unwrap_or(0);
    let hi = p.terms.keys().map(|m| m.exp(0)).max().unwrap_or(0);
    let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (m, c) in &p.terms {
        dense[(m.exp(0) - lo) as usize] += c;
    }
    (lo, dense)
}

fn from_dense_v(shift: i32, dense: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(
        dense
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::var(0, shift + i as i32), c.clone())),
    )
}

fn trim(a: &mut Vec<BigInt>) {
    while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
}

fn dense_content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(mut a: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut a);
    let c = dense_content(&a);
    if c.is_zero() || c.is_one() {
        return a;
    }
    a.into_iter().map(|x| x / &c).collect()
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    trim(&mut r);
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        trim(&mut r);
        if dr == 0 {
            break;
        }
    }
    r
}

fn is_dense_zero(a: &[BigInt]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Gcd of two polynomials in `v` alone (up to sign and monomial units).
pub(crate) fn gcd_v(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let (_, da) = to_dense_v(a);
    let (_, db) = to_dense_v(b);
    let g_content = dense_content(&da).gcd(&dense_content(&db));
    let mut x = primitive(da);
    let mut y = primitive(db);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !is_dense_zero(&y) {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = primitive(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    let mut g = primitive(x);
    if g.last().is_some_and(Signed::is_negative) {
        g = g.into_iter().map(|c| -c).collect();
    }
    from_dense_v(0, &g).scale_int(&g_content)
}

/// Splits `p` into univariate `v`-polynomials keyed by the remaining slots.
pub(crate) fn v_coefficients(p: &LaurentPoly) -> Vec<LaurentPoly> {
    let mut groups: BTreeMap<Vec<i32>, LaurentPoly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let rest: Vec<i32> = m.exps().iter().skip(1).copied().collect();
        groups
            .entry(rest)
            .or_default()
            .add_term(Monomial::var(0, m.exp(0)), c.clone());
    }
    groups.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn one_plus_v_times_one_minus_v() {
        let one = LaurentPoly::one();
        let p = (&one + &v(1)) * (&one - &v(1));
        assert_eq!(p, &one - &v(2));
    }

    #[test]
    fn unit_inverse() {
        let s = LaurentPoly::var_pow(3, 1);
        assert!((&s * &s.inverse_unit().unwrap()).is_one());
        let not_unit = &LaurentPoly::one() + &v(1);
        assert!(matches!(not_unit.inverse_unit(), Err(Error::NonInvertible(_))));
    }

    #[test]
    fn exact_division_multivariate() {
        let s = LaurentPoly::var_pow(1, 1);
        let a = &LaurentPoly::one() + &(&s * &v(-1));
        let b = &v(3) - &s;
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        let c = &LaurentPoly::one() + &v(1);
        assert!(prod.exact_div(&c).is_none());
    }

    #[test]
    fn gcd_in_v() {
        let one = LaurentPoly::one();
        let a = (&one - &v(2)) * (&one + &v(3));
        let b = (&one - &v(2)) * (&one + &v(2));
        let g = gcd_v(&a, &b);
        // gcd is 1 - v^2 up to a unit; here normalised to positive leading coefficient
        assert_eq!(g, &v(2) - &one);
    }

    #[test]
    fn monomial_order_pads_with_zero() {
        let a = Monomial::new(vec![1]);
        let b = Monomial::new(vec![1, -1]);
        assert!(a > b);
        assert_eq!(Monomial::new(vec![2, 0, 0]), Monomial::new(vec![2]));
    }
}
