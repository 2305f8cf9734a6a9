//! Sparse finite linear combinations with exact coefficients.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::scalar::{LaurentPoly, ScalarFraction, Symbols};

/// Finite map from basis labels to nonzero scalars.
#[derive(Clone, Debug)]
pub struct LinComb<K: Ord> {
    coeffs: BTreeMap<K, ScalarFraction>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { coeffs: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, ScalarFraction::one())
    }

    pub fn term(k: K, c: ScalarFraction) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c);
        out
    }

    pub fn add_term(&mut self, k: K, c: ScalarFraction) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_poly_term(&mut self, k: K, c: LaurentPoly) {
        self.add_term(k, ScalarFraction::from(c));
    }

    pub fn get(&self, k: &K) -> ScalarFraction {
        self.coeffs.get(k).cloned().unwrap_or_else(ScalarFraction::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, ScalarFraction> {
        self.coeffs.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.coeffs.keys()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &ScalarFraction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LinComb {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, x)| (k.clone(), x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &ScalarFraction) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.coeffs {
            self.add_term(k.clone(), x * c);
        }
    }

    pub fn map_keys<J: Ord + Clone>(&self, f: impl Fn(&K) -> J) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, x) in &self.coeffs {
            out.add_term(f(k), x.clone());
        }
        out
    }

    pub fn filter(&self, pred: impl Fn(&K) -> bool) -> Self {
        LinComb {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, x)| (k.clone(), x.clone()))
                .collect(),
        }
    }

    /// Renders `c1*label1 + c2*label2 ..` with a label printer.
    pub fn fmt_with(&self, sym: &Symbols, label: impl Fn(&K) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in &self.coeffs {
            let mut cs = c.fmt_with(sym);
            let lab = label(k);
            let negative = cs.starts_with('-') && !cs[1..].contains([' ', '/']);
            if negative {
                cs.remove(0);
            }
            if !out.is_empty() {
                out.push_str(if negative { " - " } else { " + " });
            } else if negative {
                out.push('-');
            }
            let needs_paren = cs.contains(' ') || (cs.contains('/') && !cs.starts_with('('));
            out.push_str(&if cs == "1" {
                lab
            } else if needs_paren {
                format!("({cs})*{lab}")
            } else {
                format!("{cs}*{lab}")
            });
        }
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, ScalarFraction)> for LinComb<K> {
    fn from_iter<T: IntoIterator<Item = (K, ScalarFraction)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> PartialEq for LinComb<K> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .all(|((k1, x1), (k2, x2))| k1 == k2 && x1 == x2)
    }
}

impl<K: Ord> Eq for LinComb<K> {}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, x) in &rhs.coeffs {
            out.add_term(k.clone(), x.clone());
        }
        out
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        for (k, x) in &rhs.coeffs {
            out.add_term(k.clone(), -x);
        }
        out
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            coeffs: self.coeffs.iter().map(|(k, x)| (k.clone(), -x)).collect(),
        }
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: LinComb<K>) -> LinComb<K> {
        &self + &rhs
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: LinComb<K>) -> LinComb<K> {
        &self - &rhs
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let a = LinComb::basis(1u8);
        let b = LinComb::term(1u8, ScalarFraction::from_int(-1));
        assert!((&a + &b).is_zero());
        assert_eq!(a.get(&2), ScalarFraction::zero());
    }
}
