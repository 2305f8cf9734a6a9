//! The bilinear form on the free algebra, its Gram matrices and the rank of
//! its radical quotient.
//!
//! Internally the form is computed in normalized form
//! `p̂(w, u) = λ(c) · (w, u)` with `λ(c) = Π_β (1 - q_β^{-1})^{c(β)}`, which is
//! a Laurent polynomial in `v`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::cartan::{enumerate_words, CartanDatum, Coloring, Word};
use crate::error::Result;
use crate::free_algebra::{concat_mul, serre_degree, serre_integral, word_vector, GradedVector, TensorVector};
use crate::linalg::{rank_poly, Matrix};
use crate::scalar::{LaurentPoly, ScalarFraction};

type Memo = RwLock<HashMap<(Word, Word), LaurentPoly>>;

/// Memoizing evaluator of the form for one Cartan datum. Safe to share
/// between threads.
#[derive(Debug)]
pub struct BilinearForm {
    datum: CartanDatum,
    memo: Memo,
    mirror_memo: Memo,
}

impl BilinearForm {
    pub fn new(datum: &CartanDatum) -> Self {
        BilinearForm {
            datum: datum.clone(),
            memo: RwLock::new(HashMap::new()),
            mirror_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    /// `λ(c) = Π_β (1 - v^{-2 d_β})^{c(β)}`.
    pub fn lambda(&self, c: &Coloring) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (b, &n) in c.0.iter().enumerate() {
            let f = &LaurentPoly::one() - &LaurentPoly::v_pow(-2 * self.datum.d(b));
            for _ in 0..n {
                acc = &acc * &f;
            }
        }
        acc
    }

    fn same_content(&self, w: &Word, u: &Word) -> bool {
        w.len() == u.len() && w.content(self.datum.rank()) == u.content(self.datum.rank())
    }

    /// Normalized pairing of two words, peeling the first letter of `u`.
    pub fn pair_hat_words(&self, w: &Word, u: &Word) -> LaurentPoly {
        if !self.same_content(w, u) {
            return LaurentPoly::zero();
        }
        self.hat_rec(w, u)
    }

    fn hat_rec(&self, w: &Word, u: &Word) -> LaurentPoly {
        if w.is_empty() {
            return LaurentPoly::one();
        }
        if w.len() == 1 {
            return LaurentPoly::one();
        }
        let key = (w.clone(), u.clone());
        if let Some(x) = self.memo.read().expect("memo lock").get(&key) {
            return x.clone();
        }
        let beta = u.0[0];
        let rest_u = Word(u.0[1..].to_vec());
        let mut acc = LaurentPoly::zero();
        let mut e = 0;
        for (p, &l) in w.0.iter().enumerate() {
            if l == beta {
                let mut rest_w = w.0.clone();
                rest_w.remove(p);
                let sub = self.hat_rec(&Word(rest_w), &rest_u);
                if !sub.is_zero() {
                    acc += &sub.scale_monomial(&crate::scalar::Monomial::var(0, e));
                }
            }
            e += self.datum.inner(l as usize, beta as usize);
        }
        self.memo.write().expect("memo lock").insert(key, acc.clone());
        acc
    }

    /// Normalized pairing via the mirror recursion, peeling the first letter
    /// of `w`.
    pub fn pair_hat_words_mirror(&self, w: &Word, u: &Word) -> LaurentPoly {
        if !self.same_content(w, u) {
            return LaurentPoly::zero();
        }
        self.mirror_rec(w, u)
    }

    fn mirror_rec(&self, w: &Word, u: &Word) -> LaurentPoly {
        if w.len() <= 1 {
            return LaurentPoly::one();
        }
        let key = (w.clone(), u.clone());
        if let Some(x) = self.mirror_memo.read().expect("memo lock").get(&key) {
            return x.clone();
        }
        let alpha = w.0[0];
        let rest_w = Word(w.0[1..].to_vec());
        let mut acc = LaurentPoly::zero();
        let mut e = 0;
        for (p, &l) in u.0.iter().enumerate() {
            if l == alpha {
                let mut rest_u = u.0.clone();
                rest_u.remove(p);
                let sub = self.mirror_rec(&rest_w, &Word(rest_u));
                if !sub.is_zero() {
                    acc += &sub.scale_monomial(&crate::scalar::Monomial::var(0, e));
                }
            }
            e += self.datum.inner(l as usize, alpha as usize);
        }
        self.mirror_memo
            .write()
            .expect("memo lock")
            .insert(key, acc.clone());
        acc
    }

    pub fn pair_words(&self, w: &Word, u: &Word) -> ScalarFraction {
        let hat = self.pair_hat_words(w, u);
        if hat.is_zero() {
            return ScalarFraction::zero();
        }
        let lam = self.lambda(&w.content(self.datum.rank()));
        ScalarFraction::new(hat, lam).expect("λ is nonzero")
    }

    fn pair_with(
        &self,
        x: &GradedVector,
        y: &GradedVector,
        f: impl Fn(&Word, &Word) -> LaurentPoly,
    ) -> ScalarFraction {
        // group by content so each λ(c) is divided once
        let rank = self.datum.rank();
        let mut by_content: HashMap<Coloring, ScalarFraction> = HashMap::new();
        for (w, a) in x.iter() {
            for (u, b) in y.iter() {
                if w.len() != u.len() {
                    continue;
                }
                let cw = w.content(rank);
                if cw != u.content(rank) {
                    continue;
                }
                let h = f(w, u);
                if h.is_zero() {
                    continue;
                }
                let t = &(a * b) * &ScalarFraction::from(h);
                let e = by_content.entry(cw).or_insert_with(ScalarFraction::zero);
                *e += &t;
            }
        }
        let mut entries: Vec<_> = by_content.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        entries
            .into_iter()
            .fold(ScalarFraction::zero(), |acc, (c, s)| {
                let lam = ScalarFraction::from(self.lambda(&c));
                acc + s.checked_div(&lam).expect("λ is nonzero")
            })
    }

    /// `(x, y)`.
    pub fn pair(&self, x: &GradedVector, y: &GradedVector) -> ScalarFraction {
        self.pair_with(x, y, |w, u| self.pair_hat_words(w, u))
    }

    /// `(x, y)` through the mirror recursion.
    pub fn pair_mirror(&self, x: &GradedVector, y: &GradedVector) -> ScalarFraction {
        self.pair_with(x, y, |w, u| self.pair_hat_words_mirror(w, u))
    }

    /// Slotwise pairing of a tensor with `y1 ⊗ y2`.
    pub fn pair_tensor(&self, t: &TensorVector, y1: &GradedVector, y2: &GradedVector) -> ScalarFraction {
        let mut acc = ScalarFraction::zero();
        for ((x1, x2), c) in t.iter() {
            let p1 = self.pair(&word_vector(x1.clone()), y1);
            if p1.is_zero() {
                continue;
            }
            let p2 = self.pair(&word_vector(x2.clone()), y2);
            acc += &(&(c * &p1) * &p2);
        }
        acc
    }

    /// Gram matrix of the form on the words of content `c`.
    pub fn gram(&self, c: &Coloring, bound: usize) -> Result<(Vec<Word>, Matrix)> {
        let words = enumerate_words(c, bound)?;
        let lam = ScalarFraction::from(self.lambda(c));
        let hat = self.gram_hat_words(&words);
        let m = hat
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|h| ScalarFraction::from(h).checked_div(&lam).expect("λ is nonzero"))
                    .collect()
            })
            .collect();
        Ok((words, m))
    }

    /// Normalized Gram matrix `λ(c)·gram(c)`, polynomial in `v`.
    pub fn gram_hat(&self, c: &Coloring, bound: usize) -> Result<(Vec<Word>, Vec<Vec<LaurentPoly>>)> {
        let words = enumerate_words(c, bound)?;
        let m = self.gram_hat_words(&words);
        Ok((words, m))
    }

    fn gram_hat_words(&self, words: &[Word]) -> Vec<Vec<LaurentPoly>> {
        words
            .iter()
            .map(|w| words.iter().map(|u| self.pair_hat_words(w, u)).collect())
            .collect()
    }

    /// Rank of the Gram matrix at `c`: the dimension of the radical quotient
    /// in weight `c`.
    pub fn radical_rank(&self, c: &Coloring, bound: usize) -> Result<usize> {
        let (_, m) = self.gram_hat(c, bound)?;
        Ok(rank_poly(m))
    }
}

/// Independent dimension count: `|words(c)|` minus the rank of the span of
/// all `u · S · v` with `S` a Serre element and `u, v` words.
pub fn ideal_span_dimension(datum: &CartanDatum, c: &Coloring, bound: usize) -> Result<usize> {
    let words = enumerate_words(c, bound)?;
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rank = datum.rank();
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::new();
    for i in 0..rank {
        for j in 0..rank {
            if i == j {
                continue;
            }
            let k = serre_degree(datum, i, j)?;
            let sc = Coloring::zero(rank).add_root(i, k as u32).add_root(j, 1);
            let Some(rest) = c.checked_sub(&sc) else {
                continue;
            };
            let s = serre_integral(datum, i, j)?;
            for cu in sub_colorings(&rest) {
                let cv = rest.checked_sub(&cu).expect("sub-coloring");
                let us = enumerate_words(&cu, bound)?;
                let vs = enumerate_words(&cv, bound)?;
                for u in &us {
                    let left = concat_mul(&word_vector(u.clone()), &s);
                    for v in &vs {
                        let x = concat_mul(&left, &word_vector(v.clone()));
                        let mut row = vec![LaurentPoly::zero(); words.len()];
                        for (w, coef) in x.iter() {
                            row[index[w]] = coef.as_poly().expect("integral Serre span").clone();
                        }
                        rows.push(row);
                    }
                }
            }
        }
    }
    let r = if rows.is_empty() { 0 } else { rank_poly(rows) };
    Ok(words.len() - r)
}

/// All colorings `c' <= c` componentwise.
pub fn sub_colorings(c: &Coloring) -> Vec<Coloring> {
    let mut out = vec![Vec::new()];
    for &n in &c.0 {
        let mut next = Vec::new();
        for prefix in &out {
            for k in 0..=n {
                let mut p: Vec<u32> = prefix.clone();
                p.push(k);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(Coloring).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;

    fn w(l: &[u8]) -> Word {
        Word(l.to_vec())
    }

    fn base(d: i32) -> ScalarFraction {
        ScalarFraction::new(LaurentPoly::one(), &LaurentPoly::one() - &LaurentPoly::v_pow(-2 * d)).unwrap()
    }

    #[test]
    fn base_case() {
        for name in ["A2", "B2", "G2"] {
            let datum = CartanDatum::preset(name).unwrap();
            let form = BilinearForm::new(&datum);
            for a in 0..2u8 {
                for b in 0..2u8 {
                    let p = form.pair(&word_vector(w(&[a])), &word_vector(w(&[b])));
                    if a == b {
                        assert_eq!(p, base(datum.d(a as usize)));
                    } else {
                        assert!(p.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn a2_two_letter_values() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let form = BilinearForm::new(&a2);
        let b = base(1);
        let p = form.pair_words(&w(&[0, 1]), &w(&[1, 0]));
        assert_eq!(p, &(&b * &b) * &ScalarFraction::v_pow(-1));
        let mirror = form.pair_mirror(&word_vector(w(&[0, 1])), &word_vector(w(&[1, 0])));
        assert_eq!(p, mirror);
        let (words, g) = form.gram(&Coloring(vec![1, 1]), 8).unwrap();
        assert_eq!(words, vec![w(&[0, 1]), w(&[1, 0])]);
        assert_eq!(g[0][0], &b * &b);
        assert_eq!(g[1][1], &b * &b);
        assert_eq!(g[0][1], g[1][0]);
        assert_eq!(rank(&g), 2);
    }

    #[test]
    fn small_ranks() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let form = BilinearForm::new(&a2);
        assert_eq!(form.radical_rank(&Coloring(vec![1, 0]), 8).unwrap(), 1);
        assert_eq!(form.radical_rank(&Coloring(vec![2, 1]), 8).unwrap(), 2);
        assert_eq!(ideal_span_dimension(&a2, &Coloring(vec![2, 1]), 8).unwrap(), 2);
        let (_, g0) = form.gram(&Coloring(vec![0, 0]), 8).unwrap();
        assert!(g0[0][0].is_one());
        let a1 = CartanDatum::preset("A1").unwrap();
        let f1 = BilinearForm::new(&a1);
        for k in 1..=6 {
            assert_eq!(f1.radical_rank(&Coloring(vec![k]), 8).unwrap(), 1);
        }
    }
}
