//! Universal Verma modules and their tensor products.
//!
//! A module element is stored in shuffle coordinates: the vacuum is `δ_∅`,
//! and `F_{w_1} .. F_{w_r} v₀` is `ι̂(w)`. For `n` folds an element is a
//! combination of `n`-tuples of words. Fold `p` carries the symbols
//! `s_{g,α}` of its symbol group `g`, and
//!
//! * `K_α` acts on fold content `c` by `s_{g,α}^{-1} v^{-(α,c)}`,
//! * `Δ(F) = F ⊗ 1 + K^{-1} ⊗ F`, `Δ(E) = E ⊗ K + 1 ⊗ E`,
//! * `E_α` acts on a single fold by
//!   `(E m)[u] = s^{-1} v^{-(α,c)+2d_α} m[αu] - s m[uα]`, `c` the weight of `m`.

use std::collections::BTreeMap;
use std::collections::HashMap;

use crate::bilinear_form::BilinearForm;
use crate::cartan::{enumerate_words, CartanDatum, Coloring, Word};
use crate::error::{Error, Result};
use crate::free_algebra::v_root;
use crate::lincomb::LinComb;
use crate::linalg::{inverse, rank_poly, Matrix};
use crate::scalar::{s_pow, sym_factorial, LaurentPoly, Monomial, ScalarFraction};
use crate::shuffle_image::{shuffle_words, BMElement};

/// Element of an `n`-fold tensor product, keyed by `n`-tuples of words.
pub type TensorElement = LinComb<Vec<Word>>;
/// Element of a split tensor product: a pair of tuples (left block, right block).
pub type SplitElement = LinComb<(Vec<Word>, Vec<Word>)>;

/// Assignment of puncture symbols to folds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightParams {
    rank: usize,
    groups: Vec<usize>,
}

impl WeightParams {
    /// `n` folds with distinct symbols `s_{1,·}, .., s_{n,·}`.
    pub fn distinct(rank: usize, n: usize) -> Self {
        WeightParams { rank, groups: (0..n).collect() }
    }

    /// `n` folds all carrying `s_{1,·}`.
    pub fn equal(rank: usize, n: usize) -> Self {
        WeightParams { rank, groups: vec![0; n] }
    }

    /// Fold `p` uses symbol group `groups[p]` (0-based).
    pub fn with_groups(rank: usize, groups: Vec<usize>) -> Self {
        WeightParams { rank, groups }
    }

    pub fn n(&self) -> usize {
        self.groups.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn groups(&self) -> &[usize] {
        &self.groups
    }

    /// Number of exponent slots needed to print scalars over these symbols.
    pub fn num_slots(&self) -> usize {
        1 + self.rank * (self.groups.iter().max().map_or(0, |g| g + 1))
    }

    /// `s_{g(p), α}^e` for fold `p` (0-based fold and root).
    pub fn s(&self, p: usize, alpha: usize, e: i32) -> LaurentPoly {
        s_pow(self.rank, self.groups[p] + 1, alpha + 1, e)
    }

    /// Parameters of the folds in `range`.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Self {
        WeightParams { rank: self.rank, groups: self.groups[range].to_vec() }
    }
}

/// Generators acting on modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleOp {
    /// `F_α^{(k)}`
    F(usize, usize),
    /// `E_α^{(k)} = E_α^k / [k]!`
    E(usize, usize),
    K(usize),
    Kinv(usize),
}

/// An `n`-fold tensor product of universal Verma modules.
#[derive(Clone, Debug)]
pub struct VermaModule {
    datum: CartanDatum,
    params: WeightParams,
}

fn monomial_v(e: i32) -> Monomial {
    Monomial::var(0, e)
}

impl VermaModule {
    pub fn new(datum: &CartanDatum, params: WeightParams) -> Self {
        assert_eq!(datum.rank(), params.rank(), "parameter rank mismatch");
        VermaModule { datum: datum.clone(), params }
    }

    /// A single Verma module with symbols `s_{1,·}`.
    pub fn single(datum: &CartanDatum) -> Self {
        Self::new(datum, WeightParams::distinct(datum.rank(), 1))
    }

    /// `n` folds with distinct symbols.
    pub fn tensor(datum: &CartanDatum, n: usize) -> Self {
        Self::new(datum, WeightParams::distinct(datum.rank(), n))
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn params(&self) -> &WeightParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    pub fn vacuum(&self) -> TensorElement {
        LinComb::basis(vec![Word::empty(); self.n()])
    }

    /// Embeds a single-fold element.
    pub fn from_bm(m: &BMElement) -> TensorElement {
        m.map_keys(|w| vec![w.clone()])
    }

    /// Projects a single-fold element back to shuffle coordinates.
    pub fn to_bm(x: &TensorElement) -> BMElement {
        x.map_keys(|t| t[0].clone())
    }

    fn contents(&self, t: &[Word]) -> Vec<Coloring> {
        t.iter().map(|w| w.content(self.datum.rank())).collect()
    }

    /// Eigenvalue of `K_α` on fold `p` at content `c`.
    pub fn fold_k(&self, p: usize, alpha: usize, c: &Coloring) -> LaurentPoly {
        self.params
            .s(p, alpha, -1)
            .scale_monomial(&monomial_v(-self.datum.inner_root_coloring(alpha, c)))
    }

    /// Eigenvalue of `K^{-c'} = Π_β K_β^{-c'_β}` on fold `p` at content `c`.
    fn fold_kinv_coloring(&self, p: usize, cprime: &Coloring, c: &Coloring) -> LaurentPoly {
        let mut exps = vec![0i32; self.params.num_slots().max(1)];
        exps[0] = self.datum.inner_colorings(cprime, c);
        for (b, &n) in cprime.0.iter().enumerate() {
            if n > 0 {
                let slot = crate::scalar::s_slot(self.datum.rank(), self.params.groups()[p] + 1, b + 1);
                if exps.len() <= slot {
                    exps.resize(slot + 1, 0);
                }
                exps[slot] += n as i32;
            }
        }
        LaurentPoly::monomial(Monomial::new(exps), 1.into())
    }

    /// Eigenvalue of `K_α` on the weight space with total content `c`:
    /// `(Π_p s_{p,α}^{-1}) v^{-(α,c)}`.
    pub fn k_eigenvalue(&self, alpha: usize, c: &Coloring) -> LaurentPoly {
        let mut acc = LaurentPoly::v_pow(-self.datum.inner_root_coloring(alpha, c));
        for p in 0..self.n() {
            acc = &acc * &self.params.s(p, alpha, -1);
        }
        acc
    }

    /// Action of a shuffle-side element of `U^-` (given in normalized
    /// coordinates) by iterated coproduct: for every deconcatenation
    /// `w = w^1 .. w^n`, fold `p` is first scaled by `K^{-c(w^{>p})}` and
    /// then multiplied by `δ_{w^p}`.
    pub fn act_bm(&self, a: &BMElement, x: &TensorElement) -> TensorElement {
        let n = self.n();
        let rank = self.datum.rank();
        let mut out: BTreeMap<Vec<Word>, ScalarFraction> = BTreeMap::new();
        for (t, xc) in x.iter() {
            let cs = self.contents(t);
            for (w, ac) in a.iter() {
                let coef = xc * ac;
                let mut cuts = vec![0usize; n + 1];
                cuts[n] = w.len();
                self.deconcat(w, &mut cuts, 1, &mut |cuts| {
                    let mut scalar = LaurentPoly::one();
                    let mut folds: Vec<BTreeMap<Word, LaurentPoly>> = Vec::with_capacity(n);
                    for p in 0..n {
                        let piece = &w.0[cuts[p]..cuts[p + 1]];
                        let later = Word(w.0[cuts[p + 1]..].to_vec()).content(rank);
                        if !later.is_zero() {
                            scalar = &scalar * &self.fold_kinv_coloring(p, &later, &cs[p]);
                        }
                        folds.push(shuffle_words(&self.datum, piece, &t[p].0));
                    }
                    let base = &coef * &ScalarFraction::from(scalar);
                    cartesian(&folds, &mut |key, poly| {
                        let term = &base * poly;
                        out.entry(key).and_modify(|s| *s += &term).or_insert(term);
                    });
                });
            }
        }
        out.into_iter().collect()
    }

    fn deconcat(&self, w: &Word, cuts: &mut Vec<usize>, idx: usize, f: &mut dyn FnMut(&[usize])) {
        let n = cuts.len() - 1;
        if idx == n {
            f(cuts);
            return;
        }
        for c in cuts[idx - 1]..=w.len() {
            cuts[idx] = c;
            self.deconcat(w, cuts, idx + 1, f);
        }
    }

    /// `F_α^{(k)}`.
    pub fn act_f(&self, alpha: usize, k: usize, x: &TensorElement) -> TensorElement {
        let d = self.datum.d(alpha);
        let k32 = k as i32;
        let a = LinComb::term(Word::repeat(alpha, k), ScalarFraction::v_pow(d * k32 * (k32 - 1) / 2));
        self.act_bm(&a, x)
    }

    /// `E_α`.
    pub fn act_e(&self, alpha: usize, x: &TensorElement) -> TensorElement {
        let d2 = 2 * self.datum.d(alpha);
        let a = alpha as u8;
        let mut out = TensorElement::zero();
        for (t, xc) in x.iter() {
            let cs = self.contents(t);
            // K_α on the folds after p
            let mut tail = vec![LaurentPoly::one(); self.n() + 1];
            for p in (0..self.n()).rev() {
                tail[p] = &tail[p + 1] * &self.fold_k(p, alpha, &cs[p]);
            }
            for p in 0..self.n() {
                let u = &t[p].0;
                if u.is_empty() {
                    continue;
                }
                let c = &cs[p];
                let kt = ScalarFraction::from(tail[p + 1].clone());
                if u[0] == a {
                    let e = -self.datum.inner_root_coloring(alpha, c) + d2;
                    let coef = self.params.s(p, alpha, -1).scale_monomial(&monomial_v(e));
                    let mut key = t.clone();
                    key[p] = Word(u[1..].to_vec());
                    out.add_term(key, &(xc * &kt) * &coef);
                }
                if u[u.len() - 1] == a {
                    let coef = -self.params.s(p, alpha, 1);
                    let mut key = t.clone();
                    key[p] = Word(u[..u.len() - 1].to_vec());
                    out.add_term(key, &(xc * &kt) * &coef);
                }
            }
        }
        out
    }

    /// `E_α^{(k)} = E_α^k / [k]_{v^{d_α}}!`.
    pub fn act_e_power(&self, alpha: usize, k: usize, x: &TensorElement) -> TensorElement {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.act_e(alpha, &y);
        }
        let f = ScalarFraction::from(sym_factorial(k as i32, &v_root(&self.datum, alpha)));
        y.scale(&ScalarFraction::one().checked_div(&f).expect("nonzero"))
    }

    /// `K_α^e`.
    pub fn act_k(&self, alpha: usize, e: i32, x: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (t, xc) in x.iter() {
            let mut ev = LaurentPoly::one();
            for (p, c) in self.contents(t).iter().enumerate() {
                ev = &ev * &self.fold_k(p, alpha, c);
            }
            let ev = ev.pow(e).expect("monomial eigenvalue");
            out.add_term(t.clone(), xc * &ScalarFraction::from(ev));
        }
        out
    }

    pub fn apply(&self, op: ModuleOp, x: &TensorElement) -> TensorElement {
        match op {
            ModuleOp::F(a, k) => self.act_f(a, k, x),
            ModuleOp::E(a, k) => self.act_e_power(a, k, x),
            ModuleOp::K(a) => self.act_k(a, 1, x),
            ModuleOp::Kinv(a) => self.act_k(a, -1, x),
        }
    }

    /// Applies `ops` right to left, as in the operator word `ops[0] * ops[1] * ..`.
    pub fn apply_word(&self, ops: &[ModuleOp], x: &TensorElement) -> TensorElement {
        ops.iter().rev().fold(x.clone(), |acc, &op| self.apply(op, &acc))
    }

    /// Adjoint of `F_α^{(k)}` for the dual-basis pairing, on the dual side.
    /// For one fold this is the deletion formula
    /// `E^{[k]} δ_w = Σ_S v^{e(S) + d k(k-1)/2} δ_{w∖S}` over `k`-sets `S` of
    /// `α`-positions.
    pub fn act_e_divided(&self, alpha: usize, k: usize, x: &TensorElement) -> TensorElement {
        if self.n() == 1 {
            return self.e_divided_single(alpha, k, x);
        }
        // transpose of the module action, computed per candidate preimage
        let mut out = TensorElement::zero();
        for (t, xc) in x.iter() {
            for cand in deletions(t, alpha as u8, k) {
                let img = self.act_f(alpha, k, &LinComb::basis(cand.clone()));
                let c = img.get(t);
                if !c.is_zero() {
                    out.add_term(cand, xc * &c);
                }
            }
        }
        out
    }

    fn e_divided_single(&self, alpha: usize, k: usize, x: &TensorElement) -> TensorElement {
        let d = self.datum.d(alpha);
        let k32 = k as i32;
        let base = d * k32 * (k32 - 1) / 2;
        let a = alpha as u8;
        let mut out = TensorElement::zero();
        for (t, xc) in x.iter() {
            let w = &t[0].0;
            let pos: Vec<usize> = (0..w.len()).filter(|&i| w[i] == a).collect();
            for_each_k_subset(pos.len(), k, &mut |sel| {
                let mut mask = 0u64;
                for &s in sel {
                    mask |= 1 << pos[s];
                }
                let e = crate::free_algebra::subset_exponent(&self.datum, w, mask) + base;
                let rest: Vec<u8> = (0..w.len()).filter(|&i| mask >> i & 1 == 0).map(|i| w[i]).collect();
                out.add_term(vec![Word(rest)], xc * &ScalarFraction::v_pow(e));
            });
        }
        out
    }

    /// Dual-side `F^{[1]}_α`: the transpose of `E_α` (single fold).
    pub fn act_f_dual(&self, alpha: usize, x: &TensorElement) -> TensorElement {
        assert_eq!(self.n(), 1, "dual F is implemented for one fold");
        let a = alpha as u8;
        let mut out = TensorElement::zero();
        for (t, xc) in x.iter() {
            let u = &t[0];
            let c = u.content(self.datum.rank());
            let e = -self.datum.inner_root_coloring(alpha, &c);
            let left = self.params.s(0, alpha, -1).scale_monomial(&monomial_v(e));
            let mut lw = vec![a];
            lw.extend_from_slice(&u.0);
            out.add_term(vec![Word(lw)], xc * &ScalarFraction::from(left));
            let mut rw = u.0.clone();
            rw.push(a);
            out.add_term(vec![Word(rw)], xc * &ScalarFraction::from(-self.params.s(0, alpha, 1)));
        }
        out
    }

    /// Decomposes a single-fold element into monomials `ι̂(w)` over the given
    /// per-weight bases.
    pub fn to_monomial_form(bases: &VermaBases, m: &BMElement) -> Result<LinComb<Word>> {
        let rank = bases.datum().rank();
        let mut by_content: BTreeMap<Coloring, BMElement> = BTreeMap::new();
        for (w, c) in m.iter() {
            by_content.entry(w.content(rank)).or_default().add_term(w.clone(), c.clone());
        }
        let mut out = LinComb::zero();
        for (c, part) in by_content {
            let basis = bases.get(&c)?;
            let coords = basis.coords(&part)?;
            for (w, a) in basis.words.iter().zip(coords) {
                out.add_term(w.clone(), a);
            }
        }
        Ok(out)
    }

    /// `E_α` on a single fold, computed by commuting `E_α` through the
    /// monomial decomposition: `E ι̂(w) = Σ_{p: w_p = α} (K - K^{-1})|_{c(w_{>p})} ι̂(w∖p)`.
    pub fn act_e_via_monomials(&self, bases: &VermaBases, alpha: usize, m: &BMElement) -> Result<BMElement> {
        assert_eq!(self.n(), 1, "monomial form is for one fold");
        let rank = self.datum.rank();
        let mono = Self::to_monomial_form(bases, m)?;
        let mut free = LinComb::<Word>::zero();
        for (w, a) in mono.iter() {
            for p in 0..w.len() {
                if w.0[p] as usize != alpha {
                    continue;
                }
                let later = Word(w.0[p + 1..].to_vec()).content(rank);
                let k = self.fold_k(0, alpha, &later);
                let kinv = k.inverse_unit().expect("unit");
                let mut rest = w.0.clone();
                rest.remove(p);
                free.add_term(Word(rest), a * &ScalarFraction::from(&k - &kinv));
            }
        }
        // ι̂ of the free combination, by iterated shuffles of letters
        let mut out = BMElement::zero();
        for (w, a) in free.iter() {
            out.add_scaled(&monomial_image(&self.datum, w), a);
        }
        Ok(out)
    }
}

/// `ι̂(w) = δ_{w_1} ⋆ .. ⋆ δ_{w_r}`.
pub fn monomial_image(datum: &CartanDatum, w: &Word) -> BMElement {
    let mut acc: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
    acc.insert(Word::empty(), LaurentPoly::one());
    for &l in w.0.iter().rev() {
        let mut next: BTreeMap<Word, LaurentPoly> = BTreeMap::new();
        for (u, c) in &acc {
            for (x, p) in shuffle_words(datum, &[l], &u.0) {
                *next.entry(x).or_default() += &(c * &p);
            }
        }
        next.retain(|_, p| !p.is_zero());
        acc = next;
    }
    acc.into_iter().map(|(w, p)| (w, ScalarFraction::from(p))).collect()
}

fn cartesian(folds: &[BTreeMap<Word, LaurentPoly>], f: &mut dyn FnMut(Vec<Word>, &LaurentPoly)) {
    fn rec(
        folds: &[BTreeMap<Word, LaurentPoly>],
        p: usize,
        key: &mut Vec<Word>,
        acc: &LaurentPoly,
        f: &mut dyn FnMut(Vec<Word>, &LaurentPoly),
    ) {
        if p == folds.len() {
            f(key.clone(), acc);
            return;
        }
        for (w, c) in &folds[p] {
            key.push(w.clone());
            rec(folds, p + 1, key, &(acc * c), f);
            key.pop();
        }
    }
    rec(folds, 0, &mut Vec::new(), &LaurentPoly::one(), f);
}

fn for_each_k_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// All tuples obtained from `t` by deleting `k` letters equal to `a`
/// (distinct results only).
fn deletions(t: &[Word], a: u8, k: usize) -> Vec<Vec<Word>> {
    let mut flat: Vec<(usize, usize)> = Vec::new();
    for (p, w) in t.iter().enumerate() {
        for (i, &l) in w.0.iter().enumerate() {
            if l == a {
                flat.push((p, i));
            }
        }
    }
    let mut out = std::collections::BTreeSet::new();
    for_each_k_subset(flat.len(), k, &mut |sel| {
        let drop: Vec<(usize, usize)> = sel.iter().map(|&s| flat[s]).collect();
        let key: Vec<Word> = t
            .iter()
            .enumerate()
            .map(|(p, w)| {
                Word(
                    w.0.iter()
                        .enumerate()
                        .filter(|(i, _)| !drop.contains(&(p, *i)))
                        .map(|(_, &l)| l)
                        .collect(),
                )
            })
            .collect();
        out.insert(key);
    });
    out.into_iter().collect()
}

/// Dual-basis pairing `Σ_t x[t] y[t]`; terms of different weight pair to 0.
pub fn intersection_pair<K: Ord + Clone>(x: &LinComb<K>, y: &LinComb<K>) -> ScalarFraction {
    let mut acc = ScalarFraction::zero();
    for (t, a) in x.iter() {
        let b = y.get(t);
        if !b.is_zero() {
            acc += &(a * &b);
        }
    }
    acc
}

/// Regroups `n`-fold coordinates into a left block of `cut` folds and a right
/// block of `n - cut` folds.
pub fn split(x: &TensorElement, n: usize, cut: usize) -> Result<SplitElement> {
    if cut == 0 || cut >= n {
        return Err(Error::Precondition(format!("cut position {cut} must satisfy 1 <= N < {n}")));
    }
    Ok(x.map_keys(|t| (t[..cut].to_vec(), t[cut..].to_vec())))
}

/// Inverse of [`split`].
pub fn unsplit(x: &SplitElement) -> TensorElement {
    x.map_keys(|(a, b)| {
        let mut t = a.clone();
        t.extend_from_slice(b);
        t
    })
}

/// Two blocks of folds acted on through the binary coproduct.
#[derive(Clone, Debug)]
pub struct BlockPair {
    pub left: VermaModule,
    pub right: VermaModule,
}

impl BlockPair {
    /// Blocks of `module` cut after `cut` folds.
    pub fn from_cut(module: &VermaModule, cut: usize) -> Result<Self> {
        let n = module.n();
        if cut == 0 || cut >= n {
            return Err(Error::Precondition(format!("cut position {cut} must satisfy 1 <= N < {n}")));
        }
        Ok(BlockPair {
            left: VermaModule::new(module.datum(), module.params().slice(0..cut)),
            right: VermaModule::new(module.datum(), module.params().slice(cut..n)),
        })
    }

    fn tensor_apply(
        &self,
        x: &SplitElement,
        f: impl Fn(&TensorElement) -> TensorElement,
        g: impl Fn(&TensorElement) -> TensorElement,
    ) -> SplitElement {
        let mut out = SplitElement::zero();
        for ((a, b), c) in x.iter() {
            let fa = f(&LinComb::basis(a.clone()));
            if fa.is_zero() {
                continue;
            }
            let gb = g(&LinComb::basis(b.clone()));
            for (a2, c1) in fa.iter() {
                for (b2, c2) in gb.iter() {
                    out.add_term((a2.clone(), b2.clone()), &(c * c1) * c2);
                }
            }
        }
        out
    }

    /// `Δ(F^{(k)}) = Σ_{i+j=k} v^{-d ij} K^{-i} F^{(j)} ⊗ F^{(i)}`.
    pub fn act_f(&self, alpha: usize, k: usize, x: &SplitElement) -> SplitElement {
        let d = self.left.datum().d(alpha);
        let mut out = SplitElement::zero();
        for i in 0..=k {
            let j = k - i;
            let part = self.tensor_apply(
                x,
                |a| self.left.act_k(alpha, -(i as i32), &self.left.act_f(alpha, j, a)),
                |b| self.right.act_f(alpha, i, b),
            );
            out.add_scaled(&part, &ScalarFraction::v_pow(-d * (i * j) as i32));
        }
        out
    }

    /// `Δ(E) = E ⊗ K + 1 ⊗ E`.
    pub fn act_e(&self, alpha: usize, x: &SplitElement) -> SplitElement {
        let a = self.tensor_apply(x, |a| self.left.act_e(alpha, a), |b| self.right.act_k(alpha, 1, b));
        let b = self.tensor_apply(x, |a| a.clone(), |b| self.right.act_e(alpha, b));
        &a + &b
    }

    /// `Δ(K^e) = K^e ⊗ K^e`.
    pub fn act_k(&self, alpha: usize, e: i32, x: &SplitElement) -> SplitElement {
        self.tensor_apply(x, |a| self.left.act_k(alpha, e, a), |b| self.right.act_k(alpha, e, b))
    }
}

/// A basis of one weight space of the single Verma module: monomials
/// `ι̂(w)` for greedily chosen words, with pivot coordinates for extracting
/// coefficients.
#[derive(Clone, Debug)]
pub struct WeightBasis {
    pub content: Coloring,
    /// Words whose monomials form the basis.
    pub words: Vec<Word>,
    /// The basis vectors in shuffle coordinates.
    pub vectors: Vec<BMElement>,
    pivots: Vec<Word>,
    ginv: Matrix,
}

/// Word order used when choosing basis monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisOrder {
    #[default]
    Lex,
    ReverseLex,
}

impl WeightBasis {
    pub fn new(form: &BilinearForm, c: &Coloring, bound: usize, order: BasisOrder) -> Result<Self> {
        let mut all = enumerate_words(c, bound)?;
        if order == BasisOrder::ReverseLex {
            all.reverse();
        }
        let targets = enumerate_words(c, bound)?;
        let row = |w: &Word| -> Vec<LaurentPoly> { targets.iter().map(|u| form.pair_hat_words(w, u)).collect() };
        let mut chosen: Vec<Word> = Vec::new();
        let mut rows: Vec<Vec<LaurentPoly>> = Vec::new();
        for w in &all {
            let r = row(w);
            if r.iter().all(LaurentPoly::is_zero) {
                continue;
            }
            let mut trial = rows.clone();
            trial.push(r.clone());
            if rank_poly(trial) == rows.len() + 1 {
                rows.push(r);
                chosen.push(w.clone());
            }
        }
        // pivot columns from an echelon form of the chosen rows
        let pivots_idx = pivot_columns(&rows, targets.len());
        let g: Matrix = rows
            .iter()
            .map(|r| pivots_idx.iter().map(|&j| ScalarFraction::from(r[j].clone())).collect())
            .collect();
        let ginv = inverse(&g).ok_or_else(|| Error::LinearSystem {
            block: c.to_string(),
            message: "pivot block of the weight basis is singular".into(),
        })?;
        let vectors = rows
            .iter()
            .map(|r| {
                targets
                    .iter()
                    .zip(r)
                    .map(|(w, p)| (w.clone(), ScalarFraction::from(p.clone())))
                    .collect()
            })
            .collect();
        Ok(WeightBasis {
            content: c.clone(),
            words: chosen,
            vectors,
            pivots: pivots_idx.iter().map(|&j| targets[j].clone()).collect(),
            ginv,
        })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    /// Coefficients `a` with `m = Σ a_i vectors_i` (assuming `m` lies in the span).
    pub fn coords(&self, m: &BMElement) -> Result<Vec<ScalarFraction>> {
        let r = self.dim();
        let mut out = vec![ScalarFraction::zero(); r];
        for (j, p) in self.pivots.iter().enumerate() {
            let x = m.get(p);
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let g = &self.ginv[j][i];
                if !g.is_zero() {
                    *o += &(&x * g);
                }
            }
        }
        Ok(out)
    }

    /// Element with the given coordinates.
    pub fn element(&self, coords: &[ScalarFraction]) -> BMElement {
        let mut out = BMElement::zero();
        for (v, a) in self.vectors.iter().zip(coords) {
            out.add_scaled(v, a);
        }
        out
    }
}

fn pivot_columns(rows: &[Vec<LaurentPoly>], ncols: usize) -> Vec<usize> {
    // greedy: add a column when it raises the rank of the selected columns
    let mut chosen: Vec<usize> = Vec::new();
    for j in 0..ncols {
        if chosen.len() == rows.len() {
            break;
        }
        let mut cols = chosen.clone();
        cols.push(j);
        let m: Vec<Vec<LaurentPoly>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
            .collect();
        if rank_poly(m) == cols.len() {
            chosen.push(j);
        }
    }
    chosen
}

/// Weight bases of the single Verma module, built on demand.
#[derive(Debug)]
pub struct VermaBases {
    form: BilinearForm,
    bound: usize,
    order: BasisOrder,
    cache: std::sync::RwLock<HashMap<Coloring, std::sync::Arc<WeightBasis>>>,
}

impl VermaBases {
    pub fn new(datum: &CartanDatum, bound: usize, order: BasisOrder) -> Self {
        VermaBases {
            form: BilinearForm::new(datum),
            bound,
            order,
            cache: Default::default(),
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        self.form.datum()
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn get(&self, c: &Coloring) -> Result<std::sync::Arc<WeightBasis>> {
        if let Some(b) = self.cache.read().expect("basis lock").get(c) {
            return Ok(b.clone());
        }
        let b = std::sync::Arc::new(WeightBasis::new(&self.form, c, self.bound, self.order)?);
        self.cache.write().expect("basis lock").insert(c.clone(), b.clone());
        Ok(b)
    }
}

/// All tuples of basis words of an `n`-fold tensor product whose total weight
/// is exactly `m`, with the per-fold basis vectors multiplied out.
pub fn tensor_basis(bases: &VermaBases, n: usize, total: &Coloring) -> Result<Vec<(Vec<Word>, TensorElement)>> {
    let mut out = Vec::new();
    let mut parts: Vec<Coloring> = Vec::new();
    distribute(total, n, &mut parts, &mut |parts| -> Result<()> {
        let per: Vec<std::sync::Arc<WeightBasis>> = parts.iter().map(|c| bases.get(c)).collect::<Result<_>>()?;
        let mut idx = vec![0usize; n];
        if per.iter().any(|b| b.dim() == 0) {
            return Ok(());
        }
        loop {
            let words: Vec<Word> = (0..n).map(|p| per[p].words[idx[p]].clone()).collect();
            let mut el = TensorElement::basis(Vec::new());
            for p in 0..n {
                let v = &per[p].vectors[idx[p]];
                let mut next = TensorElement::zero();
                for (t, a) in el.iter() {
                    for (w, b) in v.iter() {
                        let mut k = t.clone();
                        k.push(w.clone());
                        next.add_term(k, a * b);
                    }
                }
                el = next;
            }
            out.push((words, el));
            // odometer
            let mut p = n;
            loop {
                if p == 0 {
                    return Ok(());
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < per[p].dim() {
                    break;
                }
                idx[p] = 0;
            }
        }
    })?;
    Ok(out)
}

/// Calls `f` on every ordered way to write `total` as a sum of `n` colorings.
pub fn distribute(
    total: &Coloring,
    n: usize,
    parts: &mut Vec<Coloring>,
    f: &mut dyn FnMut(&[Coloring]) -> Result<()>,
) -> Result<()> {
    if parts.len() + 1 == n {
        parts.push(total.clone());
        let r = f(parts);
        parts.pop();
        return r;
    }
    for c in crate::bilinear_form::sub_colorings(total) {
        let rest = total.checked_sub(&c).expect("sub-coloring");
        parts.push(c);
        distribute(&rest, n, parts, f)?;
        parts.pop();
    }
    Ok(())
}

/// Coordinates of an `n`-fold element in the product of the weight bases,
/// keyed by tuples of basis labels (the words of the chosen monomials).
pub fn tensor_coords(bases: &VermaBases, x: &TensorElement) -> Result<LinComb<Vec<Word>>> {
    let rank = bases.datum().rank();
    let mut state: Vec<(Vec<Word>, Vec<Word>, ScalarFraction)> =
        x.iter().map(|(t, a)| (t.clone(), Vec::new(), a.clone())).collect();
    while state.first().is_some_and(|(raw, _, _)| !raw.is_empty()) {
        let mut groups: BTreeMap<(Vec<Word>, Vec<Word>, Coloring), BMElement> = BTreeMap::new();
        for (mut raw, labels, a) in state {
            let u = raw.pop().expect("nonempty prefix");
            let c = u.content(rank);
            groups.entry((raw, labels, c)).or_default().add_term(u, a);
        }
        state = Vec::new();
        for ((raw, labels, c), m) in groups {
            let b = bases.get(&c)?;
            for (w, a) in b.words.iter().zip(b.coords(&m)?) {
                if a.is_zero() {
                    continue;
                }
                let mut l = vec![w.clone()];
                l.extend(labels.iter().cloned());
                state.push((raw.clone(), l, a));
            }
        }
    }
    Ok(state.into_iter().map(|(_, l, a)| (l, a)).collect())
}

/// The element with the given basis-label coordinates.
pub fn tensor_from_coords(bases: &VermaBases, y: &LinComb<Vec<Word>>) -> Result<TensorElement> {
    let rank = bases.datum().rank();
    let mut out = TensorElement::zero();
    for (labels, a) in y.iter() {
        let mut el = TensorElement::term(Vec::new(), a.clone());
        for w in labels {
            let b = bases.get(&w.content(rank))?;
            let i = b.words.iter().position(|x| x == w).ok_or_else(|| {
                Error::Precondition(format!("{w} is not a basis label"))
            })?;
            let mut next = TensorElement::zero();
            for (t, x) in el.iter() {
                for (u, y) in b.vectors[i].iter() {
                    let mut k = t.clone();
                    k.push(u.clone());
                    next.add_term(k, x * y);
                }
            }
            el = next;
        }
        out.add_scaled(&el, &ScalarFraction::one());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::s_pow;

    fn w(l: &[u8]) -> Word {
        Word(l.to_vec())
    }

    #[test]
    fn k_eigen_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let m = VermaModule::single(&a2);
        assert_eq!(m.k_eigenvalue(0, &Coloring(vec![0, 0])), s_pow(2, 1, 1, -1));
        let e = m.k_eigenvalue(0, &Coloring(vec![1, 1]));
        assert_eq!(e, &s_pow(2, 1, 1, -1) * &LaurentPoly::v_pow(-1));
    }

    #[test]
    fn f_on_vacuum() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let m = VermaModule::single(&a1);
        let v0 = m.vacuum();
        let f1 = m.act_f(0, 1, &v0);
        assert_eq!(f1, LinComb::basis(vec![w(&[0])]));
        let ff = m.act_f(0, 1, &f1);
        let f2 = m.act_f(0, 2, &v0);
        let two = ScalarFraction::from(&LaurentPoly::v_pow(1) + &LaurentPoly::v_pow(-1));
        assert_eq!(ff, f2.scale(&two));
    }

    #[test]
    fn e_on_f_vacuum() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let m = VermaModule::single(&a2);
        let v0 = m.vacuum();
        let s = s_pow(2, 1, 1, 1);
        let x = m.act_e(0, &m.act_f(0, 1, &v0));
        let expect = v0.scale(&ScalarFraction::from(&s.inverse_unit().unwrap() - &s));
        assert_eq!(x, expect);
        assert!(m.act_e(0, &m.act_f(1, 1, &v0)).is_zero());
        assert!(m.act_e(0, &v0).is_zero());
    }

    #[test]
    fn two_fold_coproduct_on_vacuum() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let m = VermaModule::tensor(&a1, 2);
        let x = m.act_f(0, 1, &m.vacuum());
        let mut expect = TensorElement::zero();
        expect.add_term(vec![w(&[0]), Word::empty()], ScalarFraction::one());
        expect.add_term(vec![Word::empty(), w(&[0])], ScalarFraction::from(s_pow(1, 1, 1, 1)));
        assert_eq!(x, expect);
    }

    #[test]
    fn dual_side_single() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let m = VermaModule::single(&a2);
        let x = LinComb::basis(vec![w(&[0, 1, 0])]);
        let e = m.act_e_divided(0, 1, &x);
        let mut expect = TensorElement::zero();
        expect.add_term(vec![w(&[1, 0])], ScalarFraction::one());
        expect.add_term(vec![w(&[0, 1])], ScalarFraction::v_pow(1));
        assert_eq!(e, expect);
        // intersection pairing of basis vectors
        assert!(intersection_pair(&x, &x).is_one());
        assert!(intersection_pair(&x, &LinComb::basis(vec![w(&[1, 0, 0])])).is_zero());
    }

    #[test]
    fn split_basics() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let m = VermaModule::tensor(&a1, 2);
        let s = split(&m.vacuum(), 2, 1).unwrap();
        assert_eq!(unsplit(&s), m.vacuum());
        assert!(split(&m.vacuum(), 2, 2).is_err());
    }

    #[test]
    fn monomial_route_matches_closed_form() {
        let a2 = CartanDatum::preset("A2").unwrap();
        let m = VermaModule::single(&a2);
        let bases = VermaBases::new(&a2, 8, BasisOrder::Lex);
        let rev = VermaBases::new(&a2, 8, BasisOrder::ReverseLex);
        for c in crate::cartan::colorings_up_to(2, 3) {
            let b = bases.get(&c).unwrap();
            for v in &b.vectors {
                for a in 0..2 {
                    let direct = VermaModule::to_bm(&m.act_e(a, &VermaModule::from_bm(v)));
                    assert_eq!(m.act_e_via_monomials(&bases, a, v).unwrap(), direct);
                    assert_eq!(m.act_e_via_monomials(&rev, a, v).unwrap(), direct);
                }
            }
        }
    }
}
