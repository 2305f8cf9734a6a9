//! Exact verification routines shared by the command line and the tests.
//! Each returns a report of named items that either hold or fail.

use serde::Serialize;

use crate::bilinear_form::{ideal_span_dimension, BilinearForm};
use crate::cartan::{colorings_up_to, enumerate_words, CartanDatum, Coloring, Word};
use crate::error::Result;
use crate::braid_symmetries::{t_i_apply, truncation_threshold, vanishing_element};
use crate::free_algebra::{
    coproduct_word, divided_power_word, serre_degree, serre_element, tensor_mul, v_root, word_vector,
};
use crate::lincomb::LinComb;
use crate::scalar::{sym_binomial, sym_factorial, LaurentPoly, ScalarFraction};
use crate::shuffle_image::{delta, iota, shuffle_mul, IotaMode};
use crate::verma::{
    intersection_pair, split, tensor_basis, BasisOrder, BlockPair, ModuleOp, TensorElement, VermaBases,
    VermaModule,
};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub block: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<CheckItem>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, block: impl Into<String>, pass: bool) {
        self.items.push(CheckItem { name: name.into(), block: block.into(), pass });
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.pass).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }
}

/// `(w[α], w[β]) = δ_{αβ} / (1 - q_α^{-1})` for all simple roots.
pub fn pairing_base_check(datum: &CartanDatum) -> Report {
    let form = BilinearForm::new(datum);
    let mut r = Report::default();
    for a in 0..datum.rank() {
        for b in 0..datum.rank() {
            let p = form.pair(&word_vector(Word::letter(a)), &word_vector(Word::letter(b)));
            let expect = if a == b {
                let den = &LaurentPoly::one() - &LaurentPoly::v_pow(-2 * datum.d(a));
                ScalarFraction::new(LaurentPoly::one(), den).expect("nonzero")
            } else {
                ScalarFraction::zero()
            };
            r.push("pairing base case", format!("({},{})", a + 1, b + 1), p == expect);
        }
    }
    r
}

/// `ι(serre(i,j)) = 0` for every ordered pair `i != j`.
pub fn serre_check(datum: &CartanDatum) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let mut r = Report::default();
    for i in 0..datum.rank() {
        for j in 0..datum.rank() {
            if i == j {
                continue;
            }
            let s = serre_element(datum, i, j)?;
            let img = iota(&form, &s, IotaMode::Plain)?;
            let k = serre_degree(datum, i, j)?;
            r.push(format!("serre k={k}"), format!("({},{})", i + 1, j + 1), img.is_zero());
        }
    }
    Ok(r)
}

/// Gram rank against words minus the Serre-ideal span for all weights up to `max_weight`.
pub fn dimension_check(datum: &CartanDatum, max_weight: usize) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let mut r = Report::default();
    for c in colorings_up_to(datum.rank(), max_weight) {
        let a = form.radical_rank(&c, max_weight)?;
        let b = ideal_span_dimension(datum, &c, max_weight)?;
        r.push(format!("rank {a} vs Serre-ideal prediction {b}"), c.to_string(), a == b);
    }
    Ok(r)
}

/// `ι(w[α])^k = [k]_{v^{d_α}}! ι(DP(α,k))` for `k <= max_k`.
pub fn divided_power_check(datum: &CartanDatum, max_k: usize) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let mut r = Report::default();
    for a in 0..datum.rank() {
        let gen = iota(&form, &word_vector(Word::letter(a)), IotaMode::Plain)?;
        let mut power = delta(Word::empty());
        for k in 1..=max_k {
            power = shuffle_mul(datum, &power, &gen);
            let dp = iota(&form, &divided_power_word(datum, a, k), IotaMode::Plain)?;
            let f = ScalarFraction::from(sym_factorial(k as i32, &v_root(datum, a)));
            r.push("divided power", format!("alpha={} k={k}", a + 1), power == dp.scale(&f));
        }
    }
    Ok(r)
}

/// Basis vectors of the single Verma module with `m_c <= max_weight`.
pub fn module_basis(bases: &VermaBases, max_weight: usize) -> Result<Vec<(Coloring, TensorElement)>> {
    let mut out = Vec::new();
    for c in colorings_up_to(bases.datum().rank(), max_weight) {
        let b = bases.get(&c)?;
        for v in &b.vectors {
            out.push((c.clone(), VermaModule::from_bm(v)));
        }
    }
    Ok(out)
}

/// `[E_α, F_α^{(k+1)}] = F_α^{(k)}(q_α^{-k/2} K_α - q_α^{k/2} K_α^{-1})` on
/// the single module up to `max_weight`, for `k <= max_k`.
pub fn fundamental_relation_check(datum: &CartanDatum, max_weight: usize, max_k: usize) -> Result<Report> {
    let m = VermaModule::single(datum);
    let bases = VermaBases::new(datum, max_weight.max(1), BasisOrder::Lex);
    let basis = module_basis(&bases, max_weight)?;
    let mut r = Report::default();
    for a in 0..datum.rank() {
        let d = datum.d(a);
        for k in 0..=max_k {
            let mut ok = true;
            for (_, b) in &basis {
                let lhs = &m.act_e(a, &m.act_f(a, k + 1, b)) - &m.act_f(a, k + 1, &m.act_e(a, b));
                let kb = m.act_k(a, 1, b).scale(&ScalarFraction::v_pow(-d * k as i32));
                let kib = m.act_k(a, -1, b).scale(&ScalarFraction::v_pow(d * k as i32));
                let rhs = m.act_f(a, k, &(&kb - &kib));
                ok &= lhs == rhs;
            }
            r.push("fundamental relation", format!("alpha={} k={k}", a + 1), ok);
        }
    }
    Ok(r)
}

fn alternating(
    m: &VermaModule,
    i: usize,
    j: usize,
    k: usize,
    b: &TensorElement,
    op: impl Fn(usize, usize) -> ModuleOp,
) -> TensorElement {
    let mut acc = TensorElement::zero();
    for l in 0..=k {
        let word = [op(i, l), op(j, 1), op(i, k - l)];
        let t = m.apply_word(&word, b);
        let sign = if (k - l).is_multiple_of(2) { 1 } else { -1 };
        acc.add_scaled(&t, &ScalarFraction::from_int(sign));
    }
    acc
}

/// All defining relations of the quantum group as operator identities on
/// the single module up to `max_weight`.
pub fn full_relations_check(datum: &CartanDatum, max_weight: usize) -> Result<Report> {
    let m = VermaModule::single(datum);
    let bases = VermaBases::new(datum, max_weight.max(1), BasisOrder::Lex);
    let basis = module_basis(&bases, max_weight)?;
    let n = datum.rank();
    let mut r = Report::default();
    let mut check = |name: String, f: &dyn Fn(&TensorElement) -> bool| {
        let ok = basis.iter().all(|(_, b)| f(b));
        r.push(name, format!("m_c<={max_weight}"), ok);
    };
    for i in 0..n {
        check(format!("K{0} K{0}^-1 = 1", i + 1), &|b| m.act_k(i, 1, &m.act_k(i, -1, b)) == *b);
        for j in 0..n {
            let ip = datum.inner(i, j);
            check(format!("K{} K{} = K{} K{}", i + 1, j + 1, j + 1, i + 1), &|b| {
                m.act_k(i, 1, &m.act_k(j, 1, b)) == m.act_k(j, 1, &m.act_k(i, 1, b))
            });
            check(format!("K{0} E{1} K{0}^-1 = q_{0}^(a/2) E{1}", i + 1, j + 1), &|b| {
                let lhs = m.apply_word(&[ModuleOp::K(i), ModuleOp::E(j, 1), ModuleOp::Kinv(i)], b);
                lhs == m.act_e(j, b).scale(&ScalarFraction::v_pow(ip))
            });
            check(format!("K{0} F{1} K{0}^-1 = q_{0}^(-a/2) F{1}", i + 1, j + 1), &|b| {
                let lhs = m.apply_word(&[ModuleOp::K(i), ModuleOp::F(j, 1), ModuleOp::Kinv(i)], b);
                lhs == m.act_f(j, 1, b).scale(&ScalarFraction::v_pow(-ip))
            });
            check(format!("[E{}, F{}]", i + 1, j + 1), &|b| {
                let lhs = &m.act_e(i, &m.act_f(j, 1, b)) - &m.act_f(j, 1, &m.act_e(i, b));
                let rhs = if i == j {
                    &m.act_k(i, 1, b) - &m.act_k(i, -1, b)
                } else {
                    TensorElement::zero()
                };
                lhs == rhs
            });
            if i != j {
                let k = serre_degree(datum, i, j)?;
                check(format!("F Serre ({},{})", i + 1, j + 1), &|b| {
                    alternating(&m, i, j, k, b, ModuleOp::F).is_zero()
                });
                check(format!("E Serre ({},{})", i + 1, j + 1), &|b| {
                    alternating(&m, i, j, k, b, ModuleOp::E).is_zero()
                });
            }
        }
        let var = v_root(datum, i);
        for a in 1..=2usize {
            for bb in 1..=2usize {
                let c = ScalarFraction::from(sym_binomial((a + bb) as i32, a as i32, &var));
                check(format!("F{0}^({a}) F{0}^({bb}) = qbin F{0}^({1})", i + 1, a + bb), &|b| {
                    m.act_f(i, a, &m.act_f(i, bb, b)) == m.act_f(i, a + bb, b).scale(&c)
                });
                check(format!("E{0}^({a}) E{0}^({bb}) = qbin E{0}^({1})", i + 1, a + bb), &|b| {
                    m.act_e_power(i, a, &m.act_e_power(i, bb, b)) == m.act_e_power(i, a + bb, b).scale(&c)
                });
            }
        }
    }
    Ok(r)
}

/// `<E^{[k]} x, y> = <x, F^{(k)} y>` for all pairs of word basis vectors with
/// `m_c <= max_weight`, plus the divided-power and Serre relations of the
/// dual operators.
pub fn adjoint_check(datum: &CartanDatum, max_weight: usize) -> Result<Report> {
    let m = VermaModule::single(datum);
    let rank = datum.rank();
    let mut r = Report::default();
    for c in colorings_up_to(rank, max_weight) {
        let xs = enumerate_words(&c, max_weight)?;
        for a in 0..rank {
            for k in 1..=c.get(a) as usize {
                let cy = c.sub_root(a, k as u32).expect("enough letters");
                let ys = enumerate_words(&cy, max_weight)?;
                let mut ok = true;
                for x in &xs {
                    let dx = LinComb::basis(vec![x.clone()]);
                    let ex = m.act_e_divided(a, k, &dx);
                    for y in &ys {
                        let dy = LinComb::basis(vec![y.clone()]);
                        let fy = m.act_f(a, k, &dy);
                        ok &= intersection_pair(&ex, &dy) == intersection_pair(&dx, &fy);
                    }
                }
                r.push("adjoint", format!("c={c} alpha={} k={k}", a + 1), ok);
            }
        }
        // U^F relations for the dual operators on this weight
        let two_ok = xs.iter().all(|x| {
            let dx = LinComb::basis(vec![x.clone()]);
            (0..rank).all(|a| {
                let ee = m.act_e_divided(a, 1, &m.act_e_divided(a, 1, &dx));
                let e2 = m.act_e_divided(a, 2, &dx);
                ee == e2.scale(&ScalarFraction::from(sym_binomial(2, 1, &v_root(datum, a))))
            })
        });
        r.push("E[1]E[1] = [2] E[2]", format!("c={c}"), two_ok);
        let mut serre_ok = true;
        for i in 0..rank {
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let k = serre_degree(datum, i, j)?;
                for x in &xs {
                    let dx = LinComb::basis(vec![x.clone()]);
                    let mut acc = TensorElement::zero();
                    for l in 0..=k {
                        let t = m.act_e_divided(
                            i,
                            l,
                            &m.act_e_divided(j, 1, &m.act_e_divided(i, k - l, &dx)),
                        );
                        let sign = if (k - l) % 2 == 0 { 1 } else { -1 };
                        acc.add_scaled(&t, &ScalarFraction::from_int(sign));
                    }
                    serre_ok &= acc.is_zero();
                }
            }
        }
        r.push("dual Serre", format!("c={c}"), serre_ok);
    }
    Ok(r)
}

/// `split(u·x) = Δ(u)·split(x)` on `n`-fold module basis tensors of total
/// weight `<= max_weight`, for `F^{(k)}` (`k <= max_k`), `E` and `K^{±1}`.
pub fn split_check(datum: &CartanDatum, n: usize, cut: usize, max_weight: usize, max_k: usize) -> Result<Report> {
    let module = VermaModule::tensor(datum, n);
    let blocks = BlockPair::from_cut(&module, cut)?;
    let bases = VermaBases::new(datum, max_weight.max(1), BasisOrder::Lex);
    let mut r = Report::default();
    for c in colorings_up_to(datum.rank(), max_weight) {
        let basis = tensor_basis(&bases, n, &c)?;
        for a in 0..datum.rank() {
            let mut ok_f = vec![true; max_k + 1];
            let mut ok_e = true;
            let mut ok_k = true;
            for (_, x) in &basis {
                let sx = split(x, n, cut)?;
                for (k, ok) in ok_f.iter_mut().enumerate().skip(1) {
                    *ok &= split(&module.act_f(a, k, x), n, cut)? == blocks.act_f(a, k, &sx);
                }
                ok_e &= split(&module.act_e(a, x), n, cut)? == blocks.act_e(a, &sx);
                for e in [1, -1] {
                    ok_k &= split(&module.act_k(a, e, x), n, cut)? == blocks.act_k(a, e, &sx);
                }
            }
            let block = format!("n={n} N={cut} c={c} alpha={}", a + 1);
            for (k, ok) in ok_f.iter().enumerate().skip(1) {
                r.push(format!("F^({k})"), block.clone(), *ok);
            }
            r.push("E", block.clone(), ok_e);
            r.push("K^{+-1}", block, ok_k);
        }
    }
    Ok(r)
}

/// All words over `rank` letters of length `<= max_len`.
pub fn all_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..rank {
                let mut x = w.0.clone();
                x.push(a as u8);
                next.push(Word(x));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

type Triple = LinComb<(Word, Word, Word)>;

fn coassoc_sides(datum: &CartanDatum, w: &Word) -> (Triple, Triple) {
    let r = coproduct_word(datum, w);
    let mut left = Triple::zero();
    let mut right = Triple::zero();
    for ((a, b), c) in r.iter() {
        for ((a1, a2), d) in coproduct_word(datum, a).iter() {
            left.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
        }
        for ((b1, b2), d) in coproduct_word(datum, b).iter() {
            right.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    (left, right)
}

/// Coassociativity and multiplicativity of `r`, agreement of the two pairing
/// recursions, and `ι` as an algebra map, on words of length `<= max_len`.
pub fn structural_check(datum: &CartanDatum, max_len: usize) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let words = all_words(datum.rank(), max_len);
    let mut r = Report::default();
    let block = format!("length<={max_len}");
    r.push(
        "r coassociative",
        block.clone(),
        words.iter().all(|w| {
            let (a, b) = coassoc_sides(datum, w);
            a == b
        }),
    );
    let pairs: Vec<(&Word, &Word)> = words
        .iter()
        .flat_map(|x| words.iter().map(move |y| (x, y)))
        .filter(|(x, y)| x.len() + y.len() <= max_len)
        .collect();
    r.push(
        "r multiplicative",
        block.clone(),
        pairs.iter().all(|(x, y)| {
            coproduct_word(datum, &x.concat(y))
                == tensor_mul(datum, &coproduct_word(datum, x), &coproduct_word(datum, y))
        }),
    );
    let rank = datum.rank();
    r.push(
        "pairing recursions agree",
        block.clone(),
        words.iter().all(|w| {
            words
                .iter()
                .filter(|u| u.content(rank) == w.content(rank))
                .all(|u| form.pair_hat_words(w, u) == form.pair_hat_words_mirror(w, u))
        }),
    );
    r.push(
        "pairing symmetric",
        block.clone(),
        words.iter().all(|w| {
            words
                .iter()
                .filter(|u| u.content(rank) == w.content(rank))
                .all(|u| form.pair_words(w, u) == form.pair_words(u, w))
        }),
    );
    let mut hom = true;
    for (x, y) in &pairs {
        let lhs = iota(&form, &word_vector(x.concat(y)), IotaMode::Plain)?;
        let ix = iota(&form, &word_vector((*x).clone()), IotaMode::Plain)?;
        let iy = iota(&form, &word_vector((*y).clone()), IotaMode::Plain)?;
        hom &= lhs == shuffle_mul(datum, &ix, &iy);
    }
    r.push("iota multiplicative", block, hom);
    Ok(r)
}

/// `T_i` on products, on the radical and on weights, for words avoiding `i`
/// of length `<= max_len`.
pub fn braid_operator_check(datum: &CartanDatum, max_len: usize) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let rank = datum.rank();
    let mut r = Report::default();
    for i in 0..rank {
        let words: Vec<Word> = all_words(rank, max_len)
            .into_iter()
            .filter(|w| !w.0.contains(&(i as u8)))
            .collect();
        let mut mult = true;
        for x in &words {
            for y in &words {
                if x.len() + y.len() > max_len {
                    continue;
                }
                let lhs = t_i_apply(&form, i, &word_vector(x.concat(y)))?;
                let tx = t_i_apply(&form, i, &word_vector(x.clone()))?;
                let ty = t_i_apply(&form, i, &word_vector(y.clone()))?;
                mult &= lhs == shuffle_mul(datum, &tx, &ty);
            }
        }
        r.push("T_i multiplicative", format!("i={}", i + 1), mult);
        // weight of T_i(F_j) is α_j + (-a_ij) α_i
        let mut weights = true;
        for j in (0..rank).filter(|&j| j != i) {
            let img = t_i_apply(&form, i, &word_vector(Word::letter(j)))?;
            let want = Coloring::simple(rank, j).add_root(i, (-datum.a(i, j)) as u32);
            weights &= !img.is_zero() && img.keys().all(|w| w.content(rank) == want);
        }
        r.push("T_i(F_j) weight", format!("i={}", i + 1), weights);
        // Serre elements avoiding i stay in the radical
        for j in (0..rank).filter(|&j| j != i) {
            for k in (0..rank).filter(|&k| k != i && k != j) {
                let s = serre_element(datum, j, k)?;
                let img = t_i_apply(&form, i, &s)?;
                r.push("T_i(serre) = 0", format!("i={} serre({},{})", i + 1, j + 1, k + 1), img.is_zero());
            }
        }
    }
    Ok(r)
}

/// `V_k(i, w[j^m])` vanishes for `k` above the threshold `m·(-a_ij)` and
/// not at the threshold, for `m <= max_mult`.
pub fn vanishing_threshold_check(datum: &CartanDatum, max_mult: usize) -> Result<Report> {
    let form = BilinearForm::new(datum);
    let rank = datum.rank();
    let mut r = Report::default();
    for i in 0..rank {
        for j in (0..rank).filter(|&j| j != i) {
            for m in 1..=max_mult {
                let x = word_vector(Word::repeat(j, m));
                let c = Coloring::simple(rank, j).add_root(j, (m - 1) as u32);
                let t = truncation_threshold(datum, i, &c);
                let above = vanishing_element(&form, i, &x, t + 1)?.is_zero();
                let at = !vanishing_element(&form, i, &x, t)?.is_zero();
                r.push(
                    format!("threshold {t}"),
                    format!("i={} x=w[{}^{m}]", i + 1, j + 1),
                    above && at,
                );
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert!(pairing_base_check(&a2).all_pass());
        assert!(serre_check(&a2).unwrap().all_pass());
        assert!(fundamental_relation_check(&a2, 2, 1).unwrap().all_pass());
        assert!(full_relations_check(&a2, 2).unwrap().all_pass());
        assert!(adjoint_check(&a2, 2).unwrap().all_pass());
        assert!(split_check(&a2, 2, 1, 2, 2).unwrap().all_pass());
        assert!(structural_check(&a2, 3).unwrap().all_pass());
        assert!(braid_operator_check(&a2, 2).unwrap().all_pass());
        assert!(vanishing_threshold_check(&a2, 2).unwrap().all_pass());
    }
}
