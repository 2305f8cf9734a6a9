//! Braiding operators `B: M ⊗ M′ → M′ ⊗ M` on tensor squares of Verma
//! modules, solved block by block from the intertwiner equations, and the
//! braid group representations they generate.
//!
//! Elements are written in basis-label coordinates: a tuple of weight-basis
//! words, one per fold (see [`tensor_coords`]).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::cartan::{colorings_up_to, CartanDatum, Coloring, Word};
use crate::checks::Report;
use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::linalg::{determinant, inverse, nullity, solve, Matrix, Solution};
use crate::scalar::ScalarFraction;
use crate::verma::{tensor_basis, tensor_coords, tensor_from_coords, VermaBases, VermaModule, WeightParams};

/// Coordinates on a tensor product, keyed by tuples of basis labels.
pub type LabelVector = LinComb<Vec<Word>>;

/// Shape of the unknown block matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub enum Ansatz {
    /// Every matrix entry is unknown.
    Full,
    /// `B(x ⊗ y)` has second-fold weight at most the weight of `x`, as for
    /// the universal R-matrix.
    #[default]
    Triangular,
}

/// One weight block of a braiding operator.
#[derive(Clone, Debug)]
pub struct BraidBlock {
    pub content: Coloring,
    /// Pairs of basis labels, shared by source and target.
    pub labels: Vec<Vec<Word>>,
    /// `matrix[i][j]` is the coefficient of `labels[i]` in `B(labels[j])`.
    pub matrix: Matrix,
    pub inverse: Matrix,
    /// Nullity of the intertwiner system with every entry unknown, when
    /// requested.
    pub full_nullity: Option<usize>,
    index: HashMap<Vec<Word>, usize>,
}

impl BraidBlock {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn determinant(&self) -> ScalarFraction {
        determinant(&self.matrix)
    }
}

/// Summary row of a solved block.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BlockSummary {
    pub block: String,
    pub dim: usize,
    pub unknowns: usize,
    pub full_nullity: Option<usize>,
    pub invertible: bool,
}

/// The braiding `M_{g1} ⊗ M_{g2} → M_{g2} ⊗ M_{g1}` up to a total weight.
#[derive(Clone, Debug)]
pub struct Braiding {
    groups: (usize, usize),
    max_weight: usize,
    blocks: BTreeMap<Coloring, BraidBlock>,
    summaries: Vec<BlockSummary>,
}

fn coords_vec(bases: &VermaBases, x: &crate::verma::TensorElement, index: &HashMap<Vec<Word>, usize>) -> Result<Vec<ScalarFraction>> {
    let mut out = vec![ScalarFraction::zero(); index.len()];
    for (l, a) in tensor_coords(bases, x)?.iter() {
        let i = index
            .get(l)
            .ok_or_else(|| Error::Precondition("coordinate outside the expected block".into()))?;
        out[*i] = a.clone();
    }
    Ok(out)
}

fn label_index(labels: &[Vec<Word>]) -> HashMap<Vec<Word>, usize> {
    labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect()
}

fn le(a: &Coloring, b: &Coloring) -> bool {
    a.0.iter().zip(&b.0).all(|(x, y)| x <= y)
}

impl Braiding {
    /// Solves every block of total weight `<= max_weight` with the given
    /// ansatz. A block whose system is not uniquely solvable is an error
    /// naming the block.
    pub fn solve(bases: &VermaBases, groups: (usize, usize), max_weight: usize, ansatz: Ansatz) -> Result<Self> {
        Self::solve_with(bases, groups, max_weight, ansatz, false)
    }

    /// As [`Braiding::solve`]; with `full_nullity` also reports the nullity
    /// of the system with every entry unknown (exact, and slow past weight 2).
    pub fn solve_with(
        bases: &VermaBases,
        groups: (usize, usize),
        max_weight: usize,
        ansatz: Ansatz,
        full_nullity: bool,
    ) -> Result<Self> {
        let datum = bases.datum().clone();
        let rank = datum.rank();
        let src = VermaModule::new(&datum, WeightParams::with_groups(rank, vec![groups.0, groups.1]));
        let tgt = VermaModule::new(&datum, WeightParams::with_groups(rank, vec![groups.1, groups.0]));
        let mut blocks: BTreeMap<Coloring, BraidBlock> = BTreeMap::new();
        let mut summaries = Vec::new();
        let mut cs = colorings_up_to(rank, max_weight);
        cs.sort_by_key(Coloring::weight);
        for c in cs {
            let tb = tensor_basis(bases, 2, &c)?;
            let labels: Vec<Vec<Word>> = tb.iter().map(|(l, _)| l.clone()).collect();
            let elems: Vec<_> = tb.into_iter().map(|(_, e)| e).collect();
            let index = label_index(&labels);
            let n = labels.len();
            let allowed = |i: usize, j: usize| match ansatz {
                Ansatz::Full => true,
                Ansatz::Triangular => le(&labels[i][1].content(rank), &labels[j][0].content(rank)),
            };
            let vars: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| allowed(i, j))
                .collect();
            let all_vars: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
            // rows as sparse maps (i, j) -> coefficient
            let mut eqs: Vec<(BTreeMap<(usize, usize), ScalarFraction>, ScalarFraction)> = Vec::new();
            if c.is_zero() {
                eqs.push((BTreeMap::from([((0, 0), ScalarFraction::one())]), ScalarFraction::one()));
            }
            for a in 0..rank {
                let Some(lower) = c.sub_root(a, 1) else { continue };
                let prev = &blocks[&lower];
                // F: B(F x) = F B(x) for x in the lower block
                for (jp, e) in prev_elems(bases, &lower)?.iter().enumerate() {
                    let fx = coords_vec(bases, &src.act_f(a, 1, e), &index)?;
                    let bx = block_column(prev, jp);
                    let rhs = coords_vec(bases, &tgt.act_f(a, 1, &tensor_from_coords(bases, &bx)?), &index)?;
                    for (i, r) in rhs.into_iter().enumerate() {
                        let row: BTreeMap<_, _> = fx
                            .iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(j, x)| ((i, j), x.clone()))
                            .collect();
                        eqs.push((row, r));
                    }
                }
                // E: B(E y) = E B(y) for y in this block
                let e_tgt: Vec<Vec<ScalarFraction>> = elems
                    .iter()
                    .map(|e| coords_vec(bases, &tgt.act_e(a, e), &prev.index))
                    .collect::<Result<_>>()?;
                for (j, e) in elems.iter().enumerate() {
                    let ey = coords_vec(bases, &src.act_e(a, e), &prev.index)?;
                    let b = crate::linalg::mat_vec(&prev.matrix, &ey);
                    for (r, br) in b.into_iter().enumerate() {
                        let row: BTreeMap<_, _> = (0..n)
                            .filter(|&i| !e_tgt[i][r].is_zero())
                            .map(|i| ((i, j), e_tgt[i][r].clone()))
                            .collect();
                        eqs.push((row, br));
                    }
                }
            }
            let system = |vars: &[(usize, usize)]| -> (Matrix, Vec<ScalarFraction>) {
                let pos: HashMap<(usize, usize), usize> = vars.iter().enumerate().map(|(k, v)| (*v, k)).collect();
                let mut m = Vec::new();
                let mut rhs = Vec::new();
                for (row, r) in &eqs {
                    let mut dense = vec![ScalarFraction::zero(); vars.len()];
                    // entries outside the ansatz are zero and drop out
                    for (v, x) in row {
                        if let Some(&k) = pos.get(v) {
                            dense[k] = x.clone();
                        }
                    }
                    if dense.iter().all(ScalarFraction::is_zero) && r.is_zero() {
                        continue;
                    }
                    m.push(dense);
                    rhs.push(r.clone());
                }
                (m, rhs)
            };
            let (m, rhs) = system(&vars);
            let sol = solve(&m, &rhs);
            let x = match sol {
                Solution::Unique(x) => x,
                Solution::Underdetermined { nullity } => {
                    return Err(Error::LinearSystem {
                        block: c.to_string(),
                        message: format!("intertwiner system is underdetermined (nullity {nullity})"),
                    })
                }
                Solution::Inconsistent => {
                    return Err(Error::LinearSystem {
                        block: c.to_string(),
                        message: "intertwiner system is inconsistent".into(),
                    })
                }
            };
            let mut matrix = vec![vec![ScalarFraction::zero(); n]; n];
            for (&(i, j), v) in vars.iter().zip(x) {
                matrix[i][j] = v;
            }
            let full = match (full_nullity, ansatz) {
                (false, _) => None,
                (true, Ansatz::Full) => Some(0),
                (true, Ansatz::Triangular) => Some(nullity(&system(&all_vars).0)),
            };
            let inv = inverse(&matrix).ok_or_else(|| Error::LinearSystem {
                block: c.to_string(),
                message: "braiding block is singular".into(),
            })?;
            summaries.push(BlockSummary {
                block: c.to_string(),
                dim: n,
                unknowns: vars.len(),
                full_nullity: full,
                invertible: true,
            });
            blocks.insert(
                c.clone(),
                BraidBlock { content: c, labels, matrix, inverse: inv, full_nullity: full, index },
            );
        }
        Ok(Braiding { groups, max_weight, blocks, summaries })
    }

    pub fn groups(&self) -> (usize, usize) {
        self.groups
    }

    pub fn max_weight(&self) -> usize {
        self.max_weight
    }

    pub fn blocks(&self) -> impl Iterator<Item = &BraidBlock> {
        self.blocks.values()
    }

    pub fn block(&self, c: &Coloring) -> Option<&BraidBlock> {
        self.blocks.get(c)
    }

    pub fn summaries(&self) -> &[BlockSummary] {
        &self.summaries
    }

    /// `B` (or `B^{-1}` when `inverse`, read as a map `M′⊗M → M⊗M′`) on a
    /// pair of labels.
    pub fn apply_pair(&self, pair: &[Word], inverse: bool, rank: usize) -> Result<LabelVector> {
        let c = pair[0].content(rank).add(&pair[1].content(rank));
        let b = self.blocks.get(&c).ok_or_else(|| Error::SizeBound {
            weight: c.weight(),
            bound: self.max_weight,
            count: "braiding block not computed".into(),
        })?;
        let j = *b
            .index
            .get(pair)
            .ok_or_else(|| Error::Precondition("not a pair of basis labels".into()))?;
        let m = if inverse { &b.inverse } else { &b.matrix };
        Ok((0..b.dim())
            .filter(|&i| !m[i][j].is_zero())
            .map(|i| (b.labels[i].clone(), m[i][j].clone()))
            .collect())
    }
}

fn prev_elems(bases: &VermaBases, c: &Coloring) -> Result<Vec<crate::verma::TensorElement>> {
    Ok(tensor_basis(bases, 2, c)?.into_iter().map(|(_, e)| e).collect())
}

fn block_column(b: &BraidBlock, j: usize) -> LabelVector {
    (0..b.dim())
        .filter(|&i| !b.matrix[i][j].is_zero())
        .map(|i| (b.labels[i].clone(), b.matrix[i][j].clone()))
        .collect()
}

/// A braid generator `σ_{index+1}^{±1}` acting on folds `index, index+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl BraidLetter {
    /// Parses `"1,-2,1"`: 1-based generator indices, negative for inverses.
    pub fn parse_word(text: &str, strands: usize) -> Result<Vec<BraidLetter>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let k: i64 = part
                .parse()
                .map_err(|_| Error::Precondition(format!("bad braid generator '{part}'")))?;
            let i = k.unsigned_abs() as usize;
            if k == 0 || i >= strands {
                return Err(Error::Precondition(format!(
                    "generator {k} out of range for {strands} strands"
                )));
            }
            out.push(BraidLetter { index: i - 1, inverse: k < 0 });
        }
        Ok(out)
    }
}

/// Braid group action on `n`-fold tensor products with per-fold symbol groups.
pub struct BraidRep<'a> {
    bases: &'a VermaBases,
    max_weight: usize,
    cache: HashMap<(usize, usize), Braiding>,
}

impl<'a> BraidRep<'a> {
    pub fn new(bases: &'a VermaBases, max_weight: usize) -> Self {
        BraidRep { bases, max_weight, cache: HashMap::new() }
    }

    fn braiding(&mut self, g: (usize, usize)) -> Result<&Braiding> {
        if !self.cache.contains_key(&g) {
            let b = Braiding::solve(self.bases, g, self.max_weight, Ansatz::Triangular)?;
            self.cache.insert(g, b);
        }
        Ok(&self.cache[&g])
    }

    /// Applies the braid word (rightmost letter first) to `x`, whose folds
    /// carry `groups`. Returns the image and the final groups.
    pub fn apply(
        &mut self,
        groups: &[usize],
        word: &[BraidLetter],
        x: &LabelVector,
    ) -> Result<(LabelVector, Vec<usize>)> {
        let rank = self.bases.datum().rank();
        let n = groups.len();
        let mut g = groups.to_vec();
        let mut cur = x.clone();
        for l in word.iter().rev() {
            let p = l.index;
            if p + 1 >= n {
                return Err(Error::Precondition(format!("σ_{} needs {} strands", p + 1, p + 2)));
            }
            // σ maps groups (a, b) to (b, a) with B_{(a,b)}; σ^{-1} uses B_{(b,a)}^{-1}
            let key = if l.inverse { (g[p + 1], g[p]) } else { (g[p], g[p + 1]) };
            let br = self.braiding(key)?;
            let mut next = LabelVector::zero();
            for (t, a) in cur.iter() {
                let img = br.apply_pair(&t[p..p + 2], l.inverse, rank)?;
                for (pair, b) in img.iter() {
                    let mut k = t.clone();
                    k[p] = pair[0].clone();
                    k[p + 1] = pair[1].clone();
                    next.add_term(k, a * b);
                }
            }
            cur = next;
            g.swap(p, p + 1);
        }
        Ok((cur, g))
    }

    /// Matrices of the braid word on every block of total weight
    /// `<= max_weight`. A non-pure word needs all groups equal.
    pub fn matrices(&mut self, groups: &[usize], word: &[BraidLetter]) -> Result<BTreeMap<Coloring, LabelMatrix>> {
        let n = groups.len();
        let mut perm: Vec<usize> = (0..n).collect();
        for l in word {
            if l.index + 1 >= n {
                return Err(Error::Precondition(format!("σ_{} needs {} strands", l.index + 1, l.index + 2)));
            }
            perm.swap(l.index, l.index + 1);
        }
        let pure = perm.iter().enumerate().all(|(i, &p)| i == p);
        if !pure && groups.iter().any(|&g| g != groups[0]) {
            return Err(Error::Precondition(
                "a non-pure braid needs equal parameters on all folds".into(),
            ));
        }
        let rank = self.bases.datum().rank();
        let mut out = BTreeMap::new();
        for c in colorings_up_to(rank, self.max_weight) {
            let labels: Vec<Vec<Word>> = tensor_basis(self.bases, n, &c)?.into_iter().map(|(l, _)| l).collect();
            let index = label_index(&labels);
            let mut m = vec![vec![ScalarFraction::zero(); labels.len()]; labels.len()];
            for (j, l) in labels.iter().enumerate() {
                let (img, _) = self.apply(groups, word, &LabelVector::basis(l.clone()))?;
                for (k, a) in img.iter() {
                    m[index[k]][j] = a.clone();
                }
            }
            out.insert(c, LabelMatrix { labels, matrix: m });
        }
        Ok(out)
    }
}

/// A square matrix on a labelled basis.
#[derive(Clone, Debug, PartialEq)]
pub struct LabelMatrix {
    pub labels: Vec<Vec<Word>>,
    pub matrix: Matrix,
}

/// `σ1σ2σ1 = σ2σ1σ2` on three folds with equal parameters, per block of
/// total weight `<= max_weight`.
pub fn ybe_check(datum: &CartanDatum, max_weight: usize) -> Result<Report> {
    let bases = VermaBases::new(datum, max_weight.max(1), Default::default());
    let mut rep = BraidRep::new(&bases, max_weight);
    let g = [0, 0, 0];
    let s = |i, inverse| BraidLetter { index: i, inverse };
    let lhs = rep.matrices(&g, &[s(0, false), s(1, false), s(0, false)])?;
    let rhs = rep.matrices(&g, &[s(1, false), s(0, false), s(1, false)])?;
    let mut r = Report::default();
    for (c, l) in &lhs {
        r.push("braid relation", c.to_string(), rhs.get(c) == Some(l));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verma::BasisOrder;

    #[test]
    fn a1_blocks() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let bases = VermaBases::new(&a1, 2, BasisOrder::Lex);
        let b = Braiding::solve_with(&bases, (0, 1), 2, Ansatz::Triangular, true).unwrap();
        let b0 = b.block(&Coloring(vec![0])).unwrap();
        assert_eq!(b0.matrix, vec![vec![ScalarFraction::one()]]);
        let b1 = b.block(&Coloring(vec![1])).unwrap();
        assert_eq!(b1.dim(), 2);
        let det = b1.determinant();
        assert!(det.is_polynomial() && det.num().is_unit(), "det = {:?}", det);
        assert_eq!(b1.full_nullity, Some(1));
    }

    #[test]
    fn inverse_word_is_identity() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let bases = VermaBases::new(&a1, 2, BasisOrder::Lex);
        let mut rep = BraidRep::new(&bases, 2);
        let w = BraidLetter::parse_word("1,-1", 2).unwrap();
        for (_, m) in rep.matrices(&[0, 0], &w).unwrap() {
            assert_eq!(m.matrix, crate::linalg::identity(m.labels.len()));
        }
        assert!(rep.matrices(&[0, 1], &BraidLetter::parse_word("1", 2).unwrap()).is_err());
        assert!(rep.matrices(&[0, 1], &BraidLetter::parse_word("1,1", 2).unwrap()).is_ok());
    }

    #[test]
    fn ybe_a1() {
        let a1 = CartanDatum::preset("A1").unwrap();
        let r = ybe_check(&a1, 2).unwrap();
        assert!(r.all_pass(), "{:?}", r.failures());
    }
}
