//! Cartan data, colorings and words.
//!
//! Convention: `a_ii = 2` and `(α_i, α_j) = d_i a_ij` is symmetric, so the
//! row of a short root carries the larger off-diagonal entry. Presets follow
//! Bourbaki numbering: `B_n` has its short root last, `C_n` its long root
//! last, `G2 = [[2,-3],[-1,2]]` with `α1` short.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Deserialize;

use crate::error::{Error, Result};

/// One violated condition of a Cartan datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DatumViolation {
    Empty,
    NotSquare { row: usize, len: usize, rank: usize },
    Diagonal { i: usize, value: i32 },
    PositiveOffDiagonal { i: usize, j: usize, value: i32 },
    ZeroPattern { i: usize, j: usize },
    SymmetrizerLength { len: usize, rank: usize },
    NonPositiveSymmetrizer { i: usize, value: i32 },
    NotSymmetrized { i: usize, j: usize },
    NotSymmetrizable,
}

impl fmt::Display for DatumViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DatumViolation::*;
        match self {
            Empty => write!(f, "matrix is empty"),
            NotSquare { row, len, rank } => {
                write!(f, "row {} has {len} entries, expected {rank}", row + 1)
            }
            Diagonal { i, value } => write!(f, "a[{0}][{0}] = {value}, expected 2", i + 1),
            PositiveOffDiagonal { i, j, value } => {
                write!(f, "positive off-diagonal entry a[{}][{}] = {value}", i + 1, j + 1)
            }
            ZeroPattern { i, j } => write!(
                f,
                "a[{0}][{1}] and a[{1}][{0}] must vanish together",
                i + 1,
                j + 1
            ),
            SymmetrizerLength { len, rank } => {
                write!(f, "symmetrizer has {len} entries, expected {rank}")
            }
            NonPositiveSymmetrizer { i, value } => {
                write!(f, "symmetrizer entry d[{}] = {value} is not positive", i + 1)
            }
            NotSymmetrized { i, j } => write!(
                f,
                "d[{0}]*a[{0}][{1}] != d[{1}]*a[{1}][{0}]",
                i + 1,
                j + 1
            ),
            NotSymmetrizable => write!(f, "matrix is not symmetrizable"),
        }
    }
}

/// A symmetrizable Cartan datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    name: Option<String>,
    a: Vec<Vec<i32>>,
    d: Vec<i32>,
    b: Vec<Vec<i32>>,
    positive_definite: bool,
}

/// Checks `a` (and `d` when given; otherwise the smallest symmetrizer is
/// inferred) and builds the datum.
pub fn validate_datum(a: Vec<Vec<i32>>, d: Option<Vec<i32>>) -> Result<CartanDatum> {
    let mut v = Vec::new();
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidDatum(vec![DatumViolation::Empty]));
    }
    for (row, r) in a.iter().enumerate() {
        if r.len() != n {
            v.push(DatumViolation::NotSquare { row, len: r.len(), rank: n });
        }
    }
    if !v.is_empty() {
        return Err(Error::InvalidDatum(v));
    }
    for i in 0..n {
        if a[i][i] != 2 {
            v.push(DatumViolation::Diagonal { i, value: a[i][i] });
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            if a[i][j] > 0 {
                v.push(DatumViolation::PositiveOffDiagonal { i, j, value: a[i][j] });
            }
            if i < j && (a[i][j] == 0) != (a[j][i] == 0) {
                v.push(DatumViolation::ZeroPattern { i, j });
            }
        }
    }
    let d = match d {
        Some(d) => {
            if d.len() != n {
                v.push(DatumViolation::SymmetrizerLength { len: d.len(), rank: n });
            } else {
                for (i, &x) in d.iter().enumerate() {
                    if x <= 0 {
                        v.push(DatumViolation::NonPositiveSymmetrizer { i, value: x });
                    }
                }
                if v.is_empty() {
                    for i in 0..n {
                        for j in i + 1..n {
                            if d[i] as i64 * a[i][j] as i64 != d[j] as i64 * a[j][i] as i64 {
                                v.push(DatumViolation::NotSymmetrized { i, j });
                            }
                        }
                    }
                }
            }
            d
        }
        None if v.is_empty() => match infer_symmetrizer(&a) {
            Some(d) => d,
            None => {
                v.push(DatumViolation::NotSymmetrizable);
                Vec::new()
            }
        },
        None => Vec::new(),
    };
    if !v.is_empty() {
        return Err(Error::InvalidDatum(v));
    }
    let b: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| d[i] * a[i][j]).collect())
        .collect();
    let positive_definite = leading_minors_positive(&b);
    Ok(CartanDatum { name: None, a, d, b, positive_definite })
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

fn infer_symmetrizer(a: &[Vec<i32>]) -> Option<Vec<i32>> {
    let n = a.len();
    // rational d as (num, den), propagated along the graph
    let mut d: Vec<Option<(i64, i64)>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let (ni, di) = d[i]?;
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i a_ij / a_ji
                let (mut nj, mut dj) = (ni * a[i][j] as i64, di * a[j][i] as i64);
                if dj < 0 {
                    nj = -nj;
                    dj = -dj;
                }
                let g = gcd_i64(nj, dj);
                let cand = (nj / g, dj / g);
                match d[j] {
                    None => {
                        d[j] = Some(cand);
                        stack.push(j);
                    }
                    Some(x) if x != cand => return None,
                    _ => {}
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().collect::<Option<_>>()?;
    let l = d.iter().fold(1i64, |l, &(_, den)| num_integer::lcm(l, den));
    let ints: Vec<i64> = d.iter().map(|&(num, den)| num * l / den).collect();
    let g = ints.iter().fold(0i64, |g, &x| gcd_i64(g, x));
    ints.iter().map(|&x| i32::try_from(x / g).ok()).collect()
}

fn leading_minors_positive(b: &[Vec<i32>]) -> bool {
    let n = b.len();
    let mut m: Vec<Vec<BigInt>> = b
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    // Bareiss without pivoting: the k-th pivot is the ratio of consecutive minors
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k] <= BigInt::from(0) {
            return false;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    true
}

impl CartanDatum {
    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn a(&self, i: usize, j: usize) -> i32 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.a
    }

    /// Symmetrizer entry `d_i` (0-based index).
    pub fn d(&self, i: usize) -> i32 {
        self.d[i]
    }

    pub fn symmetrizer(&self) -> &[i32] {
        &self.d
    }

    pub fn is_positive_definite(&self) -> bool {
        self.positive_definite
    }

    /// `(α_i, α_j) = d_i a_ij` for 0-based indices. Panics when out of range.
    #[inline]
    pub fn inner(&self, i: usize, j: usize) -> i32 {
        self.b[i][j]
    }

    /// Range-checked `inner` taking 1-based indices.
    pub fn try_inner(&self, i: usize, j: usize) -> Result<i32> {
        let i0 = self.check_index(i)?;
        let j0 = self.check_index(j)?;
        Ok(self.inner(i0, j0))
    }

    /// Converts a 1-based root index to 0-based.
    pub fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        } else {
            Ok(i - 1)
        }
    }

    /// `(α_i, c)`.
    pub fn inner_root_coloring(&self, i: usize, c: &Coloring) -> i32 {
        c.0.iter().enumerate().map(|(j, &n)| self.b[i][j] * n as i32).sum()
    }

    /// `(c1, c2)`.
    pub fn inner_colorings(&self, c1: &Coloring, c2: &Coloring) -> i32 {
        c1.0.iter()
            .enumerate()
            .map(|(i, &n)| n as i32 * self.inner_root_coloring(i, c2))
            .sum()
    }

    /// Named preset, e.g. `A2`, `B3`, `G2`, or a product such as `A1xA2`.
    pub fn preset(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name.split(['x', 'X']).collect();
        if parts.len() > 1 {
            let blocks = parts
                .iter()
                .map(|p| Self::preset(p.trim()))
                .collect::<Result<Vec<_>>>()?;
            let n: usize = blocks.iter().map(Self::rank).sum();
            let mut a = vec![vec![0; n]; n];
            let mut d = Vec::new();
            let mut off = 0;
            for b in &blocks {
                for i in 0..b.rank() {
                    for j in 0..b.rank() {
                        a[off + i][off + j] = b.a[i][j];
                    }
                }
                d.extend_from_slice(&b.d);
                off += b.rank();
            }
            return Ok(validate_datum(a, Some(d))?.with_name(name));
        }
        let unknown = || Error::UnknownDatum(name.to_string());
        let mut chars = name.chars();
        let family = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let chain = |n: usize| {
            let mut a = vec![vec![0; n]; n];
            for i in 0..n {
                a[i][i] = 2;
                if i + 1 < n {
                    a[i][i + 1] = -1;
                    a[i + 1][i] = -1;
                }
            }
            a
        };
        let (a, d) = match (family, n) {
            ('A', n) if n >= 1 => (chain(n), vec![1; n]),
            ('B', n) if n >= 2 => {
                let mut a = chain(n);
                a[n - 1][n - 2] = -2;
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (a, d)
            }
            ('C', n) if n >= 2 => {
                let mut a = chain(n);
                a[n - 2][n - 1] = -2;
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (a, d)
            }
            ('D', n) if n >= 4 => {
                let mut a = chain(n);
                a[n - 2][n - 1] = 0;
                a[n - 1][n - 2] = 0;
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
                (a, vec![1; n])
            }
            ('E', n) if (6..=8).contains(&n) => {
                // 1-3-4-5-..-n with 2 attached to 4
                let mut a = vec![vec![0; n]; n];
                for i in 0..n {
                    a[i][i] = 2;
                }
                let mut edge = |i: usize, j: usize| {
                    a[i - 1][j - 1] = -1;
                    a[j - 1][i - 1] = -1;
                };
                edge(1, 3);
                edge(2, 4);
                for i in 3..n {
                    edge(i, i + 1);
                }
                (a, vec![1; n])
            }
            ('F', 4) => {
                let mut a = chain(4);
                a[2][1] = -2;
                (a, vec![2, 2, 1, 1])
            }
            ('G', 2) => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
            _ => return Err(unknown()),
        };
        Ok(validate_datum(a, Some(d))?.with_name(name.to_ascii_uppercase()))
    }

    /// Parses `{"name": "G2"}` or `{"cartan": [[..]..], "d": [..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct File {
            name: Option<String>,
            cartan: Option<Vec<Vec<i32>>>,
            d: Option<Vec<i32>>,
        }
        let f: File = serde_json::from_str(text).map_err(|e| Error::Io(e.to_string()))?;
        match (f.cartan, f.name) {
            (Some(a), name) => {
                let datum = validate_datum(a, f.d)?;
                Ok(match name {
                    Some(n) => datum.with_name(n),
                    None => datum,
                })
            }
            (None, Some(name)) => Self::preset(&name),
            (None, None) => Err(Error::Io("datum file needs `name` or `cartan`".into())),
        }
    }
}

/// Multiplicity of each simple root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn zero(rank: usize) -> Self {
        Coloring(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = Self::zero(rank);
        c.0[i] = 1;
        c
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// `m_c`, the total number of points.
    pub fn weight(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        Coloring(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn add_root(&self, i: usize, k: u32) -> Self {
        let mut c = self.clone();
        c.0[i] += k;
        c
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Coloring)
    }

    pub fn sub_root(&self, i: usize, k: u32) -> Option<Self> {
        let mut c = self.clone();
        c.0[i] = c.0[i].checked_sub(k)?;
        Some(c)
    }

    /// Parses a comma-separated list such as `2,1`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let counts = text
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Precondition(format!("bad weight `{text}`: {e}")))?;
        if counts.len() != rank {
            return Err(Error::Precondition(format!(
                "weight `{text}` has {} entries, datum has rank {rank}",
                counts.len()
            )));
        }
        Ok(Coloring(counts))
    }

    /// Multinomial `m_c! / Π c_i!`.
    pub fn multinomial(&self) -> BigInt {
        let mut acc = BigInt::one();
        let mut n = 0u64;
        for &k in &self.0 {
            for i in 1..=k as u64 {
                n += 1;
                acc = acc * BigInt::from(n) / BigInt::from(i);
            }
        }
        acc
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All colorings of the given rank with `m_c <= max`, by weight then
/// lexicographically.
pub fn colorings_up_to(rank: usize, max: usize) -> Vec<Coloring> {
    let mut out = Vec::new();
    for m in 0..=max {
        colorings_of_weight(rank, m, &mut Vec::new(), &mut out);
    }
    out
}

fn colorings_of_weight(rank: usize, m: usize, prefix: &mut Vec<u32>, out: &mut Vec<Coloring>) {
    if prefix.len() + 1 == rank {
        prefix.push(m as u32);
        out.push(Coloring(prefix.clone()));
        prefix.pop();
        return;
    }
    if rank == 0 {
        return;
    }
    for k in (0..=m).rev() {
        prefix.push(k as u32);
        colorings_of_weight(rank, m - k, prefix, out);
        prefix.pop();
    }
}

/// A sequence of 0-based root indices; prints 1-based. Ordered
/// lexicographically (a proper prefix comes first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn repeat(i: usize, k: usize) -> Self {
        Word(vec![i as u8; k])
    }

    /// From 1-based letters, range-checked.
    pub fn from_one_based(letters: &[usize], rank: usize) -> Result<Self> {
        letters
            .iter()
            .map(|&l| {
                if l == 0 || l > rank {
                    Err(Error::IndexOutOfRange { index: l, rank })
                } else {
                    Ok((l - 1) as u8)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn content(&self, rank: usize) -> Coloring {
        let mut c = Coloring::zero(rank);
        for &l in &self.0 {
            c.0[l as usize] += 1;
        }
        c
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|&l| l as usize + 1).collect()
    }

    /// Comma-joined 1-based letters, used as JSON keys.
    pub fn key(&self) -> String {
        self.one_based()
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.key())
    }
}

/// Words of content `c` in lexicographic order, refusing when `m_c > bound`.
pub fn enumerate_words(c: &Coloring, bound: usize) -> Result<Vec<Word>> {
    let m = c.weight();
    if m > bound {
        return Err(Error::SizeBound {
            weight: m,
            bound,
            count: c.multinomial().to_string(),
        });
    }
    let mut out = Vec::new();
    let mut rest = c.0.clone();
    let mut prefix = Vec::with_capacity(m);
    fill_words(&mut rest, m, &mut prefix, &mut out);
    Ok(out)
}

fn fill_words(rest: &mut [u32], left: usize, prefix: &mut Vec<u8>, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(Word(prefix.clone()));
        return;
    }
    for i in 0..rest.len() {
        if rest[i] > 0 {
            rest[i] -= 1;
            prefix.push(i as u8);
            fill_words(rest, left - 1, prefix, out);
            prefix.pop();
            rest[i] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        assert!(validate_datum(vec![vec![2, -1], vec![-1, 2]], Some(vec![1, 1])).is_ok());
        let g2 = validate_datum(vec![vec![2, -3], vec![-1, 2]], Some(vec![1, 3])).unwrap();
        assert_eq!(g2.inner(0, 1), -3);
        assert_eq!(g2.inner(1, 1), 6);
        let err = validate_datum(vec![vec![2, 1], vec![1, 2]], None).unwrap_err();
        match err {
            Error::InvalidDatum(v) => assert!(v
                .iter()
                .any(|x| matches!(x, DatumViolation::PositiveOffDiagonal { .. }))),
            e => panic!("unexpected {e:?}"),
        }
        assert!(validate_datum(vec![vec![2, -1], vec![-1, 2]], Some(vec![1, 2])).is_err());
        assert!(validate_datum(vec![vec![2, -1], vec![-1, 3]], None).is_err());
    }

    #[test]
    fn symmetrizer_inference() {
        let g2 = validate_datum(vec![vec![2, -3], vec![-1, 2]], None).unwrap();
        assert_eq!(g2.symmetrizer(), &[1, 3]);
        // cycle with inconsistent ratios
        let bad = vec![vec![2, -1, -1], vec![-2, 2, -1], vec![-1, -1, 2]];
        assert!(validate_datum(bad, None).is_err());
    }

    #[test]
    fn presets_are_valid_and_finite_type() {
        for name in [
            "A1", "A2", "A5", "B2", "B4", "C2", "C3", "D4", "D5", "E6", "E7", "E8", "F4", "G2",
            "A1xA1",
        ] {
            let d = CartanDatum::preset(name).unwrap();
            assert!(d.is_positive_definite(), "{name}");
        }
        let b2 = CartanDatum::preset("B2").unwrap();
        assert_eq!(b2.matrix(), &[vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.symmetrizer(), &[2, 1]);
        let affine = validate_datum(vec![vec![2, -2], vec![-2, 2]], None).unwrap();
        assert!(!affine.is_positive_definite());
        assert!(CartanDatum::preset("Q7").is_err());
    }

    #[test]
    fn inner_examples() {
        let a2 = CartanDatum::preset("A2").unwrap();
        assert_eq!(a2.try_inner(1, 1).unwrap(), 2);
        assert_eq!(a2.try_inner(1, 2).unwrap(), -1);
        assert!(a2.try_inner(0, 1).is_err());
        assert_eq!(a2.inner_root_coloring(0, &Coloring(vec![1, 1])), 1);
    }

    #[test]
    fn word_enumeration() {
        let w = enumerate_words(&Coloring(vec![1, 1]), 8).unwrap();
        assert_eq!(w, vec![Word(vec![0, 1]), Word(vec![1, 0])]);
        assert_eq!(enumerate_words(&Coloring(vec![2, 0]), 8).unwrap().len(), 1);
        assert_eq!(enumerate_words(&Coloring(vec![2, 1]), 8).unwrap().len(), 3);
        for c in colorings_up_to(3, 6) {
            let words = enumerate_words(&c, 8).unwrap();
            assert_eq!(BigInt::from(words.len()), c.multinomial());
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
        match enumerate_words(&Coloring(vec![5, 5]), 8) {
            Err(Error::SizeBound { count, .. }) => assert_eq!(count, "252"),
            r => panic!("{r:?}"),
        }
    }

    #[test]
    fn json_loading() {
        assert!(CartanDatum::from_json(r#"{"name":"B2"}"#).is_ok());
        let g = CartanDatum::from_json(r#"{"cartan":[[2,-3],[-1,2]],"d":[1,3]}"#).unwrap();
        assert_eq!(g.rank(), 2);
        assert!(CartanDatum::from_json(r#"{"cartan":[[2,1],[1,2]]}"#).is_err());
    }
}
