//! Exact linear algebra over the scalar fraction field.
//!
//! Elimination is fraction-free (Bareiss): rows are first cleared of
//! denominators, after which every intermediate entry is a minor of the
//! input and each division is exact in the Laurent polynomial ring.

use crate::scalar::{LaurentPoly, ScalarFraction};

pub type Matrix = Vec<Vec<ScalarFraction>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![ScalarFraction::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = ScalarFraction::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] += &(x * y);
                }
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, x: &[ScalarFraction]) -> Vec<ScalarFraction> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).fold(ScalarFraction::zero(), |acc, (p, q)| {
                if p.is_zero() || q.is_zero() {
                    acc
                } else {
                    acc + p * q
                }
            })
        })
        .collect()
}

pub fn mat_sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, c: &ScalarFraction) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|x| x * c).collect())
        .collect()
}

pub fn transpose(a: &Matrix) -> Matrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn is_zero_matrix(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(ScalarFraction::is_zero))
}

/// Exact equality of same-shaped matrices.
pub fn mat_eq(a: &Matrix, b: &Matrix) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| x == y))
}

/// Multiplies each row by the product of its distinct denominators.
fn clear_rows(a: &[Vec<ScalarFraction>]) -> Vec<Vec<LaurentPoly>> {
    a.iter()
        .map(|row| {
            let mut dens: Vec<&LaurentPoly> = Vec::new();
            for x in row {
                if !x.is_zero() && !x.den().is_one() && !dens.contains(&x.den()) {
                    dens.push(x.den());
                }
            }
            if dens.is_empty() {
                return row.iter().map(|x| x.num().clone()).collect();
            }
            let l = dens.iter().fold(LaurentPoly::one(), |acc, d| &acc * *d);
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        LaurentPoly::zero()
                    } else {
                        let cof = l.exact_div(x.den()).expect("denominator divides product");
                        x.num() * &cof
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free row echelon form over the first `ncols` columns. Returns the
/// pivot columns; rows beyond the rank have zeros in those columns.
fn bareiss_echelon(m: &mut [Vec<LaurentPoly>], ncols: usize) -> Vec<usize> {
    let rows = m.len();
    let total = m.first().map_or(0, Vec::len);
    let mut prev = LaurentPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows)
            .filter(|&i| !m[i][col].is_zero())
            .min_by_key(|&i| m[i][col].num_terms())
        else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in col + 1..total {
                let t = &(&m[i][j] * &m[r][col]) - &(&m[i][col] * &m[r][j]);
                m[i][j] = if prev.is_one() {
                    t
                } else {
                    t.exact_div(&prev).expect("Bareiss division is exact")
                };
            }
            m[i][col] = LaurentPoly::zero();
        }
        // entries of rows above the pivot row in skipped columns need no update
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank over the fraction field.
pub fn rank(a: &Matrix) -> usize {
    let mut m = clear_rows(a);
    let ncols = m.first().map_or(0, Vec::len);
    bareiss_echelon(&mut m, ncols).len()
}

/// Rank of a matrix that is already polynomial.
pub fn rank_poly(a: Vec<Vec<LaurentPoly>>) -> usize {
    let mut m = a;
    let ncols = m.first().map_or(0, Vec::len);
    bareiss_echelon(&mut m, ncols).len()
}

/// Determinant of a square matrix.
pub fn determinant(a: &Matrix) -> ScalarFraction {
    let n = a.len();
    if n == 0 {
        return ScalarFraction::one();
    }
    let dens: Vec<ScalarFraction> = a
        .iter()
        .map(|row| {
            let scaled = clear_rows(std::slice::from_ref(row));
            // the factor used to clear this row
            let x = row.iter().zip(&scaled[0]).find(|(x, _)| !x.is_zero());
            match x {
                Some((orig, cleared)) => ScalarFraction::from(cleared.clone())
                    .checked_div(orig)
                    .expect("nonzero"),
                None => ScalarFraction::one(),
            }
        })
        .collect();
    let mut m = clear_rows(a);
    // track row swaps for the sign
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return ScalarFraction::zero();
        };
        if p != k {
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let scale = dens.iter().fold(ScalarFraction::one(), |acc, d| &acc * d);
    (ScalarFraction::from(prev.scale_int(&sign.into())))
        .checked_div(&scale)
        .expect("nonzero scale")
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution {
    Unique(Vec<ScalarFraction>),
    Underdetermined { nullity: usize },
    Inconsistent,
}

/// Solves `A X = B` for several right-hand sides at once (`bs` holds the
/// columns of `B`).
pub fn solve_many(a: &Matrix, bs: &[Vec<ScalarFraction>]) -> Vec<Solution> {
    let rows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Matrix = (0..rows)
        .map(|i| {
            let mut r = a[i].clone();
            r.extend(bs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    let mut m = clear_rows(&aug);
    let pivots = bareiss_echelon(&mut m, ncols);
    let rk = pivots.len();
    bs.iter()
        .enumerate()
        .map(|(bi, _)| {
            let bcol = ncols + bi;
            if (rk..rows).any(|i| !m[i][bcol].is_zero()) {
                return Solution::Inconsistent;
            }
            if rk < ncols {
                return Solution::Underdetermined { nullity: ncols - rk };
            }
            let mut x = vec![ScalarFraction::zero(); ncols];
            for r in (0..rk).rev() {
                let col = pivots[r];
                let mut acc = ScalarFraction::from(m[r][bcol].clone());
                for j in col + 1..ncols {
                    if !m[r][j].is_zero() && !x[j].is_zero() {
                        acc -= &(&x[j] * &m[r][j]);
                    }
                }
                x[col] = acc
                    .checked_div(&ScalarFraction::from(m[r][col].clone()))
                    .expect("pivot is nonzero");
            }
            Solution::Unique(x)
        })
        .collect()
}

pub fn solve(a: &Matrix, b: &[ScalarFraction]) -> Solution {
    solve_many(a, &[b.to_vec()]).pop().expect("one solution")
}

/// Nullity of `A` (number of columns minus rank).
pub fn nullity(a: &Matrix) -> usize {
    a.first().map_or(0, Vec::len) - rank(a)
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let id = identity(n);
    let sols = solve_many(a, &id);
    let mut cols = Vec::with_capacity(n);
    for s in sols {
        match s {
            Solution::Unique(x) => cols.push(x),
            _ => return None,
        }
    }
    Some(transpose(&cols))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> ScalarFraction {
        ScalarFraction::v_pow(e)
    }

    fn f(n: i64) -> ScalarFraction {
        ScalarFraction::from_int(n)
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = vec![
            vec![v(1), v(2), f(1)],
            vec![v(2), v(3), v(1)],
            vec![f(1), f(0), v(-1)],
        ];
        assert_eq!(rank(&m), 2);
        assert_eq!(rank(&identity(4)), 4);
        assert_eq!(rank(&zeros(3, 2)), 0);
    }

    #[test]
    fn solve_and_inverse() {
        let one = ScalarFraction::one();
        let m = vec![vec![one.clone(), v(1)], vec![v(1), one.clone()]];
        let inv = inverse(&m).unwrap();
        assert!(mat_eq(&mat_mul(&m, &inv), &identity(2)));
        let det = determinant(&m);
        assert_eq!(det, &one - &v(2));
        let sing = vec![vec![one.clone(), v(1)], vec![v(1), v(2)]];
        assert!(inverse(&sing).is_none());
        assert_eq!(solve(&sing, &[one.clone(), v(1)]), Solution::Underdetermined { nullity: 1 });
        assert_eq!(solve(&sing, &[one.clone(), one.clone()]), Solution::Inconsistent);
    }

    #[test]
    fn fractional_entries() {
        let a = ScalarFraction::new(
            crate::scalar::LaurentPoly::one(),
            crate::scalar::LaurentPoly::one() - crate::scalar::LaurentPoly::v_pow(2),
        )
        .unwrap();
        let m = vec![vec![a.clone(), f(1)], vec![f(2), f(0)]];
        let inv = inverse(&m).unwrap();
        assert!(mat_eq(&mat_mul(&inv, &m), &identity(2)));
        assert_eq!(determinant(&m), f(-2));
    }
}
