//! Dense exact linear algebra over [`Scalar`].
//!
//! Elimination picks, within each column, the structurally simplest nonzero
//! pivot, which keeps rational-function entries small.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("no solution")]
    NoSolution,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Scalar>>,
}

const PAR_ROWS: usize = 48;

impl ScalarMatrix {
    pub fn zero(rows: usize, cols: usize, zero: &Scalar) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![vec![zero.clone(); cols]; rows],
        }
    }

    pub fn identity(n: usize, zero: &Scalar, one: &Scalar) -> Self {
        let mut m = ScalarMatrix::zero(n, n, zero);
        for i in 0..n {
            m.data[i][i] = one.clone();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        ScalarMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    /// Builds from columns; `rows` is needed when there are no columns.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>], zero: &Scalar) -> Self {
        let mut m = ScalarMatrix::zero(rows, columns.len(), zero);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.data[i][j] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        self.data.iter().map(|r| r[c].clone()).collect()
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let data = (0..self.cols).map(|c| self.column(c)).collect();
        ScalarMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Side-by-side concatenation.
    pub fn hstack(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.rows, other.rows, "row counts");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        ScalarMatrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Scalar::is_zero)
    }

    pub fn mul_vec(&self, x: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
        if x.len() != self.cols {
            return Err(LaError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn mul(&self, other: &ScalarMatrix) -> ScalarMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension");
        let t = other.transpose();
        let data = self
            .data
            .iter()
            .map(|row| t.data.iter().map(|col| dot(row, col)).collect())
            .collect();
        ScalarMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let best = (r..m.rows)
                .filter(|&i| !m.data[i][c].is_zero())
                .min_by_key(|&i| m.data[i][c].complexity());
            let Some(best) = best else { continue };
            m.data.swap(r, best);
            let inv = m.data[r][c].inv().expect("nonzero pivot");
            let pivot_row: Vec<Scalar> = m.data[r]
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * &inv })
                .collect();
            let eliminate = |(i, row): (usize, &mut Vec<Scalar>)| {
                if i == r || row[c].is_zero() {
                    return;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            };
            if m.rows >= PAR_ROWS {
                m.data.par_iter_mut().enumerate().for_each(eliminate);
            } else {
                m.data.iter_mut().enumerate().for_each(eliminate);
            }
            m.data[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// Basis of the right null space `{x : m·x = 0}`.
pub fn kernel_basis(m: &ScalarMatrix) -> Vec<Vec<Scalar>> {
    let (r, pivots) = m.rref();
    let zero = Scalar::zero();
    let one = Scalar::one();
    let mut basis = Vec::new();
    let mut is_pivot = vec![None; m.cols];
    for (k, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(k);
    }
    for free in (0..m.cols).filter(|&c| is_pivot[c].is_none()) {
        let mut v = vec![zero.clone(); m.cols];
        v[free] = one.clone();
        for (k, &c) in pivots.iter().enumerate() {
            v[c] = -r.get(k, free);
        }
        basis.push(v);
    }
    basis
}

/// Some `x` with `m·x = v`.
pub fn solve_preimage(m: &ScalarMatrix, v: &[Scalar]) -> Result<Vec<Scalar>, LaError> {
    if v.len() != m.rows {
        return Err(LaError::DimensionMismatch {
            expected: m.rows,
            found: v.len(),
        });
    }
    let aug = m.hstack(&ScalarMatrix::from_columns(m.rows, &[v.to_vec()], &Scalar::zero()));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&m.cols) {
        return Err(LaError::NoSolution);
    }
    let mut x = vec![Scalar::zero(); m.cols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = r.get(k, m.cols).clone();
    }
    Ok(x)
}

/// Preimages of several right-hand sides from a single elimination;
/// `None` marks vectors outside the column space.
pub fn solve_many(m: &ScalarMatrix, vs: &[Vec<Scalar>]) -> Result<Vec<Option<Vec<Scalar>>>, LaError> {
    if let Some(v) = vs.iter().find(|v| v.len() != m.rows) {
        return Err(LaError::DimensionMismatch {
            expected: m.rows,
            found: v.len(),
        });
    }
    let aug = m.hstack(&ScalarMatrix::from_columns(m.rows, vs, &Scalar::zero()));
    let (r, pivots) = aug.rref();
    // pivots among the original columns only
    let base: Vec<usize> = pivots.iter().copied().take_while(|&c| c < m.cols).collect();
    let bad_rows = base.len()..r.rows;
    Ok((0..vs.len())
        .map(|k| {
            let col = m.cols + k;
            if bad_rows.clone().any(|i| !r.get(i, col).is_zero()) {
                return None;
            }
            let mut x = vec![Scalar::zero(); m.cols];
            for (i, &c) in base.iter().enumerate() {
                x[c] = r.get(i, col).clone();
            }
            Some(x)
        })
        .collect())
}

pub fn rank(m: &ScalarMatrix) -> usize {
    m.rank()
}

impl fmt::Display for ScalarMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Params;

    fn ints(rows: &[&[i64]]) -> ScalarMatrix {
        ScalarMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    #[test]
    fn trivial_kernels() {
        let z = ScalarMatrix::zero(3, 3, &Scalar::zero());
        assert_eq!(kernel_basis(&z).len(), 3);
        let id = ScalarMatrix::identity(3, &Scalar::zero(), &Scalar::one());
        assert!(kernel_basis(&id).is_empty());
        let v = vec![Scalar::from_int(4), Scalar::from_int(-1), Scalar::from_int(7)];
        assert_eq!(solve_preimage(&id, &v).unwrap(), v);
        assert_eq!(solve_preimage(&z, &v), Err(LaError::NoSolution));
        assert!(matches!(solve_preimage(&z, &v[..2]), Err(LaError::DimensionMismatch { .. })));
    }

    #[test]
    fn several_right_hand_sides() {
        let m = ints(&[&[1, 0], &[0, 1], &[1, 1]]);
        let good = vec![Scalar::from_int(2), Scalar::from_int(3), Scalar::from_int(5)];
        let bad = vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::from_int(0)];
        let sols = solve_many(&m, &[good.clone(), bad, good.clone()]).unwrap();
        assert_eq!(m.mul_vec(sols[0].as_ref().unwrap()).unwrap(), good);
        assert!(sols[1].is_none());
        assert!(sols[2].is_some());
    }

    #[test]
    fn rank_nullity() {
        let m = ints(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(m.rank() + k.len(), 4);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn generic_elimination() {
        let g = Params::Generic;
        let m = ScalarMatrix::from_rows(vec![
            vec![g.p(), g.q()],
            vec![g.laurent(2, 0), g.laurent(1, 1)],
        ]);
        assert_eq!(m.rank(), 1);
        let k = kernel_basis(&m);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(Scalar::is_zero));
        let v = vec![g.one(), g.p()];
        let x = solve_preimage(&m, &v).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), v);
    }
}
