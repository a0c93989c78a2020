//! Exact linear algebra over the rationals: dense matrices, incremental
//! sparse row reduction with optional combination tracking, null spaces and
//! the inertia of symmetric bilinear forms.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                rows: r,
                cols: bad.len(),
                expected: c,
            });
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                rows: other.rows,
                cols: other.cols,
                expected: self.cols,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn sparse_rows(&self) -> impl Iterator<Item = SparseVec<usize>> + '_ {
        (0..self.rows).map(move |i| {
            self.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in self.sparse_rows() {
            ech.insert(row);
        }
        ech.rank()
    }

    /// Basis of `{x : self x = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let mut ech = Echelon::new();
        for row in self.sparse_rows() {
            ech.insert(row);
        }
        ech.null_space(self.cols)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

pub type SparseVec<K> = BTreeMap<K, Rational>;

/// `dst += factor * src`, dropping cancelled entries.
pub fn axpy<K: Ord + Clone>(dst: &mut SparseVec<K>, factor: &Rational, src: &SparseVec<K>) {
    for (k, v) in src {
        let delta = factor * v;
        match dst.get_mut(k) {
            Some(slot) => {
                *slot += delta;
                if slot.is_zero() {
                    dst.remove(k);
                }
            }
            None => {
                dst.insert(k.clone(), delta);
            }
        }
    }
}

#[derive(Debug, Clone)]
struct EchelonRow<K> {
    pivot: K,
    row: SparseVec<K>,
    /// Which inserted vectors (by insertion order) combine into `row`.
    combo: SparseVec<usize>,
}

/// Incrementally maintained reduced row echelon form over sparse rows.
///
/// Each stored row remembers the linear combination of inserted vectors it
/// came from, which lets [`Echelon::coordinates`] express a vector in the
/// span in terms of the inserted ones.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<EchelonRow<K>>,
    pivots: BTreeMap<K, usize>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows; returns the residual and the
    /// combination of inserted vectors that was subtracted.
    fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut residual = v.clone();
        let mut used = SparseVec::new();
        // Stored rows vanish on every other pivot column, so one pass over the
        // pivots present in the original vector is enough.
        for (k, coef) in v {
            if let Some(&r) = self.pivots.get(k) {
                let row = &self.rows[r];
                let factor = -coef.clone();
                axpy(&mut residual, &factor, &row.row);
                axpy(&mut used, coef, &row.combo);
            }
        }
        (residual, used)
    }

    /// Insert a vector; returns false when it was already in the span.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        let (mut residual, used) = self.reduce(&v);
        let Some((pivot, lead)) = residual.iter().next().map(|(k, c)| (k.clone(), c.clone()))
        else {
            return false;
        };
        let mut combo: SparseVec<usize> = SparseVec::new();
        combo.insert(index, Rational::one());
        axpy(&mut combo, &-Rational::one(), &used);
        let inv = lead.recip();
        for c in residual.values_mut() {
            *c *= &inv;
        }
        for c in combo.values_mut() {
            *c *= &inv;
        }
        for other in &mut self.rows {
            if let Some(c) = other.row.get(&pivot).cloned() {
                let factor = -c;
                axpy(&mut other.row, &factor, &residual);
                axpy(&mut other.combo, &factor, &combo);
            }
        }
        self.pivots.insert(pivot.clone(), self.rows.len());
        self.rows.push(EchelonRow {
            pivot,
            row: residual,
            combo,
        });
        true
    }

    /// Coefficients `c` with `v = Σ c_i inserted_i`, if `v` lies in the span.
    /// Only meaningful when every inserted vector was independent.
    pub fn coordinates(&self, v: &SparseVec<K>) -> Option<SparseVec<usize>> {
        let (residual, used) = self.reduce(v);
        residual.is_empty().then_some(used)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }
}

impl Echelon<usize> {
    /// Basis of the solutions of `row · x = 0` for all inserted rows, over
    /// `cols` unknowns.
    pub fn null_space(&self, cols: usize) -> Vec<Vec<Rational>> {
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !self.pivots.contains_key(c)) {
            let mut x = vec![Rational::zero(); cols];
            x[free] = Rational::one();
            for row in &self.rows {
                if let Some(c) = row.row.get(&free) {
                    x[row.pivot] = -c.clone();
                }
            }
            basis.push(x);
        }
        basis
    }
}

/// Counts of positive, negative and zero entries in a diagonalisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Sylvester inertia of a symmetric matrix by congruence diagonalisation.
pub fn inertia(m: &Matrix) -> Result<Inertia> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            rows: m.rows,
            cols: m.cols,
            expected: m.rows,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut out = Inertia::default();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                swap_symmetric(&mut a, k, j);
            } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                // all remaining diagonal entries vanish: add e_j to e_k so that
                // the new diagonal entry is 2 a_kj != 0
                for i in 0..n {
                    let v = a[(j, i)].clone();
                    a[(k, i)] += v;
                }
                for i in 0..n {
                    let v = a[(i, j)].clone();
                    a[(i, k)] += v;
                }
            } else {
                out.zero += 1;
                continue;
            }
        }
        let d = a[(k, k)].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        let col: Vec<(usize, Rational)> = (k + 1..n)
            .filter(|&i| !a[(i, k)].is_zero())
            .map(|i| (i, a[(i, k)].clone() / &d))
            .collect();
        let row: Vec<(usize, Rational)> = (k + 1..n)
            .filter(|&j| !a[(k, j)].is_zero())
            .map(|j| (j, a[(k, j)].clone()))
            .collect();
        for (i, f) in &col {
            for (j, v) in &row {
                a[(*i, *j)] -= f * v;
            }
        }
        for i in k + 1..n {
            a[(i, k)] = Rational::zero();
            a[(k, i)] = Rational::zero();
        }
    }
    Ok(out)
}

fn swap_symmetric(a: &mut Matrix, i: usize, j: usize) {
    let n = a.rows;
    for c in 0..n {
        a.data.swap(i * n + c, j * n + c);
    }
    for r in 0..n {
        a.data.swap(r * n + i, r * n + j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_null_space() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.null_space();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn coordinates_in_span() {
        let mut ech: Echelon<usize> = Echelon::new();
        let v0: SparseVec<usize> = [(0, int(1)), (1, int(1))].into_iter().collect();
        let v1: SparseVec<usize> = [(1, int(1)), (2, int(2))].into_iter().collect();
        assert!(ech.insert(v0));
        assert!(ech.insert(v1));
        let w: SparseVec<usize> = [(0, int(2)), (1, int(5)), (2, int(6))]
            .into_iter()
            .collect();
        let c = ech.coordinates(&w).unwrap();
        assert_eq!(c.get(&0), Some(&int(2)));
        assert_eq!(c.get(&1), Some(&int(3)));
        let outside: SparseVec<usize> = [(2, int(1))].into_iter().collect();
        assert!(ech.coordinates(&outside).is_none());
        let dependent: SparseVec<usize> = [(0, int(1)), (2, int(-2))].into_iter().collect();
        assert!(!ech.insert(dependent));
    }

    #[test]
    fn inertia_of_small_forms() {
        assert_eq!(
            inertia(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        assert_eq!(
            inertia(&m(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]])).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 1
            }
        );
        // eigenvalues 3 and -1
        assert_eq!(
            inertia(&m(&[&[1, 2], &[2, 1]])).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        assert_eq!(
            inertia(&m(&[&[0, 0, 1], &[0, 0, 0], &[1, 0, 0]])).unwrap(),
            Inertia {
                positive: 1,
                negative: 1,
                zero: 1
            }
        );
    }
}
