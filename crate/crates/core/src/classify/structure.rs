//! Structure constants and the isomorphism fingerprint used as the
//! classification oracle.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{self, Echelon, Matrix, SparseVec};
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::Blade;
use crate::{Error, Result};

/// `b_i b_j = Σ_k c_ijk b_k`, stored sparsely per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<SparseVec<usize>>,
}

impl StructureConstants {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> SparseVec<usize>) -> Self {
        let mut table = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                table.push(f(i, j));
            }
        }
        Self { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `b_i b_j`.
    pub fn product(&self, i: usize, j: usize) -> &SparseVec<usize> {
        &self.table[i * self.dim + j]
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> Rational {
        self.product(i, j)
            .get(&k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Dense cubic array `c[i][j][k]`.
    pub fn to_dense(&self) -> Vec<Vec<Vec<Rational>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| (0..self.dim).map(|k| self.coefficient(i, j, k)).collect())
                    .collect()
            })
            .collect()
    }

    /// Matrix of `x ↦ b_i x` on coordinate columns.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for l in 0..self.dim {
            for (k, c) in self.product(i, l) {
                m[(*k, l)] = c.clone();
            }
        }
        m
    }

    pub fn left_multiplications(&self) -> Vec<Matrix> {
        (0..self.dim).map(|i| self.left_multiplication(i)).collect()
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, x: &SparseVec<usize>, y: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (i, a) in x {
            for (j, b) in y {
                linalg::axpy(&mut out, &(a * b), self.product(*i, *j));
            }
        }
        out
    }

    /// Block direct sum: basis of `self` followed by basis of `other`.
    pub fn direct_sum(&self, other: &StructureConstants) -> StructureConstants {
        let (d1, d2) = (self.dim, other.dim);
        Self::from_fn(d1 + d2, |i, j| {
            if i < d1 && j < d1 {
                self.product(i, j).clone()
            } else if i >= d1 && j >= d1 {
                other
                    .product(i - d1, j - d1)
                    .iter()
                    .map(|(k, c)| (k + d1, c.clone()))
                    .collect()
            } else {
                SparseVec::new()
            }
        })
    }

    /// `(x b_k)` for `x` in coordinates.
    fn multiply_right_basis(&self, x: &SparseVec<usize>, k: usize) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (i, a) in x {
            linalg::axpy(&mut out, a, self.product(*i, k));
        }
        out
    }

    /// `(b_i x)` for `x` in coordinates.
    fn multiply_left_basis(&self, i: usize, x: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (j, a) in x {
            linalg::axpy(&mut out, a, self.product(i, *j));
        }
        out
    }

    pub fn check_associativity_triple(&self, i: usize, j: usize, k: usize) -> Result<()> {
        let left = self.multiply_right_basis(self.product(i, j), k);
        let right = self.multiply_left_basis(i, self.product(j, k));
        if left == right {
            Ok(())
        } else {
            Err(Error::NonAssociative(i, j, k))
        }
    }

    /// Check `(b_i b_j) b_k = b_i (b_j b_k)` over all triples drawn from
    /// `indices`.
    pub fn check_associativity(&self, indices: &[usize]) -> Result<()> {
        for &i in indices {
            for &j in indices {
                for &k in indices {
                    self.check_associativity_triple(i, j, k)?;
                }
            }
        }
        Ok(())
    }

    /// Up to `count` evenly spread basis indices, always including both ends.
    pub fn sample_indices(&self, count: usize) -> Vec<usize> {
        if self.dim <= count {
            return (0..self.dim).collect();
        }
        let mut out: Vec<usize> = (0..count)
            .map(|t| t * (self.dim - 1) / (count - 1))
            .collect();
        out.dedup();
        out
    }
}

/// Structure constants of the algebra spanned by `basis` under `product`.
///
/// Fails with [`Error::NotIndependent`] if the basis is linearly dependent and
/// with [`Error::NotClosed`] if some product leaves its span.
pub fn regular_representation<F>(basis: &[Multivector], product: F) -> Result<StructureConstants>
where
    F: Fn(&Multivector, &Multivector) -> Result<Multivector>,
{
    let mut span: Echelon<Blade> = Echelon::new();
    for (index, b) in basis.iter().enumerate() {
        if !span.insert(to_sparse(b)) {
            return Err(Error::NotIndependent { index });
        }
    }
    let dim = basis.len();
    let mut table = Vec::with_capacity(dim * dim);
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let prod = product(a, b)?;
            let coords = span
                .coordinates(&to_sparse(&prod))
                .ok_or(Error::NotClosed { left: i, right: j })?;
            table.push(coords);
        }
    }
    Ok(StructureConstants { dim, table })
}

fn to_sparse(mv: &Multivector) -> SparseVec<Blade> {
    mv.terms().map(|(b, c)| (b, c.clone())).collect()
}

/// Isomorphism invariants of a finite-dimensional semisimple algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StructuralInvariants {
    pub dim: usize,
    pub center_dim: usize,
    /// Inertia `(positive, negative)` of `B(x, y) = tr(L_x L_y)`.
    pub trace_sig: (usize, usize),
    /// Inertia of `B` restricted to the centre.
    pub center_trace_sig: (usize, usize),
}

impl fmt::Display for StructuralInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dim {}, center {}, trace ({},{}), center trace ({},{})",
            self.dim,
            self.center_dim,
            self.trace_sig.0,
            self.trace_sig.1,
            self.center_trace_sig.0,
            self.center_trace_sig.1
        )
    }
}

/// Associativity is spot-checked on this many basis indices (all triples).
const ASSOCIATIVITY_SAMPLE: usize = 12;

pub fn structural_invariants(sc: &StructureConstants) -> Result<StructuralInvariants> {
    sc.check_associativity(&sc.sample_indices(ASSOCIATIVITY_SAMPLE))?;
    let dim = sc.dim();

    let center = center_basis(sc);
    let form = trace_form(sc);
    let inertia = linalg::inertia(&form)?;
    if inertia.zero != 0 {
        return Err(Error::Degenerate);
    }

    let mut center_form = Matrix::zeros(center.len(), center.len());
    let images: Vec<Vec<Rational>> = center.iter().map(|z| form.mul_vec(z)).collect();
    for (a, za) in center.iter().enumerate() {
        for (b, fzb) in images.iter().enumerate() {
            center_form[(a, b)] = za
                .iter()
                .zip(fzb)
                .filter(|(x, _)| !x.is_zero())
                .fold(Rational::zero(), |acc, (x, y)| acc + x * y);
        }
    }
    let center_inertia = linalg::inertia(&center_form)?;

    Ok(StructuralInvariants {
        dim,
        center_dim: center.len(),
        trace_sig: (inertia.positive, inertia.negative),
        center_trace_sig: (center_inertia.positive, center_inertia.negative),
    })
}

/// Null space of `x ↦ ([x, b_j])_j`.
pub fn center_basis(sc: &StructureConstants) -> Vec<Vec<Rational>> {
    let dim = sc.dim();
    let mut ech: Echelon<usize> = Echelon::new();
    for j in 0..dim {
        // rows[k][i] = c_ijk - c_jik
        let mut rows: BTreeMap<usize, SparseVec<usize>> = BTreeMap::new();
        for i in 0..dim {
            for (k, c) in sc.product(i, j) {
                *rows
                    .entry(*k)
                    .or_default()
                    .entry(i)
                    .or_insert_with(Rational::zero) += c;
            }
            for (k, c) in sc.product(j, i) {
                *rows
                    .entry(*k)
                    .or_default()
                    .entry(i)
                    .or_insert_with(Rational::zero) -= c;
            }
        }
        for (_, mut row) in rows {
            row.retain(|_, v| !v.is_zero());
            if !row.is_empty() {
                ech.insert(row);
                if ech.rank() == dim {
                    return Vec::new();
                }
            }
        }
    }
    ech.null_space(dim)
}

/// Gram matrix of `B(b_i, b_j) = tr(L_i L_j)`.
pub fn trace_form(sc: &StructureConstants) -> Matrix {
    let dim = sc.dim();
    // (L_j)_{l,k} = c_{j,k,l}, filed under its position (l, k)
    let mut by_position: BTreeMap<(usize, usize), Vec<(usize, Rational)>> = BTreeMap::new();
    for j in 0..dim {
        for k in 0..dim {
            for (l, c) in sc.product(j, k) {
                by_position.entry((*l, k)).or_default().push((j, c.clone()));
            }
        }
    }
    let mut form = Matrix::zeros(dim, dim);
    let mut row = vec![Rational::zero(); dim];
    for i in 0..dim {
        row.iter_mut().for_each(|v| v.set_zero());
        // tr(L_i L_j) = Σ_{k,l} (L_i)_{k,l} (L_j)_{l,k}
        for l in 0..dim {
            for (k, c) in sc.product(i, l) {
                if let Some(entries) = by_position.get(&(l, *k)) {
                    for (j, v) in entries {
                        row[*j] += c * v;
                    }
                }
            }
        }
        for (j, v) in row.iter().enumerate() {
            form[(i, j)] = v.clone();
        }
    }
    form
}
