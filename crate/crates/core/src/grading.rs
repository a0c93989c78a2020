//! Z2-gradings of `Cl(p,q)` that preserve the multivector structure.
//!
//! Such a grading is fixed by its grading automorphism `alpha`, which maps
//! `V` to itself as an isometric involution. In an adapted orthonormal basis
//! `alpha` simply negates the basis vectors of the odd subspace `V1`, so the
//! primary representation here is the set of odd basis vectors. General
//! involutions of `V` are accepted through [`validate_involution`], which
//! reduces them to the counts `(p0, q0, p1, q1)`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{self, Matrix};
use crate::multivector::Multivector;
use crate::rational::Rational;
use crate::signature::{blade_product_unchecked, Blade, Signature};
use crate::{Error, Result};

/// Basis-aligned grading: `odd` holds the basis vectors spanning `V1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Z2Grading {
    sig: Signature,
    odd: Blade,
}

/// Signatures of `g` restricted to `V0` and `V1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingCounts {
    pub p0: usize,
    pub q0: usize,
    pub p1: usize,
    pub q1: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dichotomy {
    /// `Cl0` is the whole algebra.
    Trivial,
    /// `Cl0` has half the dimension of the algebra.
    Half,
}

impl Z2Grading {
    pub fn new(sig: Signature, odd: Blade) -> Result<Self> {
        sig.check_blade(odd)?;
        Ok(Self { sig, odd })
    }

    pub fn from_odd_indices<I: IntoIterator<Item = usize>>(sig: Signature, odd: I) -> Result<Self> {
        let odd = odd.into_iter().try_fold(Blade::SCALAR, |acc, i| {
            sig.check_index(i)?;
            Ok::<_, Error>(acc.union(Blade::vector(i)?))
        })?;
        Self::new(sig, odd)
    }

    /// Every vector even: `alpha = id`.
    pub fn trivial(sig: Signature) -> Self {
        Self {
            sig,
            odd: Blade::SCALAR,
        }
    }

    /// Every vector odd: `alpha` is the parity automorphism.
    pub fn usual(sig: Signature) -> Self {
        Self {
            sig,
            odd: Blade::from_bits(sig.full_mask()),
        }
    }

    /// Grading with `p0` even positive and `q0` even negative vectors, taking
    /// the last `p - p0` positive and last `q - q0` negative basis vectors as
    /// the odd ones.
    pub fn canonical(sig: Signature, p0: usize, q0: usize) -> Result<Self> {
        let (p, q) = (sig.p(), sig.q());
        if p0 > p || q0 > q {
            return Err(Error::InvalidRange(alloc::format!(
                "(p0,q0) = ({p0},{q0}) outside (0..={p}, 0..={q})"
            )));
        }
        let odd = (p0 + 1..=p).chain(p + q0 + 1..=p + q);
        Self::from_odd_indices(sig, odd)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn odd_set(&self) -> Blade {
        self.odd
    }

    pub fn even_set(&self) -> Blade {
        Blade::from_bits(self.sig.full_mask()).difference(self.odd)
    }

    pub fn is_trivial(&self) -> bool {
        self.odd.is_scalar()
    }

    pub fn is_usual(&self) -> bool {
        self.odd.bits() == self.sig.full_mask()
    }

    pub fn counts(&self) -> GradingCounts {
        let neg = self.sig.negative_mask();
        let odd = self.odd.bits();
        let q1 = (odd & neg).count_ones() as usize;
        let p1 = (odd & !neg).count_ones() as usize;
        GradingCounts {
            p0: self.sig.p() - p1,
            q0: self.sig.q() - q1,
            p1,
            q1,
        }
    }

    /// Alpha-parity of a basis blade: true when it is odd.
    pub fn blade_is_odd(&self, blade: Blade) -> bool {
        blade.intersection(self.odd).grade() % 2 == 1
    }

    fn check(&self, a: &Multivector) -> Result<()> {
        if a.signature() == self.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: a.signature(),
                right: self.sig,
            })
        }
    }

    /// The grading automorphism.
    pub fn alpha(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(a.map_signs(|b| self.blade_is_odd(b)))
    }

    /// `pi_0(a) = (a + alpha(a)) / 2`.
    pub fn project_even(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(self.split(a).0)
    }

    /// `pi_1(a) = (a - alpha(a)) / 2`.
    pub fn project_odd(&self, a: &Multivector) -> Result<Multivector> {
        self.check(a)?;
        Ok(self.split(a).1)
    }

    /// `(pi_0(a), pi_1(a))` without signature checks.
    pub(crate) fn split(&self, a: &Multivector) -> (Multivector, Multivector) {
        let mut even = Multivector::zero(self.sig);
        let mut odd = Multivector::zero(self.sig);
        for (b, c) in a.terms() {
            let target = if self.blade_is_odd(b) {
                &mut odd
            } else {
                &mut even
            };
            target.add_term(b, c.clone());
        }
        (even, odd)
    }

    /// Blades with an even number of odd factors: a basis of `Cl0`.
    pub fn even_subalgebra_basis(&self) -> Vec<Blade> {
        self.sig
            .blades()
            .into_iter()
            .filter(|&b| !self.blade_is_odd(b))
            .collect()
    }

    pub fn odd_part_basis(&self) -> Vec<Blade> {
        self.sig
            .blades()
            .into_iter()
            .filter(|&b| self.blade_is_odd(b))
            .collect()
    }

    pub fn dimension_dichotomy(&self) -> Dichotomy {
        if self.is_trivial() {
            Dichotomy::Trivial
        } else {
            Dichotomy::Half
        }
    }

    /// Multiply every pair of basis blades and list the pairs whose product
    /// lands outside the parity component predicted by the grading rule.
    pub fn closure_check(&self) -> ClosureReport {
        let blades = self.sig.blades();
        let mut violations = Vec::new();
        for &a in &blades {
            for &b in &blades {
                let (_, prod) = blade_product_unchecked(a, b, self.sig);
                let expected = self.blade_is_odd(a) ^ self.blade_is_odd(b);
                if self.blade_is_odd(prod) != expected {
                    violations.push((a, b));
                }
            }
        }
        ClosureReport {
            pairs_checked: blades.len() * blades.len(),
            violations,
        }
    }

    /// Matrix of `alpha|_V` in the standard basis.
    pub fn involution(&self) -> Involution {
        let n = self.sig.n();
        let mut m = Matrix::identity(n);
        for i in self.odd.indices() {
            m[(i - 1, i - 1)] = -Rational::from_integer(1.into());
        }
        Involution::new(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureReport {
    pub pairs_checked: usize,
    pub violations: Vec<(Blade, Blade)>,
}

impl ClosureReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A candidate `alpha|_V`, as an `n x n` matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    matrix: Matrix,
}

impl Involution {
    pub fn new(matrix: Matrix) -> Self {
        Self { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// Outcome of a successful [`validate_involution`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedInvolution {
    pub counts: GradingCounts,
    /// Basis of the +1 eigenspace `V0` (coordinates on `e1..en`).
    pub even_space: Vec<Vec<Rational>>,
    /// Basis of the -1 eigenspace `V1`.
    pub odd_space: Vec<Vec<Rational>>,
    /// `g(x, y) = 0` for every `x` in `V0`, `y` in `V1`.
    pub orthogonal: bool,
    /// Odd set when the matrix is diagonal in the standard basis.
    pub basis_aligned: Option<Blade>,
}

fn metric_matrix(sig: Signature) -> Matrix {
    let mut g = Matrix::identity(sig.n());
    for i in sig.p()..sig.n() {
        g[(i, i)] = -Rational::from_integer(1.into());
    }
    g
}

fn gram(g: &Matrix, basis: &[Vec<Rational>]) -> Matrix {
    let images: Vec<Vec<Rational>> = basis.iter().map(|v| g.mul_vec(v)).collect();
    let mut out = Matrix::zeros(basis.len(), basis.len());
    for (i, u) in basis.iter().enumerate() {
        for (j, gv) in images.iter().enumerate() {
            out[(i, j)] = u
                .iter()
                .zip(gv)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        }
    }
    out
}

/// Accept `inv` iff it squares to the identity and preserves `g`; in that
/// case its eigenspaces give `V0`, `V1` and their signatures.
pub fn validate_involution(inv: &Involution, sig: Signature) -> Result<ValidatedInvolution> {
    let m = inv.matrix();
    let n = sig.n();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            rows: m.rows(),
            cols: m.cols(),
            expected: n,
        });
    }
    if m.mul(m)? != Matrix::identity(n) {
        return Err(Error::NotInvolution);
    }
    let g = metric_matrix(sig);
    if m.transpose().mul(&g)?.mul(m)? != g {
        return Err(Error::NotIsometry);
    }

    let shifted = |s: i64| {
        let mut a = m.clone();
        for i in 0..n {
            a[(i, i)] -= Rational::from_integer(s.into());
        }
        a
    };
    let even_space = shifted(1).null_space();
    let odd_space = shifted(-1).null_space();
    let even_inertia = linalg::inertia(&gram(&g, &even_space))?;
    let odd_inertia = linalg::inertia(&gram(&g, &odd_space))?;

    let orthogonal = even_space.iter().all(|x| {
        let gx = g.mul_vec(x);
        odd_space.iter().all(|y| {
            gx.iter()
                .zip(y)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                .is_zero()
        })
    });

    let diagonal = (0..n).all(|i| (0..n).all(|j| i == j || m[(i, j)].is_zero()));
    let basis_aligned = diagonal.then(|| {
        Blade::from_bits(
            (0..n)
                .filter(|&i| m[(i, i)] < Rational::zero())
                .fold(0u32, |acc, i| acc | (1 << i)),
        )
    });

    Ok(ValidatedInvolution {
        counts: GradingCounts {
            p0: even_inertia.positive,
            q0: even_inertia.negative,
            p1: odd_inertia.positive,
            q1: odd_inertia.negative,
        },
        even_space,
        odd_space,
        orthogonal,
        basis_aligned,
    })
}
