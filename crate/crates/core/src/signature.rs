//! Metric signatures and orthonormal basis blades.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// Largest `p + q` accepted by [`Signature::new`].
pub const DEFAULT_MAX_DIMENSION: usize = 12;

/// Hard limit imposed by the `u32` blade encoding.
pub const ABSOLUTE_MAX_DIMENSION: usize = 32;

/// Signature `(p, q)` of a diagonal metric on `R^{p+q}`.
///
/// Basis vectors `e1..ep` square to `+1`, `e(p+1)..e(p+q)` square to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: usize,
    q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        Self::with_cap(p, q, DEFAULT_MAX_DIMENSION)
    }

    /// Like [`Signature::new`] with a caller-chosen dimension cap.
    pub fn with_cap(p: usize, q: usize, cap: usize) -> Result<Self> {
        let cap = cap.min(ABSOLUTE_MAX_DIMENSION);
        let n = p + q;
        if n > cap {
            return Err(Error::DimensionTooLarge { n, cap });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    /// Number of basis blades, `2^n`.
    pub fn algebra_dimension(&self) -> usize {
        1 << self.n()
    }

    /// Bits of the negative-square basis vectors.
    pub(crate) fn negative_mask(&self) -> u32 {
        mask_below(self.n()) & !mask_below(self.p)
    }

    pub(crate) fn full_mask(&self) -> u32 {
        mask_below(self.n())
    }

    /// `g(e_i, e_i)` for a 1-based index.
    pub fn square(&self, index: usize) -> Result<i8> {
        self.check_index(index)?;
        Ok(if index > self.p { -1 } else { 1 })
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index == 0 || index > self.n() {
            Err(Error::IndexOutOfRange { index, n: self.n() })
        } else {
            Ok(())
        }
    }

    pub fn check_blade(&self, blade: Blade) -> Result<()> {
        if blade.0 & !self.full_mask() != 0 {
            Err(Error::IndexOutOfRange {
                index: 32 - (blade.0 & !self.full_mask()).leading_zeros() as usize,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Every basis blade, in canonical order (grade, then lexicographic).
    pub fn blades(&self) -> Vec<Blade> {
        let mut all: Vec<Blade> = (0..self.algebra_dimension() as u32).map(Blade).collect();
        all.sort();
        all
    }

    /// Basis blades of a single grade, in canonical order.
    pub fn blades_of_grade(&self, grade: usize) -> Vec<Blade> {
        self.blades()
            .into_iter()
            .filter(|b| b.grade() == grade)
            .collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

fn mask_below(bits: usize) -> u32 {
    if bits >= 32 {
        u32::MAX
    } else {
        (1u32 << bits) - 1
    }
}

/// Canonical product of distinct orthonormal basis vectors, stored as a
/// bitmask where bit `i - 1` stands for `e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub const fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The basis vector `e_index` (1-based).
    pub fn vector(index: usize) -> Result<Self> {
        if index == 0 || index > ABSOLUTE_MAX_DIMENSION {
            return Err(Error::IndexOutOfRange {
                index,
                n: ABSOLUTE_MAX_DIMENSION,
            });
        }
        Ok(Blade(1 << (index - 1)))
    }

    /// Blade spanned by the given 1-based indices (treated as a set).
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        indices.into_iter().try_fold(Blade::SCALAR, |acc, i| {
            Ok(Blade(acc.0 | Blade::vector(i)?.0))
        })
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=32).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn is_subset_of(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |i| bits & (1 << i) != 0).map(|i| i + 1)
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn intersection(self, other: Blade) -> Blade {
        Blade(self.0 & other.0)
    }

    pub fn symmetric_difference(self, other: Blade) -> Blade {
        Blade(self.0 ^ other.0)
    }

    pub fn difference(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // lowest differing index belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            return f.write_str("1");
        }
        for (k, i) in self.indices().enumerate() {
            if k > 0 {
                f.write_str("^")?;
            }
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

/// True when moving the factors of `b` past those of `a` in the juxtaposition
/// `a b` takes an odd number of transpositions.
pub(crate) fn reorder_is_odd(a: Blade, b: Blade) -> bool {
    let mut a = a.0 >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b.0).count_ones();
        a >>= 1;
    }
    swaps & 1 == 1
}

/// Product of two basis blades with the metric of `sig`: returns the sign
/// and the canonical blade of the symmetric difference.
pub fn blade_product(a: Blade, b: Blade, sig: Signature) -> Result<(i8, Blade)> {
    sig.check_blade(a)?;
    sig.check_blade(b)?;
    Ok(blade_product_unchecked(a, b, sig))
}

pub(crate) fn blade_product_unchecked(a: Blade, b: Blade, sig: Signature) -> (i8, Blade) {
    let mut negative = reorder_is_odd(a, b);
    if (a.0 & b.0 & sig.negative_mask()).count_ones() & 1 == 1 {
        negative = !negative;
    }
    (if negative { -1 } else { 1 }, a.symmetric_difference(b))
}
