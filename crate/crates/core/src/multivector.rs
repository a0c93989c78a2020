//! Sparse multivectors with exact rational coefficients and the products on
//! `V^∧`: geometric (Clifford), exterior, left/right contraction, together
//! with the grade involutions and the determinant extension of the metric.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::rational::{self, Rational};
use crate::signature::{blade_product_unchecked, Blade, Signature};
use crate::{Error, Result};

/// An element of `V^∧` over a fixed signature.
///
/// Terms are kept sorted by canonical blade order and zero coefficients are
/// never stored, so structural equality is value equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    sig: Signature,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, rational::one())
    }

    pub fn scalar(sig: Signature, value: Rational) -> Self {
        let mut mv = Self::zero(sig);
        mv.add_term(Blade::SCALAR, value);
        mv
    }

    pub fn blade(sig: Signature, blade: Blade) -> Result<Self> {
        sig.check_blade(blade)?;
        let mut mv = Self::zero(sig);
        mv.add_term(blade, rational::one());
        Ok(mv)
    }

    /// The basis vector `e_index` (1-based).
    pub fn basis_vector(sig: Signature, index: usize) -> Result<Self> {
        sig.check_index(index)?;
        Self::blade(sig, Blade::vector(index)?)
    }

    /// 1-vector with the given coordinates on `e1..en`.
    pub fn vector(sig: Signature, coords: &[Rational]) -> Result<Self> {
        if coords.len() != sig.n() {
            return Err(Error::DimensionMismatch {
                rows: coords.len(),
                cols: 1,
                expected: sig.n(),
            });
        }
        let mut mv = Self::zero(sig);
        for (i, c) in coords.iter().enumerate() {
            mv.add_term(Blade::from_bits(1 << i), c.clone());
        }
        Ok(mv)
    }

    pub fn from_terms<I>(sig: Signature, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        let mut mv = Self::zero(sig);
        for (b, c) in terms {
            sig.check_blade(b)?;
            mv.add_term(b, c);
        }
        Ok(mv)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, blade: Blade) -> Rational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scalar_part(&self) -> Rational {
        self.coefficient(Blade::SCALAR)
    }

    /// Grades carrying a nonzero term, ascending.
    pub fn grades(&self) -> Vec<usize> {
        let mut grades: Vec<usize> = self.terms.keys().map(|b| b.grade()).collect();
        grades.dedup();
        grades
    }

    /// True for zero and for pure 1-vectors.
    pub fn is_vector(&self) -> bool {
        self.terms.keys().all(|b| b.grade() == 1)
    }

    pub(crate) fn add_term(&mut self, blade: Blade, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(blade) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn add_signed(&mut self, blade: Blade, coef: &Rational, negative: bool) {
        if negative {
            self.add_term(blade, -coef.clone());
        } else {
            self.add_term(blade, coef.clone());
        }
    }

    fn same_signature(&self, other: &Self) -> Result<()> {
        if self.sig == other.sig {
            Ok(())
        } else {
            Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            })
        }
    }

    pub(crate) fn require_vector(&self) -> Result<()> {
        if self.is_vector() {
            Ok(())
        } else {
            let grades: Vec<String> = self
                .grades()
                .iter()
                .map(|g| alloc::format!("{g}"))
                .collect();
            Err(Error::NotAVector {
                grades: grades.join(","),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_signature(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_signature(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, -c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        let mut out = Self::zero(self.sig);
        if factor.is_zero() {
            return out;
        }
        for (b, c) in self.terms() {
            out.terms.insert(b, c * factor);
        }
        out
    }

    /// Multiply each term by `f(blade)` (a per-blade sign).
    pub(crate) fn map_signs(&self, negate: impl Fn(Blade) -> bool) -> Self {
        let mut out = Self::zero(self.sig);
        for (b, c) in self.terms() {
            out.terms
                .insert(b, if negate(b) { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Bilinear extension of a blade-level product that yields at most one
    /// signed blade.
    pub(crate) fn blade_bilinear(
        &self,
        other: &Self,
        f: impl Fn(Blade, Blade) -> Option<(bool, Blade)>,
    ) -> Result<Self> {
        self.same_signature(other)?;
        let mut out = Self::zero(self.sig);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                if let Some((negative, blade)) = f(a, b) {
                    out.add_signed(blade, &(ca * cb), negative);
                }
            }
        }
        Ok(out)
    }

    /// Bilinear extension of an arbitrary blade-level product.
    pub fn bilinear_with(
        &self,
        other: &Self,
        mut f: impl FnMut(Blade, Blade) -> Result<Multivector>,
    ) -> Result<Self> {
        self.same_signature(other)?;
        let mut out = Self::zero(self.sig);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let coef = ca * cb;
                for (blade, c) in f(a, b)?.terms() {
                    out.add_term(blade, c * &coef);
                }
            }
        }
        Ok(out)
    }

    /// Clifford product.
    pub fn geometric(&self, other: &Self) -> Result<Self> {
        let sig = self.sig;
        self.blade_bilinear(other, |a, b| {
            let (sign, blade) = blade_product_unchecked(a, b, sig);
            Some((sign < 0, blade))
        })
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.blade_bilinear(other, |a, b| {
            if a.bits() & b.bits() != 0 {
                None
            } else {
                Some((crate::signature::reorder_is_odd(a, b), a.union(b)))
            }
        })
    }

    /// Left contraction `self ⌟ other`, adjoint to `c ↦ reversion(self) ∧ c`
    /// under the extended metric.
    pub fn left_contraction(&self, other: &Self) -> Result<Self> {
        let sig = self.sig;
        self.blade_bilinear(other, |a, b| {
            if !a.is_subset_of(b) {
                return None;
            }
            let (sign, blade) = blade_product_unchecked(a, b, sig);
            Some((sign < 0, blade))
        })
    }

    /// Right contraction `self ⌞ other`.
    pub fn right_contraction(&self, other: &Self) -> Result<Self> {
        let sig = self.sig;
        self.blade_bilinear(other, |b, a| {
            if !a.is_subset_of(b) {
                return None;
            }
            let (sign, blade) = blade_product_unchecked(b, a, sig);
            Some((sign < 0, blade))
        })
    }

    /// `⟨self⟩_k`; any `k` outside `0..=n` gives zero.
    pub fn grade(&self, k: usize) -> Self {
        let mut out = Self::zero(self.sig);
        for (b, c) in self.terms() {
            if b.grade() == k {
                out.terms.insert(b, c.clone());
            }
        }
        out
    }

    /// Parts of even and odd grade.
    pub fn even_odd(&self) -> (Self, Self) {
        let mut even = Self::zero(self.sig);
        let mut odd = Self::zero(self.sig);
        for (b, c) in self.terms() {
            let target = if b.grade() % 2 == 0 {
                &mut even
            } else {
                &mut odd
            };
            target.terms.insert(b, c.clone());
        }
        (even, odd)
    }

    /// Grade involution: `(-1)^k` on grade `k`.
    pub fn parity(&self) -> Self {
        self.map_signs(|b| b.grade() % 2 == 1)
    }

    /// Reversion: `(-1)^{floor(k/2)}` on grade `k`.
    pub fn reversion(&self) -> Self {
        self.map_signs(|b| (b.grade() / 2) % 2 == 1)
    }

    /// Determinant extension of `g` to `V^∧`; different grades are orthogonal.
    pub fn metric(&self, other: &Self) -> Result<Rational> {
        self.same_signature(other)?;
        let neg = self.sig.negative_mask();
        let mut acc = Rational::zero();
        for (b, ca) in self.terms() {
            if let Some(cb) = other.terms.get(&b) {
                let prod = ca * cb;
                if (b.bits() & neg).count_ones() % 2 == 1 {
                    acc -= prod;
                } else {
                    acc += prod;
                }
            }
        }
        Ok(acc)
    }
}

impl Add for &Multivector {
    type Output = Multivector;

    /// # Panics
    /// If the signatures differ; use [`Multivector::checked_add`] otherwise.
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs).expect("signature mismatch in +")
    }
}

impl Add for Multivector {
    type Output = Multivector;

    fn add(mut self, rhs: Multivector) -> Multivector {
        self += &rhs;
        self
    }
}

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in +=");
        for (b, c) in rhs.terms() {
            self.add_term(b, c.clone());
        }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs).expect("signature mismatch in -")
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(mut self, rhs: Multivector) -> Multivector {
        self -= &rhs;
        self
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch in -=");
        for (b, c) in rhs.terms() {
            self.add_term(b, -c.clone());
        }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.map_signs(|_| true)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul<&Rational> for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Rational) -> Multivector {
        self.scale(rhs)
    }
}

impl Multivector {
    /// True when `self` is a nonzero multiple of the unit scalar.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| b.is_scalar())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.scalar_part().is_one()
    }
}
