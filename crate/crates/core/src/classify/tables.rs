//! Closed-form classification tables and the tensor-product normal form.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// `R`, `C` or `H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DivisionRing {
    Real,
    Complex,
    Quaternion,
}

impl DivisionRing {
    pub fn real_dimension(self) -> usize {
        match self {
            DivisionRing::Real => 1,
            DivisionRing::Complex => 2,
            DivisionRing::Quaternion => 4,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            DivisionRing::Real => "R",
            DivisionRing::Complex => "C",
            DivisionRing::Quaternion => "H",
        }
    }

    pub fn from_symbol(symbol: &str) -> Option<Self> {
        match symbol {
            "R" => Some(DivisionRing::Real),
            "C" => Some(DivisionRing::Complex),
            "H" => Some(DivisionRing::Quaternion),
            _ => None,
        }
    }
}

/// The simple algebra `M(m, K)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleComponent {
    pub m: usize,
    pub ring: DivisionRing,
}

impl SimpleComponent {
    pub fn new(m: usize, ring: DivisionRing) -> Self {
        assert!(m >= 1, "matrix size must be positive");
        Self { m, ring }
    }

    pub fn real_dimension(&self) -> usize {
        self.m * self.m * self.ring.real_dimension()
    }
}

impl fmt::Display for SimpleComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            f.write_str(self.ring.symbol())
        } else {
            write!(f, "M({},{})", self.m, self.ring.symbol())
        }
    }
}

/// Isomorphism class of a semisimple real algebra: a multiset of simple
/// components, kept sorted so that equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraClass {
    components: Vec<SimpleComponent>,
}

impl AlgebraClass {
    pub fn new(mut components: Vec<SimpleComponent>) -> Self {
        components.sort_by_key(|c| (c.ring, c.m));
        Self { components }
    }

    pub fn simple(m: usize, ring: DivisionRing) -> Self {
        Self::new(vec![SimpleComponent::new(m, ring)])
    }

    pub fn components(&self) -> &[SimpleComponent] {
        &self.components
    }

    pub fn real_dimension(&self) -> usize {
        self.components
            .iter()
            .map(SimpleComponent::real_dimension)
            .sum()
    }

    /// Direct sum.
    pub fn sum(&self, other: &AlgebraClass) -> AlgebraClass {
        let mut components = self.components.clone();
        components.extend_from_slice(&other.components);
        Self::new(components)
    }

    /// `M(k, R) ⊗ self`.
    pub fn with_matrix_factor(&self, k: usize) -> AlgebraClass {
        Self::new(
            self.components
                .iter()
                .map(|c| SimpleComponent::new(c.m * k, c.ring))
                .collect(),
        )
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" (+) ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraClass {
    type Err = Error;

    /// Accepts the canonical form, e.g. `M(2,H)`, `C (+) C`, `R`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::UnknownClass(text.to_string());
        let mut components = Vec::new();
        for part in text.split("(+)") {
            let part: String = part.chars().filter(|c| !c.is_whitespace()).collect();
            let component =
                if let Some(inner) = part.strip_prefix("M(").and_then(|s| s.strip_suffix(')')) {
                    let (m, ring) = inner.split_once(',').ok_or_else(bad)?;
                    let m: usize = m.parse().map_err(|_| bad())?;
                    if m == 0 {
                        return Err(bad());
                    }
                    SimpleComponent::new(m, DivisionRing::from_symbol(ring).ok_or_else(bad)?)
                } else {
                    SimpleComponent::new(1, DivisionRing::from_symbol(&part).ok_or_else(bad)?)
                };
            components.push(component);
        }
        Ok(Self::new(components))
    }
}

use DivisionRing::{Complex as C, Quaternion as H, Real as R};

/// `A` in `Cl(p,q) = M(m,R) ⊗ A`, indexed by `(p - q) mod 8`.
const CLIFFORD_TABLE: [&[DivisionRing]; 8] = [&[R], &[R, R], &[R], &[C], &[H], &[H, H], &[H], &[C]];

/// `B` in `Cl+(p,q) = M(m,R) ⊗ B`, indexed by `(p - q) mod 8`.
const EVEN_TABLE: [&[DivisionRing]; 8] = [&[R, R], &[R], &[C], &[H], &[H, H], &[H], &[C], &[R]];

/// `D` in `Cl0 = M(k,R) ⊗ D`; rows `(p0 - q0) mod 4`, columns `(p - q) mod 8`.
const CL0_TABLE: [[&[DivisionRing]; 8]; 4] = [
    [&[R, R], &[R], &[C], &[H], &[H, H], &[H], &[C], &[R]],
    [
        &[R, R],
        &[R, R, R, R],
        &[R, R],
        &[C, C],
        &[H, H],
        &[H, H, H, H],
        &[H, H],
        &[C, C],
    ],
    [&[C], &[R], &[R, R], &[R], &[C], &[H], &[H, H], &[H]],
    [&[C], &[C, C], &[C], &[C, C], &[C], &[C, C], &[C], &[C, C]],
];

fn residue(a: usize, b: usize, modulus: i64) -> usize {
    (a as i64 - b as i64).rem_euclid(modulus) as usize
}

/// `M(m,R) ⊗ (K1 ⊕ K2 ⊕ ...)` with `m` fixed by the total real dimension.
fn matrix_over(rings: &[DivisionRing], total_dimension: usize) -> AlgebraClass {
    let base: usize = rings.iter().map(|r| r.real_dimension()).sum();
    assert_eq!(
        total_dimension % base,
        0,
        "table entry does not divide the dimension"
    );
    let m_squared = total_dimension / base;
    let m = num_integer::Roots::sqrt(&m_squared);
    assert_eq!(m * m, m_squared, "matrix size is not an integer");
    AlgebraClass::new(rings.iter().map(|&r| SimpleComponent::new(m, r)).collect())
}

/// `Cl(p,q)` from the 8-fold periodicity table.
pub fn classify_clifford(p: usize, q: usize) -> AlgebraClass {
    matrix_over(CLIFFORD_TABLE[residue(p, q, 8)], 1 << (p + q))
}

/// The usual even subalgebra `Cl+(p,q)`, defined for `p + q >= 1`.
pub fn classify_even_part(p: usize, q: usize) -> Result<AlgebraClass> {
    if p + q == 0 {
        return Err(Error::InvalidRange(
            "the even part needs p + q >= 1".to_string(),
        ));
    }
    Ok(matrix_over(EVEN_TABLE[residue(p, q, 8)], 1 << (p + q - 1)))
}

/// `Cl_n(C)` as a complex algebra: `M(2^k, C)` or two copies of it.
pub fn classify_complex(n: usize) -> AlgebraClass {
    let m = 1 << (n / 2);
    let one = SimpleComponent::new(m, C);
    if n % 2 == 0 {
        AlgebraClass::new(vec![one])
    } else {
        AlgebraClass::new(vec![one, one])
    }
}

/// `(M(k, R) ⊗ K) ⊗ (M(l, R) ⊗ K')` for the three division rings.
fn tensor_simple(a: SimpleComponent, b: SimpleComponent) -> Vec<SimpleComponent> {
    let m = a.m * b.m;
    match (a.ring, b.ring) {
        (R, ring) | (ring, R) => vec![SimpleComponent::new(m, ring)],
        (C, C) => vec![SimpleComponent::new(m, C), SimpleComponent::new(m, C)],
        (C, H) | (H, C) => vec![SimpleComponent::new(2 * m, C)],
        (H, H) => vec![SimpleComponent::new(4 * m, R)],
    }
}

/// Normal form of `x ⊗ y`: distribute over direct sums and rewrite each
/// product of division rings.
pub fn tensor_simplify(x: &AlgebraClass, y: &AlgebraClass) -> AlgebraClass {
    let mut out = Vec::new();
    for &a in x.components() {
        for &b in y.components() {
            out.extend(tensor_simple(a, b));
        }
    }
    AlgebraClass::new(out)
}

/// `Cl0 ≅ Cl(p0,q0) ⊗ Cl+(p-p0, q-q0)`, where the even part of the zero
/// dimensional algebra is `R`.
pub fn classify_cl0(p: usize, q: usize, p0: usize, q0: usize) -> Result<AlgebraClass> {
    if p0 > p || q0 > q {
        return Err(Error::InvalidRange(alloc::format!(
            "(p0,q0) = ({p0},{q0}) outside (0..={p}, 0..={q})"
        )));
    }
    let even = if p0 == p && q0 == q {
        AlgebraClass::simple(1, R)
    } else {
        classify_even_part(p - p0, q - q0)?
    };
    Ok(tensor_simplify(&classify_clifford(p0, q0), &even))
}

/// Direct lookup in the 4x8 table of even subalgebras. The table covers
/// nontrivial gradings only, so `(p0,q0) = (p,q)` yields `None`.
pub fn table4_lookup(p: usize, q: usize, p0: usize, q0: usize) -> Result<Option<AlgebraClass>> {
    if p0 > p || q0 > q {
        return Err(Error::InvalidRange(alloc::format!(
            "(p0,q0) = ({p0},{q0}) outside (0..={p}, 0..={q})"
        )));
    }
    if p0 == p && q0 == q {
        return Ok(None);
    }
    let entry = CL0_TABLE[residue(p0, q0, 4)][residue(p, q, 8)];
    Ok(Some(matrix_over(entry, 1 << (p + q - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(text: &str) -> AlgebraClass {
        text.parse().unwrap()
    }

    #[test]
    fn clifford_examples() {
        assert_eq!(classify_clifford(1, 3), cls("M(2,H)"));
        assert_eq!(classify_clifford(3, 0), cls("M(2,C)"));
        assert_eq!(classify_clifford(2, 0), cls("M(2,R)"));
        assert_eq!(classify_clifford(0, 0), cls("R"));
        assert_eq!(classify_clifford(0, 1), cls("C"));
        assert_eq!(classify_clifford(0, 2), cls("H"));
        assert_eq!(classify_clifford(1, 0), cls("R (+) R"));
    }

    #[test]
    fn even_part_examples() {
        assert_eq!(classify_even_part(1, 3).unwrap(), cls("M(2,C)"));
        assert_eq!(classify_even_part(2, 0).unwrap(), cls("C"));
        assert_eq!(classify_even_part(1, 0).unwrap(), cls("R"));
        assert!(classify_even_part(0, 0).is_err());
    }

    #[test]
    fn complex_examples() {
        assert_eq!(classify_complex(2), cls("M(2,C)"));
        assert_eq!(classify_complex(3), cls("M(2,C) (+) M(2,C)"));
        assert_eq!(classify_complex(0), cls("C"));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor_simplify(&cls("C"), &cls("C")), cls("C (+) C"));
        assert_eq!(tensor_simplify(&cls("H"), &cls("H")), cls("M(4,R)"));
        assert_eq!(tensor_simplify(&cls("C"), &cls("H")), cls("M(2,C)"));
        assert_eq!(tensor_simplify(&cls("R (+) R"), &cls("H")), cls("H (+) H"));
        assert_eq!(
            tensor_simplify(&cls("M(2,R)"), &cls("M(3,C)")),
            cls("M(6,C)")
        );
    }

    #[test]
    fn cl0_examples() {
        assert_eq!(classify_cl0(3, 0, 2, 0).unwrap(), cls("M(2,R)"));
        assert_eq!(classify_cl0(1, 3, 0, 3).unwrap(), cls("H (+) H"));
        assert_eq!(classify_cl0(3, 0, 0, 0).unwrap(), cls("H"));
        assert_eq!(classify_cl0(3, 0, 1, 0).unwrap(), cls("C (+) C"));
        assert_eq!(classify_cl0(1, 3, 1, 3).unwrap(), classify_clifford(1, 3));
        assert!(classify_cl0(1, 3, 2, 0).is_err());
    }

    #[test]
    fn usual_grading_reduces_to_even_part() {
        for n in 1..=6 {
            for p in 0..=n {
                let q = n - p;
                assert_eq!(
                    classify_cl0(p, q, 0, 0).unwrap(),
                    classify_even_part(p, q).unwrap()
                );
            }
        }
    }

    #[test]
    fn table_and_tensor_route_agree() {
        for n in 1..=8 {
            for p in 0..=n {
                let q = n - p;
                for p0 in 0..=p {
                    for q0 in 0..=q {
                        if let Some(entry) = table4_lookup(p, q, p0, q0).unwrap() {
                            assert_eq!(
                                entry,
                                classify_cl0(p, q, p0, q0).unwrap(),
                                "({p},{q},{p0},{q0})"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn even_part_chain() {
        for n in 1..=8 {
            for p in 0..=n {
                let q = n - p;
                let even = classify_even_part(p, q).unwrap();
                if p >= 1 {
                    assert_eq!(even, classify_clifford(q, p - 1));
                }
                if q >= 1 {
                    assert_eq!(even, classify_clifford(p, q - 1));
                }
                assert_eq!(even, classify_even_part(q, p).unwrap());
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let c = AlgebraClass::new(vec![SimpleComponent::new(1, C), SimpleComponent::new(1, C)]);
        assert_eq!(c.to_string(), "C (+) C");
        assert_eq!(classify_clifford(3, 1).to_string(), "M(4,R)");
        assert!("M(0,R)".parse::<AlgebraClass>().is_err());
        assert!("Q".parse::<AlgebraClass>().is_err());
        assert_eq!(cls("M(2,H)").real_dimension(), 16);
    }
}
