//! Reference realisations of `M(m, K)` and their fingerprints.

use crate::linalg::SparseVec;
use crate::rational::Rational;

use super::structure::{structural_invariants, StructuralInvariants, StructureConstants};
use super::tables::{AlgebraClass, DivisionRing, SimpleComponent};

/// Product of two basis units of `K` as `(negative, index)`.
/// Quaternion basis order is `1, i, j, k`.
fn unit_product(ring: DivisionRing, s: usize, t: usize) -> (bool, usize) {
    match ring {
        DivisionRing::Real => (false, 0),
        DivisionRing::Complex => (s == 1 && t == 1, s ^ t),
        DivisionRing::Quaternion => {
            const TABLE: [[(bool, usize); 4]; 4] = [
                [(false, 0), (false, 1), (false, 2), (false, 3)],
                [(false, 1), (true, 0), (false, 3), (true, 2)],
                [(false, 2), (true, 3), (true, 0), (false, 1)],
                [(false, 3), (false, 2), (true, 1), (true, 0)],
            ];
            TABLE[s][t]
        }
    }
}

/// Structure constants of `M(m, K)` on the basis `E_ab ⊗ u_s`, indexed
/// `(a * m + b) * dim K + s`.
pub fn simple_structure(component: SimpleComponent) -> StructureConstants {
    let m = component.m;
    let d = component.ring.real_dimension();
    let split = |x: usize| (x / d / m, (x / d) % m, x % d);
    StructureConstants::from_fn(m * m * d, |x, y| {
        let (a, b, s) = split(x);
        let (c, e, t) = split(y);
        let mut out = SparseVec::new();
        if b == c {
            let (negative, r) = unit_product(component.ring, s, t);
            let one = Rational::from_integer(1.into());
            out.insert((a * m + e) * d + r, if negative { -one } else { one });
        }
        out
    })
}

/// Direct sum of the simple reference realisations of `cls`.
pub fn reference_structure(cls: &AlgebraClass) -> StructureConstants {
    let mut parts = cls.components().iter().map(|&c| simple_structure(c));
    let first = parts
        .next()
        .expect("an algebra class has at least one component");
    parts.fold(first, |acc, next| acc.direct_sum(&next))
}

/// Fingerprint shared by every algebra isomorphic to `cls`.
pub fn expected_invariants(cls: &AlgebraClass) -> StructuralInvariants {
    structural_invariants(&reference_structure(cls))
        .expect("matrix algebras over R, C, H are associative and semisimple")
}
