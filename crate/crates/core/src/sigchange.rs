//! Signature change through a grading: the deformed Clifford product `∨_α`
//! realising `Cl(r,s)` on the carrier `V^∧` of `Cl(p,q)`, the alternative
//! product `∨'_α`, and checks that the deformed product really is a Clifford
//! product for the deformed metric.

use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::classify::{
    classify_clifford, expected_invariants, regular_representation, structural_invariants,
    StructuralInvariants, StructureConstants,
};
use crate::grading::Z2Grading;
use crate::laws::random_vector;
use crate::multivector::Multivector;
use crate::rational::{self, Rational};
use crate::signature::Signature;
use crate::{Error, Result};

/// `g_α(u, v) = g(u0, v0) - g(u1, v1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeformedMetric {
    grading: Z2Grading,
}

impl DeformedMetric {
    pub fn new(grading: Z2Grading) -> Self {
        Self { grading }
    }

    pub fn grading(&self) -> &Z2Grading {
        &self.grading
    }

    pub fn eval(&self, u: &Multivector, v: &Multivector) -> Result<Rational> {
        u.require_vector()?;
        v.require_vector()?;
        let (u0, u1) = (self.grading.project_even(u)?, self.grading.project_odd(u)?);
        let (v0, v1) = (self.grading.project_even(v)?, self.grading.project_odd(v)?);
        Ok(u0.metric(&v0)? - u1.metric(&v1)?)
    }

    /// `(r, s)` with `r = p0 + q1`, `s = q0 + p1`.
    pub fn inertia(&self) -> (usize, usize) {
        let c = self.grading.counts();
        (c.p0 + c.q1, c.q0 + c.p1)
    }
}

pub fn deformed_metric(u: &Multivector, v: &Multivector, grading: &Z2Grading) -> Result<Rational> {
    DeformedMetric::new(*grading).eval(u, v)
}

/// Signature of `g_α`, the target of the signature change.
pub fn target_signature(grading: &Z2Grading) -> Signature {
    let (r, s) = DeformedMetric::new(*grading).inertia();
    Signature::with_cap(r, s, crate::signature::ABSOLUTE_MAX_DIMENSION)
        .expect("r + s equals the source dimension")
}

fn check_signature(a: &Multivector, grading: &Z2Grading) -> Result<()> {
    if a.signature() == grading.signature() {
        Ok(())
    } else {
        Err(Error::SignatureMismatch {
            left: a.signature(),
            right: grading.signature(),
        })
    }
}

/// `e_i ∨_α x = e_i ∧ x + α(e_i) ⌟ x` for a basis vector.
fn basis_vector_vee(grading: &Z2Grading, index: usize, x: &Multivector) -> Result<Multivector> {
    let sig = grading.signature();
    let v = Multivector::basis_vector(sig, index)?;
    let alpha_v = grading.alpha(&v)?;
    Ok(v.wedge(x)? + alpha_v.left_contraction(x)?)
}

/// `v ∨_α a` for a 1-vector `v`, straight from the defining formula.
pub fn vector_vee(v: &Multivector, a: &Multivector, grading: &Z2Grading) -> Result<Multivector> {
    check_signature(v, grading)?;
    check_signature(a, grading)?;
    v.require_vector()?;
    Ok(v.wedge(a)? + grading.alpha(v)?.left_contraction(a)?)
}

/// The deformed product, extended from vectors by writing each blade
/// `e_{i1} ... e_{ik}` as a product of its generators and folding
/// `e_{i1} ∨ (e_{i2} ∨ (... ∨ b))`.
pub fn vee_alpha(a: &Multivector, b: &Multivector, grading: &Z2Grading) -> Result<Multivector> {
    check_signature(a, grading)?;
    check_signature(b, grading)?;
    let mut out = Multivector::zero(grading.signature());
    for (blade, coef) in a.terms() {
        let indices: Vec<usize> = blade.indices().collect();
        let mut acc = b.clone();
        for &i in indices.iter().rev() {
            acc = basis_vector_vee(grading, i, &acc)?;
        }
        out += &acc.scale(coef);
    }
    Ok(out)
}

/// `v ∨_α a = v0 a + â v1` in terms of the original geometric product.
pub fn vee_alpha_via_original(
    v: &Multivector,
    a: &Multivector,
    grading: &Z2Grading,
) -> Result<Multivector> {
    check_signature(a, grading)?;
    v.require_vector()?;
    let (v0, v1) = (grading.project_even(v)?, grading.project_odd(v)?);
    Ok(v0.geometric(a)? + a.parity().geometric(&v1)?)
}

/// Tilt to the opposite metric: `b0 a0 + b0 a1 + b1 a0 - b1 a1` with the
/// even/odd grade parts.
pub fn tilt_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    let (a0, a1) = a.even_odd();
    let (b0, b1) = b.even_odd();
    Ok(b0.geometric(&a0)? + b0.geometric(&a1)? + b1.geometric(&a0)? - b1.geometric(&a1)?)
}

/// `a ∨'_α b = Σ_ij (-1)^{ij} b_j a_i` over the α-parity components.
pub fn vee_prime(a: &Multivector, b: &Multivector, grading: &Z2Grading) -> Result<Multivector> {
    check_signature(a, grading)?;
    check_signature(b, grading)?;
    let (a0, a1) = grading.split(a);
    let (b0, b1) = grading.split(b);
    Ok(b0.geometric(&a0)? + b0.geometric(&a1)? + b1.geometric(&a0)? - b1.geometric(&a1)?)
}

/// `Σ_ij (-1)^{ij} ½ (y_i ∨' x_j - x_j ∨' y_i)`, which equals `x ∧ y` for
/// every grading.
pub fn graded_wedge(x: &Multivector, y: &Multivector, grading: &Z2Grading) -> Result<Multivector> {
    x.require_vector()?;
    y.require_vector()?;
    let xs = [grading.project_even(x)?, grading.project_odd(x)?];
    let ys = [grading.project_even(y)?, grading.project_odd(y)?];
    let mut out = Multivector::zero(grading.signature());
    for (i, yi) in ys.iter().enumerate() {
        for (j, xj) in xs.iter().enumerate() {
            let term = vee_prime(yi, xj, grading)? - vee_prime(xj, yi, grading)?;
            if i * j == 1 {
                out -= &term;
            } else {
                out += &term;
            }
        }
    }
    Ok(out.scale(&rational::ratio(1, 2)))
}

/// `½ (x ∨' y - y ∨' x)`.
pub fn naive_wedge(x: &Multivector, y: &Multivector, grading: &Z2Grading) -> Result<Multivector> {
    let diff = vee_prime(x, y, grading)? - vee_prime(y, x, grading)?;
    Ok(diff.scale(&rational::ratio(1, 2)))
}

/// Vectors for which `½ (x ∨' y - y ∨' x)` differs from `x ∧ y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeWitness {
    pub x: Multivector,
    pub y: Multivector,
    pub wedge: Multivector,
    pub naive: Multivector,
}

/// Random vector pairs tried after the basis pairs.
pub const WEDGE_SEARCH_TRIALS: usize = 256;

/// Look for a pair of vectors where the naive antisymmetrisation of `∨'`
/// fails to reproduce the exterior product. Basis pairs are tried first in
/// lexicographic order, then seeded random vectors.
pub fn find_wedge_counterexample(grading: &Z2Grading, seed: u64) -> Result<Option<WedgeWitness>> {
    let sig = grading.signature();
    let n = sig.n();
    let check = |x: Multivector, y: Multivector| -> Result<Option<WedgeWitness>> {
        let wedge = x.wedge(&y)?;
        let naive = naive_wedge(&x, &y, grading)?;
        Ok((wedge != naive).then_some(WedgeWitness { x, y, wedge, naive }))
    };
    for i in 1..=n {
        for j in 1..=n {
            let found = check(
                Multivector::basis_vector(sig, i)?,
                Multivector::basis_vector(sig, j)?,
            )?;
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..WEDGE_SEARCH_TRIALS {
        let x = random_vector(sig, &mut rng);
        let y = random_vector(sig, &mut rng);
        let found = check(x, y)?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn blade_basis(sig: Signature) -> Vec<Multivector> {
    sig.blades()
        .into_iter()
        .map(|b| Multivector::blade(sig, b).expect("blade in range"))
        .collect()
}

/// Structure constants of `(V^∧, ∨_α)` on the blade basis.
pub fn vee_structure(grading: &Z2Grading) -> Result<StructureConstants> {
    regular_representation(&blade_basis(grading.signature()), |a, b| {
        vee_alpha(a, b, grading)
    })
}

/// Structure constants of `(V^∧, ∨'_α)` on the blade basis.
pub fn vee_prime_structure(grading: &Z2Grading) -> Result<StructureConstants> {
    regular_representation(&blade_basis(grading.signature()), |a, b| {
        vee_prime(a, b, grading)
    })
}

/// Blade triples are checked exhaustively up to this dimension.
pub const EXHAUSTIVE_ASSOCIATIVITY_MAX_N: usize = 5;
/// Random blade triples checked above it.
pub const RANDOM_TRIPLES: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordMapReport {
    pub grading: Z2Grading,
    pub target: Signature,
    /// Pairs `(i, j)` with `e_i ∨ e_j + e_j ∨ e_i != 2 g_α(e_i, e_j)`.
    pub relation_violations: Vec<(usize, usize)>,
    pub triples_checked: usize,
    /// First non-associative blade triple, as blade-basis indices.
    pub associativity_violation: Option<(usize, usize, usize)>,
    pub observed: Option<StructuralInvariants>,
    pub expected: StructuralInvariants,
}

impl CliffordMapReport {
    pub fn passed(&self) -> bool {
        self.relation_violations.is_empty()
            && self.associativity_violation.is_none()
            && self.observed == Some(self.expected)
    }
}

/// Check that `Γ_α(v) = v∧ + α(v)⌟` generates a Clifford algebra for `g_α`:
/// generator relations, associativity of `∨_α` on blades, and a fingerprint
/// equal to that of `Cl(r,s)`.
pub fn verify_clifford_map(grading: &Z2Grading, seed: u64) -> Result<CliffordMapReport> {
    let sig = grading.signature();
    let n = sig.n();
    let metric = DeformedMetric::new(*grading);

    let mut relation_violations = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let ei = Multivector::basis_vector(sig, i)?;
            let ej = Multivector::basis_vector(sig, j)?;
            let lhs = vee_alpha(&ei, &ej, grading)? + vee_alpha(&ej, &ei, grading)?;
            let rhs = Multivector::scalar(sig, metric.eval(&ei, &ej)? * rational::int(2));
            if lhs != rhs {
                relation_violations.push((i, j));
            }
        }
    }

    let sc = vee_structure(grading)?;
    let dim = sc.dim();
    let (triples_checked, associativity_violation) = if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX_N {
        let all: Vec<usize> = (0..dim).collect();
        let violation = match sc.check_associativity(&all) {
            Err(Error::NonAssociative(i, j, k)) => Some((i, j, k)),
            Err(e) => return Err(e),
            Ok(()) => None,
        };
        (dim * dim * dim, violation)
    } else {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut violation = None;
        for _ in 0..RANDOM_TRIPLES {
            let t = [
                rng.gen_range(0..dim),
                rng.gen_range(0..dim),
                rng.gen_range(0..dim),
            ];
            if sc.check_associativity_triple(t[0], t[1], t[2]).is_err() {
                violation = Some((t[0], t[1], t[2]));
                break;
            }
        }
        (RANDOM_TRIPLES, violation)
    };

    let target = target_signature(grading);
    let observed = structural_invariants(&sc).ok();
    let expected = expected_invariants(&classify_clifford(target.p(), target.q()));
    Ok(CliffordMapReport {
        grading: *grading,
        target,
        relation_violations,
        triples_checked,
        associativity_violation,
        observed,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::signature::Blade;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn e(s: Signature, ix: &[usize]) -> Multivector {
        Multivector::blade(s, Blade::from_indices(ix.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn deformed_metric_examples() {
        let s = sig(1, 3);
        let (e1, e2) = (e(s, &[1]), e(s, &[2]));
        let trivial = Z2Grading::trivial(s);
        let usual = Z2Grading::usual(s);
        for (u, v) in [(&e1, &e1), (&e2, &e2), (&e1, &e2)] {
            assert_eq!(
                deformed_metric(u, v, &trivial).unwrap(),
                u.metric(v).unwrap()
            );
            assert_eq!(
                deformed_metric(u, v, &usual).unwrap(),
                -u.metric(v).unwrap()
            );
        }
        let g = Z2Grading::from_odd_indices(s, [1]).unwrap();
        assert_eq!(deformed_metric(&e1, &e1, &g).unwrap(), int(-1));
        assert_eq!(deformed_metric(&e2, &e2, &g).unwrap(), int(-1));
        assert!(matches!(
            deformed_metric(&e(s, &[1, 2]), &e1, &g),
            Err(Error::NotAVector { .. })
        ));
    }

    #[test]
    fn target_signature_examples() {
        let s = sig(1, 3);
        assert_eq!(target_signature(&Z2Grading::usual(s)), sig(3, 1));
        let g = Z2Grading::from_odd_indices(s, [2, 3, 4]).unwrap();
        assert_eq!(target_signature(&g), sig(4, 0));
        assert_eq!(target_signature(&Z2Grading::trivial(s)), s);
    }

    #[test]
    fn trivial_grading_keeps_the_product() {
        let s = sig(2, 1);
        let g = Z2Grading::trivial(s);
        for a in s.blades() {
            for b in s.blades() {
                let (a, b) = (
                    Multivector::blade(s, a).unwrap(),
                    Multivector::blade(s, b).unwrap(),
                );
                assert_eq!(vee_alpha(&a, &b, &g).unwrap(), a.geometric(&b).unwrap());
            }
        }
    }

    #[test]
    fn generator_squares_flip_on_odd_vectors() {
        let s = sig(2, 1);
        let usual = Z2Grading::usual(s);
        let e1 = e(s, &[1]);
        assert_eq!(
            vee_alpha(&e1, &e1, &usual).unwrap(),
            -e1.geometric(&e1).unwrap()
        );
        // e1 odd, squares to +1 originally: Cl(2,1) -> Cl(1,2)
        let g = Z2Grading::from_odd_indices(s, [1]).unwrap();
        let squares: Vec<Rational> = (1..=3)
            .map(|i| {
                let v = e(s, &[i]);
                vee_alpha(&v, &v, &g).unwrap().scalar_part()
            })
            .collect();
        assert_eq!(squares, [int(-1), int(1), int(-1)]);
        assert_eq!(target_signature(&g), sig(1, 2));
    }

    #[test]
    fn original_product_route() {
        let s = sig(1, 3);
        let g = Z2Grading::from_odd_indices(s, [2]).unwrap();
        let v0 = e(s, &[1]);
        let a = e(s, &[1, 2, 4]);
        assert_eq!(
            vee_alpha_via_original(&v0, &a, &g).unwrap(),
            v0.geometric(&a).unwrap()
        );
        let v1 = e(s, &[2]);
        assert_eq!(
            vee_alpha_via_original(&v1, &a, &g).unwrap(),
            -a.geometric(&v1).unwrap()
        );
        assert_eq!(
            vee_alpha_via_original(&v1, &a, &g).unwrap(),
            vee_alpha(&v1, &a, &g).unwrap()
        );
        assert!(vee_alpha_via_original(&a, &v1, &g).is_err());
    }

    #[test]
    fn tilt_examples() {
        let s = sig(1, 3);
        let a = e(s, &[1, 2]) + Multivector::one(s);
        let b = e(s, &[3, 4]);
        assert_eq!(tilt_product(&a, &b).unwrap(), b.geometric(&a).unwrap());
        let x = e(s, &[1]) + e(s, &[2]).scale(&int(2));
        let y = e(s, &[3]) - e(s, &[1]);
        assert_eq!(tilt_product(&x, &y).unwrap(), -y.geometric(&x).unwrap());
        assert_eq!(
            tilt_product(&x, &x).unwrap(),
            Multivector::scalar(s, -x.metric(&x).unwrap())
        );
    }

    #[test]
    fn vee_prime_examples() {
        let s = sig(2, 1);
        let g = Z2Grading::from_odd_indices(s, [2, 3]).unwrap();
        let (x, y) = (e(s, &[2]), e(s, &[3]));
        assert_eq!(vee_prime(&x, &y, &g).unwrap(), -y.geometric(&x).unwrap());
        let a = e(s, &[1]);
        let b = e(s, &[1]) + e(s, &[2]) + e(s, &[1, 3]);
        let (b0, b1) = (g.project_even(&b).unwrap(), g.project_odd(&b).unwrap());
        assert_eq!(
            vee_prime(&a, &b, &g).unwrap(),
            b0.geometric(&a).unwrap() + b1.geometric(&a).unwrap()
        );
        let usual = Z2Grading::usual(s);
        let x = e(s, &[1]) + e(s, &[3]);
        let y = e(s, &[2]) - e(s, &[3]).scale(&int(3));
        assert_eq!(naive_wedge(&x, &y, &usual).unwrap(), x.wedge(&y).unwrap());
    }

    #[test]
    fn wedge_witness_search() {
        assert_eq!(
            find_wedge_counterexample(&Z2Grading::usual(sig(1, 3)), 7).unwrap(),
            None
        );
        let g = Z2Grading::from_odd_indices(sig(2, 0), [1]).unwrap();
        let w = find_wedge_counterexample(&g, 7).unwrap().unwrap();
        let s = sig(2, 0);
        assert_eq!((w.x.clone(), w.y.clone()), (e(s, &[1]), e(s, &[2])));
        assert_eq!(w.wedge, e(s, &[1, 2]));
        assert_eq!(w.naive, -e(s, &[1, 2]));
        assert_eq!(graded_wedge(&w.x, &w.y, &g).unwrap(), w.wedge);
    }

    #[test]
    fn clifford_map_examples() {
        let s = sig(1, 3);
        let usual = verify_clifford_map(&Z2Grading::usual(s), 1).unwrap();
        assert!(usual.passed(), "{usual:?}");
        assert_eq!(usual.target, sig(3, 1));
        assert_eq!(
            usual.expected,
            expected_invariants(&"M(4,R)".parse().unwrap())
        );
        let euclid =
            verify_clifford_map(&Z2Grading::from_odd_indices(s, [2, 3, 4]).unwrap(), 1).unwrap();
        assert!(euclid.passed());
        assert_eq!(
            euclid.expected,
            expected_invariants(&"M(2,H)".parse().unwrap())
        );
        let none = verify_clifford_map(&Z2Grading::trivial(s), 1).unwrap();
        assert!(none.passed());
        assert_eq!(
            none.observed,
            Some(expected_invariants(&classify_clifford(1, 3)))
        );
    }

    #[test]
    fn vee_prime_fingerprint_is_computable() {
        let g = Z2Grading::from_odd_indices(sig(1, 1), [1]).unwrap();
        let sc = vee_prime_structure(&g).unwrap();
        let inv = structural_invariants(&sc).unwrap();
        assert_eq!(inv.dim, 4);
        assert!(inv.center_dim >= 1);
    }
}
