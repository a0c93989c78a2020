//! Sweeps of the algebraic laws, exhaustive over basis blades where that is
//! cheap and seeded-random beyond. Each sweep returns a [`LawReport`] that
//! lists every violating input; a correct implementation reports none.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grading::{Dichotomy, Z2Grading};
use crate::linalg::Echelon;
use crate::multivector::Multivector;
use crate::rational::{self, Rational};
use crate::sigchange::{
    graded_wedge, tilt_product, vee_alpha, vee_alpha_via_original, vee_prime, vee_prime_structure,
};
use crate::signature::{Blade, Signature};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: &'static str,
    pub checked: usize,
    pub violations: Vec<String>,
}

impl LawReport {
    fn new(law: &'static str) -> Self {
        Self {
            law,
            checked: 0,
            violations: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations.push(describe());
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn random_rational<R: Rng + ?Sized>(rng: &mut R) -> Rational {
    rational::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

pub fn random_vector<R: Rng + ?Sized>(sig: Signature, rng: &mut R) -> Multivector {
    let coords: Vec<Rational> = (0..sig.n()).map(|_| random_rational(rng)).collect();
    Multivector::vector(sig, &coords).expect("coordinate count matches")
}

pub fn random_blade<R: Rng + ?Sized>(sig: Signature, rng: &mut R) -> Blade {
    Blade::from_bits(rng.gen_range(0..sig.algebra_dimension() as u32))
}

/// Sparse random multivector with up to `max_terms` terms.
pub fn random_multivector<R: Rng + ?Sized>(
    sig: Signature,
    rng: &mut R,
    max_terms: usize,
) -> Multivector {
    let terms = rng.gen_range(1..=max_terms.max(1));
    let mut out = Multivector::zero(sig);
    for _ in 0..terms {
        out.add_term(random_blade(sig, rng), random_rational(rng));
    }
    out
}

fn blades(sig: Signature) -> Vec<Multivector> {
    sig.blades()
        .into_iter()
        .map(|b| Multivector::blade(sig, b).expect("blade in range"))
        .collect()
}

/// Random multivector triples used above the exhaustive range.
pub const RANDOM_TRIALS: usize = 1000;
/// Blade triples are enumerated exhaustively up to this dimension.
pub const EXHAUSTIVE_MAX_N: usize = 4;

/// `e_i e_j + e_j e_i = 2 g_ij`.
pub fn generator_relations(sig: Signature) -> Result<LawReport> {
    let mut report = LawReport::new("generator relations");
    for i in 1..=sig.n() {
        for j in 1..=sig.n() {
            let (ei, ej) = (
                Multivector::basis_vector(sig, i)?,
                Multivector::basis_vector(sig, j)?,
            );
            let lhs = ei.geometric(&ej)? + ej.geometric(&ei)?;
            let g = if i == j {
                i64::from(sig.square(i)?) * 2
            } else {
                0
            };
            let rhs = Multivector::scalar(sig, rational::int(g));
            report.record(lhs == rhs, || format!("e{i} e{j} + e{j} e{i} = {lhs}"));
        }
    }
    Ok(report)
}

/// `(ab)c = a(bc)` under `product`: all blade triples for `n <= 4`,
/// otherwise `trials` random multivector triples.
pub fn associativity<F>(
    sig: Signature,
    seed: u64,
    trials: usize,
    name: &'static str,
    product: F,
) -> Result<LawReport>
where
    F: Fn(&Multivector, &Multivector) -> Result<Multivector>,
{
    let mut report = LawReport::new(name);
    let mut check = |a: &Multivector, b: &Multivector, c: &Multivector| -> Result<()> {
        let left = product(&product(a, b)?, c)?;
        let right = product(a, &product(b, c)?)?;
        report.record(left == right, || format!("({a})({b})({c})"));
        Ok(())
    };
    if sig.n() <= EXHAUSTIVE_MAX_N {
        let all = blades(sig);
        for a in &all {
            for b in &all {
                for c in &all {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let a = random_multivector(sig, &mut rng, 4);
            let b = random_multivector(sig, &mut rng, 4);
            let c = random_multivector(sig, &mut rng, 4);
            check(&a, &b, &c)?;
        }
    }
    Ok(report)
}

/// `v a = v ∧ a + v ⌟ a` for basis and random vectors against every blade.
pub fn decomposition(sig: Signature, seed: u64) -> Result<LawReport> {
    let mut report = LawReport::new("va = v^a + v|a");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vectors: Vec<Multivector> = (1..=sig.n())
        .map(|i| Multivector::basis_vector(sig, i))
        .collect::<Result<_>>()?;
    vectors.extend((0..4).map(|_| random_vector(sig, &mut rng)));
    for v in &vectors {
        for a in blades(sig) {
            let lhs = v.geometric(&a)?;
            let rhs = v.wedge(&a)? + v.left_contraction(&a)?;
            report.record(lhs == rhs, || format!("v = {v}, a = {a}"));
        }
    }
    Ok(report)
}

/// `g(a⌟b, c) = g(b, ã∧c)` and `g(b⌞a, c) = g(b, c∧ã)` over blade triples
/// (exhaustive for `n <= 4`, random beyond).
pub fn contraction_adjointness(sig: Signature, seed: u64, trials: usize) -> Result<LawReport> {
    let mut report = LawReport::new("contraction adjointness");
    let mut check = |a: &Multivector, b: &Multivector, c: &Multivector| -> Result<()> {
        let ra = a.reversion();
        let left_ok = a.left_contraction(b)?.metric(c)? == b.metric(&ra.wedge(c)?)?;
        let right_ok = b.right_contraction(a)?.metric(c)? == b.metric(&c.wedge(&ra)?)?;
        report.record(left_ok && right_ok, || format!("a = {a}, b = {b}, c = {c}"));
        Ok(())
    };
    if sig.n() <= EXHAUSTIVE_MAX_N {
        let all = blades(sig);
        for a in &all {
            for b in &all {
                for c in &all {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let a = random_multivector(sig, &mut rng, 3);
            let b = random_multivector(sig, &mut rng, 3);
            let c = random_multivector(sig, &mut rng, 3);
            check(&a, &b, &c)?;
        }
    }
    Ok(report)
}

/// Parity and reversion: involutive, automorphism and anti-automorphism.
pub fn involution_laws(sig: Signature, seed: u64, trials: usize) -> Result<LawReport> {
    let mut report = LawReport::new("involution laws");
    let mut check = |a: &Multivector, b: &Multivector| -> Result<()> {
        let ab = a.geometric(b)?;
        let ok = a.parity().parity() == *a
            && a.reversion().reversion() == *a
            && ab.reversion() == b.reversion().geometric(&a.reversion())?
            && ab.parity() == a.parity().geometric(&b.parity())?;
        report.record(ok, || format!("a = {a}, b = {b}"));
        Ok(())
    };
    if sig.n() <= EXHAUSTIVE_MAX_N {
        let all = blades(sig);
        for a in &all {
            for b in &all {
                check(a, b)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let a = random_multivector(sig, &mut rng, 4);
            let b = random_multivector(sig, &mut rng, 4);
            check(&a, &b)?;
        }
    }
    Ok(report)
}

/// A `j`-vector times a `k`-vector only has grades `|j-k|, |j-k|+2, ..., j+k`.
pub fn grade_bookkeeping(sig: Signature) -> Result<LawReport> {
    let mut report = LawReport::new("grade bookkeeping");
    let all = blades(sig);
    for a in &all {
        for b in &all {
            let (j, k) = (a.grades()[0], b.grades()[0]);
            let prod = a.geometric(b)?;
            let lo = j.abs_diff(k);
            let ok = prod
                .grades()
                .iter()
                .all(|&g| g >= lo && g <= j + k && (g - lo) % 2 == 0);
            report.record(ok, || format!("{a} * {b} = {prod}"));
        }
    }
    Ok(report)
}

/// The whole core-algebra suite for one signature.
pub fn core_suite(sig: Signature, seed: u64) -> Result<Vec<LawReport>> {
    Ok(alloc::vec![
        generator_relations(sig)?,
        associativity(
            sig,
            seed,
            RANDOM_TRIALS,
            "geometric associativity",
            |a, b| a.geometric(b)
        )?,
        associativity(
            sig,
            seed ^ 1,
            RANDOM_TRIALS,
            "wedge associativity",
            |a, b| a.wedge(b)
        )?,
        decomposition(sig, seed)?,
        contraction_adjointness(sig, seed, RANDOM_TRIALS)?,
        involution_laws(sig, seed, RANDOM_TRIALS)?,
        grade_bookkeeping(sig)?,
    ])
}

/// `α(ab) = α(a)α(b)`, `α² = id`, α preserves each grade, `π0(1) = 1`.
pub fn grading_automorphism(grading: &Z2Grading) -> Result<LawReport> {
    let mut report = LawReport::new("grading automorphism");
    let sig = grading.signature();
    let all = blades(sig);
    for a in &all {
        let alpha_a = grading.alpha(a)?;
        let ok = grading.alpha(&alpha_a)? == *a && alpha_a.grades() == a.grades();
        report.record(ok, || format!("alpha on {a}"));
        for b in &all {
            let ok = grading.alpha(&a.geometric(b)?)? == alpha_a.geometric(&grading.alpha(b)?)?;
            report.record(ok, || format!("alpha({a} {b})"));
        }
    }
    let one = Multivector::one(sig);
    report.record(grading.project_even(&one)? == one, || {
        String::from("pi0(1) != 1")
    });
    Ok(report)
}

/// `dim Cl0` is `2^n` for the trivial grading and `2^(n-1)` otherwise, and
/// left multiplication by an odd basis vector maps `Cl0` onto `Cl1`.
pub fn dimension_dichotomy(grading: &Z2Grading) -> Result<LawReport> {
    let mut report = LawReport::new("dimension dichotomy");
    let sig = grading.signature();
    let dim = grading.even_subalgebra_basis().len();
    let n = sig.n();
    let ok = match grading.dimension_dichotomy() {
        Dichotomy::Trivial => grading.is_trivial() && dim == 1 << n,
        Dichotomy::Half => !grading.is_trivial() && dim == 1 << (n - 1),
    };
    report.record(ok, || {
        format!("odd set {} gives dim Cl0 = {dim}", grading.odd_set())
    });
    if let Some(u) = grading.odd_set().indices().next() {
        let u = Multivector::basis_vector(sig, u)?;
        let mut images: Echelon<Blade> = Echelon::new();
        let mut lands_odd = true;
        for b in grading.even_subalgebra_basis() {
            let img = u.geometric(&Multivector::blade(sig, b)?)?;
            lands_odd &= img.terms().all(|(blade, _)| grading.blade_is_odd(blade));
            images.insert(img.terms().map(|(k, c)| (k, c.clone())).collect());
        }
        let ok = lands_odd && images.rank() == grading.odd_part_basis().len();
        report.record(ok, || format!("x -> {u} x is not a bijection Cl0 -> Cl1"));
    }
    Ok(report)
}

/// `v ∨_α a` by generator folding against `v0 a + â v1`: every basis vector
/// against every blade, then `trials` random (vector, multivector) pairs.
pub fn vector_routes_agree(grading: &Z2Grading, seed: u64, trials: usize) -> Result<LawReport> {
    let mut report = LawReport::new("v vee a = v0 a + a^ v1");
    let sig = grading.signature();
    let mut check = |v: &Multivector, a: &Multivector| -> Result<()> {
        let folded = vee_alpha(v, a, grading)?;
        let direct = vee_alpha_via_original(v, a, grading)?;
        report.record(folded == direct, || format!("v = {v}, a = {a}"));
        Ok(())
    };
    for i in 1..=sig.n() {
        let v = Multivector::basis_vector(sig, i)?;
        for a in blades(sig) {
            check(&v, &a)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let v = random_vector(sig, &mut rng);
        let a = random_multivector(sig, &mut rng, 6);
        check(&v, &a)?;
    }
    Ok(report)
}

/// `∨_α` of the trivial grading is the geometric product on blade pairs.
pub fn trivial_vee_is_geometric(sig: Signature) -> Result<LawReport> {
    let mut report = LawReport::new("trivial grading keeps the product");
    let g = Z2Grading::trivial(sig);
    let all = blades(sig);
    for a in &all {
        for b in &all {
            report.record(vee_alpha(a, b, &g)? == a.geometric(b)?, || {
                format!("{a}, {b}")
            });
        }
    }
    Ok(report)
}

/// `∨_α` of the usual grading is the tilt product on blade pairs.
pub fn usual_vee_is_tilt(sig: Signature) -> Result<LawReport> {
    let mut report = LawReport::new("usual grading is the tilt");
    let g = Z2Grading::usual(sig);
    let all = blades(sig);
    for a in &all {
        for b in &all {
            report.record(vee_alpha(a, b, &g)? == tilt_product(a, b)?, || {
                format!("{a}, {b}")
            });
        }
    }
    Ok(report)
}

/// `α(a ∨_α b) = α(a) ∨_α α(b)` on random pairs.
pub fn alpha_respects_vee(grading: &Z2Grading, seed: u64, trials: usize) -> Result<LawReport> {
    let mut report = LawReport::new("alpha is an automorphism of vee");
    let sig = grading.signature();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let a = random_multivector(sig, &mut rng, 4);
        let b = random_multivector(sig, &mut rng, 4);
        let lhs = grading.alpha(&vee_alpha(&a, &b, grading)?)?;
        let rhs = vee_alpha(&grading.alpha(&a)?, &grading.alpha(&b)?, grading)?;
        report.record(lhs == rhs, || format!("a = {a}, b = {b}"));
    }
    Ok(report)
}

/// `∨'_α` is associative on all blade triples (via its structure constants).
pub fn vee_prime_associativity(grading: &Z2Grading) -> Result<LawReport> {
    let mut report = LawReport::new("vee' associativity");
    let sc = vee_prime_structure(grading)?;
    let dim = sc.dim();
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let ok = match sc.check_associativity_triple(i, j, k) {
                    Ok(()) => true,
                    Err(Error::NonAssociative(..)) => false,
                    Err(e) => return Err(e),
                };
                report.record(ok, || format!("blade triple ({i},{j},{k})"));
            }
        }
    }
    Ok(report)
}

/// `Cl_i ∨' Cl_j ⊆ Cl_{i+j}` on blade pairs.
pub fn vee_prime_closure(grading: &Z2Grading) -> Result<LawReport> {
    let mut report = LawReport::new("vee' grading closure");
    let sig = grading.signature();
    for a in sig.blades() {
        for b in sig.blades() {
            let prod = vee_prime(
                &Multivector::blade(sig, a)?,
                &Multivector::blade(sig, b)?,
                grading,
            )?;
            let parity = grading.blade_is_odd(a) ^ grading.blade_is_odd(b);
            let ok = prod
                .terms()
                .all(|(blade, _)| grading.blade_is_odd(blade) == parity);
            report.record(ok, || format!("{a} vee' {b} = {prod}"));
        }
    }
    Ok(report)
}

/// `x ∧ y = Σ_ij (-1)^{ij} ½(y_i ∨' x_j - x_j ∨' y_i)` on basis pairs and
/// random vector pairs.
pub fn graded_wedge_identity(grading: &Z2Grading, seed: u64, trials: usize) -> Result<LawReport> {
    let mut report = LawReport::new("graded wedge identity");
    let sig = grading.signature();
    let mut check = |x: &Multivector, y: &Multivector| -> Result<()> {
        report.record(graded_wedge(x, y, grading)? == x.wedge(y)?, || {
            format!("x = {x}, y = {y}")
        });
        Ok(())
    };
    for i in 1..=sig.n() {
        for j in 1..=sig.n() {
            check(
                &Multivector::basis_vector(sig, i)?,
                &Multivector::basis_vector(sig, j)?,
            )?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let x = random_vector(sig, &mut rng);
        let y = random_vector(sig, &mut rng);
        check(&x, &y)?;
    }
    Ok(report)
}

/// Every basis-aligned grading of `sig` (all `2^n` odd sets).
pub fn all_gradings(sig: Signature) -> Vec<Z2Grading> {
    (0..sig.algebra_dimension() as u32)
        .map(|bits| Z2Grading::new(sig, Blade::from_bits(bits)).expect("odd set in range"))
        .collect()
}

/// Every signature with `p + q <= max_n`.
pub fn signatures_up_to(max_n: usize) -> Result<Vec<Signature>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in 0..=n {
            out.push(Signature::new(p, n - p)?);
        }
    }
    Ok(out)
}
