//! Acceptance criteria, each checked exactly. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clifford_grading::classify::{
    classify_clifford, classify_even_part, expected_invariants, regular_representation,
    structural_invariants, table4::observed_cl0_invariants, verify_table4, AlgebraClass,
    DivisionRing, SimpleComponent, StructuralInvariants, StructureConstants,
};
use clifford_grading::laws::{self, all_gradings, signatures_up_to, LawReport};
use clifford_grading::sigchange::{find_wedge_counterexample, tilt_product, verify_clifford_map};
use clifford_grading::{Error, Multivector, Signature, Z2Grading};
use rayon::prelude::*;

const SEED: u64 = 0x5eed;

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

impl Outcome {
    fn new() -> Self {
        Self {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn laws(&mut self, context: &str, report: &LawReport) {
        for v in report.violations.iter().take(3) {
            self.failures.push(format!("{context} {}: {v}", report.law));
        }
    }
}

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn blade_basis(s: Signature) -> Vec<Multivector> {
    s.blades()
        .into_iter()
        .map(|b| Multivector::blade(s, b).unwrap())
        .collect()
}

fn geometric_structure(s: Signature) -> StructureConstants {
    regular_representation(&blade_basis(s), |a, b| a.geometric(b)).unwrap()
}

fn collect<T: Send + Sync>(items: Vec<T>, f: impl Fn(&T, &mut Outcome) + Sync) -> Outcome {
    let parts: Vec<Outcome> = items
        .par_iter()
        .map(|item| {
            let mut out = Outcome::new();
            f(item, &mut out);
            out
        })
        .collect();
    let mut out = Outcome::new();
    for p in parts {
        out.failures.extend(p.failures);
    }
    out
}

fn criterion_1() -> Outcome {
    let sigs = signatures_up_to(6).unwrap();
    let count = sigs.len();
    let mut out = collect(sigs, |s, out| {
        let observed = structural_invariants(&geometric_structure(*s));
        let cls = classify_clifford(s.p(), s.q());
        let expected = expected_invariants(&cls);
        out.check(observed.as_ref().ok() == Some(&expected), || {
            format!("Cl{s}: observed {observed:?}, expected {cls} [{expected}]")
        });
    });
    out.summary = format!("{count} algebras with p+q <= 6 match their class fingerprint");
    out
}

fn criterion_2() -> Outcome {
    let sigs: Vec<Signature> = signatures_up_to(6)
        .unwrap()
        .into_iter()
        .filter(|s| s.n() > 0)
        .collect();
    let count = sigs.len();
    let mut out = collect(sigs, |s, out| {
        let (p, q) = (s.p(), s.q());
        let even = classify_even_part(p, q).unwrap();
        if p >= 1 {
            let other = classify_clifford(q, p - 1);
            out.check(even == other, || {
                format!("even part of Cl{s} is {even}, Cl({q},{}) is {other}", p - 1)
            });
        }
        if q >= 1 {
            let other = classify_clifford(p, q - 1);
            out.check(even == other, || {
                format!("even part of Cl{s} is {even}, Cl({p},{}) is {other}", q - 1)
            });
        }
        let observed = observed_cl0_invariants(&Z2Grading::usual(*s)).unwrap();
        out.check(observed == expected_invariants(&even), || {
            format!("even part of Cl{s}: observed [{observed}], expected {even}")
        });
    });
    out.summary = format!(
        "{count} even subalgebras agree with the table, the isomorphism chain and the oracle"
    );
    out
}

fn named_instances(report: &clifford_grading::classify::Table4Report, out: &mut Outcome) {
    let named: [(usize, usize, usize, usize, &str); 5] = [
        (1, 3, 1, 1, "M(2,C)"),
        (1, 3, 0, 2, "H (+) H"),
        (3, 0, 0, 0, "H"),
        (3, 0, 2, 0, "M(2,R)"),
        (3, 0, 1, 0, "C (+) C"),
    ];
    for (p, q, p0, q0, want) in named {
        let want: AlgebraClass = want.parse().unwrap();
        let ok = report
            .cell(p, q, p0, q0)
            .is_some_and(|c| c.passed() && c.predicted == want);
        out.check(ok, || {
            format!("named instance ({p},{q},{p0},{q0}) should be {want}")
        });
    }
    let classes_13: std::collections::BTreeSet<String> = report
        .cells
        .iter()
        .filter(|c| (c.p, c.q) == (1, 3) && (c.p0, c.q0) != (1, 3))
        .map(|c| c.predicted.to_string())
        .collect();
    out.check(
        classes_13 == ["H (+) H".to_string(), "M(2,C)".to_string()].into(),
        || format!("nontrivial gradings of Cl(1,3) give {classes_13:?}"),
    );
    let classes_30: std::collections::BTreeSet<String> = report
        .cells
        .iter()
        .filter(|c| (c.p, c.q) == (3, 0) && (c.p0, c.q0) != (3, 0))
        .map(|c| c.predicted.to_string())
        .collect();
    out.check(
        classes_30 == ["C (+) C".to_string(), "H".to_string(), "M(2,R)".to_string()].into(),
        || format!("nontrivial gradings of Cl(3,0) give {classes_30:?}"),
    );
}

/// Division rings of the components, ignoring matrix sizes.
fn shape(cls: &AlgebraClass) -> Vec<DivisionRing> {
    cls.components().iter().map(|c| c.ring).collect()
}

fn criteria_3_and_4() -> (Outcome, Outcome) {
    let report = verify_table4(6).unwrap();
    let mut three = Outcome::new();
    for cell in report.cells.iter().filter(|c| !c.passed()) {
        three
            .failures
            .push(format!("cell {}: {}", cell.key(), cell.detail()));
    }
    named_instances(&report, &mut three);
    three.summary = format!("{} cells with p+q <= 6 match the oracle", report.cells.len());

    let mut four = Outcome::new();
    let mut by_residue: BTreeMap<(usize, usize), (String, Vec<DivisionRing>)> = BTreeMap::new();
    let mut compared = 0;
    for cell in report.cells.iter().filter(|c| (c.p0, c.q0) != (c.p, c.q)) {
        let residue = (
            (cell.p as isize - cell.q as isize).rem_euclid(8) as usize,
            (cell.p0 as isize - cell.q0 as isize).rem_euclid(4) as usize,
        );
        let entry = by_residue
            .entry(residue)
            .or_insert_with(|| (cell.key(), shape(&cell.predicted)));
        compared += 1;
        four.check(entry.1 == shape(&cell.predicted) && cell.passed(), || {
            format!(
                "cell {} differs from cell {} with the same residues",
                cell.key(),
                entry.0
            )
        });
    }
    four.check(by_residue.len() == 32, || {
        format!("only {} residue classes were reached", by_residue.len())
    });
    four.summary = format!(
        "{compared} nontrivial cells fall into 32 residue classes of (p-q mod 8, p0-q0 mod 4)"
    );
    (three, four)
}

fn criterion_5() -> Outcome {
    let gradings: Vec<Z2Grading> = signatures_up_to(6)
        .unwrap()
        .into_iter()
        .flat_map(all_gradings)
        .collect();
    let count = gradings.len();
    let mut out = collect(gradings, |g, out| {
        out.laws(
            &g.signature().to_string(),
            &laws::dimension_dichotomy(g).unwrap(),
        )
    });
    out.summary = format!("{count} gradings with n <= 6 have the expected even dimension");
    out
}

fn criterion_6() -> Outcome {
    let gradings: Vec<Z2Grading> = signatures_up_to(5)
        .unwrap()
        .into_iter()
        .flat_map(all_gradings)
        .collect();
    let count = gradings.len();
    let mut out = collect(gradings, |g, out| {
        let report = verify_clifford_map(g, SEED).unwrap();
        out.check(report.passed(), || {
            format!("{} odd {}: {report:?}", g.signature(), g.odd_set())
        });
    });
    let s = sig(1, 3);
    for (odd, want) in [(&[1usize, 2, 3, 4][..], (3, 1)), (&[2, 3, 4][..], (4, 0))] {
        let g = Z2Grading::from_odd_indices(s, odd.iter().copied()).unwrap();
        let report = verify_clifford_map(&g, SEED).unwrap();
        out.check(
            report.passed() && (report.target.p(), report.target.q()) == want,
            || {
                format!(
                    "(1,3) odd {odd:?} should become {want:?}, got {}",
                    report.target
                )
            },
        );
    }
    // Randomised associativity of the deformed product above the exhaustive range.
    let large: Vec<Z2Grading> = (6..=8)
        .flat_map(|n| [sig(n / 2, n - n / 2), sig(n, 0)])
        .flat_map(|s| {
            [
                Z2Grading::usual(s),
                Z2Grading::canonical(s, s.p() / 2, s.q() / 2).unwrap(),
            ]
        })
        .collect();
    let extra = collect(large, |g, out| {
        let report = laws::associativity(
            g.signature(),
            SEED,
            laws::RANDOM_TRIALS,
            "vee associativity",
            |a, b| clifford_grading::sigchange::vee_alpha(a, b, g),
        )
        .unwrap();
        out.laws(&g.signature().to_string(), &report);
        let s = g.signature();
        let metric = clifford_grading::sigchange::DeformedMetric::new(*g);
        for i in 1..=s.n() {
            for j in 1..=s.n() {
                let ei = Multivector::basis_vector(s, i).unwrap();
                let ej = Multivector::basis_vector(s, j).unwrap();
                let lhs = clifford_grading::sigchange::vee_alpha(&ei, &ej, g).unwrap()
                    + clifford_grading::sigchange::vee_alpha(&ej, &ei, g).unwrap();
                let two_g = metric.eval(&ei, &ej).unwrap()
                    * clifford_grading::Rational::from_integer(2.into());
                out.check(lhs == Multivector::scalar(s, two_g), || {
                    format!("{s}: relation e{i}, e{j}")
                });
            }
        }
    });
    out.failures.extend(extra.failures);
    out.summary =
        format!("{count} gradings with n <= 5 realise Cl(r,s); randomised checks up to n = 8");
    out
}

fn criterion_7() -> Outcome {
    let small: Vec<Z2Grading> = signatures_up_to(5)
        .unwrap()
        .into_iter()
        .flat_map(all_gradings)
        .collect();
    let count = small.len();
    let mut out = collect(small, |g, out| {
        out.laws(
            &g.signature().to_string(),
            &laws::vector_routes_agree(g, SEED, 0).unwrap(),
        )
    });
    let large: Vec<Z2Grading> = (6..=8)
        .flat_map(|n| (0..=n).map(move |p| sig(p, n - p)))
        .flat_map(|s| {
            [
                Z2Grading::usual(s),
                Z2Grading::canonical(s, s.p().div_ceil(2), s.q() / 2).unwrap(),
            ]
        })
        .collect();
    let random = collect(large, |g, out| {
        out.laws(
            &g.signature().to_string(),
            &laws::vector_routes_agree(g, SEED, laws::RANDOM_TRIALS).unwrap(),
        )
    });
    out.failures.extend(random.failures);
    out.summary = format!(
        "both routes agree on every (vector, blade) pair for {count} gradings, and on {} random pairs per grading up to n = 8",
        laws::RANDOM_TRIALS
    );
    out
}

fn criterion_8() -> Outcome {
    let sigs = signatures_up_to(6).unwrap();
    let count = sigs.len();
    let mut out = collect(sigs, |s, out| {
        out.laws(&s.to_string(), &laws::usual_vee_is_tilt(*s).unwrap())
    });
    let s = sig(1, 3);
    let squares: Vec<String> = (1..=4)
        .map(|i| {
            let e = Multivector::basis_vector(s, i).unwrap();
            tilt_product(&e, &e).unwrap().to_string()
        })
        .collect();
    out.check(squares == ["-1", "1", "1", "1"], || {
        format!("tilt squares in (1,3): {squares:?}")
    });
    out.summary = format!("tilt equals the usual-grading product on {count} signatures; (1,3) squares become {squares:?}");
    out
}

fn criterion_9() -> Outcome {
    let gradings: Vec<Z2Grading> = signatures_up_to(4)
        .unwrap()
        .into_iter()
        .flat_map(all_gradings)
        .collect();
    let count = gradings.len();
    let mut out = collect(gradings, |g, out| {
        let context = format!("{} odd {}", g.signature(), g.odd_set());
        out.laws(&context, &laws::vee_prime_associativity(g).unwrap());
        out.laws(&context, &laws::vee_prime_closure(g).unwrap());
        out.laws(&context, &laws::graded_wedge_identity(g, SEED, 32).unwrap());
        if g.is_usual() {
            let witness = find_wedge_counterexample(g, SEED).unwrap();
            out.check(witness.is_none(), || {
                format!("{context}: unexpected witness {witness:?}")
            });
        }
    });
    let mixed = Z2Grading::from_odd_indices(sig(2, 0), [1]).unwrap();
    match find_wedge_counterexample(&mixed, SEED).unwrap() {
        Some(w) => {
            let _ = write!(
                out.summary,
                "{count} gradings pass; witness in (2,0) odd {{1}}: x = {}, y = {}, x^y = {}, naive = {}",
                w.x, w.y, w.wedge, w.naive
            );
        }
        None => out
            .failures
            .push("no witness found for (2,0) odd {1}".into()),
    }
    // Randomised associativity of the primed product above the exhaustive range.
    let large: Vec<Z2Grading> = (5..=8)
        .map(|n| sig(n / 2, n - n / 2))
        .map(|s| Z2Grading::canonical(s, s.p() / 2, s.q()).unwrap())
        .collect();
    let extra = collect(large, |g, out| {
        let report = laws::associativity(
            g.signature(),
            SEED,
            laws::RANDOM_TRIALS,
            "vee' associativity",
            |a, b| clifford_grading::sigchange::vee_prime(a, b, g),
        )
        .unwrap();
        out.laws(&g.signature().to_string(), &report);
    });
    out.failures.extend(extra.failures);
    out
}

fn criterion_10() -> Outcome {
    let sigs = signatures_up_to(8).unwrap();
    let count = sigs.len();
    let mut out = collect(sigs, |s, out| {
        for report in laws::core_suite(*s, SEED).unwrap() {
            out.laws(&s.to_string(), &report);
        }
    });
    out.summary =
        format!("{count} signatures with n <= 8: exhaustive up to n = 4, randomised beyond");
    out
}

/// Fingerprint of `M(m, K)` in closed form.
fn closed_form(c: SimpleComponent) -> StructuralInvariants {
    let m = c.m;
    let (sym, anti) = (m * (m + 1) / 2, m * (m - 1) / 2);
    match c.ring {
        DivisionRing::Real => StructuralInvariants {
            dim: m * m,
            center_dim: 1,
            trace_sig: (sym, anti),
            center_trace_sig: (1, 0),
        },
        DivisionRing::Complex => StructuralInvariants {
            dim: 2 * m * m,
            center_dim: 2,
            trace_sig: (m * m, m * m),
            center_trace_sig: (1, 1),
        },
        DivisionRing::Quaternion => StructuralInvariants {
            dim: 4 * m * m,
            center_dim: 1,
            trace_sig: (2 * m * m - m, 2 * m * m + m),
            center_trace_sig: (1, 0),
        },
    }
}

fn closed_form_class(cls: &AlgebraClass) -> StructuralInvariants {
    cls.components()
        .iter()
        .map(|&c| closed_form(c))
        .reduce(|a, b| StructuralInvariants {
            dim: a.dim + b.dim,
            center_dim: a.center_dim + b.center_dim,
            trace_sig: (a.trace_sig.0 + b.trace_sig.0, a.trace_sig.1 + b.trace_sig.1),
            center_trace_sig: (
                a.center_trace_sig.0 + b.center_trace_sig.0,
                a.center_trace_sig.1 + b.center_trace_sig.1,
            ),
        })
        .unwrap()
}

/// The oracle separates every class that appears in the tables up to real
/// dimension 256, and flags algebras that are not of Clifford type.
fn oracle_sanity() -> Outcome {
    let mut out = Outcome::new();
    let mut classes = std::collections::BTreeSet::new();
    for n in 0..=8 {
        for p in 0..=n {
            classes.insert(classify_clifford(p, n - p));
            if n > 0 {
                classes.insert(classify_even_part(p, n - p).unwrap());
            }
        }
    }
    let mut seen: BTreeMap<StructuralInvariants, AlgebraClass> = BTreeMap::new();
    for cls in &classes {
        let fp = closed_form_class(cls);
        if cls.real_dimension() <= 64 {
            out.check(expected_invariants(cls) == fp, || {
                format!("{cls}: oracle disagrees with closed form")
            });
        }
        if let Some(prev) = seen.insert(fp, cls.clone()) {
            out.failures
                .push(format!("{prev} and {cls} share a fingerprint"));
        }
    }
    // R (+) C and M(3,R) are semisimple but of no Clifford class.
    for odd in ["R (+) C", "M(3,R)"] {
        let cls: AlgebraClass = odd.parse().unwrap();
        let fp = expected_invariants(&cls);
        out.check(!seen.contains_key(&fp), || {
            format!("{odd} collides with a Clifford class")
        });
    }
    // The exterior algebra is not semisimple.
    let s = sig(2, 1);
    let grassmann = regular_representation(&blade_basis(s), |a, b| a.wedge(b)).unwrap();
    out.check(
        matches!(structural_invariants(&grassmann), Err(Error::Degenerate)),
        || "exterior algebra was not rejected".into(),
    );
    out.summary = format!(
        "{} table classes have distinct fingerprints; non-Clifford algebras are flagged",
        classes.len()
    );
    out
}

fn main() -> ExitCode {
    let mut results: Vec<(String, Outcome, std::time::Duration)> = Vec::new();
    let mut run = |label: &str, f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let outcome = f();
        results.push((label.to_string(), outcome, start.elapsed()));
        let (label, outcome, elapsed) = results.last().unwrap();
        report(label, outcome, *elapsed);
    };
    run(
        "criterion 1 (Clifford algebra classification)",
        &criterion_1,
    );
    run("criterion 2 (even part isomorphism)", &criterion_2);
    let start = Instant::now();
    let (three, four) = criteria_3_and_4();
    let elapsed = start.elapsed();
    report("criterion 3 (graded even subalgebras)", &three, elapsed);
    report("criterion 4 (four-fold periodicity)", &four, elapsed);
    let early_failed = !three.failures.is_empty() || !four.failures.is_empty();
    run("criterion 5 (dimension dichotomy)", &criterion_5);
    run("criterion 6 (signature change)", &criterion_6);
    run(
        "criterion 7 (two routes to the vector product)",
        &criterion_7,
    );
    run("criterion 8 (tilt)", &criterion_8);
    run("criterion 9 (primed product)", &criterion_9);
    run("criterion 10 (core laws)", &criterion_10);
    run("oracle sanity", &oracle_sanity);

    let failed = early_failed || results.iter().any(|(_, o, _)| !o.failures.is_empty());
    if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}

fn report(label: &str, outcome: &Outcome, elapsed: std::time::Duration) {
    if outcome.failures.is_empty() {
        println!("{label}: PASS ({:.1?}) {}", elapsed, outcome.summary);
    } else {
        println!(
            "{label}: FAIL ({} violations, {:.1?})",
            outcome.failures.len(),
            elapsed
        );
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
    }
}
