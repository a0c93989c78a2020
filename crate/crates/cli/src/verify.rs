use std::fmt::Write as _;
use std::time::Instant;

use clifford_grading::classify::table4::{table4_cell, table4_keys};
use clifford_grading::laws::{self, all_gradings, signatures_up_to, LawReport};
use clifford_grading::sigchange::{
    find_wedge_counterexample, tilt_product, vee_prime, verify_clifford_map,
};
use clifford_grading::{Multivector, Signature, Z2Grading};
use rayon::prelude::*;

use crate::args::{Suite, VerifyArgs, MAX_N_CAP};
use crate::commands::index_list;
use crate::json::{Cell, Report};
use crate::{CliError, Outcome};

/// Every grading is swept up to this dimension; above it one grading per
/// `(p0, q0)` stands for its permutation class.
const ALL_GRADINGS_MAX_N: usize = 5;

fn grading_key(g: &Z2Grading) -> String {
    let s = g.signature();
    format!("{},{} odd={}", s.p(), s.q(), index_list(g.odd_set()))
}

fn sweep_gradings(max_n: usize) -> Result<Vec<Z2Grading>, CliError> {
    let mut out = Vec::new();
    for sig in signatures_up_to(max_n)? {
        if sig.n() <= ALL_GRADINGS_MAX_N {
            out.extend(all_gradings(sig));
        } else {
            for p0 in 0..=sig.p() {
                for q0 in 0..=sig.q() {
                    out.push(Z2Grading::canonical(sig, p0, q0)?);
                }
            }
        }
    }
    Ok(out)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, String) {
    let start = Instant::now();
    let value = f();
    (value, format!("{:.1?}", start.elapsed()))
}

fn law_cell(
    key: String,
    reports: clifford_grading::Result<Vec<LawReport>>,
    extra: Option<(bool, String)>,
    time: String,
) -> Cell {
    let reports = match reports {
        Ok(r) => r,
        Err(e) => {
            return Cell {
                key,
                pass: false,
                detail: format!("error: {e} ({time})"),
            }
        }
    };
    let mut pass = reports.iter().all(LawReport::passed);
    let mut detail = reports
        .iter()
        .map(|r| format!("{} {}/{}", r.law, r.checked - r.violations.len(), r.checked))
        .collect::<Vec<_>>()
        .join("; ");
    if let Some(first) = reports.iter().flat_map(|r| r.violations.first()).next() {
        let _ = write!(detail, "; first violation: {first}");
    }
    if let Some((ok, note)) = extra {
        pass &= ok;
        let _ = write!(detail, "; {note}");
    }
    let _ = write!(detail, " ({time})");
    Cell { key, pass, detail }
}

fn table4(max_n: usize) -> Vec<Cell> {
    table4_keys(max_n)
        .into_par_iter()
        .map(|(p, q, p0, q0)| {
            let (cell, time) = timed(|| table4_cell(p, q, p0, q0));
            let key = format!("{p},{q},{p0},{q0}");
            match cell {
                Ok(c) => Cell {
                    key,
                    pass: c.passed(),
                    detail: format!("{} ({time})", c.detail()),
                },
                Err(e) => Cell {
                    key,
                    pass: false,
                    detail: format!("error: {e} ({time})"),
                },
            }
        })
        .collect()
}

fn sigchange(gradings: &[Z2Grading], seed: u64) -> Vec<Cell> {
    gradings
        .par_iter()
        .map(|g| {
            let (report, time) = timed(|| verify_clifford_map(g, seed));
            let key = grading_key(g);
            match report {
                Ok(r) => {
                    let observed = r.observed.map_or("degenerate".to_string(), |o| o.to_string());
                    Cell {
                        key,
                        pass: r.passed(),
                        detail: format!(
                            "target {}; relation violations {}; {} triples, associative {}; observed [{}] expected [{}] ({time})",
                            r.target,
                            r.relation_violations.len(),
                            r.triples_checked,
                            r.associativity_violation.is_none(),
                            observed,
                            r.expected
                        ),
                    }
                }
                Err(e) => Cell { key, pass: false, detail: format!("error: {e} ({time})") },
            }
        })
        .collect()
}

fn core(sigs: &[Signature], seed: u64) -> Vec<Cell> {
    sigs.par_iter()
        .map(|s| {
            let (reports, time) = timed(|| laws::core_suite(*s, seed));
            law_cell(format!("{},{}", s.p(), s.q()), reports, None, time)
        })
        .collect()
}

fn veeprime(gradings: &[Z2Grading], seed: u64) -> Vec<Cell> {
    let mut cells: Vec<Cell> = gradings
        .par_iter()
        .map(|g| {
            let (result, time) = timed(|| {
                let sig = g.signature();
                let assoc = if sig.n() <= laws::EXHAUSTIVE_MAX_N {
                    laws::vee_prime_associativity(g)?
                } else {
                    laws::associativity(
                        sig,
                        seed,
                        laws::RANDOM_TRIALS,
                        "vee' associativity",
                        |a, b| vee_prime(a, b, g),
                    )?
                };
                let reports = vec![
                    assoc,
                    laws::vee_prime_closure(g)?,
                    laws::graded_wedge_identity(g, seed, 32)?,
                ];
                let extra = if g.is_usual() {
                    let witness = find_wedge_counterexample(g, seed)?;
                    Some((
                        witness.is_none(),
                        format!("naive antisymmetrisation holds: {}", witness.is_none()),
                    ))
                } else {
                    None
                };
                Ok((reports, extra))
            });
            match result {
                Ok((reports, extra)) => law_cell(grading_key(g), Ok(reports), extra, time),
                Err(e) => law_cell(grading_key(g), Err(e), None, time),
            }
        })
        .collect();
    if let Ok(sig) = Signature::new(2, 0) {
        let mixed = Z2Grading::from_odd_indices(sig, [1]).expect("e1 exists in (2,0)");
        let (witness, time) = timed(|| find_wedge_counterexample(&mixed, seed));
        let (pass, detail) = match witness {
            Ok(Some(w)) => (
                true,
                format!(
                    "x = {}, y = {}: x^y = {}, naive = {} ({time})",
                    w.x, w.y, w.wedge, w.naive
                ),
            ),
            Ok(None) => (false, format!("no counterexample found ({time})")),
            Err(e) => (false, format!("error: {e} ({time})")),
        };
        cells.push(Cell {
            key: format!("witness {}", grading_key(&mixed)),
            pass,
            detail,
        });
    }
    cells
}

fn routes(gradings: &[Z2Grading], seed: u64) -> Vec<Cell> {
    gradings
        .par_iter()
        .map(|g| {
            let trials = if g.signature().n() > ALL_GRADINGS_MAX_N {
                laws::RANDOM_TRIALS
            } else {
                0
            };
            let (report, time) =
                timed(|| laws::vector_routes_agree(g, seed, trials).map(|r| vec![r]));
            law_cell(grading_key(g), report, None, time)
        })
        .collect()
}

fn tilt(sigs: &[Signature]) -> Vec<Cell> {
    sigs.par_iter()
        .map(|s| {
            let (result, time) = timed(|| -> clifford_grading::Result<_> {
                let reports = vec![
                    laws::usual_vee_is_tilt(*s)?,
                    laws::trivial_vee_is_geometric(*s)?,
                ];
                let mut flipped = true;
                for i in 1..=s.n() {
                    let e = Multivector::basis_vector(*s, i)?;
                    let square = tilt_product(&e, &e)?;
                    flipped &= square == -e.geometric(&e)?;
                }
                Ok((reports, flipped))
            });
            let key = format!("{},{}", s.p(), s.q());
            match result {
                Ok((reports, flipped)) => law_cell(
                    key,
                    Ok(reports),
                    Some((flipped, format!("generator squares flip: {flipped}"))),
                    time,
                ),
                Err(e) => law_cell(key, Err(e), None, time),
            }
        })
        .collect()
}

fn dichotomy(max_n: usize) -> Result<Vec<Cell>, CliError> {
    let gradings: Vec<Z2Grading> = signatures_up_to(max_n)?
        .into_iter()
        .flat_map(all_gradings)
        .collect();
    Ok(gradings
        .par_iter()
        .map(|g| {
            let (report, time) = timed(|| {
                let closure = g.closure_check();
                laws::dimension_dichotomy(g).map(|r| (r, closure))
            });
            match report {
                Ok((r, closure)) => law_cell(
                    grading_key(g),
                    Ok(vec![r]),
                    Some((
                        closure.passed(),
                        format!("closure violations {}", closure.violations.len()),
                    )),
                    time,
                ),
                Err(e) => law_cell(grading_key(g), Err(e), None, time),
            }
        })
        .collect())
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Table4 => "table4",
        Suite::Sigchange => "sigchange",
        Suite::Core => "core",
        Suite::Veeprime => "veeprime",
        Suite::Routes => "routes",
        Suite::Tilt => "tilt",
        Suite::Dichotomy => "dichotomy",
        Suite::All => "all",
    }
}

fn cells_for(suite: Suite, max_n: usize, seed: u64) -> Result<Vec<Cell>, CliError> {
    let prefixed = |s: Suite, cells: Vec<Cell>| -> Vec<Cell> {
        cells
            .into_iter()
            .map(|c| Cell {
                key: format!("{}:{}", suite_name(s), c.key),
                ..c
            })
            .collect()
    };
    Ok(match suite {
        Suite::Table4 => table4(max_n),
        Suite::Sigchange => sigchange(&sweep_gradings(max_n)?, seed),
        Suite::Core => core(&signatures_up_to(max_n)?, seed),
        Suite::Veeprime => veeprime(&sweep_gradings(max_n)?, seed),
        Suite::Routes => routes(&sweep_gradings(max_n)?, seed),
        Suite::Tilt => tilt(&signatures_up_to(max_n)?),
        Suite::Dichotomy => dichotomy(max_n)?,
        Suite::All => {
            let mut all = Vec::new();
            for s in [
                Suite::Table4,
                Suite::Sigchange,
                Suite::Core,
                Suite::Veeprime,
                Suite::Routes,
                Suite::Tilt,
                Suite::Dichotomy,
            ] {
                all.extend(prefixed(s, cells_for(s, max_n, seed)?));
            }
            all
        }
    })
}

pub(crate) fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    if args.max_n > MAX_N_CAP {
        return Err(CliError::Usage(format!(
            "--max-n {} exceeds the cap of {MAX_N_CAP}",
            args.max_n
        )));
    }
    let cells = cells_for(args.suite, args.max_n, args.seed)?;
    let violations = cells.iter().filter(|c| !c.pass).count();
    let report = Report {
        suite: suite_name(args.suite).into(),
        cells,
        violations,
    };
    let stdout = if args.json {
        let mut s = serde_json::to_string_pretty(&report).expect("report serialises");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        for c in &report.cells {
            let _ = writeln!(
                s,
                "{} {} {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.key,
                c.detail
            );
        }
        let _ = writeln!(
            s,
            "suite {}: {} cells, {} violations",
            report.suite,
            report.cells.len(),
            report.violations
        );
        s
    };
    Ok(Outcome::checked(stdout, violations == 0))
}
