use std::fmt::Write as _;
use std::fs;

use clifford_grading::classify::table4::observed_cl0_invariants;
use clifford_grading::classify::{
    classify_cl0, classify_clifford, classify_even_part, expected_invariants,
    regular_representation, structural_invariants, table4_lookup,
};
use clifford_grading::grading::{validate_involution, Dichotomy, ValidatedInvolution};
use clifford_grading::linalg::Matrix;
use clifford_grading::parse::{parse_expression, parse_index_list};
use clifford_grading::sigchange::{target_signature, tilt_product, vee_alpha, vee_prime};
use clifford_grading::{
    AlgebraClass, Blade, Involution, Multivector, Rational, Signature, StructuralInvariants,
    Z2Grading,
};
use serde_json::{json, Value};

use crate::args::{
    ClassifyArgs, EvalArgs, GradingArgs, GradingSource, Pair, ProductKind, SigchangeArgs,
};
use crate::json::{ClassJson, FingerprintJson};
use crate::{CliError, Outcome};

pub(crate) fn signature(pair: Pair) -> Result<Signature, CliError> {
    Ok(Signature::new(pair.0, pair.1)?)
}

/// Comma-separated generator list, empty for the empty set.
pub(crate) fn index_list(blade: Blade) -> String {
    blade
        .indices()
        .map(|i| format!("e{i}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_entry(value: &Value) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("matrix entry {value} is not a rational number"));
    match value {
        Value::String(s) => s.trim().parse::<Rational>().map_err(|_| bad()),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Rational::from_integer(i.into()))
            .ok_or_else(bad),
        _ => Err(bad()),
    }
}

fn read_involution(path: &std::path::Path) -> Result<Involution, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let rows = value
        .as_array()
        .ok_or_else(|| CliError::Usage("involution must be a JSON array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| CliError::Usage("each involution row must be an array".into()))?
                .iter()
                .map(parse_entry)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Involution::new(Matrix::from_rows(rows)?))
}

/// A grading as supplied on the command line.
pub(crate) enum Supplied {
    Aligned(Z2Grading),
    /// Valid involution that is not diagonal in the standard basis.
    General(ValidatedInvolution),
}

fn supplied(sig: Signature, src: &GradingSource) -> Result<Option<Supplied>, CliError> {
    if let Some(odd) = &src.odd {
        return Ok(Some(Supplied::Aligned(Z2Grading::new(
            sig,
            parse_index_list(odd)?,
        )?)));
    }
    let Some(path) = &src.involution else {
        return Ok(None);
    };
    let validated = validate_involution(&read_involution(path)?, sig)?;
    Ok(Some(match validated.basis_aligned {
        Some(odd) => Supplied::Aligned(Z2Grading::new(sig, odd)?),
        None => Supplied::General(validated),
    }))
}

/// A basis-aligned grading, required whenever a product depends on it.
fn aligned(sig: Signature, src: &GradingSource, purpose: &str) -> Result<Z2Grading, CliError> {
    match supplied(sig, src)? {
        Some(Supplied::Aligned(g)) => Ok(g),
        Some(Supplied::General(_)) => Err(CliError::Usage(format!(
            "the {purpose} product needs an involution that is diagonal in the standard basis"
        ))),
        None => Err(CliError::Usage(format!(
            "the {purpose} product needs --odd or --involution"
        ))),
    }
}

type Product = Box<dyn Fn(&Multivector, &Multivector) -> clifford_grading::Result<Multivector>>;

fn product(
    kind: ProductKind,
    grading: impl FnOnce() -> Result<Z2Grading, CliError>,
) -> Result<Product, CliError> {
    Ok(match kind {
        ProductKind::Geometric => Box::new(|a, b| a.geometric(b)),
        ProductKind::Tilt => Box::new(tilt_product),
        ProductKind::Vee => {
            let g = grading()?;
            Box::new(move |a, b| vee_alpha(a, b, &g))
        }
        ProductKind::Veeprime => {
            let g = grading()?;
            Box::new(move |a, b| vee_prime(a, b, &g))
        }
    })
}

fn product_name(kind: ProductKind) -> &'static str {
    match kind {
        ProductKind::Geometric => "geometric",
        ProductKind::Vee => "vee",
        ProductKind::Veeprime => "veeprime",
        ProductKind::Tilt => "tilt",
    }
}

fn evaluate(text: &str, sig: Signature, product: &Product) -> Result<Multivector, CliError> {
    let expr = parse_expression(text)?;
    expr.check_indices(sig)?;
    Ok(expr.evaluate(sig, product)?)
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialise");
    s.push('\n');
    s
}

pub(crate) fn eval(args: &EvalArgs) -> Result<Outcome, CliError> {
    let sig = signature(args.sig)?;
    let prod = product(args.product, || {
        aligned(sig, &args.grading, product_name(args.product))
    })?;
    let mut acc: Option<Multivector> = None;
    for text in &args.exprs {
        let value = evaluate(text, sig, &prod)?;
        acc = Some(match acc {
            None => value,
            Some(prev) => prod(&prev, &value)?,
        });
    }
    let result = acc.expect("clap requires at least one expression");
    Ok(Outcome::ok(if args.json {
        render(&json!({
            "signature": sig.to_string(),
            "product": product_name(args.product),
            "result": result.to_string(),
        }))
    } else {
        format!("{result}\n")
    }))
}

fn geometric_fingerprint(sig: Signature) -> Result<StructuralInvariants, CliError> {
    let basis: Vec<Multivector> = sig
        .blades()
        .into_iter()
        .map(|b| Multivector::blade(sig, b))
        .collect::<Result<_, _>>()?;
    let sc = regular_representation(&basis, |a, b| a.geometric(b))?;
    Ok(structural_invariants(&sc)?)
}

struct OracleCheck {
    label: &'static str,
    observed: StructuralInvariants,
    expected: StructuralInvariants,
}

impl OracleCheck {
    fn agrees(&self) -> bool {
        self.observed == self.expected
    }

    fn text(&self) -> String {
        let verdict = if self.agrees() { "agrees" } else { "DISAGREES" };
        format!("oracle ({}): {verdict} [{}]\n", self.label, self.observed)
    }

    fn json(&self) -> Value {
        json!({
            "algebra": self.label,
            "agree": self.agrees(),
            "observed": FingerprintJson::from(&self.observed),
            "expected": FingerprintJson::from(&self.expected),
        })
    }
}

fn class_json(cls: &AlgebraClass) -> Value {
    serde_json::to_value(ClassJson::from(cls)).expect("serialisable")
}

pub(crate) fn classify(args: &ClassifyArgs) -> Result<Outcome, CliError> {
    let sig = signature(args.sig)?;
    let (p, q) = (sig.p(), sig.q());
    let grading = match (args.even, supplied(sig, &args.grading)?) {
        (Some(Pair(p0, q0)), _) => Some((p0, q0, Some(Z2Grading::canonical(sig, p0, q0)?))),
        (None, Some(Supplied::Aligned(g))) => {
            let c = g.counts();
            Some((c.p0, c.q0, Some(g)))
        }
        (None, Some(Supplied::General(v))) => Some((v.counts.p0, v.counts.q0, None)),
        (None, None) => None,
    };

    let mut text = String::new();
    let mut report = serde_json::Map::new();
    report.insert("signature".into(), json!(sig.to_string()));
    let mut checks = Vec::new();

    match grading {
        None => {
            let cls = classify_clifford(p, q);
            let even = if sig.n() == 0 {
                cls.clone()
            } else {
                classify_even_part(p, q)?
            };
            let _ = writeln!(text, "Cl{sig} = {cls}");
            let _ = writeln!(text, "even part = {even}");
            report.insert("clifford".into(), class_json(&cls));
            report.insert("even_part".into(), class_json(&even));
            if args.oracle {
                checks.push(OracleCheck {
                    label: "clifford",
                    observed: geometric_fingerprint(sig)?,
                    expected: expected_invariants(&cls),
                });
                if sig.n() > 0 {
                    checks.push(OracleCheck {
                        label: "even part",
                        observed: observed_cl0_invariants(&Z2Grading::usual(sig))?,
                        expected: expected_invariants(&even),
                    });
                }
            }
        }
        Some((p0, q0, g)) => {
            let cls = classify_cl0(p, q, p0, q0)?;
            let entry = table4_lookup(p, q, p0, q0)?;
            let _ = writeln!(text, "Cl0 = {cls}");
            let _ = writeln!(text, "(p0,q0) = ({p0},{q0})");
            report.insert("p0".into(), json!(p0));
            report.insert("q0".into(), json!(q0));
            report.insert("cl0".into(), class_json(&cls));
            report.insert(
                "table_entry".into(),
                entry.as_ref().map_or(Value::Null, class_json),
            );
            if args.oracle {
                let g = match g {
                    Some(g) => g,
                    None => Z2Grading::canonical(sig, p0, q0)?,
                };
                checks.push(OracleCheck {
                    label: "cl0",
                    observed: observed_cl0_invariants(&g)?,
                    expected: expected_invariants(&cls),
                });
            }
        }
    }

    let passed = checks.iter().all(OracleCheck::agrees);
    if args.oracle {
        for c in &checks {
            text.push_str(&c.text());
        }
        report.insert(
            "oracle".into(),
            Value::Array(checks.iter().map(OracleCheck::json).collect()),
        );
    }
    let stdout = if args.json {
        render(&Value::Object(report))
    } else {
        text
    };
    Ok(Outcome::checked(stdout, passed))
}

pub(crate) fn grading(args: &GradingArgs) -> Result<Outcome, CliError> {
    let sig = signature(args.sig)?;
    let given = supplied(sig, &args.grading)?
        .ok_or_else(|| CliError::Usage("grading needs --odd or --involution".into()))?;
    let (p, q) = (sig.p(), sig.q());
    let mut report = serde_json::Map::new();
    report.insert("signature".into(), json!(sig.to_string()));
    let mut text = String::new();
    let mut passed = true;

    let counts = match &given {
        Supplied::Aligned(g) => {
            let counts = g.counts();
            let closure = g.closure_check();
            passed &= closure.passed();
            let dichotomy = match g.dimension_dichotomy() {
                Dichotomy::Trivial => "trivial",
                Dichotomy::Half => "half",
            };
            let odd = index_list(g.odd_set());
            let _ = writeln!(
                text,
                "odd set: {}",
                if odd.is_empty() { "(none)" } else { &odd }
            );
            let _ = writeln!(
                text,
                "dim Cl0 = {}, dim Cl1 = {} ({dichotomy})",
                g.even_subalgebra_basis().len(),
                g.odd_part_basis().len()
            );
            let _ = writeln!(
                text,
                "closure: {} pairs checked, {} violations",
                closure.pairs_checked,
                closure.violations.len()
            );
            report.insert("odd".into(), json!(index_list(g.odd_set())));
            report.insert("dim_even".into(), json!(g.even_subalgebra_basis().len()));
            report.insert("dim_odd".into(), json!(g.odd_part_basis().len()));
            report.insert("dichotomy".into(), json!(dichotomy));
            report.insert("closure_violations".into(), json!(closure.violations.len()));
            counts
        }
        Supplied::General(v) => {
            let _ = writeln!(
                text,
                "involution is not basis-aligned; V0 has dimension {}, V1 has dimension {}",
                v.even_space.len(),
                v.odd_space.len()
            );
            let _ = writeln!(text, "V0 orthogonal to V1: {}", v.orthogonal);
            report.insert("orthogonal".into(), json!(v.orthogonal));
            v.counts
        }
    };
    let (r, s) = (counts.p0 + counts.q1, counts.q0 + counts.p1);
    let cl0 = classify_cl0(p, q, counts.p0, counts.q0)?;
    let _ = writeln!(
        text,
        "(p0,q0,p1,q1) = ({},{},{},{})",
        counts.p0, counts.q0, counts.p1, counts.q1
    );
    let _ = writeln!(text, "Cl0 = {cl0}");
    let _ = writeln!(text, "target signature = ({r},{s})");
    report.insert(
        "counts".into(),
        json!([counts.p0, counts.q0, counts.p1, counts.q1]),
    );
    report.insert("cl0".into(), class_json(&cl0));
    report.insert("target".into(), json!(format!("({r},{s})")));

    let stdout = if args.json {
        render(&Value::Object(report))
    } else {
        text
    };
    Ok(Outcome::checked(stdout, passed))
}

pub(crate) fn sigchange(args: &SigchangeArgs) -> Result<Outcome, CliError> {
    let sig = signature(args.sig)?;
    let g = aligned(sig, &args.grading, "signature-changing")?;
    let prod = product(args.product, || Ok(g))?;
    let result = evaluate(&args.expr, sig, &prod)?;
    let target = target_signature(&g);
    Ok(Outcome::ok(if args.json {
        render(&json!({
            "signature": sig.to_string(),
            "odd": index_list(g.odd_set()),
            "product": product_name(args.product),
            "target": target.to_string(),
            "result": result.to_string(),
        }))
    } else {
        format!("{result}\ntarget signature = {target}\n")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_lists() {
        assert_eq!(index_list(Blade::from_bits(0b1011)), "e1,e2,e4");
        assert_eq!(index_list(Blade::SCALAR), "");
    }

    #[test]
    fn matrix_entries() {
        assert_eq!(
            parse_entry(&json!("-1/2")).unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        assert_eq!(
            parse_entry(&json!(3)).unwrap(),
            Rational::from_integer(3.into())
        );
        assert!(parse_entry(&json!(0.5)).is_err());
        assert!(parse_entry(&json!("x")).is_err());
    }
}
