use std::collections::BTreeMap;

use serde_json::{json, Value};

use qplane::circlerep::circle_relation_suite;
use qplane::dynamics::hamiltonian_symmetry_checks;
use qplane::hopf::axioms::hopf_suite;
use qplane::hopf::pairing::resolve_pairing;
use qplane::hopf::{HopfConsistent, PairingConvention};
use qplane::planefun::{exact_algebra_suite, IdentityCheck};
use qplane::qcalc::{DeformationParams, QScalar};

use crate::error::CliError;
use crate::report::{Check, Table};
use crate::{Args, Outcome};

pub const MAX_DEGREE: u32 = 8;

fn identity(c: &IdentityCheck) -> Check {
    Check::exact(c.name.clone(), c.failures.len())
}

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    let sub = args.subcommand.clone().unwrap_or_else(|| "all".into());
    let (algebra, hopf, circle) = match sub.as_str() {
        "all" => (true, true, true),
        "algebra" => (true, false, false),
        "hopf" => (false, true, false),
        "circle" => (false, false, true),
        s => return Err(CliError::usage(format!("verify takes all|algebra|hopf|circle, not {s}"))),
    };
    let degree = args.degree.unwrap_or(6);
    if degree > MAX_DEGREE {
        return Err(CliError::usage(format!("--degree {degree} above {MAX_DEGREE}")));
    }
    let qs = if args.q.is_empty() { vec![0.5, 0.9, 0.99] } else { args.q.clone() };
    let params = qs.iter().map(|&q| DeformationParams::unit(q)).collect::<Result<Vec<_>, _>>()?;
    let big_j = args.big_j.unwrap_or(64);
    if big_j < 1 {
        return Err(CliError::usage(format!("--J {big_j} must be positive")));
    }
    let tol = args.tol_or(1e-13)?;
    let seed = args.seed.unwrap_or(7);
    let random = args.random.unwrap_or(100);

    let mut checks = Vec::new();
    let mut warnings = Vec::new();
    let mut details = serde_json::Map::new();
    if algebra {
        // ħ and m generic rationals so no accidental cancellation hides a defect
        let (hbar, mass) = (QScalar::ratio(3, 7), QScalar::ratio(2, 5));
        let mut suite = exact_algebra_suite(degree, &hbar);
        suite.extend(hamiltonian_symmetry_checks(degree, &hbar, &mass));
        checks.extend(suite.iter().map(identity));
        details.insert("algebra".into(), serde_json::to_value(&suite)?);
    }
    if hopf {
        let rep = hopf_suite::<HopfConsistent>(seed, random, PairingConvention::RESOLVED);
        for (name, a) in [
            ("Hopf axioms on E_q(2)", &rep.group),
            ("Hopf axioms on e_q(2)", &rep.dual),
            ("pairing axioms on generators", &rep.pairing_generators),
            ("pairing axioms on random elements", &rep.pairing_random),
        ] {
            checks.push(Check::exact(name, a.failures.len()));
        }
        let res = resolve_pairing();
        checks.push(Check::flag("pairing convention resolved", res.chosen == Some(PairingConvention::RESOLVED)));
        details.insert("hopf".into(), serde_json::to_value(&rep)?);
        details.insert("pairing_resolution".into(), serde_json::to_value(&res)?);
    }
    if circle {
        let mut per_q = Vec::new();
        for p in &params {
            let suite = circle_relation_suite(*p, big_j)?;
            let narrowest = suite.iter().map(|c| c.window.1 - c.window.0).min().unwrap_or(0);
            warnings.push(format!(
                "q = {}: relations compared on interior windows inside |j| <= {big_j} (narrowest spans {} columns)",
                p.q,
                narrowest + 1
            ));
            for c in &suite {
                checks.push(Check::below(format!("q = {}: {}", p.q, c.name), c.max_deviation, tol));
            }
            per_q.push(json!({ "q": p.q, "relations": suite }));
        }
        details.insert("circle".into(), Value::Array(per_q));
    }

    let mut parameters = BTreeMap::new();
    parameters.insert("degree".into(), json!(degree));
    parameters.insert("q".into(), json!(qs));
    parameters.insert("J".into(), json!(big_j));
    parameters.insert("tol".into(), json!(tol));
    parameters.insert("seed".into(), json!(seed));
    parameters.insert("random".into(), json!(random));
    let table = Table::from_checks(&checks);
    Ok(Outcome {
        subcommand: sub,
        parameters,
        checks,
        warnings,
        details: Value::Object(details),
        table: Some(table),
        plot: None,
    })
}
