use std::collections::BTreeMap;

use serde_json::{json, Value};

use qplane::planefun::{PlaneFunction, RadialPacket};
use qplane::qcalc::{DeformationParams, QScalar};
use qplane::uncertainty::{
    eigen_check, factorization_check, five_point_superposition, gaussian_packet, gaussian_packet_report,
    minimal_radial_packet, minimal_report, momentum_report, plane_wave, PlaneWaveSpec, UncertaintyReport, WaveKind,
};

use crate::error::CliError;
use crate::report::{num, Check, Plot, Table};
use crate::{Args, Kind, Outcome};

/// Degree of the plane waves inside the momentum-pair superposition; the
/// envelope makes higher terms negligible and keeps the run short.
const MOMENTUM_DEGREE: u32 = 12;

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    match args.subcommand.as_deref() {
        Some("gaussian") => gaussian(args),
        Some("plane") => plane(args),
        Some("radial") => radial(args),
        Some(s) => Err(CliError::usage(format!("uncertainty takes gaussian|plane|radial, not {s}"))),
        None => Err(CliError::usage("uncertainty needs a family: gaussian|plane|radial")),
    }
}

fn values_table(rep: &UncertaintyReport) -> Table {
    let mut t = Table::new(&["quantity", "value"]);
    for (k, v) in [
        ("delta_1", rep.delta_1),
        ("delta_2", rep.delta_2),
        ("product", rep.product),
        ("anticommutator", Some(rep.anticommutator)),
        ("commutator", Some(rep.commutator)),
        ("robertson_bound", Some(rep.robertson_bound)),
        ("bound", Some(rep.bound)),
        ("equality_gap", rep.equality_gap),
    ] {
        if let Some(v) = v {
            t.push(vec![k.into(), num(v)]);
        }
    }
    for (k, v) in &rep.values {
        t.push(vec![k.clone(), num(*v)]);
    }
    t
}

fn profile(p: &RadialPacket, r_max: f64) -> Vec<(f64, f64)> {
    p.points().filter(|(_, r, _)| *r <= r_max).map(|(_, r, v)| (r, v.norm())).collect()
}

fn lattice_warning(p: &RadialPacket) -> String {
    let (lo, hi) = p.range();
    format!(
        "lattice samples kept for k in [{lo}, {hi}] (r from {:.3e} to {:.3e}); the tails beyond are below the sampling tolerance",
        p.point(hi),
        p.point(lo)
    )
}

fn gaussian(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.999)?;
    let eps = args.eps.unwrap_or(1.0);
    let tol = args.tol_or(0.01)?;
    let params = DeformationParams::unit(q)?;
    let rep = gaussian_packet_report(eps, &params)?;
    let f = gaussian_packet(eps, &params)?;
    let v = |k: &str| rep.value(k).expect("report value");
    let checks = vec![
        Check::relative("(f, r f) = sqrt(pi/2) eps", v("mean_r"), v("target_ratio") * eps, tol),
        Check::relative(
            "(f, r f) = (1/2) sqrt(pi/2) eps under the invariant measure",
            v("mean_r"),
            v("continuum_ratio") * eps,
            tol,
        ),
    ];
    let plot = Plot {
        title: format!("Gaussian packet, eps = {eps}, q = {q}"),
        x_label: "r".into(),
        y_label: "|f(r)|".into(),
        series: vec![("lattice samples".into(), profile(&f, 4.0 * eps))],
    };
    Ok(Outcome {
        subcommand: "gaussian".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("eps".into(), json!(eps)),
            ("tol".into(), json!(tol)),
        ]),
        checks,
        warnings: vec![lattice_warning(&f)],
        details: json!({ "report": rep }),
        table: Some(values_table(&rep)),
        plot: Some(plot),
    })
}

/// Exact rational from "3", "-1.25" or "7/4".
pub fn exact_decimal(s: &str) -> Result<QScalar, CliError> {
    let bad = || CliError::usage(format!("{s:?} is not an exact decimal or fraction"));
    let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
    if let Some((n, d)) = s.split_once('/') {
        let d = int(d)?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(QScalar::ratio(int(n)?, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 12 {
        return Err(bad());
    }
    let den = 10i64.pow(frac.len() as u32);
    let w = if whole.is_empty() { 0 } else { int(whole)? };
    if w < 0 {
        return Err(bad());
    }
    let f = if frac.is_empty() { 0 } else { int(frac)? };
    let n = w.checked_mul(den).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
    Ok(QScalar::ratio(if neg { -n } else { n }, den))
}

fn plane(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.9)?;
    let degree = args.degree.unwrap_or(20);
    let tol = args.tol_or(1e-10)?;
    let width = args.envelope.unwrap_or(2.0);
    let pp = args.p_plus.clone().unwrap_or_else(|| "1/2".into());
    let pm = args.p_minus.clone().unwrap_or_else(|| "1".into());
    let kind = match args.kind.unwrap_or(Kind::Plus) {
        Kind::Plus => WaveKind::Plus,
        Kind::Minus => WaveKind::Minus,
    };
    let params = DeformationParams::unit(q)?;
    let spec = PlaneWaveSpec { kind, p_plus: exact_decimal(&pp)?, p_minus: exact_decimal(&pm)?, hbar: QScalar::one() };

    let wave = plane_wave(&spec, degree)?;
    let constant = wave == PlaneFunction::one();
    let eigen = eigen_check(&spec, degree)?;
    let printed = factorization_check(&spec, degree, false)?;
    let reversed = factorization_check(&spec, degree, true)?;
    let family = five_point_superposition(&spec, degree.min(MOMENTUM_DEGREE))?;
    let rep = momentum_report(&family, &params, Some(width))?;

    let mut checks = vec![
        Check::exact(format!("{} through degree {degree}", eigen.name), eigen.failures.len()),
        Check::exact(format!("{} through degree {degree}", printed.name), printed.failures.len()),
        Check::exact(format!("{} through degree {degree}", reversed.name), reversed.failures.len()),
        Check::at_least(
            "Dp_x Dp_y >= (tanh(L)/2)|<p_x^2 + p_y^2>| on the five-point superposition",
            rep.product.expect("momentum product"),
            rep.bound,
            tol,
        ),
    ];
    if constant {
        checks.push(Check::flag("zero momentum gives the constant function", true));
    }
    let mut warnings = vec![format!("plane-wave series truncated at total degree {degree}")];
    if degree > MOMENTUM_DEGREE {
        warnings.push(format!("momentum moments use the superposition truncated at degree {MOMENTUM_DEGREE}"));
    }
    warnings.push(format!("momentum moments taken on f(z) e^(-xi/w^2) with w = {width}"));
    Ok(Outcome {
        subcommand: "plane".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("degree".into(), json!(degree)),
            ("tol".into(), json!(tol)),
            ("envelope".into(), json!(width)),
            ("p_plus".into(), json!(pp)),
            ("p_minus".into(), json!(pm)),
            ("kind".into(), json!(kind)),
        ]),
        checks,
        warnings,
        details: json!({
            "constant_wave": constant,
            "eigen": eigen,
            "factorization_printed_order": printed,
            "factorization_reversed_order": reversed,
            "momentum_report": rep,
        }),
        table: Some(values_table(&rep)),
        plot: None,
    })
}

fn radial(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.9)?;
    let j = args.j.unwrap_or(1);
    let cmag = args.cmag.unwrap_or(1.0);
    let tol = args.tol_or(1e-8)?;
    let params = DeformationParams::unit(q)?;
    let m = minimal_radial_packet(j, cmag, &params, None)?;
    let rep = minimal_report(&m, &params)?;
    let v = |k: &str| rep.value(k).expect("report value");
    let checks = vec![
        Check::below("dressed-bound equality gap", rep.equality_gap.expect("gap"), tol),
        Check::flag("equality case: centered p psi = c r psi with c imaginary", rep.equality_case),
        Check::below("l eigenvalue equals hbar j", v("l_eigenvalue_error"), 1e-14),
    ];
    let r_mean = m.psi.r_hat().inner(&m.psi)?.re;
    let plot = Plot {
        title: format!("minimal radial packet, j = {j}, q = {q}"),
        x_label: "r".into(),
        y_label: "|psi(r)|".into(),
        series: vec![("lattice samples".into(), profile(&m.psi, 3.0 * r_mean))],
    };
    let warnings = vec![lattice_warning(&m.psi)];
    let details: Value = json!({ "report": rep, "d_i": m.d_i });
    Ok(Outcome {
        subcommand: "radial".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("j".into(), json!(j)),
            ("cmag".into(), json!(cmag)),
            ("tol".into(), json!(tol)),
        ]),
        checks,
        warnings,
        details,
        table: Some(values_table(&rep)),
        plot: Some(plot),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(exact_decimal("1.25").unwrap(), QScalar::ratio(5, 4));
        assert_eq!(exact_decimal("-0.5").unwrap(), QScalar::ratio(-1, 2));
        assert_eq!(exact_decimal("7/4").unwrap(), QScalar::ratio(7, 4));
        assert_eq!(exact_decimal("3").unwrap(), QScalar::int(3));
        assert_eq!(exact_decimal(".5").unwrap(), QScalar::ratio(1, 2));
        for bad in ["", "x", "1/0", "1.2.3", "--1", "1e3"] {
            assert!(exact_decimal(bad).is_err(), "{bad}");
        }
    }
}
