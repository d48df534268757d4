use std::collections::BTreeMap;

use serde_json::json;

use qplane::dynamics::{
    heisenberg_identity_check, stationary_residual, stationary_state, zero_scaling_report, RadialGrid,
    StationarySpec, DEFAULT_FD_STEP,
};
use qplane::planefun::Axis;
use qplane::qcalc::{DeformationParams, QScalar};

use crate::error::CliError;
use crate::report::{num, Check, Plot, Table};
use crate::{Args, Outcome};

pub fn run(args: &Args) -> Result<Outcome, CliError> {
    match args.subcommand.as_deref() {
        Some("stationary") => stationary(args),
        Some("zeros") => zeros(args),
        Some("heisenberg") => heisenberg(args),
        Some(s) => Err(CliError::usage(format!("dynamics takes stationary|zeros|heisenberg, not {s}"))),
        None => Err(CliError::usage("dynamics needs stationary|zeros|heisenberg")),
    }
}

fn stationary(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.9)?;
    let j = args.j.unwrap_or(0);
    if j < 0 {
        return Err(CliError::usage(format!("--j {j}: stationary states need j >= 0")));
    }
    let energy = args.energy.unwrap_or(1.0);
    let tol = args.tol_or(1e-8)?;
    let spec = StationarySpec { j: j as u32, energy, q, mass: 1.0, hbar: 1.0 };
    if !(q > 0.0 && q < 1.0) {
        return Err(CliError::usage(format!("--q {q} must lie in (0, 1)")));
    }
    let size = args.grid.unwrap_or(401);
    let r_max = args.rmax.unwrap_or(15.0 / spec.k());
    let grid = RadialGrid { size, r_max };
    let state = stationary_state(&spec, &grid)?;
    let res = stationary_residual(&state, DEFAULT_FD_STEP)?;

    let mut checks = vec![Check::below("stationary residual on interior grid", res.max_relative, tol)];
    let mut details = json!({
        "k_eff": state.k_eff,
        "norm": state.norm,
        "fd_step": res.fd_step,
        "max_relative_residual": res.max_relative,
    });
    if j == 0 {
        let classical = stationary_state(&StationarySpec { q: 1.0, ..spec }, &grid)?;
        let same = state.psi.iter().zip(&classical.psi).all(|(a, b)| a.to_bits() == b.to_bits());
        checks.push(Check::flag("j = 0 state is q-independent (bitwise)", same));
        details["q_independent"] = json!(same);
    }
    let mut table = Table::new(&["r", "psi", "relative_residual"]);
    let n = state.r.len();
    for (i, (r, p)) in state.r.iter().zip(&state.psi).enumerate() {
        let rr = if i == 0 || i == n - 1 { String::new() } else { num(res.per_point[i - 1]) };
        table.push(vec![num(*r), num(*p), rr]);
    }
    let plot = Plot {
        title: format!("stationary state j = {j}, q = {q}, energy = {energy}"),
        x_label: "r".into(),
        y_label: "psi_j(r)".into(),
        series: vec![("psi".into(), state.r.iter().cloned().zip(state.psi.iter().cloned()).collect())],
    };
    Ok(Outcome {
        subcommand: "stationary".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("j".into(), json!(j)),
            ("energy".into(), json!(energy)),
            ("grid".into(), json!(size)),
            ("rmax".into(), json!(r_max)),
            ("tol".into(), json!(tol)),
        ]),
        checks,
        warnings: vec![format!("radial grid truncated at r = {r_max}; no boundary condition is imposed there")],
        details,
        table: Some(table),
        plot: Some(plot),
    })
}

fn zeros(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.9)?;
    if !(q > 0.0 && q < 1.0) {
        return Err(CliError::usage(format!("--q {q} must lie in (0, 1)")));
    }
    let jmax = args.jmax.unwrap_or(5);
    let energy = args.energy.unwrap_or(1.0);
    let tol = args.tol_or(1e-8)?;
    let rows = zero_scaling_report(jmax, q, energy, 1.0, 1.0)?;
    let mut checks: Vec<Check> = rows
        .iter()
        .map(|r| Check::relative(format!("j = {}: first-zero ratio = q^(-j/2)", r.j), r.ratio, r.expected, tol))
        .collect();
    checks.push(Check::flag("ratios increase with j", rows.windows(2).all(|w| w[1].ratio > w[0].ratio)));
    let mut table = Table::new(&["j", "zero_q", "zero_q1", "ratio", "expected", "relative_error"]);
    for r in &rows {
        table.push(vec![
            r.j.to_string(),
            num(r.zero_q),
            num(r.zero_classical),
            num(r.ratio),
            num(r.expected),
            num(r.relative_error),
        ]);
    }
    let plot = Plot {
        title: format!("first-zero ratio, q = {q}"),
        x_label: "j".into(),
        y_label: "zero(j, q)/zero(j, 1)".into(),
        series: vec![
            ("measured".into(), rows.iter().map(|r| (r.j as f64, r.ratio)).collect()),
            ("q^(-j/2)".into(), rows.iter().map(|r| (r.j as f64, r.expected)).collect()),
        ],
    };
    Ok(Outcome {
        subcommand: "zeros".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("jmax".into(), json!(jmax)),
            ("energy".into(), json!(energy)),
            ("tol".into(), json!(tol)),
        ]),
        checks,
        warnings: vec![
            "zeros move outward by q^(-j/2) > 1, while the stated rescaling r -> q^(j/2) r is described as a \
             shorter radial distance; the table reports the zero-location ratio only"
                .into(),
        ],
        details: json!({ "rows": rows }),
        table: Some(table),
        plot: Some(plot),
    })
}

fn heisenberg(args: &Args) -> Result<Outcome, CliError> {
    let q = args.q_or(0.9)?;
    let params = DeformationParams::unit(q)?;
    let degree = args.degree.unwrap_or(4);
    let (hbar, mass) = (QScalar::one(), QScalar::one());
    let mut checks = Vec::new();
    let mut table = Table::new(&["axis", "a", "b", "magnitude", "residual"]);
    let mut results = Vec::new();
    for (axis, name) in [(Axis::X, "x"), (Axis::Y, "y")] {
        let r = heisenberg_identity_check(axis, degree, &params, &hbar, &mass)?;
        // value is the largest residual coefficient; exactness means none at all
        checks.push(Check {
            value: Some(r.max_residual),
            bound: Some(0.0),
            ..Check::exact(format!("d{name}/dt stated form at generic q, degree <= {degree}"), r.residuals.len())
        });
        checks.push(Check::flag(format!("d{name}/dt = p_{name}/m at q = 1"), r.classical_limit_holds));
        for m in &r.residuals {
            table.push(vec![name.into(), m.a.to_string(), m.b.to_string(), num(m.magnitude), m.residual.clone()]);
        }
        results.push(r);
    }
    Ok(Outcome {
        subcommand: "heisenberg".into(),
        parameters: BTreeMap::from([
            ("q".into(), json!(q)),
            ("degree".into(), json!(degree)),
            ("hbar".into(), json!(1)),
            ("m".into(), json!(1)),
        ]),
        checks,
        warnings: Vec::new(),
        details: json!({
            "evolution": "dX/dt = [X, H]/c with c = [x, p_x] = -i hbar",
            "results": results,
        }),
        table: Some(table),
        plot: None,
    })
}
