//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any is
//! red. Tolerances and runtime budgets are fixed here, never loosened to make
//! a line green.
//!
//! Criterion 10 drives the `qplane` binary, which `cargo test --workspace`
//! builds next to this test executable.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use qplane::circlerep::circle_relation_suite;
use qplane::dynamics::{
    first_zero, hamiltonian_symmetry_checks, heisenberg_identity_check, stationary_residual, stationary_state,
    RadialGrid, StationarySpec, DEFAULT_FD_STEP,
};
use qplane::hopf::axioms::hopf_suite;
use qplane::hopf::pairing::resolve_pairing;
use qplane::hopf::{HopfConsistent, PairingConvention};
use qplane::planefun::{exact_algebra_suite, Axis};
use qplane::qcalc::{DeformationParams, QScalar};
use qplane::uncertainty::{
    d0_eigen_residual, eigen_check, factorization_check, first_order_gap_fit, five_point_superposition,
    gaussian_packet_report, minimal_radial_packet_report, momentum_report, PlaneWaveSpec, WaveKind,
};

struct Verdict {
    ok: bool,
    summary: String,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { ok: true, summary: String::new(), notes: Vec::new() }
    }

    /// Records one sub-check; `detail` is printed under the criterion line.
    fn require(&mut self, ok: bool, detail: impl Into<String>) {
        let detail = detail.into();
        self.ok &= ok;
        self.notes.push(format!("{} {detail}", if ok { "ok  " } else { "FAIL" }));
    }
}

fn sci(xs: &[f64]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| format!("{x:.3e}")).collect();
    format!("[{}]", parts.join(", "))
}

fn params(q: f64) -> DeformationParams {
    DeformationParams::unit(q).expect("q in (0, 1)")
}

fn exact_algebra() -> Verdict {
    let mut v = Verdict::new();
    let (hbar, mass) = (QScalar::ratio(3, 7), QScalar::ratio(2, 5));
    let mut suite = exact_algebra_suite(6, &hbar);
    suite.extend(hamiltonian_symmetry_checks(6, &hbar, &mass));
    let checked: usize = suite.iter().map(|c| c.checked).sum();
    for c in &suite {
        v.require(c.failures.is_empty(), format!("{} ({} inputs, {} differ)", c.name, c.checked, c.failures.len()));
    }
    v.summary = format!("{} identities, {checked} monomial comparisons, degree <= 6", suite.len());
    v
}

fn hopf_duality() -> Verdict {
    let mut v = Verdict::new();
    let rep = hopf_suite::<HopfConsistent>(7, 100, PairingConvention::RESOLVED);
    for (name, a) in [
        ("Hopf axioms, E_q(2)", &rep.group),
        ("Hopf axioms, dual", &rep.dual),
        ("pairing axioms, generator pairs", &rep.pairing_generators),
        ("pairing axioms, 100 random degree <= 3", &rep.pairing_random),
    ] {
        v.require(a.failures.is_empty(), format!("{name}: {} checked, {} failed", a.checked, a.failures.len()));
    }
    let res = resolve_pairing();
    v.require(
        res.chosen == Some(PairingConvention::RESOLVED),
        format!("exponent convention resolved to {:?}", res.chosen),
    );
    v.summary = "exact, zero tolerance".into();
    v
}

fn circle() -> Verdict {
    const TOL: f64 = 1e-13;
    let mut v = Verdict::new();
    let mut worst = 0.0f64;
    for q in [0.5, 0.9, 0.99] {
        let suite = circle_relation_suite(params(q), 64).expect("circle suite");
        for c in &suite {
            worst = worst.max(c.max_deviation);
            v.require(c.max_deviation < TOL, format!("q = {q}: {} -> {:e}", c.name, c.max_deviation));
        }
    }
    v.summary = format!("J = 64, worst relative residual {worst:e} (tol {TOL:e})");
    v
}

fn gaussian() -> Verdict {
    const TOL: f64 = 0.01;
    let mut v = Verdict::new();
    let target = (PI / 2.0).sqrt();
    let mut errors = Vec::new();
    for q in [0.99, 0.995, 0.999] {
        let rep = gaussian_packet_report(1.0, &params(q)).expect("gaussian report");
        let mean = rep.value("mean_r").expect("mean_r");
        let err = (mean - target).abs() / target;
        v.notes.push(format!("     q = {q}: (f, r f) = {mean:.12}, relative error vs sqrt(pi/2) = {err:.6}"));
        errors.push(err);
    }
    v.require(errors[2] < TOL, format!("q = 0.999 within {TOL}: error {:.6}", errors[2]));
    v.require(
        errors.windows(2).all(|w| w[1] < w[0]),
        format!("error decreasing over q = 0.99, 0.995, 0.999: {}", sci(&errors)),
    );
    v.summary = format!("target sqrt(pi/2) eps = {target:.12}, eps = 1");
    v
}

fn plane_waves() -> Verdict {
    let mut v = Verdict::new();
    for (pp, pm) in [(QScalar::ratio(1, 2), QScalar::int(1))] {
        for kind in [WaveKind::Plus, WaveKind::Minus] {
            let spec = PlaneWaveSpec { kind, p_plus: pp.clone(), p_minus: pm.clone(), hbar: QScalar::one() };
            let e = eigen_check(&spec, 20).expect("eigen");
            let f = factorization_check(&spec, 20, false).expect("factorization");
            v.require(e.failures.is_empty(), format!("{} ({pp}, {pm}): {} differ", e.name, e.failures.len()));
            v.require(f.failures.is_empty(), format!("{} ({pp}, {pm}): {} differ", f.name, f.failures.len()));
            if let Some(first) = f.failures.first() {
                v.notes.push(format!("     first difference: {first}"));
            }
        }
    }
    v.summary = "truncation degree 20, exact".into();
    v
}

fn minimal_packet() -> Verdict {
    let mut v = Verdict::new();
    let p = params(0.9);
    for j in 0..=2 {
        let rep = minimal_radial_packet_report(j, 1.0, &p).expect("minimal packet");
        let l_err = rep.value("l_eigenvalue_error").expect("l error");
        v.require(l_err == 0.0, format!("j = {j}: l eigenvalue error {l_err:e}"));
        let d0 = d0_eigen_residual(j, 1.0, &p, 3.0).expect("d0 residual");
        v.require(d0 < 1e-10, format!("j = {j}: d = 0 lattice residual {d0:e} (< 1e-10)"));
        let gap = rep.equality_gap.expect("gap");
        v.require(gap.abs() < 1e-8, format!("j = {j}: dressed-bound equality gap {gap:e} (< 1e-8)"));
    }
    for j in 0..=2 {
        let fit = first_order_gap_fit(j, 1.0, &[0.99, 0.995, 0.999]).expect("gap fit");
        v.require(
            (fit.slope - 2.0).abs() <= 0.2,
            format!("j = {j}: gap to (hbar/2)|1 + Lambda j| slope {:.4} (2 +/- 0.2), gaps {}", fit.slope, sci(&fit.gaps)),
        );
    }
    v.summary = "q = 0.9, |c| = 1".into();
    v
}

fn momentum_pair() -> Verdict {
    let mut v = Verdict::new();
    let spec = PlaneWaveSpec {
        kind: WaveKind::Plus,
        p_plus: QScalar::ratio(1, 2),
        p_minus: QScalar::int(1),
        hbar: QScalar::one(),
    };
    let family = five_point_superposition(&spec, 12).expect("superposition");
    for q in [0.9, 0.99] {
        let rep = momentum_report(&family, &params(q), Some(2.0)).expect("momentum report");
        let margin = rep.margin().expect("margin");
        v.require(
            margin >= -1e-10,
            format!("q = {q}: product {:.6e}, bound {:.6e}, margin {margin:.3e}", rep.product.unwrap_or(f64::NAN), rep.bound),
        );
    }
    v.summary = "five-point superposition, degree 12, envelope w = 2".into();
    v
}

fn stationary() -> Verdict {
    const TOL: f64 = 1e-8;
    let mut v = Verdict::new();
    let (mut worst_res, mut worst_ratio) = (0.0f64, 0.0f64);
    for q in [0.8, 0.9, 0.99] {
        for j in 0..=5u32 {
            let spec = StationarySpec { j, energy: 1.0, q, mass: 1.0, hbar: 1.0 };
            let grid = RadialGrid { size: 401, r_max: 15.0 / spec.k() };
            let state = stationary_state(&spec, &grid).expect("state");
            let res = stationary_residual(&state, DEFAULT_FD_STEP).expect("residual");
            worst_res = worst_res.max(res.max_relative);
            v.require(res.max_relative < TOL, format!("q = {q}, j = {j}: residual {:e}", res.max_relative));
            if j == 0 {
                let classical = stationary_state(&StationarySpec { q: 1.0, ..spec }, &grid).expect("state");
                let same = state.psi.iter().zip(&classical.psi).all(|(a, b)| a.to_bits() == b.to_bits());
                v.require(same, format!("q = {q}: j = 0 samples bitwise equal to q = 1"));
            }
            let z = first_zero(&spec).expect("zero");
            let z1 = first_zero(&StationarySpec { q: 1.0, ..spec }).expect("zero");
            let expected = q.powf(-(j as f64) / 2.0);
            let rel = (z / z1 - expected).abs() / expected;
            worst_ratio = worst_ratio.max(rel);
            v.require(rel < TOL, format!("q = {q}, j = {j}: zero ratio {:.15} vs q^(-j/2) {expected:.15}", z / z1));
        }
    }
    v.summary = format!("worst residual {worst_res:e}, worst zero-ratio error {worst_ratio:e} (tol {TOL:e})");
    v
}

fn heisenberg() -> Verdict {
    let mut v = Verdict::new();
    let (hbar, mass) = (QScalar::ratio(3, 7), QScalar::ratio(2, 5));
    for axis in [Axis::X, Axis::Y] {
        let r = heisenberg_identity_check(axis, 4, &params(0.9), &hbar, &mass).expect("heisenberg");
        v.require(r.classical_limit_holds, format!("{axis:?}: q = 1 gives dX/dt = p_X/m exactly"));
        v.require(
            r.residuals.is_empty(),
            format!(
                "{axis:?}: generic q, {} of {} monomials leave a residual (max {:e})",
                r.residuals.len(),
                r.checked,
                r.max_residual
            ),
        );
        for m in &r.residuals {
            v.notes.push(format!("     {axis:?} z+^{} z-^{}: {}", m.a, m.b, m.residual));
        }
    }
    v.summary = "degree <= 4, q = 0.9, hbar = 3/7, m = 2/5; report generated".into();
    v
}

fn cli_binary() -> Option<PathBuf> {
    // target/<profile>/deps/acceptance-<hash> -> target/<profile>/qplane
    let exe = std::env::current_exe().ok()?;
    let bin = exe.parent()?.parent()?.join(format!("qplane{}", std::env::consts::EXE_SUFFIX));
    bin.is_file().then_some(bin)
}

fn cli_contract() -> Verdict {
    let mut v = Verdict::new();
    let Some(bin) = cli_binary() else {
        v.require(false, "qplane binary not found next to the test executable; run cargo test --workspace");
        return v;
    };
    let run = |args: &[&str]| Command::new(&bin).args(args).output().expect("spawn qplane");
    for args in [&["dynamics", "zeros"][..], &["uncertainty", "radial", "--format", "csv"]] {
        let (a, b) = (run(args), run(args));
        v.require(a.stdout == b.stdout && !a.stdout.is_empty(), format!("{args:?}: byte-identical reports"));
    }
    for args in [&["verify", "--q", "1.5"][..], &["dynamics", "zeros", "--jmax", "99"], &["verify", "bogus"]] {
        let code = run(args).status.code();
        v.require(code == Some(2), format!("{args:?}: exit {code:?}"));
    }
    v.summary = format!("binary {}", bin.display());
    v
}

fn main() {
    type Criterion = (u32, &'static str, fn() -> Verdict, Duration);
    let criteria: [Criterion; 10] = [
        (1, "exact algebra suite", exact_algebra, Duration::from_secs(10)),
        (2, "Hopf and duality suite", hopf_duality, Duration::from_secs(5)),
        (3, "circle-representation suite", circle, Duration::from_secs(5)),
        (4, "Gaussian packet", gaussian, Duration::from_secs(2)),
        (5, "plane waves", plane_waves, Duration::from_secs(1)),
        (6, "minimal radial packet", minimal_packet, Duration::from_secs(5)),
        (7, "momentum-pair bound", momentum_pair, Duration::from_secs(2)),
        (8, "stationary states", stationary, Duration::from_secs(5)),
        (9, "Heisenberg identity check", heisenberg, Duration::from_secs(10)),
        (10, "CLI determinism and exit status", cli_contract, Duration::from_secs(1)),
    ];
    let verbose = std::env::args().any(|a| a == "--verbose");
    let mut red = Vec::new();
    for (n, name, f, budget) in criteria {
        let t = Instant::now();
        let mut v = f();
        let took = t.elapsed();
        if took > budget {
            v.require(false, format!("runtime {:.2} s over budget {:.0} s", took.as_secs_f64(), budget.as_secs_f64()));
        }
        let status = if v.ok { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} {status} {name}: {} [{:.2} s]", v.summary, took.as_secs_f64());
        for note in &v.notes {
            if verbose || !v.ok {
                println!("    {note}");
            }
        }
        if !v.ok {
            red.push(n);
        }
    }
    if red.is_empty() {
        println!("acceptance: all 10 criteria pass");
    } else {
        println!("acceptance: criteria {red:?} fail");
        std::process::exit(1);
    }
}
