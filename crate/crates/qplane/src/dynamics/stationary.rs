//! Bessel stationary states of the semiclassical Schrödinger problem in
//! polar coordinates,
//!   −(ħ²/2m)(∂²_r + r⁻¹∂_r − j²/r²) e^{Λj} ψ_j = ε ψ_j,
//! where the shift e^{−iΛ∂_θ} has acted on e^{ijθ} as the number e^{Λj}.
//! The solution is J_j(k q^{j/2} r) with k = √(2mε)/ħ, so every radial
//! feature of ψ_j sits at q^{−j/2} times its q = 1 position.

use serde::Serialize;

use crate::error::{QError, Result};
use crate::qcalc::bessel::{bessel_j, bessel_j_dd, bisect, SERIES_MAX_X};
use crate::qcalc::dd::Dd;

/// Largest k·r the stationary residual can certify (double-double series).
pub const MAX_CERTIFIED_X: f64 = SERIES_MAX_X;

/// Coarsest accepted grid: k·h at most π/8, eight points per half wave.
pub const MAX_PHASE_STEP: f64 = std::f64::consts::PI / 8.0;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StationarySpec {
    pub j: u32,
    pub energy: f64,
    /// q ∈ (0, 1]; q = 1 is the commutative plane
    pub q: f64,
    pub mass: f64,
    pub hbar: f64,
}

impl StationarySpec {
    fn validate(&self) -> Result<()> {
        if !(self.q > 0.0 && self.q <= 1.0) {
            return Err(QError::InvalidParameter(format!("q = {} must lie in (0, 1]", self.q)));
        }
        for (name, v) in [("energy", self.energy), ("mass", self.mass), ("hbar", self.hbar)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(QError::InvalidParameter(format!("{name} = {v} must be positive")));
            }
        }
        Ok(())
    }

    /// k = √(2mε)/ħ
    pub fn k(&self) -> f64 {
        (2.0 * self.mass * self.energy).sqrt() / self.hbar
    }

    /// k e^{−Λj/2} = k q^{j/2}
    pub fn k_eff(&self) -> f64 {
        self.k() * self.q.powf(self.j as f64 / 2.0)
    }

    /// e^{Λj} = q^{−j}
    fn shift_factor(&self) -> f64 {
        self.q.powi(-(self.j as i32))
    }
}

/// Uniform grid r_i = i·r_max/(size − 1).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadialGrid {
    pub size: usize,
    pub r_max: f64,
}

impl RadialGrid {
    pub fn step(&self) -> f64 {
        self.r_max / (self.size - 1) as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.step();
        (0..self.size).map(move |i| i as f64 * h)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StationaryState {
    pub spec: StationarySpec,
    pub grid: RadialGrid,
    pub r: Vec<f64>,
    /// radial factor N·J_j(k_eff r), real, with ∫|ψ|²r dr = 1 by the
    /// trapezoid rule; the angular factor e^{ijθ}/√(2π) and the printed time
    /// factor e^{−iħε} are left symbolic
    pub psi: Vec<f64>,
    pub norm: f64,
    pub k_eff: f64,
}

pub fn stationary_state(spec: &StationarySpec, grid: &RadialGrid) -> Result<StationaryState> {
    spec.validate()?;
    if grid.size < 3 || !(grid.r_max > 0.0 && grid.r_max.is_finite()) {
        return Err(QError::InvalidParameter(format!("grid {} points on [0, {}]", grid.size, grid.r_max)));
    }
    let k = spec.k_eff();
    if k * grid.step() > MAX_PHASE_STEP {
        return Err(QError::Resolution(format!(
            "grid too coarse: k h = {} exceeds {MAX_PHASE_STEP}",
            k * grid.step()
        )));
    }
    if k * grid.r_max > MAX_CERTIFIED_X {
        return Err(QError::OutOfRange { x: k * grid.r_max, max: MAX_CERTIFIED_X });
    }
    let r: Vec<f64> = grid.points().collect();
    let raw = r.iter().map(|&x| bessel_j(spec.j, k * x, 1e-30)).collect::<Result<Vec<f64>>>()?;
    let h = grid.step();
    let n = r.len();
    let mut mass = 0.0;
    for i in 0..n {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        mass += w * raw[i] * raw[i] * r[i];
    }
    let norm = 1.0 / (mass * h).sqrt();
    Ok(StationaryState {
        spec: *spec,
        grid: *grid,
        psi: raw.iter().map(|v| v * norm).collect(),
        r,
        norm,
        k_eff: k,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StationaryResidual {
    pub fd_step: f64,
    /// max over interior points of |Hψ − εψ| / (ε max|ψ|)
    pub max_relative: f64,
    pub per_point: Vec<f64>,
}

/// Default finite-difference step in units of 1/k_eff. Truncation error is
/// about (kh)²/12 ≈ 1e-11; double-double sampling keeps rounding far below.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Stationary residual on interior grid points, with the radial Laplacian
/// replaced by centered second-order differences of step `fd_step/k_eff`.
pub fn stationary_residual(state: &StationaryState, fd_step: f64) -> Result<StationaryResidual> {
    if !(fd_step > 0.0) {
        return Err(QError::InvalidParameter(format!("fd_step = {fd_step}")));
    }
    let s = &state.spec;
    let k = state.k_eff;
    let h = fd_step / k;
    let j2 = Dd::new((s.j * s.j) as f64);
    let pref = Dd::new(-s.hbar * s.hbar / (2.0 * s.mass) * s.shift_factor());
    let eps = Dd::new(s.energy);
    let phi = |r: Dd| bessel_j_dd(s.j, Dd::new(k) * r, 1e-32);
    let scale = state.psi.iter().fold(0.0f64, |m, v| m.max(v.abs())) / state.norm;
    let hd = Dd::new(h);
    let mut per_point = Vec::with_capacity(state.r.len().saturating_sub(2));
    for &x in &state.r[1..state.r.len() - 1] {
        let r = Dd::new(x);
        let (fm, f0, fp) = (phi(r - hd)?, phi(r)?, phi(r + hd)?);
        let d2 = (fp - Dd::new(2.0) * f0 + fm) / (hd * hd);
        let d1 = (fp - fm) / (Dd::new(2.0) * hd);
        let lap = d2 + d1 / r - j2 * f0 / (r * r);
        let res = pref * lap - eps * f0;
        per_point.push(res.abs().to_f64() / (s.energy * scale));
    }
    let max_relative = per_point.iter().cloned().fold(0.0, f64::max);
    Ok(StationaryResidual { fd_step, max_relative, per_point })
}

#[derive(Clone, Debug, Serialize)]
pub struct ZeroScalingRow {
    pub j: u32,
    pub zero_q: f64,
    pub zero_classical: f64,
    pub ratio: f64,
    /// q^{−j/2}
    pub expected: f64,
    pub relative_error: f64,
}

pub const MAX_ZERO_J: u32 = 8;

/// First positive zero of r ↦ J_j(k_eff r), by scanning and bisection in r.
pub fn first_zero(spec: &StationarySpec) -> Result<f64> {
    spec.validate()?;
    let k = spec.k_eff();
    let f = |r: f64| bessel_j(spec.j, k * r, 1e-30);
    let step = 0.05 / k;
    let mut a = step;
    let mut fa = f(a)?;
    while k * (a + step) < 100.0 {
        let b = a + step;
        let fb = f(b)?;
        if fa.signum() != fb.signum() {
            return bisect(f, a, b, 1e-15);
        }
        a = b;
        fa = fb;
    }
    Err(QError::Bracketing(format!("no zero of psi_{} found", spec.j)))
}

/// zero(j, q)/zero(j, 1) against q^{−j/2} for j = 0..=jmax.
pub fn zero_scaling_report(jmax: u32, q: f64, energy: f64, mass: f64, hbar: f64) -> Result<Vec<ZeroScalingRow>> {
    if jmax > MAX_ZERO_J {
        return Err(QError::InvalidParameter(format!("jmax {jmax} above {MAX_ZERO_J}")));
    }
    (0..=jmax)
        .map(|j| {
            let spec = StationarySpec { j, energy, q, mass, hbar };
            let zq = first_zero(&spec)?;
            let z1 = first_zero(&StationarySpec { q: 1.0, ..spec })?;
            let ratio = zq / z1;
            let expected = q.powf(-(j as f64) / 2.0);
            Ok(ZeroScalingRow {
                j,
                zero_q: zq,
                zero_classical: z1,
                ratio,
                expected,
                relative_error: (ratio - expected).abs() / expected,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(j: u32, q: f64) -> StationarySpec {
        StationarySpec { j, energy: 1.0, q, mass: 1.0, hbar: 1.0 }
    }

    const GRID: RadialGrid = RadialGrid { size: 401, r_max: 15.0 };

    #[test]
    fn j_zero_is_q_independent() {
        let a = stationary_state(&spec(0, 0.9), &GRID).unwrap();
        let b = stationary_state(&spec(0, 1.0), &GRID).unwrap();
        assert!(a.psi.iter().zip(&b.psi).all(|(x, y)| x.to_bits() == y.to_bits()));
    }

    #[test]
    fn vanishes_at_origin_for_positive_j() {
        for j in 1..=5 {
            assert_eq!(stationary_state(&spec(j, 0.9), &GRID).unwrap().psi[0], 0.0);
        }
    }

    #[test]
    fn residual_below_tolerance() {
        for j in 0..=5 {
            let s = stationary_state(&spec(j, 0.9), &GRID).unwrap();
            let r = stationary_residual(&s, DEFAULT_FD_STEP).unwrap();
            assert!(r.max_relative < 1e-8, "j = {j}: {}", r.max_relative);
        }
    }

    #[test]
    fn residual_converges_at_second_order() {
        let s = stationary_state(&spec(2, 0.9), &GRID).unwrap();
        let a = stationary_residual(&s, 2e-2).unwrap().max_relative;
        let b = stationary_residual(&s, 1e-2).unwrap().max_relative;
        assert!((a / b - 4.0).abs() < 0.1, "{}", a / b);
    }

    #[test]
    fn wrong_scaling_is_detected() {
        // sampling J_j(kr) without the q^{j/2} shrink leaves an O(1) residual
        let mut s = stationary_state(&spec(2, 0.9), &GRID).unwrap();
        s.k_eff = spec(2, 0.9).k();
        assert!(stationary_residual(&s, DEFAULT_FD_STEP).unwrap().max_relative > 1e-2);
    }

    #[test]
    fn zero_ratios() {
        let rows = zero_scaling_report(5, 0.9, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(rows[0].ratio, 1.0);
        assert!((rows[1].ratio - 0.9f64.powf(-0.5)).abs() < 1e-8);
        assert!((rows[1].ratio - 1.0541).abs() < 1e-4);
        // base zero of J_1 from an independent reference value, k = √2
        assert!((rows[1].zero_classical * 2f64.sqrt() - 3.831_705_970_207_512).abs() < 1e-9);
        assert!(rows.windows(2).all(|w| w[1].ratio > w[0].ratio));
        assert!(rows.iter().all(|r| r.relative_error < 1e-8));
    }

    #[test]
    fn invalid_inputs() {
        assert!(matches!(
            stationary_state(&spec(0, 0.9), &RadialGrid { size: 11, r_max: 15.0 }),
            Err(QError::Resolution(_))
        ));
        assert!(stationary_state(&spec(0, 1.5), &GRID).is_err());
        assert!(stationary_state(&spec(0, 0.9), &RadialGrid { size: 4001, r_max: 40.0 }).is_err());
        assert!(zero_scaling_report(9, 0.9, 1.0, 1.0, 1.0).is_err());
    }
}
