//! States on the truncated circle basis and their moments.

use num_complex::Complex64;
use serde::Serialize;

use super::operator::CircleOperator;
use crate::error::{QError, Result};

/// Coefficients beyond the operator window are accepted only below this
/// fraction of the largest coefficient.
pub const TAIL_TOL: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq)]
pub struct CircleState {
    jmax: i64,
    coeffs: Vec<Complex64>,
}

impl CircleState {
    pub fn new(jmax: i64, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != (2 * jmax + 1) as usize {
            return Err(QError::InvalidParameter(format!(
                "{} coefficients for truncation J = {jmax}",
                coeffs.len()
            )));
        }
        Ok(CircleState { jmax, coeffs })
    }

    /// Basis vector e_j.
    pub fn basis(jmax: i64, j: i64) -> Result<Self> {
        if j.abs() > jmax {
            return Err(QError::InvalidParameter(format!("e_{j} outside |j| <= {jmax}")));
        }
        let mut c = vec![Complex64::new(0.0, 0.0); (2 * jmax + 1) as usize];
        c[(j + jmax) as usize] = Complex64::new(1.0, 0.0);
        Ok(CircleState { jmax, coeffs: c })
    }

    pub fn jmax(&self) -> i64 {
        self.jmax
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: i64) -> Complex64 {
        self.coeffs[(j + self.jmax) as usize]
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if !(n > 0.0) || !n.is_finite() {
            return Err(QError::NonNormalizable(format!("norm {n}")));
        }
        Ok(CircleState { jmax: self.jmax, coeffs: self.coeffs.iter().map(|c| c / n).collect() })
    }

    /// Largest |c_j| over |j| ≥ J − 2 relative to the largest coefficient.
    pub fn edge_tail(&self) -> f64 {
        let peak = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let j = self.jmax;
        (-j..=j).filter(|i| i.abs() >= j - 2).map(|i| self.coeff(i).norm()).fold(0.0, f64::max) / peak
    }

    /// Fails when a non-negligible coefficient sits outside the window.
    pub fn check_window(&self, op: &CircleOperator) -> Result<()> {
        let (lo, hi) = op.window();
        let peak = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        for j in -self.jmax..=self.jmax {
            if (j < lo || j > hi) && self.coeff(j).norm() > TAIL_TOL * peak {
                return Err(QError::WindowViolation { column: j, lo, hi });
            }
        }
        Ok(())
    }

    pub fn inner(&self, o: &Self) -> Complex64 {
        self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.conj() * b).sum()
    }
}

/// ⟨u, A u⟩.
pub fn expectation(u: &CircleState, op: &CircleOperator) -> Result<Complex64> {
    assert_eq!(u.jmax, op.jmax(), "state and operator on different truncations");
    u.check_window(op)?;
    let au = op.apply(&u.coeffs);
    Ok(u.coeffs.iter().zip(&au).map(|(a, b)| a.conj() * b).sum())
}

/// ‖A u‖² − |⟨u, A u⟩|², equal to ⟨A²⟩ − ⟨A⟩² for self-adjoint A.
pub fn variance(u: &CircleState, op: &CircleOperator) -> Result<f64> {
    let m = expectation(u, op)?;
    let au = op.apply(&u.coeffs);
    let n2: f64 = au.iter().map(|c| c.norm_sqr()).sum();
    Ok((n2 - m.norm_sqr()).max(0.0))
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussianStateInfo {
    /// centre index log(amplitude/scale)/Λ
    pub centre: f64,
    pub required_j: i64,
    pub edge_tail: f64,
    /// bound on the difference between the one-period Gaussian and its
    /// periodization, e^{−π²/(2Λ)}
    pub periodization_bound: f64,
}

/// Smallest truncation holding the angle Gaussian centred at
/// log(amplitude/scale)/Λ down to coefficients below `TAIL_TOL`.
pub fn gaussian_required_j(amplitude: f64, scale: f64, lambda: f64) -> i64 {
    let alpha = (amplitude / scale).ln() / lambda;
    (alpha.abs() + (-2.0 * TAIL_TOL.ln() / lambda).sqrt()).ceil() as i64 + 2
}

/// Fourier coefficients of the angle Gaussian
/// u(φ) ∝ exp(−(θ − φ)²/(2Λ) + i α (φ − θ)), α = log(amplitude/scale)/Λ,
/// in the basis e_j ∝ e^{ijφ}: c_j ∝ e^{−ijθ} e^{−Λ(j − α)²/2}.
pub fn gaussian_angle_state(
    theta: f64,
    amplitude: f64,
    scale: f64,
    lambda: f64,
    jmax: i64,
) -> Result<(CircleState, GaussianStateInfo)> {
    if !(amplitude > 0.0) || !(scale > 0.0) || !(lambda > 0.0) {
        return Err(QError::InvalidParameter(format!(
            "amplitude {amplitude}, scale {scale}, Λ {lambda} must be positive"
        )));
    }
    let alpha = (amplitude / scale).ln() / lambda;
    let required = gaussian_required_j(amplitude, scale, lambda);
    if jmax < required {
        return Err(QError::TruncationTooSmall { needed: required, have: jmax });
    }
    let coeffs = (-jmax..=jmax)
        .map(|j| {
            let jf = j as f64;
            Complex64::from_polar((-lambda * (jf - alpha).powi(2) / 2.0).exp(), -jf * theta)
        })
        .collect();
    let state = CircleState::new(jmax, coeffs)?.normalized()?;
    let info = GaussianStateInfo {
        centre: alpha,
        required_j: required,
        edge_tail: state.edge_tail(),
        periodization_bound: (-std::f64::consts::PI.powi(2) / (2.0 * lambda)).exp(),
    };
    Ok((state, info))
}
