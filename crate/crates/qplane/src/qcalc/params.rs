use serde::Serialize;

use crate::error::{QError, Result};

/// Deformation parameter and physical scales.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DeformationParams {
    pub q: f64,
    pub lambda: f64,
    pub r0: f64,
    pub p0: f64,
    pub hbar: f64,
    pub m: f64,
}

impl DeformationParams {
    pub fn new(q: f64, r0: f64, p0: f64, hbar: f64, m: f64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(QError::InvalidParameter(format!("q = {q} must lie in (0, 1)")));
        }
        for (name, v) in [("r0", r0), ("p0", p0), ("hbar", hbar), ("m", m)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(QError::InvalidParameter(format!("{name} = {v} must be positive")));
            }
        }
        Ok(DeformationParams { q, lambda: -q.ln(), r0, p0, hbar, m })
    }

    /// Unit scales r0 = p0 = ħ = m = 1.
    pub fn unit(q: f64) -> Result<Self> {
        Self::new(q, 1.0, 1.0, 1.0, 1.0)
    }

    pub fn tanh_lambda(&self) -> f64 {
        (1.0 - self.q * self.q) / (1.0 + self.q * self.q)
    }

    /// Lattice index cap: the default 2000, widened so the lattice spans
    /// about e^±40 around r0 for q close to 1.
    pub fn index_cap(&self) -> i64 {
        2000.max((40.0 / self.lambda).ceil() as i64)
    }
}

/// Series term cap, overridable through `QPLANE_MAX_TERMS`.
pub fn max_terms() -> usize {
    std::env::var("QPLANE_MAX_TERMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_q_outside_unit_interval() {
        assert!(DeformationParams::unit(1.5).is_err());
        assert!(DeformationParams::unit(1.0).is_err());
        assert!(DeformationParams::unit(0.0).is_err());
        let p = DeformationParams::unit(0.9).unwrap();
        assert!((p.lambda - 0.9f64.ln().abs()).abs() < 1e-15);
    }
}
