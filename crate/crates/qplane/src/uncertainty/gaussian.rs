//! Gaussian radial packet f = e^{−r²/ε²} and the right side (Λ/2)|(f, r̂f)| of
//! the (r̂, ô) inequality. The angle ô has no realization here, so only the
//! bound side is reported.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use super::report::UncertaintyReport;
use crate::error::{QError, Result};
use crate::planefun::{Flavor, RadialPacket};
use crate::qcalc::DeformationParams;

/// Fewest lattice points that must carry 99% of a sampled packet's weight.
pub const MIN_RESOLVED_POINTS: usize = 8;

/// Errors unless at least `min_points` lattice points are needed to collect
/// 99% of ‖f‖².
pub fn resolution_check(f: &RadialPacket, min_points: usize) -> Result<usize> {
    let w = if f.flavor == Flavor::H { 2 } else { 1 };
    let mut mass: Vec<f64> = f.points().map(|(_, r, v)| v.norm_sqr() * r.powi(w)).collect();
    let total: f64 = mass.iter().sum();
    mass.sort_by(|a, b| b.total_cmp(a));
    let mut acc = 0.0;
    let mut n = 0;
    for m in mass {
        if acc >= 0.99 * total {
            break;
        }
        acc += m;
        n += 1;
    }
    if n < min_points {
        return Err(QError::Resolution(format!("{n} lattice points carry 99% of the packet; need {min_points}")));
    }
    Ok(n)
}

/// Normalized e^{−r²/ε²} in sector 0 of H.
pub fn gaussian_packet(eps: f64, params: &DeformationParams) -> Result<RadialPacket> {
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(QError::InvalidParameter(format!("eps = {eps} must be positive")));
    }
    let f = RadialPacket::sample(0, Flavor::H, params, 1e-15, |r| Complex64::new((-(r / eps).powi(2)).exp(), 0.0))
        .map_err(|e| match e {
            QError::NonSummable { cap } => {
                QError::Resolution(format!("eps = {eps} lies outside the lattice span (|k| <= {cap})"))
            }
            e => e,
        })?;
    resolution_check(&f, MIN_RESOLVED_POINTS)?;
    f.normalized()
}

pub fn gaussian_packet_report(eps: f64, params: &DeformationParams) -> Result<UncertaintyReport> {
    let f = gaussian_packet(eps, params)?;
    let rf = f.r_hat();
    let mean_r = f.inner(&rf)?.re;
    let r2 = rf.inner(&rf)?.re;
    let dr = (r2 - mean_r * mean_r).max(0.0).sqrt();
    let lambda = params.lambda;
    let target = (PI / 2.0).sqrt();
    let bound = lambda / 2.0 * mean_r.abs();
    let mut rep = UncertaintyReport {
        label: format!("gaussian eps={eps}"),
        params: *params,
        delta_1: Some(dr),
        delta_2: None,
        product: None,
        anticommutator: 0.0,
        commutator: lambda * mean_r,
        robertson_bound: bound,
        bound,
        equality_gap: None,
        equality_case: false,
        values: BTreeMap::new(),
    };
    rep.set("eps", eps);
    rep.set("mean_r", mean_r);
    rep.set("mean_r_over_eps", mean_r / eps);
    rep.set("target_ratio", target);
    rep.set("relative_error", (mean_r / eps - target).abs() / target);
    rep.set("stated_bound", lambda / 2.0 * target * eps);
    // with the invariant measure dξ = 2r dr the continuum moment is
    // ∫r²e^{−2r²/ε²}dr / ∫re^{−2r²/ε²}dr = ½√(π/2)ε
    rep.set("continuum_ratio", target / 2.0);
    rep.set("continuum_relative_error", (mean_r / eps - target / 2.0).abs() / (target / 2.0));
    rep.check_finite()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(q: f64, eps: f64) -> UncertaintyReport {
        gaussian_packet_report(eps, &DeformationParams::unit(q).unwrap()).unwrap()
    }

    /// Riemann-sum oracle for the same ratio, independent of the lattice code.
    fn riemann_ratio(eps: f64) -> f64 {
        let h = 1e-4;
        let (mut num, mut den) = (0.0, 0.0);
        for i in 0..(10.0 * eps / h) as usize {
            let r = (i as f64 + 0.5) * h;
            let g = (-2.0 * r * r / (eps * eps)).exp() * 2.0 * r;
            num += r * g;
            den += g;
        }
        num / den
    }

    #[test]
    fn continuum_moment_oracle() {
        let r = report(0.999, 1.0);
        let oracle = riemann_ratio(1.0);
        assert!((oracle - 0.5 * (PI / 2.0).sqrt()).abs() < 1e-6);
        assert!((r.value("mean_r").unwrap() - oracle).abs() / oracle < 1e-3, "{:?}", r.values);
    }

    #[test]
    fn bound_is_linear_in_eps() {
        // the lattice is scale free only up to its offset, hence 1e-6 rather
        // than exact
        let p = DeformationParams::unit(0.99).unwrap();
        let a = report(0.99, 1.0);
        let b = report(0.99, 2.0);
        assert!((b.bound / a.bound - 2.0).abs() < 1e-6, "{}", b.bound / a.bound);
        // shifting ε by a whole lattice step is an exact relabeling
        let c = gaussian_packet_report(1.0 / p.q, &p).unwrap();
        assert!((c.bound * p.q / a.bound - 1.0).abs() < 1e-12);
    }

    #[test]
    fn commutative_limit() {
        let a = report(0.9999, 1.0).bound;
        let b = report(0.999, 1.0).bound;
        assert!(a < b / 5.0 && a < 1e-4);
    }

    #[test]
    fn coarse_lattice_is_rejected() {
        let p = DeformationParams::unit(0.2).unwrap();
        assert!(matches!(gaussian_packet_report(1.0, &p), Err(QError::Resolution(_))));
        assert!(gaussian_packet_report(-1.0, &p).is_err());
    }
}
