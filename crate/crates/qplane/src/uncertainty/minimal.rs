//! Minimal radial packets: p̂′Ψ = c r̂′Ψ with c = −i|c|q⁻ʲ, on H′.
//!
//! With d = ⟨p̂⟩ − c⟨r̂⟩ the equation reads iħD̂Ψ = (c r̂ + d)Ψ. At d = 0 the
//! exact solution is E_{q²}(−|c|q⁻²ʲr²/((q + q⁻¹)ħ)), which is not
//! square-summable on the lattice. Square-summable packets with symmetric p̂
//! need ⟨p̂⟩ = 0, so d = i|c|q⁻ʲ⟨r̂⟩ =: i·dᵢ, and dᵢ is fixed by the boundary
//! condition that keeps p̂ symmetric: near r = 0 the two sublattices of the
//! three-point recurrence decouple, and the even one must tend to zero.

use num_complex::Complex64;
use serde::Serialize;

use super::gaussian::resolution_check;
use super::report::{robertson_report, UncertaintyReport};
use crate::error::{QError, Result};
use crate::planefun::{Flavor, RadialPacket};
use crate::qcalc::{q_exp_big, DeformationParams};

#[derive(Clone, Debug)]
pub struct MinimalPacket {
    pub j: i64,
    pub cmag: f64,
    /// Im d
    pub d_i: f64,
    /// normalized, on H′
    pub psi: RadialPacket,
}

#[derive(Clone, Copy, Debug)]
struct Grid {
    q: f64,
    r0: f64,
    lo: i64,
    hi: i64,
}

impl Grid {
    fn new(params: &DeformationParams, r_min: f64, r_max: f64) -> Result<Self> {
        let l = params.lambda;
        let index = |r: f64| (r / params.r0).ln() / l - 0.5;
        let lo = index(r_min).floor() as i64;
        let hi = index(r_max).ceil() as i64;
        if hi - lo > 8 * params.index_cap() {
            return Err(QError::Resolution(format!("{} lattice points needed", hi - lo)));
        }
        Ok(Grid { q: params.q, r0: params.r0, lo, hi })
    }

    fn r(&self, k: i64) -> f64 {
        self.r0 * self.q.powf(-(k as f64) - 0.5)
    }
}

/// Ψ_{k−1} = Ψ_{k+1} + (q − q⁻¹) r_k (−κq⁻²ʲr_k + dᵢ) Ψ_k / ħ from Ψ_{hi+1} = 0,
/// Ψ_hi = 1 down to k = lo − 1. Returns values for k = lo − 1 ..= hi.
fn recur(g: &Grid, j: i64, kappa: f64, hbar: f64, d_i: f64) -> Vec<f64> {
    let q = g.q;
    let kq = kappa * q.powi(-2 * j as i32);
    let n = (g.hi - g.lo + 2) as usize;
    let mut v = vec![0.0; n + 1];
    // position of index k is k − (lo − 1)
    let pos = |k: i64| (k - g.lo + 1) as usize;
    v[pos(g.hi)] = 1.0;
    for k in (g.lo..=g.hi).rev() {
        let r = g.r(k);
        let coef = (q - 1.0 / q) * r * (-kq * r + d_i) / hbar;
        v[pos(k - 1)] = v[pos(k + 1)] + coef * v[pos(k)];
        if v[pos(k - 1)].abs() > 1e200 {
            for x in v.iter_mut() {
                *x *= 1e-200;
            }
        }
    }
    v.truncate(n);
    v
}

/// Even-sublattice share of the two lowest values, in [−1, 1].
fn boundary(g: &Grid, j: i64, kappa: f64, hbar: f64, d_i: f64) -> f64 {
    let v = recur(g, j, kappa, hbar, d_i);
    let (a, b) = (v[0], v[1]);
    let (even, odd) = if (g.lo - 1).rem_euclid(2) == 0 { (a, b) } else { (b, a) };
    even / (even.abs() + odd.abs())
}

/// Packet whose ⟨r̂⟩ is near `target_r` (default 6√(ħ/|c|)): the admissible
/// dᵢ nearest |c|q⁻ʲ·target_r.
pub fn minimal_radial_packet(
    j: i64,
    cmag: f64,
    params: &DeformationParams,
    target_r: Option<f64>,
) -> Result<MinimalPacket> {
    if j < 0 {
        return Err(QError::InvalidParameter(format!("j = {j}: only chiral sectors j >= 0 are admissible")));
    }
    if !(cmag > 0.0 && cmag.is_finite()) {
        return Err(QError::InvalidParameter(format!("|c| = {cmag} must be positive")));
    }
    let (q, hbar) = (params.q, params.hbar);
    let ell = (hbar / cmag).sqrt();
    let t = target_r.unwrap_or(6.0 * ell);
    let g = Grid::new(params, 1e-7 * ell, q.powi(j as i32) * t + 19.0 * ell)?;
    let d0 = cmag * q.powi(-j as i32) * t;
    let f = |d: f64| boundary(&g, j, cmag, hbar, d);

    // expand outward from d0 until the boundary value changes sign
    let h = 1e-3 * d0;
    let mut bracket = None;
    'search: for m in 0..500 {
        for (a, b) in [(d0 - (m + 1) as f64 * h, d0 - m as f64 * h), (d0 + m as f64 * h, d0 + (m + 1) as f64 * h)] {
            if a > 0.0 && f(a) * f(b) <= 0.0 {
                bracket = Some((a, b));
                break 'search;
            }
        }
    }
    let (mut a, mut b) = bracket.ok_or_else(|| QError::Bracketing(format!("no admissible d near {d0}")))?;
    let mut fa = f(a);
    for _ in 0..64 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fa * fm <= 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    let d_i = 0.5 * (a + b);
    let values = recur(&g, j, cmag, hbar, d_i).into_iter().map(|x| Complex64::new(x, 0.0)).collect();
    let psi = RadialPacket::from_values(j, Flavor::HPrime, params, g.lo - 1, values)?;
    // the packet is an exact lattice object; only a degenerate spike is refused
    resolution_check(&psi, 3)?;
    Ok(MinimalPacket { j, cmag, d_i, psi: psi.normalized()? })
}

/// Robertson report for (p̂, r̂) with the dressed bound (ħ/2)|⟨âe^{Λl̂/ħ}⟩|
/// and the first-order value (ħ/2)(1 + Λj) alongside.
pub fn minimal_report(m: &MinimalPacket, params: &DeformationParams) -> Result<UncertaintyReport> {
    let hbar = params.hbar;
    let psi = &m.psi;
    let p_psi = psi.radial_p(hbar)?;
    let r_psi = psi.r_hat();
    let rep = robertson_report(&format!("minimal radial j={} |c|={}", m.j, m.cmag), params, psi, &p_psi, &r_psi)?;
    let dressed_mean = psi.expectation(&psi.a_hat()?.exp_l(1))?;
    let dressed = hbar / 2.0 * dressed_mean.norm();
    let first_order = hbar / 2.0 * (1.0 + params.lambda * m.j as f64).abs();
    let l = psi.expectation(&psi.l_hat(hbar))?;
    let mut rep = rep.with_bound(dressed);
    rep.set("d_i", m.d_i);
    rep.set("<a e^(L l/hbar)>.re", dressed_mean.re);
    rep.set("<a e^(L l/hbar)>.im", dressed_mean.im);
    rep.set("dressed_bound", dressed);
    rep.set("first_order_bound", first_order);
    rep.set("first_order_gap", rep.product.unwrap_or(f64::NAN) - first_order);
    rep.set("<l>", l.re);
    rep.set("l_eigenvalue_error", (l - hbar * m.j as f64).norm());
    rep.check_finite()
}

pub fn minimal_radial_packet_report(j: i64, cmag: f64, params: &DeformationParams) -> Result<UncertaintyReport> {
    minimal_report(&minimal_radial_packet(j, cmag, params, None)?, params)
}

/// max |iħD̂Ψ − c r̂Ψ| / max |c r̂Ψ| for the d = 0 series solution, over lattice
/// points with r ≤ `r_max`.
pub fn d0_eigen_residual(j: i64, cmag: f64, params: &DeformationParams, r_max: f64) -> Result<f64> {
    let (q, hbar) = (params.q, params.hbar);
    let beta = -cmag * q.powi(-2 * j as i32) / ((q + 1.0 / q) * hbar);
    let psi = |r: f64| q_exp_big(Complex64::new(beta * r * r, 0.0), q, 1e-17);
    let c = Complex64::new(0.0, -cmag * q.powi(-j as i32));
    let g = Grid::new(params, 1e-3 * r_max, r_max)?;
    let (mut worst, mut scale) = (0.0f64, 0.0f64);
    for k in g.lo..=g.hi {
        let r = g.r(k);
        let d = (psi(q * r)? - psi(r / q)?) / ((q - 1.0 / q) * r);
        let rhs = c * q.powi(-j as i32) * r * psi(r)?;
        worst = worst.max((Complex64::i() * hbar * d - rhs).norm());
        scale = scale.max(rhs.norm());
    }
    Ok(worst / scale)
}

#[derive(Clone, Debug, Serialize)]
pub struct LambdaFit {
    pub lambdas: Vec<f64>,
    pub gaps: Vec<f64>,
    /// least-squares slope of ln|gap| against ln Λ
    pub slope: f64,
}

/// Scaling of the gap between Δp̂Δr̂ and (ħ/2)(1 + Λj) over several q.
pub fn first_order_gap_fit(j: i64, cmag: f64, qs: &[f64]) -> Result<LambdaFit> {
    let mut lambdas = Vec::new();
    let mut gaps = Vec::new();
    for &q in qs {
        let p = DeformationParams::unit(q)?;
        let r = minimal_radial_packet_report(j, cmag, &p)?;
        lambdas.push(p.lambda);
        gaps.push(r.value("first_order_gap").expect("set by minimal_report"));
    }
    let xs: Vec<f64> = lambdas.iter().map(|l| l.ln()).collect();
    let ys: Vec<f64> = gaps.iter().map(|g| g.abs().ln()).collect();
    let n = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    Ok(LambdaFit { lambdas, gaps, slope: sxy / sxx })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(q: f64) -> DeformationParams {
        DeformationParams::unit(q).unwrap()
    }

    #[test]
    fn d0_series_solves_equation() {
        for j in 0..=2 {
            let r = d0_eigen_residual(j, 1.0, &p(0.9), 3.0).unwrap();
            assert!(r < 1e-10, "j={j}: {r}");
        }
    }

    #[test]
    fn dressed_bound_is_saturated() {
        for j in 0..=2 {
            let r = minimal_radial_packet_report(j, 1.0, &p(0.9)).unwrap();
            assert!(r.equality_gap.unwrap().abs() < 1e-8, "j={j}: {r:?}");
            assert!(r.equality_case, "{:?}", r.values);
            assert!(r.value("l_eigenvalue_error").unwrap() < 1e-14);
            assert!(r.value("mean_1.re").unwrap().abs() < 1e-10, "<p> must be real zero");
            assert!(r.value("mean_1.im").unwrap().abs() < 1e-10);
        }
    }

    #[test]
    fn packet_sits_near_target() {
        let m = minimal_radial_packet(1, 1.0, &p(0.9), None).unwrap();
        let mean = m.psi.expectation(&m.psi.r_hat()).unwrap().re;
        assert!((mean - 6.0).abs() < 0.8, "{mean}");
        // dᵢ = |c|q⁻ʲ⟨r̂⟩
        assert!((m.d_i - 0.9f64.powi(-1) * mean).abs() < 1e-8 * m.d_i, "{} vs {mean}", m.d_i);
    }

    #[test]
    fn first_order_gap_is_quadratic() {
        let fit = first_order_gap_fit(0, 1.0, &[0.99, 0.995, 0.999]).unwrap();
        assert!((fit.slope - 2.0).abs() < 0.2, "{fit:?}");
    }

    #[test]
    fn invalid_inputs() {
        assert!(minimal_radial_packet(-1, 1.0, &p(0.9), None).is_err());
        assert!(minimal_radial_packet(0, 0.0, &p(0.9), None).is_err());
        assert!(matches!(minimal_radial_packet(0, 1.0, &p(0.3), None), Err(QError::Resolution(_)) | Err(QError::Bracketing(_))));
    }
}
