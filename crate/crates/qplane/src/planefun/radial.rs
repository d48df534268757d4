//! Angular-sector functions F(r)e^{ijo} with the radial profile sampled on
//! the lattice r_k = r0 q^{−k−1/2}, the square roots of the spectrum of ξ.
//!
//! Two scalar products are in use. On H, (f, g) = ψ(f g*) reduces per sector
//! to (1 − q²) Σ r_k² F Ḡ; on H′, (Ψ, Φ) = ψ(r⁻¹ΨΦ*) to (1 − q²) Σ r_k ΨΦ̄.
//! Both are returned antilinear in the first argument.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{QError, Result};
use crate::qcalc::{DeformationParams, LatticeFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Flavor {
    /// profile F of f = F(r)e^{ijo} in H
    H,
    /// profile Ψ = r^{1/2}F in H′
    HPrime,
}

impl Flavor {
    fn weight_power(self) -> i32 {
        match self {
            Flavor::H => 2,
            Flavor::HPrime => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RadialPacket {
    pub j: i64,
    pub flavor: Flavor,
    pub q: f64,
    pub profile: LatticeFunction,
}

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

impl RadialPacket {
    pub fn from_profile(j: i64, flavor: Flavor, q: f64, profile: LatticeFunction) -> Result<Self> {
        let want_base = profile.base * q.sqrt();
        if (profile.ratio * q - 1.0).abs() > 1e-12 || !(want_base > 0.0) {
            return Err(QError::InvalidParameter("profile must live on r_k = r0 q^(-k-1/2)".into()));
        }
        Ok(RadialPacket { j, flavor, q, profile: LatticeFunction { angular: j, ..profile } })
    }

    /// Values `values[i]` at k = start + i; the profile is taken to vanish
    /// above the stored range.
    pub fn from_values(j: i64, flavor: Flavor, params: &DeformationParams, start: i64, values: Vec<Complex64>) -> Result<Self> {
        let mut lf = LatticeFunction::new(params.r0 / params.q.sqrt(), 1.0 / params.q, start, values, j)?;
        lf.decays_hi = true;
        Self::from_profile(j, flavor, params.q, lf)
    }

    /// Samples `f` outward until the weighted amplitude r^{w/2}|f| stays below
    /// `tol` relative to its peak on both sides.
    pub fn sample(j: i64, flavor: Flavor, params: &DeformationParams, tol: f64, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let lf = LatticeFunction::sample_decaying(
            params.r0 / params.q.sqrt(),
            1.0 / params.q,
            j,
            flavor.weight_power() as f64 / 2.0,
            tol,
            params.index_cap(),
            f,
        )?;
        Self::from_profile(j, flavor, params.q, lf)
    }

    pub fn r0(&self) -> f64 {
        self.profile.base * self.q.sqrt()
    }

    /// Stored index range [lo, hi).
    pub fn range(&self) -> (i64, i64) {
        (self.profile.start, self.profile.end())
    }

    pub fn point(&self, k: i64) -> f64 {
        self.profile.point(k)
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, f64, Complex64)> + '_ {
        self.profile.points()
    }

    pub fn get(&self, k: i64) -> Result<Complex64> {
        self.profile.get(k)
    }

    fn with_profile(&self, j: i64, profile: LatticeFunction) -> Self {
        RadialPacket { j, flavor: self.flavor, q: self.q, profile: LatticeFunction { angular: j, ..profile } }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.with_profile(self.j, self.profile.scale(c))
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        self.with_profile(self.j, self.profile.map(f))
    }

    /// Pointwise combination on the common range; sectors must agree.
    pub fn combine(&self, o: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.j != o.j || self.flavor != o.flavor {
            return Err(QError::InvalidParameter("combining packets from different sectors or spaces".into()));
        }
        let lo = self.profile.start.max(o.profile.start);
        let hi = self.profile.end().max(o.profile.end());
        let values = (lo..hi)
            .map(|k| Ok(f(self.get(k)?, o.get(k)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut lf = LatticeFunction::new(self.profile.base, self.profile.ratio, lo, values, self.j)?;
        lf.decays_hi = self.profile.decays_hi && o.profile.decays_hi;
        Ok(self.with_profile(self.j, lf))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.combine(o, |a, b| a - b)
    }

    /// Weighted lattice inner product; distinct sectors are orthogonal.
    pub fn inner(&self, o: &Self) -> Result<Complex64> {
        if self.flavor != o.flavor {
            return Err(QError::InvalidParameter("inner product across H and H'".into()));
        }
        if self.j != o.j {
            return Ok(ZERO);
        }
        let lo = self.profile.start.max(o.profile.start);
        let hi = self.profile.end().min(o.profile.end());
        let p = self.flavor.weight_power();
        let mut acc = ZERO;
        for k in lo..hi {
            let r = self.point(k);
            acc += self.get(k)?.conj() * o.get(k)? * r.powi(p);
        }
        Ok(acc * (1.0 - self.q * self.q))
    }

    pub fn norm(&self) -> Result<f64> {
        Ok(self.inner(self)?.re.max(0.0).sqrt())
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm()?;
        if !(n > 0.0) || !n.is_finite() {
            return Err(QError::NonNormalizable(format!("norm {n}")));
        }
        Ok(self.scale(Complex64::new(1.0 / n, 0.0)))
    }

    /// Ψ = r^{1/2}F.
    pub fn to_hprime(&self) -> Result<Self> {
        match self.flavor {
            Flavor::H => Ok(RadialPacket { flavor: Flavor::HPrime, ..self.map(|r, v| v * r.sqrt()) }),
            Flavor::HPrime => Err(QError::InvalidParameter("packet already in H'".into())),
        }
    }

    /// F = r^{−1/2}Ψ.
    pub fn to_h(&self) -> Result<Self> {
        match self.flavor {
            Flavor::HPrime => Ok(RadialPacket { flavor: Flavor::H, ..self.map(|r, v| v / r.sqrt()) }),
            Flavor::H => Err(QError::InvalidParameter("packet already in H".into())),
        }
    }

    /// `c₀F(qr) + c₁F(r) + c₂F(r/q)` with r-dependent weights.
    fn stencil(&self, j: i64, w: impl Fn(f64) -> [Complex64; 3]) -> Result<Self> {
        Ok(self.with_profile(j, self.profile.three_point(self.q, w)?))
    }

    fn require(&self, flavor: Flavor) -> Result<()> {
        if self.flavor == flavor {
            Ok(())
        } else {
            Err(QError::InvalidParameter(format!("operator defined on {flavor:?} profiles")))
        }
    }

    /// R(p₊)f = (iq⁻¹/(1 − q⁻²)) r⁻¹[F(qr) − q⁻ʲF(r)] e^{i(j−1)o}.
    pub fn r_p_plus(&self) -> Result<Self> {
        self.require(Flavor::H)?;
        let q = self.q;
        let qj = q.powi(-self.j as i32);
        self.stencil(self.j - 1, |r| {
            let c = Complex64::new(0.0, 1.0 / q / ((1.0 - 1.0 / (q * q)) * r));
            [c, -c * qj, ZERO]
        })
    }

    /// R(p₋)f = (i/(1 − q²)) r⁻¹[F(r/q) − q⁻ʲF(r)] e^{i(j+1)o}.
    pub fn r_p_minus(&self) -> Result<Self> {
        self.require(Flavor::H)?;
        let q = self.q;
        let qj = q.powi(-self.j as i32);
        self.stencil(self.j + 1, |r| {
            let c = Complex64::new(0.0, 1.0 / ((1.0 - q * q) * r));
            [ZERO, -c * qj, c]
        })
    }

    /// R(kᵖ) multiplies sector j by q^{−2pj}.
    pub fn r_k(&self, power: i64) -> Self {
        self.scale(Complex64::new(self.q.powf((-2 * power * self.j) as f64), 0.0))
    }

    /// Radial momentum. On H: iħ/((1 − q²)r)[F(r/q) − qF(qr)], the composition
    /// p̂₊e^{iô} + e^{−iô}p̂₋ (sector independent). On H′: iħ D̂_qΨ with
    /// D̂_qΨ = (Ψ(qr) − Ψ(r/q))/((q − q⁻¹)r).
    pub fn radial_p(&self, hbar: f64) -> Result<Self> {
        let q = self.q;
        match self.flavor {
            Flavor::H => self.stencil(self.j, |r| {
                let c = Complex64::new(0.0, hbar / ((1.0 - q * q) * r));
                [-c * q, ZERO, c]
            }),
            Flavor::HPrime => self.stencil(self.j, |r| {
                let c = Complex64::new(0.0, hbar / ((q - 1.0 / q) * r));
                [c, ZERO, -c]
            }),
        }
    }

    /// r̂ f = f r: r passing e^{ijo} leaves the factor q^{−j}.
    pub fn r_hat(&self) -> Self {
        let qj = self.q.powi(-self.j as i32);
        self.map(|r, v| v * (qj * r))
    }

    /// â Ψ = (q^{1/2}Ψ(qr) + q^{−1/2}Ψ(r/q))/(q^{1/2} + q^{−1/2}).
    pub fn a_hat(&self) -> Result<Self> {
        let s = self.q.sqrt();
        let d = s + 1.0 / s;
        self.stencil(self.j, |_| [Complex64::new(s / d, 0.0), ZERO, Complex64::new(1.0 / (s * d), 0.0)])
    }

    /// l̂ acts as ħj.
    pub fn l_hat(&self, hbar: f64) -> Self {
        self.scale(Complex64::new(hbar * self.j as f64, 0.0))
    }

    /// e^{kΛl̂/ħ} acts as q^{−kj}.
    pub fn exp_l(&self, k: i64) -> Self {
        self.scale(Complex64::new(self.q.powf((-k * self.j) as f64), 0.0))
    }

    /// ⟨A⟩ = (Ψ, AΨ)/(Ψ, Ψ).
    pub fn expectation(&self, a_psi: &Self) -> Result<Complex64> {
        Ok(self.inner(a_psi)? / self.inner(self)?)
    }
}

/// ψ(f) = (1 − q²) Σ r_k² F(r_k) for the e^{i0o} sector; other sectors have
/// zero trace.
pub fn invariant_integral(f: &RadialPacket) -> Result<Complex64> {
    if f.flavor != Flavor::H {
        return Err(QError::InvalidParameter("invariant integral takes an H profile".into()));
    }
    if f.j != 0 {
        return Ok(ZERO);
    }
    if !f.profile.decays_hi {
        return Err(QError::NonSummable { cap: f.profile.end() });
    }
    Ok(f.points().map(|(_, r, v)| v * r * r).sum::<Complex64>() * (1.0 - f.q * f.q))
}
