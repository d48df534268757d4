//! Both sides of ΔX₁ΔX₂ ≥ ½|⟨{X₁′, X₂′}⟩ + i⟨X₃⟩|, [X₁, X₂] = iX₃, computed
//! from ψ, X₁ψ and X₂ψ alone.
//!
//! For symmetric X₁, X₂ and A = X₁′ψ, B = X₂′ψ:
//!   ⟨{X₁′, X₂′}⟩ = ((A, B) + (B, A))/‖ψ‖²,  i⟨X₃⟩ = ((A, B) − (B, A))/‖ψ‖²,
//! so the right side is |(A, B)|/‖ψ‖² and the inequality is Cauchy–Schwarz.
//! Equality holds iff A = cB; with c pure imaginary the anticommutator drops.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{QError, Result};
use crate::planefun::{MultiSector, RadialPacket};
use crate::qcalc::DeformationParams;

/// Vectors of a pre-Hilbert space with the product antilinear in the first slot.
pub trait StateVector: Sized {
    fn inner(&self, o: &Self) -> Result<Complex64>;
    /// a·self + b·o
    fn lin(&self, a: Complex64, o: &Self, b: Complex64) -> Result<Self>;
}

impl StateVector for RadialPacket {
    fn inner(&self, o: &Self) -> Result<Complex64> {
        RadialPacket::inner(self, o)
    }

    fn lin(&self, a: Complex64, o: &Self, b: Complex64) -> Result<Self> {
        self.combine(o, |u, v| a * u + b * v)
    }
}

impl StateVector for MultiSector {
    fn inner(&self, o: &Self) -> Result<Complex64> {
        MultiSector::inner(self, o)
    }

    fn lin(&self, a: Complex64, o: &Self, b: Complex64) -> Result<Self> {
        MultiSector::lin(self, a, o, b)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UncertaintyReport {
    pub label: String,
    pub params: DeformationParams,
    /// None where the operator has no realization (the angle ô)
    pub delta_1: Option<f64>,
    pub delta_2: Option<f64>,
    pub product: Option<f64>,
    /// ⟨{X₁′, X₂′}⟩
    pub anticommutator: f64,
    /// ⟨X₃⟩
    pub commutator: f64,
    /// ½|⟨{X₁′, X₂′}⟩ + i⟨X₃⟩|
    pub robertson_bound: f64,
    /// the closed-form right side under test
    pub bound: f64,
    /// (product − bound)/bound; None without a product
    pub equality_gap: Option<f64>,
    /// A = cB with c pure imaginary, within 1e-8
    pub equality_case: bool,
    /// every intermediate expectation value, by name
    pub values: BTreeMap<String, f64>,
}

impl UncertaintyReport {
    pub fn margin(&self) -> Option<f64> {
        self.product.map(|p| p - self.bound)
    }

    /// Replaces the closed-form bound and recomputes the gap.
    pub fn with_bound(mut self, bound: f64) -> Self {
        self.bound = bound;
        self.equality_gap = self.product.map(|p| (p - bound) / bound);
        self
    }

    pub fn value(&self, name: &str) -> Option<f64> {
        self.values.get(name).copied()
    }

    pub(crate) fn set(&mut self, name: &str, v: f64) {
        self.values.insert(name.to_string(), v);
    }

    /// Errors on any non-finite entry.
    pub fn check_finite(self) -> Result<Self> {
        let mut all = vec![
            ("anticommutator", self.anticommutator),
            ("commutator", self.commutator),
            ("robertson_bound", self.robertson_bound),
            ("bound", self.bound),
        ];
        for (n, v) in [("delta_1", self.delta_1), ("delta_2", self.delta_2), ("product", self.product)] {
            if let Some(v) = v {
                all.push((n, v));
            }
        }
        all.extend(self.values.iter().map(|(k, v)| (k.as_str(), *v)));
        if let Some((n, v)) = all.iter().find(|(_, v)| !v.is_finite()) {
            return Err(QError::NonFinite(format!("{}: {n} = {v}", self.label)));
        }
        Ok(self)
    }
}

const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Report for symmetric X₁, X₂ given ψ, X₁ψ, X₂ψ. The bound is the Robertson
/// right side until replaced with [`UncertaintyReport::with_bound`].
pub fn robertson_report<V: StateVector>(
    label: &str,
    params: &DeformationParams,
    psi: &V,
    x1_psi: &V,
    x2_psi: &V,
) -> Result<UncertaintyReport> {
    let n = psi.inner(psi)?.re;
    if !(n > 0.0) || !n.is_finite() {
        return Err(QError::NonNormalizable(format!("{label}: norm² {n}")));
    }
    let m1 = psi.inner(x1_psi)? / n;
    let m2 = psi.inner(x2_psi)? / n;
    let a = x1_psi.lin(ONE, psi, -m1)?;
    let b = x2_psi.lin(ONE, psi, -m2)?;
    let aa = a.inner(&a)?.re / n;
    let bb = b.inner(&b)?.re / n;
    let ab = a.inner(&b)? / n;
    let ba = b.inner(&a)? / n;
    let (d1, d2) = (aa.max(0.0).sqrt(), bb.max(0.0).sqrt());
    let anti = ab + ba;
    let i_x3 = ab - ba;
    let rb = 0.5 * (anti + i_x3).norm();

    // A = cB: least-squares c and the collinearity residual
    let c = if bb > 0.0 { ba / bb } else { Complex64::new(0.0, 0.0) };
    let resid = a.lin(ONE, &b, -c)?;
    let rel = (resid.inner(&resid)?.re.max(0.0) / n).sqrt() / d1.max(f64::MIN_POSITIVE);
    let equality_case = rel < 1e-8 && c.re.abs() <= 1e-8 * c.norm();

    let product = d1 * d2;
    let mut r = UncertaintyReport {
        label: label.to_string(),
        params: *params,
        delta_1: Some(d1),
        delta_2: Some(d2),
        product: Some(product),
        anticommutator: anti.re,
        commutator: (i_x3 / Complex64::i()).re,
        robertson_bound: rb,
        bound: rb,
        equality_gap: Some((product - rb) / rb),
        equality_case,
        values: BTreeMap::new(),
    };
    r.set("mean_1.re", m1.re);
    r.set("mean_1.im", m1.im);
    r.set("mean_2.re", m2.re);
    r.set("mean_2.im", m2.im);
    r.set("c.re", c.re);
    r.set("c.im", c.im);
    r.set("collinearity_residual", rel);
    r.check_finite()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planefun::Flavor;

    fn packet(q: f64, f: impl Fn(f64) -> f64) -> RadialPacket {
        let p = DeformationParams::unit(q).unwrap();
        RadialPacket::sample(0, Flavor::H, &p, 1e-14, |r| Complex64::new(f(r), 0.0)).unwrap()
    }

    #[test]
    fn commuting_pair_has_zero_bound() {
        let p = DeformationParams::unit(0.9).unwrap();
        let f = packet(0.9, |r| (-r * r).exp() * (1.0 + r));
        let r1 = f.r_hat();
        let r2 = r1.map(|r, v| v * r);
        let rep = robertson_report("r, r^2", &p, &f, &r1, &r2.map(|r, v| v * r)).unwrap();
        assert!(rep.commutator.abs() < 1e-14, "{}", rep.commutator);
        assert!(rep.product.unwrap() >= rep.robertson_bound);
    }

    #[test]
    fn proportional_vectors_reach_equality() {
        // X₁ψ = iX₂ψ after centering: equality with pure imaginary c
        let p = DeformationParams::unit(0.9).unwrap();
        let f = packet(0.9, |r| (-r * r).exp());
        let g = packet(0.9, |r| r * (-r * r).exp());
        let x2 = g.clone();
        let x1 = g.scale(Complex64::i());
        let rep = robertson_report("prop", &p, &f, &x1, &x2).unwrap();
        assert!(rep.equality_gap.unwrap().abs() < 1e-12);
        assert!(rep.equality_case);
        assert!(rep.anticommutator.abs() < 1e-12);
    }

    #[test]
    fn zero_state_is_rejected() {
        let p = DeformationParams::unit(0.9).unwrap();
        let z = packet(0.9, |_| 0.0);
        assert!(matches!(robertson_report("z", &p, &z, &z, &z), Err(QError::NonNormalizable(_))));
    }
}
