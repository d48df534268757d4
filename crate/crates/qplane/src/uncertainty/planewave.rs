//! q-plane waves, their superpositions and the momentum-pair bound
//!   Δp̂_x Δp̂_y ≥ (tanhΛ/2)|⟨p̂_x² + p̂_y²⟩|.

use num_complex::Complex64;
use serde::Serialize;

use super::report::{robertson_report, UncertaintyReport};
use crate::error::{QError, Result};
use crate::planefun::{apply_momentum, Axis, IdentityCheck, MultiSector, PlaneFunction};
use crate::qcalc::{q_factorial, q_number, DeformationParams, QScalar, QVariant};

/// Which eigen-equation the wave solves, and so the order of its factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WaveKind {
    /// e_{q⁻²}(Az₊) e_{q⁻²}(Bz₋), eigenfunction of p̂₊
    Plus,
    /// e_{q²}(Bz₋) e_{q⁻²}(Az₊), eigenfunction of p̂₋
    Minus,
}

/// A = −i⟨p̂₊⟩/ħ, B = −i⟨p̂₋⟩/ħ.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneWaveSpec {
    pub kind: WaveKind,
    pub p_plus: QScalar,
    pub p_minus: QScalar,
    pub hbar: QScalar,
}

impl PlaneWaveSpec {
    fn a(&self) -> QScalar {
        &(-&QScalar::i() * &self.p_plus) / &self.hbar
    }

    fn b(&self) -> QScalar {
        &(-&QScalar::i() * &self.p_minus) / &self.hbar
    }

    fn first_base(&self) -> i64 {
        match self.kind {
            WaveKind::Plus => -2,
            WaveKind::Minus => 2,
        }
    }
}

fn fact(n: u32, base_q_exp: i64) -> QScalar {
    q_factorial(n, &QScalar::q_pow(base_q_exp), QVariant::Standard).expect("standard q-factorial")
}

/// Row d of [d]_{x}!/([k]_{q⁻²}! [d−k]_x!) for k = 0..=d, x = q^base, all
/// Laurent polynomials. For x = q⁻² these are Gaussian binomials (q-Pascal,
/// C(d,k) = C(d−1,k−1) + x^k C(d−1,k)); for x = q² the identity
/// [k]_{q²}! = q^{k(k−1)}[k]_{q⁻²}! adds a monomial factor.
fn factorial_ratios(n: u32, base_q_exp: i64) -> Vec<Vec<QScalar>> {
    let mut rows: Vec<Vec<QScalar>> = vec![vec![QScalar::one()]];
    for d in 1..=n as usize {
        let prev = &rows[d - 1];
        let row = (0..=d)
            .map(|k| {
                let left = if k > 0 { prev[k - 1].clone() } else { QScalar::zero() };
                let right = if k < d { &QScalar::q_pow(base_q_exp * k as i64) * &prev[k] } else { QScalar::zero() };
                &left + &right
            })
            .collect();
        rows.push(row);
    }
    if base_q_exp != -2 {
        debug_assert_eq!(base_q_exp, 2);
        for row in &mut rows {
            for (k, c) in row.iter_mut().enumerate() {
                let k = k as i64;
                *c = &*c * &QScalar::q_pow(k * (k - 1));
            }
        }
    }
    rows
}

fn powers(x: &QScalar, n: u32) -> Vec<QScalar> {
    let mut v = vec![QScalar::one()];
    for i in 1..=n as usize {
        v.push(&v[i - 1] * x);
    }
    v
}

/// The ordered product of the two factors' monomials,
/// brought to normal order z₊ᵃz₋ᵇ.
fn ordered(kind: WaveKind, a: u32, b: u32) -> PlaneFunction {
    match kind {
        WaveKind::Plus => PlaneFunction::monomial(a, b),
        WaveKind::Minus => PlaneFunction::monomial(0, b).mul(&PlaneFunction::monomial(a, 0)),
    }
}

/// Degree-`n` truncation of the factorized plane wave.
pub fn plane_wave(spec: &PlaneWaveSpec, n: u32) -> Result<PlaneFunction> {
    if n < 1 {
        return Err(QError::TruncationTooSmall { needed: 1, have: n as i64 });
    }
    let (a, b) = (spec.a(), spec.b());
    let base = spec.first_base();
    let (pa, pb) = (powers(&a, n), powers(&b, n));
    let inv_a: Vec<QScalar> = (0..=n).map(|k| &QScalar::one() / &fact(k, -2)).collect();
    let inv_b: Vec<QScalar> = (0..=n).map(|k| &QScalar::one() / &fact(k, base)).collect();
    let mut out = PlaneFunction::zero();
    for d in 0..=n {
        for ka in 0..=d {
            let kb = d - ka;
            let c = &(&pa[ka as usize] * &pb[kb as usize]) * &(&inv_a[ka as usize] * &inv_b[kb as usize]);
            if !c.is_zero() {
                out = out.add(&ordered(spec.kind, ka, kb).scale(&c));
            }
        }
    }
    Ok(out)
}

/// Keeps the terms of total degree ≤ d.
pub fn truncate(f: &PlaneFunction, d: u32) -> PlaneFunction {
    let mut out = PlaneFunction::zero();
    for ((a, b), c) in f.coeffs() {
        if a + b <= d {
            out = out.add(&PlaneFunction::term(a, b, c.clone()));
        }
    }
    out
}

/// Σ_{ka+kb=d} AᵏᵃBᵏᵇ [d]_b!/([ka]_{q⁻²}! [kb]_b!) (ordered monomial): the
/// degree-d part of the wave times [d]_b!, a Laurent polynomial throughout.
fn scaled_degree(spec: &PlaneWaveSpec, d: u32, pa: &[QScalar], pb: &[QScalar], ratios: &[Vec<QScalar>]) -> PlaneFunction {
    let mut out = PlaneFunction::zero();
    for ka in 0..=d {
        let kb = d - ka;
        let c = &(&pa[ka as usize] * &pb[kb as usize]) * &ratios[d as usize][ka as usize];
        if !c.is_zero() {
            out = out.add(&ordered(spec.kind, ka, kb).scale(&c));
        }
    }
    out
}

/// p̂₊f − ⟨p̂₊⟩f (or the p̂₋ version) through degree n − 1, exactly. The
/// momentum lowers degree by one, so degree d of the equation pairs the
/// degree-(d+1) and degree-d parts; both are multiplied by [d+1]_b!.
pub fn eigen_check(spec: &PlaneWaveSpec, n: u32) -> Result<IdentityCheck> {
    if n < 1 {
        return Err(QError::TruncationTooSmall { needed: 1, have: n as i64 });
    }
    let (axis, value, name) = match spec.kind {
        WaveKind::Plus => (Axis::Plus, &spec.p_plus, "p+ f = <p+> f"),
        WaveKind::Minus => (Axis::Minus, &spec.p_minus, "p- f = <p-> f"),
    };
    let base = spec.first_base();
    let x = QScalar::q_pow(base);
    let (pa, pb) = (powers(&spec.a(), n), powers(&spec.b(), n));
    let ratios = factorial_ratios(n, base);
    let mut chk = IdentityCheck::new(name);
    let mut upper = scaled_degree(spec, 0, &pa, &pb, &ratios);
    for d in 0..n {
        let lower = upper;
        upper = scaled_degree(spec, d + 1, &pa, &pb, &ratios);
        let bracket = q_number(d as i64 + 1, &x, QVariant::Standard)?;
        let lhs = apply_momentum(axis, &upper, &spec.hbar);
        let rhs = lower.scale(&(value * &bracket));
        chk.record(|| format!("degree {d}"), &lhs, &rhs);
    }
    Ok(chk)
}

/// Compares the ordered product of exponentials with the single exponential
/// of the sum, e_b(Az₊ + Bz₋) with b the first factor's base, monomial by
/// monomial through degree n. Each degree d is compared after multiplying by
/// [d]_b!, which keeps every coefficient a Laurent polynomial.
pub fn factorization_check(spec: &PlaneWaveSpec, n: u32, reversed: bool) -> Result<IdentityCheck> {
    let (a, b) = (spec.a(), spec.b());
    let base = spec.first_base();
    let plus_first = (spec.kind == WaveKind::Plus) != reversed;
    let name = format!(
        "{:?} wave{}: product of exponentials = exponential of sum",
        spec.kind,
        if reversed { " (reversed order)" } else { "" }
    );
    let mut chk = IdentityCheck::new(&name);
    let sum = PlaneFunction::term(1, 0, a.clone()).add(&PlaneFunction::term(0, 1, b.clone()));
    let (pa, pb) = (powers(&a, n), powers(&b, n));
    // z₊ factors always have base q⁻², z₋ factors the wave's own base
    let ratios = factorial_ratios(n, base);
    let mut power = PlaneFunction::one();
    for d in 0..=n {
        if d > 0 {
            power = power.mul(&sum);
        }
        let mut product = PlaneFunction::zero();
        for ka in 0..=d {
            let kb = d - ka;
            let c = &(&pa[ka as usize] * &pb[kb as usize]) * &ratios[d as usize][ka as usize];
            let mono = if plus_first {
                PlaneFunction::monomial(ka, kb)
            } else {
                PlaneFunction::monomial(0, kb).mul(&PlaneFunction::monomial(ka, 0))
            };
            product = product.add(&mono.scale(&c));
        }
        chk.record(|| format!("degree {d}"), &product, &power);
    }
    Ok(chk)
}

/// Σ wᵢfᵢ, the quadrature stand-in for ∫db c(b) f_b.
pub fn superpose(packets: &[PlaneFunction], weights: &[QScalar]) -> Result<PlaneFunction> {
    if packets.len() != weights.len() || packets.is_empty() {
        return Err(QError::InvalidParameter(format!(
            "{} packets against {} weights",
            packets.len(),
            weights.len()
        )));
    }
    Ok(packets.iter().zip(weights).fold(PlaneFunction::zero(), |acc, (f, w)| acc.add(&f.scale(w))))
}

/// Five plane waves with ⟨p̂₋⟩ = center + m/4, m = −2..=2, and Gaussian
/// weights e^{−m²/2} rounded to six decimals so they stay exact.
pub fn five_point_superposition(base: &PlaneWaveSpec, degree: u32) -> Result<PlaneFunction> {
    let mut packets = Vec::with_capacity(5);
    let mut weights = Vec::with_capacity(5);
    for m in -2i64..=2 {
        let spec = PlaneWaveSpec { p_minus: &base.p_minus + &QScalar::ratio(m, 4), ..base.clone() };
        packets.push(plane_wave(&spec, degree)?);
        let w = ((-(m * m) as f64 / 2.0).exp() * 1e6).round() as i64;
        weights.push(QScalar::ratio(w, 1_000_000));
    }
    superpose(&packets, &weights)
}

/// Δp̂_xΔp̂_y against (tanhΛ/2)|⟨p̂_x² + p̂_y²⟩| on f·G(ξ), where the optional
/// envelope G(ξ) = e^{−ξ/w²} makes a polynomial f square-summable. Without
/// one, f must already be square-summable, which no nonzero polynomial is.
/// Second moments are taken as ‖p̂ψ‖², using the symmetry of p̂_x, p̂_y.
pub fn momentum_report(
    f: &PlaneFunction,
    params: &DeformationParams,
    envelope_width: Option<f64>,
) -> Result<UncertaintyReport> {
    let hbar = params.hbar;
    let psi = match envelope_width {
        Some(w) if w > 0.0 && w.is_finite() => {
            MultiSector::from_polar_with_envelope(&f.to_polar(), params, 1e-15, |x| (-x / (w * w)).exp())
        }
        Some(w) => return Err(QError::InvalidParameter(format!("envelope width {w}"))),
        None => MultiSector::from_polar_with_envelope(&f.to_polar(), params, 1e-15, |_| 1.0),
    }
    .map_err(|e| match e {
        QError::NonSummable { cap } => QError::NonNormalizable(format!("superposition not square-summable (|k| <= {cap})")),
        e => e,
    })?;
    let px = psi.p_x(hbar)?;
    let py = psi.p_y(hbar)?;
    let mut rep = robertson_report("momentum pair (p_x, p_y)", params, &psi, &px, &py)?;
    let n = psi.inner(&psi)?.re;
    let px2 = px.inner(&px)?.re / n;
    let py2 = py.inner(&py)?.re / n;
    let bound = params.tanh_lambda() / 2.0 * (px2 + py2).abs();
    rep = rep.with_bound(bound);
    rep.set("<p_x^2>", px2);
    rep.set("<p_y^2>", py2);
    let ppm: Complex64 = psi.inner(&psi.p_minus(hbar)?.p_plus(hbar)?)? / n;
    rep.set("<p+ p->.re", ppm.re);
    rep.set("<p+ p->.im", ppm.im);
    rep.check_finite()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planefun::r_p_plus;

    fn spec(kind: WaveKind) -> PlaneWaveSpec {
        PlaneWaveSpec {
            kind,
            p_plus: QScalar::ratio(3, 2),
            p_minus: &QScalar::ratio(1, 2) + &QScalar::i(),
            hbar: QScalar::ratio(2, 3),
        }
    }

    #[test]
    fn factorial_ratios_match_direct_division() {
        for base in [-2, 2] {
            let rows = factorial_ratios(6, base);
            for d in 0..=6u32 {
                for k in 0..=d {
                    let direct = &fact(d, base) / &(&fact(k, -2) * &fact(d - k, base));
                    assert_eq!(rows[d as usize][k as usize], direct, "base {base} d {d} k {k}");
                }
            }
        }
    }

    #[test]
    fn eigen_property_is_exact() {
        for kind in [WaveKind::Plus, WaveKind::Minus] {
            let c = eigen_check(&spec(kind), 8).unwrap();
            assert!(c.passed(), "{kind:?}: {:?}", c.failures);
        }
    }

    #[test]
    fn degreewise_eigen_check_matches_direct_comparison() {
        let other = |kind| PlaneWaveSpec {
            kind,
            p_plus: QScalar::ratio(2, 3),
            p_minus: QScalar::ratio(-3, 4),
            hbar: QScalar::ratio(5, 3),
        };
        for kind in [WaveKind::Plus, WaveKind::Minus] {
            let s = other(kind);
            let (axis, value) = match kind {
                WaveKind::Plus => (Axis::Plus, &s.p_plus),
                WaveKind::Minus => (Axis::Minus, &s.p_minus),
            };
            let f = plane_wave(&s, 7).unwrap();
            let lhs = truncate(&apply_momentum(axis, &f, &s.hbar), 6);
            assert_eq!(lhs, truncate(&f.scale(value), 6), "{kind:?}");
            assert!(eigen_check(&s, 7).unwrap().passed());
            // and the direct comparison does see a wrong eigenvalue
            assert_ne!(lhs, truncate(&f.scale(&(value * &QScalar::ratio(11, 10))), 6));
        }
    }

    #[test]
    fn zero_momentum_gives_constant() {
        let s = PlaneWaveSpec { p_plus: QScalar::zero(), p_minus: QScalar::zero(), ..spec(WaveKind::Plus) };
        assert_eq!(plane_wave(&s, 5).unwrap(), PlaneFunction::one());
        assert!(plane_wave(&s, 0).is_err());
    }

    #[test]
    fn first_terms_by_hand() {
        // e_{q⁻²}(Az₊) = 1 + Az₊ + A²z₊²/(1 + q⁻²) + …
        let s = PlaneWaveSpec { p_minus: QScalar::zero(), ..spec(WaveKind::Plus) };
        let f = plane_wave(&s, 2).unwrap();
        let a = s.a();
        assert_eq!(f.coeff(1, 0), a);
        assert_eq!(f.coeff(2, 0), &a.pow(2) / &(&QScalar::one() + &QScalar::q_pow(-2)));
        // R(p₊) lowers it to iA times itself
        assert_eq!(truncate(&r_p_plus(&f), 1), truncate(&f.scale(&(&QScalar::i() * &a)), 1));
    }

    #[test]
    fn factorization_holds_only_in_reversed_order() {
        for kind in [WaveKind::Plus, WaveKind::Minus] {
            let s = spec(kind);
            let printed = factorization_check(&s, 6, false).unwrap();
            let reversed = factorization_check(&s, 6, true).unwrap();
            assert!(!printed.passed(), "{kind:?}");
            // degrees 0 and 1 always agree; the first defect is at degree 2
            assert!(printed.failures[0].starts_with("degree 2"), "{:?}", printed.failures);
            if kind == WaveKind::Plus {
                assert!(reversed.passed(), "{:?}", reversed.failures);
            }
        }
    }

    #[test]
    fn superposition_basics() {
        let f = plane_wave(&spec(WaveKind::Plus), 4).unwrap();
        assert_eq!(superpose(std::slice::from_ref(&f), &[QScalar::one()]).unwrap(), f);
        assert!(superpose(std::slice::from_ref(&f), &[]).is_err());
    }

    #[test]
    fn five_point_family_respects_the_bound() {
        let base = PlaneWaveSpec {
            kind: WaveKind::Plus,
            p_plus: QScalar::ratio(1, 2),
            p_minus: QScalar::one(),
            hbar: QScalar::one(),
        };
        let f = five_point_superposition(&base, 8).unwrap();
        let r = momentum_report(&f, &DeformationParams::unit(0.9).unwrap(), Some(2.0)).unwrap();
        assert!(r.margin().unwrap() >= -1e-10, "{:?}", r.margin());
        assert!((r.robertson_bound - r.bound).abs() < 1e-12 * r.bound.max(1.0));
    }

    #[test]
    fn polynomial_superposition_is_not_normalizable() {
        let p = DeformationParams::unit(0.9).unwrap();
        let f = plane_wave(&spec(WaveKind::Plus), 4).unwrap();
        assert!(matches!(momentum_report(&f, &p, None), Err(QError::NonNormalizable(_))));
    }

    #[test]
    fn two_point_superposition_is_not_an_eigenstate() {
        let p = DeformationParams::unit(0.9).unwrap();
        let w = |pp: i64| PlaneWaveSpec {
            kind: WaveKind::Plus,
            p_plus: QScalar::int(pp),
            p_minus: QScalar::int(pp),
            hbar: QScalar::one(),
        };
        let f = superpose(
            &[plane_wave(&w(1), 8).unwrap(), plane_wave(&w(-1), 8).unwrap()],
            &[QScalar::one(), QScalar::one()],
        )
        .unwrap();
        let r = momentum_report(&f, &p, Some(2.0)).unwrap();
        assert!(r.delta_1.unwrap() > 0.0);
        assert!(r.margin().unwrap() >= -1e-10);
    }
}
