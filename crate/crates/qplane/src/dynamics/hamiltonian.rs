//! The free q-Hamiltonian Ĥ = (1/2m)(p̂_x² + p̂_y²)e^{−2Λl̂/ħ} on plane
//! polynomials, its symmetries, and the Heisenberg equations for x̂, ŷ.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{QError, Result};
use crate::planefun::{apply_l, apply_momentum, apply_position, exp_l, Axis, IdentityCheck, MultiSector, PlaneFunction};
use crate::qcalc::{Coeff, DeformationParams, QScalar};

/// Ĥf, with e^{−2Λl̂/ħ} applied first: it multiplies z₊ᵃz₋ᵇ by q^{2(a−b)}.
pub fn apply_h(f: &PlaneFunction, hbar: &QScalar, mass: &QScalar) -> PlaneFunction {
    let g = exp_l(f, -2);
    let px = apply_momentum(Axis::X, &apply_momentum(Axis::X, &g, hbar), hbar);
    let py = apply_momentum(Axis::Y, &apply_momentum(Axis::Y, &g, hbar), hbar);
    px.add(&py).scale(&(&QScalar::one() / &(&QScalar::int(2) * mass)))
}

/// [Ĥ, p̂_x], [Ĥ, p̂_y], [Ĥ, l̂] applied to every monomial of degree ≤ `degree`.
pub fn hamiltonian_symmetry_checks(degree: u32, hbar: &QScalar, mass: &QScalar) -> Vec<IdentityCheck> {
    let h = |f: &PlaneFunction| apply_h(f, hbar, mass);
    let ops: [(&str, Box<dyn Fn(&PlaneFunction) -> PlaneFunction>); 3] = [
        ("[H, p_x] = 0", Box::new(|f| apply_momentum(Axis::X, f, hbar))),
        ("[H, p_y] = 0", Box::new(|f| apply_momentum(Axis::Y, f, hbar))),
        ("[H, l] = 0", Box::new(|f| apply_l(f, hbar))),
    ];
    let zero = PlaneFunction::zero();
    ops.iter()
        .map(|(name, op)| {
            let mut chk = IdentityCheck::new(name);
            for f in PlaneFunction::basis(degree) {
                let comm = h(&op(&f)).sub(&op(&h(&f)));
                chk.record(|| format!("{:?}", f.element()), &comm, &zero);
            }
            chk
        })
        .collect()
}

/// Energy ⟨ψ, Ĥψ⟩/‖ψ‖² on a sampled state. Ĥ preserves each sector j, where
/// e^{−2Λl̂/ħ} is the number q^{2j}, so the value is (1/2m)Σ_j q^{2j}‖p̂ψ_j‖².
pub fn energy_expectation(psi: &MultiSector, params: &DeformationParams) -> Result<f64> {
    let n = psi.inner(psi)?.re;
    if !(n > 0.0) {
        return Err(QError::NonNormalizable(format!("norm² {n}")));
    }
    let mut e = 0.0;
    for (j, p) in &psi.sectors {
        let single = MultiSector::single(p.clone())?;
        let (px, py) = (single.p_x(params.hbar)?, single.p_y(params.hbar)?);
        let w = params.q.powi(2 * *j as i32);
        e += w * (px.inner(&px)?.re + py.inner(&py)?.re);
    }
    Ok(e / (2.0 * params.m * n))
}

/// Residual of one monomial in a Heisenberg check.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialResidual {
    pub a: u32,
    pub b: u32,
    /// exact residual, printed
    pub residual: String,
    /// largest coefficient magnitude of the residual at the report's q
    pub magnitude: f64,
}

/// Outcome of comparing (i/ħ)[Ĥ, X] with the stated right side on every
/// monomial of degree ≤ `degree`.
#[derive(Clone, Debug, Serialize)]
pub struct EvolutionCheckResult {
    pub axis: Axis,
    pub degree: u32,
    pub q: f64,
    pub checked: usize,
    /// nonzero residuals only
    pub residuals: Vec<MonomialResidual>,
    pub max_residual: f64,
    /// at q = 1 the commutator equals p̂_X/m exactly on every monomial
    pub classical_limit_holds: bool,
}

impl EvolutionCheckResult {
    pub fn passed(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// The coefficients of the two lines of the stated x̂ equation:
/// (q+q⁻¹)²/2, (q⁻²−q²)/2, (q−q⁻¹)²/2.
fn stated_coefficients() -> (QScalar, QScalar, QScalar) {
    let half = QScalar::ratio(1, 2);
    let (q, qi) = (QScalar::q_pow(1), QScalar::q_pow(-1));
    let c1 = &(&(&q + &qi) * &(&q + &qi)) * &half;
    let c2 = &(&QScalar::q_pow(-2) - &QScalar::q_pow(2)) * &half;
    let c3 = &(&(&q - &qi) * &(&q - &qi)) * &half;
    (c1, c2, c3)
}

/// c = [x̂, p̂_x]1. The plane's phase space has [p̂_x, x̂] = iħe^{2Λl̂/ħ}, so
/// c = −iħ, the opposite of the textbook [x, p] = iħ.
pub fn canonical_constant(hbar: &QScalar) -> QScalar {
    let one = PlaneFunction::one();
    let xp = apply_position(Axis::X, &apply_momentum(Axis::X, &one, hbar));
    let px = apply_momentum(Axis::X, &apply_position(Axis::X, &one), hbar);
    xp.sub(&px).coeff(0, 0)
}

/// dX̂/dt f = [X̂, Ĥ]f/c for X = x or y. With c = iħ this is the usual
/// (i/ħ)[Ĥ, X̂]; with the plane's c = −iħ it is (i/ħ)[X̂, Ĥ]. Either way the
/// flow reduces to Hamilton's equations when q = 1.
pub fn heisenberg_lhs(axis: Axis, f: &PlaneFunction, hbar: &QScalar, mass: &QScalar) -> Result<PlaneFunction> {
    check_axis(axis)?;
    let h = |g: &PlaneFunction| apply_h(g, hbar, mass);
    let comm = apply_position(axis, &h(f)).sub(&h(&apply_position(axis, f)));
    Ok(comm.scale(&canonical_constant(hbar).inv()))
}

/// The stated right side applied to f:
///   x: (1/2m)[c₁p̂_x + c₂p̂_y]f + (i/ħ)Ĥ[c₃x̂ + c₂ŷ]f
///   y: (1/2m)[c₁p̂_y − c₂p̂_x]f + (i/ħ)Ĥ[c₃ŷ − c₂x̂]f
pub fn heisenberg_rhs(axis: Axis, f: &PlaneFunction, hbar: &QScalar, mass: &QScalar) -> Result<PlaneFunction> {
    check_axis(axis)?;
    let (c1, c2, c3) = stated_coefficients();
    let (own, other, sign) = match axis {
        Axis::X => (Axis::X, Axis::Y, QScalar::one()),
        _ => (Axis::Y, Axis::X, QScalar::int(-1)),
    };
    let c2s = &c2 * &sign;
    let kinetic = apply_momentum(own, f, hbar).scale(&c1).add(&apply_momentum(other, f, hbar).scale(&c2s));
    let kinetic = kinetic.scale(&(&QScalar::one() / &(&QScalar::int(2) * mass)));
    let pos = apply_position(own, f).scale(&c3).add(&apply_position(other, f).scale(&c2s));
    let dressed = apply_h(&pos, hbar, mass).scale(&(&QScalar::i() / hbar));
    Ok(kinetic.add(&dressed))
}

fn check_axis(axis: Axis) -> Result<()> {
    match axis {
        Axis::X | Axis::Y => Ok(()),
        _ => Err(QError::InvalidParameter("Heisenberg checks cover x and y".into())),
    }
}

/// Exact q = 1 values of the coefficients, zeros dropped.
fn at_q_one(f: &PlaneFunction) -> Option<BTreeMap<(u32, u32), Coeff>> {
    let mut out = BTreeMap::new();
    for (k, c) in f.coeffs() {
        let v = c.at_q_one()?;
        if !v.is_zero() {
            out.insert(k, v);
        }
    }
    Some(out)
}

pub const MAX_HEISENBERG_DEGREE: u32 = 8;

pub fn heisenberg_identity_check(
    axis: Axis,
    degree: u32,
    params: &DeformationParams,
    hbar: &QScalar,
    mass: &QScalar,
) -> Result<EvolutionCheckResult> {
    check_axis(axis)?;
    if degree > MAX_HEISENBERG_DEGREE {
        return Err(QError::InvalidParameter(format!("degree {degree} above {MAX_HEISENBERG_DEGREE}")));
    }
    let mut residuals = Vec::new();
    let mut classical = true;
    let mut checked = 0;
    let basis = PlaneFunction::basis(degree);
    for f in &basis {
        let ((a, b), _) = f.coeffs().next().expect("basis monomial");
        let lhs = heisenberg_lhs(axis, f, hbar, mass)?;
        let rhs = heisenberg_rhs(axis, f, hbar, mass)?;
        checked += 1;
        let d = lhs.sub(&rhs);
        if !d.is_zero() {
            let magnitude = d.coeffs().map(|(_, c)| c.eval(params.q).norm()).fold(0.0, f64::max);
            residuals.push(MonomialResidual { a, b, residual: format!("{:?}", d.element()), magnitude });
        }
        let expected = apply_momentum(axis, f, hbar).scale(&mass.inv());
        classical &= matches!((at_q_one(&lhs), at_q_one(&expected)), (Some(l), Some(e)) if l == e);
    }
    let max_residual = residuals.iter().map(|r| r.magnitude).fold(0.0, f64::max);
    Ok(EvolutionCheckResult {
        axis,
        degree,
        q: params.q,
        checked,
        residuals,
        max_residual,
        classical_limit_holds: classical,
    })
}

/// Rotation by a quarter turn, x ↦ y, y ↦ −x: z₊ᵃz₋ᵇ ↦ (−i)ᵃiᵇ z₊ᵃz₋ᵇ.
pub fn quarter_turn(f: &PlaneFunction, inverse: bool) -> PlaneFunction {
    let mut out = PlaneFunction::zero();
    for ((a, b), c) in f.coeffs() {
        let k = (b as i64 - a as i64) * if inverse { -1 } else { 1 };
        let phase = match k.rem_euclid(4) {
            0 => QScalar::one(),
            1 => QScalar::i(),
            2 => QScalar::int(-1),
            _ => -&QScalar::i(),
        };
        out = out.add(&PlaneFunction::term(a, b, c * &phase));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hm() -> (QScalar, QScalar) {
        (QScalar::ratio(3, 7), QScalar::ratio(2, 5))
    }

    #[test]
    fn constant_has_zero_energy() {
        let (h, m) = hm();
        assert!(apply_h(&PlaneFunction::one(), &h, &m).is_zero());
    }

    #[test]
    fn symmetries_hold_exactly() {
        let (h, m) = hm();
        for c in hamiltonian_symmetry_checks(4, &h, &m) {
            assert!(c.passed(), "{}: {:?}", c.name, c.failures.first());
        }
    }

    #[test]
    fn classical_limit_on_r_squared() {
        // z± = (x ± iy)/√2, so z₊z₋ → (x² + y²)/2 as q → 1, and
        // −(ħ²/2m)∇²(x² + y²)/2 = −ħ²/m
        let f = PlaneFunction::monomial(1, 1);
        let hf = apply_h(&f, &QScalar::one(), &QScalar::one());
        let v = hf.coeff(0, 0).eval(0.9999);
        assert!((v.re + 1.0).abs() < 1e-3 && v.im.abs() < 1e-12, "{v}");
        assert!(hf.coeffs().all(|((a, b), _)| a + b == 0));
    }

    #[test]
    fn canonical_constant_is_minus_i_hbar() {
        let h = QScalar::ratio(3, 7);
        assert_eq!(canonical_constant(&h), -&(&QScalar::i() * &h));
    }

    #[test]
    fn q_one_recovers_newton() {
        let (h, m) = hm();
        let p = DeformationParams::unit(0.9).unwrap();
        for axis in [Axis::X, Axis::Y] {
            let r = heisenberg_identity_check(axis, 4, &p, &h, &m).unwrap();
            assert!(r.classical_limit_holds);
            assert_eq!(r.checked, 15);
            // the constant has no derivative, so it is the one monomial that balances
            assert!(r.residuals.iter().all(|x| x.a + x.b > 0));
        }
    }

    #[test]
    fn axis_swap_is_a_quarter_turn() {
        let (h, m) = hm();
        for f in PlaneFunction::basis(3) {
            // (i/ħ)[Ĥ, ŷ] = U (i/ħ)[Ĥ, x̂] U⁻¹ and likewise for the stated sides
            let rot = |g: &PlaneFunction| quarter_turn(g, false);
            let back = quarter_turn(&f, true);
            assert_eq!(
                heisenberg_lhs(Axis::Y, &f, &h, &m).unwrap(),
                rot(&heisenberg_lhs(Axis::X, &back, &h, &m).unwrap())
            );
            assert_eq!(
                heisenberg_rhs(Axis::Y, &f, &h, &m).unwrap(),
                rot(&heisenberg_rhs(Axis::X, &back, &h, &m).unwrap())
            );
        }
    }

    #[test]
    fn energy_is_nonnegative() {
        let p = DeformationParams::unit(0.9).unwrap();
        let f = PlaneFunction::monomial(2, 1).add(&PlaneFunction::term(0, 1, QScalar::ratio(-1, 3)));
        let psi = MultiSector::from_polar_with_envelope(&f.to_polar(), &p, 1e-15, |x| (-x / 2.0).exp()).unwrap();
        assert!(energy_expectation(&psi, &p).unwrap() >= -1e-10);
    }

    #[test]
    fn invalid_axis_and_degree() {
        let (h, m) = hm();
        let p = DeformationParams::unit(0.9).unwrap();
        assert!(heisenberg_identity_check(Axis::Plus, 2, &p, &h, &m).is_err());
        assert!(heisenberg_identity_check(Axis::X, 9, &p, &h, &m).is_err());
    }
}
