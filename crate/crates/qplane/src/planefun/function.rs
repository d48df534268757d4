//! Polynomial functions on the quantum plane and the phase-space operators
//! acting on them: right multiplication, the right representation R of the
//! dual algebra, momenta, angular momentum.

use serde::Serialize;

use crate::error::{QError, Result};
use crate::hopf::dual::{DualConvention, DualElement};
use crate::hopf::group::{GroupElement, GroupMonomial};
use crate::hopf::polar::{from_polar, to_polar, PolarElement};
use crate::qcalc::{q_number, QScalar, QVariant};

/// Element of the quantum plane: a finite sum of c_{ab} z₊ᵃz₋ᵇ with z₊'s on
/// the left.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PlaneFunction(GroupElement);

impl PlaneFunction {
    /// Rejects monomials carrying powers of n.
    pub fn new(f: GroupElement) -> Result<Self> {
        if let Some((m, _)) = f.terms().find(|(m, _)| m.j != 0) {
            return Err(QError::NotPlaneElement(m.j));
        }
        Ok(PlaneFunction(f))
    }

    pub fn zero() -> Self {
        PlaneFunction(GroupElement::zero())
    }

    pub fn one() -> Self {
        PlaneFunction(GroupElement::one())
    }

    /// z₊ᵃz₋ᵇ
    pub fn monomial(a: u32, b: u32) -> Self {
        Self::term(a, b, QScalar::one())
    }

    pub fn term(a: u32, b: u32, c: QScalar) -> Self {
        PlaneFunction(GroupElement::monomial(GroupMonomial::new(0, a, b), c))
    }

    /// All monomials z₊ᵃz₋ᵇ with a + b ≤ `degree`.
    pub fn basis(degree: u32) -> Vec<Self> {
        (0..=degree).flat_map(|d| (0..=d).map(move |a| Self::monomial(a, d - a))).collect()
    }

    pub fn element(&self) -> &GroupElement {
        &self.0
    }

    pub fn into_element(self) -> GroupElement {
        self.0
    }

    /// Coefficients keyed by (a, b).
    pub fn coeffs(&self) -> impl Iterator<Item = ((u32, u32), &QScalar)> {
        self.0.terms().map(|(m, c)| ((m.a, m.b), c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> QScalar {
        self.0.coeff(&GroupMonomial::new(0, a, b))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> u32 {
        self.0.terms().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn to_polar(&self) -> PolarElement {
        to_polar(&self.0).expect("plane functions carry no n-powers")
    }

    pub fn from_polar(f: &PolarElement) -> Result<Self> {
        Ok(PlaneFunction(from_polar(f)?))
    }

    pub fn add(&self, o: &Self) -> Self {
        PlaneFunction(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        PlaneFunction(&self.0 - &o.0)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        PlaneFunction(self.0.scale(c))
    }

    /// Position operators act by right multiplication: ĝ f = f g.
    pub fn right_mult(&self, g: &GroupElement) -> Result<Self> {
        Self::new(&self.0 * g)
    }

    /// Ordinary product f·g in the plane algebra.
    pub fn mul(&self, o: &Self) -> Self {
        PlaneFunction(&self.0 * &o.0)
    }

    /// Coefficient-wise linear map on monomials.
    fn map_monomials(&self, f: impl Fn(u32, u32) -> Option<(u32, u32, QScalar)>) -> Self {
        let mut out = GroupElement::zero();
        for ((a, b), c) in self.coeffs() {
            if let Some((a2, b2, w)) = f(a, b) {
                out.add_term(GroupMonomial::new(0, a2, b2), c * &w);
            }
        }
        PlaneFunction(out)
    }
}

fn q_std(n: u32, base_q_exp: i64) -> QScalar {
    q_number(n as i64, &QScalar::q_pow(base_q_exp), QVariant::Standard).expect("non-negative standard q-number")
}

/// R(p₊): z₊ᵃz₋ᵇ ↦ i[a]_{q⁻²} z₊ᵃ⁻¹z₋ᵇ, the Jackson derivative in z₊ with base q⁻².
pub fn r_p_plus(f: &PlaneFunction) -> PlaneFunction {
    f.map_monomials(|a, b| (a > 0).then(|| (a - 1, b, QScalar::i() * q_std(a, -2))))
}

/// R(p₋): z₊ᵃz₋ᵇ ↦ i q⁻²ᵃ[b]_{q²} z₊ᵃz₋ᵇ⁻¹, the z₋-derivative of f(q⁻²z₊, z₋).
pub fn r_p_minus(f: &PlaneFunction) -> PlaneFunction {
    f.map_monomials(|a, b| (b > 0).then(|| (a, b - 1, QScalar::i() * QScalar::q_pow(-2 * a as i64) * q_std(b, 2))))
}

/// R(kʲ): z₊ᵃz₋ᵇ ↦ q^{j(−2a+2b)} z₊ᵃz₋ᵇ.
pub fn r_k(f: &PlaneFunction, j: i64) -> PlaneFunction {
    f.map_monomials(|a, b| Some((a, b, QScalar::q_pow(j * (2 * b as i64 - 2 * a as i64)))))
}

/// R(φ) for an arbitrary dual element. R is an anti-homomorphism, so
/// R(p₋ᵐp₊ᵏkʲ) = R(k)ʲR(p₊)ᵏR(p₋)ᵐ applies the p₋ factors first.
pub fn apply_r<C: DualConvention>(phi: &DualElement<C>, f: &PlaneFunction) -> PlaneFunction {
    let mut out = PlaneFunction::zero();
    for (d, c) in phi.terms() {
        let mut g = f.clone();
        for _ in 0..d.m {
            g = r_p_minus(&g);
        }
        for _ in 0..d.k {
            g = r_p_plus(&g);
        }
        g = r_k(&g, d.j);
        out = out.add(&g.scale(c));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Axis {
    X,
    Y,
    Plus,
    Minus,
}

/// p̂ f = ħR(p)f with p_x = (p₊ + p₋)/√2, p_y = (i/√2)(p₊ − p₋).
pub fn apply_momentum(axis: Axis, f: &PlaneFunction, hbar: &QScalar) -> PlaneFunction {
    let v = match axis {
        Axis::Plus => r_p_plus(f),
        Axis::Minus => r_p_minus(f),
        Axis::X => r_p_plus(f).add(&r_p_minus(f)).scale(&QScalar::inv_sqrt2()),
        Axis::Y => r_p_plus(f).sub(&r_p_minus(f)).scale(&(QScalar::i() * QScalar::inv_sqrt2())),
    };
    v.scale(hbar)
}

/// Position operator x̂, ŷ, ẑ± by right multiplication with the generator.
pub fn apply_position(axis: Axis, f: &PlaneFunction) -> PlaneFunction {
    use crate::hopf::group::{x, y, z_minus, z_plus};
    let g = match axis {
        Axis::X => x(),
        Axis::Y => y(),
        Axis::Plus => z_plus(),
        Axis::Minus => z_minus(),
    };
    f.right_mult(&g).expect("generators are plane elements")
}

/// The q-derivative realization of p̂_x, p̂_y in its literal printed form:
/// p̂_x = (iħ/√2)(D₊ + D₋), p̂_y = (ħ/√2)(D₊ − D₋) with D₊ = D^{z₊}_{q⁻²} and
/// D₋ f = D^{z₋}_{q²} f(q⁻²z₊, z₋). The printed p̂_y equals −ħR(p_y); see
/// [`printed_p_y_sign`].
pub fn momentum_realization(axis: Axis, f: &PlaneFunction, hbar: &QScalar) -> Result<PlaneFunction> {
    let d_plus = f.map_monomials(|a, b| (a > 0).then(|| (a - 1, b, q_std(a, -2))));
    let d_minus = f.map_monomials(|a, b| (b > 0).then(|| (a, b - 1, QScalar::q_pow(-2 * a as i64) * q_std(b, 2))));
    let s = QScalar::inv_sqrt2();
    match axis {
        Axis::X => Ok(d_plus.add(&d_minus).scale(&(QScalar::i() * s * hbar))),
        Axis::Y => Ok(d_plus.sub(&d_minus).scale(&(s * hbar))),
        _ => Err(QError::InvalidParameter("the derivative realization covers p_x and p_y only".into())),
    }
}

/// Sign σ with printed p̂_y = σ·ħR(p_y), found by comparing both on z₊.
pub fn printed_p_y_sign() -> i32 {
    let f = PlaneFunction::monomial(1, 0);
    let h = QScalar::one();
    let printed = momentum_realization(Axis::Y, &f, &h).expect("p_y realization");
    let defined = apply_momentum(Axis::Y, &f, &h);
    if printed == defined {
        1
    } else if printed == defined.scale(&QScalar::int(-1)) {
        -1
    } else {
        0
    }
}

/// l̂ z₊ᵃz₋ᵇ = ħ(a − b) z₊ᵃz₋ᵇ.
pub fn apply_l(f: &PlaneFunction, hbar: &QScalar) -> PlaneFunction {
    f.map_monomials(|a, b| Some((a, b, hbar * &QScalar::int(a as i64 - b as i64))))
}

/// e^{kΛl̂/ħ} with Λ = −log q: multiplies z₊ᵃz₋ᵇ by q^{−k(a−b)}.
pub fn exp_l(f: &PlaneFunction, k: i64) -> PlaneFunction {
    f.map_monomials(|a, b| Some((a, b, QScalar::q_pow(-k * (a as i64 - b as i64)))))
}

/// Only finite sums of monomials are available here, and none of them is
/// summable under the invariant integral except zero.
pub fn invariant_integral(f: &PlaneFunction) -> Result<QScalar> {
    if f.is_zero() {
        Ok(QScalar::zero())
    } else {
        Err(QError::NonSummable { cap: 0 })
    }
}
