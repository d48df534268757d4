//! Polar sectors rⁿe^{ijo} with n ∈ ℤ. Right multiplication by e^{±io} leaves
//! the polynomial span (parity of n − j flips), so the radial momentum
//! p̂ = p̂₊e^{iô} + e^{−iô}p̂₋ is composed here, where the R action has the
//! closed form
//!   R(p₊) rⁿe^{ijo} = −iq (qⁿ − q⁻ʲ)/(1 − q²) rⁿ⁻¹e^{i(j−1)o},
//!   R(p₋) rⁿe^{ijo} =  i (q⁻ⁿ − q⁻ʲ)/(1 − q²) rⁿ⁻¹e^{i(j+1)o},
//!   R(k)  rⁿe^{ijo} = q⁻²ʲ rⁿe^{ijo}.

use std::fmt;

use crate::hopf::element::{Element, Monomial};
use crate::hopf::polar::PolarElement;
use crate::qcalc::{q_number, QScalar, QVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SectorMonomial {
    pub n: i64,
    pub j: i64,
}

impl Monomial for SectorMonomial {
    fn one() -> Self {
        SectorMonomial { n: 0, j: 0 }
    }

    fn mul(&self, o: &Self) -> (i64, Self) {
        (-2 * self.j * o.n, SectorMonomial { n: self.n + o.n, j: self.j + o.j })
    }
}

impl fmt::Display for SectorMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r^{} e^({}io)", self.n, self.j)
    }
}

pub type SectorElement = Element<SectorMonomial>;

pub fn sector_mono(n: i64, j: i64) -> SectorElement {
    SectorElement::monomial(SectorMonomial { n, j }, QScalar::one())
}

pub fn from_polar_element(f: &PolarElement) -> SectorElement {
    SectorElement::from_terms(f.terms().map(|(m, c)| (SectorMonomial { n: m.n as i64, j: m.j }, c.clone())))
}

fn one_minus_q2() -> QScalar {
    &QScalar::one() - &QScalar::q_pow(2)
}

pub fn sector_r_p_plus(f: &SectorElement) -> SectorElement {
    let w = &(-&QScalar::i() * &QScalar::q_pow(1)) / &one_minus_q2();
    f.map_linear(|m| {
        let c = &(&QScalar::q_pow(m.n) - &QScalar::q_pow(-m.j)) * &w;
        SectorElement::monomial(SectorMonomial { n: m.n - 1, j: m.j - 1 }, c)
    })
}

pub fn sector_r_p_minus(f: &SectorElement) -> SectorElement {
    let w = &QScalar::i() / &one_minus_q2();
    f.map_linear(|m| {
        let c = &(&QScalar::q_pow(-m.n) - &QScalar::q_pow(-m.j)) * &w;
        SectorElement::monomial(SectorMonomial { n: m.n - 1, j: m.j + 1 }, c)
    })
}

pub fn sector_r_k(f: &SectorElement, power: i64) -> SectorElement {
    f.map_linear(|m| SectorElement::monomial(*m, QScalar::q_pow(-2 * power * m.j)))
}

/// Right multiplication f ↦ f·g.
pub fn sector_right_mult(f: &SectorElement, g: &SectorElement) -> SectorElement {
    f * g
}

/// p̂ f = ħR(p₊)(f e^{io}) + ħ(R(p₋)f)e^{−io}.
pub fn radial_p_composed(f: &SectorElement, hbar: &QScalar) -> SectorElement {
    let a = sector_r_p_plus(&(f * &sector_mono(0, 1)));
    let b = &sector_r_p_minus(f) * &sector_mono(0, -1);
    (&a + &b).scale(hbar)
}

/// The difference-operator form of p̂ acting on the radial factor of each
/// sector: (iħ/(1+q))(qD_q + q⁻¹D_{q⁻¹})F + iħF/((1+q)r).
pub fn radial_p_difference_form(f: &SectorElement, hbar: &QScalar) -> SectorElement {
    let one = QScalar::one();
    let one_plus_q = &one + &QScalar::q_pow(1);
    let pref = &(&QScalar::i() * hbar) / &one_plus_q;
    f.map_linear(|m| {
        let dq = q_number(m.n, &QScalar::q_pow(1), QVariant::Standard).expect("q ≠ 1");
        let dqi = q_number(m.n, &QScalar::q_pow(-1), QVariant::Standard).expect("q ≠ 1");
        let c = &(&(&(&QScalar::q_pow(1) * &dq) + &(&QScalar::q_pow(-1) * &dqi)) + &one) * &pref;
        SectorElement::monomial(SectorMonomial { n: m.n - 1, j: m.j }, c)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planefun::function::{r_k, r_p_minus, r_p_plus, PlaneFunction};

    #[test]
    fn sector_formulas_match_plane_action() {
        for f in PlaneFunction::basis(7) {
            let pf = from_polar_element(&f.to_polar());
            assert_eq!(sector_r_p_plus(&pf), from_polar_element(&r_p_plus(&f).to_polar()), "{f:?}");
            assert_eq!(sector_r_p_minus(&pf), from_polar_element(&r_p_minus(&f).to_polar()), "{f:?}");
            assert_eq!(sector_r_k(&pf, 1), from_polar_element(&r_k(&f, 1).to_polar()));
        }
    }

    #[test]
    fn composed_radial_momentum_is_difference_operator() {
        let hb = QScalar::ratio(5, 4);
        for n in 0..=8 {
            for j in -n..=n {
                let f = sector_mono(n, j);
                assert_eq!(radial_p_composed(&f, &hb), radial_p_difference_form(&f, &hb), "r^{n} e^({j}io)");
            }
        }
    }

    #[test]
    fn braiding_of_r_past_angle() {
        let prod = sector_right_mult(&sector_mono(2, 3), &sector_mono(1, 0));
        assert_eq!(prod, sector_mono(3, 3).scale(&QScalar::q_pow(-3)));
    }
}
