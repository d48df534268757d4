//! Polar coordinates on the quantum plane: z₊ = r e^{io}, z₋ = e^{−io} r,
//! with the braiding e^{io} r = q⁻¹ r e^{io}. Normal order rⁿ e^{ijo}.

use std::fmt;

use serde::Serialize;

use super::element::{Element, Monomial};
use super::group::{GroupElement, GroupMonomial};
use crate::error::{QError, Result};
use crate::qcalc::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PolarMonomial {
    /// power of r
    pub n: u32,
    /// power of e^{io}
    pub j: i64,
}

impl PolarMonomial {
    pub const fn new(n: u32, j: i64) -> Self {
        PolarMonomial { n, j }
    }
}

impl Monomial for PolarMonomial {
    fn one() -> Self {
        PolarMonomial::new(0, 0)
    }

    fn mul(&self, o: &Self) -> (i64, Self) {
        // e^{ijo} r^n' = q^{−jn'} r^n' e^{ijo}
        (-2 * self.j * o.n as i64, PolarMonomial::new(self.n + o.n, self.j + o.j))
    }
}

impl fmt::Display for PolarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.n, self.j) {
            (0, 0) => write!(f, "1"),
            (n, 0) => write!(f, "r^{n}"),
            (0, j) => write!(f, "e^({j}io)"),
            (n, j) => write!(f, "r^{n} e^({j}io)"),
        }
    }
}

pub type PolarElement = Element<PolarMonomial>;

pub fn p_mono(n: u32, j: i64) -> PolarElement {
    PolarElement::monomial(PolarMonomial::new(n, j), QScalar::one())
}

pub fn r() -> PolarElement {
    p_mono(1, 0)
}

pub fn e_io(j: i64) -> PolarElement {
    p_mono(0, j)
}

/// s-exponent of z₊ᵃz₋ᵇ = s^e rᵃ⁺ᵇ e^{i(a−b)o}.
pub fn polar_exponent(a: u32, b: u32) -> i64 {
    let (a, b) = (a as i64, b as i64);
    -a * (a - 1) + b * (b + 1) - 2 * a * b
}

/// Rewrite a plane element (no powers of n) in the polar basis.
pub fn to_polar(f: &GroupElement) -> Result<PolarElement> {
    let mut out = PolarElement::zero();
    for (m, c) in f.terms() {
        if m.j != 0 {
            return Err(QError::NotPlaneElement(m.j));
        }
        let pm = PolarMonomial::new(m.a + m.b, m.a as i64 - m.b as i64);
        out.add_term(pm, c.shift_s(polar_exponent(m.a, m.b)));
    }
    Ok(out)
}

/// Inverse of [`to_polar`]; rⁿe^{ijo} must have |j| ≤ n and n ≡ j mod 2.
pub fn from_polar(f: &PolarElement) -> Result<GroupElement> {
    let mut out = GroupElement::zero();
    for (m, c) in f.terms() {
        let n = m.n as i64;
        if m.j.abs() > n || (n - m.j) % 2 != 0 {
            return Err(QError::NotPolynomial { n: m.n, j: m.j });
        }
        let a = ((n + m.j) / 2) as u32;
        let b = ((n - m.j) / 2) as u32;
        out.add_term(GroupMonomial::new(0, a, b), c.shift_s(-polar_exponent(a, b)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::group::{g_mono, xi, z_minus, z_plus};

    #[test]
    fn generators() {
        assert_eq!(to_polar(&z_plus()).unwrap(), &r() * &e_io(1));
        assert_eq!(to_polar(&z_minus()).unwrap(), &e_io(-1) * &r());
        assert_eq!(to_polar(&xi()).unwrap(), p_mono(2, 0));
    }

    #[test]
    fn braiding() {
        assert_eq!(&e_io(1) * &r(), (&r() * &e_io(1)).scale(&QScalar::q_pow(-1)));
    }

    #[test]
    fn closed_form_matches_products() {
        let zp = &r() * &e_io(1);
        let zm = &e_io(-1) * &r();
        for a in 0..5 {
            for b in 0..5 {
                let prod = &zp.pow(a) * &zm.pow(b);
                assert_eq!(to_polar(&g_mono(0, a, b)).unwrap(), prod, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn rejects_n_and_non_polynomial() {
        assert_eq!(to_polar(&g_mono(1, 0, 0)), Err(QError::NotPlaneElement(1)));
        assert!(from_polar(&r()).is_err());
        assert!(from_polar(&p_mono(1, 3)).is_err());
    }
}
