//! Finite sums of angular sectors Σ_j F_j(r)e^{ijo} on the r-lattice, the
//! carrier for momentum moments of non-radial states.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::radial::{Flavor, RadialPacket};
use crate::error::{QError, Result};
use crate::hopf::polar::PolarElement;
use crate::qcalc::DeformationParams;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct MultiSector {
    pub sectors: BTreeMap<i64, RadialPacket>,
}

impl MultiSector {
    pub fn single(p: RadialPacket) -> Result<Self> {
        if p.flavor != Flavor::H {
            return Err(QError::InvalidParameter("multi-sector states live in H".into()));
        }
        Ok(MultiSector { sectors: BTreeMap::from([(p.j, p)]) })
    }

    /// f·G(ξ) for a polynomial f = Σ c_{nj} rⁿe^{ijo} and a radial envelope G.
    /// Moving e^{ijo} past G(r²) rescales its argument: e^{ijo}G(r²) =
    /// G(q⁻²ʲr²)e^{ijo}, so F_j(r) = Σ_n c_{nj} rⁿ G(q⁻²ʲr²).
    pub fn from_polar_with_envelope(
        f: &PolarElement,
        params: &DeformationParams,
        tol: f64,
        envelope: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        let q = params.q;
        let mut by_j: BTreeMap<i64, Vec<(u32, Complex64)>> = BTreeMap::new();
        for (m, c) in f.terms() {
            by_j.entry(m.j).or_default().push((m.n, c.eval(q)));
        }
        let mut sectors = BTreeMap::new();
        for (j, terms) in by_j {
            let scale = q.powi(-2 * j as i32);
            let p = RadialPacket::sample(j, Flavor::H, params, tol, |r| {
                let poly: Complex64 = terms.iter().map(|(n, c)| c * r.powi(*n as i32)).sum();
                poly * envelope(scale * r * r)
            })?;
            sectors.insert(j, p);
        }
        Ok(MultiSector { sectors })
    }

    pub fn inner(&self, o: &Self) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, p) in &self.sectors {
            if let Some(g) = o.sectors.get(j) {
                acc += p.inner(g)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        MultiSector { sectors: self.sectors.iter().map(|(j, p)| (*j, p.scale(c))).collect() }
    }

    /// a·self + b·o
    pub fn lin(&self, a: Complex64, o: &Self, b: Complex64) -> Result<Self> {
        let mut sectors = BTreeMap::new();
        for j in self.sectors.keys().chain(o.sectors.keys()) {
            if sectors.contains_key(j) {
                continue;
            }
            let v = match (self.sectors.get(j), o.sectors.get(j)) {
                (Some(x), Some(y)) => x.combine(y, |u, v| a * u + b * v)?,
                (Some(x), None) => x.scale(a),
                (None, Some(y)) => y.scale(b),
                (None, None) => unreachable!(),
            };
            sectors.insert(*j, v);
        }
        Ok(MultiSector { sectors })
    }

    fn map_sectors(&self, f: impl Fn(&RadialPacket) -> Result<RadialPacket>) -> Result<Self> {
        let mut out = MultiSector::default();
        for p in self.sectors.values() {
            let v = f(p)?;
            let add = MultiSector { sectors: BTreeMap::from([(v.j, v)]) };
            out = out.lin(Complex64::new(1.0, 0.0), &add, Complex64::new(1.0, 0.0))?;
        }
        Ok(out)
    }

    /// p̂₊ = ħR(p₊)
    pub fn p_plus(&self, hbar: f64) -> Result<Self> {
        self.map_sectors(|p| Ok(p.r_p_plus()?.scale(Complex64::new(hbar, 0.0))))
    }

    /// p̂₋ = ħR(p₋)
    pub fn p_minus(&self, hbar: f64) -> Result<Self> {
        self.map_sectors(|p| Ok(p.r_p_minus()?.scale(Complex64::new(hbar, 0.0))))
    }

    /// p̂_x = (p̂₊ + p̂₋)/√2
    pub fn p_x(&self, hbar: f64) -> Result<Self> {
        let s = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        self.p_plus(hbar)?.lin(s, &self.p_minus(hbar)?, s)
    }

    /// p̂_y = (i/√2)(p̂₊ − p̂₋)
    pub fn p_y(&self, hbar: f64) -> Result<Self> {
        let s = Complex64::new(0.0, std::f64::consts::FRAC_1_SQRT_2);
        self.p_plus(hbar)?.lin(s, &self.p_minus(hbar)?, -s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planefun::function::PlaneFunction;
    use crate::qcalc::QScalar;

    fn state(f: &PlaneFunction, p: &DeformationParams) -> MultiSector {
        MultiSector::from_polar_with_envelope(&f.to_polar(), p, 1e-14, |x| (-x / 3.0).exp()).unwrap()
    }

    #[test]
    fn momenta_are_symmetric() {
        let p = DeformationParams::unit(0.9).unwrap();
        let f = state(&PlaneFunction::monomial(2, 1).add(&PlaneFunction::term(0, 1, QScalar::ratio(1, 2))), &p);
        let g = state(&PlaneFunction::monomial(1, 0).add(&PlaneFunction::monomial(0, 2)), &p);
        for (name, a, b) in [
            ("p_x", f.p_x(1.0).unwrap().inner(&g).unwrap(), f.inner(&g.p_x(1.0).unwrap()).unwrap()),
            ("p_y", f.p_y(1.0).unwrap().inner(&g).unwrap(), f.inner(&g.p_y(1.0).unwrap()).unwrap()),
        ] {
            assert!((a - b).norm() < 1e-10 * a.norm().max(1e-6), "{name}: {a} vs {b}");
        }
    }

    #[test]
    fn momentum_commutator_holds_on_lattice() {
        let p = DeformationParams::unit(0.8).unwrap();
        // degree ≥ 2 keeps F/r² bounded, so the two 1/r factors of a second
        // order product do not amplify rounding near the origin
        let f = state(&PlaneFunction::monomial(1, 2).add(&PlaneFunction::monomial(1, 1)), &p);
        let (px, py) = (f.p_x(1.0).unwrap(), f.p_y(1.0).unwrap());
        let one = Complex64::new(1.0, 0.0);
        let lhs = py.p_x(1.0).unwrap().lin(one, &px.p_y(1.0).unwrap(), -one).unwrap();
        let sq = px.p_x(1.0).unwrap().lin(one, &py.p_y(1.0).unwrap(), one).unwrap();
        let rhs = sq.scale(Complex64::new(0.0, -p.tanh_lambda()));
        let d = lhs.lin(one, &rhs, -one).unwrap();
        let n = d.inner(&d).unwrap().re.sqrt() / lhs.inner(&lhs).unwrap().re.sqrt();
        assert!(n < 1e-10, "{n}");
    }

    #[test]
    fn polynomials_are_not_square_summable() {
        let p = DeformationParams::unit(0.9).unwrap();
        let f = PlaneFunction::monomial(1, 0).to_polar();
        assert!(MultiSector::from_polar_with_envelope(&f, &p, 1e-12, |_| 1.0).is_err());
    }
}
