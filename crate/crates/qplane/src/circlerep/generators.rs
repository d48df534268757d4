//! Matrix realization of the plane and momentum generators on H(S).

use num_complex::Complex64;
use serde::Serialize;

use super::operator::CircleOperator;
use crate::error::{QError, Result};
use crate::qcalc::DeformationParams;

/// Two momentum actions on the circle basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
pub enum MomentumRealization {
    /// p₊e_j = p0 q^{−j+1/2} e_{j−1}, p₋e_j = p0 q^{−j−1/2} e_{j+1}: the same form
    /// as z±. Satisfies [p₊, p₋] = (1 − q²)p₊p₋ and [p_x, p_y] = −i tanhΛ(p_x² + p_y²).
    #[default]
    Printed,
    /// p₊e_j = p0 q^{j−1/2} e_{j−1}, p₋e_j = p0 q^{j+1/2} e_{j+1}: satisfies
    /// p₊p₋ = q²p₋p₊ and [p_x, p_y] = +i tanhΛ(p_x² + p_y²).
    Dual,
}

#[derive(Clone, Debug)]
pub struct CircleGenerators {
    pub params: DeformationParams,
    pub jmax: i64,
    pub realization: MomentumRealization,
    pub z_plus: CircleOperator,
    pub z_minus: CircleOperator,
    pub n: CircleOperator,
    pub n_inv: CircleOperator,
    pub p_plus: CircleOperator,
    pub p_minus: CircleOperator,
    pub x: CircleOperator,
    pub y: CircleOperator,
    pub p_x: CircleOperator,
    pub p_y: CircleOperator,
    pub r: CircleOperator,
    pub e_io: CircleOperator,
    pub e_mio: CircleOperator,
    pub xi: CircleOperator,
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn build_generators(params: DeformationParams, jmax: i64, realization: MomentumRealization) -> Result<CircleGenerators> {
    if jmax < 4 {
        return Err(QError::InvalidParameter(format!("truncation J = {jmax} must be at least 4")));
    }
    let q = params.q;
    let qp = |e: f64| q.powf(e);
    let r0 = params.r0;
    let p0 = params.p0;
    let z_plus = CircleOperator::from_band(jmax, -1, |j| re(r0 * qp(-(j as f64) + 0.5)));
    let z_minus = CircleOperator::from_band(jmax, 1, |j| re(r0 * qp(-(j as f64) - 0.5)));
    let n = CircleOperator::from_band(jmax, -2, |_| re(1.0));
    let n_inv = CircleOperator::from_band(jmax, 2, |_| re(1.0));
    let (p_plus, p_minus) = match realization {
        MomentumRealization::Printed => (
            CircleOperator::from_band(jmax, -1, |j| re(p0 * qp(-(j as f64) + 0.5))),
            CircleOperator::from_band(jmax, 1, |j| re(p0 * qp(-(j as f64) - 0.5))),
        ),
        MomentumRealization::Dual => (
            CircleOperator::from_band(jmax, -1, |j| re(p0 * qp(j as f64 - 0.5))),
            CircleOperator::from_band(jmax, 1, |j| re(p0 * qp(j as f64 + 0.5))),
        ),
    };
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let x = (&z_plus + &z_minus).scale(re(s));
    let y = (&z_plus - &z_minus).scale(Complex64::new(0.0, -s));
    let p_x = (&p_plus + &p_minus).scale(re(s));
    let p_y = (&p_plus - &p_minus).scale(Complex64::new(0.0, s));
    let r = CircleOperator::from_band(jmax, 0, |j| re(r0 * qp(-(j as f64) - 0.5)));
    let e_io = CircleOperator::from_band(jmax, -1, |_| re(1.0));
    let e_mio = CircleOperator::from_band(jmax, 1, |_| re(1.0));
    let xi = &z_plus * &z_minus;
    Ok(CircleGenerators {
        params,
        jmax,
        realization,
        z_plus,
        z_minus,
        n,
        n_inv,
        p_plus,
        p_minus,
        x,
        y,
        p_x,
        p_y,
        r,
        e_io,
        e_mio,
        xi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlerep::operator::relation_check_interior;

    fn gens(q: f64) -> CircleGenerators {
        build_generators(DeformationParams::unit(q).unwrap(), 64, MomentumRealization::Printed).unwrap()
    }

    #[test]
    fn basis_action() {
        let g = gens(0.9);
        assert!((g.z_plus.entry(-1, 0).re - 0.9f64.sqrt()).abs() < 1e-15);
        for j in -5..=5 {
            let want = 0.9f64.powi(-2 * j as i32 - 1);
            assert!((g.xi.entry(j, j).re - want).abs() < 1e-13 * want);
        }
        let nn = &g.n * &g.n_inv;
        let (lo, hi) = nn.window();
        for j in lo..=hi {
            assert_eq!(nn.entry(j, j), re(1.0));
        }
    }

    #[test]
    fn polar_split() {
        let g = gens(0.9);
        let rc = relation_check_interior("z+ = r e^io", &g.z_plus, &(&g.r * &g.e_io)).unwrap();
        assert!(rc.max_deviation < 1e-15);
        let rc = relation_check_interior("z- = e^-io r", &g.z_minus, &(&g.e_mio * &g.r)).unwrap();
        assert!(rc.max_deviation < 1e-15);
        let br = relation_check_interior(
            "e^io r = q^-1 r e^io",
            &(&g.e_io * &g.r),
            &(&g.r * &g.e_io).scale(re(1.0 / 0.9)),
        )
        .unwrap();
        assert!(br.max_deviation < 1e-15);
    }

    #[test]
    fn truncation_independence() {
        let p = DeformationParams::unit(0.9).unwrap();
        let a = build_generators(p, 20, MomentumRealization::Printed).unwrap();
        let b = build_generators(p, 40, MomentumRealization::Printed).unwrap();
        let xa = &a.x.commutator(&a.y) * &a.r;
        let xb = &b.x.commutator(&b.y) * &b.r;
        let (lo, hi) = xa.window();
        for c in lo..=hi {
            for row in c - 3..=c + 3 {
                let (u, v) = (xa.entry(row, c), xb.entry(row, c));
                assert_eq!((u.re.to_bits(), u.im.to_bits()), (v.re.to_bits(), v.im.to_bits()));
            }
        }
    }
}
