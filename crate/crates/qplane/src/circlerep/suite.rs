//! Commutation relations and adjointness of the circle realization.

use num_complex::Complex64;

use super::generators::{build_generators, MomentumRealization};
use super::operator::{relation_check_interior, CircleOperator, RelationCheck};
use crate::error::Result;
use crate::qcalc::DeformationParams;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn sq(a: &CircleOperator) -> CircleOperator {
    a * a
}

/// Relations on the interior window. The momentum commutator is checked in
/// the dual realization (where [p_x, p_y] = +i tanhΛ(p_x² + p_y²) holds);
/// the printed one satisfies it with the opposite sign, also listed.
pub fn circle_relation_suite(params: DeformationParams, jmax: i64) -> Result<Vec<RelationCheck>> {
    let g = build_generators(params, jmax, MomentumRealization::Printed)?;
    let d = build_generators(params, jmax, MomentumRealization::Dual)?;
    let q = params.q;
    let th = params.tanh_lambda();
    let i_th = Complex64::new(0.0, th);
    let id = CircleOperator::identity(jmax);
    let mut out = vec![
        relation_check_interior("[z+, z-] = (1 - q^2) z+ z-", &g.z_plus.commutator(&g.z_minus), &(&g.z_plus * &g.z_minus).scale(c(1.0 - q * q)))?,
        relation_check_interior("[x, y] = i tanh(L) (x^2 + y^2)", &g.x.commutator(&g.y), &(&sq(&g.x) + &sq(&g.y)).scale(i_th))?,
        relation_check_interior("e^io r = q^-1 r e^io", &(&g.e_io * &g.r), &(&g.r * &g.e_io).scale(c(1.0 / q)))?,
        relation_check_interior("z+ = r e^io", &g.z_plus, &(&g.r * &g.e_io))?,
        relation_check_interior("z- = e^-io r", &g.z_minus, &(&g.e_mio * &g.r))?,
        relation_check_interior("[xi, r] = 0", &g.xi.commutator(&g.r), &CircleOperator::zero(jmax))?,
        relation_check_interior("[p+, p-] = (1 - q^2) p+ p- (printed)", &g.p_plus.commutator(&g.p_minus), &(&g.p_plus * &g.p_minus).scale(c(1.0 - q * q)))?,
        relation_check_interior("p+ p- = q^2 p- p+ (dual)", &(&d.p_plus * &d.p_minus), &(&d.p_minus * &d.p_plus).scale(c(q * q)))?,
        relation_check_interior("[p_x, p_y] = i tanh(L) (p_x^2 + p_y^2) (dual)", &d.p_x.commutator(&d.p_y), &(&sq(&d.p_x) + &sq(&d.p_y)).scale(i_th))?,
        relation_check_interior("[p_x, p_y] = -i tanh(L) (p_x^2 + p_y^2) (printed)", &g.p_x.commutator(&g.p_y), &(&sq(&g.p_x) + &sq(&g.p_y)).scale(-i_th))?,
        relation_check_interior("z+^* = z-", &g.z_plus.adjoint(), &g.z_minus)?,
        relation_check_interior("n^* = n^-1", &g.n.adjoint(), &g.n_inv)?,
        relation_check_interior("e^io^* e^io = 1", &(&g.e_io.adjoint() * &g.e_io), &id)?,
    ];
    for (name, a) in [
        ("x^* = x", &g.x),
        ("y^* = y", &g.y),
        ("r^* = r", &g.r),
        ("p_x^* = p_x (printed)", &g.p_x),
        ("p_y^* = p_y (printed)", &g.p_y),
        ("p_x^* = p_x (dual)", &d.p_x),
        ("p_y^* = p_y (dual)", &d.p_y),
    ] {
        out.push(relation_check_interior(name, &a.adjoint(), a)?);
    }
    Ok(out)
}
