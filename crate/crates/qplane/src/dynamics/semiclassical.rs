use crate::qcalc::DeformationParams;

/// (p_x² + p_y²)/2m · e^{−2Λl/ħ} with the classical l = x p_y − y p_x.
pub fn semiclassical_h_value(x: f64, y: f64, px: f64, py: f64, p: &DeformationParams) -> f64 {
    let l = x * py - y * px;
    (px * px + py * py) / (2.0 * p.m) * (-2.0 * p.lambda * l / p.hbar).exp()
}
