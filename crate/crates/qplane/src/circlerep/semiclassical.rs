//! Expectation of the tensor-space Hamiltonian (p_x² + p_y²)/2m · e^{−2Λl/ħ}
//! on a product state u ⊗ v, with l replaced by a selected surrogate.

use num_complex::Complex64;
use serde::Serialize;

use super::generators::CircleGenerators;
use super::operator::CircleOperator;
use super::state::{expectation, CircleState, TAIL_TOL};
use crate::dynamics::semiclassical_h_value;
use crate::error::{QError, Result};

/// Stand-in for the angular momentum on H(S) ⊗ H(S).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LSurrogate {
    /// l = x ⊗ p_y − y ⊗ p_x
    XPyMinusYPx,
    /// l = 0: the exponential factor is dropped
    Zero,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemiclassicalReport {
    pub surrogate: LSurrogate,
    pub value: Complex64,
    pub x: f64,
    pub y: f64,
    pub p_x: f64,
    pub p_y: f64,
    /// (⟨p_x⟩² + ⟨p_y⟩²)/2m
    pub kinetic: f64,
    /// classical (p²/2m) e^{−2Λl/ħ} at the expectation values
    pub classical: f64,
    /// Re(value) / classical, or None when the classical value vanishes
    pub ratio: Option<f64>,
    pub taylor_terms: usize,
    /// largest |entry| on the last two basis rows/columns of any Taylor
    /// term, relative to the largest entry of u ⊗ v
    pub truncation_tail: f64,
}

/// Dense block of a tensor over rows `rows.0..=rows.1`, columns
/// `cols.0..=cols.1` of the basis; everything outside is zero.
struct Block {
    rows: (i64, i64),
    cols: (i64, i64),
    w: Vec<Vec<Complex64>>,
}

/// Support of `u` (entries above 1e-3·TAIL_TOL of the peak) widened by
/// `margin` and clipped to the basis.
fn support(u: &CircleState, margin: i64) -> (i64, i64) {
    let j = u.jmax();
    let peak = u.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let keep = |i: &i64| u.coeff(*i).norm() > 1e-3 * TAIL_TOL * peak;
    let lo = (-j..=j).find(keep).unwrap_or(0);
    let hi = (-j..=j).rev().find(keep).unwrap_or(0);
    ((lo - margin).max(-j), (hi + margin).min(j))
}

impl Block {
    fn zero_like(&self) -> Block {
        let n = (self.cols.1 - self.cols.0 + 1) as usize;
        Block { rows: self.rows, cols: self.cols, w: vec![vec![Complex64::new(0.0, 0.0); n]; self.w.len()] }
    }

    /// (A ⊗ 1)
    fn left(&self, op: &CircleOperator) -> Block {
        let mut out = self.zero_like();
        for c in self.rows.0..=self.rows.1 {
            let src = &self.w[(c - self.rows.0) as usize];
            for (t, a) in op.column(c) {
                if t < self.rows.0 || t > self.rows.1 {
                    continue;
                }
                for (o, v) in out.w[(t - self.rows.0) as usize].iter_mut().zip(src) {
                    *o += a * v;
                }
            }
        }
        out
    }

    /// (1 ⊗ B)
    fn right(&self, op: &CircleOperator) -> Block {
        let mut out = self.zero_like();
        for (src, dst) in self.w.iter().zip(out.w.iter_mut()) {
            for c in self.cols.0..=self.cols.1 {
                let v = src[(c - self.cols.0) as usize];
                if v == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for (t, a) in op.column(c) {
                    if t >= self.cols.0 && t <= self.cols.1 {
                        dst[(t - self.cols.0) as usize] += a * v;
                    }
                }
            }
        }
        out
    }

    fn max_abs(&self) -> f64 {
        self.w.iter().flatten().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Largest entry on the outer two rows/columns of the block.
    fn edge_abs(&self) -> f64 {
        let (nr, nc) = (self.w.len(), self.w.first().map_or(0, |r| r.len()));
        let mut m = 0.0f64;
        for (i, row) in self.w.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if i < 2 || i + 2 >= nr || j < 2 || j + 2 >= nc {
                    m = m.max(c.norm());
                }
            }
        }
        m
    }

    fn axpy(&mut self, f: Complex64, o: &Block) {
        for (rs, ro) in self.w.iter_mut().zip(&o.w) {
            for (s, v) in rs.iter_mut().zip(ro) {
                *s += f * v;
            }
        }
    }
}

/// Room left around the state supports for the spreading Taylor terms.
const MARGIN: i64 = 64;

/// (u ⊗ v, ℋ u ⊗ v) with ℋ = (1 ⊗ (p_x² + p_y²))/2m · exp(−2Λ l/ħ); the
/// exponential is summed as a Taylor series on the dense tensor.
pub fn semiclassical_h_expectation(
    u: &CircleState,
    v: &CircleState,
    g: &CircleGenerators,
    surrogate: LSurrogate,
) -> Result<SemiclassicalReport> {
    let p = g.params;
    let jmax = g.jmax;
    if u.jmax() != jmax || v.jmax() != jmax {
        return Err(QError::InvalidParameter("states and generators on different truncations".into()));
    }
    let x = expectation(u, &g.x)?.re;
    let y = expectation(u, &g.y)?.re;
    let px = expectation(v, &g.p_x)?.re;
    let py = expectation(v, &g.p_y)?.re;
    let p2 = &(&g.p_x * &g.p_x) + &(&g.p_y * &g.p_y);
    v.check_window(&p2)?;

    let rows = support(u, MARGIN);
    let cols = support(v, MARGIN);
    let w0 = Block {
        rows,
        cols,
        w: (rows.0..=rows.1).map(|i| (cols.0..=cols.1).map(|j| u.coeff(i) * v.coeff(j)).collect()).collect(),
    };
    let peak = w0.max_abs();
    let mut tail = w0.edge_abs() / peak;
    let mut sum = w0.zero_like();
    sum.axpy(Complex64::new(1.0, 0.0), &w0);
    let mut terms = 1;
    if surrogate == LSurrogate::XPyMinusYPx {
        let c = -2.0 * p.lambda / p.hbar;
        let mut t = w0;
        for k in 1..MARGIN - 2 {
            let mut next = t.left(&g.x).right(&g.p_y);
            next.axpy(Complex64::new(-1.0, 0.0), &t.left(&g.y).right(&g.p_x));
            t = next.zero_like();
            t.axpy(Complex64::new(c / k as f64, 0.0), &next);
            tail = tail.max(t.edge_abs() / peak);
            sum.axpy(Complex64::new(1.0, 0.0), &t);
            terms += 1;
            if t.max_abs() < 1e-17 * sum.max_abs() {
                break;
            }
            if k == MARGIN - 3 {
                return Err(QError::NonConvergence { terms });
            }
        }
    }
    if tail > 1e3 * TAIL_TOL {
        return Err(QError::WindowViolation { column: jmax, lo: -jmax + 2, hi: jmax - 2 });
    }
    let hw = sum.right(&p2);
    let mut value = Complex64::new(0.0, 0.0);
    for (i, row) in (rows.0..=rows.1).zip(&hw.w) {
        for (j, h) in (cols.0..=cols.1).zip(row) {
            value += (u.coeff(i) * v.coeff(j)).conj() * h;
        }
    }
    value /= 2.0 * p.m;
    let kinetic = (px * px + py * py) / (2.0 * p.m);
    let classical = match surrogate {
        LSurrogate::XPyMinusYPx => semiclassical_h_value(x, y, px, py, &p),
        LSurrogate::Zero => kinetic,
    };
    let ratio = (classical != 0.0).then(|| value.re / classical);
    Ok(SemiclassicalReport {
        surrogate,
        value,
        x,
        y,
        p_x: px,
        p_y: py,
        kinetic,
        classical,
        ratio,
        taylor_terms: terms,
        truncation_tail: tail,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circlerep::generators::{build_generators, MomentumRealization};
    use crate::circlerep::state::{gaussian_angle_state, gaussian_required_j};
    use crate::qcalc::DeformationParams;

    fn run(q: f64, r: f64, theta: f64, pm: f64, phi: f64) -> SemiclassicalReport {
        let p = DeformationParams::unit(q).unwrap();
        let jmax = gaussian_required_j(r, 1.0, p.lambda).max(gaussian_required_j(pm, 1.0, p.lambda)) + 4;
        let g = build_generators(p, jmax, MomentumRealization::Printed).unwrap();
        let (u, _) = gaussian_angle_state(theta, r, 1.0, p.lambda, jmax).unwrap();
        let (v, _) = gaussian_angle_state(phi, pm, 1.0, p.lambda, jmax).unwrap();
        semiclassical_h_expectation(&u, &v, &g, LSurrogate::XPyMinusYPx).unwrap()
    }

    #[test]
    fn classical_limit() {
        let rep = run(0.9999, 1.2, 0.4, 0.8, 1.5);
        assert!(((rep.value.re - rep.kinetic) / rep.kinetic).abs() < 1e-3, "{rep:?}");
    }

    #[test]
    fn vanishing_momentum() {
        let rep = run(0.9, 1.0, 0.3, 1e-6, 0.0);
        assert!(rep.value.norm() < 1e-10, "{rep:?}");
    }

    #[test]
    fn zero_surrogate_is_plain_kinetic_expectation() {
        let p = DeformationParams::unit(0.95).unwrap();
        let jmax = gaussian_required_j(1.5, 1.0, p.lambda) + 4;
        let g = build_generators(p, jmax, MomentumRealization::Printed).unwrap();
        let (u, _) = gaussian_angle_state(0.0, 1.0, 1.0, p.lambda, jmax).unwrap();
        let (v, _) = gaussian_angle_state(0.3, 1.5, 1.0, p.lambda, jmax).unwrap();
        let rep = semiclassical_h_expectation(&u, &v, &g, LSurrogate::Zero).unwrap();
        let p2 = &(&g.p_x * &g.p_x) + &(&g.p_y * &g.p_y);
        let want = expectation(&v, &p2).unwrap() / 2.0;
        assert!((rep.value - want).norm() < 1e-13 * want.norm());
    }
}
