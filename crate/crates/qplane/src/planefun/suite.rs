//! Exact identity suite on all plane monomials up to a given degree.

use serde::Serialize;

use super::function::{apply_l, apply_momentum, apply_position, exp_l, Axis, PlaneFunction};
use crate::hopf::group::{x, y, z_minus, z_plus};
use crate::hopf::GroupElement;
use crate::qcalc::QScalar;

/// One identity checked exactly on a list of inputs.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub checked: usize,
    /// inputs on which the two sides differ, with the difference
    pub failures: Vec<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn new(name: &str) -> Self {
        IdentityCheck { name: name.to_string(), checked: 0, failures: Vec::new() }
    }

    pub fn record(&mut self, case: impl FnOnce() -> String, lhs: &PlaneFunction, rhs: &PlaneFunction) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(format!("{}: residual {:?}", case(), lhs.sub(rhs).element()));
        }
    }
}

fn element_check(name: &str, lhs: GroupElement, rhs: GroupElement) -> IdentityCheck {
    let mut c = IdentityCheck::new(name);
    c.checked = 1;
    if lhs != rhs {
        c.failures.push(format!("residual {:?}", &lhs - &rhs));
    }
    c
}

/// Algebra relations for z±, x, y as elements, and the phase-space relations
/// for x̂, ŷ, p̂_x, p̂_y, l̂ on every monomial of degree ≤ `degree`.
pub fn exact_algebra_suite(degree: u32, hbar: &QScalar) -> Vec<IdentityCheck> {
    let i = QScalar::i();
    let t = QScalar::tanh_lambda();
    let one = QScalar::one();
    let mut out = vec![
        element_check(
            "[z+, z-] = (1 - q^2) z+ z-",
            z_plus().commutator(&z_minus()),
            (&z_plus() * &z_minus()).scale(&(&one - &QScalar::q_pow(2))),
        ),
        element_check(
            "[x, y] = i tanh(L) (x^2 + y^2)",
            x().commutator(&y()),
            (&(&x() * &x()) + &(&y() * &y())).scale(&(&i * &t)),
        ),
    ];
    let names = [
        "[x^, y^] = -i tanh(L) (x^2 + y^2)",
        "[p_x, p_y] = -i tanh(L) (p_x^2 + p_y^2)",
        "[p_x, x^] = i hbar e^(2 L l/hbar)",
        "[p_y, y^] = i hbar e^(2 L l/hbar)",
        "[p_x, y^] = 0",
        "[p_y, x^] = 0",
        "[l, y^] = -i hbar x^",
        "[l, x^] = i hbar y^",
        "[l, p_x] = i hbar p_y",
        "[l, p_y] = -i hbar p_x",
    ];
    let mut checks: Vec<IdentityCheck> = names.iter().map(|n| IdentityCheck::new(n)).collect();
    let pos = |a, f: &PlaneFunction| apply_position(a, f);
    let mom = |a, f: &PlaneFunction| apply_momentum(a, f, hbar);
    let l = |f: &PlaneFunction| apply_l(f, hbar);
    let ih = &i * hbar;
    for f in PlaneFunction::basis(degree) {
        let case = || format!("{:?}", f.element());
        let (fx, fy) = (pos(Axis::X, &f), pos(Axis::Y, &f));
        let (px, py) = (mom(Axis::X, &f), mom(Axis::Y, &f));
        let e2l = exp_l(&f, 2).scale(&ih);
        let zero = PlaneFunction::zero();
        let cases: [(PlaneFunction, PlaneFunction); 10] = [
            (pos(Axis::X, &fy).sub(&pos(Axis::Y, &fx)), pos(Axis::X, &fx).add(&pos(Axis::Y, &fy)).scale(&(-&i * &t))),
            (
                mom(Axis::X, &py).sub(&mom(Axis::Y, &px)),
                mom(Axis::X, &px).add(&mom(Axis::Y, &py)).scale(&(-&i * &t)),
            ),
            (mom(Axis::X, &fx).sub(&pos(Axis::X, &px)), e2l.clone()),
            (mom(Axis::Y, &fy).sub(&pos(Axis::Y, &py)), e2l),
            (mom(Axis::X, &fy).sub(&pos(Axis::Y, &px)), zero.clone()),
            (mom(Axis::Y, &fx).sub(&pos(Axis::X, &py)), zero),
            (l(&fy).sub(&pos(Axis::Y, &l(&f))), fx.scale(&-&ih)),
            (l(&fx).sub(&pos(Axis::X, &l(&f))), fy.scale(&ih)),
            (l(&px).sub(&mom(Axis::X, &l(&f))), py.scale(&ih)),
            (l(&py).sub(&mom(Axis::Y, &l(&f))), px.scale(&-&ih)),
        ];
        for (chk, (lhs, rhs)) in checks.iter_mut().zip(cases.iter()) {
            chk.record(case, lhs, rhs);
        }
    }
    out.extend(checks);
    out
}
