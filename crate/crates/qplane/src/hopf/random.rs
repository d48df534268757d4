//! Seeded random elements for property checks.

use rand::Rng;

use super::dual::{DualConvention, DualElement, DualMonomial};
use super::group::{GroupElement, GroupMonomial};
use crate::qcalc::{Coeff, QScalar};

/// Small Gaussian-integer coefficient times a random power q^(e/2).
pub fn random_scalar<R: Rng>(rng: &mut R) -> QScalar {
    let re = rng.gen_range(-3i64..=3);
    let im = rng.gen_range(-2i64..=2);
    let c = &QScalar::int(re) + &(QScalar::i() * QScalar::int(im));
    let c = if c.is_zero() { QScalar::one() } else { c };
    let e = rng.gen_range(-3i64..=3);
    c.shift_s(e)
}

/// Random element with up to `terms` monomials of z-degree ≤ `degree` and
/// n-powers in `[-jmax, jmax]`.
pub fn random_group_element<R: Rng>(rng: &mut R, degree: u32, jmax: i64, terms: usize) -> GroupElement {
    let mut f = GroupElement::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=degree);
        let a = rng.gen_range(0..=d);
        let j = if jmax > 0 { rng.gen_range(-jmax..=jmax) } else { 0 };
        f.add_term(GroupMonomial::new(j, a, d - a), random_scalar(rng));
    }
    f
}

/// Random plane element (no n-powers).
pub fn random_plane_element<R: Rng>(rng: &mut R, degree: u32, terms: usize) -> GroupElement {
    random_group_element(rng, degree, 0, terms)
}

pub fn random_dual_element<C: DualConvention, R: Rng>(rng: &mut R, degree: u32, jmax: i64, terms: usize) -> DualElement<C> {
    let mut f = DualElement::zero();
    for _ in 0..terms {
        let d = rng.gen_range(0..=degree);
        let k = rng.gen_range(0..=d);
        let j = if jmax > 0 { rng.gen_range(-jmax..=jmax) } else { 0 };
        f.add_term(DualMonomial::new(d - k, k, j), random_scalar(rng));
    }
    f
}

/// Rational coefficient helper for callers that want real data.
pub fn rational(n: i64, d: i64) -> QScalar {
    QScalar::constant(Coeff::ratio(n, d))
}
