//! E_q(2): generators n^±1, z₊, z₋ with z₊z₋ = q⁻²z₋z₊ and z±n = q²nz±,
//! normal order nʲz₊ᵃz₋ᵇ.

use std::fmt;

use serde::Serialize;

use super::element::{tensor, Element, Monomial, Tensor};
use crate::qcalc::QScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupMonomial {
    pub j: i64,
    pub a: u32,
    pub b: u32,
}

impl GroupMonomial {
    pub const fn new(j: i64, a: u32, b: u32) -> Self {
        GroupMonomial { j, a, b }
    }

    pub fn degree(&self) -> u32 {
        self.a + self.b
    }

    /// Left and right U(1) grades of a basis monomial.
    pub fn grade(&self) -> (i64, i64) {
        (self.j + self.a as i64 - self.b as i64, self.j)
    }
}

impl Monomial for GroupMonomial {
    fn one() -> Self {
        GroupMonomial::new(0, 0, 0)
    }

    fn mul(&self, o: &Self) -> (i64, Self) {
        // n^j' moves left past z₊ᵃz₋ᵇ (q^{2j'(a+b)}), then z₋ᵇ past z₊^a' (q^{2ba'})
        let e = 4 * o.j * (self.a + self.b) as i64 + 4 * (self.b * o.a) as i64;
        (e, GroupMonomial::new(self.j + o.j, self.a + o.a, self.b + o.b))
    }
}

impl fmt::Display for GroupMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.j {
            0 => {}
            1 => parts.push("n".to_string()),
            j => parts.push(format!("n^{j}")),
        }
        for (name, p) in [("z+", self.a), ("z-", self.b)] {
            match p {
                0 => {}
                1 => parts.push(name.to_string()),
                p => parts.push(format!("{name}^{p}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

pub type GroupElement = Element<GroupMonomial>;
pub type GroupTensor = Tensor<GroupMonomial>;

pub fn g_mono(j: i64, a: u32, b: u32) -> GroupElement {
    GroupElement::monomial(GroupMonomial::new(j, a, b), QScalar::one())
}

pub fn z_plus() -> GroupElement {
    g_mono(0, 1, 0)
}

pub fn z_minus() -> GroupElement {
    g_mono(0, 0, 1)
}

pub fn n_pow(j: i64) -> GroupElement {
    g_mono(j, 0, 0)
}

/// x = (z₊ + z₋)/√2
pub fn x() -> GroupElement {
    (&z_plus() + &z_minus()).scale(&QScalar::inv_sqrt2())
}

/// y = (z₊ − z₋)/(√2 i)
pub fn y() -> GroupElement {
    (&z_plus() - &z_minus()).scale(&(QScalar::inv_sqrt2() / QScalar::i()))
}

/// ξ = z₊z₋
pub fn xi() -> GroupElement {
    g_mono(0, 1, 1)
}

/// Involution: z±* = z∓, n* = n⁻¹, antilinear and order-reversing.
pub fn star(f: &GroupElement) -> GroupElement {
    let mut out = GroupElement::zero();
    for (m, c) in f.terms() {
        // (nʲz₊ᵃz₋ᵇ)* = z₊ᵇ z₋ᵃ n⁻ʲ
        let t = &g_mono(0, m.b, m.a) * &n_pow(-m.j);
        out = &out + &t.scale(&c.conj());
    }
    out
}

fn delta_monomial(m: &GroupMonomial) -> GroupTensor {
    let dn = tensor(&n_pow(m.j), &n_pow(m.j));
    let dzp = &tensor(&z_plus(), &GroupElement::one()) + &tensor(&n_pow(1), &z_plus());
    let dzm = &tensor(&z_minus(), &GroupElement::one()) + &tensor(&n_pow(-1), &z_minus());
    &(&dn * &dzp.pow(m.a)) * &dzm.pow(m.b)
}

/// Δ(z±) = z± ⊗ 1 + n^±1 ⊗ z±, Δ(n) = n ⊗ n, extended multiplicatively.
pub fn coproduct(f: &GroupElement) -> GroupTensor {
    f.map_linear(delta_monomial)
}

/// ε(z±) = 0, ε(n^±1) = 1.
pub fn counit(f: &GroupElement) -> QScalar {
    f.apply_functional(|m| if m.a == 0 && m.b == 0 { QScalar::one() } else { QScalar::zero() })
}

/// S(z₊) = −n⁻¹z₊, S(z₋) = −n z₋, S(n) = n⁻¹, extended as an anti-homomorphism.
pub fn antipode(f: &GroupElement) -> GroupElement {
    let sp = -&(&n_pow(-1) * &z_plus());
    let sm = -&(&n_pow(1) * &z_minus());
    f.map_linear(|m| &(&sm.pow(m.b) * &sp.pow(m.a)) * &n_pow(-m.j))
}

/// `(id ⊗ ε)` and `(ε ⊗ id)` on a tensor.
pub fn counit_right(t: &GroupTensor) -> GroupElement {
    let mut out = GroupElement::zero();
    for ((l, r), c) in t.terms() {
        let e = counit(&GroupElement::monomial(*r, QScalar::one()));
        out.add_term(*l, c * &e);
    }
    out
}

pub fn counit_left(t: &GroupTensor) -> GroupElement {
    let mut out = GroupElement::zero();
    for ((l, r), c) in t.terms() {
        let e = counit(&GroupElement::monomial(*l, QScalar::one()));
        out.add_term(*r, c * &e);
    }
    out
}

/// Multiplication map `a ⊗ b ↦ ab`.
pub fn multiply(t: &GroupTensor) -> GroupElement {
    let mut out = GroupElement::zero();
    for ((l, r), c) in t.terms() {
        let (e, m) = l.mul(r);
        out.add_term(m, c.shift_s(e));
    }
    out
}

/// φ_K: z± ↦ 0, n^±1 ↦ t^±1. Returns the t-power for monomials that survive.
fn phi_k(m: &GroupMonomial) -> Option<i64> {
    (m.a == 0 && m.b == 0).then_some(m.j)
}

/// Left/right U(1) grades `(i, j)` read off `(φ_K ⊗ id)Δ` and `(id ⊗ φ_K)Δ`.
///
/// Returns one entry per monomial of `f`; a homogeneous element has all
/// entries equal (see [`grade`]).
pub fn monomial_grades(f: &GroupElement) -> Vec<(GroupMonomial, (i64, i64))> {
    f.terms()
        .map(|(m, _)| {
            let d = delta_monomial(m);
            let mut left = None;
            let mut right = None;
            for ((l, r), c) in d.terms() {
                if c.is_zero() {
                    continue;
                }
                if r == m {
                    if let Some(t) = phi_k(l) {
                        left = Some(t);
                    }
                }
                if l == m {
                    if let Some(t) = phi_k(r) {
                        right = Some(t);
                    }
                }
            }
            (*m, (left.expect("L_K leg present"), right.expect("R_K leg present")))
        })
        .collect()
}

/// Grade of a homogeneous element; `None` when the monomials disagree.
pub fn grade(f: &GroupElement) -> Option<(i64, i64)> {
    if f.is_zero() {
        return Some((0, 0));
    }
    let g = monomial_grades(f);
    let first = g[0].1;
    g.iter().all(|(_, x)| *x == first).then_some(first)
}

/// Maximal z-degree.
pub fn degree(f: &GroupElement) -> u32 {
    f.terms().map(|(m, _)| m.degree()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_minus_z_plus_reorders() {
        assert_eq!(&z_minus() * &z_plus(), g_mono(0, 1, 1).scale(&QScalar::q_pow(2)));
    }

    #[test]
    fn z_plus_n_reorders() {
        assert_eq!(&z_plus() * &n_pow(1), g_mono(1, 1, 0).scale(&QScalar::q_pow(2)));
    }

    #[test]
    fn unit_is_neutral() {
        let f = &x() * &y();
        assert_eq!(&GroupElement::one() * &f, f);
    }

    #[test]
    fn commutator_z() {
        let c = z_plus().commutator(&z_minus());
        let want = xi().scale(&(QScalar::one() - QScalar::q_pow(2)));
        assert_eq!(c, want);
    }

    #[test]
    fn commutator_xy() {
        let c = x().commutator(&y());
        let x2y2 = &x().pow(2) + &y().pow(2);
        assert_eq!(c, x2y2.scale(&(QScalar::i() * QScalar::tanh_lambda())));
    }

    #[test]
    fn coproduct_generators() {
        let d = coproduct(&z_plus());
        let want = &tensor(&z_plus(), &GroupElement::one()) + &tensor(&n_pow(1), &z_plus());
        assert_eq!(d, want);
        assert_eq!(coproduct(&n_pow(1)), tensor(&n_pow(1), &n_pow(1)));
        assert_eq!(coproduct(&GroupElement::one()), tensor(&GroupElement::one(), &GroupElement::one()));
    }

    #[test]
    fn counit_antipode_generators() {
        assert_eq!(counit(&n_pow(1)), QScalar::one());
        assert_eq!(counit(&n_pow(-1)), QScalar::one());
        assert_eq!(counit(&z_plus()), QScalar::zero());
        assert_eq!(antipode(&z_plus()), -&g_mono(-1, 1, 0));
        assert_eq!(antipode(&GroupElement::one()), GroupElement::one());
        assert_eq!(counit(&GroupElement::one()), QScalar::one());
    }

    #[test]
    fn grades() {
        assert_eq!(grade(&z_plus()), Some((1, 0)));
        assert_eq!(grade(&n_pow(1)), Some((1, 1)));
        assert_eq!(grade(&GroupElement::one()), Some((0, 0)));
        assert_eq!(grade(&x()), None);
        for (m, g) in monomial_grades(&(&x().pow(3) * &n_pow(-2))) {
            assert_eq!(g, m.grade());
        }
    }

    #[test]
    fn star_is_involutive_and_fixes_x_y() {
        assert_eq!(star(&z_plus()), z_minus());
        assert_eq!(star(&n_pow(1)), n_pow(-1));
        assert_eq!(star(&x()), x());
        assert_eq!(star(&y()), y());
        let f = &(&z_plus() * &n_pow(2)) + &xi().scale(&QScalar::i());
        assert_eq!(star(&star(&f)), f);
    }
}
