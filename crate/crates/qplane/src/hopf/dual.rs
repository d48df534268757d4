//! e_q(2): generators p₊, p₋, k^±1 in normal order p₋ᵐ p₊ᵏ kʲ.
//!
//! The p₊p₋ exchange exponent is a type parameter: `HopfConsistent` uses
//! p₊p₋ = q²p₋p₊ (the relation compatible with the coproduct below),
//! `PrintedRelation` uses p₊p₋ = q⁻²p₋p₊. In both, kp₊ = q⁻²p₊k and
//! kp₋ = q²p₋k.

use std::fmt;
use std::marker::PhantomData;

use super::element::{tensor, Element, Monomial, Tensor};
use crate::qcalc::QScalar;

pub trait DualConvention: Copy + Ord + fmt::Debug + Default + 'static {
    /// `p₊p₋ = q^E p₋p₊`
    const E: i64;
    const NAME: &'static str;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HopfConsistent;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrintedRelation;

impl DualConvention for HopfConsistent {
    const E: i64 = 2;
    const NAME: &'static str = "p+p- = q^2 p-p+";
}

impl DualConvention for PrintedRelation {
    const E: i64 = -2;
    const NAME: &'static str = "p+p- = q^-2 p-p+";
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualMonomial<C = HopfConsistent> {
    /// power of p₋
    pub m: u32,
    /// power of p₊
    pub k: u32,
    /// power of k
    pub j: i64,
    _c: PhantomData<C>,
}

impl<C> DualMonomial<C> {
    pub const fn new(m: u32, k: u32, j: i64) -> Self {
        DualMonomial { m, k, j, _c: PhantomData }
    }
}

impl<C: DualConvention> Monomial for DualMonomial<C> {
    fn one() -> Self {
        DualMonomial::new(0, 0, 0)
    }

    fn mul(&self, o: &Self) -> (i64, Self) {
        // kʲ past p₋^m' p₊^k' gives q^{2j(m'−k')}; p₊ᵏ past p₋^m' gives q^{E·k·m'}
        let e = 4 * self.j * (o.m as i64 - o.k as i64) + 2 * C::E * (self.k * o.m) as i64;
        (e, DualMonomial::new(self.m + o.m, self.k + o.k, self.j + o.j))
    }
}

impl<C> fmt::Debug for DualMonomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<C> fmt::Display for DualMonomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, p) in [("p-", self.m as i64), ("p+", self.k as i64), ("k", self.j)] {
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

pub type DualElement<C = HopfConsistent> = Element<DualMonomial<C>>;
pub type DualTensor<C = HopfConsistent> = Tensor<DualMonomial<C>>;

pub fn d_mono<C: DualConvention>(m: u32, k: u32, j: i64) -> DualElement<C> {
    DualElement::monomial(DualMonomial::new(m, k, j), QScalar::one())
}

pub fn p_plus<C: DualConvention>() -> DualElement<C> {
    d_mono(0, 1, 0)
}

pub fn p_minus<C: DualConvention>() -> DualElement<C> {
    d_mono(1, 0, 0)
}

pub fn k_pow<C: DualConvention>(j: i64) -> DualElement<C> {
    d_mono(0, 0, j)
}

/// p_x = (p₊ + p₋)/√2
pub fn p_x<C: DualConvention>() -> DualElement<C> {
    (&p_plus::<C>() + &p_minus()).scale(&QScalar::inv_sqrt2())
}

/// p_y = (i/√2)(p₊ − p₋)
pub fn p_y<C: DualConvention>() -> DualElement<C> {
    (&p_plus::<C>() - &p_minus()).scale(&(QScalar::i() * QScalar::inv_sqrt2()))
}

fn delta_monomial<C: DualConvention>(d: &DualMonomial<C>) -> DualTensor<C> {
    let one = DualElement::<C>::one();
    let dp = &tensor(&p_plus::<C>(), &one) + &tensor(&k_pow(1), &p_plus());
    let dm = &tensor(&p_minus::<C>(), &one) + &tensor(&k_pow(1), &p_minus());
    let dk = tensor(&k_pow::<C>(d.j), &k_pow(d.j));
    &(&dm.pow(d.m) * &dp.pow(d.k)) * &dk
}

/// Δ(p±) = p± ⊗ 1 + k ⊗ p±, Δ(k) = k ⊗ k.
pub fn dual_coproduct<C: DualConvention>(f: &DualElement<C>) -> DualTensor<C> {
    f.map_linear(delta_monomial)
}

/// ε(p±) = 0, ε(k) = 1.
pub fn dual_counit<C: DualConvention>(f: &DualElement<C>) -> QScalar {
    f.apply_functional(|d| if d.m == 0 && d.k == 0 { QScalar::one() } else { QScalar::zero() })
}

/// S(p±) = −k⁻¹p±, S(k) = k⁻¹, anti-homomorphism.
pub fn dual_antipode<C: DualConvention>(f: &DualElement<C>) -> DualElement<C> {
    let sp = -&(&k_pow::<C>(-1) * &p_plus());
    let sm = -&(&k_pow::<C>(-1) * &p_minus());
    f.map_linear(|d| &(&k_pow(-d.j) * &sp.pow(d.k)) * &sm.pow(d.m))
}
