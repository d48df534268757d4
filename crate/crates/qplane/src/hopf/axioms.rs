//! Hopf-algebra axiom checks shared by both algebras.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::dual::{dual_antipode, dual_coproduct, dual_counit, DualConvention, DualMonomial};
use super::element::{tensor, Element, Monomial, Tensor, Tensor3};
use super::group::{antipode, coproduct, counit, GroupMonomial};
use super::pairing::{check_pairing_axioms, AxiomFailure, AxiomReport, PairingConvention};
use super::random::{random_dual_element, random_group_element};
use crate::qcalc::QScalar;

pub trait HopfMonomial: Monomial {
    fn coproduct(&self) -> Tensor<Self>;
    fn counit(&self) -> QScalar;
    fn antipode(&self) -> Element<Self>;
}

impl HopfMonomial for GroupMonomial {
    fn coproduct(&self) -> Tensor<Self> {
        coproduct(&Element::monomial(*self, QScalar::one()))
    }
    fn counit(&self) -> QScalar {
        counit(&Element::monomial(*self, QScalar::one()))
    }
    fn antipode(&self) -> Element<Self> {
        antipode(&Element::monomial(*self, QScalar::one()))
    }
}

impl<C: DualConvention> HopfMonomial for DualMonomial<C> {
    fn coproduct(&self) -> Tensor<Self> {
        dual_coproduct(&Element::monomial(*self, QScalar::one()))
    }
    fn counit(&self) -> QScalar {
        dual_counit(&Element::monomial(*self, QScalar::one()))
    }
    fn antipode(&self) -> Element<Self> {
        dual_antipode(&Element::monomial(*self, QScalar::one()))
    }
}

fn delta<M: HopfMonomial>(f: &Element<M>) -> Tensor<M> {
    f.map_linear(|m| m.coproduct())
}

fn eps<M: HopfMonomial>(f: &Element<M>) -> QScalar {
    f.apply_functional(|m| m.counit())
}

fn s<M: HopfMonomial>(f: &Element<M>) -> Element<M> {
    f.map_linear(|m| m.antipode())
}

fn left_leg_apply<M: HopfMonomial>(t: &Tensor<M>, f: impl Fn(&M) -> Element<M>) -> Element<M> {
    let mut out = Element::zero();
    for ((l, r), c) in t.terms() {
        let lhs = f(l);
        let prod = &lhs * &Element::monomial(r.clone(), c.clone());
        out = &out + &prod;
    }
    out
}

fn right_leg_apply<M: HopfMonomial>(t: &Tensor<M>, f: impl Fn(&M) -> Element<M>) -> Element<M> {
    let mut out = Element::zero();
    for ((l, r), c) in t.terms() {
        let rhs = f(r);
        let prod = &Element::monomial(l.clone(), c.clone()) * &rhs;
        out = &out + &prod;
    }
    out
}

fn delta_left<M: HopfMonomial>(t: &Tensor<M>) -> Tensor3<M> {
    let mut out = Tensor3::zero();
    for ((l, r), c) in t.terms() {
        for ((a, b), d) in l.coproduct().terms() {
            out.add_term((a.clone(), b.clone(), r.clone()), c * d);
        }
    }
    out
}

fn delta_right<M: HopfMonomial>(t: &Tensor<M>) -> Tensor3<M> {
    let mut out = Tensor3::zero();
    for ((l, r), c) in t.terms() {
        for ((a, b), d) in r.coproduct().terms() {
            out.add_term((l.clone(), a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// Counit laws, antipode law on both sides, coassociativity for each sample,
/// and multiplicativity of Δ, ε and the anti-multiplicativity of S on pairs.
pub fn check_hopf_axioms<M: HopfMonomial>(samples: &[Element<M>]) -> AxiomReport {
    let mut rep = AxiomReport { checked: 0, failures: Vec::new() };
    let mut record = |axiom: &'static str, case: String, ok: bool, lhs: String, rhs: String| {
        rep.checked += 1;
        if !ok {
            rep.failures.push(AxiomFailure { axiom, case, lhs, rhs });
        }
    };
    for f in samples {
        let d = delta(f);
        let case = format!("{f:?}");
        let a = left_leg_apply(&d, |m| Element::scalar(m.counit()));
        record("(eps(x)id)D = id", case.clone(), &a == f, format!("{a:?}"), case.clone());
        let b = right_leg_apply(&d, |m| Element::scalar(m.counit()));
        record("(id(x)eps)D = id", case.clone(), &b == f, format!("{b:?}"), case.clone());
        let unit = Element::scalar(eps(f));
        let l = left_leg_apply(&d, |m| m.antipode());
        record("m(S(x)id)D = eps", case.clone(), l == unit, format!("{l:?}"), format!("{unit:?}"));
        let r = right_leg_apply(&d, |m| m.antipode());
        record("m(id(x)S)D = eps", case.clone(), r == unit, format!("{r:?}"), format!("{unit:?}"));
        let c1 = delta_left(&d);
        let c2 = delta_right(&d);
        record("coassociativity", case.clone(), c1 == c2, format!("{c1:?}"), format!("{c2:?}"));
    }
    for f in samples.iter().take(12) {
        for g in samples.iter().take(12) {
            let case = format!("f = {f:?}, g = {g:?}");
            let fg = f * g;
            let dl = delta(&fg);
            let dr = &delta(f) * &delta(g);
            record("D(fg) = D(f)D(g)", case.clone(), dl == dr, format!("{dl:?}"), format!("{dr:?}"));
            let el = eps(&fg);
            let er = &eps(f) * &eps(g);
            record("eps(fg) = eps(f)eps(g)", case.clone(), el == er, el.to_string(), er.to_string());
            let sl = s(&fg);
            let sr = &s(g) * &s(f);
            record("S(fg) = S(g)S(f)", case, sl == sr, format!("{sl:?}"), format!("{sr:?}"));
        }
    }
    rep
}

#[derive(Clone, Debug, Serialize)]
pub struct HopfSuiteReport {
    pub group: AxiomReport,
    pub dual: AxiomReport,
    pub pairing_generators: AxiomReport,
    pub pairing_random: AxiomReport,
}

impl HopfSuiteReport {
    pub fn passed(&self) -> bool {
        self.group.passed() && self.dual.passed() && self.pairing_generators.passed() && self.pairing_random.passed()
    }
}

/// Hopf axioms on both algebras (generators plus random degree ≤ 4 samples)
/// and the pairing axioms on generator pairs plus `random` random degree ≤ 3
/// triples, with the given dual convention and pairing.
pub fn hopf_suite<C: DualConvention>(seed: u64, random: usize, conv: PairingConvention) -> HopfSuiteReport {
    use super::dual::{d_mono, p_minus, p_plus};
    use super::group::{g_mono, z_minus, z_plus};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut groups = vec![Element::one(), z_plus(), z_minus(), g_mono(1, 0, 0), g_mono(-1, 0, 0)];
    let mut duals = vec![Element::one(), p_plus::<C>(), p_minus(), d_mono(0, 0, 1), d_mono(0, 0, -1)];
    for _ in 0..12 {
        groups.push(random_group_element(&mut rng, 4, 2, 3));
        duals.push(random_dual_element::<C, _>(&mut rng, 4, 2, 3));
    }
    let group = check_hopf_axioms(&groups);
    let dual = check_hopf_axioms(&duals);
    let pairing_generators = check_pairing_axioms(conv, &duals[..5], &groups[..5]);

    let mut pairing_random = AxiomReport { checked: 0, failures: Vec::new() };
    for _ in 0..random {
        let a = random_dual_element::<C, _>(&mut rng, 3, 2, 4);
        let b = random_dual_element::<C, _>(&mut rng, 3, 2, 4);
        let f = random_group_element(&mut rng, 3, 2, 6);
        let g = random_group_element(&mut rng, 3, 2, 6);
        let r = check_pairing_axioms_single(conv, &a, &b, &f, &g);
        pairing_random.checked += r.checked;
        pairing_random.failures.extend(r.failures);
    }
    HopfSuiteReport { group, dual, pairing_generators, pairing_random }
}

fn check_pairing_axioms_single<C: DualConvention>(
    conv: PairingConvention,
    a: &Element<DualMonomial<C>>,
    b: &Element<DualMonomial<C>>,
    f: &Element<GroupMonomial>,
    g: &Element<GroupMonomial>,
) -> AxiomReport {
    use super::pairing::{pairing_tensor, pairing_with};
    let mut rep = AxiomReport { checked: 2, failures: Vec::new() };
    // f·g has degree ≤ 6 so that ⟨ab|fg⟩-type terms with matching degree occur
    let fg = f * g;
    let l = pairing_with(conv, &(a * b), &fg);
    let r = pairing_tensor(conv, &tensor(a, b), &coproduct(&fg));
    if l != r {
        rep.failures.push(AxiomFailure {
            axiom: "<ab|f> = <a(x)b|Df>",
            case: format!("a = {a:?}, b = {b:?}, f = {fg:?}"),
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
    }
    let ab = a * b;
    let l = pairing_with(conv, &ab, &fg);
    let r = pairing_tensor(conv, &dual_coproduct(&ab), &tensor(f, g));
    if l != r {
        rep.failures.push(AxiomFailure {
            axiom: "<a|fg> = <Da|f(x)g>",
            case: format!("a = {ab:?}, f = {f:?}, g = {g:?}"),
            lhs: l.to_string(),
            rhs: r.to_string(),
        });
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::dual::{HopfConsistent, PrintedRelation};

    #[test]
    fn consistent_suite_passes() {
        let rep = hopf_suite::<HopfConsistent>(7, 20, PairingConvention::RESOLVED);
        assert!(rep.group.passed(), "{:?}", rep.group.failures.first());
        assert!(rep.dual.passed(), "{:?}", rep.dual.failures.first());
        assert!(rep.pairing_generators.passed(), "{:?}", rep.pairing_generators.failures.first());
        assert!(rep.pairing_random.passed(), "{:?}", rep.pairing_random.failures.first());
    }

    #[test]
    fn printed_dual_relation_breaks_coproduct() {
        let rep = hopf_suite::<PrintedRelation>(7, 0, PairingConvention::RESOLVED);
        assert!(rep.group.passed());
        assert!(rep.dual.failures.iter().any(|f| f.axiom == "D(fg) = D(f)D(g)"));
    }
}
