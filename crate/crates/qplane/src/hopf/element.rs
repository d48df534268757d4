//! Finite linear combinations of normal-ordered monomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::qcalc::QScalar;

/// A basis monomial of a q-commutative algebra. Products of two basis
/// monomials are again a basis monomial up to a power of `s = q^(1/2)`.
pub trait Monomial: Clone + Ord + fmt::Debug {
    fn one() -> Self;
    /// `self · o = s^e · m`, returned as `(e, m)`.
    fn mul(&self, o: &Self) -> (i64, Self);
}

impl<A: Monomial, B: Monomial> Monomial for (A, B) {
    fn one() -> Self {
        (A::one(), B::one())
    }
    fn mul(&self, o: &Self) -> (i64, Self) {
        let (e0, a) = self.0.mul(&o.0);
        let (e1, b) = self.1.mul(&o.1);
        (e0 + e1, (a, b))
    }
}

impl<A: Monomial, B: Monomial, C: Monomial> Monomial for (A, B, C) {
    fn one() -> Self {
        (A::one(), B::one(), C::one())
    }
    fn mul(&self, o: &Self) -> (i64, Self) {
        let (e0, a) = self.0.mul(&o.0);
        let (e1, b) = self.1.mul(&o.1);
        let (e2, c) = self.2.mul(&o.2);
        (e0 + e1 + e2, (a, b, c))
    }
}

/// `Σ c_m · m` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Element<M: Ord> {
    terms: BTreeMap<M, QScalar>,
}

/// Two-leg tensor.
pub type Tensor<M> = Element<(M, M)>;
/// Three-leg tensor.
pub type Tensor3<M> = Element<(M, M, M)>;

impl<M: Ord> Default for Element<M> {
    fn default() -> Self {
        Element { terms: BTreeMap::new() }
    }
}

impl<M: Monomial> Element<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(M::one(), QScalar::one())
    }

    pub fn monomial(m: M, c: QScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn scalar(c: QScalar) -> Self {
        Self::monomial(M::one(), c)
    }

    pub fn from_terms(it: impl IntoIterator<Item = (M, QScalar)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: M, c: QScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Linear extension of a map on basis monomials.
    pub fn map_linear<N: Monomial>(&self, f: impl Fn(&M) -> Element<N>) -> Element<N> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            for (n, d) in f(m).terms {
                out.add_term(n, &d * c);
            }
        }
        out
    }

    /// Linear functional extended from basis monomials.
    pub fn apply_functional(&self, f: impl Fn(&M) -> QScalar) -> QScalar {
        let mut acc = QScalar::zero();
        for (m, c) in &self.terms {
            let v = f(m);
            if !v.is_zero() {
                acc = &acc + &(&v * c);
            }
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `fg − gf`.
    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }

    /// Coefficient-wise map (e.g. conjugation, q → q⁻¹).
    pub fn map_coeffs(&self, f: impl Fn(&QScalar) -> QScalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<M: Monomial> Add for &Element<M> {
    type Output = Element<M>;
    fn add(self, o: &Element<M>) -> Element<M> {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<M: Monomial> Neg for &Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl<M: Monomial> Sub for &Element<M> {
    type Output = Element<M>;
    fn sub(self, o: &Element<M>) -> Element<M> {
        self + &(-o)
    }
}

impl<M: Monomial> Mul for &Element<M> {
    type Output = Element<M>;
    fn mul(self, o: &Element<M>) -> Element<M> {
        let mut out = Element::zero();
        for (m, c) in &self.terms {
            for (n, d) in &o.terms {
                let (e, p) = m.mul(n);
                out.add_term(p, (c * d).shift_s(e));
            }
        }
        out
    }
}

impl<M: Monomial> Mul<&QScalar> for &Element<M> {
    type Output = Element<M>;
    fn mul(self, c: &QScalar) -> Element<M> {
        self.scale(c)
    }
}

macro_rules! forward_owned_element {
    ($tr:ident, $m:ident) => {
        impl<M: Monomial> $tr for Element<M> {
            type Output = Element<M>;
            fn $m(self, o: Element<M>) -> Element<M> {
                (&self).$m(&o)
            }
        }
    };
}

forward_owned_element!(Add, add);
forward_owned_element!(Sub, sub);
forward_owned_element!(Mul, mul);

impl<M: Monomial> Neg for Element<M> {
    type Output = Element<M>;
    fn neg(self) -> Element<M> {
        -&self
    }
}

/// Tensor product of two elements.
pub fn tensor<A: Monomial, B: Monomial>(f: &Element<A>, g: &Element<B>) -> Element<(A, B)> {
    let mut out = Element::zero();
    for (m, c) in f.terms() {
        for (n, d) in g.terms() {
            out.add_term((m.clone(), n.clone()), c * d);
        }
    }
    out
}

impl<M: Monomial + fmt::Display> fmt::Display for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({c})·{m}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<M: Monomial> fmt::Debug for Element<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().map(|(m, c)| (m, c.to_string()))).finish()
    }
}
