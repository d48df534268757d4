//! Laurent polynomials in s = q^(1/2) over Q(i, √2).

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::field::Coeff;

/// Sparse Laurent polynomial, terms sorted by exponent of s, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    terms: Vec<(i64, Coeff)>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Self {
        Laurent::monomial(0, c)
    }

    pub fn one() -> Self {
        Laurent::constant(Coeff::one())
    }

    /// `c · s^e`
    pub fn monomial(e: i64, c: Coeff) -> Self {
        if c.is_zero() {
            Laurent::zero()
        } else {
            Laurent { terms: vec![(e, c)] }
        }
    }

    pub fn from_map(m: BTreeMap<i64, Coeff>) -> Self {
        Laurent { terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(i64, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|t| t.0)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn add(&self, o: &Laurent) -> Laurent {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < o.terms.len() {
            if j == o.terms.len() || (i < self.terms.len() && self.terms[i].0 < o.terms[j].0) {
                out.push(self.terms[i].clone());
                i += 1;
            } else if i == self.terms.len() || o.terms[j].0 < self.terms[i].0 {
                out.push(o.terms[j].clone());
                j += 1;
            } else {
                let c = &self.terms[i].1 + &o.terms[j].1;
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Laurent { terms: out }
    }

    pub fn neg(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Laurent) -> Laurent {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        if o.is_monomial() {
            let (e, c) = &o.terms[0];
            return self.scale_shift(c, *e);
        }
        if self.is_monomial() {
            let (e, c) = &self.terms[0];
            return o.scale_shift(c, *e);
        }
        if let (Some(a), Some(b)) = (self.int_terms(), o.int_terms()) {
            if let Some(p) = int_mul(&a, &b) {
                return p;
            }
        }
        let lo = self.terms[0].0 + o.terms[0].0;
        let hi = self.leading().0 + o.leading().0;
        let mut acc = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                acc[(e1 + e2 - lo) as usize] += &(c1 * c2);
            }
        }
        Laurent::from_dense(lo, acc)
    }

    fn from_dense(lo: i64, v: Vec<Coeff>) -> Laurent {
        Laurent {
            terms: v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (lo + i as i64, c)).collect(),
        }
    }

    fn int_terms(&self) -> Option<Vec<(i64, i128)>> {
        self.terms.iter().map(|(e, c)| c.as_i128().map(|v| (*e, v))).collect()
    }

    /// `c · s^e · self`
    pub fn scale_shift(&self, c: &Coeff, e: i64) -> Laurent {
        if c.is_zero() {
            return Laurent::zero();
        }
        let one = c.is_one();
        Laurent {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k + e, if one { v.clone() } else { v * c }))
                .collect(),
        }
    }

    pub fn shift(&self, e: i64) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect() }
    }

    /// Substitution s → s^-1.
    pub fn invert_variable(&self) -> Laurent {
        let mut terms: Vec<_> = self.terms.iter().map(|(k, v)| (-k, v.clone())).collect();
        terms.reverse();
        Laurent { terms }
    }

    /// Coefficient-wise complex conjugation (s treated as real).
    pub fn conj(&self) -> Laurent {
        Laurent { terms: self.terms.iter().map(|(k, v)| (*k, v.conj())).collect() }
    }

    pub fn eval(&self, s: Complex64) -> Complex64 {
        self.terms.iter().map(|(e, c)| c.to_c64() * s.powi(*e as i32)).sum()
    }

    /// Sum of coefficients (value at s = 1), exact.
    pub fn at_one(&self) -> Coeff {
        let mut acc = Coeff::zero();
        for (_, c) in &self.terms {
            acc += c;
        }
        acc
    }

    fn leading(&self) -> &(i64, Coeff) {
        self.terms.last().expect("nonzero polynomial")
    }

    /// Polynomial division with remainder; `d` must have lowest exponent 0.
    fn div_rem_poly(&self, d: &Laurent) -> (Laurent, Laurent) {
        if self.is_zero() || self.leading().0 < d.leading().0 {
            return (Laurent::zero(), self.clone());
        }
        if let (Some(a), Some(b)) = (self.int_terms(), d.int_terms()) {
            if let Some(r) = int_div_rem(&a, &b) {
                return r;
            }
        }
        let (de, dc) = d.leading().clone();
        let dinv = dc.inv();
        // dense remainder indexed from the lowest exponent
        let lo = self.terms[0].0.min(0);
        let hi = self.leading().0;
        let mut rem = vec![Coeff::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            rem[(e - lo) as usize] = c.clone();
        }
        let mut quot = Vec::new();
        let mut top = hi;
        while top >= de {
            let rc = &rem[(top - lo) as usize];
            if !rc.is_zero() {
                let factor = rc * &dinv;
                let e = top - de;
                for (k, c) in &d.terms {
                    let idx = (k + e - lo) as usize;
                    rem[idx] = &rem[idx] - &(&factor * c);
                }
                quot.push((e, factor));
            }
            top -= 1;
        }
        quot.reverse();
        (Laurent { terms: quot }, Laurent::from_dense(lo, rem))
    }

    /// Exact quotient when `d` divides `self` in the Laurent ring.
    pub fn exact_div(&self, d: &Laurent) -> Option<Laurent> {
        if d.is_zero() {
            return None;
        }
        let a = self.shift(-self.min_exp().unwrap_or(0));
        let b = d.shift(-d.min_exp().unwrap());
        let (qt, r) = a.div_rem_poly(&b);
        if r.is_zero() {
            Some(qt.shift(self.min_exp().unwrap_or(0) - d.min_exp().unwrap()))
        } else {
            None
        }
    }

    /// Normalized shape: lowest exponent 0 and lowest coefficient 1.
    /// Returns the normalized polynomial and the unit `c·s^e` removed.
    pub fn normalize_unit(&self) -> (Laurent, Coeff, i64) {
        let (e, c) = self.terms[0].clone();
        let ci = c.inv();
        (self.scale_shift(&ci, -e), c, e)
    }

    /// Monic-normalized gcd in the Laurent ring (units are c·s^e).
    pub fn gcd(&self, o: &Laurent) -> Laurent {
        let mut a = self.shift(-self.min_exp().unwrap_or(0));
        let mut b = o.shift(-o.min_exp().unwrap_or(0));
        while !b.is_zero() {
            let (_, r) = a.div_rem_poly(&b);
            let r = if r.is_zero() { r } else { r.shift(-r.min_exp().unwrap()) };
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        a.normalize_unit().0
    }
}

/// Integer convolution; None on i128 overflow.
fn int_mul(a: &[(i64, i128)], b: &[(i64, i128)]) -> Option<Laurent> {
    let lo = a[0].0 + b[0].0;
    let hi = a[a.len() - 1].0 + b[b.len() - 1].0;
    let mut acc = vec![0i128; (hi - lo + 1) as usize];
    for (e1, c1) in a {
        for (e2, c2) in b {
            let slot = &mut acc[(e1 + e2 - lo) as usize];
            *slot = slot.checked_add(c1.checked_mul(*c2)?)?;
        }
    }
    Some(from_int_dense(lo, &acc))
}

fn from_int_dense(lo: i64, v: &[i128]) -> Laurent {
    Laurent {
        terms: v
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (lo + i as i64, Coeff::from_i128(*c)))
            .collect(),
    }
}

/// Integer long division by a divisor with leading coefficient ±1; None when
/// the divisor is not monic up to sign or on overflow.
fn int_div_rem(a: &[(i64, i128)], d: &[(i64, i128)]) -> Option<(Laurent, Laurent)> {
    let (de, dc) = d[d.len() - 1];
    if dc != 1 && dc != -1 {
        return None;
    }
    let lo = a[0].0.min(0);
    let hi = a[a.len() - 1].0;
    let mut rem = vec![0i128; (hi - lo + 1) as usize];
    for (e, c) in a {
        rem[(e - lo) as usize] = *c;
    }
    let mut quot = Vec::new();
    let mut top = hi;
    while top >= de {
        let rc = rem[(top - lo) as usize];
        if rc != 0 {
            let factor = rc * dc;
            let e = top - de;
            for (k, c) in d {
                let idx = (k + e - lo) as usize;
                rem[idx] = rem[idx].checked_sub(factor.checked_mul(*c)?)?;
            }
            quot.push((e, Coeff::from_i128(factor)));
        }
        top -= 1;
    }
    quot.reverse();
    Some((Laurent { terms: quot }, from_int_dense(lo, &rem)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[(i64, i64)]) -> Laurent {
        Laurent::from_map(c.iter().map(|&(e, v)| (e, Coeff::int(v))).collect())
    }

    #[test]
    fn product_and_exact_division() {
        let a = p(&[(0, 1), (4, -1)]);
        let b = p(&[(-2, 1), (2, 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab.exact_div(&b), Some(a.clone()));
        assert_eq!(ab.exact_div(&a), Some(b));
        assert!(p(&[(0, 1), (1, 1)]).exact_div(&a).is_none());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1 − s⁴) = (1 − s²)(1 + s²)
        let a = p(&[(0, 1), (4, -1)]);
        let b = p(&[(0, 1), (2, 1)]).mul(&p(&[(0, 1), (2, 3)]));
        assert_eq!(a.gcd(&b), p(&[(0, 1), (2, 1)]));
    }
}
