//! q-exponentials (numeric), exact power series and their q-derivatives.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::params::max_terms;
use super::qnum::{q_number, q_number_std_f64, q_number_sym_f64, QVariant};
use super::scalar::QScalar;
use crate::error::{QError, Result};

fn sum_series(
    x: Complex64,
    tol: f64,
    qnum: impl Fn(i64) -> f64,
) -> Result<Complex64> {
    let cap = max_terms();
    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    for n in 1..=cap as i64 {
        let qn = qnum(n);
        term = term * x / qn;
        sum += term;
        // stop only once the terms are past their peak
        if term.norm() < tol * (1.0 + sum.norm()) && x.norm() < qnum(n + 1) {
            return Ok(sum);
        }
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(QError::NonConvergence { terms: n as usize });
        }
    }
    Err(QError::NonConvergence { terms: cap })
}

/// `E_{q²}(x) = Σ xⁿ/[n]_{q²}!` with symmetric q-numbers.
pub fn q_exp_big(x: Complex64, q: f64, tol: f64) -> Result<Complex64> {
    if !(q > 0.0 && q < 1.0) || tol <= 0.0 {
        return Err(QError::InvalidParameter(format!("q = {q}, tol = {tol}")));
    }
    sum_series(x, tol, |n| q_number_sym_f64(n, q * q))
}

/// `e_b(x) = Σ xⁿ/[n]_b!` with standard q-numbers `(1 − bⁿ)/(1 − b)`.
pub fn q_exp_small(x: Complex64, base: f64, tol: f64) -> Result<Complex64> {
    if !(base > 0.0) || base == 1.0 || tol <= 0.0 {
        return Err(QError::InvalidParameter(format!("base = {base}, tol = {tol}")));
    }
    if base < 1.0 {
        let radius = 1.0 / (1.0 - base);
        if x.norm() >= radius {
            return Err(QError::Divergence { x: x.norm(), radius });
        }
    }
    sum_series(x, tol, |n| q_number_std_f64(n, base))
}

/// Truncated power series `Σ cₙ xⁿ` with exact coefficients.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct PowerSeries {
    coeffs: BTreeMap<u32, QScalar>,
}

impl PowerSeries {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(n: u32, c: QScalar) -> Self {
        let mut s = Self::new();
        s.set(n, c);
        s
    }

    pub fn set(&mut self, n: u32, c: QScalar) {
        if c.is_zero() {
            self.coeffs.remove(&n);
        } else {
            self.coeffs.insert(n, c);
        }
    }

    pub fn coeff(&self, n: u32) -> QScalar {
        self.coeffs.get(&n).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &QScalar)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut out = Self::new();
        for (n, v) in &self.coeffs {
            out.set(*n, v * c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (n, v) in &o.coeffs {
            out.set(*n, &out.coeff(*n) - v);
        }
        out
    }

    /// Drop terms of degree > `n`.
    pub fn truncate(&self, n: u32) -> Self {
        PowerSeries { coeffs: self.coeffs.range(..=n).map(|(k, v)| (*k, v.clone())).collect() }
    }

    /// `e_b(a·x)` through degree `n` with standard q-numbers.
    pub fn exp_std(a: &QScalar, base: &QScalar, n: u32) -> Result<Self> {
        let mut out = Self::new();
        let mut c = QScalar::one();
        out.set(0, c.clone());
        for k in 1..=n {
            c = &(&c * a) / &q_number(k as i64, base, QVariant::Standard)?;
            out.set(k, c.clone());
        }
        Ok(out)
    }

    /// `D_b` with standard q-numbers: xⁿ ↦ [n]_b xⁿ⁻¹.
    pub fn q_derivative(&self, base: &QScalar) -> Result<Self> {
        let mut out = Self::new();
        for (n, c) in &self.coeffs {
            if *n > 0 {
                out.set(n - 1, c * &q_number(*n as i64, base, QVariant::Standard)?);
            }
        }
        Ok(out)
    }

    /// Symmetric derivative with parameter `base`: xⁿ ↦ ((baseⁿ − base⁻ⁿ)/(base − base⁻¹)) xⁿ⁻¹.
    pub fn symmetric_q_derivative(&self, base: &QScalar) -> Result<Self> {
        let mut out = Self::new();
        for (n, c) in &self.coeffs {
            if *n > 0 {
                out.set(n - 1, c * &q_number(*n as i64, base, QVariant::Symmetric)?);
            }
        }
        Ok(out)
    }

    pub fn eval(&self, x: Complex64, q: f64) -> Complex64 {
        self.coeffs.iter().map(|(n, c)| c.eval(q) * x.powu(*n)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_at_zero_is_one() {
        assert_eq!(q_exp_big(Complex64::new(0.0, 0.0), 0.9, 1e-15).unwrap(), Complex64::new(1.0, 0.0));
        assert_eq!(
            q_exp_small(Complex64::new(0.0, 0.0), 0.9f64.powi(-2), 1e-15).unwrap(),
            Complex64::new(1.0, 0.0)
        );
    }

    #[test]
    fn classical_limit_of_exponentials() {
        let e = std::f64::consts::E;
        let x = Complex64::new(1.0, 0.0);
        assert!((q_exp_big(x, 0.9999, 1e-15).unwrap().re - e).abs() < 1e-3 * e);
        assert!((q_exp_small(x, 0.9999f64.powi(-2), 1e-15).unwrap().re - e).abs() < 1e-3 * e);
        assert!((q_exp_small(x, 0.9999f64.powi(2), 1e-15).unwrap().re - e).abs() < 1e-3 * e);
    }

    #[test]
    fn small_base_detects_divergence() {
        let r = q_exp_small(Complex64::new(20.0, 0.0), 0.95, 1e-12);
        assert!(matches!(r, Err(QError::Divergence { .. })));
    }

    #[test]
    fn derivative_of_square() {
        let b = QScalar::q_pow(3);
        let f = PowerSeries::monomial(2, QScalar::one());
        let d = f.q_derivative(&b).unwrap();
        assert_eq!(d, PowerSeries::monomial(1, &QScalar::one() + &b));
        assert_eq!(PowerSeries::monomial(0, QScalar::int(5)).q_derivative(&b).unwrap(), PowerSeries::new());
    }

    #[test]
    fn derivative_of_fifth_power_numeric() {
        // oracle: difference quotient at x = 1, q = 0.9, base q⁻²
        let q: f64 = 0.9;
        let b = q.powi(-2);
        let oracle = (1.0 - b.powi(5)) / (1.0 - b);
        let d = PowerSeries::monomial(5, QScalar::one()).q_derivative(&QScalar::q_pow(-2)).unwrap();
        let v = d.eval(Complex64::new(1.0, 0.0), q).re;
        assert!((v - oracle).abs() < 1e-12 * oracle);
        assert!((v - 7.963_46).abs() < 1e-4);
    }

    #[test]
    fn symmetric_derivative_of_square() {
        let d = PowerSeries::monomial(2, QScalar::one()).symmetric_q_derivative(&QScalar::q_pow(1)).unwrap();
        assert_eq!(d, PowerSeries::monomial(1, &QScalar::q_pow(1) + &QScalar::q_pow(-1)));
    }

    #[test]
    fn exponential_is_eigenfunction_termwise() {
        let base = QScalar::q_pow(-2);
        let e = PowerSeries::exp_std(&QScalar::one(), &base, 20).unwrap();
        let d = e.q_derivative(&base).unwrap();
        assert_eq!(d, e.truncate(19));
    }
}
