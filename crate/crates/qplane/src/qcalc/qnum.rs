//! q-numbers, q-Pochhammer symbols and q-factorials (exact and numeric).

use serde::Serialize;

use super::scalar::QScalar;
use crate::error::{QError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QVariant {
    /// (1 − bⁿ)/(1 − b)
    Standard,
    /// (bⁿ − b⁻ⁿ)/(b − b⁻¹)
    Symmetric,
}

/// `[n]_base` in the requested variant.
pub fn q_number(n: i64, base: &QScalar, variant: QVariant) -> Result<QScalar> {
    match variant {
        QVariant::Standard => {
            if n >= 0 {
                let mut acc = QScalar::zero();
                let mut p = QScalar::one();
                for _ in 0..n {
                    acc = &acc + &p;
                    p = &p * base;
                }
                Ok(acc)
            } else {
                let one = QScalar::one();
                let d = &one - base;
                if d.is_zero() {
                    return Err(QError::DivisionByZero("1 - base".into()));
                }
                Ok(&(&one - &base.inv().pow((-n) as u32)) / &d)
            }
        }
        QVariant::Symmetric => {
            if base.is_zero() {
                return Err(QError::DivisionByZero("base = 0".into()));
            }
            let binv = base.inv();
            let d = base - &binv;
            if d.is_zero() {
                return Err(QError::DivisionByZero("base - 1/base".into()));
            }
            let k = n.unsigned_abs() as u32;
            let num = &base.pow(k) - &binv.pow(k);
            let v = &num / &d;
            Ok(if n < 0 { -v } else { v })
        }
    }
}

/// `(a; base)_n = ∏_{k<n} (1 − a·baseᵏ)`.
pub fn q_pochhammer(a: &QScalar, base: &QScalar, n: u32) -> QScalar {
    let one = QScalar::one();
    let mut acc = QScalar::one();
    let mut ak = a.clone();
    for _ in 0..n {
        acc = &acc * &(&one - &ak);
        ak = &ak * base;
    }
    acc
}

/// `[n]_base!` in the requested variant.
pub fn q_factorial(n: u32, base: &QScalar, variant: QVariant) -> Result<QScalar> {
    let mut acc = QScalar::one();
    for k in 1..=n as i64 {
        acc = &acc * &q_number(k, base, variant)?;
    }
    Ok(acc)
}

/// `[n]_{q²}!` with symmetric q-numbers.
pub fn q_factorial_sym(n: u32) -> QScalar {
    q_factorial(n, &QScalar::q_pow(2), QVariant::Symmetric).expect("q² is not ±1")
}

/// Numeric standard q-number `(1 − bⁿ)/(1 − b)`.
pub fn q_number_std_f64(n: i64, b: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    if (b - 1.0).abs() < 1e-300 {
        return n as f64;
    }
    // exp_m1 keeps accuracy for b close to 1
    let l = b.ln();
    (n as f64 * l).exp_m1() / l.exp_m1()
}

/// Numeric symmetric q-number `(bⁿ − b⁻ⁿ)/(b − b⁻¹)`.
pub fn q_number_sym_f64(n: i64, b: f64) -> f64 {
    let l = b.ln();
    if l.abs() < 1e-300 {
        return n as f64;
    }
    (n as f64 * l).sinh() / l.sinh()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2() -> QScalar {
        QScalar::q_pow(2)
    }

    #[test]
    fn small_q_numbers() {
        for v in [QVariant::Standard, QVariant::Symmetric] {
            assert_eq!(q_number(0, &q2(), v).unwrap(), QScalar::zero());
            assert_eq!(q_number(1, &q2(), v).unwrap(), QScalar::one());
        }
        assert_eq!(
            q_number(2, &q2(), QVariant::Symmetric).unwrap(),
            &QScalar::q_pow(2) + &QScalar::q_pow(-2)
        );
    }

    #[test]
    fn symmetric_rejects_unit_base() {
        assert!(q_number(2, &QScalar::one(), QVariant::Symmetric).is_err());
        assert!(q_number(2, &QScalar::int(-1), QVariant::Symmetric).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        let one = QScalar::one();
        assert_eq!(q_pochhammer(&q2(), &q2(), 0), one);
        assert_eq!(q_pochhammer(&q2(), &q2(), 1), &one - &q2());
        assert_eq!(
            q_pochhammer(&q2(), &q2(), 2),
            &(&one - &q2()) * &(&one - &QScalar::q_pow(4))
        );
    }

    #[test]
    fn sym_factorials() {
        assert_eq!(q_factorial_sym(0), QScalar::one());
        assert_eq!(q_factorial_sym(1), QScalar::one());
        assert_eq!(q_factorial_sym(2), &QScalar::q_pow(2) + &QScalar::q_pow(-2));
    }

    #[test]
    fn standard_factorial_matches_pochhammer_ratio() {
        // [n]_b! = (b; b)_n / (1 − b)^n
        let b = q2();
        let one = QScalar::one();
        for n in 0..6 {
            let lhs = q_factorial(n, &b, QVariant::Standard).unwrap();
            let rhs = &q_pochhammer(&b, &b, n) / &(&one - &b).pow(n);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn numeric_q_numbers_match_exact() {
        for q in [0.5, 0.9, 0.99] {
            for n in 0..12 {
                let e = q_number(n, &QScalar::q_pow(-2), QVariant::Standard).unwrap().eval(q).re;
                assert!((q_number_std_f64(n, q.powi(-2)) - e).abs() <= 1e-12 * e.abs().max(1.0));
                let e = q_number(n, &q2(), QVariant::Symmetric).unwrap().eval(q).re;
                assert!((q_number_sym_f64(n, q * q) - e).abs() <= 1e-12 * e.abs().max(1.0));
            }
        }
    }

    #[test]
    fn classical_limit_of_q_numbers() {
        let q: f64 = 0.9999;
        for n in 1..20 {
            assert!((q_number_std_f64(n, q * q) / n as f64 - 1.0).abs() < 1e-2);
            assert!((q_number_sym_f64(n, q * q) / n as f64 - 1.0).abs() < 1e-2);
        }
    }
}
