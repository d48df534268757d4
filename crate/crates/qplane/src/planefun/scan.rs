//! Convention scan for the d = 0 minimal-packet equation
//!   iħ D Ψ = c r̂ Ψ,  c = −i|c|q⁻ʲ,  Ψ = E(β r²),
//! over the readings that the printed formulas leave open. Each candidate is
//! tested exactly on a truncated power series.

use serde::Serialize;

use crate::error::Result;
use crate::qcalc::{q_number, PowerSeries, QScalar, QVariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Derivative {
    /// (Ψ(qr) − Ψ(q⁻¹r))/((q − q⁻¹)r)
    Symmetric,
    /// (Ψ(r) − Ψ(qr))/((1 − q)r)
    StandardQ,
    /// (Ψ(r) − Ψ(q⁻¹r))/((1 − q⁻¹)r)
    StandardQInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exponential {
    /// Σ xⁿ/[n]_{q²}! with symmetric q-numbers
    SymmetricQ2,
    /// Σ xⁿ/[n]! with standard q-numbers of base q²
    StandardQ2,
    /// base q⁻²
    StandardQm2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Denominator {
    OnePlusQ,
    QPlusQInv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PositionAction {
    /// r̂Ψ = rΨ
    Plain,
    /// r̂Ψ = q⁻ʲrΨ, r commuted past e^{ijo}
    Braided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExponentPower {
    /// β ∝ q⁻ʲ as printed
    Printed,
    /// β ∝ q⁻²ʲ
    Squared,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Convention {
    pub derivative: Derivative,
    pub exponential: Exponential,
    pub denominator: Denominator,
    pub position: PositionAction,
    pub exponent: ExponentPower,
}

impl Convention {
    /// Symmetric derivative (p̂ must be symmetric), symmetric exponential,
    /// q + q⁻¹, position by right multiplication.
    pub const ADOPTED: Convention = Convention {
        derivative: Derivative::Symmetric,
        exponential: Exponential::SymmetricQ2,
        denominator: Denominator::QPlusQInv,
        position: PositionAction::Braided,
        exponent: ExponentPower::Squared,
    };

    /// The formulas read literally.
    pub const LITERAL: Convention = Convention {
        derivative: Derivative::Symmetric,
        exponential: Exponential::SymmetricQ2,
        denominator: Denominator::OnePlusQ,
        position: PositionAction::Plain,
        exponent: ExponentPower::Printed,
    };
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub convention: Convention,
    /// sectors j for which the truncated residual vanishes exactly
    pub exact_for: Vec<i64>,
    pub exact_all: bool,
}

fn q(e: i64) -> QScalar {
    QScalar::q_pow(e)
}

fn denominator(c: Convention) -> QScalar {
    match c.denominator {
        Denominator::OnePlusQ => &QScalar::one() + &q(1),
        Denominator::QPlusQInv => &q(1) + &q(-1),
    }
}

fn beta_exponent(c: Convention, j: i64) -> i64 {
    match c.exponent {
        ExponentPower::Printed => -j,
        ExponentPower::Squared => -2 * j,
    }
}

fn exp_number(c: Convention, n: i64) -> Result<QScalar> {
    match c.exponential {
        Exponential::SymmetricQ2 => q_number(n, &q(2), QVariant::Symmetric),
        Exponential::StandardQ2 => q_number(n, &q(2), QVariant::Standard),
        Exponential::StandardQm2 => q_number(n, &q(-2), QVariant::Standard),
    }
}

/// c·r̂ / r with c = −iq⁻ʲ.
fn c_times_position(c: Convention, j: i64) -> QScalar {
    let pos = match c.position {
        PositionAction::Plain => QScalar::one(),
        PositionAction::Braided => q(-j),
    };
    &(-&QScalar::i() * &q(-j)) * &pos
}

/// Ψ = Σ cₙ r²ⁿ with cₙ = cₙ₋₁β/[n]. Writing D r²ⁿ = dₙ r²ⁿ⁻¹, the equation
/// holds at order r²ⁿ⁻¹ iff i dₙ β = C [n] (C = c·q^{position}), a relation
/// between Laurent polynomials once β = −q^e/den is cleared of its
/// denominator: −i dₙ q^e = C·den·[n]. Returns that defect for n = 1..=terms.
pub fn defects(c: Convention, j: i64, terms: u32) -> Result<Vec<QScalar>> {
    let i = QScalar::i();
    let den = denominator(c);
    let e = beta_exponent(c, j);
    let cpos = c_times_position(c, j);
    let mut out = Vec::with_capacity(terms as usize);
    for n in 1..=terms {
        let m = 2 * n as i64;
        let d = match c.derivative {
            Derivative::Symmetric => q_number(m, &q(1), QVariant::Symmetric)?,
            Derivative::StandardQ => q_number(m, &q(1), QVariant::Standard)?,
            Derivative::StandardQInv => q_number(m, &q(-1), QVariant::Standard)?,
        };
        let lhs = -&(&(&i * &d) * &q(e));
        let rhs = &(&cpos * &den) * &exp_number(c, n as i64)?;
        out.push(&lhs - &rhs);
    }
    Ok(out)
}

/// Exact residual of iDΨ − c r̂Ψ (ħ = |c| = 1) through degree 2n − 1, on the
/// truncated series itself.
pub fn residual(c: Convention, j: i64, n: u32) -> Result<PowerSeries> {
    let beta = -&(&q(beta_exponent(c, j)) / &denominator(c));
    let mut psi = PowerSeries::new();
    let mut coef = QScalar::one();
    psi.set(0, coef.clone());
    for k in 1..=n {
        coef = &(&coef * &beta) / &exp_number(c, k as i64)?;
        psi.set(2 * k, coef.clone());
    }
    let dpsi = match c.derivative {
        Derivative::Symmetric => psi.symmetric_q_derivative(&q(1))?,
        Derivative::StandardQ => psi.q_derivative(&q(1))?,
        Derivative::StandardQInv => psi.q_derivative(&q(-1))?,
    };
    let cpos = c_times_position(c, j);
    let mut rpsi = PowerSeries::new();
    for (k, v) in psi.iter() {
        rpsi.set(k + 1, v * &cpos);
    }
    Ok(dpsi.scale(&QScalar::i()).sub(&rpsi).truncate(2 * n - 1))
}

pub fn scan_conventions(jmax: i64, n: u32) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::new();
    for derivative in [Derivative::Symmetric, Derivative::StandardQ, Derivative::StandardQInv] {
        for exponential in [Exponential::SymmetricQ2, Exponential::StandardQ2, Exponential::StandardQm2] {
            for denominator in [Denominator::OnePlusQ, Denominator::QPlusQInv] {
                for position in [PositionAction::Plain, PositionAction::Braided] {
                    for exponent in [ExponentPower::Printed, ExponentPower::Squared] {
                        let convention = Convention { derivative, exponential, denominator, position, exponent };
                        let mut exact_for = Vec::new();
                        for j in 0..=jmax {
                            if defects(convention, j, n)?.iter().all(|d| d.is_zero()) {
                                exact_for.push(j);
                            }
                        }
                        let exact_all = exact_for.len() as i64 == jmax + 1;
                        rows.push(ScanRow { convention, exact_for, exact_all });
                    }
                }
            }
        }
    }
    Ok(rows)
}
