//! Bessel functions of the first kind, integer order.
//!
//! For `x ≤ 30` the power series is summed in double-double arithmetic, which
//! absorbs the cancellation (largest term about e^x times the result). For
//! `30 < x ≤ 100` the plain series would need more than 32 digits, so Miller's
//! backward recurrence normalized by `J₀ + 2ΣJ₂ₖ = 1` is used instead.

use super::dd::Dd;
use crate::error::{QError, Result};

pub const SERIES_MAX_X: f64 = 30.0;
pub const MAX_X: f64 = 100.0;

/// `J_n(x)` by the power series, in double-double. Valid for `0 ≤ x ≤ 30`.
pub fn bessel_j_dd(order: u32, x: Dd, tol: f64) -> Result<Dd> {
    let xf = x.to_f64();
    if !(xf >= 0.0) {
        return Err(QError::InvalidParameter(format!("x = {xf} must be nonnegative")));
    }
    if xf > SERIES_MAX_X {
        return Err(QError::OutOfRange { x: xf, max: SERIES_MAX_X });
    }
    let half = x * Dd::new(0.5);
    let mut term = Dd::ONE;
    for k in 1..=order {
        term = term * half / Dd::new(k as f64);
    }
    let h2 = half * half;
    let mut sum = term;
    let tol = tol.max(1e-32);
    for k in 1..10_000u32 {
        term = -(term * h2) / Dd::new((k as f64) * ((order + k) as f64));
        sum = sum + term;
        // alternating and decreasing past the peak: the tail is below the
        // first omitted term
        if (k as f64) > half.to_f64() && term.abs().to_f64() <= tol * sum.abs().to_f64().max(1e-300) {
            return Ok(sum);
        }
        if term.hi == 0.0 {
            return Ok(sum);
        }
    }
    Err(QError::NonConvergence { terms: 10_000 })
}

fn miller(order: u32, x: f64) -> f64 {
    let n = order as usize;
    let start = 2 * ((n.max(x as usize) + 40 + (x.sqrt() as usize) * 10) / 2);
    let mut jp1 = 0.0f64;
    let mut j = 1e-300f64;
    let mut norm = 0.0f64;
    let mut want = 0.0;
    for k in (1..=start).rev() {
        let jm1 = (2.0 * k as f64 / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if k - 1 == n {
            want = j;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * j;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            want *= 1e-250;
        }
    }
    norm += j;
    want / norm
}

/// `J_order(x)` for `0 ≤ x ≤ 100`.
pub fn bessel_j(order: u32, x: f64, tol: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return Err(QError::InvalidParameter(format!("x = {x} must be nonnegative")));
    }
    if x > MAX_X {
        return Err(QError::OutOfRange { x, max: MAX_X });
    }
    if x <= SERIES_MAX_X {
        Ok(bessel_j_dd(order, Dd::new(x), tol)?.to_f64())
    } else {
        Ok(miller(order, x))
    }
}

/// First positive zero of `J_order` by bracketing scan and bisection.
pub fn bessel_first_zero(order: u32, tol: f64) -> Result<f64> {
    let step = 0.1;
    let mut a = step;
    let mut fa = bessel_j(order, a, 1e-30)?;
    while a < MAX_X - step {
        let b = a + step;
        let fb = bessel_j(order, b, 1e-30)?;
        if fa == 0.0 {
            return Ok(a);
        }
        if fa.signum() != fb.signum() {
            return bisect(|x| bessel_j(order, x, 1e-30), a, b, tol);
        }
        a = b;
        fa = fb;
    }
    Err(QError::Bracketing(format!("no sign change of J_{order} below {MAX_X}")))
}

/// Bisection on a sign-changing bracket until the width is below `tol·|x|`.
pub fn bisect(f: impl Fn(f64) -> Result<f64>, mut a: f64, mut b: f64, tol: f64) -> Result<f64> {
    let mut fa = f(a)?;
    let fb = f(b)?;
    if fa.signum() == fb.signum() && fa != 0.0 && fb != 0.0 {
        return Err(QError::Bracketing(format!("no sign change on [{a}, {b}]")));
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a) <= tol * m.abs() || m == a || m == b {
            return Ok(m);
        }
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_values() {
        assert_eq!(bessel_j(0, 0.0, 1e-16).unwrap(), 1.0);
        assert_eq!(bessel_j(3, 0.0, 1e-16).unwrap(), 0.0);
    }

    #[test]
    fn small_argument_leading_term() {
        let x = 1e-6;
        assert!((bessel_j(1, x, 1e-16).unwrap() - x / 2.0).abs() < 1e-12);
    }

    #[test]
    fn first_zeros() {
        assert!((bessel_first_zero(0, 1e-14).unwrap() - 2.404_825_557_695_773).abs() < 1e-6);
        assert!((bessel_first_zero(1, 1e-14).unwrap() - 3.831_705_970_207_512).abs() < 1e-9);
    }

    #[test]
    fn recurrence() {
        for j in 1..=8u32 {
            for i in 0..40 {
                let x = 0.5 + i as f64 * 0.5;
                let l = bessel_j(j - 1, x, 1e-30).unwrap() + bessel_j(j + 1, x, 1e-30).unwrap();
                let r = 2.0 * j as f64 / x * bessel_j(j, x, 1e-30).unwrap();
                assert!((l - r).abs() < 1e-9, "j={j} x={x}");
            }
        }
    }

    #[test]
    fn miller_agrees_with_series_at_overlap() {
        for n in 0..6 {
            for x in [12.0, 25.0, 29.5] {
                let s = bessel_j(n, x, 1e-30).unwrap();
                let m = miller(n, x);
                assert!((s - m).abs() < 1e-13, "n={n} x={x}: {s} vs {m}");
            }
        }
    }

    #[test]
    fn large_argument_asymptotics() {
        // J_0(x) ≈ √(2/πx) cos(x − π/4) with relative correction O(1/x)
        let x = 80.0;
        let a = (2.0 / (std::f64::consts::PI * x)).sqrt() * (x - std::f64::consts::FRAC_PI_4).cos();
        assert!((bessel_j(0, x, 1e-16).unwrap() - a).abs() < 2e-3);
        assert!(matches!(bessel_j(0, 150.0, 1e-16), Err(QError::OutOfRange { .. })));
    }
}
