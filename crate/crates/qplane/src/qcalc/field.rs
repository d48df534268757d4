//! Coefficient field Q(i, √2).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Product skipping the cross-gcd when it cannot cancel anything.
fn rmul(x: &BigRational, y: &BigRational) -> BigRational {
    if x.is_zero() || y.is_zero() {
        BigRational::zero()
    } else if x.is_integer() && y.is_integer() {
        BigRational::from_integer(x.numer() * y.numer())
    } else {
        x * y
    }
}

fn radd(x: BigRational, y: BigRational) -> BigRational {
    if x.is_zero() {
        y
    } else if y.is_zero() {
        x
    } else {
        x + y
    }
}

/// Gaussian rational `re + i·im`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gauss { re, im }
    }

    pub fn zero() -> Self {
        Gauss::new(BigRational::zero(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gauss::new(self.re.clone(), -self.im.clone())
    }

    fn add(&self, o: &Self) -> Self {
        Gauss::new(radd(self.re.clone(), o.re.clone()), radd(self.im.clone(), o.im.clone()))
    }

    fn sub(&self, o: &Self) -> Self {
        Gauss::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        Gauss::new(
            radd(rmul(&self.re, &o.re), -rmul(&self.im, &o.im)),
            radd(rmul(&self.re, &o.im), rmul(&self.im, &o.re)),
        )
    }

    fn scale(&self, k: &BigRational) -> Self {
        Gauss::new(&self.re * k, &self.im * k)
    }

    fn inv(&self) -> Self {
        let n = &self.re * &self.re + &self.im * &self.im;
        Gauss::new(&self.re / &n, -(&self.im / &n))
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

/// Element `a + b·√2` of Q(i, √2) with `a`, `b` Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coeff {
    a: Gauss,
    b: Gauss,
}

impl Coeff {
    pub fn new(a: Gauss, b: Gauss) -> Self {
        Coeff { a, b }
    }

    pub fn zero() -> Self {
        Coeff::new(Gauss::zero(), Gauss::zero())
    }

    pub fn one() -> Self {
        Coeff::int(1)
    }

    pub fn int(n: i64) -> Self {
        Coeff::ratio(n, 1)
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Coeff::new(Gauss::new(rat(n, d), BigRational::zero()), Gauss::zero())
    }

    pub fn gauss(re: BigRational, im: BigRational) -> Self {
        Coeff::new(Gauss::new(re, im), Gauss::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Coeff::gauss(BigRational::zero(), BigRational::one())
    }

    pub fn sqrt2() -> Self {
        Coeff::new(Gauss::zero(), Gauss::new(BigRational::one(), BigRational::zero()))
    }

    /// 1/√2 = √2/2.
    pub fn inv_sqrt2() -> Self {
        Coeff::new(Gauss::zero(), Gauss::new(rat(1, 2), BigRational::zero()))
    }

    /// Nearest exact rational to a float (exact binary expansion).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(|r| Coeff::gauss(r, BigRational::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.im.is_zero() && self.a.re.is_one()
    }

    /// Complex conjugation (i → −i), leaving √2 fixed.
    pub fn conj(&self) -> Self {
        Coeff::new(self.a.conj(), self.b.conj())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero coefficient");
        if self.b.is_zero() {
            return Coeff::new(self.a.inv(), Gauss::zero());
        }
        // (a + b√2)^-1 = (a − b√2) / (a² − 2b²)
        let norm = self.a.mul(&self.a).sub(&self.b.mul(&self.b).scale(&rat(2, 1)));
        let ni = norm.inv();
        Coeff::new(self.a.mul(&ni), self.b.mul(&ni).scale(&rat(-1, 1)))
    }

    pub fn to_c64(&self) -> Complex64 {
        self.a.to_c64() + self.b.to_c64() * std::f64::consts::SQRT_2
    }

    /// Integer value when the coefficient is an integer fitting in i128.
    pub fn as_i128(&self) -> Option<i128> {
        if self.b.is_zero() && self.a.im.is_zero() && self.a.re.is_integer() {
            self.a.re.numer().to_i128()
        } else {
            None
        }
    }

    pub fn from_i128(n: i128) -> Self {
        Coeff::gauss(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// Rational value when the coefficient lies in Q.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.b.is_zero() && self.a.im.is_zero() {
            Some(&self.a.re)
        } else {
            None
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, o: &Coeff) -> Coeff {
        Coeff::new(self.a.add(&o.a), self.b.add(&o.b))
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, o: &Coeff) -> Coeff {
        Coeff::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, o: &Coeff) -> Coeff {
        if self.b.is_zero() && o.b.is_zero() {
            return Coeff::new(self.a.mul(&o.a), Gauss::zero());
        }
        if self.a.is_zero() && o.a.is_zero() {
            return Coeff::new(self.b.mul(&o.b).scale(&rat(2, 1)), Gauss::zero());
        }
        if self.b.is_zero() {
            return Coeff::new(self.a.mul(&o.a), self.a.mul(&o.b));
        }
        if o.b.is_zero() {
            return Coeff::new(self.a.mul(&o.a), self.b.mul(&o.a));
        }
        let two = rat(2, 1);
        Coeff::new(
            self.a.mul(&o.a).add(&self.b.mul(&o.b).scale(&two)),
            self.a.mul(&o.b).add(&self.b.mul(&o.a)),
        )
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        let m = rat(-1, 1);
        Coeff::new(self.a.scale(&m), self.b.scale(&m))
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, o: &Coeff) {
        self.a = self.a.add(&o.a);
        self.b = self.b.add(&o.b);
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_gauss(g: &Gauss) -> String {
    match (g.re.is_zero(), g.im.is_zero()) {
        (true, true) => "0".into(),
        (false, true) => fmt_rat(&g.re),
        (true, false) => {
            if g.im.is_one() {
                "i".into()
            } else if (-g.im.clone()).is_one() {
                "-i".into()
            } else {
                format!("{}i", fmt_rat(&g.im))
            }
        }
        (false, false) => {
            let sign = if g.im.is_negative() { "-" } else { "+" };
            format!("({}{}{}i)", fmt_rat(&g.re), sign, fmt_rat(&g.im.abs()))
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_gauss(&self.a)),
            (true, false) => write!(f, "{}·√2", fmt_gauss(&self.b)),
            (false, false) => write!(f, "({} + {}·√2)", fmt_gauss(&self.a), fmt_gauss(&self.b)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = Coeff::sqrt2();
        assert_eq!(&s * &s, Coeff::int(2));
        assert_eq!(&Coeff::inv_sqrt2() * &s, Coeff::one());
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = &(&Coeff::i() + &Coeff::sqrt2()) + &Coeff::ratio(3, 7);
        assert_eq!(&x * &x.inv(), Coeff::one());
    }

    #[test]
    fn numeric_value() {
        let x = &Coeff::i() + &Coeff::sqrt2();
        let c = x.to_c64();
        assert!((c.re - 2f64.sqrt()).abs() < 1e-15 && (c.im - 1.0).abs() < 1e-15);
    }
}
