//! Exact scalars: reduced fractions of Laurent polynomials in s = q^(1/2).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

use super::field::Coeff;
use super::laurent::Laurent;

/// Exact coefficient of the symbolic engines.
///
/// Stored as `num / den` with `den` normalized (lowest exponent 0, lowest
/// coefficient 1) and coprime to `num`, so structural equality is equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QScalar {
    num: Laurent,
    den: Laurent,
}

impl Default for QScalar {
    fn default() -> Self {
        QScalar::zero()
    }
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        QScalar::from_laurent(Laurent::one())
    }

    pub fn from_laurent(num: Laurent) -> Self {
        QScalar { num, den: Laurent::one() }
    }

    pub fn constant(c: Coeff) -> Self {
        QScalar::from_laurent(Laurent::constant(c))
    }

    pub fn int(n: i64) -> Self {
        QScalar::constant(Coeff::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        QScalar::constant(Coeff::ratio(n, d))
    }

    pub fn i() -> Self {
        QScalar::constant(Coeff::i())
    }

    pub fn sqrt2() -> Self {
        QScalar::constant(Coeff::sqrt2())
    }

    pub fn inv_sqrt2() -> Self {
        QScalar::constant(Coeff::inv_sqrt2())
    }

    /// `s^e`, i.e. q^(e/2).
    pub fn s_pow(e: i64) -> Self {
        QScalar::from_laurent(Laurent::monomial(e, Coeff::one()))
    }

    /// `q^e` for integer e.
    pub fn q_pow(e: i64) -> Self {
        QScalar::s_pow(2 * e)
    }

    /// `c · q^e`
    pub fn term(c: Coeff, q_exp: i64) -> Self {
        QScalar::from_laurent(Laurent::monomial(2 * q_exp, c))
    }

    /// tanh Λ = (1 − q²)/(1 + q²).
    pub fn tanh_lambda() -> Self {
        let one = QScalar::one();
        (&one - &QScalar::q_pow(2)).div(&(&one + &QScalar::q_pow(2)))
    }

    pub fn from_parts(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut out = QScalar { num, den };
        out.reduce();
        out
    }

    pub fn numer(&self) -> &Laurent {
        &self.num
    }

    pub fn denom(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_laurent(&self) -> bool {
        self.den == Laurent::one()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Laurent::one();
            return;
        }
        // monomials are units of the Laurent ring, so there is nothing to cancel
        if !self.den.is_monomial() && !self.num.is_monomial() {
            if span(&self.num) >= span(&self.den) {
                if let Some(q) = self.num.exact_div(&self.den) {
                    self.num = q;
                    self.den = Laurent::one();
                    return;
                }
            }
            let g = self.num.gcd(&self.den);
            if g != Laurent::one() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        self.normalize_den();
    }

    fn normalize_den(&mut self) {
        let (d, c, e) = self.den.normalize_unit();
        if d != self.den {
            self.num = self.num.scale_shift(&c.inv(), -e);
            self.den = d;
        }
    }

    pub fn conj(&self) -> Self {
        QScalar { num: self.num.conj(), den: self.den.conj() }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero QScalar");
        QScalar::from_parts(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = QScalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self · s^e`; the denominator is untouched so the result stays reduced.
    pub fn shift_s(&self, e: i64) -> Self {
        QScalar { num: self.num.shift(e), den: self.den.clone() }
    }

    /// Substitution q → q⁻¹.
    pub fn invert_q(&self) -> Self {
        QScalar::from_parts(self.num.invert_variable(), self.den.invert_variable())
    }

    /// Numeric value at q ∈ (0, ∞).
    pub fn eval(&self, q: f64) -> Complex64 {
        let s = Complex64::new(q.sqrt(), 0.0);
        self.num.eval(s) / self.den.eval(s)
    }

    /// Exact specialization at q = 1; `None` when the denominator vanishes there.
    pub fn at_q_one(&self) -> Option<Coeff> {
        let d = self.den.at_one();
        if d.is_zero() {
            None
        } else {
            Some(&self.num.at_one() * &d.inv())
        }
    }
}

fn span(p: &Laurent) -> i64 {
    p.max_exp().unwrap_or(0) - p.min_exp().unwrap_or(0)
}

/// Laurent gcd with the unit cases short-circuited.
fn gcd(a: &Laurent, b: &Laurent) -> Laurent {
    if a.is_monomial() || b.is_monomial() {
        Laurent::one()
    } else {
        a.gcd(b)
    }
}

fn div_exact(a: &Laurent, g: &Laurent) -> Laurent {
    if *g == Laurent::one() {
        a.clone()
    } else {
        a.exact_div(g).expect("gcd divides")
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, o: &QScalar) -> QScalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return QScalar::from_parts(self.num.add(&o.num), self.den.clone());
        }
        // a/b + c/d over lcm(b, d); with g = gcd(b, d) any common factor of
        // the new numerator and denominator divides g
        let g = gcd(&self.den, &o.den);
        let (b1, d1) = (div_exact(&self.den, &g), div_exact(&o.den, &g));
        let num = self.num.mul(&d1).add(&o.num.mul(&b1));
        if num.is_zero() {
            return QScalar::zero();
        }
        let h = gcd(&num, &g);
        let mut out = QScalar { num: div_exact(&num, &h), den: self.den.mul(&div_exact(&d1, &h)) };
        out.normalize_den();
        out
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, o: &QScalar) -> QScalar {
        self + &(-o)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, o: &QScalar) -> QScalar {
        if self.is_zero() || o.is_zero() {
            return QScalar::zero();
        }
        if self.is_laurent() && o.is_laurent() {
            return QScalar::from_laurent(self.num.mul(&o.num));
        }
        // both factors are reduced, so only cross cancellation is possible
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let mut out = QScalar {
            num: div_exact(&self.num, &g1).mul(&div_exact(&o.num, &g2)),
            den: div_exact(&self.den, &g2).mul(&div_exact(&o.den, &g1)),
        };
        out.normalize_den();
        out
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, o: &QScalar) -> QScalar {
        self * &o.inv()
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QScalar {
            type Output = QScalar;
            fn $m(self, o: QScalar) -> QScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&QScalar> for QScalar {
            type Output = QScalar;
            fn $m(self, o: &QScalar) -> QScalar {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        -&self
    }
}

fn fmt_laurent(p: &Laurent) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (e, c) in p.terms() {
        let pw = match *e {
            0 => String::new(),
            2 => "q".into(),
            e if e % 2 == 0 => format!("q^{}", e / 2),
            e => format!("q^({}/2)", e),
        };
        let cs = c.to_string();
        parts.push(match (pw.is_empty(), cs.as_str()) {
            (true, _) => cs,
            (false, "1") => pw,
            (false, "-1") => format!("-{pw}"),
            _ => format!("{cs}·{pw}"),
        });
    }
    parts.join(" + ").replace("+ -", "- ")
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", fmt_laurent(&self.num))
        } else {
            write!(f, "({})/({})", fmt_laurent(&self.num), fmt_laurent(&self.den))
        }
    }
}
