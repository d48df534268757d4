//! Banded operators on the truncated basis e_j, |j| ≤ J, with the column
//! window on which the truncated action is exact.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{QError, Result};

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// `A e_c = Σ_o bands[o][c + J] e_{c+o}`. Columns in `[lo, hi]` are exact:
/// their image is the image under the untruncated operator.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleOperator {
    jmax: i64,
    bands: BTreeMap<i64, Vec<Complex64>>,
    lo: i64,
    hi: i64,
}

impl CircleOperator {
    pub fn zero(jmax: i64) -> Self {
        CircleOperator { jmax, bands: BTreeMap::new(), lo: -jmax, hi: jmax }
    }

    pub fn identity(jmax: i64) -> Self {
        Self::from_band(jmax, 0, |_| Complex64::new(1.0, 0.0))
    }

    /// Single band `e_c ↦ f(c) e_{c+offset}`, truncated to the basis.
    pub fn from_band(jmax: i64, offset: i64, f: impl Fn(i64) -> Complex64) -> Self {
        let n = (2 * jmax + 1) as usize;
        let mut v = vec![ZERO; n];
        for c in -jmax..=jmax {
            let t = c + offset;
            if t.abs() <= jmax {
                v[(c + jmax) as usize] = f(c);
            }
        }
        let mut bands = BTreeMap::new();
        bands.insert(offset, v);
        CircleOperator { jmax, bands, lo: -jmax - offset.min(0), hi: jmax - offset.max(0) }
    }

    pub fn jmax(&self) -> i64 {
        self.jmax
    }

    pub fn offsets(&self) -> impl Iterator<Item = i64> + '_ {
        self.bands.keys().copied()
    }

    /// Exact column range `[lo, hi]`.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    fn idx(&self, c: i64) -> usize {
        (c + self.jmax) as usize
    }

    /// Matrix element ⟨e_row, A e_col⟩.
    pub fn entry(&self, row: i64, col: i64) -> Complex64 {
        if col.abs() > self.jmax {
            return ZERO;
        }
        self.bands.get(&(row - col)).map(|b| b[self.idx(col)]).unwrap_or(ZERO)
    }

    /// Column `A e_col` as (row, value) pairs.
    pub fn column(&self, col: i64) -> Vec<(i64, Complex64)> {
        self.bands
            .iter()
            .filter_map(|(o, b)| {
                let t = col + o;
                (t.abs() <= self.jmax).then(|| (t, b[self.idx(col)]))
            })
            .collect()
    }

    fn offset_extent(&self) -> (i64, i64) {
        let omin = self.bands.keys().next().copied().unwrap_or(0);
        let omax = self.bands.keys().next_back().copied().unwrap_or(0);
        (omin, omax)
    }

    fn check_same(&self, o: &Self) {
        assert_eq!(self.jmax, o.jmax, "operators on different truncations");
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let bands = self.bands.iter().map(|(o, b)| (*o, b.iter().map(|v| v * c).collect())).collect();
        CircleOperator { bands, ..self.clone() }
    }

    /// Matrix adjoint; the window shrinks to the rows whose full preimage lies
    /// inside the basis.
    pub fn adjoint(&self) -> Self {
        let n = (2 * self.jmax + 1) as usize;
        let mut bands = BTreeMap::new();
        for (o, b) in &self.bands {
            let mut v = vec![ZERO; n];
            for c in -self.jmax..=self.jmax {
                let t = c + o;
                if t.abs() <= self.jmax {
                    v[self.idx(t)] = b[self.idx(c)].conj();
                }
            }
            bands.insert(-o, v);
        }
        let (omin, omax) = self.offset_extent();
        CircleOperator {
            jmax: self.jmax,
            bands,
            lo: (-self.jmax + omax).max(-self.jmax),
            hi: (self.jmax + omin).min(self.jmax),
        }
    }

    /// `(A u)` for a coefficient vector indexed by `j + J`.
    pub fn apply(&self, u: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; u.len()];
        for (o, b) in &self.bands {
            for c in -self.jmax..=self.jmax {
                let t = c + o;
                if t.abs() <= self.jmax {
                    out[self.idx(t)] += b[self.idx(c)] * u[self.idx(c)];
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(self.jmax);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &(self * o) - &(o * self)
    }
}

impl Add for &CircleOperator {
    type Output = CircleOperator;
    fn add(self, o: &CircleOperator) -> CircleOperator {
        self.check_same(o);
        let mut bands = self.bands.clone();
        for (k, b) in &o.bands {
            let e = bands.entry(*k).or_insert_with(|| vec![ZERO; b.len()]);
            for (x, y) in e.iter_mut().zip(b) {
                *x += y;
            }
        }
        CircleOperator { jmax: self.jmax, bands, lo: self.lo.max(o.lo), hi: self.hi.min(o.hi) }
    }
}

impl Neg for &CircleOperator {
    type Output = CircleOperator;
    fn neg(self) -> CircleOperator {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Sub for &CircleOperator {
    type Output = CircleOperator;
    fn sub(self, o: &CircleOperator) -> CircleOperator {
        self + &(-o)
    }
}

/// `(A·B) e_c = A(B e_c)`.
impl Mul for &CircleOperator {
    type Output = CircleOperator;
    fn mul(self, b: &CircleOperator) -> CircleOperator {
        self.check_same(b);
        let jmax = self.jmax;
        let n = (2 * jmax + 1) as usize;
        let mut bands: BTreeMap<i64, Vec<Complex64>> = BTreeMap::new();
        for (ob, vb) in &b.bands {
            for (oa, va) in &self.bands {
                let e = bands.entry(oa + ob).or_insert_with(|| vec![ZERO; n]);
                for c in -jmax..=jmax {
                    let mid = c + ob;
                    let t = mid + oa;
                    if mid.abs() <= jmax && t.abs() <= jmax {
                        e[(c + jmax) as usize] += va[(mid + jmax) as usize] * vb[(c + jmax) as usize];
                    }
                }
            }
        }
        let (omin_b, omax_b) = b.offset_extent();
        CircleOperator {
            jmax,
            bands,
            lo: b.lo.max(self.lo - omin_b),
            hi: b.hi.min(self.hi - omax_b),
        }
    }
}

impl Mul<Complex64> for &CircleOperator {
    type Output = CircleOperator;
    fn mul(self, c: Complex64) -> CircleOperator {
        self.scale(c)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub window: (i64, i64),
    /// max over window columns of max|L − R| / max(|L|, |R|) within the column
    pub max_deviation: f64,
    pub worst_column: Option<i64>,
}

/// Compare two operator expressions on the columns exact for both.
pub fn relation_check_interior(name: &str, lhs: &CircleOperator, rhs: &CircleOperator) -> Result<RelationCheck> {
    lhs.check_same(rhs);
    let lo = lhs.lo.max(rhs.lo);
    let hi = lhs.hi.min(rhs.hi);
    if lo > hi {
        return Err(QError::WindowViolation { column: 0, lo, hi });
    }
    let mut worst = 0.0f64;
    let mut worst_col = None;
    let offsets: Vec<i64> = {
        let mut v: Vec<i64> = lhs.offsets().chain(rhs.offsets()).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    for c in lo..=hi {
        let mut diff = 0.0f64;
        let mut scale = 0.0f64;
        for o in &offsets {
            let l = lhs.entry(c + o, c);
            let r = rhs.entry(c + o, c);
            diff = diff.max((l - r).norm());
            scale = scale.max(l.norm()).max(r.norm());
        }
        let d = if scale == 0.0 { 0.0 } else { diff / scale };
        if d > worst {
            worst = d;
            worst_col = Some(c);
        }
    }
    Ok(RelationCheck { name: name.to_string(), window: (lo, hi), max_deviation: worst, worst_column: worst_col })
}
