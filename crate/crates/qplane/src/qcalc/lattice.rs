//! Functions sampled on a geometric lattice `x_k = base·ratioᵏ` (ratio > 1),
//! the Jackson integral and lattice q-derivatives.

use num_complex::Complex64;

use crate::error::{QError, Result};

/// Consecutive negligible terms required before a sum or sampling sweep stops.
const QUIET_RUN: usize = 8;

/// Sampled profile on `x_k = base·ratioᵏ`, `k ∈ [start, start + len)`.
///
/// `decays_lo` / `decays_hi` record that the samples were cut off because they
/// had fallen below the tail tolerance, so missing samples beyond that end read
/// as zero. Without the flag a missing sample is a hole.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeFunction {
    pub base: f64,
    pub ratio: f64,
    pub start: i64,
    pub values: Vec<Complex64>,
    pub angular: i64,
    pub decays_lo: bool,
    pub decays_hi: bool,
}

impl LatticeFunction {
    pub fn new(base: f64, ratio: f64, start: i64, values: Vec<Complex64>, angular: i64) -> Result<Self> {
        if !(base > 0.0 && base.is_finite()) || !(ratio > 1.0 && ratio.is_finite()) {
            return Err(QError::InvalidParameter(format!("lattice base {base}, ratio {ratio}")));
        }
        if let Some(k) = values.iter().position(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(QError::NonFinite(format!("lattice sample {}", start + k as i64)));
        }
        Ok(LatticeFunction { base, ratio, start, values, angular, decays_lo: false, decays_hi: false })
    }

    /// Samples `f` on `k ∈ [lo, hi]`.
    pub fn sample_range(
        base: f64,
        ratio: f64,
        angular: i64,
        lo: i64,
        hi: i64,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self> {
        let values = (lo..=hi).map(|k| f(base * ratio.powi(k as i32))).collect();
        Self::new(base, ratio, lo, values, angular)
    }

    /// Samples `f` outward from `k = 0` until `|x^weight_power · f(x)|` stays
    /// below `tol` times the largest value seen, in both directions.
    pub fn sample_decaying(
        base: f64,
        ratio: f64,
        angular: i64,
        weight_power: f64,
        tol: f64,
        cap: i64,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self> {
        let at = |k: i64| {
            let x = base * ratio.powf(k as f64);
            (f(x), x.powf(weight_power))
        };
        let mut peak: f64 = 0.0;
        let (v0, w0) = at(0);
        peak = peak.max(v0.norm() * w0);
        let mut hi_vals = vec![v0];
        let mut quiet = 0;
        let mut k = 0;
        // grow the upper side first so that `peak` reflects the bulk
        loop {
            k += 1;
            if k > cap {
                return Err(QError::NonSummable { cap });
            }
            let (v, w) = at(k);
            let t = v.norm() * w;
            peak = peak.max(t);
            hi_vals.push(v);
            quiet = if t <= tol * peak { quiet + 1 } else { 0 };
            if quiet >= QUIET_RUN {
                break;
            }
        }
        let mut lo_vals = Vec::new();
        quiet = 0;
        k = 0;
        loop {
            k -= 1;
            if -k > cap {
                return Err(QError::NonSummable { cap });
            }
            let (v, w) = at(k);
            let t = v.norm() * w;
            peak = peak.max(t);
            lo_vals.push(v);
            quiet = if t <= tol * peak { quiet + 1 } else { 0 };
            if quiet >= QUIET_RUN {
                break;
            }
        }
        let start = k;
        lo_vals.reverse();
        lo_vals.extend(hi_vals);
        let mut out = Self::new(base, ratio, start, lo_vals, angular)?;
        out.decays_hi = true;
        out.decays_lo = weight_power <= 0.0;
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    pub fn point(&self, k: i64) -> f64 {
        self.base * self.ratio.powf(k as f64)
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, f64, Complex64)> + '_ {
        self.values.iter().enumerate().map(move |(i, v)| {
            let k = self.start + i as i64;
            (k, self.point(k), *v)
        })
    }

    /// Sample at `k`; zero beyond a decayed end, a hole otherwise.
    pub fn get(&self, k: i64) -> Result<Complex64> {
        if k < self.start {
            if self.decays_lo {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Err(QError::LatticeHole { index: k })
            }
        } else if k >= self.end() {
            if self.decays_hi {
                Ok(Complex64::new(0.0, 0.0))
            } else {
                Err(QError::LatticeHole { index: k })
            }
        } else {
            Ok(self.values[(k - self.start) as usize])
        }
    }

    /// Same lattice, values mapped pointwise.
    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Self {
        let values = self.points().map(|(_, x, v)| f(x, v)).collect();
        LatticeFunction { values, ..self.clone() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|_, v| v * c)
    }

    /// Pointwise combination of two functions on the same lattice; the result
    /// covers the union of both ranges, reading decayed ends as zero.
    pub fn zip_with(&self, o: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        self.check_same_lattice(o)?;
        let lo = self.start.min(o.start);
        let hi = self.end().max(o.end());
        let mut values = Vec::with_capacity((hi - lo) as usize);
        for k in lo..hi {
            values.push(f(self.get(k)?, o.get(k)?));
        }
        Ok(LatticeFunction {
            values,
            start: lo,
            decays_lo: self.decays_lo && o.decays_lo,
            decays_hi: self.decays_hi && o.decays_hi,
            ..self.clone()
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a - b)
    }

    fn check_same_lattice(&self, o: &Self) -> Result<()> {
        let same = (self.base / o.base - 1.0).abs() < 1e-14 && (self.ratio / o.ratio - 1.0).abs() < 1e-14;
        if same {
            Ok(())
        } else {
            Err(QError::InvalidParameter("functions live on different lattices".into()))
        }
    }

    fn shift_for(&self, factor: f64) -> Result<i64> {
        let s = factor.ln() / self.ratio.ln();
        let n = s.round();
        if (s - n).abs() > 1e-9 {
            return Err(QError::InvalidParameter(format!(
                "scaling {factor} is not a power of the lattice ratio {}",
                self.ratio
            )));
        }
        Ok(n as i64)
    }

    /// `f(factor·x)` as a lattice function (factor a power of the ratio).
    pub fn dilate(&self, factor: f64) -> Result<Self> {
        let s = self.shift_for(factor)?;
        Ok(LatticeFunction { start: self.start - s, ..self.clone() })
    }

    /// Restrict to the indices `k` for which every `k + s`, `s ∈ shifts`, is
    /// readable.
    fn covered_range(&self, shifts: &[i64]) -> (i64, i64) {
        let mut lo = self.start;
        let mut hi = self.end();
        // at a decayed end the output keeps every point some shift still
        // reaches, so the operator is exact on the finitely supported profile
        for &s in shifts {
            if self.decays_lo {
                lo = lo.min(self.start - s);
            } else {
                lo = lo.max(self.start - s);
            }
            if self.decays_hi {
                hi = hi.max(self.end() - s);
            } else {
                hi = hi.min(self.end() - s);
            }
        }
        (lo, hi)
    }

    fn stencil(&self, shifts: &[i64], f: impl Fn(f64, &[Complex64]) -> Complex64) -> Result<Self> {
        let (lo, hi) = self.covered_range(shifts);
        if lo >= hi {
            let missing = if self.decays_lo { self.end() } else { self.start - 1 };
            return Err(QError::LatticeHole { index: missing });
        }
        let mut buf = vec![Complex64::new(0.0, 0.0); shifts.len()];
        let mut values = Vec::with_capacity((hi - lo) as usize);
        for k in lo..hi {
            for (b, s) in buf.iter_mut().zip(shifts) {
                *b = self.get(k + s)?;
            }
            values.push(f(self.point(k), &buf));
        }
        Ok(LatticeFunction {
            values,
            start: lo,
            decays_lo: self.decays_lo,
            decays_hi: self.decays_hi,
            ..self.clone()
        })
    }

    /// Jackson derivative `(f(x) − f(b·x))/((1 − b)x)` at every point whose
    /// neighbour is available; `b` must be a power of the lattice ratio.
    pub fn q_derivative(&self, b: f64) -> Result<Self> {
        let s = self.shift_for(b)?;
        self.stencil(&[0, s], |x, v| (v[0] - v[1]) / ((1.0 - b) * x))
    }

    /// Jackson derivative at a single index.
    pub fn q_derivative_at(&self, k: i64, b: f64) -> Result<Complex64> {
        let s = self.shift_for(b)?;
        Ok((self.get(k)? - self.get(k + s)?) / ((1.0 - b) * self.point(k)))
    }

    /// `(f(q·x) − f(q⁻¹·x))/((q − q⁻¹)x)`.
    pub fn symmetric_q_derivative(&self, q: f64) -> Result<Self> {
        let s = self.shift_for(q)?;
        self.stencil(&[s, -s], |x, v| (v[0] - v[1]) / ((q - 1.0 / q) * x))
    }

    /// `(c₀ f(q·x) + c₁ f(x) + c₂ f(q⁻¹·x))` pointwise, with `x`-dependent weights.
    pub fn three_point(
        &self,
        q: f64,
        w: impl Fn(f64) -> [Complex64; 3],
    ) -> Result<Self> {
        let s = self.shift_for(q)?;
        self.stencil(&[s, 0, -s], |x, v| {
            let c = w(x);
            c[0] * v[0] + c[1] * v[1] + c[2] * v[2]
        })
    }

    /// Jackson measure factor `1 − 1/ratio`.
    pub fn measure(&self) -> f64 {
        1.0 - 1.0 / self.ratio
    }
}

/// Outward summation from the largest term, stopping once a run of terms is
/// below `tol` times the accumulated magnitude. Terms beyond the stored range
/// are accepted as negligible only at a decayed end.
fn sum_outward(f: &LatticeFunction, tol: f64, term: impl Fn(f64, Complex64) -> Complex64) -> Result<Complex64> {
    let terms: Vec<Complex64> = f.points().map(|(_, x, v)| term(x, v)).collect();
    let Some(peak) = (0..terms.len()).max_by(|&a, &b| terms[a].norm().total_cmp(&terms[b].norm())) else {
        return Ok(Complex64::new(0.0, 0.0));
    };
    let mut acc = terms[peak];
    let mut up_done = false;
    let mut down_done = false;
    let mut quiet_up = 0;
    let mut quiet_down = 0;
    let mut i = 1usize;
    while !(up_done && down_done) {
        if !up_done {
            match terms.get(peak + i) {
                Some(t) => {
                    acc += t;
                    quiet_up = if t.norm() <= tol * acc.norm() { quiet_up + 1 } else { 0 };
                    up_done = quiet_up >= QUIET_RUN;
                }
                None => {
                    if !f.decays_hi && quiet_up < QUIET_RUN {
                        return Err(QError::NonSummable { cap: f.end() });
                    }
                    up_done = true;
                }
            }
        }
        if !down_done {
            match peak.checked_sub(i).and_then(|j| terms.get(j)) {
                Some(t) => {
                    acc += t;
                    quiet_down = if t.norm() <= tol * acc.norm() { quiet_down + 1 } else { 0 };
                    down_done = quiet_down >= QUIET_RUN;
                }
                None => {
                    if !f.decays_lo && quiet_down < QUIET_RUN && !terms.is_empty() {
                        // the lower end may stop short only if the terms there
                        // are already negligible
                        if terms[0].norm() > tol * acc.norm() {
                            return Err(QError::NonSummable { cap: f.start });
                        }
                    }
                    down_done = true;
                }
            }
        }
        i += 1;
    }
    Ok(acc)
}

/// `(1 − 1/ratio) Σ_k x_k f(x_k)`; with ratio q⁻² and base r0²q⁻¹ this is the
/// invariant integral on the ξ-lattice.
pub fn jackson_integral(f: &LatticeFunction, tol: f64) -> Result<Complex64> {
    if tol <= 0.0 {
        return Err(QError::InvalidParameter(format!("tol = {tol}")));
    }
    Ok(sum_outward(f, tol, |x, v| x * v)? * f.measure())
}

/// Plain `Σ_k w(x_k) f(x_k)` with the same stopping rule.
pub fn lattice_sum(f: &LatticeFunction, tol: f64, w: impl Fn(f64) -> f64) -> Result<Complex64> {
    sum_outward(f, tol, |x, v| v * w(x))
}

/// Jackson integral of a closure over `ξ_k = r0²q^(−2k−1)`, sampling outward
/// until the terms are negligible in both directions.
pub fn jackson_integral_fn(
    f: impl Fn(f64) -> Complex64,
    q: f64,
    r0: f64,
    tol: f64,
    cap: i64,
) -> Result<Complex64> {
    let lf = LatticeFunction::sample_decaying(r0 * r0 / q, 1.0 / (q * q), 0, 1.0, tol, cap, f)?;
    jackson_integral(&lf, tol)
}
