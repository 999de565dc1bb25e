//! Truncated formal Laurent series in 1/X with certified precision.
//!
//! A series stores coefficients c_i of X^{-i} for i = start.. and a
//! precision N meaning: every coefficient with index <= N is certified
//! (coefficients inside the certified range but outside the stored vector
//! are certified zeros). Operations contract the precision honestly and
//! never expose uncertified coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::poly::{Degree, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    spec: FieldSpec,
    /// Exponent index of the first stored coefficient (the series starts at
    /// X^{-start}). Meaningful only when `coeffs` is nonempty.
    start: i64,
    coeffs: Vec<FieldElem>,
    /// Certified precision N: all coefficients with index <= N are exact.
    precision: i64,
}

impl LaurentSeries {
    /// Normalizing constructor: truncates beyond the precision, strips
    /// leading and trailing zeros.
    pub fn new(spec: FieldSpec, start: i64, coeffs: Vec<FieldElem>, precision: i64) -> Self {
        for c in &coeffs {
            assert_eq!(c.spec(), spec, "coefficient from the wrong field");
        }
        let mut s = LaurentSeries { spec, start, coeffs, precision };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        // drop anything beyond the certified precision
        if !self.coeffs.is_empty() {
            let last = self.start + self.coeffs.len() as i64 - 1;
            if last > self.precision {
                let keep = (self.precision - self.start + 1).max(0) as usize;
                self.coeffs.truncate(keep);
            }
        }
        while self.coeffs.first().is_some_and(FieldElem::is_zero) {
            self.coeffs.remove(0);
            self.start += 1;
        }
        while self.coeffs.last().is_some_and(FieldElem::is_zero) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.start = 0;
        }
    }

    /// The zero series, certified through `precision`.
    pub fn zero_to_precision(spec: FieldSpec, precision: i64) -> Self {
        LaurentSeries { spec, start: 0, coeffs: Vec::new(), precision }
    }

    /// X^{-i} with the given certified precision.
    pub fn monomial(c: FieldElem, i: i64, precision: i64) -> Self {
        let spec = c.spec();
        LaurentSeries::new(spec, i, vec![c], precision)
    }

    /// Exact polynomial viewed as a series (certified through `precision`).
    pub fn from_polynomial(p: &Polynomial, precision: i64) -> Self {
        let spec = p.spec();
        match p.deg().finite() {
            None => LaurentSeries::zero_to_precision(spec, precision),
            Some(d) => {
                // X^j contributes at index -j
                let coeffs = (0..=d).rev().map(|j| p.coeff(j as usize)).collect();
                LaurentSeries::new(spec, -d, coeffs, precision)
            }
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// True when every certified coefficient is zero. The series may still
    /// be nonzero beyond its precision; callers decide how to treat that.
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree valuation: -start for a nonzero series, the -infinity
    /// sentinel when the series is zero through its precision.
    pub fn valuation(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Finite(-self.start)
        }
    }

    /// Coefficient of X^{-i}; `None` when i exceeds the certified precision.
    pub fn coeff(&self, i: i64) -> Option<FieldElem> {
        if i > self.precision {
            return None;
        }
        let idx = i - self.start;
        if self.coeffs.is_empty() || idx < 0 || idx >= self.coeffs.len() as i64 {
            Some(self.spec.zero())
        } else {
            Some(self.coeffs[idx as usize].clone())
        }
    }

    /// Coefficients c_1..c_n; errors when n exceeds the precision.
    pub fn coeffs_1_to(&self, n: i64) -> Result<Vec<FieldElem>> {
        if n > self.precision {
            return Err(Error::InsufficientPrecision { needed: n, available: self.precision });
        }
        Ok((1..=n).map(|i| self.coeff(i).unwrap()).collect())
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// [L]: the terms with index <= 0, as a polynomial in X.
    pub fn polynomial_part(&self) -> Polynomial {
        if self.coeffs.is_empty() || self.start > 0 {
            return Polynomial::zero(self.spec);
        }
        let top = (-self.start) as usize;
        let mut cs = vec![self.spec.zero(); top + 1];
        for (j, c) in cs.iter_mut().enumerate() {
            if let Some(v) = self.coeff(-(j as i64)) {
                *c = v;
            }
        }
        Polynomial::new(self.spec, cs)
    }

    /// {L} = L - [L]; same precision, valuation < 0.
    pub fn fractional_part(&self) -> LaurentSeries {
        if self.coeffs.is_empty() || self.start >= 1 {
            return self.clone();
        }
        let skip = (1 - self.start) as usize;
        let coeffs = self.coeffs.iter().skip(skip).cloned().collect();
        LaurentSeries::new(self.spec, 1, coeffs, self.precision)
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        assert_eq!(self.spec, rhs.spec, "series from different fields");
        let precision = self.precision.min(rhs.precision);
        if self.coeffs.is_empty() && rhs.coeffs.is_empty() {
            return LaurentSeries::zero_to_precision(self.spec, precision);
        }
        let lo = match (self.coeffs.is_empty(), rhs.coeffs.is_empty()) {
            (false, false) => self.start.min(rhs.start),
            (false, true) => self.start,
            (true, false) => rhs.start,
            (true, true) => unreachable!(),
        };
        if lo > precision {
            return LaurentSeries::zero_to_precision(self.spec, precision);
        }
        let coeffs = (lo..=precision)
            .map(|i| {
                let a = self.coeff(i).unwrap_or_else(|| self.spec.zero());
                let b = rhs.coeff(i).unwrap_or_else(|| self.spec.zero());
                &a + &b
            })
            .collect();
        LaurentSeries::new(self.spec, lo, coeffs, precision)
    }

    pub fn sub(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries {
            spec: self.spec,
            start: self.start,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }

    pub fn scale(&self, c: &FieldElem) -> LaurentSeries {
        LaurentSeries::new(
            self.spec,
            self.start,
            self.coeffs.iter().map(|a| a * c).collect(),
            self.precision,
        )
    }

    /// Effective start index used for precision contraction: a series that
    /// is zero to precision N is known to start past N.
    fn start_bound(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.precision + 1
        } else {
            self.start
        }
    }

    /// Product, certified to min(N1 - v2, N2 - v1) where v = valuation.
    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        assert_eq!(self.spec, rhs.spec, "series from different fields");
        let precision = (self.precision + rhs.start_bound()).min(rhs.precision + self.start_bound());
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LaurentSeries::zero_to_precision(self.spec, precision);
        }
        let lo = self.start + rhs.start;
        let mut coeffs = vec![self.spec.zero(); (precision - lo + 1).max(0) as usize];
        for (ia, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let i = self.start + ia as i64;
            for (jb, b) in rhs.coeffs.iter().enumerate() {
                let k = i + rhs.start + jb as i64;
                if k > precision {
                    break;
                }
                let t = a * b;
                let idx = (k - lo) as usize;
                coeffs[idx] = &coeffs[idx] + &t;
            }
        }
        LaurentSeries::new(self.spec, lo, coeffs, precision)
    }

    /// Exact-polynomial product; precision contracts by deg(p).
    pub fn mul_by_poly(&self, p: &Polynomial) -> LaurentSeries {
        assert_eq!(self.spec, p.spec(), "mixed fields");
        let Some(d) = p.deg().finite() else {
            return LaurentSeries::zero_to_precision(self.spec, self.precision);
        };
        let precision = self.precision - d;
        if self.coeffs.is_empty() {
            return LaurentSeries::zero_to_precision(self.spec, precision);
        }
        let lo = self.start - d;
        let coeffs = (lo..=precision)
            .map(|k| {
                let mut acc = self.spec.zero();
                for m in 0..=d {
                    let pm = p.coeff(m as usize);
                    if pm.is_zero() {
                        continue;
                    }
                    if let Some(c) = self.coeff(k + m) {
                        acc = &acc + &(&pm * &c);
                    }
                }
                acc
            })
            .collect();
        LaurentSeries::new(self.spec, lo, coeffs, precision)
    }

    /// Multiplicative inverse of a series with valuation -u; certified to
    /// N - 2u. Errors when the series is zero through its precision.
    pub fn reciprocal(&self) -> Result<LaurentSeries> {
        if self.coeffs.is_empty() {
            return Err(Error::ZeroSeries);
        }
        let u = self.start;
        let n_rel = (self.precision - u) as usize; // relative coefficients a_0..a_{n_rel}
        let a = |i: usize| self.coeff(u + i as i64).unwrap();
        let a0_inv = self.coeffs[0].inv()?;
        let mut b: Vec<FieldElem> = Vec::with_capacity(n_rel + 1);
        b.push(a0_inv.clone());
        for m in 1..=n_rel {
            let mut acc = self.spec.zero();
            for i in 1..=m {
                let ai = a(i);
                if ai.is_zero() {
                    continue;
                }
                acc = &acc + &(&ai * &b[m - i]);
            }
            b.push(-&(&a0_inv * &acc));
        }
        Ok(LaurentSeries::new(self.spec, -u, b, self.precision - 2 * u))
    }

    /// Series expansion of P/Q, certified to exactly `precision`.
    pub fn from_rational(p: &Polynomial, q: &Polynomial, precision: i64) -> Result<LaurentSeries> {
        assert_eq!(p.spec(), q.spec(), "mixed fields");
        let spec = p.spec();
        let Some(dq) = q.deg().finite() else {
            return Err(Error::DivisionByZero);
        };
        let Some(dp) = p.deg().finite() else {
            return Ok(LaurentSeries::zero_to_precision(spec, precision));
        };
        let u = dq - dp;
        if precision < u {
            return Ok(LaurentSeries::zero_to_precision(spec, precision));
        }
        let qd_inv = q.lc()?.inv()?;
        let pc = |m: i64| -> FieldElem {
            if m < 0 || m > dp {
                spec.zero()
            } else {
                p.coeff(m as usize)
            }
        };
        let qc = |m: i64| -> FieldElem {
            if m < 0 || m > dq {
                spec.zero()
            } else {
                q.coeff(m as usize)
            }
        };
        let mut c: Vec<FieldElem> = Vec::with_capacity((precision - u + 1) as usize);
        for k in u..=precision {
            let mut acc = pc(dq - k);
            let j_lo = (k - dq).max(u);
            for j in j_lo..k {
                let qj = qc(dq - k + j);
                if qj.is_zero() {
                    continue;
                }
                let cj = &c[(j - u) as usize];
                acc = &acc - &(&qj * cj);
            }
            c.push(&qd_inv * &acc);
        }
        Ok(LaurentSeries::new(spec, u, c, precision))
    }

    /// Text form `start=u; coeffs=c_u,...,c_N`.
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return format!("start=0; coeffs= (zero to precision {})", self.precision);
        }
        let cs = (self.start..=self.precision)
            .map(|i| self.coeff(i).unwrap().to_string())
            .collect::<Vec<_>>()
            .join(",");
        format!("start={}; coeffs={}", self.start, cs)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}
