//! Continued fractions over k(X): convergents, golden-ratio analogs, and
//! certified conversion in both directions between continued fractions and
//! Laurent series.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};
use crate::laurent::LaurentSeries;
use crate::poly::{Degree, Polynomial};

/// A continued fraction [0; A_1, A_2, ...] with every partial quotient of
/// degree >= 1, stored as a preperiod plus an optional repeating block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    spec: FieldSpec,
    preperiod: Vec<Polynomial>,
    period: Vec<Polynomial>,
}

impl ContinuedFraction {
    pub fn new(
        spec: FieldSpec,
        preperiod: Vec<Polynomial>,
        period: Vec<Polynomial>,
    ) -> Result<Self> {
        for a in preperiod.iter().chain(period.iter()) {
            if a.spec() != spec {
                return Err(Error::FieldMismatch(spec, a.spec()));
            }
            if a.deg() < Degree::Finite(1) {
                return Err(Error::QuotientDegree);
            }
        }
        Ok(ContinuedFraction { spec, preperiod, period })
    }

    pub fn finite(spec: FieldSpec, quotients: Vec<Polynomial>) -> Result<Self> {
        ContinuedFraction::new(spec, quotients, Vec::new())
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    pub fn preperiod(&self) -> &[Polynomial] {
        &self.preperiod
    }

    pub fn period(&self) -> &[Polynomial] {
        &self.period
    }

    /// Number of quotients of a finite continued fraction.
    pub fn finite_len(&self) -> Option<usize> {
        self.is_finite().then_some(self.preperiod.len())
    }

    /// Partial quotient A_n (1-based); `None` past the end of a finite CF.
    pub fn quotient(&self, n: usize) -> Option<&Polynomial> {
        if n == 0 {
            return None;
        }
        if n <= self.preperiod.len() {
            return Some(&self.preperiod[n - 1]);
        }
        if self.period.is_empty() {
            return None;
        }
        Some(&self.period[(n - 1 - self.preperiod.len()) % self.period.len()])
    }

    /// True iff every available quotient has degree exactly 1.
    pub fn is_golden(&self) -> bool {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .all(|a| a.deg() == Degree::Finite(1))
    }

    /// Convergents 1..n from the three-term recursions with
    /// Q_{-1}=0, P_{-1}=1, Q_0=1, P_0=0.
    pub fn convergents(&self, n: usize) -> Result<Vec<Convergent>> {
        let mut out = Vec::with_capacity(n);
        let mut p_prev = Polynomial::one(self.spec);
        let mut p_cur = Polynomial::zero(self.spec);
        let mut q_prev = Polynomial::zero(self.spec);
        let mut q_cur = Polynomial::one(self.spec);
        for i in 1..=n {
            let a = self.quotient(i).ok_or(Error::QuotientOutOfRange(i))?;
            let p_next = &(a * &p_cur) + &p_prev;
            let q_next = &(a * &q_cur) + &q_prev;
            let d = q_next.deg().finite().expect("convergent denominator is nonzero");
            out.push(Convergent { n: i, p: p_next.clone(), q: q_next.clone(), d });
            p_prev = p_cur;
            p_cur = p_next;
            q_prev = q_cur;
            q_cur = q_next;
        }
        Ok(out)
    }

    /// Series expansion of the continued fraction's value, certified to
    /// precision `n_prec`. Chooses the smallest convergent index n with
    /// d_n + d_{n+1} > n_prec and expands P_n/Q_n. A finite CF is treated
    /// as truncated knowledge of an infinite expansion; if it cannot
    /// certify the requested precision the error names what is achievable.
    pub fn cf_to_series(&self, n_prec: i64) -> Result<LaurentSeries> {
        let mut degs: Vec<i64> = Vec::new(); // cumulative d_1, d_2, ...
        let mut total = 0i64;
        let mut chosen: Option<usize> = None;
        for n in 1.. {
            match self.quotient(n) {
                Some(a) => {
                    total += a.deg().finite().expect("validated quotient");
                    degs.push(total);
                    if n >= 2 && degs[n - 2] + degs[n - 1] > n_prec {
                        chosen = Some(n - 1);
                        break;
                    }
                }
                None => break,
            }
        }
        let n = match chosen {
            Some(n) => n,
            None => {
                // finite CF with m quotients: the unseen quotient m+1 has
                // degree >= 1, so precision up to 2*d_m is still certified
                let m = degs.len();
                if m == 0 {
                    return Err(Error::CfTooShort { achievable: 0, requested: n_prec });
                }
                let achievable = 2 * degs[m - 1];
                if n_prec <= achievable {
                    m
                } else {
                    return Err(Error::CfTooShort { achievable, requested: n_prec });
                }
            }
        };
        let conv = self.convergents(n)?;
        let last = conv.last().expect("n >= 1");
        LaurentSeries::from_rational(&last.p, &last.q, n_prec)
    }

    fn to_text_inner(&self) -> String {
        let pre = self
            .preperiod
            .iter()
            .map(Polynomial::to_coeff_string)
            .collect::<Vec<_>>()
            .join("; ");
        if self.period.is_empty() {
            format!("[0; {pre}]")
        } else {
            let per = self
                .period
                .iter()
                .map(Polynomial::to_coeff_string)
                .collect::<Vec<_>>()
                .join("; ");
            if pre.is_empty() {
                format!("[0; ({per})*]")
            } else {
                format!("[0; {pre}; ({per})*]")
            }
        }
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text_inner())
    }
}

/// Convergent P_n/Q_n with d = deg(Q_n) = sum of quotient degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub n: usize,
    pub p: Polynomial,
    pub q: Polynomial,
    pub d: i64,
}

/// Continued fraction of a rational function. Returns the polynomial part
/// (zero when deg P < deg Q) and the finite CF [0; A_1..A_m] of the
/// remaining fraction, with every deg(A_i) >= 1.
pub fn cf_of_rational(p: &Polynomial, q: &Polynomial) -> Result<(Polynomial, ContinuedFraction)> {
    assert_eq!(p.spec(), q.spec(), "mixed fields");
    let spec = p.spec();
    if q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (whole, rem) = if p.deg() >= q.deg() {
        p.divrem(q)?
    } else {
        (Polynomial::zero(spec), p.clone())
    };
    let mut quotients = Vec::new();
    let mut a = q.clone();
    let mut b = rem;
    while !b.is_zero() {
        let (qt, r) = a.divrem(&b)?;
        quotients.push(qt);
        a = b;
        b = r;
    }
    Ok((whole, ContinuedFraction::finite(spec, quotients)?))
}

/// Result of reading a continued fraction off a truncated series. Only
/// certified quotients are emitted: quotient m is certified exactly when
/// 2*d_m <= precision, i.e. the truncation determines it regardless of the
/// unseen tail.
#[derive(Debug, Clone)]
pub struct SeriesCf {
    pub cf: ContinuedFraction,
    pub certified: usize,
    /// The remainder vanished within the available precision; the series is
    /// rational as far as the truncation can tell.
    pub rational_within_precision: bool,
}

/// Extracts certified partial quotients from a series with negative
/// valuation.
pub fn series_to_cf(l: &LaurentSeries) -> Result<SeriesCf> {
    let spec = l.spec();
    if l.valuation() >= Degree::Finite(0) {
        return Err(Error::OutOfRange(
            "series_to_cf needs a series with negative valuation".into(),
        ));
    }
    let n = l.precision();
    if n < 1 {
        return Ok(SeriesCf {
            cf: ContinuedFraction::finite(spec, Vec::new())?,
            certified: 0,
            rational_within_precision: false,
        });
    }
    if l.is_zero_to_precision() {
        return Ok(SeriesCf {
            cf: ContinuedFraction::finite(spec, Vec::new())?,
            certified: 0,
            rational_within_precision: true,
        });
    }
    // The certified part of L is exactly C(X)/X^N with C = sum_i c_i X^{N-i};
    // Euclid on (X^N, C) yields the same quotients as the greedy
    // reciprocal/polynomial-part iteration on L. Quotient m is forced by the
    // truncation exactly while 2*d_m <= N, so the loop stops there instead of
    // expanding the uncertified tail (whose coefficients blow up over Q).
    let mut c_coeffs = vec![spec.zero(); n as usize];
    for i in 1..=n {
        c_coeffs[(n - i) as usize] = l.coeff(i).expect("within precision");
    }
    let mut a = Polynomial::monomial(spec.one(), n as usize);
    let mut b = Polynomial::new(spec, c_coeffs);
    let mut quotients: Vec<Polynomial> = Vec::new();
    let mut cum = 0i64;
    // Degree of the first uncertified quotient, when one is visible.
    let mut next_deg: Option<i64> = None;
    let mut exact = false;
    loop {
        if b.is_zero() {
            exact = true;
            break;
        }
        let (qt, r) = a.divrem(&b)?;
        let d = qt.deg().finite().expect("deg(a) > deg(b) in the Euclid loop");
        if 2 * (cum + d) > n {
            next_deg = Some(cum + d);
            break;
        }
        cum += d;
        quotients.push(qt);
        a = b;
        b = r;
    }
    let certified = quotients.len();
    // "Rational within precision" means the remainder after the certified
    // quotients vanishes at a remaining precision that actually shows at
    // least one coefficient; an exactly terminating Euclid run qualifies.
    let rational_within_precision = if exact {
        true
    } else {
        let remaining = n - 2 * cum;
        match next_deg {
            Some(d_next) => remaining >= 1 && cum + d_next > n,
            None => false,
        }
    };
    Ok(SeriesCf {
        cf: ContinuedFraction::finite(spec, quotients)?,
        certified,
        rational_within_precision,
    })
}

/// A golden-ratio analog: the purely-in-shape continued fraction whose
/// quotients are all linear, [0; u_1 X + v_1, u_2 X + v_2, ...] with every
/// u_i a unit. Stored as preperiod plus repeating block of (u, v) pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenSpec {
    spec: FieldSpec,
    preperiod: Vec<(FieldElem, FieldElem)>,
    period: Vec<(FieldElem, FieldElem)>,
}

impl GoldenSpec {
    pub fn new(
        spec: FieldSpec,
        preperiod: Vec<(FieldElem, FieldElem)>,
        period: Vec<(FieldElem, FieldElem)>,
    ) -> Result<Self> {
        for (u, v) in preperiod.iter().chain(period.iter()) {
            if u.spec() != spec || v.spec() != spec {
                return Err(Error::FieldMismatch(spec, u.spec()));
            }
            if u.is_zero() {
                return Err(Error::ZeroLeadingCoefficient);
            }
        }
        Ok(GoldenSpec { spec, preperiod, period })
    }

    /// Purely periodic golden spec from the repeating block of pairs.
    pub fn periodic(spec: FieldSpec, period: Vec<(FieldElem, FieldElem)>) -> Result<Self> {
        GoldenSpec::new(spec, Vec::new(), period)
    }

    /// The basic analog [0; X, X, X, ...].
    pub fn phi_basic(spec: FieldSpec) -> Self {
        GoldenSpec::periodic(spec, vec![(spec.one(), spec.zero())]).expect("1 is a unit")
    }

    /// [0; X+1, X+1, ...].
    pub fn phi_bar(spec: FieldSpec) -> Self {
        GoldenSpec::periodic(spec, vec![(spec.one(), spec.one())]).expect("1 is a unit")
    }

    /// [0; uX+v, uX+v, ...].
    pub fn constant(u: FieldElem, v: FieldElem) -> Result<Self> {
        let spec = u.spec();
        GoldenSpec::periodic(spec, vec![(u, v)])
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    /// (u_n, v_n), 1-based; `None` past the end when there is no period.
    pub fn pair(&self, n: usize) -> Option<(FieldElem, FieldElem)> {
        if n == 0 {
            return None;
        }
        if n <= self.preperiod.len() {
            return Some(self.preperiod[n - 1].clone());
        }
        if self.period.is_empty() {
            return None;
        }
        Some(self.period[(n - 1 - self.preperiod.len()) % self.period.len()].clone())
    }

    pub fn preperiod(&self) -> &[(FieldElem, FieldElem)] {
        &self.preperiod
    }

    pub fn period(&self) -> &[(FieldElem, FieldElem)] {
        &self.period
    }

    /// The continued fraction with quotients u_i X + v_i.
    pub fn to_cf(&self) -> ContinuedFraction {
        let quot = |(u, v): &(FieldElem, FieldElem)| Polynomial::linear(u.clone(), v.clone());
        ContinuedFraction::new(
            self.spec,
            self.preperiod.iter().map(quot).collect(),
            self.period.iter().map(quot).collect(),
        )
        .expect("linear quotients have degree 1")
    }

    /// Laurent expansion certified to `precision`.
    pub fn series(&self, precision: i64) -> Result<LaurentSeries> {
        self.to_cf().cf_to_series(precision)
    }

    /// Random purely periodic golden spec (period length 1..=max_period).
    pub fn random<R: rand::Rng>(spec: FieldSpec, max_period: usize, rng: &mut R) -> Self {
        let len = rng.gen_range(1..=max_period);
        let period = (0..len)
            .map(|_| {
                (
                    crate::field::random_nonzero(spec, rng),
                    crate::field::random_elem(spec, rng),
                )
            })
            .collect();
        GoldenSpec::periodic(spec, period).expect("u generated nonzero")
    }
}
