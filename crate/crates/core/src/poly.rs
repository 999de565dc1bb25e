//! Dense univariate polynomials over a field, with Euclidean division.
//!
//! Coefficients are stored in ascending powers and kept normalized: the
//! vector is empty (zero polynomial) or ends in a nonzero coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldElem, FieldSpec};

/// Degree with the -infinity sentinel for the zero polynomial. The variant
/// order makes `NegInf` compare below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Degree {
    NegInf,
    Finite(i64),
}

impl Degree {
    pub fn finite(self) -> Option<i64> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Degree::NegInf
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    spec: FieldSpec,
    coeffs: Vec<FieldElem>,
}

impl Polynomial {
    /// Builds a polynomial, stripping trailing zeros. All coefficients must
    /// belong to `spec`.
    pub fn new(spec: FieldSpec, mut coeffs: Vec<FieldElem>) -> Self {
        for c in &coeffs {
            assert_eq!(c.spec(), spec, "coefficient from the wrong field");
        }
        while coeffs.last().is_some_and(FieldElem::is_zero) {
            coeffs.pop();
        }
        Polynomial { spec, coeffs }
    }

    pub fn zero(spec: FieldSpec) -> Self {
        Polynomial { spec, coeffs: Vec::new() }
    }

    pub fn one(spec: FieldSpec) -> Self {
        Polynomial::new(spec, vec![spec.one()])
    }

    /// The monomial X.
    pub fn x(spec: FieldSpec) -> Self {
        Polynomial::new(spec, vec![spec.zero(), spec.one()])
    }

    pub fn constant(c: FieldElem) -> Self {
        let spec = c.spec();
        Polynomial::new(spec, vec![c])
    }

    /// c * X^deg
    pub fn monomial(c: FieldElem, deg: usize) -> Self {
        let spec = c.spec();
        let mut coeffs = vec![spec.zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial::new(spec, coeffs)
    }

    /// Integer coefficients in ascending powers, reduced into the field.
    pub fn from_i64_coeffs(spec: FieldSpec, coeffs: &[i64]) -> Self {
        Polynomial::new(spec, coeffs.iter().map(|&c| spec.embed_i64(c)).collect())
    }

    /// u*X + v (the shape of a golden partial quotient).
    pub fn linear(u: FieldElem, v: FieldElem) -> Self {
        let spec = u.spec();
        Polynomial::new(spec, vec![v, u])
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Degree {
        if self.coeffs.is_empty() {
            Degree::NegInf
        } else {
            Degree::Finite(self.coeffs.len() as i64 - 1)
        }
    }

    /// Leading coefficient; errors on the zero polynomial.
    pub fn lc(&self) -> Result<&FieldElem> {
        self.coeffs.last().ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of X^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn scale(&self, c: &FieldElem) -> Polynomial {
        Polynomial::new(self.spec, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by X^k.
    pub fn shift_up(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.spec.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { spec: self.spec, coeffs }
    }

    /// Euclidean division: a = q*b + r with deg(r) < deg(b).
    pub fn divrem(&self, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        assert_eq!(self.spec, b.spec, "polynomials from different fields");
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = b.coeffs.len() - 1;
        let lb_inv = b.lc()?.inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db || (rem.len() == db && db == 0 && !rem.is_empty()) {
            // strip trailing zeros that appear during elimination
            if rem.last().is_some_and(FieldElem::is_zero) {
                rem.pop();
                continue;
            }
            if rem.len() < db + 1 {
                break;
            }
            let shift = rem.len() - 1 - db;
            let factor = rem.last().unwrap() * &lb_inv;
            for (i, bc) in b.coeffs.iter().enumerate() {
                let t = &factor * bc;
                rem[shift + i] = &rem[shift + i] - &t;
            }
            quot[shift] = factor;
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
        }
        Ok((
            Polynomial::new(self.spec, quot),
            Polynomial::new(self.spec, rem),
        ))
    }

    /// Formats as comma-separated ascending coefficients, e.g. "1,0,1".
    pub fn to_coeff_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(FieldElem::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the comma-separated ascending coefficient format.
    pub fn parse(spec: FieldSpec, s: &str) -> Result<Polynomial> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Polynomial::zero(spec));
        }
        let coeffs = s
            .split(',')
            .map(|tok| spec.parse_elem(tok))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::new(spec, coeffs))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.spec, rhs.spec, "polynomials from different fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect();
        Polynomial::new(self.spec, coeffs)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            spec: self.spec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.spec, rhs.spec, "polynomials from different fields");
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(self.spec);
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        Polynomial::new(self.spec, coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "X")?,
                1 => write!(f, "{c}*X")?,
                _ if c.is_one() => write!(f, "X^{i}")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn degree_and_lc() {
        let q = FieldSpec::rationals();
        let p = Polynomial::from_i64_coeffs(q, &[1, 0, 1]);
        assert_eq!(p.deg(), Degree::Finite(2));
        assert_eq!(Polynomial::zero(q).deg(), Degree::NegInf);
        assert!(Degree::NegInf < Degree::Finite(0));
        assert_eq!(Polynomial::from_i64_coeffs(q, &[5]).deg(), Degree::Finite(0));

        let p5 = Polynomial::from_i64_coeffs(f(5), &[0, 1, 0, 2]);
        assert_eq!(p5.lc().unwrap(), &f(5).embed_i64(2));
        assert_eq!(Polynomial::x(q).lc().unwrap(), &q.one());
        let half = FieldSpec::rationals().parse_elem("3/2").unwrap();
        assert_eq!(Polynomial::monomial(half.clone(), 2).lc().unwrap(), &half);
        assert_eq!(Polynomial::zero(q).lc(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn divrem_examples() {
        // X^2+1 = X*X + 1 over F_2
        let f2 = f(2);
        let a = Polynomial::from_i64_coeffs(f2, &[1, 0, 1]);
        let (q, r) = a.divrem(&Polynomial::x(f2)).unwrap();
        assert_eq!(q, Polynomial::x(f2));
        assert_eq!(r, Polynomial::one(f2));

        // X^3+2X = X*(X^2+1) + X over F_3; verify by multiplying back
        let f3 = f(3);
        let a = Polynomial::from_i64_coeffs(f3, &[0, 2, 0, 1]);
        let b = Polynomial::from_i64_coeffs(f3, &[1, 0, 1]);
        let (q, r) = a.divrem(&b).unwrap();
        assert_eq!(q, Polynomial::x(f3));
        assert_eq!(r, Polynomial::x(f3));
        assert_eq!(&(&q * &b) + &r, a);

        // freshman's dream
        let s = Polynomial::from_i64_coeffs(f2, &[1, 1]);
        assert_eq!(&s * &s, Polynomial::from_i64_coeffs(f2, &[1, 0, 1]));
    }

    #[test]
    fn divide_by_zero() {
        let q = FieldSpec::rationals();
        let a = Polynomial::x(q);
        assert_eq!(a.divrem(&Polynomial::zero(q)), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_roundtrip() {
        let f3 = f(3);
        let p = Polynomial::parse(f3, "1,0,4").unwrap();
        assert_eq!(p, Polynomial::from_i64_coeffs(f3, &[1, 0, 1]));
        assert_eq!(p.to_coeff_string(), "1,0,1");
        let q = FieldSpec::rationals();
        let r = Polynomial::parse(q, "1/2,-3").unwrap();
        assert_eq!(r.to_coeff_string(), "1/2,-3");
    }

    fn arb_poly(which: usize) -> impl Strategy<Value = Polynomial> {
        let spec = [f(3), f(5), FieldSpec::rationals()][which];
        proptest::collection::vec(-20i64..20, 0..8)
            .prop_map(move |cs| Polynomial::from_i64_coeffs(spec, &cs))
    }

    proptest! {
        #[test]
        fn divrem_roundtrip(which in 0usize..3, seed_a in proptest::collection::vec(-20i64..20, 0..8), seed_b in proptest::collection::vec(-20i64..20, 1..8)) {
            let spec = [f(3), f(5), FieldSpec::rationals()][which];
            let a = Polynomial::from_i64_coeffs(spec, &seed_a);
            let b = Polynomial::from_i64_coeffs(spec, &seed_b);
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn normalized(which in 0usize..3, p in (0usize..3).prop_flat_map(arb_poly), q in (0usize..3).prop_flat_map(arb_poly)) {
            let _ = which;
            if p.spec() == q.spec() {
                for out in [&p + &q, &p - &q, &p * &q] {
                    prop_assert!(out.coeffs().last().map_or(true, |c| !c.is_zero()));
                }
            }
        }
    }
}
