//! Exact field arithmetic for F_p (p prime) and Q.
//!
//! Every element carries enough information to identify its field, so
//! mixed-field operations are rejected instead of silently coerced. All
//! arithmetic is exact; there is no floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Identifies the coefficient field: a prime field F_p or the rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

impl FieldSpec {
    /// Builds a prime-field spec, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(self) -> FieldElem {
        match self {
            FieldSpec::Prime(p) => FieldElem::Prime { p, val: 0 },
            FieldSpec::Rationals => FieldElem::Rational(BigRational::zero()),
        }
    }

    pub fn one(self) -> FieldElem {
        self.embed_i64(1)
    }

    /// The image of n under Z -> k, i.e. n * 1.
    pub fn embed_i64(self, n: i64) -> FieldElem {
        match self {
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                FieldElem::Prime { p, val: r }
            }
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
        }
    }

    pub fn embed_bigint(self, n: &BigInt) -> FieldElem {
        match self {
            FieldSpec::Prime(p) => {
                let m = n.mod_floor(&BigInt::from(p));
                let (_, digits) = m.to_u64_digits();
                let val = digits.first().copied().unwrap_or(0);
                FieldElem::Prime { p, val }
            }
            FieldSpec::Rationals => FieldElem::Rational(BigRational::from_integer(n.clone())),
        }
    }

    /// Parses "7", "-3", or (over Q) "3/4".
    pub fn parse_elem(self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            if self != FieldSpec::Rationals {
                return Err(Error::Parse(format!("fractional literal {s:?} needs field Q")));
            }
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(FieldElem::Rational(BigRational::new(n, d)));
        }
        let n: i64 = s
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer literal {s:?}")))?;
        Ok(self.embed_i64(n))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
            FieldSpec::Rationals => write!(f, "Q"),
        }
    }
}

/// An element of F_p (reduced residue) or of Q (lowest terms, positive
/// denominator; both maintained by `num`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Prime { p: u64, val: u64 },
    Rational(BigRational),
}

impl FieldElem {
    pub fn spec(&self) -> FieldSpec {
        match self {
            FieldElem::Prime { p, .. } => FieldSpec::Prime(*p),
            FieldElem::Rational(_) => FieldSpec::Rationals,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Prime { val, .. } => *val == 0,
            FieldElem::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Prime { val, .. } => *val == 1,
            FieldElem::Rational(r) => r.is_one(),
        }
    }

    /// Canonical residue in 0..p-1 for prime fields, `None` over Q.
    pub fn canonical_u64(&self) -> Option<u64> {
        match self {
            FieldElem::Prime { val, .. } => Some(*val),
            FieldElem::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rational(r) => Some(r),
            FieldElem::Prime { .. } => None,
        }
    }

    fn same_field(&self, rhs: &FieldElem) -> Result<()> {
        let (a, b) = (self.spec(), rhs.spec());
        if a == b {
            Ok(())
        } else {
            Err(Error::FieldMismatch(a, b))
        }
    }

    pub fn checked_add(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElem::Prime { p, val: a }, FieldElem::Prime { val: b, .. }) => {
                let s = ((*a as u128 + *b as u128) % *p as u128) as u64;
                FieldElem::Prime { p: *p, val: s }
            }
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.checked_add(&(-rhs))
    }

    pub fn checked_mul(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElem::Prime { p, val: a }, FieldElem::Prime { val: b, .. }) => {
                let m = ((*a as u128 * *b as u128) % *p as u128) as u64;
                FieldElem::Prime { p: *p, val: m }
            }
            (FieldElem::Rational(a), FieldElem::Rational(b)) => FieldElem::Rational(a * b),
            _ => unreachable!(),
        })
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<FieldElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElem::Prime { p, val } => FieldElem::Prime {
                p: *p,
                val: mod_inverse(*val, *p),
            },
            FieldElem::Rational(r) => FieldElem::Rational(r.recip()),
        })
    }

    pub fn checked_div(&self, rhs: &FieldElem) -> Result<FieldElem> {
        self.checked_mul(&rhs.inv()?)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Prime { p, val } => FieldElem::Prime {
                p: *p,
                val: if *val == 0 { 0 } else { p - val },
            },
            FieldElem::Rational(r) => FieldElem::Rational(-r),
        }
    }
}

// Operator impls are for internal use on values already known to share a
// field (the containers enforce it at construction); they panic on mismatch.
macro_rules! ref_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElem> for &FieldElem {
            type Output = FieldElem;
            fn $method(self, rhs: &FieldElem) -> FieldElem {
                self.$checked(rhs).expect("field mismatch")
            }
        }
    };
}
ref_binop!(Add, add, checked_add);
ref_binop!(Sub, sub, checked_sub);
ref_binop!(Mul, mul, checked_mul);

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Prime { val, .. } => write!(f, "{val}"),
            FieldElem::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on (a, p); p prime and a != 0 mod p
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inverse of non-unit");
    old_s.rem_euclid(p as i128) as u64
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the witness set covers all 64-bit n).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Uniform random element (used by the randomized verification suites).
pub fn random_elem<R: rand::Rng>(spec: FieldSpec, rng: &mut R) -> FieldElem {
    match spec {
        FieldSpec::Prime(p) => FieldElem::Prime {
            p,
            val: rng.gen_range(0..p),
        },
        FieldSpec::Rationals => {
            let n = rng.gen_range(-3i64..=3);
            let d = rng.gen_range(1i64..=3);
            FieldElem::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
    }
}

pub fn random_nonzero<R: rand::Rng>(spec: FieldSpec, rng: &mut R) -> FieldElem {
    loop {
        let e = random_elem(spec, rng);
        if !e.is_zero() {
            return e;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn embed_examples() {
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(f3.embed_i64(5), f3.embed_i64(2));
        let f2 = FieldSpec::prime(2).unwrap();
        assert_eq!(f2.embed_i64(-1), f2.one());
        let q = FieldSpec::rationals();
        assert_eq!(q.embed_i64(7).to_string(), "7");
    }

    #[test]
    fn inv_examples() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.embed_i64(2).inv().unwrap(), f5.embed_i64(3));
        let f7 = FieldSpec::prime(7).unwrap();
        let prod = f7.embed_i64(3).checked_mul(&f7.embed_i64(5)).unwrap();
        assert!(prod.is_one());
        let q = FieldSpec::rationals();
        let sum = q
            .parse_elem("1/2")
            .unwrap()
            .checked_add(&q.parse_elem("1/3").unwrap())
            .unwrap();
        assert_eq!(sum, q.parse_elem("5/6").unwrap());
    }

    #[test]
    fn zero_inverse_is_error() {
        assert_eq!(
            FieldSpec::prime(5).unwrap().zero().inv(),
            Err(Error::DivisionByZero)
        );
        assert_eq!(FieldSpec::rationals().zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let a = FieldSpec::prime(3).unwrap().one();
        let b = FieldSpec::prime(5).unwrap().one();
        assert!(matches!(a.checked_add(&b), Err(Error::FieldMismatch(_, _))));
        let q = FieldSpec::rationals().one();
        assert!(matches!(a.checked_mul(&q), Err(Error::FieldMismatch(_, _))));
    }

    #[test]
    fn primality() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(7919).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(91), Err(Error::NotPrime(91)));
        assert!(is_prime_u64(18446744073709551557)); // largest u64 prime
        assert!(!is_prime_u64(18446744073709551555));
    }

    fn specs() -> Vec<FieldSpec> {
        vec![
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
            FieldSpec::Prime(5),
            FieldSpec::Prime(7),
            FieldSpec::Rationals,
        ]
    }

    proptest! {
        #[test]
        fn group_laws(n in -100i64..100, m in -100i64..100, which in 0usize..5) {
            let spec = specs()[which];
            let a = spec.embed_i64(n);
            let b = spec.embed_i64(m);
            prop_assert!(a.checked_add(&(-&a)).unwrap().is_zero());
            if !a.is_zero() {
                prop_assert!(a.checked_mul(&a.inv().unwrap()).unwrap().is_one());
            }
            // embed_int is a ring homomorphism
            prop_assert_eq!(spec.embed_i64(n + m), a.checked_add(&b).unwrap());
            prop_assert_eq!(spec.embed_i64(n * m), a.checked_mul(&b).unwrap());
        }
    }
}
