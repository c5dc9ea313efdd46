//! Exact coefficient fields.
//!
//! Fields are passed around as lightweight context objects (`&F`) and
//! elements are plain values, so a prime field can carry its modulus at
//! runtime without storing it in every coefficient.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::AlgebraError;

/// Description of a coefficient domain, independent of its element type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoefficientDomain {
    Rationals,
    PrimeField { p: u64 },
    QuadraticExtension { m: i64 },
}

impl CoefficientDomain {
    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientDomain::PrimeField { p } => *p,
            _ => 0,
        }
    }
}

impl fmt::Display for CoefficientDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientDomain::Rationals => write!(f, "Q"),
            CoefficientDomain::PrimeField { p } => write!(f, "GF({p})"),
            CoefficientDomain::QuadraticExtension { m } => write!(f, "Q(sqrt {m})"),
        }
    }
}

pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn descriptor(&self) -> CoefficientDomain;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, AlgebraError>;
    /// An element whose square is `m`, if the field has one.
    fn sqrt_int(&self, m: i64) -> Option<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    fn characteristic(&self) -> u64 {
        self.descriptor().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_int(&self, n: i64) -> Self::Elem {
        self.from_rational(&BigRational::from_integer(BigInt::from(n)))
            .expect("integers embed in every field")
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        let inv = self.inv(b).ok_or(AlgebraError::DivisionByZero)?;
        Ok(self.mul(a, &inv))
    }

    /// `acc -= a * b`
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        *acc = self.sub(acc, &prod);
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        *acc = self.add(acc, &prod);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Coefficient fields of characteristic zero whose elements can be pushed
/// into a prime field.
pub trait ExactField: Field {
    fn to_prime_field(&self, a: &Self::Elem, fp: &PrimeField) -> Result<u64, AlgebraError>;

    /// True when the field needs a square root of some integer in the target
    /// prime field.
    fn required_radicand(&self) -> Option<i64> {
        None
    }
}

// ---------------------------------------------------------------------------
// Rationals

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> CoefficientDomain {
        CoefficientDomain::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_rational(&self, q: &BigRational) -> Result<BigRational, AlgebraError> {
        Ok(q.clone())
    }
    fn sqrt_int(&self, m: i64) -> Option<BigRational> {
        integer_sqrt_exact(m).map(|r| BigRational::from_integer(BigInt::from(r)))
    }
    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

impl ExactField for Rationals {
    fn to_prime_field(&self, a: &BigRational, fp: &PrimeField) -> Result<u64, AlgebraError> {
        fp.from_rational(a)
    }
}

fn integer_sqrt_exact(m: i64) -> Option<i64> {
    if m < 0 {
        return None;
    }
    let r = (m as f64).sqrt().round() as i64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s >= 0 && s * s == m)
}

// ---------------------------------------------------------------------------
// Prime fields

/// GF(p) for a prime `p < 2^32`; elements are canonical residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 2_147_483_647;

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p >= 1 << 32 {
            return Err(AlgebraError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("residue fits")
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> CoefficientDomain {
        CoefficientDomain::PrimeField { p: self.p }
    }
    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (a * b) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(pow_mod(*a, self.p - 2, self.p))
    }
    fn from_rational(&self, q: &BigRational) -> Result<u64, AlgebraError> {
        let num = self.reduce_bigint(q.numer());
        let den = self.reduce_bigint(q.denom());
        if den == 0 {
            return Err(AlgebraError::NoImage(q.to_string(), self.descriptor().to_string()));
        }
        Ok(self.mul(&num, &self.inv(&den).unwrap()))
    }
    fn from_int(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn sqrt_int(&self, m: i64) -> Option<u64> {
        domain_sqrt(self.p, m)
    }
    fn format_elem(&self, a: &u64) -> String {
        // Print the symmetric representative so small negatives stay readable.
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }
    #[inline]
    fn sub_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        let prod = (a * b) % self.p;
        *acc = if *acc >= prod { *acc - prod } else { *acc + self.p - prod };
    }
    #[inline]
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + (a * b) % self.p) % self.p;
    }
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A square root of `m` modulo the prime `p` (Tonelli–Shanks), or `None`
/// when `m` is a quadratic non-residue.
pub fn domain_sqrt(p: u64, m: i64) -> Option<u64> {
    let a = m.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let mut m_exp = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mulm(tt, tt);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m_exp - i - 1), p);
        m_exp = i;
        c = mulm(b, b);
        t = mulm(t, c);
        r = mulm(r, b);
    }
    Some(r)
}

/// Primes in which `m` is a nonzero square, scanning downwards from `start`.
pub fn primes_with_sqrt(m: i64, start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = start;
    while out.len() < count && p > 2 {
        if is_prime(p) && domain_sqrt(p, m).is_some() && m.rem_euclid(p as i64) != 0 {
            out.push(p);
        }
        p -= 1;
    }
    out
}

// ---------------------------------------------------------------------------
// Quadratic extensions Q(sqrt m)

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadElem {
    pub fn rational(a: BigRational) -> Self {
        QuadElem {
            a,
            b: BigRational::zero(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    m: i64,
}

impl QuadraticField {
    pub fn new(m: i64) -> Result<Self, AlgebraError> {
        if m == 0 || m == 1 || integer_sqrt_exact(m).is_some() {
            return Err(AlgebraError::SquareRadicand(m));
        }
        Ok(QuadraticField { m })
    }

    pub fn radicand(&self) -> i64 {
        self.m
    }

    pub fn sqrt_m(&self) -> QuadElem {
        QuadElem {
            a: BigRational::zero(),
            b: BigRational::one(),
        }
    }

    fn m_rat(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.m))
    }
}

impl Field for QuadraticField {
    type Elem = QuadElem;

    fn descriptor(&self) -> CoefficientDomain {
        CoefficientDomain::QuadraticExtension { m: self.m }
    }
    fn zero(&self) -> QuadElem {
        QuadElem::rational(BigRational::zero())
    }
    fn one(&self) -> QuadElem {
        QuadElem::rational(BigRational::one())
    }
    fn is_zero(&self, x: &QuadElem) -> bool {
        x.a.is_zero() && x.b.is_zero()
    }
    fn add(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a + &y.a,
            b: &x.b + &y.b,
        }
    }
    fn sub(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a - &y.a,
            b: &x.b - &y.b,
        }
    }
    fn neg(&self, x: &QuadElem) -> QuadElem {
        QuadElem {
            a: -&x.a,
            b: -&x.b,
        }
    }
    fn mul(&self, x: &QuadElem, y: &QuadElem) -> QuadElem {
        QuadElem {
            a: &x.a * &y.a + &x.b * &y.b * self.m_rat(),
            b: &x.a * &y.b + &x.b * &y.a,
        }
    }
    fn inv(&self, x: &QuadElem) -> Option<QuadElem> {
        if self.is_zero(x) {
            return None;
        }
        let norm = &x.a * &x.a - &x.b * &x.b * self.m_rat();
        Some(QuadElem {
            a: &x.a / &norm,
            b: -&x.b / &norm,
        })
    }
    fn from_rational(&self, q: &BigRational) -> Result<QuadElem, AlgebraError> {
        Ok(QuadElem::rational(q.clone()))
    }
    fn sqrt_int(&self, m: i64) -> Option<QuadElem> {
        if m == self.m {
            return Some(self.sqrt_m());
        }
        integer_sqrt_exact(m).map(|r| QuadElem::rational(BigRational::from_integer(BigInt::from(r))))
    }
    fn format_elem(&self, x: &QuadElem) -> String {
        if x.b.is_zero() {
            return x.a.to_string();
        }
        let radical = format!("sqrt({})", self.m);
        let b_part = if x.b.is_one() {
            radical
        } else if x.b == -BigRational::one() {
            format!("-{radical}")
        } else {
            format!("{}*{radical}", x.b)
        };
        if x.a.is_zero() {
            b_part
        } else if x.b.is_positive() {
            format!("{}+{b_part}", x.a)
        } else {
            format!("{}{b_part}", x.a)
        }
    }
}

impl ExactField for QuadraticField {
    fn to_prime_field(&self, x: &QuadElem, fp: &PrimeField) -> Result<u64, AlgebraError> {
        let a = fp.from_rational(&x.a)?;
        if x.b.is_zero() {
            return Ok(a);
        }
        let s = domain_sqrt(fp.modulus(), self.m).ok_or_else(|| {
            AlgebraError::NoImage(format!("sqrt({})", self.m), fp.descriptor().to_string())
        })?;
        let b = fp.from_rational(&x.b)?;
        Ok(fp.add(&a, &fp.mul(&b, &s)))
    }

    fn required_radicand(&self) -> Option<i64> {
        Some(self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_mod_examples() {
        assert_eq!(domain_sqrt(11, 5), Some(4));
        assert_eq!(domain_sqrt(7, 5), None);
        let r = domain_sqrt(5, 4).unwrap();
        assert!(r == 2 || r == 3);
    }

    #[test]
    fn sqrt_mod_seven_matches_enumeration() {
        let squares: Vec<u64> = (0..7u64).map(|x| x * x % 7).collect();
        for m in 0..7i64 {
            assert_eq!(domain_sqrt(7, m).is_some(), squares.contains(&(m as u64)), "m = {m}");
        }
    }

    #[test]
    fn sqrt_mod_large_prime() {
        for p in primes_with_sqrt(5, DEFAULT_PRIME, 3) {
            let s = domain_sqrt(p, 5).unwrap();
            assert_eq!(pow_mod(s, 2, p), 5);
            assert!(p % 5 == 1 || p % 5 == 4);
        }
    }

    #[test]
    fn prime_field_rejects_composites() {
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(DEFAULT_PRIME).is_ok());
        assert!(PrimeField::new(1 << 33).is_err());
    }

    #[test]
    fn rational_images() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_rational(&q(1, 2)).unwrap(), 4);
        assert!(f.from_rational(&q(1, 7)).is_err());
        assert_eq!(f.from_rational(&q(-3, 1)).unwrap(), 4);
    }

    #[test]
    fn quadratic_arithmetic() {
        let k = QuadraticField::new(5).unwrap();
        let s = k.sqrt_m();
        assert_eq!(k.mul(&s, &s), k.from_int(5));
        let x = QuadElem { a: q(3, 1), b: q(1, 1) };
        let xi = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &xi), k.one());
        assert!(QuadraticField::new(4).is_err());
        assert_eq!(k.format_elem(&x), "3+sqrt(5)");
    }
}
