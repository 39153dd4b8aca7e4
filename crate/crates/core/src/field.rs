//! Exact coefficient fields.
//!
//! Two implementations of [`Field`] are provided: [`Rationals`] (arbitrary
//! precision, lowest terms) and [`PrimeField`] (residues modulo an odd prime
//! below 2^31). Everything above this module is generic over the field so the
//! same pipeline runs exactly over ℚ or as a fast modular reduction.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest characteristic accepted for pipeline runs.
pub const MIN_PIPELINE_PRIME: u64 = 1 << 15;
/// Exclusive upper bound on prime characteristics.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldKind {
    Rationals,
    PrimeField,
}

/// Serializable description of a coefficient field. `char == 0` means ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDesc {
    #[serde(rename = "char")]
    pub characteristic: u64,
}

impl FieldDesc {
    pub const RATIONALS: FieldDesc = FieldDesc { characteristic: 0 };

    pub fn kind(&self) -> FieldKind {
        if self.characteristic == 0 {
            FieldKind::Rationals
        } else {
            FieldKind::PrimeField
        }
    }

    /// Checks the pipeline invariant: 0, or a prime in [2^15, 2^31).
    pub fn validate(&self) -> Result<()> {
        let p = self.characteristic;
        if p == 0 {
            return Ok(());
        }
        if !(MIN_PIPELINE_PRIME..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "characteristic {p} is not a prime in [2^15, 2^31)"
            )));
        }
        Ok(())
    }

    /// Looser check for a characteristic the user asked for by name: 0 or any
    /// odd prime below 2^31.
    pub fn validate_explicit(&self) -> Result<()> {
        let p = self.characteristic;
        if p == 0 || (p > 2 && p < MAX_PRIME && is_prime(p)) {
            Ok(())
        } else {
            Err(Error::InvalidField(format!(
                "characteristic {p} is not 0 or an odd prime below 2^31"
            )))
        }
    }

    /// Whether a prime characteristic lies in the recommended pipeline range.
    pub fn in_pipeline_range(&self) -> bool {
        self.validate().is_ok()
    }
}

/// An exact coefficient field with a runtime context.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn desc(&self) -> FieldDesc;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// Numerator and denominator of a canonical representative.
    fn to_ratio(&self, a: &Self::Elem) -> (BigInt, BigInt);
    /// Uniform residue over F_p; an integer in `[-window, window]` over ℚ.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, window: i64) -> Self::Elem;

    fn characteristic(&self) -> u64 {
        self.desc().characteristic
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `a - b * c`
    fn sub_mul(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(b, c))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
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

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem> {
        let d = self.from_bigint(den);
        let inv = self
            .inv(&d)
            .ok_or_else(|| Error::Parse(format!("denominator {den} vanishes in {:?}", self.desc())))?;
        Ok(self.mul(&self.from_bigint(num), &inv))
    }

    fn to_scalar(&self, a: &Self::Elem) -> Scalar {
        let (n, d) = self.to_ratio(a);
        Scalar { field: self.desc(), num: n, den: d }
    }

    fn from_scalar(&self, s: &Scalar) -> Result<Self::Elem> {
        if s.field != self.desc() {
            return Err(Error::RingMismatch(format!(
                "scalar over {:?} used in {:?}",
                s.field,
                self.desc()
            )));
        }
        self.from_ratio(&s.num, &s.den)
    }

    fn format(&self, a: &Self::Elem) -> String {
        let (n, d) = self.to_ratio(a);
        if d.is_one() {
            n.to_string()
        } else {
            format!("{n}/{d}")
        }
    }

    /// Parses `"n"` or `"n/d"`.
    fn parse(&self, s: &str) -> Result<Self::Elem> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n: BigInt = n
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
        let d: BigInt = d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {s:?}")))?;
        self.from_ratio(&n, &d)
    }
}

/// A field element detached from any ring, tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub field: FieldDesc,
    pub num: BigInt,
    pub den: BigInt,
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// ℚ with arbitrary-precision numerator and denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn desc(&self) -> FieldDesc {
        FieldDesc::RATIONALS
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
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }
    fn to_ratio(&self, a: &BigRational) -> (BigInt, BigInt) {
        (a.numer().clone(), a.denom().clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, window: i64) -> BigRational {
        self.from_i64(rng.gen_range(-window..=window))
    }
}

/// Residues modulo an odd prime `p < 2^31`, stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Accepts any prime below 2^31. Pipeline runs additionally require
    /// `p >= 2^15`; see [`FieldDesc::validate`].
    pub fn new(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not a prime below 2^31")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn desc(&self) -> FieldDesc {
        FieldDesc { characteristic: self.p as u64 }
    }
    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn is_one(&self, a: &u32) -> bool {
        *a == 1
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if *a >= *b {
            *a - *b
        } else {
            *a + self.p - *b
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    #[inline]
    fn sub_mul(&self, a: &u32, b: &u32, c: &u32) -> u32 {
        let p = self.p as u64;
        let prod = (*b as u64 * *c as u64) % p;
        ((*a as u64 + p - prod) % p) as u32
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on i64
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(t0))
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce_i64(v)
    }
    fn from_bigint(&self, v: &BigInt) -> u32 {
        let r = v.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits in u32")
    }
    fn to_ratio(&self, a: &u32) -> (BigInt, BigInt) {
        (BigInt::from(*a), BigInt::one())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R, _window: i64) -> u32 {
        rng.gen_range(0..self.p)
    }
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs below 2^32 with
/// these bases.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % small == 0 {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Draws a random prime in `[2^15, 2^31)`.
pub fn random_pipeline_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let candidate = rng.gen_range(MIN_PIPELINE_PRIME..MAX_PRIME) | 1;
        if is_prime(candidate) {
            return candidate;
        }
    }
}

/// Clears denominators and removes the content of a rational vector,
/// returning integers with positive leading entry. Used to keep ℚ data small.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.sign() == Sign::Minus {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
    }
    ints
}

/// Bit length of the largest numerator or denominator, a cheap size gauge.
pub fn rational_height(v: &BigRational) -> u64 {
    v.numer().abs().bits().max(v.denom().bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.sub_mul(&2, &3, &4), f.sub(&2, &5));
        assert_eq!(f.pow(&3, 6), 1);
    }

    #[test]
    fn rejects_composites_and_ranges() {
        assert!(PrimeField::new(91).is_err());
        assert!(FieldDesc { characteristic: 7 }.validate().is_err());
        assert!(FieldDesc { characteristic: 32003 }.validate().is_err());
        assert!(FieldDesc { characteristic: 32003 }.validate_explicit().is_ok());
        assert!(FieldDesc { characteristic: 32771 }.validate().is_ok());
        assert!(FieldDesc { characteristic: 2147483647 }.validate().is_ok());
        assert!(FieldDesc { characteristic: 2147483649 }.validate().is_err());
    }

    #[test]
    fn parse_and_format_roundtrip() {
        let q = Rationals;
        let x = q.parse("-6/4").unwrap();
        assert_eq!(q.format(&x), "-3/2");
        let f = PrimeField::new(32003).unwrap();
        let y = f.parse("1/2").unwrap();
        assert_eq!(f.mul(&y, &2), 1);
    }

    #[test]
    fn miller_rabin_matches_trial_division() {
        let naive = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), naive(n), "n = {n}");
        }
        assert!(is_prime(2147483629));
    }

    #[test]
    fn primitive_vector_clears_content() {
        let v = vec![
            BigRational::new(2.into(), 3.into()),
            BigRational::new((-4).into(), 9.into()),
        ];
        assert_eq!(primitive_integer_vector(&v), vec![BigInt::from(3), BigInt::from(-2)]);
    }
}
