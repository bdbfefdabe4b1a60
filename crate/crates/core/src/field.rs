//! Exact scalars over ℚ and prime fields GF(p).
//!
//! Rationals are arbitrary precision and always reduced; residues are kept in `[0, p)` with
//! `p < 2^32`, so every product fits in a `u64` before reduction.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// The base field `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec(Kind);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Kind {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// GF(p). Primality is checked by trial division, so `p` must be below 2^32.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p)))
    }

    /// 0 for ℚ, `p` for GF(p).
    pub fn characteristic(&self) -> u64 {
        match self.0 {
            Kind::Rationals => 0,
            Kind::Prime(p) => p,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Kind::Rationals)
    }

    /// The modulus when this is a prime field.
    pub fn modulus(&self) -> Option<u64> {
        match self.0 {
            Kind::Rationals => None,
            Kind::Prime(p) => Some(p),
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn order(&self) -> Option<u64> {
        self.modulus()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Rationals => write!(f, "QQ"),
            Kind::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Deterministic primality by trial division; adequate for `n < 2^32`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact element of a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        match field.0 {
            Kind::Rationals => Scalar::Rational(BigRational::zero()),
            Kind::Prime(p) => Scalar::Modular { value: 0, modulus: p },
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field.0 {
            Kind::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            Kind::Prime(p) => Scalar::Modular {
                value: n.rem_euclid(p as i64) as u64,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Self {
        match field.0 {
            Kind::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            Kind::Prime(p) => Scalar::Modular {
                value: reduce_bigint(n, p),
                modulus: p,
            },
        }
    }

    /// `num / den` in the given field; fails when `den` vanishes there.
    pub fn from_ratio(field: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Self> {
        Scalar::from_bigint(field, num).checked_div(&Scalar::from_bigint(field, den))
    }

    /// Image of a rational number in `field`. Fails when the denominator is not invertible.
    pub fn from_rational(field: FieldSpec, q: &BigRational) -> Result<Self> {
        Scalar::from_ratio(field, q.numer(), q.denom())
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::rationals(),
            Scalar::Modular { modulus, .. } => FieldSpec(Kind::Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    /// Whether this rational is an integer (always true for residues).
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_integer(),
            Scalar::Modular { .. } => true,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Modular { .. } => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Modular { value, .. } => Some(*value),
        }
    }

    /// Reduce into `target`. Rationals map through ℤ_(p) → GF(p); residues only map to their own
    /// field.
    pub fn reduce_into(&self, target: FieldSpec) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) => Scalar::from_rational(target, q),
            Scalar::Modular { .. } if self.field() == target => Ok(self.clone()),
            Scalar::Modular { .. } => Err(Error::FieldMismatch {
                left: self.field(),
                right: target,
            }),
        }
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                left: self.field(),
                right: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: (a + b) % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, modulus }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular {
                    value: a * b % modulus,
                    modulus: *modulus,
                }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), exp as usize)),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value, exp as u64, *modulus),
                modulus: *modulus,
            },
        }
    }

    /// `self += a * b`, the inner loop of every elimination.
    pub fn add_mul_assign(&mut self, a: &Scalar, b: &Scalar) {
        match (&mut *self, a, b) {
            (Scalar::Rational(s), Scalar::Rational(a), Scalar::Rational(b)) => {
                *s += a * b;
            }
            (
                Scalar::Modular { value, modulus },
                Scalar::Modular { value: a, modulus: ma },
                Scalar::Modular { value: b, modulus: mb },
            ) if modulus == ma && modulus == mb => {
                *value = (*value + a * b % *modulus) % *modulus;
            }
            _ => panic!("scalar field mismatch"),
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

// Operator impls panic on mismatched fields; use the `checked_*` methods at API boundaries.
macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar field mismatch")
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$checked(&rhs).expect("scalar field mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

/// Exact binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Signed convenience wrapper used by the coefficient formulas.
pub fn binomial_int(n: i64, k: i64) -> BigInt {
    if n < 0 {
        return BigInt::zero();
    }
    BigInt::from(binomial(n as u64, k))
}

/// `n` as an exact rational.
pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `num/den` as an exact rational; panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(num: i64, den: i64) -> Scalar {
        Scalar::Rational(ratio(num, den))
    }

    #[test]
    fn rational_addition() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn inverse_mod_five() {
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(
            Scalar::from_i64(gf5, 2).inv().unwrap(),
            Scalar::from_i64(gf5, 3)
        );
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(
            Scalar::zero(FieldSpec::rationals()).inv(),
            Err(Error::DivisionByZero)
        );
        let gf7 = FieldSpec::prime(7).unwrap();
        assert_eq!(
            Scalar::from_i64(gf7, 1).checked_div(&Scalar::from_i64(gf7, 7)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let gf7 = FieldSpec::prime(7).unwrap();
        let err = q(1, 2).checked_add(&Scalar::one(gf7)).unwrap_err();
        assert!(matches!(err, Error::FieldMismatch { .. }));
    }

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(32003).is_ok());
        assert!(FieldSpec::prime(2).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime(1)));
        assert_eq!(FieldSpec::prime(32001), Err(Error::NotPrime(32001)));
        assert_eq!(FieldSpec::prime(1 << 32), Err(Error::NotPrime(1 << 32)));
        assert_eq!(FieldSpec::prime(2147483647).unwrap().characteristic(), 2147483647);
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(q(2, -4).to_string(), "-1/2");
        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(Scalar::from_i64(gf5, -1).residue(), Some(4));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(10, 0), BigUint::one());
        assert_eq!(binomial(5, -1), BigUint::zero());
    }

    #[test]
    fn pascal_identity() {
        for n in 1..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn reduction_commutes_with_binomial_sums() {
        // Σ_j binom(n,j)·(j+1)/(n+1) over ℚ, reduced mod p, against the same sum computed in GF(p).
        let p = 101;
        let gf = FieldSpec::prime(p).unwrap();
        for n in 0..40i64 {
            let mut over_q = BigRational::zero();
            let mut over_p = Scalar::zero(gf);
            for j in 0..=n {
                let b = binomial_int(n, j);
                over_q += BigRational::new(b.clone() * (j + 1), BigInt::from(n + 1));
                let term = Scalar::from_bigint(gf, &b) * Scalar::from_i64(gf, j + 1);
                over_p = over_p + term.checked_div(&Scalar::from_i64(gf, n + 1)).unwrap();
            }
            assert_eq!(Scalar::from_rational(gf, &over_q).unwrap(), over_p);
        }
    }

    fn any_rational() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| q(n, d))
    }

    fn any_residue() -> impl Strategy<Value = Scalar> {
        (0i64..32003).prop_map(|n| Scalar::from_i64(FieldSpec::prime(32003).unwrap(), n))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in any_rational(), b in any_rational(), c in any_rational()) {
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn modular_field_axioms(a in any_residue(), b in any_residue(), c in any_residue()) {
            prop_assert_eq!((&a * &b) * c.clone(), &a * &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }
    }
}
