//! Exact coefficient fields: arbitrary-precision rationals and prime fields `F_p`.
//!
//! Every value carries its field so that mixed-field arithmetic is caught
//! immediately. Arithmetic never rounds.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::AlgebraError;

/// The coefficient field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers with arbitrary-precision integers.
    Rationals,
    /// The prime field `F_p`; `p` must be prime and fit in a machine word.
    Prime(u64),
}

impl Field {
    /// Validates that `p` is prime before handing out a prime field.
    pub fn prime(p: u64) -> Result<Field, AlgebraError> {
        if is_prime_u64(p) {
            Ok(Field::Prime(p))
        } else {
            Err(AlgebraError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { value: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { value: 1 % p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Mod { value: r, p: *p }
            }
        }
    }

    /// The characteristic: 0 for the rationals, p for `F_p`.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Multiplies by the integer `n` interpreted in the field (exponent rule
    /// for formal derivatives: in characteristic p the exponent is reduced).
    pub fn from_u32(&self, n: u32) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Mod { value: (n as u64) % p, p: *p },
        }
    }

    /// Parses a coefficient string: an integer (`-3`) or a fraction (`5/2`).
    ///
    /// Over `F_p` a fraction is resolved as `a * b^(-1)` and fails when the
    /// denominator reduces to zero.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, AlgebraError> {
        let s = s.trim();
        let (num_str, den_str) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s, None),
        };
        let num = BigInt::from_str(num_str)
            .map_err(|_| AlgebraError::BadCoefficient(s.to_string()))?;
        let den = match den_str {
            Some(d) => {
                let d = BigInt::from_str(d)
                    .map_err(|_| AlgebraError::BadCoefficient(s.to_string()))?;
                if d.is_zero() {
                    return Err(AlgebraError::BadCoefficient(s.to_string()));
                }
                d
            }
            None => BigInt::one(),
        };
        match self {
            Field::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            Field::Prime(p) => {
                let n = reduce_bigint(&num, *p);
                let d = reduce_bigint(&den, *p);
                let dinv = mod_inverse(d, *p)
                    .ok_or_else(|| AlgebraError::BadCoefficient(s.to_string()))?;
                Ok(Scalar::Mod { value: mul_mod(n, dinv, *p), p: *p })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| AlgebraError::BadFieldSpec(s.to_string()))?;
            return Field::prime(p);
        }
        Err(AlgebraError::BadFieldSpec(s.to_string()))
    }
}

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator (maintained by `BigRational`); residues are kept in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different prime fields");
                let mut s = a + b;
                if s >= *p {
                    s -= p;
                }
                Scalar::Mod { value: s, p: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, p } => {
                let v = if *value == 0 { 0 } else { p - value };
                Scalar::Mod { value: v, p: *p }
            }
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod { value: a, p }, Scalar::Mod { value: b, p: q }) => {
                assert_eq!(p, q, "scalar arithmetic across different prime fields");
                Scalar::Mod { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => panic!("scalar arithmetic across different fields"),
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Mod { value, p } => {
                mod_inverse(*value, *p).map(|v| Scalar::Mod { value: v, p: *p })
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        let inv = rhs.inverse().expect("division by zero scalar");
        self.mul(&inv)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// True iff the rational scalar is negative (prime-field residues are never
/// treated as negative). Used only for display.
pub(crate) fn scalar_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rational(r) => r.is_negative(),
        Scalar::Mod { .. } => false,
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let m = n % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    Some(pow_mod(a, p - 2, p))
}

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
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
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Field::Rationals.parse_scalar(s).unwrap()
    }

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let a = q("4/6");
        match &a {
            Scalar::Rational(r) => {
                assert_eq!(r.numer(), &BigInt::from(2));
                assert_eq!(r.denom(), &BigInt::from(3));
            }
            _ => unreachable!(),
        }
        assert_eq!(q("-3/-6"), q("1/2"));
    }

    #[test]
    fn prime_field_reduces() {
        let f = Field::prime(5).unwrap();
        let a = f.parse_scalar("7").unwrap();
        assert_eq!(a, Scalar::Mod { value: 2, p: 5 });
        let b = f.parse_scalar("-1").unwrap();
        assert_eq!(b, Scalar::Mod { value: 4, p: 5 });
        let half = f.parse_scalar("1/2").unwrap();
        assert_eq!(half, Scalar::Mod { value: 3, p: 5 });
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(Field::prime(6).is_err());
        assert!(Field::prime(1).is_err());
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(9_223_372_036_854_775_783).is_ok()); // largest prime < 2^63
    }

    #[test]
    fn inverse_round_trip_mod_p() {
        let f = Field::prime(13).unwrap();
        for v in 1..13 {
            let a = f.from_i64(v);
            let inv = a.inverse().unwrap();
            assert!(a.mul(&inv).is_one());
        }
        assert!(f.zero().inverse().is_none());
    }

    #[test]
    fn field_spec_round_trip() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("Fp:5".parse::<Field>().unwrap(), Field::Prime(5));
        assert!("Fp:4".parse::<Field>().is_err());
        assert!("R".parse::<Field>().is_err());
    }
}
