//! Truncated power series in `t` with explicit precision.
//!
//! A series stores exactly `N` coefficients (of `t^0 .. t^(N-1)`) and is read
//! modulo `t^N`. Binary operations truncate the result to the minimum operand
//! precision. "All stored coefficients are zero" is weaker than being zero:
//! valuations are reported as [`ValOrBound::AtLeast`]`(N)` in that case.

use std::fmt;

use crate::error::AlgebraError;
use crate::scalar::{scalar_is_negative, Field, Scalar};

/// A t-adic valuation read at finite precision.
///
/// `Finite(v)` certifies a nonzero coefficient at `t^v` with all lower ones
/// zero; `AtLeast(N)` means every stored coefficient vanishes and the true
/// valuation (possibly infinite) is undetermined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValOrBound {
    Finite(usize),
    AtLeast(usize),
}

impl ValOrBound {
    pub fn is_finite(&self) -> bool {
        matches!(self, ValOrBound::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ValOrBound::Finite(v) => Some(*v),
            ValOrBound::AtLeast(_) => None,
        }
    }

    /// Minimum of two readings: a finite valuation always dominates a bound.
    pub fn min_with(self, other: ValOrBound) -> ValOrBound {
        use ValOrBound::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.min(b)),
            (Finite(a), AtLeast(_)) | (AtLeast(_), Finite(a)) => Finite(a),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
        }
    }
}

impl fmt::Display for ValOrBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValOrBound::Finite(v) => write!(f, "Finite({v})"),
            ValOrBound::AtLeast(n) => write!(f, "AtLeast({n})"),
        }
    }
}

/// A power series truncated to precision `N` (the coefficient list length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl TruncSeries {
    /// Builds a series from leading coefficients; the tail up to precision
    /// `n` is zero-filled, anything beyond `n` is dropped.
    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>, n: usize) -> TruncSeries {
        assert!(n > 0, "precision must be positive");
        for c in &coeffs {
            assert_eq!(c.field(), field, "coefficient field mismatch");
        }
        coeffs.truncate(n);
        while coeffs.len() < n {
            coeffs.push(field.zero());
        }
        TruncSeries { field, coeffs }
    }

    pub fn zero(field: Field, n: usize) -> TruncSeries {
        Self::from_coeffs(field, Vec::new(), n)
    }

    pub fn one(field: Field, n: usize) -> TruncSeries {
        Self::from_coeffs(field, vec![field.one()], n)
    }

    pub fn constant(c: Scalar, n: usize) -> TruncSeries {
        Self::from_coeffs(c.field(), vec![c], n)
    }

    /// The monomial `t^k` (zero when `k >= n`).
    pub fn monomial(field: Field, k: usize, n: usize) -> TruncSeries {
        let mut s = Self::zero(field, n);
        if k < n {
            s.coeffs[k] = field.one();
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeff(&self, j: usize) -> &Scalar {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Least index with a nonzero coefficient, or `AtLeast(N)`.
    pub fn val(&self) -> ValOrBound {
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                return ValOrBound::Finite(j);
            }
        }
        ValOrBound::AtLeast(self.precision())
    }

    /// True iff every stored coefficient is zero (indistinguishable from
    /// zero at this precision; not a proof of being zero).
    pub fn is_zero_to_precision(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Re-truncates to a lower (or equal) precision.
    pub fn truncated(&self, n: usize) -> TruncSeries {
        assert!(n > 0 && n <= self.precision());
        TruncSeries {
            field: self.field,
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    fn assert_compatible(&self, rhs: &TruncSeries) {
        assert_eq!(
            self.field, rhs.field,
            "series arithmetic across different fields"
        );
    }

    pub fn add(&self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..n)
            .map(|j| self.coeffs[j].add(&rhs.coeffs[j]))
            .collect();
        TruncSeries { field: self.field, coeffs }
    }

    pub fn sub(&self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let n = self.precision().min(rhs.precision());
        let coeffs = (0..n)
            .map(|j| self.coeffs[j].sub(&rhs.coeffs[j]))
            .collect();
        TruncSeries { field: self.field, coeffs }
    }

    pub fn neg(&self) -> TruncSeries {
        TruncSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(Scalar::neg).collect(),
        }
    }

    /// Cauchy product truncated to the minimum operand precision.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        self.assert_compatible(rhs);
        let n = self.precision().min(rhs.precision());
        let mut coeffs = vec![self.field.zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        TruncSeries { field: self.field, coeffs }
    }

    pub fn scale(&self, c: &Scalar) -> TruncSeries {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        TruncSeries {
            field: self.field,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse to the same precision.
    ///
    /// Returns [`AlgebraError::NonUnit`] when the constant coefficient is
    /// zero. Newton-free forward substitution: `b_k` is fixed so that the
    /// coefficient of `t^k` in `a * b` matches `1` at `k = 0` and `0` above.
    pub fn invert(&self) -> Result<TruncSeries, AlgebraError> {
        let a0 = &self.coeffs[0];
        let a0_inv = a0.inverse().ok_or(AlgebraError::NonUnit)?;
        let n = self.precision();
        let mut b = vec![self.field.zero(); n];
        b[0] = a0_inv.clone();
        for k in 1..n {
            let mut acc = self.field.zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() && !b[k - i].is_zero() {
                    acc = acc.add(&self.coeffs[i].mul(&b[k - i]));
                }
            }
            b[k] = acc.neg().mul(&a0_inv);
        }
        Ok(TruncSeries { field: self.field, coeffs: b })
    }

    /// Divides by `t^k`, zero-filling the top `k` coefficients.
    ///
    /// The low coefficients being dropped must all be zero (the series has
    /// valuation at least `k`); the zero fill is a representative choice, the
    /// true coefficients at `t^(N-k) ..` are unknown.
    pub fn shift_down(&self, k: usize) -> TruncSeries {
        let n = self.precision();
        assert!(k <= n);
        for j in 0..k {
            debug_assert!(
                self.coeffs[j].is_zero(),
                "shift_down dropping a nonzero coefficient"
            );
        }
        let mut coeffs: Vec<Scalar> = self.coeffs[k..].to_vec();
        coeffs.resize(n, self.field.zero());
        TruncSeries { field: self.field, coeffs }
    }

    /// Multiplies by `t^k`, discarding overflow beyond the precision.
    pub fn shift_up(&self, k: usize) -> TruncSeries {
        let n = self.precision();
        let mut coeffs = vec![self.field.zero(); n];
        for j in 0..n.saturating_sub(k) {
            coeffs[j + k] = self.coeffs[j].clone();
        }
        TruncSeries { field: self.field, coeffs }
    }
}

/// The t-adic valuation of a series. Free function mirroring the other
/// module-level operations; identical to [`TruncSeries::val`].
pub fn series_val(s: &TruncSeries) -> ValOrBound {
    s.val()
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if scalar_is_negative(c) {
                ("-", c.neg())
            } else {
                ("+", c.clone())
            };
            if wrote {
                write!(f, " {} ", if sign == "-" { "-" } else { "+" })?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match (j, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{j}")?,
                (_, false) => write!(f, "{mag}*t^{j}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(coeffs: &[i64], n: usize) -> TruncSeries {
        let f = Field::Rationals;
        TruncSeries::from_coeffs(f, coeffs.iter().map(|&c| f.from_i64(c)).collect(), n)
    }

    #[test]
    fn val_of_monomial_leading_term() {
        // t^3 + t^4 at N=10
        let s = qs(&[0, 0, 0, 1, 1], 10);
        assert_eq!(s.val(), ValOrBound::Finite(3));
    }

    #[test]
    fn val_of_zero_series() {
        let s = TruncSeries::zero(Field::Rationals, 10);
        assert_eq!(s.val(), ValOrBound::AtLeast(10));
    }

    #[test]
    fn val_from_expanded_cusp_combination() {
        // (t^3 + t^4)^2 - (t^2)^3 = 2t^7 + t^8 at N=24
        let a = qs(&[0, 0, 0, 1, 1], 24);
        let b = qs(&[0, 0, 1], 24);
        let s = a.mul(&a).sub(&b.mul(&b).mul(&b));
        assert_eq!(s.val(), ValOrBound::Finite(7));
        assert_eq!(s.coeff(7), &Field::Rationals.from_i64(2));
        assert_eq!(s.coeff(8), &Field::Rationals.from_i64(1));
        assert_eq!(s.coeff(9), &Field::Rationals.from_i64(0));
    }

    #[test]
    fn mul_difference_of_squares() {
        let a = qs(&[1, 1], 8);
        let b = qs(&[1, -1], 8);
        assert_eq!(a.mul(&b), qs(&[1, 0, -1], 8));
    }

    #[test]
    fn mul_truncation_edge() {
        // t^2 * t^3 at N=4 is indistinguishable from zero
        let a = qs(&[0, 0, 1], 4);
        let b = qs(&[0, 0, 0, 1], 4);
        let p = a.mul(&b);
        assert!(p.is_zero_to_precision());
        assert_eq!(p.val(), ValOrBound::AtLeast(4));
    }

    #[test]
    fn mul_over_f5() {
        // (2 + t)(3 + t) = 6 + 5t + t^2 = 1 + 0t + t^2 over F_5
        let f = Field::prime(5).unwrap();
        let a = TruncSeries::from_coeffs(f, vec![f.from_i64(2), f.one()], 4);
        let b = TruncSeries::from_coeffs(f, vec![f.from_i64(3), f.one()], 4);
        let p = a.mul(&b);
        let expected =
            TruncSeries::from_coeffs(f, vec![f.one(), f.zero(), f.one()], 4);
        assert_eq!(p, expected);
    }

    #[test]
    fn invert_geometric_series() {
        let a = qs(&[1, -1], 4);
        assert_eq!(a.invert().unwrap(), qs(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn invert_constant() {
        let a = qs(&[2], 3);
        let inv = a.invert().unwrap();
        assert_eq!(inv.coeff(0), &Field::Rationals.parse_scalar("1/2").unwrap());
        assert!(inv.coeff(1).is_zero() && inv.coeff(2).is_zero());
    }

    #[test]
    fn invert_unit_square() {
        // (1 + 2t + t^2)^(-1) = 1 - 2t + 3t^2 at N=3; verify by re-multiplying
        let a = qs(&[1, 2, 1], 3);
        let inv = a.invert().unwrap();
        assert_eq!(inv, qs(&[1, -2, 3], 3));
        assert_eq!(a.mul(&inv), TruncSeries::one(Field::Rationals, 3));
    }

    #[test]
    fn invert_non_unit_rejected() {
        let a = qs(&[0, 1], 4);
        assert_eq!(a.invert().unwrap_err(), AlgebraError::NonUnit);
    }

    #[test]
    fn min_precision_propagates() {
        let a = qs(&[1, 1, 1, 1, 1, 1], 6);
        let b = qs(&[1, 1], 4);
        assert_eq!(a.add(&b).precision(), 4);
        assert_eq!(a.mul(&b).precision(), 4);
    }

    #[test]
    fn display_forms() {
        assert_eq!(qs(&[0, 0, 2, 1], 8).to_string(), "2*t^2 + t^3");
        assert_eq!(qs(&[-1, 0, 1], 8).to_string(), "-1 + t^2");
        assert_eq!(TruncSeries::zero(Field::Rationals, 8).to_string(), "0");
    }
}
