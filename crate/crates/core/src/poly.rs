//! Sparse multivariate polynomials over an exact field.
//!
//! Terms are kept in a `BTreeMap` from exponent vectors to nonzero scalars,
//! so iteration order (and hence every printed generator list) is
//! deterministic. Polynomials over different variable lists are never
//! combined implicitly.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::scalar::{scalar_is_negative, Field, Scalar};
use crate::series::TruncSeries;

/// An ordered list of named indeterminates, shared by reference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Vars {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, a) in names.iter().enumerate() {
            assert!(!a.is_empty(), "variable names must be nonempty");
            for b in &names[..i] {
                assert_ne!(a, b, "duplicate variable name {a:?}");
            }
        }
        Vars(names.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

/// A sparse polynomial: map from exponent vectors to nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    field: Field,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars, field: Field) -> MultiPoly {
        MultiPoly {
            vars: vars.clone(),
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: Scalar) -> MultiPoly {
        let field = c.field();
        let mut p = MultiPoly::zero(vars, field);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Vars, field: Field) -> MultiPoly {
        MultiPoly::constant(vars, field.one())
    }

    /// The coordinate polynomial for variable `i`.
    pub fn var(vars: &Vars, field: Field, i: usize) -> MultiPoly {
        assert!(i < vars.len());
        let mut exps = vec![0u32; vars.len()];
        exps[i] = 1;
        let mut p = MultiPoly::zero(vars, field);
        p.terms.insert(exps, field.one());
        p
    }

    pub fn from_terms(
        vars: &Vars,
        field: Field,
        terms: Vec<(Vec<u32>, Scalar)>,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(vars, field);
        for (exps, c) in terms {
            assert_eq!(exps.len(), vars.len(), "exponent vector arity");
            assert_eq!(c.field(), field, "coefficient field mismatch");
            p.add_term(exps, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True iff this is the constant 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
                .unwrap_or(false)
    }

    fn assert_compatible(&self, rhs: &MultiPoly) {
        assert_eq!(
            self.vars, rhs.vars,
            "polynomials over different variable lists must be aligned explicitly"
        );
        assert_eq!(self.field, rhs.field, "polynomial field mismatch");
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_compatible(rhs);
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(exps.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        self.assert_compatible(rhs);
        let mut out = MultiPoly::zero(&self.vars, self.field);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        assert_eq!(c.field(), self.field);
        let mut out = MultiPoly::zero(&self.vars, self.field);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), a.mul(c));
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.vars, self.field);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var_index`.
    ///
    /// The exponent multiplies the coefficient as a field element, so in
    /// characteristic p a term `x^p` differentiates to zero.
    pub fn partial(&self, var_index: usize) -> MultiPoly {
        assert!(var_index < self.vars.len(), "variable index out of range");
        let mut out = MultiPoly::zero(&self.vars, self.field);
        for (exps, c) in &self.terms {
            let e = exps[var_index];
            if e == 0 {
                continue;
            }
            let factor = self.field.from_u32(e);
            let coeff = c.mul(&factor);
            if coeff.is_zero() {
                continue;
            }
            let mut new_exps = exps.clone();
            new_exps[var_index] = e - 1;
            out.add_term(new_exps, coeff);
        }
        out
    }

    /// Substitutes a truncated series for each variable; all arithmetic is
    /// truncated to the (uniform) argument precision.
    pub fn eval_series(&self, args: &[TruncSeries]) -> Result<TruncSeries, AlgebraError> {
        if args.len() != self.vars.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.vars.len(),
                got: args.len(),
            });
        }
        let (field, prec) = if args.is_empty() {
            (self.field, usize::MAX)
        } else {
            let f = args[0].field();
            let n = args[0].precision();
            for a in args {
                if a.field() != f {
                    return Err(AlgebraError::FieldMismatch {
                        left: f.to_string(),
                        right: a.field().to_string(),
                    });
                }
                if a.precision() != n {
                    return Err(AlgebraError::PrecisionMismatch(n, a.precision()));
                }
            }
            (f, n)
        };
        if field != self.field {
            return Err(AlgebraError::FieldMismatch {
                left: self.field.to_string(),
                right: field.to_string(),
            });
        }
        let n = if prec == usize::MAX { 1 } else { prec };

        // Per-variable power cache up to the maximal exponent that occurs.
        let mut powers: Vec<Vec<TruncSeries>> = args
            .iter()
            .map(|a| vec![TruncSeries::one(field, a.precision())])
            .collect();
        let mut acc = TruncSeries::zero(field, n);
        for (exps, c) in &self.terms {
            let mut term = TruncSeries::constant(c.clone(), n);
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&args[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// Evaluates at scalar points (the jet-enumeration hot path).
    pub fn eval_points(&self, args: &[Scalar]) -> Scalar {
        assert_eq!(args.len(), self.vars.len(), "eval arity mismatch");
        let mut acc = self.field.zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    if term.is_zero() {
                        break;
                    }
                    term = term.mul(&args[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Substitutes a polynomial (over an arbitrary shared variable list) for
    /// each variable of `self`.
    pub fn compose(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len(), "compose arity mismatch");
        assert!(!images.is_empty() || self.vars.is_empty());
        let target_vars = if images.is_empty() {
            self.vars.clone()
        } else {
            images[0].vars().clone()
        };
        for g in images {
            assert_eq!(g.vars(), &target_vars, "compose images share one variable list");
            assert_eq!(g.field(), self.field);
        }
        let mut acc = MultiPoly::zero(&target_vars, self.field);
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::constant(&target_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            let (neg, mag) = if scalar_is_negative(c) {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut monomial = String::new();
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !monomial.is_empty() {
                    monomial.push('*');
                }
                monomial.push_str(self.vars.name(i));
                if e > 1 {
                    monomial.push_str(&format!("^{e}"));
                }
            }
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{mag}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Parse error for polynomial expressions, with a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct PolyParseError {
    pub offset: usize,
    pub message: String,
}

/// Parses a polynomial expression over the given variables.
///
/// Grammar: `+ - * ^` with parentheses; integer and `a/b` rational literals;
/// `^` takes a nonnegative integer exponent; multiplication must be written
/// explicitly (`x*y`, not `xy`). Division is only allowed inside a numeric
/// literal.
pub fn parse_poly(src: &str, vars: &Vars, field: Field) -> Result<MultiPoly, PolyParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        vars,
        field,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: &'a Vars,
    field: Field,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> PolyParseError {
        PolyParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyParseError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.uint()?;
            if e > 64 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MultiPoly, PolyParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.skip_ws();
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => self.literal(),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .peek()
                    .map(|c| c.is_ascii_alphanumeric() || c == b'_')
                    .unwrap_or(false)
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.vars.index_of(name) {
                    Some(i) => Ok(MultiPoly::var(self.vars, self.field, i)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!(
                            "unknown variable {name:?}; declared variables are {}",
                            self.vars
                        )))
                    }
                }
            }
            _ => Err(self.err("expected a variable, literal, or '('")),
        }
    }

    fn uint(&mut self) -> Result<u32, PolyParseError> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("integer too large"))
    }

    fn literal(&mut self) -> Result<MultiPoly, PolyParseError> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        // Lookahead for a rational literal a/b (division is literal-only).
        let save = self.pos;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den_start = self.pos;
            while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
                self.pos += 1;
            }
            if den_start == self.pos {
                self.pos = save;
                return Err(self.err("division is only allowed inside a numeric literal a/b"));
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let c = self
            .field
            .parse_scalar(text)
            .map_err(|e| self.err(&e.to_string()))?;
        Ok(MultiPoly::constant(self.vars, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars_xy() -> Vars {
        Vars::new(vec!["x", "y"])
    }

    fn q(src: &str, vars: &Vars) -> MultiPoly {
        parse_poly(src, vars, Field::Rationals).unwrap()
    }

    #[test]
    fn partial_power_rule() {
        let v = vars_xy();
        let p = q("x^2", &v);
        assert_eq!(p.partial(0), q("2*x", &v));
    }

    #[test]
    fn partial_in_char_two() {
        let v = vars_xy();
        let f2 = Field::prime(2).unwrap();
        let p = parse_poly("x^2", &v, f2).unwrap();
        assert!(p.partial(0).is_zero());
    }

    #[test]
    fn partial_mixed() {
        let v = vars_xy();
        let p = q("x^2*y - y^3", &v);
        assert_eq!(p.partial(1), q("x^2 - 3*y^2", &v));
    }

    #[test]
    fn eval_series_on_cusp_arc() {
        // x^2 - y^3 at (t^3, t^2), N=12: identically zero
        let v = vars_xy();
        let p = q("x^2 - y^3", &v);
        let f = Field::Rationals;
        let x = TruncSeries::monomial(f, 3, 12);
        let y = TruncSeries::monomial(f, 2, 12);
        let s = p.eval_series(&[x, y]).unwrap();
        assert!(s.is_zero_to_precision());
    }

    #[test]
    fn eval_series_projection() {
        let v = Vars::new(vec!["x"]);
        let p = q("x", &v);
        let f = Field::Rationals;
        let s = p.eval_series(&[TruncSeries::monomial(f, 5, 12)]).unwrap();
        assert_eq!(s, TruncSeries::monomial(f, 5, 12));
    }

    #[test]
    fn eval_series_bent_cusp_arc() {
        // x^2 - y^3 at (t^3 + t^4, t^2), N=24: 2t^7 + t^8
        let v = vars_xy();
        let p = q("x^2 - y^3", &v);
        let f = Field::Rationals;
        let x = TruncSeries::from_coeffs(
            f,
            vec![f.zero(), f.zero(), f.zero(), f.one(), f.one()],
            24,
        );
        let y = TruncSeries::monomial(f, 2, 24);
        let s = p.eval_series(&[x, y]).unwrap();
        let mut expected = vec![f.zero(); 24];
        expected[7] = f.from_i64(2);
        expected[8] = f.one();
        assert_eq!(s, TruncSeries::from_coeffs(f, expected, 24));
    }

    #[test]
    fn eval_arity_checked() {
        let v = vars_xy();
        let p = q("x", &v);
        let f = Field::Rationals;
        let err = p.eval_series(&[TruncSeries::one(f, 4)]).unwrap_err();
        assert_eq!(err, AlgebraError::ArityMismatch { expected: 2, got: 1 });
    }

    #[test]
    fn compose_substitutes() {
        let v = vars_xy();
        // p(x, y) = x*y, images x -> x^2, y -> x^2*y gives x^4*y
        let p = q("x*y", &v);
        let images = [q("x^2", &v), q("x^2*y", &v)];
        assert_eq!(p.compose(&images), q("x^4*y", &v));
    }

    #[test]
    fn parser_rejects_unknown_variable() {
        let v = vars_xy();
        let err = parse_poly("x + z", &v, Field::Rationals).unwrap_err();
        assert!(err.message.contains("unknown variable"));
    }

    #[test]
    fn parser_rational_literal() {
        let v = vars_xy();
        let p = q("1/2*x - 3", &v);
        let text = p.to_string();
        assert_eq!(text, "-3 + 1/2*x");
    }

    #[test]
    fn display_is_deterministic() {
        let v = vars_xy();
        // terms iterate in ascending exponent-vector order: y^3 = (0,3) before x^2 = (2,0)
        assert_eq!(q("-x^2 + y^3", &v).to_string(), "y^3 - x^2");
        assert_eq!(q("0", &v).to_string(), "0");
        assert_eq!(q("2*x", &v).to_string(), "2*x");
    }
}
