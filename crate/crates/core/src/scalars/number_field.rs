use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::parse_rational;
use super::{FieldDescriptor, Rational, ScalarError};

/// Dense univariate polynomial over Q in the variable `t`, lowest degree first,
/// with no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn scale(&self, k: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &f * c;
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) && rem.len() > dd {
                rem.pop();
            }
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    pub fn rem(&self, d: &Polynomial) -> Polynomial {
        self.div_rem(d).1
    }

    /// Parses a polynomial in `t`, e.g. `t^2-t-1` or `3/2 + 1/2*t`.
    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ScalarError::parse(text, "empty polynomial"));
        }
        let mut terms: Vec<&str> = Vec::new();
        let bytes = s.as_bytes();
        let mut start = 0;
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'^' | b'*' | b'/') {
                terms.push(&s[start..i]);
                start = i;
            }
        }
        terms.push(&s[start..]);
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'+') => (false, &term[1..]),
                Some(b'-') => (true, &term[1..]),
                _ => (false, term),
            };
            if body.is_empty() {
                return Err(ScalarError::parse(text, "dangling sign"));
            }
            let (coef, deg) = parse_term(body).map_err(|r| ScalarError::parse(text, r))?;
            let coef = if neg { -coef } else { coef };
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Rational::zero());
            }
            coeffs[deg] = &coeffs[deg] + coef;
        }
        Ok(Polynomial::new(coeffs))
    }

    /// Renders in ascending degree with spaced operators (`3/2 + 1/2*t`) or in
    /// descending degree without spaces (`t^2-t-1`).
    pub fn render(&self, ascending: bool) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut order: Vec<usize> = (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect();
        if !ascending {
            order.reverse();
        }
        let mut out = String::new();
        for (n, &i) in order.iter().enumerate() {
            let c = &self.coeffs[i];
            let neg = c.is_negative();
            let sep = match (n == 0, neg, ascending) {
                (true, true, _) => "-",
                (true, false, _) => "",
                (false, true, true) => " - ",
                (false, false, true) => " + ",
                (false, true, false) => "-",
                (false, false, false) => "+",
            };
            out.push_str(sep);
            let a = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                k => format!("t^{k}"),
            };
            if i == 0 {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&var);
            } else {
                out.push_str(&format!("{a}*{var}"));
            }
        }
        out
    }
}

fn parse_term(body: &str) -> Result<(Rational, usize), String> {
    let (coef_part, var_part) = match body.find('t') {
        Some(pos) => (&body[..pos], Some(&body[pos..])),
        None => (body, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef_part).map_err(|e| e.to_string())?
    };
    let deg = match var_part {
        None => 0,
        Some("t") => 1,
        Some(v) => {
            let exp = v
                .strip_prefix("t^")
                .ok_or_else(|| format!("bad monomial {v:?}"))?;
            exp.parse::<usize>().map_err(|_| format!("bad exponent {exp:?}"))?
        }
    };
    Ok((coef, deg))
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::default();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Outcome of the irreducibility check run when a number field is created.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Irreducibility {
    /// Proven irreducible over Q.
    Verified,
    /// No rational root was found but higher-degree factors were not excluded.
    Unverified,
}

#[derive(Debug)]
struct NumberFieldInner {
    minpoly: Polynomial,
    irreducibility: Irreducibility,
}

/// The number field `Q[t]/(m(t))` for a monic irreducible `m`.
#[derive(Debug, Clone)]
pub struct NumberField(Arc<NumberFieldInner>);

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.minpoly == other.0.minpoly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(minpoly: Polynomial) -> Result<Self, ScalarError> {
        match minpoly.degree() {
            Some(d) if d >= 1 && minpoly.leading().is_one() => {}
            _ => return Err(ScalarError::BadMinimalPolynomial(minpoly.to_string())),
        }
        let irreducibility = check_irreducible(&minpoly)?;
        if irreducibility == Irreducibility::Unverified {
            log::warn!(
                "minimal polynomial {minpoly} has no rational root; irreducibility over Q not fully verified"
            );
        }
        Ok(NumberField(Arc::new(NumberFieldInner {
            minpoly,
            irreducibility,
        })))
    }

    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        Self::new(Polynomial::parse(text)?)
    }

    pub fn minimal_polynomial(&self) -> &Polynomial {
        &self.0.minpoly
    }

    pub fn degree(&self) -> usize {
        self.0.minpoly.degree().unwrap()
    }

    pub fn irreducibility(&self) -> Irreducibility {
        self.0.irreducibility
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF:{}", self.0.minpoly)
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational-root test. A polynomial of degree <= 3 without rational roots is
/// irreducible; for higher degrees the absence of roots is only recorded.
fn check_irreducible(m: &Polynomial) -> Result<Irreducibility, ScalarError> {
    let deg = m.degree().unwrap();
    if deg == 1 {
        return Ok(Irreducibility::Verified);
    }
    let l = m
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = m
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
        .collect();
    if ints[0].is_zero() {
        return Err(ScalarError::Reducible(m.to_string()));
    }
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(&ints[deg])) else {
        return Ok(Irreducibility::Unverified);
    };
    for p in &ps {
        for q in &qs {
            for sign in [1, -1] {
                let root = Rational::new(p * sign, q.clone());
                if m.eval(&root).is_zero() {
                    return Err(ScalarError::Reducible(m.to_string()));
                }
            }
        }
    }
    Ok(if deg <= 3 {
        Irreducibility::Verified
    } else {
        Irreducibility::Unverified
    })
}

/// Element of a number field, stored as its reduced representative of degree
/// less than the degree of the minimal polynomial.
#[derive(Debug, Clone)]
pub struct NfElem {
    poly: Polynomial,
    field: NumberField,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.field == other.field
    }
}

impl NfElem {
    /// Reduces an arbitrary polynomial modulo the minimal polynomial.
    pub fn from_poly(field: &NumberField, poly: Polynomial) -> Self {
        let poly = if poly.degree().is_some_and(|d| d >= field.degree()) {
            poly.rem(field.minimal_polynomial())
        } else {
            poly
        };
        NfElem {
            poly,
            field: field.clone(),
        }
    }

    pub fn from_rational(field: &NumberField, q: Rational) -> Self {
        Self::from_poly(field, Polynomial::new(vec![q]))
    }

    /// The class of `t`.
    pub fn generator(field: &NumberField) -> Self {
        Self::from_poly(field, Polynomial::from_ints(&[0, 1]))
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    fn check(&self, other: &NfElem) {
        assert!(self.field == other.field, "arithmetic across different number fields");
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.poly.render(true))
    }
}

impl Add for NfElem {
    type Output = NfElem;
    fn add(self, rhs: NfElem) -> NfElem {
        self.check(&rhs);
        NfElem {
            poly: &self.poly + &rhs.poly,
            field: self.field,
        }
    }
}

impl Sub for NfElem {
    type Output = NfElem;
    fn sub(self, rhs: NfElem) -> NfElem {
        self.check(&rhs);
        NfElem {
            poly: &self.poly - &rhs.poly,
            field: self.field,
        }
    }
}

impl Mul for NfElem {
    type Output = NfElem;
    fn mul(self, rhs: NfElem) -> NfElem {
        self.check(&rhs);
        let p = &self.poly * &rhs.poly;
        NfElem::from_poly(&self.field, p)
    }
}

impl Neg for NfElem {
    type Output = NfElem;
    fn neg(self) -> NfElem {
        NfElem {
            poly: Polynomial::new(self.poly.coeffs.iter().map(|c| -c).collect()),
            field: self.field,
        }
    }
}

impl super::Scalar for NfElem {
    type Field = NumberField;

    fn zero(field: &NumberField) -> Self {
        NfElem {
            poly: Polynomial::default(),
            field: field.clone(),
        }
    }

    fn one(field: &NumberField) -> Self {
        <Self as super::Scalar>::from_int(field, 1)
    }

    fn from_int(field: &NumberField, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(value.into()))
    }

    fn field(&self) -> NumberField {
        self.field.clone()
    }

    fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Extended Euclid on (a, m): finds u with u*a = 1 mod m.
    fn inverse(&self) -> Result<Self, ScalarError> {
        if self.poly.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let m = self.field.minimal_polynomial().clone();
        let (mut r0, mut r1) = (m, self.poly.clone());
        let (mut s0, mut s1) = (Polynomial::default(), Polynomial::from_ints(&[1]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(ScalarError::NotInvertible(self.to_string()));
        }
        let k = r0.leading().recip();
        Ok(NfElem::from_poly(&self.field, s0.scale(&k)))
    }

    fn parse(field: &NumberField, text: &str) -> Result<Self, ScalarError> {
        Ok(NfElem::from_poly(field, Polynomial::parse(text)?))
    }

    fn descriptor(field: &NumberField) -> FieldDescriptor {
        FieldDescriptor::Number(field.clone())
    }

    fn field_from_descriptor(desc: &FieldDescriptor) -> Result<NumberField, ScalarError> {
        match desc {
            FieldDescriptor::Number(f) => Ok(f.clone()),
            other => Err(ScalarError::UnsupportedField(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    fn golden() -> NumberField {
        NumberField::parse("t^2-t-1").unwrap()
    }

    #[test]
    fn polynomial_rendering_round_trips() {
        for s in ["t^2-t-1", "t^3+1/2*t-2", "-t"] {
            assert_eq!(Polynomial::parse(s).unwrap().render(false), s);
        }
        for s in ["3/2 + 1/2*t", "1 - t^2", "-2*t", "0"] {
            assert_eq!(Polynomial::parse(s).unwrap().render(true), s);
        }
    }

    #[test]
    fn reducible_minimal_polynomials_are_rejected() {
        assert!(matches!(NumberField::parse("t^2-1"), Err(ScalarError::Reducible(_))));
        assert!(matches!(NumberField::parse("t^3-t"), Err(ScalarError::Reducible(_))));
        assert!(matches!(NumberField::parse("2*t^2-1"), Err(ScalarError::BadMinimalPolynomial(_))));
        assert!(matches!(NumberField::parse("3"), Err(ScalarError::BadMinimalPolynomial(_))));
        assert_eq!(golden().irreducibility(), Irreducibility::Verified);
        assert_eq!(
            NumberField::parse("t^4-t^2-1").unwrap().irreducibility(),
            Irreducibility::Unverified
        );
    }

    #[test]
    fn golden_ratio_identities() {
        let k = golden();
        let t = NfElem::generator(&k);
        let one = NfElem::one(&k);
        // t^-1 = t - 1
        assert_eq!(t.inverse().unwrap(), t.clone() - one.clone());
        // 1 + t^2 = t + 2
        let d = one.clone() + t.clone() * t.clone();
        assert_eq!(d.to_string(), "2 + t");
        assert_eq!(NfElem::parse(&k, "2 + t").unwrap(), d);
    }
}
