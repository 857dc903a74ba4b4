use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Fp, NfElem, NumberField, PrimeField, Rational, Rationals, Scalar, ScalarError};

/// Runtime description of a ground field.
///
/// Textual form: `Q`, `Fp:<p>` or `NF:<monic polynomial in t>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    Prime(PrimeField),
    Number(NumberField),
}

impl FieldDescriptor {
    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        let s = text.trim();
        if s == "Q" {
            return Ok(FieldDescriptor::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .trim()
                .parse()
                .map_err(|_| ScalarError::BadDescriptor(text.to_string()))?;
            return Ok(FieldDescriptor::Prime(PrimeField::new(p)?));
        }
        if let Some(poly) = s.strip_prefix("NF:") {
            return Ok(FieldDescriptor::Number(NumberField::parse(poly)?));
        }
        Err(ScalarError::BadDescriptor(text.to_string()))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Prime(f) => f.modulus(),
            _ => 0,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => f.write_str("Q"),
            FieldDescriptor::Prime(p) => write!(f, "{p}"),
            FieldDescriptor::Number(k) => write!(f, "{k}"),
        }
    }
}

/// A scalar whose field is chosen at runtime.
///
/// Operator arithmetic panics on mixed fields; [`Scalar::checked_add`] and the
/// other checked methods report [`ScalarError::MixedFields`] instead.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactScalar {
    Rational(Rational),
    Prime(Fp),
    Number(NfElem),
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                match (self, rhs) {
                    (ExactScalar::Rational(a), ExactScalar::Rational(b)) => {
                        ExactScalar::Rational(a.$method(b))
                    }
                    (ExactScalar::Prime(a), ExactScalar::Prime(b)) => ExactScalar::Prime(a.$method(b)),
                    (ExactScalar::Number(a), ExactScalar::Number(b)) => {
                        ExactScalar::Number(a.$method(b))
                    }
                    (a, b) => panic!("arithmetic across fields {} and {}", a.field(), b.field()),
                }
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(a) => ExactScalar::Rational(-a),
            ExactScalar::Prime(a) => ExactScalar::Prime(-a),
            ExactScalar::Number(a) => ExactScalar::Number(-a),
        }
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactScalar::Rational(a) => write!(f, "{a}"),
            ExactScalar::Prime(a) => write!(f, "{a}"),
            ExactScalar::Number(a) => write!(f, "{a}"),
        }
    }
}

impl Scalar for ExactScalar {
    type Field = FieldDescriptor;

    fn zero(field: &FieldDescriptor) -> Self {
        Self::from_int(field, 0)
    }

    fn one(field: &FieldDescriptor) -> Self {
        Self::from_int(field, 1)
    }

    fn from_int(field: &FieldDescriptor, value: i64) -> Self {
        match field {
            FieldDescriptor::Rationals => ExactScalar::Rational(Rational::from_int(&Rationals, value)),
            FieldDescriptor::Prime(p) => ExactScalar::Prime(Fp::from_int(p, value)),
            FieldDescriptor::Number(k) => ExactScalar::Number(NfElem::from_int(k, value)),
        }
    }

    fn field(&self) -> FieldDescriptor {
        match self {
            ExactScalar::Rational(_) => FieldDescriptor::Rationals,
            ExactScalar::Prime(a) => FieldDescriptor::Prime(a.field()),
            ExactScalar::Number(a) => FieldDescriptor::Number(a.field()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(a) => Scalar::is_zero(a),
            ExactScalar::Prime(a) => a.is_zero(),
            ExactScalar::Number(a) => a.is_zero(),
        }
    }

    fn inverse(&self) -> Result<Self, ScalarError> {
        Ok(match self {
            ExactScalar::Rational(a) => ExactScalar::Rational(a.inverse()?),
            ExactScalar::Prime(a) => ExactScalar::Prime(a.inverse()?),
            ExactScalar::Number(a) => ExactScalar::Number(a.inverse()?),
        })
    }

    fn parse(field: &FieldDescriptor, text: &str) -> Result<Self, ScalarError> {
        Ok(match field {
            FieldDescriptor::Rationals => ExactScalar::Rational(Rational::parse(&Rationals, text)?),
            FieldDescriptor::Prime(p) => ExactScalar::Prime(Fp::parse(p, text)?),
            FieldDescriptor::Number(k) => ExactScalar::Number(NfElem::parse(k, text)?),
        })
    }

    fn descriptor(field: &FieldDescriptor) -> FieldDescriptor {
        field.clone()
    }

    fn field_from_descriptor(desc: &FieldDescriptor) -> Result<FieldDescriptor, ScalarError> {
        Ok(desc.clone())
    }
}

impl From<Rational> for ExactScalar {
    fn from(q: Rational) -> Self {
        ExactScalar::Rational(q)
    }
}

impl From<Fp> for ExactScalar {
    fn from(x: Fp) -> Self {
        ExactScalar::Prime(x)
    }
}

impl From<NfElem> for ExactScalar {
    fn from(x: NfElem) -> Self {
        ExactScalar::Number(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_round_trip() {
        for s in ["Q", "Fp:2", "Fp:101", "NF:t^2-t-1"] {
            assert_eq!(FieldDescriptor::parse(s).unwrap().to_string(), s);
        }
        assert!(FieldDescriptor::parse("Fp:9").is_err());
        assert!(FieldDescriptor::parse("R").is_err());
    }

    #[test]
    fn rendering_per_field() {
        let q = FieldDescriptor::Rationals;
        let f2 = FieldDescriptor::parse("Fp:2").unwrap();
        let nf = FieldDescriptor::parse("NF:t^2-t-1").unwrap();
        assert_eq!(ExactScalar::parse(&q, "6/4").unwrap().to_string(), "3/2");
        assert_eq!(ExactScalar::from_int(&f2, 3).to_string(), "1 mod 2");
        assert_eq!(
            ExactScalar::parse(&nf, "3/2 + 1/2*t").unwrap().to_string(),
            "3/2 + 1/2*t"
        );
    }
}
