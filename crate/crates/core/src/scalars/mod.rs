//! Exact field arithmetic.
//!
//! Every invariant value in this crate lives in one of three kinds of field:
//! the rationals, a prime field `F_p`, or a number field `Q[t]/(m(t))`. The
//! [`Scalar`] trait abstracts over them so that the algebraic code is written
//! once; [`ExactScalar`] is the runtime-selected variant used by file loaders
//! and the command line, where the field is only known after parsing.

mod exact;
mod linalg;
mod number_field;
mod prime;
mod rational;
mod smith;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use exact::{ExactScalar, FieldDescriptor};
pub use linalg::{nullspace, rank, row_reduce_generic, Matrix};
pub use number_field::{Irreducibility, NfElem, NumberField, Polynomial};
pub use prime::{Fp, PrimeField};
pub use rational::{Rational, Rationals};
pub use smith::{smith_normal_form, AbelianGroup, SmithForm};

/// Errors raised by scalar construction, parsing and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields ({left} vs {right})")]
    MixedFields { left: String, right: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minimal polynomial must be monic of degree >= 1, got {0}")]
    BadMinimalPolynomial(String),
    #[error("minimal polynomial {0} is reducible over Q")]
    Reducible(String),
    #[error("element {0} is not invertible (minimal polynomial not irreducible?)")]
    NotInvertible(String),
    #[error("cannot parse scalar {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("cannot parse field descriptor {0:?} (expected Q, Fp:<p> or NF:<poly in t>)")]
    BadDescriptor(String),
    #[error("field {0} is not supported by this scalar type")]
    UnsupportedField(String),
}

impl ScalarError {
    pub(crate) fn parse(text: &str, reason: impl Into<String>) -> Self {
        ScalarError::Parse {
            text: text.to_string(),
            reason: reason.into(),
        }
    }
}

/// An element of an exact field.
///
/// Values carry (or imply) their field, so `zero`/`one` need the field as a
/// context argument. Arithmetic through the std operator traits assumes both
/// operands share a field; use [`Scalar::checked_add`] and friends when that is
/// not guaranteed.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(field: &Self::Field) -> Self;
    fn one(field: &Self::Field) -> Self;
    fn from_int(field: &Self::Field, value: i64) -> Self;
    fn field(&self) -> Self::Field;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Result<Self, ScalarError>;

    /// Parses the rendering produced by `Display`, plus plain integers and
    /// fractions, which are valid in every field.
    fn parse(field: &Self::Field, text: &str) -> Result<Self, ScalarError>;

    fn descriptor(field: &Self::Field) -> FieldDescriptor;
    fn field_from_descriptor(desc: &FieldDescriptor) -> Result<Self::Field, ScalarError>;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.field())
    }

    fn same_field(&self, other: &Self) -> Result<(), ScalarError> {
        let (a, b) = (self.field(), other.field());
        if a == b {
            Ok(())
        } else {
            Err(ScalarError::MixedFields {
                left: a.to_string(),
                right: b.to_string(),
            })
        }
    }

    fn checked_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(self.clone() + rhs.clone())
    }

    fn checked_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(self.clone() - rhs.clone())
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(self.clone() * rhs.clone())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.same_field(rhs)?;
        Ok(self.clone() * rhs.inverse()?)
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }

    /// Brings `m` to reduced row echelon form in place and returns the pivot
    /// columns. Rationals override this with fraction-free elimination.
    fn row_reduce(m: &mut Matrix<Self>) -> Vec<usize> {
        row_reduce_generic(m)
    }
}

/// Which binary operation [`field_arith`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked binary arithmetic: rejects mixed-field operands and division by zero.
pub fn field_arith<S: Scalar>(a: &S, b: &S, op: ArithOp) -> Result<S, ScalarError> {
    match op {
        ArithOp::Add => a.checked_add(b),
        ArithOp::Sub => a.checked_sub(b),
        ArithOp::Mul => a.checked_mul(b),
        ArithOp::Div => a.checked_div(b),
    }
}

/// Sum of an iterator of scalars in `field`.
pub fn sum<S: Scalar>(field: &S::Field, items: impl IntoIterator<Item = S>) -> S {
    items.into_iter().fold(S::zero(field), |acc, x| acc + x)
}

/// Dot product of two equal-length slices.
pub fn dot<S: Scalar>(field: &S::Field, a: &[S], b: &[S]) -> S {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(field), |acc, (x, y)| acc + x.clone() * y.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum() {
        let q = Rationals;
        let a = Rational::parse(&q, "1/2").unwrap();
        let b = Rational::parse(&q, "1/3").unwrap();
        let c = field_arith(&a, &b, ArithOp::Add).unwrap();
        assert_eq!(c.to_string(), "5/6");
    }

    #[test]
    fn characteristic_two() {
        let f = PrimeField::new(2).unwrap();
        let one = Fp::one(&f);
        assert!((one + one).is_zero());
    }

    #[test]
    fn golden_ratio_reduction() {
        let k = NumberField::parse("t^2-t-1").unwrap();
        let t = NfElem::generator(&k);
        assert_eq!((t.clone() * t).to_string(), "1 + t");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let a = Rational::from_int(&Rationals, 3);
        let z = Rational::zero(&Rationals);
        assert_eq!(
            field_arith(&a, &z, ArithOp::Div),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f2 = FieldDescriptor::parse("Fp:2").unwrap();
        let f3 = FieldDescriptor::parse("Fp:3").unwrap();
        let a = ExactScalar::one(&f2);
        let b = ExactScalar::one(&f3);
        assert!(matches!(
            field_arith(&a, &b, ArithOp::Mul),
            Err(ScalarError::MixedFields { .. })
        ));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let f = PrimeField::new(7).unwrap();
        let three = Fp::from_int(&f, 3);
        assert_eq!(three.pow(6), Fp::one(&f));
        assert_eq!(three.pow(0), Fp::one(&f));
    }
}
