use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{FieldDescriptor, Matrix, Scalar, ScalarError};

/// Arbitrary-precision rationals, always reduced with a positive denominator.
pub type Rational = BigRational;

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl fmt::Display for Rationals {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Q")
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<Rational, ScalarError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ScalarError::parse(text, "empty"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ScalarError::parse(text, "bad numerator"))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| ScalarError::parse(text, "bad denominator"))?;
    if d.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

impl Scalar for Rational {
    type Field = Rationals;

    fn zero(_: &Rationals) -> Self {
        Zero::zero()
    }

    fn one(_: &Rationals) -> Self {
        One::one()
    }

    fn from_int(_: &Rationals, value: i64) -> Self {
        Rational::from_integer(BigInt::from(value))
    }

    fn field(&self) -> Rationals {
        Rationals
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_one(&self) -> bool {
        One::is_one(self)
    }

    fn inverse(&self) -> Result<Self, ScalarError> {
        if Zero::is_zero(self) {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }

    fn parse(_: &Rationals, text: &str) -> Result<Self, ScalarError> {
        parse_rational(text)
    }

    fn descriptor(_: &Rationals) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn field_from_descriptor(desc: &FieldDescriptor) -> Result<Rationals, ScalarError> {
        match desc {
            FieldDescriptor::Rationals => Ok(Rationals),
            other => Err(ScalarError::UnsupportedField(other.to_string())),
        }
    }

    fn row_reduce(m: &mut Matrix<Self>) -> Vec<usize> {
        bareiss_rref(m)
    }
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Reduced row echelon form over Q.
///
/// Rows are scaled to integers and brought to echelon form with Bareiss'
/// fraction-free elimination, so intermediate entries are minors of the input
/// and stay small. Only the final back substitution works with fractions.
fn bareiss_rref(m: &mut Matrix<Rational>) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            let l = lcm_of_denominators(row);
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }

    // Back substitution over Q on the `r` echelon rows.
    let mut out: Vec<Vec<Rational>> = a
        .into_iter()
        .take(r)
        .map(|row| row.into_iter().map(Rational::from_integer).collect())
        .collect();
    for (k, &c) in pivots.iter().enumerate().rev() {
        let inv = out[k][c].recip();
        for x in out[k].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = out[k].clone();
        for row in out.iter_mut().take(k) {
            if Zero::is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !Zero::is_zero(p) {
                    *x = &*x - &f * p;
                }
            }
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            let v = if i < r {
                out[i][j].clone()
            } else {
                <Rational as Zero>::zero()
            };
            m.set(i, j, v);
        }
    }
    pivots
}
