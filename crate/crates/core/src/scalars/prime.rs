use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::parse_rational;
use super::{FieldDescriptor, Scalar, ScalarError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

/// The prime field `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ScalarError> {
        if is_prime(p) {
            Ok(PrimeField { p })
        } else {
            Err(ScalarError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer into the canonical residue range `[0, p)`.
    pub fn reduce(&self, v: i128) -> Fp {
        let p = self.p as i128;
        Fp {
            value: v.rem_euclid(p) as u64,
            p: self.p,
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fp:{}", self.p)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo a prime, stored in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    fn check(&self, other: &Fp) {
        assert_eq!(self.p, other.p, "arithmetic across different prime fields");
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u128 + rhs.value as u128) % self.p as u128;
        Fp { value: v as u64, p: self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u128 + self.p as u128 - rhs.value as u128) % self.p as u128;
        Fp { value: v as u64, p: self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let v = (self.value as u128 * rhs.value as u128) % self.p as u128;
        Fp { value: v as u64, p: self.p }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl Scalar for Fp {
    type Field = PrimeField;

    fn zero(field: &PrimeField) -> Self {
        Fp { value: 0, p: field.p }
    }

    fn one(field: &PrimeField) -> Self {
        field.reduce(1)
    }

    fn from_int(field: &PrimeField, value: i64) -> Self {
        field.reduce(value as i128)
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Result<Self, ScalarError> {
        if self.value == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let e = (self.value as i128).extended_gcd(&(self.p as i128));
        Ok(self.field().reduce(e.x))
    }

    fn parse(field: &PrimeField, text: &str) -> Result<Self, ScalarError> {
        let s = text.trim();
        let body = match s.split_once("mod") {
            Some((v, p)) => {
                let p: u64 = p
                    .trim()
                    .parse()
                    .map_err(|_| ScalarError::parse(text, "bad modulus"))?;
                if p != field.p {
                    return Err(ScalarError::MixedFields {
                        left: field.to_string(),
                        right: format!("Fp:{p}"),
                    });
                }
                v
            }
            None => s,
        };
        let q = parse_rational(body)?;
        let reduce = |b: &BigInt| -> i128 {
            b.mod_floor(&BigInt::from(field.p))
                .to_i128()
                .expect("residue fits")
        };
        let num = field.reduce(reduce(q.numer()));
        let den = field.reduce(reduce(q.denom()));
        num.checked_div(&den)
            .map_err(|_| ScalarError::parse(text, format!("denominator vanishes mod {}", field.p)))
    }

    fn descriptor(field: &PrimeField) -> FieldDescriptor {
        FieldDescriptor::Prime(*field)
    }

    fn field_from_descriptor(desc: &FieldDescriptor) -> Result<PrimeField, ScalarError> {
        match desc {
            FieldDescriptor::Prime(f) => Ok(*f),
            other => Err(ScalarError::UnsupportedField(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_modulus() {
        assert_eq!(PrimeField::new(4), Err(ScalarError::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(ScalarError::NotPrime(1)));
        assert!(PrimeField::new(7919).is_ok());
    }

    #[test]
    fn inverse_and_parse() {
        let f = PrimeField::new(7).unwrap();
        let three = Fp::from_int(&f, 3);
        assert_eq!(three * three.inverse().unwrap(), Fp::one(&f));
        assert_eq!(Fp::parse(&f, "5 mod 7").unwrap(), Fp::from_int(&f, 5));
        assert_eq!(Fp::parse(&f, "1/2").unwrap(), Fp::from_int(&f, 4));
        assert_eq!(Fp::parse(&f, "-1").unwrap(), Fp::from_int(&f, 6));
        assert!(Fp::parse(&f, "1/7").is_err());
        assert!(Fp::parse(&f, "1 mod 5").is_err());
    }

    #[test]
    fn rendering() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(Fp::from_int(&f, -2).to_string(), "3 mod 5");
    }
}
