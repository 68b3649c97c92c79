//! Positional notation in arbitrary bases.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// Digits of a non-negative integer in some base, most significant first.
/// Zero is the empty digit list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    /// Validates the digits and strips leading zeros.
    pub fn new(base: u32, digits: Vec<u32>) -> Result<Self> {
        check_base(base)?;
        if let Some(&d) = digits.iter().find(|&&d| d >= base) {
            return invalid(format!("digit {d} is out of range for base {base}"));
        }
        let first = digits.iter().position(|&d| d != 0).unwrap_or(digits.len());
        Ok(DigitString { base, digits: digits[first..].to_vec() })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn value(&self) -> BigUint {
        self.digits.iter().fold(BigUint::zero(), |acc, &d| acc * self.base + d)
    }
}

fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        return invalid(format!("base must be at least 2, got {base}"));
    }
    Ok(())
}

fn non_negative(v: &BigInt) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => invalid(format!("negative value {v} has no digit expansion")),
        _ => Ok(v.magnitude().clone()),
    }
}

/// Repeated division by `base`, collecting remainders.
pub fn to_base(base: u32, v: &BigInt) -> Result<DigitString> {
    check_base(base)?;
    let mut v = non_negative(v)?;
    let mut digits = Vec::new();
    let b = BigUint::from(base);
    while !v.is_zero() {
        let (q, r) = v.div_rem(&b);
        digits.push(r.to_u32().expect("remainder below base"));
        v = q;
    }
    digits.reverse();
    Ok(DigitString { base, digits })
}

pub fn from_base(base: u32, digits: &[u32]) -> Result<BigInt> {
    Ok(BigInt::from(DigitString::new(base, digits.to_vec())?.value()))
}

/// `0-9` then `a-z`.
pub fn to_alpha(digits: &[u32]) -> Result<String> {
    digits
        .iter()
        .map(|&d| char::from_digit(d, 36).ok_or_else(|| Error::Invalid(format!("digit {d} has no alphanumeric form"))))
        .collect()
}

pub fn from_alpha(text: &str) -> Result<Vec<u32>> {
    text.chars()
        .map(|c| {
            if c.is_ascii_uppercase() {
                return invalid(format!("invalid digit character {c:?}"));
            }
            c.to_digit(36).ok_or_else(|| Error::Invalid(format!("invalid digit character {c:?}")))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseOp {
    Add,
    Sub,
    Mul,
    Div,
    Exp,
}

/// Arithmetic on digit strings of one base; division is the integer quotient.
pub fn base_arith(op: BaseOp, base: u32, x: &[u32], y: &[u32]) -> Result<DigitString> {
    let a = DigitString::new(base, x.to_vec())?.value();
    let b = DigitString::new(base, y.to_vec())?.value();
    let v = match op {
        BaseOp::Add => a + b,
        BaseOp::Sub => {
            if a < b {
                return invalid("subtraction would give a negative result");
            }
            a - b
        }
        BaseOp::Mul => a * b,
        BaseOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            a / b
        }
        BaseOp::Exp => {
            let e = b.to_u32().ok_or_else(|| Error::Invalid("exponent is too large".into()))?;
            a.pow(e)
        }
    };
    to_base(base, &BigInt::from(v))
}
