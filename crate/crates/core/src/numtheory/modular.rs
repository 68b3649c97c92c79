//! Modular arithmetic and linear congruences.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// The linear congruence `a·x ≡ b (mod m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Congruence {
    pub a: BigInt,
    pub b: BigInt,
    pub m: BigInt,
}

impl Congruence {
    pub fn new(a: BigInt, b: BigInt, m: BigInt) -> Result<Self> {
        check_modulus(&m)?;
        Ok(Congruence { a, b, m })
    }

    /// Least non-negative solution, if one exists.
    pub fn solve(&self) -> Option<BigInt> {
        let m = &self.m;
        let a = self.a.mod_floor(m);
        let b = self.b.mod_floor(m);
        let ext = a.extended_gcd(m);
        let g = ext.gcd;
        if !b.is_multiple_of(&g) {
            return None;
        }
        // a/g is invertible modulo m/g with inverse ext.x
        let period = m / &g;
        Some(((&b / &g) * ext.x).mod_floor(&period))
    }

    /// Least solution that is at least one.
    pub fn solve_positive(&self) -> Option<BigInt> {
        let x = self.solve()?;
        if x.is_zero() {
            let g = self.a.mod_floor(&self.m).gcd(&self.m);
            Some(&self.m / g)
        } else {
            Some(x)
        }
    }
}

fn check_modulus(m: &BigInt) -> Result<()> {
    if !m.is_positive() {
        return invalid(format!("modulus must be at least 1, got {m}"));
    }
    Ok(())
}

pub fn mod_add(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<BigInt> {
    check_modulus(m)?;
    Ok((a + b).mod_floor(m))
}

pub fn mod_sub(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<BigInt> {
    check_modulus(m)?;
    Ok((a - b).mod_floor(m))
}

pub fn mod_mult(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<BigInt> {
    check_modulus(m)?;
    Ok((a * b).mod_floor(m))
}

/// `a^b mod m` by binary square-and-multiply.
pub fn mod_exp(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<BigInt> {
    check_modulus(m)?;
    if b.is_negative() {
        return invalid("modExp needs a non-negative exponent");
    }
    let mut result = BigInt::one().mod_floor(m);
    let mut base = a.mod_floor(m);
    let mut e = b.clone();
    while !e.is_zero() {
        if e.is_odd() {
            result = (&result * &base).mod_floor(m);
        }
        base = (&base * &base).mod_floor(m);
        e >>= 1;
    }
    Ok(result)
}

pub fn is_congruent(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<bool> {
    check_modulus(m)?;
    Ok((a - b).is_multiple_of(m))
}

pub fn solve_congruence(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<Option<BigInt>> {
    Ok(Congruence::new(a.clone(), b.clone(), m.clone())?.solve())
}

pub fn solve_congruence_pos(a: &BigInt, b: &BigInt, m: &BigInt) -> Result<Option<BigInt>> {
    Ok(Congruence::new(a.clone(), b.clone(), m.clone())?.solve_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn scan(a: i64, rhs: i64, m: i64, from: i64) -> Option<i64> {
        (from..from + m).find(|x| (a * x - rhs).rem_euclid(m) == 0)
    }

    #[test]
    fn documented_values() {
        assert_eq!(mod_exp(&b(112), &b(34), &b(546)).unwrap(), b(532));
        assert_eq!(mod_exp(&b(5), &b(0), &b(7)).unwrap(), b(1));
        assert_eq!(mod_exp(&b(5), &b(0), &b(1)).unwrap(), b(0));
        assert!(is_congruent(&b(17), &b(5), &b(12)).unwrap());
        assert_eq!(solve_congruence(&b(3), &b(6), &b(9)).unwrap(), Some(b(2)));
        assert_eq!(solve_congruence(&b(2), &b(1), &b(4)).unwrap(), None);
        assert_eq!(solve_congruence_pos(&b(3), &b(0), &b(9)).unwrap(), Some(b(3)));
        assert!(mod_add(&b(1), &b(1), &b(0)).is_err());
        assert!(mod_exp(&b(2), &b(-1), &b(5)).is_err());
        assert_eq!(mod_sub(&b(2), &b(5), &b(7)).unwrap(), b(4));
        assert_eq!(mod_mult(&b(-3), &b(5), &b(7)).unwrap(), b(6));
    }

    #[test]
    fn congruence_solver_matches_scan() {
        for m in 1..30 {
            for a in -10..30 {
                for rhs in -5..30 {
                    let got = solve_congruence(&b(a), &b(rhs), &b(m)).unwrap();
                    assert_eq!(got, scan(a, rhs, m, 0).map(b), "{a}x = {rhs} mod {m}");
                    let got = solve_congruence_pos(&b(a), &b(rhs), &b(m)).unwrap();
                    assert_eq!(got, scan(a, rhs, m, 1).map(b), "{a}x = {rhs} mod {m}, x >= 1");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn mod_exp_matches_repeated_multiplication(a in 0i64..1000, e in 0i64..1000, m in 1i64..1000) {
            let naive = (0..e).fold(1 % m, |acc, _| acc * a % m);
            prop_assert_eq!(mod_exp(&b(a), &b(e), &b(m)).unwrap(), b(naive));
        }

        #[test]
        fn mod_add_matches_remainder(x in -1000i64..1000, y in -1000i64..1000, m in 1i64..100) {
            prop_assert_eq!(mod_add(&b(x), &b(y), &b(m)).unwrap(), b((x + y).rem_euclid(m)));
        }
    }
}
