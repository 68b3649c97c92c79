use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{invalid, Result};

/// `fib(1) = fib(2) = 1`, by exact iteration.
pub fn fib(n: u64) -> Result<BigUint> {
    if n < 1 {
        return invalid("fib is defined for n >= 1");
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 1..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(b)
}

/// `[fib 1, ..., fib n]`.
pub fn fib_series(n: u64) -> Result<Vec<BigUint>> {
    if n < 1 {
        return invalid("fibSeries is defined for n >= 1");
    }
    let mut out: Vec<BigUint> = Vec::with_capacity(n as usize);
    for i in 0..n as usize {
        let next = if i < 2 { BigUint::one() } else { &out[i - 1] + &out[i - 2] };
        out.push(next);
    }
    Ok(out)
}
