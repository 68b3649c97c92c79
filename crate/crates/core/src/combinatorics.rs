//! Factorials, counting, enumeration and shuffling.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{invalid, Error, Result};
use crate::numtheory::SeededRng;

/// Longest input accepted by [`permutation`].
pub const PERMUTATION_BOUND: usize = 9;

/// Largest number of sequences [`combination`] will produce.
pub const COMBINATION_OUTPUT_BOUND: usize = 1 << 20;

pub fn factorial(n: i64) -> Result<BigUint> {
    if n < 0 {
        return invalid("Usage - factorial n, where 'n' is non-negative.");
    }
    Ok((1..=n as u64).fold(BigUint::one(), |acc, k| acc * k))
}

fn ordered(n: i64, r: i64) -> Result<(i64, i64)> {
    if n < 0 || r < 0 {
        return invalid(format!("counting functions need non-negative arguments, got {n} and {r}"));
    }
    Ok((n.max(r), n.min(r)))
}

/// Permutations of the smaller argument out of the larger, so `p(10, 5) = p(5, 10)`.
pub fn p(n: i64, r: i64) -> Result<BigUint> {
    let (a, b) = ordered(n, r)?;
    Ok(((a - b + 1) as u64..=a as u64).fold(BigUint::one(), |acc, k| acc * k))
}

/// Combinations of the smaller argument out of the larger.
pub fn c(n: i64, r: i64) -> Result<BigUint> {
    let (a, b) = ordered(n, r)?;
    Ok(p(a, b)? / factorial(b)?)
}

/// Every ordering of `xs`, lexicographic in source positions.
pub fn permutation<T: Clone>(xs: &[T]) -> Result<Vec<Vec<T>>> {
    if xs.len() > PERMUTATION_BOUND {
        return Err(Error::BoundExceeded { what: "permutation input length", bound: PERMUTATION_BOUND });
    }
    fn go<T: Clone>(xs: &[T], used: &mut [bool], current: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if current.len() == xs.len() {
            out.push(current.clone());
            return;
        }
        for i in 0..xs.len() {
            if !used[i] {
                used[i] = true;
                current.push(xs[i].clone());
                go(xs, used, current, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(xs, &mut vec![false; xs.len()], &mut Vec::with_capacity(xs.len()), &mut out);
    Ok(out)
}

/// All `k`-fold concatenations picking one block per position (a Cartesian power).
pub fn combination<T: Clone>(k: usize, options: &[Vec<T>]) -> Result<Vec<Vec<T>>> {
    let total = u32::try_from(k)
        .ok()
        .and_then(|k| options.len().checked_pow(k))
        .filter(|&t| t <= COMBINATION_OUTPUT_BOUND)
        .ok_or(Error::BoundExceeded { what: "combination output size", bound: COMBINATION_OUTPUT_BOUND })?;
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .iter()
            .flat_map(|prefix| {
                options.iter().map(move |block| {
                    let mut next = prefix.clone();
                    next.extend(block.iter().cloned());
                    next
                })
            })
            .collect();
    }
    debug_assert_eq!(out.len(), total);
    Ok(out)
}

/// Fisher-Yates shuffle driven by `rng`.
pub fn shuffle_with<T: Clone>(xs: &[T], rng: &mut SeededRng) -> Vec<T> {
    let mut out = xs.to_vec();
    for i in (1..out.len()).rev() {
        let j = rng.below(i + 1);
        out.swap(i, j);
    }
    out
}

pub fn shuffle<T: Clone>(xs: &[T], seed: u64) -> Vec<T> {
    shuffle_with(xs, &mut SeededRng::new(seed))
}
