//! Prime generation and primality testing.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::random::SeededRng;
use crate::error::{invalid, Result};

/// Witness set that makes Miller-Rabin exact below 3.3·10²⁴, which covers
/// every 64-bit input.
const DETERMINISTIC_WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Primality testing knobs. Inputs below `trial_division_limit` are decided
/// by trial division; larger ones by Miller-Rabin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityConfig {
    pub trial_division_limit: u64,
    /// Random rounds for inputs beyond the deterministic witness range.
    pub rounds: u32,
    pub seed: u64,
}

impl Default for PrimalityConfig {
    fn default() -> Self {
        PrimalityConfig { trial_division_limit: 1_000_000, rounds: 40, seed: 0x5eed }
    }
}

/// Sieve of Eratosthenes: every prime `<= m`.
pub fn primes_to(m: u64) -> Vec<u64> {
    if m < 2 {
        return Vec::new();
    }
    let m = usize::try_from(m).expect("sieve bound fits in memory");
    let mut composite = vec![false; m + 1];
    let mut i = 2;
    while i * i <= m {
        if !composite[i] {
            for j in (i * i..=m).step_by(i) {
                composite[j] = true;
            }
        }
        i += 1;
    }
    (2..=m).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

/// Primes in the closed interval `[lo, hi]`.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    if hi < lo {
        return Vec::new();
    }
    primes_to(hi).into_iter().filter(|&p| p >= lo).collect()
}

pub fn first_n_primes(n: usize) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    // p_n < n (ln n + ln ln n) for n >= 6
    let x = n.max(6) as f64;
    let mut bound = (x * (x.ln() + x.ln().ln())).ceil() as u64;
    loop {
        let ps = primes_to(bound);
        if ps.len() >= n {
            return ps[..n].to_vec();
        }
        bound *= 2;
    }
}

fn trial_division(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// One Miller-Rabin round: false when `a` proves `n` composite.
fn passes_round(n: &BigUint, a: &BigUint, d: &BigUint, s: u64) -> bool {
    let n_minus_1 = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

pub fn is_prime(n: &BigUint) -> bool {
    is_prime_with(n, &PrimalityConfig::default())
}

pub fn is_prime_with(n: &BigUint, config: &PrimalityConfig) -> bool {
    if *n < BigUint::from(2u32) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < config.trial_division_limit {
            return trial_division(small);
        }
    }
    for p in DETERMINISTIC_WITNESSES {
        if (n % p).is_zero() {
            return *n == BigUint::from(p);
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n is odd and greater than 1");
    let d = &n_minus_1 >> s;
    let deterministic_limit: BigUint = "3317044064679887385961981".parse().expect("constant");
    if *n < deterministic_limit {
        return DETERMINISTIC_WITNESSES.iter().all(|&a| passes_round(n, &BigUint::from(a), &d, s));
    }
    let mut rng = SeededRng::new(config.seed);
    let two = BigUint::from(2u32);
    (0..config.rounds).all(|_| {
        let a = rng.big_in_range(&two, &n_minus_1);
        passes_round(n, &a, &d, s)
    })
}

/// Least prime strictly greater than `n`.
pub fn next_prime(n: &BigUint) -> BigUint {
    let mut c = n + 1u32;
    while !is_prime(&c) {
        c += 1u32;
    }
    c
}

/// Prime factors in nondecreasing order, with multiplicity.
pub fn prime_factors(n: &BigUint) -> Result<Vec<BigUint>> {
    if *n < BigUint::from(2u32) {
        return invalid(format!("primeFactors needs n >= 2, got {n}"));
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = BigUint::from(2u32);
    while &d * &d <= rest {
        if is_prime(&rest) {
            break;
        }
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            out.push(d.clone());
            rest = q;
        }
        d += if d == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    if rest > BigUint::one() {
        out.push(rest);
    }
    Ok(out)
}

/// Lucas-Lehmer test for `2^q - 1`, meaningful for prime `q`.
pub fn lucas_lehmer(q: u32) -> bool {
    if q == 2 {
        return is_prime(&BigUint::from(3u32));
    }
    if q < 2 {
        return false;
    }
    let m = (BigUint::one() << q) - 1u32;
    let mut s = BigUint::from(4u32);
    for _ in 0..q - 2 {
        s = reduce_mersenne(&s * &s + &m - 2u32, q, &m);
    }
    s.is_zero()
}

/// `x mod (2^q - 1)` by folding high bits onto low bits.
fn reduce_mersenne(mut x: BigUint, q: u32, m: &BigUint) -> BigUint {
    while x.bits() > u64::from(q) {
        x = (&x & m) + (&x >> q);
    }
    if x == *m {
        BigUint::zero()
    } else {
        x
    }
}
