//! Number theory over arbitrary-precision integers.

pub mod base;
pub mod fibonacci;
pub mod modular;
pub mod primes;
pub mod random;

pub use base::{base_arith, from_alpha, from_base, to_alpha, to_base, BaseOp, DigitString};
pub use fibonacci::{fib, fib_series};
pub use modular::{is_congruent, mod_add, mod_exp, mod_mult, mod_sub, solve_congruence, solve_congruence_pos, Congruence};
pub use primes::{
    first_n_primes, is_prime, is_prime_with, lucas_lehmer, next_prime, prime_factors, primes_between, primes_to,
    PrimalityConfig,
};
pub use random::SeededRng;
