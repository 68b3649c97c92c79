use std::io::{self, BufRead, Write};

use num_bigint::BigUint;
use num_traits::One;

use super::{show_list, Session};
use crate::error::{Error, Result};
use crate::numtheory::{lucas_lehmer, primes_to};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Powers,
    Numbers,
}

/// Exponents `q <= limit` for which `2^q - 1` is prime.
pub fn mersenne_powers(limit: u32) -> Result<Vec<u32>> {
    if limit < 2 {
        return Err(Error::Invalid(format!("limit must be at least 2, got {limit}")));
    }
    Ok(primes_to(u64::from(limit)).into_iter().map(|q| q as u32).filter(|&q| lucas_lehmer(q)).collect())
}

pub fn mersenne(mode: Mode, limit: u32) -> Result<Vec<BigUint>> {
    let qs = mersenne_powers(limit)?;
    Ok(match mode {
        Mode::Powers => qs.into_iter().map(BigUint::from).collect(),
        Mode::Numbers => qs.into_iter().map(|q| (BigUint::one() << q) - 1u32).collect(),
    })
}

pub fn run<R: BufRead, W: Write>(s: &mut Session<R, W>) -> io::Result<()> {
    loop {
        s.say("Choose an option:")?;
        s.say("    [1] : Mersenne Prime Powers upto a power 'n'")?;
        s.say("    [2] : Mersenne Prime Numbers upto a power 'n'")?;
        s.say("    [3] : Exit")?;
        let Some(choice) = s.ask(">>")? else { return Ok(()) };
        let (mode, label) = match choice.trim() {
            "1" => (Mode::Powers, "Powers -"),
            "2" => (Mode::Numbers, "Numbers -"),
            "3" => return Ok(()),
            other => {
                s.say(&format!("Invalid choice: {other}"))?;
                continue;
            }
        };
        let Some(n) = s.ask("Enter power")? else { return Ok(()) };
        let limit = n.trim().parse::<u32>().map_err(|_| Error::Invalid(format!("not a power: {}", n.trim())));
        match limit.and_then(|l| mersenne(mode, l)) {
            Ok(xs) => {
                s.say("")?;
                s.say(label)?;
                s.say(&show_list(&xs))?;
            }
            Err(e) => s.error(e)?,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_prime;

    #[test]
    fn small_limits() {
        assert_eq!(mersenne_powers(10).unwrap(), vec![2, 3, 5, 7]);
        assert!(mersenne_powers(1).is_err());
        let numbers = mersenne(Mode::Numbers, 100).unwrap();
        assert_eq!(show_list(&numbers[..4]), "[3,7,31,127]");
        assert!(numbers.iter().all(is_prime));
    }

    #[test]
    fn batch_transcript() {
        let mut out = Vec::new();
        run(&mut Session::new("2\n20\n3\n".as_bytes(), &mut out, true)).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("Numbers -\n[3,7,31,127,8191,131071,524287]\n"), "{text}");
    }
}
