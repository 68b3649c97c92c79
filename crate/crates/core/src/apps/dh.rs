use std::io::{self, BufRead, Write};

use num_bigint::BigInt;
use num_traits::One;

use super::{parse_int, Session};
use crate::error::{Error, Result};
use crate::numtheory::mod_exp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhParams {
    pub alpha: BigInt,
    pub q: BigInt,
    pub xa: BigInt,
    pub xb: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DhKeys {
    pub ya: BigInt,
    pub yb: BigInt,
    pub shared_a: BigInt,
    pub shared_b: BigInt,
}

impl DhParams {
    pub fn new(alpha: BigInt, q: BigInt, xa: BigInt, xb: BigInt) -> Result<Self> {
        let one = BigInt::one();
        if !(one < alpha && alpha < q) {
            return Err(Error::Invalid(format!("alpha must satisfy 1 < alpha < q, got alpha = {alpha}, q = {q}")));
        }
        for x in [&xa, &xb] {
            if !(one <= *x && *x < q) {
                return Err(Error::Invalid(format!("private key {x} must satisfy 1 <= x < q")));
            }
        }
        Ok(DhParams { alpha, q, xa, xb })
    }
}

pub fn diffie_hellman(p: &DhParams) -> Result<DhKeys> {
    let ya = mod_exp(&p.alpha, &p.xa, &p.q)?;
    let yb = mod_exp(&p.alpha, &p.xb, &p.q)?;
    Ok(DhKeys { shared_a: mod_exp(&yb, &p.xa, &p.q)?, shared_b: mod_exp(&ya, &p.xb, &p.q)?, ya, yb })
}

pub fn run<R: BufRead, W: Write>(s: &mut Session<R, W>) -> io::Result<()> {
    let mut answers = Vec::new();
    for prompt in ["Enter primitive root (alpha):", "Enter prime number (q):", "", "Enter A's private key (xA):", "Enter B's private key (xB):"] {
        if prompt.is_empty() {
            s.say("")?;
            continue;
        }
        let Some(a) = s.ask(prompt)? else { return Ok(()) };
        answers.push(a);
    }
    let params = answers
        .iter()
        .map(|a| parse_int(a))
        .collect::<Result<Vec<_>>>()
        .and_then(|v| DhParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()));
    match params.and_then(|p| diffie_hellman(&p)) {
        Ok(k) => {
            s.say("")?;
            s.say("Calculating Public Keys ...")?;
            s.say("")?;
            s.say(&format!("A's public key (yA): {}", k.ya))?;
            s.say(&format!("B's public key (yB): {}", k.yb))?;
            s.say("")?;
            s.say("Generating Shared Key ...")?;
            s.say(&format!("Shared Key by A: {}", k.shared_a))?;
            s.say(&format!("Shared Key by B: {}", k.shared_b))
        }
        Err(e) => s.error(e),
    }
}
