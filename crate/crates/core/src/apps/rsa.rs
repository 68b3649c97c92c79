use std::io::{self, BufRead, Write};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{parse_int, parse_ints, show_list, Session};
use crate::error::{Error, Result};
use crate::numtheory::mod_exp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsaKey {
    pub exponent: BigInt,
    pub modulus: BigInt,
}

impl RsaKey {
    pub fn new(exponent: BigInt, modulus: BigInt) -> Result<Self> {
        if modulus < BigInt::from(2) || exponent < BigInt::one() {
            return Err(Error::Invalid(format!("invalid key ({exponent}, {modulus})")));
        }
        Ok(RsaKey { exponent, modulus })
    }
}

/// Raises every block to the key's exponent. Encryption and decryption only
/// differ in the key used.
pub fn rsa(key: &RsaKey, blocks: &[BigInt]) -> Result<Vec<BigInt>> {
    blocks
        .iter()
        .map(|b| {
            if b.is_negative() || *b >= key.modulus {
                return Err(Error::Invalid(format!("block {b} is not below the modulus {}", key.modulus)));
            }
            mod_exp(b, &key.exponent, &key.modulus)
        })
        .collect()
}

fn read_key<R: BufRead, W: Write>(s: &mut Session<R, W>, which: &str) -> io::Result<Option<Result<RsaKey>>> {
    let Some(e) = s.ask(&format!("Enter first part of {which} Key:"))? else { return Ok(None) };
    let Some(n) = s.ask(&format!("Enter second part of {which} Key:"))? else { return Ok(None) };
    Ok(Some(parse_int(&e).and_then(|e| RsaKey::new(e, parse_int(&n)?))))
}

pub fn run<R: BufRead, W: Write>(s: &mut Session<R, W>) -> io::Result<()> {
    loop {
        let entries = ["Encryption", "Decryption", "Exit"];
        let (which, prompt, label) = match s.menu("Choose an operation -", &entries, ">>")? {
            Some(1) => ("Public", "Enter Message:", "Encrypted message:"),
            Some(2) => ("Private", "Enter Cipher:", "Decrypted message:"),
            _ => return Ok(()),
        };
        let Some(key) = read_key(s, which)? else { return Ok(()) };
        let Some(text) = s.ask(prompt)? else { return Ok(()) };
        match key.and_then(|k| rsa(&k, &parse_ints(&text)?)) {
            Ok(out) => {
                s.say("")?;
                s.say(label)?;
                s.say(&show_list(&out))?;
            }
            Err(e) => s.error(e)?,
        }
    }
}
