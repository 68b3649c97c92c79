//! Small menu-driven programs built on the library: classical ciphers, RSA,
//! Diffie-Hellman key exchange, linear systems and Mersenne primes.

pub mod cipher;
pub mod dh;
pub mod lineq;
pub mod mers;
pub mod rsa;

use std::io::{self, BufRead, Write};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Prompt-and-answer loop over a pair of streams. In batch mode each answer
/// is echoed after its prompt so the transcript reads like a terminal session.
pub struct Session<R, W> {
    input: R,
    output: W,
    batch: bool,
}

impl<R: BufRead, W: Write> Session<R, W> {
    pub fn new(input: R, output: W, batch: bool) -> Self {
        Session { input, output, batch }
    }

    pub fn say(&mut self, text: &str) -> io::Result<()> {
        writeln!(self.output, "{text}")
    }

    /// Shows `prompt` and reads one line. `None` once input is exhausted.
    pub fn ask(&mut self, prompt: &str) -> io::Result<Option<String>> {
        write!(self.output, "{prompt} ")?;
        self.output.flush()?;
        let mut line = String::new();
        if self.input.read_line(&mut line)? == 0 {
            writeln!(self.output)?;
            return Ok(None);
        }
        let answer = line.trim_end_matches(['\n', '\r']).to_string();
        if self.batch {
            writeln!(self.output, "{answer}")?;
        }
        Ok(Some(answer))
    }

    /// Shows a numbered menu and returns the chosen entry, 1-based.
    /// Unknown choices are reported and the menu is shown again.
    pub fn menu(&mut self, title: &str, entries: &[&str], prompt: &str) -> io::Result<Option<usize>> {
        loop {
            self.say(title)?;
            for (i, e) in entries.iter().enumerate() {
                self.say(&format!("  [{}]: {e}", i + 1))?;
            }
            let Some(answer) = self.ask(prompt)? else { return Ok(None) };
            match answer.trim().parse::<usize>() {
                Ok(k) if (1..=entries.len()).contains(&k) => return Ok(Some(k)),
                _ => self.say(&format!("Invalid choice: {}", answer.trim()))?,
            }
        }
    }

    pub fn error(&mut self, e: impl std::fmt::Display) -> io::Result<()> {
        writeln!(self.output, "error: {e}")
    }
}

/// Reads integers written as `[1,2,3]`, `1,2,3` or `1 2 3`.
pub fn parse_ints(text: &str) -> Result<Vec<BigInt>> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Error::Invalid(format!("not an integer: {s}"))))
        .collect()
}

pub fn parse_int(text: &str) -> Result<BigInt> {
    text.trim().parse().map_err(|_| Error::Invalid(format!("not an integer: {}", text.trim())))
}

pub fn show_list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_lists() {
        let want: Vec<BigInt> = [101, 203, 4321, 12].map(BigInt::from).to_vec();
        assert_eq!(parse_ints("[101,203,4321,12]").unwrap(), want);
        assert_eq!(parse_ints(" 101 203, 4321 12 ").unwrap(), want);
        assert!(parse_ints("[1,x]").is_err());
        assert_eq!(show_list(&want), "[101,203,4321,12]");
    }

    #[test]
    fn menu_retries_and_echoes() {
        let mut out = Vec::new();
        let mut s = Session::new("9\n2\n".as_bytes(), &mut out, true);
        assert_eq!(s.menu("Pick -", &["a", "b"], ">>").unwrap(), Some(2));
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("Invalid choice: 9") && text.contains(">> 2\n"));
    }
}
