use std::io::{self, BufRead, Write};

use super::Session;
use crate::error::{Error, Result};

pub const CAESAR_SHIFT: u32 = 3;

/// Output position `i` of a full block takes input position `KEY[i]` (1-based).
pub const TRANSPOSITION_KEY: [usize; 4] = [3, 2, 1, 4];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Encipher,
    Decipher,
}

/// Shifts every character code, spaces and punctuation included.
pub fn caesar(mode: Mode, text: &str) -> Result<String> {
    text.chars()
        .map(|c| {
            let code = c as u32;
            let shifted = match mode {
                Mode::Encipher if c.is_ascii() => Some(code + CAESAR_SHIFT),
                Mode::Decipher if (CAESAR_SHIFT..128 + CAESAR_SHIFT).contains(&code) => Some(code - CAESAR_SHIFT),
                _ => None,
            };
            shifted
                .and_then(char::from_u32)
                .ok_or_else(|| Error::Invalid(format!("character {c:?} is outside the cipher alphabet")))
        })
        .collect()
}

/// The key restricted to a block of `len` characters.
fn block_key(len: usize) -> Vec<usize> {
    TRANSPOSITION_KEY.iter().copied().filter(|&k| k <= len).collect()
}

fn invert(key: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; key.len()];
    for (i, &k) in key.iter().enumerate() {
        inv[k - 1] = i + 1;
    }
    inv
}

/// Blockwise transposition. A short final block uses the key entries that fit.
pub fn transposition(mode: Mode, text: &str) -> String {
    let chars: Vec<char> = text.chars().collect();
    chars
        .chunks(TRANSPOSITION_KEY.len())
        .flat_map(|block| {
            let key = block_key(block.len());
            let key = match mode {
                Mode::Encipher => key,
                Mode::Decipher => invert(&key),
            };
            key.into_iter().map(|k| block[k - 1]).collect::<Vec<_>>()
        })
        .collect()
}

fn cipher_menu<R: BufRead, W: Write>(s: &mut Session<R, W>, transform: fn(Mode, &str) -> Result<String>) -> io::Result<bool> {
    loop {
        let entries = ["Enciphering", "Deciphering", "Exit"];
        let mode = match s.menu("Choose an option -", &entries, ">>")? {
            None => return Ok(false),
            Some(1) => Mode::Encipher,
            Some(2) => Mode::Decipher,
            Some(_) => return Ok(true),
        };
        let (prompt, label) = match mode {
            Mode::Encipher => ("Enter plaintext:", "Enciphered text:"),
            Mode::Decipher => ("Enter ciphertext:", "Deciphered text:"),
        };
        let Some(text) = s.ask(prompt)? else { return Ok(false) };
        match transform(mode, &text) {
            Ok(out) => {
                s.say("")?;
                s.say(label)?;
                s.say(&out)?;
            }
            Err(e) => s.error(e)?,
        }
    }
}

pub fn run<R: BufRead, W: Write>(s: &mut Session<R, W>) -> io::Result<()> {
    loop {
        let entries = ["Caesar Cipher", "Transposition Cipher", "Exit"];
        let more = match s.menu("Choose a cipher -", &entries, ">>")? {
            Some(1) => cipher_menu(s, caesar)?,
            Some(2) => cipher_menu(s, |m, t| Ok(transposition(m, t)))?,
            _ => false,
        };
        if !more {
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn caesar_examples() {
        assert_eq!(caesar(Mode::Encipher, "Caesar cipher").unwrap(), "Fdhvdu#flskhu");
        assert_eq!(caesar(Mode::Encipher, "A").unwrap(), "D");
        assert!(caesar(Mode::Encipher, "é").is_err());
        assert!(caesar(Mode::Decipher, "\u{1}").is_err());
    }

    #[test]
    fn transposition_examples() {
        assert_eq!(transposition(Mode::Decipher, "orpgmars"), "programs");
        assert_eq!(transposition(Mode::Encipher, "programs"), "orpgmars");
        assert_eq!(transposition(Mode::Encipher, "abcdefg"), "cbadgfe");
        assert_eq!(transposition(Mode::Encipher, "ab"), "ba");
    }

    #[test]
    fn batch_transcript() {
        let mut out = Vec::new();
        let input = "1\n1\nCaesar cipher\n3\n2\n2\norpgmars\n3\n3\n";
        run(&mut Session::new(input.as_bytes(), &mut out, true)).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("Enciphered text:\nFdhvdu#flskhu\n"), "{text}");
        assert!(text.contains("Deciphered text:\nprograms\n"), "{text}");
    }

    proptest! {
        #[test]
        fn ciphers_roundtrip(text in "[ -~]{0,40}") {
            let enc = caesar(Mode::Encipher, &text).unwrap();
            prop_assert_eq!(caesar(Mode::Decipher, &enc).unwrap(), text.clone());
            let t = transposition(Mode::Encipher, &text);
            prop_assert_eq!(transposition(Mode::Decipher, &t), text);
        }
    }
}
