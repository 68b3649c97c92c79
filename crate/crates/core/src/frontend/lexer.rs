use std::fmt;

use num_bigint::BigInt;

use super::LangError;

/// 1-based line and column (in characters).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Float(f64),
    Str(String),
    Bool(bool),
    Let,
    /// Symbolic operator, already mapped to its ASCII spelling.
    Op(&'static str),
    /// `` `name` ``
    Backtick(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    DotDot,
    Equals,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Int(i) => write!(f, "integer {i}"),
            Tok::Float(x) => write!(f, "number {x:?}"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::Bool(b) => write!(f, "{}", if *b { "True" } else { "False" }),
            Tok::Let => f.write_str("`let`"),
            Tok::Op(op) => write!(f, "`{op}`"),
            Tok::Backtick(s) => write!(f, "`{s}` in backticks"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::DotDot => f.write_str("`..`"),
            Tok::Equals => f.write_str("`=`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
    /// No whitespace between this token and the previous one.
    pub glued: bool,
}

/// Longest spellings first so that `|><|` wins over `><`.
const OPERATORS: &[(&str, &str)] = &[
    ("|><|", "|><|"),
    ("<=>", "<=>"),
    ("==>", "==>"),
    ("|+|", "|+|"),
    ("|-|", "|-|"),
    ("|*|", "|*|"),
    ("|/|", "|/|"),
    ("<+>", "<+>"),
    ("<->", "<->"),
    ("<.>", "<.>"),
    ("<*>", "<*>"),
    ("/\\", "/\\"),
    ("\\/", "\\/"),
    ("><", "><"),
    ("∧", "/\\"),
    ("∨", "\\/"),
    ("∘", "."),
    ("⇒", "==>"),
    ("⇔", "<=>"),
    ("+", "+"),
    ("-", "-"),
    ("*", "*"),
    ("/", "/"),
    (".", "."),
];

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `src` into tokens. Text after `--` up to the end of a line is a
/// comment; the last comment seen is returned alongside the tokens.
pub fn tokenize(src: &str) -> Result<(Vec<Token>, Option<String>), LangError> {
    tokenize_from(src, 1)
}

pub fn tokenize_from(src: &str, first_line: usize) -> Result<(Vec<Token>, Option<String>), LangError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut comment = None;
    let mut i = 0;
    let mut pos = Pos { line: first_line, col: 1 };
    let mut glued = false;

    let advance = |i: &mut usize, pos: &mut Pos, n: usize| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                pos.line += 1;
                pos.col = 1;
            } else {
                pos.col += 1;
            }
            *i += 1;
        }
    };
    let rest_starts = |i: usize, s: &str| s.chars().enumerate().all(|(k, c)| chars.get(i + k) == Some(&c));

    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            advance(&mut i, &mut pos, 1);
            glued = false;
            continue;
        }
        if rest_starts(i, "--") {
            let end = chars[i..].iter().position(|&c| c == '\n').map_or(chars.len(), |k| i + k);
            comment = Some(chars[i + 2..end].iter().collect::<String>().trim().to_string());
            let n = end - i;
            advance(&mut i, &mut pos, n);
            glued = false;
            continue;
        }
        let start = pos;
        let (tok, len) = if c.is_ascii_digit() {
            lex_number(&chars[i..], start)?
        } else if is_ident_start(c) {
            let len = chars[i..].iter().take_while(|&&c| is_ident_char(c)).count();
            let word: String = chars[i..i + len].iter().collect();
            let tok = match word.as_str() {
                "let" => Tok::Let,
                "True" => Tok::Bool(true),
                "False" => Tok::Bool(false),
                _ => Tok::Ident(word),
            };
            (tok, len)
        } else if c == '"' {
            lex_string(&chars[i..], start)?
        } else if c == '`' {
            let len = chars[i + 1..].iter().take_while(|&&c| is_ident_char(c)).count();
            if len == 0 || !is_ident_start(chars[i + 1]) || chars.get(i + 1 + len) != Some(&'`') {
                return Err(LangError::syntax(start, "malformed backtick operator, expected `name`"));
            }
            (Tok::Backtick(chars[i + 1..i + 1 + len].iter().collect()), len + 2)
        } else if rest_starts(i, "..") {
            (Tok::DotDot, 2)
        } else if c == '=' && !rest_starts(i, "==>") {
            (Tok::Equals, 1)
        } else {
            let simple = match c {
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                ',' => Some(Tok::Comma),
                _ => None,
            };
            match simple {
                Some(t) => (t, 1),
                None => match OPERATORS.iter().find(|(spelling, _)| rest_starts(i, spelling)) {
                    Some((spelling, ascii)) => (Tok::Op(ascii), spelling.chars().count()),
                    None => return Err(LangError::syntax(start, format!("unexpected character {c:?}"))),
                },
            }
        };
        out.push(Token { tok, pos: start, glued });
        advance(&mut i, &mut pos, len);
        glued = true;
    }
    Ok((out, comment))
}

fn lex_number(chars: &[char], start: Pos) -> Result<(Tok, usize), LangError> {
    let digits = |from: usize| chars[from..].iter().take_while(|c| c.is_ascii_digit()).count();
    let mut len = digits(0);
    let mut is_float = false;
    if chars.get(len) == Some(&'.') && chars.get(len + 1).is_some_and(|c| c.is_ascii_digit()) {
        len += 1 + digits(len + 1);
        is_float = true;
    }
    if matches!(chars.get(len), Some('e' | 'E')) {
        let mut k = len + 1;
        if matches!(chars.get(k), Some('+' | '-')) {
            k += 1;
        }
        let exp = digits(k);
        if exp > 0 {
            len = k + exp;
            is_float = true;
        }
    }
    if chars.get(len).is_some_and(|&c| is_ident_start(c)) {
        return Err(LangError::syntax(start, "identifier glued to a number"));
    }
    let text: String = chars[..len].iter().collect();
    let tok = if is_float {
        let x: f64 = text.parse().map_err(|_| LangError::syntax(start, format!("bad number {text}")))?;
        if !x.is_finite() {
            return Err(LangError::syntax(start, format!("number {text} is out of range")));
        }
        Tok::Float(x)
    } else {
        Tok::Int(text.parse().expect("digits"))
    };
    Ok((tok, len))
}

fn lex_string(chars: &[char], start: Pos) -> Result<(Tok, usize), LangError> {
    let mut s = String::new();
    let mut k = 1;
    loop {
        match chars.get(k) {
            None | Some('\n') => return Err(LangError::syntax(start, "unterminated string")),
            Some('"') => return Ok((Tok::Str(s), k + 1)),
            Some('\\') => {
                let c = match chars.get(k + 1) {
                    Some('n') => '\n',
                    Some('t') => '\t',
                    Some('"') => '"',
                    Some('\\') => '\\',
                    Some('u') if chars.get(k + 2) == Some(&'{') => {
                        let hex: String = chars[k + 3..].iter().take_while(|c| c.is_ascii_hexdigit()).collect();
                        let code = u32::from_str_radix(&hex, 16).ok().and_then(char::from_u32);
                        match (code, chars.get(k + 3 + hex.len())) {
                            (Some(c), Some('}')) => {
                                s.push(c);
                                k += 4 + hex.len();
                                continue;
                            }
                            _ => return Err(LangError::syntax(start, "bad \\u{..} escape in string")),
                        }
                    }
                    _ => return Err(LangError::syntax(start, "unknown escape in string")),
                };
                s.push(c);
                k += 2;
            }
            Some(&c) => {
                s.push(c);
                k += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(src: &str) -> Vec<Tok> {
        tokenize(src).unwrap().0.into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn operators_and_aliases() {
        assert_eq!(toks("True ==> False"), vec![Tok::Bool(true), Tok::Op("==>"), Tok::Bool(false)]);
        assert_eq!(toks("a ∧ b ∨ c"), toks("a /\\ b \\/ c"));
        assert_eq!(toks("m |><| n >< v"), vec![
            Tok::Ident("m".into()),
            Tok::Op("|><|"),
            Tok::Ident("n".into()),
            Tok::Op("><"),
            Tok::Ident("v".into())
        ]);
        assert_eq!(toks("10 `p` 5"), vec![Tok::Int(10.into()), Tok::Backtick("p".into()), Tok::Int(5.into())]);
    }

    #[test]
    fn numbers_and_ranges() {
        assert_eq!(toks("{1,3..10}")[3..6], [Tok::Int(3.into()), Tok::DotDot, Tok::Int(10.into())]);
        assert_eq!(toks("2.5 1e-7 3"), vec![Tok::Float(2.5), Tok::Float(1e-7), Tok::Int(3.into())]);
        assert_eq!(toks("f.g"), vec![Tok::Ident("f".into()), Tok::Op("."), Tok::Ident("g".into())]);
        assert!(tokenize("2abc").is_err());
    }

    #[test]
    fn positions_comments_and_glue() {
        let (ts, comment) = tokenize("f(x)  -- note\n  y").unwrap();
        assert_eq!(comment.as_deref(), Some("note"));
        assert!(ts[1].glued && !ts[0].glued);
        assert_eq!(ts[4].pos, Pos { line: 2, col: 3 });
        assert!(ts.windows(2).all(|w| w[0].pos < w[1].pos));
        let err = tokenize("x # y").unwrap_err();
        assert!(err.to_string().contains("1:3"), "{err}");
        assert_eq!(toks("zero' 2"), vec![Tok::Ident("zero'".into()), Tok::Int(2.into())]);
        assert_eq!(toks(r#""a\"b""#), vec![Tok::Str("a\"b".into())]);
        assert_eq!(toks(r#""\u{e9}x""#), vec![Tok::Str("éx".into())]);
    }
}
