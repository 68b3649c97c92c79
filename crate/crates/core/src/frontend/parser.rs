//! Recursive-descent parser.
//!
//! Binding strength, loosest first: `<=>`, `==>` (right associative), `\/`,
//! `/\`, the additive operators, the multiplicative operators and backtick
//! infix, composition `.` (right associative), then application.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::ast::{apply, BinOp, Ctor, Expr, Stmt};
use super::lexer::{tokenize_from, Pos, Tok, Token};
use super::LangError;

/// Longest list a range literal may expand to.
pub const RANGE_BOUND: usize = 1_000_000;

pub struct Parser {
    toks: Vec<Token>,
    at: usize,
    end: Pos,
}

pub fn parse_statement(src: &str) -> Result<Stmt, LangError> {
    parse_statement_at(src, 1)
}

pub fn parse_statement_at(src: &str, first_line: usize) -> Result<Stmt, LangError> {
    let (toks, _) = tokenize_from(src, first_line)?;
    Parser::new(toks, end_of(src, first_line)).statement()
}

pub fn parse_expr(src: &str) -> Result<Expr, LangError> {
    let (toks, _) = tokenize_from(src, 1)?;
    let mut p = Parser::new(toks, end_of(src, 1));
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

fn end_of(src: &str, first_line: usize) -> Pos {
    let line = first_line + src.matches('\n').count();
    let col = src.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Pos { line, col }
}

impl Parser {
    pub fn new(toks: Vec<Token>, end: Pos) -> Self {
        Parser { toks, at: 0, end }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> Pos {
        self.toks.get(self.at).map_or(self.end, |t| t.pos)
    }

    fn glued(&self) -> bool {
        self.toks.get(self.at).is_some_and(|t| t.glued)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|t| t.tok.clone());
        self.at += 1;
        t
    }

    fn unexpected(&self, expected: &str) -> LangError {
        let found = match self.peek() {
            Some(t) => t.to_string(),
            None => "end of input".to_string(),
        };
        LangError::syntax(self.pos(), format!("expected {expected}, found {found}"))
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LangError> {
        if self.peek() == Some(&tok) {
            self.at += 1;
            Ok(())
        } else {
            Err(self.unexpected(&tok.to_string()))
        }
    }

    fn finish(&self) -> Result<(), LangError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.unexpected("end of input")),
        }
    }

    pub fn statement(&mut self) -> Result<Stmt, LangError> {
        let stmt = if self.peek() == Some(&Tok::Let) {
            self.at += 1;
            let name = match self.bump() {
                Some(Tok::Ident(name)) if Ctor::from_name(&name).is_none() => name,
                _ => {
                    self.at -= 1;
                    return Err(self.unexpected("a variable name after `let`"));
                }
            };
            self.expect(Tok::Equals)?;
            Stmt::Let(name, self.expr()?)
        } else {
            Stmt::Expr(self.expr()?)
        };
        self.finish()?;
        Ok(stmt)
    }

    fn peek_op(&self) -> Option<BinOp> {
        match self.peek() {
            Some(Tok::Op(s)) => BinOp::from_symbol(s),
            _ => None,
        }
    }

    pub fn expr(&mut self) -> Result<Expr, LangError> {
        self.binary(1)
    }

    fn binary(&mut self, level: u8) -> Result<Expr, LangError> {
        if level == 7 {
            return self.compose();
        }
        if level == 5 && self.peek() == Some(&Tok::Op("-")) {
            self.at += 1;
            let operand = self.binary(6)?;
            let lhs = negate(operand);
            return self.binary_tail(level, lhs);
        }
        let lhs = self.binary(level + 1)?;
        self.binary_tail(level, lhs)
    }

    fn binary_tail(&mut self, level: u8, mut lhs: Expr) -> Result<Expr, LangError> {
        loop {
            if level == 6 {
                if let Some(Tok::Backtick(name)) = self.peek() {
                    let f = Expr::Var(name.clone());
                    self.at += 1;
                    let rhs = self.binary(7)?;
                    lhs = apply(f, vec![lhs, rhs]);
                    continue;
                }
            }
            match self.peek_op() {
                Some(op) if op.level() == level => {
                    self.at += 1;
                    if op == BinOp::Implies {
                        let rhs = self.binary(level)?;
                        return Ok(Expr::Binary(op, Box::new(lhs), Box::new(rhs)));
                    }
                    let rhs = self.binary(level + 1)?;
                    lhs = Expr::Binary(op, Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn compose(&mut self) -> Result<Expr, LangError> {
        let f = self.application()?;
        if self.peek() == Some(&Tok::Op(".")) {
            self.at += 1;
            let g = self.compose()?;
            return Ok(Expr::Compose(Box::new(f), Box::new(g)));
        }
        Ok(f)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(
                Tok::Ident(_)
                    | Tok::Int(_)
                    | Tok::Float(_)
                    | Tok::Str(_)
                    | Tok::Bool(_)
                    | Tok::LParen
                    | Tok::LBracket
                    | Tok::LBrace
            )
        )
    }

    fn application(&mut self) -> Result<Expr, LangError> {
        if !self.starts_atom() {
            return Err(self.unexpected("an expression"));
        }
        let head = self.atom()?;
        let mut args = Vec::new();
        while self.starts_atom() {
            args.push(self.atom()?);
        }
        Ok(if args.is_empty() { head } else { apply(head, args) })
    }

    fn atom(&mut self) -> Result<Expr, LangError> {
        let pos = self.pos();
        let e = match self.bump() {
            Some(Tok::Int(i)) => Expr::Int(i),
            Some(Tok::Float(x)) => Expr::Float(x),
            Some(Tok::Str(s)) => Expr::Str(s),
            Some(Tok::Bool(b)) => Expr::Bool(b),
            Some(Tok::Ident(name)) => match Ctor::from_name(&name) {
                Some(c) => return self.constructor(c, pos),
                None => Expr::Var(name),
            },
            Some(Tok::LParen) => {
                let first = self.expr()?;
                if self.peek() == Some(&Tok::Comma) {
                    let mut items = vec![first];
                    while self.peek() == Some(&Tok::Comma) {
                        self.at += 1;
                        items.push(self.expr()?);
                    }
                    self.expect(Tok::RParen)?;
                    Expr::Tuple(items)
                } else {
                    self.expect(Tok::RParen)?;
                    first
                }
            }
            Some(Tok::LBracket) => Expr::List(self.sequence(Tok::RBracket)?),
            Some(Tok::LBrace) => Expr::Ctor(Ctor::Set, vec![Expr::List(self.sequence(Tok::RBrace)?)]),
            _ => {
                self.at -= 1;
                return Err(self.unexpected("an expression"));
            }
        };
        self.calls(e)
    }

    /// `f(a, b)` when the parenthesis touches the callee.
    fn calls(&mut self, mut e: Expr) -> Result<Expr, LangError> {
        while self.peek() == Some(&Tok::LParen) && self.glued() {
            self.at += 1;
            let args = self.call_args()?;
            e = apply(e, args);
        }
        Ok(e)
    }

    fn call_args(&mut self) -> Result<Vec<Expr>, LangError> {
        let mut args = vec![self.expr()?];
        while self.peek() == Some(&Tok::Comma) {
            self.at += 1;
            args.push(self.expr()?);
        }
        self.expect(Tok::RParen)?;
        Ok(args)
    }

    fn constructor(&mut self, c: Ctor, pos: Pos) -> Result<Expr, LangError> {
        let args = if self.peek() == Some(&Tok::LParen) && self.glued() {
            self.at += 1;
            self.call_args()?
        } else {
            let mut args = Vec::new();
            while args.len() < c.arity() {
                if self.peek() == Some(&Tok::LBrace) {
                    self.at += 1;
                    args.push(Expr::List(self.sequence(Tok::RBrace)?));
                } else if self.starts_atom() {
                    args.push(self.atom()?);
                } else {
                    break;
                }
            }
            args
        };
        if args.len() != c.arity() {
            let plural = if c.arity() == 1 { "" } else { "s" };
            return Err(LangError::syntax(pos, format!("{} takes {} argument{plural}, got {}", c.name(), c.arity(), args.len())));
        }
        Ok(Expr::Ctor(c, args))
    }

    /// Items up to `close`, including the range forms `a..c` and `a, b..c`.
    fn sequence(&mut self, close: Tok) -> Result<Vec<Expr>, LangError> {
        let mut items = Vec::new();
        if self.peek() == Some(&close) {
            self.at += 1;
            return Ok(items);
        }
        loop {
            let pos = self.pos();
            items.push(self.expr()?);
            match self.peek() {
                Some(Tok::Comma) => self.at += 1,
                Some(Tok::DotDot) if items.len() <= 2 => {
                    self.at += 1;
                    let end = self.expr()?;
                    self.expect(close)?;
                    return expand_range(&items, &end, pos);
                }
                Some(t) if *t == close => {
                    self.at += 1;
                    return Ok(items);
                }
                _ => return Err(self.unexpected(&format!("`,` or {close}"))),
            }
        }
    }
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Int(i) => Expr::Int(-i),
        Expr::Float(x) => Expr::Float(-x),
        other => Expr::Neg(Box::new(other)),
    }
}

fn int_literal(e: &Expr, pos: Pos) -> Result<BigInt, LangError> {
    match e {
        Expr::Int(i) => Ok(i.clone()),
        _ => Err(LangError::syntax(pos, "range bounds must be integer literals")),
    }
}

fn expand_range(items: &[Expr], end: &Expr, pos: Pos) -> Result<Vec<Expr>, LangError> {
    let start = int_literal(&items[0], pos)?;
    let end = int_literal(end, pos)?;
    let step = match items.get(1) {
        Some(second) => int_literal(second, pos)? - &start,
        None => BigInt::from(1),
    };
    if step.is_zero() {
        return Err(LangError::syntax(pos, "range step must not be zero"));
    }
    let span = (&end - &start) / &step;
    let count = if span.is_negative() { 0 } else { span.to_usize().unwrap_or(usize::MAX).saturating_add(1) };
    if count > RANGE_BOUND {
        return Err(LangError::syntax(pos, format!("range has more than {RANGE_BOUND} elements")));
    }
    let mut x = start;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(Expr::Int(x.clone()));
        x += &step;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(src: &str) -> String {
        parse_statement(src).unwrap().lower().to_string()
    }

    #[test]
    fn precedence() {
        assert_eq!(canon("True ==> False"), "implies(True, False)");
        assert_eq!(canon("(True ∨ False) <=> (True ∧ True)"), "equals(or'(True, False), and'(True, True))");
        assert_eq!(canon("a \\/ b /\\ c"), "or'(a, and'(b, c))");
        assert_eq!(canon("a ==> b ==> c"), "implies(a, implies(b, c))");
        assert_eq!(canon("1 + 2 * 3 - 4"), "sub(add(1, mul(2, 3)), 4)");
        assert_eq!(canon("-x + 1"), "add(negate(x), 1)");
        assert_eq!(canon("10 `p` 5"), "p(10, 5)");
        assert_eq!(canon("f . g . h"), "compose(f, compose(g, h))");
        assert_eq!(canon("(f . g) x"), "compose(f, g, x)");
        assert_eq!(canon("m |><| n |+| k"), "mAdd(mMult(m, n), k)");
    }

    #[test]
    fn constructors_and_literals() {
        assert_eq!(parse_expr("Set {2,4,6}").unwrap(), parse_expr("Set [2,4,6]").unwrap());
        assert_eq!(canon("union x y"), "union(x, y)");
        assert_eq!(canon("Relation {(1,1),(1,3)}"), "Relation([(1, 1), (1, 3)])");
        assert_eq!(canon("{1,3..10}"), "Set([1, 3, 5, 7, 9])");
        assert_eq!(canon("[5,4..1]"), "[5, 4, 3, 2, 1]");
        assert_eq!(canon("[1..0]"), "[]");
        assert_eq!(canon("Node 4 (Node 2 Leaf Leaf) Leaf"), "Node(4, Node(2, Leaf, Leaf), Leaf)");
        assert_eq!(canon("Matrix [[1,(-1)]]"), "Matrix([[1, -1]])");
        assert_eq!(canon("Graph (Vertices [1], Edges [])"), "Graph((Vertices([1]), Edges([])))");
        assert_eq!(canon("let x = Set [1,2,3]"), "let x = Set([1, 2, 3])");
        assert_eq!(canon("f(a, b) c"), "f(a, b, c)");
        assert_eq!(canon("f (a, b)"), "f((a, b))");
        assert_eq!(canon("\"a\" -- trailing"), "\"a\"");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_statement("Set {1,,").unwrap_err().to_string();
        assert!(err.starts_with("1:8"), "{err}");
        assert!(parse_statement("Node 1 Leaf").is_err());
        assert!(parse_statement("(1, 2").is_err());
        assert!(parse_statement("let Set = 1").is_err());
        assert!(parse_statement("{1..x}").is_err());
        assert!(parse_statement("[1,1..3]").is_err());
        assert!(parse_statement("[1..10000000]").is_err());
        assert!(parse_statement("1 2 )").is_err());
    }
}
