//! The expression language: lexer, parser, translator, evaluator and REPL.

pub mod ast;
mod builtins;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod repl;
pub mod translate;

use thiserror::Error;

use crate::error::Error;
pub use ast::{BinOp, Ctor, Expr, Stmt};
pub use builtins::{arity, builtin_names};
pub use eval::Interpreter;
pub use lexer::{tokenize, Pos, Tok, Token};
pub use parser::{parse_expr, parse_statement};
pub use repl::{split_statements, Repl};
pub use translate::{preprocess, preprocess_file, translate};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LangError {
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("unbound variable `{0}`")]
    Unbound(String),
    #[error("{0}")]
    Type(String),
    #[error(transparent)]
    Lib(#[from] Error),
}

impl LangError {
    pub fn syntax(pos: Pos, msg: impl Into<String>) -> Self {
        LangError::Syntax { pos, msg: msg.into() }
    }

    pub fn type_error(msg: impl Into<String>) -> Self {
        LangError::Type(msg.into())
    }
}
