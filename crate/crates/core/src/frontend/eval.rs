use std::collections::BTreeMap;

use super::ast::{Expr, Stmt};
use super::builtins;
use super::parser::parse_statement;
use super::LangError;
use crate::numtheory::SeededRng;
use crate::value::{homogenize, Func, Value};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0;

/// Evaluation state: user bindings and the random source for `shuffle`.
#[derive(Debug, Clone)]
pub struct Interpreter {
    env: BTreeMap<String, Value>,
    rng: SeededRng,
}

impl Default for Interpreter {
    fn default() -> Self {
        Interpreter::with_seed(DEFAULT_SEED)
    }
}

impl Interpreter {
    pub fn new() -> Self {
        Interpreter::default()
    }

    pub fn with_seed(seed: u64) -> Self {
        Interpreter { env: BTreeMap::new(), rng: SeededRng::new(seed) }
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.env.get(name)
    }

    pub fn bind(&mut self, name: impl Into<String>, v: Value) {
        self.env.insert(name.into(), v);
    }

    pub(crate) fn rng_mut(&mut self) -> &mut SeededRng {
        &mut self.rng
    }

    /// Parses and runs one statement. `let` yields `None`.
    pub fn run(&mut self, src: &str) -> Result<Option<Value>, LangError> {
        let stmt = parse_statement(src)?;
        self.exec(&stmt)
    }

    pub fn exec(&mut self, stmt: &Stmt) -> Result<Option<Value>, LangError> {
        match stmt.lower() {
            Stmt::Let(name, e) => {
                let v = self.eval_core(&e)?;
                self.env.insert(name, v);
                Ok(None)
            }
            Stmt::Expr(e) => self.eval_core(&e).map(Some),
        }
    }

    pub fn eval(&mut self, e: &Expr) -> Result<Value, LangError> {
        self.eval_core(&e.lower())
    }

    fn eval_all(&mut self, es: &[Expr]) -> Result<Vec<Value>, LangError> {
        es.iter().map(|e| self.eval_core(e)).collect()
    }

    fn eval_core(&mut self, e: &Expr) -> Result<Value, LangError> {
        match e {
            Expr::Int(i) => Ok(Value::Int(i.clone())),
            Expr::Float(x) => Ok(Value::Float(*x)),
            Expr::Bool(b) => Ok(Value::Bool(*b)),
            Expr::Str(s) => Ok(Value::Str(s.clone())),
            Expr::Var(name) => match self.env.get(name) {
                Some(v) => Ok(v.clone()),
                None => builtins::lookup(name).ok_or_else(|| LangError::Unbound(name.clone())),
            },
            Expr::Tuple(es) => Ok(Value::Tuple(self.eval_all(es)?)),
            Expr::List(es) => {
                let xs = self.eval_all(es)?;
                if xs.iter().any(|x| matches!(x, Value::Func(_))) {
                    return Ok(Value::List(xs));
                }
                Ok(Value::List(homogenize(xs, "list")?))
            }
            Expr::Ctor(c, es) => {
                let args = self.eval_all(es)?;
                builtins::construct(*c, args)
            }
            Expr::Apply(head, args) => {
                let f = self.eval_core(head)?;
                let args = self.eval_all(args)?;
                self.apply_all(f, args)
            }
            sugar => self.eval_core(&sugar.lower()),
        }
    }

    pub fn apply_all(&mut self, mut f: Value, args: Vec<Value>) -> Result<Value, LangError> {
        for arg in args {
            f = self.apply(f, arg)?;
        }
        Ok(f)
    }

    pub fn apply(&mut self, f: Value, arg: Value) -> Result<Value, LangError> {
        match f {
            Value::Func(Func::Builtin { name, mut args }) => {
                args.push(arg);
                let arity = builtins::arity(name).expect("builtin values carry known names");
                if args.len() == arity {
                    builtins::call(self, name, args)
                } else {
                    Ok(Value::Func(Func::Builtin { name, args }))
                }
            }
            Value::Func(Func::Composed(f, g)) => {
                let inner = self.apply(*g, arg)?;
                self.apply(*f, inner)
            }
            other => Err(LangError::type_error(format!("a {} cannot be applied to arguments", other.kind()))),
        }
    }
}
