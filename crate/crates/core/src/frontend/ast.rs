use std::fmt;

use num_bigint::BigInt;

use crate::value::format_float;

/// Built-in constructors with a fixed number of arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ctor {
    Set,
    Relation,
    Vector,
    Matrix,
    Graph,
    Vertices,
    Edges,
    GraphMatrix,
    Node,
    Leaf,
}

impl Ctor {
    pub const ALL: [Ctor; 10] = [
        Ctor::Set,
        Ctor::Relation,
        Ctor::Vector,
        Ctor::Matrix,
        Ctor::Graph,
        Ctor::Vertices,
        Ctor::Edges,
        Ctor::GraphMatrix,
        Ctor::Node,
        Ctor::Leaf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Ctor::Set => "Set",
            Ctor::Relation => "Relation",
            Ctor::Vector => "Vector",
            Ctor::Matrix => "Matrix",
            Ctor::Graph => "Graph",
            Ctor::Vertices => "Vertices",
            Ctor::Edges => "Edges",
            Ctor::GraphMatrix => "GraphMatrix",
            Ctor::Node => "Node",
            Ctor::Leaf => "Leaf",
        }
    }

    pub fn from_name(name: &str) -> Option<Ctor> {
        Ctor::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn arity(self) -> usize {
        match self {
            Ctor::Node => 3,
            Ctor::Leaf => 0,
            _ => 1,
        }
    }
}

/// Infix operators. Each one is sugar for a named function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    Iff,
    Implies,
    Or,
    And,
    Add,
    Sub,
    VAdd,
    VSub,
    MAdd,
    MSub,
    Mul,
    Div,
    Inner,
    Cross,
    ScalarMult,
    MScalarMult,
    MMult,
    MDiv,
}

impl BinOp {
    pub const ALL: [BinOp; 18] = [
        BinOp::Iff,
        BinOp::Implies,
        BinOp::Or,
        BinOp::And,
        BinOp::Add,
        BinOp::Sub,
        BinOp::VAdd,
        BinOp::VSub,
        BinOp::MAdd,
        BinOp::MSub,
        BinOp::Mul,
        BinOp::Div,
        BinOp::Inner,
        BinOp::Cross,
        BinOp::ScalarMult,
        BinOp::MScalarMult,
        BinOp::MMult,
        BinOp::MDiv,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Iff => "<=>",
            BinOp::Implies => "==>",
            BinOp::Or => "\\/",
            BinOp::And => "/\\",
            BinOp::Add => "+",
            BinOp::Sub => "-",
            BinOp::VAdd => "<+>",
            BinOp::VSub => "<->",
            BinOp::MAdd => "|+|",
            BinOp::MSub => "|-|",
            BinOp::Mul => "*",
            BinOp::Div => "/",
            BinOp::Inner => "<.>",
            BinOp::Cross => "><",
            BinOp::ScalarMult => "<*>",
            BinOp::MScalarMult => "|*|",
            BinOp::MMult => "|><|",
            BinOp::MDiv => "|/|",
        }
    }

    /// The function the operator stands for.
    pub fn function(self) -> &'static str {
        match self {
            BinOp::Iff => "equals",
            BinOp::Implies => "implies",
            BinOp::Or => "or'",
            BinOp::And => "and'",
            BinOp::Add => "add",
            BinOp::Sub => "sub",
            BinOp::VAdd => "vAdd",
            BinOp::VSub => "vSub",
            BinOp::MAdd => "mAdd",
            BinOp::MSub => "mSub",
            BinOp::Mul => "mul",
            BinOp::Div => "divide",
            BinOp::Inner => "innerProd",
            BinOp::Cross => "crossProd",
            BinOp::ScalarMult => "scalarMult",
            BinOp::MScalarMult => "mScalarMult",
            BinOp::MMult => "mMult",
            BinOp::MDiv => "mDiv",
        }
    }

    pub fn from_symbol(s: &str) -> Option<BinOp> {
        BinOp::ALL.into_iter().find(|op| op.symbol() == s)
    }

    /// Binding strength, loosest first.
    pub fn level(self) -> u8 {
        match self {
            BinOp::Iff => 1,
            BinOp::Implies => 2,
            BinOp::Or => 3,
            BinOp::And => 4,
            BinOp::Add | BinOp::Sub | BinOp::VAdd | BinOp::VSub | BinOp::MAdd | BinOp::MSub => 5,
            _ => 6,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Int(BigInt),
    Float(f64),
    Bool(bool),
    Str(String),
    Var(String),
    Tuple(Vec<Expr>),
    List(Vec<Expr>),
    Ctor(Ctor, Vec<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Compose(Box<Expr>, Box<Expr>),
    /// Never empty; the head is never itself an `Apply`.
    Apply(Box<Expr>, Vec<Expr>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Stmt {
    Let(String, Expr),
    Expr(Expr),
}

/// Applies `head` to `args`, merging nested applications.
pub fn apply(head: Expr, mut args: Vec<Expr>) -> Expr {
    match head {
        Expr::Apply(h, mut first) => {
            first.append(&mut args);
            Expr::Apply(h, first)
        }
        head => Expr::Apply(Box::new(head), args),
    }
}

fn call(name: &str, args: Vec<Expr>) -> Expr {
    Expr::Apply(Box::new(Expr::Var(name.to_string())), args)
}

impl Expr {
    /// Rewrites operators, negation and composition into plain applications.
    pub fn lower(&self) -> Expr {
        let low = |es: &[Expr]| es.iter().map(Expr::lower).collect::<Vec<_>>();
        match self {
            Expr::Binary(op, a, b) => call(op.function(), vec![a.lower(), b.lower()]),
            Expr::Neg(e) => match e.lower() {
                Expr::Int(i) => Expr::Int(-i),
                Expr::Float(x) => Expr::Float(-x),
                other => call("negate", vec![other]),
            },
            Expr::Compose(f, g) => call("compose", vec![f.lower(), g.lower()]),
            Expr::Apply(h, args) => apply(h.lower(), low(args)),
            Expr::Tuple(es) => Expr::Tuple(low(es)),
            Expr::List(es) => Expr::List(low(es)),
            Expr::Ctor(c, es) => Expr::Ctor(*c, low(es)),
            leaf => leaf.clone(),
        }
    }

    /// True when the tree contains no operator sugar.
    pub fn is_core(&self) -> bool {
        match self {
            Expr::Binary(..) | Expr::Neg(_) | Expr::Compose(..) => false,
            Expr::Apply(h, args) => !matches!(**h, Expr::Apply(..)) && !args.is_empty() && h.is_core() && args.iter().all(Expr::is_core),
            Expr::Tuple(es) | Expr::List(es) | Expr::Ctor(_, es) => es.iter().all(Expr::is_core),
            _ => true,
        }
    }
}

impl Stmt {
    pub fn lower(&self) -> Stmt {
        match self {
            Stmt::Let(name, e) => Stmt::Let(name.clone(), e.lower()),
            Stmt::Expr(e) => Stmt::Expr(e.lower()),
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, es: &[Expr]) -> fmt::Result {
    for (i, e) in es.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{e}")?;
    }
    Ok(())
}

/// Non-ASCII and control characters are written as `\u{hex}` escapes.
fn write_str_lit(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    f.write_str("\"")?;
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\t' => f.write_str("\\t")?,
            ' '..='~' => write!(f, "{c}")?,
            c => write!(f, "\\u{{{:x}}}", c as u32)?,
        }
    }
    f.write_str("\"")
}

/// Canonical text: ASCII only, every application in call syntax.
/// Operator sugar that survived lowering is printed fully parenthesized.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(i) => write!(f, "{i}"),
            Expr::Float(x) => f.write_str(&format_float(*x)),
            Expr::Bool(true) => f.write_str("True"),
            Expr::Bool(false) => f.write_str("False"),
            Expr::Str(s) => write_str_lit(f, s),
            Expr::Var(name) => f.write_str(name),
            Expr::Tuple(es) => {
                f.write_str("(")?;
                write_list(f, es)?;
                f.write_str(")")
            }
            Expr::List(es) => {
                f.write_str("[")?;
                write_list(f, es)?;
                f.write_str("]")
            }
            Expr::Ctor(c, es) if es.is_empty() => f.write_str(c.name()),
            Expr::Ctor(c, es) => {
                write!(f, "{}(", c.name())?;
                write_list(f, es)?;
                f.write_str(")")
            }
            Expr::Binary(op, a, b) => write!(f, "({a} {} {b})", op.symbol()),
            Expr::Neg(e) => write!(f, "(-{e})"),
            Expr::Compose(a, b) => write!(f, "({a} . {b})"),
            Expr::Apply(h, args) => {
                match **h {
                    Expr::Var(ref name) => f.write_str(name)?,
                    ref other => write!(f, "({other})")?,
                }
                f.write_str("(")?;
                write_list(f, args)?;
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for Stmt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stmt::Let(name, e) => write!(f, "let {name} = {e}"),
            Stmt::Expr(e) => write!(f, "{e}"),
        }
    }
}
