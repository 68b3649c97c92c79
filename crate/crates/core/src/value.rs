//! Dynamically typed values manipulated by the expression language.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphMatrix, Weight};
use crate::linalg::{Matrix, Vector};
use crate::relation::Relation;
use crate::set::Set;
use crate::tree::BinTree;

/// Edge weight inside a graph value: an exact integer or a float.
#[derive(Clone, Copy)]
pub enum Number {
    Int(i64),
    Float(f64),
}

impl Number {
    pub fn to_f64(self) -> f64 {
        match self {
            Number::Int(i) => i as f64,
            Number::Float(f) => f,
        }
    }

    pub fn to_value(self) -> Value {
        match self {
            Number::Int(i) => Value::Int(i.into()),
            Number::Float(f) => Value::Float(f),
        }
    }
}

impl PartialEq for Number {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Number {}

impl PartialOrd for Number {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Number {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Number::Int(a), Number::Int(b)) => a.cmp(b),
            _ => self.to_f64().total_cmp(&other.to_f64()),
        }
    }
}

impl Add for Number {
    type Output = Number;

    fn add(self, other: Number) -> Number {
        match (self, other) {
            (Number::Int(a), Number::Int(b)) => match a.checked_add(b) {
                Some(s) => Number::Int(s),
                None => Number::Float(a as f64 + b as f64),
            },
            _ => Number::Float(self.to_f64() + other.to_f64()),
        }
    }
}

impl Weight for Number {
    fn zero() -> Self {
        Number::Int(0)
    }

    fn is_zero(&self) -> bool {
        self.to_f64() == 0.0
    }

    fn is_negative(&self) -> bool {
        self.to_f64() < 0.0
    }
}

impl fmt::Debug for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Int(i) => write!(f, "{i}"),
            Number::Float(x) => f.write_str(&format_float(*x)),
        }
    }
}

/// A function value: a builtin with the arguments supplied so far, or a composition.
#[derive(Clone)]
pub enum Func {
    Builtin { name: &'static str, args: Vec<Value> },
    Composed(Box<Value>, Box<Value>),
}

impl Func {
    fn describe(&self) -> String {
        match self {
            Func::Builtin { name, args } if args.is_empty() => (*name).to_string(),
            Func::Builtin { name, args } => {
                let args: Vec<String> = args.iter().map(Value::to_string).collect();
                format!("{name} {}", args.join(" "))
            }
            Func::Composed(f, g) => format!("{f} . {g}"),
        }
    }
}

pub type ValueGraph = Graph<Value, Number>;
pub type ValueEdge = Edge<Value, Number>;

#[derive(Clone)]
pub enum Value {
    Int(BigInt),
    Float(f64),
    Bool(bool),
    Str(String),
    Tuple(Vec<Value>),
    List(Vec<Value>),
    Set(Set<Value>),
    Relation(Relation<Value>),
    Vector(Vector),
    Matrix(Matrix),
    Graph(ValueGraph),
    GraphMatrix(GraphMatrix<Number>),
    Vertices(Set<Value>),
    Edges(Vec<ValueEdge>),
    Tree(BinTree<Value>),
    Func(Func),
    Maybe(Option<Box<Value>>),
}

impl Value {
    /// Short type name for error messages.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Int(_) => "integer",
            Value::Float(_) => "float",
            Value::Bool(_) => "boolean",
            Value::Str(_) => "string",
            Value::Tuple(_) => "tuple",
            Value::List(_) => "list",
            Value::Set(_) => "set",
            Value::Relation(_) => "relation",
            Value::Vector(_) => "vector",
            Value::Matrix(_) => "matrix",
            Value::Graph(_) => "graph",
            Value::GraphMatrix(_) => "graph matrix",
            Value::Vertices(_) => "vertices",
            Value::Edges(_) => "edges",
            Value::Tree(_) => "tree",
            Value::Func(_) => "function",
            Value::Maybe(_) => "maybe",
        }
    }

    fn rank(&self) -> u8 {
        match self {
            Value::Int(_) => 0,
            Value::Float(_) => 1,
            Value::Bool(_) => 2,
            Value::Str(_) => 3,
            Value::Tuple(_) => 4,
            Value::List(_) => 5,
            Value::Set(_) => 6,
            Value::Relation(_) => 7,
            Value::Vector(_) => 8,
            Value::Matrix(_) => 9,
            Value::Graph(_) => 10,
            Value::GraphMatrix(_) => 11,
            Value::Vertices(_) => 12,
            Value::Edges(_) => 13,
            Value::Tree(_) => 14,
            Value::Func(_) => 15,
            Value::Maybe(_) => 16,
        }
    }

    /// Numeric value as a float, for integers and floats.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Int(i) => i.to_f64(),
            Value::Float(f) => Some(*f),
            _ => None,
        }
    }

    pub fn as_number(&self) -> Option<Number> {
        match self {
            Value::Int(i) => i.to_i64().map(Number::Int),
            Value::Float(f) => Some(Number::Float(*f)),
            _ => None,
        }
    }
}

fn cmp_floats(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| a.len().cmp(&b.len()))
}

fn cmp_edges(a: &[ValueEdge], b: &[ValueEdge]) -> Ordering {
    let key = |e: &ValueEdge| (e.src.clone(), e.dst.clone(), e.weight);
    a.iter().map(key).cmp(b.iter().map(key))
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        use Value::*;
        match (self, other) {
            (Int(a), Int(b)) => a.cmp(b),
            (Float(a), Float(b)) => a.total_cmp(b),
            (Bool(a), Bool(b)) => a.cmp(b),
            (Str(a), Str(b)) => a.cmp(b),
            (Tuple(a), Tuple(b)) | (List(a), List(b)) => a.cmp(b),
            (Set(a), Set(b)) | (Vertices(a), Vertices(b)) => a.cmp(b),
            (Relation(a), Relation(b)) => a.cmp(b),
            (Vector(a), Vector(b)) => cmp_floats(a.as_slice(), b.as_slice()),
            (Matrix(a), Matrix(b)) => {
                let ra: Vec<f64> = a.rows().concat();
                let rb: Vec<f64> = b.rows().concat();
                (a.num_rows(), a.num_cols()).cmp(&(b.num_rows(), b.num_cols())).then_with(|| cmp_floats(&ra, &rb))
            }
            (Graph(a), Graph(b)) => a.vertices().cmp(b.vertices()).then_with(|| cmp_edges(a.edges(), b.edges())),
            (GraphMatrix(a), GraphMatrix(b)) => a.rows().cmp(b.rows()),
            (Edges(a), Edges(b)) => cmp_edges(a, b),
            (Tree(a), Tree(b)) => a.cmp(b),
            (Func(a), Func(b)) => a.describe().cmp(&b.describe()),
            (Maybe(a), Maybe(b)) => a.cmp(b),
            _ => self.rank().cmp(&other.rank()),
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Value {}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<i64> for Value {
    fn from(i: i64) -> Self {
        Value::Int(i.into())
    }
}

impl From<BigInt> for Value {
    fn from(i: BigInt) -> Self {
        Value::Int(i)
    }
}

impl From<f64> for Value {
    fn from(f: f64) -> Self {
        Value::Float(f)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Str(s.to_string())
    }
}

impl From<Vec<Value>> for Value {
    fn from(xs: Vec<Value>) -> Self {
        Value::List(xs)
    }
}

/// Shortest decimal that reads back as the same double, always with a
/// fractional part or exponent.
pub fn format_float(x: f64) -> String {
    format!("{x:?}")
}

fn join(f: &mut fmt::Formatter<'_>, open: &str, items: impl IntoIterator<Item = impl fmt::Display>, close: &str) -> fmt::Result {
    f.write_str(open)?;
    for (i, x) in items.into_iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(close)
}

struct EdgeTriple<'a>(&'a ValueEdge);

impl fmt::Display for EdgeTriple<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0.src, self.0.dst, self.0.weight)
    }
}

struct Pair<'a>(&'a (Value, Value));

impl fmt::Display for Pair<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0 .0, self.0 .1)
    }
}

fn write_string(f: &mut fmt::Formatter<'_>, s: &str) -> fmt::Result {
    f.write_str("\"")?;
    for c in s.chars() {
        match c {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            '\t' => f.write_str("\\t")?,
            c => write!(f, "{c}")?,
        }
    }
    f.write_str("\"")
}

fn write_tree(f: &mut fmt::Formatter<'_>, t: &BinTree<Value>, nested: bool) -> fmt::Result {
    match t {
        BinTree::Leaf => f.write_str("Leaf"),
        BinTree::Node(v, l, r) => {
            if nested {
                f.write_str("(")?;
            }
            let text = v.to_string();
            if text.starts_with('-') || text.contains(' ') {
                write!(f, "Node ({text}) ")?;
            } else {
                write!(f, "Node {text} ")?;
            }
            write_tree(f, l, true)?;
            f.write_str(" ")?;
            write_tree(f, r, true)?;
            if nested {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

/// One row per line, columns right-aligned and separated by four spaces.
fn write_matrix(f: &mut fmt::Formatter<'_>, m: &Matrix) -> fmt::Result {
    let cells: Vec<Vec<String>> = m.rows().iter().map(|r| r.iter().map(|&x| format_float(x)).collect()).collect();
    let widths: Vec<usize> =
        (0..m.num_cols()).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(0)).collect();
    for (i, row) in cells.iter().enumerate() {
        if i > 0 {
            f.write_str("\n")?;
        }
        let line: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:>w$}")).collect();
        f.write_str(&line.join("    "))?;
    }
    Ok(())
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(i) => write!(f, "{i}"),
            Value::Float(x) => f.write_str(&format_float(*x)),
            Value::Bool(true) => f.write_str("True"),
            Value::Bool(false) => f.write_str("False"),
            Value::Str(s) => write_string(f, s),
            Value::Tuple(xs) => join(f, "(", xs, ")"),
            Value::List(xs) => join(f, "[", xs, "]"),
            Value::Set(s) => join(f, "{", s, "}"),
            Value::Relation(r) => join(f, "{", r.pairs().iter().map(Pair), "}"),
            Value::Vector(v) => join(f, "<", v.as_slice().iter().map(|&x| format_float(x)), ">"),
            Value::Matrix(m) => write_matrix(f, m),
            Value::Graph(g) => {
                join(f, "Graph (Vertices [", g.vertices(), "], ")?;
                join(f, "Edges [", g.edges().iter().map(EdgeTriple), "])")
            }
            Value::GraphMatrix(gm) => {
                f.write_str("GraphMatrix ")?;
                join(f, "[", gm.rows().iter().map(|r| Row(r)), "]")
            }
            Value::Vertices(s) => join(f, "Vertices [", s, "]"),
            Value::Edges(es) => join(f, "Edges [", es.iter().map(EdgeTriple), "]"),
            Value::Tree(t) => write_tree(f, t, false),
            Value::Func(func) => write!(f, "<function {}>", func.describe()),
            Value::Maybe(None) => f.write_str("Nothing"),
            Value::Maybe(Some(v)) => write!(f, "Just {v}"),
        }
    }
}

struct Row<'a>(&'a [Number]);

impl fmt::Display for Row<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, "[", self.0, "]")
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Shape used to decide whether values may live in one set.
#[derive(Debug, Clone, PartialEq)]
enum Shape {
    Int,
    Float,
    Tuple(Vec<Shape>),
    Other(u8),
}

fn shape(v: &Value) -> Shape {
    match v {
        Value::Int(_) => Shape::Int,
        Value::Float(_) => Shape::Float,
        Value::Tuple(xs) => Shape::Tuple(xs.iter().map(shape).collect()),
        other => Shape::Other(other.rank()),
    }
}

fn unify(a: &Shape, b: &Shape) -> Option<Shape> {
    match (a, b) {
        (Shape::Int, Shape::Float) | (Shape::Float, Shape::Int) => Some(Shape::Float),
        (Shape::Tuple(xs), Shape::Tuple(ys)) if xs.len() == ys.len() => {
            xs.iter().zip(ys).map(|(x, y)| unify(x, y)).collect::<Option<Vec<_>>>().map(Shape::Tuple)
        }
        _ if a == b => Some(a.clone()),
        _ => None,
    }
}

fn conform(v: Value, target: &Shape) -> Value {
    match (v, target) {
        (Value::Int(i), Shape::Float) => Value::Float(i.to_f64().unwrap_or(f64::NAN)),
        (Value::Tuple(xs), Shape::Tuple(ts)) => Value::Tuple(xs.into_iter().zip(ts).map(|(x, t)| conform(x, t)).collect()),
        (v, _) => v,
    }
}

/// Checks that `items` share one shape, promoting integers to floats where
/// the two are mixed. Functions are never accepted.
pub fn homogenize(items: Vec<Value>, what: &'static str) -> Result<Vec<Value>> {
    if items.iter().any(|v| matches!(v, Value::Func(_))) {
        return Err(Error::Invalid(format!("functions cannot be elements of a {what}")));
    }
    let Some(first) = items.first() else {
        return Ok(items);
    };
    let mut target = shape(first);
    for v in &items[1..] {
        target = unify(&target, &shape(v)).ok_or(Error::MixedTypes(what))?;
    }
    Ok(items.into_iter().map(|v| conform(v, &target)).collect())
}
