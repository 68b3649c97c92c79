//! Named functions available in the expression language.
//!
//! Every builtin is curried: applying it to fewer arguments than its arity
//! yields a partially applied function value.

mod graphs;
mod logic_sets;
mod numeric;

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive};

use super::ast::Ctor;
use super::eval::Interpreter;
use super::LangError;
use crate::error::Error;
use crate::graph::{Edge, Graph, GraphMatrix};
use crate::linalg::{Matrix, Vector};
use crate::relation::Relation;
use crate::set::Set;
use crate::tree::BinTree;
use crate::value::{homogenize, Func, Number, Value, ValueEdge, ValueGraph};

pub(super) type R = Result<Value, LangError>;
type Impl = fn(&mut Interpreter, Vec<Value>) -> R;

pub(super) struct Builtin {
    name: &'static str,
    arity: usize,
    run: Impl,
}

pub(super) const fn b(name: &'static str, arity: usize, run: Impl) -> Builtin {
    Builtin { name, arity, run }
}

fn table() -> &'static HashMap<&'static str, &'static Builtin> {
    static TABLE: OnceLock<HashMap<&'static str, &'static Builtin>> = OnceLock::new();
    TABLE.get_or_init(|| {
        [logic_sets::ENTRIES, graphs::ENTRIES, numeric::ENTRIES]
            .into_iter()
            .flatten()
            .map(|b| (b.name, b))
            .collect()
    })
}

pub fn arity(name: &str) -> Option<usize> {
    table().get(name).map(|b| b.arity)
}

/// Every builtin name, sorted.
pub fn builtin_names() -> Vec<&'static str> {
    let mut names: Vec<_> = table().keys().copied().collect();
    names.sort_unstable();
    names
}

pub(super) fn lookup(name: &str) -> Option<Value> {
    table().get(name).map(|b| Value::Func(Func::Builtin { name: b.name, args: Vec::new() }))
}

/// Runs a saturated builtin, prefixing type errors with its name.
pub(super) fn call(ip: &mut Interpreter, name: &'static str, args: Vec<Value>) -> R {
    let entry = table()[name];
    (entry.run)(ip, args).map_err(|e| match e {
        LangError::Type(msg) => LangError::Type(format!("{name}: {msg}")),
        LangError::Lib(err) => LangError::Type(format!("{name}: {err}")),
        other => other,
    })
}

pub(super) fn expected(what: &str, got: &Value) -> LangError {
    LangError::type_error(format!("expected {what}, got {}", got.kind()))
}

pub(super) fn big(v: &Value) -> Result<&BigInt, LangError> {
    match v {
        Value::Int(i) => Ok(i),
        other => Err(expected("an integer", other)),
    }
}

pub(super) fn i64_of(v: &Value) -> Result<i64, LangError> {
    big(v)?.to_i64().ok_or_else(|| LangError::type_error(format!("integer {v} is too large")))
}

/// A non-negative machine-sized integer.
pub(super) fn usize_of(v: &Value) -> Result<usize, LangError> {
    let i = big(v)?;
    if i.is_negative() {
        return Err(LangError::type_error(format!("expected a non-negative integer, got {i}")));
    }
    i.to_usize().ok_or_else(|| LangError::type_error(format!("integer {i} is too large")))
}

pub(super) fn u32_of(v: &Value) -> Result<u32, LangError> {
    let n = usize_of(v)?;
    u32::try_from(n).map_err(|_| LangError::type_error(format!("integer {n} is too large")))
}

pub(super) fn biguint_of(v: &Value) -> Result<BigUint, LangError> {
    big(v)?.to_biguint().ok_or_else(|| LangError::type_error(format!("expected a non-negative integer, got {v}")))
}

pub(super) fn float(v: &Value) -> Result<f64, LangError> {
    v.as_f64().ok_or_else(|| expected("a number", v))
}

pub(super) fn boolean(v: &Value) -> Result<bool, LangError> {
    match v {
        Value::Bool(b) => Ok(*b),
        other => Err(expected("a boolean", other)),
    }
}

/// Elements of a list, set or vertex set.
pub(super) fn items(v: &Value) -> Result<Vec<Value>, LangError> {
    match v {
        Value::List(xs) => Ok(xs.clone()),
        Value::Set(s) | Value::Vertices(s) => Ok(s.to_vec()),
        other => Err(expected("a list", other)),
    }
}

pub(super) fn bools(v: &Value) -> Result<Vec<bool>, LangError> {
    items(v)?.iter().map(boolean).collect()
}

pub(super) fn floats(v: &Value) -> Result<Vec<f64>, LangError> {
    items(v)?.iter().map(float).collect()
}

pub(super) fn set(v: &Value) -> Result<&Set<Value>, LangError> {
    match v {
        Value::Set(s) => Ok(s),
        other => Err(expected("a set", other)),
    }
}

pub(super) fn relation(v: &Value) -> Result<&Relation<Value>, LangError> {
    match v {
        Value::Relation(r) => Ok(r),
        other => Err(expected("a relation", other)),
    }
}

pub(super) fn vector(v: &Value) -> Result<&Vector, LangError> {
    match v {
        Value::Vector(x) => Ok(x),
        other => Err(expected("a vector", other)),
    }
}

pub(super) fn matrix(v: &Value) -> Result<&Matrix, LangError> {
    match v {
        Value::Matrix(m) => Ok(m),
        other => Err(expected("a matrix", other)),
    }
}

pub(super) fn graph(v: &Value) -> Result<&ValueGraph, LangError> {
    match v {
        Value::Graph(g) => Ok(g),
        other => Err(expected("a graph", other)),
    }
}

pub(super) fn graph_matrix(v: &Value) -> Result<&GraphMatrix<Number>, LangError> {
    match v {
        Value::GraphMatrix(gm) => Ok(gm),
        other => Err(expected("a graph matrix", other)),
    }
}

pub(super) fn tree(v: &Value) -> Result<&BinTree<Value>, LangError> {
    match v {
        Value::Tree(t) => Ok(t),
        other => Err(expected("a tree", other)),
    }
}

pub(super) fn function(v: Value) -> Result<Value, LangError> {
    match v {
        Value::Func(_) => Ok(v),
        other => Err(expected("a function", &other)),
    }
}

pub(super) fn int(i: impl Into<BigInt>) -> Value {
    Value::Int(i.into())
}

pub(super) fn uint(u: BigUint) -> Value {
    Value::Int(BigInt::from(u))
}

pub(super) fn ints<T: Into<BigInt>>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::List(xs.into_iter().map(|x| Value::Int(x.into())).collect())
}

pub(super) fn float_list(xs: &[f64]) -> Value {
    Value::List(xs.iter().map(|&x| Value::Float(x)).collect())
}

pub(super) fn mk_set(xs: Vec<Value>) -> R {
    Ok(Value::Set(Set::from_vec(homogenize(xs, "set")?)))
}

pub(super) fn pair(v: &Value) -> Result<(Value, Value), LangError> {
    match v {
        Value::Tuple(xs) if xs.len() == 2 => Ok((xs[0].clone(), xs[1].clone())),
        other => Err(expected("a pair", other)),
    }
}

/// Builds a relation, bringing both coordinates of every pair to one type.
pub(super) fn mk_relation(pairs: Vec<(Value, Value)>) -> Result<Relation<Value>, LangError> {
    let flat: Vec<Value> = pairs.into_iter().flat_map(|(a, b)| [a, b]).collect();
    let flat = homogenize(flat, "relation")?;
    let mut it = flat.into_iter();
    let mut out = Vec::new();
    while let (Some(a), Some(b)) = (it.next(), it.next()) {
        out.push((a, b));
    }
    Ok(Relation::new(out))
}

pub(super) fn number(v: &Value) -> Result<Number, LangError> {
    v.as_number().ok_or_else(|| match v {
        Value::Int(_) => LangError::type_error(format!("edge weight {v} is too large")),
        other => expected("a number", other),
    })
}

fn triple(v: &Value) -> Result<(Value, Value, Number), LangError> {
    match v {
        Value::Tuple(xs) if xs.len() == 3 => Ok((xs[0].clone(), xs[1].clone(), number(&xs[2])?)),
        other => Err(expected("an edge triple (u,v,w)", other)),
    }
}

pub(super) fn edge_list(v: &Value) -> Result<Vec<ValueEdge>, LangError> {
    match v {
        Value::Edges(es) => Ok(es.clone()),
        Value::Graph(g) => Ok(g.edges().to_vec()),
        other => items(other)?.iter().map(|t| triple(t).map(Edge::from)).collect(),
    }
}

pub(super) fn vertex_set(v: &Value) -> Result<Set<Value>, LangError> {
    match v {
        Value::Vertices(s) => Ok(s.clone()),
        Value::Graph(g) => Ok(g.vertices().clone()),
        other => Ok(Set::from_vec(homogenize(items(other)?, "vertex set")?)),
    }
}

/// Brings vertex labels and edge endpoints to one type and builds the graph.
pub(super) fn mk_graph(vertices: Vec<Value>, edges: Vec<ValueEdge>) -> Result<ValueGraph, LangError> {
    let n = vertices.len();
    let mut labels = vertices;
    for e in &edges {
        labels.push(e.src.clone());
        labels.push(e.dst.clone());
    }
    let labels = homogenize(labels, "graph")?;
    let mut ends = labels[n..].iter();
    let edges: Vec<ValueEdge> = edges
        .into_iter()
        .map(|e| {
            let src = ends.next().expect("endpoint").clone();
            let dst = ends.next().expect("endpoint").clone();
            Edge::new(src, dst, e.weight)
        })
        .collect();
    Ok(Graph::new(Set::from_vec(labels[..n].to_vec()), edges)?)
}

fn number_rows(v: &Value) -> Result<Vec<Vec<Number>>, LangError> {
    items(v)?.iter().map(|row| items(row)?.iter().map(number).collect()).collect()
}

pub(super) fn construct(c: Ctor, args: Vec<Value>) -> R {
    let arg = args.first();
    let one = || arg.expect("constructor arity checked by the parser");
    let v = match c {
        Ctor::Set => match one() {
            Value::Set(s) => Value::Set(s.clone()),
            other => mk_set(items(other)?)?,
        },
        Ctor::Relation => match one() {
            Value::Relation(r) => Value::Relation(r.clone()),
            other => Value::Relation(mk_relation(items(other)?.iter().map(pair).collect::<Result<_, _>>()?)?),
        },
        Ctor::Vector => Value::Vector(Vector::new(floats(one())?)),
        Ctor::Matrix => {
            let rows = items(one())?.iter().map(floats).collect::<Result<Vec<_>, _>>()?;
            Value::Matrix(Matrix::new(rows)?)
        }
        Ctor::Vertices => Value::Vertices(vertex_set(one())?),
        Ctor::Edges => Value::Edges(edge_list(one())?),
        Ctor::Graph => {
            let (vs, es) = match one() {
                Value::Tuple(parts) if parts.len() == 2 => (&parts[0], &parts[1]),
                other => return Err(expected("a (Vertices, Edges) pair", other)),
            };
            Value::Graph(mk_graph(vertex_set(vs)?.into_vec(), edge_list(es)?)?)
        }
        Ctor::GraphMatrix => Value::GraphMatrix(GraphMatrix::new(number_rows(one())?)?),
        Ctor::Node => {
            let left = tree(&args[1])?.clone();
            let right = tree(&args[2])?.clone();
            if matches!(args[0], Value::Func(_)) {
                return Err(LangError::type_error("functions cannot be stored in a tree"));
            }
            Value::Tree(BinTree::node(args[0].clone(), left, right))
        }
        Ctor::Leaf => Value::Tree(BinTree::Leaf),
    };
    Ok(v)
}

pub(super) fn lib<T>(r: crate::error::Result<T>) -> Result<T, LangError> {
    r.map_err(LangError::from)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_known() {
        let total: usize = [logic_sets::ENTRIES, graphs::ENTRIES, numeric::ENTRIES].iter().map(|e| e.len()).sum();
        assert_eq!(total, table().len(), "duplicate builtin name");
        for name in ["xorL", "union", "cartProduct", "symmClosure", "hasEulerCircuitG", "preorder", "toBase", "modExp", "vNorm", "inverse", "combination"] {
            assert!(arity(name).is_some(), "{name}");
        }
    }
}
