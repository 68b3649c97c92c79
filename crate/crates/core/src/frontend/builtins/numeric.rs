use num_integer::Integer;
use num_traits::{Pow, Zero};

use super::*;
use crate::combinatorics;
use crate::linalg::{matrix, vector, MatrixPredicate};
use crate::numtheory::{self as nt, BaseOp};

/// Largest exponent accepted by integer `pow`.
const POW_BOUND: u32 = 100_000;

fn arith(a: &[Value], ints: fn(&BigInt, &BigInt) -> BigInt, floats: fn(f64, f64) -> f64) -> R {
    match (&a[0], &a[1]) {
        (Value::Int(x), Value::Int(y)) => Ok(Value::Int(ints(x, y))),
        (x, y) => Ok(Value::Float(floats(float(x)?, float(y)?))),
    }
}

fn int_div(a: &[Value], f: fn(&BigInt, &BigInt) -> BigInt) -> R {
    let (x, y) = (big(&a[0])?, big(&a[1])?);
    if y.is_zero() {
        return Err(Error::DivisionByZero.into());
    }
    Ok(Value::Int(f(x, y)))
}

fn digits(v: &Value) -> Result<Vec<u32>, LangError> {
    items(v)?.iter().map(u32_of).collect()
}

fn base_op(op: BaseOp, a: &[Value]) -> R {
    let out = lib(nt::base_arith(op, u32_of(&a[0])?, &digits(&a[1])?, &digits(&a[2])?))?;
    Ok(ints(out.digits().iter().copied()))
}

fn modular(a: &[Value], f: fn(&BigInt, &BigInt, &BigInt) -> crate::error::Result<BigInt>) -> R {
    Ok(Value::Int(lib(f(big(&a[0])?, big(&a[1])?, big(&a[2])?))?))
}

fn maybe_int(x: Option<BigInt>) -> Value {
    Value::Maybe(x.map(|i| Box::new(Value::Int(i))))
}

fn u64_of(v: &Value) -> Result<u64, LangError> {
    Ok(usize_of(v)? as u64)
}

fn vectors(v: &Value) -> Result<Vec<Vector>, LangError> {
    items(v)?.iter().map(|x| vector(x).cloned()).collect()
}

fn matrices(v: &Value) -> Result<Vec<Matrix>, LangError> {
    items(v)?.iter().map(|x| matrix(x).cloned()).collect()
}

fn mat(r: crate::error::Result<Matrix>) -> R {
    Ok(Value::Matrix(lib(r)?))
}

fn vec_value(r: crate::error::Result<Vector>) -> R {
    Ok(Value::Vector(lib(r)?))
}

fn pred(p: MatrixPredicate, a: &[Value]) -> R {
    Ok(Value::Bool(matrix(&a[0])?.is(p)))
}

/// Scalar and vector (or matrix) in either order.
fn scalar_and(a: &[Value]) -> Result<(f64, &Value), LangError> {
    match (a[0].as_f64(), a[1].as_f64()) {
        (Some(k), _) => Ok((k, &a[1])),
        (None, Some(k)) => Ok((k, &a[0])),
        _ => Err(expected("a number", &a[0])),
    }
}

/// Applies `f` to a number and expects a number back.
fn map_float(ip: &mut Interpreter, f: &Value, x: f64) -> Result<f64, LangError> {
    let y = ip.apply(f.clone(), Value::Float(x))?;
    float(&y)
}

fn index_1(v: &Value) -> Result<usize, LangError> {
    usize_of(v)
}

pub(super) const ENTRIES: &[Builtin] = &[
    // arithmetic
    b("add", 2, |_, a| arith(&a, |x, y| x + y, |x, y| x + y)),
    b("sub", 2, |_, a| arith(&a, |x, y| x - y, |x, y| x - y)),
    b("mul", 2, |_, a| arith(&a, |x, y| x * y, |x, y| x * y)),
    b("divide", 2, |_, a| {
        let (x, y) = (float(&a[0])?, float(&a[1])?);
        if y == 0.0 {
            return Err(Error::DivisionByZero.into());
        }
        Ok(Value::Float(x / y))
    }),
    b("div", 2, |_, a| int_div(&a, |x, y| x.div_floor(y))),
    b("mod", 2, |_, a| int_div(&a, |x, y| x.mod_floor(y))),
    b("pow", 2, |_, a| match (&a[0], &a[1]) {
        (Value::Int(x), Value::Int(_)) => {
            let e = u32_of(&a[1])?;
            if e > POW_BOUND {
                return Err(Error::BoundExceeded { what: "exponent", bound: POW_BOUND as usize }.into());
            }
            Ok(Value::Int(Pow::pow(x, e)))
        }
        (x, y) => Ok(Value::Float(float(x)?.powf(float(y)?))),
    }),
    b("negate", 1, |_, a| match &a[0] {
        Value::Int(i) => Ok(Value::Int(-i)),
        other => Ok(Value::Float(-float(other)?)),
    }),
    b("compose", 2, |_, a| {
        let mut a = a.into_iter();
        let f = function(a.next().expect("arity"))?;
        let g = function(a.next().expect("arity"))?;
        Ok(Value::Func(Func::Composed(Box::new(f), Box::new(g))))
    }),
    b("flip", 3, |ip, a| {
        let mut a = a.into_iter();
        let (f, x, y) = (a.next().expect("arity"), a.next().expect("arity"), a.next().expect("arity"));
        let partial = ip.apply(f, y)?;
        ip.apply(partial, x)
    }),
    b("id", 1, |_, a| Ok(a.into_iter().next().expect("arity"))),
    // bases
    b("toBase", 2, |_, a| Ok(ints(lib(nt::to_base(u32_of(&a[0])?, big(&a[1])?))?.digits().iter().copied()))),
    b("fromBase", 2, |_, a| Ok(Value::Int(lib(nt::from_base(u32_of(&a[0])?, &digits(&a[1])?))?))),
    b("toAlphaDigits", 1, |_, a| Ok(Value::Str(lib(nt::to_alpha(&digits(&a[0])?))?))),
    b("fromAlphaDigits", 1, |_, a| match &a[0] {
        Value::Str(s) => Ok(ints(lib(nt::from_alpha(s))?)),
        other => Err(expected("a string", other)),
    }),
    b("baseAdd", 3, |_, a| base_op(BaseOp::Add, &a)),
    b("baseSub", 3, |_, a| base_op(BaseOp::Sub, &a)),
    b("baseMult", 3, |_, a| base_op(BaseOp::Mul, &a)),
    b("baseDiv", 3, |_, a| base_op(BaseOp::Div, &a)),
    b("baseExp", 3, |_, a| base_op(BaseOp::Exp, &a)),
    b("fib", 1, |_, a| Ok(uint(lib(nt::fib(u64_of(&a[0])?))?))),
    b("fibSeries", 1, |_, a| Ok(ints(lib(nt::fib_series(u64_of(&a[0])?))?.into_iter().map(BigInt::from)))),
    // modular arithmetic
    b("modAdd", 3, |_, a| modular(&a, nt::mod_add)),
    b("modSub", 3, |_, a| modular(&a, nt::mod_sub)),
    b("modMult", 3, |_, a| modular(&a, nt::mod_mult)),
    b("modExp", 3, |_, a| modular(&a, nt::mod_exp)),
    b("isCongruent", 3, |_, a| Ok(Value::Bool(lib(nt::is_congruent(big(&a[0])?, big(&a[1])?, big(&a[2])?))?))),
    b("findCongruentPair", 3, |_, a| Ok(maybe_int(lib(nt::solve_congruence(big(&a[0])?, big(&a[1])?, big(&a[2])?))?))),
    b("findCongruentPair1", 3, |_, a| {
        Ok(maybe_int(lib(nt::solve_congruence_pos(big(&a[0])?, big(&a[1])?, big(&a[2])?))?))
    }),
    // primes
    b("primesTo", 1, |_, a| Ok(ints(nt::primes_to(u64_of(&a[0])?)))),
    b("primesBetween", 2, |_, a| Ok(ints(nt::primes_between(u64_of(&a[0])?, u64_of(&a[1])?)))),
    b("firstNPrimes", 1, |_, a| Ok(ints(nt::first_n_primes(usize_of(&a[0])?)))),
    b("isPrime", 1, |_, a| match big(&a[0])?.to_biguint() {
        Some(n) => Ok(Value::Bool(nt::is_prime(&n))),
        None => Ok(Value::Bool(false)),
    }),
    b("nextPrime", 1, |_, a| Ok(uint(nt::next_prime(&biguint_of(&a[0])?)))),
    b("primeFactors", 1, |_, a| Ok(ints(lib(nt::prime_factors(&biguint_of(&a[0])?))?))),
    b("lucasLehmer", 1, |_, a| Ok(Value::Bool(nt::lucas_lehmer(u32_of(&a[0])?)))),
    // vectors
    b("vDim", 1, |_, a| Ok(int(vector(&a[0])?.dim()))),
    b("vMag", 1, |_, a| Ok(Value::Float(vector(&a[0])?.magnitude()))),
    b("vec2list", 1, |_, a| Ok(float_list(vector(&a[0])?.as_slice()))),
    b("vAdd", 2, |_, a| vec_value(vector(&a[0])?.add(vector(&a[1])?))),
    b("vAddL", 1, |_, a| vec_value(vector::add_many(&vectors(&a[0])?))),
    b("vSub", 2, |_, a| vec_value(vector(&a[0])?.sub(vector(&a[1])?))),
    b("vSubL", 1, |_, a| vec_value(vector::sub_many(&vectors(&a[0])?))),
    b("innerProd", 2, |_, a| Ok(Value::Float(lib(vector(&a[0])?.inner(vector(&a[1])?))?))),
    b("vAngle", 2, |_, a| Ok(Value::Float(lib(vector(&a[0])?.angle(vector(&a[1])?))?))),
    b("scalarMult", 2, |_, a| {
        let (k, v) = scalar_and(&a)?;
        Ok(Value::Vector(vector(v)?.scale(k)))
    }),
    b("isNullVector", 1, |_, a| Ok(Value::Bool(vector(&a[0])?.is_null()))),
    b("crossProd", 2, |_, a| vec_value(vector(&a[0])?.cross(vector(&a[1])?))),
    b("scalarTripleProd", 3, |_, a| {
        Ok(Value::Float(lib(vector::scalar_triple(vector(&a[0])?, vector(&a[1])?, vector(&a[2])?))?))
    }),
    b("vectorTripleProd", 3, |_, a| vec_value(vector::vector_triple(vector(&a[0])?, vector(&a[1])?, vector(&a[2])?))),
    b("extract", 2, |_, a| Ok(Value::Float(lib(vector(&a[1])?.extract(index_1(&a[0])?))?))),
    b("extractRange", 3, |_, a| vec_value(vector(&a[2])?.extract_range(index_1(&a[0])?, index_1(&a[1])?))),
    b("areOrthogonal", 2, |_, a| Ok(Value::Bool(lib(vector(&a[0])?.is_orthogonal_to(vector(&a[1])?))?))),
    b("vMap", 2, |ip, a| {
        let mut out = Vec::new();
        for &x in vector(&a[1])?.as_slice() {
            out.push(map_float(ip, &a[0], x)?);
        }
        Ok(Value::Vector(Vector::new(out)))
    }),
    b("vNorm", 1, |_, a| vec_value(vector(&a[0])?.normalize())),
    // matrices
    b("mAdd", 2, |_, a| mat(matrix(&a[0])?.add(matrix(&a[1])?))),
    b("mAddL", 1, |_, a| mat(matrix::add_many(&matrices(&a[0])?))),
    b("mSub", 2, |_, a| mat(matrix(&a[0])?.sub(matrix(&a[1])?))),
    b("mSubL", 1, |_, a| mat(matrix::sub_many(&matrices(&a[0])?))),
    b("mTranspose", 1, |_, a| Ok(Value::Matrix(matrix(&a[0])?.transpose()))),
    b("mScalarMult", 2, |_, a| {
        let (k, m) = scalar_and(&a)?;
        Ok(Value::Matrix(matrix(m)?.scale(k)))
    }),
    b("mMult", 2, |_, a| mat(matrix(&a[0])?.mul(matrix(&a[1])?))),
    b("mMultL", 1, |_, a| mat(matrix::mul_many(&matrices(&a[0])?))),
    b("mDiv", 2, |_, a| mat(matrix(&a[0])?.div(matrix(&a[1])?))),
    b("mPower", 2, |_, a| mat(matrix(&a[0])?.power(u32_of(&a[1])?))),
    b("numRows", 1, |_, a| Ok(int(matrix(&a[0])?.num_rows()))),
    b("numCols", 1, |_, a| Ok(int(matrix(&a[0])?.num_cols()))),
    b("mat2list", 1, |_, a| Ok(Value::List(matrix(&a[0])?.rows().iter().map(|r| float_list(r)).collect()))),
    b("determinant", 1, |_, a| Ok(Value::Float(lib(matrix(&a[0])?.determinant())?))),
    b("inverse", 1, |_, a| mat(matrix(&a[0])?.inverse())),
    b("trace", 1, |_, a| Ok(Value::Float(lib(matrix(&a[0])?.trace())?))),
    b("extractRow", 2, |_, a| Ok(float_list(&lib(matrix(&a[1])?.extract_row(index_1(&a[0])?))?))),
    b("extractCol", 2, |_, a| Ok(float_list(&lib(matrix(&a[1])?.extract_col(index_1(&a[0])?))?))),
    b("extractRowRange", 3, |_, a| mat(matrix(&a[2])?.extract_row_range(index_1(&a[0])?, index_1(&a[1])?))),
    b("extractColRange", 3, |_, a| mat(matrix(&a[2])?.extract_col_range(index_1(&a[0])?, index_1(&a[1])?))),
    b("isInvertible", 1, |_, a| pred(MatrixPredicate::Invertible, &a)),
    b("isSkewSymmetric", 1, |_, a| pred(MatrixPredicate::SkewSymmetric, &a)),
    b("isRow", 1, |_, a| pred(MatrixPredicate::Row, &a)),
    b("isColumn", 1, |_, a| pred(MatrixPredicate::Column, &a)),
    b("isSquare", 1, |_, a| pred(MatrixPredicate::Square, &a)),
    b("isOrthogonal", 1, |_, a| pred(MatrixPredicate::Orthogonal, &a)),
    b("isInvolutory", 1, |_, a| pred(MatrixPredicate::Involutory, &a)),
    b("isZeroOne", 1, |_, a| pred(MatrixPredicate::ZeroOne, &a)),
    b("isZero", 1, |_, a| pred(MatrixPredicate::Zero, &a)),
    b("isOne", 1, |_, a| pred(MatrixPredicate::One, &a)),
    b("isUnit", 1, |_, a| pred(MatrixPredicate::Unit, &a)),
    b("zero", 2, |_, a| mat(Matrix::zero(usize_of(&a[0])?, usize_of(&a[1])?))),
    b("zero'", 1, |_, a| mat(Matrix::zero(usize_of(&a[0])?, usize_of(&a[0])?))),
    b("one", 2, |_, a| mat(Matrix::one(usize_of(&a[0])?, usize_of(&a[1])?))),
    b("one'", 1, |_, a| mat(Matrix::one(usize_of(&a[0])?, usize_of(&a[0])?))),
    b("unit", 1, |_, a| mat(Matrix::unit(usize_of(&a[0])?))),
    b("mMap", 2, |ip, a| {
        let mut rows = Vec::new();
        for row in matrix(&a[1])?.rows() {
            let mut out = Vec::with_capacity(row.len());
            for &x in row {
                out.push(map_float(ip, &a[0], x)?);
            }
            rows.push(out);
        }
        mat(Matrix::new(rows))
    }),
    b("solveLinear", 2, |_, a| mat(crate::apps::lineq::solve_linear(matrix(&a[0])?, matrix(&a[1])?))),
    // combinatorics
    b("factorial", 1, |_, a| Ok(uint(lib(combinatorics::factorial(i64_of(&a[0])?))?))),
    b("p", 2, |_, a| Ok(uint(lib(combinatorics::p(i64_of(&a[0])?, i64_of(&a[1])?))?))),
    b("c", 2, |_, a| Ok(uint(lib(combinatorics::c(i64_of(&a[0])?, i64_of(&a[1])?))?))),
    b("permutation", 1, |_, a| {
        let perms = lib(combinatorics::permutation(&items(&a[0])?))?;
        Ok(Value::List(perms.into_iter().map(Value::List).collect()))
    }),
    b("shuffle", 1, |ip, a| Ok(Value::List(combinatorics::shuffle_with(&items(&a[0])?, ip.rng_mut())))),
    b("combination", 2, |_, a| {
        let options = items(&a[1])?.iter().map(items).collect::<Result<Vec<_>, _>>()?;
        let out = lib(combinatorics::combination(usize_of(&a[0])?, &options))?;
        Ok(Value::List(out.into_iter().map(Value::List).collect()))
    }),
];
