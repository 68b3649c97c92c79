use super::*;
use crate::logic::{fold_connective, Connective};
use crate::relation::{self, ClosureKind, Property, RelationOp};
use crate::set::{self as sets, SetOp};

fn conn(c: Connective, a: &[Value]) -> R {
    Ok(Value::Bool(c.apply(boolean(&a[0])?, boolean(&a[1])?)))
}

fn fold(c: Connective, a: &[Value]) -> R {
    Ok(Value::Bool(lib(fold_connective(c, &bools(&a[0])?))?))
}

fn sets_of(v: &Value) -> Result<Vec<Set<Value>>, LangError> {
    items(v)?.iter().map(|s| set(s).cloned()).collect()
}

fn set_op(op: SetOp, a: &[Value]) -> R {
    let merged = sets::set_binary(op, set(&a[0])?, set(&a[1])?);
    mk_set(merged.into_vec())
}

fn member(x: &Value, s: &Set<Value>) -> bool {
    s.contains(x) || x.as_f64().is_some_and(|f| s.contains(&Value::Float(f)))
}

fn pairs_value(r: &Relation<Value>) -> Value {
    Value::List(r.to_vec().into_iter().map(|(a, b)| Value::Tuple(vec![a, b])).collect())
}

fn relations_of(v: &Value) -> Result<Vec<Relation<Value>>, LangError> {
    items(v)?.iter().map(|r| relation(r).cloned()).collect()
}

fn prop(p: Property, a: &[Value]) -> R {
    Ok(Value::Bool(relation(&a[0])?.is(p)))
}

fn r_op(op: RelationOp, a: &[Value]) -> R {
    let out = relation::relation_algebra(op, relation(&a[0])?, relation(&a[1])?);
    Ok(Value::Relation(mk_relation(out.to_vec())?))
}

fn closure(k: ClosureKind, a: &[Value]) -> R {
    Ok(Value::Relation(relation(&a[0])?.closure(k)))
}

pub(super) const ENTRIES: &[Builtin] = &[
    b("and'", 2, |_, a| conn(Connective::And, &a)),
    b("or'", 2, |_, a| conn(Connective::Or, &a)),
    b("and", 2, |_, a| conn(Connective::And, &a)),
    b("or", 2, |_, a| conn(Connective::Or, &a)),
    b("xor", 2, |_, a| conn(Connective::Xor, &a)),
    b("xnor", 2, |_, a| conn(Connective::Xnor, &a)),
    b("nand", 2, |_, a| conn(Connective::Nand, &a)),
    b("nor", 2, |_, a| conn(Connective::Nor, &a)),
    b("implies", 2, |_, a| conn(Connective::Implies, &a)),
    b("iff", 2, |_, a| conn(Connective::Iff, &a)),
    b("equals", 2, |_, a| Ok(Value::Bool(a[0] == a[1]))),
    b("not", 1, |_, a| Ok(Value::Bool(!boolean(&a[0])?))),
    b("notL", 1, |_, a| Ok(Value::List(bools(&a[0])?.into_iter().map(|x| Value::Bool(!x)).collect()))),
    b("andL", 1, |_, a| fold(Connective::And, &a)),
    b("orL", 1, |_, a| fold(Connective::Or, &a)),
    b("xorL", 1, |_, a| fold(Connective::Xor, &a)),
    b("xnorL", 1, |_, a| fold(Connective::Xnor, &a)),
    b("nandL", 1, |_, a| fold(Connective::Nand, &a)),
    b("norL", 1, |_, a| fold(Connective::Nor, &a)),
    // sets
    b("set2list", 1, |_, a| Ok(Value::List(set(&a[0])?.to_vec()))),
    b("union", 2, |_, a| {
        let mut xs = set(&a[0])?.to_vec();
        xs.extend(set(&a[1])?.iter().cloned());
        mk_set(xs)
    }),
    b("unionL", 1, |_, a| {
        let all = sets_of(&a[0])?;
        if all.is_empty() {
            return Err(Error::EmptyFold.into());
        }
        mk_set(all.into_iter().flatten().collect())
    }),
    b("intersection", 2, |_, a| set_op(SetOp::Intersection, &a)),
    b("intersectionL", 1, |_, a| Ok(Value::Set(lib(sets::intersection_many(&sets_of(&a[0])?))?))),
    b("difference", 2, |_, a| set_op(SetOp::Difference, &a)),
    b("isMemberOf", 2, |_, a| Ok(Value::Bool(member(&a[0], set(&a[1])?)))),
    b("cardinality", 1, |_, a| Ok(int(set(&a[0])?.len()))),
    b("isNullSet", 1, |_, a| Ok(Value::Bool(set(&a[0])?.is_empty()))),
    b("isSubset", 2, |_, a| Ok(Value::Bool(set(&a[0])?.is_subset(set(&a[1])?)))),
    b("isSuperset", 2, |_, a| Ok(Value::Bool(set(&a[0])?.is_superset(set(&a[1])?)))),
    b("powerSet", 1, |_, a| {
        let ps = lib(sets::power_set(set(&a[0])?))?;
        Ok(Value::Set(ps.map(|s| Value::Set(s.clone()))))
    }),
    b("cartProduct", 2, |_, a| {
        let prod = sets::cart_product(set(&a[0])?, set(&a[1])?);
        Ok(Value::List(prod.into_iter().map(|(x, y)| Value::Tuple(vec![x, y])).collect()))
    }),
    b("disjoint", 2, |_, a| Ok(Value::Bool(set(&a[0])?.is_disjoint(set(&a[1])?)))),
    b("disjointL", 1, |_, a| Ok(Value::Bool(sets::disjoint_many(&sets_of(&a[0])?)))),
    b("sMap", 2, |ip, a| {
        let f = function(a[0].clone())?;
        let mut out = Vec::new();
        for x in set(&a[1])? {
            out.push(ip.apply(f.clone(), x.clone())?);
        }
        mk_set(out)
    }),
    // relations
    b("relation2list", 1, |_, a| Ok(pairs_value(relation(&a[0])?))),
    b("getFirst", 1, |_, a| Ok(pair(&a[0])?.0)),
    b("getSecond", 1, |_, a| Ok(pair(&a[0])?.1)),
    b("elemSet", 1, |_, a| Ok(Value::Set(relation(&a[0])?.element_set()))),
    b("returnFirstElems", 1, |_, a| Ok(Value::Set(Set::from_vec(relation(&a[0])?.firsts())))),
    b("returnSecondElems", 1, |_, a| Ok(Value::Set(Set::from_vec(relation(&a[0])?.seconds())))),
    b("isReflexive", 1, |_, a| prop(Property::Reflexive, &a)),
    b("isIrreflexive", 1, |_, a| prop(Property::Irreflexive, &a)),
    b("isSymmetric", 1, |_, a| match &a[0] {
        Value::Matrix(m) => Ok(Value::Bool(m.is(crate::linalg::MatrixPredicate::Symmetric))),
        _ => prop(Property::Symmetric, &a),
    }),
    b("isAsymmetric", 1, |_, a| prop(Property::Asymmetric, &a)),
    b("isAntiSymmetric", 1, |_, a| prop(Property::Antisymmetric, &a)),
    b("isTransitive", 1, |_, a| prop(Property::Transitive, &a)),
    b("isEquivalent", 1, |_, a| prop(Property::Equivalence, &a)),
    b("isWeakPartialOrder", 1, |_, a| prop(Property::WeakPartialOrder, &a)),
    b("isWeakTotalOrder", 1, |_, a| prop(Property::WeakTotalOrder, &a)),
    b("isStrictPartialOrder", 1, |_, a| prop(Property::StrictPartialOrder, &a)),
    b("isStrictTotalOrder", 1, |_, a| prop(Property::StrictTotalOrder, &a)),
    b("rUnion", 2, |_, a| r_op(RelationOp::Union, &a)),
    b("rUnionL", 1, |_, a| {
        let all = lib(relation::union_many(&relations_of(&a[0])?))?;
        Ok(Value::Relation(mk_relation(all.to_vec())?))
    }),
    b("rIntersection", 2, |_, a| r_op(RelationOp::Intersection, &a)),
    b("rIntersectionL", 1, |_, a| Ok(Value::Relation(lib(relation::intersection_many(&relations_of(&a[0])?))?))),
    b("rDifference", 2, |_, a| r_op(RelationOp::Difference, &a)),
    b("rComposite", 2, |_, a| r_op(RelationOp::Compose, &a)),
    b("rPower", 2, |_, a| Ok(Value::Relation(lib(relation::r_power(relation(&a[0])?, i64_of(&a[1])?))?))),
    b("reflClosure", 1, |_, a| closure(ClosureKind::Reflexive, &a)),
    b("symmClosure", 1, |_, a| closure(ClosureKind::Symmetric, &a)),
    b("tranClosure", 1, |_, a| closure(ClosureKind::Transitive, &a)),
];
