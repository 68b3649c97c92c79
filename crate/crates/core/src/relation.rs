//! Binary relations over a single element type.
//!
//! Every property predicate is judged over the relation's own universe, the
//! set of values that appear in either coordinate of some pair.

use crate::error::{invalid, Result};
use crate::set::{self, Set, SetOp};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation<T> {
    pairs: Set<(T, T)>,
}

impl<T: Ord> PartialOrd for Relation<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Relation<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.pairs.cmp(&other.pairs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Reflexive,
    Irreflexive,
    Symmetric,
    Asymmetric,
    Antisymmetric,
    Transitive,
    Equivalence,
    WeakPartialOrder,
    StrictPartialOrder,
    WeakTotalOrder,
    StrictTotalOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureKind {
    Reflexive,
    Symmetric,
    Transitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationOp {
    Union,
    Intersection,
    Difference,
    Compose,
}

pub fn first<T: Clone>(pair: &(T, T)) -> T {
    pair.0.clone()
}

pub fn second<T: Clone>(pair: &(T, T)) -> T {
    pair.1.clone()
}

impl<T: Ord + Clone> Relation<T> {
    pub fn new(pairs: impl IntoIterator<Item = (T, T)>) -> Self {
        Relation { pairs: pairs.into_iter().collect() }
    }

    pub fn from_set(pairs: Set<(T, T)>) -> Self {
        Relation { pairs }
    }

    pub fn pairs(&self) -> &Set<(T, T)> {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, a: &T, b: &T) -> bool {
        // tuples of references cannot be searched directly, clone the probe
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    pub fn to_vec(&self) -> Vec<(T, T)> {
        self.pairs.to_vec()
    }

    /// Values appearing in either coordinate.
    pub fn element_set(&self) -> Set<T> {
        self.pairs.iter().flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
    }

    /// First coordinates in relation order, without repeats.
    pub fn firsts(&self) -> Vec<T> {
        dedup_in_order(self.pairs.iter().map(|p| p.0.clone()))
    }

    pub fn seconds(&self) -> Vec<T> {
        dedup_in_order(self.pairs.iter().map(|p| p.1.clone()))
    }

    pub fn inverse(&self) -> Relation<T> {
        Relation::new(self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())))
    }

    pub fn compose(&self, other: &Relation<T>) -> Relation<T> {
        let mut out = Vec::new();
        for (a, b) in &self.pairs {
            // pairs of `other` are sorted by first coordinate
            let slice = other.pairs.as_slice();
            let start = slice.partition_point(|(x, _)| x < b);
            out.extend(slice[start..].iter().take_while(|(x, _)| x == b).map(|(_, c)| (a.clone(), c.clone())));
        }
        Relation::new(out)
    }

    pub fn is(&self, property: Property) -> bool {
        relation_property(property, self)
    }

    pub fn closure(&self, kind: ClosureKind) -> Relation<T> {
        closure(kind, self)
    }

    fn comparable_universe(&self) -> bool {
        let universe = self.element_set();
        let u = universe.as_slice();
        u.iter()
            .enumerate()
            .all(|(i, a)| u[i + 1..].iter().all(|b| self.contains(a, b) || self.contains(b, a)))
    }
}

fn dedup_in_order<T: Ord + Clone>(items: impl Iterator<Item = T>) -> Vec<T> {
    let mut seen = std::collections::BTreeSet::new();
    items.filter(|x| seen.insert(x.clone())).collect()
}

pub fn relation_property<T: Ord + Clone>(kind: Property, r: &Relation<T>) -> bool {
    use Property::*;
    match kind {
        Reflexive => r.element_set().iter().all(|a| r.contains(a, a)),
        Irreflexive => r.pairs.iter().all(|(a, b)| a != b),
        Symmetric => r.pairs.iter().all(|(a, b)| r.contains(b, a)),
        Asymmetric => r.pairs.iter().all(|(a, b)| !r.contains(b, a)),
        Antisymmetric => r.pairs.iter().all(|(a, b)| a == b || !r.contains(b, a)),
        Transitive => r.compose(r).pairs.is_subset(&r.pairs),
        Equivalence => [Reflexive, Symmetric, Transitive].iter().all(|&k| r.is(k)),
        WeakPartialOrder => [Reflexive, Antisymmetric, Transitive].iter().all(|&k| r.is(k)),
        StrictPartialOrder => [Irreflexive, Asymmetric, Transitive].iter().all(|&k| r.is(k)),
        WeakTotalOrder => r.is(WeakPartialOrder) && r.comparable_universe(),
        StrictTotalOrder => r.is(StrictPartialOrder) && r.comparable_universe(),
    }
}

pub fn relation_algebra<T: Ord + Clone>(op: RelationOp, a: &Relation<T>, b: &Relation<T>) -> Relation<T> {
    let set_op = match op {
        RelationOp::Union => SetOp::Union,
        RelationOp::Intersection => SetOp::Intersection,
        RelationOp::Difference => SetOp::Difference,
        RelationOp::Compose => return a.compose(b),
    };
    Relation { pairs: set::set_binary(set_op, &a.pairs, &b.pairs) }
}

pub fn union_many<T: Ord + Clone>(rs: &[Relation<T>]) -> Result<Relation<T>> {
    let sets: Vec<_> = rs.iter().map(|r| r.pairs.clone()).collect();
    Ok(Relation { pairs: set::union_many(&sets)? })
}

pub fn intersection_many<T: Ord + Clone>(rs: &[Relation<T>]) -> Result<Relation<T>> {
    let sets: Vec<_> = rs.iter().map(|r| r.pairs.clone()).collect();
    Ok(Relation { pairs: set::intersection_many(&sets)? })
}

/// `r` composed with itself `k` times; `k = -1` gives the inverse relation.
pub fn r_power<T: Ord + Clone>(r: &Relation<T>, k: i64) -> Result<Relation<T>> {
    match k {
        -1 => Ok(r.inverse()),
        k if k >= 1 => Ok((1..k).fold(r.clone(), |acc, _| acc.compose(r))),
        _ => invalid(format!("relation power {k} is undefined (use k >= 1 or k = -1)")),
    }
}

pub fn closure<T: Ord + Clone>(kind: ClosureKind, r: &Relation<T>) -> Relation<T> {
    match kind {
        ClosureKind::Reflexive => {
            let diagonal = Relation::new(r.element_set().into_iter().map(|a| (a.clone(), a)));
            relation_algebra(RelationOp::Union, r, &diagonal)
        }
        ClosureKind::Symmetric => relation_algebra(RelationOp::Union, r, &r.inverse()),
        ClosureKind::Transitive => {
            let mut current = r.clone();
            loop {
                let next = relation_algebra(RelationOp::Union, &current, &current.compose(&current));
                if next.len() == current.len() {
                    return current;
                }
                current = next;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel(pairs: &[(i64, i64)]) -> Relation<i64> {
        Relation::new(pairs.iter().copied())
    }

    #[test]
    fn element_sets_and_projections() {
        assert_eq!(rel(&[(1, 2), (2, 3)]).element_set().into_vec(), vec![1, 2, 3]);
        assert!(rel(&[]).element_set().is_empty());
        assert_eq!(rel(&[(1, 2), (1, 3)]).firsts(), vec![1]);
        assert_eq!(rel(&[(1, 3), (2, 1), (4, 3)]).seconds(), vec![3, 1]);
        assert_eq!(first(&(1, 2)), 1);
        assert_eq!(second(&(1, 2)), 2);
    }

    #[test]
    fn properties() {
        assert!(!rel(&[(1, 1), (1, 2), (2, 1)]).is(Property::Transitive));
        assert!(rel(&[(1, 1), (1, 2), (2, 1), (2, 2)]).is(Property::Transitive));
        assert!(rel(&[]).is(Property::Reflexive));
        let r = rel(&[(1, 1), (1, 2), (2, 2)]);
        assert!(r.is(Property::Reflexive) && r.is(Property::Antisymmetric) && r.is(Property::Transitive));
        assert!(r.is(Property::WeakPartialOrder));
        assert!(r.is(Property::WeakTotalOrder));
        assert!(!r.is(Property::StrictPartialOrder));
        let lt = rel(&[(1, 2), (1, 3), (2, 3)]);
        assert!(lt.is(Property::StrictTotalOrder));
        let divides = rel(&[(1, 1), (1, 2), (1, 3), (2, 2), (3, 3)]);
        assert!(divides.is(Property::WeakPartialOrder));
        assert!(!divides.is(Property::WeakTotalOrder));
        assert!(rel(&[(1, 1), (1, 2), (2, 1), (2, 2)]).is(Property::Equivalence));
    }

    #[test]
    fn algebra_and_powers() {
        assert_eq!(r_power(&rel(&[(1, 3)]), -1).unwrap(), rel(&[(3, 1)]));
        assert_eq!(relation_algebra(RelationOp::Compose, &rel(&[(1, 2)]), &rel(&[(2, 3)])), rel(&[(1, 3)]));
        let r = rel(&[(1, 2), (2, 3)]);
        assert_eq!(relation_algebra(RelationOp::Union, &r, &r), r);
        assert_eq!(r_power(&r, 2).unwrap(), rel(&[(1, 3)]));
        assert_eq!(r_power(&r, 1).unwrap(), r);
        assert!(r_power(&r, 0).is_err());
        assert!(r_power(&r, -2).is_err());
        assert_eq!(relation_algebra(RelationOp::Difference, &r, &rel(&[(1, 2)])), rel(&[(2, 3)]));
        assert_eq!(union_many(&[r.clone(), rel(&[(5, 5)])]).unwrap().len(), 3);
        assert_eq!(intersection_many(&[r.clone(), rel(&[(2, 3)])]).unwrap(), rel(&[(2, 3)]));
    }

    #[test]
    fn closures() {
        assert_eq!(
            closure(ClosureKind::Symmetric, &rel(&[(1, 1), (1, 3)])),
            rel(&[(1, 1), (1, 3), (3, 1)])
        );
        assert_eq!(closure(ClosureKind::Reflexive, &rel(&[(1, 2)])), rel(&[(1, 1), (1, 2), (2, 2)]));
        let t = rel(&[(1, 1), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(closure(ClosureKind::Transitive, &t), t);
        assert_eq!(
            closure(ClosureKind::Transitive, &rel(&[(1, 2), (2, 3), (3, 4)])),
            rel(&[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        );
    }

    /// Boolean-matrix transitive closure by Warshall's algorithm.
    fn warshall(r: &Relation<i64>) -> Relation<i64> {
        let u = r.element_set().into_vec();
        let n = u.len();
        let mut m = vec![vec![false; n]; n];
        for (i, a) in u.iter().enumerate() {
            for (j, b) in u.iter().enumerate() {
                m[i][j] = r.contains(a, b);
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    m[i][j] = m[i][j] || (m[i][k] && m[k][j]);
                }
            }
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if m[i][j] {
                    out.push((u[i], u[j]));
                }
            }
        }
        Relation::new(out)
    }

    fn small_relation() -> impl Strategy<Value = Relation<i64>> {
        prop::collection::vec((0i64..8, 0i64..8), 0..20).prop_map(Relation::new)
    }

    proptest! {
        #[test]
        fn closure_laws(r in small_relation()) {
            for (kind, prop) in [
                (ClosureKind::Reflexive, Property::Reflexive),
                (ClosureKind::Symmetric, Property::Symmetric),
                (ClosureKind::Transitive, Property::Transitive),
            ] {
                let c = closure(kind, &r);
                prop_assert_eq!(closure(kind, &c), c.clone());
                prop_assert!(r.pairs().is_subset(c.pairs()));
                prop_assert!(c.is(prop));
            }
            prop_assert_eq!(closure(ClosureKind::Transitive, &r), warshall(&r));
        }

        #[test]
        fn definitional_consistency(r in small_relation()) {
            prop_assert_eq!(
                r.is(Property::Equivalence),
                r.is(Property::Reflexive) && r.is(Property::Symmetric) && r.is(Property::Transitive)
            );
            prop_assert_eq!(r_power(&r_power(&r, -1).unwrap(), -1).unwrap(), r);
        }
    }
}
