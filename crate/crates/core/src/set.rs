//! Finite sets kept as sorted, duplicate-free sequences.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest set accepted by [`power_set`] unless a bound is given explicitly.
pub const POWER_SET_BOUND: usize = 20;

/// A finite set. Elements are stored in strictly ascending order.
///
/// Sets order by cardinality first and lexicographically second, so a set of
/// sets (a power set, for instance) lists smaller subsets before larger ones.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Set<T> {
    elems: Vec<T>,
}

impl<T: Ord> Set<T> {
    pub fn new() -> Self {
        Set { elems: Vec::new() }
    }

    /// Sorts and deduplicates `xs`.
    pub fn from_vec(mut xs: Vec<T>) -> Self {
        xs.sort();
        xs.dedup();
        Set { elems: xs }
    }

    pub fn singleton(x: T) -> Self {
        Set { elems: vec![x] }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.elems.binary_search(x).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.elems.iter()
    }

    pub fn as_slice(&self) -> &[T] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<T> {
        self.elems
    }

    pub fn is_subset(&self, other: &Set<T>) -> bool {
        self.len() <= other.len() && self.iter().all(|x| other.contains(x))
    }

    pub fn is_superset(&self, other: &Set<T>) -> bool {
        other.is_subset(self)
    }

    pub fn is_disjoint(&self, other: &Set<T>) -> bool {
        !self.iter().any(|x| other.contains(x))
    }

    pub fn map<U: Ord>(&self, f: impl FnMut(&T) -> U) -> Set<U> {
        Set::from_vec(self.iter().map(f).collect())
    }

    pub fn try_map<U: Ord, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Set<U>, E> {
        Ok(Set::from_vec(self.iter().map(f).collect::<std::result::Result<_, _>>()?))
    }
}

impl<T: Ord + Clone> Set<T> {
    pub fn union(&self, other: &Set<T>) -> Set<T> {
        set_binary(SetOp::Union, self, other)
    }

    pub fn intersection(&self, other: &Set<T>) -> Set<T> {
        set_binary(SetOp::Intersection, self, other)
    }

    pub fn difference(&self, other: &Set<T>) -> Set<T> {
        set_binary(SetOp::Difference, self, other)
    }

    pub fn to_vec(&self) -> Vec<T> {
        self.elems.clone()
    }
}

impl<T: Ord> Default for Set<T> {
    fn default() -> Self {
        Set::new()
    }
}

impl<T: Ord> FromIterator<T> for Set<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        Set::from_vec(iter.into_iter().collect())
    }
}

impl<T: Ord> From<Vec<T>> for Set<T> {
    fn from(xs: Vec<T>) -> Self {
        Set::from_vec(xs)
    }
}

impl<'a, T> IntoIterator for &'a Set<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.iter()
    }
}

impl<T> IntoIterator for Set<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elems.into_iter()
    }
}

impl<T: Ord> PartialOrd for Set<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Set<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems
            .len()
            .cmp(&other.elems.len())
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

impl<T: fmt::Debug> fmt::Debug for Set<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elems.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

/// Merges two sorted element lists according to `op`.
pub fn set_binary<T: Ord + Clone>(op: SetOp, a: &Set<T>, b: &Set<T>) -> Set<T> {
    let (xs, ys) = (a.as_slice(), b.as_slice());
    let mut out = Vec::with_capacity(match op {
        SetOp::Union => xs.len() + ys.len(),
        _ => xs.len(),
    });
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        match xs[i].cmp(&ys[j]) {
            Ordering::Less => {
                if op != SetOp::Intersection {
                    out.push(xs[i].clone());
                }
                i += 1;
            }
            Ordering::Greater => {
                if op == SetOp::Union {
                    out.push(ys[j].clone());
                }
                j += 1;
            }
            Ordering::Equal => {
                if op != SetOp::Difference {
                    out.push(xs[i].clone());
                }
                i += 1;
                j += 1;
            }
        }
    }
    if op != SetOp::Intersection {
        out.extend_from_slice(&xs[i..]);
    }
    if op == SetOp::Union {
        out.extend_from_slice(&ys[j..]);
    }
    Set { elems: out }
}

pub fn union_many<T: Ord + Clone>(sets: &[Set<T>]) -> Result<Set<T>> {
    fold_many(SetOp::Union, sets)
}

pub fn intersection_many<T: Ord + Clone>(sets: &[Set<T>]) -> Result<Set<T>> {
    fold_many(SetOp::Intersection, sets)
}

fn fold_many<T: Ord + Clone>(op: SetOp, sets: &[Set<T>]) -> Result<Set<T>> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyFold)?;
    Ok(rest.iter().fold(first.clone(), |acc, s| set_binary(op, &acc, s)))
}

/// True when every pair of distinct positions in `sets` is disjoint.
pub fn disjoint_many<T: Ord>(sets: &[Set<T>]) -> bool {
    sets.iter()
        .enumerate()
        .all(|(i, a)| sets[i + 1..].iter().all(|b| a.is_disjoint(b)))
}

pub fn power_set<T: Ord + Clone>(s: &Set<T>) -> Result<Set<Set<T>>> {
    power_set_bounded(s, POWER_SET_BOUND)
}

pub fn power_set_bounded<T: Ord + Clone>(s: &Set<T>, bound: usize) -> Result<Set<Set<T>>> {
    if s.len() > bound {
        return Err(Error::BoundExceeded { what: "power set input", bound });
    }
    let n = s.len();
    let subsets = (0u64..1 << n)
        .map(|mask| {
            // bits are visited low to high so each subset is already sorted
            let elems = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| s.elems[i].clone()).collect();
            Set { elems }
        })
        .collect();
    Ok(Set::from_vec(subsets))
}

pub fn cart_product<T: Ord + Clone, U: Ord + Clone>(a: &Set<T>, b: &Set<U>) -> Set<(T, U)> {
    let elems = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    // nested iteration over two sorted sets is already in lexicographic order
    Set { elems }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(xs: &[i64]) -> Set<i64> {
        Set::from_vec(xs.to_vec())
    }

    fn scan_intersection(a: &Set<i64>, b: &Set<i64>) -> Vec<i64> {
        a.iter().copied().filter(|x| b.iter().any(|y| y == x)).collect()
    }

    #[test]
    fn construction_normalizes() {
        assert_eq!(s(&[2, 1, 2, 3]).into_vec(), vec![1, 2, 3]);
        assert!(s(&[]).is_empty());
    }

    #[test]
    fn binary_operations() {
        assert_eq!(s(&[2, 4, 6]).union(&s(&[1, 2, 3])), s(&[1, 2, 3, 4, 6]));
        let (a, b) = (s(&[1, 2, 3]), s(&[2, 4, 6]));
        assert_eq!(a.intersection(&b).into_vec(), scan_intersection(&a, &b));
        assert_eq!(a.intersection(&b), s(&[2]));
        assert_eq!(a.difference(&s(&[])), a);
        assert_eq!(a.difference(&b), s(&[1, 3]));
        assert_eq!(union_many(&[a.clone(), b.clone(), s(&[9])]).unwrap(), s(&[1, 2, 3, 4, 6, 9]));
        assert_eq!(intersection_many::<i64>(&[]), Err(Error::EmptyFold));
    }

    #[test]
    fn predicates() {
        let odd = s(&[1, 3, 5, 7, 9]);
        let even = s(&[2, 4, 6, 8, 10]);
        assert!(odd.is_disjoint(&even));
        assert!(s(&[]).is_subset(&odd));
        assert!(s(&[1, 2, 3]).contains(&2));
        assert!(odd.is_superset(&s(&[3, 9])));
        assert!(disjoint_many(&[odd.clone(), even, s(&[11])]));
        assert!(!disjoint_many(&[odd.clone(), s(&[0]), s(&[9])]));
    }

    #[test]
    fn power_sets() {
        let empty = power_set(&s(&[])).unwrap();
        assert_eq!(empty.into_vec(), vec![s(&[])]);
        // every bitmask over {1,2}
        let ps = power_set(&s(&[1, 2])).unwrap();
        assert_eq!(ps.into_vec(), vec![s(&[]), s(&[1]), s(&[2]), s(&[1, 2])]);
        assert_eq!(power_set(&s(&[1, 2, 3])).unwrap().len(), 8);
        let big: Set<i64> = (0..21).collect();
        assert!(matches!(power_set(&big), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn cartesian_products() {
        let p = cart_product(&s(&[1, 2]), &s(&[3, 4]));
        assert_eq!(p.into_vec(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        let p = cart_product(&s(&[1, 2, 3]), &s(&[2, 4, 6]));
        assert_eq!(
            p.into_vec(),
            vec![(1, 2), (1, 4), (1, 6), (2, 2), (2, 4), (2, 6), (3, 2), (3, 4), (3, 6)]
        );
        assert!(cart_product(&s(&[1]), &s(&[])).is_empty());
    }

    #[test]
    fn mapping() {
        assert_eq!(s(&[1, 2, 3]).len(), 3);
        assert_eq!(s(&[1, 2, 3]).map(|x| x * x), s(&[1, 4, 9]));
        assert_eq!(s(&[1, 2]).map(|_| 0), s(&[0]));
    }

    fn small_set() -> impl Strategy<Value = Set<i64>> {
        prop::collection::vec(-30i64..30, 0..50).prop_map(Set::from_vec)
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(a in small_set()) {
            prop_assert_eq!(Set::from_vec(a.to_vec()), a);
        }

        #[test]
        fn lattice_laws(a in small_set(), b in small_set(), c in small_set()) {
            prop_assert_eq!(a.union(&b), b.union(&a));
            prop_assert_eq!(a.intersection(&b), b.intersection(&a));
            prop_assert_eq!(a.union(&b).union(&c), a.union(&b.union(&c)));
            prop_assert_eq!(a.intersection(&b).intersection(&c), a.intersection(&b.intersection(&c)));
            prop_assert_eq!(a.union(&a), a.clone());
            prop_assert_eq!(a.intersection(&a), a.clone());
        }

        #[test]
        fn subset_antisymmetry_and_disjointness(a in small_set(), b in small_set()) {
            prop_assert_eq!(a.is_subset(&b) && b.is_subset(&a), a == b);
            prop_assert_eq!(a.is_disjoint(&b), a.intersection(&b).is_empty());
            prop_assert_eq!(cart_product(&a, &b).len(), a.len() * b.len());
        }

        #[test]
        fn power_set_cardinality(xs in prop::collection::vec(0i64..100, 0..=10)) {
            let a = Set::from_vec(xs);
            prop_assert_eq!(power_set(&a).unwrap().len(), 1usize << a.len());
        }
    }
}
