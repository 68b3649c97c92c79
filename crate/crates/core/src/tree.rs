//! Immutable binary search trees.

use std::cmp::Ordering;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum BinTree<T> {
    #[default]
    Leaf,
    Node(Box<T>, Box<BinTree<T>>, Box<BinTree<T>>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Traversal {
    In,
    Pre,
    Post,
}

impl<T> BinTree<T> {
    pub fn node(value: T, left: BinTree<T>, right: BinTree<T>) -> Self {
        BinTree::Node(Box::new(value), Box::new(left), Box::new(right))
    }

    pub fn singleton(value: T) -> Self {
        BinTree::node(value, BinTree::Leaf, BinTree::Leaf)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinTree::Leaf)
    }

    pub fn height(&self) -> usize {
        match self {
            BinTree::Leaf => 0,
            BinTree::Node(_, l, r) => 1 + l.height().max(r.height()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            BinTree::Leaf => 0,
            BinTree::Node(_, l, r) => 1 + l.size() + r.size(),
        }
    }

    /// Strict balance: at every node both subtrees have equal height.
    pub fn is_balanced(&self) -> bool {
        match self {
            BinTree::Leaf => true,
            BinTree::Node(_, l, r) => l.is_balanced() && r.is_balanced() && l.height() == r.height(),
        }
    }

    pub fn traverse(&self, kind: Traversal) -> Vec<&T> {
        fn walk<'a, T>(t: &'a BinTree<T>, kind: Traversal, out: &mut Vec<&'a T>) {
            if let BinTree::Node(x, l, r) = t {
                if kind == Traversal::Pre {
                    out.push(x);
                }
                walk(l, kind, out);
                if kind == Traversal::In {
                    out.push(x);
                }
                walk(r, kind, out);
                if kind == Traversal::Post {
                    out.push(x);
                }
            }
        }
        let mut out = Vec::with_capacity(self.size());
        walk(self, kind, &mut out);
        out
    }

    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> U) -> BinTree<U> {
        match self {
            BinTree::Leaf => BinTree::Leaf,
            BinTree::Node(x, l, r) => {
                let x = f(x);
                let l = l.map(f);
                BinTree::node(x, l, r.map(f))
            }
        }
    }
}

impl<T: Clone> BinTree<T> {
    pub fn preorder(&self) -> Vec<T> {
        self.traverse(Traversal::Pre).into_iter().cloned().collect()
    }

    pub fn inorder(&self) -> Vec<T> {
        self.traverse(Traversal::In).into_iter().cloned().collect()
    }

    pub fn postorder(&self) -> Vec<T> {
        self.traverse(Traversal::Post).into_iter().cloned().collect()
    }

    /// Mirror image: children swapped at every node.
    pub fn reflect(&self) -> Self {
        match self {
            BinTree::Leaf => BinTree::Leaf,
            BinTree::Node(x, l, r) => BinTree::node((**x).clone(), r.reflect(), l.reflect()),
        }
    }
}

impl<T: Ord + Clone> BinTree<T> {
    /// Binary-search-tree insertion. Inserting a present value is a no-op.
    pub fn insert(&self, value: T) -> Self {
        match self {
            BinTree::Leaf => BinTree::singleton(value),
            BinTree::Node(x, l, r) => match value.cmp(x) {
                Ordering::Less => BinTree::node((**x).clone(), l.insert(value), (**r).clone()),
                Ordering::Greater => BinTree::node((**x).clone(), (**l).clone(), r.insert(value)),
                Ordering::Equal => self.clone(),
            },
        }
    }

    pub fn search(&self, value: &T) -> bool {
        self.depth(value).is_ok()
    }

    /// Edges from the root to the first node holding `value` on the search path.
    pub fn depth(&self, value: &T) -> Result<usize> {
        let mut t = self;
        let mut d = 0;
        while let BinTree::Node(x, l, r) = t {
            match value.cmp(x) {
                Ordering::Equal => return Ok(d),
                Ordering::Less => t = l,
                Ordering::Greater => t = r,
            }
            d += 1;
        }
        Err(Error::NotFound("tree value".into()))
    }
}

impl<T: Ord + Clone> FromIterator<T> for BinTree<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        iter.into_iter().fold(BinTree::Leaf, |t, x| t.insert(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn leaf() -> BinTree<i64> {
        BinTree::Leaf
    }

    fn n(x: i64, l: BinTree<i64>, r: BinTree<i64>) -> BinTree<i64> {
        BinTree::node(x, l, r)
    }

    fn sample() -> BinTree<i64> {
        n(
            4,
            n(2, BinTree::singleton(1), BinTree::singleton(3)),
            n(7, n(5, leaf(), BinTree::singleton(6)), BinTree::singleton(8)),
        )
    }

    #[test]
    fn traversals() {
        assert_eq!(sample().preorder(), vec![4, 2, 1, 3, 7, 5, 6, 8]);
        assert_eq!(sample().inorder(), (1..=8).collect::<Vec<_>>());
        assert_eq!(sample().postorder(), vec![1, 3, 2, 6, 5, 8, 7, 4]);
        assert!(leaf().postorder().is_empty());
    }

    #[test]
    fn search_and_metrics() {
        let t = sample();
        assert!(t.search(&7));
        assert!(!t.search(&9));
        assert!(!t.is_balanced());
        assert_eq!(t.size(), 8);
        assert_eq!(t.height(), 4);
        assert_eq!(t.depth(&4).unwrap(), 0);
        assert_eq!(t.depth(&6).unwrap(), 3);
        assert!(t.depth(&10).is_err());
        assert_eq!(t.reflect().reflect(), t);
        assert!(n(2, BinTree::singleton(1), BinTree::singleton(3)).is_balanced());
        assert_eq!(t.insert(5), t);
    }

    /// Preorder of the mirror image: node, then right subtree, then left.
    fn mirrored_preorder(t: &BinTree<i64>) -> Vec<i64> {
        match t {
            BinTree::Leaf => vec![],
            BinTree::Node(x, l, r) => {
                let mut out = vec![**x];
                out.extend(mirrored_preorder(r));
                out.extend(mirrored_preorder(l));
                out
            }
        }
    }

    proptest! {
        #[test]
        fn bst_invariants(xs in prop::collection::vec(-50i64..50, 0..40), probe in -50i64..50) {
            let t: BinTree<i64> = xs.iter().copied().collect();
            let inorder = t.inorder();
            prop_assert!(inorder.windows(2).all(|w| w[0] < w[1]));
            prop_assert_eq!(t.size(), t.preorder().len());
            prop_assert_eq!(t.size(), inorder.len());
            prop_assert_eq!(t.size(), t.postorder().len());
            prop_assert!(t.height() <= t.size());
            if t.is_balanced() {
                prop_assert!(t.size() + 1 >= 1usize << t.height());
            }
            prop_assert_eq!(t.reflect().reflect(), t.clone());
            prop_assert_eq!(t.reflect().preorder(), mirrored_preorder(&t));
            prop_assert!(t.insert(probe).search(&probe));
        }
    }
}
