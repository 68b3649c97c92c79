//! Directed weighted graphs, in formal `(V, E)` form and as weight matrices.
//!
//! A weight of zero means "no edge" in the matrix form, so zero-weight edges
//! are rejected by every constructor. Edges are kept sorted by `(src, dst)`
//! with at most one edge per ordered pair.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, VecDeque};
use std::fmt::Debug;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::set::Set;

/// Largest vertex count accepted by the Hamiltonian searches.
pub const HAMILTONIAN_BOUND: usize = 10;

/// Numeric edge weight.
pub trait Weight: Copy + PartialEq + PartialOrd + Add<Output = Self> + Debug {
    fn zero() -> Self;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl Weight for i64 {
    fn zero() -> Self {
        0
    }
}

impl Weight for f64 {
    fn zero() -> Self {
        0.0
    }
}

fn cmp_weight<W: Weight>(a: &W, b: &W) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge<L, W> {
    pub src: L,
    pub dst: L,
    pub weight: W,
}

impl<L, W> Edge<L, W> {
    pub fn new(src: L, dst: L, weight: W) -> Self {
        Edge { src, dst, weight }
    }
}

impl<L, W> From<(L, L, W)> for Edge<L, W> {
    fn from((src, dst, weight): (L, L, W)) -> Self {
        Edge { src, dst, weight }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph<L, W> {
    vertices: Set<L>,
    edges: Vec<Edge<L, W>>,
}

/// Square weight matrix. Row and column `i` stand for the `i`-th vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphMatrix<W> {
    rows: Vec<Vec<W>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerHamilton {
    EulerCircuit,
    EulerPath,
    EulerPathNotCircuit,
    HamiltonianCircuit,
    HamiltonianPath,
}

fn label<L: Debug>(l: &L) -> String {
    format!("{l:?}")
}

/// Sorts edges by endpoints and merges duplicates, rejecting conflicts.
fn normalize_edges<L: Ord + Clone + Debug, W: Weight>(mut edges: Vec<Edge<L, W>>) -> Result<Vec<Edge<L, W>>> {
    edges.sort_by(|a, b| (&a.src, &a.dst).cmp(&(&b.src, &b.dst)));
    let mut out: Vec<Edge<L, W>> = Vec::with_capacity(edges.len());
    for e in edges {
        if e.weight.is_zero() {
            return Err(Error::Invalid(format!(
                "edge ({}, {}) has weight zero, which encodes a missing edge",
                label(&e.src),
                label(&e.dst)
            )));
        }
        match out.last() {
            Some(last) if last.src == e.src && last.dst == e.dst => {
                if last.weight != e.weight {
                    return Err(Error::WeightConflict(format!("({}, {})", label(&e.src), label(&e.dst))));
                }
            }
            _ => out.push(e),
        }
    }
    Ok(out)
}

impl<L: Ord + Clone + Debug, W: Weight> Graph<L, W> {
    pub fn new(vertices: Set<L>, edges: impl IntoIterator<Item = Edge<L, W>>) -> Result<Self> {
        let edges = normalize_edges(edges.into_iter().collect())?;
        for e in &edges {
            for end in [&e.src, &e.dst] {
                if !vertices.contains(end) {
                    return Err(Error::UnknownVertex(label(end)));
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn empty() -> Self {
        Graph { vertices: Set::new(), edges: Vec::new() }
    }

    pub fn vertices(&self) -> &Set<L> {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge<L, W>] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, src: &L, dst: &L) -> Option<W> {
        self.edges
            .binary_search_by(|e| (&e.src, &e.dst).cmp(&(src, dst)))
            .ok()
            .map(|i| self.edges[i].weight)
    }

    fn index_of(&self, v: &L) -> Result<usize> {
        self.vertices.as_slice().binary_search(v).map_err(|_| Error::UnknownVertex(label(v)))
    }

    pub fn to_matrix(&self) -> GraphMatrix<W> {
        let n = self.num_vertices();
        let mut rows = vec![vec![W::zero(); n]; n];
        for e in &self.edges {
            // endpoints are validated at construction
            let i = self.index_of(&e.src).expect("edge endpoint");
            let j = self.index_of(&e.dst).expect("edge endpoint");
            rows[i][j] = e.weight;
        }
        GraphMatrix { rows }
    }

    pub fn transpose(&self) -> Self {
        let edges = self.edges.iter().map(|e| Edge::new(e.dst.clone(), e.src.clone(), e.weight)).collect();
        Graph { vertices: self.vertices.clone(), edges: normalize_edges(edges).expect("transpose of a valid graph") }
    }

    /// Every edge has a mirror edge of the same weight.
    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(|e| self.weight(&e.dst, &e.src) == Some(e.weight))
    }

    pub fn is_directed(&self) -> bool {
        !self.is_undirected()
    }

    pub fn is_subgraph_of(&self, other: &Graph<L, W>) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.edges.iter().all(|e| other.weight(&e.src, &e.dst) == Some(e.weight))
    }

    pub fn in_degree(&self, v: &L) -> Result<usize> {
        self.index_of(v)?;
        Ok(self.edges.iter().filter(|e| &e.dst == v).count())
    }

    pub fn out_degree(&self, v: &L) -> Result<usize> {
        self.index_of(v)?;
        Ok(self.edges.iter().filter(|e| &e.src == v).count())
    }

    /// In-degree plus out-degree; a self-loop counts twice.
    pub fn degree(&self, v: &L) -> Result<usize> {
        Ok(self.in_degree(v)? + self.out_degree(v)?)
    }

    pub fn adjacent_nodes(&self, v: &L) -> Result<Set<L>> {
        self.index_of(v)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|e| {
                if &e.src == v {
                    Some(e.dst.clone())
                } else if &e.dst == v {
                    Some(e.src.clone())
                } else {
                    None
                }
            })
            .collect())
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.num_vertices()];
        for e in &self.edges {
            deg[self.index_of(&e.src).expect("edge endpoint")] += 1;
            deg[self.index_of(&e.dst).expect("edge endpoint")] += 1;
        }
        deg
    }

    pub fn count_odd_degree(&self) -> usize {
        self.degrees().iter().filter(|d| *d % 2 == 1).count()
    }

    pub fn count_even_degree(&self) -> usize {
        self.num_vertices() - self.count_odd_degree()
    }

    /// Euler tests use vertex-degree parity only; connectivity is not checked.
    pub fn has(&self, kind: EulerHamilton) -> Result<bool> {
        let odd = self.count_odd_degree();
        Ok(match kind {
            EulerHamilton::EulerCircuit => odd == 0,
            EulerHamilton::EulerPath => odd == 0 || odd == 2,
            EulerHamilton::EulerPathNotCircuit => odd == 2,
            EulerHamilton::HamiltonianCircuit => self.hamiltonian(true)?,
            EulerHamilton::HamiltonianPath => self.hamiltonian(false)?,
        })
    }

    fn successor_lists(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.num_vertices()];
        for e in &self.edges {
            let (i, j) = (self.index_of(&e.src).expect("edge endpoint"), self.index_of(&e.dst).expect("edge endpoint"));
            succ[i].push(j);
        }
        succ
    }

    /// Backtracking search over vertex orderings, following directed edges.
    fn hamiltonian(&self, circuit: bool) -> Result<bool> {
        let n = self.num_vertices();
        if n > HAMILTONIAN_BOUND {
            return Err(Error::BoundExceeded { what: "Hamiltonian search vertex count", bound: HAMILTONIAN_BOUND });
        }
        if n == 0 {
            return Ok(false);
        }
        let succ = self.successor_lists();
        let adj = self.to_matrix();

        fn extend<W: Weight>(
            path: &mut Vec<usize>,
            used: &mut [bool],
            succ: &[Vec<usize>],
            adj: &GraphMatrix<W>,
            circuit: bool,
        ) -> bool {
            let last = *path.last().expect("non-empty path");
            if path.len() == used.len() {
                return !circuit || !adj.rows[last][path[0]].is_zero();
            }
            for &next in &succ[last] {
                if !used[next] {
                    used[next] = true;
                    path.push(next);
                    if extend(path, used, succ, adj, circuit) {
                        return true;
                    }
                    path.pop();
                    used[next] = false;
                }
            }
            false
        }

        // a circuit visits every vertex, so it may as well start at the first
        let starts = if circuit { 0..1 } else { 0..n };
        for start in starts {
            let mut used = vec![false; n];
            used[start] = true;
            if extend(&mut vec![start], &mut used, &succ, &adj, circuit) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn union(&self, other: &Graph<L, W>) -> Result<Self> {
        let vertices = self.vertices.union(&other.vertices);
        let edges = self.edges.iter().chain(&other.edges).cloned();
        Graph::new(vertices, edges)
    }

    pub fn add_vertices(&self, vs: &Set<L>) -> Self {
        Graph { vertices: self.vertices.union(vs), edges: self.edges.clone() }
    }

    pub fn add_edges(&self, edges: impl IntoIterator<Item = Edge<L, W>>) -> Result<Self> {
        Graph::new(self.vertices.clone(), self.edges.iter().cloned().chain(edges))
    }

    /// Shortest distances from `src`. Unreachable vertices map to `None`.
    pub fn dijkstra(&self, src: &L) -> Result<BTreeMap<L, Option<W>>> {
        let s = self.index_of(src)?;
        if let Some(e) = self.edges.iter().find(|e| e.weight.is_negative()) {
            return Err(Error::NegativeWeight(format!("({}, {})", label(&e.src), label(&e.dst))));
        }
        let n = self.num_vertices();
        let mut out: Vec<Vec<(usize, W)>> = vec![Vec::new(); n];
        for e in &self.edges {
            out[self.index_of(&e.src)?].push((self.index_of(&e.dst)?, e.weight));
        }

        struct Entry<W>(W, usize);
        impl<W: Weight> PartialEq for Entry<W> {
            fn eq(&self, other: &Self) -> bool {
                self.cmp(other) == Ordering::Equal
            }
        }
        impl<W: Weight> Eq for Entry<W> {}
        impl<W: Weight> PartialOrd for Entry<W> {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl<W: Weight> Ord for Entry<W> {
            // reversed for a min-heap
            fn cmp(&self, other: &Self) -> Ordering {
                cmp_weight(&other.0, &self.0).then_with(|| other.1.cmp(&self.1))
            }
        }

        let mut dist: Vec<Option<W>> = vec![None; n];
        dist[s] = Some(W::zero());
        let mut heap = BinaryHeap::from([Entry(W::zero(), s)]);
        let mut done = vec![false; n];
        while let Some(Entry(d, u)) = heap.pop() {
            if std::mem::replace(&mut done[u], true) {
                continue;
            }
            for &(v, w) in &out[u] {
                let candidate = d + w;
                if dist[v].is_none_or(|cur| candidate < cur) {
                    dist[v] = Some(candidate);
                    heap.push(Entry(candidate, v));
                }
            }
        }
        Ok(self.vertices.iter().cloned().zip(dist).collect())
    }

    fn undirected_edges(&self) -> Result<Vec<Edge<L, W>>> {
        if !self.is_undirected() {
            return Err(Error::NotUndirected);
        }
        Ok(self.edges.iter().filter(|e| e.src <= e.dst).cloned().collect())
    }

    /// Minimum spanning tree grown from the smallest label.
    pub fn prim(&self) -> Result<Vec<Edge<L, W>>> {
        self.undirected_edges()?;
        let n = self.num_vertices();
        if n == 0 {
            return Ok(Vec::new());
        }
        let mut in_tree = vec![false; n];
        in_tree[0] = true;
        let mut tree = Vec::with_capacity(n - 1);
        for _ in 1..n {
            let best = self
                .edges
                .iter()
                .filter(|e| {
                    in_tree[self.index_of(&e.src).expect("edge endpoint")]
                        && !in_tree[self.index_of(&e.dst).expect("edge endpoint")]
                })
                .min_by(|a, b| cmp_weight(&a.weight, &b.weight).then_with(|| (&a.src, &a.dst).cmp(&(&b.src, &b.dst))))
                .ok_or(Error::Disconnected)?;
            in_tree[self.index_of(&best.dst)?] = true;
            let (lo, hi) = if best.src <= best.dst { (&best.src, &best.dst) } else { (&best.dst, &best.src) };
            tree.push(Edge::new(lo.clone(), hi.clone(), best.weight));
        }
        Ok(tree)
    }

    pub fn kruskal(&self) -> Result<Vec<Edge<L, W>>> {
        let mut edges = self.undirected_edges()?;
        edges.sort_by(|a, b| cmp_weight(&a.weight, &b.weight).then_with(|| (&a.src, &a.dst).cmp(&(&b.src, &b.dst))));
        let n = self.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut tree = Vec::new();
        for e in edges {
            let (a, b) = (find(&mut parent, self.index_of(&e.src)?), find(&mut parent, self.index_of(&e.dst)?));
            if a != b {
                parent[a] = b;
                tree.push(e);
            }
        }
        if n > 0 && tree.len() != n - 1 {
            return Err(Error::Disconnected);
        }
        Ok(tree)
    }

    /// Breadth-first visit order; successors are explored in ascending order.
    pub fn bfs(&self, src: &L) -> Result<Vec<L>> {
        let s = self.index_of(src)?;
        let succ = self.successor_lists();
        let mut seen = vec![false; self.num_vertices()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        let mut order = Vec::new();
        while let Some(u) = queue.pop_front() {
            order.push(self.vertices.as_slice()[u].clone());
            for &v in &succ[u] {
                if !std::mem::replace(&mut seen[v], true) {
                    queue.push_back(v);
                }
            }
        }
        Ok(order)
    }

    /// Depth-first preorder; successors are explored in ascending order.
    pub fn dfs(&self, src: &L) -> Result<Vec<L>> {
        let s = self.index_of(src)?;
        let succ = self.successor_lists();
        let mut seen = vec![false; self.num_vertices()];
        let mut order = Vec::new();
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if std::mem::replace(&mut seen[u], true) {
                continue;
            }
            order.push(self.vertices.as_slice()[u].clone());
            stack.extend(succ[u].iter().rev().filter(|&&v| !seen[v]));
        }
        Ok(order)
    }
}

pub fn vertices_in_edges<L: Ord + Clone, W>(edges: &[Edge<L, W>]) -> Set<L> {
    edges.iter().flat_map(|e| [e.src.clone(), e.dst.clone()]).collect()
}

impl<W: Weight> GraphMatrix<W> {
    pub fn new(rows: Vec<Vec<W>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::Dimension(format!("graph matrix with {n} rows has a row of length {}", bad.len())));
        }
        Ok(GraphMatrix { rows })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<W>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> W {
        self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        GraphMatrix { rows: (0..n).map(|j| (0..n).map(|i| self.rows[i][j]).collect()).collect() }
    }

    pub fn is_undirected(&self) -> bool {
        *self == self.transpose()
    }

    pub fn is_directed(&self) -> bool {
        !self.is_undirected()
    }

    /// Formal graph whose labels are the row indices `0..n`.
    pub fn to_indexed_graph(&self) -> Graph<usize, W> {
        let edges = self.edge_list();
        Graph { vertices: (0..self.dim()).collect(), edges }
    }

    fn edge_list(&self) -> Vec<Edge<usize, W>> {
        let mut edges = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, w) in row.iter().enumerate() {
                if !w.is_zero() {
                    edges.push(Edge::new(i, j, *w));
                }
            }
        }
        edges
    }

    pub fn to_graph<L: Ord + Clone + Debug>(&self, labels: &Set<L>) -> Result<Graph<L, W>> {
        if labels.len() != self.dim() {
            return Err(Error::Dimension(format!("{} labels for a {}x{} matrix", labels.len(), self.dim(), self.dim())));
        }
        let l = labels.as_slice();
        let edges = self.edge_list().into_iter().map(|e| Edge::new(l[e.src].clone(), l[e.dst].clone(), e.weight));
        Graph::new(labels.clone(), edges)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.dim() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.dim() })
        }
    }

    /// Walks of exactly `len` edges from `u` to `v`, counted through powers
    /// of the 0/1 adjacency matrix.
    pub fn num_paths_between(&self, u: usize, v: usize, len: usize) -> Result<BigUint> {
        self.check_index(u)?;
        self.check_index(v)?;
        if len == 0 {
            return Err(Error::Invalid("walk length must be at least 1".into()));
        }
        let n = self.dim();
        let adj: Vec<Vec<BigUint>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|w| if w.is_zero() { BigUint::zero() } else { BigUint::one() }).collect())
            .collect();
        // only row u of the power is needed
        let mut row = adj[u].clone();
        for _ in 1..len {
            row = (0..n).map(|j| (0..n).map(|k| &row[k] * &adj[k][j]).sum()).collect();
        }
        Ok(row[v].clone())
    }

    /// Some walk of length `1..n-1` leads from `u` to `v`.
    pub fn are_connected(&self, u: usize, v: usize) -> Result<bool> {
        self.check_index(u)?;
        self.check_index(v)?;
        let n = self.dim();
        let mut frontier: BTreeSet<usize> = BTreeSet::from([u]);
        for _ in 1..n {
            frontier = frontier
                .iter()
                .flat_map(|&i| (0..n).filter(move |&j| !self.rows[i][j].is_zero()))
                .collect();
            if frontier.contains(&v) {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

pub fn convert<L: Ord + Clone + Debug, W: Weight>(g: &Graph<L, W>) -> GraphMatrix<W> {
    g.to_matrix()
}

pub fn convert_back<L: Ord + Clone + Debug, W: Weight>(gm: &GraphMatrix<W>, labels: &Set<L>) -> Result<Graph<L, W>> {
    gm.to_graph(labels)
}
