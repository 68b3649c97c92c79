use super::*;
use crate::graph::{vertices_in_edges, EulerHamilton};

/// Graph matrices are read as graphs on the vertices `0..n`.
fn indexed(gm: &GraphMatrix<Number>) -> Result<ValueGraph, LangError> {
    let labels = Set::from_vec((0..gm.dim()).map(int).collect());
    lib(gm.to_graph(&labels))
}

fn as_graph(v: &Value) -> Result<ValueGraph, LangError> {
    match v {
        Value::Graph(g) => Ok(g.clone()),
        Value::GraphMatrix(gm) => indexed(gm),
        other => Err(expected("a graph or graph matrix", other)),
    }
}

/// A vertex label, also accepted wrapped as `Vertices [v]`.
fn vertex(v: &Value) -> Result<Value, LangError> {
    match v {
        Value::Vertices(s) if s.len() == 1 => Ok(s.as_slice()[0].clone()),
        Value::Vertices(_) => Err(LangError::type_error("expected a single vertex")),
        other => Ok(other.clone()),
    }
}

fn gm_vertex(gm: &GraphMatrix<Number>, v: &Value) -> Result<usize, LangError> {
    let i = usize_of(&vertex(v)?)?;
    if i >= gm.dim() {
        return Err(Error::IndexOutOfRange { index: i, len: gm.dim() }.into());
    }
    Ok(i)
}

fn edges_value(es: &[ValueEdge]) -> Value {
    Value::Edges(es.to_vec())
}

fn edge_tuples(es: &[ValueEdge]) -> Value {
    Value::List(es.iter().map(|e| Value::Tuple(vec![e.src.clone(), e.dst.clone(), e.weight.to_value()])).collect())
}

fn matrix_value(gm: &GraphMatrix<Number>) -> Value {
    Value::List(gm.rows().iter().map(|r| Value::List(r.iter().map(|w| w.to_value()).collect())).collect())
}

fn has_g(k: EulerHamilton, a: &[Value]) -> R {
    Ok(Value::Bool(lib(graph(&a[0])?.has(k))?))
}

fn has_gm(k: EulerHamilton, a: &[Value]) -> R {
    Ok(Value::Bool(lib(indexed(graph_matrix(&a[0])?)?.has(k))?))
}

fn degree_of(a: &[Value], f: fn(&ValueGraph, &Value) -> crate::error::Result<usize>) -> R {
    let v = vertex(&a[1])?;
    match &a[0] {
        Value::GraphMatrix(gm) => {
            let i = gm_vertex(gm, &v)?;
            Ok(int(lib(f(&indexed(gm)?, &int(i)))?))
        }
        other => Ok(int(lib(f(graph(other)?, &v))?)),
    }
}

fn start_vertex(a: &[Value]) -> Result<(ValueGraph, Value), LangError> {
    let g = as_graph(&a[0])?;
    let v = vertex(&a[1])?;
    if let Value::GraphMatrix(gm) = &a[0] {
        gm_vertex(gm, &v)?;
    }
    Ok((g, v))
}

fn tree_items(xs: Vec<Value>) -> Value {
    Value::List(xs)
}

pub(super) const ENTRIES: &[Builtin] = &[
    b("vertices2list", 1, |_, a| Ok(Value::List(vertex_set(&a[0])?.into_vec()))),
    b("edges2list", 1, |_, a| Ok(edge_tuples(&edge_list(&a[0])?))),
    b("graph2matrix", 1, |_, a| Ok(matrix_value(graph_matrix(&a[0])?))),
    b("getVerticesG", 1, |_, a| Ok(Value::Vertices(graph(&a[0])?.vertices().clone()))),
    b("getVerticesGM", 1, |_, a| Ok(Value::Vertices(Set::from_vec((0..graph_matrix(&a[0])?.dim()).map(int).collect())))),
    b("numVerticesG", 1, |_, a| Ok(int(graph(&a[0])?.num_vertices()))),
    b("numVerticesGM", 1, |_, a| Ok(int(graph_matrix(&a[0])?.dim()))),
    b("getEdgesG", 1, |_, a| Ok(edges_value(graph(&a[0])?.edges()))),
    b("getEdgesGM", 1, |_, a| Ok(edges_value(indexed(graph_matrix(&a[0])?)?.edges()))),
    b("numEdgesG", 1, |_, a| Ok(int(graph(&a[0])?.num_edges()))),
    b("numEdgesGM", 1, |_, a| Ok(int(indexed(graph_matrix(&a[0])?)?.num_edges()))),
    b("convertGM2G", 2, |_, a| {
        let labels = vertex_set(&a[1])?;
        Ok(Value::Graph(lib(graph_matrix(&a[0])?.to_graph(&labels))?))
    }),
    b("convertG2GM", 1, |_, a| Ok(Value::GraphMatrix(graph(&a[0])?.to_matrix()))),
    b("gTransposeG", 1, |_, a| Ok(Value::Graph(graph(&a[0])?.transpose()))),
    b("gTransposeGM", 1, |_, a| Ok(Value::GraphMatrix(graph_matrix(&a[0])?.transpose()))),
    b("isUndirectedG", 1, |_, a| Ok(Value::Bool(graph(&a[0])?.is_undirected()))),
    b("isUndirectedGM", 1, |_, a| Ok(Value::Bool(graph_matrix(&a[0])?.is_undirected()))),
    b("isDirectedG", 1, |_, a| Ok(Value::Bool(graph(&a[0])?.is_directed()))),
    b("isDirectedGM", 1, |_, a| Ok(Value::Bool(graph_matrix(&a[0])?.is_directed()))),
    b("unionG", 2, |_, a| {
        let (x, y) = (graph(&a[0])?, graph(&a[1])?);
        let mut vs = x.vertices().to_vec();
        vs.extend(y.vertices().iter().cloned());
        let mut es = x.edges().to_vec();
        es.extend(y.edges().iter().cloned());
        Ok(Value::Graph(mk_graph(vs, es)?))
    }),
    b("unionGM", 2, |_, a| {
        let (x, y) = (indexed(graph_matrix(&a[0])?)?, indexed(graph_matrix(&a[1])?)?);
        Ok(Value::GraphMatrix(lib(x.union(&y))?.to_matrix()))
    }),
    b("addVerticesG", 2, |_, a| {
        let g = graph(&a[0])?;
        let mut vs = g.vertices().to_vec();
        vs.extend(vertex_set(&a[1])?);
        Ok(Value::Graph(mk_graph(vs, g.edges().to_vec())?))
    }),
    b("addVerticesGM", 2, |_, a| {
        let gm = graph_matrix(&a[0])?;
        let n = gm.dim() + usize_of(&a[1])?;
        let labels = Set::from_vec((0..n).map(int).collect());
        Ok(Value::GraphMatrix(indexed(gm)?.add_vertices(&labels).to_matrix()))
    }),
    b("verticesInEdges", 1, |_, a| Ok(Value::Vertices(vertices_in_edges(&edge_list(&a[0])?)))),
    b("addEdgesG", 2, |_, a| {
        let g = graph(&a[0])?;
        let mut vs = g.vertices().to_vec();
        let new = edge_list(&a[1])?;
        vs.extend(vertices_in_edges(&new));
        let mut es = g.edges().to_vec();
        es.extend(new);
        Ok(Value::Graph(mk_graph(vs, es)?))
    }),
    b("addEdgesGM", 2, |_, a| {
        let gm = graph_matrix(&a[0])?;
        let new = edge_list(&a[1])?;
        for e in &new {
            gm_vertex(gm, &e.src)?;
            gm_vertex(gm, &e.dst)?;
        }
        Ok(Value::GraphMatrix(lib(indexed(gm)?.add_edges(new))?.to_matrix()))
    }),
    b("areConnectedGM", 3, |_, a| {
        let gm = graph_matrix(&a[0])?;
        Ok(Value::Bool(lib(gm.are_connected(gm_vertex(gm, &a[1])?, gm_vertex(gm, &a[2])?))?))
    }),
    b("numPathsBetweenGM", 4, |_, a| {
        let gm = graph_matrix(&a[0])?;
        let (u, v) = (gm_vertex(gm, &a[1])?, gm_vertex(gm, &a[2])?);
        Ok(uint(lib(gm.num_paths_between(u, v, usize_of(&a[3])?))?))
    }),
    b("adjacentNodes", 2, |_, a| {
        let (g, v) = start_vertex(&a)?;
        Ok(Value::Set(lib(g.adjacent_nodes(&v))?))
    }),
    b("inDegree", 2, |_, a| degree_of(&a, |g, v| g.in_degree(v))),
    b("outDegree", 2, |_, a| degree_of(&a, |g, v| g.out_degree(v))),
    b("degree", 2, |_, a| degree_of(&a, |g, v| g.degree(v))),
    b("hasEulerCircuitG", 1, |_, a| has_g(EulerHamilton::EulerCircuit, &a)),
    b("hasEulerCircuitGM", 1, |_, a| has_gm(EulerHamilton::EulerCircuit, &a)),
    b("hasEulerPathG", 1, |_, a| has_g(EulerHamilton::EulerPath, &a)),
    b("hasEulerPathGM", 1, |_, a| has_gm(EulerHamilton::EulerPath, &a)),
    b("hasEulerPathNotCircuitG", 1, |_, a| has_g(EulerHamilton::EulerPathNotCircuit, &a)),
    b("hasEulerPathNotCircuitGM", 1, |_, a| has_gm(EulerHamilton::EulerPathNotCircuit, &a)),
    b("hasHamiltonianCircuitG", 1, |_, a| has_g(EulerHamilton::HamiltonianCircuit, &a)),
    b("hasHamiltonianCircuitGM", 1, |_, a| has_gm(EulerHamilton::HamiltonianCircuit, &a)),
    b("hasHamiltonianPathG", 1, |_, a| has_g(EulerHamilton::HamiltonianPath, &a)),
    b("hasHamiltonianPathGM", 1, |_, a| has_gm(EulerHamilton::HamiltonianPath, &a)),
    b("countOddDegreeV", 1, |_, a| Ok(int(as_graph(&a[0])?.count_odd_degree()))),
    b("countEvenDegreeV", 1, |_, a| Ok(int(as_graph(&a[0])?.count_even_degree()))),
    b("isSubgraphG", 2, |_, a| Ok(Value::Bool(graph(&a[0])?.is_subgraph_of(graph(&a[1])?)))),
    b("isSubgraphGM", 2, |_, a| {
        let (x, y) = (indexed(graph_matrix(&a[0])?)?, indexed(graph_matrix(&a[1])?)?);
        Ok(Value::Bool(x.is_subgraph_of(&y)))
    }),
    b("dijkstra", 2, |_, a| {
        let (g, v) = start_vertex(&a)?;
        let dist = lib(g.dijkstra(&v))?;
        let maybe = |d: Option<Number>| Value::Maybe(d.map(|w| Box::new(w.to_value())));
        Ok(Value::List(dist.into_iter().map(|(v, d)| Value::Tuple(vec![v, maybe(d)])).collect()))
    }),
    b("prim", 1, |_, a| Ok(edges_value(&lib(as_graph(&a[0])?.prim())?))),
    b("kruskal", 1, |_, a| Ok(edges_value(&lib(as_graph(&a[0])?.kruskal())?))),
    b("bfs", 2, |_, a| {
        let (g, v) = start_vertex(&a)?;
        Ok(Value::List(lib(g.bfs(&v))?))
    }),
    b("dfs", 2, |_, a| {
        let (g, v) = start_vertex(&a)?;
        Ok(Value::List(lib(g.dfs(&v))?))
    }),
    // trees
    b("inorder", 1, |_, a| Ok(tree_items(tree(&a[0])?.inorder()))),
    b("preorder", 1, |_, a| Ok(tree_items(tree(&a[0])?.preorder()))),
    b("postorder", 1, |_, a| Ok(tree_items(tree(&a[0])?.postorder()))),
    b("singleton", 1, |_, a| construct(Ctor::Node, vec![a[0].clone(), Value::Tree(BinTree::Leaf), Value::Tree(BinTree::Leaf)])),
    b("treeInsert", 2, |_, a| Ok(Value::Tree(tree(&a[1])?.insert(a[0].clone())))),
    b("treeSearch", 2, |_, a| Ok(Value::Bool(tree(&a[1])?.search(&a[0])))),
    b("treeElem", 2, |_, a| Ok(Value::Bool(tree(&a[1])?.search(&a[0])))),
    b("reflect", 1, |_, a| Ok(Value::Tree(tree(&a[0])?.reflect()))),
    b("height", 1, |_, a| Ok(int(tree(&a[0])?.height()))),
    b("depth", 2, |_, a| Ok(int(lib(tree(&a[1])?.depth(&a[0]))?))),
    b("size", 1, |_, a| Ok(int(tree(&a[0])?.size()))),
    b("isBalanced", 1, |_, a| Ok(Value::Bool(tree(&a[0])?.is_balanced()))),
    b("treeFromList", 1, |_, a| {
        let xs = homogenize(items(&a[0])?, "tree")?;
        if xs.iter().any(|x| matches!(x, Value::Func(_))) {
            return Err(LangError::type_error("functions cannot be stored in a tree"));
        }
        Ok(Value::Tree(xs.into_iter().collect()))
    }),
];
