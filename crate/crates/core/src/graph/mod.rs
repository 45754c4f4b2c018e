//! Simple undirected graphs on at most 128 vertices, their standard
//! constructors and products, and structural analysis.

mod analyze;
mod distance;
mod dot;
mod family;
mod graph6;

pub use analyze::{analyze, block_decomposition, clique_number, max_clique, Analysis};
pub use distance::DistanceMatrix;
pub use dot::to_dot;
pub use family::{catalogue, family, FamilyKind, FamilySpec};
pub use graph6::{graph6_decode, graph6_encode};

use crate::vertex_set::{VertexSet, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    Capacity { n: usize },
    #[error("invalid edge {u}-{v} in a graph of order {n}")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("{0}")]
    EmptyResult(String),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
}

/// An immutable simple undirected graph with vertex ids `0..n`.
/// Equality compares adjacency only; the name is a label.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { n });
        }
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n], name: None })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge { u, v, n });
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::Capacity { n });
        }
        for (u, row) in adj.iter().enumerate() {
            for v in row.iter() {
                if v >= n || v == u || !adj[v].contains(u) {
                    return Err(GraphError::InvalidEdge { u, v, n });
                }
            }
        }
        Ok(Graph { n, adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Union of the neighbourhoods of the members of `s`.
    #[inline]
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            frontier = self.neighborhood(frontier).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == self.vertices()
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|u| all.difference(self.adj[u]).without(u))
            .collect();
        Graph { n: self.n, adj, name: None }
    }

    pub fn induced(&self, s: VertexSet) -> Graph {
        let verts = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let adj = verts
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| index[w]).collect())
            .collect();
        Graph { n: verts.len(), adj, name: None }
    }

    /// Is this a path `P_n` (a single vertex counts)?
    pub fn is_path(&self) -> bool {
        self.n >= 1
            && self.is_connected()
            && self.edge_count() == self.n - 1
            && (0..self.n).all(|v| self.degree(v) <= 2)
    }
}

/// The standard graphs accepted by [`build_basic`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    CompleteMultipartite,
    Hypercube,
    Turan,
}

fn expect_params(kind: BasicKind, params: &[usize], count: usize) -> Result<(), GraphError> {
    if params.len() != count {
        return Err(GraphError::Parameter(format!(
            "{kind:?} takes {count} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

pub fn build_basic(kind: BasicKind, params: &[usize]) -> Result<Graph, GraphError> {
    use BasicKind::*;
    let param_err = |msg: &str| Err(GraphError::Parameter(format!("{kind:?}: {msg}")));
    match kind {
        Path => {
            expect_params(kind, params, 1)?;
            let n = params[0];
            if n < 1 {
                return param_err("need n >= 1");
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).map(|g| g.with_name(format!("P{n}")))
        }
        Cycle => {
            expect_params(kind, params, 1)?;
            let n = params[0];
            if n < 3 {
                return param_err("need n >= 3");
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).map(|g| g.with_name(format!("C{n}")))
        }
        Complete => {
            expect_params(kind, params, 1)?;
            let n = params[0];
            if n < 1 {
                return param_err("need n >= 1");
            }
            complete_multipartite(&vec![1; n]).map(|g| g.with_name(format!("K{n}")))
        }
        Empty => {
            expect_params(kind, params, 1)?;
            Graph::empty(params[0]).map(|g| g.with_name(format!("{}K1", params[0])))
        }
        Star => {
            expect_params(kind, params, 1)?;
            let n = params[0];
            if n < 1 {
                return param_err("need at least one leaf");
            }
            complete_multipartite(&[1, n]).map(|g| g.with_name(format!("K1,{n}")))
        }
        CompleteMultipartite => {
            if params.is_empty() || params.contains(&0) {
                return param_err("need at least one part, all parts of size >= 1");
            }
            complete_multipartite(params)
        }
        Hypercube => {
            expect_params(kind, params, 1)?;
            let d = params[0];
            if d < 1 {
                return param_err("need dimension >= 1");
            }
            if d > 7 {
                return Err(GraphError::Capacity { n: 1 << d.min(20) });
            }
            let n = 1usize << d;
            let edges = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
            Graph::from_edges(n, edges).map(|g| g.with_name(format!("Q{d}")))
        }
        Turan => {
            expect_params(kind, params, 2)?;
            let (n, r) = (params[0], params[1]);
            if r < 1 || n < r {
                return param_err("need n >= r >= 1");
            }
            complete_multipartite(&turan_parts(n, r)).map(|g| g.with_name(format!("T({n},{r})")))
        }
    }
}

/// Part sizes of the balanced complete `r`-partite graph on `n` vertices,
/// larger parts first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(GraphError::Capacity { n });
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    let name = format!("K{}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","));
    Graph::from_edges(n, edges).map(|g| g.with_name(name))
}

pub fn path(n: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Path, &[n])
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Cycle, &[n])
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Complete, &[n])
}

pub fn star(leaves: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Star, &[leaves])
}

pub fn hypercube(d: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Hypercube, &[d])
}

pub fn turan(n: usize, r: usize) -> Result<Graph, GraphError> {
    build_basic(BasicKind::Turan, &[n, r])
}

/// Binary graph operations accepted by [`combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Cartesian,
    Strong,
    Join,
    DisjointUnion,
}

/// Products number the pair `(u, v)` as `u * n(H) + v`; join and disjoint
/// union keep `G`'s ids and shift `H`'s by `n(G)`.
pub fn combine(kind: Combine, g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (gn, hn) = (g.order(), h.order());
    match kind {
        Combine::Cartesian | Combine::Strong => {
            let n = gn * hn;
            if n > MAX_VERTICES {
                return Err(GraphError::Capacity { n });
            }
            let mut edges = Vec::new();
            for u in 0..gn {
                for v in 0..hn {
                    for u2 in 0..gn {
                        for v2 in 0..hn {
                            let (a, b) = (u * hn + v, u2 * hn + v2);
                            if a >= b {
                                continue;
                            }
                            let adjacent = match kind {
                                Combine::Cartesian => {
                                    (u == u2 && h.adjacent(v, v2)) || (v == v2 && g.adjacent(u, u2))
                                }
                                _ => {
                                    (u == u2 || g.adjacent(u, u2)) && (v == v2 || h.adjacent(v, v2))
                                }
                            };
                            if adjacent {
                                edges.push((a, b));
                            }
                        }
                    }
                }
            }
            let op = if kind == Combine::Cartesian { "□" } else { "⊠" };
            let name = format!("{}{op}{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
            Graph::from_edges(n, edges).map(|x| x.with_name(name))
        }
        Combine::Join | Combine::DisjointUnion => {
            let n = gn + hn;
            if n > MAX_VERTICES {
                return Err(GraphError::Capacity { n });
            }
            let mut edges: Vec<_> = g.edges().collect();
            edges.extend(h.edges().map(|(a, b)| (a + gn, b + gn)));
            if kind == Combine::Join {
                edges.extend((0..gn).flat_map(|u| (0..hn).map(move |v| (u, v + gn))));
            }
            let op = if kind == Combine::Join { "∨" } else { "∪" };
            let name = format!("({}{op}{})", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
            Graph::from_edges(n, edges).map(|x| x.with_name(name))
        }
    }
}

/// A line graph together with the edge of the source graph behind each vertex.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the source edge `(u, v)`, `u < v`, behind vertex `i`.
    pub edges: Vec<(usize, usize)>,
}

impl LineGraph {
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }
}

/// Vertices of the result are the edges of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Result<LineGraph, GraphError> {
    let edges: Vec<_> = g.edges().collect();
    if edges.is_empty() {
        return Err(GraphError::EmptyResult("line graph of an edgeless graph".into()));
    }
    if edges.len() > MAX_VERTICES {
        return Err(GraphError::Capacity { n: edges.len() });
    }
    let mut adj = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                adj.push((i, j));
            }
        }
    }
    let name = format!("L({})", g.name().unwrap_or("G"));
    let graph = Graph::from_edges(edges.len(), adj)?.with_name(name);
    Ok(LineGraph { graph, edges })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_examples() {
        let q4 = hypercube(4).unwrap();
        assert_eq!((q4.order(), q4.edge_count()), (16, 32));
        let t = turan(6, 3).unwrap();
        assert_eq!(t.edge_count(), 12);
        assert_eq!(turan_parts(7, 3), vec![3, 2, 2]);
        let p5 = path(5).unwrap();
        assert_eq!((p5.order(), p5.edge_count()), (5, 4));
        assert_eq!(p5.distances().diameter(), Some(4));
        assert!(p5.is_path());
        assert!(!cycle(5).unwrap().is_path());
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(build_basic(BasicKind::Path, &[0]), Err(GraphError::Parameter(_))));
        assert!(matches!(build_basic(BasicKind::Turan, &[2, 3]), Err(GraphError::Parameter(_))));
        assert!(matches!(build_basic(BasicKind::Cycle, &[3, 4]), Err(GraphError::Parameter(_))));
        assert!(matches!(build_basic(BasicKind::CompleteMultipartite, &[2, 0]), Err(GraphError::Parameter(_))));
        assert!(matches!(complete(129), Err(GraphError::Capacity { .. })));
        assert!(matches!(hypercube(8), Err(GraphError::Capacity { .. })));
    }

    #[test]
    fn products_of_edges() {
        let p2 = path(2).unwrap();
        let c = combine(Combine::Cartesian, &p2, &p2).unwrap();
        assert_eq!(c.edge_count(), 4);
        assert!((0..4).all(|v| c.degree(v) == 2));
        assert!(c.is_connected());
        let s = combine(Combine::Strong, &p2, &p2).unwrap();
        assert!(s.is_complete());
    }

    #[test]
    fn join_realisation_shape() {
        let k2 = complete(2).unwrap();
        let rest = combine(Combine::DisjointUnion, &Graph::empty(2).unwrap(), &complete(1).unwrap()).unwrap();
        let g = combine(Combine::Join, &k2, &rest).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 1 + 2 * 3);
    }

    #[test]
    fn line_graphs() {
        let l = line_graph(&complete(3).unwrap()).unwrap();
        assert!(l.graph.is_complete() && l.graph.order() == 3);
        let l = line_graph(&path(4).unwrap()).unwrap();
        assert!(l.graph.is_path() && l.graph.order() == 3);
        assert_eq!(l.vertex_of(2, 1), Some(1));
        assert!(matches!(line_graph(&Graph::empty(3).unwrap()), Err(GraphError::EmptyResult(_))));
    }

    #[test]
    fn rejects_loops() {
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        assert!(Graph::from_edges(3, [(1, 3)]).is_err());
    }
}
