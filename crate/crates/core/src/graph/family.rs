//! Named constructions, addressed by text specs such as `hypercube:4` or
//! `block_graph:3,4@0,5@2`.
//!
//! Vertex labelling per family:
//! - `half_graph:r`: `a_i = i-1`, `b_i = r+i-1`.
//! - `half_graph_ext:r,s`: as `half_graph`, then `c_i = 2r+i-1`.
//! - `join_realisation:a,b`: `x1 = 0`, `x2 = 1`, then the `b-a` isolated
//!   vertices, then the `K_{a-1}`.
//! - `strong_clique:a,b`: `(i, j)` of `P_a ⊠ P_2` is `2(i-1)+(j-1)`; the
//!   clique `W` follows from `2a`.
//! - `diam2_tight:n`: the clique is `0..n-1`, the extra vertex is `n-1`.
//! - `diam3_tight:w`: `a_i = i-1`; the triangle `1, 2, 3` is `w, w+1, w+2`.
//! - `fig2_k5minus`: `a_0..a_4 = 0..4`, `b_1 = 5`, `b_2 = 6`, `c_1 = 7`.
//! - `block_graph:s0,k1@v1,...`: the first clique is `0..s0`; each `k@v`
//!   adds a clique of order `k` through the existing vertex `v` and `k-1`
//!   new vertices numbered next.
//! - grids: `(x, y)` with 1-based coordinates is `(x-1)m + (y-1)`.
//! - `line_complete:n`: vertices are the edges of `K_n` in lexicographic order.

use super::{build_basic, combine, line_graph, path, BasicKind, Combine, Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteMultipartite,
    Hypercube,
    Turan,
    CartesianGrid,
    StrongGrid,
    LineComplete,
    CliqueWithLeaf,
    HalfGraph,
    HalfGraphExt,
    JoinRealisation,
    StrongClique,
    Diam2Tight,
    Diam3Tight,
    Fig2K5minus,
    BlockGraph,
}

struct Entry {
    kind: FamilyKind,
    name: &'static str,
    params: &'static str,
    range: &'static str,
}

const CATALOGUE: &[Entry] = &[
    Entry { kind: FamilyKind::Path, name: "path", params: "n", range: "n >= 1" },
    Entry { kind: FamilyKind::Cycle, name: "cycle", params: "n", range: "n >= 3" },
    Entry { kind: FamilyKind::Complete, name: "complete", params: "n", range: "n >= 1" },
    Entry { kind: FamilyKind::Star, name: "star", params: "leaves", range: "leaves >= 1" },
    Entry { kind: FamilyKind::CompleteMultipartite, name: "complete_multipartite", params: "p1,p2,...", range: "all parts >= 1" },
    Entry { kind: FamilyKind::Hypercube, name: "hypercube", params: "d", range: "1 <= d <= 7" },
    Entry { kind: FamilyKind::Turan, name: "turan", params: "n,r", range: "n >= r >= 1" },
    Entry { kind: FamilyKind::CartesianGrid, name: "cartesian_grid", params: "n,m", range: "n, m >= 1" },
    Entry { kind: FamilyKind::StrongGrid, name: "strong_grid", params: "r,s", range: "r, s >= 1" },
    Entry { kind: FamilyKind::LineComplete, name: "line_complete", params: "n", range: "2 <= n <= 16" },
    Entry { kind: FamilyKind::CliqueWithLeaf, name: "clique_with_leaf", params: "m", range: "m >= 1" },
    Entry { kind: FamilyKind::HalfGraph, name: "half_graph", params: "r", range: "r >= 2" },
    Entry { kind: FamilyKind::HalfGraphExt, name: "half_graph_ext", params: "r,s", range: "r > s > 2" },
    Entry { kind: FamilyKind::JoinRealisation, name: "join_realisation", params: "a,b", range: "2 <= a < b" },
    Entry { kind: FamilyKind::StrongClique, name: "strong_clique", params: "a,b", range: "a >= 2, b >= 3" },
    Entry { kind: FamilyKind::Diam2Tight, name: "diam2_tight", params: "n", range: "n >= 4" },
    Entry { kind: FamilyKind::Diam3Tight, name: "diam3_tight", params: "w", range: "w >= 3" },
    Entry { kind: FamilyKind::Fig2K5minus, name: "fig2_k5minus", params: "", range: "no parameters" },
    Entry { kind: FamilyKind::BlockGraph, name: "block_graph", params: "s0,k1@v1,k2@v2,...", range: "s0 >= 1, k >= 2, v an existing vertex" },
];

impl FamilyKind {
    pub fn name(self) -> &'static str {
        CATALOGUE.iter().find(|e| e.kind == self).map(|e| e.name).unwrap()
    }

    pub fn from_name(name: &str) -> Option<Self> {
        CATALOGUE.iter().find(|e| e.name == name).map(|e| e.kind)
    }
}

/// The catalogue as `name params  (range)` lines.
pub fn catalogue() -> Vec<String> {
    CATALOGUE
        .iter()
        .map(|e| format!("{:<22} {:<22} {}", e.name, e.params, e.range))
        .collect()
}

/// A family name with integer parameters. Block graphs store their clique
/// list flattened as `[s0, k1, v1, k2, v2, ..]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: impl Into<Vec<usize>>) -> Self {
        FamilySpec { kind, params: params.into() }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.name())?;
        if self.params.is_empty() {
            return Ok(());
        }
        let body = if self.kind == FamilyKind::BlockGraph {
            let mut parts = vec![self.params[0].to_string()];
            parts.extend(self.params[1..].chunks(2).map(|c| match c {
                [k, v] => format!("{k}@{v}"),
                _ => c[0].to_string(),
            }));
            parts.join(",")
        } else {
            self.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(f, ":{body}")
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let kind = FamilyKind::from_name(name).ok_or_else(|| GraphError::UnknownFamily(name.to_string()))?;
        let bad = |tok: &str| GraphError::Parameter(format!("{name}: cannot parse `{tok}`"));
        let mut params = Vec::new();
        for (i, tok) in rest.split(',').map(str::trim).filter(|t| !t.is_empty()).enumerate() {
            match tok.split_once('@') {
                Some((k, v)) if kind == FamilyKind::BlockGraph && i > 0 => {
                    params.push(k.trim().parse().map_err(|_| bad(tok))?);
                    params.push(v.trim().parse().map_err(|_| bad(tok))?);
                }
                None if kind != FamilyKind::BlockGraph || i == 0 => {
                    params.push(tok.parse().map_err(|_| bad(tok))?);
                }
                _ => return Err(bad(tok)),
            }
        }
        Ok(FamilySpec { kind, params })
    }
}

fn arity(spec: &FamilySpec, count: usize) -> Result<&[usize], GraphError> {
    if spec.params.len() != count {
        return Err(GraphError::Parameter(format!(
            "{} takes {count} parameter(s), got {}",
            spec.kind.name(),
            spec.params.len()
        )));
    }
    Ok(&spec.params)
}

fn range_err(spec: &FamilySpec, need: &str) -> GraphError {
    GraphError::Parameter(format!("{spec}: need {need}"))
}

/// Builds a named construction.
pub fn family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    use FamilyKind::*;
    let name = spec.to_string();
    let g = match spec.kind {
        Path => build_basic(BasicKind::Path, &spec.params)?,
        Cycle => build_basic(BasicKind::Cycle, &spec.params)?,
        Complete => build_basic(BasicKind::Complete, &spec.params)?,
        Star => build_basic(BasicKind::Star, &spec.params)?,
        CompleteMultipartite => build_basic(BasicKind::CompleteMultipartite, &spec.params)?,
        Hypercube => build_basic(BasicKind::Hypercube, &spec.params)?,
        Turan => build_basic(BasicKind::Turan, &spec.params)?,
        CartesianGrid | StrongGrid => {
            let p = arity(spec, 2)?;
            let op = if spec.kind == CartesianGrid { Combine::Cartesian } else { Combine::Strong };
            combine(op, &path(p[0])?, &path(p[1])?)?
        }
        LineComplete => {
            let n = arity(spec, 1)?[0];
            if !(2..=16).contains(&n) {
                return Err(range_err(spec, "2 <= n <= 16"));
            }
            line_graph(&super::complete(n)?)?.graph
        }
        CliqueWithLeaf => {
            let m = arity(spec, 1)?[0];
            if m < 1 {
                return Err(range_err(spec, "m >= 1"));
            }
            let k = super::complete(m)?;
            Graph::from_edges(m + 1, k.edges().chain([(0, m)]))?
        }
        HalfGraph => {
            let r = arity(spec, 1)?[0];
            if r < 2 {
                return Err(range_err(spec, "r >= 2"));
            }
            half_graph(r, 0)?
        }
        HalfGraphExt => {
            let p = arity(spec, 2)?;
            if !(p[0] > p[1] && p[1] > 2) {
                return Err(range_err(spec, "r > s > 2"));
            }
            half_graph(p[0], p[1])?
        }
        JoinRealisation => {
            let p = arity(spec, 2)?;
            let (a, b) = (p[0], p[1]);
            if !(2 <= a && a < b) {
                return Err(range_err(spec, "2 <= a < b"));
            }
            let rest = combine(Combine::DisjointUnion, &Graph::empty(b - a)?, &super::complete(a - 1)?)?;
            combine(Combine::Join, &super::complete(2)?, &rest)?
        }
        StrongClique => {
            let p = arity(spec, 2)?;
            let (a, b) = (p[0], p[1]);
            if a < 2 || b < 3 {
                return Err(range_err(spec, "a >= 2 and b >= 3"));
            }
            let grid = combine(Combine::Strong, &path(a)?, &path(2)?)?;
            let n = 2 * a + b - 1;
            let w = 2 * a..n;
            let mut edges: Vec<_> = grid.edges().collect();
            edges.extend(w.clone().flat_map(|x| (x + 1..n).map(move |y| (x, y))));
            edges.extend(w.flat_map(|x| [(2 * a - 2, x), (2 * a - 1, x)]));
            Graph::from_edges(n, edges)?
        }
        Diam2Tight => {
            let n = arity(spec, 1)?[0];
            if n < 4 {
                return Err(range_err(spec, "n >= 4"));
            }
            let k = super::complete(n - 1)?;
            let attach = (n - 1).div_ceil(2);
            Graph::from_edges(n, k.edges().chain((0..attach).map(|i| (i, n - 1))))?
        }
        Diam3Tight => {
            let w = arity(spec, 1)?[0];
            if w < 3 {
                return Err(range_err(spec, "w >= 3"));
            }
            diam3_tight(w)?
        }
        Fig2K5minus => {
            arity(spec, 0)?;
            let mut edges: Vec<_> = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&e| e != (0, 1))
                .collect();
            edges.extend([(5, 6), (5, 0), (5, 1), (5, 4), (6, 0), (6, 1), (6, 2), (7, 5), (7, 6)]);
            Graph::from_edges(8, edges)?
        }
        BlockGraph => block_graph(spec)?,
    };
    Ok(g.with_name(name))
}

fn half_graph(r: usize, s: usize) -> Result<Graph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..r {
        for j in i..r {
            edges.push((i, r + j));
        }
    }
    for i in 0..s {
        for j in i..s {
            edges.push((2 * r + i, r + j));
        }
    }
    Graph::from_edges(2 * r + s, edges)
}

fn diam3_tight(w: usize) -> Result<Graph, GraphError> {
    let (q, s) = (w / 3, w % 3);
    let (t1, t2, t3) = (w, w + 1, w + 2);
    let mut edges: Vec<_> = (0..w).flat_map(|i| (i + 1..w).map(move |j| (i, j))).collect();
    edges.extend([(t1, t2), (t1, t3), (t2, t3)]);
    // a_i is vertex i-1
    edges.extend((1..=q + 1).map(|i| (t1, i - 1)));
    edges.extend(
        (q + 1..=2 * q + 1)
            .filter(|&i| !(q == 1 && s == 0 && i == 3))
            .map(|i| (t2, i - 1)),
    );
    Graph::from_edges(w + 3, edges)
}

fn block_graph(spec: &FamilySpec) -> Result<Graph, GraphError> {
    let p = &spec.params;
    if p.is_empty() || p[0] < 1 || p.len().is_multiple_of(2) {
        return Err(range_err(spec, "a first clique order followed by size@vertex pairs"));
    }
    let mut n = p[0];
    let mut edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    for c in p[1..].chunks(2) {
        let (k, v) = (c[0], c[1]);
        if k < 2 || v >= n {
            return Err(range_err(spec, "cliques of order >= 2 glued at an existing vertex"));
        }
        let members: Vec<_> = std::iter::once(v).chain(n..n + k - 1).collect();
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                edges.push((x, y));
            }
        }
        n += k - 1;
    }
    Graph::from_edges(n, edges)
}
