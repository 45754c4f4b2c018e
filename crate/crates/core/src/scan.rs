//! Extremal scan over a stream of graphs of one order: the largest size of a
//! graph with `mob = 2`, and whether the Turán graph `T(n, 3)` is the only
//! graph reaching it.

use crate::graph::{clique_number, graph6_encode, turan, Graph, GraphError};
use crate::mobility::{mobile_number, MobilityError, SearchOptions};
use crate::position::{Geometry, PiKind, PositionError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("graph {index} has order {found}, the stream started with order {expected}")]
    MixedOrders { index: usize, expected: usize, found: usize },
    #[error("graph {index} is disconnected")]
    Disconnected { index: usize },
    #[error("graph {index}: search budget exhausted before mob was settled")]
    Inexact { index: usize },
    #[error("empty stream")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Position(#[from] PositionError),
    #[error(transparent)]
    Mobility(#[from] MobilityError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub index: usize,
    pub graph6: String,
    pub edges: usize,
    pub omega: usize,
    pub mob: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub order: usize,
    pub graphs: usize,
    pub mob2_graphs: usize,
    /// Largest edge count among graphs with `mob = 2`.
    pub max_mob2_edges: Option<usize>,
    pub turan_edges: usize,
    /// Stream indices of the maximisers, one per isomorphism class.
    pub maximisers: Vec<usize>,
    /// The maximisers are exactly the isomorphism class of `T(n, 3)`.
    pub turan_unique: bool,
    /// Graphs with `mob = 2` and clique number at least four.
    pub mob2_with_k4: Vec<ScanRecord>,
}

/// `mob` of one connected graph, exact or an error.
pub fn scan_record(index: usize, g: &Graph, opts: SearchOptions) -> Result<ScanRecord, ScanError> {
    if !g.is_connected() {
        return Err(ScanError::Disconnected { index });
    }
    let geo = Geometry::new(g)?;
    let r = mobile_number(&geo, PiKind::GP, opts)?;
    if !r.exact {
        return Err(ScanError::Inexact { index });
    }
    Ok(ScanRecord { index, graph6: graph6_encode(g), edges: g.edge_count(), omega: clique_number(g), mob: r.value })
}

/// Checks that every graph has the order of the first.
pub fn check_orders(graphs: &[Graph]) -> Result<usize, ScanError> {
    let order = graphs.first().ok_or(ScanError::Empty)?.order();
    match graphs.iter().position(|g| g.order() != order) {
        Some(index) => Err(ScanError::MixedOrders { index, expected: order, found: graphs[index].order() }),
        None => Ok(order),
    }
}

/// Summarises per-graph records; `graphs[i]` must be the graph of `records[i]`.
pub fn summarise(graphs: &[Graph], records: &[ScanRecord]) -> Result<ScanSummary, ScanError> {
    let order = check_orders(graphs)?;
    let t = turan(order, 3.min(order).max(1))?;
    let mob2: Vec<&ScanRecord> = records.iter().filter(|r| r.mob == 2).collect();
    let max = mob2.iter().map(|r| r.edges).max();
    let mut maximisers: Vec<usize> = Vec::new();
    for r in mob2.iter().filter(|r| Some(r.edges) == max) {
        if !maximisers.iter().any(|&i| is_isomorphic(&graphs[i], &graphs[r.index])) {
            maximisers.push(r.index);
        }
    }
    let turan_unique = maximisers.len() == 1 && is_isomorphic(&graphs[maximisers[0]], &t);
    Ok(ScanSummary {
        order,
        graphs: graphs.len(),
        mob2_graphs: mob2.len(),
        max_mob2_edges: max,
        turan_edges: t.edge_count(),
        maximisers,
        turan_unique,
        mob2_with_k4: mob2.into_iter().filter(|r| r.omega >= 4).cloned().collect(),
    })
}

/// Sequential scan of a whole stream.
pub fn scan(graphs: &[Graph], opts: SearchOptions) -> Result<ScanSummary, ScanError> {
    check_orders(graphs)?;
    let records = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| scan_record(i, g, opts))
        .collect::<Result<Vec<_>, _>>()?;
    summarise(graphs, &records)
}

/// Backtracking isomorphism test, pruned by degrees.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..n).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return false;
    }
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).any(|u| g.adjacent(u, v) != h.adjacent(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(g, h, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(g, h, &mut Vec::with_capacity(n), &mut vec![false; n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::graph::{build_basic, cycle, family, path, BasicKind, FamilySpec};

    #[test]
    fn isomorphism() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &cycle(4).unwrap()));
        assert!(is_isomorphic(&turan(6, 3).unwrap(), &build_basic(BasicKind::CompleteMultipartite, &[2, 2, 2]).unwrap()));
    }

    #[test]
    fn order_five_corpus() {
        let gs = corpus::connected_graphs(5);
        let s = scan(&gs, SearchOptions::default()).unwrap();
        assert_eq!(s.max_mob2_edges, Some(8));
        assert_eq!(s.turan_edges, 8);
        assert!(s.turan_unique);
    }

    #[test]
    fn mixed_orders_rejected() {
        let gs = vec![path(4).unwrap(), path(5).unwrap()];
        assert!(matches!(scan(&gs, SearchOptions::default()), Err(ScanError::MixedOrders { index: 1, .. })));
    }

    #[test]
    fn k5_minus_graph_has_mob_two() {
        let g = family(&"fig2_k5minus".parse::<FamilySpec>().unwrap()).unwrap();
        let r = scan_record(0, &g, SearchOptions::default()).unwrap();
        assert_eq!((r.omega, r.mob), (4, 2));
    }
}
