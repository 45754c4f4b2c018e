//! General position and mutual visibility sets: predicates, incremental
//! extension checks, maximum-set search and hubs.

use crate::graph::{DistanceMatrix, Graph};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::ControlFlow;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PositionError {
    #[error("graph is disconnected; position sets are only defined on connected graphs")]
    Disconnected,
    #[error("vertices {u} and {v} are in different components")]
    Unreachable { u: usize, v: usize },
    #[error("a radius cap applies only to mutual visibility")]
    RadiusWithGeneralPosition,
    #[error("radius must be positive")]
    ZeroRadius,
    #[error("vertex {0} is not in the graph")]
    VertexOutOfRange(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PiVariant {
    GeneralPosition,
    MutualVisibility,
}

/// Which kind of position set; `radius` caps pairwise distances and is only
/// valid for mutual visibility.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiKind {
    pub variant: PiVariant,
    pub radius: Option<usize>,
}

impl PiKind {
    pub const GP: PiKind = PiKind { variant: PiVariant::GeneralPosition, radius: None };
    pub const MV: PiKind = PiKind { variant: PiVariant::MutualVisibility, radius: None };

    pub fn mv_radius(r: usize) -> PiKind {
        PiKind { variant: PiVariant::MutualVisibility, radius: Some(r) }
    }

    pub fn validate(self) -> Result<(), PositionError> {
        match (self.variant, self.radius) {
            (PiVariant::GeneralPosition, Some(_)) => Err(PositionError::RadiusWithGeneralPosition),
            (_, Some(0)) => Err(PositionError::ZeroRadius),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for PiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.variant, self.radius) {
            (PiVariant::GeneralPosition, _) => f.write_str("gp"),
            (PiVariant::MutualVisibility, None) => f.write_str("mv"),
            (PiVariant::MutualVisibility, Some(r)) => write!(f, "mv{r}"),
        }
    }
}

fn check_reachable(d: &DistanceMatrix, s: VertexSet) -> Result<(), PositionError> {
    for u in s.iter() {
        if u >= d.order() {
            return Err(PositionError::VertexOutOfRange(u));
        }
        for v in s.above(u).iter() {
            if d.get(u, v).is_none() {
                return Err(PositionError::Unreachable { u, v });
            }
        }
    }
    Ok(())
}

/// No member of `s` lies on a geodesic between two others.
pub fn is_general_position(_g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool, PositionError> {
    check_reachable(d, s)?;
    let members = s.to_vec();
    for &x in &members {
        for &z in &members {
            if z <= x {
                continue;
            }
            let dxz = d.raw(x, z);
            for &y in &members {
                if y != x && y != z && d.raw(x, y) + d.raw(y, z) == dxz {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Is there a shortest `u,v`-path whose internal vertices avoid `blocked`?
/// Walks the geodesic layers from `u` towards `v`.
pub fn visible(g: &Graph, d: &DistanceMatrix, u: usize, v: usize, blocked: VertexSet) -> bool {
    let Some(duv) = d.get(u, v) else {
        return false;
    };
    let mut reach = VertexSet::singleton(u);
    for k in 1..duv {
        let layer = d.sphere(u, k).intersection(d.sphere(v, duv - k)).difference(blocked);
        reach = g.neighborhood(reach).intersection(layer);
        if reach.is_empty() {
            return false;
        }
    }
    true
}

/// Every pair of `s` sees each other along a geodesic avoiding the rest of `s`.
pub fn is_mutual_visibility(g: &Graph, d: &DistanceMatrix, s: VertexSet) -> Result<bool, PositionError> {
    check_reachable(d, s)?;
    Ok(s.iter().all(|u| s.above(u).iter().all(|v| visible(g, d, u, v, s))))
}

pub fn is_pi_set(g: &Graph, d: &DistanceMatrix, kind: PiKind, s: VertexSet) -> Result<bool, PositionError> {
    kind.validate()?;
    let ok = match kind.variant {
        PiVariant::GeneralPosition => is_general_position(g, d, s)?,
        PiVariant::MutualVisibility => is_mutual_visibility(g, d, s)?,
    };
    Ok(ok && kind.radius.is_none_or(|r| within_radius(d, s, r)))
}

fn within_radius(d: &DistanceMatrix, s: VertexSet, r: usize) -> bool {
    s.iter().all(|u| s.above(u).iter().all(|v| d.raw(u, v) as usize <= r))
}

/// Interval geometry of a connected graph, precomputed for fast incremental
/// position-set checks.
#[derive(Clone, Debug)]
pub struct Geometry {
    graph: Graph,
    dist: DistanceMatrix,
    /// Internal vertices of `I(u, v)`.
    interior: Vec<VertexSet>,
    /// `shadow[x * n + v]`: the `y != v` with `d(x, y) = d(x, v) + d(v, y)`.
    shadow: Vec<VertexSet>,
    /// `ball[u * n + r]`: vertices within distance `r` of `u`.
    ball: Vec<VertexSet>,
}

impl Geometry {
    pub fn new(g: &Graph) -> Result<Self, PositionError> {
        let dist = g.distances();
        if !dist.is_connected() {
            return Err(PositionError::Disconnected);
        }
        let n = g.order();
        let mut interior = vec![VertexSet::EMPTY; n * n];
        let mut shadow = vec![VertexSet::EMPTY; n * n];
        let mut ball = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            let mut acc = VertexSet::EMPTY;
            for r in 0..n {
                acc = acc.union(dist.sphere(u, r));
                ball[u * n + r] = acc;
            }
            for v in 0..n {
                interior[u * n + v] = dist.interval(u, v).without(u).without(v);
                let duv = dist.raw(u, v) as usize;
                let mut sh = VertexSet::EMPTY;
                for k in 1..n - duv.min(n) {
                    sh = sh.union(dist.sphere(v, k).intersection(dist.sphere(u, duv + k)));
                }
                shadow[u * n + v] = sh;
            }
        }
        Ok(Geometry { graph: g.clone(), dist, interior, shadow, ball })
    }

    #[inline]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[inline]
    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.graph.order()
    }

    #[inline]
    pub fn interior(&self, u: usize, v: usize) -> VertexSet {
        self.interior[u * self.order() + v]
    }

    #[inline]
    pub fn shadow(&self, x: usize, v: usize) -> VertexSet {
        self.shadow[x * self.order() + v]
    }

    #[inline]
    pub fn ball(&self, u: usize, r: usize) -> VertexSet {
        self.ball[u * self.order() + r.min(self.order() - 1)]
    }

    #[inline]
    pub fn visible(&self, u: usize, v: usize, blocked: VertexSet) -> bool {
        if self.interior(u, v).intersection(blocked).is_empty() {
            return true;
        }
        visible(&self.graph, &self.dist, u, v, blocked)
    }

    pub fn is_pi(&self, kind: PiKind, s: VertexSet) -> bool {
        if let Some(r) = kind.radius {
            if s.iter().any(|u| !s.is_subset(self.ball(u, r))) {
                return false;
            }
        }
        match kind.variant {
            PiVariant::GeneralPosition => {
                s.iter().all(|u| s.above(u).iter().all(|v| self.interior(u, v).intersection(s).is_empty()))
            }
            PiVariant::MutualVisibility => s.iter().all(|u| s.above(u).iter().all(|v| self.visible(u, v, s))),
        }
    }

    /// Given that `s` is a π-set and `v ∉ s`, is `s ∪ {v}` one?
    pub fn can_add(&self, kind: PiKind, s: VertexSet, v: usize) -> bool {
        debug_assert!(!s.contains(v));
        if let Some(r) = kind.radius {
            if !s.is_subset(self.ball(v, r)) {
                return false;
            }
        }
        match kind.variant {
            PiVariant::GeneralPosition => s.iter().all(|x| {
                self.interior(x, v).union(self.shadow(x, v)).intersection(s).is_empty()
            }),
            PiVariant::MutualVisibility => {
                if !s.iter().all(|x| self.visible(x, v, s)) {
                    return false;
                }
                let t = s.with(v);
                s.iter().all(|x| {
                    self.shadow(x, v)
                        .intersection(s)
                        .above(x)
                        .iter()
                        .all(|y| self.visible(x, y, t))
                })
            }
        }
    }

    /// Is `s - u + w` a π-set, given that `s` is one? Uses heredity.
    #[inline]
    pub fn is_legal_swap(&self, kind: PiKind, s: VertexSet, u: usize, w: usize) -> bool {
        self.can_add(kind, s.without(u), w)
    }

    /// Calls `f` on every π-set of size `t`, in increasing lexicographic
    /// order of sorted member lists.
    pub fn for_each_pi_set<B, F>(&self, kind: PiKind, t: usize, mut f: F) -> ControlFlow<B>
    where
        F: FnMut(VertexSet) -> ControlFlow<B>,
    {
        if t == 0 {
            return f(VertexSet::EMPTY);
        }
        self.extend_sets(kind, t, VertexSet::EMPTY, self.graph.vertices(), &mut f)
    }

    fn extend_sets<B, F>(&self, kind: PiKind, t: usize, s: VertexSet, cand: VertexSet, f: &mut F) -> ControlFlow<B>
    where
        F: FnMut(VertexSet) -> ControlFlow<B>,
    {
        let need = t - s.len();
        let mut rest = cand;
        while let Some(v) = rest.first() {
            if rest.len() < need {
                break;
            }
            rest.remove(v);
            let next = s.with(v);
            if need == 1 {
                f(next)?;
                continue;
            }
            let sub: VertexSet = rest.iter().filter(|&w| self.can_add(kind, next, w)).collect();
            if sub.len() + 1 >= need {
                self.extend_sets(kind, t, next, sub, f)?;
            }
        }
        ControlFlow::Continue(())
    }

    pub fn enumerate_pi_sets(&self, kind: PiKind, t: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let _ = self.for_each_pi_set(kind, t, |s| {
            out.push(s);
            ControlFlow::<()>::Continue(())
        });
        out
    }

    /// Size and witness of a largest π-set. Branches over vertices by
    /// decreasing degree, ties by id, so the witness is deterministic.
    pub fn max_pi_set(&self, kind: PiKind) -> (usize, VertexSet) {
        let n = self.order();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.graph.degree(v)), v));
        let mut best = VertexSet::EMPTY;
        self.branch(kind, VertexSet::EMPTY, &order, &mut best);
        (best.len(), best)
    }

    fn branch(&self, kind: PiKind, s: VertexSet, cand: &[usize], best: &mut VertexSet) {
        if s.len() > best.len() {
            *best = s;
        }
        for (i, &v) in cand.iter().enumerate() {
            if s.len() + cand.len() - i <= best.len() {
                return;
            }
            let next = s.with(v);
            let sub: Vec<usize> = cand[i + 1..].iter().copied().filter(|&w| self.can_add(kind, next, w)).collect();
            self.branch(kind, next, &sub, best);
        }
    }
}

/// Every pair of non-adjacent vertices outside `u` has a common neighbour in `u`.
pub fn is_k_hub(g: &Graph, u: VertexSet) -> bool {
    let outside = g.vertices().difference(u);
    outside.iter().all(|x| {
        outside
            .above(x)
            .difference(g.neighbors(x))
            .iter()
            .all(|y| !g.neighbors(x).intersection(g.neighbors(y)).intersection(u).is_empty())
    })
}

pub fn is_hub(g: &Graph, v: usize) -> bool {
    is_k_hub(g, VertexSet::singleton(v))
}

pub fn hubs(g: &Graph) -> VertexSet {
    (0..g.order()).filter(|&v| is_hub(g, v)).collect()
}

/// The lexicographically first edge whose endpoints are both hubs.
pub fn adjacent_hub_pair(g: &Graph) -> Option<(usize, usize)> {
    let h = hubs(g);
    g.edges().find(|&(u, v)| h.contains(u) && h.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{combine, complete, cycle, family, hypercube, path, star, Combine};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_examples() {
        let p = path(5).unwrap();
        let d = p.distances();
        assert!(is_general_position(&p, &d, set(&[0, 4])).unwrap());
        assert!(!is_general_position(&p, &d, set(&[0, 2, 4])).unwrap());
        assert!(!is_pi_set(&p, &d, PiKind::mv_radius(2), set(&[0, 4])).unwrap());
    }

    #[test]
    fn star_and_complete() {
        let s = star(3).unwrap();
        assert!(is_pi_set(&s, &s.distances(), PiKind::mv_radius(2), set(&[1, 2, 3])).unwrap());
        let k = complete(6).unwrap();
        assert!(is_pi_set(&k, &k.distances(), PiKind::GP, k.vertices()).unwrap());
    }

    #[test]
    fn grid_visibility() {
        // (x, y) -> 3(x-1) + (y-1)
        let id = |x: usize, y: usize| 3 * (x - 1) + (y - 1);
        let p3 = path(3).unwrap();
        let g = combine(Combine::Cartesian, &p3, &p3).unwrap();
        let d = g.distances();
        let s = set(&[id(1, 2), id(2, 1), id(2, 3), id(3, 2)]);
        assert!(is_mutual_visibility(&g, &d, s).unwrap());
        let geo = Geometry::new(&g).unwrap();
        let centre = id(2, 2);
        let mut count = 0;
        let _ = geo.for_each_pi_set(PiKind::MV, 5, |s| {
            assert!(!s.contains(centre));
            count += 1;
            ControlFlow::<()>::Continue(())
        });
        assert!(count > 0);
    }

    #[test]
    fn strong_grid_gp() {
        let g = combine(Combine::Strong, &path(3).unwrap(), &path(3).unwrap()).unwrap();
        let geo = Geometry::new(&g).unwrap();
        assert!(geo.is_pi(PiKind::GP, set(&[0, 2, 6, 8])));
        assert_eq!(geo.max_pi_set(PiKind::GP).0, 4);
        assert!(geo.enumerate_pi_sets(PiKind::GP, 5).is_empty());
    }

    #[test]
    fn hypercube_mu() {
        let geo = Geometry::new(&hypercube(4).unwrap()).unwrap();
        let (mu, w) = geo.max_pi_set(PiKind::MV);
        assert_eq!(mu, 9);
        assert!(geo.is_pi(PiKind::MV, w));
    }

    #[test]
    fn hub_examples() {
        let s = star(4).unwrap();
        assert!(is_hub(&s, 0));
        assert!((1..5).all(|v| !is_hub(&s, v)));
        let c = cycle(4).unwrap();
        assert_eq!(hubs(&c), c.vertices());
        assert_eq!(adjacent_hub_pair(&c), Some((0, 1)));
        let t = family(&"block_graph:2,2@1,2@1,2@2".parse().unwrap()).unwrap();
        assert_eq!(adjacent_hub_pair(&t), None);
    }

    #[test]
    fn rejects_bad_input() {
        let g = crate::graph::Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(Geometry::new(&g).unwrap_err(), PositionError::Disconnected);
        let d = g.distances();
        assert!(matches!(is_general_position(&g, &d, set(&[0, 2])), Err(PositionError::Unreachable { .. })));
        assert!(PiKind { variant: PiVariant::GeneralPosition, radius: Some(2) }.validate().is_err());
    }
}
