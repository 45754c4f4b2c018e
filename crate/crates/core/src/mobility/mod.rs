//! Robot moves, configuration-space exploration and the mobile numbers.
//!
//! Legal moves are reversible, so the configurations reachable from a
//! π-set form the connected component of that set in the move graph. A
//! set is mobile exactly when the union of its component covers `V(G)`.

mod certificate;
mod labeled;
mod report;

pub use certificate::{undo, verify_certificate, Certificate, Claim, Failure, Move, Verdict};
pub use labeled::{labeled_reach, labeled_reach_oracle, Engine, Holonomy, LabeledConfig};
pub use report::{SearchReport, UpperSource};

use crate::position::{Geometry, PiKind, PositionError};
use crate::vertex_set::VertexSet;
use rustc_hash::{FxHashMap, FxHashSet};
use std::ops::ControlFlow;
use std::time::Instant;
use thiserror::Error;

/// Default cap on the number of configurations examined by one search.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MobilityError {
    #[error(transparent)]
    Position(#[from] PositionError),
    #[error("configuration {set:?} is not a {kind} set")]
    NotPiSet { set: Vec<usize>, kind: PiKind },
    #[error("state budget of {limit} configurations exceeded")]
    Overflow { limit: u64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

/// Counts configurations against a fixed limit.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    #[inline]
    pub fn charge(&mut self, n: u64) -> Result<(), MobilityError> {
        self.used += n;
        if self.used > self.limit {
            Err(MobilityError::Overflow { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

fn require_pi(geo: &Geometry, kind: PiKind, s: VertexSet) -> Result<(), MobilityError> {
    kind.validate()?;
    if !s.is_subset(geo.graph().vertices()) {
        return Err(MobilityError::InvalidConfig(format!("{:?} is not a subset of V(G)", s.to_vec())));
    }
    if !geo.is_pi(kind, s) {
        return Err(MobilityError::NotPiSet { set: s.to_vec(), kind });
    }
    Ok(())
}

/// Legal moves from `s` in lexicographic `(from, to)` order.
pub fn legal_moves(geo: &Geometry, kind: PiKind, s: VertexSet) -> Result<Vec<Move>, MobilityError> {
    require_pi(geo, kind, s)?;
    let mut out = Vec::new();
    for_each_move(geo, kind, s, |m| out.push(m));
    Ok(out)
}

#[inline]
fn for_each_move(geo: &Geometry, kind: PiKind, s: VertexSet, mut f: impl FnMut(Move)) {
    let g = geo.graph();
    for u in s.iter() {
        let base = s.without(u);
        for w in g.neighbors(u).difference(s).iter() {
            if geo.can_add(kind, base, w) {
                f(Move::new(u, w));
            }
        }
    }
}

/// The move-graph component of a π-set, in breadth-first order from its root.
#[derive(Clone, Debug)]
pub struct Component {
    members: Vec<VertexSet>,
    /// `(parent index, move from parent)`; unused for the root.
    parent: Vec<(u32, Move)>,
    index: FxHashMap<VertexSet, u32>,
    union: VertexSet,
}

impl Component {
    pub fn root(&self) -> VertexSet {
        self.members[0]
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Union of all member sets: every vertex some robot can reach.
    pub fn visited_union(&self) -> VertexSet {
        self.union
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.index.get(&s).map(|&i| i as usize)
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.index.contains_key(&s)
    }

    /// Moves along the breadth-first tree from the root to member `i`.
    pub fn path_to(&self, mut i: usize) -> Vec<Move> {
        let mut path = Vec::new();
        while i != 0 {
            let (p, m) = self.parent[i];
            path.push(m);
            i = p as usize;
        }
        path.reverse();
        path
    }

    fn parent_of(&self, i: usize) -> Option<(usize, Move)> {
        (i != 0).then(|| (self.parent[i].0 as usize, self.parent[i].1))
    }
}

/// Breadth-first exploration of the component of `s`, at most `cap` states.
pub fn explore(geo: &Geometry, kind: PiKind, s: VertexSet, cap: u64) -> Result<Component, MobilityError> {
    require_pi(geo, kind, s)?;
    explore_with(geo, kind, s, &mut Budget::new(cap))
}

pub(crate) fn explore_with(
    geo: &Geometry,
    kind: PiKind,
    s: VertexSet,
    budget: &mut Budget,
) -> Result<Component, MobilityError> {
    let mut comp = Component {
        members: vec![s],
        parent: vec![(u32::MAX, Move::new(0, 0))],
        index: FxHashMap::default(),
        union: s,
    };
    comp.index.insert(s, 0);
    budget.charge(1)?;
    let mut head = 0;
    while head < comp.members.len() {
        let cur = comp.members[head];
        let mut fresh = Vec::new();
        for_each_move(geo, kind, cur, |m| {
            let next = cur.without(m.from).with(m.to);
            if let std::collections::hash_map::Entry::Vacant(e) = comp.index.entry(next) {
                e.insert(0);
                fresh.push((next, m));
            }
        });
        budget.charge(fresh.len() as u64)?;
        for (next, m) in fresh {
            let i = comp.members.len() as u32;
            *comp.index.get_mut(&next).unwrap() = i;
            comp.members.push(next);
            comp.parent.push((head as u32, m));
            comp.union = comp.union.union(next);
        }
        head += 1;
    }
    Ok(comp)
}

/// Result of [`is_mobile`].
#[derive(Clone, Debug)]
pub struct Mobility {
    pub mobile: bool,
    pub visited_union: VertexSet,
    pub component_size: usize,
    /// Present when `mobile`.
    pub certificate: Option<Certificate>,
}

pub fn is_mobile(geo: &Geometry, kind: PiKind, s: VertexSet, cap: u64) -> Result<Mobility, MobilityError> {
    let comp = explore(geo, kind, s, cap)?;
    let mobile = comp.union == geo.graph().vertices();
    Ok(Mobility {
        mobile,
        visited_union: comp.union,
        component_size: comp.len(),
        certificate: mobile.then(|| coverage_certificate(geo, kind, &comp)),
    })
}

/// Visits every vertex in the component's union: for each vertex not yet
/// seen, walk the tree to the first member holding it and walk back.
pub fn coverage_certificate(geo: &Geometry, kind: PiKind, comp: &Component) -> Certificate {
    let root = comp.root();
    let mut covered = root;
    let mut moves = Vec::new();
    for v in comp.union.difference(root).iter() {
        if covered.contains(v) {
            continue;
        }
        let i = comp.members.iter().position(|s| s.contains(v)).expect("v is in the union");
        let path = comp.path_to(i);
        covered = path.iter().fold(covered, |c, m| c.with(m.to));
        moves.extend_from_slice(&path);
        moves.extend(undo(&path));
    }
    Certificate::new(geo.graph(), kind, root.to_vec(), moves, Claim::Mobile)
}

/// Search configuration for the mobile-number solvers.
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET }
    }
}

enum Scan<R> {
    Found(R),
    Failed(MobilityError),
}

/// Streams the components of the size-`t` π-sets, each explored once,
/// roots in lexicographic order.
fn scan_components<R>(
    geo: &Geometry,
    kind: PiKind,
    t: usize,
    budget: &mut Budget,
    mut f: impl FnMut(&Component, &mut Budget) -> Result<Option<R>, MobilityError>,
) -> Result<Option<R>, MobilityError> {
    let mut seen: FxHashSet<VertexSet> = FxHashSet::default();
    let flow = geo.for_each_pi_set(kind, t, |s| {
        if seen.contains(&s) {
            return ControlFlow::Continue(());
        }
        let comp = match explore_with(geo, kind, s, budget) {
            Ok(c) => c,
            Err(e) => return ControlFlow::Break(Scan::Failed(e)),
        };
        match f(&comp, budget) {
            Ok(Some(r)) => return ControlFlow::Break(Scan::Found(r)),
            Ok(None) => {}
            Err(e) => return ControlFlow::Break(Scan::Failed(e)),
        }
        seen.extend(comp.members.iter().copied());
        ControlFlow::Continue(())
    });
    match flow {
        ControlFlow::Continue(()) => Ok(None),
        ControlFlow::Break(Scan::Found(r)) => Ok(Some(r)),
        ControlFlow::Break(Scan::Failed(e)) => Err(e),
    }
}

fn check_graph(geo: &Geometry, kind: PiKind) -> Result<(), MobilityError> {
    kind.validate()?;
    if geo.order() == 0 {
        return Err(MobilityError::InvalidConfig("graph has no vertices".into()));
    }
    Ok(())
}

/// A single robot walking a depth-first tour; always legal.
pub fn single_robot_certificate(geo: &Geometry, kind: PiKind) -> Certificate {
    let g = geo.graph();
    let mut moves = Vec::new();
    let mut seen = VertexSet::singleton(0);
    let mut stack = vec![0];
    while let Some(&u) = stack.last() {
        match g.neighbors(u).difference(seen).first() {
            Some(w) => {
                seen.insert(w);
                moves.push(Move::new(u, w));
                stack.push(w);
            }
            None => {
                stack.pop();
                if let Some(&p) = stack.last() {
                    moves.push(Move::new(u, p));
                }
            }
        }
    }
    Certificate::new(g, kind, vec![0], moves, Claim::CompletelyMobile)
}

fn inexact_report(geo: &Geometry, kind: PiKind, labeled: bool, budget: &Budget, started: Instant) -> SearchReport {
    let mut cert = single_robot_certificate(geo, kind);
    if !labeled {
        cert.claim = Claim::Mobile;
        cert.labeled = false;
    }
    SearchReport {
        value: 1,
        exact: false,
        kind,
        labeled,
        lower_witness: cert,
        upper_source: UpperSource::Unknown,
        states_explored: budget.used(),
        elapsed: started.elapsed(),
    }
}

/// `mob(G)` for general position, `mobmv(G)` for mutual visibility.
pub fn mobile_number(geo: &Geometry, kind: PiKind, opts: SearchOptions) -> Result<SearchReport, MobilityError> {
    check_graph(geo, kind)?;
    let started = Instant::now();
    let mut budget = Budget::new(opts.budget);
    let (top, _) = geo.max_pi_set(kind);
    let all = geo.graph().vertices();
    for t in (1..=top).rev() {
        let found = scan_components(geo, kind, t, &mut budget, |comp, _| {
            Ok((comp.union == all).then(|| coverage_certificate(geo, kind, comp)))
        });
        match found {
            Ok(Some(cert)) => {
                return Ok(SearchReport {
                    value: t,
                    exact: true,
                    kind,
                    labeled: false,
                    lower_witness: cert,
                    upper_source: if t == top { UpperSource::MaxPiSet } else { UpperSource::ExhaustedSize },
                    states_explored: budget.used(),
                    elapsed: started.elapsed(),
                })
            }
            Ok(None) => {}
            Err(MobilityError::Overflow { .. }) => return Ok(inexact_report(geo, kind, false, &budget, started)),
            Err(e) => return Err(e),
        }
    }
    unreachable!("a single robot is always mobile on a connected graph")
}

/// `cmob(G)` / `cmobmv(G)`: the largest number of robots that can each
/// visit every vertex.
pub fn completely_mobile_number(
    geo: &Geometry,
    kind: PiKind,
    opts: SearchOptions,
) -> Result<SearchReport, MobilityError> {
    check_graph(geo, kind)?;
    let started = Instant::now();
    let mut budget = Budget::new(opts.budget);
    let (top, _) = geo.max_pi_set(kind);
    let all = geo.graph().vertices();
    for t in (1..=top).rev() {
        let found = scan_components(geo, kind, t, &mut budget, |comp, budget| {
            if comp.union != all {
                return Ok(None);
            }
            let hol = Holonomy::compute(geo, kind, comp, budget)?;
            Ok(hol.is_complete(all).then(|| hol.certificate(geo, kind, comp)))
        });
        match found {
            Ok(Some(cert)) => {
                return Ok(SearchReport {
                    value: t,
                    exact: true,
                    kind,
                    labeled: true,
                    lower_witness: cert,
                    upper_source: if t == top { UpperSource::MaxPiSet } else { UpperSource::ExhaustedSize },
                    states_explored: budget.used(),
                    elapsed: started.elapsed(),
                })
            }
            Ok(None) => {}
            Err(MobilityError::Overflow { .. }) => return Ok(inexact_report(geo, kind, true, &budget, started)),
            Err(e) => return Err(e),
        }
    }
    unreachable!("a single robot is always completely mobile on a connected graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{combine, complete, cycle, family, path, Combine};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn geo(g: &crate::Graph) -> Geometry {
        Geometry::new(g).unwrap()
    }

    #[test]
    fn moves_on_small_graphs() {
        let p3 = geo(&path(3).unwrap());
        assert_eq!(legal_moves(&p3, PiKind::GP, set(&[0, 2])).unwrap(), vec![Move::new(0, 1), Move::new(2, 1)]);
        let k3 = geo(&complete(3).unwrap());
        assert!(legal_moves(&k3, PiKind::GP, set(&[0, 1, 2])).unwrap().is_empty());
        let c4 = geo(&cycle(4).unwrap());
        assert!(legal_moves(&c4, PiKind::MV, set(&[0, 1, 2])).unwrap().contains(&Move::new(2, 3)));
        assert!(matches!(legal_moves(&p3, PiKind::GP, set(&[0, 1, 2])), Err(MobilityError::NotPiSet { .. })));
    }

    #[test]
    fn exploration() {
        let k = geo(&complete(5).unwrap());
        let c = explore(&k, PiKind::GP, k.graph().vertices(), 10).unwrap();
        assert_eq!((c.len(), c.visited_union()), (1, k.graph().vertices()));
        let p = geo(&path(6).unwrap());
        let c = explore(&p, PiKind::GP, set(&[0, 5]), 1000).unwrap();
        assert_eq!(c.visited_union(), p.graph().vertices());
        assert!(matches!(explore(&p, PiKind::GP, set(&[0, 5]), 3), Err(MobilityError::Overflow { limit: 3 })));
    }

    #[test]
    fn mobile_sets_certify() {
        let h = geo(&family(&"half_graph:4".parse().unwrap()).unwrap());
        let m = is_mobile(&h, PiKind::GP, set(&[4, 5, 6, 7]), 1 << 20).unwrap();
        assert!(m.mobile);
        assert!(verify_certificate(&m.certificate.unwrap()).accepted);
    }

    #[test]
    fn strong_grid_numbers() {
        let p3 = path(3).unwrap();
        let g = geo(&combine(Combine::Strong, &p3, &p3).unwrap());
        let mob = mobile_number(&g, PiKind::GP, SearchOptions::default()).unwrap();
        assert_eq!((mob.value, mob.exact), (4, true));
        assert!(verify_certificate(&mob.lower_witness).accepted);
        let mobmv = mobile_number(&g, PiKind::MV, SearchOptions::default()).unwrap();
        assert_eq!(mobmv.value, 5);
        assert!(verify_certificate(&mobmv.lower_witness).accepted);
    }

    #[test]
    fn complete_graph_numbers() {
        for n in 2..=5 {
            let k = geo(&complete(n).unwrap());
            assert_eq!(mobile_number(&k, PiKind::GP, SearchOptions::default()).unwrap().value, n);
            let c = completely_mobile_number(&k, PiKind::GP, SearchOptions::default()).unwrap();
            assert_eq!(c.value, n - 1);
            assert!(verify_certificate(&c.lower_witness).accepted);
        }
    }

    #[test]
    fn budget_overflow_is_flagged() {
        let g = geo(&family(&"hypercube:3".parse().unwrap()).unwrap());
        let r = mobile_number(&g, PiKind::MV, SearchOptions { budget: 5 }).unwrap();
        assert!(!r.exact);
        assert_eq!(r.upper_source, UpperSource::Unknown);
        assert!(verify_certificate(&r.lower_witness).accepted);
    }
}
