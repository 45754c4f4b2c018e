//! Labeled robots: which vertices each individual robot can reach.
//!
//! The holonomy engine never enumerates labeled states. It fixes a
//! breadth-first tree of the unlabeled component, which assigns to every
//! member `C` a bijection `phi_C` from robot slots to the vertices of `C`.
//! Each non-tree edge closes a loop at the root and induces a permutation of
//! the slots; these permutations generate every relabelling achievable at
//! the root. Robot `j` can then stand on exactly `phi_C(i)` for every member
//! `C` and every slot `i` in the orbit of `j`.

use super::{explore_with, for_each_move, require_pi, undo, Budget, Certificate, Claim, Component, MobilityError, Move};
use crate::position::{Geometry, PiKind};
use crate::vertex_set::VertexSet;
use rustc_hash::FxHashSet;
use std::collections::VecDeque;

/// Robot `i` stands on `positions[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledConfig(Vec<usize>);

impl LabeledConfig {
    pub fn new(positions: Vec<usize>, n: usize) -> Result<Self, MobilityError> {
        let mut seen = VertexSet::EMPTY;
        for &v in &positions {
            if v >= n || seen.contains(v) {
                return Err(MobilityError::InvalidConfig(format!("position {v} is out of range or repeated")));
            }
            seen.insert(v);
        }
        Ok(LabeledConfig(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn occupied(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// Breadth-first search over labeled states.
    Oracle,
    Holonomy,
    /// Oracle up to six robots, holonomy above.
    Auto,
}

/// For each robot, the set of vertices it occupies over all reachable
/// labeled configurations.
pub fn labeled_reach(
    geo: &Geometry,
    kind: PiKind,
    config: &LabeledConfig,
    cap: u64,
    engine: Engine,
) -> Result<Vec<VertexSet>, MobilityError> {
    let use_oracle = match engine {
        Engine::Oracle => true,
        Engine::Holonomy => false,
        Engine::Auto => config.len() <= 6,
    };
    if use_oracle {
        return labeled_reach_oracle(geo, kind, config, cap);
    }
    let root = config.occupied();
    require_pi(geo, kind, root)?;
    let mut budget = Budget::new(cap);
    let comp = explore_with(geo, kind, root, &mut budget)?;
    let hol = Holonomy::compute(geo, kind, &comp, &mut budget)?;
    // root slots are ranks in the sorted occupancy
    let slots = root.to_vec();
    Ok(config
        .positions()
        .iter()
        .map(|v| hol.visits[slots.binary_search(v).unwrap()])
        .collect())
}

pub fn labeled_reach_oracle(
    geo: &Geometry,
    kind: PiKind,
    config: &LabeledConfig,
    cap: u64,
) -> Result<Vec<VertexSet>, MobilityError> {
    require_pi(geo, kind, config.occupied())?;
    let mut budget = Budget::new(cap);
    let start: Vec<u8> = config.positions().iter().map(|&v| v as u8).collect();
    let mut visits: Vec<VertexSet> = config.positions().iter().map(|&v| VertexSet::singleton(v)).collect();
    let mut seen: FxHashSet<Vec<u8>> = FxHashSet::default();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    budget.charge(1)?;
    let g = geo.graph();
    while let Some(state) = queue.pop_front() {
        let occ: VertexSet = state.iter().map(|&v| v as usize).collect();
        for r in 0..state.len() {
            let u = state[r] as usize;
            let base = occ.without(u);
            for w in g.neighbors(u).difference(occ).iter() {
                if !geo.can_add(kind, base, w) {
                    continue;
                }
                let mut next = state.clone();
                next[r] = w as u8;
                if seen.insert(next.clone()) {
                    budget.charge(1)?;
                    visits[r].insert(w);
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(visits)
}

#[derive(Clone, Debug)]
struct Generator {
    perm: Vec<u8>,
    member: usize,
    mv: Move,
    target: usize,
}

/// Slot permutations induced by closed walks at a component's root.
#[derive(Clone, Debug)]
pub struct Holonomy {
    t: usize,
    /// `phi[c * t + j]`: vertex of slot `j` in member `c`.
    phi: Vec<u8>,
    /// Only generators that joined two orbits when harvested.
    gens: Vec<Generator>,
    orbit: Vec<usize>,
    visits: Vec<VertexSet>,
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl Holonomy {
    pub fn compute(geo: &Geometry, kind: PiKind, comp: &Component, budget: &mut Budget) -> Result<Self, MobilityError> {
        let t = comp.root().len();
        let len = comp.len();
        let mut phi: Vec<u8> = Vec::with_capacity(len * t);
        phi.extend(comp.root().iter().map(|v| v as u8));
        for c in 1..len {
            let (p, m) = comp.parent_of(c).unwrap();
            for j in 0..t {
                let v = phi[p * t + j];
                phi.push(if v as usize == m.from { m.to as u8 } else { v });
            }
        }
        budget.charge(len as u64)?;

        let mut uf: Vec<usize> = (0..t).collect();
        let mut gens = Vec::new();
        let mut inv = [0u8; crate::MAX_VERTICES];
        for c in 0..len {
            let cur = comp.members()[c];
            let parent = comp.parent_of(c);
            let mut edges = Vec::new();
            for_each_move(geo, kind, cur, |m| edges.push(m));
            for m in edges {
                let next = cur.without(m.from).with(m.to);
                let c2 = comp.index_of(next).expect("component is closed under moves");
                if comp.parent_of(c2) == Some((c, m)) || parent == Some((c2, m.reversed())) {
                    continue;
                }
                for j in 0..t {
                    inv[phi[c2 * t + j] as usize] = j as u8;
                }
                let perm: Vec<u8> = (0..t)
                    .map(|j| {
                        let v = phi[c * t + j] as usize;
                        inv[if v == m.from { m.to } else { v }]
                    })
                    .collect();
                let mut merged = false;
                for (j, &k) in perm.iter().enumerate() {
                    let (a, b) = (find(&mut uf, j), find(&mut uf, k as usize));
                    if a != b {
                        uf[a.max(b)] = a.min(b);
                        merged = true;
                    }
                }
                if merged {
                    gens.push(Generator { perm, member: c, mv: m, target: c2 });
                }
            }
        }
        let orbit: Vec<usize> = (0..t).map(|j| find(&mut uf, j)).collect();
        let mut orbit_visits = vec![VertexSet::EMPTY; t];
        for c in 0..len {
            for j in 0..t {
                orbit_visits[orbit[j]].insert(phi[c * t + j] as usize);
            }
        }
        let visits = (0..t).map(|j| orbit_visits[orbit[j]]).collect();
        Ok(Holonomy { t, phi, gens, orbit, visits })
    }

    /// Vertices reachable by the robot starting in slot `j` (the `j`-th
    /// smallest vertex of the root).
    pub fn visits(&self) -> &[VertexSet] {
        &self.visits
    }

    /// Smallest slot in the orbit of each slot.
    pub fn orbits(&self) -> &[usize] {
        &self.orbit
    }

    pub fn is_complete(&self, all: VertexSet) -> bool {
        self.visits.iter().all(|&v| v == all)
    }

    /// Generator indices whose loops carry slot `from` to slot `to`.
    fn word(&self, from: usize, to: usize) -> Vec<usize> {
        let mut prev = vec![None; self.t];
        let mut seen = vec![false; self.t];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(k) = queue.pop_front() {
            if k == to {
                break;
            }
            for (gi, g) in self.gens.iter().enumerate() {
                let next = g.perm[k] as usize;
                if !seen[next] {
                    seen[next] = true;
                    prev[next] = Some((k, gi));
                    queue.push_back(next);
                }
            }
        }
        let mut word = Vec::new();
        let mut k = to;
        while let Some((p, gi)) = prev[k] {
            word.push(gi);
            k = p;
        }
        word.reverse();
        word
    }

    fn loop_moves(&self, comp: &Component, gi: usize) -> Vec<Move> {
        let g = &self.gens[gi];
        let mut moves = comp.path_to(g.member);
        moves.push(g.mv);
        moves.extend(undo(&comp.path_to(g.target)));
        moves
    }

    /// A labeled certificate in which every robot reaches every vertex it
    /// can: for each missing (robot, vertex) pair, permute the robot into the
    /// right slot with generator loops, walk the tree out, and undo it all.
    pub fn certificate(&self, geo: &Geometry, kind: PiKind, comp: &Component) -> Certificate {
        let t = self.t;
        let n = geo.order();
        let root = comp.root().to_vec();
        // first (member, slot) realising each (orbit, vertex)
        let mut where_: Vec<Option<(usize, usize)>> = vec![None; t * n];
        for c in 0..comp.len() {
            for j in 0..t {
                let cell = &mut where_[self.orbit[j] * n + self.phi[c * t + j] as usize];
                if cell.is_none() {
                    *cell = Some((c, j));
                }
            }
        }
        let mut robot_at = vec![usize::MAX; n];
        for (j, &v) in root.iter().enumerate() {
            robot_at[v] = j;
        }
        let mut seen: Vec<VertexSet> = root.iter().map(|&v| VertexSet::singleton(v)).collect();
        let mut moves = Vec::new();
        let replay = |seq: &[Move], robot_at: &mut Vec<usize>, seen: &mut Vec<VertexSet>| {
            for m in seq {
                let r = robot_at[m.from];
                robot_at[m.from] = usize::MAX;
                robot_at[m.to] = r;
                seen[r].insert(m.to);
            }
        };
        for j in 0..t {
            for v in self.visits[j].iter() {
                if seen[j].contains(v) {
                    continue;
                }
                let (c, i) = where_[self.orbit[j] * n + v].expect("v is in the orbit's reach");
                let mut seq = Vec::new();
                for gi in self.word(j, i) {
                    seq.extend(self.loop_moves(comp, gi));
                }
                seq.extend(comp.path_to(c));
                let back: Vec<Move> = undo(&seq).collect();
                replay(&seq, &mut robot_at, &mut seen);
                replay(&back, &mut robot_at, &mut seen);
                moves.extend(seq);
                moves.extend(back);
            }
        }
        let claim = if self.is_complete(geo.graph().vertices()) { Claim::CompletelyMobile } else { Claim::Mobile };
        let mut cert = Certificate::new(geo.graph(), kind, root, moves, claim);
        cert.labeled = true;
        cert
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, family};
    use crate::mobility::verify_certificate;

    fn reach(g: &crate::Graph, kind: PiKind, pos: &[usize], engine: Engine) -> Vec<VertexSet> {
        let geo = Geometry::new(g).unwrap();
        let c = LabeledConfig::new(pos.to_vec(), g.order()).unwrap();
        labeled_reach(&geo, kind, &c, 1 << 22, engine).unwrap()
    }

    #[test]
    fn triangle() {
        let k3 = complete(3).unwrap();
        for e in [Engine::Oracle, Engine::Holonomy] {
            let full = reach(&k3, PiKind::GP, &[2, 0, 1], e);
            assert_eq!(full, vec![VertexSet::singleton(2), VertexSet::singleton(0), VertexSet::singleton(1)]);
            let two = reach(&k3, PiKind::GP, &[1, 0], e);
            assert!(two.iter().all(|&s| s == k3.vertices()));
        }
    }

    #[test]
    fn half_graph_is_not_completely_mobile() {
        let g = family(&"half_graph:4".parse().unwrap()).unwrap();
        let b = [4, 5, 6, 7];
        let h = reach(&g, PiKind::GP, &b, Engine::Holonomy);
        assert_eq!(h, reach(&g, PiKind::GP, &b, Engine::Oracle));
        assert!(h.iter().any(|&s| s != g.vertices()));
    }

    #[test]
    fn certificate_from_holonomy() {
        let k = complete(5).unwrap();
        let geo = Geometry::new(&k).unwrap();
        let mut budget = Budget::new(1 << 20);
        let comp = explore_with(&geo, PiKind::GP, [0, 1, 2, 3].into_iter().collect(), &mut budget).unwrap();
        let hol = Holonomy::compute(&geo, PiKind::GP, &comp, &mut budget).unwrap();
        assert!(hol.is_complete(k.vertices()));
        let cert = hol.certificate(&geo, PiKind::GP, &comp);
        assert_eq!(cert.claim, Claim::CompletelyMobile);
        assert!(verify_certificate(&cert).accepted, "{}", verify_certificate(&cert));
    }

    #[test]
    fn bad_configs() {
        assert!(LabeledConfig::new(vec![0, 0], 3).is_err());
        assert!(LabeledConfig::new(vec![3], 3).is_err());
    }
}
