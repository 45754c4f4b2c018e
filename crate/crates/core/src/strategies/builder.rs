use super::StrategyError;
use crate::mobility::{
    explore, undo, verify_certificate, Budget, Certificate, Claim, Holonomy, MobilityError, Move,
};
use crate::position::{Geometry, PiKind};
use crate::vertex_set::VertexSet;
use rustc_hash::FxHashMap;

const NONE: usize = usize::MAX;

/// Incremental schedule writer with labelled robots. Robot `i` starts at
/// `start[i]`; every move is checked against the π predicate as it is made.
pub struct Builder<'a> {
    geo: &'a Geometry,
    kind: PiKind,
    start: Vec<usize>,
    pos: Vec<usize>,
    at: Vec<usize>,
    occupied: VertexSet,
    seen: Vec<VertexSet>,
    moves: Vec<Move>,
    history: Vec<VertexSet>,
    notes: Vec<String>,
}

/// Saved builder state for [`Builder::rewind`].
#[derive(Clone)]
pub struct Mark {
    pos: Vec<usize>,
    seen: Vec<VertexSet>,
    len: usize,
}

impl<'a> Builder<'a> {
    pub fn new(geo: &'a Geometry, kind: PiKind, start: Vec<usize>) -> Result<Self, StrategyError> {
        kind.validate()?;
        let n = geo.order();
        let mut at = vec![NONE; n];
        for (i, &v) in start.iter().enumerate() {
            if v >= n || at[v] != NONE {
                return Err(MobilityError::InvalidConfig(format!("bad start configuration {start:?}")).into());
            }
            at[v] = i;
        }
        let occupied: VertexSet = start.iter().copied().collect();
        if !geo.is_pi(kind, occupied) {
            return Err(MobilityError::NotPiSet { set: occupied.to_vec(), kind }.into());
        }
        Ok(Builder {
            geo,
            kind,
            seen: start.iter().map(|&v| VertexSet::singleton(v)).collect(),
            pos: start.clone(),
            start,
            at,
            occupied,
            moves: Vec::new(),
            history: vec![occupied],
            notes: Vec::new(),
        })
    }

    pub fn geometry(&self) -> &'a Geometry {
        self.geo
    }

    pub fn robots(&self) -> usize {
        self.start.len()
    }

    pub fn start(&self) -> &[usize] {
        &self.start
    }

    pub fn pos(&self, robot: usize) -> usize {
        self.pos[robot]
    }

    pub fn robot_at(&self, v: usize) -> Option<usize> {
        (self.at[v] != NONE).then_some(self.at[v])
    }

    pub fn occupied(&self) -> VertexSet {
        self.occupied
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Configuration after the first `i` moves.
    pub fn config_at(&self, i: usize) -> VertexSet {
        self.history[i]
    }

    /// Vertices visited by robot `robot` so far.
    pub fn seen_by(&self, robot: usize) -> VertexSet {
        self.seen[robot]
    }

    /// Vertices visited by any robot so far.
    pub fn covered(&self) -> VertexSet {
        self.seen.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// Slides the robot at `from` to `to`.
    pub fn step(&mut self, from: usize, to: usize) -> Result<(), String> {
        let n = self.geo.order();
        if from >= n || to >= n {
            return Err(format!("move {from}->{to} leaves the graph"));
        }
        let robot = self.robot_at(from).ok_or_else(|| format!("no robot at {from}"))?;
        if self.occupied.contains(to) {
            return Err(format!("move {from}->{to}: target is occupied"));
        }
        if !self.geo.graph().adjacent(from, to) {
            return Err(format!("move {from}->{to}: not an edge"));
        }
        let base = self.occupied.without(from);
        if !self.geo.can_add(self.kind, base, to) {
            return Err(format!("move {from}->{to} breaks the {} property", self.kind));
        }
        self.at[from] = NONE;
        self.at[to] = robot;
        self.pos[robot] = to;
        self.occupied = base.with(to);
        self.seen[robot].insert(to);
        self.moves.push(Move::new(from, to));
        self.history.push(self.occupied);
        Ok(())
    }

    pub fn step_robot(&mut self, robot: usize, to: usize) -> Result<(), String> {
        self.step(self.pos[robot], to)
    }

    pub fn apply(&mut self, moves: &[Move]) -> Result<(), String> {
        moves.iter().try_for_each(|m| self.step(m.from, m.to))
    }

    /// Replays, in reverse, every move made since `mark`.
    pub fn undo_since(&mut self, mark: usize) -> Result<(), String> {
        let back: Vec<Move> = undo(&self.moves[mark..]).collect();
        self.apply(&back)
    }

    /// Walks the robot at `from` to `to` along a shortest path of free
    /// vertices on which every step is legal, trying paths in
    /// lexicographic order.
    pub fn walk(&mut self, from: usize, to: usize) -> Result<(), String> {
        if from == to {
            return Ok(());
        }
        let mark = self.mark();
        if self.walk_rec(from, to) {
            Ok(())
        } else {
            self.rewind(mark);
            Err(format!("no legal geodesic walk {from}->{to}"))
        }
    }

    fn walk_rec(&mut self, cur: usize, to: usize) -> bool {
        if cur == to {
            return true;
        }
        let d = self.geo.distances();
        let k = d.raw(cur, to) as usize;
        let next = self.geo.graph().neighbors(cur).intersection(d.sphere(to, k - 1));
        for w in next.difference(self.occupied).iter() {
            let mark = self.mark();
            if self.step(cur, w).is_ok() && self.walk_rec(w, to) {
                return true;
            }
            self.rewind(mark);
        }
        false
    }

    pub fn mark(&self) -> Mark {
        Mark { pos: self.pos.clone(), seen: self.seen.clone(), len: self.moves.len() }
    }

    pub fn rewind(&mut self, mark: Mark) {
        for &v in &self.pos {
            self.at[v] = NONE;
        }
        for (i, &v) in mark.pos.iter().enumerate() {
            self.at[v] = i;
        }
        self.occupied = mark.pos.iter().copied().collect();
        self.pos = mark.pos;
        self.seen = mark.seen;
        self.moves.truncate(mark.len);
        self.history.truncate(mark.len + 1);
    }

    /// Runs `f` as one transaction. On failure the builder is rewound and
    /// the failure is noted under `label`.
    pub fn segment(&mut self, label: &str, f: impl FnOnce(&mut Self) -> Result<(), String>) -> bool {
        let mark = self.mark();
        match f(self) {
            Ok(()) => true,
            Err(e) => {
                self.rewind(mark);
                self.note(format!("{label}: skipped, {e}"));
                false
            }
        }
    }

    /// Reaches every vertex not yet covered by searching the configuration
    /// space from the current set; each vertex gets a path there and back.
    /// Returns the number of vertices filled in.
    pub fn fill(&mut self, cap: u64) -> Result<usize, StrategyError> {
        let all = self.geo.graph().vertices();
        let mut missing = all.difference(self.covered());
        if missing.is_empty() {
            return Ok(0);
        }
        let root = self.occupied;
        let mut members = vec![root];
        let mut parent: Vec<(usize, Move)> = vec![(NONE, Move::new(0, 0))];
        let mut index: FxHashMap<VertexSet, ()> = FxHashMap::default();
        index.insert(root, ());
        let mut first: Vec<(usize, usize)> = Vec::new();
        let mut budget = Budget::new(cap);
        let mut head = 0;
        while head < members.len() && !missing.is_empty() {
            let cur = members[head];
            for u in cur.iter() {
                let base = cur.without(u);
                for w in self.geo.graph().neighbors(u).difference(cur).iter() {
                    if !self.geo.can_add(self.kind, base, w) {
                        continue;
                    }
                    let next = base.with(w);
                    if index.insert(next, ()).is_some() {
                        continue;
                    }
                    budget.charge(1)?;
                    members.push(next);
                    parent.push((head, Move::new(u, w)));
                    if missing.contains(w) {
                        missing.remove(w);
                        first.push((w, members.len() - 1));
                    }
                }
            }
            head += 1;
        }
        let mut filled = 0;
        for (v, mut i) in first {
            if self.covered().contains(v) {
                continue;
            }
            let mut path = Vec::new();
            while i != 0 {
                path.push(parent[i].1);
                i = parent[i].0;
            }
            path.reverse();
            let mark = self.len();
            self.apply(&path).map_err(StrategyError::Rejected)?;
            self.undo_since(mark).map_err(StrategyError::Rejected)?;
            filled += 1;
        }
        if filled > 0 {
            self.note(format!("search fill: {filled} vertices reached by configuration search"));
        }
        Ok(filled)
    }

    /// Appends a labelled tour from the current configuration in which
    /// every robot visits every vertex it can reach, found with the
    /// holonomy engine. Fails if the component is not completely mobile.
    pub fn fill_labeled(&mut self, cap: u64) -> Result<(), StrategyError> {
        let mut budget = Budget::new(cap);
        let comp = explore(self.geo, self.kind, self.occupied, cap)?;
        budget.charge(comp.len() as u64)?;
        let hol = Holonomy::compute(self.geo, self.kind, &comp, &mut budget)?;
        if !hol.is_complete(self.geo.graph().vertices()) {
            return Err(StrategyError::NotApplicable("configuration is not completely mobile".into()));
        }
        let tour = hol.certificate(self.geo, self.kind, &comp);
        self.apply(&tour.moves).map_err(StrategyError::Rejected)?;
        self.note(format!("permutation tour: {} moves found by configuration search", tour.moves.len()));
        Ok(())
    }

    /// Start positions, moves and notes, without verification.
    pub fn into_parts(self) -> (Vec<usize>, Vec<Move>, Vec<String>) {
        (self.start, self.moves, self.notes)
    }

    /// Emits the certificate and checks it with the independent verifier.
    pub fn finish(self, claim: Claim) -> Result<Certificate, StrategyError> {
        let mut cert = Certificate::new(self.geo.graph(), self.kind, self.start, self.moves, claim);
        cert.notes = self.notes;
        let verdict = verify_certificate(&cert);
        if !verdict.accepted {
            return Err(StrategyError::Rejected(verdict.to_string()));
        }
        Ok(cert)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn steps_and_rewind() {
        let g = cycle(6).unwrap();
        let geo = Geometry::new(&g).unwrap();
        let mut b = Builder::new(&geo, PiKind::GP, vec![0, 2]).unwrap();
        assert!(b.step(0, 2).is_err());
        assert!(b.step(1, 0).is_err());
        assert!(b.step(0, 3).is_err());
        b.step(0, 1).unwrap();
        let m = b.mark();
        b.step(2, 3).unwrap();
        assert_eq!(b.covered().to_vec(), vec![0, 1, 2, 3]);
        b.rewind(m);
        assert_eq!(b.occupied().to_vec(), vec![1, 2]);
        assert_eq!(b.len(), 1);
        assert_eq!(b.robot_at(1), Some(0));
        assert!(!b.segment("bad", |b| b.step(1, 2)));
        b.undo_since(0).unwrap();
        assert_eq!(b.occupied().to_vec(), vec![0, 2]);
    }

    #[test]
    fn walk_and_fill() {
        let g = path(6).unwrap();
        let geo = Geometry::new(&g).unwrap();
        let mut b = Builder::new(&geo, PiKind::MV, vec![0, 1]).unwrap();
        b.walk(1, 5).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.walk(0, 5).is_err());
        assert_eq!(b.len(), 4);
        let mut b = Builder::new(&geo, PiKind::MV, vec![2, 3]).unwrap();
        assert_eq!(b.fill(1000).unwrap(), 4);
        let cert = b.finish(Claim::Mobile).unwrap();
        assert_eq!(cert.notes.len(), 1);
    }

    #[test]
    fn labeled_fill() {
        let g = cycle(4).unwrap();
        let geo = Geometry::new(&g).unwrap();
        let mut b = Builder::new(&geo, PiKind::MV, vec![0, 1, 2]).unwrap();
        b.fill_labeled(1 << 16).unwrap();
        b.finish(Claim::CompletelyMobile).unwrap();
    }
}
