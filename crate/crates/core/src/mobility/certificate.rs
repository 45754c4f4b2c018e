use crate::graph::{graph6_decode, graph6_encode, Graph};
use crate::position::{is_pi_set, PiKind, PiVariant};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A robot slides from `from` to the adjacent vertex `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Move {
    pub from: usize,
    pub to: usize,
}

impl Move {
    pub fn new(from: usize, to: usize) -> Self {
        Move { from, to }
    }

    pub fn reversed(self) -> Self {
        Move { from: self.to, to: self.from }
    }
}

impl From<(usize, usize)> for Move {
    fn from((from, to): (usize, usize)) -> Self {
        Move { from, to }
    }
}

impl From<Move> for (usize, usize) {
    fn from(m: Move) -> Self {
        (m.from, m.to)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// Reverses a move list so that replaying it undoes the original.
pub fn undo(moves: &[Move]) -> impl Iterator<Item = Move> + '_ {
    moves.iter().rev().map(|m| m.reversed())
}

/// What a certificate's replay is meant to show.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Claim {
    /// Every vertex is occupied at some point.
    Mobile,
    /// Every robot occupies every vertex at some point.
    CompletelyMobile,
    /// Some robot occupies `vertex`.
    Visits { vertex: usize },
    /// Robot number `robot` (index into `start`) occupies `vertex`.
    RobotVisits { robot: usize, vertex: usize },
}

/// A start configuration and a move list whose replay witnesses a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub graph6: String,
    pub kind: PiVariant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<usize>,
    pub labeled: bool,
    pub start: Vec<usize>,
    pub moves: Vec<Move>,
    pub claim: Claim,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(g: &Graph, kind: PiKind, start: Vec<usize>, moves: Vec<Move>, claim: Claim) -> Self {
        let labeled = matches!(claim, Claim::CompletelyMobile | Claim::RobotVisits { .. });
        Certificate {
            graph6: graph6_encode(g),
            kind: kind.variant,
            radius: kind.radius,
            labeled,
            start,
            moves,
            claim,
            family: g.name().map(str::to_string),
            notes: Vec::new(),
        }
    }

    pub fn pi_kind(&self) -> PiKind {
        PiKind { variant: self.kind, radius: self.radius }
    }

    pub fn robots(&self) -> usize {
        self.start.len()
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Why replay stopped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// 0 for the start configuration, `i` for the `i`-th move (1-based),
    /// `moves + 1` for the final claim check.
    pub step: usize,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub accepted: bool,
    pub robots: usize,
    pub moves: usize,
    pub claim: Claim,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    /// Vertices never occupied during replay.
    pub unvisited: Vec<usize>,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "accepted: {} robots, {} moves, claim {:?}", self.robots, self.moves, self.claim),
            Some(x) => write!(f, "rejected at step {}: {}", x.step, x.reason),
        }
    }
}

/// Replays a certificate from scratch, checking every intermediate
/// configuration with the position-set predicates.
pub fn verify_certificate(cert: &Certificate) -> Verdict {
    let mut verdict = Verdict {
        accepted: false,
        robots: cert.start.len(),
        moves: cert.moves.len(),
        claim: cert.claim,
        failure: None,
        unvisited: Vec::new(),
    };
    let fail = |mut v: Verdict, step: usize, reason: String| {
        v.failure = Some(Failure { step, reason });
        v
    };
    let g = match graph6_decode(&cert.graph6) {
        Ok(g) => g,
        Err(e) => return fail(verdict, 0, format!("host graph: {e}")),
    };
    let d = g.distances();
    if !d.is_connected() {
        return fail(verdict, 0, "host graph is disconnected".into());
    }
    let kind = cert.pi_kind();
    if let Err(e) = kind.validate() {
        return fail(verdict, 0, e.to_string());
    }
    let n = g.order();
    let mut pos = cert.start.clone();
    let mut occupied = VertexSet::EMPTY;
    for &v in &pos {
        if v >= n || occupied.contains(v) {
            return fail(verdict, 0, format!("start vertex {v} is out of range or repeated"));
        }
        occupied.insert(v);
    }
    if pos.is_empty() {
        return fail(verdict, 0, "no robots".into());
    }
    if !is_pi_set(&g, &d, kind, occupied).unwrap_or(false) {
        return fail(verdict, 0, format!("start is not a {kind} set"));
    }
    // robot_at[v] = index of the robot on v
    let mut robot_at = vec![usize::MAX; n];
    for (i, &v) in pos.iter().enumerate() {
        robot_at[v] = i;
    }
    let mut seen: Vec<VertexSet> = pos.iter().map(|&v| VertexSet::singleton(v)).collect();
    for (i, m) in cert.moves.iter().enumerate() {
        let step = i + 1;
        if m.from >= n || m.to >= n {
            return fail(verdict, step, format!("move {m} leaves the graph"));
        }
        if !occupied.contains(m.from) {
            return fail(verdict, step, format!("move {m}: no robot on {}", m.from));
        }
        if occupied.contains(m.to) {
            return fail(verdict, step, format!("move {m}: {} is occupied", m.to));
        }
        if !g.adjacent(m.from, m.to) {
            return fail(verdict, step, format!("move {m}: not an edge"));
        }
        occupied = occupied.without(m.from).with(m.to);
        if !is_pi_set(&g, &d, kind, occupied).unwrap_or(false) {
            return fail(verdict, step, format!("move {m}: result is not a {kind} set"));
        }
        let r = robot_at[m.from];
        robot_at[m.from] = usize::MAX;
        robot_at[m.to] = r;
        pos[r] = m.to;
        seen[r].insert(m.to);
    }
    let all = g.vertices();
    let union = seen.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
    verdict.unvisited = all.difference(union).to_vec();
    let end = cert.moves.len() + 1;
    let ok = match cert.claim {
        Claim::Mobile => union == all,
        Claim::CompletelyMobile => seen.iter().all(|&s| s == all),
        Claim::Visits { vertex } => union.contains(vertex),
        Claim::RobotVisits { robot, vertex } => seen.get(robot).is_some_and(|s| s.contains(vertex)),
    };
    if !ok {
        let reason = match cert.claim {
            Claim::CompletelyMobile => {
                let (r, s) = seen.iter().enumerate().find(|(_, &s)| s != all).unwrap();
                format!("robot {r} never visits {:?}", all.difference(*s).to_vec())
            }
            _ => format!("claim {:?} not met; unvisited {:?}", cert.claim, verdict.unvisited),
        };
        return fail(verdict, end, reason);
    }
    verdict.accepted = true;
    verdict
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn json_shape() {
        let c = Certificate::new(&path(3).unwrap(), PiKind::GP, vec![0, 2], vec![Move::new(0, 1)], Claim::Visits { vertex: 1 });
        let j = c.to_json();
        assert!(j.contains("\"moves\":[[0,1]]"), "{j}");
        assert!(j.contains("\"kind\":\"general_position\""));
        assert_eq!(Certificate::from_json(&j).unwrap(), c);
        assert!(verify_certificate(&c).accepted);
    }

    #[test]
    fn rejections() {
        let c4 = cycle(4).unwrap();
        let bad_edge = Certificate::new(&c4, PiKind::MV, vec![0, 1], vec![Move::new(0, 2)], Claim::Mobile);
        assert_eq!(verify_certificate(&bad_edge).failure.unwrap().step, 1);
        let occupied = Certificate::new(&c4, PiKind::MV, vec![0, 1], vec![Move::new(0, 1)], Claim::Mobile);
        assert_eq!(verify_certificate(&occupied).failure.unwrap().step, 1);
        let short = Certificate::new(&c4, PiKind::MV, vec![0, 1], vec![Move::new(1, 2)], Claim::Mobile);
        assert_eq!(verify_certificate(&short).failure.unwrap().step, 2);
        let not_pi = Certificate::new(&path(3).unwrap(), PiKind::GP, vec![0, 1, 2], vec![], Claim::Mobile);
        assert_eq!(verify_certificate(&not_pi).failure.unwrap().step, 0);
    }

    #[test]
    fn full_clique_is_mobile_without_moves() {
        let k = complete(4).unwrap();
        let c = Certificate::new(&k, PiKind::GP, vec![0, 1, 2, 3], vec![], Claim::Mobile);
        assert!(verify_certificate(&c).accepted);
        let c = Certificate { claim: Claim::CompletelyMobile, ..c };
        assert!(!verify_certificate(&c).accepted);
    }
}
