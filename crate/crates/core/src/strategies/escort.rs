//! Escort strategies around a maximum clique `W`, and the hub shuttle.
//!
//! Robots parked in `W` can be rearranged freely while a vertex of `W` is
//! free, since every subset of a clique is both in general position and
//! mutually visible. Each escort sends one robot from `W` along a shortest
//! path to its target while the others wait at chosen clique vertices.

use super::{Builder, StrategyError};
use crate::graph::{max_clique, Graph};
use crate::mobility::{Certificate, Claim};
use crate::position::{adjacent_hub_pair, Geometry, PiKind};
use crate::vertex_set::VertexSet;
use serde::Serialize;

/// Distances `(d(w, v_1), .., d(w, v_r))` from a clique vertex `w` to the
/// vertices of an escort path `v_0 .. v_r`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistanceProfile(Vec<usize>);

impl DistanceProfile {
    pub fn new(geo: &Geometry, w: usize, path: &[usize]) -> Self {
        let d = geo.distances();
        DistanceProfile(path[1..].iter().map(|&v| d.raw(w, v) as usize).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Entry `i` (1-based) is `i` or `i + 1`, and consecutive entries
    /// differ by at most one without decreasing.
    pub fn is_valid(&self) -> bool {
        let steps = self.0.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1);
        let bands = self.0.iter().enumerate().all(|(i, &x)| x == i + 1 || x == i + 2);
        steps && bands
    }

    /// The profile `(1, 2, .., r)` of `v_0` itself.
    pub fn is_geodesic(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| x == i + 1)
    }
}

struct Clique {
    w: VertexSet,
    list: Vec<usize>,
}

impl Clique {
    fn of(g: &Graph) -> Self {
        let w = max_clique(g);
        Clique { w, list: w.to_vec() }
    }

    /// A shortest path `v_0 .. v_r = v` from the clique, `v_0` the first
    /// clique vertex at least distance.
    fn path_to(&self, geo: &Geometry, v: usize) -> Vec<usize> {
        let d = geo.distances();
        let v0 = *self.list.iter().min_by_key(|&&w| (d.raw(w, v), w)).unwrap();
        d.shortest_path(geo.graph(), v0, v).expect("graph is connected")
    }

    /// Moves robots inside the clique until each `(robot, vertex)` pair in
    /// `want` holds. All robots must be in the clique with a vertex to spare.
    fn arrange(&self, b: &mut Builder<'_>, want: &[(usize, usize)]) -> Result<(), String> {
        let targets: VertexSet = want.iter().map(|p| p.1).collect();
        for _ in 0..4 * self.list.len() * (want.len() + 1) {
            let pending: Vec<_> = want.iter().copied().filter(|&(r, v)| b.pos(r) != v).collect();
            let Some(&(r0, v0)) = pending.first() else { return Ok(()) };
            if let Some(&(r, v)) = pending.iter().find(|&&(_, v)| b.robot_at(v).is_none()) {
                b.step_robot(r, v)?;
                continue;
            }
            let blocker = b.robot_at(v0).expect("target occupied");
            let spare = self
                .w
                .difference(b.occupied())
                .difference(targets)
                .first()
                .ok_or_else(|| format!("no free clique vertex to make room for R{r0}"))?;
            b.step_robot(blocker, spare)?;
        }
        Err("clique rearrangement did not settle".into())
    }
}

fn walk_path(b: &mut Builder<'_>, path: &[usize]) -> Result<(), String> {
    path.windows(2).try_for_each(|w| b.step(w[0], w[1]))
}

/// Every robot visits every clique vertex by rearrangement.
fn tour_clique(b: &mut Builder<'_>, clique: &Clique, robot: usize) -> Result<(), StrategyError> {
    for &w in &clique.list {
        if !b.seen_by(robot).contains(w) {
            clique.arrange(b, &[(robot, w)]).map_err(StrategyError::NotApplicable)?;
        }
    }
    Ok(())
}

fn targets(g: &Graph, clique: &Clique, target: Option<usize>) -> Result<Vec<usize>, StrategyError> {
    match target {
        Some(v) if v >= g.order() => Err(StrategyError::Range(format!("target {v} is not a vertex"))),
        Some(v) => Ok(vec![v]),
        None => Ok(g.vertices().difference(clique.w).to_vec()),
    }
}

/// Runs one escort per (robot, target): rearrange, walk out, undo. With a
/// single target only robot 0 escorts and the claim is that it is visited.
fn run_escorts(
    mut b: Builder<'_>,
    clique: &Clique,
    target: Option<usize>,
    mut plan: impl FnMut(&mut Builder<'_>, usize, usize) -> Result<(), String>,
) -> Result<Certificate, StrategyError> {
    let g = b.geometry().graph();
    let goals = targets(g, clique, target)?;
    let robots = if target.is_some() { 1.min(b.robots()) } else { b.robots() };
    for robot in 0..robots {
        if target.is_none() {
            tour_clique(&mut b, clique, robot)?;
        }
        for &v in &goals {
            if clique.w.contains(v) {
                clique.arrange(&mut b, &[(robot, v)]).map_err(StrategyError::NotApplicable)?;
                continue;
            }
            let base = b.len();
            let mark = b.mark();
            if let Err(e) = plan(&mut b, robot, v) {
                b.rewind(mark);
                return Err(StrategyError::NotApplicable(format!("escort of R{robot} to {v}: {e}")));
            }
            b.undo_since(base).map_err(StrategyError::Rejected)?;
        }
    }
    let claim = match target {
        Some(v) => Claim::Visits { vertex: v },
        None => Claim::CompletelyMobile,
    };
    b.finish(claim)
}

fn check_clique_graph(g: &Graph, min_omega: usize) -> Result<(Geometry, Clique), StrategyError> {
    let geo = Geometry::new(g)?;
    let clique = Clique::of(g);
    if clique.list.len() < min_omega {
        return Err(StrategyError::NotApplicable(format!(
            "clique number {} is below {min_omega}",
            clique.list.len()
        )));
    }
    Ok((geo, clique))
}

/// General-position escort with `k = 1 + ⌈ω/D⌉ - θ(s)` robots, where
/// `ω = qD + s` and `θ(s) = 1` exactly when `s = 1`. For each target the
/// robots wait on clique vertices sharing one distance profile along the
/// escort path, so the escorted robot stays equidistant from all of them.
pub fn escort_clique_gp(g: &Graph, target: Option<usize>) -> Result<Certificate, StrategyError> {
    if g.is_complete() {
        return Err(StrategyError::NotApplicable("graph is complete".into()));
    }
    let (geo, clique) = check_clique_graph(g, 3)?;
    let omega = clique.list.len();
    let diam = geo.distances().diameter().expect("connected");
    let s = omega % diam;
    let k = 1 + omega.div_ceil(diam) - usize::from(s == 1);
    if k >= omega {
        return Err(StrategyError::NotApplicable(format!("{k} robots leave no free clique vertex")));
    }
    let b = Builder::new(&geo, PiKind::GP, clique.list[..k].to_vec())?;
    run_escorts(b, &clique, target, |b, robot, v| {
        let path = clique.path_to(&geo, v);
        let profiles: Vec<DistanceProfile> = clique.list.iter().map(|&w| DistanceProfile::new(&geo, w, &path)).collect();
        debug_assert!(profiles.iter().all(DistanceProfile::is_valid));
        let mut classes: Vec<(&DistanceProfile, Vec<usize>)> = Vec::new();
        for (&w, p) in clique.list.iter().zip(&profiles) {
            match classes.iter_mut().find(|c| c.0 == p) {
                Some(c) => c.1.push(w),
                None => classes.push((p, vec![w])),
            }
        }
        let v0 = path[0];
        let waiting: Vec<usize> = if let Some(c) = classes.iter().find(|c| !c.0.is_geodesic() && c.1.len() + 1 >= k) {
            c.1[..k - 1].to_vec()
        } else {
            let own = classes.iter().find(|c| c.0.is_geodesic()).expect("v_0 has the geodesic profile");
            if own.1.len() < k {
                return Err(format!("no profile class holds {} robots", k - 1));
            }
            own.1.iter().copied().filter(|&w| w != v0).take(k - 1).collect()
        };
        let others = (0..b.robots()).filter(|&r| r != robot);
        let mut want = vec![(robot, v0)];
        want.extend(others.zip(waiting));
        clique.arrange(b, &want)?;
        walk_path(b, &path)
    })
}

/// Three-robot general-position escort for graphs with `ω ≥ 5`.
pub fn escort_omega5(g: &Graph, target: Option<usize>) -> Result<Certificate, StrategyError> {
    let (geo, clique) = check_clique_graph(g, 5)?;
    let d = geo.distances();
    let b = Builder::new(&geo, PiKind::GP, clique.list[..3].to_vec())?;
    run_escorts(b, &clique, target, |b, robot, v| {
        let path = clique.path_to(&geo, v);
        let (v0, v1) = (path[0], path[1]);
        let r = path.len() - 1;
        let others: Vec<usize> = (0..3).filter(|&x| x != robot).collect();
        let (r2, r3) = (others[0], others[1]);
        let near: Vec<usize> = clique.list.iter().copied().filter(|&w| w != v0 && g.adjacent(w, v1)).collect();
        if near.len() >= 2 {
            clique.arrange(b, &[(robot, v0), (r2, near[0]), (r3, near[1])])?;
            return walk_path(b, &path);
        }
        // j(w): first i with d(w, v_i) = i
        let j = |w: usize| (1..=r).find(|&i| d.raw(w, path[i]) as usize == i).unwrap_or(usize::MAX);
        let mut far: Vec<(usize, usize)> =
            clique.list.iter().copied().filter(|&w| !g.adjacent(w, v1) && w != v0).map(|w| (j(w), w)).collect();
        far.sort();
        if let Some(p) = far.windows(2).find(|p| p[0].0 == p[1].0) {
            clique.arrange(b, &[(robot, v0), (r2, p[0].1), (r3, p[1].1)])?;
            return walk_path(b, &path);
        }
        let [(_, w1), (l, w2), (_, w3)] = far[..3] else {
            return Err("fewer than three clique vertices off N(v_1)".into());
        };
        let q = d.shortest_path(g, w2, path[l]).expect("connected");
        let w2p = q[1];
        if g.adjacent(w2p, w1) && g.adjacent(w2p, v0) {
            clique.arrange(b, &[(robot, w2), (r2, w1), (r3, v0)])?;
            walk_path(b, &q)?;
            return walk_path(b, &path[l..]);
        }
        let star = if g.adjacent(w2p, v0) { w1 } else { v0 };
        clique.arrange(b, &[(robot, v0), (r2, w2), (r3, w3)])?;
        walk_path(b, &path[..l])?;
        b.step(w2, w2p)?;
        b.step(w3, star)?;
        walk_path(b, &path[l - 1..])
    })
}

/// Mutual-visibility escorts from a maximum clique: `ω` robots with a
/// mobile claim, and `ω - 1` robots with a completely mobile claim.
pub fn clique_mv_escort(g: &Graph) -> Result<(Certificate, Certificate), StrategyError> {
    let (geo, clique) = check_clique_graph(g, 1)?;
    let outside = g.vertices().difference(clique.w).to_vec();
    let mut b = Builder::new(&geo, PiKind::MV, clique.list.clone())?;
    for &v in &outside {
        let path = clique.path_to(&geo, v);
        let base = b.len();
        walk_path(&mut b, &path).map_err(StrategyError::Rejected)?;
        b.undo_since(base).map_err(StrategyError::Rejected)?;
    }
    let mobile = b.finish(Claim::Mobile)?;

    let omega = clique.list.len();
    let b = Builder::new(&geo, PiKind::MV, clique.list[..omega - 1].to_vec())?;
    let complete = run_escorts(b, &clique, None, |b, robot, v| {
        let path = clique.path_to(&geo, v);
        clique.arrange(b, &[(robot, path[0])])?;
        walk_path(b, &path)
    })?;
    Ok((mobile, complete))
}

/// `n - 1` robots on `V - u_2` for an adjacent hub pair `u_1 u_2`; the robot
/// on `u_1` steps to `u_2`.
pub fn hub_shuttle(g: &Graph) -> Result<Certificate, StrategyError> {
    let geo = Geometry::new(g)?;
    let (u1, u2) = adjacent_hub_pair(g).ok_or_else(|| StrategyError::NotApplicable("no adjacent pair of hubs".into()))?;
    let mut b = Builder::new(&geo, PiKind::MV, g.vertices().without(u2).to_vec())?;
    b.step(u1, u2).map_err(StrategyError::Rejected)?;
    b.finish(Claim::Mobile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, family, path, star};
    use crate::mobility::verify_certificate;

    fn fam(s: &str) -> Graph {
        family(&s.parse().unwrap()).unwrap()
    }

    fn accepted(c: &Certificate) -> bool {
        verify_certificate(c).accepted
    }

    #[test]
    fn profiles() {
        let g = fam("diam3_tight:7");
        let geo = Geometry::new(&g).unwrap();
        let clique = Clique::of(&g);
        for v in g.vertices().difference(clique.w).iter() {
            let p = clique.path_to(&geo, v);
            for &w in &clique.list {
                let prof = DistanceProfile::new(&geo, w, &p);
                assert!(prof.is_valid(), "{prof:?}");
                assert_eq!(prof.is_geodesic(), prof.entries().iter().enumerate().all(|(i, &x)| x == i + 1));
            }
            assert!(DistanceProfile::new(&geo, p[0], &p).is_geodesic());
        }
        assert!(!DistanceProfile(vec![2, 2, 4]).is_valid());
    }

    #[test]
    fn clique_gp_tightness_families() {
        let c = escort_clique_gp(&fam("diam2_tight:7"), None).unwrap();
        assert_eq!(c.robots(), 4);
        assert_eq!(c.claim, Claim::CompletelyMobile);
        let c = escort_clique_gp(&fam("diam3_tight:7"), None).unwrap();
        assert_eq!(c.robots(), 3);
        for m in 4usize..=7 {
            let c = escort_clique_gp(&fam(&format!("clique_with_leaf:{m}")), None).unwrap();
            assert_eq!(c.robots(), 1 + m.div_ceil(2) - usize::from(m % 2 == 1));
        }
        let c = escort_clique_gp(&fam("diam2_tight:7"), Some(6)).unwrap();
        assert_eq!(c.claim, Claim::Visits { vertex: 6 });
        assert!(matches!(escort_clique_gp(&complete(5).unwrap(), None), Err(StrategyError::NotApplicable(_))));
        assert!(matches!(escort_clique_gp(&cycle(6).unwrap(), None), Err(StrategyError::NotApplicable(_))));
    }

    #[test]
    fn omega5() {
        let c = escort_omega5(&fam("strong_clique:2,6"), None).unwrap();
        assert_eq!(c.robots(), 3);
        assert!(accepted(&c));
        let c = escort_omega5(&fam("clique_with_leaf:5"), None).unwrap();
        assert_eq!(c.claim, Claim::CompletelyMobile);
        assert!(matches!(escort_omega5(&fam("fig2_k5minus"), None), Err(StrategyError::NotApplicable(_))));
    }

    #[test]
    fn clique_mv() {
        let (m, c) = clique_mv_escort(&fam("clique_with_leaf:5")).unwrap();
        assert_eq!((m.robots(), c.robots()), (5, 4));
        assert_eq!(c.claim, Claim::CompletelyMobile);
        let (m, _) = clique_mv_escort(&path(5).unwrap()).unwrap();
        assert_eq!(m.robots(), 2);
        let (m, _) = clique_mv_escort(&fam("fig2_k5minus")).unwrap();
        assert_eq!(m.robots(), 4);
    }

    #[test]
    fn hubs() {
        assert_eq!(hub_shuttle(&cycle(4).unwrap()).unwrap().robots(), 3);
        assert_eq!(hub_shuttle(&fam("join_realisation:2,4")).unwrap().robots(), 4);
        assert!(matches!(hub_shuttle(&star(3).unwrap()), Err(StrategyError::NotApplicable(_))));
    }
}
