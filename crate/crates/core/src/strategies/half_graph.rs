//! Half graphs `G(r)` and their extensions `G(r, s)`, labelled
//! `a_i = i-1`, `b_i = r+i-1`, `c_i = 2r+i-1`.

use super::{Builder, StrategyError};
use crate::graph::{family, FamilyKind, FamilySpec};
use crate::mobility::{Certificate, Claim, Move};
use crate::position::{Geometry, PiKind};

struct Labels {
    r: usize,
}

impl Labels {
    fn a(&self, i: usize) -> usize {
        i - 1
    }

    fn b(&self, i: usize) -> usize {
        self.r + i - 1
    }

    fn c(&self, i: usize) -> usize {
        2 * self.r + i - 1
    }
}

fn check_range(r: usize, s: Option<usize>) -> Result<(), StrategyError> {
    match s {
        None if r < 2 => Err(StrategyError::Range(format!("half_graph needs r >= 2, got {r}"))),
        Some(s) if !(r > s && s > 2) => Err(StrategyError::Range(format!("half_graph_ext needs r > s > 2, got ({r}, {s})"))),
        _ => Ok(()),
    }
}

fn spec(r: usize, s: Option<usize>) -> FamilySpec {
    match s {
        None => FamilySpec::new(FamilyKind::HalfGraph, [r]),
        Some(s) => FamilySpec::new(FamilyKind::HalfGraphExt, [r, s]),
    }
}

/// `r` robots on `b_1..b_r`, moved `b_i -> a_i` for `i = r, .., 1`; on
/// `G(r, s)` the moves are undone and `b_i -> c_i` follows for `i = s, .., 1`.
pub fn half_graph_mobile(r: usize, s: Option<usize>) -> Result<Certificate, StrategyError> {
    check_range(r, s)?;
    let g = family(&spec(r, s))?;
    let geo = Geometry::new(&g)?;
    let l = Labels { r };
    let mut b = Builder::new(&geo, PiKind::GP, (1..=r).map(|i| l.b(i)).collect())?;
    let to_a: Vec<Move> = (1..=r).rev().map(|i| Move::new(l.b(i), l.a(i))).collect();
    b.apply(&to_a).map_err(StrategyError::Rejected)?;
    if let Some(s) = s {
        b.undo_since(0).map_err(StrategyError::Rejected)?;
        for i in (1..=s).rev() {
            b.step(l.b(i), l.c(i)).map_err(StrategyError::Rejected)?;
        }
    }
    b.finish(Claim::Mobile)
}

/// The `s`-robot completely mobile schedule on `G(r, s)`: a visiting pass
/// from `(b_1, .., b_s)` followed by the `s`-cycle that sends the robot on
/// `b_i` to `b_{i-1}` and the robot on `b_1` to `b_s`, repeated `s` times.
pub fn half_graph_complete(r: usize, s: usize) -> Result<Certificate, StrategyError> {
    check_range(r, Some(s))?;
    let g = family(&spec(r, Some(s)))?;
    let geo = Geometry::new(&g)?;
    let l = Labels { r };
    let start: Vec<usize> = (1..=s).map(|i| l.b(i)).collect();

    let mut visits = Vec::new();
    // R_s runs b_s -> a_s -> b_{s+1} -> .. -> b_r -> a_r
    let mut walk = vec![l.b(s), l.a(s)];
    for i in s + 1..=r {
        walk.push(l.b(i));
        walk.push(l.a(i));
    }
    let out: Vec<Move> = walk.windows(2).map(|w| Move::new(w[0], w[1])).collect();
    visits.extend_from_slice(&out);
    visits.extend(crate::mobility::undo(&out));
    for target in [Labels::a as fn(&Labels, usize) -> usize, Labels::c] {
        let out: Vec<Move> = (1..=s).rev().map(|i| Move::new(l.b(i), target(&l, i))).collect();
        visits.extend_from_slice(&out);
        visits.extend(crate::mobility::undo(&out));
    }

    let mut cycle = Vec::new();
    for i in (2..=s).rev() {
        cycle.push(Move::new(l.b(i), l.c(i)));
    }
    cycle.push(Move::new(l.b(1), l.a(1)));
    cycle.push(Move::new(l.a(1), l.b(r)));
    for i in 2..=s {
        cycle.push(Move::new(l.c(i), l.b(i)));
        cycle.push(Move::new(l.b(i), l.c(i - 1)));
        cycle.push(Move::new(l.c(i - 1), l.b(i - 1)));
    }
    cycle.push(Move::new(l.b(r), l.a(s)));
    cycle.push(Move::new(l.a(s), l.b(s)));

    let mut b = Builder::new(&geo, PiKind::GP, start)?;
    for _ in 0..s {
        b.apply(&visits).map_err(StrategyError::Rejected)?;
        b.apply(&cycle).map_err(StrategyError::Rejected)?;
    }
    b.finish(Claim::CompletelyMobile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobility::verify_certificate;

    #[test]
    fn mobile_schedules() {
        for r in 2..=6 {
            let c = half_graph_mobile(r, None).unwrap();
            assert_eq!(c.robots(), r);
            assert!(verify_certificate(&c).accepted);
        }
        for (r, s) in [(4, 3), (5, 3), (5, 4), (7, 5)] {
            let c = half_graph_mobile(r, Some(s)).unwrap();
            assert_eq!(c.robots(), r);
        }
        assert!(half_graph_mobile(1, None).is_err());
        assert!(half_graph_mobile(4, Some(4)).is_err());
        assert!(half_graph_mobile(4, Some(2)).is_err());
    }

    #[test]
    fn cycle_permutes_robots() {
        for (r, s) in [(4, 3), (5, 3), (6, 4), (7, 5)] {
            let c = half_graph_complete(r, s).unwrap();
            assert_eq!(c.robots(), s);
            assert_eq!(c.claim, Claim::CompletelyMobile);
            assert!(c.notes.is_empty());
        }
    }
}
