//! Closed-form values, lower-bound calculators and structural
//! characterizations. Nothing here runs the mobility solver; the few values
//! that no closed form covers come from stored solver fixtures.

use crate::graph::{analyze, turan_parts, Graph};
use crate::position::{adjacent_hub_pair, hubs, Geometry, PiKind, PositionError};
use crate::vertex_set::VertexSet;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoryError {
    #[error("parameter out of range: {0}")]
    Range(String),
    #[error(transparent)]
    Position(#[from] PositionError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Lower,
    Upper,
}

/// The clique/diameter lower bound with its parameters: `ω = qD + s`,
/// `0 ≤ s < D`, and `θ = 1` exactly when `s = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundResult {
    pub value: usize,
    pub omega: usize,
    pub diameter: usize,
    pub q: usize,
    pub s: usize,
    pub theta: usize,
    pub direction: Direction,
    pub applies_to: String,
}

/// `1 + ⌈ω/D⌉ - θ(s)`, a lower bound on `mob` and `cmob` for connected
/// non-complete graphs with clique number `ω ≥ 3` and diameter `D ≥ 2`.
pub fn bound_mob_clique(omega: usize, diameter: usize) -> Result<BoundResult, TheoryError> {
    if omega < 3 || diameter < 2 {
        return Err(TheoryError::Range(format!("need omega >= 3 and diameter >= 2, got ({omega}, {diameter})")));
    }
    let (q, s) = (omega / diameter, omega % diameter);
    let theta = usize::from(s == 1);
    Ok(BoundResult {
        value: 1 + omega.div_ceil(diameter) - theta,
        omega,
        diameter,
        q,
        s,
        theta,
        direction: Direction::Lower,
        applies_to: "mob and cmob of connected non-complete graphs".into(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridProduct {
    Cartesian,
    Strong,
}

impl fmt::Display for GridProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridProduct::Cartesian => "cartesian",
            GridProduct::Strong => "strong",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridSource {
    Formula,
    /// No closed form covers the case; the value is a stored solver result.
    ResolvedBySolver,
    /// The closed form gives a different number; the stored solver result wins.
    ContradictedBySolver,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridValue {
    pub n: usize,
    pub m: usize,
    pub product: GridProduct,
    pub value: usize,
    pub source: GridSource,
    /// What the closed form says, when it says something different.
    pub formula: Option<usize>,
}

/// A value measured once with the exact solver and stored with the command
/// that reproduces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub family: String,
    pub number: String,
    pub value: usize,
    pub command: String,
    pub note: String,
}

pub fn fixtures() -> &'static [Fixture] {
    static FIXTURES: OnceLock<Vec<Fixture>> = OnceLock::new();
    FIXTURES.get_or_init(|| {
        serde_json::from_str(include_str!("../data/fixtures.json")).expect("fixtures.json is valid")
    })
}

pub fn fixture(family: &str, number: &str) -> Option<usize> {
    fixtures().iter().find(|f| f.family == family && f.number == number).map(|f| f.value)
}

fn grid_family(n: usize, m: usize, product: GridProduct) -> String {
    match product {
        GridProduct::Cartesian => format!("cartesian_grid:{n},{m}"),
        GridProduct::Strong => format!("strong_grid:{n},{m}"),
    }
}

/// `mobmv` of `P_n □ P_m` or `P_n ⊠ P_m`; the arguments are sorted so that
/// `n ≥ m`. Strong grids need `m ≥ 3`.
pub fn grid_formulas(n: usize, m: usize, product: GridProduct) -> Result<GridValue, TheoryError> {
    let (n, m) = (n.max(m), n.min(m));
    let closed = match product {
        GridProduct::Cartesian => match (n, m) {
            (_, 0 | 1) => None,
            (2 | 3, 2) => Some(3),
            (_, 2) => Some(4),
            (3, 3) => Some(4),
            (4, 3) => Some(5),
            (5, 3) => None,
            (_, 3) => Some(6),
            (4 | 5, 4) => Some(7),
            (_, 4) => Some(8),
            _ if n > m => Some(2 * m),
            _ => Some(2 * m - 1),
        },
        GridProduct::Strong => match (n, m) {
            (_, 0..=2) => None,
            (3, 3) => Some(5),
            _ => Some(2 * (n + m) - 6),
        },
    };
    let range = || TheoryError::Range(format!("no grid value for {product} {n}x{m}"));
    if m < 2 || (product == GridProduct::Strong && m < 3) {
        return Err(range());
    }
    let stored = fixture(&grid_family(n, m, product), "mobmv");
    let (value, source, formula) = match (closed, stored) {
        (Some(c), Some(s)) if c != s => (s, GridSource::ContradictedBySolver, Some(c)),
        (Some(c), _) => (c, GridSource::Formula, None),
        (None, Some(s)) => (s, GridSource::ResolvedBySolver, None),
        (None, None) => return Err(range()),
    };
    Ok(GridValue { n, m, product, value, source, formula })
}

/// Edge count of the Turán graph `T(n, r)`.
pub fn turan_size(n: usize, r: usize) -> Result<usize, TheoryError> {
    if r == 0 || n < r {
        return Err(TheoryError::Range(format!("turan_size needs n >= r >= 1, got ({n}, {r})")));
    }
    let squares: usize = turan_parts(n, r).iter().map(|p| p * p).sum();
    Ok((n * n - squares) / 2)
}

/// `mobmv(L(K_n)) = ⌊n²/3⌋ - ⌊n/3⌋ + 1` for `n ≥ 6`.
pub fn lkn_mobmv(n: usize) -> Result<usize, TheoryError> {
    if n < 6 {
        return Err(TheoryError::Range(format!("lkn_mobmv needs n >= 6, got {n}")));
    }
    Ok(n * n / 3 - n / 3 + 1)
}

/// `ℓ(n-ℓ) + ⌊(n-ℓ)²/4⌋ - (ℓ-1)` for `1 ≤ ℓ ≤ n/3`: the edge count a
/// 3-partite robot configuration on `L(K_n)` with smallest part of size `ℓ`
/// can keep while a robot enters an edge inside a part.
pub fn stability_bound(n: usize, l: usize) -> Result<usize, TheoryError> {
    if l == 0 || 3 * l > n {
        return Err(TheoryError::Range(format!("stability_bound needs 1 <= l <= n/3, got (n={n}, l={l})")));
    }
    Ok(l * (n - l) + (n - l) * (n - l) / 4 + 1 - l)
}

/// `μ_r(G)`: the largest mutual-visibility set with all pairwise distances at
/// most `r`. On a disconnected graph such a set lies inside one component.
pub fn mu_r(g: &Graph, r: usize) -> Result<usize, TheoryError> {
    let mut best = 0;
    let mut left = g.vertices();
    while let Some(v) = left.first() {
        let comp = g.component_of(v);
        left = left.difference(comp);
        let geo = Geometry::new(&g.induced(comp))?;
        best = best.max(geo.max_pi_set(PiKind::mv_radius(r)).0);
    }
    Ok(best)
}

/// A characterization's answer, or why its hypotheses do not hold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict<T> {
    Value(T),
    OutsideHypothesis(String),
}

impl<T: Copy> Verdict<T> {
    pub fn value(&self) -> Option<T> {
        match self {
            Verdict::Value(v) => Some(*v),
            Verdict::OutsideHypothesis(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub order: usize,
    pub hubs: Vec<usize>,
    pub adjacent_hubs: Option<(usize, usize)>,
    /// Adjacent hubs; non-complete graphs only.
    pub mobmv_equals_n_minus_1: Verdict<bool>,
    /// Block graph with `ω ≤ 3` that is not a path.
    pub cmobmv_equals_2: Verdict<bool>,
    pub cmob_equals_1: Verdict<bool>,
    /// Complete; order at least two.
    pub cmob_equals_n_minus_1: Verdict<bool>,
    pub mob_equals_n: Verdict<bool>,
    /// `K_{n-1}` with a pendant vertex; order at least three.
    pub mob_equals_n_minus_1: Verdict<bool>,
    /// `μ₂(G) + 1`, valid for every graph.
    pub join_k1_mobmv: Verdict<usize>,
}

/// `K_{n-1}` plus one vertex of degree one.
pub fn is_clique_with_leaf(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let leaves: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 1).collect();
    match *leaves.as_slice() {
        [leaf] => {
            let rest = g.vertices().without(leaf);
            rest.iter().all(|v| g.neighbors(v).intersection(rest).len() == n - 2)
        }
        // K_2 plus a leaf is P_3, which has two leaves
        [a, b] if n == 3 => g.neighbors(a) == g.neighbors(b),
        _ => false,
    }
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.order();
    let a = analyze(g);
    let hub_set = hubs(g);
    let pair = adjacent_hub_pair(g);
    let connected = |v: Verdict<bool>| {
        if a.is_connected {
            v
        } else {
            Verdict::OutsideHypothesis("graph is disconnected".into())
        }
    };
    let mobmv_n1 = if a.is_connected && g.is_complete() {
        Verdict::OutsideHypothesis("graph is complete".into())
    } else {
        connected(Verdict::Value(pair.is_some()))
    };
    let cmob_n1 = if n < 2 {
        Verdict::OutsideHypothesis("order is below two".into())
    } else {
        connected(Verdict::Value(g.is_complete()))
    };
    let mob_n1 = if n < 3 {
        Verdict::OutsideHypothesis("order is below three".into())
    } else {
        connected(Verdict::Value(is_clique_with_leaf(g)))
    };
    let join_k1 = match mu_r(g, 2) {
        Ok(mu2) => Verdict::Value(mu2 + 1),
        Err(e) => Verdict::OutsideHypothesis(e.to_string()),
    };
    Classification {
        order: n,
        hubs: hub_set.to_vec(),
        adjacent_hubs: pair,
        mobmv_equals_n_minus_1: mobmv_n1,
        cmobmv_equals_2: connected(Verdict::Value(a.circumference_le_3 && !a.is_path)),
        cmob_equals_1: connected(Verdict::Value(a.is_path)),
        cmob_equals_n_minus_1: cmob_n1,
        mob_equals_n: connected(Verdict::Value(g.is_complete())),
        mob_equals_n_minus_1: mob_n1,
        join_k1_mobmv: join_k1,
    }
}

/// `mobmv(G ∨ H)` from hubs alone: `n(G)+n(H)-1` when the join has two
/// adjacent hubs, otherwise `n(G)+n(H)-2`. Both graphs connected, of order at
/// least two, and not both complete.
pub fn join_mobmv(g: &Graph, h: &Graph) -> Result<usize, TheoryError> {
    if g.order() < 2 || h.order() < 2 {
        return Err(TheoryError::Range("join operands need order >= 2".into()));
    }
    if !g.is_connected() || !h.is_connected() {
        return Err(PositionError::Disconnected.into());
    }
    if g.is_complete() && h.is_complete() {
        return Err(TheoryError::Range("join operands are both complete".into()));
    }
    let near_full = |x: &Graph| x.is_complete() || adjacent_hub_pair(x).is_some();
    let has_hub = |x: &Graph| hubs(x) != VertexSet::EMPTY;
    let n = g.order() + h.order();
    Ok(if near_full(g) || near_full(h) || (has_hub(g) && has_hub(h)) { n - 1 } else { n - 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, family, path, star, FamilySpec};

    #[test]
    fn clique_bound_examples() {
        assert_eq!(bound_mob_clique(6, 2).unwrap().value, 4);
        let b = bound_mob_clique(7, 3).unwrap();
        assert_eq!((b.value, b.q, b.s, b.theta), (3, 2, 1, 1));
        let b = bound_mob_clique(3, 3).unwrap();
        assert_eq!((b.value, b.q, b.s, b.theta), (2, 1, 0, 0));
        assert!(bound_mob_clique(2, 3).is_err());
        assert!(bound_mob_clique(5, 1).is_err());
        for w in 3..40 {
            for d in 2..12 {
                let b = bound_mob_clique(w, d).unwrap();
                assert_eq!(b.q * d + b.s, w);
                assert!(b.s < d);
                assert_eq!(b.theta == 1, b.s == 1);
            }
        }
    }

    #[test]
    fn grid_examples() {
        let v = grid_formulas(7, 6, GridProduct::Cartesian).unwrap();
        assert_eq!((v.value, v.source), (12, GridSource::Formula));
        assert_eq!(grid_formulas(4, 3, GridProduct::Strong).unwrap().value, 8);
        assert_eq!(grid_formulas(3, 4, GridProduct::Strong).unwrap().value, 8);
        let v = grid_formulas(5, 3, GridProduct::Cartesian).unwrap();
        assert_eq!((v.value, v.source), (6, GridSource::ResolvedBySolver));
        let v = grid_formulas(5, 5, GridProduct::Strong).unwrap();
        assert_eq!((v.value, v.source, v.formula), (13, GridSource::ContradictedBySolver, Some(14)));
        assert_eq!(grid_formulas(3, 3, GridProduct::Strong).unwrap().value, 5);
        assert_eq!(grid_formulas(2, 3, GridProduct::Cartesian).unwrap().value, 3);
        assert_eq!(grid_formulas(2, 9, GridProduct::Cartesian).unwrap().value, 4);
        assert_eq!(grid_formulas(5, 5, GridProduct::Cartesian).unwrap().value, 9);
        assert!(grid_formulas(1, 5, GridProduct::Cartesian).is_err());
        assert!(grid_formulas(2, 5, GridProduct::Strong).is_err());
    }

    #[test]
    fn counting_formulas() {
        assert_eq!(turan_size(6, 3).unwrap(), 12);
        assert_eq!(turan_size(5, 3).unwrap(), 8);
        assert!(turan_size(2, 3).is_err());
        assert_eq!(lkn_mobmv(6).unwrap(), 11);
        assert_eq!(lkn_mobmv(9).unwrap(), 25);
        assert!(lkn_mobmv(5).is_err());
        let best = (1..=3).map(|l| stability_bound(9, l).unwrap()).max().unwrap();
        assert!(best <= 25);
        assert!(stability_bound(9, 4).is_err());
        assert!(stability_bound(9, 0).is_err());
    }

    #[test]
    fn stability_below_lkn() {
        for n in 6..=30 {
            let best = (1..=n / 3).map(|l| stability_bound(n, l).unwrap()).max().unwrap();
            assert!(best <= lkn_mobmv(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&cycle(4).unwrap()).mobmv_equals_n_minus_1, Verdict::Value(true));
        let claw = star(3).unwrap();
        let c = classify(&claw);
        assert_eq!(c.cmobmv_equals_2, Verdict::Value(true));
        assert_eq!(c.join_k1_mobmv, Verdict::Value(4));
        assert_eq!(c.cmob_equals_1, Verdict::Value(false));
        let k = classify(&complete(5).unwrap());
        assert!(matches!(k.mobmv_equals_n_minus_1, Verdict::OutsideHypothesis(_)));
        assert_eq!(k.mob_equals_n, Verdict::Value(true));
        assert_eq!(classify(&path(5).unwrap()).cmob_equals_1, Verdict::Value(true));
        let leafy = family(&"clique_with_leaf:4".parse::<FamilySpec>().unwrap()).unwrap();
        assert_eq!(classify(&leafy).mob_equals_n_minus_1, Verdict::Value(true));
        assert_eq!(classify(&path(3).unwrap()).mob_equals_n_minus_1, Verdict::Value(true));
        assert_eq!(classify(&path(4).unwrap()).mob_equals_n_minus_1, Verdict::Value(false));
    }

    #[test]
    fn disconnected_verdicts_are_per_field() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = classify(&g);
        assert!(matches!(c.cmob_equals_1, Verdict::OutsideHypothesis(_)));
        assert_eq!(c.join_k1_mobmv, Verdict::Value(3));
    }

    #[test]
    fn joins_from_hubs() {
        let p3 = path(3).unwrap();
        let c4 = cycle(4).unwrap();
        let c5 = cycle(5).unwrap();
        assert_eq!(join_mobmv(&c4, &c5).unwrap(), 8);
        assert_eq!(join_mobmv(&c5, &c5).unwrap(), 8);
        assert_eq!(join_mobmv(&p3, &c5).unwrap(), 7);
        assert!(join_mobmv(&complete(2).unwrap(), &complete(3).unwrap()).is_err());
    }

    #[test]
    fn fixtures_load() {
        assert_eq!(fixture("cartesian_grid:5,3", "mobmv"), Some(6));
        assert!(fixtures().iter().all(|f| f.command.starts_with("mobpos compute")));
    }
}
