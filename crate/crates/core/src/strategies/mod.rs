//! Constructive move schedules, emitted as certificates.
//!
//! Every generator drives a [`Builder`], which checks each move as it is
//! made, and hands the final certificate to [`verify_certificate`] before
//! returning it. Schedules transcribed from a written proof run in
//! transactional segments: a segment that hits an illegal move is rewound
//! and the failure recorded in the certificate notes. Vertices a schedule
//! leaves unvisited can be reached by configuration search, which is also
//! noted.

mod builder;
mod escort;
mod grids;
mod half_graph;
mod lkn;

pub use builder::Builder;
pub use escort::{clique_mv_escort, escort_clique_gp, escort_omega5, hub_shuttle, DistanceProfile};
pub use grids::{cart_grid_mv, cart_grid_small, strong_grid_gp};
pub use half_graph::{half_graph_complete, half_graph_mobile};
pub use lkn::lkn_schedule;

use crate::graph::{family, FamilySpec, Graph, GraphError};
use crate::mobility::{Certificate, MobilityError};
use crate::position::PositionError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StrategyError {
    #[error("strategy not applicable: {0}")]
    NotApplicable(String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("unknown strategy {0:?}")]
    Unknown(String),
    #[error("emitted certificate was rejected: {0}")]
    Rejected(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Position(#[from] PositionError),
    #[error(transparent)]
    Mobility(#[from] MobilityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    StrongGridGp,
    CartGridMv,
    CartGridSmall,
    Lkn,
    HalfGraph,
    HalfGraphExt,
    HalfGraphExtComplete,
    HubShuttle,
    EscortCliqueGp,
    EscortOmega5,
    CliqueMv,
    CliqueMvComplete,
}

const NAMES: &[(Strategy, &str, &str)] = &[
    (Strategy::StrongGridGp, "strong_grid_gp", "r s"),
    (Strategy::CartGridMv, "cart_grid_mv", "n m"),
    (Strategy::CartGridSmall, "cart_grid_small", "n m"),
    (Strategy::Lkn, "lkn", "n"),
    (Strategy::HalfGraph, "half_graph", "r"),
    (Strategy::HalfGraphExt, "half_graph_ext", "r s"),
    (Strategy::HalfGraphExtComplete, "half_graph_ext_complete", "r s"),
    (Strategy::HubShuttle, "hub_shuttle", "FAMILY"),
    (Strategy::EscortCliqueGp, "escort_clique_gp", "FAMILY [target]"),
    (Strategy::EscortOmega5, "escort_omega5", "FAMILY [target]"),
    (Strategy::CliqueMv, "clique_mv", "FAMILY"),
    (Strategy::CliqueMvComplete, "clique_mv_complete", "FAMILY"),
];

impl Strategy {
    pub fn name(self) -> &'static str {
        NAMES.iter().find(|e| e.0 == self).unwrap().1
    }

    /// Argument synopsis, e.g. `n m`.
    pub fn usage(self) -> &'static str {
        NAMES.iter().find(|e| e.0 == self).unwrap().2
    }

    pub fn all() -> impl Iterator<Item = Strategy> {
        NAMES.iter().map(|e| e.0)
    }

    /// Strategies that act on an arbitrary input graph.
    pub fn takes_graph(self) -> bool {
        matches!(
            self,
            Strategy::HubShuttle
                | Strategy::EscortCliqueGp
                | Strategy::EscortOmega5
                | Strategy::CliqueMv
                | Strategy::CliqueMvComplete
        )
    }
}

impl FromStr for Strategy {
    type Err = StrategyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|e| e.1 == s)
            .map(|e| e.0)
            .ok_or_else(|| StrategyError::Unknown(s.to_string()))
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A strategy with its parameters. Graph strategies name their input
/// graph by a family spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScheduleSpec {
    pub strategy: Strategy,
    #[serde(default)]
    pub params: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilySpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<usize>,
}

impl ScheduleSpec {
    pub fn new(strategy: Strategy, params: impl Into<Vec<usize>>) -> Self {
        ScheduleSpec { strategy, params: params.into(), family: None, target: None }
    }

    pub fn on_family(strategy: Strategy, family: FamilySpec) -> Self {
        ScheduleSpec { strategy, params: Vec::new(), family: Some(family), target: None }
    }

    /// Parses `name arg..`: integers for the parametric strategies, a
    /// family spec and an optional target vertex for graph strategies.
    pub fn parse(name: &str, args: &[String]) -> Result<Self, StrategyError> {
        let strategy: Strategy = name.parse()?;
        let int = |s: &String| {
            s.parse::<usize>()
                .map_err(|_| StrategyError::Range(format!("{s:?} is not a non-negative integer")))
        };
        if strategy.takes_graph() {
            let (fam, rest) = args
                .split_first()
                .ok_or_else(|| StrategyError::Range(format!("{name} expects {}", strategy.usage())))?;
            let fam: FamilySpec = fam.parse()?;
            let target = match rest {
                [] => None,
                [t] if matches!(strategy, Strategy::EscortCliqueGp | Strategy::EscortOmega5) => Some(int(t)?),
                _ => return Err(StrategyError::Range(format!("{name} expects {}", strategy.usage()))),
            };
            Ok(ScheduleSpec { strategy, params: Vec::new(), family: Some(fam), target })
        } else {
            let params = args.iter().map(int).collect::<Result<Vec<_>, _>>()?;
            let want = strategy.usage().split_whitespace().count();
            if params.len() != want {
                return Err(StrategyError::Range(format!("{name} expects {}", strategy.usage())));
            }
            Ok(ScheduleSpec::new(strategy, params))
        }
    }

    /// Runs a graph strategy on `g`, or a parametric one on its own graph.
    pub fn generate_on(&self, g: &Graph) -> Result<Certificate, StrategyError> {
        match self.strategy {
            Strategy::HubShuttle => hub_shuttle(g),
            Strategy::EscortCliqueGp => escort_clique_gp(g, self.target),
            Strategy::EscortOmega5 => escort_omega5(g, self.target),
            Strategy::CliqueMv => clique_mv_escort(g).map(|c| c.0),
            Strategy::CliqueMvComplete => clique_mv_escort(g).map(|c| c.1),
            _ => self.generate(),
        }
    }

    pub fn generate(&self) -> Result<Certificate, StrategyError> {
        let p = &self.params;
        let arg = |i: usize| {
            p.get(i)
                .copied()
                .ok_or_else(|| StrategyError::Range(format!("{} expects {}", self.strategy, self.strategy.usage())))
        };
        match self.strategy {
            Strategy::StrongGridGp => strong_grid_gp(arg(0)?, arg(1)?),
            Strategy::CartGridMv => cart_grid_mv(arg(0)?, arg(1)?),
            Strategy::CartGridSmall => cart_grid_small(arg(0)?, arg(1)?),
            Strategy::Lkn => lkn_schedule(arg(0)?),
            Strategy::HalfGraph => half_graph_mobile(arg(0)?, None),
            Strategy::HalfGraphExt => half_graph_mobile(arg(0)?, Some(arg(1)?)),
            Strategy::HalfGraphExtComplete => half_graph_complete(arg(0)?, arg(1)?),
            _ => {
                let fam = self
                    .family
                    .as_ref()
                    .ok_or_else(|| StrategyError::Range(format!("{} needs an input graph", self.strategy)))?;
                self.generate_on(&family(fam)?)
            }
        }
    }
}

impl fmt::Display for ScheduleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.strategy.name())?;
        for p in &self.params {
            write!(f, " {p}")?;
        }
        if let Some(fam) = &self.family {
            write!(f, " {fam}")?;
        }
        if let Some(t) = self.target {
            write!(f, " {t}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &[&str]) -> Vec<String> {
        s.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn parse_specs() {
        let s = ScheduleSpec::parse("cart_grid_mv", &args(&["6", "5"])).unwrap();
        assert_eq!(s, ScheduleSpec::new(Strategy::CartGridMv, [6, 5]));
        assert_eq!(s.to_string(), "cart_grid_mv 6 5");
        let e = ScheduleSpec::parse("escort_clique_gp", &args(&["diam2_tight:7", "6"])).unwrap();
        assert_eq!(e.target, Some(6));
        assert!(ScheduleSpec::parse("lkn", &args(&["6", "7"])).is_err());
        assert!(ScheduleSpec::parse("lkn", &args(&["x"])).is_err());
        assert!(matches!(ScheduleSpec::parse("nope", &[]), Err(StrategyError::Unknown(_))));
        for st in Strategy::all() {
            assert_eq!(st.name().parse::<Strategy>().unwrap(), st);
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let s = ScheduleSpec::parse("hub_shuttle", &args(&["cycle:4"])).unwrap();
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(serde_json::from_str::<ScheduleSpec>(&text).unwrap(), s);
    }
}
