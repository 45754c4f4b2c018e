//! Named graph invariants computed on demand, with witnesses.

use crate::mobility::{completely_mobile_number, mobile_number, Certificate, MobilityError, SearchOptions};
use crate::position::{hubs, Geometry, PiKind, PositionError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumberError {
    #[error("unknown number `{0}` (expected one of gp, mu, mu_r, mob, mobmv, cmob, cmobmv, omega, diam, hubs)")]
    Unknown(String),
    #[error("mu_r needs a radius")]
    MissingRadius,
    #[error(transparent)]
    Position(#[from] PositionError),
    #[error(transparent)]
    Mobility(#[from] MobilityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Number {
    Gp,
    Mu,
    MuR,
    Mob,
    Mobmv,
    Cmob,
    Cmobmv,
    Omega,
    Diam,
    Hubs,
}

const NAMES: &[(Number, &str)] = &[
    (Number::Gp, "gp"),
    (Number::Mu, "mu"),
    (Number::MuR, "mu_r"),
    (Number::Mob, "mob"),
    (Number::Mobmv, "mobmv"),
    (Number::Cmob, "cmob"),
    (Number::Cmobmv, "cmobmv"),
    (Number::Omega, "omega"),
    (Number::Diam, "diam"),
    (Number::Hubs, "hubs"),
];

impl Number {
    pub fn all() -> impl Iterator<Item = Number> {
        NAMES.iter().map(|e| e.0)
    }

    pub fn name(self) -> &'static str {
        NAMES.iter().find(|e| e.0 == self).unwrap().1
    }

    /// Whether the number comes from the mobility search.
    pub fn is_mobile(self) -> bool {
        matches!(self, Number::Mob | Number::Mobmv | Number::Cmob | Number::Cmobmv)
    }
}

impl FromStr for Number {
    type Err = NumberError;

    fn from_str(s: &str) -> Result<Self, NumberError> {
        NAMES.iter().find(|e| e.1 == s).map(|e| e.0).ok_or_else(|| NumberError::Unknown(s.to_string()))
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Computed {
    pub number: Number,
    pub value: usize,
    /// False only for mobility numbers whose search ran out of budget.
    pub exact: bool,
    /// A largest set for `gp`/`mu`/`mu_r`/`omega`, the hub list for `hubs`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub states: Option<u64>,
}

impl Computed {
    fn set(number: Number, value: usize, witness: Vec<usize>) -> Self {
        Computed { number, value, exact: true, witness: Some(witness), certificate: None, states: None }
    }
}

pub fn compute(
    geo: &Geometry,
    number: Number,
    radius: Option<usize>,
    opts: SearchOptions,
) -> Result<Computed, NumberError> {
    let g = geo.graph();
    let pi = |kind: PiKind| {
        let (size, w) = geo.max_pi_set(kind);
        Computed::set(number, size, w.to_vec())
    };
    let mobile = |kind: PiKind, complete: bool| -> Result<Computed, NumberError> {
        let r = if complete { completely_mobile_number(geo, kind, opts)? } else { mobile_number(geo, kind, opts)? };
        Ok(Computed {
            number,
            value: r.value,
            exact: r.exact,
            witness: None,
            states: Some(r.states_explored),
            certificate: Some(r.lower_witness),
        })
    };
    Ok(match number {
        Number::Gp => pi(PiKind::GP),
        Number::Mu => pi(PiKind::MV),
        Number::MuR => {
            let kind = PiKind::mv_radius(radius.ok_or(NumberError::MissingRadius)?);
            kind.validate()?;
            pi(kind)
        }
        Number::Mob => mobile(PiKind::GP, false)?,
        Number::Mobmv => mobile(PiKind::MV, false)?,
        Number::Cmob => mobile(PiKind::GP, true)?,
        Number::Cmobmv => mobile(PiKind::MV, true)?,
        Number::Omega => {
            let w = crate::graph::max_clique(g);
            Computed::set(number, w.len(), w.to_vec())
        }
        Number::Diam => Computed::set(number, geo.distances().diameter().unwrap_or(0), Vec::new()),
        Number::Hubs => {
            let h = hubs(g);
            Computed::set(number, h.len(), h.to_vec())
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::hypercube;

    #[test]
    fn names_round_trip() {
        for n in Number::all() {
            assert_eq!(n.name().parse::<Number>().unwrap(), n);
        }
        assert!("mobility".parse::<Number>().is_err());
    }

    #[test]
    fn q3_numbers() {
        let geo = Geometry::new(&hypercube(3).unwrap()).unwrap();
        let opts = SearchOptions::default();
        let get = |n| compute(&geo, n, Some(2), opts).unwrap().value;
        assert_eq!(get(Number::Diam), 3);
        assert_eq!(get(Number::Omega), 2);
        assert_eq!(get(Number::Gp), 4);
        assert!(matches!(compute(&geo, Number::MuR, None, opts), Err(NumberError::MissingRadius)));
        let mobmv = compute(&geo, Number::Mobmv, None, opts).unwrap();
        assert!(mobmv.exact && mobmv.certificate.is_some());
    }
}
