//! Candidate generation.
//!
//! A candidate copies its parent's position and changes exactly one
//! coordinate `j`. The random choices for one candidate are gathered in a
//! [`Move`] so that the coordinate rules can be exercised without an RNG.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::colony::Colony;
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// The five algorithm variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Plain ABC, neighbor moves, fixed colony.
    Basic,
    /// Neighbor moves with adaptive colony size.
    Sac,
    /// Elitist moves around the best source, adaptive colony size.
    Sac1,
    /// Neighbor plus best-directed global term, adaptive colony size.
    Sac2,
    /// Gbest-guided ABC comparator, fixed colony.
    Gbest,
}

/// The coordinate update a strategy applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveRule {
    /// `x_ij + phi (x_ij - x_kj)`
    Neighbor,
    /// `best_j + phi (x_r1j - x_kj)`
    Elitist,
    /// `x_ij + phi (x_ij - x_kj) + C (best_j - x_r1j)`
    GlobalLocal,
    /// `x_ij + phi (x_ij - x_kj) + psi (best_j - x_ij)`, `psi ~ U[0, C)`
    GbestGuided,
}

impl MoveRule {
    /// Smallest colony for which the required distinct partners exist.
    pub fn min_sources(self) -> usize {
        match self {
            MoveRule::Neighbor | MoveRule::GbestGuided => 2,
            MoveRule::Elitist | MoveRule::GlobalLocal => 3,
        }
    }

    fn needs_pivot(self) -> bool {
        matches!(self, MoveRule::Elitist | MoveRule::GlobalLocal)
    }
}

impl Strategy {
    pub const ALL: [Strategy; 5] = [
        Strategy::Basic,
        Strategy::Sac,
        Strategy::Sac1,
        Strategy::Sac2,
        Strategy::Gbest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Basic => "basic",
            Strategy::Sac => "sac",
            Strategy::Sac1 => "sac1",
            Strategy::Sac2 => "sac2",
            Strategy::Gbest => "gbest",
        }
    }

    /// Table label.
    pub fn label(self) -> &'static str {
        match self {
            Strategy::Basic => "ABC",
            Strategy::Sac => "ABC-SAC",
            Strategy::Sac1 => "ABC-SAC1",
            Strategy::Sac2 => "ABC-SAC2",
            Strategy::Gbest => "gBest",
        }
    }

    pub fn rule(self) -> MoveRule {
        match self {
            Strategy::Basic | Strategy::Sac => MoveRule::Neighbor,
            Strategy::Sac1 => MoveRule::Elitist,
            Strategy::Sac2 => MoveRule::GlobalLocal,
            Strategy::Gbest => MoveRule::GbestGuided,
        }
    }

    pub fn adaptive_by_default(self) -> bool {
        matches!(self, Strategy::Sac | Strategy::Sac1 | Strategy::Sac2)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_', '.'], "");
        match key.as_str() {
            "basic" | "abc" => Ok(Strategy::Basic),
            "sac" | "abcsac" => Ok(Strategy::Sac),
            "sac1" | "abcsac1" => Ok(Strategy::Sac1),
            "sac2" | "abcsac2" => Ok(Strategy::Sac2),
            "gbest" | "gbestabc" => Ok(Strategy::Gbest),
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

/// Random choices behind one candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Move {
    /// Coordinate `j` that changes.
    pub dim: usize,
    /// Partner `k`, never the parent.
    pub partner: usize,
    /// Second partner `r1`, distinct from parent and `k`.
    pub pivot: Option<usize>,
    /// `phi ~ U[-1, 1)`.
    pub phi: f64,
    /// `psi ~ U[0, C)`; zero unless gbest-guided.
    pub psi: f64,
}

impl Move {
    /// Draw order is fixed: `j`, `k`, `r1` (if used), `phi`, `psi` (if used).
    pub fn draw(
        rule: MoveRule,
        parent: usize,
        n_sources: usize,
        dim: usize,
        c_factor: f64,
        rng: &mut RngStream,
    ) -> Move {
        let j = rng.uniform_int(dim);
        let partner = rng.index_excluding(n_sources, &[parent]);
        let pivot = rule
            .needs_pivot()
            .then(|| rng.index_excluding(n_sources, &[parent, partner]));
        let phi = rng.uniform_real(-1.0, 1.0);
        let psi = if rule == MoveRule::GbestGuided {
            rng.uniform_real(0.0, c_factor)
        } else {
            0.0
        };
        Move {
            dim: j,
            partner,
            pivot,
            phi,
            psi,
        }
    }
}

#[inline]
pub fn neighbor_coordinate(own: f64, partner: f64, phi: f64) -> f64 {
    own + phi * (own - partner)
}

#[inline]
pub fn elitist_coordinate(best: f64, pivot: f64, partner: f64, phi: f64) -> f64 {
    best + phi * (pivot - partner)
}

#[inline]
pub fn global_local_coordinate(
    own: f64,
    partner: f64,
    best: f64,
    pivot: f64,
    phi: f64,
    c: f64,
) -> f64 {
    own + phi * (own - partner) + c * (best - pivot)
}

#[inline]
pub fn gbest_coordinate(own: f64, partner: f64, best: f64, phi: f64, psi: f64) -> f64 {
    own + phi * (own - partner) + psi * (best - own)
}

/// Unclamped new value of coordinate `mv.dim` for parent `i`.
pub fn moved_coordinate(
    rule: MoveRule,
    i: usize,
    colony: &Colony,
    mv: &Move,
    c_factor: f64,
) -> f64 {
    let j = mv.dim;
    let x = |s: usize| colony.sources()[s].position[j];
    let best = colony.best_position()[j];
    match rule {
        MoveRule::Neighbor => neighbor_coordinate(x(i), x(mv.partner), mv.phi),
        MoveRule::Elitist => elitist_coordinate(
            best,
            x(mv.pivot.expect("elitist move has pivot")),
            x(mv.partner),
            mv.phi,
        ),
        MoveRule::GlobalLocal => global_local_coordinate(
            x(i),
            x(mv.partner),
            best,
            x(mv.pivot.expect("global-local move has pivot")),
            mv.phi,
            c_factor,
        ),
        MoveRule::GbestGuided => gbest_coordinate(x(i), x(mv.partner), best, mv.phi, mv.psi),
    }
}

/// Parent `i`'s position with coordinate `mv.dim` replaced and clamped.
pub fn apply_move(
    rule: MoveRule,
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    mv: &Move,
    c_factor: f64,
) -> Vec<f64> {
    let mut v = colony.sources()[i].position.clone();
    v[mv.dim] = bounds.clamp_coordinate(mv.dim, moved_coordinate(rule, i, colony, mv, c_factor));
    v
}

/// Draw a move for parent `i` and build the candidate.
pub fn propose(
    rule: MoveRule,
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    c_factor: f64,
    rng: &mut RngStream,
) -> Result<(Vec<f64>, Move)> {
    let n = colony.len();
    if n < rule.min_sources() {
        return Err(Error::ColonyTooSmall {
            strategy: rule_name(rule),
            needed: rule.min_sources(),
            have: n,
        });
    }
    if i >= n {
        return Err(Error::Config(format!(
            "source index {i} out of range for {n} sources"
        )));
    }
    if bounds.dim() != colony.best_position().len() {
        return Err(Error::Dimension {
            expected: colony.best_position().len(),
            got: bounds.dim(),
        });
    }
    let mv = Move::draw(rule, i, n, bounds.dim(), c_factor, rng);
    Ok((apply_move(rule, i, colony, bounds, &mv, c_factor), mv))
}

fn rule_name(rule: MoveRule) -> &'static str {
    match rule {
        MoveRule::Neighbor => "neighbor move",
        MoveRule::Elitist => "elitist move",
        MoveRule::GlobalLocal => "global-local move",
        MoveRule::GbestGuided => "gbest-guided move",
    }
}

pub fn candidate_basic(
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    propose(MoveRule::Neighbor, i, colony, bounds, 0.0, rng).map(|(v, _)| v)
}

pub fn candidate_elitist(
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    rng: &mut RngStream,
) -> Result<Vec<f64>> {
    propose(MoveRule::Elitist, i, colony, bounds, 0.0, rng).map(|(v, _)| v)
}

pub fn candidate_global_local(
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    rng: &mut RngStream,
    c_factor: f64,
) -> Result<Vec<f64>> {
    propose(MoveRule::GlobalLocal, i, colony, bounds, c_factor, rng).map(|(v, _)| v)
}

pub fn candidate_gbest(
    i: usize,
    colony: &Colony,
    bounds: &Bounds,
    rng: &mut RngStream,
    c_factor: f64,
) -> Result<Vec<f64>> {
    propose(MoveRule::GbestGuided, i, colony, bounds, c_factor, rng).map(|(v, _)| v)
}

#[cfg(test)]
mod tests {
    use super::Strategy;
    use super::*;
    use crate::colony::FoodSource;
    use proptest::prelude::{prop_assert, prop_assert_eq, proptest};

    fn colony(points: &[&[f64]]) -> Colony {
        let sources = points
            .iter()
            .map(|p| {
                let f: f64 = p.iter().map(|v| v * v).sum();
                FoodSource::new(p.to_vec(), f, None).unwrap()
            })
            .collect();
        Colony::from_sources(sources).unwrap()
    }

    fn mv(dim: usize, partner: usize, pivot: Option<usize>, phi: f64, psi: f64) -> Move {
        Move {
            dim,
            partner,
            pivot,
            phi,
            psi,
        }
    }

    #[test]
    fn parse_names() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
            assert_eq!(s.label().parse::<Strategy>().unwrap(), s);
        }
        assert_eq!("ABC-SAC.2".parse::<Strategy>().unwrap(), Strategy::Sac2);
        assert!(matches!(
            "pso".parse::<Strategy>(),
            Err(Error::UnknownVariant(_))
        ));
    }

    #[test]
    fn neighbor_examples() {
        let wide = Bounds::uniform(2, -10.0, 10.0).unwrap();
        let c = colony(&[&[1.0, 2.0], &[1.0, 4.0], &[3.0, 3.0]]);
        // phi = 0 is the identity
        let v = apply_move(
            MoveRule::Neighbor,
            0,
            &c,
            &wide,
            &mv(1, 1, None, 0.0, 0.0),
            0.0,
        );
        assert_eq!(v, vec![1.0, 2.0]);
        // 2 + 0.5 (2 - 4) = 1
        let v = apply_move(
            MoveRule::Neighbor,
            0,
            &c,
            &wide,
            &mv(1, 1, None, 0.5, 0.0),
            0.0,
        );
        assert_eq!(v, vec![1.0, 1.0]);
        // equal coordinate in dim 0: no change for any phi
        let v = apply_move(
            MoveRule::Neighbor,
            0,
            &c,
            &wide,
            &mv(0, 1, None, 0.9, 0.0),
            0.0,
        );
        assert_eq!(v, vec![1.0, 2.0]);
    }

    #[test]
    fn elitist_examples() {
        let wide = Bounds::uniform(2, -10.0, 10.0).unwrap();
        // best (0,0) is source 0; parent x_i = (5,5)
        let c = colony(&[&[0.0, 0.0], &[5.0, 5.0], &[3.0, 1.0], &[1.0, 1.0]]);
        assert_eq!(c.best_position(), &[0.0, 0.0]);
        // phi = 0 pulls coordinate j onto best
        let v = apply_move(
            MoveRule::Elitist,
            1,
            &c,
            &wide,
            &mv(0, 3, Some(2), 0.0, 0.0),
            0.0,
        );
        assert_eq!(v, vec![0.0, 5.0]);
        // x_r1 = x_k in dim 1 (both 1): best regardless of phi
        let v = apply_move(
            MoveRule::Elitist,
            1,
            &c,
            &wide,
            &mv(1, 3, Some(2), 0.7, 0.0),
            0.0,
        );
        assert_eq!(v, vec![5.0, 0.0]);
        // x_r1,0 - x_k,0 = 3 - 1 = 2, phi 0.5: 0 + 1 = 1, other coordinate from x_i
        let v = apply_move(
            MoveRule::Elitist,
            1,
            &c,
            &wide,
            &mv(0, 3, Some(2), 0.5, 0.0),
            0.0,
        );
        assert_eq!(v, vec![1.0, 5.0]);
    }

    #[test]
    fn global_local_examples() {
        assert_eq!(global_local_coordinate(2.0, 2.0, 3.0, 1.0, 0.4, 1.5), 5.0);
        assert_eq!(global_local_coordinate(2.0, 2.0, 1.0, 1.0, 0.4, 1.5), 2.0);
        for phi in [-1.0, -0.3, 0.0, 0.8] {
            assert_eq!(
                global_local_coordinate(1.5, -0.5, 4.0, 2.0, phi, 0.0),
                neighbor_coordinate(1.5, -0.5, phi)
            );
        }
    }

    #[test]
    fn gbest_examples() {
        assert_eq!(gbest_coordinate(1.0, 3.0, 7.0, 0.0, 0.0), 1.0);
        assert_eq!(gbest_coordinate(0.0, 0.0, 2.0, 0.3, 1.5), 3.0);
        // x_i = best: guided term vanishes
        assert_eq!(
            gbest_coordinate(2.0, 5.0, 2.0, 0.3, 1.2),
            neighbor_coordinate(2.0, 5.0, 0.3)
        );
    }

    #[test]
    fn candidates_are_clamped() {
        let tight = Bounds::uniform(1, -1.0, 1.0).unwrap();
        let c = colony(&[&[0.9], &[-1.0], &[0.0]]);
        let v = apply_move(
            MoveRule::GlobalLocal,
            0,
            &c,
            &tight,
            &mv(0, 1, Some(2), 0.9, 0.0),
            1.5,
        );
        assert_eq!(v, vec![1.0]);
    }

    #[test]
    fn precondition_errors() {
        let b = Bounds::uniform(1, -1.0, 1.0).unwrap();
        let one = colony(&[&[0.5]]);
        let mut rng = RngStream::new(0);
        assert!(matches!(
            candidate_basic(0, &one, &b, &mut rng),
            Err(Error::ColonyTooSmall {
                needed: 2,
                have: 1,
                ..
            })
        ));
        let two = colony(&[&[0.5], &[0.1]]);
        assert!(candidate_basic(0, &two, &b, &mut rng).is_ok());
        assert!(candidate_gbest(1, &two, &b, &mut rng, 1.5).is_ok());
        assert!(matches!(
            candidate_elitist(0, &two, &b, &mut rng),
            Err(Error::ColonyTooSmall { needed: 3, .. })
        ));
        assert!(candidate_global_local(0, &two, &b, &mut rng, 1.5).is_err());
    }

    #[test]
    fn drawn_indices_respect_exclusions() {
        let mut rng = RngStream::new(4);
        for _ in 0..5000 {
            let m = Move::draw(MoveRule::GlobalLocal, 2, 5, 3, 1.5, &mut rng);
            let r1 = m.pivot.unwrap();
            assert!(m.partner != 2 && r1 != 2 && r1 != m.partner);
            assert!(m.dim < 3 && (-1.0..1.0).contains(&m.phi));
            assert_eq!(m.psi, 0.0);
            let g = Move::draw(MoveRule::GbestGuided, 0, 5, 3, 1.5, &mut rng);
            assert!(g.pivot.is_none() && (0.0..1.5).contains(&g.psi));
        }
    }

    proptest! {
        // With C = 0 (global-local) or psi = 0 (gbest) both rules give the
        // neighbor coordinate for the same j, k, phi.
        #[test]
        fn reductions_to_neighbor(
            own in -100.0f64..100.0, partner in -100.0f64..100.0,
            best in -100.0f64..100.0, pivot in -100.0f64..100.0,
            phi in -1.0f64..1.0,
        ) {
            let basic = neighbor_coordinate(own, partner, phi);
            prop_assert_eq!(global_local_coordinate(own, partner, best, pivot, phi, 0.0), basic);
            prop_assert_eq!(gbest_coordinate(own, partner, best, phi, 0.0), basic);
        }

        #[test]
        fn only_one_coordinate_changes(seed in 0u64..10_000) {
            let b = Bounds::uniform(4, -5.0, 5.0).unwrap();
            let c = colony(&[&[1.0, 2.0, 3.0, 4.0], &[-1.0, 0.0, 1.0, 2.0], &[4.0, 4.0, 4.0, 4.0], &[0.5; 4]]);
            let mut rng = RngStream::new(seed);
            for rule in [MoveRule::Neighbor, MoveRule::Elitist, MoveRule::GlobalLocal, MoveRule::GbestGuided] {
                let (v, m) = propose(rule, 1, &c, &b, 1.5, &mut rng).unwrap();
                prop_assert!(b.contains(&v));
                for (j, (got, parent)) in v.iter().zip(&c.sources()[1].position).enumerate() {
                    if j != m.dim {
                        prop_assert_eq!(got, parent);
                    }
                }
            }
        }
    }
}
