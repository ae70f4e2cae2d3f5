use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GameError, Result};
use crate::game::{Game, Profile, SurvivingSets};
use crate::io::{serialize_game, GameDocument};
use crate::rng::SplitMix64;
use crate::solvers::{
    dominated_strategies, hofstadter_unchecked, individually_rational_profiles,
    iterate_elimination, maximin_values, minimax_rationalizable_profiles, Deletion,
};

/// The properties a sweep or `check` can verify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// Hofstadter equilibria are minimax-rationalizable.
    Theorem1,
    /// Hofstadter equilibria are individually rational.
    Theorem2,
    /// Sequential elimination orders reach the batch fixed point.
    OrderIndependence,
    /// Individually rational profiles survive the first elimination round.
    IrSurvivesRound1,
}

impl Property {
    pub const ALL: [Property; 4] = [
        Property::Theorem1,
        Property::Theorem2,
        Property::OrderIndependence,
        Property::IrSurvivesRound1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Theorem1 => "theorem-1",
            Property::Theorem2 => "theorem-2",
            Property::OrderIndependence => "order-independence",
            Property::IrSurvivesRound1 => "ir-survives-round-1",
        }
    }

    /// Whether the property is only defined on symmetric games.
    pub fn needs_symmetry(self) -> bool {
        matches!(self, Property::Theorem1 | Property::Theorem2)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

/// What went wrong in a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Offense {
    Profile(Profile),
    Order {
        deletions: Vec<Deletion>,
        sequential: SurvivingSets,
        batch: SurvivingSets,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub game: Game,
    pub offense: Offense,
}

impl Counterexample {
    /// The game in `.gnf` form, replayable with the CLI.
    pub fn document(&self) -> String {
        serialize_game(&GameDocument::new(self.game.clone()))
    }

    pub fn describe(&self) -> String {
        match &self.offense {
            Offense::Profile(p) => format!("profile {}", self.game.format_profile(p)),
            Offense::Order {
                deletions,
                sequential,
                batch,
            } => {
                let order: Vec<String> = deletions
                    .iter()
                    .map(|d| format!("{}:{}", d.player, self.game.label(d.player, d.strategy)))
                    .collect();
                format!(
                    "order [{}] ends at {:?}, batch elimination at {:?}",
                    order.join(" "),
                    sequential.sets(),
                    batch.sets()
                )
            }
        }
    }
}

/// Result of one property check on one game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub outcome: Outcome,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

impl Verdict {
    fn pass(property: Property) -> Self {
        Verdict {
            property,
            outcome: Outcome::Pass,
            counterexample: None,
            notes: Vec::new(),
        }
    }

    fn fail(property: Property, game: &Game, offense: Offense) -> Self {
        Verdict {
            property,
            outcome: Outcome::Fail,
            counterexample: Some(Counterexample {
                game: game.clone(),
                offense,
            }),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Re-derives the failure from the counterexample alone, without the
    /// check that produced it. True iff the counterexample really violates
    /// the property.
    pub fn recheck(&self) -> bool {
        let Some(cx) = &self.counterexample else {
            return false;
        };
        let g = &cx.game;
        match (&cx.offense, self.property) {
            (Offense::Profile(p), Property::Theorem1) => {
                is_diagonal_max(g, p) && !minimax_rationalizable_profiles(g).contains(p)
            }
            (Offense::Profile(p), Property::Theorem2) => {
                let floor = maximin_values(g);
                is_diagonal_max(g, p)
                    && g.payoff_vector(p)
                        .iter()
                        .zip(floor.iter())
                        .any(|(u, t)| u < t)
            }
            (Offense::Profile(p), Property::IrSurvivesRound1) => {
                let trace = iterate_elimination(g);
                individually_rational_profiles(g).contains(p)
                    && trace.profile_eliminated_in(p) == Some(1)
            }
            (
                Offense::Order {
                    deletions,
                    sequential,
                    batch,
                },
                Property::OrderIndependence,
            ) => {
                let mut s = SurvivingSets::full(g);
                for d in deletions {
                    if !dominated_strategies(g, &s).contains(d) {
                        return false;
                    }
                    s.remove(d.player, d.strategy);
                }
                dominated_strategies(g, &s).is_empty()
                    && &s == sequential
                    && iterate_elimination(g).final_survivors() == batch
                    && sequential != batch
            }
            _ => false,
        }
    }
}

fn is_diagonal_max(g: &Game, p: &Profile) -> bool {
    g.is_symmetric() && hofstadter_unchecked(g).contains(p)
}

fn require_symmetric(game: &Game) -> Result<()> {
    if game.is_symmetric() {
        Ok(())
    } else {
        Err(GameError::NotSymmetric)
    }
}

/// Every Hofstadter equilibrium is minimax-rationalizable.
pub fn check_theorem1(game: &Game) -> Result<Verdict> {
    require_symmetric(game)?;
    let rationalizable = minimax_rationalizable_profiles(game);
    Ok(
        match hofstadter_unchecked(game)
            .into_iter()
            .find(|h| !rationalizable.contains(h))
        {
            Some(h) => Verdict::fail(Property::Theorem1, game, Offense::Profile(h)),
            None => Verdict::pass(Property::Theorem1),
        },
    )
}

/// Every Hofstadter equilibrium pays each player at least their maximin.
pub fn check_theorem2(game: &Game) -> Result<Verdict> {
    require_symmetric(game)?;
    let floor = maximin_values(game);
    Ok(
        match hofstadter_unchecked(game).into_iter().find(|h| {
            game.payoff_vector(h)
                .iter()
                .zip(floor.iter())
                .any(|(u, t)| u < t)
        }) {
            Some(h) => Verdict::fail(Property::Theorem2, game, Offense::Profile(h)),
            None => Verdict::pass(Property::Theorem2),
        },
    )
}

/// Individually rational profiles with the (1-based) round that removes them,
/// for those that do not survive elimination.
pub fn ir_profiles_eliminated_later(game: &Game) -> Vec<(Profile, usize)> {
    let trace = iterate_elimination(game);
    individually_rational_profiles(game)
        .into_iter()
        .filter_map(|p| trace.profile_eliminated_in(&p).map(|r| (p, r)))
        .collect()
}

/// Every individually rational profile survives round 1. Profiles dying in
/// later rounds are reported in the notes and do not fail the check.
pub fn check_ir_survives_round1(game: &Game) -> Verdict {
    let dying = ir_profiles_eliminated_later(game);
    if let Some((p, _)) = dying.iter().find(|(_, r)| *r == 1) {
        return Verdict::fail(
            Property::IrSurvivesRound1,
            game,
            Offense::Profile(p.clone()),
        );
    }
    let mut verdict = Verdict::pass(Property::IrSurvivesRound1);
    let last = dying.iter().map(|(_, r)| *r).max().unwrap_or(0);
    for round in 2..=last {
        let names: Vec<String> = dying
            .iter()
            .filter(|(_, r)| *r == round)
            .map(|(p, _)| game.format_profile(p))
            .collect();
        if !names.is_empty() {
            verdict.notes.push(format!(
                "IR profiles eliminated in round {round}: {}",
                names.join(",")
            ));
        }
    }
    verdict
}

/// Deletes one currently dominated strategy at a time, chosen uniformly by
/// `rng`, re-scanning after each deletion.
pub fn sequential_elimination(game: &Game, rng: &mut SplitMix64) -> (SurvivingSets, Vec<Deletion>) {
    let mut s = SurvivingSets::full(game);
    let mut order = Vec::new();
    loop {
        let candidates = dominated_strategies(game, &s);
        if candidates.is_empty() {
            return (s, order);
        }
        let pick = candidates[rng.below(candidates.len() as u64) as usize];
        s.remove(pick.player, pick.strategy);
        order.push(pick);
    }
}

// Exhaustive search over every sequential order; returns the first order
// whose fixed point differs from `target`, and counts the orders explored.
fn find_divergent_order(
    game: &Game,
    state: &SurvivingSets,
    path: &mut Vec<Deletion>,
    target: &SurvivingSets,
    explored: &mut usize,
) -> Option<(Vec<Deletion>, SurvivingSets)> {
    let candidates = dominated_strategies(game, state);
    if candidates.is_empty() {
        *explored += 1;
        return (state != target).then(|| (path.clone(), state.clone()));
    }
    for d in candidates {
        let mut next = state.clone();
        next.remove(d.player, d.strategy);
        path.push(d);
        let found = find_divergent_order(game, &next, path, target, explored);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Compares sequential single-deletion orders with batch elimination. When the
/// batch trace deletes at most 3 strategies every order is enumerated;
/// otherwise `n_orders` random orders are drawn from `seed`.
pub fn check_order_independence(game: &Game, n_orders: usize, seed: u64) -> Verdict {
    let trace = iterate_elimination(game);
    let batch = trace.final_survivors().clone();
    let total: usize = trace.rounds().iter().map(Vec::len).sum();

    let fail = |deletions: Vec<Deletion>, sequential: SurvivingSets| {
        Verdict::fail(
            Property::OrderIndependence,
            game,
            Offense::Order {
                deletions,
                sequential,
                batch: batch.clone(),
            },
        )
    };

    if total <= 3 {
        let mut explored = 0;
        let start = SurvivingSets::full(game);
        match find_divergent_order(game, &start, &mut Vec::new(), &batch, &mut explored) {
            Some((order, end)) => fail(order, end),
            None => {
                let mut v = Verdict::pass(Property::OrderIndependence);
                v.notes.push(format!("all {explored} orders checked"));
                v
            }
        }
    } else {
        let mut rng = SplitMix64::new(seed);
        for _ in 0..n_orders {
            let (end, order) = sequential_elimination(game, &mut rng);
            if end != batch {
                return fail(order, end);
            }
        }
        let mut v = Verdict::pass(Property::OrderIndependence);
        v.notes.push(format!("{n_orders} random orders checked"));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::game::Profile;

    #[test]
    fn theorems_on_fixtures() {
        for g in [
            prisoners_dilemma(),
            chicken(),
            coordination(),
            three_by_three(),
        ] {
            assert!(check_theorem1(&g).unwrap().passed());
            assert!(check_theorem2(&g).unwrap().passed());
            assert!(check_ir_survives_round1(&g).passed());
            assert!(check_order_independence(&g, 20, 1).passed());
        }
    }

    #[test]
    fn asymmetric_games_are_rejected() {
        let g = matrix(&["x", "y"], &[[(1, 1), (0, 2)], [(1, 0), (3, 3)]]);
        assert_eq!(check_theorem1(&g), Err(GameError::NotSymmetric));
        assert_eq!(check_theorem2(&g), Err(GameError::NotSymmetric));
    }

    #[test]
    fn late_ir_eliminations_in_the_3x3() {
        let g = three_by_three();
        let v = check_ir_survives_round1(&g);
        assert!(v.passed());
        assert_eq!(
            v.notes,
            vec!["IR profiles eliminated in round 2: (A,B),(B,A),(B,B)"]
        );
        let late: Vec<(Vec<usize>, usize)> = ir_profiles_eliminated_later(&g)
            .into_iter()
            .map(|(p, r)| (p.into_inner(), r))
            .collect();
        assert_eq!(
            late,
            vec![(vec![0, 1], 2), (vec![1, 0], 2), (vec![1, 1], 2)]
        );
    }

    #[test]
    fn order_enumeration_on_the_3x3() {
        // C for both then B for both: four deletions, so sampled
        let v = check_order_independence(&three_by_three(), 20, 3);
        assert!(v.passed());
        assert_eq!(v.notes, vec!["20 random orders checked"]);
        let v = check_order_independence(&prisoners_dilemma(), 20, 3);
        assert_eq!(v.notes, vec!["all 1 orders checked"]);
    }

    #[test]
    fn sequential_orders_reach_a_on_the_3x3() {
        let g = three_by_three();
        let mut rng = SplitMix64::new(5);
        for _ in 0..50 {
            let (end, order) = sequential_elimination(&g, &mut rng);
            assert_eq!(end.sets(), &[vec![0], vec![0]]);
            assert_eq!(order.len(), 4);
        }
    }

    #[test]
    fn recheck_rejects_bogus_counterexamples() {
        let g = prisoners_dilemma();
        let fake = Verdict::fail(
            Property::Theorem1,
            &g,
            Offense::Profile(Profile::new(vec![1, 1])),
        );
        assert!(!fake.recheck());
        let fake = Verdict::fail(
            Property::OrderIndependence,
            &g,
            Offense::Order {
                deletions: vec![],
                sequential: SurvivingSets::full(&g),
                batch: SurvivingSets::full(&g),
            },
        );
        assert!(!fake.recheck());
        assert!(!Verdict::pass(Property::Theorem2).recheck());
    }

    #[test]
    fn recheck_refuses_non_ir_profile() {
        // (C,C) is not individually rational, so the claim cannot be confirmed
        let g = three_by_three();
        let v = Verdict::fail(
            Property::IrSurvivesRound1,
            &g,
            Offense::Profile(Profile::new(vec![2, 2])),
        );
        assert!(!v.recheck());
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert!("theorem-3".parse::<Property>().is_err());
    }
}
