//! Solution concepts: pure Nash equilibria, Hofstadter (superrational)
//! equilibria, maximin values, individual rationality, and iterated deletion
//! of minimax-dominated strategies.
//!
//! Every min/max over "the opponents" ranges over the joint profile space of
//! all other players, not over each opponent separately.

use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{GameError, Result};
use crate::game::{for_each_product, Game, Payoff, Profile, SurvivingSets};

/// Profiles in which no player gains by a unilateral deviation.
pub fn pure_nash(game: &Game) -> Vec<Profile> {
    let n = game.n_players();
    let cells = game.num_profiles();
    let strides = game.strides();
    let raw = game.raw_payoffs();

    // best[i][ctx]: best payoff player i can reach against the opponent
    // context ctx, where ctx is a cell index with player i's coordinate zeroed.
    let mut best = vec![vec![Payoff::MIN; cells]; n];
    for p in game.profiles() {
        let cell = game.cell_index(&p);
        for i in 0..n {
            let ctx = cell - p[i] * strides[i];
            let v = raw[cell * n + i];
            if v > best[i][ctx] {
                best[i][ctx] = v;
            }
        }
    }

    game.profiles()
        .filter(|p| {
            let cell = game.cell_index(p);
            (0..n).all(|i| raw[cell * n + i] >= best[i][cell - p[i] * strides[i]])
        })
        .collect()
}

/// Diagonal profiles with maximal diagonal payoff. All maximizers are returned.
pub fn hofstadter_equilibria(game: &Game) -> Result<Vec<Profile>> {
    if !game.is_symmetric() {
        return Err(GameError::NotSymmetric);
    }
    Ok(hofstadter_unchecked(game))
}

pub(crate) fn hofstadter_unchecked(game: &Game) -> Vec<Profile> {
    let diagonal = game.diagonal_unchecked();
    let top = diagonal
        .iter()
        .map(|p| game.at(p, 0))
        .max()
        .expect("non-empty strategy set");
    diagonal
        .into_iter()
        .filter(|p| game.at(p, 0) == top)
        .collect()
}

/// Each player's best worst payoff.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct MaximinVector(Vec<Payoff>);

impl MaximinVector {
    pub fn into_inner(self) -> Vec<Payoff> {
        self.0
    }
}

impl Deref for MaximinVector {
    type Target = [Payoff];

    fn deref(&self) -> &[Payoff] {
        &self.0
    }
}

impl fmt::Display for MaximinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `max over own strategies of min over joint opponent profiles`, per player.
pub fn maximin_values(game: &Game) -> MaximinVector {
    let ext = Extrema::compute(game, &SurvivingSets::full(game));
    MaximinVector(
        (0..game.n_players())
            .map(|i| *ext.lo[i].iter().max().expect("non-empty strategy set"))
            .collect(),
    )
}

/// Profiles giving every player at least their maximin value in the full game.
pub fn individually_rational_profiles(game: &Game) -> Vec<Profile> {
    let threshold = maximin_values(game);
    game.profiles()
        .filter(|p| {
            game.payoff_vector(p)
                .iter()
                .zip(threshold.iter())
                .all(|(u, t)| u >= t)
        })
        .collect()
}

/// Min and max of each player's payoff for each own strategy, over the
/// surviving joint opponent profiles. Indexed by original strategy; entries
/// of dead strategies are meaningless.
pub(crate) struct Extrema {
    lo: Vec<Vec<Payoff>>,
    hi: Vec<Vec<Payoff>>,
}

impl Extrema {
    pub(crate) fn compute(game: &Game, survivors: &SurvivingSets) -> Self {
        let counts = game.strategy_counts();
        let mut lo: Vec<Vec<Payoff>> = counts.iter().map(|&k| vec![Payoff::MAX; k]).collect();
        let mut hi: Vec<Vec<Payoff>> = counts.iter().map(|&k| vec![Payoff::MIN; k]).collect();
        for_each_product(survivors.sets(), |p| {
            let u = game.payoff_vector(p);
            for (i, &s) in p.iter().enumerate() {
                lo[i][s] = lo[i][s].min(u[i]);
                hi[i][s] = hi[i][s].max(u[i]);
            }
        });
        Extrema { lo, hi }
    }

    fn witness(&self, survivors: &SurvivingSets, player: usize, strategy: usize) -> Option<usize> {
        let ceiling = self.hi[player][strategy];
        survivors
            .player(player)
            .iter()
            .copied()
            .find(|&u| self.lo[player][u] > ceiling)
    }
}

/// A strategy deleted during elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Deletion {
    pub player: usize,
    pub strategy: usize,
}

/// Returns the lowest-index alive strategy that minimax-dominates `strategy`
/// for `player` against the surviving opponents, or `None`.
///
/// `u` dominates `s` when the worst payoff of `u` is strictly greater than the
/// best payoff of `s`.
pub fn is_minimax_dominated(
    game: &Game,
    survivors: &SurvivingSets,
    player: usize,
    strategy: usize,
) -> Result<Option<usize>> {
    // validates survivors against the game
    SurvivingSets::new(game, survivors.sets().to_vec())?;
    if player >= game.n_players() || strategy >= game.strategy_count(player) {
        return Err(GameError::IndexOutOfRange(format!(
            "strategy {strategy} of player {player}"
        )));
    }
    if !survivors.contains(player, strategy) {
        return Err(GameError::DeadStrategy { player, strategy });
    }
    Ok(Extrema::compute(game, survivors).witness(survivors, player, strategy))
}

/// Every currently minimax-dominated (player, strategy), sorted.
pub fn dominated_strategies(game: &Game, survivors: &SurvivingSets) -> Vec<Deletion> {
    let ext = Extrema::compute(game, survivors);
    let mut out = Vec::new();
    for i in 0..game.n_players() {
        let alive = survivors.player(i);
        let best_floor = alive
            .iter()
            .map(|&s| ext.lo[i][s])
            .max()
            .unwrap_or(Payoff::MIN);
        out.extend(
            alive
                .iter()
                .filter(|&&s| best_floor > ext.hi[i][s])
                .map(|&s| Deletion {
                    player: i,
                    strategy: s,
                }),
        );
    }
    out
}

/// Deletes all currently dominated strategies at once. No deletion in the
/// batch depends on another deletion of the same batch.
pub fn eliminate_round(game: &Game, survivors: &SurvivingSets) -> (SurvivingSets, Vec<Deletion>) {
    let batch = dominated_strategies(game, survivors);
    let mut next = survivors.clone();
    for d in &batch {
        next.remove(d.player, d.strategy);
    }
    (next, batch)
}

/// Batch rounds of minimax elimination, from the full game to a fixed point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationTrace {
    rounds: Vec<Vec<Deletion>>,
    survivors: SurvivingSets,
}

impl EliminationTrace {
    /// Non-empty batches in order; round `r` is at index `r - 1`.
    pub fn rounds(&self) -> &[Vec<Deletion>] {
        &self.rounds
    }

    pub fn final_survivors(&self) -> &SurvivingSets {
        &self.survivors
    }

    /// 1-based round in which the strategy was deleted.
    pub fn round_of(&self, player: usize, strategy: usize) -> Option<usize> {
        self.rounds
            .iter()
            .position(|r| r.contains(&Deletion { player, strategy }))
            .map(|k| k + 1)
    }

    /// 1-based round in which the profile first lost one of its strategies.
    pub fn profile_eliminated_in(&self, profile: &[usize]) -> Option<usize> {
        profile
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| self.round_of(i, s))
            .min()
    }

    /// Survivor sets after the first `round` rounds.
    pub fn survivors_after(&self, game: &Game, round: usize) -> SurvivingSets {
        let mut s = SurvivingSets::full(game);
        for batch in self.rounds.iter().take(round) {
            for d in batch {
                s.remove(d.player, d.strategy);
            }
        }
        s
    }
}

pub fn iterate_elimination(game: &Game) -> EliminationTrace {
    let mut survivors = SurvivingSets::full(game);
    let mut rounds = Vec::new();
    loop {
        let (next, batch) = eliminate_round(game, &survivors);
        if batch.is_empty() {
            break;
        }
        rounds.push(batch);
        survivors = next;
    }
    EliminationTrace { rounds, survivors }
}

/// Profiles made only of strategies that survive iterated minimax elimination.
pub fn minimax_rationalizable_profiles(game: &Game) -> Vec<Profile> {
    iterate_elimination(game)
        .final_survivors()
        .profiles()
        .collect()
}
