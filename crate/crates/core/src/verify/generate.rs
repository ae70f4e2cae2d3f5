//! Seeded random games.
//!
//! Plain games draw one payoff per (cell, player) in profile enumeration
//! order, players in index order within a cell. Symmetric games draw one
//! payoff per class `(own strategy, sorted opponent strategies)`, in the order
//! classes are first met while walking cells and players the same way.

use std::collections::HashMap;

use crate::error::{GameError, Result};
use crate::game::{Game, Payoff, DEFAULT_MAX_ENTRIES, PAYOFF_BOUND};
use crate::rng::SplitMix64;

/// `s0, s1, ...`
pub fn strategy_labels(k: usize) -> Vec<String> {
    (0..k).map(|s| format!("s{s}")).collect()
}

fn check_range(lo: Payoff, hi: Payoff) -> Result<()> {
    if lo > hi || lo < -PAYOFF_BOUND || hi > PAYOFF_BOUND {
        return Err(GameError::BadRange { lo, hi });
    }
    Ok(())
}

pub fn random_game(counts: &[usize], lo: Payoff, hi: Payoff, seed: u64) -> Result<Game> {
    random_game_with_limit(counts, lo, hi, seed, DEFAULT_MAX_ENTRIES)
}

pub fn random_game_with_limit(
    counts: &[usize],
    lo: Payoff,
    hi: Payoff,
    seed: u64,
    max_entries: usize,
) -> Result<Game> {
    check_range(lo, hi)?;
    let labels = counts.iter().map(|&k| strategy_labels(k)).collect();
    let mut rng = SplitMix64::new(seed);
    Game::from_fn(labels, max_entries, |_, _| rng.uniform(lo, hi))
}

pub fn random_symmetric_game(
    players: usize,
    strategies: usize,
    lo: Payoff,
    hi: Payoff,
    seed: u64,
) -> Result<Game> {
    random_symmetric_game_with_limit(players, strategies, lo, hi, seed, DEFAULT_MAX_ENTRIES)
}

pub fn random_symmetric_game_with_limit(
    players: usize,
    strategies: usize,
    lo: Payoff,
    hi: Payoff,
    seed: u64,
    max_entries: usize,
) -> Result<Game> {
    check_range(lo, hi)?;
    let labels = vec![strategy_labels(strategies); players];
    let mut rng = SplitMix64::new(seed);
    let mut classes: HashMap<(usize, Vec<usize>), Payoff> = HashMap::new();
    let mut others = Vec::with_capacity(players.saturating_sub(1));
    Game::from_fn(labels, max_entries, |p, i| {
        others.clear();
        others.extend(
            p.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &s)| s),
        );
        others.sort_unstable();
        *classes
            .entry((p[i], others.clone()))
            .or_insert_with(|| rng.uniform(lo, hi))
    })
}
