//! Seeded sweeps over random symmetric games.
//!
//! Game `j` of a sweep with master seed `m` uses a generator seeded with
//! `stream_seed(m, j)`. Its first draw picks the strategy count
//! (`lo + below(hi - lo + 1)`), the second is the game seed, the third seeds
//! the order-independence checker. Results are aggregated in game order, so
//! the report does not depend on the number of worker threads.

use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{
    check_ir_survives_round1, check_order_independence, check_theorem1, check_theorem2, Property,
    Verdict,
};
use super::generate::random_symmetric_game_with_limit;
use super::regions::classify_regions;
use crate::error::{GameError, Result};
use crate::game::{Game, Payoff, DEFAULT_MAX_ENTRIES, PAYOFF_BOUND};
use crate::io::{serialize_game, GameDocument};
use crate::rng::{stream_seed, SplitMix64};

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub players: usize,
    pub strategies: RangeInclusive<usize>,
    pub payoffs: RangeInclusive<Payoff>,
    pub games: usize,
    pub seed: u64,
    pub properties: Vec<Property>,
    /// Random orders per game for the order-independence check.
    pub orders: usize,
    /// Worker threads; `None` uses the global rayon pool.
    pub workers: Option<usize>,
    pub max_entries: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            players: 2,
            strategies: 2..=6,
            payoffs: 0..=99,
            games: 1000,
            seed: 0,
            properties: vec![
                Property::Theorem1,
                Property::Theorem2,
                Property::IrSurvivesRound1,
            ],
            orders: 20,
            workers: None,
            max_entries: DEFAULT_MAX_ENTRIES,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub game_index: usize,
    pub property: Property,
    pub detail: String,
    /// The offending game as a `.gnf` document.
    pub document: String,
}

/// Number of profiles found in each strict part of the inclusions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct WitnessCounts {
    pub rationalizable_not_hofstadter: u64,
    pub ir_not_hofstadter: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub players: usize,
    pub strategies: (usize, usize),
    pub payoffs: (Payoff, Payoff),
    pub properties: Vec<Property>,
    pub rng_seed: u64,
    pub games_checked: usize,
    /// Games rejected by the size guard.
    pub skipped: usize,
    pub violations: Vec<Violation>,
    pub witness_counts: WitnessCounts,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

enum GameOutcome {
    Skipped,
    Checked {
        violations: Vec<Violation>,
        witnesses: WitnessCounts,
    },
}

fn validate(config: &SweepConfig) -> Result<()> {
    if config.players == 0 {
        return Err(GameError::BadConfig("players must be at least 1".into()));
    }
    let (klo, khi) = (*config.strategies.start(), *config.strategies.end());
    if klo == 0 || klo > khi {
        return Err(GameError::BadConfig(format!(
            "strategy range {klo}..{khi} must be non-empty and start at 1 or more"
        )));
    }
    let (lo, hi) = (*config.payoffs.start(), *config.payoffs.end());
    if lo > hi || lo < -PAYOFF_BOUND || hi > PAYOFF_BOUND {
        return Err(GameError::BadRange { lo, hi });
    }
    Ok(())
}

pub fn sweep(config: &SweepConfig) -> Result<SweepReport> {
    validate(config)?;
    let started = Instant::now();

    let run = || -> Result<Vec<GameOutcome>> {
        (0..config.games)
            .into_par_iter()
            .map(|j| run_one(config, j))
            .collect()
    };
    let outcomes = match config.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| GameError::BadConfig(e.to_string()))?
            .install(run)?,
        None => run()?,
    };

    let mut report = SweepReport {
        players: config.players,
        strategies: (*config.strategies.start(), *config.strategies.end()),
        payoffs: (*config.payoffs.start(), *config.payoffs.end()),
        properties: config.properties.clone(),
        rng_seed: config.seed,
        games_checked: 0,
        skipped: 0,
        violations: Vec::new(),
        witness_counts: WitnessCounts::default(),
        elapsed: Duration::ZERO,
    };
    for outcome in outcomes {
        match outcome {
            GameOutcome::Skipped => report.skipped += 1,
            GameOutcome::Checked {
                violations,
                witnesses,
            } => {
                report.games_checked += 1;
                report.violations.extend(violations);
                report.witness_counts.rationalizable_not_hofstadter +=
                    witnesses.rationalizable_not_hofstadter;
                report.witness_counts.ir_not_hofstadter += witnesses.ir_not_hofstadter;
            }
        }
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

fn run_one(config: &SweepConfig, index: usize) -> Result<GameOutcome> {
    let mut rng = SplitMix64::new(stream_seed(config.seed, index as u64));
    let (klo, khi) = (*config.strategies.start(), *config.strategies.end());
    let k = klo + rng.below((khi - klo + 1) as u64) as usize;
    let game_seed = rng.next_u64();
    let order_seed = rng.next_u64();

    let game = match random_symmetric_game_with_limit(
        config.players,
        k,
        *config.payoffs.start(),
        *config.payoffs.end(),
        game_seed,
        config.max_entries,
    ) {
        Ok(g) => g,
        Err(GameError::SizeGuardExceeded { .. }) => return Ok(GameOutcome::Skipped),
        Err(e) => return Err(e),
    };

    let mut violations = Vec::new();
    for &property in &config.properties {
        let verdict = match property {
            Property::Theorem1 => check_theorem1(&game)?,
            Property::Theorem2 => check_theorem2(&game)?,
            Property::OrderIndependence => {
                check_order_independence(&game, config.orders, order_seed)
            }
            Property::IrSurvivesRound1 => check_ir_survives_round1(&game),
        };
        if let Some(v) = violation(&game, index, config.seed, verdict) {
            violations.push(v);
        }
    }

    let mut witnesses = WitnessCounts::default();
    for (_, tag) in classify_regions(&game)?.tags {
        if tag.hofstadter {
            continue;
        }
        witnesses.rationalizable_not_hofstadter += tag.rationalizable as u64;
        witnesses.ir_not_hofstadter += tag.individually_rational as u64;
    }
    Ok(GameOutcome::Checked {
        violations,
        witnesses,
    })
}

fn violation(game: &Game, index: usize, seed: u64, verdict: Verdict) -> Option<Violation> {
    if verdict.passed() {
        return None;
    }
    let cx = verdict.counterexample?;
    let mut doc = GameDocument::new(game.clone());
    doc.name = Some(format!("sweep-{seed}-{index}"));
    Some(Violation {
        game_index: index,
        property: verdict.property,
        detail: cx.describe(),
        document: serialize_game(&doc),
    })
}
