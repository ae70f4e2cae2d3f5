//! Empirical checks of the subsumption results: random game generation,
//! per-game property checkers, region classification and seeded sweeps.

mod checks;
mod generate;
mod regions;
mod sweep;

pub use checks::{
    check_ir_survives_round1, check_order_independence, check_theorem1, check_theorem2,
    ir_profiles_eliminated_later, sequential_elimination, Counterexample, Offense, Outcome,
    Property, Verdict,
};
pub use generate::{
    random_game, random_game_with_limit, random_symmetric_game, random_symmetric_game_with_limit,
    strategy_labels,
};
pub use regions::{classify_regions, RegionCounts, RegionTag, Regions};
pub use sweep::{sweep, SweepConfig, SweepReport, Violation, WitnessCounts};
