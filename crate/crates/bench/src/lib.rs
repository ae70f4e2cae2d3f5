//! Shared inputs for the benchmarks.

pub use gnf_core as core;

use gnf_core::verify::random_symmetric_game;
use gnf_core::Game;

/// A seeded symmetric game with `players` players and `k` strategies each.
pub fn sample_game(players: usize, k: usize, seed: u64) -> Game {
    random_symmetric_game(players, k, 0, 99, seed).expect("sample sizes are within the size guard")
}
