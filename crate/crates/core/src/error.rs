use thiserror::Error;

use crate::game::{Payoff, Profile};

/// Errors raised when building games or querying them with invalid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("a game needs at least one player")]
    NoPlayers,
    #[error("player {0} has no strategies")]
    EmptyStrategySet(usize),
    #[error("player {player}: duplicate strategy label `{label}`")]
    DuplicateLabel { player: usize, label: String },
    #[error("player {player}: invalid strategy label `{label}` (allowed: A-Z a-z 0-9 _ -)")]
    InvalidLabel { player: usize, label: String },
    #[error("cell {0} is listed more than once")]
    DuplicateCell(Profile),
    #[error("cell {0} is missing")]
    MissingCell(Profile),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("cell {profile} has {found} payoffs, expected {expected}")]
    PayoffCount {
        profile: Profile,
        expected: usize,
        found: usize,
    },
    #[error("payoff {value} outside [-2^62, 2^62]")]
    PayoffOutOfRange { value: Payoff },
    #[error("game has {entries} payoff entries, limit is {limit}")]
    SizeGuardExceeded { entries: u128, limit: usize },
    #[error("the game is not symmetric")]
    NotSymmetric,
    #[error("player {0} has no surviving strategies")]
    EmptySurvivorSet(usize),
    #[error("strategy {strategy} of player {player} is not alive")]
    DeadStrategy { player: usize, strategy: usize },
    #[error("bad payoff range {lo}..{hi}")]
    BadRange { lo: Payoff, hi: Payoff },
    #[error("invalid configuration: {0}")]
    BadConfig(String),
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
