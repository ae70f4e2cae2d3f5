//! The small symmetric games used throughout the docs and tests.

use crate::game::{Game, Payoff, Profile};

fn two_player(labels: [&str; 2], rows: [[(Payoff, Payoff); 2]; 2]) -> Game {
    matrix(&labels, &rows.map(|r| r.to_vec()))
}

/// Builds a two-player game from a row-major bimatrix.
pub fn matrix<R: AsRef<[(Payoff, Payoff)]>>(labels: &[&str], rows: &[R]) -> Game {
    let names: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let cells = rows.iter().enumerate().flat_map(|(r, row)| {
        row.as_ref()
            .iter()
            .enumerate()
            .map(move |(c, &(a, b))| (Profile::new(vec![r, c]), vec![a, b]))
    });
    Game::new(vec![names.clone(), names], cells.collect::<Vec<_>>()).expect("valid fixture")
}

pub fn prisoners_dilemma() -> Game {
    two_player(
        ["Defect", "Cooperate"],
        [[(1, 1), (3, 0)], [(0, 3), (2, 2)]],
    )
}

pub fn chicken() -> Game {
    two_player(["Straight", "Swerve"], [[(0, 0), (3, 1)], [(1, 3), (2, 2)]])
}

pub fn coordination() -> Game {
    two_player(["Sushi", "Pizza"], [[(1, 1), (0, 0)], [(0, 0), (2, 2)]])
}

/// The 3x3 game where C and then B are eliminated for both players.
pub fn three_by_three() -> Game {
    matrix(
        &["A", "B", "C"],
        &[
            [(9, 9), (8, 6), (5, 1)],
            [(6, 8), (7, 7), (4, 2)],
            [(1, 5), (2, 4), (3, 3)],
        ],
    )
}
