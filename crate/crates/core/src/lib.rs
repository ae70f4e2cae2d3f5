//! Nashian and non-Nashian solution concepts for finite normal-form games.
//!
//! Payoffs are ordinal: they are compared and never added or scaled. On top of
//! the classical pure Nash equilibrium the crate computes Hofstadter
//! (superrational) equilibria of symmetric games, iterated deletion of
//! minimax-dominated strategies, maximin values and individually rational
//! profiles, and provides the machinery to check that on symmetric games every
//! Hofstadter equilibrium is both minimax-rationalizable and individually
//! rational.
//!
//! ```
//! use gnf_core::{fixtures, solvers};
//!
//! let pd = fixtures::prisoners_dilemma();
//! let nash = solvers::pure_nash(&pd);
//! let superrational = solvers::hofstadter_equilibria(&pd).unwrap();
//! assert_eq!(pd.format_profile(&nash[0]), "(Defect,Defect)");
//! assert_eq!(pd.format_profile(&superrational[0]), "(Cooperate,Cooperate)");
//! ```

pub mod error;
pub mod fixtures;
pub mod game;
pub mod io;
pub mod rng;
pub mod solvers;
pub mod verify;

pub use error::GameError;
pub use game::{Game, Payoff, Profile, Restriction, SurvivingSets};
pub use io::{AnalysisReport, Format, GameDocument};
pub use solvers::{Deletion, EliminationTrace, MaximinVector};
pub use verify::{Property, SweepConfig, SweepReport, Verdict};
