//! Finite normal-form games with ordinal payoffs.
//!
//! A [`Game`] stores a complete payoff tensor in mixed-radix order: player 0
//! is the most significant coordinate and the last player varies fastest.
//! Payoffs are exact integers and are only ever compared, never combined.

use std::collections::HashSet;
use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::{GameError, Result};

/// An ordinal payoff. Only the order between values is meaningful.
pub type Payoff = i64;

/// Largest payoff magnitude accepted by [`Game::new`].
pub const PAYOFF_BOUND: Payoff = 1 << 62;

/// Default cap on `cells * players` payoff entries.
pub const DEFAULT_MAX_ENTRIES: usize = 10_000_000;

/// One strategy index per player, addressing one cell of the payoff tensor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Profile(Vec<usize>);

impl Profile {
    pub fn new(indices: Vec<usize>) -> Self {
        Profile(indices)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<usize> {
        self.0
    }
}

impl From<Vec<usize>> for Profile {
    fn from(indices: Vec<usize>) -> Self {
        Profile(indices)
    }
}

impl From<&[usize]> for Profile {
    fn from(indices: &[usize]) -> Self {
        Profile(indices.to_vec())
    }
}

impl Deref for Profile {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Labels may only use `[A-Za-z0-9_-]` so the text format stays whitespace-tokenized.
pub fn is_valid_label(label: &str) -> bool {
    !label.is_empty()
        && label
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

/// An immutable finite game in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    labels: Vec<Vec<String>>,
    strides: Vec<usize>,
    cells: usize,
    // cell-major: payoffs[cell * n + player]
    payoffs: Vec<Payoff>,
}

impl Game {
    /// Builds a game from an explicit list of cells, each listed exactly once.
    pub fn new<I>(labels: Vec<Vec<String>>, cells: I) -> Result<Game>
    where
        I: IntoIterator<Item = (Profile, Vec<Payoff>)>,
    {
        Self::with_max_entries(labels, cells, DEFAULT_MAX_ENTRIES)
    }

    pub fn with_max_entries<I>(
        labels: Vec<Vec<String>>,
        cells: I,
        max_entries: usize,
    ) -> Result<Game>
    where
        I: IntoIterator<Item = (Profile, Vec<Payoff>)>,
    {
        let (strides, n_cells) = layout(&labels, max_entries)?;
        let n = labels.len();
        let counts: Vec<usize> = labels.iter().map(Vec::len).collect();
        let mut payoffs = vec![0; n_cells * n];
        let mut seen = vec![false; n_cells];

        for (profile, values) in cells {
            if profile.len() != n || profile.iter().zip(&counts).any(|(&s, &k)| s >= k) {
                return Err(GameError::IndexOutOfRange(format!(
                    "cell {profile} does not fit strategy counts {counts:?}"
                )));
            }
            if values.len() != n {
                return Err(GameError::PayoffCount {
                    profile,
                    expected: n,
                    found: values.len(),
                });
            }
            let cell = flat_index(&strides, &profile);
            if seen[cell] {
                return Err(GameError::DuplicateCell(profile));
            }
            for &v in &values {
                check_payoff(v)?;
            }
            seen[cell] = true;
            payoffs[cell * n..(cell + 1) * n].copy_from_slice(&values);
        }

        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(GameError::MissingCell(unflatten(
                &strides, &counts, missing,
            )));
        }

        Ok(Game {
            labels,
            strides,
            cells: n_cells,
            payoffs,
        })
    }

    /// Tabulates a game by calling `f(profile, player)` for every cell in
    /// enumeration order, players in index order within a cell.
    pub fn from_fn<F>(labels: Vec<Vec<String>>, max_entries: usize, mut f: F) -> Result<Game>
    where
        F: FnMut(&[usize], usize) -> Payoff,
    {
        let (strides, n_cells) = layout(&labels, max_entries)?;
        let n = labels.len();
        let axes: Vec<Vec<usize>> = labels.iter().map(|l| (0..l.len()).collect()).collect();
        let mut payoffs = Vec::with_capacity(n_cells * n);
        let mut bad = None;
        for_each_product(&axes, |p| {
            for i in 0..n {
                let v = f(p, i);
                if bad.is_none() && check_payoff(v).is_err() {
                    bad = Some(v);
                }
                payoffs.push(v);
            }
        });
        if let Some(value) = bad {
            return Err(GameError::PayoffOutOfRange { value });
        }
        Ok(Game {
            labels,
            strides,
            cells: n_cells,
            payoffs,
        })
    }

    pub fn n_players(&self) -> usize {
        self.labels.len()
    }

    pub fn strategy_count(&self, player: usize) -> usize {
        self.labels[player].len()
    }

    pub fn strategy_counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, player: usize) -> &[String] {
        &self.labels[player]
    }

    pub fn all_labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn label(&self, player: usize, strategy: usize) -> &str {
        &self.labels[player][strategy]
    }

    /// Number of cells, i.e. the product of all strategy counts.
    pub fn num_profiles(&self) -> usize {
        self.cells
    }

    /// `u_player(profile)`, with the profile and player validated.
    pub fn payoff(&self, profile: &[usize], player: usize) -> Result<Payoff> {
        self.check_profile(profile)?;
        if player >= self.n_players() {
            return Err(GameError::IndexOutOfRange(format!(
                "player {player} of {}",
                self.n_players()
            )));
        }
        Ok(self.at(profile, player))
    }

    /// The payoff vector of a cell.
    ///
    /// Panics if `profile` is not valid for this game.
    pub fn payoff_vector(&self, profile: &[usize]) -> &[Payoff] {
        let n = self.n_players();
        let cell = self.cell_index(profile);
        &self.payoffs[cell * n..(cell + 1) * n]
    }

    pub(crate) fn at(&self, profile: &[usize], player: usize) -> Payoff {
        self.payoffs[self.cell_index(profile) * self.n_players() + player]
    }

    pub(crate) fn cell_index(&self, profile: &[usize]) -> usize {
        debug_assert!(self.check_profile(profile).is_ok());
        flat_index(&self.strides, profile)
    }

    pub(crate) fn strides(&self) -> &[usize] {
        &self.strides
    }

    pub(crate) fn raw_payoffs(&self) -> &[Payoff] {
        &self.payoffs
    }

    pub fn check_profile(&self, profile: &[usize]) -> Result<()> {
        if profile.len() != self.n_players()
            || profile.iter().zip(&self.labels).any(|(&s, l)| s >= l.len())
        {
            return Err(GameError::IndexOutOfRange(format!(
                "profile {} does not fit strategy counts {:?}",
                Profile::from(profile),
                self.strategy_counts()
            )));
        }
        Ok(())
    }

    /// All profiles in mixed-radix order, last player fastest.
    pub fn profiles(&self) -> Profiles {
        Profiles::new(self.labels.iter().map(|l| (0..l.len()).collect()).collect())
    }

    /// True iff every player has the same label sequence and payoffs are
    /// invariant under each adjacent transposition of players. Adjacent
    /// transpositions generate the full symmetric group.
    pub fn is_symmetric(&self) -> bool {
        let n = self.n_players();
        if self.labels.iter().any(|l| *l != self.labels[0]) {
            return false;
        }
        let mut swapped = vec![0; n];
        for k in 0..n.saturating_sub(1) {
            for p in self.profiles() {
                swapped.copy_from_slice(&p);
                swapped.swap(k, k + 1);
                let a = self.payoff_vector(&p);
                let b = self.payoff_vector(&swapped);
                for (j, &value) in a.iter().enumerate() {
                    let partner = if j == k {
                        k + 1
                    } else if j == k + 1 {
                        k
                    } else {
                        j
                    };
                    if value != b[partner] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `[(k, k, ..., k) for k in 0..|strategies|]`; only defined on symmetric games.
    pub fn diagonal_profiles(&self) -> Result<Vec<Profile>> {
        if !self.is_symmetric() {
            return Err(GameError::NotSymmetric);
        }
        Ok(self.diagonal_unchecked())
    }

    pub(crate) fn diagonal_unchecked(&self) -> Vec<Profile> {
        (0..self.strategy_count(0))
            .map(|k| Profile(vec![k; self.n_players()]))
            .collect()
    }

    /// The game restricted to the surviving strategies.
    pub fn restrict(&self, survivors: &SurvivingSets) -> Result<Restriction> {
        survivors.validate(self)?;
        let labels = survivors
            .sets
            .iter()
            .enumerate()
            .map(|(i, set)| set.iter().map(|&s| self.labels[i][s].clone()).collect())
            .collect();
        let mut original = vec![0; self.n_players()];
        let game = Game::from_fn(labels, usize::MAX, |local, i| {
            for (j, &s) in local.iter().enumerate() {
                original[j] = survivors.sets[j][s];
            }
            self.at(&original, i)
        })?;
        Ok(Restriction {
            game,
            survivors: survivors.clone(),
        })
    }

    /// Applies `f` to every payoff. Used for ordinal-invariance checks.
    pub fn map_payoffs<F>(&self, f: F) -> Result<Game>
    where
        F: Fn(Payoff) -> Payoff,
    {
        let payoffs: Vec<Payoff> = self.payoffs.iter().map(|&v| f(v)).collect();
        for &v in &payoffs {
            check_payoff(v)?;
        }
        Ok(Game {
            payoffs,
            ..self.clone()
        })
    }

    /// `(Label,Label,...)` for a profile of this game.
    pub fn format_profile(&self, profile: &[usize]) -> String {
        let parts: Vec<&str> = profile
            .iter()
            .enumerate()
            .map(|(i, &s)| self.label(i, s))
            .collect();
        format!("({})", parts.join(","))
    }
}

fn check_payoff(v: Payoff) -> Result<()> {
    if !(-PAYOFF_BOUND..=PAYOFF_BOUND).contains(&v) {
        return Err(GameError::PayoffOutOfRange { value: v });
    }
    Ok(())
}

fn layout(labels: &[Vec<String>], max_entries: usize) -> Result<(Vec<usize>, usize)> {
    if labels.is_empty() {
        return Err(GameError::NoPlayers);
    }
    for (player, list) in labels.iter().enumerate() {
        if list.is_empty() {
            return Err(GameError::EmptyStrategySet(player));
        }
        let mut seen = HashSet::new();
        for label in list {
            if !is_valid_label(label) {
                return Err(GameError::InvalidLabel {
                    player,
                    label: label.clone(),
                });
            }
            if !seen.insert(label.as_str()) {
                return Err(GameError::DuplicateLabel {
                    player,
                    label: label.clone(),
                });
            }
        }
    }
    let entries = labels.iter().fold(labels.len() as u128, |acc, l| {
        acc.saturating_mul(l.len() as u128)
    });
    if entries > max_entries as u128 {
        return Err(GameError::SizeGuardExceeded {
            entries,
            limit: max_entries,
        });
    }
    let mut strides = vec![1; labels.len()];
    for i in (0..labels.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * labels[i + 1].len();
    }
    let cells = strides[0] * labels[0].len();
    Ok((strides, cells))
}

fn flat_index(strides: &[usize], profile: &[usize]) -> usize {
    profile.iter().zip(strides).map(|(s, w)| s * w).sum()
}

fn unflatten(strides: &[usize], counts: &[usize], cell: usize) -> Profile {
    Profile(
        strides
            .iter()
            .zip(counts)
            .map(|(w, k)| (cell / w) % k)
            .collect(),
    )
}

/// Calls `f` on every element of the cartesian product of `axes`, last axis fastest.
pub(crate) fn for_each_product<F: FnMut(&[usize])>(axes: &[Vec<usize>], mut f: F) {
    if axes.iter().any(Vec::is_empty) {
        return;
    }
    let mut pos = vec![0; axes.len()];
    let mut cur: Vec<usize> = axes.iter().map(|a| a[0]).collect();
    loop {
        f(&cur);
        let mut k = axes.len();
        loop {
            if k == 0 {
                return;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < axes[k].len() {
                cur[k] = axes[k][pos[k]];
                break;
            }
            pos[k] = 0;
            cur[k] = axes[k][0];
        }
    }
}

/// Iterator over the cartesian product of per-player index lists.
#[derive(Debug, Clone)]
pub struct Profiles {
    axes: Vec<Vec<usize>>,
    pos: Vec<usize>,
    done: bool,
}

impl Profiles {
    fn new(axes: Vec<Vec<usize>>) -> Self {
        let done = axes.iter().any(Vec::is_empty);
        let pos = vec![0; axes.len()];
        Profiles { axes, pos, done }
    }
}

impl Iterator for Profiles {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        if self.done {
            return None;
        }
        let out = Profile(
            self.pos
                .iter()
                .zip(&self.axes)
                .map(|(&k, a)| a[k])
                .collect(),
        );
        let mut k = self.axes.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.pos[k] += 1;
            if self.pos[k] < self.axes[k].len() {
                break;
            }
            self.pos[k] = 0;
        }
        Some(out)
    }
}

/// Per-player sorted sets of strategies still alive during elimination.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SurvivingSets {
    sets: Vec<Vec<usize>>,
}

impl SurvivingSets {
    /// Every strategy of every player alive.
    pub fn full(game: &Game) -> Self {
        SurvivingSets {
            sets: game.labels.iter().map(|l| (0..l.len()).collect()).collect(),
        }
    }

    /// Validates and normalizes (sorts, deduplicates) explicit sets.
    pub fn new(game: &Game, mut sets: Vec<Vec<usize>>) -> Result<Self> {
        for set in &mut sets {
            set.sort_unstable();
            set.dedup();
        }
        let s = SurvivingSets { sets };
        s.validate(game)?;
        Ok(s)
    }

    fn validate(&self, game: &Game) -> Result<()> {
        if self.sets.len() != game.n_players() {
            return Err(GameError::IndexOutOfRange(format!(
                "{} survivor sets for {} players",
                self.sets.len(),
                game.n_players()
            )));
        }
        for (i, set) in self.sets.iter().enumerate() {
            if set.is_empty() {
                return Err(GameError::EmptySurvivorSet(i));
            }
            if let Some(&s) = set.iter().find(|&&s| s >= game.strategy_count(i)) {
                return Err(GameError::IndexOutOfRange(format!(
                    "strategy {s} of player {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn n_players(&self) -> usize {
        self.sets.len()
    }

    pub fn player(&self, player: usize) -> &[usize] {
        &self.sets[player]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn contains(&self, player: usize, strategy: usize) -> bool {
        self.sets
            .get(player)
            .is_some_and(|s| s.binary_search(&strategy).is_ok())
    }

    /// Total number of alive (player, strategy) pairs.
    pub fn total(&self) -> usize {
        self.sets.iter().map(Vec::len).sum()
    }

    /// The cartesian product of the sets, in enumeration order.
    pub fn profiles(&self) -> Profiles {
        Profiles::new(self.sets.clone())
    }

    pub(crate) fn remove(&mut self, player: usize, strategy: usize) -> bool {
        match self.sets[player].binary_search(&strategy) {
            Ok(k) => {
                self.sets[player].remove(k);
                true
            }
            Err(_) => false,
        }
    }
}

/// A game over a subset of strategies, with the index mapping back to the original.
#[derive(Debug, Clone)]
pub struct Restriction {
    game: Game,
    survivors: SurvivingSets,
}

impl Restriction {
    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn survivors(&self) -> &SurvivingSets {
        &self.survivors
    }

    /// Maps a profile of the restricted game to the original game.
    pub fn original_profile(&self, local: &[usize]) -> Profile {
        Profile(
            local
                .iter()
                .enumerate()
                .map(|(i, &s)| self.survivors.sets[i][s])
                .collect(),
        )
    }

    /// Maps an original strategy to its restricted index, if it survived.
    pub fn local_strategy(&self, player: usize, original: usize) -> Option<usize> {
        self.survivors.sets[player].binary_search(&original).ok()
    }
}
