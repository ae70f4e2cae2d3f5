use serde::Serialize;

use crate::error::{GameError, Result};
use crate::game::{Game, Profile};
use crate::solvers::{
    hofstadter_unchecked, individually_rational_profiles, minimax_rationalizable_profiles,
};

/// Which solution concepts a single profile belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RegionTag {
    pub rationalizable: bool,
    pub individually_rational: bool,
    pub hofstadter: bool,
}

/// Profile counts per region of the inclusion diagram. Hofstadter profiles are
/// counted only under `hofstadter`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct RegionCounts {
    pub hofstadter: usize,
    pub rationalizable_and_ir: usize,
    pub rationalizable_only: usize,
    pub ir_only: usize,
    pub neither: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    pub tags: Vec<(Profile, RegionTag)>,
    pub counts: RegionCounts,
}

impl Regions {
    pub fn tag(&self, profile: &[usize]) -> Option<RegionTag> {
        self.tags
            .iter()
            .find(|(p, _)| p.indices() == profile)
            .map(|(_, t)| *t)
    }
}

/// Tags every profile of a symmetric game.
pub fn classify_regions(game: &Game) -> Result<Regions> {
    if !game.is_symmetric() {
        return Err(GameError::NotSymmetric);
    }
    let rationalizable = minimax_rationalizable_profiles(game);
    let ir = individually_rational_profiles(game);
    let hofstadter = hofstadter_unchecked(game);

    let mut counts = RegionCounts::default();
    let tags = game
        .profiles()
        .map(|p| {
            let tag = RegionTag {
                rationalizable: rationalizable.contains(&p),
                individually_rational: ir.contains(&p),
                hofstadter: hofstadter.contains(&p),
            };
            match (
                tag.hofstadter,
                tag.rationalizable,
                tag.individually_rational,
            ) {
                (true, _, _) => counts.hofstadter += 1,
                (false, true, true) => counts.rationalizable_and_ir += 1,
                (false, true, false) => counts.rationalizable_only += 1,
                (false, false, true) => counts.ir_only += 1,
                (false, false, false) => counts.neither += 1,
            }
            (p, tag)
        })
        .collect();
    Ok(Regions { tags, counts })
}
