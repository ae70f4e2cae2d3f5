//! Analysis reports and their text, CSV and JSON renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::game::{Game, Profile, SurvivingSets};
use crate::solvers::{
    hofstadter_unchecked, individually_rational_profiles, iterate_elimination, maximin_values,
    pure_nash, EliminationTrace, MaximinVector,
};
use crate::verify::{classify_regions, Regions, SweepReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown format `{0}` (expected text, csv or json)")]
pub struct UnknownFormat(pub String);

impl FromStr for Format {
    type Err = UnknownFormat;

    fn from_str(s: &str) -> Result<Self, UnknownFormat> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(UnknownFormat(other.to_string())),
        }
    }
}

/// Every solution concept for one game.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub name: String,
    pub game: Game,
    pub symmetric: bool,
    pub nash: Vec<Profile>,
    /// `None` when the game is not symmetric.
    pub hofstadter: Option<Vec<Profile>>,
    pub maximin: MaximinVector,
    pub individually_rational: Vec<Profile>,
    pub rationalizable: Vec<Profile>,
    pub trace: EliminationTrace,
    /// `None` when the game is not symmetric.
    pub regions: Option<Regions>,
}

impl AnalysisReport {
    pub fn build(game: &Game, name: impl Into<String>) -> Self {
        let symmetric = game.is_symmetric();
        let trace = iterate_elimination(game);
        AnalysisReport {
            name: name.into(),
            symmetric,
            nash: pure_nash(game),
            hofstadter: symmetric.then(|| hofstadter_unchecked(game)),
            maximin: maximin_values(game),
            individually_rational: individually_rational_profiles(game),
            rationalizable: trace.final_survivors().profiles().collect(),
            regions: if symmetric {
                classify_regions(game).ok()
            } else {
                None
            },
            trace,
            game: game.clone(),
        }
    }

    /// `NHIM` membership markers for one profile, `.` where absent.
    pub fn markers(&self, p: &Profile) -> String {
        let flag = |on: bool, c: char| if on { c } else { '.' };
        [
            flag(self.nash.contains(p), 'N'),
            flag(self.hofstadter.as_ref().is_some_and(|h| h.contains(p)), 'H'),
            flag(self.individually_rational.contains(p), 'I'),
            flag(self.rationalizable.contains(p), 'M'),
        ]
        .iter()
        .collect()
    }

    fn profile_list(&self, ps: &[Profile]) -> String {
        if ps.is_empty() {
            return "(none)".into();
        }
        ps.iter()
            .map(|p| self.game.format_profile(p))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

pub fn render_report(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => render_text(report),
        Format::Csv => render_csv(report),
        Format::Json => render_json(report),
    }
}

const LEGEND: &str =
    "markers: N=Nash H=Hofstadter I=individually rational M=minimax-rationalizable";

fn render_text(r: &AnalysisReport) -> String {
    let g = &r.game;
    let mut out = String::new();
    let _ = writeln!(out, "game: {}", r.name);
    let _ = writeln!(out, "players: {}", g.n_players());
    let _ = writeln!(out, "symmetric: {}", if r.symmetric { "yes" } else { "no" });
    out.push('\n');
    out.push_str(&render_payoffs(g, |p| r.markers(p)));
    let _ = writeln!(out, "{LEGEND}");
    out.push('\n');

    let _ = writeln!(out, "nash equilibria: {}", r.profile_list(&r.nash));
    match &r.hofstadter {
        Some(h) => {
            let _ = writeln!(out, "hofstadter equilibria: {}", r.profile_list(h));
        }
        None => {
            let _ = writeln!(out, "hofstadter equilibria: n/a (asymmetric)");
        }
    }
    let _ = writeln!(out, "maximin: {}", r.maximin);
    let _ = writeln!(
        out,
        "individually rational: {}",
        r.profile_list(&r.individually_rational)
    );
    let _ = writeln!(
        out,
        "minimax-rationalizable: {}",
        r.profile_list(&r.rationalizable)
    );
    out.push('\n');

    out.push_str("elimination:\n");
    for line in trace_lines(g, &r.trace) {
        let _ = writeln!(out, "  {line}");
    }
    out.push_str("survivors:\n");
    out.push_str(&survivor_lines(g, r.trace.final_survivors()));
    out.push('\n');

    match &r.regions {
        Some(regions) => {
            let c = regions.counts;
            out.push_str("regions:\n");
            let _ = writeln!(out, "  hofstadter: {}", c.hofstadter);
            let _ = writeln!(
                out,
                "  rationalizable and individually rational, not hofstadter: {}",
                c.rationalizable_and_ir
            );
            let _ = writeln!(out, "  rationalizable only: {}", c.rationalizable_only);
            let _ = writeln!(out, "  individually rational only: {}", c.ir_only);
            let _ = writeln!(out, "  neither: {}", c.neither);
        }
        None => out.push_str("regions: n/a (asymmetric)\n"),
    }
    out
}

/// `round 1: player 0: C; player 1: C`, one line per round.
pub fn trace_lines(g: &Game, trace: &EliminationTrace) -> Vec<String> {
    if trace.rounds().is_empty() {
        return vec!["no strategies eliminated".into()];
    }
    trace
        .rounds()
        .iter()
        .enumerate()
        .map(|(k, batch)| {
            let parts: Vec<String> = (0..g.n_players())
                .filter_map(|i| {
                    let names: Vec<&str> = batch
                        .iter()
                        .filter(|d| d.player == i)
                        .map(|d| g.label(i, d.strategy))
                        .collect();
                    (!names.is_empty()).then(|| format!("player {i}: {}", names.join(" ")))
                })
                .collect();
            format!("round {}: {}", k + 1, parts.join("; "))
        })
        .collect()
}

pub fn survivor_lines(g: &Game, s: &SurvivingSets) -> String {
    let mut out = String::new();
    for i in 0..g.n_players() {
        let names: Vec<&str> = s.player(i).iter().map(|&k| g.label(i, k)).collect();
        let _ = writeln!(out, "  player {i}: {}", names.join(" "));
    }
    out
}

/// A bimatrix grid for two players, a profile list otherwise. `annotate`
/// supplies a suffix for each cell.
pub fn render_payoffs<F>(g: &Game, annotate: F) -> String
where
    F: Fn(&Profile) -> String,
{
    let cell_text = |p: &Profile| {
        let values: Vec<String> = g.payoff_vector(p).iter().map(|v| v.to_string()).collect();
        let note = annotate(p);
        if note.is_empty() {
            values.join(",")
        } else {
            format!("{} {}", values.join(","), note)
        }
    };

    let mut out = String::new();
    if g.n_players() == 2 {
        let rows = g.labels(0);
        let cols = g.labels(1);
        let body: Vec<Vec<String>> = (0..rows.len())
            .map(|r| {
                (0..cols.len())
                    .map(|c| cell_text(&Profile::new(vec![r, c])))
                    .collect()
            })
            .collect();
        let head_w = rows.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols.len())
            .map(|c| {
                body.iter()
                    .map(|row| row[c].len())
                    .chain([cols[c].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut line = format!("{:head_w$} |", "");
        for (c, w) in widths.iter().enumerate() {
            let _ = write!(line, " {:w$} |", cols[c]);
        }
        let _ = writeln!(out, "{line}");
        let rule: String = line
            .chars()
            .map(|ch| if ch == '|' { '+' } else { '-' })
            .collect();
        let _ = writeln!(out, "{rule}");
        for (r, row) in body.iter().enumerate() {
            let mut line = format!("{:head_w$} |", rows[r]);
            for (c, w) in widths.iter().enumerate() {
                let _ = write!(line, " {:w$} |", row[c]);
            }
            let _ = writeln!(out, "{line}");
        }
    } else {
        let shown: Vec<(String, String)> = g
            .profiles()
            .map(|p| (g.format_profile(&p), cell_text(&p)))
            .collect();
        let w = shown.iter().map(|(a, _)| a.len()).max().unwrap_or(0);
        for (name, cell) in shown {
            let _ = writeln!(out, "{name:w$}  {cell}");
        }
    }
    out
}

fn render_csv(r: &AnalysisReport) -> String {
    let g = &r.game;
    let mut out = String::new();
    let mut header: Vec<String> = (0..g.n_players()).map(|i| format!("i{i}")).collect();
    header.extend(
        ["labels", "nash", "hofstadter", "ir", "rationalizable"]
            .iter()
            .map(|s| s.to_string()),
    );
    out.push_str(&header.join(","));
    out.push('\n');
    for p in g.profiles() {
        let mut row: Vec<String> = p.iter().map(|s| s.to_string()).collect();
        let labels: Vec<&str> = p.iter().enumerate().map(|(i, &s)| g.label(i, s)).collect();
        row.push(format!("({})", labels.join(";")));
        row.push(r.nash.contains(&p).to_string());
        row.push(match &r.hofstadter {
            Some(h) => h.contains(&p).to_string(),
            None => "n/a".to_string(),
        });
        row.push(r.individually_rational.contains(&p).to_string());
        row.push(r.rationalizable.contains(&p).to_string());
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct JsonProfile<'a> {
    indices: &'a [usize],
    labels: Vec<&'a str>,
}

#[derive(Serialize)]
struct JsonDeletion<'a> {
    player: usize,
    strategy: usize,
    label: &'a str,
}

#[derive(Serialize)]
struct JsonRound<'a> {
    round: usize,
    deletions: Vec<JsonDeletion<'a>>,
}

#[derive(Serialize)]
struct JsonRegion<'a> {
    profile: JsonProfile<'a>,
    rationalizable: bool,
    individually_rational: bool,
    hofstadter: bool,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    name: &'a str,
    players: usize,
    strategies: &'a [Vec<String>],
    symmetric: bool,
    nash: Vec<JsonProfile<'a>>,
    hofstadter: Option<Vec<JsonProfile<'a>>>,
    maximin: &'a [i64],
    individually_rational: Vec<JsonProfile<'a>>,
    minimax_rationalizable: Vec<JsonProfile<'a>>,
    elimination: Vec<JsonRound<'a>>,
    survivors: &'a [Vec<usize>],
    regions: Option<Vec<JsonRegion<'a>>>,
    region_counts: Option<crate::verify::RegionCounts>,
}

fn json_profile<'a>(g: &'a Game, p: &'a Profile) -> JsonProfile<'a> {
    JsonProfile {
        indices: p.indices(),
        labels: p.iter().enumerate().map(|(i, &s)| g.label(i, s)).collect(),
    }
}

fn render_json<'a>(r: &'a AnalysisReport) -> String {
    let g = &r.game;
    let profile = |p| json_profile(g, p);
    let list = |ps: &'a [Profile]| ps.iter().map(profile).collect::<Vec<_>>();
    let doc = JsonReport {
        name: &r.name,
        players: g.n_players(),
        strategies: g.all_labels(),
        symmetric: r.symmetric,
        nash: list(&r.nash),
        hofstadter: r.hofstadter.as_deref().map(list),
        maximin: &r.maximin,
        individually_rational: list(&r.individually_rational),
        minimax_rationalizable: list(&r.rationalizable),
        elimination: r
            .trace
            .rounds()
            .iter()
            .enumerate()
            .map(|(k, batch)| JsonRound {
                round: k + 1,
                deletions: batch
                    .iter()
                    .map(|d| JsonDeletion {
                        player: d.player,
                        strategy: d.strategy,
                        label: g.label(d.player, d.strategy),
                    })
                    .collect(),
            })
            .collect(),
        survivors: r.trace.final_survivors().sets(),
        regions: r.regions.as_ref().map(|regions| {
            regions
                .tags
                .iter()
                .map(|(p, t)| JsonRegion {
                    profile: profile(p),
                    rationalizable: t.rationalizable,
                    individually_rational: t.individually_rational,
                    hofstadter: t.hofstadter,
                })
                .collect()
        }),
        region_counts: r.regions.as_ref().map(|regions| regions.counts),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("report serializes");
    text.push('\n');
    text
}

/// Text or JSON rendering of a sweep. The elapsed time is always the last
/// line (text) or the last key (JSON).
pub fn render_sweep(report: &SweepReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut value = serde_json::to_value(report).expect("sweep report serializes");
            if let serde_json::Value::Object(map) = &mut value {
                map.insert(
                    "elapsed_seconds".into(),
                    serde_json::json!(report.elapsed.as_secs_f64()),
                );
            }
            let mut text = serde_json::to_string_pretty(&value).expect("json value");
            text.push('\n');
            text
        }
        Format::Text | Format::Csv => {
            let mut out = String::new();
            let props: Vec<&str> = report.properties.iter().map(|p| p.name()).collect();
            let _ = writeln!(out, "seed: {}", report.rng_seed);
            let _ = writeln!(out, "players: {}", report.players);
            let _ = writeln!(
                out,
                "strategies: {}..{}",
                report.strategies.0, report.strategies.1
            );
            let _ = writeln!(
                out,
                "payoff range: {}..{}",
                report.payoffs.0, report.payoffs.1
            );
            let _ = writeln!(out, "properties: {}", props.join(" "));
            let _ = writeln!(out, "games checked: {}", report.games_checked);
            let _ = writeln!(out, "games skipped (size guard): {}", report.skipped);
            let _ = writeln!(out, "violations: {}", report.violations.len());
            let _ = writeln!(
                out,
                "witnesses rationalizable-not-hofstadter: {}",
                report.witness_counts.rationalizable_not_hofstadter
            );
            let _ = writeln!(
                out,
                "witnesses ir-not-hofstadter: {}",
                report.witness_counts.ir_not_hofstadter
            );
            for v in &report.violations {
                let _ = writeln!(
                    out,
                    "\nviolation: {} in game {}: {}",
                    v.property, v.game_index, v.detail
                );
                out.push_str(&v.document);
            }
            let _ = writeln!(out, "elapsed: {:.3}s", report.elapsed.as_secs_f64());
            out
        }
    }
}
