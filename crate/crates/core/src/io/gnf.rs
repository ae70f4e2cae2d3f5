//! The `.gnf` text format, version 1.
//!
//! ```text
//! gnf 1
//! players 2
//! strategies 0 Defect Cooperate
//! strategies 1 Defect Cooperate
//! payoffs
//! 0 0 1 1
//! 0 1 3 0
//! 1 0 0 3
//! 1 1 2 2
//! end
//! ```
//!
//! Each payoff line holds the strategy indices of a cell followed by one
//! payoff per player. `#` starts a comment, blank lines are ignored, tokens
//! are separated by any whitespace. A full-line comment of the form
//! `# name: <text>` names the game.
//!
//! Canonical output uses LF line endings, single spaces, cells in profile
//! order and no trailing whitespace.

use thiserror::Error;

use crate::error::GameError;
use crate::game::{Game, Payoff, Profile};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameDocument {
    pub version: u32,
    pub name: Option<String>,
    pub comments: Vec<String>,
    pub game: Game,
}

impl GameDocument {
    pub fn new(game: Game) -> Self {
        GameDocument {
            version: FORMAT_VERSION,
            name: None,
            comments: Vec::new(),
            game,
        }
    }

    pub fn named(game: Game, name: impl Into<String>) -> Self {
        GameDocument {
            name: Some(name.into()),
            ..GameDocument::new(game)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected {expected}, found `{found}`")]
    Syntax {
        line: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}: unsupported format version `{version}`")]
    VersionUnsupported { line: usize, version: String },
    #[error(transparent)]
    Game(#[from] GameError),
}

enum Stage {
    Header,
    Players,
    Strategies(usize),
    Payoffs,
    Cells,
    Done,
}

pub fn parse_game(text: &str) -> Result<GameDocument, ParseError> {
    let mut stage = Stage::Header;
    let mut name = None;
    let mut comments = Vec::new();
    let mut n = 0usize;
    let mut labels: Vec<Vec<String>> = Vec::new();
    let mut cells: Vec<(Profile, Vec<Payoff>)> = Vec::new();
    let mut last_line = 0;

    for (k, raw) in text.split('\n').enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let (content, comment) = match raw.find('#') {
            Some(at) => (&raw[..at], Some(&raw[at + 1..])),
            None => (raw, None),
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            if let Some(c) = comment {
                let c = c.strip_prefix(' ').unwrap_or(c);
                match c.strip_prefix("name:") {
                    Some(rest) if name.is_none() => name = Some(rest.trim().to_string()),
                    _ => comments.push(c.trim_end().to_string()),
                }
            }
            continue;
        }
        let syntax = |expected: &str| ParseError::Syntax {
            line: line_no,
            expected: expected.to_string(),
            found: tokens.join(" "),
        };

        match stage {
            Stage::Header => {
                if tokens.len() != 2 || tokens[0] != "gnf" {
                    return Err(syntax("`gnf 1`"));
                }
                if tokens[1] != "1" {
                    return Err(ParseError::VersionUnsupported {
                        line: line_no,
                        version: tokens[1].to_string(),
                    });
                }
                stage = Stage::Players;
            }
            Stage::Players => {
                n = match tokens.as_slice() {
                    ["players", count] => count
                        .parse()
                        .ok()
                        .filter(|&c: &usize| c >= 1)
                        .ok_or_else(|| syntax("a positive player count"))?,
                    _ => return Err(syntax("`players <n>`")),
                };
                stage = Stage::Strategies(0);
            }
            Stage::Strategies(i) => {
                let expected = format!("`strategies {i} <label> ...`");
                if tokens.len() < 3 || tokens[0] != "strategies" || tokens[1] != i.to_string() {
                    return Err(syntax(&expected));
                }
                labels.push(tokens[2..].iter().map(|s| s.to_string()).collect());
                stage = if i + 1 == n {
                    Stage::Payoffs
                } else {
                    Stage::Strategies(i + 1)
                };
            }
            Stage::Payoffs => {
                if tokens != ["payoffs"] {
                    return Err(syntax("`payoffs`"));
                }
                stage = Stage::Cells;
            }
            Stage::Cells => {
                if tokens == ["end"] {
                    stage = Stage::Done;
                    continue;
                }
                let expected = format!("{n} strategy indices and {n} payoffs, or `end`");
                if tokens.len() != 2 * n {
                    return Err(syntax(&expected));
                }
                let profile = tokens[..n]
                    .iter()
                    .map(|t| t.parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| syntax(&expected))?;
                let payoffs = tokens[n..]
                    .iter()
                    .map(|t| t.parse::<Payoff>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| syntax(&expected))?;
                cells.push((Profile::new(profile), payoffs));
            }
            Stage::Done => return Err(syntax("end of document")),
        }
    }

    if !matches!(stage, Stage::Done) {
        let expected = match stage {
            Stage::Header => "`gnf 1`",
            Stage::Players => "`players <n>`",
            Stage::Strategies(_) => "`strategies ...`",
            Stage::Payoffs => "`payoffs`",
            _ => "`end`",
        };
        return Err(ParseError::Syntax {
            line: last_line,
            expected: expected.to_string(),
            found: "end of input".to_string(),
        });
    }

    Ok(GameDocument {
        version: FORMAT_VERSION,
        name,
        comments,
        game: Game::new(labels, cells)?,
    })
}

pub fn serialize_game(doc: &GameDocument) -> String {
    let g = &doc.game;
    let mut out = String::new();
    out.push_str("gnf 1\n");
    if let Some(name) = &doc.name {
        push_comment(&mut out, &format!("name: {}", name.trim()));
    }
    for c in &doc.comments {
        push_comment(&mut out, c);
    }
    out.push_str(&format!("players {}\n", g.n_players()));
    for i in 0..g.n_players() {
        out.push_str(&format!("strategies {i} {}\n", g.labels(i).join(" ")));
    }
    out.push_str("payoffs\n");
    for p in g.profiles() {
        let fields: Vec<String> = p
            .iter()
            .map(|s| s.to_string())
            .chain(g.payoff_vector(&p).iter().map(|v| v.to_string()))
            .collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

fn push_comment(out: &mut String, text: &str) {
    for line in text.lines() {
        let line = line.trim_end();
        if line.is_empty() {
            out.push_str("#\n");
        } else {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
}
