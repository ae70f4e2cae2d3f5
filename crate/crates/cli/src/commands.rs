use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};
use gnf_core::io::{
    parse_game, render_payoffs, render_report, render_sweep, serialize_game, survivor_lines,
    trace_lines,
};
use gnf_core::solvers::iterate_elimination;
use gnf_core::verify::{
    check_ir_survives_round1, check_order_independence, check_theorem1, check_theorem2,
    random_game, random_symmetric_game,
};
use gnf_core::{AnalysisReport, Format, GameDocument, Property, SweepConfig, SweepReport, Verdict};

use crate::args::Command;
use crate::ExitStatus;

pub(crate) fn execute(
    command: Command,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<ExitStatus> {
    match command {
        Command::Analyze { path, format } => {
            let doc = load(&path, stdin)?;
            let name = doc.name.clone().unwrap_or_else(|| default_name(&path));
            let report = AnalysisReport::build(&doc.game, name);
            out.write_all(render_report(&report, format).as_bytes())?;
            Ok(ExitStatus::Success)
        }
        Command::Eliminate { path, trace } => {
            let doc = load(&path, stdin)?;
            eliminate(&doc, trace, out)?;
            Ok(ExitStatus::Success)
        }
        Command::Check { path, orders, seed } => {
            let doc = load(&path, stdin)?;
            let g = &doc.game;
            let theorem = |p: Property, v: gnf_core::error::Result<Verdict>| match v {
                Ok(v) => CheckLine::Verdict(v),
                Err(_) => CheckLine::Skipped(p),
            };
            let lines = [
                theorem(Property::Theorem1, check_theorem1(g)),
                theorem(Property::Theorem2, check_theorem2(g)),
                CheckLine::Verdict(check_order_independence(g, orders, seed)),
                CheckLine::Verdict(check_ir_survives_round1(g)),
            ];
            Ok(write_verdicts(out, &lines)?)
        }
        Command::Search {
            players,
            strategies,
            games,
            seed,
            payoff_range,
            properties,
            orders,
            workers,
            format,
        } => {
            if workers == Some(0) {
                bail!("--workers must be at least 1");
            }
            if format == Format::Csv {
                bail!("search reports are rendered as text or json");
            }
            let config = SweepConfig {
                players,
                strategies: strategies.0..=strategies.1,
                payoffs: payoff_range.0..=payoff_range.1,
                games,
                seed,
                properties,
                orders,
                workers,
                ..SweepConfig::default()
            };
            let report = gnf_core::verify::sweep(&config)?;
            Ok(write_sweep(out, &report, format)?)
        }
        Command::Gen {
            players,
            strategies,
            seed,
            symmetric,
            payoff_range: (lo, hi),
        } => {
            let game = if symmetric {
                random_symmetric_game(players, strategies, lo, hi, seed)?
            } else {
                random_game(&vec![strategies; players], lo, hi, seed)?
            };
            out.write_all(serialize_game(&GameDocument::new(game)).as_bytes())?;
            Ok(ExitStatus::Success)
        }
    }
}

fn load(path: &Path, stdin: &mut dyn BufRead) -> Result<GameDocument> {
    let text = if path == Path::new("-") {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .context("reading standard input")?;
        text
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_game(&text).with_context(|| format!("parsing {}", path.display()))
}

fn default_name(path: &Path) -> String {
    if path == Path::new("-") {
        return "stdin".into();
    }
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default()
}

fn eliminate(doc: &GameDocument, show_games: bool, out: &mut dyn Write) -> io::Result<()> {
    let g = &doc.game;
    let trace = iterate_elimination(g);
    let plain = |_: &gnf_core::Profile| String::new();
    if show_games {
        writeln!(out, "initial game:")?;
        out.write_all(render_payoffs(g, plain).as_bytes())?;
        writeln!(out)?;
    }
    for (k, line) in trace_lines(g, &trace).into_iter().enumerate() {
        writeln!(out, "{line}")?;
        if show_games && !trace.rounds().is_empty() {
            let survivors = trace.survivors_after(g, k + 1);
            let r = g
                .restrict(&survivors)
                .expect("survivor sets are never empty");
            out.write_all(render_payoffs(r.game(), plain).as_bytes())?;
            writeln!(out)?;
        }
    }
    writeln!(out, "survivors:")?;
    out.write_all(survivor_lines(g, trace.final_survivors()).as_bytes())
}

/// One line of `check` output.
#[derive(Debug, Clone)]
pub enum CheckLine {
    Verdict(Verdict),
    /// A theorem check on an asymmetric game.
    Skipped(Property),
}

/// Prints verdicts, notes and counterexample blocks. Any failure yields
/// [`ExitStatus::Violation`].
pub fn write_verdicts(out: &mut dyn Write, lines: &[CheckLine]) -> io::Result<ExitStatus> {
    let mut status = ExitStatus::Success;
    for line in lines {
        match line {
            CheckLine::Skipped(p) => writeln!(out, "{p}: SKIPPED (asymmetric game)")?,
            CheckLine::Verdict(v) => {
                let word = if v.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{}: {word}", v.property)?;
                for note in &v.notes {
                    writeln!(out, "note: {note}")?;
                }
                if let Some(cx) = &v.counterexample {
                    status = ExitStatus::Violation;
                    writeln!(out, "counterexample: {}", cx.describe())?;
                    out.write_all(cx.document().as_bytes())?;
                } else if !v.passed() {
                    status = ExitStatus::Violation;
                }
            }
        }
    }
    Ok(status)
}

/// Renders a sweep report. Any violation yields [`ExitStatus::Violation`].
pub fn write_sweep(
    out: &mut dyn Write,
    report: &SweepReport,
    format: Format,
) -> io::Result<ExitStatus> {
    out.write_all(render_sweep(report, format).as_bytes())?;
    Ok(if report.passed() {
        ExitStatus::Success
    } else {
        ExitStatus::Violation
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gnf_core::fixtures;
    use gnf_core::verify::{Counterexample, Offense, Outcome, Violation};

    fn run(args: &[&str], input: &str) -> (ExitStatus, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["gnf"];
        argv.extend_from_slice(args);
        let status = crate::run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn pd_text() -> String {
        serialize_game(&GameDocument::new(fixtures::prisoners_dilemma()))
    }

    #[test]
    fn injected_failure_exits_with_violation() {
        let game = fixtures::prisoners_dilemma();
        let stub = Verdict {
            property: Property::Theorem1,
            outcome: Outcome::Fail,
            counterexample: Some(Counterexample {
                game: game.clone(),
                offense: Offense::Profile(vec![1, 1].into()),
            }),
            notes: Vec::new(),
        };
        let mut out = Vec::new();
        let lines = [
            CheckLine::Verdict(check_theorem2(&game).unwrap()),
            CheckLine::Verdict(stub),
        ];
        assert_eq!(
            write_verdicts(&mut out, &lines).unwrap(),
            ExitStatus::Violation
        );
        let text = String::from_utf8(out).unwrap();
        assert!(text.starts_with("theorem-2: PASS\ntheorem-1: FAIL\n"));
        assert!(text.contains("counterexample: profile (Cooperate,Cooperate)\n"));
        let replay = &text[text.find("gnf 1").unwrap()..];
        assert_eq!(parse_game(replay).unwrap().game, game);
    }

    #[test]
    fn injected_sweep_violation_exits_with_violation() {
        let config = SweepConfig {
            games: 3,
            ..SweepConfig::default()
        };
        let mut report = gnf_core::verify::sweep(&config).unwrap();
        let mut out = Vec::new();
        assert_eq!(
            write_sweep(&mut out, &report, Format::Text).unwrap(),
            ExitStatus::Success
        );
        report.violations.push(Violation {
            game_index: 1,
            property: Property::Theorem2,
            detail: "profile (s0,s0)".into(),
            document: pd_text(),
        });
        let mut out = Vec::new();
        assert_eq!(
            write_sweep(&mut out, &report, Format::Json).unwrap(),
            ExitStatus::Violation
        );
    }

    #[test]
    fn skipped_theorems_do_not_fail() {
        let lines = [
            CheckLine::Skipped(Property::Theorem1),
            CheckLine::Skipped(Property::Theorem2),
        ];
        let mut out = Vec::new();
        assert_eq!(
            write_verdicts(&mut out, &lines).unwrap(),
            ExitStatus::Success
        );
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "theorem-1: SKIPPED (asymmetric game)\ntheorem-2: SKIPPED (asymmetric game)\n"
        );
    }

    #[test]
    fn analyze_from_stdin() {
        let (status, out, err) = run(&["analyze", "-"], &pd_text());
        assert_eq!(status, ExitStatus::Success, "{err}");
        assert!(out.starts_with("game: stdin\n"));
        assert!(out.contains("nash equilibria: (Defect,Defect)\n"));
    }

    #[test]
    fn errors_map_to_failure() {
        let (status, _, err) = run(&["analyze", "-"], "gnf 1\nplayers 2\n");
        assert_eq!(status, ExitStatus::Failure);
        assert!(err.starts_with("error: parsing -"));
        let (status, _, _) = run(&["analyze", "/nonexistent/game.gnf"], "");
        assert_eq!(status, ExitStatus::Failure);
        let (status, _, _) = run(&["frobnicate"], "");
        assert_eq!(status, ExitStatus::Failure);
        let (status, _, _) = run(&["search", "--strategies", "0", "--games", "1"], "");
        assert_eq!(status, ExitStatus::Failure);
        let (status, _, _) = run(&["search", "--workers", "0", "--games", "1"], "");
        assert_eq!(status, ExitStatus::Failure);
        let (status, _, _) = run(&["gen", "--players", "8", "--strategies", "10"], "");
        assert_eq!(status, ExitStatus::Failure);
        let (status, _, _) = run(&["analyze", "-", "--format", "xml"], &pd_text());
        assert_eq!(status, ExitStatus::Failure);
    }

    #[test]
    fn help_is_success() {
        let (status, out, _) = run(&["--help"], "");
        assert_eq!(status, ExitStatus::Success);
        assert!(out.contains("analyze"));
    }

    #[test]
    fn check_on_asymmetric_game() {
        let g = fixtures::matrix(&["x", "y"], &[[(1, 1), (0, 2)], [(1, 0), (3, 3)]]);
        let text = serialize_game(&GameDocument::new(g));
        let (status, out, _) = run(&["check", "-"], &text);
        assert_eq!(status, ExitStatus::Success);
        assert!(out.starts_with(
            "theorem-1: SKIPPED (asymmetric game)\ntheorem-2: SKIPPED (asymmetric game)\n"
        ));
    }

    #[test]
    fn eliminate_traces_the_3x3() {
        let text = serialize_game(&GameDocument::new(fixtures::three_by_three()));
        let (_, out, _) = run(&["eliminate", "-"], &text);
        assert_eq!(
            out,
            "round 1: player 0: C; player 1: C\nround 2: player 0: B; player 1: B\nsurvivors:\n  player 0: A\n  player 1: A\n"
        );
        let (_, traced, _) = run(&["eliminate", "-", "--trace"], &text);
        assert!(traced.starts_with("initial game:\n"));
        assert!(traced.contains("round 2: player 0: B; player 1: B\n"));
        assert!(traced.contains("9,9"));
    }

    #[test]
    fn gen_negative_range() {
        let (status, out, err) = run(
            &[
                "gen",
                "--players",
                "2",
                "--strategies",
                "2",
                "--payoff-range",
                "-5..-1",
            ],
            "",
        );
        assert_eq!(status, ExitStatus::Success, "{err}");
        let g = parse_game(&out).unwrap().game;
        for p in g.profiles() {
            assert!(g.payoff_vector(&p).iter().all(|v| (-5..=-1).contains(v)));
        }
    }
}
