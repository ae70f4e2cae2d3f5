//! Text serialization of games and rendering of reports.

mod gnf;
mod report;

pub use gnf::{parse_game, serialize_game, GameDocument, ParseError, FORMAT_VERSION};
pub use report::{
    render_payoffs, render_report, render_sweep, survivor_lines, trace_lines, AnalysisReport,
    Format, UnknownFormat,
};
