use std::process::ExitCode;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use bipramsey::analysis::ComponentSummary;
use bipramsey::error::SearchError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Ok,
    NotFound,
    Error,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(match self {
            Status::Ok => 0,
            Status::NotFound => 1,
            Status::Error => 2,
            Status::BudgetExceeded => 3,
        })
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::NotFound => "NOT_FOUND",
            Status::Error => "ERROR",
            Status::BudgetExceeded => "BUDGET_EXCEEDED",
        }
    }
}

/// The outcome of one command: machine-readable fields plus the lines shown
/// in text mode.
#[derive(Debug, Serialize)]
pub struct CommandReport {
    pub command: &'static str,
    pub parameters: Value,
    pub status: Status,
    pub payload: Value,
    pub wall_time_ms: f64,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl CommandReport {
    pub fn new(command: &'static str, parameters: Value) -> Self {
        CommandReport { command, parameters, status: Status::Ok, payload: Value::Null, wall_time_ms: 0.0, lines: Vec::new() }
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn fail(mut self, err: &CliError) -> Self {
        self.status = err.status;
        self.payload = serde_json::json!({ "error": err.message });
        self.lines = vec![format!("error: {}", err.message)];
        self
    }

    pub fn finish(&mut self, elapsed: Duration) {
        self.wall_time_ms = elapsed.as_secs_f64() * 1000.0;
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!("status: {}\n", self.status.label()));
        out.push_str(&format!("wall time: {:.3} ms\n", self.wall_time_ms));
        out
    }

    pub fn render_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
        out.push('\n');
        out
    }
}

#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    pub fn error(message: impl Into<String>) -> Self {
        CliError { status: Status::Error, message: message.into() }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        let status = match e {
            SearchError::BudgetExceeded { .. } => Status::BudgetExceeded,
            _ => Status::Error,
        };
        CliError { status, message: e.to_string() }
    }
}

pub fn vertex_list(prefix: char, vs: &[usize]) -> String {
    vs.iter().map(|v| format!("{prefix}{}", v + 1)).collect::<Vec<_>>().join(" ")
}

/// `color 2: A1 A3 | B2 (2 edges)`, with 1-based vertex names.
pub fn describe_component(comp: &ComponentSummary) -> String {
    format!(
        "color {}: {} | {} ({} edges)",
        comp.color,
        vertex_list('A', &comp.x_vertices),
        vertex_list('B', &comp.y_vertices),
        comp.edge_count
    )
}
