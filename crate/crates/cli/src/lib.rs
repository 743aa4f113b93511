//! Batch front-end: load a JSON workspace, run its tasks, and produce text and JSON reports.

pub mod tasks;
pub mod workspace;

use serde_json::{json, Value};

pub use tasks::{ResolvedTask, Settings, TaskReport, TASK_NAMES};
pub use workspace::Workspace;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("cannot read workspace: {0}")]
    Io(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
}

/// Conventions embedded in every report.
pub fn conventions() -> Value {
    json!({
        "path_composition": "right-to-left: b*a means a first, then b",
        "shift": "X[n]^i = X^(i+n), d_X[n] = (-1)^n d_X, f[n]^i = f^(i+n)",
        "cone": "cone(f)^i = X^(i+1) + Y^i, d = [[-d_X, 0], [f, d_Y]]",
        "serre_functor": "S(X)^i = nu(X^i), the Nakayama functor termwise",
        "pairing": "(f, g) = sum_i (-1)^i (f^i, g^i)",
    })
}

/// Resolves the tasks to run: those named `only` (or a default record for it), or all.
pub fn select_tasks(ws: &Workspace, only: Option<&str>) -> Result<Vec<ResolvedTask>, InputError> {
    let records: Vec<serde_json::Map<String, Value>> = match only {
        None => ws.tasks.clone(),
        Some(name) => {
            let matching: Vec<_> = ws
                .tasks
                .iter()
                .filter(|r| r.get("task").and_then(Value::as_str) == Some(name))
                .cloned()
                .collect();
            if matching.is_empty() {
                let mut m = serde_json::Map::new();
                m.insert("task".into(), json!(name));
                vec![m]
            } else {
                matching
            }
        }
    };
    records
        .iter()
        .map(|r| ResolvedTask::resolve(ws, r))
        .collect()
}

/// Full structured report for a run.
pub struct RunReport {
    pub settings: Settings,
    pub tasks: Vec<TaskReport>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.tasks.iter().all(|t| t.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "conventions": conventions(),
            "settings": { "cap": self.settings.cap, "trials": self.settings.trials, "seed": self.settings.seed },
            "passed": self.passed(),
            "tasks": self.tasks.iter().map(TaskReport::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for t in &self.tasks {
            let tag = if t.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} {}: {}\n", t.label, t.summary));
            for f in &t.failures {
                out.push_str(&format!("  - {f}\n"));
            }
        }
        let failed = self.tasks.iter().filter(|t| !t.passed).count();
        out.push_str(&format!("{} tasks, {failed} failed\n", self.tasks.len()));
        out
    }
}

pub fn run(ws: &Workspace, tasks: &[ResolvedTask], settings: Settings) -> RunReport {
    RunReport {
        settings,
        tasks: tasks
            .iter()
            .map(|t| tasks::run_task(ws, t, settings))
            .collect(),
    }
}
