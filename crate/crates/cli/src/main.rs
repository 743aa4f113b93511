use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serredual_cli::{run, select_tasks, Settings, Workspace};

#[derive(Parser)]
#[command(
    name = "serredual",
    version,
    about = "Exact Serre duality computations for path algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the tasks of a workspace file.
    Run {
        workspace: PathBuf,
        /// Run only tasks of this kind (a default record is used if the file has none).
        #[arg(long)]
        task: Option<String>,
        /// Resolution length cap.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        /// Random trials, overriding task records.
        #[arg(long)]
        trials: Option<usize>,
        /// Random seed, overriding task records.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the structured report here.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let Command::Run {
        workspace,
        task,
        cap,
        trials,
        seed,
        json,
    } = Cli::parse().command;
    let ws = match Workspace::load(&workspace) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let mut tasks = match select_tasks(&ws, task.as_deref()) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    // explicit flags take precedence over values in task records
    for t in &mut tasks {
        use serredual_cli::tasks::Task;
        match &mut t.task {
            Task::Identities {
                trials: tr,
                seed: sd,
            }
            | Task::TriangleFunctor {
                trials: tr,
                seed: sd,
                ..
            } => {
                if trials.is_some() {
                    *tr = trials;
                }
                if seed.is_some() {
                    *sd = seed;
                }
            }
            _ => {}
        }
    }
    let settings = Settings {
        cap,
        trials: trials.unwrap_or(100),
        seed: seed.unwrap_or(0),
    };
    let report = run(&ws, &tasks, settings);
    print!("{}", report.to_text());
    if let Some(path) = json {
        let body =
            serde_json::to_string_pretty(&report.to_json()).expect("reports serialize") + "\n";
        if let Err(e) = std::fs::write(&path, body) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
