//! Scenario-driven batch runner: parse a scenario JSON, validate it, execute
//! the tasks (optionally in parallel), and emit a machine-readable report.
//! Exit codes: 0 success, 1 input error or failed expectation, 2 resource
//! limit exceeded (a partial report is still written).

mod report;
mod scenario;
mod tasks;

use clap::{Parser, Subcommand};
use report::{Report, TaskReport};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "limcm", version, about = "exact characteristic-p commutative algebra scenario runner")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario and write the report.
    Run {
        scenario: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
        /// Worker threads (default 1; LIMCM_JOBS overrides the default).
        #[arg(long)]
        jobs: Option<usize>,
        /// S-pair budget per Groebner run (LIMCM_BUDGET overrides the default).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Parse and validate a scenario without running it.
    Validate { scenario: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Run { scenario, out, format, jobs, budget } => {
            run(&scenario, out.as_deref(), &format, jobs, budget)
        }
        Command::Validate { scenario } => validate(&scenario),
    };
    std::process::exit(code);
}

fn load(path: &std::path::Path) -> Result<scenario::Scenario, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("invalid scenario JSON: {e}"))
}

fn validate(path: &std::path::Path) -> i32 {
    match load(path).and_then(|s| {
        let budget = env_budget(None);
        scenario::compile(s, budget).map_err(|e| e.to_string())
    }) {
        Ok(c) => {
            eprintln!(
                "ok: ring with {} variables, {} definitions, {} tasks",
                c.ring.nvars(),
                c.ideals.len() + c.modules.len(),
                c.scenario.tasks.len()
            );
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn env_budget(cli: Option<u64>) -> Option<u64> {
    cli.or_else(|| {
        std::env::var("LIMCM_BUDGET").ok().and_then(|s| s.parse().ok())
    })
}

fn env_jobs(cli: Option<usize>) -> usize {
    cli.or_else(|| std::env::var("LIMCM_JOBS").ok().and_then(|s| s.parse().ok()))
        .unwrap_or(1)
        .max(1)
}

fn run(
    path: &std::path::Path,
    out: Option<&std::path::Path>,
    format: &str,
    jobs: Option<usize>,
    budget: Option<u64>,
) -> i32 {
    let scenario = match load(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let budget = env_budget(budget);
    let compiled = match scenario::compile(scenario, budget) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let normalized = match scenario::normalize(&compiled) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };

    let jobs = env_jobs(jobs);
    let task_list = &compiled.scenario.tasks;
    let mut results: Vec<Option<TaskReport>> = Vec::new();
    results.resize_with(task_list.len(), || None);

    if jobs <= 1 || task_list.len() <= 1 {
        for (i, t) in task_list.iter().enumerate() {
            results[i] = Some(tasks::run_task(&compiled, t));
        }
    } else {
        // a shared counter hands out tasks; results land at their own index,
        // so the assembled report is independent of scheduling
        let next = std::sync::atomic::AtomicUsize::new(0);
        let slots: Vec<std::sync::Mutex<Option<TaskReport>>> =
            (0..task_list.len()).map(|_| std::sync::Mutex::new(None)).collect();
        std::thread::scope(|scope| {
            for _ in 0..jobs.min(task_list.len()) {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if i >= task_list.len() {
                        break;
                    }
                    let r = tasks::run_task(&compiled, &task_list[i]);
                    *slots[i].lock().unwrap() = Some(r);
                });
            }
        });
        for (i, slot) in slots.into_iter().enumerate() {
            results[i] = slot.into_inner().unwrap();
        }
    }

    let task_reports: Vec<TaskReport> = results.into_iter().flatten().collect();
    let resource_limited = task_reports.iter().any(|t| {
        t.error.as_deref().map(|e| e.contains("resource limit")).unwrap_or(false)
    });
    let failed = task_reports
        .iter()
        .any(|t| t.status == "fail" || (t.status == "error" && !resource_limited));

    let report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        scenario: normalized,
        tasks: task_reports,
    };

    let rendered = match format {
        "json" => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        "csv" => report::to_csv(&report),
        other => {
            eprintln!("error: unknown format `{other}` (expected json or csv)");
            return 1;
        }
    };
    match out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, rendered) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return 1;
            }
        }
        None => print!("{rendered}"),
    }

    for t in &report.tasks {
        eprintln!("{}: {}", t.id, t.status);
    }
    if resource_limited {
        2
    } else if failed {
        1
    } else {
        0
    }
}
