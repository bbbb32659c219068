//! The `weaklat` command line: instance files, reports, sweeps and search.

pub mod catalog;
pub mod document;
pub mod dot;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use weaklat_core::props::Analysis;
use weaklat_core::verify::{
    canonical_hash, default_rules, enumerate_semilattices, enumerate_topologies, search, sweep,
    ImplicationRule, NonImplication, SearchOutcome, SweepConfig,
};
use weaklat_core::{Property, TopologyKind};

use document::{parse_with, InstanceDocument, OpensMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "weaklat",
    version,
    about = "Weak topologies on finite topologized semilattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide every property of an instance.
    Check {
        file: PathBuf,
        /// Print the machine-readable report only.
        #[arg(long)]
        json: bool,
    },
    /// Print derived topologies of an instance.
    Derive {
        file: PathBuf,
        /// A topology kind, `all`, or `generated`.
        #[arg(long, default_value = "all")]
        topology: String,
        /// Read `opens` as a subbase and generate the topology.
        #[arg(long)]
        subbase: bool,
    },
    /// List labeled topologies or semilattices on n points.
    Enumerate {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check every rule over all small instances.
    Sweep {
        #[arg(long)]
        n_max: usize,
        /// Rules as a JSON array or one `id: hyps => conclusion` per line.
        #[arg(long)]
        rules: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long)]
        max_instances: Option<usize>,
    },
    /// Look for the smallest instance with all of `satisfy` and not `violate`.
    Search {
        #[arg(long, value_delimiter = ',', required = true)]
        satisfy: Vec<String>,
        #[arg(long)]
        violate: String,
        #[arg(long)]
        n_max: usize,
        /// Append a found witness to this file.
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Graphviz drawing of an instance.
    Export {
        #[arg(long)]
        dot: PathBuf,
        /// `order`, or a topology kind; defaults to `order` for semilattices.
        #[arg(long)]
        view: Option<String>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum What {
    Topologies,
    Semilattices,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.to_string(),
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one command line and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Check { file, json } => check(&file, json, out),
        Command::Derive {
            file,
            topology,
            subbase,
        } => derive(&file, &topology, subbase, out),
        Command::Enumerate {
            what,
            n,
            count_only,
        } => enumerate(what, n, count_only, out),
        Command::Sweep {
            n_max,
            rules,
            threads,
            max_instances,
        } => run_sweep(n_max, rules.as_deref(), threads, max_instances, out),
        Command::Search {
            satisfy,
            violate,
            n_max,
            catalog,
            threads,
        } => run_search(&satisfy, &violate, n_max, catalog.as_deref(), threads, out),
        Command::Export { dot, view } => export(&dot, view.as_deref(), out),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("write failed: {e}")))
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path, mode: OpensMode) -> Result<InstanceDocument, Failure> {
    parse_with(&read(path)?, mode).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn check(file: &Path, json: bool, out: &mut dyn Write) -> Outcome {
    let doc = load(file, OpensMode::Topology)?;
    let analysis = Analysis::new(&doc.instance).map_err(invalid)?;
    let hash = canonical_hash(&doc.instance).map_err(invalid)?;
    let report = report::CheckReport::new(&doc, &analysis, hash);
    emit(
        out,
        &if json {
            report.to_json()
        } else {
            report.to_table()
        },
    )?;
    Ok(EXIT_OK)
}

fn derive(file: &Path, topology: &str, subbase: bool, out: &mut dyn Write) -> Outcome {
    let mode = if subbase {
        OpensMode::Subbase
    } else {
        OpensMode::Topology
    };
    let doc = load(file, mode)?;
    if topology.eq_ignore_ascii_case("generated") {
        emit(out, &doc.to_text())?;
        return Ok(EXIT_OK);
    }
    let kinds: Vec<TopologyKind> = if topology.eq_ignore_ascii_case("all") {
        TopologyKind::ALL.to_vec()
    } else {
        vec![TopologyKind::parse(topology)
            .ok_or_else(|| usage(format!("unknown topology `{topology}`")))?]
    };
    let bundle = weaklat_core::TopologyBundle::derive(&doc.instance).map_err(invalid)?;
    let mut text = String::new();
    for k in kinds {
        match bundle.get(k) {
            Some(t) => {
                let opens = report::opens_by_name(t, &doc.elements);
                text.push_str(&format!(
                    "{}: {}\n",
                    k.name(),
                    serde_json::to_string(&opens).expect("names serialize")
                ));
            }
            None => text.push_str(&format!(
                "{}: undefined (operation is not a semilattice)\n",
                k.name()
            )),
        }
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn enumerate(what: What, n: usize, count_only: bool, out: &mut dyn Write) -> Outcome {
    let lines: Vec<String> = match what {
        What::Topologies => enumerate_topologies(n)
            .map_err(usage)?
            .iter()
            .map(|t| {
                let opens: Vec<Vec<usize>> = t.opens().iter().map(|u| u.iter().collect()).collect();
                serde_json::to_string(&opens).expect("opens serialize")
            })
            .collect(),
        What::Semilattices => enumerate_semilattices(n)
            .map_err(usage)?
            .iter()
            .map(|s| serde_json::to_string(&s.rows()).expect("tables serialize"))
            .collect(),
    };
    if count_only {
        emit(out, &format!("{}\n", lines.len()))?;
    } else {
        let mut text = lines.join("\n");
        text.push('\n');
        emit(out, &text)?;
    }
    Ok(EXIT_OK)
}

/// Reads rules either as a JSON array or in the one-rule-per-line form.
pub fn parse_rules(text: &str) -> Result<Vec<ImplicationRule>, String> {
    if text.trim_start().starts_with('[') {
        return serde_json::from_str(text).map_err(|e| e.to_string());
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| ImplicationRule::parse_line(l).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

fn with_threads<T: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> T + Send,
) -> Result<T, Failure> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(usage("--threads must be at least 1")),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .map_err(|e| usage(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn run_sweep(
    n_max: usize,
    rules: Option<&Path>,
    threads: Option<usize>,
    max_instances: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let rules = match rules {
        Some(path) => {
            parse_rules(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))?
        }
        None => default_rules(),
    };
    let mut config = SweepConfig::new(n_max);
    config.max_instances = max_instances;
    let report = with_threads(threads, || sweep(&config, &rules))?.map_err(usage)?;
    emit(out, &report::sweep_text(&report))?;
    Ok(if report.violation_count() > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn run_search(
    satisfy: &[String],
    violate: &str,
    n_max: usize,
    catalog: Option<&Path>,
    threads: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let satisfy = satisfy
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|s| Property::parse(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let query = NonImplication {
        satisfy,
        violate: Property::parse(violate).map_err(usage)?,
    };
    let outcome = with_threads(threads, || search(&query, n_max))?.map_err(usage)?;
    let mut text = report::search_text(&query.id(), &outcome);
    if let (SearchOutcome::Found { record, .. }, Some(path)) = (&outcome, catalog) {
        let stored = catalog::append(path, record).map_err(usage)?;
        text.push_str(&format!(
            "appended to {} at {}\n",
            path.display(),
            stored.discovered_at.unwrap_or_default()
        ));
    }
    emit(out, &text)?;
    Ok(EXIT_OK)
}

fn export(file: &Path, view: Option<&str>, out: &mut dyn Write) -> Outcome {
    let doc = load(file, OpensMode::Topology)?;
    let view = view.unwrap_or(if doc.instance.is_semilattice() {
        "order"
    } else {
        "tau"
    });
    let text = if view.eq_ignore_ascii_case("order") {
        let poset = doc
            .instance
            .natural_order()
            .map_err(|e| invalid(format!("no natural order: {e}")))?;
        dot::poset_dot(&poset, &doc.elements)
    } else {
        let kind =
            TopologyKind::parse(view).ok_or_else(|| usage(format!("unknown view `{view}`")))?;
        let bundle = weaklat_core::TopologyBundle::derive(&doc.instance).map_err(invalid)?;
        let top = bundle.get(kind).ok_or_else(|| {
            invalid(format!(
                "{kind} is undefined: operation is not a semilattice"
            ))
        })?;
        dot::topology_dot(top, &doc.elements)
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}
