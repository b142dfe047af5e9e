//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use closurelab_core::basesize::{exact_base_size, greedy_base, BaseRecord};
use closurelab_core::blocks::{all_block_systems, is_primitive, maximal_block_systems};
use closurelab_core::catalog::NAMES;
use closurelab_core::closure::{closure_spectrum, k_closure, k_trans};
use closurelab_core::{ActionInstance, Budget};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input::{apply_action, load_group, ActionSpec};
use crate::report::{base_csv, integer, spectrum_csv, Report};
use crate::suites::{run_suite, SuiteOptions, SUITES};

#[derive(Debug, Parser)]
#[command(name = "closurelab", version, about = "Wielandt closures and base sizes of permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Catalog group, e.g. A5, S6, D8, M11, 'PSL(3,2)'.
    #[arg(long, global = true, conflicts_with = "group_file")]
    pub catalog: Option<String>,
    /// Generator file: a `degree N` line, then one generator per line.
    #[arg(long, global = true)]
    pub group_file: Option<PathBuf>,
    /// natural, ksubsets:K, partitions:AxB, cosets:FILE or projective.
    #[arg(long, global = true, default_value = "natural")]
    pub action: ActionSpec,
    /// Print the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print a CSV table (base and spectrum only).
    #[arg(long, global = true, conflicts_with = "json")]
    pub csv: bool,
    #[arg(long, global = true, env = "CLOSURELAB_BUDGET_NODES")]
    pub budget_nodes: Option<u64>,
    #[arg(long, global = true)]
    pub budget_seconds: Option<f64>,
    /// Worker threads for the exact base search.
    #[arg(long, global = true, default_value_t = 1)]
    pub workers: usize,
    /// Run the long computations in verification suites.
    #[arg(long, global = true)]
    pub allow_long: bool,
    /// Report elapsed times. Output is then no longer reproducible.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of the group as it acts.
    Order,
    Orbits,
    /// Nontrivial block systems of a transitive action.
    Blocks,
    Primitive,
    /// The k-closure.
    Closure {
        #[arg(long)]
        k: usize,
    },
    /// Closures for k = 1, 2, … until the group is reached.
    Spectrum {
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Minimal base (default) or a greedy one.
    Base {
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
    },
    /// Largest minimal closure number over faithful transitive actions.
    Ktrans {
        #[arg(long)]
        max_degree: usize,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// List catalog names and suites.
    Catalog {
        #[arg(long)]
        list: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Order => "order",
            Command::Orbits => "orbits",
            Command::Blocks => "blocks",
            Command::Primitive => "primitive",
            Command::Closure { .. } => "closure",
            Command::Spectrum { .. } => "spectrum",
            Command::Base { .. } => "base",
            Command::Ktrans { .. } => "ktrans",
            Command::Verify { .. } => "verify",
            Command::Catalog { .. } => "catalog",
        }
    }
}

struct Outcome {
    text: String,
    result: Value,
    csv: Option<String>,
    nodes: u64,
    /// Exit code when the command itself succeeded.
    code: i32,
}

impl Outcome {
    fn new(text: String, result: Value) -> Self {
        Outcome { text, result, csv: None, nodes: 0, code: 0 }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable result")
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let started = Instant::now();
    match execute(&cli) {
        Ok((outcome, base, action)) => {
            let written = if cli.opts.json {
                let mut report = Report::new(cli.command.name(), base.as_ref(), action.as_ref(), outcome.result);
                report.budget.nodes_used = outcome.nodes;
                report.budget.elapsed_ms = cli.opts.timings.then(|| started.elapsed().as_millis() as u64);
                writeln!(out, "{}", report.to_json())
            } else if let (true, Some(table)) = (cli.opts.csv, &outcome.csv) {
                write!(out, "{table}")
            } else {
                write!(out, "{}", outcome.text)
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn budget(opts: &Options) -> Budget {
    Budget {
        max_nodes: opts.budget_nodes,
        max_duration: opts.budget_seconds.map(Duration::from_secs_f64),
    }
}

type Executed = (Outcome, Option<ActionInstance>, Option<ActionInstance>);

fn execute(cli: &Cli) -> Result<Executed, CliError> {
    let opts = &cli.opts;
    let budget = budget(opts);
    match &cli.command {
        Command::Verify { suite } => {
            let sopts = SuiteOptions { allow_long: opts.allow_long, timings: opts.timings, budget };
            let r = run_suite(suite, &sopts)?;
            let mut text = String::new();
            for c in &r.claims {
                let verdict = if c.pass { "PASS" } else { "FAIL" };
                text.push_str(&format!(
                    "{verdict} {}: computed {}; expected {} [{}]\n",
                    c.id, c.computed, c.expected, c.citation
                ));
            }
            text.push_str(&format!("suite {}: {}\n", r.suite, if r.pass { "pass" } else { "FAIL" }));
            let mut o = Outcome::new(text, to_value(&r));
            o.code = if r.pass { 0 } else { 2 };
            return Ok((o, None, None));
        }
        Command::Catalog { .. } => {
            let mut text = String::from("groups:\n");
            for n in NAMES {
                text.push_str(&format!("  {n}\n"));
            }
            text.push_str("  PSL(n,q)\nsuites:\n");
            for s in SUITES {
                text.push_str(&format!("  {s}\n"));
            }
            let result = json!({ "groups": NAMES.iter().copied().chain(["PSL(n,q)"]).collect::<Vec<_>>(), "suites": SUITES });
            return Ok((Outcome::new(text, result), None, None));
        }
        _ => {}
    }
    let base = load_group(opts.catalog.as_deref(), opts.group_file.as_deref())?;
    let action = apply_action(&base, &opts.action)?;
    let outcome = match &cli.command {
        Command::Order => {
            let text = format!(
                "{}\norder {}\nkernel order {}\n",
                action.describe(),
                action.order(),
                action.kernel_order()
            );
            let result = json!({
                "order": integer(&action.order()),
                "kernel_order": integer(&action.kernel_order()),
                "faithful": action.is_faithful(),
            });
            Outcome::new(text, result)
        }
        Command::Orbits => {
            let orbits: Vec<Vec<String>> = action
                .orbits()
                .iter()
                .map(|o| o.iter().map(|&p| action.domain.label(p).to_string()).collect())
                .collect();
            let text: String = orbits.iter().map(|o| format!("{}\n", o.join(" "))).collect();
            Outcome::new(text, json!({ "orbits": orbits }))
        }
        Command::Blocks => {
            let maximal = maximal_block_systems(&action)?;
            let systems: Vec<Value> = all_block_systems(&action)?
                .into_iter()
                .filter(|s| !s.is_singletons() && !s.is_universal())
                .map(|s| {
                    json!({
                        "blocks": s.num_blocks(),
                        "block_size": s.block_size(),
                        "maximal": maximal.contains(&s),
                        "partition": s.to_text(),
                    })
                })
                .collect();
            let text = if systems.is_empty() {
                "no nontrivial block systems\n".to_string()
            } else {
                systems
                    .iter()
                    .map(|s| {
                        let tag = if s["maximal"] == true { " (maximal)" } else { "" };
                        format!("{}{tag}\n", s["partition"].as_str().unwrap_or_default())
                    })
                    .collect()
            };
            Outcome::new(text, json!({ "systems": systems }))
        }
        Command::Primitive => {
            let transitive = action.is_transitive();
            let primitive = transitive && is_primitive(&action);
            let text = format!("{}\n", if primitive { "primitive" } else if transitive { "imprimitive" } else { "intransitive" });
            Outcome::new(text, json!({ "transitive": transitive, "primitive": primitive }))
        }
        Command::Closure { k } => {
            let c = k_closure(&action, *k, &budget)?;
            let order = c.group.order();
            let equals = order == action.order();
            let gens: Vec<String> = c.found.iter().map(|g| g.to_cycle_string()).collect();
            let mut text = format!("{}\nG^({k}) has order {order}\n", action.describe());
            text.push_str(if equals { "equal to G\n" } else { "strictly larger than G\n" });
            for g in &gens {
                text.push_str(&format!("  {g}\n"));
            }
            let result = json!({
                "k": k,
                "order": integer(&order),
                "equals_group": equals,
                "method": to_value(&c.method),
                "generators": gens,
            });
            let mut o = Outcome::new(text, result);
            o.nodes = c.nodes;
            o
        }
        Command::Spectrum { k_max } => {
            let r = closure_spectrum(&action, *k_max, &budget)?;
            let mut text = format!("{}\n", action.describe());
            for e in &r.entries {
                text.push_str(&format!("k={} order {}\n", e.k, e.order));
            }
            match r.minimal_k {
                Some(k) => text.push_str(&format!("minimal k = {k}\n")),
                None => text.push_str("G not reached\n"),
            }
            if let Some(why) = &r.incomplete {
                text.push_str(&format!("incomplete: {why}\n"));
            }
            let mut o = Outcome::new(text, to_value(&r));
            o.nodes = r.entries.iter().map(|e| e.nodes).sum();
            o.csv = Some(spectrum_csv(&action, &r));
            if r.incomplete.is_some() {
                o.code = 3;
            }
            o
        }
        Command::Base { greedy, .. } => {
            let rec: BaseRecord = if *greedy { greedy_base(&action)? } else { exact_base_size(&action, &budget, opts.workers)? };
            let labels: Vec<&str> = rec.witness.iter().map(|&p| action.domain.label(p)).collect();
            let text = format!(
                "{}\nbase size {}{}\nwitness {}\n",
                action.describe(),
                rec.size,
                if rec.exhaustive { " (minimal)" } else { " (upper bound)" },
                labels.join(" ")
            );
            let mut result = to_value(&rec);
            result["witness_labels"] = json!(labels);
            let mut o = Outcome::new(text, result);
            o.nodes = rec.nodes;
            o.csv = Some(base_csv(&[(&action, &rec)]));
            o
        }
        Command::Ktrans { max_degree } => {
            if !action.is_faithful() {
                return Err(closurelab_core::Error::NotFaithful.into());
            }
            let t = k_trans(&action.group, *max_degree, &budget)?;
            let mut text = String::new();
            for e in &t.entries {
                let value = match (e.exact, e.bound) {
                    (Some(k), _) => format!("minimal k = {k}"),
                    (None, Some(b)) => format!("minimal k <= {b}"),
                    _ => "not computed".into(),
                };
                text.push_str(&format!("|H| = {}, degree {}: {value}\n", e.subgroup_order, e.degree));
            }
            text.push_str(&format!(
                "k_trans = {} ({})\n",
                t.k,
                if t.certified { "certified" } else { "upper bound only" }
            ));
            Outcome::new(text, to_value(&t))
        }
        Command::Verify { .. } | Command::Catalog { .. } => unreachable!("handled above"),
    };
    Ok((outcome, Some(base), Some(action)))
}
