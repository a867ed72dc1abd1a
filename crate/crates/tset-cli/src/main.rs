//! `tset` — command-line front end for finite transitive structures.
//!
//! Subcommands: classify a relation file, compute bound operators on a
//! subset, check predicates (grep convention: exit 0 true, exit 1 false),
//! list a topology's opens, sweep a registered claim over every structure
//! of a given carrier size, and emit the built-in example structures.
//!
//! Exit codes are stable across subcommands: 0 for success / a true
//! predicate / a clean sweep, 1 for a false predicate or a sweep with
//! violations, 2 for usage errors, 3 for invalid input files.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tset_core::fixtures;
use tset_core::{find_theorem, FiniteTSet, Subset, Topology, TopologyKind, MAX_ENUMERATION};

#[derive(Parser)]
#[command(
    name = "tset",
    version,
    about = "Finite transitive structures: classify, compute, check, sweep"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report the relation axioms and derived class memberships.
    Classify {
        /// Relation JSON file: {"elements": [...], "relation": [["a","b"], ...]}.
        file: PathBuf,
        /// Close the relation transitively instead of rejecting non-transitive input.
        #[arg(long)]
        close: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Apply a bound operator to a subset.
    Compute {
        file: PathBuf,
        /// Operator to apply.
        #[arg(long, value_enum)]
        op: Op,
        /// Comma-separated element labels; "∅" or "" is the empty subset.
        #[arg(long)]
        subset: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a predicate (exit 0 when true, exit 1 when false).
    Check {
        file: PathBuf,
        /// Predicate to decide.
        #[arg(long, value_enum)]
        pred: Pred,
        /// Subset for the subset-level predicates.
        #[arg(long)]
        subset: Option<String>,
        /// Built-in topology: alexandroff or scott-star.
        #[arg(long)]
        topology: Option<String>,
        /// Explicit topology file: {"opens": [["a", ...], ...]}.
        #[arg(long, conflicts_with = "topology")]
        topology_file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List a topology's opens over the file's carrier, sorted, one per line.
    Topology {
        file: PathBuf,
        /// Built-in topology (default: alexandroff).
        #[arg(long)]
        topology: Option<String>,
        /// Explicit topology file: {"opens": [["a", ...], ...]}.
        #[arg(long, conflicts_with = "topology")]
        topology_file: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Sweep one registered claim over every structure of carrier size n.
    Sweep {
        /// Registered claim id (e.g. T3.1; the README lists the registry).
        #[arg(long)]
        theorem: String,
        /// Carrier size, 1..=4 by default.
        #[arg(long)]
        n: usize,
        /// Topology construction to sweep (repeatable); topology-dependent
        /// claims default to both built-ins.
        #[arg(long = "topology")]
        topologies: Vec<String>,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Permit n = 5 (≈155k structures, minutes of work).
        #[arg(long)]
        allow_n5: bool,
        /// Accepted for uniformity; the report is always JSON.
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in example structure as relation JSON.
    Example {
        /// Example id: 3.2, 3.3, or 5.1.
        #[arg(long)]
        id: String,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accepted for uniformity; the output is always JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Ub,
    Lb,
    Le,
    La,
    Sup,
    Inf,
    Up,
    Down,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Ub => "ub",
            Op::Lb => "lb",
            Op::Le => "le",
            Op::La => "la",
            Op::Sup => "sup",
            Op::Inf => "inf",
            Op::Up => "up",
            Op::Down => "down",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Pred {
    BoundedComplete,
    Domain,
    BoundedCompleteDomain,
    FinitelyComplete,
    CompleteDomain,
    FinitarilyComplete,
    StronglyCompactlyComplete,
    CompactlyComplete,
    Finitary,
    Directed,
    UpperCone,
    UpperSet,
    StronglyCompact,
    Compact,
}

impl Pred {
    fn name(self) -> &'static str {
        match self {
            Pred::BoundedComplete => "bounded-complete",
            Pred::Domain => "domain",
            Pred::BoundedCompleteDomain => "bounded-complete-domain",
            Pred::FinitelyComplete => "finitely-complete",
            Pred::CompleteDomain => "complete-domain",
            Pred::FinitarilyComplete => "finitarily-complete",
            Pred::StronglyCompactlyComplete => "strongly-compactly-complete",
            Pred::CompactlyComplete => "compactly-complete",
            Pred::Finitary => "finitary",
            Pred::Directed => "directed",
            Pred::UpperCone => "upper-cone",
            Pred::UpperSet => "upper-set",
            Pred::StronglyCompact => "strongly-compact",
            Pred::Compact => "compact",
        }
    }

    fn takes_subset(self) -> bool {
        matches!(
            self,
            Pred::Finitary
                | Pred::Directed
                | Pred::UpperCone
                | Pred::UpperSet
                | Pred::StronglyCompact
                | Pred::Compact
        )
    }

    fn takes_topology(self) -> bool {
        matches!(
            self,
            Pred::StronglyCompactlyComplete
                | Pred::CompactlyComplete
                | Pred::StronglyCompact
                | Pred::Compact
        )
    }
}

/// A failure with its contractual exit code: 2 usage, 3 invalid input.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Prints one line of output; a closed pipe downstream (e.g. `| head`)
/// ends the process quietly instead of panicking.
fn say(line: impl std::fmt::Display) {
    let mut out = std::io::stdout().lock();
    if writeln!(out, "{line}").is_err() {
        std::process::exit(0);
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Classify { file, close, json } => cmd_classify(&file, close, json),
        Cmd::Compute { file, op, subset, json } => cmd_compute(&file, op, &subset, json),
        Cmd::Check { file, pred, subset, topology, topology_file, json } => cmd_check(
            &file,
            pred,
            subset.as_deref(),
            topology.as_deref(),
            topology_file.as_deref(),
            json,
        ),
        Cmd::Topology { file, topology, topology_file, json } => {
            cmd_topology(&file, topology.as_deref(), topology_file.as_deref(), json)
        }
        Cmd::Sweep { theorem, n, topologies, jobs, report, allow_n5, json: _ } => {
            cmd_sweep(&theorem, n, &topologies, jobs, report.as_deref(), allow_n5)
        }
        Cmd::Example { id, out, json: _ } => cmd_example(&id, out.as_deref()),
    }
}

fn load(file: &Path, close: bool) -> Result<FiniteTSet, Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", file.display())))?;
    let parsed = if close {
        FiniteTSet::from_json_str_with_closure(&text)
    } else {
        FiniteTSet::from_json_str(&text)
    };
    parsed.map_err(|e| Failure::invalid(format!("{}: {e}", file.display())))
}

fn parse_subset(t: &FiniteTSet, raw: &str) -> Result<Subset, Failure> {
    if raw.is_empty() || raw == "∅" {
        return Ok(Subset::empty(t.carrier_size()));
    }
    let labels: Vec<&str> = raw.split(',').collect();
    t.subset_from_labels(&labels)
        .map_err(|e| Failure::invalid(e.to_string()))
}

fn show_subset(t: &FiniteTSet, s: &Subset) -> String {
    let labels = t.subset_labels(s);
    if labels.is_empty() {
        "∅".to_string()
    } else {
        labels.join(",")
    }
}

/// Builds the requested topology; the returned string names it in output.
fn resolve_topology(
    t: &FiniteTSet,
    kind: Option<&str>,
    file: Option<&Path>,
) -> Result<(String, Topology), Failure> {
    match (kind, file) {
        (Some(k), None) => {
            let kind = TopologyKind::parse(k).ok_or_else(|| {
                Failure::usage(format!("unknown topology {k:?} (alexandroff, scott-star)"))
            })?;
            Ok((kind.name().to_string(), kind.build(t)))
        }
        (None, Some(path)) => Ok((path.display().to_string(), topology_from_file(t, path)?)),
        (None, None) => {
            Err(Failure::usage("a topology is required: pass --topology or --topology-file"))
        }
        (Some(_), Some(_)) => unreachable!("the flags are declared mutually exclusive"),
    }
}

fn topology_from_file(t: &FiniteTSet, path: &Path) -> Result<Topology, Failure> {
    let bad = |detail: String| Failure::invalid(format!("{}: {detail}", path.display()));
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
    let doc: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let opens = doc
        .get("opens")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| bad("expected an object with an \"opens\" array".to_string()))?;
    let mut family = Vec::with_capacity(opens.len());
    for open in opens {
        let members = open
            .as_array()
            .ok_or_else(|| bad("each open must be an array of element labels".to_string()))?;
        let mut labels = Vec::with_capacity(members.len());
        for member in members {
            labels.push(
                member
                    .as_str()
                    .ok_or_else(|| bad("open members must be strings".to_string()))?,
            );
        }
        family.push(t.subset_from_labels(&labels).map_err(|e| bad(e.to_string()))?);
    }
    Topology::build(t.carrier_size(), &family).map_err(|e| bad(e.to_string()))
}

fn cmd_classify(file: &Path, close: bool, json: bool) -> Result<u8, Failure> {
    let t = load(file, close)?;
    let report = t.classify();
    if json {
        say(serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for (name, value) in report.entries() {
            say(format_args!("{name}: {value}"));
        }
    }
    Ok(0)
}

fn cmd_compute(file: &Path, op: Op, subset: &str, json: bool) -> Result<u8, Failure> {
    let t = load(file, false)?;
    let a = parse_subset(&t, subset)?;
    let result = match op {
        Op::Ub => t.upper_bounds(&a),
        Op::Lb => t.lower_bounds(&a),
        Op::Le => t.least(&a),
        Op::La => t.largest(&a),
        Op::Sup => t.sup(&a),
        Op::Inf => t.inf(&a),
        Op::Up => t.up_closure(&a),
        Op::Down => t.down_closure(&a),
    }
    .expect("the subset was built on this carrier");
    if json {
        say(json!({
            "op": op.name(),
            "subset": t.subset_labels(&a),
            "result": t.subset_labels(&result),
        }));
    } else {
        say(show_subset(&t, &result));
    }
    Ok(0)
}

fn cmd_check(
    file: &Path,
    pred: Pred,
    subset: Option<&str>,
    topology: Option<&str>,
    topology_file: Option<&Path>,
    json: bool,
) -> Result<u8, Failure> {
    let t = load(file, false)?;
    let subset = match (pred.takes_subset(), subset) {
        (true, Some(raw)) => Some(parse_subset(&t, raw)?),
        (true, None) => {
            return Err(Failure::usage(format!("--pred {} needs --subset", pred.name())))
        }
        (false, None) => None,
        (false, Some(_)) => {
            return Err(Failure::usage(format!(
                "--pred {} does not take --subset",
                pred.name()
            )))
        }
    };
    let topo = if pred.takes_topology() {
        Some(resolve_topology(&t, topology, topology_file)?)
    } else if topology.is_some() || topology_file.is_some() {
        return Err(Failure::usage(format!(
            "--pred {} does not take a topology",
            pred.name()
        )));
    } else {
        None
    };

    let a = subset.as_ref();
    let tau = topo.as_ref().map(|(_, tau)| tau);
    let value = match pred {
        Pred::BoundedComplete => t.is_bounded_complete(),
        Pred::Domain => t.is_domain(),
        Pred::BoundedCompleteDomain => t.is_bounded_complete_domain(),
        Pred::FinitelyComplete => t.is_finitely_complete(),
        Pred::CompleteDomain => t.is_complete_domain(),
        Pred::FinitarilyComplete => t.is_finitarily_complete(),
        Pred::StronglyCompactlyComplete => t
            .is_strongly_compactly_complete(tau.expect("required above"))
            .expect("built on this carrier"),
        Pred::CompactlyComplete => t
            .is_compactly_complete(tau.expect("required above"))
            .expect("built on this carrier"),
        Pred::Finitary => t.is_finitary(a.expect("required above")).expect("same carrier"),
        Pred::Directed => t.is_directed(a.expect("required above")).expect("same carrier"),
        Pred::UpperCone => t.is_upper_cone(a.expect("required above")).expect("same carrier"),
        Pred::UpperSet => t.is_upper_set(a.expect("required above")).expect("same carrier"),
        Pred::StronglyCompact => t
            .is_strongly_compact(a.expect("required above"), tau.expect("required above"))
            .expect("built on this carrier"),
        // Compactness is constantly true on finite carriers; small carriers
        // re-derive it by honest subfamily search instead of asserting it.
        Pred::Compact => {
            let (a, tau) = (a.expect("required above"), tau.expect("required above"));
            if t.carrier_size() <= 4 {
                tau.is_compact_by_cover_search(a).expect("same carrier")
            } else {
                tau.is_compact(a).expect("same carrier")
            }
        }
    };

    if json {
        let mut out = json!({ "pred": pred.name(), "value": value });
        if let Some(a) = &subset {
            out["subset"] = json!(t.subset_labels(a));
        }
        if let Some((name, _)) = &topo {
            out["topology"] = json!(name);
        }
        say(out);
    } else {
        say(value);
    }
    Ok(u8::from(!value))
}

fn cmd_topology(
    file: &Path,
    topology: Option<&str>,
    topology_file: Option<&Path>,
    json: bool,
) -> Result<u8, Failure> {
    let t = load(file, false)?;
    let (name, tau) = if topology.is_none() && topology_file.is_none() {
        ("alexandroff".to_string(), TopologyKind::Alexandroff.build(&t))
    } else {
        resolve_topology(&t, topology, topology_file)?
    };
    if json {
        let opens: Vec<Vec<String>> = tau.opens().map(|o| t.subset_labels(&o)).collect();
        say(json!({ "topology": name, "open_count": tau.open_count(), "opens": opens }));
    } else {
        for open in tau.opens() {
            say(show_subset(&t, &open));
        }
    }
    Ok(0)
}

fn cmd_sweep(
    theorem: &str,
    n: usize,
    topologies: &[String],
    jobs: Option<usize>,
    report: Option<&Path>,
    allow_n5: bool,
) -> Result<u8, Failure> {
    let th = find_theorem(theorem).ok_or_else(|| {
        Failure::usage(format!(
            "unknown theorem id {theorem:?}; the README lists the registry"
        ))
    })?;
    if n == 0 || n > MAX_ENUMERATION {
        return Err(Failure::usage(format!("--n {n} is out of range (1..={MAX_ENUMERATION})")));
    }
    if n == MAX_ENUMERATION && !allow_n5 {
        return Err(Failure::usage(format!(
            "n = {MAX_ENUMERATION} sweeps ≈155k structures; pass --allow-n5 to confirm"
        )));
    }
    let kinds: Vec<TopologyKind> = if th.topology_dependent {
        if topologies.is_empty() {
            vec![TopologyKind::Alexandroff, TopologyKind::ScottStar]
        } else {
            topologies
                .iter()
                .map(|s| {
                    TopologyKind::parse(s).ok_or_else(|| {
                        Failure::usage(format!(
                            "unknown topology {s:?} (alexandroff, scott-star)"
                        ))
                    })
                })
                .collect::<Result<_, _>>()?
        }
    } else if topologies.is_empty() {
        Vec::new()
    } else {
        return Err(Failure::usage(format!("{} does not take a topology", th.id)));
    };
    if let Some(k) = jobs {
        if k == 0 {
            return Err(Failure::usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| Failure::usage(format!("cannot size the worker pool: {e}")))?;
    }
    let result = tset_core::sweep(th.id, n, &kinds).expect("arguments validated above");
    let rendered = result.to_json_string();
    match report {
        Some(path) => fs::write(path, rendered + "\n")
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => say(rendered),
    }
    Ok(u8::from(!result.violations.is_empty()))
}

fn cmd_example(id: &str, out: Option<&Path>) -> Result<u8, Failure> {
    let t = fixtures::by_id(id).map_err(|e| Failure::usage(e.to_string()))?;
    let rendered = t.to_json_string();
    match out {
        Some(path) => fs::write(path, rendered + "\n")
            .map_err(|e| Failure::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => say(rendered),
    }
    Ok(0)
}
