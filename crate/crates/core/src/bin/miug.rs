//! Command line front end: classify graphs in the mixed unit interval
//! hierarchy, build representations, generate the named families, check
//! representations against graphs, and cross-validate the two recognizers
//! over a graph6 stream.
//!
//! Exit codes: 0 success / positive verdict, 1 negative verdict (outside the
//! requested class, failed check, recognizer disagreement), 2 usage or parse
//! errors.

use std::collections::BTreeMap;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use miug::classifier::{classify, ClassLabel, Witness};
use miug::families::{self, FamilyId};
use miug::format::{emit_graph, parse_graph, GraphFormat};
use miug::graph::Graph;
use miug::interval::{expand_twins, IntervalType, Representation};
use miug::json::{representation_from_json, representation_to_json};
use miug::pipeline::{recognize_with_options, FailureReason, PipelineOptions};
use miug::synth::synthesize_with_types;

#[derive(Parser)]
#[command(name = "miug", version, about = "mixed unit interval graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TargetArg {
    Unit,
    Upm,
    AlmostMixed,
    Mixed,
}

#[derive(Args)]
struct GraphInput {
    /// Path to the graph, or '-' for stdin.
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Place a graph in the hierarchy and print the separating witnesses.
    Classify {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Produce a representation whose interval types obey the target class.
    Represent {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Write the representation JSON here instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Generate a named family member (edge list by default).
    Family {
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i32>,
        /// Also print the family's canonical interval layout.
        #[arg(long)]
        rep: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
        format: FormatArg,
    },
    /// Verify that a representation realizes a graph.
    Check {
        /// Path to the graph ('-' for stdin).
        graph: String,
        /// Path to the representation JSON.
        rep: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Auto)]
        format: FormatArg,
    },
    /// Read a graph6 stream on stdin and compare the forbidden-family
    /// classifier against the constructive recognizer on every graph.
    Crosscheck {
        /// Skip graphs with more vertices than this.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

fn read_input(path: &str) -> Result<Vec<u8>, String> {
    if path == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(|e| format!("{path}: {e}"))
    }
}

/// Whitespace or '#' means edge list; otherwise a line of graph6 bytes.
fn sniff_format(data: &[u8]) -> GraphFormat {
    let first_line = data.split(|&b| b == b'\n').find(|l| !l.is_empty());
    match first_line {
        Some(line) => {
            if line.iter().any(|&b| {
                b == b' ' || b == b'\t' || b == b'#' || (!(63..=126).contains(&b) && b != b'\r')
            }) {
                GraphFormat::EdgeList
            } else {
                GraphFormat::Graph6
            }
        }
        None => GraphFormat::EdgeList,
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, String> {
    let data = read_input(&input.input)?;
    let format = match input.format {
        FormatArg::Graph6 => GraphFormat::Graph6,
        FormatArg::EdgeList => GraphFormat::EdgeList,
        FormatArg::Auto => sniff_format(&data),
    };
    parse_graph(&data, format).map_err(|e| format!("{}: {e}", input.input))
}

fn witness_json(w: &Witness) -> serde_json::Value {
    serde_json::to_value(w).expect("witness serializes")
}

fn describe_witness(w: &Witness) -> String {
    match w {
        Witness::ForbiddenSubgraph(hit) => {
            let params = hit.family.params();
            let params = if params.is_empty() {
                String::new()
            } else {
                format!(
                    "({})",
                    params
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            };
            format!(
                "induced {}{params} at {:?}",
                hit.family.name(),
                hit.embedding.map
            )
        }
        Witness::BlockedClosure { .. } => "blocked closure pattern pair".to_string(),
    }
}

fn run_classify(graph: &GraphInput, json: bool) -> Result<ExitCode, String> {
    let g = load_graph(graph)?;
    let report = classify(&g);
    if json {
        let value = serde_json::json!({
            "class": report.label.to_string(),
            "chain": report.chain,
            "witnesses": {
                "not_interval": report.witnesses.not_interval,
                "not_mixed": report.witnesses.not_mixed,
                "not_almost_mixed": report.witnesses.not_almost_mixed,
                "not_upm": report.witnesses.not_upm,
                "not_unit": report.witnesses.not_unit,
            },
            "twin_reduced_vertices": report.twin_reduction.reduced.n(),
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
    } else {
        println!("class={}", report.label);
        if let Some(o) = &report.witnesses.not_interval {
            println!("not interval: {o:?}");
        }
        for (boundary, w) in [
            ("mixed", &report.witnesses.not_mixed),
            ("almost-mixed", &report.witnesses.not_almost_mixed),
            ("upm", &report.witnesses.not_upm),
            ("unit", &report.witnesses.not_unit),
        ] {
            if let Some(w) = w {
                println!("not {boundary}: {}", describe_witness(w));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn census_obeys(rep: &Representation, target: TargetArg) -> bool {
    let c = rep.type_census();
    match target {
        TargetArg::Unit => c.open == 0 && c.closed_open == 0 && c.open_closed == 0,
        TargetArg::Upm => c.closed_open == 0 && c.open_closed == 0,
        TargetArg::AlmostMixed => c.open_closed == 0,
        TargetArg::Mixed => true,
    }
}

fn run_represent(
    graph: &GraphInput,
    target: TargetArg,
    out: Option<&str>,
) -> Result<ExitCode, String> {
    let g = load_graph(graph)?;
    let report = classify(&g);

    let fail = |witness: serde_json::Value, label: ClassLabel| -> Result<ExitCode, String> {
        eprintln!("graph is outside the target class (class={label})");
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "member": false,
                "class": label.to_string(),
                "witness": witness,
            }))
            .unwrap()
        );
        Ok(ExitCode::from(1))
    };

    let rep = match target {
        TargetArg::AlmostMixed => {
            let outcome = recognize_with_options(&g, &PipelineOptions::default())
                .map_err(|e| e.to_string())?;
            if !outcome.member {
                let witness = match &outcome.failure {
                    Some(FailureReason::BlockedPair {
                        open_closed,
                        closed_open,
                    }) => serde_json::json!({
                        "blocked_open_closed": open_closed,
                        "blocked_closed_open": closed_open,
                    }),
                    Some(FailureReason::NotMixed { witness, .. }) => {
                        witness.as_ref().map(witness_json).unwrap_or_default()
                    }
                    None => serde_json::Value::Null,
                };
                return fail(witness, report.label);
            }
            outcome
                .representation
                .expect("member outcome carries a representation")
        }
        _ => {
            let types: &[IntervalType] = match target {
                TargetArg::Unit => &[IntervalType::Closed],
                TargetArg::Upm => &[IntervalType::Closed, IntervalType::Open],
                TargetArg::Mixed => &miug::synth::ALL_TYPES,
                TargetArg::AlmostMixed => unreachable!(),
            };
            let boundary = match target {
                TargetArg::Unit => &report.witnesses.not_unit,
                TargetArg::Upm => &report.witnesses.not_upm,
                _ => &report.witnesses.not_mixed,
            };
            let reduction = g.reduce_twins();
            match synthesize_with_types(&reduction.reduced, types) {
                Some(rep) => expand_twins(&reduction, &rep).map_err(|e| e.to_string())?,
                None => {
                    let witness = boundary
                        .as_ref()
                        .map(witness_json)
                        .or_else(|| {
                            report
                                .witnesses
                                .not_interval
                                .as_ref()
                                .map(|o| serde_json::to_value(o).unwrap())
                        })
                        .unwrap_or_default();
                    return fail(witness, report.label);
                }
            }
        }
    };

    // self-check before anything is written
    if let Err(v) = rep.verify(&g) {
        return Err(format!(
            "internal error: produced representation fails verification: {v}"
        ));
    }
    if !census_obeys(&rep, target) {
        return Err("internal error: produced representation violates the target census".into());
    }
    let json = representation_to_json(&rep, Some(&g));
    match out {
        Some(path) => std::fs::write(path, json + "\n").map_err(|e| format!("{path}: {e}"))?,
        None => println!("{json}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run_family(
    name: &str,
    params: &[i32],
    rep: bool,
    format: FormatArg,
) -> Result<ExitCode, String> {
    let id = FamilyId::from_name(name, params).map_err(|e| e.to_string())?;
    let inst = families::generate(id).map_err(|e| e.to_string())?;
    let format = match format {
        FormatArg::Graph6 => GraphFormat::Graph6,
        _ => GraphFormat::EdgeList,
    };
    println!("{}", emit_graph(&inst.graph, format));
    if rep {
        match &inst.canonical_rep {
            Some(r) => {
                if let Err(v) = r.verify(&inst.graph) {
                    return Err(format!(
                        "internal error: canonical layout fails verification: {v}"
                    ));
                }
                println!("{}", representation_to_json(r, Some(&inst.graph)));
            }
            None => {
                eprintln!("family `{name}` has no canonical interval layout");
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_check(graph_path: &str, rep_path: &str, format: FormatArg) -> Result<ExitCode, String> {
    let g = load_graph(&GraphInput {
        input: graph_path.to_string(),
        format,
    })?;
    let rep_data = read_input(rep_path)?;
    let rep = representation_from_json(
        std::str::from_utf8(&rep_data).map_err(|e| format!("{rep_path}: {e}"))?,
    )
    .map_err(|e| format!("{rep_path}: {e}"))?;
    match rep.verify(&g) {
        Ok(()) => {
            println!("ok: representation realizes the graph");
            Ok(ExitCode::SUCCESS)
        }
        Err(v) => {
            println!("violation: {v}");
            Ok(ExitCode::from(1))
        }
    }
}

fn run_crosscheck(max_n: Option<usize>, json: bool) -> Result<ExitCode, String> {
    let mut input = String::new();
    std::io::stdin()
        .read_to_string(&mut input)
        .map_err(|e| format!("stdin: {e}"))?;
    let mut counts: BTreeMap<usize, BTreeMap<String, usize>> = BTreeMap::new();
    let mut disagreements: Vec<(usize, String)> = Vec::new();
    let mut skipped = 0usize;
    let mut total = 0usize;
    for (lineno, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph(line.as_bytes(), GraphFormat::Graph6)
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        if max_n.is_some_and(|m| g.n() > m) {
            skipped += 1;
            continue;
        }
        total += 1;
        let report = classify(&g);
        let outcome = recognize_with_options(&g, &PipelineOptions::default())
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        let list_member = report.label >= ClassLabel::AlmostMixed;
        if list_member != outcome.member {
            disagreements.push((lineno + 1, line.to_string()));
        }
        *counts
            .entry(g.n())
            .or_default()
            .entry(report.label.to_string())
            .or_default() += 1;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({
                "graphs": total,
                "skipped": skipped,
                "per_n": counts,
                "disagreements": disagreements,
            }))
            .unwrap()
        );
    } else {
        println!("{total} graphs checked ({skipped} skipped)");
        for (n, by_label) in &counts {
            let cells: Vec<String> = by_label.iter().map(|(l, c)| format!("{l}={c}")).collect();
            println!("n={n}: {}", cells.join(" "));
        }
        if disagreements.is_empty() {
            println!("recognizers agree on every graph");
        } else {
            for (line, enc) in &disagreements {
                println!("DISAGREEMENT at line {line}: {enc}");
            }
        }
    }
    Ok(if disagreements.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    // die quietly when a pipe reader hangs up (e.g. `miug family ... | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { graph, json } => run_classify(graph, *json),
        Command::Represent { graph, target, out } => run_represent(graph, *target, out.as_deref()),
        Command::Family {
            name,
            params,
            rep,
            format,
        } => run_family(name, params, *rep, *format),
        Command::Check { graph, rep, format } => run_check(graph, rep, *format),
        Command::Crosscheck { max_n, json } => run_crosscheck(*max_n, *json),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
