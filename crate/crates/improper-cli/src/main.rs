//! `improper` — a command-line laboratory for exact impropriety of interval
//! graphs: measurement, construction families, verification suites, an
//! exhaustive explorer, drawings, and an independent brute-force oracle.
//!
//! Exit codes: 0 success, 1 usage/parameter error (or a verification suite
//! with internal FAIL rows), 2 not an interval graph, 3 guard or time budget
//! exceeded. All output is plain text or JSON; `NO_COLOR` is always honored
//! because nothing is ever colored. With identical inputs and flags, every
//! subcommand produces byte-identical output regardless of `--workers`.

mod io;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use improper::engine::SearchBudget;
use improper::families::{
    gen_chain_drop, gen_clique, gen_drop_pair, gen_drop_to_seven, gen_fat_claw, gen_half_drop,
    gen_path, gen_star, FamilyInstance,
};
use improper::{
    conjecture_stats, engine, explore, oracle_impropriety_examined, qproper_stability,
    removal_spectrum, render_svg, render_tikz, structure_report, verify_family_claims,
    verify_spectrum_bound, Error, Graph, RenderStyle, VerificationTable,
};
use serde_json::json;

// --- command line ------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "improper",
    version,
    about = "Exact impropriety laboratory for interval graphs",
    long_about = "Measures the minimum, over all interval representations, of the worst \
                  number of intervals strictly nested inside one interval — plus the dual \
                  properness count, removal spectra, criticality, construction families, \
                  verification suites, an exhaustive small-graph explorer, and SVG/TikZ \
                  drawings.\n\nInputs are auto-detected: graph6, plain edge lists \
                  (p/e/c lines), or interval-representation JSON. Output is plain text or \
                  JSON only (NO_COLOR is honored trivially) and byte-identical across \
                  worker counts.\n\nExit codes: 0 success, 1 usage error or failed \
                  verification, 2 not an interval graph, 3 guard or time budget exceeded."
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Worker threads for parallel sweeps; omit to use every core. Output
    /// bytes do not depend on this.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Abort the exact searches behind analyze/render after this many
    /// seconds; prints a clearly-labeled partial bound and exits 3.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<u64>,

    /// Seed recorded for reproducibility. Every current subcommand is fully
    /// deterministic, so this changes nothing today; the default is fixed.
    #[arg(long, global = true, default_value_t = 0, value_name = "N")]
    seed: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Measure a graph: impropriety, properness, removal spectrum,
    /// criticality, basepoint witnesses, and exterior classification.
    Analyze {
        /// Input path, or `-` for stdin (graph6, edge list, or
        /// representation JSON).
        #[arg(long, default_value = "-", value_name = "PATH|-")]
        input: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },

    /// Build a construction-family instance: graph file plus a JSON metadata
    /// sidecar carrying the designated vertex and expected values.
    Generate {
        #[arg(value_enum)]
        family: FamilyArg,
        /// Target impropriety (drop-pair, half-drop, chain-drop,
        /// drop-to-seven).
        #[arg(long)]
        p: Option<usize>,
        /// Landing value after deleting the designated vertex (drop-pair,
        /// half-drop, chain-drop); size for clique/path, leaves for star.
        #[arg(long)]
        n: Option<usize>,
        /// Properness parameter (fat-claw).
        #[arg(long)]
        q: Option<usize>,
        /// Chain-drop ladder length override.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, value_enum, default_value_t = GraphFormatArg::G6)]
        format: GraphFormatArg,
        /// Write the graph here and the sidecar to `<OUT>.meta.json`;
        /// omit to print one JSON document to stdout.
        #[arg(long, value_name = "OUT")]
        out: Option<PathBuf>,
    },

    /// Run a verification suite. FINDING rows (measured values contradicting
    /// a source-construction claim) are listed but never fail the run; only
    /// internal FAIL rows (engine vs oracle, route vs route) exit nonzero.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Largest impropriety parameter in family grids (default 4;
        /// spectrum-bound default 4).
        #[arg(long)]
        pmax: Option<usize>,
        /// Cap on the landing parameter in family grids; full range when
        /// omitted. For oracle-equivalence: largest vertex count
        /// (default 5).
        #[arg(long)]
        nmax: Option<usize>,
        /// drop-to-seven only: check constructions up to this p (default 8;
        /// 9 and 10 complete and emit findings).
        #[arg(long)]
        p: Option<usize>,
        /// stability only: single properness class to sweep (default: 1,
        /// 2, and 3 in turn).
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },

    /// Measure every connected graph up to a vertex count into a resumable
    /// JSONL store, then print the outcome and per-class statistics.
    Explore {
        /// Largest vertex count to enumerate (at most 9).
        #[arg(long, value_name = "N")]
        max_n: usize,
        /// JSONL store path; existing records are kept and skipped.
        #[arg(long, value_name = "PATH")]
        store: PathBuf,
    },

    /// Draw a graph's optimal representation — or a given representation —
    /// as SVG or TikZ. The basepoint witness is black, the designated
    /// vertex dark grey, the relocating clique light grey.
    Render {
        #[arg(long, default_value = "-", value_name = "PATH|-")]
        input: String,
        #[arg(long, value_enum, default_value_t = DrawFormat::Svg)]
        format: DrawFormat,
        /// Override the vertex drawn black (default: the drawn
        /// representation's own worst vertex).
        #[arg(long)]
        basepoint: Option<usize>,
        /// Vertex drawn dark grey.
        #[arg(long)]
        designated: Option<usize>,
        /// Vertices drawn light grey (comma-separated).
        #[arg(long, value_delimiter = ',', value_name = "V,V,...")]
        relocating: Vec<usize>,
        /// Pack disjoint intervals onto shared rows instead of one row per
        /// vertex.
        #[arg(long)]
        compact_rows: bool,
        /// Write here instead of stdout.
        #[arg(long, value_name = "OUT")]
        out: Option<PathBuf>,
    },

    /// Brute-force impropriety by exhaustive endpoint sequences (independent
    /// of the search engine); at most 8 vertices.
    Oracle {
        #[arg(long, default_value = "-", value_name = "PATH|-")]
        input: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Impropriety p; deleting the designated vertex lands at any chosen
    /// n < p.
    DropPair,
    /// Impropriety p; lands at any n up to half of p.
    HalfDrop,
    /// Impropriety p via a calibrated chain; lands at n.
    ChainDrop,
    /// Impropriety min(p, 8); the designated deletion lands at 7.
    DropToSeven,
    /// A claw with one leaf fattened to a clique on q+1 vertices.
    FatClaw,
    /// Complete graph on n vertices.
    Clique,
    /// Path on n vertices.
    Path,
    /// Star with n leaves.
    Star,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    /// Impropriety and drop value across the drop-pair grid, with oracle
    /// cross-checks on small instances.
    DropPair,
    /// Same for the half-drop grid (n up to half of p).
    HalfDrop,
    /// Same for the calibrated chain-drop grid.
    ChainDrop,
    /// The 15-vertex construction: impropriety 8 at p=8, landing at 7.
    DropToSeven,
    /// Deletions from properness-critical exactly-q-proper graphs stay in
    /// {0, q-1}; exhaustive on up to 7 vertices.
    Stability,
    /// Removal spectra stay within four distinct values on the drop-pair
    /// grid, filtered to two-exterior basepoint witnesses.
    SpectrumBound,
    /// Engine equals brute-force oracle on every interval graph up to nmax
    /// vertices, impropriety and properness both.
    OracleEquivalence,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    G6,
    Edgelist,
    Dot,
}

impl GraphFormatArg {
    fn name(self) -> &'static str {
        match self {
            GraphFormatArg::G6 => "g6",
            GraphFormatArg::Edgelist => "edgelist",
            GraphFormatArg::Dot => "dot",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DrawFormat {
    Svg,
    Tikz,
}

// --- entry -------------------------------------------------------------------

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version print to stdout and succeed; everything else
            // is a usage error (exit 1 by the exit-code contract).
            let usage_error = err.use_stderr();
            let _ = err.print();
            return ExitCode::from(if usage_error { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            if let Error::TimeBudgetExceeded {
                orderings_explored,
                best_upper_bound,
            } = &err
            {
                // Partial-bound report: the best value seen bounds the
                // optimum from above but certifies nothing.
                let doc = json!({
                    "aborted": "time budget exceeded",
                    "orderings_explored": orderings_explored,
                    "best_upper_bound": best_upper_bound,
                    "certificate": false,
                    "note": "bound from explored orderings only; not a certificate of optimality",
                });
                emit_line(&pretty(&doc));
            }
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return Err(Error::InvalidParameters(
                "--workers must be at least 1".into(),
            ));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|err| Error::InvalidParameters(format!("worker pool: {err}")))?;
    }
    if cli.time_budget == Some(0) {
        return Err(Error::InvalidParameters(
            "--time-budget must be at least 1 second".into(),
        ));
    }
    let budget = SearchBudget {
        time_limit: cli.time_budget.map(Duration::from_secs),
        max_orderings: None,
    };
    // `--seed` is accepted (fixed default 0) but nothing randomized runs in
    // the binary; seeded relabeling sweeps live in the test suites.
    let _ = cli.seed;

    match cli.command {
        Cmd::Analyze { input, format } => {
            cmd_analyze(&input, format, &budget)?;
            Ok(0)
        }
        Cmd::Generate {
            family,
            p,
            n,
            q,
            s,
            format,
            out,
        } => {
            cmd_generate(family, p, n, q, s, format, out.as_deref())?;
            Ok(0)
        }
        Cmd::Verify {
            suite,
            pmax,
            nmax,
            p,
            q,
            format,
        } => cmd_verify(suite, pmax, nmax, p, q, format),
        Cmd::Explore { max_n, store } => {
            cmd_explore(max_n, &store)?;
            Ok(0)
        }
        Cmd::Render {
            input,
            format,
            basepoint,
            designated,
            relocating,
            compact_rows,
            out,
        } => {
            cmd_render(
                &input,
                format,
                basepoint,
                designated,
                relocating,
                compact_rows,
                out.as_deref(),
                &budget,
            )?;
            Ok(0)
        }
        Cmd::Oracle { input } => {
            cmd_oracle(&input)?;
            Ok(0)
        }
    }
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("in-memory JSON always serializes")
}

/// Writes to stdout, treating a closed pipe (e.g. `| head`) as a normal,
/// quiet exit instead of a panic.
fn emit(text: &str) {
    use std::io::Write as _;
    let mut out = std::io::stdout().lock();
    let outcome = out.write_all(text.as_bytes()).and_then(|()| out.flush());
    if let Err(err) = outcome {
        if err.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("stdout: {err}");
        std::process::exit(1);
    }
}

fn emit_line(text: &str) {
    emit(text);
    emit("\n");
}

// --- analyze -----------------------------------------------------------------

fn cmd_analyze(input: &str, format: ReportFormat, budget: &SearchBudget) -> Result<(), Error> {
    let g = io::load(input)?.into_graph()?;
    engine::check_interval(&g)?;
    let imp = engine::impropriety_with_budget(&g, budget)?;
    let proper = engine::properness_with_budget(&g, budget)?;
    let spectrum = removal_spectrum(&g)?;
    let structure = if imp.value >= 1 {
        Some(structure_report(&g)?)
    } else {
        None
    };

    match format {
        ReportFormat::Json => {
            let mut doc = json!({
                "n": g.vertex_count(),
                "edges": g.edge_count(),
                "interval": true,
                "imp": imp.value,
                "proper": proper.value,
                "spectrum": spectrum.spectrum,
                "per_vertex": spectrum.per_vertex,
                "critical": spectrum.critical,
                "notes": spectrum.notes,
            });
            if let Some(report) = structure {
                doc["witnesses"] = json!(report.basepoint_witnesses);
                doc["views"] = json!(report.views);
                doc["note"] = json!(report.note);
            }
            emit_line(&pretty(&doc));
        }
        ReportFormat::Table => {
            let set = |values: &[usize]| {
                let inner: Vec<String> = values.iter().map(usize::to_string).collect();
                format!("{{{}}}", inner.join(", "))
            };
            emit_line(&format!("vertices     {}", g.vertex_count()));
            emit_line(&format!("edges        {}", g.edge_count()));
            emit_line(&format!("interval     yes"));
            emit_line(&format!("impropriety  {}", imp.value));
            emit_line(&format!("properness   {}", proper.value));
            emit_line(&format!("spectrum     {}", set(&spectrum.spectrum)));
            emit_line(&format!("critical     {}", if spectrum.critical { "yes" } else { "no" }));
            if let Some(report) = structure {
                emit_line(&format!("witnesses    {}", set(&report.basepoint_witnesses)));
                for view in &report.views {
                    let flags: Vec<String> = view
                        .local_components
                        .iter()
                        .zip(&view.exterior)
                        .map(|(comp, &ext)| {
                            format!(
                                "{}={}",
                                set(comp),
                                if ext { "exterior" } else { "held" }
                            )
                        })
                        .collect();
                    emit_line(&format!("basepoint {:<4} {}", view.basepoint, flags.join("  ")));
                }
            }
            for note in &spectrum.notes {
                emit_line(&format!("note         {note}"));
            }
        }
    }
    Ok(())
}

// --- generate ----------------------------------------------------------------

fn instance_meta(inst: &FamilyInstance) -> serde_json::Value {
    json!({
        "family": inst.family_tag,
        "params": inst.params,
        "vertices": inst.graph.vertex_count(),
        "edges": inst.graph.edge_count(),
        "designated_vertex": inst.designated_vertex,
        "expected_impropriety": inst.expected_impropriety,
        "expected_drop_value": inst.expected_drop_value,
        "constructed_basepoint": inst.constructed_basepoint,
        "relocating_clique": inst.relocating_clique,
        "graph6": inst.graph.to_graph6(),
        "notes": inst.notes,
    })
}

fn plain_meta(tag: &str, size: usize, g: &Graph) -> serde_json::Value {
    json!({
        "family": tag,
        "params": { "size": size },
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "graph6": g.to_graph6(),
    })
}

fn cmd_generate(
    family: FamilyArg,
    p: Option<usize>,
    n: Option<usize>,
    q: Option<usize>,
    s: Option<usize>,
    format: GraphFormatArg,
    out: Option<&Path>,
) -> Result<(), Error> {
    let need = |value: Option<usize>, flag: &str, tag: &str| {
        value.ok_or_else(|| Error::InvalidParameters(format!("{tag} needs --{flag}")))
    };
    let (graph, meta) = match family {
        FamilyArg::DropPair => {
            let inst = gen_drop_pair(need(p, "p", "drop-pair")?, n.unwrap_or(0))?;
            (inst.graph.clone(), instance_meta(&inst))
        }
        FamilyArg::HalfDrop => {
            let inst = gen_half_drop(need(p, "p", "half-drop")?, n.unwrap_or(0))?;
            (inst.graph.clone(), instance_meta(&inst))
        }
        FamilyArg::ChainDrop => {
            let inst = gen_chain_drop(need(p, "p", "chain-drop")?, n.unwrap_or(0), s)?;
            (inst.graph.clone(), instance_meta(&inst))
        }
        FamilyArg::DropToSeven => {
            let inst = gen_drop_to_seven(p.unwrap_or(8))?;
            (inst.graph.clone(), instance_meta(&inst))
        }
        FamilyArg::FatClaw => {
            let q = need(q, "q", "fat-claw")?;
            let g = gen_fat_claw(q);
            let meta = json!({
                "family": "fat-claw",
                "params": { "q": q },
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "graph6": g.to_graph6(),
            });
            (g, meta)
        }
        FamilyArg::Clique => {
            let size = need(n, "n", "clique")?;
            let g = gen_clique(size);
            let meta = plain_meta("clique", size, &g);
            (g, meta)
        }
        FamilyArg::Path => {
            let size = need(n, "n", "path")?;
            let g = gen_path(size);
            let meta = plain_meta("path", size, &g);
            (g, meta)
        }
        FamilyArg::Star => {
            let leaves = need(n, "n", "star")?;
            let g = gen_star(leaves);
            let meta = plain_meta("star", leaves, &g);
            (g, meta)
        }
    };

    let text = io::format_graph(&graph, format.name())?;
    match out {
        Some(path) => {
            fs::write(path, &text)?;
            let sidecar = PathBuf::from(format!("{}.meta.json", path.display()));
            fs::write(sidecar, pretty(&meta) + "\n")?;
        }
        None => {
            let doc = json!({
                "format": format.name(),
                "graph": text,
                "meta": meta,
            });
            emit_line(&pretty(&doc));
        }
    }
    Ok(())
}

// --- verify ------------------------------------------------------------------

fn cmd_verify(
    suite: SuiteArg,
    pmax: Option<usize>,
    nmax: Option<usize>,
    p: Option<usize>,
    q: Option<usize>,
    format: ReportFormat,
) -> Result<u8, Error> {
    let tables: Vec<VerificationTable> = match suite {
        SuiteArg::DropPair => vec![verify_family_claims("drop-pair", pmax.unwrap_or(4), nmax)?],
        SuiteArg::HalfDrop => vec![verify_family_claims("half-drop", pmax.unwrap_or(4), nmax)?],
        SuiteArg::ChainDrop => vec![verify_family_claims("chain-drop", pmax.unwrap_or(4), nmax)?],
        SuiteArg::DropToSeven => vec![verify_family_claims(
            "drop-to-seven",
            p.unwrap_or(8),
            None,
        )?],
        SuiteArg::Stability => match q {
            Some(q) => vec![qproper_stability(q)?],
            None => (1..=3)
                .map(qproper_stability)
                .collect::<Result<Vec<_>, _>>()?,
        },
        SuiteArg::SpectrumBound => vec![verify_spectrum_bound(pmax.unwrap_or(4))?],
        SuiteArg::OracleEquivalence => {
            vec![improper::oracle_equivalence(nmax.unwrap_or(5))?]
        }
    };

    match format {
        ReportFormat::Table => {
            let rendered: Vec<String> = tables.iter().map(VerificationTable::to_markdown).collect();
            emit_line(&rendered.join("\n"));
        }
        ReportFormat::Json => emit_line(
            &serde_json::to_string_pretty(&tables).expect("tables always serialize"),
        ),
    }
    Ok(if tables.iter().all(VerificationTable::passed) {
        0
    } else {
        1
    })
}

// --- explore -----------------------------------------------------------------

fn cmd_explore(max_n: usize, store: &Path) -> Result<(), Error> {
    let outcome = explore(max_n, store)?;
    let stats = conjecture_stats(store)?;
    let doc = json!({
        "outcome": outcome,
        "stats": stats,
    });
    emit_line(&pretty(&doc));
    Ok(())
}

// --- render ------------------------------------------------------------------

#[allow(clippy::too_many_arguments)]
fn cmd_render(
    input: &str,
    format: DrawFormat,
    basepoint: Option<usize>,
    designated: Option<usize>,
    relocating: Vec<usize>,
    compact_rows: bool,
    out: Option<&Path>,
    budget: &SearchBudget,
) -> Result<(), Error> {
    let (g, rep) = match io::load(input)? {
        io::LoadedInput::Graph(g) => {
            let cert = engine::impropriety_with_budget(&g, budget)?;
            (g, cert.representation)
        }
        io::LoadedInput::Representation(rep) => {
            let g = rep.to_graph()?;
            (g, rep)
        }
    };
    // Default basepoint: the drawn representation's own worst vertex.
    let style = RenderStyle {
        basepoint: basepoint.or(rep.nested_inside_profile().witness),
        designated,
        relocating,
        compact_rows,
    };
    let doc = match format {
        DrawFormat::Svg => render_svg(&g, &rep, &style)?,
        DrawFormat::Tikz => render_tikz(&g, &rep, &style)?,
    };
    match out {
        Some(path) => fs::write(path, doc)?,
        None => emit(&doc),
    }
    Ok(())
}

// --- oracle ------------------------------------------------------------------

fn cmd_oracle(input: &str) -> Result<(), Error> {
    let g = io::load(input)?.into_graph()?;
    let (value, examined) = oracle_impropriety_examined(&g)?;
    let doc = json!({
        "imp": value,
        "orderings_examined": examined,
    });
    emit_line(&pretty(&doc));
    Ok(())
}
