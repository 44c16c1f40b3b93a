//! `genus`: genus distributions, genus-polynomial analysis and catalog surveys.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 input/validation/I/O
//! error, 3 enumeration budget refused, 4 checkpoint does not match catalog.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use genus_core::embedding::{genus_of, DEFAULT_BUDGET};
use genus_core::graph::NamedGraph;
use genus_core::poly::{analyze_with, AnalysisError, AnalysisOptions, RootOptions};
use genus_core::survey::{survey_catalog, survey_file, SurveyTarget};
use genus_core::{
    generalized_petersen, genus_distribution_with, named_graph, parse_graph6, trace_faces,
    write_graph6, EmbeddingError, EnumerationOptions, Graph, GraphError, IntPoly, Report,
    ReportFormat, RotationIndex, RotationSpace, SurveyError, SurveyOptions,
};

#[derive(Parser, Debug)]
#[command(
    name = "genus",
    version,
    about = "Genus distributions and genus-polynomial analysis"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Relative residual tolerance for root finding.
    #[arg(long, global = true, default_value_t = 1e-12, value_parser = positive_f64)]
    tol: f64,
    /// Enumerate even when the rotation space exceeds the budget.
    #[arg(long, global = true)]
    force_budget: bool,
    /// Largest rotation space enumerated without --force-budget.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the genus distribution and genus polynomial of a graph.
    Genus(GraphSpec),
    /// Analyze a genus polynomial: roots, factorization, log-concavity.
    Analyze {
        /// Comma-separated coefficients, constant term first.
        #[arg(long, conflicts_with_all = ["g6", "gp", "named"])]
        coeffs: Option<String>,
        #[command(flatten)]
        graph: GraphSpec,
    },
    /// Classify every graph of a graph6 catalog.
    Survey(SurveyArgs),
    /// Trace the faces of one rotation system.
    Faces {
        #[command(flatten)]
        graph: GraphSpec,
        /// Rotation index in mixed-radix order.
        #[arg(long, default_value_t = 0)]
        index: u64,
    },
    /// Print graph6 lines for generalized Petersen or named graphs.
    Generate {
        #[command(flatten)]
        graph: GraphSpec,
        /// Every generalized Petersen graph G(n,k) with n up to this order.
        #[arg(long, conflicts_with_all = ["g6", "gp", "named"])]
        petersen_upto: Option<usize>,
        /// Every built-in named graph.
        #[arg(long, conflicts_with_all = ["g6", "gp", "named", "petersen_upto"])]
        all_named: bool,
    },
}

#[derive(Args, Debug, Default)]
struct GraphSpec {
    /// Graph in graph6 format.
    #[arg(long)]
    g6: Option<String>,
    /// Generalized Petersen graph G(n,k).
    #[arg(long, num_args = 2, value_names = ["N", "K"], conflicts_with = "g6")]
    gp: Option<Vec<usize>>,
    /// Built-in graph: G18, G20, G22, NR10, NR16.
    #[arg(long, conflicts_with_all = ["g6", "gp"])]
    named: Option<String>,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    /// graph6 catalog, one graph per line.
    catalog: PathBuf,
    /// Write per-graph records here (CSV unless --format json).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Checkpoint file, updated after every batch.
    #[arg(long, requires = "out")]
    checkpoint: Option<PathBuf>,
    /// Continue from the checkpoint.
    #[arg(long, requires = "checkpoint")]
    resume: bool,
    /// Skip unparsable or non-cubic lines instead of failing.
    #[arg(long)]
    lenient: bool,
    /// Lines per batch.
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    batch: u64,
    /// Stop after this many catalog lines.
    #[arg(long)]
    max_lines: Option<usize>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x > 0.0 && x.is_finite() => Ok(x),
        _ => Err(format!("`{s}` is not a positive number")),
    }
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(2, e.to_string())
    }
}

fn embedding_code(e: &EmbeddingError) -> u8 {
    match e {
        EmbeddingError::BudgetExceeded { .. } | EmbeddingError::IndexSpaceTooLarge { .. } => 3,
        EmbeddingError::Graph(_) | EmbeddingError::RangeOutOfBounds { .. } => 2,
        _ => 1,
    }
}

impl From<EmbeddingError> for Failure {
    fn from(e: EmbeddingError) -> Self {
        Failure::new(embedding_code(&e), e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        let code = if e == AnalysisError::Zero { 2 } else { 1 };
        Failure::new(code, e.to_string())
    }
}

impl From<SurveyError> for Failure {
    fn from(e: SurveyError) -> Self {
        let code = match &e {
            SurveyError::CheckpointMismatch { .. } => 4,
            SurveyError::Embedding { source, .. } => embedding_code(source),
            SurveyError::Analysis { .. } => 1,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(2, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

impl GraphSpec {
    fn is_given(&self) -> bool {
        self.g6.is_some() || self.gp.is_some() || self.named.is_some()
    }

    fn build(&self) -> Result<Graph, Failure> {
        if let Some(line) = &self.g6 {
            Ok(parse_graph6(line)?)
        } else if let Some(nk) = &self.gp {
            Ok(generalized_petersen(nk[0], nk[1])?)
        } else if let Some(name) = &self.named {
            Ok(named_graph(name)?)
        } else {
            Err(Failure::new(
                2,
                "no graph given (use --g6, --gp or --named)",
            ))
        }
    }
}

fn enumeration(common: &Common) -> EnumerationOptions {
    EnumerationOptions {
        budget: common.budget,
        force: common.force_budget,
        workers: common.workers.map(|w| w as usize),
    }
}

fn analysis(common: &Common) -> AnalysisOptions {
    AnalysisOptions {
        roots: RootOptions {
            tolerance: common.tol,
            ..RootOptions::default()
        },
        ..AnalysisOptions::default()
    }
}

fn distribution_of(graph: &Graph, common: &Common) -> Result<IntPoly, Failure> {
    let started = Instant::now();
    let dist = genus_distribution_with(graph, &enumeration(common))?;
    let secs = started.elapsed().as_secs_f64();
    let total = dist.total();
    eprintln!(
        "enumerated {total} rotation systems in {secs:.3}s ({:.0}/s)",
        total as f64 / secs.max(1e-9)
    );
    Ok(dist.to_polynomial())
}

fn coefficient_list(p: &IntPoly) -> String {
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_genus(spec: &GraphSpec, common: &Common) -> Outcome {
    let graph = spec.build()?;
    let poly = distribution_of(&graph, common)?;
    Ok(match common.format {
        Format::Json => {
            json!({
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
                "coefficients": poly.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "polynomial": poly.to_string(),
            })
            .to_string()
                + "\n"
        }
        Format::Csv => format!(
            "coefficients,polynomial\n{},{poly}\n",
            coefficient_list(&poly).replace(',', ";")
        ),
        Format::Text => format!(
            "coefficients: {}\npolynomial: {poly}\n",
            coefficient_list(&poly)
        ),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn signed(x: f64) -> String {
    if x < 0.0 {
        format!("- {:.12}", -x)
    } else {
        format!("+ {x:.12}")
    }
}

fn analysis_text(report: &Report) -> String {
    let mut s = String::new();
    let p = &report.polynomial;
    let _ = writeln!(s, "polynomial: {p}");
    let _ = writeln!(s, "coefficients: {}", coefficient_list(p));
    let _ = match report.lc_violation {
        None => writeln!(s, "log-concave: yes"),
        Some(k) => writeln!(s, "log-concave: NO (fails at index {k})"),
    };
    let _ = writeln!(s, "internal zeros: {}", yes_no(report.internal_zeros));
    let _ = writeln!(s, "real-rooted: {}", yes_no(report.real_rooted));
    let _ = writeln!(s, "distinct real roots: {}", report.real_root_count);
    let _ = writeln!(s, "roots:");
    for r in &report.roots {
        let z = &r.root;
        let mult = if z.multiplicity > 1 {
            format!("  multiplicity {}", z.multiplicity)
        } else {
            String::new()
        };
        if z.is_real() {
            let _ = writeln!(s, "  {:.12}{mult}", z.re);
        } else {
            let _ = writeln!(
                s,
                "  {:.12} ± {:.12}i  |Im|/sqrt(3) = {:.15}  {}{}{mult}",
                z.re,
                z.im,
                z.im_over_sqrt3(),
                r.cone.class.label(),
                if r.cone.boundary { " (boundary)" } else { "" },
            );
        }
    }
    let f = &report.factorization;
    let _ = write!(s, "factorization: {}", f.leading);
    for &r in &f.linear_roots {
        let _ = write!(s, " (x {})", signed(-r));
    }
    for &(b, c) in &f.quadratics {
        let _ = write!(s, " (x^2 {}x {})", signed(b), signed(c));
    }
    let _ = writeln!(s);
    for &(b, c) in &f.quadratics {
        let lc = report.non_lc_quadratics.contains(&(b, c));
        let _ = writeln!(
            s,
            "quadratic factor: b = {b:.12}, c = {c:.12}, log-concave: {}",
            yes_no(!lc)
        );
    }
    let _ = writeln!(s, "cone violations: {}", report.cone_violations.len());
    s
}

fn analysis_json(report: &Report) -> String {
    let roots: Vec<_> = report
        .roots
        .iter()
        .map(|r| {
            json!({
                "re": r.root.re,
                "im": r.root.im,
                "multiplicity": r.root.multiplicity,
                "im_over_sqrt3": r.root.im_over_sqrt3(),
                "class": r.cone.class.label(),
                "boundary": r.cone.boundary,
                "residual": r.root.residual,
            })
        })
        .collect();
    let f = &report.factorization;
    let quadratics: Vec<_> = f
        .quadratics
        .iter()
        .map(|&(b, c)| json!({"b": b, "c": c, "log_concave": !report.non_lc_quadratics.contains(&(b, c))}))
        .collect();
    json!({
        "polynomial": report.polynomial.to_string(),
        "coefficients": report.polynomial.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "log_concave": report.log_concave,
        "internal_zeros": report.internal_zeros,
        "real_rooted": report.real_rooted,
        "real_root_count": report.real_root_count,
        "roots": roots,
        "factorization": {
            "leading": f.leading.to_string(),
            "linear_roots": f.linear_roots,
            "quadratics": quadratics,
        },
        "cone_violation": report.has_cone_violation(),
        "non_lc_quadratic": report.has_non_lc_quadratic(),
    })
    .to_string()
        + "\n"
}

fn cmd_analyze(coeffs: Option<&str>, spec: &GraphSpec, common: &Common) -> Outcome {
    let poly: IntPoly = match coeffs {
        Some(text) => text
            .parse()
            .map_err(|e| Failure::new(2, format!("bad coefficients: {e}")))?,
        None if spec.is_given() => distribution_of(&spec.build()?, common)?,
        None => return Err(Failure::new(2, "give --coeffs or a graph")),
    };
    let report: Report = analyze_with(&poly, &analysis(common))?;
    Ok(match common.format {
        Format::Json => analysis_json(&report),
        _ => analysis_text(&report),
    })
}

fn cmd_faces(spec: &GraphSpec, index: u64, common: &Common) -> Outcome {
    let graph = spec.build()?;
    let space = RotationSpace::new(&graph);
    let rot = space.decode(RotationIndex(index))?;
    let faces = trace_faces(&graph, &rot);
    let genus = genus_of(&graph, &rot)?;
    let (v, e, f) = (graph.vertex_count(), graph.edge_count(), faces.face_count());
    let walk = |face: &[genus_core::Dart]| face.iter().map(ToString::to_string).collect::<Vec<_>>();
    Ok(match common.format {
        Format::Json => {
            json!({
                "index": index,
                "faces": faces.faces().iter().map(|face| {
                    json!({
                        "darts": face,
                        "vertices": face.iter().map(|&d| graph.vertex_of(d)).collect::<Vec<_>>(),
                    })
                }).collect::<Vec<_>>(),
                "V": v, "E": e, "F": f, "genus": genus,
            })
            .to_string()
                + "\n"
        }
        _ => {
            let mut s = String::new();
            for (i, face) in faces.faces().iter().enumerate() {
                let vertices: Vec<String> = face
                    .iter()
                    .map(|&d| graph.vertex_of(d).to_string())
                    .collect();
                let _ = writeln!(
                    s,
                    "face {i}: darts {}  vertices {}",
                    walk(face).join(" "),
                    vertices.join(" ")
                );
            }
            let _ = writeln!(s, "V = {v}, E = {e}, F = {f}, genus = {genus}");
            s
        }
    })
}

fn cmd_generate(spec: &GraphSpec, petersen_upto: Option<usize>, all_named: bool) -> Outcome {
    let mut out = String::new();
    let mut emit = |g: &Graph| -> Result<(), Failure> {
        out += &write_graph6(g)?;
        out.push('\n');
        Ok(())
    };
    if let Some(max) = petersen_upto {
        for n in 3..=max {
            for k in (1..).take_while(|&k| 2 * k < n) {
                emit(&generalized_petersen(n, k)?)?;
            }
        }
    } else if all_named {
        for g in NamedGraph::ALL {
            emit(&g.build())?;
        }
    } else {
        emit(&spec.build()?)?;
    }
    Ok(out)
}

fn cmd_survey(args: &SurveyArgs, common: &Common) -> Outcome {
    let format = match common.format {
        Format::Json => ReportFormat::JsonLines,
        _ => ReportFormat::Csv,
    };
    let opts = SurveyOptions {
        workers: common.workers.map(|w| w as usize),
        strict: !args.lenient,
        budget: common.budget,
        force_budget: common.force_budget,
        batch: args.batch as usize,
        max_lines: args.max_lines,
        analysis: analysis(common),
    };
    let started = Instant::now();
    let summary = match &args.out {
        Some(out) => survey_file(
            &SurveyTarget {
                catalog: &args.catalog,
                report: out,
                format,
                checkpoint: args.checkpoint.as_deref(),
                resume: args.resume,
            },
            &opts,
        )?,
        None => survey_catalog(&args.catalog, &opts)?.0,
    };
    let secs = started.elapsed().as_secs_f64();
    let graphs = summary.total_graphs();
    eprintln!(
        "surveyed {graphs} graphs in {secs:.3}s ({:.1} graphs/s)",
        graphs as f64 / secs.max(1e-9)
    );
    for (line, reason) in &summary.skipped {
        eprintln!("skipped line {line}: {reason}");
    }
    let mut s = summary.to_string();
    let failures = summary.log_concavity_failures();
    if failures > 0 {
        let _ = writeln!(
            s,
            "WARNING: {failures} genus polynomial(s) are NOT log-concave"
        );
    }
    Ok(s)
}

fn run(cli: &Cli) -> Outcome {
    let common = &cli.common;
    match &cli.command {
        Command::Genus(spec) => cmd_genus(spec, common),
        Command::Analyze { coeffs, graph } => cmd_analyze(coeffs.as_deref(), graph, common),
        Command::Survey(args) => cmd_survey(args, common),
        Command::Faces { graph, index } => cmd_faces(graph, *index, common),
        Command::Generate {
            graph,
            petersen_upto,
            all_named,
        } => cmd_generate(graph, *petersen_upto, *all_named),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
