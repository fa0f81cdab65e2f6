//! `tristoch` — exact computations on the polytopes of triply
//! line-stochastic and plane-stochastic n×n×n tensors.
//!
//! Every command is deterministic: the same arguments produce the same
//! bytes, regardless of worker count. Rationals are printed exactly as
//! `p/q`. Diagnostics go to standard error; the exit code classifies the
//! outcome (see [`EXIT_INVALID`] and friends).

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use tristoch_cli::fixtures;
use tristoch_cli::json::{
    BoundEntryDto, BoundsDto, CertificateDto, CheckDto, DecompositionDto, FaceDto, FacesDto,
    LatinDto, MatrixDto, ScaledSearchDto, StatsDto, TensorDto,
};
use tristoch_cli::parallel::enumerate_with_workers;
use tristoch_core::bounds::{bound_report, BoundValue};
use tristoch_core::latin::{count_latin, enumerate_latin_squares, LatinError, LatinSquare};
use tristoch_core::polytope::{
    build_system, face_dimension, polytope_stats, FaceDimension, Kind, PolytopeError,
};
use tristoch_core::rational::format_rational;
use tristoch_core::tensor::Tensor3;
use tristoch_core::vertex::{
    caratheodory_decompose, check_extreme, check_extreme_halfspace, search_scaled_extremes,
    ExtremeVerdict, VertexError, DEFAULT_BUDGET,
};

/// Arguments were malformed, a file was unreadable, or input failed to parse.
const EXIT_INVALID: u8 = 1;
/// The input tensor is not a point of the requested polytope.
const EXIT_INFEASIBLE: u8 = 2;
/// The candidate count exceeds the enumeration budget.
const EXIT_BUDGET: u8 = 3;
/// An internal invariant failed — always a bug, never a property of the input.
const EXIT_INTERNAL: u8 = 4;
/// `check` only: the tensor is feasible but not a vertex.
const EXIT_NOT_VERTEX: u8 = 10;

#[derive(Parser)]
#[command(
    name = "tristoch",
    version,
    about = "Exact vertex enumeration, certification, and bounds for line- and plane-stochastic tensor polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Every line (one free index) sums to 1.
    Line,
    /// Every plane (two free indices) sums to 1.
    Plane,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Line => Kind::Line,
            KindArg::Plane => Kind::Plane,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct OutputArgs {
    /// Output path, `-` for standard output.
    #[arg(long, default_value = "-")]
    output: String,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit the constraint matrix (text: sparse header + `row col` lines;
    /// csv: dense 0/1 rows; json: sparse).
    Build {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Output path, `-` for standard output.
        #[arg(long, default_value = "-")]
        output: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Report ambient dimension, matrix rank, polytope dimension, and the
    /// claimed facet count.
    Stats {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enumerate every vertex of the polytope.
    Vertices {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Worker threads for the basis search.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Refuse when C(n³, rank) exceeds this many candidate bases.
        #[arg(long, env = "TRISTOCH_BUDGET")]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Decide whether a tensor is a vertex, running both extremality tests
    /// and printing both verdicts with a certificate or witness.
    Check {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Tensor JSON path, `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a feasible tensor as a convex combination of vertices.
    Decompose {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Tensor JSON path, `-` for standard input.
        #[arg(long, default_value = "-")]
        input: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Count (and optionally list) the Latin squares of order n.
    Latin {
        #[arg(long)]
        n: usize,
        /// Include the squares themselves, not just the count.
        #[arg(long)]
        list: bool,
        /// Refuse orders above this cap.
        #[arg(long, default_value_t = tristoch_core::latin::DEFAULT_BUDGET)]
        budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Evaluate every vertex-count bound at n, optionally against the
    /// enumerated truth.
    Bounds {
        #[arg(long)]
        n: usize,
        /// Also enumerate both polytopes and flag violated bounds.
        #[arg(long)]
        truth: bool,
        /// Enumeration budget used when --truth is set.
        #[arg(long, env = "TRISTOCH_BUDGET")]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Find the line-polytope vertices whose 1/n copies are vertices of the
    /// plane polytope.
    ScaledSearch {
        #[arg(long)]
        n: usize,
        /// Budget for the underlying line enumeration.
        #[arg(long, env = "TRISTOCH_BUDGET")]
        budget: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dimensions of all n³ single-coordinate faces.
    Facets {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

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

    fn invalid(message: impl Into<String>) -> Self {
        Failure::new(EXIT_INVALID, message)
    }
}

impl From<VertexError> for Failure {
    fn from(e: VertexError) -> Self {
        let code = match &e {
            VertexError::ShapeMismatch { .. } => EXIT_INVALID,
            VertexError::NotFeasible => EXIT_INFEASIBLE,
            VertexError::BudgetExceeded { .. } => EXIT_BUDGET,
            VertexError::Internal(_) => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<LatinError> for Failure {
    fn from(e: LatinError) -> Self {
        let code = match &e {
            LatinError::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<PolytopeError> for Failure {
    fn from(e: PolytopeError) -> Self {
        let code = match &e {
            PolytopeError::FormulaMismatch { .. } => EXIT_INTERNAL,
            PolytopeError::IndexOutOfRange { .. } => EXIT_INVALID,
        };
        Failure::new(code, e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => i32::from(EXIT_INVALID),
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => process::exit(i32::from(code)),
        Err(f) => {
            eprintln!("error: {}", f.message);
            process::exit(i32::from(f.code));
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Cmd::Build {
            kind,
            n,
            output,
            format,
        } => cmd_build(kind.into(), n, &output, format),
        Cmd::Stats { kind, n, out } => cmd_stats(kind.into(), n, &out),
        Cmd::Vertices {
            kind,
            n,
            workers,
            budget,
            out,
        } => cmd_vertices(kind.into(), n, workers, budget, &out),
        Cmd::Check {
            kind,
            n,
            input,
            out,
        } => cmd_check(kind.into(), n, &input, &out),
        Cmd::Decompose {
            kind,
            n,
            input,
            out,
        } => cmd_decompose(kind.into(), n, &input, &out),
        Cmd::Latin {
            n,
            list,
            budget,
            out,
        } => cmd_latin(n, list, budget, &out),
        Cmd::Bounds {
            n,
            truth,
            budget,
            out,
        } => cmd_bounds(n, truth, budget, &out),
        Cmd::ScaledSearch { n, budget, out } => cmd_scaled_search(n, budget, &out),
        Cmd::Facets { kind, n, out } => cmd_facets(kind.into(), n, &out),
    }
}

fn ensure_n(n: usize) -> Result<(), Failure> {
    if n == 0 {
        return Err(Failure::invalid("n must be at least 1"));
    }
    Ok(())
}

fn write_output(path: &str, bytes: &[u8]) -> Result<(), Failure> {
    let result = if path == "-" {
        io::stdout().write_all(bytes)
    } else {
        fs::write(path, bytes)
    };
    result.map_err(|e| Failure::invalid(format!("cannot write {path}: {e}")))
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::invalid(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::invalid(format!("cannot read {path}: {e}")))
    }
}

fn read_tensor(path: &str) -> Result<Tensor3, Failure> {
    let text = read_input(path)?;
    let dto: TensorDto =
        serde_json::from_str(&text).map_err(|e| Failure::invalid(format!("tensor JSON: {e}")))?;
    dto.to_tensor().map_err(|e| Failure::invalid(e.to_string()))
}

fn pretty_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut bytes = serde_json::to_vec_pretty(value).expect("output DTOs always serialize");
    bytes.push(b'\n');
    bytes
}

fn tensor_csv_row(t: &Tensor3) -> String {
    t.entries()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

fn tensor_text_row(t: &Tensor3) -> String {
    t.entries()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_build(kind: Kind, n: usize, output: &str, format: Format) -> Result<u8, Failure> {
    ensure_n(n)?;
    let sys = build_system(kind, n);
    let m = sys.matrix();
    let bytes = match format {
        Format::Text => {
            let mut s = format!("{kind} {n} {} {}\n", m.rows(), m.cols());
            for (r, c) in sys.unit_entries() {
                let _ = writeln!(s, "{r} {c}");
            }
            s.into_bytes()
        }
        Format::Csv => {
            let mut s = String::new();
            for r in 0..m.rows() {
                let cells: Vec<String> =
                    (0..m.cols()).map(|c| format_rational(m.at(r, c))).collect();
                let _ = writeln!(s, "{}", cells.join(","));
            }
            s.into_bytes()
        }
        Format::Json => pretty_json(&MatrixDto {
            kind: kind.to_string(),
            n,
            rows: m.rows(),
            cols: m.cols(),
            units: sys.unit_entries(),
        }),
    };
    write_output(output, &bytes)?;
    Ok(0)
}

fn cmd_stats(kind: Kind, n: usize, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let sys = build_system(kind, n);
    let stats = polytope_stats(&sys)?;
    let bytes = match out.format {
        Format::Json => pretty_json(&StatsDto {
            kind: stats.kind.to_string(),
            n: stats.n,
            ambient_dim: stats.ambient_dim,
            matrix_rank: stats.matrix_rank,
            polytope_dim: stats.polytope_dim,
            facet_count_claimed: stats.facet_count_claimed,
        }),
        Format::Csv => format!(
            "kind,n,ambient_dim,matrix_rank,polytope_dim,facet_count_claimed\n{},{},{},{},{},{}\n",
            stats.kind, stats.n, stats.ambient_dim, stats.matrix_rank, stats.polytope_dim,
            stats.facet_count_claimed
        )
        .into_bytes(),
        Format::Text => format!(
            "kind {}\nn {}\nambient-dim {}\nmatrix-rank {}\npolytope-dim {}\nfacet-count-claimed {}\n",
            stats.kind, stats.n, stats.ambient_dim, stats.matrix_rank, stats.polytope_dim,
            stats.facet_count_claimed
        )
        .into_bytes(),
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn cmd_vertices(
    kind: Kind,
    n: usize,
    workers: usize,
    budget: Option<u64>,
    out: &OutputArgs,
) -> Result<u8, Failure> {
    ensure_n(n)?;
    if workers == 0 {
        return Err(Failure::invalid("--workers must be at least 1"));
    }
    let sys = build_system(kind, n);
    let report = enumerate_with_workers(&sys, budget.unwrap_or(DEFAULT_BUDGET), workers)?;
    let bytes = match out.format {
        Format::Json => fixtures::canonical_json(&report),
        Format::Csv => {
            let mut s = String::new();
            for v in &report.vertices {
                let _ = writeln!(s, "{}", tensor_csv_row(v));
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!(
                "kind {}\nn {}\ncount {}\nzero-one-count {}\n",
                report.kind, report.n, report.count, report.zero_one_count
            );
            s.push_str("support-size-histogram\n");
            for (size, count) in &report.support_size_histogram {
                let _ = writeln!(s, "  {size} {count}");
            }
            s.push_str("max-entry-histogram\n");
            for (entry, count) in &report.max_entry_histogram {
                let _ = writeln!(s, "  {} {count}", format_rational(entry));
            }
            s.push_str("vertices\n");
            for v in &report.vertices {
                let _ = writeln!(s, "{}", tensor_text_row(v));
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn cmd_check(kind: Kind, n: usize, input: &str, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let tensor = read_tensor(input)?;
    let sys = build_system(kind, n);
    let verdict = check_extreme(&sys, &tensor)?;
    let by_halfspace = check_extreme_halfspace(&sys, &tensor)?;
    if verdict.is_vertex() != by_halfspace {
        return Err(Failure::new(
            EXIT_INTERNAL,
            format!(
                "extremality tests disagree: support-independence says {}, active-halfspace rank says {}",
                verdict.is_vertex(),
                by_halfspace
            ),
        ));
    }
    let label = |is_vertex: bool| {
        if is_vertex {
            "vertex"
        } else {
            "not_vertex"
        }
    };
    let dto = CheckDto {
        kind: kind.to_string(),
        n,
        support_test: label(verdict.is_vertex()).to_string(),
        halfspace_test: label(by_halfspace).to_string(),
        certificate: match &verdict {
            ExtremeVerdict::Vertex(c) => Some(CertificateDto::from_certificate(c)),
            ExtremeVerdict::NotVertex(_) => None,
        },
        witness: match &verdict {
            ExtremeVerdict::Vertex(_) => None,
            ExtremeVerdict::NotVertex(w) => Some(tristoch_cli::json::WitnessDto::from_witness(w)),
        },
    };
    let bytes = match out.format {
        Format::Json => pretty_json(&dto),
        Format::Text => {
            let mut s = format!(
                "kind {}\nn {}\nsupport-test {}\nhalfspace-test {}\n",
                dto.kind, dto.n, dto.support_test, dto.halfspace_test
            );
            match &verdict {
                ExtremeVerdict::Vertex(c) => {
                    let _ = writeln!(
                        s,
                        "support {}",
                        c.support
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                    let _ = writeln!(
                        s,
                        "witness-columns {}",
                        c.witness_columns
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
                ExtremeVerdict::NotVertex(w) => {
                    let _ = writeln!(s, "epsilon {}", format_rational(&w.epsilon));
                    let _ = writeln!(
                        s,
                        "direction {}",
                        w.direction
                            .iter()
                            .map(format_rational)
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
            }
            s.into_bytes()
        }
        Format::Csv => {
            return Err(Failure::invalid(
                "csv output is not available for check; use json or text",
            ))
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(if verdict.is_vertex() {
        0
    } else {
        EXIT_NOT_VERTEX
    })
}

fn cmd_decompose(kind: Kind, n: usize, input: &str, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let tensor = read_tensor(input)?;
    let sys = build_system(kind, n);
    let decomposition = caratheodory_decompose(&sys, &tensor)?;
    let dto = DecompositionDto::from_decomposition(kind, n, &decomposition);
    let bytes = match out.format {
        Format::Json => pretty_json(&dto),
        Format::Csv => {
            let mut s = String::new();
            for (w, v) in &decomposition.terms {
                let _ = writeln!(s, "{},{}", format_rational(w), tensor_csv_row(v));
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!(
                "kind {}\nn {}\nterm-count {}\n",
                dto.kind, dto.n, dto.term_count
            );
            for (w, v) in &decomposition.terms {
                let _ = writeln!(s, "term {} {}", format_rational(w), tensor_text_row(v));
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn square_rows(sq: &LatinSquare) -> Vec<Vec<usize>> {
    let n = sq.n();
    (0..n)
        .map(|i| (0..n).map(|j| sq.get(i, j)).collect())
        .collect()
}

fn cmd_latin(n: usize, list: bool, budget: usize, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let count = count_latin(n, budget)?;
    let squares = if list {
        Some(enumerate_latin_squares(n, budget)?)
    } else {
        None
    };
    let bytes = match out.format {
        Format::Json => pretty_json(&LatinDto {
            n,
            count: count.to_string(),
            squares: squares
                .as_ref()
                .map(|sqs| sqs.iter().map(square_rows).collect()),
        }),
        Format::Csv => {
            let mut s = String::new();
            match &squares {
                None => {
                    let _ = writeln!(s, "n,count");
                    let _ = writeln!(s, "{n},{count}");
                }
                Some(sqs) => {
                    for sq in sqs {
                        let cells: Vec<String> = sq.grid().iter().map(|v| v.to_string()).collect();
                        let _ = writeln!(s, "{}", cells.join(","));
                    }
                }
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!("n {n}\ncount {count}\n");
            if let Some(sqs) = &squares {
                for sq in sqs {
                    s.push_str("square\n");
                    for row in square_rows(sq) {
                        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                        let _ = writeln!(s, "{}", cells.join(" "));
                    }
                }
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn bound_value_strings(value: &BoundValue) -> (String, String) {
    let exact = match value {
        BoundValue::Integer(v) => v.to_string(),
        BoundValue::Ratio { exact, .. } => format_rational(exact),
    };
    (exact, value.effective().to_string())
}

fn cmd_bounds(n: usize, truth: bool, budget: Option<u64>, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let report = bound_report(n, truth, budget.unwrap_or(DEFAULT_BUDGET))?;
    let entries: Vec<BoundEntryDto> = report
        .entries
        .iter()
        .map(|e| {
            let (exact, effective) = bound_value_strings(&e.value);
            BoundEntryDto {
                name: e.name.to_string(),
                target: e.target.to_string(),
                side: e.side.to_string(),
                exact,
                effective,
            }
        })
        .collect();
    let bytes = match out.format {
        Format::Json => pretty_json(&BoundsDto {
            n,
            entries,
            truth_line: report.truth_line.as_ref().map(|v| v.to_string()),
            truth_plane: report.truth_plane.as_ref().map(|v| v.to_string()),
            flags: report.flags.clone(),
        }),
        Format::Csv => {
            let mut s = String::from("name,target,side,exact,effective\n");
            for e in &entries {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    e.name, e.target, e.side, e.exact, e.effective
                );
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!("n {n}\n");
            for e in &entries {
                let _ = writeln!(
                    s,
                    "{} {} {} {}{}",
                    e.target,
                    e.side,
                    e.name,
                    e.exact,
                    if e.exact == e.effective {
                        String::new()
                    } else {
                        format!(" (effective {})", e.effective)
                    }
                );
            }
            if let Some(v) = &report.truth_line {
                let _ = writeln!(s, "truth line {v}");
            }
            if let Some(v) = &report.truth_plane {
                let _ = writeln!(s, "truth plane {v}");
            }
            for flag in &report.flags {
                let _ = writeln!(s, "flag {flag}");
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn cmd_scaled_search(n: usize, budget: Option<u64>, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let tensors = search_scaled_extremes(n, budget.unwrap_or(DEFAULT_BUDGET))?;
    let bytes = match out.format {
        Format::Json => pretty_json(&ScaledSearchDto {
            n,
            count: tensors.len(),
            tensors: tensors.iter().map(TensorDto::from_tensor).collect(),
        }),
        Format::Csv => {
            let mut s = String::new();
            for t in &tensors {
                let _ = writeln!(s, "{}", tensor_csv_row(t));
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!("n {n}\ncount {}\n", tensors.len());
            for t in &tensors {
                let _ = writeln!(s, "tensor {}", tensor_text_row(t));
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}

fn cmd_facets(kind: Kind, n: usize, out: &OutputArgs) -> Result<u8, Failure> {
    ensure_n(n)?;
    let sys = build_system(kind, n);
    let stats = polytope_stats(&sys)?;
    let mut faces = Vec::with_capacity(sys.ambient_dim());
    for index in 0..sys.ambient_dim() {
        let zero_set: BTreeSet<usize> = [index].into_iter().collect();
        let dimension = match face_dimension(&sys, &zero_set)? {
            FaceDimension::Dim(d) => Some(d),
            FaceDimension::Empty => None,
        };
        faces.push(FaceDto { index, dimension });
    }
    let facet_count = if stats.polytope_dim == 0 {
        0
    } else {
        faces
            .iter()
            .filter(|f| f.dimension == Some(stats.polytope_dim - 1))
            .count()
    };
    let bytes = match out.format {
        Format::Json => pretty_json(&FacesDto {
            kind: kind.to_string(),
            n,
            polytope_dim: stats.polytope_dim,
            facet_count,
            faces,
        }),
        Format::Csv => {
            let mut s = String::from("index,dimension\n");
            for f in &faces {
                match f.dimension {
                    Some(d) => {
                        let _ = writeln!(s, "{},{}", f.index, d);
                    }
                    None => {
                        let _ = writeln!(s, "{},empty", f.index);
                    }
                }
            }
            s.into_bytes()
        }
        Format::Text => {
            let mut s = format!(
                "kind {kind}\nn {n}\npolytope-dim {}\nfacet-count {facet_count}\n",
                stats.polytope_dim
            );
            for f in &faces {
                match f.dimension {
                    Some(d) => {
                        let _ = writeln!(s, "face {} {}", f.index, d);
                    }
                    None => {
                        let _ = writeln!(s, "face {} empty", f.index);
                    }
                }
            }
            s.into_bytes()
        }
    };
    write_output(&out.output, &bytes)?;
    Ok(0)
}
