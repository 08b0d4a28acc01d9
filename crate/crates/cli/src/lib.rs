//! Command-line front door for the graph-energy library: load or generate
//! graphs, run any analysis, and emit tables.
//!
//! Output is deterministic (identical arguments and files give
//! byte-identical output) and comes in three shapes: aligned columns by
//! default, `--format-out csv` (header row, comma separator) and
//! `--format-out tsv`. Numeric cells are printed with a configurable
//! decimal count, default 4.
//!
//! Exit codes: 0 on success, 1 for input problems (argument errors,
//! unreadable files, malformed graphs, bad family specs), 2 for numeric
//! refusals (disconnected or edgeless input to spectral operations,
//! overflow, non-convergence).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_energy::{
    bound_chain_report, census_formulas, converge, energy_exact, expansion, fragment_first_term,
    generate, parse_edge_list, parse_graph6, spectral_radius, Error, Family, Graph,
    DEFAULT_CONVERGE_TOL, DEFAULT_POWER_TOL,
};

/// Failure carrying the process exit code: 1 for input errors, 2 for
/// numeric refusals.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn input_error(message: impl Into<String>) -> CliError {
    CliError {
        code: 1,
        message: message.into(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        let code = match e {
            Error::EdgeList { .. }
            | Error::Graph6(_)
            | Error::SelfLoop(_)
            | Error::EdgeOutOfRange { .. }
            | Error::TooManyVertices { .. }
            | Error::UnknownFamily(_)
            | Error::FamilyTooSmall { .. }
            | Error::FamilyFixedOrder { .. } => 1,
            _ => 2,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "graph-energy",
    version,
    about = "Graph energy, subgraph censuses, the even-power trace series, and energy bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum InFormat {
    Edgelist,
    Graph6,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Pretty,
    Csv,
    Tsv,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Path to a graph file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// On-disk format; inferred from the extension when omitted
    /// (.g6 means graph6, anything else an edge list).
    #[arg(long, value_enum)]
    format: Option<InFormat>,
    /// Built-in family instead of a file: cycle:N, path:N, star:N,
    /// complete:N, or dodecahedron.
    #[arg(long, value_name = "KIND[:N]")]
    gen: Option<String>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Output shape.
    #[arg(long = "format-out", value_enum, default_value = "pretty")]
    format_out: OutFormat,
    /// Decimal places for numeric cells.
    #[arg(long, default_value_t = 4)]
    decimals: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact graph energy: the sum of absolute adjacency eigenvalues.
    Energy {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Energy next to the whole upper-bound chain.
    Bounds {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact counts of the ten trace-relevant subgraphs.
    Census {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Partial sums of the even-power trace series and their convergence.
    Series {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
        /// Largest truncation depth K to print.
        #[arg(long, default_value_t = 16)]
        kmax: usize,
        /// Stop once |S_K - S_{K-1}| falls below this.
        #[arg(long, default_value_t = DEFAULT_CONVERGE_TOL)]
        tol: f64,
    },
    /// First-term bound on one fragment class's energy contribution.
    Fragment {
        /// Fragment weight in the relevant even trace.
        #[arg(long)]
        eta: u64,
        /// Series order at which the fragment first appears.
        #[arg(long)]
        k: u32,
        /// Spectral radius of the host graph; alternatively pass a graph.
        #[arg(long)]
        lambda1: Option<f64>,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Energy and bound chain for the cycles C_3 .. C_10.
    Table1 {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Energy and bound chain for cubic graphs: the built-in dodecahedron
    /// plus every graph file in a directory.
    Table2 {
        /// Directory of graph files (.g6 for graph6; .edges, .edgelist or
        /// .txt for edge lists). Rows are sorted by file name.
        #[arg(long)]
        dir: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Runs the CLI against `argv` (including the program name) and returns
/// the full stdout text. Errors carry the exit code.
pub fn run<I, T>(argv: I) -> Result<String, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e)
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) =>
        {
            return Ok(e.to_string())
        }
        Err(e) => return Err(input_error(e.to_string())),
    };
    match cli.command {
        Command::Energy { input, out } => {
            let (g, label) = load_graph(&input)?;
            let energy = energy_exact(&g)?;
            let rows = vec![vec![
                label,
                g.n().to_string(),
                g.m().to_string(),
                fmt(energy, out.decimals),
            ]];
            Ok(render(&["label", "n", "m", "energy"], &rows, &out))
        }
        Command::Bounds { input, out } => {
            let (g, label) = load_graph(&input)?;
            let rows = vec![chain_cells(&g, label, out.decimals)?];
            Ok(render(CHAIN_HEADER, &rows, &out))
        }
        Command::Census { input, out } => {
            let (g, _) = load_graph(&input)?;
            let c = census_formulas(&g)?;
            let pairs: [(&str, u64); 10] = [
                ("m", c.m),
                ("P3", c.p3),
                ("C3", c.c3),
                ("S13", c.s13),
                ("P4", c.p4),
                ("C4", c.c4),
                ("D4", c.d4),
                ("F", c.f),
                ("H", c.h),
                ("C6", c.c6),
            ];
            let mut s = String::new();
            match out.format_out {
                OutFormat::Pretty => {
                    for (k, v) in pairs {
                        writeln!(s, "{k:<3} = {v}").unwrap();
                    }
                }
                OutFormat::Csv | OutFormat::Tsv => {
                    let sep = if out.format_out == OutFormat::Csv { "," } else { "\t" };
                    let cells: Vec<String> =
                        pairs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(s, "{}", cells.join(sep)).unwrap();
                }
            }
            Ok(s)
        }
        Command::Series {
            input,
            out,
            kmax,
            tol,
        } => {
            let (g, _) = load_graph(&input)?;
            let exp = expansion(&g, kmax)?;
            let conv = converge(&g, tol, kmax)?;
            let rows: Vec<Vec<String>> = (0..=kmax)
                .map(|k| {
                    vec![
                        k.to_string(),
                        fmt(exp.b_traces[k], out.decimals),
                        fmt(exp.partial_sums[k], out.decimals),
                    ]
                })
                .collect();
            let mut s = render(&["k", "trace_b", "partial_sum"], &rows, &out);
            match out.format_out {
                OutFormat::Pretty => writeln!(
                    s,
                    "converged = {} (k_used = {}, estimate = {})",
                    conv.converged,
                    conv.k_used,
                    fmt(conv.estimate, out.decimals)
                )
                .unwrap(),
                OutFormat::Csv | OutFormat::Tsv => {
                    let sep = if out.format_out == OutFormat::Csv { "," } else { "\t" };
                    writeln!(
                        s,
                        "converged={}{sep}k_used={}{sep}estimate={}",
                        conv.converged,
                        conv.k_used,
                        fmt(conv.estimate, out.decimals)
                    )
                    .unwrap();
                }
            }
            Ok(s)
        }
        Command::Fragment {
            eta,
            k,
            lambda1,
            input,
            out,
        } => {
            let lam = match (lambda1, input.file.is_some() || input.gen.is_some()) {
                (Some(_), true) => {
                    return Err(input_error(
                        "pass either --lambda1 or a graph (--file/--gen), not both",
                    ))
                }
                (Some(l), false) => l,
                (None, true) => {
                    let (g, _) = load_graph(&input)?;
                    spectral_radius(&g, DEFAULT_POWER_TOL)?
                }
                (None, false) => {
                    return Err(input_error(
                        "fragment needs a spectral radius: --lambda1 or a graph (--file/--gen)",
                    ))
                }
            };
            let bound = fragment_first_term(eta, k, lam)?;
            let rows = vec![vec![
                eta.to_string(),
                k.to_string(),
                fmt(lam, out.decimals),
                fmt(bound, out.decimals),
            ]];
            Ok(render(&["eta", "k", "lambda1", "bound"], &rows, &out))
        }
        Command::Table1 { out } => {
            let mut rows = Vec::new();
            for n in 3..=10 {
                let g = generate(Family::Cycle, n)?;
                rows.push(chain_cells(&g, format!("cycle-{n}"), out.decimals)?);
            }
            Ok(render(CHAIN_HEADER, &rows, &out))
        }
        Command::Table2 { dir, out } => {
            let mut rows = Vec::new();
            let g = generate(Family::Dodecahedron, 20)?;
            rows.push(chain_cells(&g, "dodecahedron-20".into(), out.decimals)?);
            if let Some(dir) = dir {
                for (path, format) in graph_files(&dir)? {
                    let (g, label) = read_graph_file(&path, format)?;
                    rows.push(chain_cells(&g, label, out.decimals)?);
                }
            }
            Ok(render(CHAIN_HEADER, &rows, &out))
        }
    }
}

const CHAIN_HEADER: &[&str] = &[
    "label",
    "n",
    "m",
    "energy",
    "mcclelland",
    "bound1",
    "bound2",
    "bound3",
];

fn chain_cells(g: &Graph, label: String, decimals: usize) -> Result<Vec<String>, CliError> {
    let r = bound_chain_report(g)?;
    Ok(vec![
        label,
        r.n.to_string(),
        r.m.to_string(),
        fmt(r.energy, decimals),
        fmt(r.mcclelland, decimals),
        fmt(r.bound1, decimals),
        fmt(r.bound2, decimals),
        fmt(r.bound3, decimals),
    ])
}

fn fmt(v: f64, decimals: usize) -> String {
    format!("{v:.decimals$}")
}

fn render(header: &[&str], rows: &[Vec<String>], out: &OutputArgs) -> String {
    let mut s = String::new();
    match out.format_out {
        OutFormat::Csv | OutFormat::Tsv => {
            let sep = if out.format_out == OutFormat::Csv { "," } else { "\t" };
            writeln!(s, "{}", header.join(sep)).unwrap();
            for row in rows {
                writeln!(s, "{}", row.join(sep)).unwrap();
            }
        }
        OutFormat::Pretty => {
            let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.len());
                }
            }
            let line = |cells: Vec<&str>| -> String {
                let mut l = String::new();
                for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                    if i > 0 {
                        l.push_str("  ");
                    }
                    if i == 0 {
                        l.push_str(&format!("{cell:<w$}"));
                    } else {
                        l.push_str(&format!("{cell:>w$}"));
                    }
                }
                l
            };
            writeln!(s, "{}", line(header.to_vec())).unwrap();
            for row in rows {
                writeln!(s, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
            }
        }
    }
    s
}

fn load_graph(input: &InputArgs) -> Result<(Graph, String), CliError> {
    match (&input.file, &input.gen) {
        (Some(_), Some(_)) => Err(input_error("pass either --file or --gen, not both")),
        (None, None) => Err(input_error("a graph is required: --file <path> or --gen <kind[:n]>")),
        (Some(path), None) => {
            let format = input.format.unwrap_or_else(|| infer_format(path));
            read_graph_file(path, format)
        }
        (None, Some(spec)) => {
            let (family, n) = parse_gen(spec)?;
            let g = generate(family, n)?;
            Ok((g, format!("{}-{n}", family.name())))
        }
    }
}

fn infer_format(path: &Path) -> InFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => InFormat::Graph6,
        _ => InFormat::Edgelist,
    }
}

fn read_graph_file(path: &Path, format: InFormat) -> Result<(Graph, String), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", path.display())))?;
    let g = match format {
        InFormat::Edgelist => parse_edge_list(&text)?,
        InFormat::Graph6 => parse_graph6(text.trim())?,
    };
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("graph");
    let label: String = stem
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || "_.-".contains(c) {
                c
            } else {
                '-'
            }
        })
        .collect();
    Ok((g, label))
}

fn parse_gen(spec: &str) -> Result<(Family, usize), CliError> {
    let (name, size) = match spec.split_once(':') {
        Some((name, size)) => (name, Some(size)),
        None => (spec, None),
    };
    let family: Family = name
        .parse()
        .map_err(|e: Error| CliError::from(e))?;
    let n = match size {
        Some(s) => s
            .parse::<usize>()
            .map_err(|_| input_error(format!("bad size in --gen {spec:?}")))?,
        None => match family {
            Family::Dodecahedron => 20,
            _ => {
                return Err(input_error(format!(
                    "--gen {spec:?} needs a size, e.g. {name}:6"
                )))
            }
        },
    };
    Ok((family, n))
}

fn graph_files(dir: &Path) -> Result<Vec<(PathBuf, InFormat)>, CliError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| input_error(format!("cannot read directory {}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| input_error(format!("cannot list {}: {e}", dir.display())))?;
        let path = entry.path();
        if !path.is_file() {
            continue;
        }
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => files.push((path, InFormat::Graph6)),
            Some("edges" | "edgelist" | "txt") => files.push((path, InFormat::Edgelist)),
            _ => {}
        }
    }
    files.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(files)
}
