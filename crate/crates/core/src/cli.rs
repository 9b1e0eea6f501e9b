//! The `copwin` command line.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::capture::{CaptureTable, CaptureValue};
use crate::game::{self, RobberPolicy};
use crate::graph::{parse_graph, write_graph, GenSpec, Graph};
use crate::ordinal::Ordinal;
use crate::symbolic::{self, FamilySpec};

#[derive(Debug, Parser)]
#[command(
    name = "copwin",
    about = "Capture relations and CR-ordinals for Cops and Robbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a generated graph in the text format.
    Generate {
        spec: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Cop-win flag, rho, eta(G) and theta of a graph.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Print the full eta table (rows: robber, columns: cop).
        #[arg(long)]
        matrix: bool,
        #[arg(long)]
        json: bool,
    },
    /// Play out a pursuit with an optimal cop.
    Simulate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        robber: String,
        #[arg(long)]
        cop: String,
        /// `optimal` or `random:<seed>`.
        #[arg(long, default_value = "optimal", value_parser = parse_policy)]
        robber_policy: RobberPolicy,
        #[arg(long, default_value_t = 100)]
        max_rounds: u32,
    },
    /// Brute-force game values, laid out like `analyze --matrix`.
    Oracle {
        #[command(flatten)]
        input: Input,
    },
    /// Classify an ordinal given in Cantor normal form.
    Classify { ordinal: String },
    /// Closed-form values for an infinite family.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },
}

#[derive(Debug, Args)]
pub struct Input {
    /// Graph file in the text format.
    #[arg(conflicts_with = "gen", required_unless_present = "gen")]
    pub file: Option<PathBuf>,
    /// Generator spec, e.g. `spider:1,2,3`.
    #[arg(long = "gen")]
    pub gen: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    S {
        #[arg(long)]
        alpha: String,
    },
    Tomega,
    Polat {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        j: u64,
    },
}

fn parse_policy(s: &str) -> Result<RobberPolicy, String> {
    if s == "optimal" {
        return Ok(RobberPolicy::Optimal);
    }
    s.strip_prefix("random:")
        .and_then(|seed| seed.parse().ok())
        .map(RobberPolicy::Random)
        .ok_or_else(|| format!("expected 'optimal' or 'random:<seed>', got '{s}'"))
}

/// A failure the user can fix by changing the input rather than the invocation.
#[derive(Debug)]
struct DomainError(String);

impl<E: std::error::Error> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

type CmdResult = Result<String, DomainError>;

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
///
/// Exit codes: 0 on success, 1 for domain errors, 2 for usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(DomainError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn execute(cmd: Command) -> CmdResult {
    match cmd {
        Command::Generate { spec, output } => {
            let spec: GenSpec = spec.parse()?;
            let text = format!("# {spec}\n{}", write_graph(&spec.build()?));
            match output {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| DomainError(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Analyze {
            input,
            matrix,
            json,
        } => {
            let g = load(&input)?;
            let t = CaptureTable::compute(&g)?;
            if json {
                Ok(format!(
                    "{}\n",
                    serde_json::to_string_pretty(&analysis_json(&t)).unwrap()
                ))
            } else {
                let mut text = summary(&t);
                if matrix {
                    text.push_str(&render_matrix(&g, |u, v| t.eta(u.into(), v.into())));
                }
                Ok(text)
            }
        }
        Command::Simulate {
            input,
            robber,
            cop,
            robber_policy,
            max_rounds,
        } => {
            let g = load(&input)?;
            let t = CaptureTable::compute(&g)?;
            let (u, v) = (g.require(&robber)?, g.require(&cop)?);
            let trace = game::simulate(&g, &t, u, v, max_rounds, robber_policy)?;
            Ok(trace.render(&g))
        }
        Command::Oracle { input } => {
            let g = load(&input)?;
            let table = game::brute_force_table(&g, game::default_max_value(&g))?;
            Ok(render_matrix(&g, |u, v| table[u][v]))
        }
        Command::Classify { ordinal } => {
            let a: Ordinal = ordinal.parse()?;
            let (limit, finite) = a.split();
            Ok(format!(
                "ordinal: {a}\nlimit: {}\nsuccessor: {}\nsplit: {limit} + {finite}\n\
                 lambda_T: {}\nupsilon: {}\n",
                a.is_limit(),
                a.is_successor(),
                symbolic::in_lambda_t(&a),
                symbolic::in_upsilon(&a),
            ))
        }
        Command::Family { family } => {
            let spec = match family {
                FamilyCmd::S { alpha } => FamilySpec::S(alpha.parse()?),
                FamilyCmd::Tomega => FamilySpec::TOmega,
                FamilyCmd::Polat { i, j } => FamilySpec::PolatGeneralized { i, j },
            };
            Ok(symbolic::family_report(&spec)?.to_string())
        }
    }
}

fn load(input: &Input) -> Result<Graph, DomainError> {
    match (&input.gen, &input.file) {
        (Some(spec), _) => Ok(spec.parse::<GenSpec>()?.build()?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| DomainError(format!("{}: {e}", path.display())))?;
            parse_graph(&text).map_err(|e| DomainError(format!("{}: {e}", path.display())))
        }
        (None, None) => Err(DomainError("no graph given".into())),
    }
}

fn value_text(v: CaptureValue) -> String {
    match v {
        CaptureValue::Finite(t) => t.to_string(),
        CaptureValue::Never => "-".into(),
    }
}

fn summary(t: &CaptureTable) -> String {
    let g = t.graph();
    let theta = match t.theta_labels() {
        Ok(labels) => format!("{{{}}}", labels.join(", ")),
        Err(_) => "-".into(),
    };
    format!(
        "vertices: {}\nedges: {}\ncopwin: {}\nrho: {}\neta: {}\ntheta: {theta}\n",
        g.vertex_count(),
        g.edge_count(),
        t.is_copwin(),
        t.rho(),
        value_text(t.eta_of_graph()),
    )
}

/// Rows are robber vertices, columns cop vertices, both in insertion order.
pub fn render_matrix(g: &Graph, cell: impl Fn(usize, usize) -> CaptureValue) -> String {
    let n = g.vertex_count();
    let mut rows: Vec<Vec<String>> = Vec::with_capacity(n + 1);
    let mut header = vec![String::from("r\\c")];
    header.extend(g.labels().iter().cloned());
    rows.push(header);
    for u in 0..n {
        let mut row = vec![g.labels()[u].clone()];
        row.extend((0..n).map(|v| value_text(cell(u, v))));
        rows.push(row);
    }
    let widths: Vec<usize> = (0..=n)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, &w)| format!("{s:>w$}"))
            .collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

fn json_value(v: CaptureValue) -> Value {
    match v {
        CaptureValue::Finite(t) => json!(t),
        CaptureValue::Never => Value::Null,
    }
}

fn analysis_json(t: &CaptureTable) -> Value {
    let g = t.graph();
    let matrix: Vec<Vec<Value>> = g
        .vertices()
        .map(|u| g.vertices().map(|v| json_value(t.eta(u, v))).collect())
        .collect();
    json!({
        "copwin": t.is_copwin(),
        "rho": t.rho(),
        "eta": json_value(t.eta_of_graph()),
        "eta_of_vertex": g.vertices().map(|v| json_value(t.eta_of_vertex(v))).collect::<Vec<_>>(),
        "theta": t.theta_labels().ok(),
        "vertices": g.labels(),
        "matrix": matrix,
    })
}
