//! Command-line front end. Every command prints JSON on standard output.

pub mod suites;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::config_weights::{weight, Gauge, WeightConfig};
use crate::deformation_complexes::{
    gamma0, gauge_transform, mac_bracket, quotient_project, residual_in_cover, ComplexId, Ideal, MacElement,
};
use crate::error::{Error, Result};
use crate::exact_linalg::{cohomology_report, differential};
use crate::graph_core::{enumerate, Budget, Colour, Constraints, Graph, GraphVector};
use crate::polyvector_rep::{phi, phi_two, Polyvector};
use suites::{run_suites, Caps};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "graphcx", version, about = "Graph complexes, deformation complexes and polyvector representations")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct GlobalOpts {
    #[arg(long, global = true)]
    pub max_vertices: Option<usize>,
    #[arg(long, global = true)]
    pub max_edges: Option<usize>,
    #[arg(long, global = true)]
    pub hbar_order: Option<usize>,
    #[arg(long, global = true)]
    pub samples: Option<u64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Indented JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Include wall-clock timings in suite reports (breaks byte-identical output).
    #[arg(long, global = true)]
    pub timings: bool,
    /// TOML file with max_vertices, max_edges, hbar_order, samples, seed; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List canonical graph classes of one bigrade.
    Enumerate {
        #[arg(long, default_value = "one")]
        colour: String,
        #[arg(long, default_value_t = 0)]
        whites: usize,
        /// Black vertices (all vertices for one colour).
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        /// Connected and at least trivalent.
        #[arg(long)]
        gc2: bool,
        /// Blacks at least trivalent, every component touches a white.
        #[arg(long)]
        graphs: bool,
        #[arg(long)]
        min_valence: Option<usize>,
    },
    /// Differential of an element in a named complex.
    Delta {
        #[arg(long)]
        complex: ComplexId,
        #[arg(long)]
        graph: String,
    },
    /// Lie bracket of two elements.
    Bracket {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Cohomology dimensions of a complex in one degree.
    Cohomology {
        #[arg(long)]
        complex: ComplexId,
        #[arg(long)]
        degree: i64,
    },
    /// Run a named verification suite, or `all`.
    Verify { suite: String },
    /// Monte Carlo configuration-space weight of a two-coloured graph.
    Weight {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "auto")]
        gauge: String,
    },
    /// Evaluate the operator of a graph on polyvector fields.
    Represent {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        dim: usize,
        /// One per vertex (one colour) or per white vertex (two colours).
        #[arg(long = "arg")]
        args: Vec<String>,
        /// Decoration of every black vertex of a two-coloured graph.
        #[arg(long)]
        black: Option<String>,
    },
    /// Gauge action of a degree-0 element on an MC element.
    Gauge {
        /// Degree-0 generator.
        #[arg(long)]
        h: String,
        /// MC element; defaults to Gamma0.
        #[arg(long)]
        mc: Option<String>,
    },
    /// Reduce an element modulo an ideal.
    Project {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value = "I_bb_prime")]
        ideal: Ideal,
    },
}

#[derive(Deserialize, Default, Debug)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    max_vertices: Option<usize>,
    max_edges: Option<usize>,
    hbar_order: Option<usize>,
    samples: Option<u64>,
    seed: Option<u64>,
}

impl GlobalOpts {
    fn caps(&self) -> Result<Caps> {
        let file = match &self.config {
            Some(p) => {
                let text = std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{}: {e}", p.display())))?;
                toml::from_str::<FileConfig>(&text).map_err(|e| Error::Parse(format!("config: {e}")))?
            }
            None => FileConfig::default(),
        };
        Ok(Caps {
            max_vertices: self.max_vertices.or(file.max_vertices),
            max_edges: self.max_edges.or(file.max_edges),
            hbar_order: self.hbar_order.or(file.hbar_order),
            samples: self.samples.or(file.samples),
            seed: self.seed.or(file.seed),
        })
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Reads an element: a canonical text key, a JSON term or array of terms, or a cone element
/// `{"def": …, "gc": …}`.
pub fn parse_element(text: &str) -> Result<MacElement> {
    let t = text.trim();
    if t.starts_with('{') || t.starts_with('[') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("json: {e}")))?;
        if v.get("def").is_some() || v.get("gc").is_some() {
            return MacElement::from_json(&v);
        }
        return split(GraphVector::from_json(&v)?);
    }
    split(GraphVector::from_graph(&Graph::from_key(t)?)?)
}

fn split(v: GraphVector) -> Result<MacElement> {
    let def = v.filter(|g| g.colour != Colour::One);
    let gc = v.filter(|g| g.colour == Colour::One);
    MacElement::new(def, gc)
}

fn single_graph(text: &str) -> Result<Graph> {
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("json: {e}")))?;
        return Ok(Graph::from_json(&v)?.0);
    }
    Graph::from_key(t)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceCap(_) | Error::NoPreimage(_) | Error::IllegalComposition(_) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("json")
    } else {
        serde_json::to_string(v).expect("json")
    }
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: e.to_string() }
            } else {
                Outcome { code: EXIT_OK, stdout: e.to_string(), stderr: String::new() }
            };
        }
    };
    let pretty = cli.global.pretty;
    match execute(&cli) {
        Ok((v, ok)) => Outcome {
            code: if ok { EXIT_OK } else { EXIT_CHECK_FAILED },
            stdout: render(&v, pretty),
            stderr: String::new(),
        },
        Err(e) => {
            let v = json!({"error": e.to_string()});
            Outcome { code: exit_code(&e), stdout: render(&v, pretty), stderr: e.to_string() }
        }
    }
}

fn budget(caps: &Caps) -> Budget {
    match caps.max_vertices {
        Some(v) => Budget { max_vertices: v, ..Budget::default() },
        None => Budget::default(),
    }
}

fn execute(cli: &Cli) -> Result<(Value, bool)> {
    let caps = cli.global.caps()?;
    match &cli.command {
        Command::Enumerate { colour, whites, vertices, edges, gc2, graphs, min_valence } => {
            let colour = Colour::from_tag(colour)?;
            let mut cons = if *gc2 {
                Constraints::GC2
            } else if *graphs {
                Constraints { min_black_valence: 3, connected: false, no_black_components: true }
            } else {
                Constraints::NONE
            };
            if let Some(v) = min_valence {
                cons.min_black_valence = *v;
            }
            if caps.max_edges.is_some_and(|l| *edges > l) {
                return Err(Error::ResourceCap(format!("{edges} edges exceeds cap")));
            }
            let list = enumerate(colour, *whites, *vertices, *edges, cons, budget(&caps))?;
            let keys: Vec<String> = list.iter().map(Graph::key).collect();
            Ok((json!({"count": keys.len(), "graphs": keys}), true))
        }
        Command::Delta { complex, graph } => {
            let x = parse_element(graph)?;
            Ok((json!({"complex": complex.name(), "input": x.to_json(), "image": differential(*complex, &x).to_json()}), true))
        }
        Command::Bracket { a, b } => {
            let (x, y) = (parse_element(a)?, parse_element(b)?);
            Ok((json!({"bracket": mac_bracket(&x, &y).to_json()}), true))
        }
        Command::Cohomology { complex, degree } => {
            let cap = caps.max_vertices.unwrap_or(5);
            let r = cohomology_report(*complex, *degree, cap, budget(&caps))?;
            Ok((serde_json::to_value(r).expect("json"), true))
        }
        Command::Verify { suite } => {
            let reports = run_suites(suite, &caps, cli.global.timings)?;
            let ok = reports.iter().all(|r| r.passed);
            let v = if suite == "all" {
                json!({"passed": ok, "suites": reports})
            } else {
                serde_json::to_value(&reports[0]).expect("json")
            };
            Ok((v, ok))
        }
        Command::Weight { graph, gauge } => {
            let g = single_graph(graph)?;
            let cfg = WeightConfig {
                samples: caps.samples.unwrap_or(1_000_000),
                seed: caps.seed.unwrap_or(1),
                gauge: gauge.parse::<Gauge>()?,
                ..WeightConfig::default()
            };
            Ok((serde_json::to_value(weight(&g, &cfg)?).expect("json"), true))
        }
        Command::Represent { graph, dim, args, black } => {
            let g = single_graph(graph)?;
            let args: Vec<Polyvector> = args.iter().map(|a| Polyvector::parse(a, *dim)).collect::<Result<_>>()?;
            let value = if g.colour == Colour::One {
                phi(&g, &args)?
            } else {
                let pi = match black {
                    Some(b) => Polyvector::parse(b, *dim)?,
                    None if g.n() == 0 => Polyvector::zero(*dim),
                    None => return Err(Error::Invalid("--black is required for graphs with black vertices".into())),
                };
                phi_two(&g, &pi, &args)?
            };
            Ok((json!({"graph": g.key(), "dim": dim, "value": value.to_string()}), true))
        }
        Command::Gauge { h, mc } => {
            let h = parse_element(h)?;
            let mc = match mc {
                Some(m) => parse_element(m)?,
                None => gamma0(),
            };
            let trunc = caps.max_vertices.unwrap_or(6);
            let x = gauge_transform(&mc, &h, trunc)?;
            let residual = residual_in_cover(&x, trunc);
            Ok((json!({"truncation": trunc, "element": x.to_json(), "residual": residual.to_json()}), residual.is_zero()))
        }
        Command::Project { graph, ideal } => {
            let x = parse_element(graph)?;
            if !x.gc.is_zero() {
                return Err(Error::ColourMismatch("ideals live in the two-coloured part".into()));
            }
            let bg = x.def.bigrades();
            let [bigrade] = bg.as_slice() else {
                return Err(Error::Invalid(format!("element must be homogeneous, found bigrades {bg:?}")));
            };
            let p = quotient_project(&x.def, *ideal, *bigrade)?;
            Ok((
                json!({
                    "bigrade": bigrade,
                    "ideal": ideal.name(),
                    "ideal_dim": p.ideal_dim,
                    "member": p.member,
                    "representative": p.representative.to_json(),
                }),
                true,
            ))
        }
    }
}
