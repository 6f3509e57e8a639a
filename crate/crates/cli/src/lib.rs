//! Command-line front end for `balcolor`.
//!
//! [`run`] takes the argument list and standard streams explicitly so the
//! whole surface can be driven from tests. Exit codes: 0 success, 1 negative
//! verdict or refused operation, 2 usage or parse error.

pub mod cgf;
pub mod format;

use std::io::{Read, Write};
use std::str::FromStr;

use balcolor::balance::{
    beta_with, exists_coloring_with, imbalance, is_balanced, BalanceKind, Class, ClassReport, SolverOptions,
};
use balcolor::caterpillar::{
    caterpillar_graph, count_closed_form, count_matrix, count_recurrence, csb_caterpillar, enumerate_b_count,
    enumerate_csb_count, pb_caterpillar, CaterpillarSpec,
};
use balcolor::cdm::{cdm_equal, cdm_equal_rows_multiset, compute_cdm, first_violation, realize};
use balcolor::families::{
    classify_complete, classify_complete_multipartite, classify_cycle, classify_path, classify_wheel,
};
use balcolor::graph::{Coloring, ColoredGraph, Family, Graph, MultipartiteSpec};
use balcolor::reduction::{check_reduction_observations, red_blue_reduce};
use balcolor::switching::{apply_sequence, find_switch_sequence};
use balcolor::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use cgf::{parse_cgf, render_cgf, CgfDocument, ParseError};

#[derive(Parser, Debug)]
#[command(name = "balcolor", version, about = "Color degree matrices, color 2-switches and balanced colorings")]
struct Cli {
    /// Worker threads for the balance solver and the caterpillar
    /// enumerator. Output does not depend on this value.
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// CGF file, or `-` for standard input.
    file: Option<String>,
    /// Use a built-in graph instead of a file: path:N, cycle:N, wheel:N (rim
    /// size, hub last), complete:N, bipartite:A,B, multipartite:A,B,..,
    /// petersen, larson:K,L.
    #[arg(long, value_name = "SPEC", conflicts_with = "file")]
    family: Option<String>,
    /// Comma-separated colors for a --family graph; all 1 by default.
    #[arg(long, value_name = "LIST", requires = "family")]
    colors: Option<String>,
    /// Palette size for a --family graph; defaults to max(2, largest color).
    #[arg(long, value_name = "K", requires = "family")]
    palette: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountMethod {
    Recurrence,
    Matrix,
    ClosedForm,
    Brute,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the color degree matrix, one row per vertex.
    Cdm {
        #[command(flatten)]
        input: GraphInput,
        /// Print vertex colors as R, B, G (at most 3 colors).
        #[arg(long)]
        letters: bool,
    },
    /// Compare the color degree matrices of two graphs.
    CdmEqual {
        first: String,
        second: String,
        /// Compare rows as multisets instead of by vertex.
        #[arg(long)]
        multiset: bool,
    },
    /// Decide whether a color degree matrix file has a realization.
    Realizable { matrix: String },
    /// Build a colored graph realizing a color degree matrix file.
    Realize { matrix: String },
    /// Apply a list of switches (`u x w y` per line) to a graph.
    SwitchApply {
        graph: String,
        /// Switch file, or `-` for standard input.
        switches: String,
    },
    /// Print a color 2-switch sequence taking the first graph to the second.
    SwitchSeq { from: String, to: String },
    /// Check whether the graph's own coloring is balanced.
    BalanceCheck {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 1)]
        lambda: usize,
        /// open, closed, local or parity.
        #[arg(long)]
        kind: String,
        /// Also print per-vertex open and closed imbalance.
        #[arg(long)]
        report: bool,
    },
    /// Exact balance number with a witness coloring.
    Beta {
        #[command(flatten)]
        input: GraphInput,
        /// Number of colors.
        #[arg(short, default_value_t = 2)]
        k: usize,
        /// open, closed or local.
        #[arg(long)]
        kind: String,
        /// Largest accepted vertex count; 0 removes the limit.
        #[arg(long, default_value_t = balcolor::balance::DEFAULT_SIZE_LIMIT)]
        size_limit: usize,
    },
    /// Exhaustive membership in NBC, CNBC, OSB, CSB, SBV and PB.
    Classify {
        #[command(flatten)]
        input: GraphInput,
        /// Exit with 1 unless the graph is in this class.
        #[arg(long)]
        class: Option<String>,
    },
    /// Closed-form class verdicts for a named family.
    Family {
        /// path:N, cycle:N, wheel:N, complete:N, bipartite:A,B or
        /// multipartite:A,B,..
        spec: String,
        /// Exit with 1 unless the family graph is in this class.
        #[arg(long)]
        class: Option<String>,
        /// Print the family graph as CGF instead.
        #[arg(long)]
        graph: bool,
    },
    /// PB and CSB verdicts for a caterpillar given by its spine weights.
    Caterpillar {
        /// Comma-separated leaf counts along the spine, e.g. 0,2,1,0.
        weights: String,
        #[arg(long)]
        class: Option<String>,
        /// Print the caterpillar as CGF, colored by the CSB witness when there
        /// is one, else the PB witness.
        #[arg(long)]
        graph: bool,
    },
    /// Print `n A(n) B(n)` rows of the caterpillar counting sequences.
    Count {
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 10)]
        to: usize,
        #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
        method: CountMethod,
        /// Largest leaf count per spine vertex for --method brute.
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
    },
    /// Red-blue removal down to the reduced graph.
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        /// Also check the structural facts for complete multipartite input.
        #[arg(long)]
        check: bool,
    },
}

/// Failure of a command, mapped onto an exit code.
enum Failure {
    Usage(String),
    Negative(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Input(_) => Failure::Usage(e.to_string()),
            _ => Failure::Negative(e.to_string()),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.stdin_used {
                return Err(Failure::Usage("standard input can only be read once".into()));
            }
            self.stdin_used = true;
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
            return Ok(s);
        }
        std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }

    fn graph(&mut self, path: &str) -> Result<ColoredGraph, Failure> {
        let text = self.read(path)?;
        parse_cgf(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }

    fn input(&mut self, input: &GraphInput) -> Result<ColoredGraph, Failure> {
        if let Some(spec) = &input.family {
            let g = Family::from_str(spec)?.build()?;
            let colors = match &input.colors {
                Some(list) => parse_list(list)?,
                None => vec![1; g.n()],
            };
            if colors.len() != g.n() {
                return Err(Failure::Usage(format!("{} colors given for {} vertices", colors.len(), g.n())));
            }
            let k = input.palette.unwrap_or(2).max(colors.iter().copied().max().unwrap_or(1));
            return Ok(ColoredGraph::new(g, Coloring::new(colors, k)?)?);
        }
        match &input.file {
            Some(path) => self.graph(path),
            None => Err(Failure::Usage("give a CGF file, `-`, or --family".into())),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad number `{t}`"))))
        .collect()
}

fn parse_class(s: &Option<String>) -> Result<Option<Class>, Failure> {
    s.as_deref().map(Class::from_str).transpose().map_err(Failure::from)
}

fn render_report(report: &ClassReport, only: &[Class]) -> String {
    let mut out = String::new();
    for &class in only {
        match report.witness(class) {
            Some(w) => out.push_str(&format!("{class} yes {}\n", format::render_coloring(w))),
            None => out.push_str(&format!("{class} no\n")),
        }
    }
    out
}

/// Exit status for a report gated on an optional class.
fn gate(report: &ClassReport, class: Option<Class>) -> bool {
    class.is_none_or(|c| report.contains(c))
}

fn closed_form_report(family: &Family) -> Result<ClassReport, Failure> {
    Ok(match family {
        Family::Path(n) => classify_path(*n)?,
        Family::Cycle(n) => classify_cycle(*n)?,
        Family::Wheel(3) => classify_complete(4)?,
        Family::Wheel(n) => classify_wheel(*n)?,
        Family::Complete(n) => classify_complete(*n)?,
        Family::CompleteBipartite(a, b) => classify_complete_multipartite(&MultipartiteSpec::new(vec![*a, *b])?),
        Family::CompleteMultipartite(spec) => classify_complete_multipartite(spec),
        Family::Petersen | Family::Larson { .. } => {
            return Err(Failure::Usage(format!("no closed-form classifier for {family}; use classify")))
        }
    })
}

fn solver_report(g: &Graph, parallel: bool) -> Result<ClassReport, Failure> {
    let mut report = ClassReport::new();
    for class in Class::ALL {
        let (lambda, kind) = class.condition();
        report.set(class, exists_coloring_with(g, 2, lambda, kind, parallel)?);
    }
    Ok(report)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Worker pool for the parallel parts of a command.
struct Workers {
    pool: Option<rayon::ThreadPool>,
}

impl Workers {
    fn parallel(&self) -> bool {
        self.pool.as_ref().is_some_and(|p| p.current_num_threads() > 1)
    }

    fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match &self.pool {
            Some(p) => p.install(f),
            None => f(),
        }
    }
}

fn execute(cmd: Command, io: &mut Io, workers: &Workers) -> Outcome {
    let parallel = workers.parallel();
    match cmd {
        Command::Cdm { input, letters } => {
            let cg = io.input(&input)?;
            if letters && cg.k() > 3 {
                return Err(Failure::Usage("--letters supports at most 3 colors".into()));
            }
            Ok((format::render_cdm(&compute_cdm(&cg), letters), true))
        }
        Command::CdmEqual { first, second, multiset } => {
            let a = compute_cdm(&io.graph(&first)?);
            let b = compute_cdm(&io.graph(&second)?);
            let same = if multiset { cdm_equal_rows_multiset(&a, &b) } else { cdm_equal(&a, &b) };
            Ok((if same { "equal\n" } else { "different\n" }.to_string(), same))
        }
        Command::Realizable { matrix } => {
            let m = format::parse_cdm(&io.read(&matrix)?)?;
            Ok(match first_violation(&m) {
                None => ("realizable\n".to_string(), true),
                Some(v) => (format!("not realizable: {v}\n"), false),
            })
        }
        Command::Realize { matrix } => {
            let m = format::parse_cdm(&io.read(&matrix)?)?;
            Ok((render_cgf(&realize(&m)?), true))
        }
        Command::SwitchApply { graph, switches } => {
            let g = io.graph(&graph)?;
            let steps = format::parse_switches(&io.read(&switches)?)?;
            Ok((render_cgf(&apply_sequence(&g, &steps)?), true))
        }
        Command::SwitchSeq { from, to } => {
            let g = io.graph(&from)?;
            let h = io.graph(&to)?;
            Ok((format::render_switches(&find_switch_sequence(&g, &h)?), true))
        }
        Command::BalanceCheck { input, lambda, kind, report } => {
            let cg = io.input(&input)?;
            let kind = BalanceKind::from_str(&kind)?;
            let ok = is_balanced(&cg, lambda, kind)?;
            let mut out = format!("{}\n", if ok { "balanced" } else { "unbalanced" });
            if report {
                let r = imbalance(&cg);
                for v in 0..cg.n() {
                    out.push_str(&format!("vertex {} open {} closed {}\n", v + 1, r.open[v], r.closed[v]));
                }
            }
            Ok((out, ok))
        }
        Command::Beta { input, k, kind, size_limit } => {
            let cg = io.input(&input)?;
            let kind = BalanceKind::from_str(&kind)?;
            let opts = SolverOptions { parallel, size_limit: (size_limit > 0).then_some(size_limit) };
            let cert = workers.install(|| beta_with(cg.graph(), k, kind, &opts))?;
            Ok((format::render_certificate(&cert), true))
        }
        Command::Classify { input, class } => {
            let class = parse_class(&class)?;
            let cg = io.input(&input)?;
            let report = workers.install(|| solver_report(cg.graph(), parallel))?;
            Ok((render_report(&report, &Class::ALL), gate(&report, class)))
        }
        Command::Family { spec, class, graph } => {
            let class = parse_class(&class)?;
            let family = Family::from_str(&spec)?;
            if graph {
                let g = family.build()?;
                let n = g.n();
                return Ok((render_cgf(&ColoredGraph::new(g, Coloring::monochromatic(n, 2))?), true));
            }
            let report = closed_form_report(&family)?;
            Ok((render_report(&report, &Class::ALL), gate(&report, class)))
        }
        Command::Caterpillar { weights, class, graph } => {
            let class = parse_class(&class)?;
            if matches!(class, Some(c) if c != Class::Pb && c != Class::Csb) {
                return Err(Failure::Usage("caterpillar verdicts cover PB and CSB only".into()));
            }
            let spec = CaterpillarSpec::new(parse_list(&weights)?)?;
            let mut report = ClassReport::new();
            report.set(Class::Pb, pb_caterpillar(&spec));
            report.set(Class::Csb, csb_caterpillar(&spec));
            let ok = gate(&report, class);
            if graph {
                let g = caterpillar_graph(&spec);
                let n = g.n();
                let coloring = report
                    .witness(Class::Csb)
                    .or(report.witness(Class::Pb))
                    .cloned()
                    .unwrap_or_else(|| Coloring::monochromatic(n, 2));
                return Ok((render_cgf(&ColoredGraph::new(g, coloring)?), ok));
            }
            let mut out = format!("spine {}\nvertices {}\n", spec.spine_len(), spec.vertex_count());
            out.push_str(&render_report(&report, &[Class::Pb, Class::Csb]));
            Ok((out, ok))
        }
        Command::Count { from, to, method, max_weight } => {
            let mut out = String::new();
            for n in from..=to {
                let line = match method {
                    CountMethod::Recurrence => {
                        let p = count_recurrence(n)?;
                        format!("{n} {} {}", p.a, p.b)
                    }
                    CountMethod::Matrix => {
                        let p = count_matrix(n)?;
                        format!("{n} {} {}", p.a, p.b)
                    }
                    CountMethod::ClosedForm => format!("{n} {}", count_closed_form(n)?),
                    CountMethod::Brute => {
                        let (a, b) = workers.install(|| (enumerate_csb_count(n, max_weight), enumerate_b_count(n, max_weight)));
                        format!("{n} {} {}", a?, b?)
                    }
                };
                out.push_str(&line);
                out.push('\n');
            }
            Ok((out, true))
        }
        Command::Reduce { input, check } => {
            let cg = io.input(&input)?;
            let trace = red_blue_reduce(&cg)?;
            let mut out = format::render_trace(&trace);
            let mut ok = true;
            if check {
                let obs = check_reduction_observations(&cg)?;
                out.push_str(&format!(
                    "parts-monochromatic {}\nodd-parts-stay-odd {}\neven-parts-stay-even {}\nstatus-inherited {}\n",
                    yes(obs.parts_monochromatic),
                    yes(obs.odd_parts_stay_odd),
                    yes(obs.even_parts_stay_even),
                    yes(obs.status_inherited)
                ));
                ok = obs.all();
            }
            Ok((out, ok))
        }
    }
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io { stdin, stdin_used: false };
    let workers = match cli.threads {
        Some(0) => Err(Failure::Usage("--threads must be at least 1".into())),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map(|pool| Workers { pool: Some(pool) })
            .map_err(|e| Failure::Usage(format!("cannot start {t} threads: {e}"))),
        None => Ok(Workers { pool: None }),
    };
    let outcome = workers.and_then(|w| execute(cli.command, &mut io, &w));
    match outcome {
        Ok((text, ok)) => {
            let _ = stdout.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}
