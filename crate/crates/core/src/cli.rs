// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! The `atcert` command line.
//!
//! Exit codes: 0 success, 1 verification failure or engine error,
//! 2 usage error.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::choosability::{self, SearchMode};
use crate::circulations;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::graphs::{Graph, Orientation, TorusSpec};
use crate::guards::Guards;
use crate::polycoeff::{self, ColorSets, ExponentVector};
use crate::report::{ListWitness, RunReport};
use crate::selftest::{self, Level};
use crate::transfer::{self, CertificateKind, TraceCertificate, WitnessCertificate};

#[derive(Debug, Parser)]
#[command(name = "atcert", version, about = "Exact Alon-Tarsi numbers and graph-polynomial certificates")]
pub struct Cli {
    /// Emit the machine-readable report on stdout.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the parallel engines.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Edge guard for polynomial expansion.
    #[arg(long, global = true)]
    pub max_edges: Option<usize>,
    /// Largest color universe accepted by `choosable`.
    #[arg(long, global = true, default_value_t = 64)]
    pub max_universe: u32,
    /// Guard on canonical list assignments visited by the choosability search.
    #[arg(long, global = true)]
    pub max_assignments: Option<u128>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Alon-Tarsi number of the toroidal grid C_m □ C_n.
    AtTorus { m: usize, n: usize },
    /// One coefficient of the graph polynomial.
    Coeff {
        /// Edge-list file or a built-in name (C5, P4, K4, K2,3, T3x4).
        graph: String,
        #[arg(long, value_delimiter = ',', required = true)]
        exponents: Vec<u32>,
        /// Cross-check with the coefficient formula on integer sets {0..t_i}.
        #[arg(long)]
        formula: bool,
    },
    /// Expand the graph polynomial, optionally capping every exponent.
    Expand {
        graph: String,
        #[arg(long)]
        cap: Option<u32>,
        /// Print the table as JSON lines instead of a report.
        #[arg(long)]
        jsonl: bool,
    },
    /// tr M^k for the transfer matrix of the cycle C_m.
    Trace {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: u32,
    },
    /// Circulation counts of an orientation and the coefficient correspondence.
    Circ { orientation: String },
    /// Alon-Tarsi number of a small graph, with an orientation certificate.
    At { graph: String },
    /// Exhaustive k-choosability over a bounded color universe.
    Choosable {
        graph: String,
        #[arg(long)]
        k: u32,
        /// Defaults to k·n, which makes a positive verdict complete.
        #[arg(long)]
        universe: Option<u32>,
    },
    /// Smallest k for which the graph is k-choosable.
    ListChromatic {
        graph: String,
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// Run the built-in oracle-equivalence checks (fast or full).
    Selftest {
        #[arg(default_value = "fast")]
        level: String,
    },
}

/// A finished command: the report, its text rendering, and the exit code.
pub struct Outcome {
    pub report: RunReport,
    pub text: String,
    pub exit_code: i32,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_)
            | Error::Malformed { .. }
            | Error::VertexOutOfRange { .. }
            | Error::DuplicateEdge { .. }
            | Error::Loop { .. }
            | Error::Parse(_)
            | Error::SetSize { .. }
            | Error::NotInSet { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

/// Parses process arguments, runs, prints, and returns the exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: {e}");
        }
    }
    let json = cli.json;
    match execute(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = if json {
                writeln!(stdout, "{}", out.report.to_json())
            } else {
                write!(stdout, "{}", out.text)
            };
            if out.exit_code != 0 {
                eprintln!("verification failed");
            }
            out.exit_code
        }
        Err(code_and_msg) => {
            eprintln!("error: {}", code_and_msg.1);
            code_and_msg.0
        }
    }
}

fn guards_of(cli: &Cli) -> Guards {
    let mut g = Guards::default();
    if let Some(e) = cli.max_edges {
        g.max_expand_edges = e;
    }
    if let Some(a) = cli.max_assignments {
        g.max_assignments = a;
    }
    g
}

/// Runs one parsed command. `Err((exit_code, message))` on failure.
pub fn execute(cli: &Cli) -> std::result::Result<Outcome, (i32, String)> {
    let guards = guards_of(cli);
    let start = Instant::now();
    let result = dispatch(&cli.command, &guards, cli);
    match result {
        Ok((mut report, text, exit_code)) => {
            report.guards = guards;
            report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
            Ok(Outcome { report, text, exit_code })
        }
        Err(Failure::Usage(m)) => Err((2, m)),
        Err(Failure::Runtime(m)) => Err((1, m)),
    }
}

fn show(z: &EisensteinInt) -> String {
    if z.is_real() {
        z.a.to_string()
    } else {
        z.to_string()
    }
}

fn load_graph(spec: &str) -> Result<Graph> {
    if Path::new(spec).exists() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        Graph::parse_edge_list(&text)
    } else {
        Graph::named(spec).map_err(|_| Error::Parse(format!("{spec}: no such file or built-in graph name")))
    }
}

type Dispatched = std::result::Result<(RunReport, String, i32), Failure>;

fn dispatch(command: &Command, guards: &Guards, cli: &Cli) -> Dispatched {
    match command {
        Command::AtTorus { m, n } => at_torus(*m, *n, guards),
        Command::Coeff { graph, exponents, formula } => coeff(graph, exponents, *formula, guards),
        Command::Expand { graph, cap, jsonl } => expand(graph, *cap, *jsonl, guards),
        Command::Trace { m, k } => trace(*m, *k, guards),
        Command::Circ { orientation } => circ(orientation, guards),
        Command::At { graph } => at(graph, guards),
        Command::Choosable { graph, k, universe } => choosable(graph, *k, *universe, cli.max_universe, guards),
        Command::ListChromatic { graph, kmax } => list_chromatic(graph, *kmax, guards),
        Command::Selftest { level } => self_test(level),
    }
}

fn at_torus(m: usize, n: usize, guards: &Guards) -> Dispatched {
    let v = transfer::at_torus_with(m, n, guards)?;
    let how = match (&v.kind, &v.trace) {
        (CertificateKind::Trace, Some(t)) => {
            format!("trace certificate, tr M^{} = {}·σ, σ = {}", t.k, show(&t.trace), t.sigma)
        }
        (CertificateKind::TraceAndWitness, _) => "trace = 0; capped-3 witness attached".to_string(),
        (CertificateKind::TraceAndCitedBound, _) => "trace = 0; upper bound theorem-cited".to_string(),
        _ => "theorem-cited, not machine-verified".to_string(),
    };
    let mut text = format!("AT(T_{{{m},{n}}}) = {} ({how})\n", v.at);
    for c in &v.citations {
        text += &format!("  cited: {c}\n");
    }
    let mut report = RunReport::new(
        "at-torus",
        json!({"m": m, "n": n}),
        json!({"at": v.at, "kind": v.kind, "machine_verified": v.machine_verified, "citations": v.citations}),
    );
    if let Some(t) = &v.trace {
        report = report.with_certificate(t);
    }
    if let Some(w) = &v.witness {
        report = report.with_certificate(w);
    }
    Ok((report, text, 0))
}

fn coeff(graph: &str, exponents: &[u32], formula: bool, guards: &Guards) -> Dispatched {
    let g = load_graph(graph)?;
    let t = ExponentVector::new(exponents.to_vec());
    let c = polycoeff::coefficient_of_with(&g, &t, guards)?;
    let mut text = format!("coefficient of x^{:?} = {c}\n", t.as_slice());
    let mut result = json!({"exponents": t, "coefficient": c});
    let mut exit = 0;
    if formula {
        let sets = ColorSets::new(
            t.iter()
                .map(|&ti| (0..=ti as i64).map(EisensteinInt::from_int).collect())
                .collect(),
        )?;
        let f = polycoeff::coefficient_formula_with(&g, &t, &sets, guards)?;
        let agree = f == EisensteinInt::from_int(c);
        text += &format!("coefficient formula: {} ({})\n", show(&f), if agree { "agrees" } else { "DISAGREES" });
        result["formula"] = json!(f.to_string());
        result["agree"] = json!(agree);
        exit = if agree { 0 } else { 1 };
    }
    Ok((RunReport::new("coeff", json!({"graph": graph, "exponents": t}), result), text, exit))
}

fn expand(graph: &str, cap: Option<u32>, jsonl: bool, guards: &Guards) -> Dispatched {
    let g = load_graph(graph)?;
    let capv = cap.map(|c| ExponentVector::uniform(g.n(), c));
    let table = polycoeff::expand_with(&g, capv.as_ref(), guards)?;
    let lines = table.to_json_lines();
    let text = if jsonl {
        lines.clone()
    } else {
        let mut s = format!("{} nonzero monomials\n", table.len());
        for (t, c) in table.iter() {
            s += &format!("{:>8}  {:?}\n", c, t.as_slice());
        }
        s
    };
    let terms: Vec<serde_json::Value> = lines
        .lines()
        .map(|l| serde_json::from_str(l).expect("own output parses"))
        .collect();
    let report = RunReport::new(
        "expand",
        json!({"graph": graph, "cap": cap}),
        json!({"monomials": table.len(), "terms": terms}),
    );
    Ok((report, text, 0))
}

fn trace(m: usize, k: u32, guards: &Guards) -> Dispatched {
    TorusSpec::new(m, k as usize)?;
    let tc = transfer::torus_coefficient_with(m, k as usize, guards)?;
    let conclusion = if tc.trace.is_zero() { "AT=4" } else { "AT=3" };
    let cert = TraceCertificate {
        m,
        k: k as usize,
        dim: tc.dim,
        trace: tc.trace,
        antihermitian: tc.antihermitian,
        conclusion: conclusion.to_string(),
        sigma: tc.sigma,
    };
    let text = format!(
        "C_{m} layer: dim {}, antihermitian {}\ntr M^{k} = {}\ncoefficient of ∏x_i^2 in T_{{{m},{k}}} = σ·trace = {}·({}) = {}\n",
        tc.dim, tc.antihermitian, show(&tc.trace), tc.sigma, show(&tc.trace), show(&tc.coefficient)
    );
    let report = RunReport::new(
        "trace",
        json!({"m": m, "k": k}),
        json!({"trace": tc.trace.to_string(), "coefficient": tc.coefficient.to_string()}),
    )
    .with_certificate(&cert);
    Ok((report, text, 0))
}

fn circ(path: &str, guards: &Guards) -> Dispatched {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    let d = Orientation::parse(&text)?;
    let r = circulations::verify_at_correspondence_with(d.graph(), &d, guards)?;
    let out = format!(
        "indegrees {:?}\neven circulations {}, odd {}\ncoefficient {} = sign {} · ({} − {}): {}\n",
        r.indegrees.as_slice(),
        r.even,
        r.odd,
        r.coefficient,
        r.sign,
        r.even,
        r.odd,
        if r.holds { "holds" } else { "FAILS" }
    );
    let report = RunReport::new("circ", json!({"orientation": path}), json!({"holds": r.holds})).with_certificate(&r);
    Ok((report, out, if r.holds { 0 } else { 1 }))
}

fn at(graph: &str, guards: &Guards) -> Dispatched {
    let g = load_graph(graph)?;
    let r = polycoeff::alon_tarsi_number_with(&g, guards)?;
    let cert = circulations::at_upper_bound_certificate_with(&g, r.at, guards)?
        .map(WitnessCertificate::from)
        .ok_or_else(|| Error::Verification("no orientation realizes the witness".into()))?;
    let text = format!(
        "AT = {}\nwitness monomial {:?} with coefficient {}\norientation arcs {:?}\n",
        r.at,
        r.witness.as_slice(),
        r.coefficient,
        cert.arcs
    );
    let report = RunReport::new("at", json!({"graph": graph}), json!({"at": r.at})).with_certificate(&cert);
    Ok((report, text, 0))
}

fn choosable(graph: &str, k: u32, universe: Option<u32>, max_universe: u32, guards: &Guards) -> Dispatched {
    let g = load_graph(graph)?;
    if let Some(spec) = g.as_torus() {
        if guards.max_assignments == Guards::default().max_assignments {
            return Err(Failure::Usage(format!(
                "T_{{{},{}}} is a toroidal grid; exhaustive list-coloring search is far out of reach \
                 (raise --max-assignments to try anyway)",
                spec.m, spec.k
            )));
        }
    }
    let universe = universe.unwrap_or(k * g.n() as u32);
    if universe > max_universe {
        return Err(Failure::Usage(format!("universe {universe} exceeds --max-universe {max_universe}")));
    }
    let v = choosability::k_choosable_with(&g, k, universe, SearchMode::Reduced, guards)?;
    let mut text = format!("{}-choosability (universe {}): {}\n", k, universe, v.label());
    let mut report = RunReport::new(
        "choosable",
        json!({"graph": graph, "k": k, "universe": universe}),
        json!({"choosable": v.choosable, "complete": v.complete, "assignments_checked": v.assignments_checked}),
    );
    if let Some(w) = &v.witness {
        text += &format!("bad assignment: {:?}\n", w.lists());
        report = report.with_certificate(&ListWitness {
            lists: w.clone(),
            colorable: false,
        });
    }
    Ok((report, text, 0))
}

fn list_chromatic(graph: &str, kmax: u32, guards: &Guards) -> Dispatched {
    let g = load_graph(graph)?;
    if g.as_torus().is_some() {
        return Err(Failure::Usage("list chromatic numbers of toroidal grids are out of reach".into()));
    }
    let r = choosability::list_chromatic_number_with(&g, kmax, guards)?;
    let at = r.alon_tarsi.map_or("n/a".to_string(), |a| a.to_string());
    let text = format!(
        "χ = {}, χ_l = {}, AT = {}; sandwich {}\n",
        r.chromatic,
        r.chi_l,
        at,
        if r.sandwich_holds { "holds" } else { "FAILS" }
    );
    let mut report = RunReport::new(
        "list-chromatic",
        json!({"graph": graph, "kmax": kmax}),
        json!({"chi": r.chromatic, "chi_l": r.chi_l, "at": r.alon_tarsi, "sandwich_holds": r.sandwich_holds}),
    );
    for v in r.verdicts.iter().filter_map(|v| v.witness.as_ref()) {
        report = report.with_certificate(&ListWitness {
            lists: v.clone(),
            colorable: false,
        });
    }
    Ok((report, text, if r.sandwich_holds { 0 } else { 1 }))
}

fn self_test(level: &str) -> Dispatched {
    let level: Level = level.parse()?;
    let r = selftest::run(level);
    let mut text = String::new();
    for c in &r.checks {
        text += &format!(
            "[{}] {} ({:.0} ms): {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.millis,
            c.detail
        );
    }
    if let Some(f) = r.first_failure() {
        text += &format!("first failure: {}\n", f.name);
    }
    let passed = r.passed();
    let report = RunReport::new(
        "selftest",
        json!({"level": level}),
        serde_json::to_value(&r).expect("serializes"),
    );
    Ok((report, text, if passed { 0 } else { 1 }))
}

/// Lets tests and examples drive the CLI without a process.
pub fn run_args<I, T>(args: I) -> std::result::Result<Outcome, (i32, String)>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| (2, e.to_string()))?;
    execute(&cli)
}

