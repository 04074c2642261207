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


//! `pograph` command line.

mod corpus;
mod io;

use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use pograph::classes::class_membership;
use pograph::colorings::{chromatic_index_diagram, po_edge_color, po_linear_arboricity, ColorTrace};
use pograph::configurations::{find_configuration, ConfigId};
use pograph::decompose::{cover_outerplanar_plus_diagram, two_forests_plus_matching_diagram, ForestKind};
use pograph::diagram::{maximal_completion, quasi_hamiltonize, to_dot, to_hamiltonian_diagram, to_svg};
use pograph::generators::{generate, Family, FamilySpec};
use pograph::graph::verify_edge_coloring;
use pograph::minors::is_outerplanar;
use pograph::oracles::{
    brute_chromatic_index, brute_linear_arboricity, exists_k_forest_partition, exists_removal_decomposition,
    RemovalKind, SearchBudget,
};
use pograph::{Decomposition, EdgeColoring};
use serde_json::json;

use crate::corpus::Check;
use crate::io::{read_text, Fail, Input, Outcome, Sink};

#[derive(Parser)]
#[command(name = "pograph", version, about = "Pseudo-outerplanar graph toolkit")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Input file (default: standard input)
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (default: standard output)
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Node limit for exhaustive searches
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,
    /// Wall-clock limit for exhaustive searches
    #[arg(long, global = true)]
    budget_seconds: Option<f64>,
    /// Write the colouring trace to this file
    #[arg(long, global = true, value_name = "PATH")]
    trace: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Skip re-verification of produced colourings and decompositions
    #[arg(long, global = true)]
    no_verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Pn,
    Qn,
    Gn,
    Mat12,
    Fig1,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    LinearForest,
    StarForest,
    TwoForestsMatching,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    ChromaticIndex,
    LinearArboricity,
    Removal,
    ForestPartition,
    Classes,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Matching,
    LinearForest,
    StarForest,
}

#[derive(Subcommand)]
enum Verb {
    /// Emit a diagram from a named family
    Generate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
    },
    /// Check a diagram and list its crossing pairs
    Validate,
    /// Find a diagram for a graph
    Recognize,
    /// Redraw with a given hamiltonian cycle as boundary, or add helper edges
    /// until every block is closed when no cycle is given
    Hamiltonize {
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<usize>>,
    },
    /// Add edges until no further edge keeps the diagram valid
    Maximalize,
    Decompose {
        #[arg(long, value_enum, default_value = "two-forests-matching")]
        mode: Mode,
    },
    /// Optimal proper edge colouring
    ColorEdges,
    /// Optimal partition into linear forests
    LinearArboricity,
    FindConfig {
        /// Allowed patterns (default: all)
        #[arg(long, value_delimiter = ',')]
        ids: Vec<String>,
    },
    /// Exhaustive oracles
    Oracle {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_enum, default_value = "matching")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        k: usize,
    },
    /// Check properties over every PO class up to n vertices (JSONL)
    Corpus {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
        check: Vec<Check>,
    },
    /// Draw a diagram as SVG or DOT
    Render,
}

impl Cli {
    fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(n) = self.budget_nodes {
            b = b.with_nodes(n);
        }
        if let Some(s) = self.budget_seconds {
            b = b.with_time(Duration::from_secs_f64(s));
        }
        b
    }

    fn input(&self) -> Outcome<Input> {
        Input::parse(&read_text(self.input.as_deref())?)
    }

    fn sink(&self) -> Sink<'_> {
        Sink { path: self.out.as_deref() }
    }

    fn write_trace(&self, t: &ColorTrace) -> Outcome<()> {
        if let Some(p) = &self.trace {
            Sink { path: Some(p) }.json(t)?;
        }
        Ok(())
    }

    fn check_coloring(&self, input: &Input, c: &EdgeColoring) -> Outcome<()> {
        if self.no_verify {
            return Ok(());
        }
        let rep = verify_edge_coloring(input.graph(), c)?;
        if rep.is_valid() {
            Ok(())
        } else {
            Err(Fail::Diagnostic(format!("colouring failed verification: {:?}", rep.violations)))
        }
    }

    fn check_decomposition(&self, input: &Input, d: &Decomposition) -> Outcome<()> {
        if self.no_verify {
            return Ok(());
        }
        let problems = d.verify(input.graph());
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Fail::Diagnostic(format!("decomposition failed verification: {problems:?}")))
        }
    }
}

fn parse_ids(ids: &[String]) -> Outcome<Vec<ConfigId>> {
    if ids.is_empty() {
        return Ok(ConfigId::ALL.to_vec());
    }
    ids.iter()
        .map(|s| {
            serde_json::from_value(json!(s.to_uppercase())).map_err(|_| Fail::Input(format!("unknown configuration {s}")))
        })
        .collect()
}

fn run(cli: &Cli) -> Outcome<()> {
    let out = cli.sink();
    match &cli.verb {
        Verb::Generate { family, n, density } => {
            let family = match family {
                FamilyArg::Pn => Family::Pn,
                FamilyArg::Qn => Family::Qn,
                FamilyArg::Gn => Family::Gn,
                FamilyArg::Mat12 => Family::Mat12,
                FamilyArg::Fig1 => Family::Fig1,
                FamilyArg::Random => Family::RandomPo,
            };
            let (g, d) = generate(FamilySpec {
                family,
                parameter: *n,
                seed: cli.seed,
                density: Some(*density),
            })?;
            eprintln!("generated n={} m={} crossings={}", g.n(), g.edge_count(), d.crossing_count());
            out.json(&d)
        }
        Verb::Validate => {
            let Input::Diagram(d) = cli.input()? else {
                return Err(Fail::Input("validate expects a diagram".into()));
            };
            let rep = d.validate();
            let pairs = if rep.is_valid() { d.crossing_pairs()? } else { Vec::new() };
            out.json(&json!({"valid": rep.is_valid(), "violations": rep.violations, "crossing_pairs": pairs}))?;
            if rep.is_valid() {
                eprintln!("valid, {} crossing pair(s)", pairs.len());
                Ok(())
            } else {
                Err(Fail::Infeasible(format!("{} violation(s)", rep.violations.len())))
            }
        }
        Verb::Recognize => {
            let d = Input::Graph(cli.input()?.graph().clone()).diagram()?;
            eprintln!("pseudo-outerplanar, {} block(s), {} crossing(s)", d.blocks.len(), d.crossing_count());
            out.json(&d)
        }
        Verb::Hamiltonize { cycle } => {
            let d = cli.input()?.diagram()?;
            match cycle {
                Some(c) => out.json(&to_hamiltonian_diagram(&d, c)?),
                None => {
                    let (h, helpers) = quasi_hamiltonize(&d);
                    eprintln!("{} helper edge(s)", helpers.len());
                    out.json(&json!({"diagram": h, "helper_edges": helpers}))
                }
            }
        }
        Verb::Maximalize => {
            let d = cli.input()?.diagram()?;
            let (h, added) = maximal_completion(&d);
            eprintln!("{} edge(s) added", added.len());
            out.json(&json!({"diagram": h, "added_edges": added}))
        }
        Verb::Decompose { mode } => {
            let d = cli.input()?.diagram()?;
            let dec = match mode {
                Mode::LinearForest => cover_outerplanar_plus_diagram(&d, ForestKind::Linear)?,
                Mode::StarForest => cover_outerplanar_plus_diagram(&d, ForestKind::Star)?,
                Mode::TwoForestsMatching => two_forests_plus_matching_diagram(&d)?,
            };
            cli.check_decomposition(&Input::Diagram(d), &dec)?;
            eprintln!("{} part(s)", dec.parts.len());
            out.json(&dec)
        }
        Verb::ColorEdges => {
            let d = cli.input()?.diagram()?;
            let (c, trace) = if d.graph.max_degree() >= 4 {
                po_edge_color(&d)?
            } else {
                (chromatic_index_diagram(&d)?.1, ColorTrace::default())
            };
            let input = Input::Diagram(d);
            cli.check_coloring(&input, &c)?;
            cli.write_trace(&trace)?;
            eprintln!("k={} (Δ={})", c.k, input.graph().max_degree());
            out.json(&c)?;
            let diag = trace.diagnostics();
            if diag.is_empty() {
                Ok(())
            } else {
                Err(Fail::Diagnostic(format!("{} step(s) fell back to exact search", diag.len())))
            }
        }
        Verb::LinearArboricity => {
            let d = cli.input()?.diagram()?;
            let (k, c, trace) = po_linear_arboricity(&d)?;
            let input = Input::Diagram(d);
            cli.check_coloring(&input, &c)?;
            cli.write_trace(&trace)?;
            eprintln!("k={k} (Δ={})", input.graph().max_degree());
            out.json(&c)
        }
        Verb::FindConfig { ids } => {
            let allowed = parse_ids(ids)?;
            let d = cli.input()?.diagram()?;
            match find_configuration(&d, &allowed)? {
                Some(m) => {
                    eprintln!("found {:?}", m.id);
                    out.json(&m)
                }
                None => Err(Fail::Infeasible("no configuration found".into())),
            }
        }
        Verb::Oracle { op, kind, k } => {
            let input = cli.input()?;
            let g = input.graph();
            let budget = cli.budget();
            match op {
                Op::ChromaticIndex => {
                    let v = brute_chromatic_index(g, budget)?;
                    eprintln!("chromatic index {v}");
                    out.json(&json!({"op": "chromatic-index", "value": v}))
                }
                Op::LinearArboricity => {
                    let v = brute_linear_arboricity(g, budget)?;
                    eprintln!("linear arboricity {v}");
                    out.json(&json!({"op": "linear-arboricity", "value": v}))
                }
                Op::Removal => {
                    let kind = match kind {
                        KindArg::Matching => RemovalKind::Matching,
                        KindArg::LinearForest => RemovalKind::LinearForest,
                        KindArg::StarForest => RemovalKind::StarForest,
                    };
                    match exists_removal_decomposition(g, kind, budget)? {
                        Some(s) => out.json(&json!({"op": "removal", "kind": kind, "removed": s})),
                        None => Err(Fail::Infeasible(format!(
                            "no {} removal leaves an outerplanar graph",
                            json!(kind).as_str().unwrap_or("")
                        ))),
                    }
                }
                Op::ForestPartition => match exists_k_forest_partition(g, *k, budget)? {
                    Some(dec) => {
                        cli.check_decomposition(&input, &dec)?;
                        out.json(&dec)
                    }
                    None => Err(Fail::Infeasible(format!("no partition into {k} forests"))),
                },
                Op::Classes => {
                    let f = class_membership(g)?;
                    out.json(&json!({"op": "classes", "flags": f, "outerplanar_direct": is_outerplanar(g)}))
                }
            }
        }
        Verb::Corpus { n, check } => {
            let verdicts = corpus::run(*n, check, cli.budget())?;
            let mut text = String::new();
            for v in &verdicts {
                text.push_str(&serde_json::to_string(v)?);
                text.push('\n');
            }
            out.text(&text)?;
            let bad = verdicts.iter().filter(|v| !v.ok).count();
            eprintln!("{} graph(s), {bad} failing", verdicts.len());
            if bad == 0 {
                Ok(())
            } else {
                Err(Fail::Diagnostic(format!("{bad} graph(s) failed a check")))
            }
        }
        Verb::Render => {
            let d = cli.input()?.diagram()?;
            match cli.format.unwrap_or(Format::Svg) {
                Format::Svg => out.text(&to_svg(&d)?),
                Format::Dot => out.text(&to_dot(&d)?),
                Format::Json => out.json(&d),
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            std::process::exit(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(f) = run(&cli) {
        eprintln!("error: {}", f.message());
        std::process::exit(f.code());
    }
}
