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


//! Property checks over the enumerated corpus, one JSON verdict per graph.

use std::collections::BTreeMap;

use clap::ValueEnum;
use pograph::canon::{canonical_key, is_isomorphic};
use pograph::classes::class_membership;
use pograph::colorings::{chromatic_index_diagram, po_edge_color, po_linear_arboricity};
use pograph::configurations::{find_configuration, ConfigId};
use pograph::decompose::{cover_outerplanar_plus_diagram, two_forests_plus_matching_diagram, ForestKind};
use pograph::graph::verify_edge_coloring;
use pograph::minors::is_outerplanar_by_minors;
use pograph::oracles::{brute_chromatic_index, brute_linear_arboricity, exists_k_forest_partition, po_corpus, SearchBudget};
use pograph::{Diagram, Edge, Graph, PartKind};
use rayon::prelude::*;
use serde::Serialize;

use crate::io::{Fail, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    All,
    Structure,
    Decompose,
    Coloring,
    Linear,
    Configurations,
    Classes,
}

const EACH: [Check; 6] = [
    Check::Structure,
    Check::Decompose,
    Check::Coloring,
    Check::Linear,
    Check::Configurations,
    Check::Classes,
];

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub key: String,
    pub n: usize,
    pub edges: Vec<Edge>,
    pub checks: BTreeMap<Check, bool>,
    pub failures: Vec<String>,
    pub ok: bool,
}

type Probe = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Probe {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn structure(g: &Graph) -> Probe {
    ensure(g.min_degree() <= 3, || "minimum degree above 3".into())?;
    let k = g.vertex_connectivity().map_err(|e| e.to_string())?;
    ensure(k < 3 || is_isomorphic(g, &Graph::complete(4)).unwrap_or(false), || {
        "3-connected but not K4".into()
    })
}

fn decompose(g: &Graph, d: &Diagram, budget: SearchBudget) -> Probe {
    for kind in [ForestKind::Linear, ForestKind::Star] {
        let dec = cover_outerplanar_plus_diagram(d, kind).map_err(|e| e.to_string())?;
        let problems = dec.verify(g);
        ensure(problems.is_empty(), || format!("{kind:?} cover: {problems:?}"))?;
        let rest = dec.part(PartKind::OuterplanarRemainder).ok_or("cover without remainder")?;
        let h = Graph::from_edge_set(g.n(), rest.edges.iter().copied());
        ensure(is_outerplanar_by_minors(&h).map_err(|e| e.to_string())?, || {
            format!("{kind:?} cover remainder has a minor")
        })?;
    }
    let dec = two_forests_plus_matching_diagram(d).map_err(|e| e.to_string())?;
    let problems = dec.verify(g);
    ensure(problems.is_empty(), || format!("two forests + matching: {problems:?}"))?;
    let three = exists_k_forest_partition(g, 3, budget).map_err(|e| e.to_string())?;
    ensure(three.is_some(), || "no partition into 3 forests".into())
}

fn coloring(g: &Graph, d: &Diagram, budget: SearchBudget) -> Probe {
    let delta = g.max_degree();
    let chi = brute_chromatic_index(g, budget).map_err(|e| e.to_string())?;
    let (k, c) = if delta >= 4 {
        let (c, t) = po_edge_color(d).map_err(|e| e.to_string())?;
        ensure(t.diagnostics().is_empty(), || "diagnostic step in trace".into())?;
        ensure(t.replay() == c.colors, || "trace replay differs".into())?;
        (c.k, c)
    } else {
        chromatic_index_diagram(d).map_err(|e| e.to_string())?
    };
    ensure(verify_edge_coloring(g, &c).map_err(|e| e.to_string())?.is_valid(), || "invalid colouring".into())?;
    ensure(k == chi, || format!("colouring uses {k}, oracle gives {chi}"))?;
    ensure(delta < 4 || k == delta, || format!("Δ={delta} but {k} colours"))
}

fn linear(g: &Graph, d: &Diagram, budget: SearchBudget) -> Probe {
    let (k, c, _) = po_linear_arboricity(d).map_err(|e| e.to_string())?;
    ensure(verify_edge_coloring(g, &c).map_err(|e| e.to_string())?.is_valid(), || "invalid tree colouring".into())?;
    let la = brute_linear_arboricity(g, budget).map_err(|e| e.to_string())?;
    ensure(k == la, || format!("{k} linear forests, oracle gives {la}"))?;
    ensure(g.max_degree() != 3 || k == 2, || "Δ=3 needs 2 linear forests".into())
}

fn configurations(g: &Graph, d: &Diagram) -> Probe {
    let delta = g.max_degree();
    let critical = g.min_degree() >= 2 && g.edges().iter().all(|e| g.degree(e.0) + g.degree(e.1) >= delta + 2);
    if !critical || delta < 4 {
        return Ok(());
    }
    let m = find_configuration(d, &ConfigId::COLORING).map_err(|e| e.to_string())?;
    ensure(matches!(&m, Some(m) if m.holds_in(g)), || "no colouring configuration".into())
}

fn classes(g: &Graph) -> Probe {
    let f = class_membership(g).map_err(|e| e.to_string())?;
    ensure((f.quasi_hamiltonian_po && f.k4_minor_free) == f.outerplanar, || {
        "quasi-hamiltonian and K4-minor-free differs from outerplanar".into()
    })?;
    if f.k23_minor_free {
        ensure(f.quasi_hamiltonian_po, || "K23-minor-free but not quasi-hamiltonian".into())?;
        if g.n() >= 3 && g.is_biconnected() {
            ensure(f.outerplanar || is_isomorphic(g, &Graph::complete(4)).unwrap_or(false), || {
                "2-connected K23-minor-free graph neither outerplanar nor K4".into()
            })?;
        }
    }
    Ok(())
}

fn verdict(g: &Graph, d: &Diagram, checks: &[Check], budget: SearchBudget) -> Outcome<Verdict> {
    let key = canonical_key(g)?;
    let mut out = BTreeMap::new();
    let mut failures = Vec::new();
    for &c in checks {
        let r = match c {
            Check::Structure => structure(g),
            Check::Decompose => decompose(g, d, budget),
            Check::Coloring => coloring(g, d, budget),
            Check::Linear => linear(g, d, budget),
            Check::Configurations => configurations(g, d),
            Check::Classes => classes(g),
            Check::All => unreachable!(),
        };
        out.insert(c, r.is_ok());
        if let Err(m) = r {
            failures.push(format!("{c:?}: {m}").to_lowercase());
        }
    }
    Ok(Verdict {
        key: format!("{}:{:x}", key.n, key.bits),
        n: g.n(),
        edges: g.edges().to_vec(),
        ok: failures.is_empty(),
        checks: out,
        failures,
    })
}

/// Verdicts for every PO class on 2..=n vertices, in canonical key order.
pub fn run(n: usize, checks: &[Check], budget: SearchBudget) -> Outcome<Vec<Verdict>> {
    if !(2..=7).contains(&n) {
        return Err(Fail::Input("corpus size must be between 2 and 7".into()));
    }
    let mut wanted: Vec<Check> = if checks.is_empty() || checks.contains(&Check::All) {
        EACH.to_vec()
    } else {
        checks.to_vec()
    };
    wanted.sort();
    wanted.dedup();
    let corpus = po_corpus(n)?;
    corpus.par_iter().map(|(g, d)| verdict(g, d, &wanted, budget)).collect()
}
