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


//! Reading inputs, writing outputs and mapping failures to exit codes.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use pograph::diagram::recognize;
use pograph::{Diagram, Error, Graph};
use serde::Serialize;

#[derive(Debug)]
pub enum Fail {
    Input(String),
    Infeasible(String),
    Diagnostic(String),
}

impl Fail {
    pub fn code(&self) -> i32 {
        match self {
            Fail::Input(_) => 1,
            Fail::Infeasible(_) => 2,
            Fail::Diagnostic(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Fail::Input(m) | Fail::Infeasible(m) | Fail::Diagnostic(m) => m,
        }
    }
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPseudoOuterplanar | Error::Infeasible(_) => Fail::Infeasible(e.to_string()),
            Error::BudgetExceeded | Error::Diagnostic(_) => Fail::Diagnostic(e.to_string()),
            _ => Fail::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Input(e.to_string())
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail::Input(format!("bad JSON: {e}"))
    }
}

pub type Outcome<T> = Result<T, Fail>;

pub fn read_text(path: Option<&Path>) -> Outcome<String> {
    let mut s = String::new();
    match path {
        Some(p) => s = fs::read_to_string(p).map_err(|e| Fail::Input(format!("{}: {e}", p.display())))?,
        None => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

/// A graph or a diagram, whichever the document holds.
pub enum Input {
    Graph(Graph),
    Diagram(Diagram),
}

impl Input {
    pub fn parse(text: &str) -> Outcome<Input> {
        let v: serde_json::Value = serde_json::from_str(text)?;
        if v.get("blocks").is_some() {
            Ok(Input::Diagram(serde_json::from_value(v)?))
        } else if v.get("n").is_some() {
            Ok(Input::Graph(serde_json::from_value(v)?))
        } else {
            Err(Fail::Input("expected a graph {n, edges} or a diagram {graph, blocks}".into()))
        }
    }

    pub fn graph(&self) -> &Graph {
        match self {
            Input::Graph(g) => g,
            Input::Diagram(d) => &d.graph,
        }
    }

    /// The given diagram after validation, or a recognized one.
    pub fn diagram(self) -> Outcome<Diagram> {
        match self {
            Input::Diagram(d) => {
                let rep = d.validate();
                if rep.is_valid() {
                    Ok(d)
                } else {
                    Err(Fail::Input(format!("invalid diagram: {}", rep.violations.join("; "))))
                }
            }
            Input::Graph(g) => recognize(&g)?.ok_or_else(|| Fail::Infeasible("not pseudo-outerplanar".into())),
        }
    }
}

pub struct Sink<'a> {
    pub path: Option<&'a Path>,
}

impl Sink<'_> {
    pub fn text(&self, s: &str) -> Outcome<()> {
        match self.path {
            Some(p) => fs::write(p, s).map_err(|e| Fail::Input(format!("{}: {e}", p.display()))),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(s.as_bytes())?;
                out.flush()?;
                Ok(())
            }
        }
    }

    pub fn json<T: Serialize>(&self, v: &T) -> Outcome<()> {
        let mut s = serde_json::to_string(v)?;
        s.push('\n');
        self.text(&s)
    }
}
