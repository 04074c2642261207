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

use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("edge {0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("coloring does not assign a color to edge {0}")]
    PartialColoring(Edge),
    #[error("disconnected")]
    Disconnected,
    #[error("too large for exact minor search ({n} vertices, limit {limit})")]
    MinorSearchTooLarge { n: usize, limit: usize },
    #[error("block with {size} vertices exceeds the recognition limit of {limit}")]
    RecognitionTooLarge { size: usize, limit: usize },
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("not pseudo-outerplanar")]
    NotPseudoOuterplanar,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("delta below four")]
    DeltaBelowFour,
    #[error("atomic: diagram has fewer than three vertices")]
    Atomic,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("no solution: {0}")]
    Infeasible(String),
    #[error("internal diagnostic: {0}")]
    Diagnostic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
