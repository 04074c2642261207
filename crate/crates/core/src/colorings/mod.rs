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

//! Edge colourings of pseudo-outerplanar graphs.

mod exact;
mod linear;
mod proper;
mod trace;
mod vizing;

pub use exact::EXACT_NODE_LIMIT;
pub use linear::po_linear_arboricity;
pub use proper::po_edge_color;
pub use trace::{ColorTrace, FallbackReason, StepKind, TraceStep};
pub use vizing::vizing_color;

use crate::diagram::{recognize, Diagram};
use crate::error::{Error, Result};
use crate::graph::{ColoringMode, EdgeColoring, Graph};

/// Chromatic index of a pseudo-outerplanar graph, recognised first.
pub fn chromatic_index(g: &Graph) -> Result<(usize, EdgeColoring)> {
    let d = recognize(g)?.ok_or(Error::NotPseudoOuterplanar)?;
    chromatic_index_diagram(&d)
}

/// Δ colours for `Δ >= 4`; below that an exact search decides `Δ` against
/// `Δ + 1`.
pub fn chromatic_index_diagram(d: &Diagram) -> Result<(usize, EdgeColoring)> {
    let g = &d.graph;
    let delta = g.max_degree();
    if delta >= 4 {
        let (c, _) = po_edge_color(d)?;
        return Ok((delta, c));
    }
    if let Some(m) = exact::exact_proper(g, delta, EXACT_NODE_LIMIT)? {
        return Ok((delta, EdgeColoring::new(delta, ColoringMode::Proper, m)));
    }
    let c = vizing_color(g);
    Ok((
        delta + 1,
        EdgeColoring::new(delta + 1, ColoringMode::Proper, c.colors),
    ))
}
