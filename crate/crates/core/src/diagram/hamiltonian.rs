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

//! Redrawing a block so that a given hamiltonian cycle is its boundary.

use super::{BlockOrder, Diagram};
use crate::error::{Error, Result};

/// Returns a diagram of the same graph in which `cycle` is the boundary of
/// the block containing it.
pub fn to_hamiltonian_diagram(d: &Diagram, cycle: &[usize]) -> Result<Diagram> {
    let rep = d.validate();
    if !rep.is_valid() {
        return Err(Error::InvalidDiagram(rep.violations.join("; ")));
    }
    let mut set: Vec<usize> = cycle.to_vec();
    set.sort_unstable();
    set.dedup();
    if set.len() != cycle.len() || cycle.len() < 3 {
        return Err(Error::Precondition(
            "cycle must list at least 3 distinct vertices".into(),
        ));
    }
    let b = d
        .blocks
        .iter()
        .position(|b| {
            let mut vs = b.order.clone();
            vs.sort_unstable();
            vs == set
        })
        .ok_or_else(|| Error::Precondition("cycle does not span a block".into()))?;
    let k = cycle.len();
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        if !d.graph.has_edge(u, v) {
            return Err(Error::Precondition(format!(
                "cycle step {u}-{v} is not an edge"
            )));
        }
    }
    // Fixing the boundary fixes the cyclic order, so the cycle itself is the
    // only candidate.
    let new_order = cycle.to_vec();
    let mut out = d.clone();
    out.blocks[b] = BlockOrder {
        order: new_order,
        closed: true,
    };
    let rep = out.validate();
    if !rep.is_valid() {
        return Err(Error::Diagnostic(format!(
            "hamiltonian redraw is invalid: {}",
            rep.violations.join("; ")
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn c4_drawn_crossed() {
        let d = Diagram::from_orders(Graph::cycle(4), vec![vec![0, 2, 1, 3]]);
        assert_eq!(d.crossing_count(), 1);
        let h = to_hamiltonian_diagram(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h.blocks[0].order, vec![0, 1, 2, 3]);
        assert_eq!(h.crossing_count(), 0);
        assert!(h.blocks[0].closed);
    }

    #[test]
    fn boundary_cycle_is_kept() {
        let d = Diagram::from_orders(Graph::complete(4), vec![vec![0, 1, 2, 3]]);
        let h = to_hamiltonian_diagram(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h, d);
    }

    #[test]
    fn rejects_non_cycles() {
        let d = Diagram::from_orders(Graph::cycle(4), vec![vec![0, 1, 2, 3]]);
        assert!(to_hamiltonian_diagram(&d, &[0, 2, 1, 3]).is_err());
        assert!(to_hamiltonian_diagram(&d, &[0, 1, 2]).is_err());
    }
}
