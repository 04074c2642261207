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

//! Membership of a graph in the nested classes around pseudo-outerplanarity.

use serde::{Deserialize, Serialize};

use crate::diagram::{closed_order, recognize};
use crate::error::Result;
use crate::graph::Graph;
use crate::minors::{has_minor, MinorPattern};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct ClassFlags {
    pub outerplanar: bool,
    pub k4_minor_free: bool,
    pub k23_minor_free: bool,
    pub pseudo_outerplanar: bool,
    pub quasi_hamiltonian_po: bool,
}

/// Computes every flag. Minor tests are subject to the minor-search guard
/// and the PO flags to the recognition guard.
pub fn class_membership(g: &Graph) -> Result<ClassFlags> {
    let k4_minor_free = !has_minor(g, MinorPattern::K4)?;
    let k23_minor_free = !has_minor(g, MinorPattern::K23)?;
    let pseudo_outerplanar = recognize(g)?.is_some();
    let quasi_hamiltonian_po = pseudo_outerplanar
        && g.blocks()
            .blocks
            .iter()
            .all(|b| b.vertices.len() <= 2 || closed_order(g, &b.vertices).is_some());
    Ok(ClassFlags {
        outerplanar: k4_minor_free && k23_minor_free,
        k4_minor_free,
        k23_minor_free,
        pseudo_outerplanar,
        quasi_hamiltonian_po,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn flags(o: bool, k4: bool, k23: bool, po: bool, qh: bool) -> ClassFlags {
        ClassFlags {
            outerplanar: o,
            k4_minor_free: k4,
            k23_minor_free: k23,
            pseudo_outerplanar: po,
            quasi_hamiltonian_po: qh,
        }
    }

    #[test]
    fn examples() {
        assert_eq!(
            class_membership(&Graph::complete(4)).unwrap(),
            flags(false, false, true, true, true)
        );
        assert_eq!(
            class_membership(&Graph::cycle(5)).unwrap(),
            flags(true, true, true, true, true)
        );
        assert_eq!(
            class_membership(&Graph::complete_bipartite(2, 3)).unwrap(),
            flags(false, true, false, true, false)
        );
    }

    #[test]
    fn k5_is_nothing() {
        assert_eq!(
            class_membership(&Graph::complete(5)).unwrap(),
            flags(false, false, false, false, false)
        );
    }
}
