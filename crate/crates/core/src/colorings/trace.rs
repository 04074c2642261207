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

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::configurations::ConfigId;
use crate::error::{Error, Result};
use crate::graph::Edge;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    LowEdgeDegree,
    BlockSplit,
    Config(ConfigId),
    VizingBase,
    ExactFallback,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::LowEdgeDegree => f.write_str("low-edge-degree"),
            StepKind::BlockSplit => f.write_str("block-split"),
            StepKind::Config(id) => write!(f, "{id}"),
            StepKind::VizingBase => f.write_str("vizing-base"),
            StepKind::ExactFallback => f.write_str("exact-fallback"),
        }
    }
}

impl FromStr for StepKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "low-edge-degree" => StepKind::LowEdgeDegree,
            "block-split" => StepKind::BlockSplit,
            "vizing-base" => StepKind::VizingBase,
            "exact-fallback" => StepKind::ExactFallback,
            other => StepKind::Config(other.parse()?),
        })
    }
}

impl Serialize for StepKind {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for StepKind {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Why an exact search ran instead of a reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FallbackReason {
    /// No reduction applied; indicates a gap in the configuration catalog.
    ConfigurationMiss,
    /// A reduction applied but its extension failed.
    ExtensionFailed,
    /// The instance is one of the small exceptional graphs handled directly.
    SmallException,
    /// The branch is exact by design.
    ExactBranch,
}

/// One step of the construction. Replay applies `unset` then `set` to the
/// running colour map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: StepKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub set: Vec<(Edge, usize)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub unset: Vec<Edge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fallback: Option<FallbackReason>,
    /// Set when the tabulated extension was replaced by a local search.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub repaired: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorTrace {
    pub steps: Vec<TraceStep>,
}

impl ColorTrace {
    pub fn replay(&self) -> BTreeMap<Edge, usize> {
        let mut m = BTreeMap::new();
        for s in &self.steps {
            for e in &s.unset {
                m.remove(e);
            }
            m.extend(s.set.iter().copied());
        }
        m
    }

    /// Exact-fallback steps caused by a configuration miss or a failed
    /// extension.
    pub fn diagnostics(&self) -> Vec<&TraceStep> {
        self.steps
            .iter()
            .filter(|s| {
                matches!(
                    s.fallback,
                    Some(FallbackReason::ConfigurationMiss | FallbackReason::ExtensionFailed)
                )
            })
            .collect()
    }

    pub(crate) fn push(
        &mut self,
        kind: StepKind,
        vertices: Vec<usize>,
        before: &BTreeMap<Edge, usize>,
        after: &BTreeMap<Edge, usize>,
    ) -> &mut TraceStep {
        let set: Vec<(Edge, usize)> = after
            .iter()
            .filter(|(e, c)| before.get(e) != Some(c))
            .map(|(e, c)| (*e, *c))
            .collect();
        let unset: Vec<Edge> = before
            .keys()
            .filter(|e| !after.contains_key(e))
            .copied()
            .collect();
        let mut edges: Vec<Edge> = set
            .iter()
            .map(|(e, _)| *e)
            .chain(unset.iter().copied())
            .collect();
        edges.sort_unstable();
        self.steps.push(TraceStep {
            kind,
            vertices,
            edges,
            set,
            unset,
            fallback: None,
            repaired: false,
        });
        self.steps.last_mut().unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_round_trip() {
        for k in [
            StepKind::LowEdgeDegree,
            StepKind::BlockSplit,
            StepKind::Config(ConfigId::G17),
            StepKind::VizingBase,
            StepKind::ExactFallback,
        ] {
            let s = serde_json::to_string(&k).unwrap();
            assert_eq!(serde_json::from_str::<StepKind>(&s).unwrap(), k);
        }
    }

    #[test]
    fn replay_applies_diffs() {
        let mut t = ColorTrace::default();
        let a = BTreeMap::from([(Edge(0, 1), 1), (Edge(1, 2), 2)]);
        let b = BTreeMap::from([(Edge(0, 1), 2), (Edge(2, 3), 1)]);
        t.push(StepKind::VizingBase, vec![], &BTreeMap::new(), &a);
        t.push(StepKind::LowEdgeDegree, vec![], &a, &b);
        assert_eq!(t.replay(), b);
    }
}
