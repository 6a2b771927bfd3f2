//! The JSON graph-spec document: base graph, `r`, and whisker weights.

use std::collections::BTreeMap;

use serde::Deserialize;

use wpath::{suspend, GraphError, SuspendedGraph, WeightedGraph};

use crate::CliError;

fn one() -> u64 {
    1
}

/// One document per invocation:
///
/// ```json
/// {"vertices": ["v1", "v2"],
///  "edges": [{"u": "v1", "v": "v2", "w": 2}],
///  "r": 3,
///  "whiskers": {"v1": [2, 5, 2], "v2": [3, 4, 2]}}
/// ```
///
/// Edge weights default to 1; whisker lists must have length `r` and
/// default to the constant `default_whisker_weight` (itself defaulting
/// to 1) for vertices missing from the map.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSpecDocument {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeSpec>,
    #[serde(default)]
    pub r: Option<usize>,
    #[serde(default)]
    pub whiskers: BTreeMap<String, Vec<u64>>,
    #[serde(default = "one")]
    pub default_whisker_weight: u64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub u: String,
    pub v: String,
    #[serde(default = "one")]
    pub w: u64,
}

/// A parsed and validated instance: the base graph, `r`, and the full
/// suspension.
pub struct Instance {
    pub graph: WeightedGraph,
    pub r: usize,
    pub whiskers: Vec<Vec<u64>>,
    pub suspension: SuspendedGraph,
}

impl GraphSpecDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    /// Validates the document against an optional `--r` override (the flag
    /// wins, with a warning on stderr when both disagree).
    pub fn resolve(&self, flag_r: Option<usize>) -> Result<Instance, CliError> {
        if self.vertices.is_empty() {
            return Err(CliError::Validation(
                "the document must name at least one vertex".into(),
            ));
        }
        let r = match (flag_r, self.r) {
            (Some(f), Some(d)) => {
                if f != d {
                    eprintln!("warning: --r {f} overrides the document's r = {d}");
                }
                f
            }
            (Some(f), None) => f,
            (None, Some(d)) => d,
            (None, None) => {
                return Err(CliError::Validation(
                    "r is missing: set it in the document or pass --r".into(),
                ))
            }
        };
        if r == 0 {
            return Err(CliError::Validation("r must be at least 1".into()));
        }
        if self.default_whisker_weight == 0 {
            return Err(CliError::Validation(
                "default_whisker_weight must be positive".into(),
            ));
        }

        let graph = WeightedGraph::new(self.vertices.clone()).map_err(graph_error)?;
        let mut graph = graph;
        for e in &self.edges {
            let u = lookup(&graph, &e.u)?;
            let v = lookup(&graph, &e.v)?;
            graph.add_edge(u, v, e.w).map_err(graph_error)?;
        }

        for name in self.whiskers.keys() {
            if graph.index_of(name).is_none() {
                return Err(CliError::Validation(format!(
                    "whisker entry for unknown vertex `{name}`"
                )));
            }
        }
        let whiskers: Vec<Vec<u64>> = self
            .vertices
            .iter()
            .map(|name| {
                self.whiskers
                    .get(name)
                    .cloned()
                    .unwrap_or_else(|| vec![self.default_whisker_weight; r])
            })
            .collect();

        let suspension = suspend(&graph, r, &whiskers).map_err(graph_error)?;
        Ok(Instance {
            graph,
            r,
            whiskers,
            suspension,
        })
    }
}

fn lookup(graph: &WeightedGraph, name: &str) -> Result<usize, CliError> {
    graph
        .index_of(name)
        .ok_or_else(|| CliError::Validation(format!("edge endpoint `{name}` is not a vertex")))
}

fn graph_error(e: GraphError) -> CliError {
    CliError::Validation(e.to_string())
}
