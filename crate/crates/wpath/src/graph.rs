//! Edge-weighted simple graphs, `r`-path suspensions, and path enumeration.
//!
//! A suspension attaches a fresh path of `r` new vertices (a whisker) to
//! every vertex of a base graph. Vertices of the suspension are addressed as
//! [`SuspVertex`] pairs `(base, level)`, with level 0 identified with the
//! base vertex itself.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Errors raised while building graphs, suspensions, or paths.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("vertex index {index} out of range for {count} vertices")]
    BadVertex { index: usize, count: usize },
    #[error("self-loop on vertex {0} not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("parallel edge between vertices {0} and {1}")]
    ParallelEdge(usize, usize),
    #[error("edge weights must be positive")]
    ZeroWeight,
    #[error("r must be at least 1")]
    ZeroR,
    #[error("whisker weights for vertex {vertex} have length {got}, expected {expected}")]
    WhiskerLength {
        vertex: usize,
        got: usize,
        expected: usize,
    },
    #[error("whisker weight lists supplied for {got} vertices, expected {expected}")]
    WhiskerCount { got: usize, expected: usize },
    #[error("vertex {0} does not exist in the suspension")]
    MissingVertex(SuspVertex),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(SuspVertex, SuspVertex),
    #[error("a path needs at least two vertices")]
    PathTooShort,
    #[error("path revisits vertex {0}")]
    RepeatedVertex(SuspVertex),
}

/// Finite simple graph with positive integer edge weights.
///
/// Vertices are indexed `0..d` and carry distinct string labels used only
/// for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedGraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), u64>,
}

impl WeightedGraph {
    /// Creates a graph with the given vertex labels and no edges.
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self, GraphError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        Ok(WeightedGraph {
            labels,
            edges: BTreeMap::new(),
        })
    }

    /// Creates a graph from labels and weighted edges `(u, v, w)`.
    pub fn from_edges<S: Into<String>>(
        labels: Vec<S>,
        edges: &[(usize, usize, u64)],
    ) -> Result<Self, GraphError> {
        let mut g = WeightedGraph::new(labels)?;
        for &(u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv` with weight `w`.
    pub fn add_edge(&mut self, u: usize, v: usize, w: u64) -> Result<(), GraphError> {
        let d = self.vertex_count();
        for &x in &[u, v] {
            if x >= d {
                return Err(GraphError::BadVertex { index: x, count: d });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if w == 0 {
            return Err(GraphError::ZeroWeight);
        }
        let key = (u.min(v), u.max(v));
        if self.edges.insert(key, w).is_some() {
            return Err(GraphError::ParallelEdge(key.0, key.1));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the vertex with the given label, if any.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Weight of the edge `uv`, or `None` if absent.
    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    /// Edges as `((u, v), w)` with `u < v`, in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.edges.iter().map(|(&e, &w)| (e, w))
    }

    /// Neighbors of `v` in increasing index order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// A vertex `v_{i,j}` of a suspension: base index `i`, whisker level `j`.
///
/// Level 0 is the base vertex itself (`v_{i,0} = v_i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SuspVertex {
    pub base: usize,
    pub level: usize,
}

impl SuspVertex {
    pub fn new(base: usize, level: usize) -> Self {
        SuspVertex { base, level }
    }

    /// Base-graph vertex `v_i`, i.e. level 0.
    pub fn base_vertex(base: usize) -> Self {
        SuspVertex { base, level: 0 }
    }
}

impl fmt::Display for SuspVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "v{}", self.base + 1)
        } else {
            write!(f, "v{}_{}", self.base + 1, self.level)
        }
    }
}

/// An edge-weighted `r`-path suspension `(Σ_r G)_λ`.
///
/// Vertices are `(i, j)` for `i` a base index and `j = 0..=r`; the whisker
/// of vertex `i` is the path `v_{i,0} — v_{i,1} — … — v_{i,r}`. The weight
/// function restricted to the base edges equals the base weighting.
///
/// `r = 0` is the degenerate suspension `Σ_0 G = G`, which arises from
/// truncating an `r = 1` suspension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuspendedGraph {
    base: WeightedGraph,
    r: usize,
    whisker_weights: Vec<Vec<u64>>,
}

impl SuspendedGraph {
    /// Wraps a bare graph as the degenerate suspension `Σ_0 G = G`.
    pub fn from_base(base: WeightedGraph) -> Self {
        let d = base.vertex_count();
        SuspendedGraph {
            base,
            r: 0,
            whisker_weights: vec![Vec::new(); d],
        }
    }

    pub fn base(&self) -> &WeightedGraph {
        &self.base
    }

    /// Whisker length `r` of this suspension (0 for a bare base graph).
    pub fn r(&self) -> usize {
        self.r
    }

    /// Per base vertex, the whisker edge weights `λ(v_{i,k} v_{i,k+1})`,
    /// `k = 0..r`.
    pub fn whisker_weights(&self) -> &[Vec<u64>] {
        &self.whisker_weights
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count() * (self.r + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count() + self.base.vertex_count() * self.r
    }

    pub fn contains_vertex(&self, v: SuspVertex) -> bool {
        v.base < self.base.vertex_count() && v.level <= self.r
    }

    /// All vertices in `(base, level)` order.
    pub fn vertices(&self) -> impl Iterator<Item = SuspVertex> + '_ {
        let r = self.r;
        (0..self.base.vertex_count()).flat_map(move |i| (0..=r).map(move |j| SuspVertex::new(i, j)))
    }

    /// Weight of the edge `ab`, or `None` if the vertices are not adjacent.
    pub fn edge_weight(&self, a: SuspVertex, b: SuspVertex) -> Option<u64> {
        if !self.contains_vertex(a) || !self.contains_vertex(b) {
            return None;
        }
        if a.level == 0 && b.level == 0 {
            return self.base.weight(a.base, b.base);
        }
        if a.base == b.base {
            let (lo, hi) = (a.level.min(b.level), a.level.max(b.level));
            if hi == lo + 1 {
                return Some(self.whisker_weights[a.base][lo]);
            }
        }
        None
    }

    /// Neighbors of `v` in `(base, level)` order.
    pub fn neighbors(&self, v: SuspVertex) -> Vec<SuspVertex> {
        let mut out = Vec::new();
        if v.level == 0 {
            for u in self.base.neighbors(v.base) {
                out.push(SuspVertex::base_vertex(u));
            }
            if self.r >= 1 {
                out.push(SuspVertex::new(v.base, 1));
            }
        } else {
            out.push(SuspVertex::new(v.base, v.level - 1));
            if v.level < self.r {
                out.push(SuspVertex::new(v.base, v.level + 1));
            }
        }
        out.sort_unstable();
        out
    }

    /// Display name of a suspension vertex: the base label at level 0,
    /// `<label>_<level>` above.
    pub fn vertex_name(&self, v: SuspVertex) -> String {
        if v.level == 0 {
            self.base.label(v.base).to_string()
        } else {
            format!("{}_{}", self.base.label(v.base), v.level)
        }
    }
}

/// Builds the edge-weighted `r`-path suspension of `g`.
///
/// `whisker_weights[i][k]` is the weight of the whisker edge
/// `v_{i,k} v_{i,k+1}`; each list must have length `r`.
pub fn suspend(
    g: &WeightedGraph,
    r: usize,
    whisker_weights: &[Vec<u64>],
) -> Result<SuspendedGraph, GraphError> {
    if r == 0 {
        return Err(GraphError::ZeroR);
    }
    let d = g.vertex_count();
    if whisker_weights.len() != d {
        return Err(GraphError::WhiskerCount {
            got: whisker_weights.len(),
            expected: d,
        });
    }
    for (i, ws) in whisker_weights.iter().enumerate() {
        if ws.len() != r {
            return Err(GraphError::WhiskerLength {
                vertex: i,
                got: ws.len(),
                expected: r,
            });
        }
        if ws.contains(&0) {
            return Err(GraphError::ZeroWeight);
        }
    }
    Ok(SuspendedGraph {
        base: g.clone(),
        r,
        whisker_weights: whisker_weights.to_vec(),
    })
}

/// Drops the outermost whisker level: `(Σ_r G)_λ ↦ (Σ_{r-1} G)_{λ'}` with
/// `λ' = λ` restricted. Truncating an `r = 1` suspension yields the base
/// graph itself (`Σ_0 G = G`).
///
/// Panics if `s` has no whiskers to drop.
pub fn truncate_suspension(s: &SuspendedGraph) -> SuspendedGraph {
    assert!(s.r >= 1, "cannot truncate a suspension with r = 0");
    let whisker_weights = s
        .whisker_weights
        .iter()
        .map(|ws| ws[..s.r - 1].to_vec())
        .collect();
    SuspendedGraph {
        base: s.base.clone(),
        r: s.r - 1,
        whisker_weights,
    }
}

/// Base edges `v_i v_j` whose weight exceeds the first whisker edge weight
/// at either endpoint, i.e. violations of `ω(v_i v_j) ≤ λ(v_i v_{i,1})` and
/// `ω(v_i v_j) ≤ λ(v_j v_{j,1})`. Empty iff the weight condition holds.
pub fn validate_weight_condition(s: &SuspendedGraph) -> Vec<(usize, usize)> {
    s.base
        .edges()
        .filter(|&((u, v), w)| {
            if s.r == 0 {
                // No whisker edge can dominate a base edge.
                true
            } else {
                w > s.whisker_weights[u][0] || w > s.whisker_weights[v][0]
            }
        })
        .map(|(e, _)| e)
        .collect()
}

impl SuspendedGraph {
    /// True iff every base edge weight is dominated by the first whisker
    /// edge weight at both endpoints.
    pub fn satisfies_weight_condition(&self) -> bool {
        validate_weight_condition(self).is_empty()
    }
}

/// A simple path stored in canonical orientation: the vertex sequence is
/// lexicographically smaller than its reverse, so each undirected path has
/// exactly one representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<SuspVertex>);

impl Path {
    /// Validates `vertices` as a path in `s` and stores it canonically.
    pub fn new(vertices: Vec<SuspVertex>, s: &SuspendedGraph) -> Result<Self, GraphError> {
        if vertices.len() < 2 {
            return Err(GraphError::PathTooShort);
        }
        let mut seen = std::collections::BTreeSet::new();
        for &v in &vertices {
            if !s.contains_vertex(v) {
                return Err(GraphError::MissingVertex(v));
            }
            if !seen.insert(v) {
                return Err(GraphError::RepeatedVertex(v));
            }
        }
        for pair in vertices.windows(2) {
            if s.edge_weight(pair[0], pair[1]).is_none() {
                return Err(GraphError::NotAdjacent(pair[0], pair[1]));
            }
        }
        Ok(Path::canonical(vertices))
    }

    fn canonical(mut vertices: Vec<SuspVertex>) -> Self {
        let reversed: Vec<SuspVertex> = vertices.iter().rev().copied().collect();
        if reversed < vertices {
            vertices = reversed;
        }
        Path(vertices)
    }

    pub fn vertices(&self) -> &[SuspVertex] {
        &self.0
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }
}

/// Enumerates every simple path with exactly `r` edges, one representative
/// per undirected path, sorted lexicographically on vertex sequences.
pub fn enumerate_r_paths(s: &SuspendedGraph, r: usize) -> Vec<Path> {
    assert!(r >= 1, "r must be at least 1");
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(r + 1);
    for start in s.vertices() {
        stack_extend(s, r, start, &mut stack, &mut out);
    }
    out.sort_unstable();
    out
}

fn stack_extend(
    s: &SuspendedGraph,
    r: usize,
    v: SuspVertex,
    stack: &mut Vec<SuspVertex>,
    out: &mut Vec<Path>,
) {
    stack.push(v);
    if stack.len() == r + 1 {
        // Emit only the canonical orientation; the reverse run emits nothing.
        let rev_smaller = stack.iter().rev().lt(stack.iter());
        if !rev_smaller {
            out.push(Path(stack.clone()));
        }
    } else {
        for u in s.neighbors(v) {
            if !stack.contains(&u) {
                stack_extend(s, r, u, stack, out);
            }
        }
    }
    stack.pop();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{p1_weighted, p2_weighted, susp2_p1, susp2_p2, susp3_p1, sv};

    fn path_vs(p: &Path) -> Vec<SuspVertex> {
        p.vertices().to_vec()
    }

    #[test]
    fn unique_two_path_of_p2() {
        let s = SuspendedGraph::from_base(p2_weighted());
        let paths = enumerate_r_paths(&s, 2);
        assert_eq!(paths.len(), 1);
        assert_eq!(path_vs(&paths[0]), vec![sv(0, 0), sv(1, 0), sv(2, 0)]);
    }

    #[test]
    fn triangle_edges_as_one_paths() {
        let c3 = WeightedGraph::from_edges(vec!["a", "b", "c"], &[(0, 1, 1), (1, 2, 1), (0, 2, 1)])
            .unwrap();
        let s = SuspendedGraph::from_base(c3);
        assert_eq!(enumerate_r_paths(&s, 1).len(), 3);
    }

    #[test]
    fn three_paths_of_length_three_in_susp2_p1() {
        let paths = enumerate_r_paths(&susp2_p1(), 3);
        let got: Vec<Vec<SuspVertex>> = paths.iter().map(path_vs).collect();
        assert_eq!(
            got,
            vec![
                vec![sv(0, 0), sv(1, 0), sv(1, 1), sv(1, 2)],
                vec![sv(0, 1), sv(0, 0), sv(1, 0), sv(1, 1)],
                vec![sv(0, 2), sv(0, 1), sv(0, 0), sv(1, 0)],
            ]
        );
    }

    #[test]
    fn paths_are_canonical_and_simple() {
        for r in 1..=3 {
            for p in enumerate_r_paths(&susp2_p2(), r) {
                let vs = p.vertices();
                assert_eq!(vs.len(), r + 1);
                let rev: Vec<SuspVertex> = vs.iter().rev().copied().collect();
                assert!(vs.to_vec() <= rev);
                let distinct: std::collections::BTreeSet<_> = vs.iter().collect();
                assert_eq!(distinct.len(), vs.len());
            }
        }
    }

    #[test]
    fn suspension_vertex_and_edge_counts() {
        let s = susp2_p2();
        assert_eq!(s.vertex_count(), 9);
        assert_eq!(s.edge_count(), 8);
        assert_eq!(s.vertices().count(), 9);
    }

    #[test]
    fn classical_suspension_is_r_one() {
        let g = p2_weighted();
        let s = suspend(&g, 1, &[vec![1], vec![1], vec![1]]).unwrap();
        assert_eq!(s.vertex_count(), 6);
        assert_eq!(s.edge_count(), 5);
        assert_eq!(s.edge_weight(sv(0, 0), sv(0, 1)), Some(1));
    }

    #[test]
    fn susp2_p1_matches_sketch() {
        let s = susp2_p1();
        assert_eq!(s.edge_weight(sv(0, 0), sv(1, 0)), Some(2));
        assert_eq!(s.edge_weight(sv(0, 0), sv(0, 1)), Some(2));
        assert_eq!(s.edge_weight(sv(0, 1), sv(0, 2)), Some(5));
        assert_eq!(s.edge_weight(sv(1, 0), sv(1, 1)), Some(3));
        assert_eq!(s.edge_weight(sv(1, 1), sv(1, 2)), Some(4));
        assert_eq!(s.edge_weight(sv(0, 1), sv(1, 1)), None);
    }

    #[test]
    fn wrong_whisker_length_is_rejected() {
        let g = p1_weighted();
        let err = suspend(&g, 2, &[vec![2], vec![3, 4]]).unwrap_err();
        assert_eq!(
            err,
            GraphError::WhiskerLength {
                vertex: 0,
                got: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn truncation_drops_the_outermost_level() {
        assert_eq!(truncate_suspension(&susp3_p1()), susp2_p1());
        let g = p1_weighted();
        let s1 = suspend(&g, 1, &[vec![2], vec![3]]).unwrap();
        let base = truncate_suspension(&s1);
        assert_eq!(base.r(), 0);
        assert_eq!(base.base(), &g);
        assert_eq!(base.vertex_count(), 2);
        // Composition: truncating twice from r = 3 is the r = 1 suspension.
        let twice = truncate_suspension(&truncate_suspension(&susp3_p1()));
        assert_eq!(twice, suspend(&g, 1, &[vec![2], vec![3]]).unwrap());
    }

    #[test]
    fn weight_condition_examples() {
        assert!(susp2_p2().satisfies_weight_condition());
        let g = WeightedGraph::from_edges(vec!["a", "b"], &[(0, 1, 5)]).unwrap();
        let s = suspend(&g, 1, &[vec![2], vec![9]]).unwrap();
        assert_eq!(validate_weight_condition(&s), vec![(0, 1)]);
        let edgeless = WeightedGraph::new(vec!["a", "b"]).unwrap();
        let s = suspend(&edgeless, 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(s.satisfies_weight_condition());
    }

    #[test]
    fn simple_graph_invariants_are_enforced() {
        let mut g = WeightedGraph::new(vec!["a", "b"]).unwrap();
        assert_eq!(g.add_edge(0, 0, 1), Err(GraphError::SelfLoop(0)));
        assert_eq!(g.add_edge(0, 1, 0), Err(GraphError::ZeroWeight));
        g.add_edge(0, 1, 2).unwrap();
        assert_eq!(g.add_edge(1, 0, 3), Err(GraphError::ParallelEdge(0, 1)));
        assert_eq!(
            g.add_edge(0, 5, 1),
            Err(GraphError::BadVertex { index: 5, count: 2 })
        );
        assert_eq!(
            WeightedGraph::new(vec!["a", "a"]).unwrap_err(),
            GraphError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn path_construction_validates() {
        let s = susp2_p1();
        let p = Path::new(vec![sv(1, 0), sv(0, 0), sv(0, 1)], &s).unwrap();
        // Canonical orientation flips to start at the smaller end.
        assert_eq!(path_vs(&p), vec![sv(0, 1), sv(0, 0), sv(1, 0)]);
        assert_eq!(
            Path::new(vec![sv(0, 0)], &s).unwrap_err(),
            GraphError::PathTooShort
        );
        assert_eq!(
            Path::new(vec![sv(0, 0), sv(1, 1)], &s).unwrap_err(),
            GraphError::NotAdjacent(sv(0, 0), sv(1, 1))
        );
        assert_eq!(
            Path::new(vec![sv(0, 0), sv(1, 0), sv(0, 0)], &s).unwrap_err(),
            GraphError::RepeatedVertex(sv(0, 0))
        );
    }

    #[test]
    fn vertex_names_match_sketch_notation() {
        let s = susp2_p1();
        assert_eq!(s.vertex_name(sv(0, 0)), "v1");
        assert_eq!(s.vertex_name(sv(0, 2)), "v1_2");
        assert_eq!(s.vertex_name(sv(1, 1)), "v2_1");
    }
}
